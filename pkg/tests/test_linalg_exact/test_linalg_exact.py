from fractions import Fraction

from sctx import linalg


def test_rank():
    assert linalg.rank([[1, 2], [2, 4]]) == 1
    assert linalg.rank([[1, 0, 0], [0, 1, 0], [1, 1, 0]]) == 2
    assert linalg.rank([]) == 0
    assert linalg.rank([[Fraction(1, 3), Fraction(2, 3)], [1, 1]]) == 2


def test_solve():
    x = linalg.solve([[2, 1], [1, 3]], [3, 5])
    assert x == [Fraction(4, 5), Fraction(7, 5)]
    assert linalg.solve([[1, 1], [2, 2]], [1, 3]) is None
    # free variables are set to zero
    assert linalg.solve([[1, 1]], [2]) == [2, 0]


def test_nullspace():
    basis = linalg.nullspace([[1, 1]], 2)
    assert basis == [[-1, 1]]
    assert linalg.nullspace([[1, 0], [0, 1]], 2) == []
    assert len(linalg.nullspace([], 3)) == 3
    rows = [[1, 2, 3], [2, 4, 6]]
    for vec in linalg.nullspace(rows, 3):
        assert linalg.mat_vec(rows, vec) == [0, 0]


def test_inverse():
    inv = linalg.inverse([[2, 1], [1, 1]])
    assert inv == [[1, -1], [-1, 2]]
    raised = False
    try:
        linalg.inverse([[1, 2], [2, 4]])
    except ZeroDivisionError:
        raised = True
    assert raised


def test_incremental_basis():
    basis = linalg.IncrementalBasis(3)
    assert basis.add([1, 1, 0])
    assert basis.add([0, 1, 1])
    assert not basis.add([1, 2, 1])
    assert basis.rank() == 2
    assert linalg.independent_rows([[1, 0], [2, 0], [0, 1]], 2) == [0, 2]


def test_primitive():
    assert linalg.primitive([Fraction(1, 2), Fraction(1, 3)]) == [3, 2]
    assert linalg.primitive([-2, 4]) == [-1, 2]
    assert linalg.primitive([0, 0]) == [0, 0]
    assert linalg.dot([1, 2], [3, 4]) == 11


def test_all():
    test_rank()
    test_solve()
    test_nullspace()
    test_inverse()
    test_incremental_basis()
    test_primitive()


if __name__ == '__main__':
    test_all()
