import hashlib
import sys
from fractions import Fraction

# terminal codes
BOLD = "\x1b[1m"
WHITE = "\x1b[97;20m"
GREEN = "\x1b[32;20m"
YELLOW = "\x1b[33;20m"
RED = "\x1b[31;20m"
RED_BOLD = "\x1b[31;1m"
RESET = "\x1b[0m"


def bold(txt):
    return f"{BOLD}{txt}{RESET}"


def rat(value):
    """parse 'a/b', an int or a Fraction into a Fraction"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"not a rational: {value!r}")


def rat_str(value):
    """'a/b' form, with integers written as 'a/1'"""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def digest(data):
    if isinstance(data, str):
        data = data.encode("utf-8")
    return hashlib.sha256(data).hexdigest()


class ProgressBar:
    """Displays or updates a console progress bar in-place (on stderr).

    >>> pbar = ProgressBar(total=500, prefix="sampling")
    >>> for i in range(501):
    >>>     pbar.update(i)
    """

    def __init__(
        self, total=100, prefix="processing", bar_length=33, done_sym="#", left_sym="-",
        stream=None,
    ):
        self.total = total
        self.prefix = prefix
        self.bar_length = bar_length
        self.done_sym = done_sym
        self.left_sym = left_sym
        self.progress = 0.0
        self.stream = stream or sys.stderr

    def update(self, n):
        self.progress = float(n) / float(self.total) if self.total else 1.0
        if self.progress >= 1.0:
            self.progress = 1

        block = int(round(self.bar_length * self.progress))
        text = "\r>> {} [{}] {:.0f}% ".format(
            self.prefix,
            self.done_sym * block + self.left_sym * (self.bar_length - block),
            round(self.progress * 100, 0),
        )
        print(text, end="\r", flush=True, file=self.stream)
        if self.progress == 1:
            print(file=self.stream)
