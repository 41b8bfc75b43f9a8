"""
*** SCTX: simplicial distributions and contextuality ***
License GNU GPL version 3 (See LICENSE)

error.py: exceptions and collected diagnostics

"""
import logging

logger = logging.getLogger("sctx")

ERRORS = set()


class SctxError(Exception):
    pass


class Violation:
    """one failed invariant

    subject: str    simplex, generator, face or hypothesis the rule is about
    rule: str       short name of the failed rule
    detail: str     human readable explanation
    """

    def __init__(self, subject, rule, detail=""):
        self.subject = subject
        self.rule = rule
        self.detail = detail

    def key(self):
        return (self.subject, self.rule, self.detail)

    def __eq__(self, other):
        return isinstance(other, Violation) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return f"Violation({self.subject!r}, {self.rule!r}, {self.detail!r})"

    def __str__(self):
        if self.detail:
            return f"{self.subject}: {self.rule} ({self.detail})"
        return f"{self.subject}: {self.rule}"


class ValidationError(SctxError):
    def __init__(self, violations, what="validation"):
        self.violations = list(violations)
        self.what = what
        lines = "; ".join(str(v) for v in self.violations)
        super().__init__(f"{what} failed: {lines}")


class DanglingFaceError(ValidationError):
    def __init__(self, simplex, face):
        self.simplex = simplex
        self.face = face
        super().__init__(
            [Violation(simplex, "dangling face", f"face {face!r} does not exist")],
            what="scenario",
        )


class ParseError(SctxError):
    """malformed input file; lineno/colno point into the JSON text"""

    def __init__(self, path, msg, lineno=None, colno=None):
        self.path = path
        self.lineno = lineno
        self.colno = colno
        where = f"{path}:{lineno}:{colno}" if lineno is not None else f"{path}"
        super().__init__(f"{where}: {msg}")


class MismatchError(SctxError):
    pass


class CapExceededError(SctxError):
    def __init__(self, what, size, cap):
        self.size = size
        self.cap = cap
        super().__init__(f"{what}: size {size} exceeds cap {cap} (see SCTX_CAP)")


class ConnectivityError(SctxError):
    pass


class GluingError(SctxError):
    pass


class HypothesisError(SctxError):
    def __init__(self, construction, failures):
        self.construction = construction
        self.failures = list(failures)
        names = ", ".join(f.rule for f in self.failures)
        super().__init__(f"{construction} refused: {names}")


class CertificateError(SctxError):
    pass


def error(violation, warning=False):
    """record a diagnostic; logged immediately unless it is a warning"""
    kind = logging.WARNING if warning else logging.ERROR
    result = (kind, violation.subject, violation.rule, violation.detail)
    if result not in ERRORS:
        ERRORS.add(result)
        if not warning:
            print_error(result)


def raise_if(violations, what):
    if violations:
        for violation in violations:
            error(violation, warning=True)
        raise ValidationError(violations, what=what)


def print_error(result):
    (kind, subject, rule, detail) = result
    msg = f"{subject}: {rule}"
    if detail:
        msg += f" ({detail})"
    logger.log(kind, msg)


def print_errors():
    for result in sorted(ERRORS, key=lambda x: (x[1], x[2], x[3])):
        print_error(result)


def clear():
    ERRORS.clear()

