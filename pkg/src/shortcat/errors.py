"""Exception types shared across the workbench.

Structural problems (dangling identifiers, missing table entries, wrong
tight/loose placement) raise; law violations never raise, they are reported
as failed instances in a ValidationReport.
"""


class ShortcatError(Exception):
    pass


class MalformedTable(ShortcatError):
    """A table references unknown identifiers or is not total on its domain."""


class DanglingId(MalformedTable):
    """An identifier does not belong to any table of the structure."""


class TypingViolation(MalformedTable):
    """A substitution output sits in the wrong tight/loose table."""


class UnsupportedSubstitution(ShortcatError):
    """The requested (outer arity, inner arity, position) case is not part
    of the structure."""


class SearchBoundExceeded(ShortcatError):
    """An exhaustive search was refused because the input exceeds the
    configured size bound."""


class NoSolution(ShortcatError):
    """A unique-solve found no morphism satisfying its equations; a
    universal property was violated upstream."""


class MultipleSolutions(ShortcatError):
    """A unique-solve found several solutions; a classifier witness is
    broken."""


class UniversalityBroken(ShortcatError):
    """A derived composite bijection failed; signals a validator bug, not a
    structure failure."""


class InconsistentVerdicts(ShortcatError):
    """Two independent routes to the same verdict disagree; signals an
    implementation bug."""


class AxiomTransferFailure(ShortcatError):
    """Morphism reconstruction failed one of the correspondence-table rows."""

    def __init__(self, row: str, detail: str = ""):
        self.row = row
        super().__init__(f"axiom transfer failed at row: {row}" + (f" ({detail})" if detail else ""))


class NoIsomorphismFound(ShortcatError):
    """A roundtrip comparison could not match the reconstructed structure."""


class ParseError(ShortcatError):
    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class UnknownKind(ParseError):
    pass


class VersionMismatch(ParseError):
    pass


class UnknownGenerator(ShortcatError):
    pass
