"""Exception types shared across the package."""


class LexsenseError(Exception):
    """Base class for all lexsense-specific failures."""


class ParseError(LexsenseError):
    """A line-oriented input file could not be parsed."""

    def __init__(self, path, line_no: int, message: str):
        super().__init__(f"{path}:{line_no}: {message}")
        self.path = str(path)
        self.line_no = line_no

    @property
    def message(self) -> str:
        return self.args[0]


class NetworkLoadError(LexsenseError):
    """A semantic-network snapshot record is malformed or inconsistent."""

    def __init__(self, path, record: int, message: str):
        super().__init__(f"{path}: record {record}: {message}")
        self.path = str(path)
        self.record = record


class UnknownWordError(LexsenseError):
    """A lemma/POS pair is absent from the triple index."""


class GoldConsistencyError(LexsenseError):
    """A gold annotation contradicts the corpus or repeats a position."""


class BudgetExceededError(LexsenseError):
    """An exhaustive search would enumerate too many sense combinations."""
