"""Exception types shared across the package."""

from __future__ import annotations


class ParseError(ValueError):
    """Malformed input text. Carries the 1-based line number of the offence."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class AmbiguousFuzzinessError(ValueError):
    """Annotation marks more than one fuzzy aspect, so the five-type
    taxonomy cannot place the graph. Carries the offending aspect set."""

    def __init__(self, aspects: tuple[str, ...]):
        super().__init__(
            "unclassifiable: more than one aspect is fuzzy: " + ", ".join(aspects)
        )
        self.aspects = aspects
