"""Source positions shared by both front ends."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class SourceSpan:
    """A half-open region of a source file, 1-based lines and columns."""

    file: str
    start_line: int
    start_col: int
    end_line: int
    end_col: int

    def __post_init__(self) -> None:
        if (self.start_line, self.start_col) > (self.end_line, self.end_col):
            raise ValueError("span start must not follow span end")

    @staticmethod
    def point(file: str, line: int, col: int) -> "SourceSpan":
        return SourceSpan(file, line, col, line, col)

    def to(self, other: "SourceSpan") -> "SourceSpan":
        """Smallest span covering both self and other (same file)."""
        return SourceSpan(
            self.file,
            self.start_line,
            self.start_col,
            other.end_line,
            other.end_col,
        )

    def __str__(self) -> str:
        return f"{self.file}:{self.start_line}:{self.start_col}"
