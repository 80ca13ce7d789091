"""OEIS b-file interchange: one "index value" pair per line.

Parsing accepts the conventions found in real downloaded files, leading
'#' comment lines and blank lines, but emission produces bare data lines
only.  Indices must be positive and strictly increasing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

__all__ = ["BFile", "BFileParseError", "parse_bfile", "parse_bfile_text", "format_bfile"]


class BFileParseError(ValueError):
    """Malformed b-file content; carries the offending 1-based line number."""

    def __init__(self, message: str, line_number: int):
        self.line_number = line_number
        super().__init__(f"line {line_number}: {message}")


@dataclass(frozen=True)
class BFile:
    """Parsed b-file: (index, value) entries plus where they came from."""

    entries: tuple[tuple[int, int], ...]
    source_name: str = ""

    def __post_init__(self):
        prev = 0
        for i, (idx, _) in enumerate(self.entries):
            if idx <= prev:
                raise ValueError(
                    f"entry {i}: index {idx} not strictly increasing (after {prev})"
                )
            prev = idx

    def __len__(self) -> int:
        return len(self.entries)

    def index_range(self) -> tuple[int, int]:
        if not self.entries:
            raise ValueError("empty b-file has no index range")
        return self.entries[0][0], self.entries[-1][0]


def parse_bfile_text(text: str, source_name: str = "") -> BFile:
    """Parse b-file content from a string.

    Blank lines and lines starting with '#' are skipped.  Every other
    line must be exactly two integer tokens; the first token (the index)
    must be positive and strictly greater than the previous index.
    """
    entries = []
    prev_index = 0
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise BFileParseError(
                f"expected 'index value', got {len(tokens)} tokens", line_number
            )
        try:
            index, value = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise BFileParseError(
                f"non-integer token in {line!r}", line_number
            ) from None
        if index < 1:
            raise BFileParseError(f"index {index} is not positive", line_number)
        if index <= prev_index:
            raise BFileParseError(
                f"index {index} does not increase past {prev_index}", line_number
            )
        entries.append((index, value))
        prev_index = index
    return BFile(tuple(entries), source_name)


def parse_bfile(path: str | Path) -> BFile:
    path = Path(path)
    return parse_bfile_text(path.read_text(encoding="ascii"), source_name=path.name)


def format_bfile(values: Iterable[int], start_index: int = 1) -> str:
    """Render consecutive values as b-file lines "i value", newline-terminated."""
    lines = [f"{i} {v}" for i, v in enumerate(values, start=start_index)]
    return "\n".join(lines) + "\n" if lines else ""
