"""
Plain-text table documents.

    # comment lines start with '#'
    3
    0 1 2
    1 2 0
    2 0 1
    J: 0 2 1        (optional)

Several documents in one file are separated by blank lines; inside one
document blank lines are ignored. Errors carry the 1-based line number.
"""

from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from . import _core
from ._errors import BadHeader, BadJLine, BadRow, EntryOutOfRange, OrderMismatch
from ._table import CayleyTable, TotalMap, make_table

_Line = Tuple[int, str]


@dataclass(frozen=True)
class TableDocument:
    table: CayleyTable
    j: Optional[TotalMap] = None
    source_name: str = "<string>"

    def __post_init__(self) -> None:
        if self.j is not None and self.j.order != self.table.order:
            raise OrderMismatch(
                f"J of order {self.j.order} for a table of order {self.table.order}"
            )


def _ints(tokens: Sequence[str], n: int, line: int, error: type) -> List[int]:
    values = []
    for tok in tokens:
        try:
            values.append(int(tok))
        except ValueError:
            raise error(f"{tok!r} is not an integer", line) from None
    for v in values:
        if not 0 <= v < n:
            raise EntryOutOfRange(f"{v} outside 0..{n - 1}", line=line)
    return values


def _parse_lines(lines: Sequence[_Line], source_name: str, last_line: int) -> TableDocument:
    meaningful = [(no, text.strip()) for no, text in lines]
    meaningful = [(no, text) for no, text in meaningful if text and not text.startswith("#")]
    if not meaningful:
        raise BadHeader("missing order line", last_line)

    header_no, header = meaningful[0]
    try:
        n = int(header)
    except ValueError:
        raise BadHeader(f"expected the order, got {header!r}", header_no) from None
    if n < 1:
        raise BadHeader(f"order must be at least 1, got {n}", header_no)
    if n > _core.max_order():
        raise BadHeader(f"order {n} exceeds the cap of {_core.max_order()}", header_no)

    row_lines = meaningful[1:1 + n]
    entries: List[int] = []
    for no, text in row_lines:
        tokens = text.split()
        if tokens and tokens[0].startswith("J:"):
            raise BadRow(f"expected {n} rows before the J line", no)
        if len(tokens) != n:
            raise BadRow(f"expected {n} entries, got {len(tokens)}", no)
        entries.extend(_ints(tokens, n, no, BadRow))
    if len(row_lines) < n:
        raise BadRow(f"expected {n} rows, got {len(row_lines)}", last_line)

    j: Optional[TotalMap] = None
    rest = meaningful[1 + n:]
    if rest:
        no, text = rest[0]
        if not text.startswith("J:"):
            raise BadJLine(f"expected 'J: ...' after the rows, got {text!r}", no)
        tokens = text[2:].split()
        if len(tokens) != n:
            raise BadJLine(f"J needs {n} entries, got {len(tokens)}", no)
        j = TotalMap(tuple(_ints(tokens, n, no, BadJLine)))
        if len(rest) > 1:
            raise BadJLine("unexpected text after the J line", rest[1][0])

    return TableDocument(make_table(n, entries), j, source_name)


def parse_table(text: str, source_name: str = "<string>") -> TableDocument:
    """
    Parse one table document.

    Raises:
        BadHeader, BadRow, BadJLine, EntryOutOfRange: with the line number.

    Example:
        >>> parse_table("2\\n0 1\\n1 0").table.order
        2
    """
    lines = list(enumerate(text.splitlines(), start=1))
    return _parse_lines(lines, source_name, len(lines) + 1)


def parse_documents(text: str, source_name: str = "<string>") -> List[TableDocument]:
    """Parse blank-line separated documents; comment-only blocks are skipped."""
    blocks: List[List[_Line]] = []
    current: List[_Line] = []
    for no, raw in enumerate(text.splitlines(), start=1):
        if raw.strip():
            current.append((no, raw))
        elif current:
            blocks.append(current)
            current = []
    if current:
        blocks.append(current)

    documents = []
    for block in blocks:
        if all(raw.strip().startswith("#") for _, raw in block):
            continue
        documents.append(_parse_lines(block, source_name, block[-1][0] + 1))
    return documents


def render_table(doc: TableDocument) -> str:
    """Inverse of parse_table, ending with a newline."""
    lines = [str(doc.table.order)]
    lines.extend(" ".join(str(v) for v in row) for row in doc.table.rows())
    if doc.j is not None:
        lines.append("J: " + " ".join(str(v) for v in doc.j.image))
    return "\n".join(lines) + "\n"


def render_documents(docs: Sequence[TableDocument]) -> str:
    return "\n".join(render_table(doc) for doc in docs)


def read_table_file(path: str) -> TableDocument:
    return parse_table(Path(path).read_text(encoding="utf-8"), source_name=str(path))


def read_documents_file(path: str) -> List[TableDocument]:
    return parse_documents(Path(path).read_text(encoding="utf-8"), source_name=str(path))


def write_documents(path: str, docs: Sequence[TableDocument]) -> None:
    target = Path(path)
    if target.parent != Path("."):
        target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(render_documents(docs), encoding="utf-8")
