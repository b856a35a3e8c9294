"""Plain-text import and export of marked group tables.

Layout: the order on the first line, then order * order product entries
(row-major, any whitespace), then the marking lines ``A: ids`` and ``B: ids``.
"""

from __future__ import annotations

from .errors import TableFormatError
from .marking import MarkedGamma, mark_gamma
from .tables import FiniteGroup, check_associativity


def dump_marked_gamma(marked: MarkedGamma) -> str:
    group = marked.gamma
    lines = [str(group.order)]
    lines.extend(" ".join(str(v) for v in row) for row in group.table)
    lines.append("A: " + " ".join(str(v) for v in marked.a_elements))
    lines.append("B: " + " ".join(str(v) for v in marked.b_elements))
    return "\n".join(lines) + "\n"


def _parse_ids(line: str, prefix: str, number: int) -> list[int]:
    head, _, tail = line.partition(":")
    if head.strip() != prefix:
        raise TableFormatError(f"expected a '{prefix}:' marking line", line=number)
    try:
        return [int(token) for token in tail.split()]
    except ValueError as exc:
        raise TableFormatError(f"non-integer id in marking {prefix}", line=number) from exc


def load_marked_gamma(text: str) -> MarkedGamma:
    """Parse a table, verify the group axioms and mark it.

    Raises:
        TableFormatError: the text does not follow the layout.
        GroupTableError: the table is not a group.
        MarkingError: the marking does not satisfy the quotient condition.
    """
    lines = [(number, raw.strip()) for number, raw in enumerate(text.splitlines(), start=1)]
    lines = [(number, line) for number, line in lines if line and not line.startswith("#")]
    if len(lines) < 3:
        raise TableFormatError("table needs an order, entries and two marking lines")
    first_number, first = lines[0]
    try:
        order = int(first)
    except ValueError as exc:
        raise TableFormatError("first line must be the group order", line=first_number) from exc
    if order < 1:
        raise TableFormatError("group order must be positive", line=first_number)

    entries: list[int] = []
    for number, line in lines[1:-2]:
        try:
            entries.extend(int(token) for token in line.split())
        except ValueError as exc:
            raise TableFormatError("non-integer product entry", line=number) from exc
    if len(entries) != order * order:
        raise TableFormatError(f"expected {order * order} product entries, found {len(entries)}")
    if any(not 0 <= v < order for v in entries):
        raise TableFormatError("product entry outside 0..order-1")
    table = tuple(tuple(entries[r * order : (r + 1) * order]) for r in range(order))

    identity = next((g for g in range(order) if table[g] == tuple(range(order))), None)
    if identity is None:
        raise TableFormatError("no element acts as a left identity")
    group = FiniteGroup(table, identity)
    check_associativity(group)
    a_ids = _parse_ids(lines[-2][1], "A", lines[-2][0])
    b_ids = _parse_ids(lines[-1][1], "B", lines[-1][0])
    return mark_gamma(group, a_ids, b_ids)


__all__ = ["dump_marked_gamma", "load_marked_gamma"]
