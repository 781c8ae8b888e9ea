"""Hook tableaux: corner box, column tail, row tail, and the notation operations.

A hook tableau stores variable indices: the corner, the boxes below it
(column) and the boxes to its right (row).  Normalization sorts the column
block (corner, *column) with an alternating sign and the row without one;
a repeat in the column block kills the tableau.

Positions in the column block are numbered 1..len(column)+1, position 1
being the corner.  Row positions are 1..len(row) and index the row tail.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple


@dataclass(frozen=True, order=True)
class HookTableau:
    corner: int
    col: tuple[int, ...] = ()
    row: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "col", tuple(self.col))
        object.__setattr__(self, "row", tuple(self.row))

    @property
    def col_block(self) -> tuple[int, ...]:
        """Corner plus column tail (the alternating block)."""
        return (self.corner,) + self.col

    def boxes(self) -> int:
        return 1 + len(self.col) + len(self.row)

    def entries(self) -> tuple[int, ...]:
        return self.col_block + self.row

    def check_range(self, n: int) -> None:
        if any(not 1 <= e <= n for e in self.entries()):
            raise ValueError(f"tableau entries out of range 1..{n}: {self}")

    def text(self) -> str:
        row = " ".join(str(j) for j in self.row)
        col = " ".join(str(i) for i in self.col)
        return f"[{self.corner}|{row}|{col}]"

    def to_json(self) -> dict:
        return {"corner": self.corner, "col": list(self.col), "row": list(self.row)}

    def __str__(self) -> str:  # pragma: no cover
        return self.text()


class SignedTableau(NamedTuple):
    sign: int  # +1, -1 or 0
    tableau: HookTableau | None  # None iff sign == 0


def _sort_sign(values: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Sort with the parity of the permutation; sign 0 on a repeated entry."""
    vals = list(values)
    sign = 1
    # insertion sort, counting inversions exactly
    for i in range(1, len(vals)):
        j = i
        while j > 0 and vals[j - 1] > vals[j]:
            vals[j - 1], vals[j] = vals[j], vals[j - 1]
            sign = -sign
            j -= 1
    for a, b in zip(vals, vals[1:]):
        if a == b:
            return 0, tuple(vals)
    return sign, tuple(vals)


def normalize_tableau(t: HookTableau) -> SignedTableau:
    """Canonical form: column block strictly increasing (sign-tracked), row sorted."""
    sign, block = _sort_sign(t.col_block)
    if sign == 0:
        return SignedTableau(0, None)
    row = tuple(sorted(t.row))
    return SignedTableau(sign, HookTableau(block[0], block[1:], row))


def remove_entry(t: HookTableau, which: str, k: int) -> HookTableau:
    """Remove box at column-position or row-position k (1-based).

    Column position 1 is the corner; removing it promotes the least column
    entry, or the first row entry when the column is empty.  No sign is
    applied; callers track signs through the published identities.
    """
    if which == "col":
        block = t.col_block
        if not 1 <= k <= len(block):
            raise ValueError(f"column position {k} out of range")
        rest = block[:k - 1] + block[k:]
        if rest:
            return HookTableau(rest[0], rest[1:], t.row)
        if t.row:
            return HookTableau(t.row[0], (), t.row[1:])
        raise ValueError("cannot delete the corner of a single-box tableau")
    if which == "row":
        if not 1 <= k <= len(t.row):
            raise ValueError(f"row position {k} out of range")
        return HookTableau(t.corner, t.col, t.row[:k - 1] + t.row[k:])
    raise ValueError(f"unknown removal site {which!r}")


def attach_entry(t: HookTableau, s: int, where: str) -> HookTableau:
    """T^s (insert s into the row, stable) or T_s (new corner, old corner pushed down)."""
    if s < 1:
        raise ValueError(f"index {s} out of range")
    if where == "row":
        row = list(t.row)
        pos = 0
        while pos < len(row) and row[pos] <= s:
            pos += 1
        row.insert(pos, s)
        return HookTableau(t.corner, t.col, tuple(row))
    if where == "corner":
        return HookTableau(s, (t.corner,) + t.col, t.row)
    raise ValueError(f"unknown attachment site {where!r}")


def is_semistandard(t: HookTableau) -> bool:
    """Strict down the column block, nondecreasing along (corner, row)."""
    block = t.col_block
    if any(a >= b for a, b in zip(block, block[1:])):
        return False
    if any(a > b for a, b in zip(t.row, t.row[1:])):
        return False
    return not t.row or t.corner <= t.row[0]


def is_ek_admissible(t: HookTableau) -> bool:
    """Degree-free admissibility test for the tableau resolution basis.

    With a nonempty column the block (corner, column) is the alternating
    part and must stay strictly below the last row entry; a pure-row
    tableau only needs its row sorted.
    """
    block = t.col_block
    if any(a >= b for a, b in zip(block, block[1:])):
        return False
    if any(a > b for a, b in zip(t.row, t.row[1:])):
        return False
    if t.col:
        return bool(t.row) and block[-1] < t.row[-1]
    return True


def classify(t: HookTableau, mode: str) -> bool:
    if mode == "semistandard":
        return is_semistandard(t)
    if mode == "ek-admissible":
        return is_ek_admissible(t)
    raise ValueError(f"unknown classification mode {mode!r}")


def parse_tableau(text: str) -> HookTableau:
    """Parse '[corner | row entries | column entries]', whitespace optional."""
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"tableau text must be bracketed: {text!r}")
    parts = text[1:-1].split("|")
    if len(parts) != 3:
        raise ValueError(f"tableau text needs corner|row|column: {text!r}")
    corner_s, row_s, col_s = (p.strip() for p in parts)
    try:
        corner = int(corner_s)
        row = tuple(int(x) for x in row_s.split()) if row_s else ()
        col = tuple(int(x) for x in col_s.split()) if col_s else ()
    except ValueError as exc:
        raise ValueError(f"bad tableau text {text!r}") from exc
    return HookTableau(corner, col, row)


def tableau_from_json(obj) -> HookTableau:
    if isinstance(obj, str):
        obj = json.loads(obj)
    return HookTableau(int(obj["corner"]), tuple(obj.get("col", ())), tuple(obj.get("row", ())))
