"""Hook Schur modules: semistandard bases, straightening, and the embedding oracle.

The module with column block of size a+1 and row of size b-1 has the
semistandard hook tableaux as a basis.  A tableau also has a meaning inside
(exterior power) x (symmetric power): the alternating comultiplication sum.
That embedding is kept as an independent oracle for equality tests.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from math import comb

from .polynomial import Monomial, Polynomial
from .tableau import HookTableau, is_semistandard, normalize_tableau


def schur_rank(n: int, a: int, b: int) -> int:
    """Rank of the hook module: C(n+b-1, a+b) * C(a+b-1, a)."""
    if n < 1 or a < 0 or b < 1:
        raise ValueError("need n >= 1, a >= 0, b >= 1")
    return comb(n + b - 1, a + b) * comb(a + b - 1, a)


@lru_cache(maxsize=None)
def enumerate_l_basis(n: int, a: int, b: int) -> tuple[HookTableau, ...]:
    """All semistandard hook tableaux, |column|=a, |row|=b-1, entries in 1..n."""
    if n < 1 or a < 0 or b < 1:
        raise ValueError("need n >= 1, a >= 0, b >= 1")
    out = []
    for block in combinations(range(1, n + 1), a + 1):
        corner = block[0]
        for row in combinations_with_replacement(range(corner, n + 1), b - 1):
            out.append(HookTableau(corner, block[1:], row))
    out.sort(key=lambda t: (t.corner, t.col, t.row))
    return tuple(out)


@lru_cache(maxsize=None)
def straighten_tableau(t: HookTableau) -> tuple[tuple[HookTableau, int], ...]:
    """Express a hook filling over semistandard tableaux with integer signs.

    Normalize first; if the corner still exceeds the least row entry, apply
    the shuffling relation (corner and first row entry trade places, each
    column-block entry takes a turn in the row) and recurse.  Each
    application strictly lowers the corner, and for canonical input a single
    pass lands on semistandard terms.
    """
    sign, canon = normalize_tableau(t)
    if sign == 0:
        return ()
    assert canon is not None
    if is_semistandard(canon):
        return ((canon, sign),)
    acc: dict[HookTableau, int] = {}
    j1 = canon.row[0]
    rest = canon.row[1:]
    block = canon.col_block
    for k, ik in enumerate(block):
        new_col = block[:k] + block[k + 1:]
        new_row = tuple(sorted(rest + (ik,)))
        child = HookTableau(j1, new_col, new_row)
        for tab, s in straighten_tableau(child):
            c = acc.get(tab, 0) + sign * (-1) ** k * s
            if c == 0:
                acc.pop(tab, None)
            else:
                acc[tab] = c
    return tuple(sorted(acc.items()))


def kappa_embed(t: HookTableau, n: int) -> dict[tuple[tuple[int, ...], tuple[int, ...]], Fraction]:
    """Alternating comultiplication image of a tableau in wedge (x) sym.

    Column block {c_0 < ... < c_a} and row multiset J map to
    sum_k (-1)^k  e_{block minus c_k} (x) x_{c_k} * x_J.
    """
    sign, canon = normalize_tableau(t)
    if sign == 0:
        raise ValueError("sign-zero tableau has no embedding")
    assert canon is not None
    block = canon.col_block
    out: dict[tuple[tuple[int, ...], tuple[int, ...]], Fraction] = {}
    for k, ck in enumerate(block):
        wedge = block[:k] + block[k + 1:]
        row = tuple(sorted(canon.row + (ck,)))
        key = (wedge, row)
        c = out.get(key, Fraction(0)) + sign * (-1) ** k
        if c == 0:
            out.pop(key, None)
        else:
            out[key] = c
    return out


@dataclass
class ModuleElement:
    """Formal sum of canonical tableaux with polynomial coefficients.

    kind 'L' keeps terms semistandard via straightening; kind 'EK' keeps
    terms admissible for the tableau resolution (normalization done by the
    ek_complex module, which owns the degree bookkeeping).
    """

    kind: str
    n: int
    d: int
    degree: int
    terms: dict[HookTableau, Polynomial] = field(default_factory=dict)

    @classmethod
    def zero(cls, kind: str, n: int, d: int, degree: int) -> "ModuleElement":
        return cls(kind, n, d, degree, {})

    def copy(self) -> "ModuleElement":
        return ModuleElement(self.kind, self.n, self.d, self.degree, dict(self.terms))

    def is_zero(self) -> bool:
        return not self.terms

    def _check_compatible(self, other: "ModuleElement") -> None:
        if (self.kind, self.n, self.d, self.degree) != (other.kind, other.n, other.d, other.degree):
            raise ValueError("homological tags do not match")

    def add_term(self, tab: HookTableau, coeff: Polynomial) -> None:
        if coeff.is_zero():
            return
        cur = self.terms.get(tab)
        s = coeff if cur is None else cur + coeff
        if s.is_zero():
            self.terms.pop(tab, None)
        else:
            self.terms[tab] = s

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        self._check_compatible(other)
        out = self.copy()
        for tab, c in other.terms.items():
            out.add_term(tab, c)
        return out

    def __neg__(self) -> "ModuleElement":
        return ModuleElement(self.kind, self.n, self.d, self.degree,
                             {t: -c for t, c in self.terms.items()})

    def __sub__(self, other: "ModuleElement") -> "ModuleElement":
        return self + (-other)

    def scale(self, p) -> "ModuleElement":
        if not isinstance(p, Polynomial):
            p = Polynomial.from_monomial(Monomial.identity(self.n), Fraction(p))
        out = ModuleElement.zero(self.kind, self.n, self.d, self.degree)
        for tab, c in self.terms.items():
            out.add_term(tab, c * p)
        return out

    def scale_monomial(self, m: Monomial, coeff=1) -> "ModuleElement":
        out = ModuleElement.zero(self.kind, self.n, self.d, self.degree)
        for tab, c in self.terms.items():
            out.add_term(tab, c.mul_monomial(m, coeff))
        return out

    def __eq__(self, other) -> bool:
        return (isinstance(other, ModuleElement)
                and (self.kind, self.n, self.d, self.degree) == (other.kind, other.n, other.d, other.degree)
                and self.terms == other.terms)

    def is_polynomial(self) -> bool:
        return all(c.is_polynomial() for c in self.terms.values())

    def internal_degree(self) -> int:
        """Box count plus coefficient degree; raises unless uniform."""
        if not self.terms:
            raise ValueError("zero element has no internal degree")
        degs = set()
        for tab, c in self.terms.items():
            h = c.homogeneous_degree()
            if h is None:
                raise ValueError("inhomogeneous coefficient")
            degs.add(tab.boxes() + h)
        if len(degs) != 1:
            raise ValueError("element is not internally homogeneous")
        return degs.pop()

    def map_terms(self, fn) -> "ModuleElement":
        """Apply tab -> list[(tableau, int sign)] linearly, keeping coefficients."""
        out = ModuleElement.zero(self.kind, self.n, self.d, self.degree)
        for tab, c in self.terms.items():
            for new_tab, s in fn(tab):
                out.add_term(new_tab, c.scale(s))
        return out

    def text(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for tab in sorted(self.terms, key=lambda t: (t.corner, t.col, t.row)):
            c = self.terms[tab]
            if c.is_constant():
                v = c.constant_value()
                if v == 1:
                    bits.append(tab.text())
                elif v == -1:
                    bits.append(f"-{tab.text()}")
                else:
                    bits.append(f"{v}*{tab.text()}")
            else:
                body = c.text()
                if len(c.terms) > 1:
                    body = f"({body})"
                bits.append(f"{body}*{tab.text()}")
        s = bits[0]
        for b in bits[1:]:
            s += f" - {b[1:]}" if b.startswith("-") else f" + {b}"
        return s

    def to_json(self) -> list[dict]:
        return [{"tableau": tab.to_json(), "coeff": self.terms[tab].text()}
                for tab in sorted(self.terms, key=lambda t: (t.corner, t.col, t.row))]


def l_element(n: int, d: int, degree: int,
              terms: list[tuple[HookTableau, Polynomial]]) -> ModuleElement:
    """Build an L-kind element, straightening every term."""
    out = ModuleElement.zero("L", n, d, degree)
    for tab, coeff in terms:
        for ss, sign in straighten_tableau(tab):
            out.add_term(ss, coeff.scale(sign))
    return out


def l_basis_element(n: int, d: int, degree: int, tab: HookTableau) -> ModuleElement:
    coeff = Polynomial.one(n)
    return l_element(n, d, degree, [(tab, coeff)])


def embed_element(e: ModuleElement) -> dict[tuple[tuple[int, ...], tuple[int, ...]], Polynomial]:
    """Embedding oracle extended linearly with polynomial coefficients."""
    out: dict[tuple[tuple[int, ...], tuple[int, ...]], Polynomial] = {}
    for tab, c in e.terms.items():
        for key, s in kappa_embed(tab, e.n).items():
            cur = out.get(key, Polynomial.zero(e.n)) + c.scale(s)
            if cur.is_zero():
                out.pop(key, None)
            else:
                out[key] = cur
    return out
