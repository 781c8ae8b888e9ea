"""Exact sparse Laurent-monomial / polynomial arithmetic over the rationals.

Monomials are exponent tuples (negative exponents allowed, so division is
total); polynomials are sparse maps monomial -> nonzero Fraction.  All
arithmetic is exact; equality is structural on canonical forms.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator


class Monomial(tuple):
    """Exponent vector of a (Laurent) monomial in n variables, 1-indexed as x1..xn."""

    __slots__ = ()

    def __new__(cls, exponents: Iterable[int]) -> "Monomial":
        return super().__new__(cls, tuple(int(e) for e in exponents))

    @classmethod
    def identity(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def variable(cls, i: int, n: int) -> "Monomial":
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
        return cls(tuple(1 if j == i - 1 else 0 for j in range(n)))

    @classmethod
    def from_indices(cls, indices: Iterable[int], n: int) -> "Monomial":
        exps = [0] * n
        for i in indices:
            if not 1 <= i <= n:
                raise ValueError(f"variable index {i} out of range 1..{n}")
            exps[i - 1] += 1
        return cls(exps)

    @property
    def n(self) -> int:
        return len(self)

    def degree(self) -> int:
        return sum(self)

    def is_identity(self) -> bool:
        return not any(self)

    def is_polynomial(self) -> bool:
        return all(e >= 0 for e in self)

    def _check_same_n(self, other: "Monomial") -> None:
        if len(self) != len(other):
            raise ValueError(f"monomials live in different rings: n={len(self)} vs n={len(other)}")

    def mul(self, other: "Monomial") -> "Monomial":
        self._check_same_n(other)
        return Monomial(a + b for a, b in zip(self, other))

    def div(self, other: "Monomial") -> "Monomial":
        self._check_same_n(other)
        return Monomial(a - b for a, b in zip(self, other))

    __mul__ = mul
    __truediv__ = div

    def gcd(self, other: "Monomial") -> "Monomial":
        self._check_same_n(other)
        if not (self.is_polynomial() and other.is_polynomial()):
            raise ValueError("gcd requires nonnegative exponents")
        return Monomial(min(a, b) for a, b in zip(self, other))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check_same_n(other)
        if not (self.is_polynomial() and other.is_polynomial()):
            raise ValueError("lcm requires nonnegative exponents")
        return Monomial(max(a, b) for a, b in zip(self, other))

    def support(self) -> list[int]:
        """1-based indices of variables with positive exponent."""
        return [i + 1 for i, e in enumerate(self) if e > 0]

    def max_index(self) -> int:
        sup = self.support()
        if not sup:
            raise ValueError("identity monomial has empty support")
        return sup[-1]

    def min_index(self) -> int:
        sup = self.support()
        if not sup:
            raise ValueError("identity monomial has empty support")
        return sup[0]

    def letters(self) -> list[int]:
        """Sorted variable indices with multiplicity, e.g. x1^2*x3 -> [1, 1, 3]."""
        if not self.is_polynomial():
            raise ValueError("letters() requires nonnegative exponents")
        out: list[int] = []
        for i, e in enumerate(self):
            out.extend([i + 1] * e)
        return out

    def grlex_key(self) -> tuple:
        return (self.degree(), tuple(-e for e in self))

    def text(self) -> str:
        if self.is_identity():
            return "1"
        parts = []
        for i, e in enumerate(self):
            if e == 0:
                continue
            parts.append(f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}")
        return "*".join(parts)

    def __repr__(self) -> str:  # pragma: no cover
        return f"Monomial({self.text()})"


class Polynomial:
    """Sparse polynomial with Fraction coefficients; no zero terms are stored."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[Monomial, Fraction] | None = None):
        self.n = n
        self.terms: dict[Monomial, Fraction] = {}
        if terms:
            for m, c in terms.items():
                if len(m) != n:
                    raise ValueError("monomial has wrong number of variables")
                c = Fraction(c)
                if c != 0:
                    self.terms[m] = c

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "Polynomial":
        return cls(n, {Monomial.identity(n): Fraction(1)})

    @classmethod
    def from_monomial(cls, m: Monomial, coeff=1) -> "Polynomial":
        return cls(len(m), {m: Fraction(coeff)})

    @classmethod
    def variable(cls, i: int, n: int) -> "Polynomial":
        return cls.from_monomial(Monomial.variable(i, n))

    def is_zero(self) -> bool:
        return not self.terms

    def is_polynomial(self) -> bool:
        """True iff no monomial carries a negative exponent."""
        return all(m.is_polynomial() for m in self.terms)

    def is_constant(self) -> bool:
        return all(m.is_identity() for m in self.terms)

    def constant_value(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("polynomial is not constant")
        return next(iter(self.terms.values()))

    def homogeneous_degree(self) -> int | None:
        """Common total degree of all terms, or None for 0 / inhomogeneous input."""
        degs = {m.degree() for m in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def items(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self.terms.items())

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if self.n != other.n:
            raise ValueError("polynomials live in different rings")
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, Fraction(0)) + c
            if s == 0:
                out.pop(m, None)
            else:
                out[m] = s
        return Polynomial(self.n, out)

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.n != other.n:
            raise ValueError("polynomials live in different rings")
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1.mul(m2)
                s = out.get(m, Fraction(0)) + c1 * c2
                if s == 0:
                    out.pop(m, None)
                else:
                    out[m] = s
        return Polynomial(self.n, out)

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        return Polynomial(self.n, {m: c * v for m, v in self.terms.items()})

    def mul_monomial(self, m: Monomial, coeff=1) -> "Polynomial":
        coeff = Fraction(coeff)
        return Polynomial(self.n, {t.mul(m): c * coeff for t, c in self.terms.items()})

    def div_monomial(self, m: Monomial) -> "Polynomial":
        return Polynomial(self.n, {t.div(m): c for t, c in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self.terms.items(), key=lambda mc: mc[0].grlex_key())

    def text(self) -> str:
        if self.is_zero():
            return "0"
        chunks = []
        for m, c in self.sorted_terms():
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if m.is_identity():
                body = str(a)
            elif a == 1:
                body = m.text()
            else:
                body = f"{a}*{m.text()}"
            chunks.append((sign, body))
        first_sign, first_body = chunks[0]
        s = ("-" if first_sign == "-" else "") + first_body
        for sign, body in chunks[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self) -> str:  # pragma: no cover
        return f"Polynomial({self.text()})"


_MONO_FACTOR = re.compile(r"^x(\d+)(?:\^(-?\d+))?$")


def parse_monomial(text: str, n: int) -> Monomial:
    """Parse 'x1^2*x2' or 'x2^-1' or '1' into a Monomial."""
    text = text.strip()
    if text in ("1", ""):
        return Monomial.identity(n)
    exps = [0] * n
    for factor in text.split("*"):
        m = _MONO_FACTOR.match(factor.strip())
        if not m:
            raise ValueError(f"cannot parse monomial factor {factor!r}")
        idx = int(m.group(1))
        if not 1 <= idx <= n:
            raise ValueError(f"variable x{idx} out of range for n={n}")
        exps[idx - 1] += int(m.group(2) or 1)
    return Monomial(exps)


def parse_polynomial(text: str, n: int) -> Polynomial:
    """Parse rational-coefficient sums like '3/2*x1*x2 - x3^2 + 1'."""
    text = text.strip()
    if text == "0":
        return Polynomial.zero(n)
    # split into signed chunks
    norm = text.replace("-", "+-")
    out = Polynomial.zero(n)
    for chunk in norm.split("+"):
        chunk = chunk.strip()
        if not chunk:
            continue
        sign = 1
        if chunk.startswith("-"):
            sign = -1
            chunk = chunk[1:].strip()
        coeff = Fraction(sign)
        factors = []
        for factor in chunk.split("*"):
            factor = factor.strip()
            if re.fullmatch(r"\d+(/\d+)?", factor):
                coeff *= Fraction(factor)
            else:
                factors.append(factor)
        mono = parse_monomial("*".join(factors), n) if factors else Monomial.identity(n)
        out = out + Polynomial.from_monomial(mono, coeff)
    return out
