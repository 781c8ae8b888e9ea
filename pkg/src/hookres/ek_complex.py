"""The stable-monomial-ideal resolution of R/m^d in two presentations.

Tableau form: homological degree k carries hooks with k-1 alternating
entries below j_d in the sorted length-d row block (degree 1 is the pure
monomial rows).  Classical form: symbols (m; j_1 < ... < j_i) over a Borel
generator list, with the beginning decomposition b(g).  eta relabels one
into the other.

Products are implemented for the m^d ideal only: the chain-expansion
product on classical symbols and the row recursion on tableaux.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement

from .polynomial import Monomial, Polynomial
from .schur import ModuleElement, schur_rank
from .tableau import HookTableau

# ---------------------------------------------------------------------------
# tableau presentation
# ---------------------------------------------------------------------------


def ek_row(indices, n: int) -> HookTableau:
    js = tuple(sorted(indices))
    return HookTableau(js[0], (), js[1:])


def i_block(t: HookTableau, degree: int) -> tuple[int, ...]:
    """Alternating block: empty in degree 1, corner plus column above that."""
    return () if degree == 1 else t.col_block


def j_block(t: HookTableau, degree: int) -> tuple[int, ...]:
    """Symmetric length-d block."""
    return ((t.corner,) + t.row) if degree == 1 else t.row


def normalize_ek(i_part, j_part, degree: int, n: int) -> tuple[int, HookTableau | None]:
    """Sort the alternating and symmetric blocks; zero on repeats or when the
    alternating block reaches the last row entry (such symbols vanish)."""
    sign = 1
    ii = list(i_part)
    for a in range(1, len(ii)):
        b = a
        while b > 0 and ii[b - 1] > ii[b]:
            ii[b - 1], ii[b] = ii[b], ii[b - 1]
            sign = -sign
            b -= 1
    for a, b in zip(ii, ii[1:]):
        if a == b:
            return 0, None
    jj = sorted(j_part)
    if degree == 1:
        if ii:
            raise ValueError("degree-1 symbols carry no alternating entries")
        return 1, HookTableau(jj[0], (), tuple(jj[1:]))
    if not jj:
        raise ValueError("empty row block")
    if ii and ii[-1] >= jj[-1]:
        return 0, None
    return sign, HookTableau(ii[0], tuple(ii[1:]), tuple(jj))


def ek_element(n: int, d: int, degree: int, raw_terms) -> ModuleElement:
    """Build an EK-kind element from (i_part, j_part, coeff) contributions."""
    out = ModuleElement.zero("EK", n, d, degree)
    for i_part, j_part, coeff in raw_terms:
        sign, tab = normalize_ek(i_part, j_part, degree, n)
        if sign == 0:
            continue
        out.add_term(tab, coeff.scale(sign))
    return out


@lru_cache(maxsize=None)
def ek_basis(n: int, d: int, k: int) -> tuple[HookTableau, ...]:
    """Admissible tableaux of homological degree k: k-1 alternating entries
    strictly below the last entry of the sorted length-d row block."""
    if not 1 <= k <= n:
        raise ValueError(f"homological degree {k} out of range 1..{n}")
    out = []
    if k == 1:
        for js in combinations_with_replacement(range(1, n + 1), d):
            out.append(ek_row(js, n))
    else:
        for ii in combinations(range(1, n + 1), k - 1):
            for js in combinations_with_replacement(range(1, n + 1), d):
                if ii[-1] < js[-1]:
                    out.append(HookTableau(ii[0], ii[1:], js))
    out.sort(key=lambda t: (t.corner, t.col, t.row))
    return tuple(out)


def diff_ek(e: ModuleElement) -> ModuleElement | Polynomial:
    """Two-sum differential on the tableau presentation; degree 1 gives monomials."""
    if e.kind != "EK":
        raise ValueError("diff_ek needs an EK-kind element")
    n, d, k = e.n, e.d, e.degree
    if k < 1:
        raise ValueError("differential needs homological degree >= 1")
    if k == 1:
        out = Polynomial.zero(n)
        for tab, c in e.terms.items():
            out = out + c.mul_monomial(Monomial.from_indices(j_block(tab, 1), n))
        return out
    out = ModuleElement.zero("EK", n, d, k - 1)
    for tab, c in e.terms.items():
        ii = i_block(tab, k)
        jj = j_block(tab, k)
        jd = jj[-1]
        for pos, il in enumerate(ii):
            rest = ii[:pos] + ii[pos + 1:]
            sgn = (-1) ** (pos + 1)
            # (-1)^l x_{i_l} (T minus i_l)
            s1, tab1 = normalize_ek(rest, jj, k - 1, n)
            if s1:
                out.add_term(tab1, c.mul_monomial(Monomial.variable(il, n), sgn * s1))
            # -(-1)^l x_{j_d} (T minus {i_l, j_d}) with i_l moved into the row
            s2, tab2 = normalize_ek(rest, jj[:-1] + (il,), k - 1, n)
            if s2:
                out.add_term(tab2, c.mul_monomial(Monomial.variable(jd, n), -sgn * s2))
    return out


def ek_tableau_build(n: int, d: int) -> "ComplexDescriptor":
    from .l_complex import ComplexDescriptor
    bases: list[list] = [[None]]
    for k in range(1, n + 1):
        bases.append(list(ek_basis(n, d, k)))
    matrices = [None]
    for k in range(1, n + 1):
        index = {tab: i for i, tab in enumerate(bases[k - 1])} if k > 1 else None
        mat = [[Polynomial.zero(n) for _ in bases[k]] for _ in range(max(1, len(bases[k - 1])))]
        for jcol, tab in enumerate(bases[k]):
            e = ModuleElement("EK", n, d, k, {tab: Polynomial.one(n)})
            img = diff_ek(e)
            if k == 1:
                mat[0][jcol] = img
            else:
                for t2, c in img.terms.items():
                    mat[index[t2]][jcol] = c
        matrices.append(mat)
    degs = [[0]] + [[t.boxes() for t in bases[k]] for k in range(1, n + 1)]
    return ComplexDescriptor("EK", n, d, bases, matrices, degs)


# ---------------------------------------------------------------------------
# Borel machinery and the classical presentation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EKSymbol:
    """Classical basis symbol (generator; j_1 < ... < j_i)."""

    gen: Monomial
    J: tuple[int, ...] = ()

    def text(self) -> str:
        js = ",".join(str(j) for j in self.J)
        return f"({self.gen.text()}; {js})" if self.J else f"({self.gen.text()};)"

    def to_json(self) -> dict:
        return {"gen": self.gen.text(), "J": list(self.J)}


def monomial_in_ideal(g: Monomial, gens: list[Monomial]) -> bool:
    return any(all(a >= b for a, b in zip(g, m)) for m in gens)


def is_borel(gens: list[Monomial]) -> bool:
    """Exchange test: each generator stays in the ideal after x_j -> x_i, i < j."""
    if not gens:
        raise ValueError("empty generator list")
    n = gens[0].n
    for m in gens:
        for jv in m.support():
            for iv in range(1, jv):
                moved = m.div(Monomial.variable(jv, n)).mul(Monomial.variable(iv, n))
                if not monomial_in_ideal(moved, gens):
                    return False
    return True


def borel_begin(g: Monomial, gens: list[Monomial]) -> tuple[Monomial, Monomial]:
    """The unique factorization g = u*v with u a minimal generator and
    max(u) <= min(v); returns (u, v)."""
    n = g.n
    matches = []
    for u in gens:
        if not all(a >= b for a, b in zip(g, u)):
            continue
        v = g.div(u)
        if v.is_identity() or u.max_index() <= v.min_index():
            matches.append((u, v))
    if not matches:
        raise ValueError(f"{g.text()} admits no beginning decomposition")
    if len(matches) > 1:
        raise ValueError(f"beginning decomposition of {g.text()} is not unique")
    return matches[0]


def md_generators(n: int, d: int) -> list[Monomial]:
    """Minimal generators of m^d: all degree-d monomials, sorted."""
    gens = [Monomial.from_indices(js, n)
            for js in combinations_with_replacement(range(1, n + 1), d)]
    gens.sort()
    return gens


def classical_symbol_order(sym: EKSymbol):
    return (tuple(sym.gen), sym.J)


def classical_basis(gens: list[Monomial], k: int) -> list[EKSymbol]:
    """Degree-k symbols (m; j_1..j_{k-1}) with all j below max(m)."""
    out = []
    for m in gens:
        top = m.max_index()
        for J in combinations(range(1, top), k - 1):
            out.append(EKSymbol(m, J))
    out.sort(key=classical_symbol_order)
    return out


def normalize_symbol(gen: Monomial, J) -> tuple[int, EKSymbol | None]:
    """Sort J with sign; zero on repeats or an index at/above max(gen)."""
    jj = list(J)
    sign = 1
    for a in range(1, len(jj)):
        b = a
        while b > 0 and jj[b - 1] > jj[b]:
            jj[b - 1], jj[b] = jj[b], jj[b - 1]
            sign = -sign
            b -= 1
    for a, b in zip(jj, jj[1:]):
        if a == b:
            return 0, None
    if jj and jj[-1] >= gen.max_index():
        return 0, None
    return sign, EKSymbol(gen, tuple(jj))


class SymbolElement:
    """Formal sum of classical symbols with polynomial coefficients."""

    __slots__ = ("n", "degree", "terms")

    def __init__(self, n: int, degree: int, terms: dict[EKSymbol, Polynomial] | None = None):
        self.n = n
        self.degree = degree
        self.terms: dict[EKSymbol, Polynomial] = {}
        if terms:
            for s, c in terms.items():
                if not c.is_zero():
                    self.terms[s] = c

    def add_term(self, sym: EKSymbol, coeff: Polynomial) -> None:
        if coeff.is_zero():
            return
        cur = self.terms.get(sym)
        s = coeff if cur is None else cur + coeff
        if s.is_zero():
            self.terms.pop(sym, None)
        else:
            self.terms[sym] = s

    def __add__(self, other: "SymbolElement") -> "SymbolElement":
        if (self.n, self.degree) != (other.n, other.degree):
            raise ValueError("degree mismatch")
        out = SymbolElement(self.n, self.degree, dict(self.terms))
        for s, c in other.terms.items():
            out.add_term(s, c)
        return out

    def scale(self, p) -> "SymbolElement":
        if not isinstance(p, Polynomial):
            p = Polynomial.from_monomial(Monomial.identity(self.n), Fraction(p))
        out = SymbolElement(self.n, self.degree)
        for s, c in self.terms.items():
            out.add_term(s, c * p)
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def is_polynomial(self) -> bool:
        return all(c.is_polynomial() for c in self.terms.values())

    def __eq__(self, other) -> bool:
        return (isinstance(other, SymbolElement)
                and (self.n, self.degree) == (other.n, other.degree)
                and self.terms == other.terms)

    def text(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for sym in sorted(self.terms, key=classical_symbol_order):
            c = self.terms[sym]
            if c.is_constant():
                v = c.constant_value()
                if v == 1:
                    bits.append(sym.text())
                elif v == -1:
                    bits.append(f"-{sym.text()}")
                else:
                    bits.append(f"{v}*{sym.text()}")
            else:
                body = c.text()
                if len(c.terms) > 1:
                    body = f"({body})"
                bits.append(f"{body}*{sym.text()}")
        s = bits[0]
        for b in bits[1:]:
            s += f" - {b[1:]}" if b.startswith("-") else f" + {b}"
        return s


def diff_classical(e: SymbolElement, gens: list[Monomial]) -> SymbolElement | Polynomial:
    """d = del - mu with alternating signs on both sums and the vanishing
    convention for symbols whose indices reach max of the generator."""
    n = e.n
    if e.degree == 1:
        out = Polynomial.zero(n)
        for sym, c in e.terms.items():
            out = out + c.mul_monomial(sym.gen)
        return out
    out = SymbolElement(n, e.degree - 1)
    for sym, c in e.terms.items():
        for q, jq in enumerate(sym.J):
            rest = sym.J[:q] + sym.J[q + 1:]
            sgn = (-1) ** (q + 1)
            out.add_term(EKSymbol(sym.gen, rest), c.mul_monomial(Monomial.variable(jq, n), sgn))
            shifted = sym.gen.mul(Monomial.variable(jq, n))
            b, v = borel_begin(shifted, gens)
            s2, sym2 = normalize_symbol(b, rest)
            if s2:
                out.add_term(sym2, c.mul_monomial(v, -sgn * s2))
    return out


def ek_classical_build(gens: list[Monomial]):
    """Classical resolution descriptor for a Borel monomial ideal."""
    from .l_complex import ComplexDescriptor
    if not is_borel(gens):
        raise ValueError("generator list is not Borel-fixed")
    n = gens[0].n
    maxlen = max((m.max_index() for m in gens), default=1)
    bases: list[list] = [[None]]
    k = 1
    while True:
        basis = classical_basis(gens, k)
        if not basis:
            break
        bases.append(basis)
        k += 1
        if k > n + 1:
            break
    matrices = [None]
    for k in range(1, len(bases)):
        index = {s: i for i, s in enumerate(bases[k - 1])} if k > 1 else None
        mat = [[Polynomial.zero(n) for _ in bases[k]] for _ in range(max(1, len(bases[k - 1])))]
        for jcol, sym in enumerate(bases[k]):
            img = diff_classical(SymbolElement(n, k, {sym: Polynomial.one(n)}), gens)
            if k == 1:
                mat[0][jcol] = img
            else:
                for s2, c in img.terms.items():
                    mat[index[s2]][jcol] = c
        matrices.append(mat)
    degs = [[0]] + [[s.gen.degree() + len(s.J) for s in bases[k]] for k in range(1, len(bases))]
    desc = ComplexDescriptor("EK-classical", n, 0, bases, matrices, degs)
    desc.meta["generators"] = list(gens)
    return desc


def eta(e: ModuleElement) -> SymbolElement:
    """Relabeling isomorphism: tableau -> (row-block monomial; alternating block)."""
    if e.kind != "EK":
        raise ValueError("eta needs an EK-kind element")
    n, k = e.n, e.degree
    out = SymbolElement(n, k)
    for tab, c in e.terms.items():
        gen = Monomial.from_indices(j_block(tab, k), n)
        out.add_term(EKSymbol(gen, i_block(tab, k)), c)
    return out


def eta_inverse(e: SymbolElement, d: int) -> ModuleElement:
    out = ModuleElement.zero("EK", e.n, d, e.degree)
    for sym, c in e.terms.items():
        sign, tab = normalize_ek(sym.J, tuple(sym.gen.letters()), e.degree, e.n)
        if sign == 0:
            raise ValueError("symbol does not correspond to an admissible tableau")
        out.add_term(tab, c.scale(sign))
    return out


# ---------------------------------------------------------------------------
# chain monomials and the products for m^d
# ---------------------------------------------------------------------------


@dataclass
class ChainData:
    """Monomial chains climbing both generators to the beginning of their lcm."""

    s_seq: tuple[int, ...]
    f_chain: tuple[Monomial, ...]
    t_seq: tuple[int, ...]
    g_chain: tuple[Monomial, ...]


def _begin_md(g: Monomial, d: int) -> Monomial:
    """Beginning of a monomial inside m^d: its d smallest letters."""
    letters = g.letters()
    if len(letters) < d:
        raise ValueError("monomial below generator degree")
    return Monomial.from_indices(letters[:d], g.n)


@lru_cache(maxsize=None)
def peeva_chains(f: Monomial, g: Monomial, d: int) -> ChainData:
    if f.degree() != d or g.degree() != d:
        raise ValueError("chain data needs two minimal generators of m^d")
    blcm = _begin_md(f.lcm(g), d)
    s_mono = blcm.div(blcm.gcd(f))
    t_mono = blcm.div(blcm.gcd(g))
    s_seq = tuple(s_mono.letters())
    t_seq = tuple(t_mono.letters())
    f_chain = [f]
    for s in s_seq:
        f_chain.append(_begin_md(f_chain[-1].mul(Monomial.variable(s, f.n)), d))
    g_chain = [g]
    for t in t_seq:
        g_chain.append(_begin_md(g_chain[-1].mul(Monomial.variable(t, g.n)), d))
    if f_chain[-1] != blcm or g_chain[-1] != blcm:
        raise ArithmeticError("monomial chain failed to reach the beginning of the lcm")
    return ChainData(s_seq, tuple(f_chain), t_seq, tuple(g_chain))


def _base_rule(left: EKSymbol, right: EKSymbol, letter: int, guard_set: tuple[int, ...],
               n: int) -> SymbolElement | None:
    """One chain step: absorb the step letter between the index sets.

    Vanishes when the letter does not exceed the guard set; otherwise yields
    (earlier generator; J, letter, K) with the sorting sign, coefficient
    later-generator / x_letter.  Vanishing of the combined symbol is decided
    by normalize_symbol alone.
    """
    if letter <= max(guard_set, default=0):
        return None
    sign, sym = normalize_symbol(left.gen, left.J + (letter,) + right.J)
    if sign == 0:
        return None
    coeff = Polynomial.from_monomial(right.gen.div(Monomial.variable(letter, n)), sign)
    out = SymbolElement(n, len(sym.J) + 1)
    out.add_term(sym, coeff)
    return out


def peeva_product_symbols(s1: EKSymbol, s2: EKSymbol, n: int, d: int) -> SymbolElement:
    """Chain-expansion product of two classical symbols of the m^d build."""
    out_deg = (len(s1.J) + 1) + (len(s2.J) + 1)
    out = SymbolElement(n, out_deg)
    f, J = s1.gen, s1.J
    g, K = s2.gen, s2.J
    if f == g:
        return out  # case 1
    ch = peeva_chains(f, g, d)
    s_in_J = any(s in J for s in ch.s_seq)
    t_in_K = any(t in K for t in ch.t_seq)
    if s_in_J and t_in_K:
        return out  # case 2
    fg = f.mul(g)
    if s_in_J and not t_in_K:
        # case 3: sum below the first chain step whose letter lies in J
        p = next(i for i, s in enumerate(ch.s_seq) if s in J)
        rng = range(p)
        terms = [("f", i) for i in rng]
    elif t_in_K and not s_in_J:
        q = next(i for i, t in enumerate(ch.t_seq) if t in K)
        terms = [("g", i) for i in range(q)]
    else:
        terms = [("f", i) for i in range(len(ch.s_seq))] + \
                [("g", i) for i in range(len(ch.t_seq))]
    for side, i in terms:
        if side == "f":
            a, b = ch.f_chain[i], ch.f_chain[i + 1]
            letter = ch.s_seq[i]
            piece = _base_rule(EKSymbol(a, J), EKSymbol(b, K), letter, K, n)
            sgn = 1
        else:
            a, b = ch.g_chain[i], ch.g_chain[i + 1]
            letter = ch.t_seq[i]
            piece = _base_rule(EKSymbol(a, J), EKSymbol(b, K), letter, J, n)
            sgn = -1
        if piece is None:
            continue
        ratio_num = fg
        ratio_den = a.mul(b)
        out = out + piece.scale(sgn).scale(Polynomial.from_monomial(
            ratio_num.div(ratio_den)))
    return out


def peeva_product(e1: SymbolElement, e2: SymbolElement, d: int) -> SymbolElement:
    """Bilinear extension over classical symbols; result must be polynomial."""
    if e1.n != e2.n:
        raise ValueError("ambient mismatch")
    out = SymbolElement(e1.n, e1.degree + e2.degree)
    for s1, c1 in e1.terms.items():
        for s2, c2 in e2.terms.items():
            p = peeva_product_symbols(s1, s2, e1.n, d)
            if not p.is_zero():
                out = out + p.scale(c1 * c2)
    if not out.is_polynomial():
        raise ArithmeticError(f"product left the polynomial ring: {out.text()}")
    return out
