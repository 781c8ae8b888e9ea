"""The degree-wise isomorphism from the stable-ideal tableau resolution to the
hook-tableau resolution: drop the last row entry onto the corner.

The map carries the alternating normalization sign of the corner insertion
(equivalently, (-1)^(k-1) against the sorted column form); in degree 1 it is
the identity on monomial rows.  The chain-map identity is asserted by the
verification suites, never assumed.
"""
from __future__ import annotations

from fractions import Fraction

from .ek_complex import ek_basis, i_block, j_block
from .l_complex import l_complex_build
from .polynomial import Polynomial
from .schur import ModuleElement, enumerate_l_basis, straighten_tableau
from .tableau import HookTableau, normalize_tableau


def phi_tableau(tab: HookTableau, degree: int, n: int) -> list[tuple[HookTableau, int]]:
    """Image of one admissible tableau as signed semistandard tableaux."""
    ii = i_block(tab, degree)
    jj = j_block(tab, degree)
    jd = jj[-1]
    raw = HookTableau(jd, ii, jj[:-1])
    sign, canon = normalize_tableau(raw)
    if sign == 0:
        return []
    out = []
    for ss, s in straighten_tableau(canon):
        out.append((ss, sign * s))
    return out


def phi(e: ModuleElement) -> ModuleElement:
    """Chain isomorphism applied to an EK-kind element."""
    if e.kind != "EK":
        raise ValueError("phi needs an EK-kind element")
    out = ModuleElement.zero("L", e.n, e.d, e.degree)
    for tab, c in e.terms.items():
        for ss, s in phi_tableau(tab, e.degree, e.n):
            out.add_term(ss, c.scale(s))
    return out


def phi_matrix(n: int, d: int, k: int) -> list[list[Fraction]]:
    """Matrix of the map in the fixed basis orders (columns: EK, rows: L)."""
    src = ek_basis(n, d, k)
    tgt = enumerate_l_basis(n, k - 1, d)
    index = {t: i for i, t in enumerate(tgt)}
    mat = [[Fraction(0)] * len(src) for _ in tgt]
    for j, tab in enumerate(src):
        for ss, s in phi_tableau(tab, k, n):
            mat[index[ss]][j] += s
    return mat


def matrix_det(mat: list[list[Fraction]]) -> Fraction:
    """Exact determinant by fraction-free-ish Gaussian elimination."""
    m = [row[:] for row in mat]
    size = len(m)
    det = Fraction(1)
    for c in range(size):
        pr = next((i for i in range(c, size) if m[i][c] != 0), None)
        if pr is None:
            return Fraction(0)
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            det = -det
        det *= m[c][c]
        inv = m[c][c]
        for i in range(c + 1, size):
            if m[i][c] != 0:
                f = m[i][c] / inv
                m[i] = [a - f * b for a, b in zip(m[i], m[c])]
    return det


def matrix_inverse(mat: list[list[Fraction]]) -> list[list[Fraction]]:
    size = len(mat)
    aug = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(size)]
           for i, row in enumerate(mat)]
    for c in range(size):
        pr = next((i for i in range(c, size) if aug[i][c] != 0), None)
        if pr is None:
            raise ArithmeticError("singular matrix")
        aug[c], aug[pr] = aug[pr], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for i in range(size):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[size:] for row in aug]


def phi_inverse_matrix(n: int, d: int, k: int) -> list[list[Fraction]]:
    return matrix_inverse(phi_matrix(n, d, k))


def phi_inverse(e: ModuleElement) -> ModuleElement:
    """Pull an L-kind element back along the isomorphism."""
    if e.kind != "L":
        raise ValueError("phi_inverse needs an L-kind element")
    n, d, k = e.n, e.d, e.degree
    inv = phi_inverse_matrix(n, d, k)
    src = ek_basis(n, d, k)
    tgt = enumerate_l_basis(n, k - 1, d)
    index = {t: i for i, t in enumerate(tgt)}
    out = ModuleElement.zero("EK", n, d, k)
    for tab, c in e.terms.items():
        i = index[tab]
        for j, ek_tab in enumerate(src):
            if inv[j][i] != 0:
                out.add_term(ek_tab, c.scale(inv[j][i]))
    return out


def verify_chain_map(n: int, d: int) -> dict:
    """Exhaustively check commutation with the differentials in all degrees."""
    from .ek_complex import diff_ek
    from .l_complex import diff_l
    failures = []
    cases = 0
    for k in range(1, n + 1):
        for tab in ek_basis(n, d, k):
            cases += 1
            e = ModuleElement("EK", n, d, k, {tab: Polynomial.one(n)})
            lhs = diff_l(phi(e)) if k > 1 else diff_l(phi(e))
            rhs_e = diff_ek(e)
            rhs = phi(rhs_e) if k > 1 else rhs_e
            if k == 1:
                ok = lhs == rhs
            else:
                ok = lhs == rhs
            if not ok:
                failures.append({
                    "input": tab.text(), "degree": k,
                    "lhs": lhs.text() if hasattr(lhs, "text") else str(lhs),
                    "rhs": rhs.text() if hasattr(rhs, "text") else str(rhs),
                })
    return {"cases": cases, "failures": failures, "pass": not failures}


def verify_algebra_morphism(product_src, product_tgt, chain_map, pairs) -> dict:
    """Check chain_map(a * b) == chain_map(a) * chain_map(b) over given pairs.

    product_src multiplies source elements, product_tgt target elements;
    failures carry both sides rendered as text, in deterministic order.
    """
    failures = []
    cases = 0
    for a, b in pairs:
        cases += 1
        lhs = chain_map(product_src(a, b))
        rhs = product_tgt(chain_map(a), chain_map(b))
        if lhs != rhs:
            failures.append({
                "input": f"{a.text()} | {b.text()}",
                "lhs": lhs.text(),
                "rhs": rhs.text(),
            })
    return {"cases": cases, "failures": failures, "pass": not failures}
