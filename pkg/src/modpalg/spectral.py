"""The third-page differential and fourth-page ranks in a bounded bidegree region.

Base-degree monomials come from the truncated ring
Z_(p)[x, y0, y1, y01]/(x^2, p*y0, p*y1, p*y01), valid in total degrees up
to 2p^2 + 2p + 3; fiber degrees carry Lambda(n).  The differential sends
m (x) f to (x*m) (x) nabla(f), killing monomials that already contain x.
Rows whose base monomial involves a y generator are p-torsion (F_p rows);
the 1 and x rows are Z rows.
"""

from __future__ import annotations

import functools
from typing import NamedTuple

from . import linalg, symfun
from .algebra import is_odd_prime
from .reports import ReportBuilder, VerdictReport


class KZ3Monomial(NamedTuple):
    """x^eps * y0^a * y1^b * y01^delta with eps, delta in {0, 1}."""

    eps: int
    a: int
    b: int
    delta: int


def truncation_bound(p: int) -> int:
    return 2 * p * p + 2 * p + 3


def kz3_degree(p: int, m: KZ3Monomial) -> int:
    return (3 * m.eps + (2 * p + 2) * m.a + (2 * p * p + 2) * m.b
            + (2 * p * p + 2 * p + 3) * m.delta)


def is_torsion(m: KZ3Monomial) -> bool:
    return bool(m.a or m.b or m.delta)


@functools.lru_cache(maxsize=None)
def kz3_basis(p: int, d: int) -> tuple[KZ3Monomial, ...]:
    """Base-ring monomials of degree d, graded-lex descending in (eps, a, b, delta)."""
    if not is_odd_prime(p):
        raise ValueError("p must be an odd prime")
    if d < 0 or d > truncation_bound(p):
        raise ValueError(f"degree {d} outside the truncated range 0..{truncation_bound(p)}")
    out = []
    for eps in (0, 1):
        for delta in (0, 1):
            rem0 = d - 3 * eps - (2 * p * p + 2 * p + 3) * delta
            if rem0 < 0:
                continue
            for b in range(rem0 // (2 * p * p + 2) + 1):
                rem = rem0 - (2 * p * p + 2) * b
                if rem % (2 * p + 2) == 0:
                    out.append(KZ3Monomial(eps, rem // (2 * p + 2), b, delta))
    out.sort(reverse=True)
    return tuple(out)


class PageSlice(NamedTuple):
    """One (s, t) spot of the third page with its outgoing differential."""

    s: int
    t: int
    base: tuple[KZ3Monomial, ...]
    fiber: tuple
    torsion: bool


def _slice(p: int, n: int, s: int, t: int) -> PageSlice:
    base = kz3_basis(p, s)
    torsion_flags = {is_torsion(m) for m in base}
    if len(torsion_flags) > 1:
        # never happens below the truncation bound: 1 and x are the only
        # free monomials and no y-monomial shares their degrees
        raise AssertionError(f"slice s={s} mixes free and torsion rows")
    fiber = symfun.sym_algebra(n, 0).basis(t)
    return PageSlice(s, t, base, fiber, torsion_flags == {True})


def d3_matrix(p: int, n: int, s: int, t: int) -> symfun.LinearSlice:
    """Matrix of d3: (s, t) -> (s+3, t-2) in the product monomial bases.

    Source basis order: base monomial major, fiber monomial minor.  The
    entries are integers; torsion targets read them mod p.
    """
    if t < 2 or t % 2:
        raise ValueError("fiber degree must be even and >= 2")
    if s < 0 or s + 3 > truncation_bound(p):
        raise ValueError("source and target base degrees must sit inside the truncation bound")
    src = _slice(p, n, s, t)
    tgt = _slice(p, n, s + 3, t - 2)
    nab = symfun.nabla_matrix(n, t // 2, 0)
    tgt_index = {m: i for i, m in enumerate(tgt.base)}
    rows = len(tgt.base) * len(tgt.fiber)
    cols = len(src.base) * len(src.fiber)
    matrix = linalg.zeros(rows, cols)
    for bi, bm in enumerate(src.base):
        if bm.eps:
            continue  # x^2 = 0 kills the whole block
        xm = KZ3Monomial(1, bm.a, bm.b, bm.delta)
        ti = tgt_index.get(xm)
        if ti is None:
            continue
        for fr in range(len(tgt.fiber)):
            for fc in range(len(src.fiber)):
                matrix[ti * len(tgt.fiber) + fr][bi * len(src.fiber) + fc] = nab.matrix[fr][fc]
    char = p if (src.torsion or tgt.torsion) else 0
    if char:
        matrix = linalg.mat_mod(matrix, p)
    source_pairs = tuple((bm, fm) for bm in src.base for fm in src.fiber)
    target_pairs = tuple((bm, fm) for bm in tgt.base for fm in tgt.fiber)
    return symfun.LinearSlice(source_pairs, target_pairs, matrix, char)


def e4_rank(p: int, n: int, s: int, t: int) -> int:
    """Dimension of the page homology ker(d3)/im(d3) at (s, t).

    Torsion slices and the x row are measured over F_p (the x-row homology
    is the cokernel of an integer map, counted after tensoring with F_p,
    matching the p-local reading); the 1 row is free and reports its Z rank.
    """
    if t % 2 or t < 0:
        raise ValueError("fiber degree must be even and non-negative")
    spot = _slice(p, n, s, t)
    dim = len(spot.base) * len(spot.fiber)
    if dim == 0:
        return 0
    has_outgoing = t >= 2 and any(m.eps == 0 for m in spot.base)
    if has_outgoing and s + 3 > truncation_bound(p):
        raise ValueError(f"outgoing differential at s = {s} leaves the truncated region")
    out = d3_matrix(p, n, s, t) if has_outgoing else None
    if s == 0:
        return dim - (linalg.rank_int(out.matrix) if out else 0)
    in_rank = 0
    if s >= 3 and kz3_basis(p, s - 3):
        inc = d3_matrix(p, n, s - 3, t + 2)
        in_rank = linalg.rank_mod(inc.matrix, p)
    out_rank = linalg.rank_mod(out.matrix, p) if out else 0
    return dim - out_rank - in_rank


def verify_e4_identities(p: int, n: int, kmax: int = 10) -> VerdictReport:
    """Fourth-page ranks against the independent kernel/cokernel computations.

    For k <= kmax: the (0, 2k) rank equals the integer kernel rank, the
    (3, 2k) dimension equals the mod-p cokernel dimension, the (2p+2, 2k)
    dimension equals the mod-p kernel dimension; and d3 o d3 = 0 across
    the region.
    """
    rb = ReportBuilder("verify-e4", {"p": p, "n": n, "kmax": kmax})
    if not is_odd_prime(p):
        return rb.precondition(f"p = {p} is not an odd prime")
    if n < 1 or kmax < 0:
        return rb.precondition("need n >= 1 and kmax >= 0")
    for k in range(0, kmax + 1):
        got = e4_rank(p, n, 0, 2 * k)
        expect = len(symfun.kernel_K(n, k))
        rb.record(got == expect, s=0, k=k, e4=got, independent=expect,
                  identity="E4^{0,2k} = rank K_n^{2k}")
    for k in range(0, kmax + 1):
        got = e4_rank(p, n, 3, 2 * k)
        expect = symfun.coker_dim(p, n, k + 1)
        rb.record(got == expect, s=3, k=k, e4=got, independent=expect,
                  identity="E4^{3,2k} = dim coker(nabla mod p)^{2k}")
    for k in range(0, kmax + 1):
        got = e4_rank(p, n, 2 * p + 2, 2 * k)
        expect = len(symfun.kernel_L(p, n, k))
        rb.record(got == expect, s=2 * p + 2, k=k, e4=got, independent=expect,
                  identity="E4^{2p+2,2k} = dim L_n^{2k}")
    bound = truncation_bound(p)
    squares_checked = 0
    for s in range(0, bound - 5):
        if not kz3_basis(p, s):
            continue
        for t in range(4, 2 * kmax + 1, 2):
            m1 = d3_matrix(p, n, s, t)
            m2 = d3_matrix(p, n, s + 3, t - 2)
            comp = linalg.mat_mul(m2.matrix, m1.matrix)
            if m1.char or m2.char:
                comp = linalg.mat_mod(comp, p)
            if any(any(row) for row in comp):
                rb.record(False, counterexample={"s": s, "t": t}, s=s, t=t,
                          identity="d3 o d3 = 0")
            squares_checked += 1
    rb.record(True, squares_checked=squares_checked, identity="d3 o d3 = 0 across region")
    return rb.finish()
