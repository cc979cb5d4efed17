"""Symmetric functions in the elementary basis and the first-order derivation.

Lambda(n) is the polynomial ring on s_1..s_n with deg(s_i) = 2i, modelling
symmetric polynomials in n variables of degree 2 via s_i <-> the i-th
elementary symmetric polynomial.  The derivation `nabla` acts by
nabla(s_k) = (n-k+1) s_{k-1} and extends by Leibniz; it is the restriction
to symmetric polynomials of the sum of all partial derivatives in the
underlying variables, which :func:`expand_in_t` exposes as a brute-force
oracle.
"""

from __future__ import annotations

import functools

from . import linalg
from .algebra import Algebra, Element, Monomial, is_odd_prime
from .reports import ReportBuilder, VerdictReport


@functools.lru_cache(maxsize=None)
def _sym_algebra(n: int, char: int) -> Algebra:
    if n < 1:
        raise ValueError("need at least one variable")
    return Algebra([(f"s{i}", 2 * i, "even") for i in range(1, n + 1)], char)


def sym_algebra(n: int, char: int = 0) -> Algebra:
    """Z[s_1..s_n] (or its mod-p reduction), deg(s_i) = 2i."""
    return _sym_algebra(n, char)


@functools.lru_cache(maxsize=None)
def _t_algebra(n: int, char: int) -> Algebra:
    return Algebra([(f"t{i}", 2, "even") for i in range(1, n + 1)], char)


def t_algebra(n: int, char: int = 0) -> Algebra:
    """Z[t_1..t_n], deg(t_i) = 2; oracle-side ring."""
    return _t_algebra(n, char)


def sigma(n: int, k: int, char: int = 0) -> Element:
    """The generator s_k of Lambda(n); s_0 = 1."""
    alg = sym_algebra(n, char)
    return alg.one() if k == 0 else alg.gen(f"s{k}")


def nabla(f: Element, n: int) -> Element:
    """Degree -2 derivation with nabla(s_k) = (n-k+1) s_{k-1}."""
    alg = f.alg
    if len(alg.poly_gens) != n or alg.ext_gens:
        raise ValueError("element does not live in Lambda(n)")
    out = alg.zero()
    for m, c in f.terms.items():
        for k in range(1, n + 1):
            e = m.poly[k - 1]
            if not e:
                continue
            coeff = c * e * (n - k + 1)
            exps = list(m.poly)
            exps[k - 1] -= 1
            if k > 1:
                exps[k - 2] += 1
            out = out + alg.element({Monomial(tuple(exps), ()): coeff})
    return out


@functools.lru_cache(maxsize=None)
def _elementary_in_t(n: int, k: int, char: int) -> Element:
    alg = t_algebra(n, char)
    out = alg.zero()
    def rec(start: int, left: int, acc: Element):
        nonlocal out
        if left == 0:
            out = out + acc
            return
        for i in range(start, n - left + 1):
            rec(i + 1, left - 1, acc * alg.gen(f"t{i + 1}"))
    if k == 0:
        return alg.one()
    rec(0, k, alg.one())
    return out


def expand_in_t(f: Element, n: int) -> Element:
    """Ring map s_i -> e_i(t_1..t_n); the oracle expansion."""
    alg = f.alg
    tal = t_algebra(n, alg.char)
    out = tal.zero()
    for m, c in f.terms.items():
        term = tal.scalar(c)
        for i, e in enumerate(m.poly):
            if e:
                term = term * _elementary_in_t(n, i + 1, alg.char) ** e
        out = out + term
    return out


def sum_of_partials(g: Element, n: int) -> Element:
    """Sum over i of d/dt_i, on the t-variable side."""
    alg = g.alg
    out = alg.zero()
    for m, c in g.terms.items():
        for i in range(n):
            e = m.poly[i]
            if not e:
                continue
            exps = list(m.poly)
            exps[i] -= 1
            out = out + alg.element({Monomial(tuple(exps), ()): c * e})
    return out


class LinearSlice:
    """A degree-homogeneous linear map in fixed monomial bases.

    matrix[r][c] is the coefficient of target basis monomial r in the image
    of source basis monomial c.
    """

    def __init__(self, source: tuple[Monomial, ...], target: tuple[Monomial, ...],
                 matrix: list[list[int]], char: int):
        if matrix and len(matrix) != len(target):
            raise ValueError("row count must equal target basis size")
        for row in matrix:
            if len(row) != len(source):
                raise ValueError("column count must equal source basis size")
        self.source = source
        self.target = target
        self.matrix = matrix
        self.char = char

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.target), len(self.source)


def nabla_matrix(n: int, k: int, char: int = 0) -> LinearSlice:
    """Matrix of nabla: Lambda(n)^{2k} -> Lambda(n)^{2k-2} in canonical bases."""
    if k < 1:
        raise ValueError("k must be >= 1")
    alg = sym_algebra(n, char)
    source = alg.basis(2 * k)
    target = alg.basis(2 * k - 2)
    cols = []
    for m in source:
        img = nabla(alg.element({m: 1}), n)
        cols.append(alg.coords(img, 2 * k - 2))
    matrix = [[cols[c][r] for c in range(len(source))] for r in range(len(target))]
    return LinearSlice(source, target, matrix, char)


def kernel_K(n: int, k: int) -> list[Element]:
    """Z-basis of the integer kernel of nabla in degree 2k."""
    alg = sym_algebra(n, 0)
    if k == 0:
        return [alg.one()]
    slc = nabla_matrix(n, k, 0)
    return [alg.from_coords(v, 2 * k) for v in linalg.kernel_int(slc.matrix)]


def kernel_L(p: int, n: int, k: int) -> list[Element]:
    """F_p-basis, in reduced row echelon form, of the mod-p kernel of nabla."""
    if not is_odd_prime(p):
        raise ValueError("p must be an odd prime")
    alg = sym_algebra(n, p)
    if k == 0:
        return [alg.one()]
    slc = nabla_matrix(n, k, p)
    return [alg.from_coords(v, 2 * k) for v in linalg.nullspace_mod(slc.matrix, p)]


def coker_dim(p: int, n: int, k: int) -> int:
    """dim over F_p of Lambda(n)^{2k-2} / nabla(Lambda(n)^{2k})."""
    if k == 0:
        return 0  # target Lambda^{-2} is the zero module
    slc = nabla_matrix(n, k, p)
    return len(slc.target) - linalg.rank_mod(slc.matrix, p)


def dim_lambda(n: int, k: int) -> int:
    """Number of monomials of Lambda(n) in degree 2k."""
    return len(sym_algebra(n, 0).basis(2 * k))


def check_nabla_onto_2p(p: int, n: int) -> VerdictReport:
    """PASS iff nabla mod p maps Lambda(n)^{2p} onto Lambda(n)^{2p-2}.

    Mod-p surjectivity is equivalent to p-local surjectivity for a map of
    finitely generated free modules, so a full-rank check settles it.
    """
    rb = ReportBuilder("verify-nabla-onto", {"p": p, "n": n})
    if not is_odd_prime(p):
        return rb.precondition(f"p = {p} is not an odd prime")
    if n % p:
        return rb.precondition(f"p = {p} does not divide n = {n}")
    slc = nabla_matrix(n, p, p)
    rank = linalg.rank_mod(slc.matrix, p)
    target_dim = len(slc.target)
    rb.record(rank == target_dim, rank=rank, target_dim=target_dim,
              source_dim=len(slc.source),
              counterexample={"rank": rank, "target_dim": target_dim})
    return rb.finish()


def _concentrated_on_multiples(m: Monomial, p: int) -> bool:
    """Whether every variable with a positive exponent is some s_{jp}."""
    return all(e == 0 or (i + 1) % p == 0 for i, e in enumerate(m.poly))


def check_Ln_lemma(p: int, n: int) -> VerdictReport:
    """Support check on the echelon basis of the mod-p kernel in degree 2p^2.

    PASS iff every monomial, in the support of every reduced-echelon basis
    vector, whose exponents sit entirely on s_p, s_{2p}, ... equals s_p^p.
    Linear combinations introduce no new support monomials, so the basis
    check settles the statement for every kernel element.
    """
    rb = ReportBuilder("verify-ln", {"p": p, "n": n})
    if not is_odd_prime(p):
        return rb.precondition(f"p = {p} is not an odd prime")
    if n % p:
        return rb.precondition(f"p = {p} does not divide n = {n}")
    alg = sym_algebra(n, p)
    basis = kernel_L(p, n, p * p)
    sigma_p_p = Monomial(tuple(p if i + 1 == p else 0 for i in range(n)), ())
    for idx, vec in enumerate(basis):
        offending = [m for m in vec.terms
                     if _concentrated_on_multiples(m, p) and m != sigma_p_p]
        rb.record(not offending,
                  counterexample={"vector": idx, "monomial":
                                  alg.monomial_str(offending[0])} if offending else None,
                  vector=idx, support_size=len(vec.terms),
                  concentrated_hits=sum(1 for m in vec.terms
                                        if _concentrated_on_multiples(m, p)))
    rb.record(True, kernel_dim=len(basis), degree=2 * p * p)
    return rb.finish()
