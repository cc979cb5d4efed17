"""Concrete cohomology models and the headline restriction checks.

The Gamma model with i blocks is F_p[xi_1,eta_1,..,xi_i,eta_i] tensor
Lambda[a_1,b_1,..,a_i,b_i] with Bockstein beta(a_j) = xi_j,
beta(b_j) = eta_j and the unstable total power on the generators.  On it
live the degree-3 class S = sum_j (xi_j b_j - eta_j a_j), the tower of
classes obtained from S by iterated power operations and Bocksteins, and
the vanishing/formula checks built from them.

Also here: the eta-ring Z[eta]/(p eta) with the discriminant restriction,
and the truncated Whitney-sum expansion of total Chern classes under the
block-diagonal pullback, with its mod-p component checks.
"""

from __future__ import annotations

import functools
import math

from .algebra import Algebra, Element, is_odd_prime
from .reports import ReportBuilder, VerdictReport
from .steenrod import SteenrodAction
from . import symfun


class GammaModel:
    """i-block polynomial/exterior model with its Steenrod action."""

    def __init__(self, p: int, blocks: int = 1):
        if not is_odd_prime(p):
            raise ValueError("p must be an odd prime")
        if blocks < 1:
            raise ValueError("need at least one block")
        self.p = p
        self.blocks = blocks
        gens = []
        for j in range(1, blocks + 1):
            suffix = "" if blocks == 1 else str(j)
            gens.append((f"xi{suffix}", 2, "even"))
            gens.append((f"eta{suffix}", 2, "even"))
        for j in range(1, blocks + 1):
            suffix = "" if blocks == 1 else str(j)
            gens.append((f"a{suffix}", 1, "odd"))
            gens.append((f"b{suffix}", 1, "odd"))
        self.alg = Algebra(gens, p)
        beta_images = {}
        power_images = {}
        for j in range(1, blocks + 1):
            suffix = "" if blocks == 1 else str(j)
            xi, eta = self.alg.gen(f"xi{suffix}"), self.alg.gen(f"eta{suffix}")
            a, b = self.alg.gen(f"a{suffix}"), self.alg.gen(f"b{suffix}")
            beta_images[f"a{suffix}"] = xi
            beta_images[f"b{suffix}"] = eta
            power_images[f"xi{suffix}"] = xi + xi ** p
            power_images[f"eta{suffix}"] = eta + eta ** p
            power_images[f"a{suffix}"] = a
            power_images[f"b{suffix}"] = b
        self.action = SteenrodAction(self.alg, beta_images, power_images)

    def _suffix(self, j: int) -> str:
        if not 1 <= j <= self.blocks:
            raise ValueError(f"block index {j} out of range")
        return "" if self.blocks == 1 else str(j)

    def xi(self, j: int = 1) -> Element:
        return self.alg.gen(f"xi{self._suffix(j)}")

    def eta(self, j: int = 1) -> Element:
        return self.alg.gen(f"eta{self._suffix(j)}")

    def a(self, j: int = 1) -> Element:
        return self.alg.gen(f"a{self._suffix(j)}")

    def b(self, j: int = 1) -> Element:
        return self.alg.gen(f"b{self._suffix(j)}")

    def s(self, j: int = 1) -> Element:
        return self.xi(j) * self.b(j) - self.eta(j) * self.a(j)


@functools.lru_cache(maxsize=None)
def _gamma_model(p: int, blocks: int) -> GammaModel:
    return GammaModel(p, blocks)


def gamma_model(p: int, blocks: int = 1) -> GammaModel:
    """Shared, memoized model instance (its operation caches accumulate)."""
    return _gamma_model(p, blocks)


def restrict_chi(p: int, blocks: int) -> Element:
    """S = sum_j (xi_j b_j - eta_j a_j); the degree-3 class all checks start from."""
    model = gamma_model(p, blocks)
    out = model.alg.zero()
    for j in range(1, blocks + 1):
        out = out + model.s(j)
    return out


def alpha_sum_image(p: int, blocks: int) -> Element:
    """P^1(S)(beta P^1 S)^{p-1} S + P^1(S) P^p P^1(S), expanded exactly."""
    model = gamma_model(p, blocks)
    act = model.action
    S = restrict_chi(p, blocks)
    z = act.power(1, S)
    f = act.bockstein(z)
    w = act.power(p, z)
    return z * f ** (p - 1) * S + z * w


class KZ3GeneratorImage:
    """Images of the degree-3 tower generators in a Gamma model.

    xbar -> S;  x[k] -> P^{p^k}...P^1(S);  y[k] -> beta(x[k]).
    """

    def __init__(self, p: int, blocks: int, kmax: int):
        self.model = gamma_model(p, blocks)
        act = self.model.action
        self.xbar = restrict_chi(p, blocks)
        self.x: list[Element] = []
        self.y: list[Element] = []
        current = self.xbar
        for k in range(kmax + 1):
            current = act.power(p ** k, current)
            self.x.append(current)
            self.y.append(act.bockstein(current))


def kz3_images(p: int, blocks: int, kmax: int) -> KZ3GeneratorImage:
    if kmax < 0:
        raise ValueError("kmax must be non-negative")
    return KZ3GeneratorImage(p, blocks, kmax)


def verify_main(p: int, blocks: int) -> VerdictReport:
    """The headline vanishing: alpha_sum_image == 0, for 1..blocks blocks."""
    rb = ReportBuilder("verify-main", {"p": p, "blocks": blocks})
    if not is_odd_prime(p):
        return rb.precondition(f"p = {p} is not an odd prime")
    if blocks < 1:
        return rb.precondition("blocks must be >= 1")
    for i in range(1, blocks + 1):
        val = alpha_sum_image(p, i)
        rb.record(val.is_zero(), counterexample=_element_witness(val),
                  blocks=i, nonzero_terms=len(val.terms))
    return rb.finish()


def verify_prop_s(p: int) -> VerdictReport:
    """The single-block ledger: Bockstein/power images and the z-relation."""
    rb = ReportBuilder("verify-prop-s", {"p": p})
    if not is_odd_prime(p):
        return rb.precondition(f"p = {p} is not an odd prime")
    model = gamma_model(p, 1)
    act = model.action
    xi, eta, a, b = model.xi(), model.eta(), model.a(), model.b()
    s = model.s()
    y = a * b
    z = xi ** p * b - eta ** p * a
    w = xi ** (p * p) * b - eta ** (p * p) * a
    e = xi ** (p * p) * eta - eta ** (p * p) * xi
    f = xi ** p * eta - eta ** p * xi
    for label, got, expect in [
        ("beta(y) = s", act.bockstein(y), s),
        ("beta(z) = f", act.bockstein(z), f),
        ("beta(w) = e", act.bockstein(w), e),
        ("P^1(s) = z", act.power(1, s), z),
        ("P^p(z) = w", act.power(p, z), w),
    ]:
        rb.record(got == expect, counterexample=_element_witness(got - expect), identity=label)
    rel = z * (f ** (p - 1) * s + w)
    rb.record(rel.is_zero(), counterexample=_element_witness(rel),
              identity="z(f^{p-1}s + w) = 0")
    return rb.finish()


def verify_yagita(p: int, imax: int, blocks: int = 1) -> VerdictReport:
    """Milnor operations on the restricted tower classes, signs as printed.

    (a) Q_0(xbar) = 0 and Q_i(xbar) = -y_{i-1};
    (b) Q_i(y_j) = 0;
    (c) Q_i(x_j) = y_{j-i}^{p^i} if i <= j, 0 if i = j+1, -y_{i-j-2}^{p^{j+1}} if i >= j+2.
    """
    rb = ReportBuilder("verify-yagita", {"p": p, "imax": imax, "blocks": blocks})
    if not is_odd_prime(p):
        return rb.precondition(f"p = {p} is not an odd prime")
    if imax < 1:
        return rb.precondition("imax must be >= 1")
    jmax = imax - 1
    img = kz3_images(p, blocks, jmax)
    act = img.model.action
    rb.record(act.milnor_Q(0, img.xbar).is_zero(), family="a", i=0)
    for i in range(1, imax + 1):
        got = act.milnor_Q(i, img.xbar)
        expect = -img.y[i - 1]
        rb.record(got == expect, counterexample=_element_witness(got - expect),
                  family="a", i=i)
    for i in range(0, imax + 1):
        for j in range(0, jmax + 1):
            got = act.milnor_Q(i, img.y[j])
            rb.record(got.is_zero(), counterexample=_element_witness(got),
                      family="b", i=i, j=j)
    for i in range(0, imax + 1):
        for j in range(0, jmax + 1):
            got = act.milnor_Q(i, img.x[j])
            if i <= j:
                expect = img.y[j - i] ** (p ** i)
            elif i == j + 1:
                expect = img.model.alg.zero()
            else:
                expect = -(img.y[i - j - 2] ** (p ** (j + 1)))
            rb.record(got == expect, counterexample=_element_witness(got - expect),
                      family="c", i=i, j=j)
    return rb.finish()


def verify_lambda_formula(p: int, imax: int = 3) -> VerdictReport:
    """Q_i of Lambda := y0^p S + y0 x1 - x0 y1 in the single-block model.

    Q_0, Q_1, Q_2 must annihilate Lambda; Q_3(Lambda) must equal the image
    of y1^{p+1} - y0^p y2 - y0^{p^2+1}; and Q_k, k <= 2, must annihilate
    that value.
    """
    rb = ReportBuilder("verify-lambda", {"p": p, "imax": imax})
    if not is_odd_prime(p):
        return rb.precondition(f"p = {p} is not an odd prime")
    if imax < 0:
        return rb.precondition("imax must be >= 0")
    img = kz3_images(p, 1, 2)
    act = img.model.action
    lam = img.y[0] ** p * img.xbar + img.y[0] * img.x[1] - img.x[0] * img.y[1]
    for i in range(0, min(imax, 2) + 1):
        got = act.milnor_Q(i, lam)
        rb.record(got.is_zero(), counterexample=_element_witness(got),
                  identity=f"Q_{i}(Lambda) = 0")
    if imax >= 3:
        q3 = act.milnor_Q(3, lam)
        rhs = img.y[1] ** (p + 1) - img.y[0] ** p * img.y[2] - img.y[0] ** (p * p + 1)
        rb.record(q3 == rhs, counterexample=_element_witness(q3 - rhs),
                  identity="Q_3(Lambda) matches the index-3 formula")
        for k in range(0, 3):
            got = act.milnor_Q(k, q3)
            rb.record(got.is_zero(), counterexample=_element_witness(got),
                      identity=f"Q_{k}(Q_3(Lambda)) = 0")
    return rb.finish()


# -- the eta-ring and the discriminant --------------------------------------

class EtaRing:
    """Z[eta]/(p eta): free degree-0 part, F_p multiples of eta^k above."""

    def __init__(self, p: int):
        self.p = p

    def normalize(self, terms: dict[int, int]) -> dict[int, int]:
        out = {}
        for k, c in terms.items():
            c = c if k == 0 else c % self.p
            if c:
                out[k] = c
        return out

    def mul(self, f: dict[int, int], g: dict[int, int]) -> dict[int, int]:
        out: dict[int, int] = {}
        for k1, c1 in f.items():
            for k2, c2 in g.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
        return self.normalize(out)


def theta_delta(p: int) -> tuple[int, int]:
    """The discriminant prod_{i != j}(t_i - t_j) under t_i -> i*eta.

    Returns (coefficient mod p, exponent) of the image in Z[eta]/(p eta).
    """
    if not is_odd_prime(p):
        raise ValueError("p must be an odd prime")
    ring = EtaRing(p)
    acc = {0: 1}
    for i in range(1, p + 1):
        for j in range(1, p + 1):
            if i != j:
                acc = ring.mul(acc, {1: i - j})
    if list(acc) == []:
        return 0, p * p - p
    (k, c), = acc.items()
    return c, k


def verify_theta(p: int) -> VerdictReport:
    """PASS iff the discriminant restricts to -eta^{p^2-p} exactly."""
    rb = ReportBuilder("verify-theta", {"p": p})
    if not is_odd_prime(p):
        return rb.precondition(f"p = {p} is not an odd prime")
    c, k = theta_delta(p)
    ok = (k == p * p - p) and (c % p == (-1) % p)
    rb.record(ok, counterexample=f"{c}*eta^{k}", coefficient=c, exponent=k,
              value=f"{c - p}*eta^{k}" if c else "0")
    return rb.finish()


# -- Whitney-sum restriction of total Chern classes --------------------------

def delta_star(p: int, n: int, up_to: int) -> list[Element]:
    """Components of (1 + c_1 + .. + c_p)^{n/p} over F_p, half-degrees 0..up_to.

    Entry i is the degree-2i component, expressed in Lambda(p) mod p.
    """
    if not is_odd_prime(p):
        raise ValueError("p must be an odd prime")
    if n % p:
        raise ValueError("p must divide n")
    alg = symfun.sym_algebra(p, p)
    total = alg.one()
    for i in range(1, p + 1):
        total = total + alg.gen(f"s{i}")
    power = _pow_half_truncated(total, n // p, up_to, alg)
    return [power.homogeneous_component(2 * i) for i in range(up_to + 1)]


def _pow_half_truncated(e: Element, m: int, up_to: int, alg: Algebra) -> Element:
    def trunc(x: Element) -> Element:
        return Element(alg, {mon: c for mon, c in x.terms.items()
                             if alg.monomial_degree(mon) <= 2 * up_to})
    result = alg.one()
    base = trunc(e)
    while m:
        if m & 1:
            result = trunc(result * base)
        m >>= 1
        if m:
            base = trunc(base * base)
    return result


def delta_star_multinomial(p: int, n: int, up_to: int) -> list[Element]:
    """Second expansion path: Lucas-reduced multinomial coefficients.

    The degree-2i component of (1 + s_1 + .. + s_p)^m is the sum over
    exponent vectors (k_1..k_p) with sum j*k_j = i of
    multinomial(m; k_1..k_p) s_1^{k_1}..s_p^{k_p}.
    """
    m = n // p
    alg = symfun.sym_algebra(p, p)
    out = []
    for i in range(up_to + 1):
        comp = alg.zero()
        for exps in symfun.sym_algebra(p, p).basis(2 * i):
            ks = list(exps.poly)
            if sum(ks) > m:
                continue
            coeff = _multinomial_mod(m, ks, p)
            if coeff:
                comp = comp + alg.element({exps: coeff})
        out.append(comp)
    return out


def _multinomial_mod(m: int, ks: list[int], p: int) -> int:
    """multinomial(m; ks..., m - sum ks) mod p by Lucas, big-int checked."""
    rest = m - sum(ks)
    parts = ks + [rest]
    lucas = _multinomial_lucas(m, parts, p)
    exact = math.factorial(m)
    for k in parts:
        exact //= math.factorial(k)
    if lucas != exact % p:
        raise AssertionError("Lucas reduction disagrees with exact multinomial")
    return lucas


def _multinomial_lucas(m: int, parts: list[int], p: int) -> int:
    result = 1
    mm, pp = m, list(parts)
    while mm:
        md = mm % p
        digits = [k % p for k in pp]
        if sum(digits) != md:
            return 0
        num = math.factorial(md)
        for d in digits:
            num //= math.factorial(d)
        result = (result * num) % p
        mm //= p
        pp = [k // p for k in pp]
    return result


def p_primary_factor(m: int, p: int) -> int:
    q = 1
    while m % p == 0:
        q *= p
        m //= p
    return q


def check_delta_lemma(p: int, n: int, up_to: int | None = None) -> VerdictReport:
    """Component checks for the restricted total Chern class.

    With m = n/p and q the p-primary factor of m: components of half-degree
    i with q not dividing i vanish mod p, and the half-degree q component is
    binomial(m, q) s_1^q.  Both expansion paths must agree everywhere.
    """
    rb = ReportBuilder("verify-delta", {"p": p, "n": n, "up_to": up_to})
    if not is_odd_prime(p):
        return rb.precondition(f"p = {p} is not an odd prime")
    if n % p:
        return rb.precondition(f"p = {p} does not divide n = {n}")
    m = n // p
    q = p_primary_factor(m, p)
    if up_to is None:
        up_to = 2 * q
        rb.params["up_to"] = up_to
    comps = delta_star(p, n, up_to)
    comps2 = delta_star_multinomial(p, n, up_to)
    alg = symfun.sym_algebra(p, p)
    for i in range(up_to + 1):
        rb.record(comps[i] == comps2[i], counterexample=_element_witness(comps[i] - comps2[i]),
                  i=i, check="expansion paths agree")
    for i in range(1, up_to + 1):
        if i % q:
            rb.record(comps[i].is_zero(), counterexample=_element_witness(comps[i]),
                      i=i, check="vanishes when q does not divide i")
    if q <= up_to:
        expect = alg.gen("s1") ** q * math.comb(m, q)
        rb.record(comps[q] == expect, counterexample=_element_witness(comps[q] - expect),
                  i=q, check="q component is binom(m,q) s1^q")
    return rb.finish()


def _element_witness(e: Element) -> str | None:
    """Short serialization of a (non)zero element for counterexample fields."""
    if e.is_zero():
        return None
    s = str(e)
    return s if len(s) <= 400 else s[:400] + f" ... ({len(e.terms)} terms)"
