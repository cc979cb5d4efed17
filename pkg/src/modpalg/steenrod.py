"""Steenrod operations on presented unstable algebras over F_p.

A :class:`SteenrodAction` records, per generator, the image of the
Bockstein and of the total power operation.  The Bockstein extends as a
degree +1 derivation with Koszul signs; the total power extends as a ring
homomorphism, and P^k is its graded piece in degree |e| + 2k(p-1).  Milnor
operations follow the inductive definition Q_0 = beta,
Q_{i+1} = P^{p^i} Q_i - Q_i P^{p^i}; their derivation property is a tested
consequence, not an implementation shortcut.
"""

from __future__ import annotations

from .algebra import Algebra, Element, Monomial


class SteenrodAction:
    """Bockstein and total-power images of the generators of an F_p algebra."""

    def __init__(self, alg: Algebra, beta_images: dict[str, Element],
                 power_images: dict[str, Element]):
        if not alg.char:
            raise ValueError("Steenrod operations need an F_p coefficient ring")
        self.alg = alg
        self.p = alg.char
        self.beta_images = dict(beta_images)
        self.power_images = dict(power_images)
        self._validate()
        self._qcache: dict[tuple[int, Monomial], Element] = {}

    def _validate(self):
        p = self.p
        for g in self.alg.gens:
            b = self.beta_images.get(g.name, self.alg.zero())
            if not b.is_zero() and b.support_degrees() != [g.degree + 1]:
                raise ValueError(f"beta image of {g.name} must be homogeneous of degree {g.degree + 1}")
            img = self.power_images.get(g.name)
            if img is None:
                raise ValueError(f"missing total power image for {g.name}")
            ge = self.alg.gen(g.name)
            if img.homogeneous_component(g.degree) != ge:
                raise ValueError(f"total power image of {g.name} must start with {g.name} itself")
            for d in img.support_degrees():
                if (d - g.degree) % (2 * (p - 1)):
                    raise ValueError(f"total power image of {g.name} has a term in bad degree {d}")
            if g.degree == 1 and img != ge:
                raise ValueError(f"instability: P on the degree-1 generator {g.name} must be the identity")
            if g.degree == 2 and img != ge + ge ** p:
                raise ValueError(f"instability: P({g.name}) must be {g.name} + {g.name}^{p}")

    # -- Bockstein -------------------------------------------------------
    def bockstein(self, e: Element) -> Element:
        """Degree +1 derivation: beta(xy) = beta(x)y + (-1)^|x| x beta(y)."""
        alg = self.alg
        out = alg.zero()
        for m, c in e.terms.items():
            out = out + self._bockstein_monomial(m).scale(c)
        return out

    def _bockstein_monomial(self, m: Monomial) -> Element:
        alg = self.alg
        out = alg.zero()
        prefix = alg.one()
        prefix_parity = 0
        factors = self._factors(m)
        for idx, (gname, exp, gdeg) in enumerate(factors):
            g = alg.gen(gname)
            bg = self.beta_images.get(gname, alg.zero())
            if not bg.is_zero():
                # beta(g^e) = e g^{e-1} beta(g); only e = 1 occurs for odd g.
                dfac = (g ** (exp - 1)) * bg
                if exp > 1:
                    dfac = dfac.scale(exp)
                suffix = alg.one()
                for gname2, exp2, _ in factors[idx + 1:]:
                    suffix = suffix * (alg.gen(gname2) ** exp2)
                sign = -1 if prefix_parity % 2 else 1
                out = out + (prefix * dfac * suffix).scale(sign)
            prefix = prefix * (g ** exp)
            prefix_parity += exp * gdeg
        return out

    def _factors(self, m: Monomial) -> list[tuple[str, int, int]]:
        """(name, exponent, degree) factors of a monomial in descriptor order."""
        alg = self.alg
        out = []
        for i, g in enumerate(alg.gens):
            if g.odd:
                if alg._ext_slot[i] in m.ext:
                    out.append((g.name, 1, g.degree))
            else:
                e = m.poly[alg._poly_slot[i]]
                if e:
                    out.append((g.name, e, g.degree))
        return out

    # -- total power and graded pieces ------------------------------------
    def total_power(self, e: Element, max_degree: int | None = None) -> Element:
        """Ring homomorphism extending the generator images.

        max_degree truncates intermediate products (all graded pieces of a
        generator image sit in degrees >= the generator degree, so pieces
        above the bound can never contribute below it).
        """
        alg = self.alg
        out = alg.zero()
        for m, c in e.terms.items():
            term = alg.scalar(c)
            for gname, exp, _ in self._factors(m):
                img = self.power_images[gname]
                term = _truncate(term * _pow_truncated(img, exp, max_degree, alg),
                                 max_degree, alg)
            out = out + term
        return out

    def power(self, k: int, e: Element) -> Element:
        """P^k: the degree |e| + 2k(p-1) piece of the total power."""
        if k < 0:
            raise ValueError("k must be non-negative")
        if e.is_zero():
            return e
        d = e.degree()  # raises on non-homogeneous input
        target = d + 2 * k * (self.p - 1)
        return self.total_power(e, max_degree=target).homogeneous_component(target)

    # -- Milnor operations -------------------------------------------------
    def milnor_Q(self, i: int, e: Element) -> Element:
        """Q_i by the inductive definition, memoized per monomial."""
        if i < 0:
            raise ValueError("Milnor index must be non-negative")
        alg = self.alg
        out = alg.zero()
        for m, c in e.terms.items():
            out = out + self._q_monomial(i, m).scale(c)
        return out

    def _q_monomial(self, i: int, m: Monomial) -> Element:
        key = (i, m)
        cached = self._qcache.get(key)
        if cached is not None:
            return cached
        if i == 0:
            val = self._bockstein_monomial(m)
        else:
            k = self.p ** (i - 1)
            em = Element(self.alg, {m: 1})
            val = self._power_componentwise(k, self.milnor_Q(i - 1, em)) \
                - self.milnor_Q(i - 1, self.power(k, em))
        self._qcache[key] = val
        return val

    def _power_componentwise(self, k: int, e: Element) -> Element:
        out = self.alg.zero()
        for _, comp in e.components().items():
            out = out + self.power(k, comp)
        return out


def _truncate(e: Element, max_degree: int | None, alg: Algebra) -> Element:
    if max_degree is None:
        return e
    return Element(alg, {m: c for m, c in e.terms.items()
                         if alg.monomial_degree(m) <= max_degree})


def _pow_truncated(e: Element, n: int, max_degree: int | None, alg: Algebra) -> Element:
    if max_degree is None:
        return e ** n
    result = alg.one()
    base = _truncate(e, max_degree, alg)
    while n:
        if n & 1:
            result = _truncate(result * base, max_degree, alg)
        n >>= 1
        if n:
            base = _truncate(base * base, max_degree, alg)
    return result
