"""Exact graded-commutative algebras: polynomial tensor exterior, over F_p or Z.

An :class:`Algebra` is a descriptor: an ordered list of generators, each
either even-type (polynomial, even degree) or odd-type (exterior, odd
degree), plus a coefficient ring tag (``char = 0`` for Z, an odd prime p
for F_p).  Elements are sparse dicts monomial -> coefficient.  Products
re-sort exterior factors into descriptor order and record the sign of the
permutation; a repeated exterior generator kills the term.

All values are immutable after construction and all operations are pure.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple


def is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Generator(NamedTuple):
    name: str
    degree: int
    odd: bool


class Monomial(NamedTuple):
    """poly: exponents per even-type generator; ext: sorted odd-type slots."""

    poly: tuple[int, ...]
    ext: tuple[int, ...]


class Algebra:
    """Descriptor of a graded-commutative F_p- or Z-algebra."""

    def __init__(self, gens: Iterable[tuple[str, int, str] | Generator], char: int = 0):
        if char != 0 and not is_odd_prime(char):
            raise ValueError(f"coefficient ring must be Z (char 0) or F_p, p an odd prime; got char {char}")
        self.char = char
        self.gens: tuple[Generator, ...] = tuple(
            g if isinstance(g, Generator) else Generator(g[0], g[1], g[2] in ("odd", "ext", True))
            for g in gens
        )
        names = [g.name for g in self.gens]
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator name")
        for g in self.gens:
            if g.degree < 1:
                raise ValueError(f"generator {g.name} must have positive degree")
            if g.odd != (g.degree % 2 == 1):
                kind = "odd-type" if g.odd else "even-type"
                raise ValueError(f"{kind} generator {g.name} has degree {g.degree}")
        self._pos = {g.name: i for i, g in enumerate(self.gens)}
        self.poly_gens = [i for i, g in enumerate(self.gens) if not g.odd]
        self.ext_gens = [i for i, g in enumerate(self.gens) if g.odd]
        self._poly_slot = {gi: s for s, gi in enumerate(self.poly_gens)}
        self._ext_slot = {gi: s for s, gi in enumerate(self.ext_gens)}
        self._basis_cache: dict[int, tuple[Monomial, ...]] = {}

    # -- ring plumbing -------------------------------------------------
    def normalize(self, c: int) -> int:
        return c % self.char if self.char else c

    def unit_monomial(self) -> Monomial:
        return Monomial((0,) * len(self.poly_gens), ())

    def monomial_degree(self, m: Monomial) -> int:
        d = sum(e * self.gens[self.poly_gens[i]].degree for i, e in enumerate(m.poly) if e)
        d += sum(self.gens[self.ext_gens[s]].degree for s in m.ext)
        return d

    def _sort_key(self, m: Monomial) -> tuple[int, ...]:
        # exponent vector in descriptor generator order; lex-descending on this
        # key is the documented graded-lex order within each degree.
        key = []
        for i, g in enumerate(self.gens):
            if g.odd:
                key.append(1 if self._ext_slot[i] in m.ext else 0)
            else:
                key.append(m.poly[self._poly_slot[i]])
        return tuple(key)

    # -- element constructors ------------------------------------------
    def zero(self) -> "Element":
        return Element(self, {})

    def one(self) -> "Element":
        return Element(self, {self.unit_monomial(): 1})

    def scalar(self, c: int) -> "Element":
        c = self.normalize(c)
        return Element(self, {self.unit_monomial(): c} if c else {})

    def gen(self, name: str) -> "Element":
        i = self._pos[name]
        if self.gens[i].odd:
            m = Monomial((0,) * len(self.poly_gens), (self._ext_slot[i],))
        else:
            e = [0] * len(self.poly_gens)
            e[self._poly_slot[i]] = 1
            m = Monomial(tuple(e), ())
        return Element(self, {m: 1})

    def element(self, terms: dict[Monomial, int]) -> "Element":
        out = {}
        for m, c in terms.items():
            c = self.normalize(c)
            if c:
                out[m] = c
        return Element(self, out)

    # -- graded pieces ---------------------------------------------------
    def basis(self, d: int) -> tuple[Monomial, ...]:
        """All monomials of degree d, graded-lexicographically (descending)."""
        if d < 0:
            raise ValueError("degree must be non-negative")
        if d not in self._basis_cache:
            out = []
            ext_degs = [self.gens[i].degree for i in self.ext_gens]
            poly_degs = [self.gens[i].degree for i in self.poly_gens]
            for mask in _subsets_of_degree(ext_degs, d):
                rem = d - sum(ext_degs[s] for s in mask)
                for exps in _exponents_of_degree(poly_degs, rem):
                    out.append(Monomial(exps, mask))
            out.sort(key=self._sort_key, reverse=True)
            self._basis_cache[d] = tuple(out)
        return self._basis_cache[d]

    def coords(self, e: "Element", d: int) -> list[int]:
        """Coordinates of a degree-d homogeneous element in basis(d) order."""
        for m in e.terms:
            if self.monomial_degree(m) != d:
                raise ValueError(f"element has a term of degree {self.monomial_degree(m)}, expected {d}")
        b = self.basis(d)
        index = {m: i for i, m in enumerate(b)}
        vec = [0] * len(b)
        for m, c in e.terms.items():
            vec[index[m]] = c
        return vec

    def from_coords(self, vec: Iterable[int], d: int) -> "Element":
        b = self.basis(d)
        return self.element({m: c for m, c in zip(b, vec)})

    def monomial_str(self, m: Monomial) -> str:
        parts = []
        for i, g in enumerate(self.gens):
            if g.odd:
                if self._ext_slot[i] in m.ext:
                    parts.append(g.name)
            else:
                e = m.poly[self._poly_slot[i]]
                if e == 1:
                    parts.append(g.name)
                elif e > 1:
                    parts.append(f"{g.name}^{e}")
        return "*".join(parts) if parts else "1"

    def __repr__(self):
        ring = f"F_{self.char}" if self.char else "Z"
        return f"Algebra({[g.name for g in self.gens]}, {ring})"


def _subsets_of_degree(degs: list[int], dmax: int) -> list[tuple[int, ...]]:
    """All subsets of exterior slots with total degree <= dmax."""
    subsets = [()]
    for s, dg in enumerate(degs):
        subsets += [sub + (s,) for sub in subsets if sum(degs[i] for i in sub) + dg <= dmax]
    return subsets


def _exponents_of_degree(degs: list[int], d: int) -> list[tuple[int, ...]]:
    """Exponent tuples e with sum e_i * degs_i = d."""
    if d < 0:
        return []
    if not degs:
        return [()] if d == 0 else []
    out = []

    def rec(i: int, rem: int, acc: list[int]):
        if i == len(degs) - 1:
            if rem % degs[i] == 0:
                out.append(tuple(acc + [rem // degs[i]]))
            return
        for e in range(rem // degs[i] + 1):
            rec(i + 1, rem - e * degs[i], acc + [e])

    rec(0, d, [])
    return out


def mul_monomials(alg: Algebra, m1: Monomial, m2: Monomial) -> tuple[Monomial | None, int]:
    """Product monomial and Koszul sign; (None, 0) if an exterior factor repeats."""
    if set(m1.ext) & set(m2.ext):
        return None, 0
    inv = 0
    for i in m1.ext:
        for j in m2.ext:
            if i > j:
                inv += 1
    poly = tuple(a + b for a, b in zip(m1.poly, m2.poly))
    ext = tuple(sorted(m1.ext + m2.ext))
    return Monomial(poly, ext), (-1) ** inv


class Element:
    """Finite formal sum of monomials with nonzero coefficients."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: Algebra, terms: dict[Monomial, int]):
        self.alg = alg
        self.terms = terms

    def is_zero(self) -> bool:
        return not self.terms

    def _compatible(self, other: "Element") -> bool:
        return (self.alg is other.alg
                or (self.alg.gens == other.alg.gens and self.alg.char == other.alg.char))

    def degree(self) -> int | None:
        """Degree if homogeneous (None for 0); raises on mixed elements."""
        degs = {self.alg.monomial_degree(m) for m in self.terms}
        if not degs:
            return None
        if len(degs) > 1:
            raise ValueError(f"element is not homogeneous (degrees {sorted(degs)})")
        return degs.pop()

    def is_homogeneous(self) -> bool:
        return len({self.alg.monomial_degree(m) for m in self.terms}) <= 1

    def homogeneous_component(self, d: int) -> "Element":
        return Element(self.alg, {m: c for m, c in self.terms.items()
                                  if self.alg.monomial_degree(m) == d})

    def components(self) -> dict[int, "Element"]:
        """Decomposition into homogeneous pieces, keyed by degree."""
        split: dict[int, dict[Monomial, int]] = {}
        for m, c in self.terms.items():
            split.setdefault(self.alg.monomial_degree(m), {})[m] = c
        return {d: Element(self.alg, t) for d, t in sorted(split.items())}

    def support_degrees(self) -> list[int]:
        return sorted({self.alg.monomial_degree(m) for m in self.terms})

    def _check_same(self, other: "Element"):
        if not self._compatible(other):
            raise ValueError("elements belong to different algebras")

    def __add__(self, other: "Element") -> "Element":
        self._check_same(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = self.alg.normalize(out.get(m, 0) + c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Element(self.alg, out)

    def __sub__(self, other: "Element") -> "Element":
        return self + (-other)

    def __neg__(self) -> "Element":
        return self.scale(-1)

    def scale(self, c: int) -> "Element":
        out = {}
        for m, v in self.terms.items():
            cv = self.alg.normalize(c * v)
            if cv:
                out[m] = cv
        return Element(self.alg, out)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check_same(other)
        alg = self.alg
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m, sgn = mul_monomials(alg, m1, m2)
                if m is None:
                    continue
                v = alg.normalize(out.get(m, 0) + sgn * c1 * c2)
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Element(alg, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int) -> "Element":
        if n < 0:
            raise ValueError("negative power")
        result = self.alg.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self._compatible(other) and self.terms == other.terms

    def __hash__(self):
        return hash((self.alg.gens, self.alg.char, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=self.alg._sort_key, reverse=True):
            c = self.terms[m]
            ms = self.alg.monomial_str(m)
            parts.append(ms if c == 1 and ms != "1" else (str(c) if ms == "1" else f"{c}*{ms}"))
        return " + ".join(parts)

    def __repr__(self):
        return f"<{self}>"


def make_algebra(gens, char: int = 0) -> Algebra:
    """Build a descriptor from (name, degree, 'even'|'odd') triples."""
    return Algebra(gens, char)
