"""Finite matrix-group actions on the Gamma model and modular invariants.

A 2x2 matrix g over F_p acts on each block pair by the column convention
(image of the j-th basis generator reads down the j-th column), the same
matrix acting simultaneously on (xi, eta) and (a, b).  Invariant subspaces
come from the nullspace of stacked (g - id) matrices on a graded piece;
modular invariant theory forbids averaging, so no Reynolds operator
appears anywhere.
"""

from __future__ import annotations

from . import linalg
from .algebra import Element, is_odd_prime
from .reports import ReportBuilder, VerdictReport
from .topology import GammaModel, gamma_model, _element_witness

Matrix2 = tuple[tuple[int, int], tuple[int, int]]


def sl2_generators(p: int) -> list[Matrix2]:
    """The two standard generators of SL_2(F_p)."""
    return [((1, 1), (0, 1)), ((0, (-1) % p), (1, 0))]


def mat_mul2(a: Matrix2, b: Matrix2, p: int) -> Matrix2:
    return (
        ((a[0][0] * b[0][0] + a[0][1] * b[1][0]) % p,
         (a[0][0] * b[0][1] + a[0][1] * b[1][1]) % p),
        ((a[1][0] * b[0][0] + a[1][1] * b[1][0]) % p,
         (a[1][0] * b[0][1] + a[1][1] * b[1][1]) % p),
    )


def det2(g: Matrix2, p: int) -> int:
    return (g[0][0] * g[1][1] - g[0][1] * g[1][0]) % p


def generate_group(gens: list[Matrix2], p: int) -> list[Matrix2]:
    """Closure of the generators under multiplication, breadth-first."""
    for g in gens:
        if det2(g, p) == 0:
            raise ValueError(f"non-invertible generator {g}")
    identity: Matrix2 = ((1, 0), (0, 1))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                prod = mat_mul2(h, g, p)
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
        frontier = nxt
    return sorted(seen)


class GroupAction:
    """A matrix group acting block-diagonally on a Gamma model."""

    def __init__(self, p: int, gens: list[Matrix2] | None = None, blocks: int = 1,
                 require_sl2: bool = True):
        if not is_odd_prime(p):
            raise ValueError("p must be an odd prime")
        self.p = p
        self.model: GammaModel = gamma_model(p, blocks)
        self.gens = [tuple(tuple(x % p for x in row) for row in g)
                     for g in (gens if gens is not None else sl2_generators(p))]
        if require_sl2:
            for g in self.gens:
                if det2(g, p) != 1:
                    raise ValueError(f"generator {g} has determinant != 1")
        self._group: list[Matrix2] | None = None
        self._images: dict[Matrix2, dict[str, Element]] = {}

    def group(self) -> list[Matrix2]:
        if self._group is None:
            self._group = generate_group(self.gens, self.p)
        return self._group

    def _gen_images(self, g: Matrix2) -> dict[str, Element]:
        imgs = self._images.get(g)
        if imgs is None:
            m = self.model
            imgs = {}
            for j in range(1, m.blocks + 1):
                suffix = "" if m.blocks == 1 else str(j)
                xi, eta = m.xi(j), m.eta(j)
                a, b = m.a(j), m.b(j)
                imgs[f"xi{suffix}"] = xi * g[0][0] + eta * g[1][0]
                imgs[f"eta{suffix}"] = xi * g[0][1] + eta * g[1][1]
                imgs[f"a{suffix}"] = a * g[0][0] + b * g[1][0]
                imgs[f"b{suffix}"] = a * g[0][1] + b * g[1][1]
            self._images[g] = imgs
        return imgs

    def act(self, g: Matrix2, e: Element) -> Element:
        """Algebra homomorphism induced by the linear substitution."""
        if e.alg is not self.model.alg:
            raise ValueError("element does not live in this action's algebra")
        imgs = self._gen_images(tuple(tuple(x % self.p for x in row) for row in g))
        alg = self.model.alg
        out = alg.zero()
        for mon, c in e.terms.items():
            term = alg.scalar(c)
            for i, gen in enumerate(alg.gens):
                if gen.odd:
                    if alg._ext_slot[i] in mon.ext:
                        term = term * imgs[gen.name]
                else:
                    exp = mon.poly[alg._poly_slot[i]]
                    if exp:
                        term = term * imgs[gen.name] ** exp
            out = out + term
        return out

    def fixed_by_all(self, e: Element, whole_group: bool = False) -> bool:
        mats = self.group() if whole_group else self.gens
        return all(self.act(g, e) == e for g in mats)

    def matrix_on_degree(self, g: Matrix2, d: int) -> list[list[int]]:
        """Matrix of act(g, .) on basis(d), columns indexed by source monomials."""
        alg = self.model.alg
        basis = alg.basis(d)
        cols = [alg.coords(self.act(g, alg.element({m: 1})), d) for m in basis]
        return [[cols[c][r] for c in range(len(basis))] for r in range(len(basis))]


class InvariantBasis:
    def __init__(self, degree: int, basis: list[Element]):
        self.degree = degree
        self.basis = basis

    def __len__(self):
        return len(self.basis)


def invariant_subspace(action: GroupAction, d: int) -> InvariantBasis:
    """Common fixed space of the generators in degree d (hence of the group)."""
    alg = action.model.alg
    basis = alg.basis(d)
    if not basis:
        return InvariantBasis(d, [])
    stacked: list[list[int]] = []
    for g in action.gens:
        mg = action.matrix_on_degree(g, d)
        for r in range(len(basis)):
            row = mg[r][:]
            row[r] = (row[r] - 1) % action.p
            stacked.append(row)
    null = linalg.nullspace_mod(stacked, action.p)
    return InvariantBasis(d, [alg.from_coords(v, d) for v in null])


def dickson_elements(p: int) -> tuple[Element, Element]:
    """The two fundamental polynomial invariants f and h of the SL_2 action."""
    if not is_odd_prime(p):
        raise ValueError("p must be an odd prime")
    m = gamma_model(p, 1)
    xi, eta = m.xi(), m.eta()
    f = xi ** p * eta - eta ** p * xi
    h = xi ** (p * p - p) + eta ** (p - 1) * (xi ** (p - 1) - eta ** (p - 1)) ** (p - 1)
    return f, h


def mui_elements(p: int) -> tuple[Element, Element, Element, Element, Element]:
    """(s, y, z, w, e): the exterior-side invariants of degrees 3, 2, 2p+1, 2p^2+1, 2p^2+2."""
    if not is_odd_prime(p):
        raise ValueError("p must be an odd prime")
    m = gamma_model(p, 1)
    xi, eta, a, b = m.xi(), m.eta(), m.a(), m.b()
    s = xi * b - eta * a
    y = a * b
    z = xi ** p * b - eta ** p * a
    w = xi ** (p * p) * b - eta ** (p * p) * a
    e = xi ** (p * p) * eta - eta ** (p * p) * xi
    return s, y, z, w, e


def _span_dim(alg, elems: list[Element], d: int, p: int) -> int:
    rows = [alg.coords(e, d) for e in elems if not e.is_zero()]
    return linalg.rank_mod(rows, p) if rows else 0


def _graded_products(p: int, d: int, gens_with_degrees: list[tuple[Element, int, int]]) -> list[Element]:
    """All products prod g_i^{e_i} of total degree d; e_i <= cap_i."""
    out: list[Element] = []

    def rec(i: int, rem: int, acc: Element):
        if i == len(gens_with_degrees):
            if rem == 0:
                out.append(acc)
            return
        g, deg, cap = gens_with_degrees[i]
        e = 0
        while e <= cap and e * deg <= rem:
            rec(i + 1, rem - e * deg, acc if e == 0 else acc * g ** e)
            e += 1

    alg = gens_with_degrees[0][0].alg
    rec(0, d, alg.one())
    return out


def verify_mui_presentation(p: int, dmax: int = 40) -> VerdictReport:
    """Generator invariance, the three relations, and degreewise dimensions.

    PASS iff f, h, s, y, z are fixed by every group element, ys = yz =
    fy + sz = 0, and in every degree d <= dmax the span of products of
    {f, h, s, y, z} has the dimension of the full invariant subspace.
    """
    rb = ReportBuilder("verify-mui", {"p": p, "max_degree": dmax})
    if not is_odd_prime(p):
        return rb.precondition(f"p = {p} is not an odd prime")
    if dmax < 2 * p * p - 2 * p:
        return rb.precondition(f"max degree {dmax} too small to see h (degree {2 * p * p - 2 * p})")
    action = GroupAction(p)
    alg = action.model.alg
    group = action.group()
    rb.record(len(group) == p * (p * p - 1), order=len(group),
              check="group order p(p^2-1)")
    f, h = dickson_elements(p)
    s, y, z, w, e = mui_elements(p)
    for name, elem in [("f", f), ("h", h), ("s", s), ("y", y), ("z", z)]:
        bad = next((g for g in group if action.act(g, elem) != elem), None)
        rb.record(bad is None, counterexample={"generator": name, "matrix": bad},
                  check=f"{name} invariant under all {len(group)} elements")
    for label, rel in [("ys", y * s), ("yz", y * z), ("fy+sz", f * y + s * z)]:
        rb.record(rel.is_zero(), counterexample=_element_witness(rel),
                  check=f"relation {label} = 0")
    gens_degs = [(f, 2 * p + 2, dmax), (h, 2 * p * p - 2 * p, dmax),
                 (s, 3, 1), (y, 2, 1), (z, 2 * p + 1, 1)]
    for d in range(0, dmax + 1):
        inv_dim = len(invariant_subspace(action, d))
        prod_dim = _span_dim(alg, _graded_products(p, d, gens_degs), d, p)
        rb.record(inv_dim == prod_dim, d=d, invariant_dim=inv_dim, product_dim=prod_dim)
    return rb.finish()


def verify_vistoli_integral(p: int, dmax: int = 24) -> VerdictReport:
    """Fixed subspace of the integral-image subring versus products of {f, h, s}.

    The mod-p shadow of the integral classes is spanned by polynomials in
    xi, eta together with s times such polynomials; its intersection with
    the full invariant subspace must be spanned by products f^a h^b s^e.
    """
    rb = ReportBuilder("verify-vistoli", {"p": p, "max_degree": dmax})
    if not is_odd_prime(p):
        return rb.precondition(f"p = {p} is not an odd prime")
    action = GroupAction(p)
    alg = action.model.alg
    f, h = dickson_elements(p)
    s = mui_elements(p)[0]
    for name, elem in [("f", f), ("h", h), ("s", s)]:
        rb.record(action.fixed_by_all(elem, whole_group=True),
                  check=f"{name} invariant")
    xi, eta = action.model.xi(), action.model.eta()
    gens_degs = [(f, 2 * p + 2, dmax), (h, 2 * p * p - 2 * p, dmax), (s, 3, 1)]
    for d in range(0, dmax + 1):
        integral_rows = []
        for i in range(0, d // 2 + 1):
            if 2 * i <= d and (d - 2 * i) % 2 == 0:
                j = (d - 2 * i) // 2
                integral_rows.append(alg.coords(xi ** i * eta ** j, d))
        if d >= 3:
            for i in range(0, (d - 3) // 2 + 1):
                rem = d - 3 - 2 * i
                if rem % 2 == 0:
                    integral_rows.append(alg.coords(s * xi ** i * eta ** (rem // 2), d))
        inv_rows = [alg.coords(v, d) for v in invariant_subspace(action, d).basis]
        ri = linalg.rank_mod(integral_rows, p) if integral_rows else 0
        rw = linalg.rank_mod(inv_rows, p) if inv_rows else 0
        runion = linalg.rank_mod(integral_rows + inv_rows, p) if integral_rows + inv_rows else 0
        meet_dim = ri + rw - runion
        prod_dim = _span_dim(alg, _graded_products(p, d, gens_degs), d, p)
        rb.record(meet_dim == prod_dim, d=d, fixed_integral_dim=meet_dim, product_dim=prod_dim)
    return rb.finish()
