"""
Spherical side: ``e_K``, the Poincare polynomial ``[K:I]``, the Satake map on
``H_I * 1_K``, the center map ``z -> z * 1_K`` and the group algebra of ``X``.

With ``T_w * 1_K = q^l(w) 1_K`` and ``S(theta_x * 1_K) = [x]``, the Satake map of
an element written in the Bernstein basis is

    S(sum c_{x,w} theta_x T_w) = sum c_{x,w} q^l(w) [x].
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Mapping, Sequence

from .coeffring import LaurentScalar, ScalarFraction, as_fraction
from .heckebern import BernAlgebra, BernElement
from .linalg import PRIME, kernel_dim_mod_p, rank_exact
from .rootdata import RootDatum

__all__ = [
    "GroupAlgElement",
    "e_K_and_poincare",
    "sat_transform",
    "satake_spherical",
    "center_map_Z",
    "w_invariance_check",
    "group_alg_mul",
    "orbit_monomial_sum",
    "center_exhaustion",
]


class GroupAlgElement:
    """``sum c_x [x]`` in the group algebra of ``X``, coefficients ``ScalarFraction``."""

    __slots__ = ("rd", "terms")

    def __init__(self, rd: RootDatum, terms: Mapping | Iterable = ()):
        self.rd = rd
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict = {}
        for x, c in items:
            x = tuple(x)
            c = as_fraction(c)
            s = out[x] + c if x in out else c
            if s:
                out[x] = s
            else:
                out.pop(x, None)
        self.terms = out

    @classmethod
    def monomial(cls, rd: RootDatum, x: Sequence[int], c=1) -> "GroupAlgElement":
        return cls(rd, {tuple(x): c})

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, x: Sequence[int]) -> ScalarFraction:
        return self.terms.get(tuple(x), ScalarFraction(0))

    def __add__(self, other: "GroupAlgElement") -> "GroupAlgElement":
        return GroupAlgElement(self.rd, list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return GroupAlgElement(self.rd, {x: -c for x, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, GroupAlgElement):
            return group_alg_mul(self, other)
        if isinstance(other, (int, LaurentScalar, ScalarFraction)):
            return GroupAlgElement(self.rd, {x: c * other for x, c in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentScalar, ScalarFraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        return GroupAlgElement(self.rd, {x: c / other for x, c in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, GroupAlgElement):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        return all(self.coefficient(k) == other.coefficient(k) for k in keys)

    __hash__ = None

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({self.terms[x]!r})[{list(x)}]" for x in sorted(self.terms))


def group_alg_mul(g: GroupAlgElement, h: GroupAlgElement) -> GroupAlgElement:
    out = []
    for x, c in g.terms.items():
        for y, d in h.terms.items():
            out.append((tuple(a + b for a, b in zip(x, y)), c * d))
    return GroupAlgElement(g.rd, out)


def w_invariance_check(g: GroupAlgElement) -> bool:
    """True iff the coefficients are constant on every W-orbit."""
    rd = g.rd
    for x, c in g.terms.items():
        for y in rd.orbit(x):
            if g.coefficient(y) != c:
                return False
    return True


def orbit_monomial_sum(rd: RootDatum, x: Sequence[int]) -> GroupAlgElement:
    """``sum_{w in W} [w(x)]``, with multiplicity."""
    return GroupAlgElement(rd, [(w.act(x), 1) for w in rd.weyl_group])


def e_K_and_poincare(B: BernAlgebra) -> tuple[BernElement, LaurentScalar]:
    rd = B.rd
    eK = B.element({((0,) * rd.dim, w): 1 for w in rd.weyl_group})
    WK = LaurentScalar(0)
    for w in rd.weyl_group:
        WK = WK + LaurentScalar.monomial(2 * rd.length(w))
    return eK, WK


def sat_transform(f: BernElement) -> GroupAlgElement:
    rd = f.alg.rd
    out = []
    for (x, w), c in f.terms.items():
        out.append((x, c * LaurentScalar.monomial(2 * rd.length(w))))
    return GroupAlgElement(rd, out)


def satake_spherical(B: BernAlgebra, lam: Sequence[int]) -> GroupAlgElement:
    """Satake transform of the characteristic function of ``K t_lam K``."""
    c_lam = B.im.spherical_indicator(lam)
    return sat_transform(B.from_im(c_lam))


def center_map_Z(z: BernElement) -> BernElement:
    """``z * 1_K = (z * e_K) / [K:I]``, with ``ScalarFraction`` coefficients."""
    eK, WK = e_K_and_poincare(z.alg)
    inv = ScalarFraction(1, WK)
    return (z * eK) * inv


def center_exhaustion(B: BernAlgebra, radius: int, q0: int, exact: bool = True) -> tuple[int, int]:
    """Compare the space of central elements supported in the box
    ``[-radius, radius]^d`` (all ``w``) at ``q = q0`` with the span of the
    orbit sums whose orbits fit in the box.

    Returns ``(dim of central subspace, number of box-contained W-orbits)``.
    With ``exact=False`` the first number is the kernel dimension over
    ``GF(p)``, an upper bound for the rational one.
    """
    rd = B.rd
    box = list(product(range(-radius, radius + 1), repeat=rd.dim))
    gens = B.generators()
    columns = []
    for x in box:
        for w in rd.weyl_group:
            f = B.basis(x, w)
            col = {}
            for label, g in gens:
                for key, c in (f * g - g * f).terms.items():
                    col[(label, key)] = c
            columns.append(col)
    if exact:
        kdim = len(columns) - rank_exact(columns, q0)
    else:
        kdim = kernel_dim_mod_p(columns, q0, PRIME)
    inbox = set(box)
    orbits = {tuple(sorted(rd.orbit(x))) for x in box}
    n_orbits = sum(1 for o in orbits if all(y in inbox for y in o))
    return kdim, n_orbits
