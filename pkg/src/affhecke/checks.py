"""
Property suites behind ``affhecke check``.

Each suite walks a small grid of test points and raises ``CheckFailed`` at the
first violation, carrying a JSON-serializable witness.  On success it returns
the number of properties verified.
"""

from __future__ import annotations

import random
from itertools import product
from typing import Callable

from .coeffring import LaurentScalar
from .extweyl import ExtAffElt, affine_simple, ext_length, from_word, reduced_word, translation
from .heckebern import BernAlgebra
from .heckeim import IMAlgebra
from .io import element_to_json, ext_to_json, groupalg_to_json
from .rootdata import RootDatum
from .satake import (
    GroupAlgElement,
    center_exhaustion,
    center_map_Z,
    e_K_and_poincare,
    orbit_monomial_sum,
    sat_transform,
    satake_spherical,
    w_invariance_check,
)

__all__ = ["CheckFailed", "SUITES", "run_suite", "make_algebras", "small_dominant"]

Q = LaurentScalar.q()


class CheckFailed(AssertionError):
    def __init__(self, suite: str, prop: str, witness: dict):
        super().__init__(f"{suite}: {prop}")
        self.suite = suite
        self.prop = prop
        self.witness = witness

    def to_json(self) -> dict:
        return {"suite": self.suite, "property": self.prop, "witness": self.witness}


def make_algebras(rd: RootDatum, budget: int = 40, quadratic=None) -> tuple[IMAlgebra, BernAlgebra]:
    im = IMAlgebra(rd, budget=budget, quadratic=quadratic)
    return im, BernAlgebra(rd, im=im)


class _Ctx:
    def __init__(self, suite, rd, im, bern, q0, seed):
        self.suite, self.rd, self.im, self.bern, self.q0 = suite, rd, im, bern, q0
        self.rng = random.Random(seed)
        self.count = 0

    def expect(self, ok: bool, prop: str, **witness):
        if not ok:
            raise CheckFailed(self.suite, prop, {k: _jsonable(self.rd, v) for k, v in witness.items()})
        self.count += 1

    def box(self, lo, hi):
        return list(product(range(lo, hi + 1), repeat=self.rd.dim))


def _jsonable(rd, v):
    if isinstance(v, ExtAffElt):
        return ext_to_json(rd, v)
    if hasattr(v, "alg") and hasattr(v, "terms"):
        return element_to_json(v)
    if hasattr(v, "rd") and hasattr(v, "terms"):
        return groupalg_to_json(v)
    if isinstance(v, LaurentScalar):
        return v.to_json()
    if isinstance(v, tuple):
        return list(v)
    return v


def small_dominant(rd: RootDatum, n: int) -> list[tuple]:
    """The ``n`` nonzero dominant lattice points of least ``rho`` (ties broken lexicographically)."""
    r = 1
    while True:
        pts = [x for x in product(range(r + 1), repeat=rd.dim) if any(x) and rd.is_dominant(x)]
        if len(pts) >= n:
            return sorted(pts, key=lambda x: (rd.rho_pair(x), x))[:n]
        r += 1


def _sample_elements(ctx: _Ctx, n: int, radius: int = 1) -> list[ExtAffElt]:
    rd = ctx.rd
    pts = ctx.box(-radius, radius)
    return [ExtAffElt(ctx.rng.choice(pts), ctx.rng.choice(rd.weyl_group)) for _ in range(n)]


def _lengths(ctx: _Ctx):
    rd = ctx.rd
    for x in ctx.box(0, 3):
        if rd.is_dominant(x):
            ctx.expect(ext_length(rd, translation(rd, x)) == rd.rho_pair(x), "l(x) = rho(x) for dominant x", x=x)
    dom = [x for x in ctx.box(0, 2) if rd.is_dominant(x)]
    for x in dom:
        for y in dom:
            s = tuple(a + b for a, b in zip(x, y))
            ctx.expect(
                ext_length(rd, translation(rd, s)) == ext_length(rd, translation(rd, x)) + ext_length(rd, translation(rd, y)),
                "length additive on dominant translations", x=x, y=y,
            )
    simples = [affine_simple(rd, i) for i in range(rd.rank + 1)]
    for x in ctx.box(-2, 2):
        for w in rd.weyl_group:
            u = ExtAffElt(x, w)
            n = ext_length(rd, u)
            for i, s in enumerate(simples):
                ctx.expect(abs(ext_length(rd, u * s) - n) == 1, "l(u s_i) = l(u) +- 1", u=u, i=i)
            rw = reduced_word(rd, u)
            ctx.expect(len(rw.indices) == n and from_word(rd, rw.indices, rw.omega) == u, "reduced word", u=u)


def _im(ctx: _Ctx):
    rd, im = ctx.rd, ctx.im
    for i in range(rd.rank + 1):
        s = im.T_simple(i)
        ctx.expect(s * s == s * (Q - 1) + im.one() * Q, "quadratic relation T_s^2 = (q-1) T_s + q", i=i, got=s * s)
        ctx.expect(s * im.inverse_basis(affine_simple(rd, i)) == im.one(), "T_s T_s^-1 = 1", i=i)
    for _ in range(15):
        a, b, c = _sample_elements(ctx, 3)
        ta, tb, tc = im.T(a), im.T(b), im.T(c)
        ctx.expect((ta * tb) * tc == ta * (tb * tc), "associativity", a=a, b=b, c=c)
    for a in _sample_elements(ctx, 12):
        for b in _sample_elements(ctx, 4):
            adds = ext_length(rd, a) + ext_length(rd, b) == ext_length(rd, a * b)
            collapses = im.T(a) * im.T(b) == im.T(a * b)
            ctx.expect(adds == collapses, "T_u T_v = T_uv iff lengths add", u=a, v=b)
    dom = [x for x in ctx.box(0, 2) if rd.is_dominant(x)]
    for x in dom:
        for y in dom:
            s = tuple(a + b for a, b in zip(x, y))
            ctx.expect(im.T_translation(x) * im.T_translation(y) == im.T_translation(s), "T_x T_y = T_{x+y} dominant", x=x, y=y)
    pts = ctx.box(-1, 1)
    for x in pts:
        for y in pts:
            s = tuple(a + b for a, b in zip(x, y))
            ctx.expect(im.theta(x) * im.theta(y) == im.theta(s), "theta multiplicative", x=x, y=y)
    shifts = small_dominant(rd, 2)
    for x in ctx.box(-2, 2):
        y, z = rd.decompose_minimal(x)
        ref = im.theta(x)
        for d in shifts:
            yd = tuple(a + b for a, b in zip(y, d))
            zd = tuple(a + b for a, b in zip(z, d))
            ctx.expect(im.theta_from(yd, zd) == ref, "theta independent of decomposition", x=x, shift=d)


def _bern(ctx: _Ctx):
    rd, B = ctx.rd, ctx.bern
    pts = ctx.box(-1, 1)
    for i in range(1, rd.rank + 1):
        s = B.T_simple(i)
        ctx.expect(s * s == s * (Q - 1) + B.one() * Q, "finite quadratic relation", i=i)
    for _ in range(12):
        x, y = ctx.rng.choice(pts), ctx.rng.choice(pts)
        w, u = ctx.rng.choice(rd.weyl_group), ctx.rng.choice(rd.weyl_group)
        f, g = B.basis(x, w), B.basis(y, u)
        ctx.expect(B.to_im(f * g) == B.to_im(f) * B.to_im(g), "to_im is multiplicative", f=f, g=g)
    for x in pts:
        for w in rd.weyl_group:
            f = B.basis(x, w)
            ctx.expect(B.from_im(B.to_im(f), verify=False) == f, "from_im(to_im(f)) = f", f=f)
    for x in ctx.box(-2, 2):
        for i in range(1, rd.rank + 1):
            sx = rd.simple_reflections[i - 1].act(x)
            f = B.theta(x) + B.theta(sx)
            s = B.T_simple(i)
            ctx.expect(s * f == f * s, "T_s commutes with theta_x + theta_{s x}", x=x, i=i)


def _cross(ctx: _Ctx, radius: int = 3):
    rd, B, im = ctx.rd, ctx.bern, ctx.im
    for x in ctx.box(-radius, radius):
        for i in range(1, rd.rank + 1):
            s = im.T_simple(i)
            sx = rd.simple_reflections[i - 1].act(x)
            lhs = s * im.theta(x) - im.theta(sx) * s
            quot = B.element({(y, rd.identity): c for y, c in B.geometric_quotient(x, i).items()})
            rhs = B.to_im(quot) * (Q - 1)
            ctx.expect(lhs == rhs, "T_s theta_x - theta_{s x} T_s = (q-1) quotient", x=x, i=i, lhs=lhs, rhs=rhs)


def _satake(ctx: _Ctx):
    rd, B = ctx.rd, ctx.bern
    eK, WK = e_K_and_poincare(B)
    for i in range(1, rd.rank + 1):
        s = B.T_simple(i)
        ctx.expect(s * eK == eK * Q and eK * s == eK * Q, "T_s e_K = e_K T_s = q e_K", i=i)
    for x in ctx.box(-1, 1):
        img = sat_transform(B.theta(x) * eK) / WK
        ctx.expect(img == GroupAlgElement.monomial(rd, x), "S(theta_x 1_K) = [x]", x=x, got=img)
    lams = [x for x in ctx.box(0, 1) if rd.is_dominant(x)]
    sats = {lam: satake_spherical(B, lam) for lam in lams}
    for lam, g in sats.items():
        ctx.expect(w_invariance_check(g), "S(c_lambda) is W-invariant", lam=lam, got=g)
    im = B.im
    for lam in lams:
        for mu in lams:
            prod_ = B.from_im(im.spherical_indicator(lam) * im.spherical_indicator(mu))
            ctx.expect(sat_transform(prod_) == sats[lam] * sats[mu], "Satake is multiplicative", lam=lam, mu=mu)


def _center(ctx: _Ctx, radius: int = 2):
    rd, B = ctx.rd, ctx.bern
    inbox = set(ctx.box(-radius, radius))
    seen = set()
    for x in sorted(inbox):
        orb = tuple(sorted(rd.orbit(x)))
        if orb in seen or not all(y in inbox for y in orb):
            continue
        seen.add(orb)
        z = B.orbit_sum(x)
        verdict = B.is_central(z)
        ctx.expect(bool(verdict), "orbit sums are central", x=x)
        ctx.expect(sat_transform(center_map_Z(z)) == orbit_monomial_sum(rd, x), "S(Z(orbit sum)) = sum [w x]", x=x)
    kdim, norb = center_exhaustion(B, radius, ctx.q0)
    ctx.expect(kdim == norb, "central elements in the box are spanned by orbit sums",
               q0=ctx.q0, radius=radius, kernel_dim=kdim, orbits=norb)


SUITES: dict[str, Callable] = {
    "lengths": _lengths,
    "im": _im,
    "bern": _bern,
    "cross": _cross,
    "satake": _satake,
    "center": _center,
}


def run_suite(name: str, rd: RootDatum, im: IMAlgebra | None = None, bern: BernAlgebra | None = None,
              q0=2, seed: int = 0) -> int:
    if name not in SUITES:
        raise KeyError(name)
    if im is None:
        im, bern = make_algebras(rd)
    elif bern is None:
        bern = BernAlgebra(rd, im=im)
    ctx = _Ctx(name, rd, im, bern, q0, seed)
    SUITES[name](ctx)
    return ctx.count
