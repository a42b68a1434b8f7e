"""
The Bernstein model of the affine Hecke algebra.

Elements are finite sums ``sum c_{x,w} theta_x T_w`` with ``x`` in the lattice
and ``w`` in the finite Weyl group.  Multiplication pushes every ``T_w`` to the
right of every ``theta`` with

    T_s theta_x = theta_{s(x)} T_s + (q - 1) (theta_x - theta_{s(x)}) / (1 - theta_{-a^vee})

where the quotient is the finite geometric sum returned by
``geometric_quotient``.  The coefficient ``q - 1`` is forced by
``T_s^2 = (q - 1) T_s + q``: expanding ``T_s^2 theta_x`` both ways leaves
``c (theta_x - theta_sx) T_s`` against ``(q - 1)(theta_x - theta_sx) T_s``.

Conversion to the Iwahori-Matsumoto model is the definition of
``theta_x``; conversion back goes through the simple
generators (``from_im``) or an exact linear solve (``from_im_solve``).
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Mapping, NamedTuple, Sequence

from .coeffring import LaurentScalar, ScalarFraction
from .extweyl import ExtAffElt, ext_length, translation
from .heckeim import BudgetExceeded, IMAlgebra, ImElement
from .rootdata import RootDatum, WeylElt

__all__ = [
    "BernAlgebra",
    "BernElement",
    "Verdict",
    "SolveFailed",
    "InconclusiveAfterTrials",
    "geometric_quotient",
    "bern_mul",
    "orbit_sum",
    "is_central",
    "centralizer_in_A_probe",
    "to_im",
    "from_im",
]

Q = LaurentScalar.q()
ONE = LaurentScalar(1)
CROSS_COEFF = Q - 1
Q_MINUS_ONE = Q - 1
QINV = LaurentScalar.monomial(-2)
QINV_MINUS_ONE = QINV - 1


class SolveFailed(RuntimeError):
    pass


class InconclusiveAfterTrials(RuntimeError):
    pass


class Verdict(NamedTuple):
    """Boolean outcome plus the witness that decided it (``None`` if none)."""

    ok: bool
    witness: object = None

    def __bool__(self):
        return self.ok


def _add(out: dict, key, c):
    s = out.get(key)
    s = c if s is None else s + c
    if s:
        out[key] = s
    else:
        out.pop(key, None)


def _vadd(x, y):
    return tuple(a + b for a, b in zip(x, y))


class BernAlgebra:
    """Parent object for Bernstein-model elements of one root datum.

    Holds an ``IMAlgebra`` for conversions, plus multiplication caches.
    """

    def __init__(self, rd: RootDatum, im: IMAlgebra | None = None, budget: int | None = None):
        self.rd = rd
        self.im = im if im is not None else IMAlgebra(rd, **({"budget": budget} if budget else {}))
        self.support_budget = 20000
        self._zero = (0,) * rd.dim
        self._tw_theta: dict = {}
        self._finite: dict = {}
        self._to_im: dict = {}
        self._from_im: dict = {}
        self._finite_inverse: dict = {}

    def __repr__(self):
        return f"BernAlgebra({self.rd!r})"

    # constructors

    def element(self, terms: Mapping | Iterable = ()) -> "BernElement":
        return BernElement(self, terms)

    def zero(self) -> "BernElement":
        return BernElement._from_clean(self, {})

    def one(self) -> "BernElement":
        return self.basis(self._zero, self.rd.identity)

    def basis(self, x: Sequence[int], w: WeylElt | None = None, coeff=1) -> "BernElement":
        w = self.rd.identity if w is None else w
        c = LaurentScalar(coeff) if isinstance(coeff, int) else coeff
        return BernElement(self, {(tuple(x), w): c})

    def theta(self, x: Sequence[int], coeff=1) -> "BernElement":
        return self.basis(x, None, coeff)

    def T(self, w: WeylElt) -> "BernElement":
        return self.basis(self._zero, w)

    def T_simple(self, i: int) -> "BernElement":
        return self.T(self.rd.simple_reflections[i - 1])

    # the cross relation

    def geometric_quotient(self, x: Sequence[int], i: int) -> dict:
        """``(theta_x - theta_{s_i x}) / (1 - theta_{-a_i^vee})`` as ``{lattice point: int}``.

        ``i`` is a 1-based simple index.
        """
        rd = self.rd
        cv = rd.simple_coroots[i - 1]
        n = rd.simple_pair(i - 1, x)
        out = {}
        if n >= 0:
            for k in range(n):
                out[tuple(a - k * c for a, c in zip(x, cv))] = 1
        else:
            for k in range(1, -n + 1):
                out[tuple(a + k * c for a, c in zip(x, cv))] = -1
        return out

    def _finite_product(self, w: WeylElt, u: WeylElt) -> dict:
        """``T_w T_u`` in the finite Hecke algebra, as ``{WeylElt: Laurent}``."""
        key = (w, u)
        hit = self._finite.get(key)
        if hit is not None:
            return hit
        rd = self.rd
        cur = {u: ONE}
        for i in reversed(rd.reduced_word(w)):
            s = rd.simple_reflections[i - 1]
            nxt: dict = {}
            for v, c in cur.items():
                sv = s * v
                if rd.length(sv) > rd.length(v):
                    _add(nxt, sv, c)
                else:
                    _add(nxt, sv, Q * c)
                    _add(nxt, v, Q_MINUS_ONE * c)
            cur = nxt
        self._finite[key] = cur
        return cur

    def _lmul_simple(self, i: int, terms: Mapping) -> dict:
        """``T_{s_i} * f`` for ``f`` given as ``{(x, w): c}``."""
        rd = self.rd
        s = rd.simple_reflections[i - 1]
        out: dict = {}
        for (x, u), c in terms.items():
            sx = s.act(x)
            for v, d in self._finite_product(s, u).items():
                _add(out, (sx, v), d * c)
            for y, k in self.geometric_quotient(x, i).items():
                _add(out, (y, u), CROSS_COEFF * c * k)
        return out

    def tw_theta(self, w: WeylElt, y: Sequence[int]) -> dict:
        """``T_w theta_y`` rewritten as ``{(x, u): c}``."""
        key = (w, tuple(y))
        hit = self._tw_theta.get(key)
        if hit is not None:
            return hit
        word = self.rd.reduced_word(w)
        if not word:
            res = {(tuple(y), w): ONE}
        else:
            rest = self.rd.simple_reflections[word[0] - 1] * w
            res = self._lmul_simple(word[0], self.tw_theta(rest, y))
        self._tw_theta[key] = res
        return res

    def mul(self, f: "BernElement", g: "BernElement") -> "BernElement":
        out: dict = {}
        for (x, w), c in f.terms.items():
            for (y, u), d in g.terms.items():
                cd = c * d
                for (z, v), e in self.tw_theta(w, y).items():
                    xz = _vadd(x, z)
                    for t, h in self._finite_product(v, u).items():
                        _add(out, (xz, t), e * h * cd)
            if len(out) > self.support_budget:
                raise BudgetExceeded(f"product support exceeds {self.support_budget} terms")
        return BernElement._from_clean(self, out)

    # distinguished elements

    def orbit_sum(self, x: Sequence[int]) -> "BernElement":
        out: dict = {}
        for w in self.rd.weyl_group:
            _add(out, (w.act(x), self.rd.identity), ONE)
        return BernElement._from_clean(self, out)

    def finite_inverse(self, w: WeylElt) -> "BernElement":
        """``T_w^-1`` inside the finite Hecke algebra."""
        hit = self._finite_inverse.get(w)
        if hit is None:
            rd = self.rd
            hit = self.one()
            for i in rd.reduced_word(w):
                s = rd.simple_reflections[i - 1]
                sinv = self.element({(self._zero, s): QINV, (self._zero, rd.identity): QINV_MINUS_ONE})
                hit = sinv * hit
            self._finite_inverse[w] = hit
        return hit

    def generators(self):
        """``(label, element)`` for ``T_{s_i}`` and ``theta_{b_j}``; these generate the algebra
        together with the ``theta_{-b_j}``, which are their inverses."""
        rd = self.rd
        gens = [(f"T_s{i}", self.T_simple(i)) for i in range(1, rd.rank + 1)]
        for j in range(rd.dim):
            b = tuple(int(k == j) for k in range(rd.dim))
            gens.append((f"theta_{list(b)}", self.theta(b)))
        return gens

    def is_central(self, f: "BernElement") -> Verdict:
        for label, g in self.generators():
            comm = f * g - g * f
            if comm:
                return Verdict(False, (label, comm))
        return Verdict(True)

    def centralizer_in_A_probe(self, f: "BernElement", trials: int = 8) -> Verdict:
        """Decide whether ``f`` commutes with all of ``A``, for ``f`` in or out of ``A``.

        Elements of ``A`` commute with ``A``.  Otherwise take a term ``theta_x T_w``
        with ``l(w)`` maximal and search ``y = k b_j`` with ``w(y) != y`` for a
        nonzero commutator ``[theta_y, f]``; the witness is ``(y, commutator)``.
        """
        rd = self.rd
        nonfinite = [w for (_, w) in f.terms if not w.is_identity()]
        if not nonfinite:
            return Verdict(True)
        w = max(nonfinite, key=rd.length)
        basis = [tuple(int(k == j) for k in range(rd.dim)) for j in range(rd.dim)]
        for k in range(1, trials + 1):
            for b in basis:
                for sign in (1, -1):
                    y = tuple(sign * k * c for c in b)
                    if w.act(y) == y:
                        continue
                    ty = self.theta(y)
                    comm = ty * f - f * ty
                    if comm:
                        return Verdict(False, (y, comm))
        raise InconclusiveAfterTrials(f"no separating theta_y found in {trials} trials")

    # conversions

    def to_im_basis(self, x: Sequence[int], w: WeylElt) -> ImElement:
        key = (tuple(x), w)
        hit = self._to_im.get(key)
        if hit is None:
            im = self.im
            th = im.theta(x)
            hit = th if w.is_identity() else th * im.T_finite(w)
            self._to_im[key] = hit
        return hit

    def to_im(self, f: "BernElement") -> ImElement:
        out = self.im.zero()
        for (x, w), c in f.terms.items():
            out = out + self.to_im_basis(x, w) * c
        return out

    def _dominant_coset(self, mu, w: WeylElt) -> "BernElement | None":
        """``T_(mu, w)`` when ``mu`` is dominant and ``l(t_mu) = l(mu, w) + l(w^-1)``,
        namely ``v^l(t_mu) theta_mu T_{w^-1}^-1``."""
        rd = self.rd
        if not rd.is_dominant(mu):
            return None
        lt = ext_length(rd, translation(rd, mu))
        if lt != ext_length(rd, ExtAffElt(tuple(mu), w)) + rd.length(w):
            return None
        return self.theta(mu, LaurentScalar.monomial(lt)) * self.finite_inverse(w.inverse())

    def _from_im_generator(self, i: int) -> "BernElement":
        key = ("gen", i)
        hit = self._from_im.get(key)
        if hit is None:
            if i >= 1:
                hit = self.T_simple(i)
            else:
                from .extweyl import affine_simple

                s0 = affine_simple(self.rd, 0)
                hit = self._dominant_coset(s0.x, s0.w)
                if hit is None:
                    raise SolveFailed("affine simple reflection is not of dominant-coset form")
            self._from_im[key] = hit
        return hit

    def _from_im_omega(self, omega: ExtAffElt) -> "BernElement":
        """``T_omega = T_{t_lam}^-1 T_{t_lam omega}`` with ``lam = k d0`` large enough."""
        key = ("omega", omega)
        hit = self._from_im.get(key)
        if hit is None:
            rd = self.rd
            if omega.is_identity():
                hit = self.one()
            else:
                for k in range(0, 64):
                    lam = tuple(k * c for c in rd.d0)
                    mu = _vadd(lam, omega.x)
                    cos = self._dominant_coset(mu, omega.w)
                    if cos is not None:
                        lt = ext_length(rd, translation(rd, lam))
                        hit = self.theta(tuple(-c for c in lam), LaurentScalar.monomial(-lt)) * cos
                        break
                else:
                    raise SolveFailed(f"no dominant shift found for {omega}")
            self._from_im[key] = hit
        return hit

    def from_im_basis(self, u: ExtAffElt) -> "BernElement":
        key = ("basis", u)
        hit = self._from_im.get(key)
        if hit is None:
            rw = self.im.word(u)
            hit = self._from_im_omega(rw.omega)
            for i in reversed(rw.indices):
                hit = self._from_im_generator(i) * hit
            self._from_im[key] = hit
        return hit

    def from_im(self, f: ImElement, verify: bool = True) -> "BernElement":
        out = self.zero()
        for u, c in f.terms.items():
            out = out + self.from_im_basis(u) * c
        if verify and self.to_im(out) != f:
            raise SolveFailed("Bernstein expansion failed the round-trip check")
        return out

    def from_im_solve(self, f: ImElement, radius: int = 1, max_radius: int = 4) -> "BernElement":
        """Bernstein expansion by an exact linear solve over candidate boxes that
        grow until the system becomes consistent."""
        from .linalg import solve_laurent

        rd = self.rd
        if not f.terms:
            return self.zero()
        xs = [u.x for u in f.terms]
        lo = [min(x[j] for x in xs) for j in range(rd.dim)]
        hi = [max(x[j] for x in xs) for j in range(rd.dim)]
        for r in range(radius, max_radius + 1):
            cands = [
                (x, w)
                for x in product(*(range(lo[j] - r, hi[j] + r + 1) for j in range(rd.dim)))
                for w in rd.weyl_group
            ]
            cols = [self.to_im_basis(x, w).terms for x, w in cands]
            sol = solve_laurent(cols, f.terms)
            if sol is None:
                continue
            terms = {}
            for key, c in zip(cands, sol):
                if not c:
                    continue
                lc = c.as_laurent()
                if lc is None:
                    raise SolveFailed(f"non-Laurent coefficient {c!r}")
                terms[key] = lc
            out = BernElement(self, terms)
            if self.to_im(out) != f:
                raise SolveFailed("linear solve failed the round-trip check")
            return out
        raise SolveFailed(f"no Bernstein expansion found within radius {max_radius}")


class BernElement:
    """A finite sum ``sum c theta_x T_w``; ``terms`` maps ``(x, w)`` to a scalar.

    Scalars are ``LaurentScalar`` in the algebra proper; ``ScalarFraction`` is
    allowed for elements such as ``z * 1_K``.
    """

    __slots__ = ("alg", "terms")

    def __init__(self, alg: BernAlgebra, terms: Mapping | Iterable = ()):
        self.alg = alg
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict = {}
        for (x, w), c in items:
            c = LaurentScalar(c) if isinstance(c, int) else c
            _add(out, (tuple(x), w), c)
        self.terms = out

    @classmethod
    def _from_clean(cls, alg, terms: dict) -> "BernElement":
        obj = cls.__new__(cls)
        obj.alg = alg
        obj.terms = terms
        return obj

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, x: Sequence[int], w: WeylElt | None = None):
        w = self.alg.rd.identity if w is None else w
        return self.terms.get((tuple(x), w), LaurentScalar(0))

    def in_A(self) -> bool:
        return all(w.is_identity() for (_, w) in self.terms)

    def __add__(self, other: "BernElement") -> "BernElement":
        out = dict(self.terms)
        for k, c in other.terms.items():
            _add(out, k, c)
        return BernElement._from_clean(self.alg, out)

    def __neg__(self):
        return BernElement._from_clean(self.alg, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def _scale(self, s):
        out = {}
        for k, c in self.terms.items():
            p = c * s
            if p:
                out[k] = p
        return BernElement._from_clean(self.alg, out)

    def __mul__(self, other):
        if isinstance(other, BernElement):
            return self.alg.mul(self, other)
        if isinstance(other, (int, LaurentScalar, ScalarFraction)):
            return self._scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentScalar, ScalarFraction)):
            return self._scale(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, BernElement):
            return NotImplemented
        keys = set(self.terms) | set(other.terms)
        return all(self.terms.get(k, 0) == other.terms.get(k, 0) for k in keys)

    __hash__ = None

    def __repr__(self):
        if not self.terms:
            return "0"
        rd = self.alg.rd
        parts = []
        for (x, w) in sorted(self.terms, key=lambda k: (k[0], rd.reduced_word(k[1]))):
            parts.append(f"({self.terms[(x, w)]!r})*theta{list(x)}*T{list(rd.reduced_word(w))}")
        return " + ".join(parts)


def geometric_quotient(alg: BernAlgebra, x: Sequence[int], i: int) -> BernElement:
    return BernElement(alg, {(y, alg.rd.identity): k for y, k in alg.geometric_quotient(x, i).items()})


def bern_mul(f: BernElement, g: BernElement) -> BernElement:
    return f.alg.mul(f, g)


def orbit_sum(alg: BernAlgebra, x: Sequence[int]) -> BernElement:
    return alg.orbit_sum(x)


def is_central(f: BernElement) -> Verdict:
    return f.alg.is_central(f)


def centralizer_in_A_probe(f: BernElement, trials: int = 8) -> Verdict:
    return f.alg.centralizer_in_A_probe(f, trials)


def to_im(f: BernElement) -> ImElement:
    return f.alg.to_im(f)


def from_im(alg: BernAlgebra, f: ImElement, verify: bool = True) -> BernElement:
    return alg.from_im(f, verify)
