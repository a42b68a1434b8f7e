"""
The Iwahori-Matsumoto model of the affine Hecke algebra.

Elements are finite sums ``sum c_u T_u`` over the extended affine Weyl group
with coefficients in ``Z[v, 1/v]`` (``q = v^2``).  Products are computed by
factoring one side into simple reflections and a length-zero element and
applying

    T_u T_s = T_us                       if l(us) > l(u)
    T_u T_s = q T_us + (q - 1) T_u       otherwise
    T_u T_omega = T_{u omega}

(and the mirror rules for left multiplication).
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .coeffring import LaurentScalar
from .extweyl import ExtAffElt, affine_simple, ext_length, reduced_word, translation
from .rootdata import RootDatum

__all__ = [
    "BudgetExceeded",
    "NotDominant",
    "IMAlgebra",
    "ImElement",
    "im_mul",
    "im_inverse_basis",
    "theta_im",
    "spherical_indicator",
]

Q = LaurentScalar.q()
ONE = LaurentScalar(1)


class BudgetExceeded(RuntimeError):
    """A basis element longer than the support budget had to be expanded."""


class NotDominant(ValueError):
    pass


# Raw form used inside the multiplication loops: key -> {exponent: coeff}.


def _acc(out: dict, key, poly: Mapping[int, int], scalar: Mapping[int, int] | None = None):
    tgt = out.get(key)
    if tgt is None:
        tgt = out[key] = {}
    if scalar is None:
        for e, c in poly.items():
            tgt[e] = tgt.get(e, 0) + c
    else:
        for e, c in poly.items():
            for f, d in scalar.items():
                k = e + f
                tgt[k] = tgt.get(k, 0) + c * d


def _clean(raw: dict) -> dict:
    out = {}
    for key, poly in raw.items():
        p = {e: c for e, c in poly.items() if c}
        if p:
            out[key] = LaurentScalar._raw(p)
    return out


def _to_raw(terms: Mapping) -> dict:
    return {k: dict(c.items()) for k, c in terms.items()}


class IMAlgebra:
    """Parent object: the root datum, the multiplication rules and caches.

    ``quadratic`` overrides ``(a, b)`` in ``T_s^2 = a T_s + b`` and exists only
    for fault-injection tests; leave it alone otherwise.
    """

    def __init__(self, rd: RootDatum, budget: int = 40, quadratic=None):
        if budget < 1:
            raise ValueError("budget must be >= 1")
        self.rd = rd
        self.budget = budget
        a, b = quadratic if quadratic is not None else (Q - 1, Q)
        self._desc_same = dict(LaurentScalar(a).items()) if isinstance(a, int) else dict(a.items())
        self._desc_other = dict(LaurentScalar(b).items()) if isinstance(b, int) else dict(b.items())
        self._simples = [affine_simple(rd, i) for i in range(rd.rank + 1)]
        self._rmul_cache: dict = {}
        self._lmul_cache: dict = {}
        self._theta: dict = {}
        self.one_key = ExtAffElt((0,) * rd.dim, rd.identity)

    def __repr__(self):
        return f"IMAlgebra({self.rd!r})"

    # constructors

    def element(self, terms: Mapping | Iterable = ()) -> "ImElement":
        return ImElement(self, terms)

    def zero(self) -> "ImElement":
        return ImElement(self, {})

    def one(self) -> "ImElement":
        return self.T(self.one_key)

    def T(self, u: ExtAffElt, coeff=1) -> "ImElement":
        return ImElement(self, {u: LaurentScalar(coeff) if isinstance(coeff, int) else coeff})

    def T_simple(self, i: int) -> "ImElement":
        return self.T(self._simples[i])

    def T_finite(self, w) -> "ImElement":
        return self.T(ExtAffElt((0,) * self.rd.dim, w))

    def T_translation(self, x: Sequence[int]) -> "ImElement":
        return self.T(translation(self.rd, x))

    # length bookkeeping

    def length(self, u: ExtAffElt) -> int:
        return ext_length(self.rd, u)

    def word(self, u: ExtAffElt):
        n = ext_length(self.rd, u)
        if n > self.budget:
            raise BudgetExceeded(f"element of length {n} exceeds budget {self.budget}")
        return reduced_word(self.rd, u)

    def _right(self, u: ExtAffElt, i: int):
        key = (u, i)
        hit = self._rmul_cache.get(key)
        if hit is None:
            us = u * self._simples[i]
            hit = self._rmul_cache[key] = (us, ext_length(self.rd, us) > ext_length(self.rd, u))
        return hit

    def _left(self, i: int, u: ExtAffElt):
        key = (i, u)
        hit = self._lmul_cache.get(key)
        if hit is None:
            su = self._simples[i] * u
            hit = self._lmul_cache[key] = (su, ext_length(self.rd, su) > ext_length(self.rd, u))
        return hit

    # raw kernels

    def _rmul_simple(self, raw: dict, i: int) -> dict:
        out: dict = {}
        a, b = self._desc_same, self._desc_other
        for u, poly in raw.items():
            us, up = self._right(u, i)
            if up:
                _acc(out, us, poly)
            else:
                _acc(out, us, poly, b)
                _acc(out, u, poly, a)
        return out

    def _lmul_simple(self, i: int, raw: dict) -> dict:
        out: dict = {}
        a, b = self._desc_same, self._desc_other
        for u, poly in raw.items():
            su, up = self._left(i, u)
            if up:
                _acc(out, su, poly)
            else:
                _acc(out, su, poly, b)
                _acc(out, u, poly, a)
        return out

    def _rmul_simple_inverse(self, raw: dict, i: int) -> dict:
        # T_s^-1 = q^-1 T_s + (q^-1 - 1)
        prod = self._rmul_simple(raw, i)
        out: dict = {}
        for u, poly in prod.items():
            _acc(out, u, poly, {-2: 1})
        for u, poly in raw.items():
            _acc(out, u, poly, {-2: 1, 0: -1})
        return out

    @staticmethod
    def _rmul_omega(raw: dict, omega: ExtAffElt) -> dict:
        return {u * omega: poly for u, poly in raw.items()}

    @staticmethod
    def _lmul_omega(omega: ExtAffElt, raw: dict) -> dict:
        return {omega * u: poly for u, poly in raw.items()}

    def _rmul_basis(self, raw: dict, v: ExtAffElt) -> dict:
        rw = self.word(v)
        for i in rw.indices:
            raw = self._rmul_simple(raw, i)
        return self._rmul_omega(raw, rw.omega)

    def _lmul_basis(self, v: ExtAffElt, raw: dict) -> dict:
        rw = self.word(v)
        raw = self._lmul_omega(rw.omega, raw)
        for i in reversed(rw.indices):
            raw = self._lmul_simple(i, raw)
        return raw

    def _rmul_basis_inverse(self, raw: dict, v: ExtAffElt) -> dict:
        # T_v^-1 = T_omega^-1 T_{i_k}^-1 ... T_{i_1}^-1
        rw = self.word(v)
        raw = self._rmul_omega(raw, rw.omega.inverse())
        for i in reversed(rw.indices):
            raw = self._rmul_simple_inverse(raw, i)
        return raw

    # public algebra operations

    def mul(self, f: "ImElement", g: "ImElement") -> "ImElement":
        if not f.terms or not g.terms:
            return self.zero()
        out: dict = {}
        if len(f.terms) <= len(g.terms):
            graw = _to_raw(g.terms)
            for u, c in f.terms.items():
                part = self._lmul_basis(u, graw)
                for k, poly in part.items():
                    _acc(out, k, poly, dict(c.items()))
        else:
            fraw = _to_raw(f.terms)
            for u, c in g.terms.items():
                part = self._rmul_basis(fraw, u)
                for k, poly in part.items():
                    _acc(out, k, poly, dict(c.items()))
        return ImElement._from_clean(self, _clean(out))

    def inverse_basis(self, u: ExtAffElt) -> "ImElement":
        raw = {self.one_key: {0: 1}}
        return ImElement._from_clean(self, _clean(self._rmul_basis_inverse(raw, u)))

    def theta_from(self, y: Sequence[int], z: Sequence[int]) -> "ImElement":
        """``v^(l(z) - l(y)) T_y T_z^-1`` for dominant ``y``, ``z``."""
        rd = self.rd
        if not (rd.is_dominant(y) and rd.is_dominant(z)):
            raise NotDominant(f"decomposition parts must be dominant: y={tuple(y)}, z={tuple(z)}")
        ty, tz = translation(rd, y), translation(rd, z)
        shift = ext_length(rd, tz) - ext_length(rd, ty)
        self.word(ty)
        raw = {ty: {shift: 1}}
        raw = self._rmul_basis_inverse(raw, tz)
        return ImElement._from_clean(self, _clean(raw))

    def theta(self, x: Sequence[int]) -> "ImElement":
        x = tuple(x)
        hit = self._theta.get(x)
        if hit is None:
            y, z = self.rd.decompose_minimal(x)
            hit = self._theta[x] = self.theta_from(y, z)
        return hit

    def spherical_indicator(self, lam: Sequence[int]) -> "ImElement":
        rd = self.rd
        lam = tuple(lam)
        if not rd.is_dominant(lam):
            raise NotDominant(f"{lam} is not dominant")
        keys = {ExtAffElt(mu, w) for mu in rd.orbit(lam) for w in rd.weyl_group}
        return ImElement(self, {k: ONE for k in keys})


class ImElement:
    """A finite sum ``sum c_u T_u``; ``terms`` maps ``ExtAffElt`` to ``LaurentScalar``."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: IMAlgebra, terms: Mapping | Iterable = ()):
        self.alg = alg
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict = {}
        for k, c in items:
            c = LaurentScalar(c) if isinstance(c, int) else c
            out[k] = out[k] + c if k in out else c
        self.terms = {k: c for k, c in out.items() if c}

    @classmethod
    def _from_clean(cls, alg, terms: dict) -> "ImElement":
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

    def coefficient(self, u: ExtAffElt) -> LaurentScalar:
        return self.terms.get(u, LaurentScalar(0))

    def __add__(self, other: "ImElement") -> "ImElement":
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out[k] + c if k in out else c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return ImElement._from_clean(self.alg, out)

    def __neg__(self):
        return ImElement._from_clean(self.alg, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ImElement):
            return self.alg.mul(self, other)
        if isinstance(other, (int, LaurentScalar)):
            return ImElement(self.alg, {k: c * other for k, c in self.terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentScalar)):
            return ImElement(self.alg, {k: other * c for k, c in self.terms.items()})
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, ImElement):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def max_length(self) -> int:
        return max((self.alg.length(u) for u in self.terms), default=0)

    def __repr__(self):
        if not self.terms:
            return "0"
        rd = self.alg.rd
        parts = []
        for u in sorted(self.terms, key=lambda u: (u.x, rd.reduced_word(u.w))):
            parts.append(f"({self.terms[u]!r})*T[{list(u.x)}, {list(rd.reduced_word(u.w))}]")
        return " + ".join(parts)


def im_mul(f: ImElement, g: ImElement) -> ImElement:
    return f.alg.mul(f, g)


def im_inverse_basis(alg: IMAlgebra, u: ExtAffElt) -> ImElement:
    return alg.inverse_basis(u)


def theta_im(alg: IMAlgebra, x: Sequence[int]) -> ImElement:
    return alg.theta(x)


def spherical_indicator(alg: IMAlgebra, lam: Sequence[int]) -> ImElement:
    return alg.spherical_indicator(lam)
