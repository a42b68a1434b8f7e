"""
The extended affine Weyl group ``X x| W``.

An element ``(x, w)`` stands for ``t_x w``; the group law is
``(x, w)(y, v) = (x + w(y), wv)``.  Lengths come from the closed formula

    l(x, w) = sum_{a>0, w^-1 a>0} |a(x)| + sum_{a>0, w^-1 a<0} |a(x) - 1|

and simple reflections are ``s_i = (0, s_i)`` for ``i >= 1`` and
``s_0 = (theta^vee, s_theta)`` with ``theta`` the highest root.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .rootdata import RootDatum, WeylElt

__all__ = [
    "ExtAffElt",
    "ReducedWord",
    "NoDescent",
    "group_law",
    "inverse",
    "ext_length",
    "affine_simple",
    "reduced_word",
    "from_word",
    "translation",
    "finite",
]


class NoDescent(RuntimeError):
    """No length-decreasing simple reflection exists; the length formula is broken."""


@dataclass(frozen=True)
class ExtAffElt:
    x: tuple
    w: WeylElt

    def __mul__(self, other: "ExtAffElt") -> "ExtAffElt":
        wy = self.w.act(other.x)
        return ExtAffElt(tuple(a + b for a, b in zip(self.x, wy)), self.w * other.w)

    def inverse(self) -> "ExtAffElt":
        winv = self.w.inverse()
        return ExtAffElt(tuple(-c for c in winv.act(self.x)), winv)

    def is_identity(self) -> bool:
        return not any(self.x) and self.w.is_identity()


@dataclass(frozen=True)
class ReducedWord:
    """``source = s_{i_1} ... s_{i_k} * omega`` with ``omega`` of length zero."""

    indices: tuple
    omega: ExtAffElt


def translation(rd: RootDatum, x: Sequence[int]) -> ExtAffElt:
    return ExtAffElt(tuple(x), rd.identity)


def finite(rd: RootDatum, w: WeylElt) -> ExtAffElt:
    return ExtAffElt((0,) * rd.dim, w)


def group_law(a: ExtAffElt, b: ExtAffElt) -> ExtAffElt:
    return a * b


def inverse(a: ExtAffElt) -> ExtAffElt:
    return a.inverse()


def ext_length(rd: RootDatum, a: ExtAffElt) -> int:
    cache = rd._caches.setdefault("extlen", {})
    n = cache.get(a)
    if n is None:
        flags = rd.inversion_flags(a.w)
        n = 0
        for root, neg in zip(rd.positive_roots, flags):
            p = sum(c * t for c, t in zip(root, a.x))
            n += abs(p - 1) if neg else abs(p)
        cache[a] = n
    return n


def affine_simple(rd: RootDatum, i: int) -> ExtAffElt:
    cache = rd._caches.setdefault("affsimple", {})
    s = cache.get(i)
    if s is None:
        if i == 0:
            k = rd.highest_root
            s = ExtAffElt(rd.positive_coroots[k], rd.reflection(k))
        elif 1 <= i <= rd.rank:
            s = ExtAffElt((0,) * rd.dim, rd.simple_reflections[i - 1])
        else:
            raise ValueError(f"affine simple index {i} out of range 0..{rd.rank}")
        cache[i] = s
    return s


def reduced_word(rd: RootDatum, a: ExtAffElt) -> ReducedWord:
    """Greedy left peeling with least-index tie-breaking."""
    cache = rd._caches.setdefault("extword", {})
    hit = cache.get(a)
    if hit is not None:
        return hit
    simples = [affine_simple(rd, i) for i in range(rd.rank + 1)]
    out = []
    u = a
    n = ext_length(rd, u)
    while n:
        for i, s in enumerate(simples):
            su = s * u
            m = ext_length(rd, su)
            if m < n:
                out.append(i)
                u, n = su, m
                break
        else:
            raise NoDescent(f"no descent found for {u}")
    word = ReducedWord(tuple(out), u)
    cache[a] = word
    return word


def from_word(rd: RootDatum, indices: Sequence[int], omega: ExtAffElt | None = None) -> ExtAffElt:
    u = ExtAffElt((0,) * rd.dim, rd.identity)
    for i in indices:
        u = u * affine_simple(rd, i)
    return u * omega if omega is not None else u
