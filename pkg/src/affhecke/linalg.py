"""
Exact linear algebra used by the conversion solver and the basis/center checks.

``solve_laurent`` runs fraction-free (Bareiss) elimination over ``Z[v, 1/v]``.
The rank helpers work over ``GF(p)`` after specializing ``q``; since reduction
mod ``p`` can only lower rank, a full rank mod ``p`` certifies full rank over
the rationals, and a kernel dimension mod ``p`` bounds the rational one from
above.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from fractions import Fraction

from .coeffring import LaurentScalar, ScalarFraction, specialize_q

__all__ = [
    "solve_laurent",
    "specialize_mod",
    "rank_mod_p",
    "kernel_dim_mod_p",
    "rank_exact",
    "PRIME",
    "normalize_parity",
]

PRIME = (1 << 61) - 1


def solve_laurent(columns: Sequence[Mapping], rhs: Mapping) -> list | None:
    """Solve ``sum_j c_j columns[j] = rhs`` exactly; ``None`` if inconsistent.

    Columns and ``rhs`` are sparse ``{row key: LaurentScalar}`` maps.  Free
    columns (if any) get coefficient zero.  Coefficients are ``ScalarFraction``.
    """
    keys = {}
    for col in list(columns) + [rhs]:
        for k in col:
            if k not in keys:
                keys[k] = len(keys)
    n = len(columns)
    zero = LaurentScalar(0)
    M = [[zero] * (n + 1) for _ in range(len(keys))]
    for j, col in enumerate(columns):
        for k, c in col.items():
            M[keys[k]][j] = c
    for k, c in rhs.items():
        M[keys[k]][n] = c
    rows = len(M)
    prev = LaurentScalar(1)
    r = 0
    pivots = []
    for col in range(n):
        cand = [i for i in range(r, rows) if M[i][col]]
        if not cand:
            continue
        p = min(cand, key=lambda i: len(M[i][col].terms))
        M[r], M[p] = M[p], M[r]
        piv = M[r][col]
        for i in range(r + 1, rows):
            a = M[i][col]
            row = M[i]
            prow = M[r]
            for j in range(col + 1, n + 1):
                val = piv * row[j] - a * prow[j] if a else piv * row[j]
                if val:
                    qt = val.exact_div(prev)
                    if qt is None:
                        raise ArithmeticError("Bareiss step was not exact")
                    row[j] = qt
                else:
                    row[j] = zero
            row[col] = zero
        prev = piv
        pivots.append(col)
        r += 1
    if any(M[i][n] for i in range(r, rows)):
        return None
    sol = [ScalarFraction(0)] * n
    for k in range(len(pivots) - 1, -1, -1):
        col = pivots[k]
        acc = ScalarFraction(M[k][n])
        for j in pivots[k + 1:]:
            if M[k][j]:
                acc = acc - sol[j] * M[k][j]
        sol[col] = acc / M[k][col]
    return sol


def normalize_parity(col: Mapping) -> dict:
    """Divide a column by ``v`` if all its exponents are odd, so that it
    becomes a polynomial in ``q``; raises if the parities are mixed."""
    parities = {e % 2 for c in col.values() for e, _ in c.items()}
    if len(parities) > 1:
        raise ValueError("column mixes even and odd powers of v")
    if parities == {1}:
        return {k: c.shift(-1) for k, c in col.items()}
    return dict(col)


def specialize_mod(a, q0: int, p: int = PRIME) -> int:
    """Image of a Laurent polynomial in ``q`` (even powers of ``v``) at ``q = q0`` in ``GF(p)``."""
    if isinstance(a, int):
        return a % p
    out = 0
    qinv = pow(q0, -1, p)
    for e, c in a.items():
        if e % 2:
            raise ValueError("odd power of v cannot be specialized at a value of q")
        k = e // 2
        out += c * (pow(q0, k, p) if k >= 0 else pow(qinv, -k, p))
    return out % p


def _echelon(vectors: Sequence[Mapping], p: int) -> int:
    """Rank of sparse ``{key: int}`` vectors over ``GF(p)``."""
    ids: dict = {}
    basis: dict = {}  # pivot id -> vector whose smallest id is the pivot, pivot entry 1
    rank = 0
    for vec in vectors:
        v = {}
        for k, c in vec.items():
            if c % p:
                v[ids.setdefault(k, len(ids))] = c % p
        while v:
            pk = min(v)
            b = basis.get(pk)
            if b is None:
                inv = pow(v[pk], -1, p)
                basis[pk] = {k: c * inv % p for k, c in v.items()}
                rank += 1
                break
            f = v[pk]
            for k, c in b.items():
                s = (v.get(k, 0) - f * c) % p
                if s:
                    v[k] = s
                else:
                    v.pop(k, None)
    return rank


def _echelon_exact(vectors: Sequence[Mapping]) -> int:
    """Rank of sparse ``{key: Fraction}`` vectors over the rationals."""
    ids: dict = {}
    basis: dict = {}
    rank = 0
    for vec in vectors:
        v = {}
        for k, c in vec.items():
            if c:
                v[ids.setdefault(k, len(ids))] = Fraction(c)
        while v:
            pk = min(v)
            b = basis.get(pk)
            if b is None:
                inv = 1 / v[pk]
                basis[pk] = {k: c * inv for k, c in v.items()}
                rank += 1
                break
            f = v[pk]
            for k, c in b.items():
                s = v.get(k, 0) - f * c
                if s:
                    v[k] = s
                else:
                    v.pop(k, None)
    return rank


def rank_exact(columns: Sequence[Mapping], q0) -> int:
    """Exact rational rank of Laurent-coefficient columns specialized at ``q = q0``."""
    vecs = [{k: specialize_q(c, q0) for k, c in normalize_parity(col).items()} for col in columns]
    return _echelon_exact(vecs)


def rank_mod_p(columns: Sequence[Mapping], q0: int, p: int = PRIME) -> int:
    """Rank of Laurent-coefficient columns specialized at ``q = q0`` over ``GF(p)``."""
    vecs = [{k: specialize_mod(c, q0, p) for k, c in normalize_parity(col).items()} for col in columns]
    return _echelon(vecs, p)


def kernel_dim_mod_p(columns: Sequence[Mapping], q0: int, p: int = PRIME) -> int:
    return len(columns) - rank_mod_p(columns, q0, p)
