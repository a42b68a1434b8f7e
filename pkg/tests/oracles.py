"""Independent reference implementations for rank one, coded with sympy.

Nothing here imports the engine's scalar or group code.
"""

from __future__ import annotations

import sympy as sp

v = sp.Symbol("v")
q = v**2


def dihedral_words(max_len: int) -> list[tuple[int, ...]]:
    """Reduced words of the infinite dihedral group on letters 0, 1."""
    out = [()]
    for n in range(1, max_len + 1):
        for first in (0, 1):
            out.append(tuple((first + k) % 2 for k in range(n)))
    return out


def _add(out: dict, key, c):
    c = sp.expand(out.get(key, 0) + c)
    if c == 0:
        out.pop(key, None)
    else:
        out[key] = c


def dihedral_rmul_letter(elt: dict, s: int) -> dict:
    out: dict = {}
    for w, c in elt.items():
        if w and w[-1] == s:
            _add(out, w[:-1], c * q)
            _add(out, w, c * (q - 1))
        else:
            _add(out, w + (s,), c)
    return out


def dihedral_product(a: tuple, b: tuple) -> dict:
    """``T_a T_b`` in the Iwahori-Hecke algebra of the infinite dihedral group."""
    elt = {a: sp.Integer(1)}
    for s in b:
        elt = dihedral_rmul_letter(elt, s)
    return elt


def laurent_to_sympy(c) -> sp.Expr:
    return sp.expand(sum(k * v**e for e, k in c.items()))


def macdonald_rank_one(n: int, coroot: int, rho_val: int) -> dict:
    """Rank-one Macdonald formula for the Satake image of the characteristic
    function of ``K t_n K``, normalized by ``vol(K) = 1``.

    ``coroot`` is the coordinate of the coroot and ``rho_val`` is
    ``alpha(n)``, so that ``q^(<rho/2, n>) = v^rho_val``.  Returns ``{exponent: coefficient}`` in ``[1]``.
    """
    X = sp.Symbol("X")
    qi = 1 / q

    def c(expo):
        return (1 - qi * X ** (-expo)) / (1 - X ** (-expo))

    expr = X**n * c(coroot) + X ** (-n) * c(-coroot)
    if n == 0:
        expr = expr / (1 + qi)
    expr = sp.cancel(sp.together(v**rho_val * expr))
    poly = sp.Poly(sp.expand(expr * X ** (abs(n) + 1)), X)
    out = {}
    for (e,), coeff in poly.terms():
        coeff = sp.expand(coeff)
        if coeff != 0:
            out[e - abs(n) - 1] = coeff
    return out
