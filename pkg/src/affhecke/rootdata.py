"""
Finite root data and their Weyl groups.

The lattice ``X`` is ``Z^d``.  Roots are integer covectors (rows), coroots are
integer vectors, and the Cartan matrix is ``C[i][j] = alpha_i(alpha_j^vee)``.
Weyl group elements are integer ``d x d`` matrices acting on ``X``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

__all__ = [
    "RootDatum",
    "WeylElt",
    "InvalidCartan",
    "IncompatibleLattice",
    "cartan_matrix",
    "build_root_datum",
    "root_datum_from_config",
    "enumerate_weyl",
    "weyl_act",
    "pairing_eval",
    "dominance_tools",
    "finite_length",
]

Vec = tuple  # tuple[int, ...]


class InvalidCartan(ValueError):
    pass


class IncompatibleLattice(ValueError):
    pass


def _dot(a: Sequence[int], b: Sequence[int]) -> int:
    return sum(x * y for x, y in zip(a, b))


@dataclass(frozen=True)
class WeylElt:
    """A Weyl group element, canonically its action matrix on ``X``."""

    matrix: tuple

    @classmethod
    def identity(cls, d: int) -> "WeylElt":
        return cls(tuple(tuple(int(i == j) for j in range(d)) for i in range(d)))

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def act(self, x: Sequence[int]) -> Vec:
        return tuple(_dot(row, x) for row in self.matrix)

    def act_covector(self, a: Sequence[int]) -> Vec:
        """The covector ``a o w^-1``, i.e. the image of ``a`` under ``w``."""
        return self.inverse().pullback(a)

    def pullback(self, a: Sequence[int]) -> Vec:
        """The covector ``a o w``."""
        m = self.matrix
        return tuple(sum(a[i] * m[i][j] for i in range(len(m))) for j in range(len(m)))

    def __mul__(self, other: "WeylElt") -> "WeylElt":
        a, b = self.matrix, other.matrix
        n = len(a)
        return WeylElt(tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
            for i in range(n)
        ))

    def is_identity(self) -> bool:
        return all(self.matrix[i][j] == (i == j) for i in range(self.dim) for j in range(self.dim))

    def inverse(self) -> "WeylElt":
        inv = _INVERSES.get(self)
        if inv is None:
            p, prev = self, WeylElt.identity(self.dim)
            while not p.is_identity():
                prev = p
                p = p * self
            inv = prev
            _INVERSES[self] = inv
        return inv


_INVERSES: dict = {}


_TYPE_RE = re.compile(r"^([ABCG])(\d+)$")


def cartan_matrix(type_label: str) -> list[list[int]]:
    """Cartan matrix ``alpha_i(alpha_j^vee)`` for a supported Cartan type.

    B2 has the long root first; C2 and G2 have the short root first.
    """
    m = _TYPE_RE.match(type_label.strip()) if isinstance(type_label, str) else None
    if not m:
        raise InvalidCartan(f"unknown Cartan type {type_label!r}")
    letter, n = m.group(1), int(m.group(2))
    if letter == "A" and n >= 1:
        return [[2 if i == j else -1 if abs(i - j) == 1 else 0 for j in range(n)] for i in range(n)]
    if (letter, n) == ("B", 2):
        return [[2, -2], [-1, 2]]
    if (letter, n) == ("C", 2):
        return [[2, -1], [-2, 2]]
    if (letter, n) == ("G", 2):
        return [[2, -1], [-3, 2]]
    raise InvalidCartan(f"unsupported Cartan type {type_label!r}")


def _transpose(m):
    return [list(col) for col in zip(*m)]


def _det(m) -> Fraction:
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if a[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for r in range(c + 1, n):
            f = a[r][c] / a[c][c]
            if f:
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return det


class RootDatum:
    """A reduced, irreducible root datum of finite type.

    Attributes of interest: ``rank``, ``dim``, ``simple_roots``,
    ``simple_coroots``, ``cartan``, ``positive_roots`` (covectors),
    ``positive_coroots`` (vectors), ``highest_root``, ``rho`` and
    ``weyl_group`` (identity first).
    """

    MAX_ROOTS = 500

    def __init__(self, simple_roots, simple_coroots, cartan_type: str = "custom", lattice: str = "custom"):
        roots = [tuple(int(c) for c in a) for a in simple_roots]
        coroots = [tuple(int(c) for c in a) for a in simple_coroots]
        if not roots or len(roots) != len(coroots):
            raise InvalidCartan("need the same positive number of simple roots and coroots")
        d = len(roots[0])
        if any(len(a) != d for a in roots + coroots):
            raise InvalidCartan("roots and coroots must live on the same lattice Z^d")
        self.rank = len(roots)
        self.dim = d
        self.simple_roots = tuple(roots)
        self.simple_coroots = tuple(coroots)
        self.cartan_type = cartan_type
        self.lattice = lattice
        r = self.rank
        self.cartan = tuple(tuple(_dot(roots[i], coroots[j]) for j in range(r)) for i in range(r))
        self._check_cartan()
        self._build_roots()
        self._caches: dict = {}
        self.simple_reflections = tuple(self._reflection(i) for i in range(r))
        self.identity = WeylElt.identity(d)
        self.weyl_group = self._enumerate_weyl()
        self._coroot_index = {c: k for k, c in enumerate(self.positive_coroots)}
        self.d0 = tuple(sum(c[j] for c in self.positive_coroots) for j in range(d))

    def __repr__(self):
        return f"RootDatum({self.cartan_type}, {self.lattice}, rank={self.rank}, dim={self.dim})"

    # construction helpers

    def _check_cartan(self):
        C, r = self.cartan, self.rank
        for i in range(r):
            if C[i][i] != 2:
                raise InvalidCartan(f"alpha_{i + 1}(alpha_{i + 1}^vee) = {C[i][i]}, expected 2")
            for j in range(r):
                if i != j:
                    if C[i][j] > 0:
                        raise InvalidCartan("off-diagonal Cartan entries must be <= 0")
                    if (C[i][j] == 0) != (C[j][i] == 0):
                        raise InvalidCartan("Cartan matrix zero pattern is not symmetric")
                    if C[i][j] * C[j][i] > 3:
                        raise InvalidCartan("Cartan matrix is not of finite type")
        if _det(C) <= 0:
            raise InvalidCartan("Cartan matrix is not of finite type")
        # irreducible: Dynkin diagram connected
        seen, stack = {0}, [0]
        while stack:
            i = stack.pop()
            for j in range(r):
                if C[i][j] and j not in seen:
                    seen.add(j)
                    stack.append(j)
        if len(seen) != r:
            raise InvalidCartan("reducible root data are not supported")

    def _build_roots(self):
        """Generate positive roots in simple-root coordinates by reflecting."""
        C, r = self.cartan, self.rank
        # each root: (root coords in simple roots, coroot coords in simple coroots)
        start = []
        for i in range(r):
            e = tuple(int(k == i) for k in range(r))
            start.append((e, e))
        found = set(start)
        frontier = list(start)
        while frontier:
            nxt = []
            for a, ac in frontier:
                for i in range(r):
                    # s_i(beta) = beta - beta(alpha_i^vee) alpha_i
                    n = sum(a[j] * C[j][i] for j in range(r))
                    b = tuple(a[k] - n * (k == i) for k in range(r))
                    # s_i(beta^vee) = beta^vee - alpha_i(beta^vee) alpha_i^vee
                    m = sum(C[i][j] * ac[j] for j in range(r))
                    bc = tuple(ac[k] - m * (k == i) for k in range(r))
                    if (b, bc) not in found:
                        found.add((b, bc))
                        nxt.append((b, bc))
                        if len(found) > self.MAX_ROOTS:
                            raise InvalidCartan("root system is infinite")
            frontier = nxt
        pos = sorted(
            (x for x in found if all(c >= 0 for c in x[0])),
            key=lambda x: (sum(x[0]), tuple(-c for c in x[0])),
        )
        if len(pos) * 2 != len(found):
            raise InvalidCartan("roots are not split into positive and negative halves")
        d = self.dim
        self.positive_root_coords = tuple(a for a, _ in pos)
        self.positive_roots = tuple(
            tuple(sum(a[k] * self.simple_roots[k][j] for k in range(r)) for j in range(d)) for a, _ in pos
        )
        self.positive_coroots = tuple(
            tuple(sum(ac[k] * self.simple_coroots[k][j] for k in range(r)) for j in range(d)) for _, ac in pos
        )
        self.highest_root = max(range(len(pos)), key=lambda k: sum(pos[k][0]))
        self.rho = tuple(sum(a[j] for a in self.positive_roots) for j in range(d))

    def _reflection(self, i: int) -> WeylElt:
        a, c = self.simple_roots[i], self.simple_coroots[i]
        d = self.dim
        return WeylElt(tuple(tuple(int(r == s) - c[r] * a[s] for s in range(d)) for r in range(d)))

    def reflection(self, k: int) -> WeylElt:
        """Reflection in the positive root with index ``k``."""
        a, c = self.positive_roots[k], self.positive_coroots[k]
        d = self.dim
        return WeylElt(tuple(tuple(int(r == s) - c[r] * a[s] for s in range(d)) for r in range(d)))

    def _enumerate_weyl(self) -> tuple:
        elems = [self.identity]
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for s in self.simple_reflections:
                    u = s * w
                    if u not in seen:
                        seen.add(u)
                        elems.append(u)
                        nxt.append(u)
            frontier = nxt
        return tuple(elems)

    # pairings, dominance

    @property
    def num_positive_roots(self) -> int:
        return len(self.positive_roots)

    def pair(self, k: int, x: Sequence[int]) -> int:
        """``alpha(x)`` for the positive root with index ``k``."""
        return _dot(self.positive_roots[k], x)

    def simple_pair(self, i: int, x: Sequence[int]) -> int:
        return _dot(self.simple_roots[i], x)

    def rho_pair(self, x: Sequence[int]) -> int:
        return _dot(self.rho, x)

    def is_dominant(self, x: Sequence[int]) -> bool:
        return all(_dot(a, x) >= 0 for a in self.simple_roots)

    def decompose(self, x: Sequence[int]) -> tuple[Vec, Vec]:
        """``(y, z)`` dominant with ``x = y - z`` and ``z = m * d0``, ``m`` minimal.

        ``d0`` is the sum of all positive coroots.
        """
        m = 0
        for a in self.simple_roots:
            ax, ad = _dot(a, x), _dot(a, self.d0)
            if ax < 0:
                m = max(m, -(ax // ad))
        z = tuple(m * c for c in self.d0)
        y = tuple(a + b for a, b in zip(x, z))
        return y, z

    def decompose_minimal(self, x: Sequence[int]) -> tuple[Vec, Vec]:
        """``(y, z)`` dominant with ``x = y - z`` and ``rho(z)`` as small as possible."""
        key = ("decmin", tuple(x))
        hit = self._caches.get(key)
        if hit is not None:
            return hit
        r = self.rank
        lower = [max(0, -self.simple_pair(i, x)) for i in range(r)]
        weights = [sum(c[i] for c in self.positive_root_coords) for i in range(r)]
        index = self._pairing_index()
        best = None
        for off in product(range(index), repeat=r):
            n = tuple(lo + o for lo, o in zip(lower, off))
            z = self._preimage(n)
            if z is None:
                continue
            cost = (sum(w * k for w, k in zip(weights, n)), n)
            if best is None or cost < best[0]:
                best = (cost, z)
        z = best[1]
        y = tuple(a + b for a, b in zip(x, z))
        self._caches[key] = (y, z)
        return y, z

    def _pairing_index(self) -> int:
        """Index of ``{(alpha_i(z))_i : z in X}`` in ``Z^r``."""
        if "index" not in self._caches:
            self._caches["index"] = abs(self._hermite()[2])
        return self._caches["index"]

    def _hermite(self):
        """Column-reduce the simple-root matrix ``A`` (r x d) to lower-triangular
        ``H = A U`` with ``U`` unimodular.  Returns ``(H, U, index)``."""
        if "hermite" in self._caches:
            return self._caches["hermite"]
        r, d = self.rank, self.dim
        H = [list(a) for a in self.simple_roots]
        U = [[int(i == j) for j in range(d)] for i in range(d)]

        def colop(j, k, f):  # col_j -= f * col_k
            for row in H:
                row[j] -= f * row[k]
            for row in U:
                row[j] -= f * row[k]

        def swap(j, k):
            for row in H:
                row[j], row[k] = row[k], row[j]
            for row in U:
                row[j], row[k] = row[k], row[j]

        for i in range(r):
            while True:
                nz = [j for j in range(i, d) if H[i][j]]
                if not nz:
                    raise InvalidCartan("simple roots are linearly dependent")
                p = min(nz, key=lambda j: abs(H[i][j]))
                if p != i:
                    swap(i, p)
                done = True
                for j in range(i + 1, d):
                    if H[i][j]:
                        colop(j, i, H[i][j] // H[i][i])
                        if H[i][j]:
                            done = False
                if done:
                    break
        index = 1
        for i in range(r):
            index *= H[i][i]
        self._caches["hermite"] = (H, U, index)
        return self._caches["hermite"]

    def _preimage(self, n: Sequence[int]) -> Vec | None:
        """Some ``z`` in ``X`` with ``alpha_i(z) = n_i``, or ``None``."""
        H, U, _ = self._hermite()
        r, d = self.rank, self.dim
        y = [0] * d
        for i in range(r):
            rest = n[i] - sum(H[i][j] * y[j] for j in range(i))
            if rest % H[i][i]:
                return None
            y[i] = rest // H[i][i]
        return tuple(sum(U[k][j] * y[j] for j in range(d)) for k in range(d))

    # Weyl group

    def weyl_index(self, w: WeylElt) -> int:
        idx = self._caches.get("windex")
        if idx is None:
            idx = self._caches["windex"] = {u: k for k, u in enumerate(self.weyl_group)}
        return idx[w]

    def inversion_flags(self, w: WeylElt) -> tuple:
        """For each positive root ``alpha``: whether ``w^-1(alpha)`` is negative."""
        cache = self._caches.setdefault("invflags", {})
        flags = cache.get(w)
        if flags is None:
            # w^-1(alpha) < 0  iff  w^-1(alpha^vee) is a negative coroot
            winv = w.inverse()
            flags = tuple(winv.act(c) not in self._coroot_index for c in self.positive_coroots)
            cache[w] = flags
        return flags

    def length(self, w: WeylElt) -> int:
        """Number of positive roots sent to negative roots by ``w``."""
        cache = self._caches.setdefault("wlen", {})
        n = cache.get(w)
        if n is None:
            n = sum(w.act(c) not in self._coroot_index for c in self.positive_coroots)
            cache[w] = n
        return n

    def reduced_word(self, w: WeylElt) -> tuple:
        """Lexicographically least reduced word, as 1-based simple indices."""
        cache = self._caches.setdefault("wword", {})
        word = cache.get(w)
        if word is None:
            out, u = [], w
            n = self.length(u)
            while n:
                for i, s in enumerate(self.simple_reflections):
                    su = s * u
                    if self.length(su) < n:
                        out.append(i + 1)
                        u, n = su, n - 1
                        break
            word = cache[w] = tuple(out)
        return word

    def from_word(self, word: Sequence[int]) -> WeylElt:
        w = self.identity
        for i in word:
            if not 1 <= i <= self.rank:
                raise ValueError(f"simple index {i} out of range 1..{self.rank}")
            w = w * self.simple_reflections[i - 1]
        return w

    def longest_element(self) -> WeylElt:
        return max(self.weyl_group, key=self.length)

    def orbit(self, x: Sequence[int]) -> list:
        """Distinct elements of ``W x`` in first-seen order."""
        seen, out = set(), []
        for w in self.weyl_group:
            y = w.act(x)
            if y not in seen:
                seen.add(y)
                out.append(y)
        return out

    def poincare_exponents(self) -> list[int]:
        return [self.length(w) for w in self.weyl_group]

    # config

    def to_config(self) -> dict:
        if self.lattice == "custom":
            return {"simple_roots": [list(a) for a in self.simple_roots],
                    "simple_coroots": [list(c) for c in self.simple_coroots]}
        return {"type": self.cartan_type, "lattice": self.lattice}


def build_root_datum(cartan_type: str = "A1", lattice: str = "sc", custom: dict | None = None) -> RootDatum:
    """Build a root datum from a Cartan label and a lattice label.

    ``sc``: X is the coroot lattice (basis the simple coroots).
    ``ad``: X is the coweight lattice (basis dual to the simple roots).
    ``gl``: type ``A_{n-1}`` only; X = Z^n with roots ``e_i - e_{i+1}``.
    ``custom``: ``custom`` holds ``simple_roots`` and ``simple_coroots``.
    """
    if lattice == "custom":
        if not custom:
            raise IncompatibleLattice("custom lattice needs simple_roots and simple_coroots")
        try:
            return RootDatum(custom["simple_roots"], custom["simple_coroots"], "custom", "custom")
        except KeyError as exc:
            raise IncompatibleLattice(f"custom data missing {exc}") from None
    C = cartan_matrix(cartan_type)
    r = len(C)
    if lattice == "sc":
        roots = [list(C[i]) for i in range(r)]
        coroots = [[int(i == j) for j in range(r)] for i in range(r)]
    elif lattice == "ad":
        roots = [[int(i == j) for j in range(r)] for i in range(r)]
        coroots = [[C[k][j] for k in range(r)] for j in range(r)]
    elif lattice == "gl":
        if not cartan_type.startswith("A"):
            raise IncompatibleLattice("the gl lattice is only defined for type A")
        n = r + 1
        roots = [[int(k == i) - int(k == i + 1) for k in range(n)] for i in range(r)]
        coroots = [list(a) for a in roots]
    else:
        raise IncompatibleLattice(f"unknown lattice {lattice!r}")
    return RootDatum(roots, coroots, cartan_type, lattice)


def root_datum_from_config(config: dict | str) -> RootDatum:
    """From a JSON object (or JSON text / file path) such as
    ``{"type": "B2", "lattice": "sc"}`` or ``{"simple_roots": ..., "simple_coroots": ...}``."""
    if isinstance(config, str):
        text = config
        if not text.lstrip().startswith("{"):
            with open(text) as fh:
                text = fh.read()
        config = json.loads(text)
    if "simple_roots" in config:
        return build_root_datum("custom", "custom", config)
    return build_root_datum(config.get("type", "A1"), config.get("lattice", "sc"))


def enumerate_weyl(rd: RootDatum) -> list[WeylElt]:
    return list(rd.weyl_group)


def weyl_act(w: WeylElt, x: Sequence[int]) -> Vec:
    return w.act(x)


def pairing_eval(rd: RootDatum, root_index: int, x: Sequence[int]) -> int:
    return rd.pair(root_index, x)


def dominance_tools(rd: RootDatum, x: Sequence[int]) -> tuple[bool, tuple[Vec, Vec]]:
    return rd.is_dominant(x), rd.decompose(x)


def finite_length(rd: RootDatum, w: WeylElt) -> int:
    return rd.length(w)
