"""Root systems and Weyl groups of types A, B, D and G2 over exact rationals.

Realizations
------------
A_{n-1}  roots e_i - e_j in Q^n
B_n      roots +-e_i +- e_j and +-e_i in Q^n
D_n      roots +-e_i +- e_j in Q^n
G2       roots in the plane x+y+z = 0 of Q^3; short simple root
         alpha = e1 - e2, long simple root beta = -2e1 + e2 + e3

Reflections are indexed in a fixed canonical order which also fixes the
generator order of every algebra built on top of them:

A   (ij) for i < j, lexicographic
B   all (ij), then all barred (ij) (roots e_i + e_j), then (1)..(n)
D   all (ij), then all barred (ij)
G2  a1..a6 walking the positive roots by angle:
    alpha, 3alpha+beta, 2alpha+beta, 3alpha+2beta, alpha+beta, beta
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

Vector = Tuple[Fraction, ...]
Matrix = Tuple[Vector, ...]

SUPPORTED_TYPES = ("A", "B", "D", "G2")


class UnsupportedRootSystem(ValueError):
    pass


def _vec(xs) -> Vector:
    return tuple(Fraction(x) for x in xs)


def _neg(v: Vector) -> Vector:
    return tuple(-x for x in v)


def _add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def _scale(c, v: Vector) -> Vector:
    return tuple(c * x for x in v)


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _unit(n: int, i: int, c=1) -> List[Fraction]:
    v = [Fraction(0)] * n
    v[i] = Fraction(c)
    return v


@dataclass(frozen=True)
class Reflection:
    index: int
    root: Vector
    label: str
    cls: str  # "long", "short" or "unique"

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class GroupElement:
    """A Weyl group element stored as its exact action matrix (rows act on columns)."""

    matrix: Matrix

    @classmethod
    def identity(cls, dim: int) -> "GroupElement":
        return cls(tuple(tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim)))

    @classmethod
    def reflection(cls, root: Vector) -> "GroupElement":
        # s(v) = v - <v, root_vee> root
        dim = len(root)
        nrm = dot(root, root)
        rows = []
        for i in range(dim):
            rows.append(
                tuple(Fraction(int(i == j)) - 2 * root[i] * root[j] / nrm for j in range(dim))
            )
        return cls(tuple(rows))

    def act(self, v: Sequence[Fraction]) -> Vector:
        return tuple(dot(row, v) for row in self.matrix)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        cols = list(zip(*other.matrix))
        return GroupElement(tuple(tuple(dot(row, c) for c in cols) for row in self.matrix))

    def inverse(self) -> "GroupElement":
        # orthogonal action
        return GroupElement(tuple(zip(*self.matrix)))


def determinant(w: GroupElement) -> int:
    """det of the action; equals (-1)^{length(w)}."""
    m = [list(r) for r in w.matrix]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                for k in range(c, n):
                    m[r][k] -= f * m[c][k]
    return int(det)


@dataclass
class RootSystem:
    type: str
    rank: int
    dim: int
    positive_roots: List[Vector]
    simple_roots: List[Vector]
    refl: List[Reflection] = field(default_factory=list)
    _root_index: Dict[Vector, int] = field(default_factory=dict, repr=False)
    _group: Optional[List[GroupElement]] = field(default=None, repr=False)

    @property
    def name(self) -> str:
        return "G2" if self.type == "G2" else f"{self.type}{self.rank}"

    @property
    def roots(self) -> List[Vector]:
        return self.positive_roots + [_neg(r) for r in self.positive_roots]

    @property
    def simply_laced(self) -> bool:
        return self.type in ("A", "D")

    @property
    def ngens(self) -> int:
        return len(self.refl)

    @property
    def n(self) -> int:
        """Number of coordinates / number of theta_i connections (A: rank + 1)."""
        return self.dim if self.type != "G2" else 2

    def pairing(self, u, v) -> Fraction:
        return dot(u, v)

    def coroot(self, gamma: Vector) -> Vector:
        return _scale(Fraction(2) / dot(gamma, gamma), gamma)

    def reflection_of_root(self, gamma: Sequence[Fraction]) -> Reflection:
        """The reflection s_gamma; gamma and -gamma give the same one."""
        try:
            return self.refl[self._root_index[tuple(gamma)]]
        except KeyError:
            raise ValueError(f"{tuple(map(str, gamma))} is not a root of {self.name}") from None

    def element(self, r: Reflection) -> GroupElement:
        return GroupElement.reflection(r.root)

    def reflection_by_label(self, label: str) -> Reflection:
        for r in self.refl:
            if r.label == label:
                return r
        raise KeyError(label)

    def group(self) -> List[GroupElement]:
        """All group elements, generated from the simple reflections (BFS order)."""
        if self._group is None:
            gens = [GroupElement.reflection(a) for a in self.simple_roots]
            ident = GroupElement.identity(self.dim)
            seen = {ident.matrix: ident}
            frontier = [ident]
            while frontier:
                nxt = []
                for w in frontier:
                    for s in gens:
                        u = s * w
                        if u.matrix not in seen:
                            seen[u.matrix] = u
                            nxt.append(u)
                frontier = nxt
            self._group = list(seen.values())
        return self._group

    def __repr__(self) -> str:
        return f"RootSystem({self.name}, {len(self.refl)} reflections)"


def _positive_roots(type_: str, n: int) -> Tuple[int, List[Vector], List[str], List[str], List[Vector]]:
    """Return (dim, positive roots, labels, classes, simple roots) in canonical order."""
    pos: List[Vector] = []
    labels: List[str] = []
    classes: List[str] = []
    if type_ == "A":
        dim = n + 1
        for i, j in itertools.combinations(range(dim), 2):
            v = _unit(dim, i)
            v[j] = Fraction(-1)
            pos.append(_vec(v))
            labels.append(f"({i + 1}{j + 1})")
            classes.append("unique")
        simple = []
        for i in range(dim - 1):
            v = _unit(dim, i)
            v[i + 1] = Fraction(-1)
            simple.append(_vec(v))
        return dim, pos, labels, classes, simple
    if type_ in ("B", "D"):
        dim = n
        pairs = list(itertools.combinations(range(n), 2))
        cls = "long" if type_ == "B" else "unique"
        for i, j in pairs:
            v = _unit(n, i)
            v[j] = Fraction(-1)
            pos.append(_vec(v))
            labels.append(f"({i + 1}{j + 1})")
            classes.append(cls)
        for i, j in pairs:
            v = _unit(n, i)
            v[j] = Fraction(1)
            pos.append(_vec(v))
            labels.append(f"({i + 1}{j + 1})~")
            classes.append(cls)
        if type_ == "B":
            for i in range(n):
                pos.append(_vec(_unit(n, i)))
                labels.append(f"({i + 1})")
                classes.append("short")
        simple = []
        for i in range(n - 1):
            v = _unit(n, i)
            v[i + 1] = Fraction(-1)
            simple.append(_vec(v))
        if type_ == "B":
            simple.append(_vec(_unit(n, n - 1)))
        else:
            v = _unit(n, n - 2)
            v[n - 1] = Fraction(1)
            simple.append(_vec(v))
        return dim, pos, labels, classes, simple
    if type_ == "G2":
        alpha = _vec((1, -1, 0))
        beta = _vec((-2, 1, 1))

        def comb(p, q):
            return _add(_scale(p, alpha), _scale(q, beta))

        coeffs = [(1, 0), (3, 1), (2, 1), (3, 2), (1, 1), (0, 1)]
        for k, (p, q) in enumerate(coeffs):
            r = comb(p, q)
            pos.append(r)
            labels.append(f"a{k + 1}")
            classes.append("long" if dot(r, r) == 6 else "short")
        return 3, pos, labels, classes, [alpha, beta]
    raise UnsupportedRootSystem(f"unsupported type {type_!r}")


def build_root_system(type_: str, rank: Optional[int] = None) -> RootSystem:
    """Canonical root system of the given type and rank.

    ``A`` needs rank >= 1, ``B`` rank >= 2, ``D`` rank >= 3; ``G2`` has rank 2.
    """
    t = type_.upper()
    if t == "G":
        t = "G2"
    if t not in SUPPORTED_TYPES:
        raise UnsupportedRootSystem(f"unsupported type {type_!r}; expected one of {SUPPORTED_TYPES}")
    if t == "G2":
        if rank not in (None, 2):
            raise UnsupportedRootSystem("G2 has rank 2")
        rank = 2
    if rank is None:
        raise UnsupportedRootSystem(f"type {t} needs a rank")
    minimum = {"A": 1, "B": 2, "D": 3, "G2": 2}[t]
    if rank < minimum:
        raise UnsupportedRootSystem(f"type {t} requires rank >= {minimum}, got {rank}")
    dim, pos, labels, classes, simple = _positive_roots(t, rank)
    refl = [Reflection(k, r, lab, c) for k, (r, lab, c) in enumerate(zip(pos, labels, classes))]
    index: Dict[Vector, int] = {}
    for k, r in enumerate(pos):
        index[r] = k
        index[_neg(r)] = k
    return RootSystem(t, rank, dim, pos, simple, refl, index)


def reflections(rs: RootSystem) -> List[Reflection]:
    return list(rs.refl)


def act_on_root(w: GroupElement, gamma: Vector) -> Vector:
    return w.act(gamma)


def reflect(a: Reflection, v: Sequence[Fraction]) -> Vector:
    """s_a(v) = v - <v, a_vee> a."""
    g = a.root
    c = 2 * dot(v, g) / dot(g, g)
    return tuple(x - c * y for x, y in zip(v, g))


def conjugate_reflection(rs: RootSystem, a: Reflection, b: Reflection) -> Reflection:
    """a b a^{-1}, i.e. the reflection in the root a(gamma_b)."""
    return rs.reflection_of_root(reflect(a, b.root))


def conjugation_table(rs: RootSystem) -> List[List[int]]:
    """table[a][b] = index of a b a^{-1}."""
    return [[conjugate_reflection(rs, a, b).index for b in rs.refl] for a in rs.refl]


def element_action_on_reflections(rs: RootSystem, w: GroupElement) -> List[int]:
    """Permutation of reflection indices induced by w: s_gamma -> s_{w gamma}."""
    return [rs.reflection_of_root(w.act(r.root)).index for r in rs.refl]


@dataclass(frozen=True)
class Weight:
    omega: Vector
    nu: Vector


def fundamental_weights(rs: RootSystem) -> List[Vector]:
    """Fundamental weights dual to the simple coroots.

    Type A uses the gl_n representatives e_1 + ... + e_k rather than their
    projections to the sum-zero hyperplane.
    """
    n, dim = rs.rank, rs.dim
    if rs.type == "A":
        return [_vec([1] * (k + 1) + [0] * (dim - k - 1)) for k in range(n)]
    if rs.type == "B":
        ws = [_vec([1] * (k + 1) + [0] * (n - k - 1)) for k in range(n - 1)]
        ws.append(_vec([Fraction(1, 2)] * n))
        return ws
    if rs.type == "D":
        ws = [_vec([1] * (k + 1) + [0] * (n - k - 1)) for k in range(n - 2)]
        ws.append(_vec([Fraction(1, 2)] * (n - 1) + [Fraction(-1, 2)]))
        ws.append(_vec([Fraction(1, 2)] * n))
        return ws
    # G2: solve inside the root plane
    a, b = [rs.coroot(s) for s in rs.simple_roots]
    alpha, beta = rs.simple_roots
    # omega = x alpha + y beta with <omega, a> , <omega, b> prescribed
    m = [[dot(alpha, a), dot(beta, a)], [dot(alpha, b), dot(beta, b)]]
    det = m[0][0] * m[1][1] - m[0][1] * m[1][0]
    out = []
    for rhs in ((1, 0), (0, 1)):
        x = (rhs[0] * m[1][1] - m[0][1] * rhs[1]) / det
        y = (m[0][0] * rhs[1] - rhs[0] * m[1][0]) / det
        out.append(_add(_scale(x, alpha), _scale(y, beta)))
    return out


def orthogonalize_weights(rs: RootSystem) -> List[Weight]:
    """Gram-Schmidt (no normalization) of the fundamental weights in simple-root order."""
    omegas = fundamental_weights(rs)
    nus: List[Vector] = []
    for w in omegas:
        v = w
        for u in nus:
            v = _add(v, _scale(-dot(w, u) / dot(u, u), u))
        nus.append(v)
    return [Weight(w, v) for w, v in zip(omegas, nus)]
