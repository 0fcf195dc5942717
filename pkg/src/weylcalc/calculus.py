"""Braided exterior calculus on the reflection generators of a Weyl group.

The left-invariant 1-forms e_a, one per reflection a, span degree 1.  The
braiding on them is

    Psi(e_a (x) e_b) = e_{a b a^-1} (x) e_a,

a permutation of degree-2 monomials.  Everything else (Psi_i, Psi(w), the
antisymmetrizers A_d and the relation sets of the quadratic and quartic
algebras) is built from it.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from gmpy2 import mpq

from .linalg import Echelonizer, Row, SparseMatrix, kernel_basis
from .ncalg import DEFAULT_CAP, AlgebraHandle, CapExceeded, NCPoly, Word, anticommutative_quotient
from .weyl import Reflection, RootSystem, conjugation_table

# -- braiding -------------------------------------------------------------


def _conj(rs: RootSystem) -> List[List[int]]:
    tab = getattr(rs, "_conj_table", None)
    if tab is None:
        tab = conjugation_table(rs)
        rs._conj_table = tab
    return tab


def braiding(rs: RootSystem, a: Reflection, b: Reflection) -> Tuple[Reflection, Reflection]:
    """Psi(e_a (x) e_b) = e_c (x) e_d; returns (c, d) = (a b a^-1, a)."""
    return rs.refl[_conj(rs)[a.index][b.index]], a


def _psi_word(tab, w: Word, i: int) -> Word:
    # i is 0-based here
    a, b = w[i], w[i + 1]
    return w[:i] + (tab[a][b], a) + w[i + 2:]


def psi_i(rs: RootSystem, v: NCPoly, i: int) -> NCPoly:
    """Apply Psi at tensor positions (i, i+1), 1-based."""
    d = v.degree()
    if not 1 <= i <= d - 1:
        raise IndexError(f"position {i} out of range for degree {d}")
    tab = _conj(rs)
    return v.map_words(lambda w: (1, _psi_word(tab, w, i - 1)))


def psi_of_word(rs: RootSystem, positions: Sequence[int], v: NCPoly) -> NCPoly:
    """Psi_{i_1} ... Psi_{i_l} applied to v (rightmost factor acts first)."""
    for i in reversed(positions):
        v = psi_i(rs, v, i)
    return v


def permutation_of_word(positions: Sequence[int], d: int) -> Tuple[int, ...]:
    """One-line notation of s_{i_1} ... s_{i_l} in S_d (1-based positions)."""
    p = list(range(d))
    for i in reversed(positions):
        # left multiply by s_i: swap values i-1, i
        p = [i if x == i - 1 else i - 1 if x == i else x for x in p]
    return tuple(p)


def inversions(p: Sequence[int]) -> int:
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


@functools.lru_cache(maxsize=None)
def reduced_word_tree(d: int) -> Tuple[Tuple[int, int, int], ...]:
    """All of S_d as (parent, position, sign) triples in BFS order.

    Entry 0 is the identity (parent -1).  Entry k is s_i * (entry parent)
    with a length increase, so its reduced word is i followed by the
    parent's; Psi(entry k) = Psi_i Psi(parent).
    """
    ident = tuple(range(d))
    perms = [ident]
    nodes = [(-1, 0, 1)]
    seen = {ident: 0}
    k = 0
    while k < len(perms):
        p = perms[k]
        lp = inversions(p)
        for i in range(1, d):
            q = tuple(i if x == i - 1 else i - 1 if x == i else x for x in p)
            if q in seen or inversions(q) != lp + 1:
                continue
            seen[q] = len(perms)
            perms.append(q)
            nodes.append((k, i, -nodes[k][2]))
        k += 1
    assert len(perms) == factorial(d)
    return tuple(nodes)


def _antisym_images(tab, w: Word) -> Dict[Word, int]:
    d = len(w)
    if d <= 1:
        return {w: 1}
    nodes = reduced_word_tree(d)
    images: List[Word] = [w]
    out: Dict[Word, int] = {}
    for k, (parent, i, sign) in enumerate(nodes):
        if k:
            images.append(_psi_word(tab, images[parent], i - 1))
        img = images[k]
        s = out.get(img, 0) + sign
        if s:
            out[img] = s
        else:
            out.pop(img, None)
    return out


def antisymmetrize(rs: RootSystem, v: NCPoly) -> NCPoly:
    """A_d(v) = sum over S_d of sgn(w) Psi(w) v, with d = deg v."""
    tab = _conj(rs)
    out: Dict[Word, mpq] = {}
    for w, c in v.terms.items():
        for img, s in _antisym_images(tab, w).items():
            nv = out.get(img, 0) + c * s
            if nv:
                out[img] = nv
            else:
                out.pop(img, None)
    return NCPoly(out)


# -- relation sets ----------------------------------------------------------


def quad_relations(rs: RootSystem) -> List[NCPoly]:
    """Echelonized basis of ker(id - Psi) on the tensor square."""
    g = rs.ngens
    tab = _conj(rs)
    ents = []
    for a in range(g):
        for b in range(g):
            col = a * g + b
            img = tab[a][b] * g + a
            if img != col:
                ents.append((col, col, 1))
                ents.append((img, col, -1))
    m = SparseMatrix(g * g, g * g, tuple(ents))
    ech = Echelonizer()
    ech.extend(kernel_basis(m))
    out = []
    for row in ech.rows():
        out.append(NCPoly({divmod(k, g): c for k, c in row.items()}))
    return out


def psi_cycles(rs: RootSystem) -> List[List[Word]]:
    """Orbits of Psi on degree-2 monomials (each gives one kernel vector)."""
    g = rs.ngens
    tab = _conj(rs)
    seen = set()
    cycles = []
    for a in range(g):
        for b in range(g):
            if (a, b) in seen:
                continue
            cyc = []
            w = (a, b)
            while w not in seen:
                seen.add(w)
                cyc.append(w)
                w = (tab[w[0]][w[1]], w[0])
            cycles.append(cyc)
    return cycles


def _b_index(rs: RootSystem):
    if rs.type != "B":
        raise ValueError("quartic relations are defined for type B")

    def pair(i, j, bar=False):
        i, j = min(i, j), max(i, j)
        return rs.reflection_by_label(f"({i}{j})" + ("~" if bar else "")).index

    def short(i):
        return rs.reflection_by_label(f"({i})").index

    return pair, short


def quartic_relations_B(rs: RootSystem) -> List[NCPoly]:
    """The two degree-4 elements per pair i < j that hold in the full algebra but not in quad."""
    pair, short = _b_index(rs)
    out = []
    n = rs.rank
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            p, q, s = pair(i, j), pair(i, j, True), short(i)
            first = NCPoly(
                {
                    (q, s, p, s): 1,
                    (s, p, s, q): 1,
                    (p, s, q, s): 1,
                    (s, q, s, p): 1,
                }
            )
            second = NCPoly({(p, s, p, s): 1, (s, p, s, p): 1})
            out.extend([first, second])
    return out


def explicit_quad_relations_B(rs: RootSystem) -> List[NCPoly]:
    """The hand-written quadratic relations of B_n over all index choices.

    Squares, anticommutators of commuting pairs, the 3-term cycle on
    (ij),(jk),(ki), its barred companion and the mixed 4-term relation.
    Their span is ker(id - Psi).
    """
    pair, short = _b_index(rs)
    n = rs.rank

    def E(i, j, bar=False):
        return NCPoly.gen(pair(i, j, bar))

    def S(i):
        return NCPoly.gen(short(i))

    def ac(x, y):
        return x * y + y * x

    out = [NCPoly.gen(r.index) * NCPoly.gen(r.index) for r in rs.refl]
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for (i, j), (k, l) in itertools.permutations(pairs, 2):
        if {i, j} & {k, l}:
            continue
        out += [ac(E(i, j), E(k, l)), ac(E(i, j), E(k, l, True)), ac(E(i, j, True), E(k, l, True))]
    for i, j in pairs:
        out += [ac(S(i), S(j)), ac(E(i, j), E(i, j, True))]
        for k in range(1, n + 1):
            if k not in (i, j):
                out += [ac(E(i, j), S(k)), ac(E(i, j, True), S(k))]
    for i, j, k in itertools.permutations(range(1, n + 1), 3):
        out.append(E(i, j) * E(j, k) + E(j, k) * E(k, i) + E(k, i) * E(i, j))
        out.append(E(i, k, True) * E(i, j) + E(j, i) * E(j, k, True) + E(k, j, True) * E(i, k, True))
    for i, j in itertools.permutations(range(1, n + 1), 2):
        out.append(E(i, j) * S(i) + S(j) * E(i, j) + S(i) * E(i, j, True) + E(i, j, True) * S(j))
    return out


# -- algebras ------------------------------------------------------------------


class WoronowiczAlgebra(AlgebraHandle):
    """Tensor algebra modulo the kernels of all antisymmetrizers.

    Only dimensions and membership (via A_d) are available; there is no
    ideal normal form.
    """

    ideal_presented = False

    def __init__(self, rs: RootSystem, cap: int = DEFAULT_CAP):
        super().__init__([r.label for r in rs.refl], (), kind="woronowicz",
                         name=f"{rs.name}/woronowicz", cap=cap, root_system=rs)
        self._dims: Dict[int, int] = {}

    def dim(self, d: int) -> int:
        if d not in self._dims:
            self._dims[d] = woronowicz_dim(self.root_system, d, self.cap)
        return self._dims[d]

    def hilbert(self, d_max: int) -> List[int]:
        return [self.dim(d) for d in range(d_max + 1)]

    def level(self, d: int):
        raise TypeError("woronowicz algebra has no standard-monomial levels")

    def is_zero(self, x: NCPoly) -> bool:
        return all(antisymmetrize(self.root_system, c).is_zero()
                   for c in x.homogeneous_components().values())


def _word_id(w: Word, g: int) -> int:
    k = 0
    for a in w:
        k = k * g + a
    return k


def woronowicz_dim(rs: RootSystem, d: int, cap: int = DEFAULT_CAP,
                   via: Optional[AlgebraHandle] = None) -> int:
    """rank of A_d on the g**d-dimensional tensor space.

    With ``via`` (an ideal-presented algebra whose ideal lies in the kernels
    of the antisymmetrizers, e.g. the quad or quar algebra) A_d is applied
    only to its standard monomials, which has the same rank.
    """
    g = rs.ngens
    if d <= 1:
        return g ** d
    words = via.level(d).std if via is not None else None
    nwords = len(words) if words is not None else g ** d
    work = factorial(d) * nwords
    if work > cap:
        raise CapExceeded(f"{rs.name} antisymmetrizer A_{d}", work, cap)
    if words is None:
        words = itertools.product(range(g), repeat=d)
    tab = _conj(rs)
    ech = Echelonizer()
    for w in words:
        row: Row = {}
        for img, s in _antisym_images(tab, tuple(w)).items():
            row[_word_id(img, g)] = mpq(s)
        ech.add(row)
    return ech.rank


def woronowicz_dims(rs: RootSystem, d_max: int, cap: int = DEFAULT_CAP,
                    via: Optional[AlgebraHandle] = None) -> List[int]:
    return [woronowicz_dim(rs, d, cap, via) for d in range(d_max + 1)]


_ALGEBRAS: Dict[Tuple, AlgebraHandle] = {}


def algebra(rs: RootSystem, kind: str = "quad", cap: int = DEFAULT_CAP,
            cache_dir: Optional[str] = None) -> AlgebraHandle:
    """Shared handle for the quad / quar / woronowicz / anticomm algebra of a root system."""
    key = (rs.name, kind, cap, cache_dir)
    h = _ALGEBRAS.get(key)
    if h is not None:
        return h
    labels = [r.label for r in rs.refl]
    if kind == "quad":
        h = AlgebraHandle(labels, quad_relations(rs), kind="quad", name=f"{rs.name}/quad",
                          cap=cap, cache_dir=cache_dir, cache_key=f"{rs.name}/quad",
                          root_system=rs)
    elif kind == "quar":
        if rs.type != "B":
            raise ValueError("the quartic algebra is defined for type B only")
        h = AlgebraHandle(labels, quad_relations(rs) + quartic_relations_B(rs), kind="quar",
                          name=f"{rs.name}/quar", cap=cap, cache_dir=cache_dir,
                          cache_key=f"{rs.name}/quar", root_system=rs)
    elif kind == "woronowicz":
        h = WoronowiczAlgebra(rs, cap=cap)
    elif kind.startswith("anticomm"):
        inner = kind[len("anticomm"):].strip("()-_") or "quad"
        h = anticommutative_quotient(algebra(rs, inner, cap, cache_dir))
    else:
        raise ValueError(f"unknown algebra kind {kind!r}")
    _ALGEBRAS[key] = h
    return h


# -- forms, differential, curvature ------------------------------------------


def canonical_theta(rs: RootSystem, cls: str = "all") -> NCPoly:
    """Sum of e_a over all reflections, or over the long / short ones."""
    if cls == "all":
        return NCPoly.linear({r.index: 1 for r in rs.refl})
    if cls not in ("long", "short"):
        raise ValueError(f"unknown class {cls!r}")
    if rs.simply_laced:
        raise ValueError(f"{rs.name} is simply laced; there is no {cls} class")
    return NCPoly.linear({r.index: 1 for r in rs.refl if r.cls == cls})


def differential(h: AlgebraHandle, x: NCPoly) -> NCPoly:
    """d x = theta x - (-1)^k x theta for x homogeneous of degree k, in normal form."""
    k = x.degree()
    if k < 0:
        return NCPoly()
    theta = canonical_theta(h.root_system)
    sign = -1 if k % 2 else 1
    return h.product(theta, x) - sign * h.product(x, theta)


def curvature(h: AlgebraHandle, eta: NCPoly) -> NCPoly:
    """F(eta) = d eta + eta eta, in normal form."""
    if eta.is_zero():
        return NCPoly()
    if eta.degree() != 1:
        raise ValueError("a connection form has degree 1")
    return differential(h, eta) + h.product(eta, eta)


@dataclass
class H1Result:
    dimension: int
    basis: List[NCPoly]


def closed_form_matrix(h: AlgebraHandle) -> SparseMatrix:
    """Columns: normal forms of d(e_a) in degree-2 standard coordinates."""
    rs = h.root_system
    ents = []
    for a in range(rs.ngens):
        _, vec = h.vec_of(differential(h, NCPoly.gen(a)))
        ents.extend((row, a, c) for row, c in vec.items())
    return SparseMatrix(h.level(2).dim, rs.ngens, tuple(ents))


def h1(rs: RootSystem, cap: int = DEFAULT_CAP, cache_dir: Optional[str] = None) -> H1Result:
    """Closed 1-forms (exact ones vanish because d(1) = 0)."""
    h = algebra(rs, "quad", cap, cache_dir)
    basis = [NCPoly.linear(v) for v in kernel_basis(closed_form_matrix(h))]
    return H1Result(len(basis), basis)


def theta_square_commutator(h: AlgebraHandle, x: NCPoly) -> NCPoly:
    """d(d x) = theta^2 x - x theta^2 in normal form; zero iff d^2 x = 0."""
    theta = canonical_theta(h.root_system)
    return h.product(theta, theta, x) - h.product(x, theta, theta)
