"""Graded quotients of free associative algebras by homogeneous relations.

An algebra is presented by generators and homogeneous relations.  Degree
``d`` of the quotient is built from degree ``d - 1``: since

    I_d = I_{d-1} (x) V  +  sum_k V^{d-k} R_k,

the quotient A_d is (A_{d-1} (x) V) modulo the images of m * r for standard
monomials m of degree d - k and relations r of degree k.  That working
space has dim(A_{d-1}) * g coordinates instead of g**d, and its reduced
echelon form picks out exactly the same standard monomials as a full
elimination in degree-lex order would (pivot = smallest word).

Each degree keeps a right-multiplication table ``table[s][a]``: the normal
form of (standard monomial s) * e_a.  Normal forms of arbitrary words are
obtained by folding letters through these tables.
"""

from __future__ import annotations

import itertools
import logging
import threading
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from gmpy2 import mpq

from . import cache as _cache
from .linalg import Echelonizer, Rational, Row, to_rational

log = logging.getLogger(__name__)

Word = Tuple[int, ...]

DEFAULT_CAP = 2 ** 20


class CapExceeded(RuntimeError):
    """A computation would exceed the configured size cap."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class NCPoly:
    """Finitely supported rational combination of words in the generators."""

    __slots__ = ("terms",)

    def __init__(self, terms: Optional[Mapping[Word, object]] = None):
        clean: Dict[Word, Rational] = {}
        if terms:
            for w, c in terms.items():
                c = to_rational(c)
                if c:
                    clean[tuple(w)] = c
        self.terms = clean

    @classmethod
    def one(cls) -> "NCPoly":
        return cls({(): 1})

    @classmethod
    def gen(cls, i: int, coeff=1) -> "NCPoly":
        return cls({(i,): coeff})

    @classmethod
    def word(cls, w: Sequence[int], coeff=1) -> "NCPoly":
        return cls({tuple(w): coeff})

    @classmethod
    def linear(cls, coeffs: Mapping[int, object]) -> "NCPoly":
        return cls({(i,): c for i, c in coeffs.items()})

    @classmethod
    def _raw(cls, terms: Dict[Word, Rational]) -> "NCPoly":
        p = cls.__new__(cls)
        p.terms = terms
        return p

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, NCPoly):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "NCPoly") -> "NCPoly":
        if not isinstance(other, NCPoly):
            if other == 0:
                return self
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return NCPoly._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "NCPoly":
        return NCPoly._raw({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        return self + (-other)

    def __mul__(self, other) -> "NCPoly":
        if isinstance(other, NCPoly):
            out: Dict[Word, Rational] = {}
            for u, a in self.terms.items():
                for v, b in other.terms.items():
                    w = u + v
                    s = out.get(w, 0) + a * b
                    if s:
                        out[w] = s
                    else:
                        out.pop(w, None)
            return NCPoly._raw(out)
        c = to_rational(other)
        if not c:
            return NCPoly()
        return NCPoly._raw({w: c * x for w, x in self.terms.items()})

    def __rmul__(self, other) -> "NCPoly":
        c = to_rational(other)
        if not c:
            return NCPoly()
        return NCPoly._raw({w: c * x for w, x in self.terms.items()})

    def __pow__(self, k: int) -> "NCPoly":
        out = NCPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def degrees(self) -> List[int]:
        return sorted({len(w) for w in self.terms})

    def degree(self) -> int:
        """Degree of a homogeneous element; -1 for zero."""
        ds = self.degrees()
        if not ds:
            return -1
        if len(ds) > 1:
            raise ValueError(f"not homogeneous: degrees {ds}")
        return ds[0]

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def component(self, d: int) -> "NCPoly":
        return NCPoly._raw({w: c for w, c in self.terms.items() if len(w) == d})

    def homogeneous_components(self) -> Dict[int, "NCPoly"]:
        return {d: self.component(d) for d in self.degrees()}

    def linear_coeffs(self) -> Dict[int, Rational]:
        """Coefficients of a degree-1 element, keyed by generator index."""
        if any(len(w) != 1 for w in self.terms):
            raise ValueError("not a degree-1 element")
        return {w[0]: c for w, c in self.terms.items()}

    def map_words(self, f) -> "NCPoly":
        """Apply ``f(word) -> (sign, word)`` termwise."""
        out = NCPoly()
        for w, c in self.terms.items():
            s, nw = f(w)
            if s:
                out = out + NCPoly._raw({tuple(nw): c * s})
        return out

    def sorted_terms(self) -> List[Tuple[Word, Rational]]:
        return sorted(self.terms.items(), key=lambda t: (len(t[0]), t[0]))

    def pretty(self, labels: Optional[Sequence[str]] = None) -> str:
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            mono = "".join(labels[i] if labels else f"e{i}" for i in w) or "1"
            if c == 1:
                s = f"+ {mono}"
            elif c == -1:
                s = f"- {mono}"
            elif c < 0:
                s = f"- {-c}*{mono}"
            else:
                s = f"+ {c}*{mono}"
            parts.append(s)
        out = " ".join(parts)
        return out[2:] if out.startswith("+ ") else "-" + out[1:]

    def __repr__(self) -> str:
        return f"NCPoly({self.pretty()})"


def multiply(x: NCPoly, y: NCPoly) -> NCPoly:
    return x * y


@dataclass
class Level:
    """One graded piece of the quotient."""

    degree: int
    std: List[Word]
    index: Dict[Word, int]
    # table[s][a]: normal form of std_{d-1}[s] * e_a as {std_d index: coeff}
    table: List[List[Row]] = field(default_factory=list)
    # echelon rows of the working space whose pivot is a new leading word,
    # keyed by that word; entries keyed by word
    new_rows: Dict[Word, Dict[Word, Rational]] = field(default_factory=dict)

    @property
    def dim(self) -> int:
        return len(self.std)


@dataclass
class EchelonBasis:
    """Reduced echelon basis of an ideal component in monomial coordinates.

    Monomials of degree d are indexed by their position in lexicographic
    order (the base-g integer value of the word).
    """

    degree: int
    ngens: int
    pivots: List[int]
    rows: List[Row]

    @property
    def dim(self) -> int:
        return len(self.rows)


def word_index(w: Word, g: int) -> int:
    k = 0
    for a in w:
        k = k * g + a
    return k


def index_word(k: int, d: int, g: int) -> Word:
    out = []
    for _ in range(d):
        k, r = divmod(k, g)
        out.append(r)
    return tuple(reversed(out))


class AlgebraHandle:
    """A graded algebra presented by homogeneous relations.

    Parameters
    ----------
    labels:
        generator names, in canonical order.
    relations:
        homogeneous :class:`NCPoly` relations (zero elements are dropped).
    kind:
        free-form tag, e.g. ``"quad"``, ``"quar"`` or ``"anticomm(quad)"``.
    cache_key:
        when set together with ``cache_dir``, degree pieces are persisted.
    """

    ideal_presented = True

    def __init__(
        self,
        labels: Sequence[str],
        relations: Iterable[NCPoly] = (),
        kind: str = "free",
        name: str = "",
        cap: int = DEFAULT_CAP,
        cache_dir: Optional[str] = None,
        cache_key: Optional[str] = None,
        root_system=None,
    ):
        self.labels = list(labels)
        self.ngens = len(self.labels)
        self.kind = kind
        self.name = name or kind
        self.cap = cap
        self.cache_dir = cache_dir
        self.cache_key = cache_key
        self.root_system = root_system
        rels: Dict[int, List[NCPoly]] = {}
        for r in relations:
            if r.is_zero():
                continue
            d = r.degree()
            if d == 0:
                raise ValueError("degree-0 relation collapses the algebra")
            if any(a >= self.ngens or a < 0 for w in r.terms for a in w):
                raise ValueError("relation uses a generator outside the algebra")
            rels.setdefault(d, []).append(r)
        self.relations_by_degree = rels
        self._levels: List[Level] = [Level(0, [()], {(): 0})]
        self._lock = threading.RLock()
        self.cache_events: List[Tuple[int, str]] = []

    @property
    def relations(self) -> List[NCPoly]:
        return [r for d in sorted(self.relations_by_degree) for r in self.relations_by_degree[d]]

    def __repr__(self) -> str:
        return f"AlgebraHandle({self.name!r}, gens={self.ngens}, built to degree {len(self._levels) - 1})"

    # -- construction -----------------------------------------------------

    def level(self, d: int) -> Level:
        if d < 0:
            raise ValueError("negative degree")
        if d < len(self._levels):
            return self._levels[d]
        with self._lock:
            while len(self._levels) <= d:
                self._levels.append(self._build_level(len(self._levels)))
        return self._levels[d]

    def built_degree(self) -> int:
        return len(self._levels) - 1

    def _cache_header(self, d: int) -> str:
        return _cache.header(self.cache_key, d, self.ngens, self._relation_digest())

    def _relation_digest(self) -> str:
        parts = []
        for r in self.relations:
            parts.append(";".join(f"{','.join(map(str, w))}:{c}" for w, c in r.sorted_terms()))
        return _cache.digest("|".join(parts))

    def _build_level(self, d: int) -> Level:
        prev = self._levels[d - 1]
        g = self.ngens
        ncols = prev.dim * g
        if ncols > self.cap:
            raise CapExceeded(f"{self.name} degree {d} working space", ncols, self.cap)

        path = None
        if self.cache_dir and self.cache_key:
            path = _cache.level_path(self.cache_dir, self.cache_key, d)
            loaded = _cache.read_rows(path, self._cache_header(d))
            if loaded is not None:
                pivots = {}
                for pword, entries in loaded.items():
                    row = {prev.index[w[:-1]] * g + w[-1]: c for w, c in entries.items()}
                    pivots[prev.index[pword[:-1]] * g + pword[-1]] = row
                self.cache_events.append((d, "hit"))
                return self._assemble(d, prev, pivots)

        ech = Echelonizer()
        memo: Dict[Tuple[int, int, Word], Row] = {}
        for k in sorted(self.relations_by_degree):
            if k > d:
                break
            base = self._levels[d - k]
            for rel in self.relations_by_degree[k]:
                for m in range(base.dim):
                    vec: Row = {}
                    for w, c in rel.terms.items():
                        head = self._fold_cached(d - k, m, w[:-1], memo)
                        b = w[-1]
                        for s, v in head.items():
                            col = s * g + b
                            nv = vec.get(col, 0) + c * v
                            if nv:
                                vec[col] = nv
                            else:
                                vec.pop(col, None)
                    if vec:
                        ech.add(vec)
        ech.finalize()
        level = self._assemble(d, prev, ech.pivots)
        log.debug("%s degree %d: %d standard monomials", self.name, d, level.dim)
        if path is not None:
            _cache.write_rows(path, self._cache_header(d), level.new_rows, g)
            self.cache_events.append((d, "write"))
        return level

    def _assemble(self, d: int, prev: Level, pivots: Dict[int, Row]) -> Level:
        g = self.ngens
        ncols = prev.dim * g

        def word_of(col: int) -> Word:
            s, a = divmod(col, g)
            return prev.std[s] + (a,)

        std = [word_of(c) for c in range(ncols) if c not in pivots]
        index = {w: i for i, w in enumerate(std)}
        col_to_std = {}
        for c in range(ncols):
            if c not in pivots:
                col_to_std[c] = len(col_to_std)
        table: List[List[Row]] = []
        for s in range(prev.dim):
            row_s: List[Row] = []
            for a in range(g):
                col = s * g + a
                if col in pivots:
                    prow = pivots[col]
                    row_s.append({col_to_std[c]: -v for c, v in prow.items() if c != col})
                else:
                    row_s.append({col_to_std[col]: mpq(1)})
            table.append(row_s)
        new_rows = {
            word_of(p): {word_of(c): v for c, v in row.items()} for p, row in sorted(pivots.items())
        }
        return Level(d, std, index, table, new_rows)

    def _fold_cached(self, d0: int, m: int, letters: Word, memo) -> Row:
        key = (d0, m, letters)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if not letters:
            vec = {m: mpq(1)}
        else:
            head = self._fold_cached(d0, m, letters[:-1], memo)
            vec = self.mul_gen(d0 + len(letters) - 1, head, letters[-1])
        memo[key] = vec
        return vec

    # -- arithmetic on normal-form vectors ---------------------------------

    def mul_gen(self, d: int, vec: Row, a: int) -> Row:
        """(element of degree d in std coordinates) * e_a, reduced."""
        table = self.level(d + 1).table
        out: Row = {}
        for s, c in vec.items():
            for t, v in table[s][a].items():
                nv = out.get(t, 0) + c * v
                if nv:
                    out[t] = nv
                else:
                    out.pop(t, None)
        return out

    def mul_word(self, d: int, vec: Row, word: Word) -> Row:
        for i, a in enumerate(word):
            if not vec:
                return vec
            vec = self.mul_gen(d + i, vec, a)
        return vec

    def mul_poly(self, d: int, vec: Row, poly: NCPoly) -> Row:
        """(degree-d vector) * homogeneous poly, reduced."""
        k = poly.degree()
        if k < 0:
            return {}
        out: Row = {}
        for w, c in poly.terms.items():
            part = self.mul_word(d, vec, w)
            for t, v in part.items():
                nv = out.get(t, 0) + c * v
                if nv:
                    out[t] = nv
                else:
                    out.pop(t, None)
        return out

    def vec_of(self, x: NCPoly) -> Tuple[int, Row]:
        """Normal form of a homogeneous element as (degree, std-coordinate vector)."""
        d = x.degree()
        if d < 0:
            return 0, {}
        self.level(d)
        out: Row = {}
        prefix: Dict[Word, Row] = {(): {0: mpq(1)}}
        for w, c in x.terms.items():
            vec = self._prefix_fold(w, prefix)
            for t, v in vec.items():
                nv = out.get(t, 0) + c * v
                if nv:
                    out[t] = nv
                else:
                    out.pop(t, None)
        return d, out

    def _prefix_fold(self, w: Word, prefix: Dict[Word, Row]) -> Row:
        hit = prefix.get(w)
        if hit is not None:
            return hit
        vec = self.mul_gen(len(w) - 1, self._prefix_fold(w[:-1], prefix), w[-1])
        prefix[w] = vec
        return vec

    def poly_of(self, d: int, vec: Row) -> NCPoly:
        std = self.level(d).std
        return NCPoly._raw({std[i]: c for i, c in vec.items()})

    def product(self, *factors: NCPoly) -> NCPoly:
        """Normal form of a product of homogeneous factors."""
        d, vec = 0, {0: mpq(1)}
        for f in factors:
            if f.is_zero():
                return NCPoly()
            vec = self.mul_poly(d, vec, f)
            d += f.degree()
        return self.poly_of(d, vec)

    def is_zero(self, x: NCPoly) -> bool:
        return normal_form(self, x).is_zero()


def ideal_degree_basis(h: AlgebraHandle, d: int) -> EchelonBasis:
    """Reduced echelon basis of the degree-d ideal component over all g**d monomials."""
    g = h.ngens
    total = g ** d
    if total > h.cap:
        raise CapExceeded(f"{h.name} degree {d} monomial space", total, h.cap)
    lvl = h.level(d)
    std_cols = [word_index(w, g) for w in lvl.std]
    std_set = set(lvl.std)
    rows: List[Row] = []
    pivots: List[int] = []
    # words in lex order; DFS keeps the prefix normal forms
    prefix: Dict[Word, Row] = {(): {0: mpq(1)}}
    for k in range(total):
        w = index_word(k, d, g)
        if w in std_set:
            continue
        vec = h._prefix_fold(w, prefix)
        row: Row = {k: mpq(1)}
        for i, c in vec.items():
            row[std_cols[i]] = -c
        pivots.append(k)
        rows.append(row)
    return EchelonBasis(d, g, pivots, rows)


def normal_form(h: AlgebraHandle, x: NCPoly) -> NCPoly:
    """Canonical representative of x supported on standard monomials."""
    if not h.ideal_presented:
        raise TypeError(f"{h.kind} algebras have no ideal normal form")
    out = NCPoly()
    for d, comp in x.homogeneous_components().items():
        _, vec = h.vec_of(comp)
        out = out + h.poly_of(d, vec)
    return out


def hilbert_dims(h: AlgebraHandle, d_max: int) -> List[int]:
    return [h.level(d).dim for d in range(d_max + 1)]


def subalgebra_dims(h: AlgebraHandle, gens: Sequence[NCPoly], d_max: int) -> List[int]:
    """Dimensions of the subalgebra generated by degree-1 elements, per degree."""
    for x in gens:
        if x.degree() not in (1, -1):
            raise ValueError("subalgebra generators must be homogeneous of degree 1")
    dims = [1]
    basis: List[Row] = [{0: mpq(1)}]
    for d in range(d_max):
        if not basis:
            dims.append(0)
            continue
        nrows = len(basis) * len(gens)
        if nrows > h.cap:
            raise CapExceeded(f"{h.name} subalgebra degree {d + 1}", nrows, h.cap)
        ech = Echelonizer()
        for b in basis:
            for x in gens:
                ech.add(h.mul_poly(d, b, x))
        basis = ech.rows()
        dims.append(len(basis))
    return dims


def anticommutator(x: NCPoly, y: NCPoly) -> NCPoly:
    return x * y + y * x


def anticommutative_quotient(h: AlgebraHandle) -> AlgebraHandle:
    """Add e_a e_b + e_b e_a for every pair a <= b."""
    if not h.ideal_presented:
        raise TypeError("anticommutative quotient needs an ideal-presented algebra")
    extra = [
        anticommutator(NCPoly.gen(a), NCPoly.gen(b))
        for a, b in itertools.combinations_with_replacement(range(h.ngens), 2)
    ]
    key = f"{h.cache_key}/anticomm" if h.cache_key else None
    return AlgebraHandle(
        h.labels,
        h.relations + extra,
        kind=f"anticomm({h.kind})",
        name=f"{h.name}/anticomm",
        cap=h.cap,
        cache_dir=h.cache_dir,
        cache_key=key,
        root_system=h.root_system,
    )
