"""Flat connections on Weyl groups and the identities they satisfy.

Connections
-----------
``theta_i``        the explicit families for A_{n-1}, B_n, D_n
``theta_general``  sum over roots gamma with <nu_alpha, gamma> > 0 of
                   <nu_alpha, gamma_vee> e_{s_gamma}, nu the Gram-Schmidt
                   orthogonalized fundamental weights

Group action and twisted derivations
------------------------------------
``weyl_action(w, x)`` is the signed algebra map e_{s_gamma} -> det(w) e_{s_{w gamma}}.
``natural_action(w, x)`` is the plain permutation of generators.  The
twisted derivation is

    D_gamma(x) = e_gamma x - (-1)^{deg x} s_gamma(x) e_gamma

with s_gamma the natural action, equivalently e_gamma x - weyl_action(s_gamma, x) e_gamma.

Identity checks
---------------
:func:`verify_identity` builds the element claimed to vanish and reduces it
in the relevant algebra; a check passes iff the normal form is exactly zero.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .calculus import (
    _conj,
    algebra,
    antisymmetrize,
    curvature,
    psi_i,
    quad_relations,
    quartic_relations_B,
    woronowicz_dim,
)
from .ncalg import DEFAULT_CAP, AlgebraHandle, CapExceeded, NCPoly, hilbert_dims, subalgebra_dims
from .weyl import (
    GroupElement,
    Reflection,
    RootSystem,
    build_root_system,
    determinant,
    dot,
    element_action_on_reflections,
    orthogonalize_weights,
)

# -- theta families --------------------------------------------------------------


def _pair(rs: RootSystem, i: int, j: int, bar: bool = False) -> int:
    i, j = min(i, j), max(i, j)
    return rs.reflection_by_label(f"({i}{j})" + ("~" if bar else "")).index


def e(rs: RootSystem, i: int, j: int, bar: bool = False) -> NCPoly:
    """Generator for the transposition-type reflection (ij), barred if requested."""
    return NCPoly.gen(_pair(rs, i, j, bar))


def theta_i(rs: RootSystem, i: int) -> NCPoly:
    if rs.type not in ("A", "B", "D"):
        raise ValueError(f"theta_i is defined for types A, B, D, not {rs.name}")
    n = rs.n
    if not 1 <= i <= n:
        raise ValueError(f"index {i} out of range 1..{n}")
    coeffs: Dict[int, int] = {}
    for j in range(1, n + 1):
        if j == i:
            continue
        coeffs[_pair(rs, i, j)] = 1
        if rs.type in ("B", "D"):
            coeffs[_pair(rs, i, j, True)] = 1
    if rs.type == "B":
        coeffs[rs.reflection_by_label(f"({i})").index] = 2
    return NCPoly.linear(coeffs)


def theta_family(rs: RootSystem) -> List[NCPoly]:
    return [theta_i(rs, i) for i in range(1, rs.n + 1)]


def theta_general(rs: RootSystem, alpha: int) -> NCPoly:
    """Connection built from the orthogonalized weight nu_alpha (alpha is 1-based)."""
    weights = orthogonalize_weights(rs)
    if not 1 <= alpha <= len(weights):
        raise ValueError(f"simple root index {alpha} out of range")
    nu = weights[alpha - 1].nu
    coeffs: Dict[int, Fraction] = {}
    for gamma in rs.roots:
        if dot(nu, gamma) > 0:
            c = dot(nu, rs.coroot(gamma))
            k = rs.reflection_of_root(gamma).index
            coeffs[k] = coeffs.get(k, 0) + c
    return NCPoly.linear(coeffs)


# -- Weyl group action and twisted derivations --------------------------------------


def _as_element(rs: RootSystem, w) -> GroupElement:
    if isinstance(w, Reflection):
        return rs.element(w)
    return w


def natural_action(rs: RootSystem, w, x: NCPoly) -> NCPoly:
    """Permute generators: e_{s_gamma} -> e_{s_{w gamma}}."""
    perm = element_action_on_reflections(rs, _as_element(rs, w))
    return x.map_words(lambda word: (1, tuple(perm[a] for a in word)))


def weyl_action(rs: RootSystem, w, x: NCPoly) -> NCPoly:
    """Algebra map e_{s_gamma} -> det(w) e_{s_{w gamma}}."""
    g = _as_element(rs, w)
    perm = element_action_on_reflections(rs, g)
    det = determinant(g)
    return x.map_words(lambda word: (det ** len(word), tuple(perm[a] for a in word)))


def twisted_derivation(rs: RootSystem, gamma: Reflection, x: NCPoly,
                       h: Optional[AlgebraHandle] = None) -> NCPoly:
    """D_gamma(x) = e_gamma x - (-1)^{deg x} s_gamma(x) e_gamma, reduced when h is given."""
    eg = NCPoly.gen(gamma.index)
    out = NCPoly()
    for k, comp in x.homogeneous_components().items():
        sign = -1 if k % 2 else 1
        out = out + eg * comp - sign * natural_action(rs, gamma, comp) * eg
    if h is not None:
        from .ncalg import normal_form
        out = normal_form(h, out)
    return out


def _rewrite_generator(rs: RootSystem, g: int, a: int) -> NCPoly:
    """D_g(e_a) with the Psi-orbit sum of e_g e_a removed.

    D_g(e_a) = (1 + Psi)(e_g e_a); modulo the orbit sum this is minus the
    rest of the orbit, and zero for orbits of length <= 2.
    """
    tab = _conj(rs)
    orbit = [(g, a)]
    while True:
        u, v = orbit[-1]
        nxt = (tab[u][v], u)
        if nxt == orbit[0]:
            break
        orbit.append(nxt)
    if len(orbit) <= 2:
        return NCPoly()
    return NCPoly({w: -1 for w in orbit[2:]})


def derivation_by_leibniz(rs: RootSystem, gamma: Reflection, x: NCPoly) -> NCPoly:
    """Free-algebra lift of D_gamma from reduced generator values and the twisted Leibniz rule."""
    conj = _conj(rs)[gamma.index]
    out = NCPoly()
    cache: Dict[int, NCPoly] = {}
    for word, c in x.terms.items():
        for i, a in enumerate(word):
            if a not in cache:
                cache[a] = _rewrite_generator(rs, gamma.index, a)
            da = cache[a]
            if da.is_zero():
                continue
            left = NCPoly.word(tuple(conj[b] for b in word[:i]), (-1) ** i)
            out = out + c * (left * da * NCPoly.word(word[i + 1:]))
    return out


def cyclic_by_derivations(rs: RootSystem, a: Sequence[int]) -> NCPoly:
    """Apply D_{(a_{k-1} a_k)} ... D_{(a_2 a_3)} to (a_1 a_2)^2 via the Leibniz lift."""
    x = e(rs, a[0], a[1]) * e(rs, a[0], a[1])
    for i in range(1, len(a) - 1):
        gamma = rs.refl[_pair(rs, a[i], a[i + 1])]
        x = derivation_by_leibniz(rs, gamma, x)
    return x


# -- elements claimed to vanish -------------------------------------------------------


def _prod(factors: Sequence[NCPoly]) -> NCPoly:
    out = NCPoly.one()
    for f in factors:
        out = out * f
    return out


def cyclic_element(rs: RootSystem, a: Sequence[int]) -> NCPoly:
    """sum_{i=2}^k (-1)^{k(i-1)} (a1 ai)(a1 a_{i+1})...(a1 ak)(a1 a2)...(a1 ai)."""
    k = len(a)
    out = NCPoly()
    for i in range(2, k + 1):
        idx = list(range(i, k + 1)) + list(range(2, i + 1))
        term = _prod([e(rs, a[0], a[t - 1]) for t in idx])
        out = out + (-1) ** (k * (i - 1)) * term
    return out


def chain_element(rs: RootSystem, a: Sequence[int]) -> NCPoly:
    """Four-term identity on distinct a_1..a_{k+1}, k = len(a) - 1."""
    k = len(a) - 1
    x = lambda p, q: e(rs, a[p - 1], a[q - 1])  # noqa: E731
    prod_2k = _prod([x(1, j) for j in range(2, k + 1)])
    prod_2k1 = _prod([x(1, j) for j in range(2, k + 2)])
    prod_3k = _prod([x(1, j) for j in range(3, k + 1)])
    s = (-1) ** (k + 1)
    return (
        prod_2k * x(1, 2) * x(1, k + 1)
        + s * x(1, k + 1) * prod_2k * x(1, 2)
        + prod_2k1 * x(2, k + 1)
        + s * x(2, k + 1) * x(1, k + 1) * prod_3k * x(1, 2)
    )


def telescoping_element(rs: RootSystem, a: Sequence[int]) -> NCPoly:
    """sum_k (-1)^{(m-1)(k-1)} prod_{j>k}(k,j) prod_{j<k}(j,k) on labels a_1..a_m."""
    m = len(a)
    out = NCPoly()
    for k in range(1, m + 1):
        left = [e(rs, a[k - 1], a[j - 1]) for j in range(k + 1, m + 1)]
        right = [e(rs, a[j - 1], a[k - 1]) for j in range(1, k)]
        out = out + (-1) ** ((m - 1) * (k - 1)) * _prod(left + right)
    return out


def listed_instance(rs: RootSystem, family: str, k: int) -> NCPoly:
    """The worked k = 3, 4 (resp. m = 3, 4) instances on a_i = i, written out term by term."""
    x = lambda i, j: e(rs, i, j)  # noqa: E731
    if family == "cyclic" and k == 3:
        return x(1, 2) * x(1, 3) * x(1, 2) - x(1, 3) * x(1, 2) * x(1, 3)
    if family == "cyclic" and k == 4:
        return (x(1, 2) * x(1, 3) * x(1, 4) * x(1, 2) + x(1, 3) * x(1, 4) * x(1, 2) * x(1, 3)
                + x(1, 4) * x(1, 2) * x(1, 3) * x(1, 4))
    if family == "telescoping" and k == 3:
        return x(1, 2) * x(1, 3) + x(2, 3) * x(1, 2) + x(1, 3) * x(2, 3)
    if family == "telescoping" and k == 4:
        return (x(1, 2) * x(1, 3) * x(1, 4) - x(2, 3) * x(2, 4) * x(1, 2)
                + x(3, 4) * x(1, 3) * x(2, 3) - x(1, 4) * x(2, 4) * x(3, 4))
    raise UnknownIdentity(f"no listed instance for {family} k={k}")


def elementary_squares(h: AlgebraHandle, thetas: Sequence[NCPoly], k: int) -> NCPoly:
    """epsilon_k(theta_1^2, ..., theta_n^2) in normal form, products in increasing index."""
    out = NCPoly()
    for sub in itertools.combinations(range(len(thetas)), k):
        factors = []
        for i in sub:
            factors.extend([thetas[i], thetas[i]])
        out = out + h.product(*factors)
    return out


def hat_sum(h: AlgebraHandle, thetas: Sequence[NCPoly]) -> NCPoly:
    """sum_i (-1)^{i+1} theta_1 ... (theta_i omitted) ... theta_n, in normal form."""
    n = len(thetas)
    out = NCPoly()
    for i in range(n):
        rest = [t for j, t in enumerate(thetas) if j != i]
        out = out + (-1) ** i * h.product(*rest)
    return out


def hat_expansion_difference(rs: RootSystem, h: AlgebraHandle, k: int) -> NCPoly:
    """prod_{j != k} theta_j  minus  sum_sigma (-1)^{l(sigma)} prod_{j != k} (sigma(j), k)."""
    n = rs.n
    thetas = theta_family(rs)
    lhs = h.product(*[thetas[j - 1] for j in range(1, n + 1) if j != k])
    others = [j for j in range(1, n + 1) if j != k]
    rhs = NCPoly()
    for perm in itertools.permutations(others):
        inv = sum(1 for p in range(len(perm)) for q in range(p + 1, len(perm)) if perm[p] > perm[q])
        rhs = rhs + (-1) ** inv * _prod([e(rs, s, k) for s in perm])
    return lhs - h.product(rhs) if not rhs.is_zero() else lhs


# -- reports ---------------------------------------------------------------------------


@dataclass
class VerificationReport:
    name: str
    params: Dict[str, object]
    status: str
    witness: Optional[str] = None
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> Dict[str, object]:
        d = asdict(self)
        if d["witness"] is None:
            del d["witness"]
        return d

    @classmethod
    def from_dict(cls, d: Dict[str, object]) -> "VerificationReport":
        return cls(d["name"], dict(d["params"]), d["status"], d.get("witness"), d.get("seconds", 0.0))


class UnknownIdentity(KeyError):
    pass


def _check(elems: Sequence[Tuple[str, NCPoly]], labels) -> Optional[str]:
    """Return a witness description for the first nonzero element, else None."""
    for tag, x in elems:
        if not x.is_zero():
            shown = x.pretty(labels)
            if len(shown) > 400:
                shown = shown[:400] + " ..."
            return f"{tag}: {shown}" if tag else shown
    return None


def _rs_from(params: Dict[str, object], default_type: str) -> RootSystem:
    return build_root_system(str(params.get("type", default_type)), params.get("rank"))


def _a_rs_for(n: int) -> RootSystem:
    return build_root_system("A", n - 1)


def _verify_elements(name: str, params: Dict[str, object], cap: int, cache_dir: Optional[str]):
    """Return (labels, [(tag, normal form that must vanish)]) for one identity instance."""
    p = params
    if name == "cyclic":
        a = list(p["a"])
        rs = _a_rs_for(int(p.get("n", max(a))))
        h = algebra(rs, "quad", cap, cache_dir)
        return h.labels, [("", h.product(cyclic_element(rs, a)))]
    if name == "chain":
        a = list(p["a"])
        rs = _a_rs_for(int(p.get("n", max(a))))
        h = algebra(rs, "quad", cap, cache_dir)
        return h.labels, [("", h.product(chain_element(rs, a)))]
    if name == "telescoping":
        a = list(p["a"])
        rs = _a_rs_for(int(p.get("n", max(a))))
        h = algebra(rs, "quad", cap, cache_dir)
        return h.labels, [("", h.product(telescoping_element(rs, a)))]
    if name == "listed_instance":
        k = int(p["k"])
        rs = _a_rs_for(int(p.get("n", k)))
        h = algebra(rs, "quad", cap, cache_dir)
        return h.labels, [("", h.product(listed_instance(rs, str(p["family"]), k)))]
    if name in ("power_sum", "top_product", "hat_expansion", "elementary", "hat_sum",
                "square_remark", "d_family", "b_family"):
        n = int(p["n"])
        if name == "d_family":
            rs, kind = build_root_system("D", n), "quad"
        elif name == "b_family":
            rs, kind = build_root_system("B", n), "quar"
        else:
            rs, kind = _a_rs_for(n), "quad"
        if name == "b_family" and p.get("algebra") == "woronowicz":
            h = _AntisymmetrizedQuartic(rs, cap, cache_dir)
        else:
            h = algebra(rs, kind, cap, cache_dir)
        th = theta_family(rs)
        which = p.get("which", name)
        if name in ("d_family", "b_family"):
            which = p.get("which", "elementary")
        if which == "power_sum" or name == "power_sum":
            m = int(p["m"])
            total = NCPoly()
            for t in th:
                total = total + h.product(*([t] * (2 * m)))
            return h.labels, [("", total)]
        if which == "top_product":
            return h.labels, [("", h.product(*th))]
        if which == "hat_expansion":
            return h.labels, [("", hat_expansion_difference(rs, h, int(p["k"])))]
        if which == "elementary":
            return h.labels, [("", elementary_squares(h, th, int(p["k"])))]
        if which == "hat_sum":
            return h.labels, [("", hat_sum(h, th))]
        if which == "square_remark":
            hs = hat_sum(h, th)
            sq = h.product(hs, hs) if not hs.is_zero() else NCPoly()
            return h.labels, [("", elementary_squares(h, th, n - 1) - sq)]
        if which == "anticomm":
            return h.labels, _anticomm_elems(h, th)
        raise UnknownIdentity(f"{name}: unknown sub-identity {which!r}")
    if name in ("anticomm", "flat", "anticomm_general", "flat_general"):
        rs = _rs_from(p, "A")
        kind = str(p.get("algebra", "quad"))
        h = algebra(rs, kind, cap, cache_dir)
        if name.endswith("_general"):
            th = [theta_general(rs, a) for a in range(1, rs.rank + 1)]
        else:
            th = theta_family(rs)
        if name.startswith("anticomm"):
            return h.labels, _anticomm_elems(h, th)
        return h.labels, [(f"F(-theta_{i + 1})", curvature(h, -t)) for i, t in enumerate(th)]
    if name == "d_embedding":
        return _d_embedding_elems(int(p["n"]), cap, cache_dir)
    if name == "g2_relations":
        return _g2_elems(cap, cache_dir)
    if name == "remark2.3":
        return _quartic_contrast_elems(int(p.get("n", 2)), cap, cache_dir)
    raise UnknownIdentity(name)


class _AntisymmetrizedQuartic:
    """Products taken in the quartic algebra, then mapped by A_d.

    The Woronowicz algebra has no normal form, but an element vanishes
    there iff A_d kills it, and reducing modulo the quartic ideal first
    does not change A_d of it.  product() returns A_d(normal form).
    """

    def __init__(self, rs: RootSystem, cap: int, cache_dir: Optional[str]):
        self.root_system = rs
        self.inner = algebra(rs, "quar", cap, cache_dir)
        self.labels = self.inner.labels

    def product(self, *factors: NCPoly) -> NCPoly:
        nf = self.inner.product(*factors)
        if nf.is_zero():
            return nf
        return sum((antisymmetrize(self.root_system, c)
                    for c in nf.homogeneous_components().values()), NCPoly())


def _anticomm_elems(h: AlgebraHandle, th: Sequence[NCPoly]):
    out = []
    for i, j in itertools.combinations(range(len(th)), 2):
        out.append((f"theta_{i + 1} theta_{j + 1} + theta_{j + 1} theta_{i + 1}",
                    h.product(th[i], th[j]) + h.product(th[j], th[i])))
    return out


def embedding_generators(rs_d: RootSystem) -> Dict[Tuple[int, int], NCPoly]:
    """E_(ij) = e_(ij) + e_(ij)~ in the D_n algebra."""
    n = rs_d.n
    return {(i, j): e(rs_d, i, j) + e(rs_d, i, j, True)
            for i, j in itertools.combinations(range(1, n + 1), 2)}


def embed_a_into_d(rs_a: RootSystem, rs_d: RootSystem, x: NCPoly) -> NCPoly:
    """The homomorphism e_(ij) -> E_(ij) from the A_{n-1} free algebra to the D_n one."""
    E = embedding_generators(rs_d)
    imgs = {}
    for i, j in E:
        imgs[_pair(rs_a, i, j)] = E[(i, j)]
    out = NCPoly()
    for w, c in x.terms.items():
        out = out + c * _prod([imgs[a] for a in w])
    return out


def project_d_to_a(rs_d: RootSystem, rs_a: RootSystem, x: NCPoly) -> NCPoly:
    """Kill barred generators; (ij) -> (ij)."""
    back = {}
    for r in rs_d.refl:
        if not r.label.endswith("~"):
            back[r.index] = rs_a.reflection_by_label(r.label).index

    def f(word):
        if all(a in back for a in word):
            return 1, tuple(back[a] for a in word)
        return 0, word

    return x.map_words(f)


def _d_embedding_elems(n: int, cap, cache_dir):
    rs_d = build_root_system("D", n)
    rs_a = build_root_system("A", n - 1)
    h = algebra(rs_d, "quad", cap, cache_dir)
    E = embedding_generators(rs_d)
    key = lambda i, j: (min(i, j), max(i, j))  # noqa: E731
    out = []
    for (i, j), x in E.items():
        out.append((f"E({i}{j})^2", h.product(x, x)))
    for (p, q) in itertools.combinations(E, 2):
        if set(p) & set(q):
            continue
        out.append((f"E{p}E{q}+E{q}E{p}", h.product(E[p], E[q]) + h.product(E[q], E[p])))
    for i, j, k in itertools.permutations(range(1, n + 1), 3):
        a, b, c = E[key(i, j)], E[key(j, k)], E[key(k, i)]
        out.append((f"3-term({i}{j}{k})", h.product(a, b) + h.product(b, c) + h.product(c, a)))
    # every defining relation of the A_{n-1} algebra maps into the ideal
    for r in quad_relations(rs_a):
        out.append(("iota(relation)", h.product(embed_a_into_d(rs_a, rs_d, r))))
    # pi o iota = id on generators
    for r in rs_a.refl:
        g = NCPoly.gen(r.index)
        back = project_d_to_a(rs_d, rs_a, embed_a_into_d(rs_a, rs_d, g))
        out.append((f"pi(iota({r.label})) - {r.label}", back - g))
    # theta identification
    for i in range(1, n + 1):
        diff = embed_a_into_d(rs_a, rs_d, theta_i(rs_a, i)) - theta_i(rs_d, i)
        out.append((f"iota(theta_{i}^A) - theta_{i}^D", diff))
    return h.labels, out


def g2_listed_relations(rs: RootSystem) -> List[NCPoly]:
    """Degree-2 relations of the G2 example, on generators e_1..e_6 = a1..a6."""
    E = [NCPoly.gen(k) for k in range(6)]
    x = lambda i: E[i - 1]  # noqa: E731
    rels = [x(i) * x(i) for i in range(1, 7)]
    rels += [x(1) * x(4) + x(4) * x(1), x(2) * x(5) + x(5) * x(2), x(3) * x(6) + x(6) * x(3)]
    rels += [x(1) * x(3) + x(3) * x(5) + x(5) * x(1), x(3) * x(1) + x(5) * x(3) + x(1) * x(5)]
    rels += [x(2) * x(4) + x(4) * x(6) + x(6) * x(2), x(4) * x(2) + x(6) * x(4) + x(2) * x(6)]
    rels.append(sum((x(i) * x(i % 6 + 1) for i in range(1, 7)), NCPoly()))
    rels.append(sum((x(i % 6 + 1) * x(i) for i in range(1, 7)), NCPoly()))
    return rels


def g2_etas() -> Tuple[NCPoly, NCPoly]:
    eta1 = -NCPoly.linear({0: 2, 1: 1, 2: 1, 4: 1, 5: 1})
    eta2 = -NCPoly.linear({1: 1, 2: 1, 3: 2, 4: 1, 5: 1})
    return eta1, eta2


def _g2_elems(cap, cache_dir):
    rs = build_root_system("G2")
    h = algebra(rs, "quad", cap, cache_dir)
    out = []
    for r in g2_listed_relations(rs):
        out.append((f"(1-Psi)[{r.pretty(h.labels)}]", r - psi_i(rs, r, 1)))
    eta1, eta2 = g2_etas()
    out.append(("F(eta1)", curvature(h, eta1)))
    out.append(("F(eta2)", curvature(h, eta2)))
    out.append(("eta1 eta2 + eta2 eta1", h.product(eta1, eta2) + h.product(eta2, eta1)))
    return h.labels, out


def _quartic_contrast_elems(n: int, cap, cache_dir):
    rs = build_root_system("B", n)
    h = algebra(rs, "quad", cap, cache_dir)
    out = []
    for k, q in enumerate(quartic_relations_B(rs)):
        out.append((f"A_4(quartic {k})", antisymmetrize(rs, q)))
        nf = h.product(q)
        # must NOT vanish in the quadratic algebra
        out.append((f"quartic {k} vanishes in quad", NCPoly() if not nf.is_zero() else q))
    return h.labels, out


def verify_identity(name: str, params: Optional[Dict[str, object]] = None,
                    cap: int = DEFAULT_CAP, cache_dir: Optional[str] = None) -> VerificationReport:
    """Reduce the named identity instance; pass iff every element has zero normal form."""
    params = dict(params or {})
    t0 = time.perf_counter()
    labels, elems = _verify_elements(name, params, cap, cache_dir)
    witness = _check(elems, labels)
    status = "pass" if witness is None else "fail"
    return VerificationReport(name, params, status, witness, round(time.perf_counter() - t0, 4))


# -- suites -----------------------------------------------------------------------------

D_FAMILY_MAX_K = 3

SUITES = (
    "lemma5.1", "lemma5.2", "lemma5.3", "lemma5.4", "lemma5.5", "cor5.1", "cor5.2",
    "thm5.1", "prop5.1", "prop3.2", "example3.1", "remark2.3", "square_remark",
    "conj5.1b", "all",
)


def suite_instances(suite: str, type_: Optional[str] = None, rank: Optional[int] = None
                    ) -> List[Tuple[str, Dict[str, object]]]:
    """Identity instances making up a named suite.

    ``rank`` is the root-system rank; for type A the number of theta's is
    rank + 1.  Without a rank each suite uses the sizes it was designed for.
    """
    def a_sizes(default):
        if rank is None:
            return default
        return [rank + 1]

    out: List[Tuple[str, Dict[str, object]]] = []
    if suite == "lemma5.1":
        for k in (a_sizes([3, 4])):
            out.append(("cyclic", {"a": list(range(1, k + 1))}))
            if k in (3, 4):
                out.append(("listed_instance", {"family": "cyclic", "k": k}))
    elif suite == "lemma5.2":
        for k in ([rank] if rank else [3, 4]):
            out.append(("chain", {"a": list(range(1, k + 2))}))
    elif suite == "lemma5.3":
        for n in a_sizes([3, 4]):
            out.append(("top_product", {"n": n, "which": "top_product"}))
    elif suite == "lemma5.4":
        for n in a_sizes([3, 4]):
            for k in range(1, n + 1):
                out.append(("hat_expansion", {"n": n, "k": k, "which": "hat_expansion"}))
    elif suite == "lemma5.5":
        for m in a_sizes([3, 4]):
            out.append(("telescoping", {"a": list(range(1, m + 1))}))
            if m in (3, 4):
                out.append(("listed_instance", {"family": "telescoping", "k": m}))
    elif suite == "cor5.1":
        pairs = [(3, 1), (3, 2), (4, 1)] if rank is None else [(rank + 1, 1)]
        for n, m in pairs:
            out.append(("power_sum", {"n": n, "m": m}))
    elif suite == "thm5.1":
        for n in a_sizes([3, 4]):
            for k in range(1, n + 1):
                out.append(("elementary", {"n": n, "k": k, "which": "elementary"}))
            out.append(("top_product", {"n": n, "which": "top_product"}))
            out.append(("hat_sum", {"n": n, "which": "hat_sum"}))
    elif suite == "square_remark":
        for n in a_sizes([3, 4]):
            out.append(("square_remark", {"n": n, "which": "square_remark"}))
    elif suite == "prop5.1":
        for n in ([rank] if rank else [3, 4]):
            out.append(("d_embedding", {"n": n}))
    elif suite == "cor5.2":
        for n in ([rank] if rank else [3, 4]):
            # epsilon_k sits in degree 2k; without an explicit rank, D_4 stops at
            # k = 3 because its degree-8 piece alone takes about ten minutes
            kmax = n if rank else min(n, D_FAMILY_MAX_K)
            for k in range(1, kmax + 1):
                out.append(("d_family", {"n": n, "k": k, "which": "elementary"}))
            out.append(("d_family", {"n": n, "which": "top_product"}))
            out.append(("d_family", {"n": n, "which": "hat_sum"}))
    elif suite == "conj5.1b":
        for n in ([rank] if rank else [2, 3]):
            out.append(("b_family", {"n": n, "which": "anticomm"}))
            for k in range(1, n + 1):
                out.append(("b_family", {"n": n, "k": k, "which": "elementary"}))
            out.append(("b_family", {"n": n, "k": n, "which": "elementary",
                                     "algebra": "woronowicz"}))
    elif suite == "prop3.2":
        systems = [(type_, rank)] if type_ else [("A", 2), ("A", 3), ("B", 2), ("B", 3), ("D", 3)]
        for t, r in systems:
            out.append(("anticomm", {"type": t, "rank": r}))
            out.append(("flat", {"type": t, "rank": r}))
    elif suite == "example3.1":
        out.append(("g2_relations", {}))
    elif suite == "remark2.3":
        out.append(("remark2.3", {"n": rank or 2}))
    elif suite == "all":
        for s in SUITES:
            if s != "all":
                out.extend(suite_instances(s))
    else:
        raise UnknownIdentity(f"unknown suite {suite!r}; known: {', '.join(SUITES)}")
    return out


def run_suite(suite: str, type_: Optional[str] = None, rank: Optional[int] = None,
              cap: int = DEFAULT_CAP, cache_dir: Optional[str] = None) -> List[VerificationReport]:
    return [verify_identity(name, params, cap, cache_dir)
            for name, params in suite_instances(suite, type_, rank)]


# -- conjecture comparisons -----------------------------------------------------------------


@dataclass
class ComparisonReport:
    conjecture: str
    params: Dict[str, object]
    left_label: str
    right_label: str
    degrees: List[int]
    left: List[int]
    right: List[int]
    notes: List[str] = field(default_factory=list)

    @property
    def agree(self) -> List[bool]:
        return [a == b for a, b in zip(self.left, self.right)]

    @property
    def all_agree(self) -> bool:
        return all(self.agree)

    def to_dict(self) -> Dict[str, object]:
        d = asdict(self)
        d["agree"] = self.agree
        return d


def model_algebra(rs: RootSystem, cap: int = DEFAULT_CAP) -> AlgebraHandle:
    """Abstract algebra on theta_1..theta_n presented by the conjectured relations."""
    n = rs.n
    T = [NCPoly.gen(i) for i in range(n)]
    rels = [T[i] * T[j] + T[j] * T[i] for i, j in itertools.combinations(range(n), 2)]
    for k in range(1, n + 1):
        el = NCPoly()
        for sub in itertools.combinations(range(n), k):
            el = el + _prod([T[i] * T[i] for i in sub])
        rels.append(el)
    if rs.type in ("A", "D"):
        rels.append(_prod(T))
        hs = NCPoly()
        for i in range(n):
            hs = hs + (-1) ** i * _prod([T[j] for j in range(n) if j != i])
        rels.append(hs)
    labels = [f"t{i + 1}" for i in range(n)]
    return AlgebraHandle(labels, rels, kind="model", name=f"{rs.name}/theta-model", cap=cap)


def woronowicz_series(rs: RootSystem, d_max: int, cap: int, h: AlgebraHandle):
    """A_d ranks on the full tensor space where the cap allows, else on h's standard monomials."""
    out, notes = [], []
    for d in range(d_max + 1):
        try:
            out.append(woronowicz_dim(rs, d, cap))
        except CapExceeded:
            out.append(woronowicz_dim(rs, d, cap, via=h))
            notes.append(f"degree {d}: A_{d} rank taken on the standard monomials of {h.name}")
    return out, notes


def check_conjecture(which: str, rs: RootSystem, d_max: int, cap: int = DEFAULT_CAP,
                     cache_dir: Optional[str] = None) -> ComparisonReport:
    """Degreewise dimension comparison; agreement is reported, never asserted."""
    degrees = list(range(d_max + 1))
    params = {"type": rs.type, "rank": rs.rank, "max_deg": d_max}
    if which in ("2.1", "2.2"):
        kind = "quad" if which == "2.1" else "quar"
        if kind == "quar" and rs.type != "B":
            raise ValueError("conjecture 2.2 concerns type B")
        h = algebra(rs, kind, cap, cache_dir)
        right = hilbert_dims(h, d_max)
        left, notes = woronowicz_series(rs, d_max, cap, h)
        return ComparisonReport(which, params, "woronowicz", kind, degrees, left, right, notes)
    if which == "5.1":
        kind = "quar" if rs.type == "B" else "quad"
        h = algebra(rs, kind, cap, cache_dir)
        left = subalgebra_dims(h, theta_family(rs), d_max)
        right = hilbert_dims(model_algebra(rs, cap), d_max)
        notes = [f"theta subalgebra computed inside {h.name}"]
        return ComparisonReport(which, params, "theta-subalgebra", "model", degrees, left, right, notes)
    raise ValueError(f"unknown conjecture {which!r}; expected 2.1, 2.2 or 5.1")
