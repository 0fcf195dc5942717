import itertools
from fractions import Fraction

import pytest

from weylcalc.weyl import (
    GroupElement,
    UnsupportedRootSystem,
    build_root_system,
    conjugate_reflection,
    determinant,
    dot,
    element_action_on_reflections,
    fundamental_weights,
    orthogonalize_weights,
    reflections,
)


@pytest.mark.parametrize("t,r,nroots,nrefl", [
    ("A", 2, 6, 3), ("A", 3, 12, 6), ("B", 2, 8, 4), ("B", 3, 18, 9),
    ("D", 3, 12, 6), ("D", 4, 24, 12), ("G2", None, 12, 6),
])
def test_counts(t, r, nroots, nrefl):
    rs = build_root_system(t, r)
    assert len(rs.roots) == nroots
    assert len(reflections(rs)) == nrefl


def test_generator_order():
    assert [r.label for r in build_root_system("B", 2).refl] == ["(12)", "(12)~", "(1)", "(2)"]
    assert [r.label for r in build_root_system("A", 3).refl] == ["(12)", "(13)", "(14)", "(23)", "(24)", "(34)"]
    assert [r.label for r in build_root_system("G2").refl] == [f"a{i}" for i in range(1, 7)]


def test_g2_positive_roots():
    rs = build_root_system("G2")
    alpha, beta = rs.simple_roots
    expected = {
        tuple(alpha), tuple(beta),
        tuple(a + b for a, b in zip(alpha, beta)),
        tuple(2 * a + b for a, b in zip(alpha, beta)),
        tuple(3 * a + b for a, b in zip(alpha, beta)),
        tuple(3 * a + 2 * b for a, b in zip(alpha, beta)),
    }
    assert {tuple(r) for r in rs.positive_roots} == expected
    assert [r.cls for r in rs.refl] == ["short", "long"] * 3


def test_b_classes():
    rs = build_root_system("B", 3)
    assert sum(r.cls == "long" for r in rs.refl) == 6
    assert sum(r.cls == "short" for r in rs.refl) == 3


def test_unsupported():
    with pytest.raises(UnsupportedRootSystem):
        build_root_system("E", 6)
    with pytest.raises(UnsupportedRootSystem):
        build_root_system("B", 1)


def test_conjugation_examples():
    a2 = build_root_system("A", 2)
    r = {x.label: x for x in a2.refl}
    assert conjugate_reflection(a2, r["(12)"], r["(12)"]) == r["(12)"]
    assert conjugate_reflection(a2, r["(12)"], r["(23)"]) == r["(13)"]
    b2 = build_root_system("B", 2)
    s = {x.label: x for x in b2.refl}
    assert conjugate_reflection(b2, s["(12)"], s["(1)"]) == s["(2)"]


def test_determinant_examples(systems):
    rs = systems["B2"]
    e = GroupElement.identity(rs.dim)
    assert determinant(e) == 1
    for a in rs.refl:
        assert determinant(rs.element(a)) == -1
    for a, b in itertools.combinations(rs.refl, 2):
        assert determinant(rs.element(a) * rs.element(b)) == 1


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "B3", "D3", "G2"])
def test_group_preserves_inner_products(systems, name):
    rs = systems[name]
    roots = rs.roots
    for w in rs.group():
        images = [w.act(g) for g in roots]
        assert {tuple(x) for x in images} == {tuple(x) for x in roots}
        for i in range(0, len(roots), 3):
            for j in range(len(roots)):
                assert dot(images[i], images[j]) == dot(roots[i], roots[j])


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "B3", "D3", "G2"])
def test_conjugation_is_an_action(systems, name):
    rs = systems[name]
    R = rs.refl
    for a, b, c in itertools.product(R, repeat=3):
        ab = rs.element(a) * rs.element(b)
        lhs = R[element_action_on_reflections(rs, ab)[c.index]]
        assert lhs == conjugate_reflection(rs, a, conjugate_reflection(rs, b, c))


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "B3", "D3", "D4", "G2"])
def test_reflection_set_closed(systems, name):
    rs = systems[name]
    for w in rs.group() if rs.ngens <= 9 else [rs.element(r) for r in rs.refl]:
        perm = element_action_on_reflections(rs, w)
        assert sorted(perm) == list(range(rs.ngens))


@pytest.mark.parametrize("name", ["A2", "B2", "B3", "G2"])
def test_determinant_homomorphism(systems, name):
    rs = systems[name]
    G = rs.group()
    for v in G[:12]:
        for w in G:
            assert determinant(v * w) == determinant(v) * determinant(w)


def test_group_orders(systems):
    assert len(systems["A3"].group()) == 24
    assert len(systems["B3"].group()) == 48
    assert len(systems["G2"].group()) == 12


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "B3", "D3", "D4", "G2"])
def test_fundamental_weights_dual_to_coroots(systems, name):
    rs = systems[name]
    om = fundamental_weights(rs)
    for i, w in enumerate(om):
        for j, a in enumerate(rs.simple_roots):
            pairing = dot(w, rs.coroot(a))
            assert pairing == (1 if i == j else 0)


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "B3", "D3", "G2"])
def test_orthogonalized_weights(systems, name):
    ws = orthogonalize_weights(systems[name])
    assert ws[0].nu == ws[0].omega
    for a, b in itertools.combinations(ws, 2):
        assert dot(a.nu, b.nu) == 0


def test_a2_first_weight_unchanged(systems):
    ws = orthogonalize_weights(systems["A2"])
    assert tuple(ws[0].nu) == (Fraction(1), Fraction(0), Fraction(0))
