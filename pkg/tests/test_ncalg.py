import itertools
import random

import pytest

from weylcalc.calculus import algebra, explicit_quad_relations_B, quad_relations
from weylcalc.ncalg import (
    AlgebraHandle,
    CapExceeded,
    NCPoly,
    anticommutative_quotient,
    hilbert_dims,
    ideal_degree_basis,
    multiply,
    normal_form,
    subalgebra_dims,
)


def random_poly(rng, g, d, nterms=4):
    terms = {}
    for _ in range(nterms):
        w = tuple(rng.randrange(g) for _ in range(d))
        terms[w] = rng.randint(-3, 3)
    return NCPoly(terms)


def test_multiply_examples():
    a, b = NCPoly.gen(0), NCPoly.gen(1)
    assert multiply(NCPoly.one(), a) == a
    assert multiply(a, b) == NCPoly.word((0, 1))
    assert multiply(a + b, a - b) == NCPoly({(0, 0): 1, (0, 1): -1, (1, 0): 1, (1, 1): -1})


def test_zero_terms_dropped():
    a = NCPoly.gen(0)
    assert (a - a).is_zero()
    assert NCPoly({(0,): 0}).terms == {}


def test_degree():
    assert NCPoly.one().degree() == 0
    assert NCPoly().degree() == -1
    with pytest.raises(ValueError):
        (NCPoly.one() + NCPoly.gen(0)).degree()


def test_ideal_basis_low_degree(systems):
    h = algebra(systems["B2"], "quad")
    assert ideal_degree_basis(h, 0).dim == 0
    assert ideal_degree_basis(h, 1).dim == 0


def test_ideal_basis_b2(systems):
    h = algebra(systems["B2"], "quad")
    assert ideal_degree_basis(h, 2).dim == 8
    assert ideal_degree_basis(h, 3).dim == 52


@pytest.mark.parametrize("name,d", [("B2", 3), ("A2", 3), ("A3", 3), ("D3", 2)])
def test_dimension_split(systems, name, d):
    h = algebra(systems[name], "quad")
    g = h.ngens
    assert ideal_degree_basis(h, d).dim + h.level(d).dim == g ** d


def test_relations_reduce_to_zero(systems):
    rs = systems["B2"]
    h = algebra(rs, "quad")
    for r in quad_relations(rs):
        assert normal_form(h, r).is_zero()


def test_cyclic_instance_a2(systems):
    rs = systems["A2"]
    h = algebra(rs, "quad")
    e12, e13 = NCPoly.gen(0), NCPoly.gen(1)
    assert normal_form(h, e12 * e13 * e12 - e13 * e12 * e13).is_zero()
    assert not normal_form(h, e12 * e13).is_zero()


def test_hilbert_examples(systems):
    rs = systems["B2"]
    assert hilbert_dims(algebra(rs, "quad"), 5) == [1, 4, 8, 12, 16, 20]
    assert hilbert_dims(algebra(rs, "quar"), 8) == [1, 4, 8, 12, 14, 12, 8, 4, 1]
    assert hilbert_dims(algebra(rs, "anticomm"), 3) == [1, 4, 5, 2]


@pytest.mark.parametrize("name", ["A2", "B2", "D3"])
def test_ideal_property(systems, name):
    rs = systems[name]
    h = algebra(rs, "quad")
    rng = random.Random(7)
    for _ in range(15):
        x = random_poly(rng, rs.ngens, rng.randint(1, 2))
        y = random_poly(rng, rs.ngens, rng.randint(1, 2))
        assert normal_form(h, x * y) == normal_form(h, normal_form(h, x) * normal_form(h, y))


def test_normal_form_is_idempotent_and_linear(systems):
    rs = systems["B2"]
    h = algebra(rs, "quad")
    rng = random.Random(3)
    for _ in range(10):
        x = random_poly(rng, 4, 3)
        y = random_poly(rng, 4, 3)
        assert normal_form(h, normal_form(h, x)) == normal_form(h, x)
        assert normal_form(h, x + 2 * y) == normal_form(h, x) + 2 * normal_form(h, y)


def test_presentation_independence(systems):
    for name in ("B2", "B3"):
        rs = systems[name]
        labels = [r.label for r in rs.refl]
        a = AlgebraHandle(labels, quad_relations(rs), name="echelon")
        b = AlgebraHandle(labels, explicit_quad_relations_B(rs), name="listed")
        d = 4 if name == "B2" else 3
        assert hilbert_dims(a, d) == hilbert_dims(b, d)


def test_monotone_under_extra_relations(systems):
    rs = systems["B2"]
    quad = hilbert_dims(algebra(rs, "quad"), 8)
    quar = hilbert_dims(algebra(rs, "quar"), 8)
    anti = hilbert_dims(algebra(rs, "anticomm"), 8)
    assert all(a <= b for a, b in zip(quar, quad))
    assert all(a <= b for a, b in zip(anti, quad))


def test_subalgebra_all_generators(systems):
    rs = systems["A2"]
    h = algebra(rs, "quad")
    gens = [NCPoly.gen(i) for i in range(rs.ngens)]
    assert subalgebra_dims(h, gens, 4) == hilbert_dims(h, 4)


def test_subalgebra_a1(systems):
    from weylcalc.connections import theta_family
    from weylcalc.weyl import build_root_system
    rs = build_root_system("A", 1)
    h = algebra(rs, "quad")
    th = theta_family(rs)
    assert th[1] == th[0]  # (12) = (21)
    assert subalgebra_dims(h, th, 3) == [1, 1, 0, 0]


def test_subalgebra_theta_a2(systems):
    from weylcalc.connections import theta_family
    rs = systems["A2"]
    h = algebra(rs, "quad")
    th = theta_family(rs)
    # brute force: span of all 27 degree-3 products
    rows = []
    for f in itertools.product(th, repeat=3):
        rows.append(h.vec_of(f[0] * f[1] * f[2])[1])
    from weylcalc.linalg import Echelonizer
    e = Echelonizer()
    e.extend(rows)
    dims = subalgebra_dims(h, th, 3)
    assert dims[3] == e.rank
    assert dims[:2] == [1, 3]


def test_anticommutative_quotient_relations(systems):
    h = anticommutative_quotient(algebra(systems["B2"], "quad"))
    a, b = NCPoly.gen(0), NCPoly.gen(2)
    assert normal_form(h, a * b + b * a).is_zero()
    assert normal_form(h, a * a).is_zero()


def test_cap_exceeded():
    h = AlgebraHandle(["x", "y", "z"], [], cap=20)
    h.level(2)
    with pytest.raises(CapExceeded):
        h.level(3)
    with pytest.raises(CapExceeded):
        ideal_degree_basis(h, 3)


def test_free_algebra_dims():
    h = AlgebraHandle(["x", "y"], [])
    assert hilbert_dims(h, 5) == [1, 2, 4, 8, 16, 32]


def test_commutative_polynomial_ring():
    x, y = NCPoly.gen(0), NCPoly.gen(1)
    h = AlgebraHandle(["x", "y"], [x * y - y * x])
    assert hilbert_dims(h, 5) == [1, 2, 3, 4, 5, 6]
