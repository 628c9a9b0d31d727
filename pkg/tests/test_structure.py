import pytest

from nilorbits.cohomology import cohomology, su_l
from nilorbits.orbit_enum import SO, SOStar, SU, SlH, SlR, SpPQ, SpR, enumerate_orbits, parse_orbit
from nilorbits.partition import classify
from nilorbits.realize import centralizer_dim, realize
from nilorbits.structure import GroupFactor, centralizer_structure, maximal_compact_structure
from nilorbits.verify import forms_up_to


@pytest.mark.parametrize("form,text,factors,dim", [
    (SlR(3), "3", ["GL(1,R)^Δ3"], 0),
    (SU(1, 1), "2+", ["U(1,0)^Δ2"], 0),
    (SpPQ(1, 1), "2+", ["SO*(2)^Δ2"], 1),
    (SO(3, 2), "2+^2,1+", ["O(1,0)", "Sp(1,R)^Δ2"], 3),
])
def test_centralizer_examples(form, text, factors, dim):
    o = parse_orbit(form, text)
    s = centralizer_structure(o)
    assert [str(f) for f in s.factors] == factors
    assert s.dim == dim
    assert centralizer_dim(realize(o), form) == dim


def test_det_cut_flags():
    assert centralizer_structure(parse_orbit(SlR(3), "3")).det_constraint_cuts_dim
    assert centralizer_structure(parse_orbit(SU(1, 1), "2+")).det_constraint_cuts_dim
    assert not centralizer_structure(parse_orbit(SO(3, 2), "5+")).det_constraint_cuts_dim


@pytest.mark.parametrize("form,text,factors,dim_z", [
    (SOStar(3), "2+,1+", ["U(1)", "Sp(1)^Δ2"], 1),
    (SpPQ(1, 1), "2+", ["U(1)^Δ2"], 1),
    (SlH(3), "2,1", ["Sp(1)", "Sp(1)^Δ2"], 0),
])
def test_compact_examples(form, text, factors, dim_z):
    c = maximal_compact_structure(parse_orbit(form, text))
    assert [str(f) for f in c.factors] == factors
    assert c.dim_z == dim_z


def test_factor_dimensions():
    assert GroupFactor("GL_R", (3,)).dim == 9
    assert GroupFactor("GL_H", (2,)).dim == 16
    assert GroupFactor("U_pq", (1, 2)).dim == 9
    assert GroupFactor("O_pq", (2, 1)).dim == 3
    assert GroupFactor("Sp_R", (4,)).dim == 10
    assert GroupFactor("Sp_pq", (1, 1)).dim == 10
    assert GroupFactor("SOstar", (3,)).dim == 15
    with pytest.raises(AssertionError):
        GroupFactor("Sp_R", (3,))
    with pytest.raises(ValueError):
        GroupFactor("E8", (1,))


def test_centralizer_oracle_sweep():
    for form in forms_up_to(5, sp_r_size=6):
        for o in enumerate_orbits(form):
            if o.fiber_index == 1:
                assert centralizer_dim(realize(o), form) == centralizer_structure(o).dim, (form.label, str(o.diagram))


def test_sp_pq_h2_is_center_dim():
    for s in range(2, 7):
        for p in range(1, s):
            for o in enumerate_orbits(SpPQ(p, s - p)):
                assert cohomology(o).h2 == maximal_compact_structure(o).dim_z


def test_su_center_consistency():
    for s in range(2, 8):
        for p in range(1, s):
            for o in enumerate_orbits(SU(p, s - p)):
                c, r = maximal_compact_structure(o), cohomology(o)
                cl, l = classify(o.partition), su_l(o.signed).l
                assert c.dim_z == l - 1
                if cl.N == cl.E:
                    assert r.h2 == c.dim_z
                elif l >= 2:
                    assert r.h2 == c.dim_z - 1


def _unitary_center(c):
    return sum(f.center_dim for f in c.factors if f.kind == "U")


@pytest.mark.parametrize("form", [SOStar(n) for n in range(3, 7)] + [SpR(n) for n in range(1, 7)], ids=lambda f: f.label)
def test_so_star_sp_r_center_consistency(form):
    # the O(2) factors of even parts carry a center direction that the
    # non-identity component negates; the count below keeps only U factors
    for o in enumerate_orbits(form):
        c, r = maximal_compact_structure(o), cohomology(o)
        if classify(o.partition).O:
            assert r.h2 == _unitary_center(c) - 1
            if not any(f.kind == "O" and f.size == 2 for f in c.factors):
                assert r.h2 == c.dim_z - 1
        else:
            assert r.h2 == 0


def test_s_cut_rendering():
    assert str(maximal_compact_structure(parse_orbit(SlR(3), "1,2"))).startswith("S(")
    assert str(maximal_compact_structure(parse_orbit(SU(2, 1), "1+^2,1-"))).startswith("S(")
    assert not str(maximal_compact_structure(parse_orbit(SO(3, 2), "5+"))).startswith("S(")
