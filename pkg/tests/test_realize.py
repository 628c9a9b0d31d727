import json

import pytest

from nilorbits.errors import NoFormForThisAlgebra, ShapeMismatch
from nilorbits.exactlin import QI, ExactMatrix, ScalarField, as_matrix, congruence_signature
from nilorbits.orbit_enum import OrbitClass, SO, SOStar, SU, SlR, SpPQ, SpR, enumerate_orbits, parse_orbit
from nilorbits.partition import Partition, enumerate_partitions
from nilorbits.realize import (
    MatrixRealization, build_gram, build_triple, centralizer_dim, corollary_signature, gram_block,
    realization_to_json, realize, verify_realization,
)
from nilorbits.signed_diagram import SignMatrix, SignedDiagram, parse_diagram
from nilorbits.verify import forms_up_to

R, C, H = ScalarField.R, ScalarField.C, ScalarField.H


def test_triple_for_part_two():
    real = build_triple(R, Partition.from_list([2]))
    assert real.X == as_matrix(R, [[0, 0], [1, 0]])
    assert real.H == as_matrix(R, [[-1, 0], [0, 1]])
    assert real.Y == as_matrix(R, [[0, 1], [0, 0]])


def test_triple_lowering_coefficients():
    Y = build_triple(R, Partition.from_list([3])).Y
    assert (Y[0, 1], Y[1, 2]) == (2, 2)


def test_triple_block_structure():
    real = build_triple(H, Partition.from_list([2, 1, 1]))
    assert real.basis_index == ((1, 1, 0), (1, 2, 0), (2, 1, 0), (2, 1, 1))
    assert real.X.submatrix([0, 1]).is_zero()
    assert real.X[3, 2] == 1


@pytest.mark.parametrize("field", list(ScalarField), ids=lambda f: f.value)
def test_triples_up_to_eight(field):
    for n in range(1, 9):
        for P in enumerate_partitions(n):
            rep = verify_realization(build_triple(field, P))
            assert rep.ok, (P, rep.failures())


def test_corrupted_weight_is_caught():
    real = build_triple(R, Partition.from_list([3]))
    bad_H = real.H + ExactMatrix.from_sparse(R, 3, {(0, 0): 1})
    bad = MatrixRealization(real.field, real.n, real.X, bad_H, real.Y, real.partition, real.basis_index)
    names = {c.name for c in verify_realization(bad).failures()}
    assert "[X,Y]=H" in names


def test_gram_examples():
    g = build_gram(OrbitClass(SO(1, 2), parse_diagram("3+"))).G
    assert g == as_matrix(R, [[0, 0, 1], [0, -1, 0], [1, 0, 0]])
    assert congruence_signature(g) == (1, 2)
    real = build_gram(parse_orbit(SU(1, 1), "2+"))
    assert real.G == as_matrix(C, [[0, -QI], [QI, 0]])
    assert congruence_signature(real.G) == (1, 1)
    real = build_gram(parse_orbit(SpR(1), "2+"))
    assert real.G == as_matrix(R, [[0, 1], [-1, 0]]) and real.epsilon == -1


def test_quaternionic_hermitian_example():
    real = realize(parse_orbit(SpPQ(1, 1), "2+"))
    assert real.field is H and real.form_kind == "hermitian"
    assert verify_realization(real).ok


def test_no_form_for_sl():
    with pytest.raises(NoFormForThisAlgebra):
        build_gram(parse_orbit(SlR(3), "3"))
    assert realize(parse_orbit(SlR(3), "3")).G is None


def test_forms_up_to_six():
    for form in forms_up_to(6):
        if not form.has_form:
            continue
        for o in enumerate_orbits(form):
            if o.fiber_index == 1:
                rep = verify_realization(build_gram(o))
                assert rep.ok, (form.label, str(o.diagram), rep.failures())


@pytest.mark.parametrize("kind", ["su", "so", "sp_pq"])
def test_signature_law(kind):
    make = {"su": SU, "so": SO, "sp_pq": SpPQ}[kind]
    for d in range(1, 8):
        for t in (1, 2):
            if kind == "so" and d % 2 == 0 and t % 2:
                continue
            ps = range(t + 1) if d % 2 or kind == "su" else (t,)
            for p in ps:
                D = SignedDiagram((SignMatrix(d, t, p),))
                real = build_gram(OrbitClass(make(*D.signature), D))
                got = congruence_signature(gram_block(real, d))
                assert got == corollary_signature(d, t, p) == SignMatrix(d, t, p).sign_counts()


def test_corollary_flip_for_three_mod_four():
    assert corollary_signature(3, 1, 1) == (1, 2)
    assert corollary_signature(5, 1, 1) == (3, 2)
    assert corollary_signature(4, 2, 1) == (4, 4)


def test_centralizer_examples():
    for form, text, want in [(SlR(3), "3", 0), (SU(1, 1), "2+", 0), (SO(3, 2), "2+^2,1+", 3)]:
        assert centralizer_dim(realize(parse_orbit(form, text)), form) == want


def test_centralizer_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        centralizer_dim(realize(parse_orbit(SU(1, 1), "2+")), SU(2, 1))
    with pytest.raises(ShapeMismatch):
        centralizer_dim(build_triple(C, Partition.from_list([2])), SU(1, 1))


def test_json_export():
    doc = realization_to_json(realize(parse_orbit(SOStar(3), "2+,1+")))
    assert doc["field"] == "H" and doc["form_kind"] == "skew_hermitian"
    assert all(len(x) == 4 for row in doc["G"] for x in row)
    assert json.loads(json.dumps(doc)) == doc
    assert "G" not in realization_to_json(realize(parse_orbit(SlR(2), "2")))
