import pytest

from nilorbits.errors import IndexOutOfRange, InvalidInput, ParseError, PreconditionViolated
from nilorbits.oracles import bf_diagrams, bf_row
from nilorbits.signed_diagram import (
    SignMatrix, SignedDiagram, enumerate_set, in_S_prime, is_member, membership_violation,
    parse_diagram, row_parities, sign_counts,
)

SIG_KINDS = ("Y", "Y_even", "Y_even1")
SIZE_KINDS = ("Y_odd", "Y_odd_minus1")


def test_sign_count_examples():
    assert sign_counts(SignMatrix(3, 1, 1)) == (1, 2)
    assert sign_counts(SignMatrix(4, 2, 1)) == (4, 4)
    assert sign_counts(SignMatrix(5, 1, 1)) == (3, 2)


def test_row_parity_examples():
    assert row_parities(SignMatrix(3, 1, 1), 1) == (1, 2)
    assert row_parities(SignMatrix(1, 2, 1), 2) == (0, 1)
    assert row_parities(SignMatrix(5, 1, 0), 1) == (2, 3)


@pytest.mark.parametrize("i", [0, 3])
def test_row_parity_out_of_range(i):
    with pytest.raises(IndexOutOfRange):
        row_parities(SignMatrix(3, 2, 1), i)


def test_closed_form_matches_literal_counts():
    for d in range(1, 10):
        for t in range(1, 4):
            for p in range(t + 1):
                M = SignMatrix(d, t, p)
                assert M.sign_counts() == M.literal_sign_counts()


def test_rows_match_box_by_box_oracle():
    for d in range(1, 10):
        M = SignMatrix(d, 2, 1)
        assert list(M.row(1)) == bf_row(d, 1)
        assert list(M.row(2)) == bf_row(d, -1)


def test_last_box_rule():
    # rows starting +1: last box is -1 when d = 3 mod 4, +1 when d = 1 mod 4
    for d in (3, 7, 11):
        assert SignMatrix(d, 1, 1).row(1)[-1] == -1
    for d in (1, 5, 9):
        assert SignMatrix(d, 1, 1).row(1)[-1] == 1


def test_s_prime_examples():
    assert in_S_prime(parse_diagram("3+"))
    assert in_S_prime(parse_diagram("3-"))
    assert not in_S_prime(parse_diagram("1+^3,1-^2"))
    assert not in_S_prime(parse_diagram("5+,1-"))


def test_s_prime_precondition():
    with pytest.raises(PreconditionViolated):
        in_S_prime(parse_diagram("2-,1+"))


def test_enumerate_set_examples():
    assert {D.triples() for D in enumerate_set("Y", p=1, q=1)} == {((1, 2, 1),), ((2, 1, 0),), ((2, 1, 1),)}
    # the sign rule puts [3] with signature (2,1) at p_3 = 0
    assert {D.triples() for D in enumerate_set("Y_even1", p=2, q=1)} == {((1, 3, 2),), ((3, 1, 0),)}
    Y = enumerate_set("Y_odd_minus1", n=4)
    assert len(Y) == 8
    by_part = {}
    for D in Y:
        by_part[str(D.partition)] = by_part.get(str(D.partition), 0) + 1
    assert by_part == {"1^4": 1, "1^2,2^1": 2, "2^2": 3, "4^1": 2}


@pytest.mark.parametrize("s", range(1, 9))
def test_signature_kinds_against_brute_force(s):
    for p in range(s + 1):
        sets = {}
        for kind in SIG_KINDS:
            got = enumerate_set(kind, p=p, q=s - p)
            assert len({D.triples() for D in got}) == len(got)
            for D in got:
                assert D.signature == (p, s - p)
                assert is_member(D, kind, p=p, q=s - p)
            sets[kind] = {D.triples() for D in got}
            assert sets[kind] == bf_diagrams(kind, p=p, q=s - p)
        assert sets["Y_even1"] <= sets["Y_even"] <= sets["Y"]


@pytest.mark.parametrize("n", range(1, 9))
def test_size_kinds_against_brute_force(n):
    for kind in SIZE_KINDS:
        assert {D.triples() for D in enumerate_set(kind, n=n)} == bf_diagrams(kind, n=n)


def test_enumeration_is_deterministic():
    a = [str(D) for D in enumerate_set("Y", p=3, q=3)]
    assert a == [str(D) for D in enumerate_set("Y", p=3, q=3)]


def test_enumerate_rejects_bad_params():
    with pytest.raises(InvalidInput):
        enumerate_set("Y", p=-1, q=2)
    with pytest.raises(InvalidInput):
        enumerate_set("Y_odd", n=0)


def test_membership_messages():
    D = parse_diagram("2-,1+")
    assert "must start +1" in membership_violation(D, "Y_even", p=2, q=1)
    D = parse_diagram("2+,1+^2")
    assert "even multiplicity" in membership_violation(D, "Y_even1", p=3, q=1)
    assert membership_violation(D, "Y", p=9, q=9).startswith("diagram signature")


def test_parse_render_roundtrip():
    D = parse_diagram("3+^1,1+^2,1-^1")
    assert D.triples() == ((1, 3, 2), (3, 1, 1))
    assert str(D) == "1+^2,1-^1,3+^1"
    assert parse_diagram(str(D)) == D
    assert parse_diagram("2+,2-") == parse_diagram("2-^1,2+^1")
    assert SignedDiagram.from_json(D.to_json()) == D
    assert D.signature == (3, 3) and D.n == 6


@pytest.mark.parametrize("bad", ["", "3", "3*", "3+^0", "0+", "3+,3+", "3+^", "+^2", "3+;1-"])
def test_parse_errors(bad):
    with pytest.raises(ParseError):
        parse_diagram(bad)
