import pytest

from nilorbits.errors import BadFiberIndex, InvalidForm, NotInParamSet, ParseError
from nilorbits.oracles import bf_orbit_count
from nilorbits.orbit_enum import (
    FormKind, RealForm, SO, SOStar, SU, SlH, SlR, SpPQ, SpR, enumerate_orbits, parse_orbit, split_fiber,
)
from nilorbits.partition import predicates
from nilorbits.signed_diagram import in_S_prime
from nilorbits.verify import forms_up_to


def listing(form):
    return [(str(o.diagram), o.fiber_index, o.fiber_size) for o in enumerate_orbits(form)]


def test_sl2_r():
    assert listing(SlR(2)) == [("1^2", 1, 1), ("2^1", 1, 2), ("2^1", 2, 2)]


def test_so21():
    assert listing(SO(2, 1)) == [("1+^2,1-^1", 1, 1), ("3-^1", 1, 2), ("3-^1", 2, 2)]


def test_so32_fibers():
    fibers = {}
    for d, _, size in listing(SO(3, 2)):
        fibers[d] = size
    assert fibers == {
        "1+^3,1-^2": 1, "1+^1,2+^2": 2, "1+^2,3+^1": 2, "1+^1,1-^1,3-^1": 1, "5+^1": 2,
    }
    assert len(enumerate_orbits(SO(3, 2))) == 8


@pytest.mark.parametrize("forms,count", [
    ([SO(3, 2), SpR(2)], 8),
    ([SO(4, 1), SpPQ(1, 1)], 2),
    ([SO(3, 3), SlR(4)], 7),
    ([SU(1, 1), SpR(1), SO(2, 1), SO(1, 2)], 3),
])
def test_isomorphic_forms_have_equal_counts(forms, count):
    assert [len(enumerate_orbits(f)) for f in forms] == [count] * len(forms)


def test_counts_and_zero_orbit_over_small_forms():
    for form in forms_up_to(6, sp_r_size=10):
        orbits = enumerate_orbits(form)
        args = {"n": form.n} if form.by_size else {"p": form.p, "q": form.q}
        assert len(orbits) == bf_orbit_count(form.kind.value, **args), form.label
        assert sum(o.is_zero for o in orbits) == 1
        assert [o.fiber_index for o in orbits if o.fiber_index > 1] == [
            o.fiber_index for o in orbits if o.fiber_index > 1
        ]


def test_so_fiber_rules():
    for s in range(3, 9):
        for p in range(s + 1):
            try:
                form = SO(p, s - p).validate()
            except InvalidForm:
                continue
            for o in enumerate_orbits(form):
                f = predicates(o.partition)
                if f.is_very_even:
                    want = 4
                elif f.in_P1 and in_S_prime(o.signed):
                    want = 2
                else:
                    want = 1
                assert o.fiber_size == want, (form.label, str(o.diagram))


def test_sl_r_fiber_rule():
    for n in range(2, 9):
        for o in enumerate_orbits(SlR(n)):
            assert o.fiber_size == (2 if predicates(o.partition).is_even else 1)


def test_so22_is_excluded_as_not_simple():
    with pytest.raises(InvalidForm, match="not simple"):
        SO(2, 2).validate()


@pytest.mark.parametrize("form", [SO(1, 1), SU(0, 3), SlR(1), SOStar(2), SpR(0)])
def test_excluded_forms(form):
    with pytest.raises(InvalidForm):
        form.validate()


def test_labels():
    assert SO(3, 2).label == "so(3,2)"
    assert SpR(2).label == "sp(2,R)"
    assert SOStar(3).label == "so*(6)"
    assert SlR(4).label == "sl_4(R)"
    assert SpPQ(1, 1).label == "sp(1,1)"
    assert SpR(2).matrix_size == 4 and SpPQ(1, 1).matrix_size == 2


def test_parse_orbit_examples():
    o = parse_orbit(SU(1, 1), "2+^1", 1)
    assert o.signed.triples() == ((2, 1, 1),)
    with pytest.raises(BadFiberIndex):
        parse_orbit(SO(3, 2), "2+^2,1+^1", 3)
    with pytest.raises(NotInParamSet, match="must start \\+1"):
        parse_orbit(SpPQ(1, 1), "2-^1", 1)
    with pytest.raises(NotInParamSet):
        parse_orbit(SU(1, 1), "1+^2", 1)
    with pytest.raises(ParseError):
        parse_orbit(SU(1, 1), "2?", 1)


def test_parse_orbit_unsigned_forms():
    o = parse_orbit(SlR(4), "2^2", 2)
    assert o.fiber_index == 2 and o.fiber_size == 2
    assert parse_orbit(SlH(3), "1,2").partition.n == 3
    with pytest.raises(NotInParamSet, match="bare partitions"):
        parse_orbit(SlR(2), "2+")


def test_split_fiber():
    assert split_fiber("2+^2,1+:2") == ("2+^2,1+", 2)
    assert split_fiber("3+") == ("3+", 1)
    with pytest.raises(ParseError):
        split_fiber("3+:x")


def test_enumeration_order():
    orbits = enumerate_orbits(SU(2, 2))
    keys = [(o.partition.sizes, tuple(m.p for m in o.signed.signs), o.fiber_index) for o in orbits]
    assert keys == sorted(keys)
