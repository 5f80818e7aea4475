import pytest

import kz1morse as k


def test_parse_and_faces():
    assert k.parse("[3|-2|5]") == (3, -2, 5)
    assert k.parse([4, 1]) == (4, 1)
    assert k.face(0, (3, 2)) == (2,)
    assert k.face(1, (1, 1, 1)) == (2, 1)
    assert k.face(2, (1, 1, 1)) == (1, 2)


def test_differential_squares_to_zero():
    c = k.Chain(3, {(4, -1, 7): 2, (1, 2, 3): -1})
    assert not k.differential(k.differential(c))


def test_classify_pairs_are_mutual():
    c = k.classify("[3|2]")
    assert c["class"] == "source"
    assert c["partner"] == "[2|1|2]"
    back = k.classify(c["partner"])
    assert back["class"] == "target"
    assert back["partner"] == "[3|2]"


@pytest.mark.parametrize("s", ["[]", "[1]"])
def test_critical_cells(s):
    assert k.classify(s)["class"] == "critical"


def test_eml_reach_of_singleton():
    assert k.reach([5], field="eml")["nodes"] == 9


def test_homology_of_critical_complex():
    assert k.homology(kmax=3) == ["Z", "Z", "0", "0"]


def test_reduction_identities_on_a_simplex():
    c = k.Chain.of((2, 3))
    f, h = k.reduce("f", c), k.reduce("h", c)
    assert f.dim == 2 and not f
    # gf = 1 - dh - hd on a chain whose image under f vanishes
    dh = k.differential(h)
    hd = k.reduce("h", k.differential(c))
    total = {}
    for part in (dh, hd):
        for s, n in part.terms.items():
            total[s] = total.get(s, 0) + n
    assert {s: n for s, n in total.items() if n} == dict(c.terms)


def test_phi_infinity_lands_on_critical_cells():
    out = k.phi_infinity(k.Chain.of((7,)))
    assert set(out.terms) <= {(1,)}


def test_big_entries_round_trip():
    big = 2**70 + 3
    assert k.parse([big, 1]) == (big, 1)


def test_catalogue_on_target():
    assert k.catalogue("[8|7|4]")


def test_errors():
    with pytest.raises(k.ParseError):
        k.parse("[1|x]")
    with pytest.raises(k.PreconditionError):
        k.catalogue("[3|2]")
    with pytest.raises(k.Kz1Error):
        k.reduce("q", k.Chain.of((1,)))
