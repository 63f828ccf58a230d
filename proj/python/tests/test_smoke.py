from fractions import Fraction

import pytest

import k3mcg

QUARTIC = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -1]]
SEXTIC = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [-1, -1, -3]]


def test_k3_signature():
    gram = k3mcg.k3_gram()
    assert len(gram) == 22
    assert k3mcg.signature(gram) == (3, 19)
    assert k3mcg.discriminant_group(gram) == []


def test_big_integers_cross_unchanged():
    big = 10**40
    assert k3mcg.discriminant_group([[big]]) == [big]


def test_roots_of_u_plus_4():
    gram = [[0, 1, 0], [1, 0, 0], [0, 0, 4]]
    for v in k3mcg.roots(gram, 3, modulo_sign=True):
        a, b, c = v
        assert 2 * a * b + 4 * c * c == -2


def test_polytope_census_and_picard():
    dual = k3mcg.polar_dual(QUARTIC)
    assert sorted(map(tuple, dual)) == [(-1, -1, -1), (-1, -1, 3), (-1, 3, -1), (3, -1, -1)]
    pts = k3mcg.lattice_points(dual)
    assert sum(len(v) for v in pts.values()) == 35
    assert len(pts["facet_interior"]) == 12
    assert k3mcg.picard_rank(QUARTIC) == 19
    assert k3mcg.picard_rank(SEXTIC) == 19
    assert len(k3mcg.xi0(dual)) == 22
    assert k3mcg.volume(dual) == Fraction(32, 3)


def test_equal_weights_fail_star():
    weights = {"values": [{"a": "1"}] * 22}
    ok, reason = k3mcg.star_check(QUARTIC, weights)
    assert not ok and reason


def test_periods_and_fricke():
    for b, c in k3mcg.punctures(2, 6, 6):
        assert (2 * c * c + 1) % b == 0
    assert k3mcg.check_bijection(1, 6, 6, 6)["failures"] == []
    m = k3mcg.fricke_to_isometry(2, [1, 1, 2, 3], fricke=True)
    assert len(m) == 3
    reached, classes = k3mcg.orbit_check(2, 6)
    assert reached == classes


def test_free_product():
    assert k3mcg.reduce_word(4, "t t s^3 s^2 t^-2") == ("t^2 s^1 t^-2", (0, 1))
    assert not k3mcg.dehn_twist_generates(4)
    assert not k3mcg.has_cube_root(3, 1, 0)
    with pytest.raises(ValueError):
        k3mcg.reduce_word(3, "u^2")


def test_novikov():
    x = {"trunc": "5", "terms": [{"exp": "1/2", "re": "1", "im": "0"}]}
    y = {"trunc": "inf", "terms": [{"exp": "1/3", "re": "2", "im": "-1"}]}
    p = k3mcg.nov_mul(x, y)
    assert p["terms"][0]["exp"] == "5/6"
    assert k3mcg.nov_scale("2", x)["terms"][0]["exp"] == "1"
    with pytest.raises(k3mcg.InputError):
        k3mcg.nov_val({"terms": [{"exp": "1/0"}]})


def test_verify_subset():
    results = k3mcg.verify([1, 2, 3, 4, 11])
    assert [r["id"] for r in results] == [1, 2, 3, 4, 11]
    assert all(r["pass"] for r in results)
