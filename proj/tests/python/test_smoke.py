import json
from fractions import Fraction

import pytest

import cfrac


def test_e_convergents():
    assert cfrac.e_convergents(8) == [
        Fraction(3), Fraction(8, 3), Fraction(11, 4), Fraction(19, 7),
        Fraction(87, 32), Fraction(106, 39), Fraction(193, 71), Fraction(1264, 465),
    ]


def test_tanh_convergents_match_gauss_form():
    assert cfrac.tanh_convergents(1, 2, 3) == [Fraction(1, 2), Fraction(6, 13), Fraction(61, 132)]
    assert cfrac.gauss_tanh_convergents(Fraction(3, 2), 20) == cfrac.tanh_convergents(3, 2, 20)


def test_exp_bound_covers_known_value():
    value, bound, depth = cfrac.exp_rational(1, 1, Fraction(1, 10**20))
    e_40 = Fraction("2.7182818284590452353602874713526624977572")
    assert bound <= Fraction(1, 10**20)
    assert abs(value - e_40) <= bound + Fraction(1, 10**40)
    assert depth > 0


def test_tanh_in_unit_interval():
    value, bound, _ = cfrac.tanh_rational(12, 1, Fraction(1, 10**8))
    assert 0 < value < 1
    assert bound <= Fraction(1, 10**8)


def test_digits():
    assert cfrac.digits("exp", 1, 2, 30) == "1.648721270700128146848650787814"
    assert cfrac.digits("tanh", 1, 1, 12) == "0.761594155955"


def test_big_integer_arguments():
    value, _, _ = cfrac.exp_rational(-(10**30), 10**30 + 1, Fraction(1, 10**6))
    assert Fraction(36, 100) < value < Fraction(37, 100)


def test_certificate_round_trip():
    text = cfrac.certify(3, 2)
    doc = json.loads(text)
    assert doc["tailIndex"] == "2"
    assert cfrac.verify(text) == (True, "", None)

    doc["tailIndex"] = "1"
    ok, _, index = cfrac.verify(json.dumps(doc), 10)
    assert not ok and index == 2


def test_tail_index():
    assert [cfrac.tail_index(*p) for p in [(1, 1), (3, 2), (2, 1)]] == [1, 2, 2]


def test_errors_raise():
    with pytest.raises(cfrac.CfracError):
        cfrac.tanh_convergents(1, 0, 3)
    with pytest.raises(ValueError):
        cfrac.certify(1, 0)


def test_cli_exit_codes():
    assert cfrac.run_cli(["certify", "--x", "0", "--y", "3"])[0] == 0
    assert cfrac.run_cli(["certify", "--x", "1", "--y", "0"])[0] == 1
    code, out, err = cfrac.run_cli(["convergents", "--bogus"])
    assert code == 2 and out == "" and "Usage" in err
