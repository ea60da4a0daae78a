from fractions import Fraction

import pytest

from _util import s
from recip.polymat import Poly
from recip.serialize import (
    InputError, dump_mfd, dump_number, dump_realization, load_matrix, load_mfd, load_number,
    load_realization, parse_poly_string, read_json,
)
from recip.surd import Surd


def test_numbers_round_trip():
    for x in (Fraction(3), Fraction(-2, 7), Fraction(0)):
        assert load_number(dump_number(x)) == x
    assert dump_number(Fraction(1, 2)) == "1/2"
    assert dump_number(Fraction(4)) == 4
    assert load_number(0.25) == Fraction(1, 4)
    r = Surd.sqrt(Fraction(3, 4))
    assert load_number(dump_number(r), allow_surd=True) == r


@pytest.mark.parametrize("bad", [True, None, "x", "1/0", [1]])
def test_bad_numbers(bad):
    with pytest.raises(InputError):
        load_number(bad, "$.x")


def test_surd_needs_permission():
    with pytest.raises(InputError):
        load_number("sqrt(2)")


def test_poly_strings():
    assert parse_poly_string("s^2 + 2*s - 1") == s * s + 2 * s - 1
    assert parse_poly_string("xi - 3/2") == s - Fraction(3, 2)
    assert parse_poly_string("-ξ^3") == Poly.monomial(3, -1)
    assert parse_poly_string("7") == Poly.const(7)
    for bad in ("", "s^", "2s s", "^3"):
        with pytest.raises(InputError):
            parse_poly_string(bad)


def test_mfd_round_trip():
    obj = {"P": [["s + 1"]], "Q": [[[0, 1, 1]]]}
    h = load_mfd(obj)
    assert load_mfd(dump_mfd(h)).P == h.P
    assert dump_mfd(h) == {"P": [[[1, 1]]], "Q": [[[0, 1, 1]]]}


def test_mfd_errors_carry_location():
    with pytest.raises(InputError) as exc:
        load_mfd({"P": [[1]], "Q": [["s", "q"]]})
    assert "$.Q" in str(exc.value)
    with pytest.raises(InputError):
        load_mfd({"P": [[1]]})
    with pytest.raises(InputError):
        load_mfd({"P": [[1]], "Q": [[0]]})


def test_matrix_shape_checks():
    with pytest.raises(InputError):
        load_matrix([[1, 2], [3]], "$.M")
    with pytest.raises(InputError):
        load_matrix([[1]], "$.M", rows=2)


def test_realization_round_trip():
    obj = {"A": [[0]], "B": [[1]], "C": [[1]], "D": [[0]], "sigma": [1]}
    sr = load_realization(obj)
    assert dump_realization(sr) == obj
    with pytest.raises(InputError):
        load_realization({**obj, "sigma": [2]})
    with pytest.raises(InputError):
        load_realization({"A": [[0]]})


def test_read_json_errors(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"P": [[1]],\n "Q": }')
    with pytest.raises(InputError) as exc:
        read_json(str(p))
    assert exc.value.where.endswith(":2:7")
    with pytest.raises(InputError):
        read_json(str(tmp_path / "missing.json"))
