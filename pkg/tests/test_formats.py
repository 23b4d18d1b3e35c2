"""Serialization: exact decimal text, JSON/CSV round-trips, atomic writes."""

import json
import os
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arp import BigCount, as_scalar, benchmark_family, estimate_m, sequential_search
from arp.formats import (
    FormatError,
    atomic_write_text,
    big_count_to_dict,
    complexity_to_dict,
    instance_from_csv,
    instance_from_dict,
    instance_to_csv,
    instance_to_dict,
    read_instance,
    render_complexity_text,
    render_solution_text,
    render_table_text,
    scalar_text,
    significand_12,
    solution_to_dict,
    write_instance,
)
from conftest import instances, triple


def test_scalar_text_known_values():
    assert scalar_text(Fraction(4)) == "4"
    assert scalar_text(Fraction(4809, 5)) == "961.8"
    assert scalar_text(Fraction(1, 1000)) == "0.001"
    assert scalar_text(Fraction(-7, 4)) == "-1.75"
    assert scalar_text(Fraction(1, 3)) == "1/3"
    assert scalar_text(Fraction(379, 70)) == "379/70"


def test_scalar_text_is_canonical():
    assert scalar_text(as_scalar("4.0")) == "4"
    assert scalar_text(as_scalar("0.50")) == "0.5"


@given(num=st.integers(-10**9, 10**9), denom_exp=st.tuples(st.integers(0, 6), st.integers(0, 6)))
def test_scalar_text_round_trip_on_decimal_grid(num, denom_exp):
    a, b = denom_exp
    x = Fraction(num, 2**a * 5**b)
    text = scalar_text(x)
    assert "/" not in text
    assert as_scalar(text) == x


@given(num=st.integers(1, 10**6), den=st.integers(1, 10**6))
def test_scalar_text_round_trip_general(num, den):
    x = Fraction(num, den)
    assert as_scalar(scalar_text(x)) == x


def test_significand_known_value():
    assert significand_12(Fraction(379, 70)) == "5.41428571429"


def test_instance_dict_round_trip_exact():
    t = triple()
    data = instance_to_dict(t)
    assert data == {
        "airplanes": [
            {"id": 1, "v": "4", "c": "2"},
            {"id": 2, "v": "7", "c": "3"},
            {"id": 3, "v": "19", "c": "5"},
        ]
    }
    assert instance_from_dict(json.loads(json.dumps(data))) == t


@given(instance=instances(min_n=1, max_n=6))
def test_instance_json_round_trip_property(instance):
    data = json.loads(json.dumps(instance_to_dict(instance)))
    assert instance_from_dict(data) == instance


@given(instance=instances(min_n=1, max_n=6))
def test_instance_csv_round_trip_property(instance):
    text = instance_to_csv(instance)
    assert text.startswith("id,v,c")
    assert instance_from_csv(text) == instance


def test_instance_from_dict_rejects_malformed():
    with pytest.raises(FormatError):
        instance_from_dict({"airplanes": [{"id": 1, "v": "4"}]})
    with pytest.raises(FormatError):
        instance_from_dict({"airplanes": [{"id": 1, "v": 0.5, "c": "2"}]})
    with pytest.raises(FormatError):
        instance_from_dict({"airplanes": [{"id": "one", "v": "4", "c": "2"}]})
    with pytest.raises(FormatError):
        instance_from_dict({})
    with pytest.raises(FormatError):
        instance_from_dict(
            {
                "airplanes": [
                    {"id": 1, "v": "4", "c": "2"},
                    {"id": 1, "v": "7", "c": "3"},
                ]
            }
        )
    with pytest.raises(FormatError):
        instance_from_dict({"airplanes": [{"id": 1, "v": "-4", "c": "2"}]})


def test_instance_from_csv_rejects_malformed():
    with pytest.raises(FormatError):
        instance_from_csv("v,c\n4,2\n")
    with pytest.raises(FormatError):
        instance_from_csv("id,v,c\n1,4\n")
    with pytest.raises(FormatError):
        instance_from_csv("")


def test_atomic_write_creates_and_overwrites(tmp_path):
    target = tmp_path / "out.txt"
    atomic_write_text(str(target), "first")
    assert target.read_text() == "first"
    atomic_write_text(str(target), "second")
    assert target.read_text() == "second"
    assert os.listdir(tmp_path) == ["out.txt"]


def test_write_read_instance_json_and_csv(tmp_path):
    t = triple()
    j = tmp_path / "t.json"
    c = tmp_path / "t.csv"
    write_instance(t, str(j))
    write_instance(t, str(c), fmt="csv")
    assert read_instance(str(j)) == t
    assert read_instance(str(c)) == t
    # sniffing: csv content under a generic extension
    g = tmp_path / "t.dat"
    g.write_text(instance_to_csv(t))
    assert read_instance(str(g)) == t


def test_read_instance_missing_file(tmp_path):
    with pytest.raises(FormatError, match="cannot read"):
        read_instance(str(tmp_path / "nope.json"))


def test_big_count_dict_caps_exact_text():
    small = big_count_to_dict(BigCount(256))
    assert small == {"scientific": "2.56e2", "exact": "256"}
    huge = big_count_to_dict(BigCount(2**998))
    assert huge["scientific"] == "2.68e300"
    assert "exact" not in huge


def test_solution_dict_fields():
    sol = sequential_search(triple())
    data = solution_to_dict(sol, elapsed_ms=1.5)
    assert data["order"] == [2, 3, 1]
    assert data["total"] == "379/70"
    assert data["total_decimal"] == "5.41428571429"
    assert data["q_count"] == 2
    assert data["method"] == "sequential_search"
    assert data["elapsed_ms"] == 1.5
    assert data["visited_nodes"] >= 3


def test_complexity_dict_fields():
    rep = estimate_m(benchmark_family(1000))
    data = complexity_to_dict(rep)
    assert data["n"] == 1000
    assert data["m"] == 63
    assert data["regime"] == "Polynomial"
    assert data["q_m_bound"]["scientific"] == "2.72e101"


def test_text_renderings_mention_key_figures():
    sol = sequential_search(triple())
    text = render_solution_text(sol)
    assert "379/70" in text and "drop order: 2 3 1" in text
    rep = estimate_m(benchmark_family(1000))
    rtext = render_complexity_text(rep)
    assert "63" in rtext and "2.72e101" in rtext
    table = render_table_text(["n", "q"], [["10", "256"], ["1000", "2.68e300"]])
    lines = table.splitlines()
    assert lines[0].split() == ["n", "q"]
    assert lines[-1].split() == ["1000", "2.68e300"]
