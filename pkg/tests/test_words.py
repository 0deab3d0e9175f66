import itertools
import time

import pytest
from hypothesis import given, strategies as st

from iterwb import words as w
from iterwb.words import ResourceExceeded, resource_cap

words = st.text(alphabet="01", max_size=40)


def all_words(max_len):
    for n in range(max_len + 1):
        for bits in itertools.product("01", repeat=n):
            yield "".join(bits)


@pytest.mark.parametrize(
    "c, b, out",
    [("10110", "011", "101"), ("10110", "", ""), ("01", "1101", "01"), ("", "11", "")],
)
def test_truncate(c, b, out):
    assert w.truncate(c, b) == out


@pytest.mark.parametrize("c, out", [("101", "10"), ("0", ""), ("", "")])
def test_drop_last(c, out):
    assert w.drop_last(c) == out


@pytest.mark.parametrize("c, b, out", [("0", "11", "0"), ("01", "10", "10"), ("", "", ""), ("111", "0", "0")])
def test_lmin(c, b, out):
    assert w.lmin(c, b) == out


@pytest.mark.parametrize("s, x, y, out", [("0", "1", "00", "1"), ("", "1", "00", "00"), ("11", "", "1", "")])
def test_cond(s, x, y, out):
    assert w.cond(s, x, y) == out


def test_append_and_repeat():
    assert w.append_sym("", 1) == "1"
    assert w.append_sym("10", "0") == "100"
    assert w.append_sym("1", 1) == "11"
    assert w.repeat(0, 0) == ""
    assert w.repeat("0", 3) == "000"
    assert w.repeat(1, 1) == "1"
    with pytest.raises(ValueError):
        w.append_sym("1", 2)
    with pytest.raises(ValueError):
        w.repeat(0, -1)


def test_tuple_examples():
    assert w.tuple_n(["", ""]) == "01"
    assert w.tuple_n(["1", "0"]) == "110100"
    assert len(w.tuple_n(["11", "0"])) > len(w.tuple_n(["1", "0"]))
    assert w.project(w.tuple_n(["1", "0"]), 2, 1) == "1"
    assert w.project(w.tuple_n(["1", "0"]), 2, 2) == "0"
    assert w.project("111", 2, 1) == ""


def test_tuple_arity_mismatch():
    with pytest.raises(ValueError):
        w.tuple_n(["1"], 2)


@given(words, words)
def test_truncate_is_prefix(c, b):
    t = w.truncate(c, b)
    assert c.startswith(t)
    assert len(t) == min(len(b), len(c))


@given(words, words)
def test_lmin_picks_shorter(c, b):
    m = w.lmin(c, b)
    assert m in (c, b)
    assert len(m) == min(len(c), len(b))


@given(st.lists(words, min_size=2, max_size=4))
def test_tuple_length_formula(parts):
    enc = w.tuple_n(parts)
    assert len(enc) == 2 * sum(map(len, parts)) + 2 * (len(parts) - 1)
    assert w.untuple(enc, len(parts)) == parts


@pytest.mark.parametrize("n", [2, 3])
def test_tuple_round_trip_exhaustive(n):
    small = list(all_words(3))
    for parts in itertools.product(small, repeat=n):
        enc = w.tuple_n(list(parts))
        for i in range(1, n + 1):
            assert w.project(enc, n, i) == parts[i - 1]


@pytest.mark.parametrize("n", [2, 3])
def test_tuple_monotonicity_exhaustive(n):
    # |<..a_i..>| < |<..a_i'..>|  iff  |a_i| < |a_i'| with the other components fixed
    small = list(all_words(4)) if n == 2 else list(all_words(2))
    for parts in itertools.product(small, repeat=n):
        for i in range(n):
            for other in small:
                alt = list(parts)
                alt[i] = other
                shorter = len(w.tuple_n(list(parts))) < len(w.tuple_n(alt))
                assert shorter == (len(parts[i]) < len(other))


def test_tuple_injective_small():
    seen = {}
    for parts in itertools.product(list(all_words(3)), repeat=2):
        enc = w.tuple_n(list(parts))
        assert seen.setdefault(enc, parts) == parts


@given(words)
def test_invalid_encodings_project_to_empty(s):
    if w.untuple(s, 2) is None:
        assert w.project(s, 2, 1) == "" and w.project(s, 2, 2) == ""


def test_extras():
    assert w.concat("01", "1") == "011"
    assert w.eq("01", "01") == "1" and w.eq("0", "1") == ""
    assert w.last("01") == "1" and w.last("") == ""
    assert w.zeros("101") == "000"
    assert w.drop_first("10110", "11") == "110"
    assert w.shorter("0", "00") and not w.shorter("00", "11")


def test_guard_and_cap():
    assert w.guard("0" * 10) == "0" * 10
    with resource_cap(4):
        with pytest.raises(ResourceExceeded, match="resource exceeded"):
            w.guard("00000")
    assert w.current_cap() == w.DEFAULT_CAP


def test_env_cap(monkeypatch):
    monkeypatch.setenv("ITERWB_CAP", "8")
    assert w.current_cap() == 8
    with pytest.raises(ResourceExceeded) as info:
        w.guard("0" * 9)
    assert info.value.length == 9 and info.value.cap == 8


def test_timing_smoke():
    big = "01" * 2 ** 15  # 2^16 symbols
    other = "1" * 2 ** 16
    t0 = time.perf_counter()
    w.truncate(big, other)
    w.drop_last(big)
    w.lmin(big, other)
    w.cond(big, big, other)
    enc = w.tuple_n([big, other, big])
    assert w.project(enc, 3, 2) == other
    assert time.perf_counter() - t0 < 2.0
