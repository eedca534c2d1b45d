import json

import pytest

from freqrect import io
from freqrect.designs import VectorSet, validate_fr, validate_hadamard, validate_oa


def test_fr_round_trip(table2_set):
    text = io.serialize_fr(table2_set[0])
    assert text.startswith("FR 4 4 2\n")
    assert io.parse_fr(text) == table2_set[0]


def test_fr_set_round_trip(table2_set):
    text = io.serialize_fr_set(table2_set)
    assert io.parse_fr_set(text) == list(table2_set)


def test_canonical_serialization(table2_set, mofs14_golden_text):
    for obj in (table2_set[2], list(table2_set)):
        s = io.serialize(obj)
        assert io.serialize(io.parse(s)) == s
    assert io.serialize_fr_set(io.parse_fr_set(mofs14_golden_text)) == mofs14_golden_text


def test_appendix_fixture_parses(mofs14_golden):
    assert len(mofs14_golden) == 6
    assert all((f.m, f.n, f.q) == (14, 14, 2) for f in mofs14_golden)


def test_oa_round_trip():
    rows = [[(r >> 1) & 1, r & 1, ((r >> 1) ^ r) & 1] for r in range(4)]
    oa = validate_oa(rows, 2, 2)
    text = io.serialize_oa(oa)
    assert text.splitlines()[0] == "OA 4 3 2 2"
    assert io.parse_oa(text) == oa
    assert io.parse(text) == oa


def test_hadamard_round_trip():
    h = validate_hadamard([[1, 1], [1, -1]])
    text = io.serialize_hadamard(h)
    assert text == "HAD 2\n+ +\n+ -\n"
    assert io.parse_hadamard(text) == h


def test_vs_round_trip():
    vs = VectorSet(q=3, length=4, vectors=((1, 0, 2, 1), (0, 1, 1, 2)))
    text = io.serialize_vs(vs)
    assert text == "VS 3 4 2\n1021\n0112\n"
    assert io.parse_vs(text) == vs


def test_parse_errors_carry_location():
    with pytest.raises(io.ParseError) as exc:
        io.parse_fr("FR 2 2 2\n0 1\n0 x\n")
    assert exc.value.line == 3 and exc.value.col == 2
    with pytest.raises(io.ParseError) as exc:
        io.parse_fr("FR 2 2 2\n0 1\n")
    assert "end of input" in str(exc.value)
    with pytest.raises(io.ParseError):
        io.parse_oa("OA 4 3 2\n")  # wrong header arity
    with pytest.raises(io.ParseError) as exc:
        io.parse_hadamard("HAD 2\n+ +\n+ x\n")
    assert exc.value.line == 3
    with pytest.raises(io.ParseError):
        io.parse("WHAT 1 2\n")
    with pytest.raises(io.ParseError):
        io.parse_fr("FR 2 2 2\n0 1\n1 0\nextra\n")


def test_invalid_content_rejected():
    # well-formed text, invalid object
    from freqrect.designs import ValidationError
    with pytest.raises(ValidationError):
        io.parse_fr("FR 2 2 2\n0 0\n1 1\n")


def test_json_round_trip(table2_set):
    for obj in (table2_set[0], list(table2_set)):
        blob = json.loads(io.dumps_json(obj))
        back = io.from_json(blob)
        assert back == obj or back == list(obj)
    oa = validate_oa([[0, 0], [0, 1], [1, 0], [1, 1]], 2, 2)
    assert io.from_json(io.to_json(oa)) == oa
    h = validate_hadamard([[1, 1], [1, -1]])
    assert io.from_json(io.to_json(h)) == h
    vs = VectorSet(q=2, length=2, vectors=((1, 0), (0, 1)))
    assert io.from_json(io.to_json(vs)) == vs
    with pytest.raises(ValueError):
        io.from_json({"type": "nope"})
