import re

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oneplane.core import ValidationError
from oneplane.interchange import ParseError, dump, load, parse, serialize, to_dot
from oneplane.generators import (
    gen_HH,
    gen_M,
    gen_XH,
    gen_XM,
    gen_YH,
    gen_random_seed,
)


@pytest.mark.parametrize("g", [gen_XH(1), gen_YH(1), gen_XM(1), gen_XM(3),
                               gen_M(2), gen_HH(2)])
def test_round_trip_identity(g):
    text = serialize(g)
    g2 = parse(text)
    assert g2 == g
    assert serialize(g2) == text


def test_file_round_trip(tmp_path):
    g = gen_XH(2)
    path = tmp_path / "xh2.1pg"
    dump(g, path)
    assert load(path) == g


@settings(max_examples=20, deadline=None)
@given(st.integers(4, 12), st.integers(0, 10 ** 6))
def test_round_trip_on_random_drawings(n, seed):
    g = gen_random_seed(n, seed)
    assert parse(serialize(g)) == g


def test_header_required():
    with pytest.raises(ParseError):
        parse("nonsense 9\n")


def test_labels_accepted():
    g = gen_M(1)
    text = serialize(g, labels={0: "origin"})
    assert "v 0 true origin" in text
    assert parse(text) == g


def test_segment_multiplicity_error():
    g = gen_M(1)
    lines = serialize(g).splitlines()
    # duplicate one rotation token: that segment then appears three times
    idx = next(i for i, l in enumerate(lines) if l.startswith("rot "))
    lines[idx] = lines[idx] + " " + lines[idx].split()[-1]
    with pytest.raises(ParseError):
        parse("\n".join(lines) + "\n")


def test_validation_failure_surfaces():
    # structurally parseable but not a valid drawing (loop)
    text = "\n".join([
        "1pg 1",
        "vertices 1",
        "v 0 true",
        "edges 1",
        "e 0 0 0",
        "rot 0 0 0",
        "",
    ])
    with pytest.raises(ValidationError):
        parse(text)


def test_dot_counts():
    dot = to_dot(gen_XH(1))
    nodes = len(re.findall(r"^\s*n\d+ \[", dot, re.M))
    edges = len(re.findall(r"--", dot))
    assert (nodes, edges) == (18, 48)
    assert "color=red" in dot               # fake vertices styled distinctly
    assert re.search(r'label="e\d+xe\d+"', dot)   # crossing pair annotation

    dot = to_dot(gen_M(1))
    nodes = len(re.findall(r"^\s*n\d+ \[", dot, re.M))
    edges = len(re.findall(r"--", dot))
    assert (nodes, edges) == (4, 4)
