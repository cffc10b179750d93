import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import clauses_st, instances_st
from msat.errors import FormatError
from msat.formats import (
    parse_cnf, parse_graph, parse_instance, parse_witness, serialize_cnf, serialize_graph,
    serialize_instance, serialize_witness,
)
from msat.formula import Literal, MultistageInstance, neg, pos
from msat.generators import Graph

EXAMPLE = "p msat 2 1 2 0\ns 1\n1 0\ns 1\n-1 0\n"


def test_parse_example():
    inst = parse_instance(EXAMPLE)
    assert inst == MultistageInstance(1, (((pos(0),),), ((neg(0),),)), 0)
    assert serialize_instance(inst) == EXAMPLE


def test_comments_and_blank_lines_ignored():
    text = "c a comment\n\np msat 2 1 2 0\ns 1\nc inside\n1 0\ns 1\n-1 0\n\n"
    assert parse_instance(text) == parse_instance(EXAMPLE)


def test_width_error_names_line():
    text = "p msat 2 3 1 0\ns 1\n1 2 3 0\n"
    with pytest.raises(FormatError, match="line 3") as info:
        parse_instance(text)
    assert info.value.line == 3


@pytest.mark.parametrize("text, line", [
    ("p msat 2 1 2 0\ns 1\n1 0\n", 3),             # missing stage
    ("p msat 2 1 1 0\ns 2\n1 0\n", 3),             # truncated stage
    ("p msat 2 1 1 0\ns 1\n2 0\n", 3),             # variable out of range
    ("p msat 2 1 1 0\ns 1\n1\n", 3),               # unterminated clause
    ("p msat 2 1 1 0\ns 1\n1 0\n1 0\n", 4),        # trailing clause
    ("p msat x 1 1 0\n", 1),
    ("p cnf 1 1\n", 1),
])
def test_malformed(text, line):
    with pytest.raises(FormatError) as info:
        parse_instance(text)
    assert info.value.line == line


def test_budget_above_n_rejected():
    with pytest.raises(FormatError, match="exceeds"):
        parse_instance("p msat 2 1 1 3\ns 0\n")


def test_empty_stage_and_empty_clause():
    inst = MultistageInstance(2, ((), ((),)), 1)
    text = serialize_instance(inst)
    assert "s 0\n" in text and text.endswith("s 1\n0\n")
    assert parse_instance(text) == inst


@given(instances_st(max_n=8, max_tau=5, max_clauses=6))
def test_instance_roundtrip(instance):
    assert parse_instance(serialize_instance(instance)) == instance


def test_witness_format():
    w = ((True, False, True), (False, False, True))
    assert serialize_witness(w) == "101\n001\n"
    assert parse_witness("101\n001\n", n=3, tau=2) == w


@pytest.mark.parametrize("text, kwargs", [
    ("10\n1\n", {}),
    ("12\n", {}),
    ("10\n", {"n": 3}),
    ("10\n", {"tau": 2}),
])
def test_witness_shape_errors(text, kwargs):
    with pytest.raises(FormatError):
        parse_witness(text, **kwargs)


@given(st.integers(0, 6).flatmap(lambda n: st.lists(
    st.tuples(*[st.booleans()] * n), min_size=1, max_size=5)))
def test_witness_roundtrip(rows):
    w = tuple(rows)
    assert parse_witness(serialize_witness(w)) == w


@given(st.integers(1, 6).flatmap(lambda n: st.tuples(st.just(n), clauses_st(n, 3, 6))))
def test_cnf_roundtrip(data):
    n, clauses = data
    assert parse_cnf(serialize_cnf(n, clauses)) == (n, clauses)


def test_cnf_keeps_repeated_literals():
    n, clauses = parse_cnf("p cnf 1 1\n1 1 1 0\n")
    assert clauses == ((Literal(0),) * 3,)
    with pytest.raises(FormatError):
        parse_cnf("p cnf 1 2\n1 0\n")


def test_graph_roundtrip():
    g = Graph(4, ((0, 1), (2, 3)), ((0, 2), (1, 3)))
    assert serialize_graph(g) == "p graph 4 2\ne 1 2\ne 3 4\npart 1 3\npart 2 4\n"
    assert parse_graph(serialize_graph(g)) == g


def test_graph_errors():
    with pytest.raises(FormatError, match="line 2"):
        parse_graph("p graph 2 1\ne 1 3\n")
    with pytest.raises(FormatError):
        parse_graph("p graph 2 2\ne 1 2\n")
