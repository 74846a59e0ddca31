"""Instance documents: parsing, canonical serialisation, error reporting."""
import json
from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from polycal import FormatError, HPoly, MaxAffineFn, SVMap, canonical, parse, serialize, set_equal
from polycal.formats import CheckDoc

from conftest import interval, maxaffine, polytopes


def test_halfline_example():
    P = parse(b'{"type":"hpoly","dim":1,"ineq":[{"a":["1"],"b":"1"}],"eq":[]}')
    assert isinstance(P, HPoly) and set_equal(P, HPoly(1, (((1,), 1),)))


def test_rationals_normalised():
    P = parse('{"type":"hpoly","dim":1,"ineq":[{"a":["2/4"],"b":"1"}],"eq":[]}')
    assert P.ineqs[0][0] == (Q(1, 2),)
    assert b'"1/2"' in serialize(P)


def test_zero_denominator_names_field():
    with pytest.raises(FormatError) as e:
        parse('{"type":"hpoly","dim":1,"ineq":[{"a":["1"],"b":"1/0"}],"eq":[]}')
    assert e.value.field == "ineq[0].b"


def test_syntax_error_has_line_and_column():
    with pytest.raises(FormatError) as e:
        parse('{"type":"hpoly",\n  "dim": }')
    assert (e.value.line, e.value.column) == (2, 10)


@pytest.mark.parametrize("doc,field", [
    ({"type": "hpoly", "dim": 1, "extra": 1}, "extra"),
    ({"type": "hpoly", "dim": 1, "ineq": [{"a": ["1"], "b": "1", "c": "2"}]}, "ineq[0].c"),
    ({"type": "hpoly", "dim": 1, "ineq": [{"a": [1], "b": "1"}]}, "ineq[0].a[0]"),
    ({"type": "hpoly", "dim": 2, "ineq": [{"a": ["1"], "b": "1"}]}, "ineq[0].a"),
    ({"type": "svmap", "n": 1, "m": 1, "graph": {"dim": 3}}, "graph.dim"),
    ({"type": "maxaffine", "n": 1, "pieces": []}, "pieces"),
    ({"type": "maxaffine", "n": 1, "pieces": [{"a": ["1"], "b": "0"}], "dom": {"type": "svmap"}}, "dom.type"),
    ({"type": "check", "theorem": "X", "instances": [{"type": "hpoly"}]}, "instances[0].dim"),
    ({"type": "shape"}, "type"),
])
def test_semantic_errors_name_field(doc, field):
    with pytest.raises(FormatError) as e:
        parse(json.dumps(doc))
    assert e.value.field == field


def test_non_utf8_rejected():
    with pytest.raises(FormatError):
        parse(b'{"type":"hpoly","dim":\xff}')


def test_nested_type_optional():
    F = parse('{"type":"svmap","n":1,"m":1,"graph":{"dim":2,"ineq":[{"a":["1","-1"],"b":"0"}]}}')
    assert isinstance(F, SVMap) and F.in_graph((0,), (1,))


def test_check_doc_roundtrip():
    c = CheckDoc("SUM_RULE", (HPoly(1, (((1,), 1),)),), ((Q(1, 2),),), {"vs": [[Q(1)]], "samples": 3})
    again = parse(serialize(c))
    assert again == c


@given(polytopes())
def test_hpoly_roundtrip(pa):
    P, _ = pa
    data = serialize(P)
    assert parse(data) == P
    assert canonical(data) == data


@given(maxaffine())
def test_maxaffine_roundtrip(fa):
    f, _ = fa
    data = serialize(f)
    g = parse(data)
    assert isinstance(g, MaxAffineFn) and g == f
    assert serialize(g) == data


@given(st.fractions(), st.integers(1, 6))
def test_equal_objects_equal_bytes(q, k):
    text = lambda s: '{"eq":[],"dim":1,"type":"hpoly","ineq":[{"b":"%s","a":["1"]}]}' % s
    scaled = f"{q.numerator * k}/{q.denominator * k}"
    assert canonical(text(str(q))) == canonical(text(scaled))
    assert parse(text(scaled)).ineqs[0][1] == q
