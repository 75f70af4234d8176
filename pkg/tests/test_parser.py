#
# tests/test_parser.py
#

import pytest
from fractions import Fraction

from surjvcsp.cli.formats import format_instance, write_result
from surjvcsp.cli.parser import (
    InstanceParser,
    Token,
    parse_gmc,
    parse_graph,
    parse_instance,
    parse_matrix,
    tokenize,
)
from surjvcsp.core import INF, Instance
from surjvcsp.core.library import A3, GAMMA_EQ, RHO_0
from surjvcsp.errors import DataError, ParseError
from surjvcsp.oracle import brute_gmc

from corpus import cycle_edges, mincut_instance

SQUARE = """\
boolean-vcsp
# soft equality around a square
rel eq 2 0 1 1 0
vars 4
con 1 eq 1 2
con 1 eq 2 3
con 1 eq 3 4   # closing edge below
con 1 eq 4 1
"""

NAND = """\
gmc
verts 3
edge 1 2 1
edge 2 3 1
edge 3 1 1
f 3 1
f 7 1
"""


def test_tokenize():
    tokens = tokenize("  con 1/2 eq  1 2 # trailing")
    assert tokens == ['con', '1/2', 'eq', '1', '2']
    assert [t.column for t in tokens] == [3, 7, 11, 15, 17]
    assert isinstance(tokens[0], Token)
    assert tokenize("# only a comment") == []


def test_parse_instance():
    language, instance = parse_instance(SQUARE)
    assert list(language) == ['eq']
    assert language['eq'] == GAMMA_EQ
    assert instance == mincut_instance(4, cycle_edges(4))


def test_parse_language_only():
    language, instance = parse_instance("boolean-vcsp\nrel z 1 0 inf\nrel h 2 0 1/2 1/2 inf\n")
    assert instance is None
    assert language['z'] == RHO_0.to_weighted()
    assert language['h'].table == (0, Fraction(1, 2), Fraction(1, 2), INF)


def test_parser_accepts_lines_in_pieces():
    parser = InstanceParser()
    for line in SQUARE.splitlines(keepends=True):
        parser.consume(line)
    _, instance = parser.finish()
    assert instance.num_vars == 4
    assert len(instance.constraints) == 4


@pytest.mark.parametrize("text, line, column", [
    ("", 0, 1),
    ("vars 2\n", 1, 1),
    ("boolean-vcsp extra\n", 1, 1),
    ("boolean-vcsp\nfoo 1\n", 2, 1),
    ("boolean-vcsp\nvars 2\nvars 3\n", 3, 1),
    ("boolean-vcsp\nvars 0\n", 2, 6),
    ("boolean-vcsp\nvars x\n", 2, 6),
    ("boolean-vcsp\nrel eq 2 0 1 1\n", 2, 1),
    ("boolean-vcsp\nrel eq 9 0\n", 2, 8),
    ("boolean-vcsp\nrel u 1 0 1\nrel u 1 1 0\n", 3, 5),
    ("boolean-vcsp\nrel u 1 0 x\n", 2, 11),
    ("boolean-vcsp\nrel u 1 0 1\ncon 1 u 1\n", 3, 1),
    ("boolean-vcsp\nvars 2\ncon 1 u 1\n", 3, 7),
    ("boolean-vcsp\nvars 2\nrel u 1 0 1\ncon 1 u 3\n", 4, 9),
    ("boolean-vcsp\nvars 2\nrel u 1 0 1\ncon 1 u 1 2\n", 4, 7),
    ("boolean-vcsp\nvars 2\nrel u 1 0 1\ncon -1 u 1\n", 4, 5),
    ("boolean-vcsp\nvars 2\nrel u 1 0 1\ncon inf u 1\n", 4, 5),
])
def test_instance_errors(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_instance(text)
    assert (info.value.line, info.value.column or 1) == (line, column)


def test_parse_gmc():
    gmc = parse_gmc(NAND)
    assert gmc.n == 3
    value, solutions = brute_gmc(gmc)
    assert value == 2
    assert len(solutions) == 5


def test_parse_gmc_infinite_edge():
    gmc = parse_gmc("gmc\nverts 3\nedge 1 2 inf\nedge 2 3 1\n")
    assert gmc.n == 2
    assert gmc.objective_original({1, 2}) == 1
    assert gmc.objective_original({1}) is INF


@pytest.mark.parametrize("text", [
    "gmc\nverts 2\nf 1 -1\n",
    "gmc\nverts 2\nf 0 1\n",
    "gmc\nverts 2\nf 1 1\nf 2 1\nf 3 1\n",
])
def test_gmc_data_errors(text):
    with pytest.raises(DataError):
        parse_gmc(text)


def test_gmc_skips_validation():
    gmc = parse_gmc("gmc\nverts 2\nf 1 1\nf 2 1\nf 3 1\n", validate=False)
    assert gmc.objective({1}) == 1


@pytest.mark.parametrize("text", [
    "gmc\nedge 1 2 1\n",
    "gmc\nverts 2\nedge 1 1 1\n",
    "gmc\nverts 2\nedge 1 2 0\n",
    "gmc\nverts 2\nedge 1 3 1\n",
    "gmc\nverts 2\nf 4 1\n",
    "gmc\nverts 2\nf 1 1\nf 1 2\n",
    "gmc\nverts 2\nedge 1 2\n",
    "gmc\n",
])
def test_gmc_parse_errors(text):
    with pytest.raises(ParseError):
        parse_gmc(text)


def test_parse_graph():
    graph = parse_graph("graph\nverts 4\nedge 1 2\nedge 2 3\n")
    assert sorted(graph.nodes) == [1, 2, 3, 4]
    assert graph.number_of_edges() == 2
    with pytest.raises(ParseError):
        parse_graph("graph\nverts 2\nedge 2 2\n")


def test_parse_matrix():
    matrix = parse_matrix("110\n# comment\n\n011\n")
    assert matrix.shape == (2, 3)
    assert matrix.supports() == [(1, 2), (2, 3)]
    with pytest.raises(ParseError):
        parse_matrix("11\n1\n")
    with pytest.raises(ParseError):
        parse_matrix("12\n")
    with pytest.raises(ParseError):
        parse_matrix("# nothing\n")


def test_format_instance_reads_back():
    instance = Instance(3, [(1, A3, (1, 2, 3)), (Fraction(1, 2), GAMMA_EQ, (1, 3)),
                            (2, RHO_0.to_weighted(), (2, ))])
    text = format_instance(instance)
    assert text.splitlines()[:2] == ['boolean-vcsp', 'vars 3']
    assert 'rel A3 3 0 inf inf 0 inf 0 0 inf' in text
    assert 'con 1/2 gamma_eq 1 3' in text
    _, parsed = parse_instance(text)
    assert parsed == instance


def test_write_result_orders_fields():
    record = {
        'path': 'brute-force',
        'candidates_examined': 6,
        'assignment': [0, 1],
        'value': '1/2',
        'status': 'optimal',
    }
    assert write_result(record) == ('{"status":"optimal","value":"1/2","assignment":[0,1],'
                                    '"path":"brute-force","candidates_examined":6}')
    assert write_result({'b': 1, 'a': 2}) == '{"b":1,"a":2}'
