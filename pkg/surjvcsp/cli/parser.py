#
# surjvcsp/cli/parser.py
#
"""
Parsers for the line based text formats.

Every format starts with a header line naming it, followed by statements
of whitespace separated tokens; ``#`` starts a comment. A parser is a
generator which is sent one tokenized line at a time and, once sent
None, yields what it built. Errors carry the line and column of the
offending token.
"""

import re
import logging

import networkx as nx

from surjvcsp.config import settings
from surjvcsp.core import INF, R_MAX, Constraint, Instance, Language, WeightedRelation
from surjvcsp.core import parse_value
from surjvcsp.errors import ArgumentError, DataError, ParseError
from surjvcsp.gmc import DenseTable, GmcInstance, validate_superadditive
from surjvcsp.gadgets import ParityCheckMatrix

logger = logging.getLogger(__name__)

TOKEN_REGEX = re.compile(r'\S+')


class Token(str):
    """A string remembering the column it started at."""

    def __new__(cls, text, column):
        token = super().__new__(cls, text)
        token.column = column
        return token


def tokenize(line):
    line = line.split('#', 1)[0]
    return [Token(m.group(), m.start() + 1) for m in TOKEN_REGEX.finditer(line)]


class Parser:
    """
    Base of the format parsers. Subclasses set HEADER and implement
    ``_statement(lineno, keyword, args)`` and ``_result()``.

    Statements are dispatched on their first token; ``KEYWORDS`` maps each
    keyword to the number of arguments it takes, or None when the count
    is checked by the statement itself.
    """

    HEADER = None
    KEYWORDS = {}

    def __init__(self):
        self.lineno = 0
        self._parser = self._file_parser()
        self._parser.send(None)

    def consume(self, text):
        """Feed any number of complete lines."""
        for line in text.splitlines():
            self.lineno += 1
            tokens = tokenize(line)
            if tokens:
                self._parser.send((self.lineno, tokens))
        return self

    def finish(self):
        return self._parser.send(None)

    @classmethod
    def parse(cls, text, **kw):
        return cls(**kw).consume(text).finish()

    def _file_parser(self):
        yield from self._receive_header()
        yield from self._receive_statements()
        yield self._result()

    def _receive_header(self):
        received = yield
        if received is None:
            raise ParseError("empty file, expected header %r" % self.HEADER, self.lineno)
        lineno, tokens = received
        if len(tokens) != 1 or tokens[0] != self.HEADER:
            raise ParseError("expected header %r" % self.HEADER, lineno, tokens[0].column)

    def _receive_statements(self):
        received = yield
        while received is not None:
            lineno, (keyword, *args) = received
            if keyword not in self.KEYWORDS:
                raise ParseError("unknown statement %r" % str(keyword), lineno, keyword.column)
            expected = self.KEYWORDS[keyword]
            if expected is not None and len(args) != expected:
                raise ParseError("%s takes %d arguments, got %d"
                                 % (keyword, expected, len(args)),
                                 lineno, keyword.column)
            self._statement(lineno, keyword, args)
            received = yield

    def _result(self):
        raise NotImplementedError

    #
    # token helpers
    #

    @staticmethod
    def integer(lineno, token, low=None, high=None):
        if not token.isdigit():
            raise ParseError("expected a non-negative integer, got %r" % str(token),
                             lineno, token.column)
        value = int(token)
        if (low is not None and value < low) or (high is not None and value > high):
            raise ParseError("%d outside [%s, %s]" % (value, low, high), lineno, token.column)
        return value

    @staticmethod
    def value(lineno, token):
        try:
            return parse_value(token)
        except ArgumentError as error:
            raise ParseError(str(error), lineno, token.column) from error

    def _size(self, lineno, keyword, args, attribute):
        if getattr(self, attribute) is not None:
            raise ParseError("%s given twice" % keyword, lineno, keyword.column)
        setattr(self, attribute, self.integer(lineno, args[0], low=1))

    def _require_size(self, lineno, keyword, attribute, statement):
        size = getattr(self, attribute)
        if size is None:
            raise ParseError("%s must come before %s" % (statement, keyword),
                             lineno, keyword.column)
        return size


class InstanceParser(Parser):
    """
    ``boolean-vcsp`` files: ``vars N``, ``rel NAME ARITY values...`` and
    ``con WEIGHT NAME vars...``. A file without ``vars`` and ``con``
    describes a language only.

    Result:
        (Language, Instance or None)
    """

    HEADER = 'boolean-vcsp'
    KEYWORDS = {'vars': 1, 'rel': None, 'con': None}

    def __init__(self):
        self.num_vars = None
        self.relations = {}
        self.constraints = []
        super().__init__()

    def _statement(self, lineno, keyword, args):
        if keyword == 'vars':
            self._size(lineno, keyword, args, 'num_vars')
        elif keyword == 'rel':
            self._relation(lineno, keyword, args)
        else:
            self._constraint(lineno, keyword, args)

    def _relation(self, lineno, keyword, args):
        if len(args) < 2:
            raise ParseError("rel needs a name and an arity", lineno, keyword.column)
        name, arity, *values = args
        if name in self.relations:
            raise ParseError("relation %r defined twice" % str(name), lineno, name.column)
        arity = self.integer(lineno, arity, low=1, high=R_MAX)
        if len(values) != 1 << arity:
            raise ParseError("arity %d needs %d values, got %d"
                             % (arity, 1 << arity, len(values)), lineno, keyword.column)
        table = [self.value(lineno, v) for v in values]
        self.relations[str(name)] = WeightedRelation(arity, table, name=str(name))

    def _constraint(self, lineno, keyword, args):
        n = self._require_size(lineno, keyword, 'num_vars', 'vars')
        if len(args) < 2:
            raise ParseError("con needs a weight and a relation", lineno, keyword.column)
        weight, name, *scope = args
        value = self.value(lineno, weight)
        if value is INF or value < 0:
            raise ParseError("weight must be finite and non-negative", lineno, weight.column)
        if name not in self.relations:
            raise ParseError("unknown relation %r" % str(name), lineno, name.column)
        relation = self.relations[name]
        if len(scope) != relation.arity:
            raise ParseError("%s has arity %d, got %d variables"
                             % (name, relation.arity, len(scope)), lineno, name.column)
        scope = tuple(self.integer(lineno, v, low=1, high=n) for v in scope)
        self.constraints.append(Constraint(value, relation, scope))

    def _result(self):
        language = Language(self.relations)
        if self.num_vars is None:
            return language, None
        return language, Instance(self.num_vars, self.constraints)


class GmcParser(Parser):
    """
    ``gmc`` files: ``verts N``, ``edge U V W`` and ``f MASK VALUE``.
    Unlisted masks of f are 0.

    Result:
        GmcInstance
    """

    HEADER = 'gmc'
    KEYWORDS = {'verts': 1, 'edge': 3, 'f': 2}

    def __init__(self, validate=None):
        self.validate = settings.enabled('validate_superadditive') if validate is None \
            else validate
        self.num_verts = None
        self.edges = []
        self.values = {}
        super().__init__()

    def _statement(self, lineno, keyword, args):
        if keyword == 'verts':
            self._size(lineno, keyword, args, 'num_verts')
            return
        n = self._require_size(lineno, keyword, 'num_verts', 'verts')
        if keyword == 'edge':
            u, v = (self.integer(lineno, t, low=1, high=n) for t in args[:2])
            if u == v:
                raise ParseError("self-loop at vertex %d" % u, lineno, args[1].column)
            weight = self.value(lineno, args[2])
            if not weight > 0:
                raise ParseError("edge weight must be positive", lineno, args[2].column)
            self.edges.append((u, v, weight))
        else:
            mask = self.integer(lineno, args[0], low=0, high=(1 << n) - 1)
            if mask in self.values:
                raise ParseError("mask %d given twice" % mask, lineno, args[0].column)
            value = self.value(lineno, args[1])
            if value < 0:
                raise DataError("set function values must be non-negative",
                                lineno, args[1].column)
            if mask == 0 and value != 0:
                raise DataError("f of the empty set must be 0", lineno, args[1].column)
            self.values[mask] = value

    def _result(self):
        if self.num_verts is None:
            raise ParseError("missing verts statement", self.lineno)
        f = DenseTable.from_mapping(self.num_verts, self.values)
        if self.validate:
            if f.size > settings['superadditivity_limit']:
                logger.warning("skipping superadditivity check over %d vertices", f.size)
            else:
                validate_superadditive(f)
        return GmcInstance.build(self.num_verts, self.edges, f)


class GraphParser(Parser):
    """
    ``graph`` files: ``verts N`` and ``edge U V``.

    Result:
        networkx.Graph on nodes 1..N
    """

    HEADER = 'graph'
    KEYWORDS = {'verts': 1, 'edge': 2}

    def __init__(self):
        self.num_verts = None
        self.edges = []
        super().__init__()

    def _statement(self, lineno, keyword, args):
        if keyword == 'verts':
            self._size(lineno, keyword, args, 'num_verts')
            return
        n = self._require_size(lineno, keyword, 'num_verts', 'verts')
        u, v = (self.integer(lineno, t, low=1, high=n) for t in args)
        if u == v:
            raise ParseError("self-loop at vertex %d" % u, lineno, args[1].column)
        self.edges.append((u, v))

    def _result(self):
        if self.num_verts is None:
            raise ParseError("missing verts statement", self.lineno)
        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.num_verts + 1))
        graph.add_edges_from(self.edges)
        return graph


def parse_instance(text):
    return InstanceParser.parse(text)


def parse_gmc(text, validate=None):
    """
    Raises:
        ParseError: malformed file
        DataError: f is negative somewhere or not superadditive
    """
    return GmcParser.parse(text, validate=validate)


def parse_graph(text):
    return GraphParser.parse(text)


def parse_matrix(text):
    return ParityCheckMatrix.from_text(text)
