#
# surjvcsp/cli/__init__.py
#
"""
The ``surjvcsp`` command line program.

Results go to stdout, one JSON record per line (CSV for ``bench``, the
instance format for ``gadget``); logging goes to stderr. Errors are
reported on stderr and mapped to exit codes: 1 usage, 2 parse,
3 resource guard, 4 verify mismatch.
"""

import sys
import logging
from argparse import ArgumentParser
from fractions import Fraction

from surjvcsp.__meta__ import version
from surjvcsp.config import settings
from surjvcsp.errors import ArgumentError, SurjError
from surjvcsp.solver import MODES
from .commands import COMMANDS, apply_settings
from .formats import format_instance, write_result
from .parser import parse_gmc, parse_graph, parse_instance, parse_matrix

logger = logging.getLogger(__name__)

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"


class CommandParser(ArgumentParser):
    """ArgumentParser reporting usage errors as ArgumentError."""

    def error(self, message):
        raise ArgumentError("%s: %s" % (self.prog, message))


def _fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise ArgumentError("expected a rational P or P/Q, got %r" % text)


def build_parser():
    parser = CommandParser(prog='surjvcsp',
                           description="Surjective Boolean VCSP toolkit")
    parser.add_argument('-V', '--version', action='version',
                        version="surjvcsp/%s" % version)
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help="log progress to stderr; repeat for debug output")
    parser.add_argument('--brute-limit', type=int, default=None, metavar='N',
                        help="largest instance solved by exhaustive search")
    commands = parser.add_subparsers(dest='command', parser_class=CommandParser)
    commands.required = True

    def with_input(name, summary):
        sub = commands.add_parser(name, help=summary)
        sub.add_argument('-i', '--input', required=True, metavar='FILE')
        return sub

    with_input('classify', "decide global s-tractability of a language")
    for name, summary in (('solve', "find an optimal surjective assignment"),
                          ('enumerate', "list all optimal surjective assignments"),
                          ('verify', "cross-check the solver against brute force")):
        sub = with_input(name, summary)
        sub.add_argument('--mode', choices=MODES, default='auto')
    commands.choices['enumerate'].add_argument(
        '--report-delay', action='store_true',
        help="print the largest delay between outputs to stderr")

    gmc = with_input('gmc', "solve a Generalised Min-Cut instance")
    gmc.add_argument('--all-optimal', action='store_true')
    gmc.add_argument('--alpha', type=_fraction, default=None, metavar='P/Q')
    gmc.add_argument('--no-validate', action='store_true',
                     help="skip the superadditivity check of f")

    fixup = with_input('fixup', "make a Max-VCSP assignment surjective")
    fixup.add_argument('--assignment', required=True, metavar='BITS')
    fixup.add_argument('--epsilon', type=_fraction, required=True, metavar='P/Q')
    fixup.add_argument('--ratio', type=_fraction, default=Fraction(1), metavar='P/Q',
                       help="approximation ratio of the given assignment")

    gadget = commands.add_parser('gadget', help="write a reduction instance")
    gadgets = gadget.add_subparsers(dest='gadget', parser_class=CommandParser)
    gadgets.required = True
    gadgets.add_parser('mindist').add_argument('--matrix', required=True, metavar='FILE')
    maxcut = gadgets.add_parser('maxcut')
    maxcut.add_argument('--graph', required=True, metavar='FILE')
    maxcut.add_argument('--w', type=int, default=None)
    for name in ('pad', 'leq-constants'):
        gadgets.add_parser(name).add_argument('-i', '--input', required=True, metavar='FILE')

    bench = commands.add_parser('bench', help="time solve and enumerate over files")
    bench.add_argument('inputs', nargs='+', metavar='FILE')
    bench.add_argument('--mode', choices=MODES, default='auto')
    return parser


def main(argv=None, out=None):
    """
    Run the program and return its exit code.
    """
    out = out if out is not None else sys.stdout
    saved = dict(settings.config)
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(stream=sys.stderr, format=LOG_FORMAT,
                            level=max(logging.DEBUG, logging.WARNING - 10 * args.verbose))
        apply_settings(args)
        return COMMANDS[args.command](args, out)
    except SurjError as error:
        print("surjvcsp: %s error: %s" % (error.label, error), file=sys.stderr)
        return error.exit_code
    finally:
        settings.config.update(saved)


__all__ = [
    'main', 'build_parser', 'CommandParser',
    'parse_instance', 'parse_gmc', 'parse_graph', 'parse_matrix',
    'format_instance', 'write_result',
]
