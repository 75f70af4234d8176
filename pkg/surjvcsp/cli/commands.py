#
# surjvcsp/cli/commands.py
#
"""
Implementations of the subcommands. Each takes the parsed arguments and
an output stream, and returns the process exit code.
"""

import csv
import sys
import time
import logging

from surjvcsp.config import settings
from surjvcsp.core import Assignment, format_value
from surjvcsp.classify import classify_language
from surjvcsp.errors import ArgumentError, ParseError, VerifyMismatch
from surjvcsp.gmc import (
    LambdaKind,
    classify_lambda,
    enumerate_alpha_optimal,
    enumerate_optimal,
)
from surjvcsp.gadgets import (
    encode_maxcut,
    encode_min_distance,
    pad_surjective,
    simulate_constants_with_leq,
)
from surjvcsp import oracle
from surjvcsp.solver import enumerate_optimal_surjective, fixup_surjective, solve_surjective
from surjvcsp.timing import DelayTimer
from surjvcsp.utils import canonical_sorted
from .formats import format_instance, write_result
from .parser import parse_gmc, parse_graph, parse_instance, parse_matrix

logger = logging.getLogger(__name__)


def read_text(path):
    """
    Raises:
        ArgumentError: the file cannot be read
    """
    try:
        with open(path, encoding='utf-8') as fd:
            return fd.read()
    except OSError as error:
        raise ArgumentError("cannot read %s: %s" % (path, error.strerror)) from error


def load_instance(path):
    """
    Raises:
        ParseError: the file declares a language but no variables
    """
    _, instance = parse_instance(read_text(path))
    if instance is None:
        raise ParseError("%s has no vars statement" % path)
    return instance


def cmd_classify(args, out):
    language, instance = parse_instance(read_text(args.input))
    verdict = classify_language(language)
    logger.info("%s: %s", args.input, verdict.status.value)
    print(write_result(verdict.to_record()), file=out)
    return 0


def cmd_solve(args, out):
    result = solve_surjective(load_instance(args.input), mode=args.mode)
    print(write_result(result.to_record()), file=out)
    return 0


def cmd_enumerate(args, out):
    instance = load_instance(args.input)
    timer = DelayTimer(enumerate_optimal_surjective(instance, mode=args.mode), units='ms')
    for s in timer:
        print(write_result(list(s)), file=out, flush=True)
    if args.report_delay:
        report = {
            'count': timer.count,
            'max_delay_ms': timer.format_timediff(timer.max_delay),
            'total_ms': timer.format_timediff(timer.elapsed),
        }
        print(write_result(report), file=sys.stderr)
    return 0


def _original_solutions(gmc, solutions):
    return [sorted(X) for X in canonical_sorted(gmc.expand(X) for X in solutions)]


def cmd_gmc(args, out):
    gmc = parse_gmc(read_text(args.input), validate=not args.no_validate)
    found = classify_lambda(gmc)
    record = {'kind': found.kind.value, 'lambda': format_value(found.value)}
    if found.kind is LambdaKind.ZERO:
        record['witness'] = sorted(gmc.expand(found.witness))
    if args.alpha is not None:
        solutions = enumerate_alpha_optimal(gmc, args.alpha)
        record['solutions'] = _original_solutions(gmc, solutions)
    elif args.all_optimal:
        _, solutions = enumerate_optimal(gmc)
        record['solutions'] = _original_solutions(gmc, solutions)
    print(write_result(record), file=out)
    return 0


def cmd_fixup(args, out):
    instance = load_instance(args.input)
    s = Assignment.from_string(args.assignment)
    fixed = fixup_surjective(instance, s, args.ratio, args.epsilon)
    record = {
        'assignment': list(fixed),
        'value': format_value(instance.evaluate(fixed)),
        'input_value': format_value(instance.evaluate(s)),
    }
    print(write_result(record), file=out)
    return 0


def cmd_gadget(args, out):
    if args.gadget == 'mindist':
        instance = encode_min_distance(parse_matrix(read_text(args.matrix)))
    elif args.gadget == 'maxcut':
        instance = encode_maxcut(parse_graph(read_text(args.graph)), args.w)
    elif args.gadget == 'pad':
        instance = pad_surjective(load_instance(args.input))
    else:
        instance = simulate_constants_with_leq(load_instance(args.input))
    out.write(format_instance(instance))
    return 0


def cmd_verify(args, out):
    instance = load_instance(args.input)
    solved = solve_surjective(instance, mode=args.mode)
    expected = oracle.brute_vcsp_surjective(instance)
    found = sorted(enumerate_optimal_surjective(instance, mode=args.mode))
    reference = oracle.brute_vcsp_surjective_all(instance)
    record = {
        'solver': solved.to_record(),
        'oracle': expected.to_record(),
        'value_match': (solved.status, solved.value) == (expected.status, expected.value),
        'enumeration_match': found == reference,
    }
    print(write_result(record), file=out)
    if not (record['value_match'] and record['enumeration_match']):
        raise VerifyMismatch("solver and brute force disagree on %s" % args.input)
    return 0


def cmd_bench(args, out):
    writer = csv.writer(out, lineterminator='\n')
    writer.writerow(['file', 'mode', 'seconds', 'value', 'candidates', 'max_delay'])
    for path in args.inputs:
        instance = load_instance(path)
        start = time.monotonic()
        result = solve_surjective(instance, mode=args.mode)
        seconds = time.monotonic() - start
        timer = DelayTimer(enumerate_optimal_surjective(instance, mode=args.mode), units='s',
                           digits=6)
        for _ in timer:
            pass
        writer.writerow([path, args.mode, '%.6f' % seconds, format_value(result.value),
                         result.candidates_examined, timer.format_timediff(timer.max_delay)])
    return 0


def apply_settings(args):
    if args.brute_limit is not None:
        settings['brute_force_limit'] = args.brute_limit


COMMANDS = {
    'classify': cmd_classify,
    'solve': cmd_solve,
    'enumerate': cmd_enumerate,
    'gmc': cmd_gmc,
    'fixup': cmd_fixup,
    'gadget': cmd_gadget,
    'verify': cmd_verify,
    'bench': cmd_bench,
}

__all__ = ['COMMANDS', 'apply_settings', 'read_text', 'load_instance']
