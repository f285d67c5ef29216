"""
Command line interface

 hyperfib bound --chi 5 --k2 8 [--cases]
 hyperfib check --k 12 --l 12 --n6 7 --t 0
 hyperfib enumerate --g 5 --delta -7 [--mode all]
 hyperfib table --g-range 5..10 --delta-range -16..-7 --compare-reference
 hyperfib convert --degree 22 --mult 0

Exit codes: 0 ok, 1 input error, 2 reference mismatch.
Every subcommand takes --format text|json|csv.

"""

import argparse
import csv
import io
import logging
import math
import re
import sys
from typing import List, Optional, Sequence, TextIO, Tuple

from pydantic import ValidationError

from hyperfib import HyperFib
from hyperfib.arithmetic.models import SqrtForm
from hyperfib.bounds.responses import BoundResponse, CaseBoundInfo
from hyperfib.enumerator.models import DEFAULT_N4_MAX, DEFAULT_T_MAX, CellResult, SearchMode
from hyperfib.enumerator.responses import (ComparisonInfo, DifferenceInfo, EnumerateResponse, QueryInfo, TableResponse,
                                           TableRow, WitnessInfo)
from hyperfib.errors import HyperFibBaseError, InvalidArgumentError
from hyperfib.invariants.responses import CheckResponse, ConvertResponse

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_REFERENCE_MISMATCH = 2

FORMATS = ['text', 'json', 'csv']

# argparse reads '-16..-7' as an option flag unless it is attached with '='
_NEGATIVE_RANGE = re.compile(r'^-\d+\.\.-?\d+$')
_RANGE = re.compile(r'^(-?\d+)\.\.(-?\d+)$')


class ArgumentParser(argparse.ArgumentParser):
    """ usage errors are input errors: exit 1, not argparse's 2 """

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT_ERROR, f'{self.prog}: error: {message}\n')


def parse_range(value: str) -> Tuple[int, int]:
    match = _RANGE.match(value.strip())
    if match is None:
        raise argparse.ArgumentTypeError(f'expected a range like 5..10, got {value!r}')
    low, high = int(match.group(1)), int(match.group(2))
    if low > high:
        raise argparse.ArgumentTypeError(f'empty range {value!r}')
    return low, high


def parse_rlist(value: str) -> List[int]:
    try:
        return [int(part) for part in value.split(',') if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected comma separated integers, got {value!r}')


def _join_negative_ranges(argv: Sequence[str]) -> List[str]:
    joined: List[str] = []
    index = 0
    while index < len(argv):
        token = argv[index]
        if (token.startswith('--') and '=' not in token and index + 1 < len(argv)
                and _NEGATIVE_RANGE.match(argv[index + 1])):
            joined.append(f'{token}={argv[index + 1]}')
            index += 2
            continue
        joined.append(token)
        index += 1
    return joined


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(prog='hyperfib',
                            description='Exact genus bounds and chi tables for hyperelliptic fibrations.')
    common = ArgumentParser(add_help=False)
    common.add_argument('--format', choices=FORMATS, default='text')
    common.add_argument('--verbose', action='store_true', help='log progress to stderr')
    common.add_argument('--debug', action='store_true', help='log search details to stderr')

    commands = parser.add_subparsers(dest='command', required=True, parser_class=ArgumentParser)

    bound = commands.add_parser('bound', parents=[common], help='genus bound of a hyperelliptic pencil')
    bound.add_argument('--chi', type=int, required=True)
    bound.add_argument('--k2', type=int, required=True)
    bound.add_argument('--cases', action='store_true', help='list the bound of every case on k')

    check = commands.add_parser('check', parents=[common], help='invariant report of a branch datum')
    check.add_argument('--k', type=int, required=True)
    check.add_argument('--l', type=int, required=True)
    check.add_argument('--t', type=int, default=0)
    check.add_argument('--e', type=int, default=None)
    check.add_argument('--n4', type=int, default=0)
    check.add_argument('--n6', type=int, default=0)
    check.add_argument('--n8', type=int, default=0)
    check.add_argument('--rlist', type=parse_rlist, default=None, help='comma separated r_i, instead of counts')

    search = ArgumentParser(add_help=False)
    search.add_argument('--t-max', type=int, default=DEFAULT_T_MAX)
    search.add_argument('--n4-max', type=int, default=DEFAULT_N4_MAX)

    enumerate_ = commands.add_parser('enumerate', parents=[common, search], help='one cell of the chi table')
    enumerate_.add_argument('--g', type=int, required=True)
    enumerate_.add_argument('--delta', type=int, required=True)
    enumerate_.add_argument('--mode', choices=[mode.value for mode in SearchMode], default=SearchMode.max.value)

    table = commands.add_parser('table', parents=[common, search], help='maximal chi table')
    table.add_argument('--g-range', type=parse_range, default=(5, 10))
    table.add_argument('--delta-range', type=parse_range, default=(-16, -7))
    table.add_argument('--compare-reference', action='store_true')
    table.add_argument('--reference', default=None, help='alternative reference CSV')
    table.add_argument('--workers', type=int, default=1)

    convert = commands.add_parser('convert', parents=[common], help='plane branch curve to F_1')
    convert.add_argument('--degree', type=int, required=True)
    convert.add_argument('--mult', type=int, required=True)

    return parser


def _csv(header: Sequence, rows: Sequence[Sequence]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue().rstrip('\n')


def _cell(value: Optional[int]) -> str:
    return '' if value is None else str(value)


def approximate(form: SqrtForm) -> str:
    """ display-only decimal of p + sqrt(q) """
    return f'{float(form.p) + math.sqrt(form.q or 0):.2f}'


def cmd_bound(hyperfib: HyperFib, args: argparse.Namespace, out: TextIO) -> int:
    g = hyperfib.genus_bound(args.chi, args.k2)
    response = BoundResponse(chi=args.chi, k2=args.k2, genus_bound=g)

    if args.cases:
        report = hyperfib.k_bounds(args.chi, args.k2)
        cases = []
        for case in report.cases:
            cases.append(CaseBoundInfo(label=case.label, bound_p=str(case.bound.p), bound_q=case.bound.q,
                                       assumed_t=case.assumed_t, approx=approximate(case.bound)))
        response = response.model_copy(update={'cases': cases, 'max_label': report.max_label,
                                               'max_even_k': report.max_even_k, 'genus_cap': report.genus_cap})

    if args.format == 'json':
        print(response.model_dump_json(), file=out)
    elif args.format == 'csv':
        if response.cases is None:
            print(_csv(['chi', 'k2', 'genus_bound'], [[args.chi, args.k2, g]]), file=out)
        else:
            print(_csv(['label', 'bound_p', 'bound_q', 'assumed_t', 'approx'],
                       [[case.label, case.bound_p, _cell(case.bound_q), case.assumed_t, case.approx]
                        for case in response.cases]),
                  file=out)
    else:
        print(f'g <= {g}', file=out)
        for case in response.cases or []:
            symbolic = case.bound_p if case.bound_q is None else f'{case.bound_p}+sqrt({case.bound_q})'
            print(f'{case.label}: k <= {symbolic} ~ {case.approx} (t >= {case.assumed_t})', file=out)
        if response.cases is not None:
            print(f'max case {response.max_label}: k <= {response.max_even_k}, g <= {response.genus_cap}', file=out)
    return EXIT_OK


def cmd_check(hyperfib: HyperFib, args: argparse.Namespace, out: TextIO) -> int:
    config = hyperfib.branch_config(k=args.k, l=args.l, t=args.t, r_list=args.rlist, n4=args.n4, n6=args.n6,
                                    n8=args.n8, e=args.e)
    report: CheckResponse = hyperfib.check(config)

    if args.format == 'json':
        print(report.model_dump_json(), file=out)
        return EXIT_OK

    violated = report.thm2.conditions_violated
    conditions = 'n/a' if violated is None else ('OK' if not violated else ' '.join(violated))

    if args.format == 'csv':
        print(_csv(['k', 'l', 'e', 't', 'r_list', 'chi', 'k2_canres', 'k2_min', 'genus', 'delta', 'G', 'H',
                    'identity_ok', 'residual', 'conditions', 'feasible_e'],
                   [[report.config.k, report.config.l, _cell(report.config.e), report.config.t,
                     ' '.join(str(r) for r in report.config.r_list), report.invariants.chi,
                     report.invariants.k2_canres, report.invariants.k2_min, report.invariants.genus,
                     report.invariants.delta, report.rito.G, report.rito.H, report.rito.identity_ok,
                     _cell(report.thm2.residual), conditions, ' '.join(str(e) for e in report.feasible_e)]]),
              file=out)
        return EXIT_OK

    r_list = ','.join(str(r) for r in report.config.r_list) or '-'
    e = '-' if report.config.e is None else report.config.e
    lines = [
        f'config: k={report.config.k} l={report.config.l} e={e} t={report.config.t} r=[{r_list}]',
        f'chi={report.invariants.chi}',
        f'k2_canres={report.invariants.k2_canres}',
        f'k2={report.invariants.k2_min}',
        f'delta={report.invariants.delta}',
        f'g={report.invariants.genus}',
        f'G={report.rito.G} H={report.rito.H}',
        f'rito identities {"PASS" if report.rito.identity_ok else "FAIL"}',
        f'thm2 b) residual {"n/a" if report.thm2.residual is None else report.thm2.residual}',
        f'conditions {conditions}',
        f'feasible_e={",".join(str(value) for value in report.feasible_e) or "-"}',
    ]
    print('\n'.join(lines), file=out)
    return EXIT_OK


def _tuple(witness: WitnessInfo) -> str:
    return f'(l={witness.l},t={witness.t},N4={witness.n4},N6={witness.n6},N8={witness.n8})'


def enumerate_response(result: CellResult) -> EnumerateResponse:
    return EnumerateResponse(
        query=QueryInfo(g=result.query.g, delta=result.query.delta, mode=result.query.mode),
        max_chi=result.max_chi,
        witnesses=[WitnessInfo(k=c.k, l=c.l, t=c.t, n4=c.n4, n6=c.n6, n8=c.n8, chi=c.chi, k2_min=c.k2_min,
                               feasible_e=c.feasible_e) for c in result.witnesses])


def cmd_enumerate(hyperfib: HyperFib, args: argparse.Namespace, out: TextIO) -> int:
    hyperfib.t_max, hyperfib.n4_max = args.t_max, args.n4_max
    response = enumerate_response(hyperfib.enumerate(args.g, args.delta, args.mode))

    if args.format == 'json':
        print(response.model_dump_json(), file=out)
    elif args.format == 'csv':
        print(_csv(['k', 'l', 't', 'n4', 'n6', 'n8', 'chi', 'k2_min', 'feasible_e'],
                   [[w.k, w.l, w.t, w.n4, w.n6, w.n8, w.chi, w.k2_min, ' '.join(str(e) for e in w.feasible_e)]
                    for w in response.witnesses]), file=out)
    elif response.max_chi is None:
        print('EMPTY', file=out)
    elif args.mode == SearchMode.max.value:
        print('; '.join([f'max chi = {response.max_chi}'] + [_tuple(w) for w in response.witnesses]), file=out)
    else:
        print(f'max chi = {response.max_chi}', file=out)
        for witness in response.witnesses:
            print(f'{_tuple(witness)} chi={witness.chi} K^2={witness.k2_min}', file=out)
    return EXIT_OK


def _render_table(response: TableResponse, fmt: str) -> str:
    if fmt == 'json':
        return response.model_dump_json()

    if fmt == 'csv':
        return _csv(['g'] + response.delta_values, [[row.g] + [_cell(v) for v in row.values] for row in response.rows])

    header = 'g\\delta' + ''.join(f'{delta:>5}' for delta in response.delta_values)
    lines = [header]
    for row in response.rows:
        lines.append(f'{row.g:<7}' + ''.join(f'{_cell(value):>5}' for value in row.values))
    return '\n'.join(line.rstrip() for line in lines)


def cmd_table(hyperfib: HyperFib, args: argparse.Namespace, out: TextIO) -> int:
    if args.workers < 1:
        raise InvalidArgumentError(message=f'--workers must be at least 1, got {args.workers}')
    hyperfib.t_max, hyperfib.n4_max, hyperfib.workers = args.t_max, args.n4_max, args.workers

    table = hyperfib.table(args.g_range, args.delta_range)
    response = TableResponse(g_values=table.g_values, delta_values=table.delta_values,
                             rows=[TableRow(g=g, values=table.row(g)) for g in table.g_values])

    if not args.compare_reference:
        print(_render_table(response, args.format), file=out)
        return EXIT_OK

    reference = hyperfib.reference(args.reference)
    comparison = hyperfib.compare(table, reference)
    response = response.model_copy(update={'comparison': ComparisonInfo(
        source=reference.source, compared=comparison.compared,
        differences=[DifferenceInfo(**difference.model_dump()) for difference in comparison.differences])})

    if args.format == 'json':
        print(_render_table(response, 'json'), file=out)
    else:
        if args.format == 'csv':
            print(_render_table(response, 'csv'), file=out)
        print(f'{comparison.compared} cells, {len(comparison.differences)} differences', file=out)
        for difference in comparison.differences:
            print(f'cell g={difference.g} delta={difference.delta}: computed {_cell(difference.computed) or "EMPTY"}, '
                  f'reference {_cell(difference.reference) or "EMPTY"}', file=out)

    return EXIT_OK if comparison.ok else EXIT_REFERENCE_MISMATCH


def cmd_convert(hyperfib: HyperFib, args: argparse.Namespace, out: TextIO) -> int:
    ruled = hyperfib.convert(args.degree, args.mult)
    response = ConvertResponse(degree=args.degree, mult=args.mult, k=ruled.k, l=ruled.l, e=ruled.e,
                               genus=ruled.genus)

    if args.format == 'json':
        print(response.model_dump_json(), file=out)
    elif args.format == 'csv':
        print(_csv(['degree', 'mult', 'k', 'l', 'e', 'genus'],
                   [[response.degree, response.mult, response.k, response.l, response.e, response.genus]]), file=out)
    else:
        print(f'k={response.k}, l={response.l}, e={response.e}, g={response.genus}', file=out)
    return EXIT_OK


COMMANDS = {
    'bound': cmd_bound,
    'check': cmd_check,
    'enumerate': cmd_enumerate,
    'table': cmd_table,
    'convert': cmd_convert,
}


def main(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)

    try:
        args = build_parser().parse_args(_join_negative_ranges(argv))
    except SystemExit as exit_:
        return int(exit_.code or 0)

    if args.debug:
        log_level, log_stream = logging.DEBUG, True
    elif args.verbose:
        log_level, log_stream = logging.INFO, True
    else:
        log_level, log_stream = logging.CRITICAL, False

    hyperfib = HyperFib(log_level=log_level, log_stream=log_stream)

    try:
        return COMMANDS[args.command](hyperfib, args, out)
    except HyperFibBaseError as error:
        print(f'error: {error.message}', file=err)
        return EXIT_INPUT_ERROR
    except ValidationError as error:
        print(f'error: {error}', file=err)
        return EXIT_INPUT_ERROR
