"""Command-line front end

Exit codes: 0 success, 1 a check failed, 2 bad input.
"""

import argparse
import json
import random
import sys
from typing import Any, Dict, List, Optional, Sequence, TextIO

from .core.continuants import METHODS, ContinuantSpec, Family, supercontinuant, term_counts
from .core.expression import coerce_scalars
from .core.frieze import (
    Superfrieze, check_report, frieze_from_first_rows, laurent_expand,
    random_closed_frieze, render,
)
from .core.grassmann import SuperScalar
from .core.hill import (
    FifthHalfOperator, HillCoefficients, HillSystem, SuperSequencePair,
    apply_sturm_liouville, apply_sturm_liouville_operator_form,
    check_hill_condition, monodromy, sturm_liouville_residual_5_2,
    supervariety_equations,
)
from .core.supermatrix import SuperMatrix
from .core.variety import PUBLISHED, published_equations, verify_published
from .utils.config import config
from .utils.errors import SuperFriezeError
from .utils.logger import logger, setup_logger

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


class InputError(Exception):
    """Missing or inconsistent command-line input"""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help='machine-readable JSON output')
    common.add_argument('--pretty', action='store_true',
                        help='indented JSON, or SymPy pretty printing of scalars')
    common.add_argument('--seed', type=int, default=None, help='seed for randomized subcommands')
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog='superfrieze',
                     description='Exact algebra of superfriezes, supersymmetric Hill equations '
                                 'and supercontinuants')
    parser.add_argument('--config', default=None, help='YAML configuration file')
    parser.add_argument('--log-level', default=None, help='DEBUG, INFO, WARNING or ERROR')
    sub = parser.add_subparsers(dest='command', metavar='command', parser_class=_Parser)
    sub.required = True

    p = sub.add_parser('frieze-gen', parents=[common], help='build a superfrieze')
    p.add_argument('--input', help='JSON file with a/beta (first rows) or v/w (a diagonal)')
    p.add_argument('--a', help='even first row, comma separated')
    p.add_argument('--beta', help='odd first row, comma separated')
    p.add_argument('--m', type=int, default=None, help='width (default: len(a) - 3)')
    p.add_argument('--start', type=int, default=None, help='index of the first entry')
    p.add_argument('--random-width', type=int, default=None,
                   help='random closed frieze of this width (uses --seed)')

    p = sub.add_parser('frieze-check', parents=[common], help='run every frieze check')
    p.add_argument('--input', help='frieze dump or first-rows JSON file')
    p.add_argument('--a', help='even first row, comma separated')
    p.add_argument('--beta', help='odd first row, comma separated')
    p.add_argument('--start', type=int, default=None)

    p = sub.add_parser('hill-monodromy', parents=[common], help='monodromy and the Hill condition')
    p.add_argument('--input', help='JSON file with a and beta')
    p.add_argument('--a', help='even coefficients, comma separated')
    p.add_argument('--beta', help='odd coefficients, comma separated')
    p.add_argument('--start', type=int, default=1)
    p.add_argument('--base', type=int, default=None, help='index i of M_i')

    p = sub.add_parser('hill-variety', parents=[common], help='equations of the Hill supervariety')
    p.add_argument('n', type=int)
    p.add_argument('--samples', type=int, default=None, help='random points per check')

    p = sub.add_parser('continuant', parents=[common], help='a supercontinuant')
    p.add_argument('family', choices=[f.value for f in Family])
    p.add_argument('n', type=int)
    p.add_argument('--method', choices=METHODS, default='recurrence')
    p.add_argument('--a', help='even entries (default: free symbols a1..an)')
    p.add_argument('--beta', help='odd entries (default: free symbols b1..bn)')

    p = sub.add_parser('counts', parents=[common], help='term counts of a supercontinuant family')
    p.add_argument('family', choices=[f.value for f in Family])
    p.add_argument('max_n', type=int)

    p = sub.add_parser('sl-apply', parents=[common], help='apply a Sturm-Liouville operator')
    p.add_argument('--order', choices=('3/2', '5/2'), default='3/2')
    p.add_argument('--input', help='JSON file with coefficients and the sequence')
    p.add_argument('--a', help='coefficients a_i')
    p.add_argument('--beta', help='coefficients beta_i')
    p.add_argument('--a-prime', dest='a_prime', help="coefficients a'_i (order 5/2)")
    p.add_argument('--beta-prime', dest='beta_prime', help="coefficients beta'_i (order 5/2)")
    p.add_argument('--start', type=int, default=1, help='index of the first coefficient')
    p.add_argument('--v', help='even part of the sequence')
    p.add_argument('--w', help='odd part of the sequence')
    p.add_argument('--lo', type=int, default=0, help='index of the first sequence entry')
    p.add_argument('--form', choices=('recurrence', 'operator'), default='recurrence',
                   help='order 3/2 only: recurrence or T^3 + U T^2 + Pi')
    return parser


class Output:
    """Writes JSON or text to the output stream"""

    def __init__(self, args: argparse.Namespace, out: TextIO):
        self.json = args.json
        self.pretty = args.pretty
        self.out = out

    def scalar(self, value: SuperScalar) -> str:
        if self.pretty:
            import sympy
            return sympy.pretty(value.to_sympy(), use_unicode=False)
        return str(value)

    def emit_json(self, payload: Any) -> None:
        indent = config.get('cli.indent', 2) if self.pretty else None
        self.out.write(json.dumps(payload, indent=indent, sort_keys=True) + '\n')

    def emit_text(self, text: str) -> None:
        self.out.write(text.rstrip('\n') + '\n')

    def matrix_text(self, M: SuperMatrix) -> str:
        return '\n'.join('[ ' + ' | '.join(self.scalar(M[r, c]) for c in range(M.cols)) + ' ]'
                         for r in range(M.rows))


def _load_json(path: str) -> Dict[str, Any]:
    with open(path, 'r', encoding='utf-8') as f:
        data = json.load(f)
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a JSON object")
    return data


def _pair(args: argparse.Namespace, data: Optional[Dict[str, Any]],
          first: str = 'a', second: str = 'beta'):
    if data is not None and first in data and second in data:
        return coerce_scalars(data[first]), coerce_scalars(data[second])
    inline_first, inline_second = getattr(args, first, None), getattr(args, second, None)
    if inline_first is None or inline_second is None:
        raise InputError(f"--{first} and --{second} (or --input) are required")
    return coerce_scalars(inline_first), coerce_scalars(inline_second)


def _sequence_json(s: SuperSequencePair) -> Dict[str, Any]:
    return {'lo': s.lo, 'hi': s.hi,
            'v': [str(x) for x in s.v], 'w': [str(x) for x in s.w],
            'sequence': s.to_dict()}


def cmd_frieze_gen(args: argparse.Namespace, output: Output) -> int:
    if args.random_width is not None:
        seed = config.get('random.seed', 2024) if args.seed is None else args.seed
        F = random_closed_frieze(args.random_width, random.Random(seed), start=args.start)
    else:
        data = _load_json(args.input) if args.input else None
        if data is not None and 'v' in data and 'w' in data:
            F = laurent_expand(coerce_scalars(data['v']), coerce_scalars(data['w']),
                               data.get('start', args.start))
        else:
            a, beta = _pair(args, data)
            m = args.m if args.m is not None else (data or {}).get('m', len(a) - 3)
            start = args.start if args.start is not None else (data or {}).get('start')
            F = frieze_from_first_rows(a, beta, int(m), start)
    logger.info(f"Generated width-{F.m} frieze on diagonals {F.diagonals}")
    text = render(F)
    if output.json:
        output.emit_json({'frieze': F.to_dict(), 'text': text})
    else:
        output.emit_text(text)
    return EXIT_OK


def _frieze_for_check(args: argparse.Namespace) -> Superfrieze:
    data = _load_json(args.input) if args.input else None
    if data is not None and 'entries' in data:
        return Superfrieze.from_dict(data)
    a, beta = _pair(args, data)
    start = args.start if args.start is not None else (data or {}).get('start')
    return frieze_from_first_rows(a, beta, len(a) - 3, start)


def cmd_frieze_check(args: argparse.Namespace, output: Output) -> int:
    F = _frieze_for_check(args)
    report = check_report(F)
    if output.json:
        output.emit_json(report)
    else:
        lines = []
        for name, entry in report.items():
            if name == 'all_pass':
                continue
            if entry['pass']:
                lines.append(f"{name}: pass")
            elif entry.get('error'):
                lines.append(f"{name}: fail ({entry['error']})")
            else:
                where = entry['counterexample']
                lines.append(f"{name}: fail at i2={where['i2']} j2={where['j2']}")
        lines.append('all checks pass' if report['all_pass'] else 'some checks fail')
        output.emit_text('\n'.join(lines))
    return EXIT_OK if report['all_pass'] else EXIT_CHECK_FAILED


def cmd_hill_monodromy(args: argparse.Namespace, output: Output) -> int:
    data = _load_json(args.input) if args.input else None
    a, beta = _pair(args, data)
    start = int((data or {}).get('start', args.start))
    system = HillSystem(HillCoefficients(tuple(a), tuple(beta), start), args.base)
    M = monodromy(system)
    hill = check_hill_condition(M)
    if output.json:
        output.emit_json({
            'base': system.monodromy_base,
            'monodromy': M.to_dict(),
            'text': [[str(M[r, c]) for c in range(M.cols)] for r in range(M.rows)],
            'hill_condition': hill,
        })
    else:
        output.emit_text(f"{output.matrix_text(M)}\nhill condition: {'true' if hill else 'false'}")
    return EXIT_OK if hill else EXIT_CHECK_FAILED


def cmd_hill_variety(args: argparse.Namespace, output: Output) -> int:
    equations = supervariety_equations(args.n)
    payload: Dict[str, Any] = {'n': args.n, 'equations': [str(eq) for eq in equations],
                               'published': None, 'verified': None}
    if args.n in PUBLISHED:
        check = verify_published(args.n, args.seed, args.samples)
        payload['published'] = [str(eq) for eq in published_equations(args.n)]
        payload['verified'] = check['verified']
    if output.json:
        output.emit_json(payload)
    else:
        lines = [f"{output.scalar(eq)} = 0" for eq in equations]
        if payload['published'] is not None:
            lines.append('published form:')
            lines.extend(f"{eq} = 0" for eq in payload['published'])
            lines.append(f"verified by substitution: {'true' if payload['verified'] else 'false'}")
        output.emit_text('\n'.join(lines))
    if payload['verified'] is False:
        return EXIT_CHECK_FAILED
    return EXIT_OK


def cmd_continuant(args: argparse.Namespace, output: Output) -> int:
    if args.a is None and args.beta is None:
        spec = ContinuantSpec.symbolic(args.family, args.n)
    else:
        a, beta = _pair(args, None)
        spec = ContinuantSpec(Family.parse(args.family), args.n, tuple(a), tuple(beta))
    value = supercontinuant(spec, args.method)
    if output.json:
        output.emit_json({'family': spec.family.value, 'n': spec.n, 'method': args.method,
                          'value': value.to_dict(), 'text': str(value), 'terms': len(value)})
    else:
        output.emit_text(output.scalar(value))
    return EXIT_OK


def cmd_counts(args: argparse.Namespace, output: Output) -> int:
    limit = config.get('continuants.max_n', 11)
    if args.max_n < 1 or args.max_n > limit:
        raise InputError(f"max_n must be between 1 and {limit}")
    counts = term_counts(args.family, args.max_n)
    if output.json:
        output.emit_json(counts)
    else:
        output.emit_text(' '.join(str(c) for c in counts))
    return EXIT_OK


def cmd_sl_apply(args: argparse.Namespace, output: Output) -> int:
    data = _load_json(args.input) if args.input else None
    v, w = _pair(args, data, 'v', 'w')
    lo = int((data or {}).get('lo', args.lo))
    start = int((data or {}).get('start', args.start))
    s = SuperSequencePair(lo, tuple(v), tuple(w))
    a, beta = _pair(args, data)
    if args.order == '3/2':
        coeffs = HillCoefficients(tuple(a), tuple(beta), start)
        if args.form == 'operator':
            result = apply_sturm_liouville_operator_form(coeffs, s)
        else:
            result = apply_sturm_liouville(coeffs, s)
    else:
        a_prime, beta_prime = _pair(args, data, 'a_prime', 'beta_prime')
        op = FifthHalfOperator(tuple(a), tuple(a_prime), tuple(beta), tuple(beta_prime), start)
        result = sturm_liouville_residual_5_2(op, s)
    if output.json:
        payload = _sequence_json(result)
        payload['order'] = args.order
        output.emit_json(payload)
    else:
        lines = [f"{i}: {output.scalar(result.v_at(i))} | {output.scalar(result.w_at(i))}"
                 for i in result.support]
        output.emit_text('\n'.join(lines))
    return EXIT_OK


COMMANDS = {
    'frieze-gen': cmd_frieze_gen,
    'frieze-check': cmd_frieze_check,
    'hill-monodromy': cmd_hill_monodromy,
    'hill-variety': cmd_hill_variety,
    'continuant': cmd_continuant,
    'counts': cmd_counts,
    'sl-apply': cmd_sl_apply,
}


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None,
        err: Optional[TextIO] = None) -> int:
    """Parse argv, run one subcommand and return the exit code"""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = build_parser().parse_args(argv)
    except InputError as e:
        err.write(f"superfrieze: {e}\n")
        return EXIT_INPUT_ERROR
    except SystemExit as e:
        # --help
        return EXIT_OK if not e.code else EXIT_INPUT_ERROR

    if args.config:
        config.load_from_file(args.config)
    setup_logger('superfrieze', args.log_level or config.get('cli.log_level', 'WARNING'),
                 config.get('logging.file'))

    try:
        return COMMANDS[args.command](args, Output(args, out))
    except (SuperFriezeError, InputError, OSError, ValueError, KeyError, TypeError) as e:
        # json.JSONDecodeError is a ValueError
        err.write(f"superfrieze: {e}\n")
        return EXIT_INPUT_ERROR


def main() -> None:
    """Console entry point"""
    sys.exit(run())


if __name__ == '__main__':
    main()
