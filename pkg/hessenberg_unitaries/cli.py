"""
Command-line interface.

Results go to standard output, diagnostics to standard error.
Exit codes: 0 on success, 1 on analytic failure
(failed verification, non-unitary, non-Hessenberg or unmatched input),
2 on malformed input or invalid parameters.
"""
import argparse
import json
import logging
import sys
from fractions import Fraction
from typing import (Any,
                    Dict,
                    Iterable,
                    List,
                    Optional,
                    Sequence,
                    Union)

import numpy

from . import __version__
from .core.constants import (DEFAULT_TOLERANCE,
                             MAX_SEED,
                             Format,
                             Mode,
                             VerificationMode)
from .core.documents import (MatrixDocument,
                             parse_documents,
                             recovery_to_json,
                             render_documents,
                             report_to_json)
from .core.errors import (DocumentError,
                          NoMatch,
                          NotHessenberg,
                          NotUnitary,
                          ParameterError)
from .core.gram import (verify_exact_entries,
                        verify_float_entries)
from .core.matrices import (build,
                            to_vertices)
from .core.parameters import ParamVector
from .core.radical import Radical
from .core.recovery import recover
from .core.reports import VerifyReport
from .core.symbolic import verify_symbolic
from .core.synthesis import (synthesize_first_row,
                             synthesize_last_column)

LOG_FORMAT = '%(levelname)s %(name)s: %(message)s'

EXIT_SUCCESS, EXIT_FAILURE, EXIT_USAGE = 0, 1, 2

logger = logging.getLogger(__name__)


def cmd_enumerate(args: argparse.Namespace) -> int:
    mode = Mode(args.mode)
    _write_documents(
            (MatrixDocument.from_matrix(matrix,
                                        provenance={'command': 'enumerate',
                                                    'n': args.n,
                                                    'index': index})
             for index, matrix in enumerate(to_vertices(args.n, mode))),
            args.format)
    return EXIT_SUCCESS


def cmd_gen(args: argparse.Namespace) -> int:
    mode = Mode(args.mode)
    tokens = list(args.z)
    if args.z_file is not None:
        tokens.extend(_read(args.z_file).split())
    if len(tokens) != args.n - 1:
        raise ParameterError('Parameters count should be {expected}, '
                             'but found {count}.'
                             .format(expected=args.n - 1,
                                     count=len(tokens)))
    parameters = ParamVector([_parse_scalar(token, mode)
                              for token in tokens])
    matrix = build(parameters, mode)
    _write_documents([MatrixDocument.from_matrix(
            matrix,
            provenance={'command': 'gen',
                        'n': args.n,
                        'z': tokens,
                        'mode': mode.value})],
            args.format)
    return EXIT_SUCCESS


def cmd_recover(args: argparse.Namespace) -> int:
    documents = parse_documents(_read(args.input), _to_format(args.format))
    results = [recover(document.to_matrix(), args.tol)
               for document in documents]
    for result in results:
        if result.parameters.free:
            logger.info('Parameters %s do not affect the matrix.',
                        sorted(result.parameters.free))
    _write_jsons(recovery_to_json(result) for result in results)
    return EXIT_SUCCESS


def cmd_sample(args: argparse.Namespace) -> int:
    if args.count < 1:
        raise ParameterError('`count` should be positive, '
                             'but found {count}.'
                             .format(count=args.count))
    if args.n < 2:
        raise ParameterError('`n` should not be less than 2, '
                             'but found {size}.'
                             .format(size=args.n))
    generator = numpy.random.default_rng(args.seed)
    documents = []  # type: List[MatrixDocument]
    for index in range(args.count):
        parameters = ParamVector(generator.uniform(0., 1.,
                                                   args.n - 1).tolist())
        documents.append(MatrixDocument.from_matrix(
                build(parameters, Mode.FLOAT),
                provenance={'command': 'sample',
                            'n': args.n,
                            'seed': args.seed,
                            'dist': args.dist,
                            'index': index}))
    _write_documents(documents, args.format)
    return EXIT_SUCCESS


def cmd_synth(args: argparse.Namespace) -> int:
    mode = Mode(args.mode)
    is_first_row = args.first_row is not None
    tokens = args.first_row if is_first_row else args.last_column
    values = [_parse_entry(token, mode) for token in tokens]
    synthesize = (synthesize_first_row
                  if is_first_row
                  else synthesize_last_column)
    parameters = synthesize(values,
                            squared=args.squares,
                            tolerance=args.tol)
    if parameters.free:
        logger.info('Parameters %s do not affect the %s, set to 0.',
                    sorted(parameters.free),
                    'first row' if is_first_row else 'last column')
    _write_documents([MatrixDocument.from_matrix(
            build(parameters, mode),
            provenance={'command': 'synth',
                        'first_row' if is_first_row else 'last_column':
                            tokens,
                        'squares': args.squares,
                        'mode': mode.value})],
            args.format)
    return EXIT_SUCCESS


def cmd_verify(args: argparse.Namespace) -> int:
    mode = VerificationMode(args.mode)
    if mode is VerificationMode.SYMBOLIC:
        if args.n is None:
            raise ParameterError('Symbolic verification requires `--n`.')
        if args.n < 2:
            raise ParameterError('`n` should not be less than 2, '
                                 'but found {size}.'
                                 .format(size=args.n))
        reports = [verify_symbolic(args.n)]
    else:
        documents = parse_documents(_read(args.input),
                                    _to_format(args.format))
        reports = [_verify_document(document, mode, args.tol)
                   for document in documents]
    _write_jsons(report_to_json(report) for report in reports)
    failed = sum(not report.passed for report in reports)
    if failed:
        logger.warning('Verification failed for %d of %d matrices.',
                       failed, len(reports))
        return EXIT_FAILURE
    return EXIT_SUCCESS


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = to_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    try:
        return args.handler(args)
    except (NotUnitary, NotHessenberg, NoMatch) as error:
        logger.error('%s', error)
        return EXIT_FAILURE
    except OSError as error:
        logger.error('Input should be readable, but %s.', error)
        return EXIT_USAGE
    except ValueError as error:
        # malformed or infeasible input
        logger.error('%s', error)
        return EXIT_USAGE


def to_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--verbose', '-v',
                        action='store_true',
                        help='log debug messages to standard error')
    parser = argparse.ArgumentParser(
            prog='hessenberg-unitaries',
            description='Real Hessenberg unitary matrices '
                        'from their parameters and back.')
    parser.add_argument('--version',
                        action='version',
                        version=__version__)
    subparsers = parser.add_subparsers(dest='command',
                                       required=True)
    modes = [mode.value for mode in Mode]
    formats = [format_.value for format_ in Format]

    gen = subparsers.add_parser('gen',
                                help='construct matrix over parameters',
                                parents=[common])
    gen.add_argument('n',
                     type=int,
                     help='matrix dimension')
    gen.add_argument('z',
                     nargs='*',
                     help='parameters as "p/q" rationals or decimals')
    gen.add_argument('--z-file',
                     help='file with whitespace separated parameters')
    gen.add_argument('--mode',
                     choices=modes,
                     default=Mode.FLOAT.value)
    gen.add_argument('--format',
                     choices=formats,
                     default=Format.JSON.value)
    gen.set_defaults(handler=cmd_gen)

    verify = subparsers.add_parser('verify',
                                   help='check matrices unitarity',
                                   parents=[common])
    verify.add_argument('input',
                        nargs='?',
                        default='-',
                        help='matrices file, "-" for standard input')
    verify.add_argument('--mode',
                        choices=[mode.value for mode in VerificationMode],
                        default=VerificationMode.FLOAT.value)
    verify.add_argument('--tol',
                        type=_to_tolerance,
                        default=DEFAULT_TOLERANCE)
    verify.add_argument('--n',
                        type=int,
                        help='dimension for symbolic verification')
    verify.add_argument('--format',
                        choices=formats,
                        help='input format, detected if omitted')
    verify.set_defaults(handler=cmd_verify)

    recover_ = subparsers.add_parser('recover',
                                     help='recover parameters of matrices',
                                     parents=[common])
    recover_.add_argument('input',
                          nargs='?',
                          default='-',
                          help='matrices file, "-" for standard input')
    recover_.add_argument('--tol',
                          type=_to_tolerance,
                          default=DEFAULT_TOLERANCE)
    recover_.add_argument('--format',
                          choices=formats,
                          help='input format, detected if omitted')
    recover_.set_defaults(handler=cmd_recover)

    synth = subparsers.add_parser('synth',
                                  help='construct matrix with prescribed '
                                       'first row or last column',
                                  parents=[common])
    target = synth.add_mutually_exclusive_group(required=True)
    target.add_argument('--first-row',
                        nargs='+',
                        metavar='VALUE')
    target.add_argument('--last-column',
                        nargs='+',
                        metavar='VALUE')
    synth.add_argument('--squares',
                       action='store_true',
                       help='values are squares of the entries')
    synth.add_argument('--mode',
                       choices=modes,
                       default=Mode.FLOAT.value)
    synth.add_argument('--tol',
                       type=_to_tolerance,
                       default=DEFAULT_TOLERANCE)
    synth.add_argument('--format',
                       choices=formats,
                       default=Format.JSON.value)
    synth.set_defaults(handler=cmd_synth)

    enumerate_ = subparsers.add_parser('enumerate',
                                       help='list signed permutation '
                                            'matrices of the family',
                                       parents=[common])
    enumerate_.add_argument('n',
                            type=int,
                            help='matrix dimension')
    enumerate_.add_argument('--mode',
                            choices=modes,
                            default=Mode.EXACT.value)
    enumerate_.add_argument('--format',
                            choices=formats,
                            default=Format.JSON.value)
    enumerate_.set_defaults(handler=cmd_enumerate)

    sample = subparsers.add_parser('sample',
                                   help='construct matrices over '
                                        'random parameters',
                                   parents=[common])
    sample.add_argument('n',
                        type=int,
                        help='matrix dimension')
    sample.add_argument('--count',
                        type=int,
                        default=1)
    sample.add_argument('--seed',
                        type=_to_seed,
                        default=0)
    sample.add_argument('--dist',
                        choices=['uniform'],
                        default='uniform',
                        help='parameters distribution')
    sample.add_argument('--format',
                        choices=formats,
                        default=Format.JSON.value)
    sample.set_defaults(handler=cmd_sample)
    return parser


def _configure_logging(verbose: bool) -> None:
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT))
    package_logger = logging.getLogger(__package__)
    package_logger.handlers[:] = [handler]
    package_logger.setLevel(logging.DEBUG if verbose else logging.INFO)
    package_logger.propagate = False


def _parse_entry(token: str, mode: Mode) -> Union[Radical, Fraction, float]:
    if mode is Mode.EXACT and 'sqrt' in token:
        return Radical.from_string(token)
    return _parse_scalar(token, mode)


def _parse_scalar(token: str, mode: Mode) -> Union[Fraction, float]:
    try:
        value = Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParameterError('Value should be a "p/q" rational '
                             'or a decimal, but found {token!r}.'
                             .format(token=token)) from None
    return value if mode is Mode.EXACT else float(value)


def _read(path: str) -> str:
    if path == '-':
        return sys.stdin.read()
    with open(path) as file:
        return file.read()


def _to_format(raw: Optional[str]) -> Optional[Format]:
    return None if raw is None else Format(raw)


def _to_seed(raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError('seed should be an integer, '
                                         'but found {raw!r}'
                                         .format(raw=raw)) from None
    if not 0 <= value <= MAX_SEED:
        raise argparse.ArgumentTypeError('seed should be in range '
                                         '[0, {max_seed}], but found {value}'
                                         .format(max_seed=MAX_SEED,
                                                 value=value))
    return value


def _to_tolerance(raw: str) -> float:
    try:
        value = float(raw)
    except ValueError:
        raise argparse.ArgumentTypeError('tolerance should be a number, '
                                         'but found {raw!r}'
                                         .format(raw=raw)) from None
    if not value >= 0:
        raise argparse.ArgumentTypeError('tolerance should be nonnegative, '
                                         'but found {value}'
                                         .format(value=value))
    return value


def _verify_document(document: MatrixDocument,
                     mode: VerificationMode,
                     tolerance: float) -> VerifyReport:
    if mode is VerificationMode.FLOAT:
        return verify_float_entries(document.to_matrix().to_array(),
                                    tolerance)
    elif document.mode is Mode.EXACT:
        return verify_exact_entries(document.to_matrix().entries)
    raise DocumentError('Exact verification requires radical entries, '
                        'but found floating document.')


def _write_documents(documents: Iterable[MatrixDocument],
                     format_: str) -> None:
    sys.stdout.write(render_documents(documents, Format(format_)))


def _write_jsons(objects: Iterable[Dict[str, Any]]) -> None:
    for object_ in objects:
        sys.stdout.write(json.dumps(object_) + '\n')
