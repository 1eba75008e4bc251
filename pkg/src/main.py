import argparse
import dataclasses
import json
import sys

from config.run_config import DEFAULTS, SuiteParams, load_config
from errors import ConfigError
from kernel.functions import phi_gamma, phi_tilde
from product.syntax import format_word, parse_word
from product.words import normalize, reduced_length, set_debug_checks
from utils.ansiColors import Colors, paint
from utils.ass import R_ARROW, require_parent_directory
from utils.logger import log, logger_end, logger_start
from verifying.ball import ball_table, enumerate_ball
from verifying.report import (
    document_passed,
    dumps,
    format_summary,
    read_document,
    write_document,
)
from verifying.suite import run_checks, run_standard_suite

# exit codes
EXIT_OK = 0
EXIT_FAILED = 1  # some check failed
EXIT_USAGE = 2  # usage, config or word syntax error
EXIT_IO = 3


def print_error(error):
    text = str(error)
    if not text.startswith('Error'):
        text = f'Error: {text}'

    print(paint(text, Colors.ERROR), file=sys.stderr)


def _error_code(error):
    if isinstance(error, OSError):
        return EXIT_IO
    return EXIT_USAGE


def _require_config(config):
    if config is None:
        raise ConfigError(['no graph given, use --config PATH'])

    return config


def cmd_normalize(config, text, as_json=False):
    """Print the canonical normal form of a word and its reduced length"""
    try:
        graph = _require_config(config).graph

        g = normalize(graph, parse_word(graph, text))
        form = format_word(graph, g)

        if as_json:
            print(json.dumps({'word': text, 'normal_form': form, 'l_r': reduced_length(g)}))
        else:
            print(form)
            print(f'l_r = {reduced_length(g)}')

        return EXIT_OK

    except Exception as e:
        print_error(e)
        return _error_code(e)


def cmd_phi(config, text, as_json=False):
    """Print l_r, phi_tilde and phi_Gamma of a word"""
    try:
        graph = _require_config(config).graph

        g = normalize(graph, parse_word(graph, text))
        values = {
            'l_r': reduced_length(g),
            'phi_tilde': phi_tilde(graph, g),
            'phi_gamma': phi_gamma(graph, g),
        }

        if as_json:
            print(json.dumps({'word': format_word(graph, g), **values}))
        else:
            print(f'{format_word(graph, g)} {R_ARROW}')
            for name, value in values.items():
                print(f'  {name:<9} = {value:g}')

        return EXIT_OK

    except Exception as e:
        print_error(e)
        return _error_code(e)


def cmd_ball(config, radius=None, as_json=False):
    """Print the Cayley ball as a table of word length, l_r, phi_tilde, phi_Gamma"""
    try:
        config = _require_config(config)
        radius = config.suite.radius if radius is None else radius

        if radius < 0:
            raise ConfigError([f'radius must be >= 0, got {radius}'])

        ball = enumerate_ball(config.graph, radius, config.suite.cap)
        df = ball_table(ball)

        if as_json:
            print(
                json.dumps(
                    {
                        'radius': radius,
                        'truncated': ball.truncated,
                        'elements': df.to_dict(orient='records'),
                    },
                    indent=2,
                )
            )
            return EXIT_OK

        print(paint(config.graph.label(), Colors.HEADING))
        print(df.to_string(index=False))

        note = f'{len(ball)} elements within radius {radius}'
        if ball.truncated:
            note += paint(f' (truncated at cap {config.suite.cap})', Colors.WARNING)
        print(f'\n{note}')

        return EXIT_OK

    except Exception as e:
        print_error(e)
        return _error_code(e)


def cmd_verify(config, params, suite=None, out=None, as_json=False):
    """Run the certification checks and write the report

    Args:
        config (RunConfig): Graph to verify, may be None with suite='standard'
        params (SuiteParams): Suite parameters after CLI overrides
        suite (str): 'standard' to run the standard suite instead of the config graph
        out (str): Report path, None to skip writing
        as_json (bool): Print the JSON document instead of progress and summary

    Returns:
        int: EXIT_OK iff every check passed
    """
    try:
        if out:
            require_parent_directory(out)

        if suite == 'standard':
            document = run_standard_suite(params, quiet=as_json)
        else:
            graph = _require_config(config).graph
            document = run_checks(graph, params, quiet=as_json)

        if out:
            write_document(document, out)

        if as_json:
            print(dumps(document))
        else:
            log('\n' + format_summary(document) + '\n')
            if out:
                log(f'Report written to {out}\n')

        return EXIT_OK if document_passed(document) else EXIT_FAILED

    except Exception as e:
        print_error(e)
        return _error_code(e)


def cmd_report(path, as_json=False):
    """Reprint a saved report as a summary table"""
    try:
        document = read_document(path)

        if as_json:
            print(dumps(document))
        else:
            print(format_summary(document))

        return EXIT_OK if document_passed(document) else EXIT_FAILED

    except json.JSONDecodeError as e:
        print_error(f'Malformed report {path}: {e}')
        return EXIT_USAGE
    except (KeyError, TypeError) as e:
        print_error(f'Not a report document {path}: missing {e}')
        return EXIT_USAGE
    except Exception as e:
        print_error(e)
        return _error_code(e)


def defaults_epilog():
    lines = ['defaults:']
    for key, value in DEFAULTS.items():
        if isinstance(value, tuple):
            value = list(value)
        lines.append(f'  {key:<8} {value}')

    return '\n'.join(lines)


def build_parser():
    parser = argparse.ArgumentParser(
        description='Graph products of groups: normal forms, glued CND functions '
        'and numerical certification',
        epilog=defaults_epilog(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument('--config', help='JSON config file (graph and suite parameters)')
    parser.add_argument('--seed', type=int, help='PRNG seed, overrides the config')
    parser.add_argument('--out', help='report path, overrides the config')
    parser.add_argument('--json', action='store_true', help='machine-readable output')
    parser.add_argument('--log-dir', help='also write progress to a log file here')
    parser.add_argument('--debug', action='store_true', help='enable internal consistency checks')  # fmt: skip

    subparsers = parser.add_subparsers(dest='command', help='available commands')

    # normalize command
    normalize_parser = subparsers.add_parser('normalize', help='canonical normal form of a word')  # fmt: skip
    normalize_parser.add_argument('word', help="word text, e.g. 'v0:1; v1:x1^-1'")

    # phi command
    phi_parser = subparsers.add_parser('phi', help='l_r, phi_tilde and phi_Gamma of a word')  # fmt: skip
    phi_parser.add_argument('word', help="word text, e.g. 'v0:5'")

    # ball command
    ball_parser = subparsers.add_parser('ball', help='list the Cayley ball')
    ball_parser.add_argument('--radius', type=int, help='ball radius, overrides the config')  # fmt: skip

    # verify command
    verify_parser = subparsers.add_parser('verify', help='run the certification checks')
    verify_parser.add_argument('--suite', choices=['standard'], help='run the standard suite')  # fmt: skip

    # report command
    report_parser = subparsers.add_parser('report', help='reprint a saved report')
    report_parser.add_argument('path', help='report JSON file')

    return parser


def main(argv=None):
    """Main function for command line interface

    Returns:
        int: Exit code
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command is None:
        parser.print_help()
        return EXIT_USAGE

    if args.debug:
        set_debug_checks(True)

    config = None
    if args.config:
        try:
            config = load_config(args.config)
        except Exception as e:
            print_error(e)
            return _error_code(e)

    if args.log_dir:
        logger_start(args.command, log_dir=args.log_dir)

    try:
        if args.command == 'normalize':
            return cmd_normalize(config, args.word, args.json)
        elif args.command == 'phi':
            return cmd_phi(config, args.word, args.json)
        elif args.command == 'ball':
            return cmd_ball(config, args.radius, args.json)
        elif args.command == 'verify':
            params = config.suite if config else SuiteParams()
            if args.seed is not None:
                if args.seed < 0:
                    print_error(f'--seed must be >= 0, got {args.seed}')
                    return EXIT_USAGE
                params = dataclasses.replace(params, seed=args.seed)

            out = args.out or (config.output if config else None)

            return cmd_verify(config, params, args.suite, out, args.json)
        elif args.command == 'report':
            return cmd_report(args.path, args.json)

    finally:
        if args.debug:
            set_debug_checks(False)
        if args.log_dir:
            logger_end()


if __name__ == '__main__':
    sys.exit(main())
