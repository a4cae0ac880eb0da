"""
Category O Engine Entry Point

Responsibilities:
- Build the argument parser
- Dispatch commands to the handlers in app.api.commands
- Wrap every command in the logging middleware and lifespan
- Map exceptions to exit codes

No mathematics lives here.

Negative weights must be attached to their option, e.g. --weight=-2,-2,-2,
otherwise argparse reads them as an option name.
"""

import argparse
import sys
from typing import Optional, TextIO

from pydantic import ValidationError

from app.api.commands import COMMANDS
from app.core.events import lifespan
from app.core.exceptions import AppException
from app.core.handlers import (
    handle_app_exception,
    handle_unexpected_exception,
    handle_validation_exception,
)
from app.core.logging import bind_run_fields, setup_logging
from app.core.settings import settings
from app.features.verify.schema import REGIME_NAMES, SUITE_NAMES
from app.middlewares.logging_middleware import CommandLoggingMiddleware
from app.utils.response import emit

# Setup logging
setup_logging()


def create_parser() -> argparse.ArgumentParser:
    """
    Create the command-line parser.

    Returns:
        argparse.ArgumentParser: Parser with one subcommand per handler
    """
    parser = argparse.ArgumentParser(
        description="Exact computations in category O of D(2|1;zeta)",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default=None, help="output format")
    common.add_argument("--zeta", default=None, help="'generic' or p/d")

    weighted = argparse.ArgumentParser(add_help=False, parents=[common])
    weighted.add_argument("--weight", help="rho-shifted label x,y,z (use --weight=-1,... for negatives)")

    subparsers.add_parser("classify", parents=[weighted], help="block, index and regime of a weight")

    flag = subparsers.add_parser("flag", parents=[weighted], help="Verma flag of a tilting or projective")
    flag.add_argument("--kind", choices=("tilting", "projective"), default="tilting")

    comp = subparsers.add_parser("comp", parents=[weighted], help="composition factors of a Verma module")
    comp.add_argument("--method", choices=("closed", "scan"), default="closed")

    char = subparsers.add_parser("char", parents=[weighted], help="truncated character")
    char.add_argument("--kind", choices=("verma", "simple"), default="verma")
    char.add_argument("--height", type=int, default=None)

    blocks = subparsers.add_parser("blocks", parents=[common], help="weights of an atypical block")
    blocks.add_argument("--k", type=int, default=0)
    blocks.add_argument("--range", type=int, default=None)

    subparsers.add_parser("table", parents=[common], help="dump the bracket table")

    verify = subparsers.add_parser("verify", parents=[common], help="run a verification suite")
    verify.add_argument("--suite", choices=SUITE_NAMES, required=True)
    verify.add_argument("--regime", choices=REGIME_NAMES, default="all")
    verify.add_argument("--k", type=int, default=None)
    verify.add_argument("--range", type=int, default=None)
    verify.add_argument("--max-n", dest="max_n", type=int, default=None)
    verify.add_argument("--height", type=int, default=None)
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--workers", type=int, default=None)

    return parser


def run(argv: Optional[list[str]] = None, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    """
    Parse argv, run the command and write its output.

    Returns:
        int: 0 success, 1 verification failures, 2 usage error, 3 computation error
    """
    out = out or sys.stdout
    err = err or sys.stderr

    try:
        args = create_parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2

    fmt = args.format or settings.output_format
    handler = COMMANDS[args.command]

    def call_next() -> int:
        bind_run_fields(zeta=args.zeta, suite=getattr(args, "suite", None))
        with lifespan(args.command):
            try:
                exit_code, payload, render_text = handler(args)
            except AppException as exc:
                exit_code, payload = handle_app_exception(exc)
            except ValidationError as exc:
                exit_code, payload = handle_validation_exception(exc)
            except Exception as exc:
                exit_code, payload = handle_unexpected_exception(exc)
            else:
                out.write(emit(fmt, payload, render_text))
                return exit_code
        err.write(emit("json", payload))
        return exit_code

    return CommandLoggingMiddleware().dispatch(args.command, call_next)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
