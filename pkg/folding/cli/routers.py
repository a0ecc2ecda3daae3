# folding/cli/routers.py

import argparse

from folding.cli.commands import classify, count, gen, oracle, verify
from folding.core.config import settings


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=settings.APP_NAME,
        description="Folding polynomials over finite fields and their value sets.",
    )
    parser.add_argument(
        "--version",
        action="version",
        version=f"{settings.APP_NAME} {settings.APP_VERSION}",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    gen.register(subparsers)
    count.register(subparsers)
    verify.register(subparsers)
    oracle.register(subparsers)
    classify.register(subparsers)
    return parser
