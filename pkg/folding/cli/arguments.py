# folding/cli/arguments.py

import argparse
from pathlib import Path
from typing import Optional, TextIO

from sympy import isprime

from folding.core.utils.exceptions import InvalidArgument, NotPrime
from folding.core.utils.helpers import require_positive
from folding.modules.shared.enums import AlgebraId, Method, OutputFormat

TEXT = "text"


def parse_algebras(text: str) -> list[AlgebraId]:
    """Comma-separated algebra names, or "all"."""
    if text.strip().lower() == "all":
        return list(AlgebraId)
    return [AlgebraId.parse(part) for part in text.split(",") if part.strip()]


def parse_methods(text: Optional[str]) -> list[Method]:
    """Comma-separated method names, or "all" (the default)."""
    if text is None or text.strip().lower() == "all":
        return list(Method)
    methods = []
    for part in text.split(","):
        try:
            methods.append(Method(part.strip().lower()))
        except ValueError:
            choices = ", ".join(m.value for m in Method)
            raise InvalidArgument(
                detail=f"Unknown method '{part}'. Choose from: {choices}, all."
            )
    if not methods:
        raise InvalidArgument(detail="At least one method is required.")
    return methods


def field_order(p: int, n: int) -> int:
    """q = p^n after checking p and n."""
    if n < 1:
        raise InvalidArgument(detail=f"Extension degree must be positive, got {n}.")
    if not isprime(p):
        raise NotPrime(detail=f"p={p} is not a prime.")
    return p**n


def add_format_arguments(
    parser: argparse.ArgumentParser, default: str, text: bool = True
) -> None:
    choices = [f.value for f in OutputFormat] + ([TEXT] if text else [])
    parser.add_argument(
        "--format", dest="output_format", choices=choices, default=default
    )
    parser.add_argument("--out", default=None, help="Output file (default stdout).")


def add_cell_arguments(parser: argparse.ArgumentParser) -> None:
    """(algebra, p, n, k), positionally or through flags."""
    parser.add_argument("algebra_pos", nargs="?", metavar="ALGEBRA")
    parser.add_argument("p_pos", nargs="?", type=int, metavar="P")
    parser.add_argument("n_pos", nargs="?", type=int, metavar="N")
    parser.add_argument("k_pos", nargs="?", type=int, metavar="K")
    parser.add_argument("--algebra", default=None)
    parser.add_argument("-p", type=int, default=None)
    parser.add_argument("-n", type=int, default=None)
    parser.add_argument("-k", type=int, default=None)


def resolve_cell(args: argparse.Namespace) -> tuple[AlgebraId, int, int]:
    """Return (algebra, q, k) from the positional or flag form."""
    values = {}
    for name in ("algebra", "p", "n", "k"):
        value = getattr(args, name)
        if value is None:
            value = getattr(args, f"{name}_pos")
        if value is None:
            raise InvalidArgument(detail=f"Missing required argument: {name}.")
        values[name] = value
    q = field_order(values["p"], values["n"])
    require_positive("k", values["k"])
    return AlgebraId.parse(values["algebra"]), q, values["k"]


def write_output(text: str, out: Optional[str], stdout: TextIO) -> None:
    """Write command output to a file when --out is given, else to stdout."""
    if out is None:
        stdout.write(text)
        return
    path = Path(out)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")
