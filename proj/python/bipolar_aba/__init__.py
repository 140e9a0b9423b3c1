"""Extension enumeration and reasoning for bipolar assumption-based argumentation."""

from ._core import (
    Error,
    Framework,
    credulous,
    enumerate,
    exists,
    exists_nonempty,
    format_extensions,
    generate,
    oracle_enumerate,
    parse_aba,
    parse_graph,
    sceptical,
    verify,
)

__all__ = [
    "Error",
    "Framework",
    "credulous",
    "enumerate",
    "exists",
    "exists_nonempty",
    "format_extensions",
    "generate",
    "oracle_enumerate",
    "parse_aba",
    "parse_graph",
    "sceptical",
    "verify",
]
