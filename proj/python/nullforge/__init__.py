"""Null curves and minimal timelike translation surfaces in E42/E31."""

from ._core import (
    ConstraintError,
    Curve,
    DegenerateWronskianError,
    DslParseError,
    ExampleConfigError,
    Expr,
    NullforgeError,
    QuadratureError,
    describe_example,
    example_curve,
    forward_e31,
    forward_e42,
    list_examples,
    parse,
    run,
    surface_point,
    verify_minimality,
)

__all__ = [
    "ConstraintError",
    "Curve",
    "DegenerateWronskianError",
    "DslParseError",
    "ExampleConfigError",
    "Expr",
    "NullforgeError",
    "QuadratureError",
    "describe_example",
    "example_curve",
    "forward_e31",
    "forward_e42",
    "list_examples",
    "parse",
    "run",
    "surface_point",
    "verify_minimality",
]
