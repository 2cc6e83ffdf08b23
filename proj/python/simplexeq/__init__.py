"""Exact competitive-equilibrium solver for simplex exchange economies.

All quantities are exact rationals (`fractions.Fraction` on the Python
side); floats are rejected at the boundary.
"""

from ._simplexeq import (
    Economy,
    Result,
    from_text,
    generate,
    is_feasible,
    solve,
    strictly_prefers,
    value,
)

__all__ = [
    "Economy",
    "Result",
    "from_text",
    "generate",
    "is_feasible",
    "solve",
    "strictly_prefers",
    "value",
]
