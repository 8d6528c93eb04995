"""Peirce's 1909 three-valued logic: V, L, F with F < L < V.

The connective matrices are stored literally as he tabulated them; that the
bar is an involution on {V,F} only, that (+) is the max and Z the min under
the order, and that both restrict to the bivalent tables are checked in the
tests rather than assumed.  Only the attested connectives exist here: there
is no trivalent claw.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product
from typing import Mapping

from .errors import LimitExceededError, MissingVariableError
from .formulas import Neg, Prod, PropFormula, Sum, Var

MAX_TRI_VARS = 10  # 3^10 rows is the ceiling for a printable table


class TriValue(enum.Enum):
    V = "V"
    L = "L"
    F = "F"


V, L, F = TriValue.V, TriValue.L, TriValue.F

RANK = {F: 0, L: 1, V: 2}

_NEG_TABLE = {V: F, L: L, F: V}

_SUM_TABLE = {
    (V, V): V, (V, L): V, (V, F): V,
    (L, V): V, (L, L): L, (L, F): L,
    (F, V): V, (F, L): L, (F, F): F,
}

_PROD_TABLE = {
    (V, V): V, (V, L): L, (V, F): F,
    (L, V): L, (L, L): L, (L, F): F,
    (F, V): F, (F, L): F, (F, F): F,
}


def tri_neg(a: TriValue) -> TriValue:
    return _NEG_TABLE[a]


def tri_or(a: TriValue, b: TriValue) -> TriValue:
    return _SUM_TABLE[(a, b)]


def tri_and(a: TriValue, b: TriValue) -> TriValue:
    return _PROD_TABLE[(a, b)]


class UnsupportedConnectiveError(ValueError):
    """The 1909 fragment covers only negation, sum, and product."""

    def __init__(self, node: PropFormula):
        super().__init__(
            f"no trivalent matrix exists for {type(node).__name__} nodes"
        )
        self.node = node


def tri_eval(formula: PropFormula, assignment: Mapping[str, TriValue]) -> TriValue:
    if isinstance(formula, Var):
        try:
            return assignment[formula.name]
        except KeyError:
            raise MissingVariableError(formula.name) from None
    if isinstance(formula, Neg):
        return tri_neg(tri_eval(formula.inner, assignment))
    if isinstance(formula, Sum):
        return tri_or(tri_eval(formula.left, assignment), tri_eval(formula.right, assignment))
    if isinstance(formula, Prod):
        return tri_and(tri_eval(formula.left, assignment), tri_eval(formula.right, assignment))
    raise UnsupportedConnectiveError(formula)


@dataclass(frozen=True)
class TriTable:
    """Rows in canonical order: V before L before F, first variable slowest."""

    variables: tuple[str, ...]
    rows: tuple[tuple[tuple[TriValue, ...], TriValue], ...]

    def values(self) -> tuple[TriValue, ...]:
        return tuple(value for _, value in self.rows)

    def to_tsv(self) -> str:
        lines = ["\t".join(self.variables + ("value",))]
        for cells, value in self.rows:
            lines.append("\t".join([c.value for c in cells] + [value.value]))
        return "\n".join(lines) + "\n"


def tri_table(formula: PropFormula) -> TriTable:
    from .formulas import free_vars

    _check_supported(formula)
    names = tuple(free_vars(formula))
    if len(names) > MAX_TRI_VARS:
        raise LimitExceededError(
            f"{len(names)} variables exceed the {MAX_TRI_VARS}-variable trivalent limit"
        )
    rows = []
    for cells in product((V, L, F), repeat=len(names)):
        rows.append((cells, tri_eval(formula, dict(zip(names, cells)))))
    return TriTable(names, tuple(rows))


def _check_supported(formula: PropFormula) -> None:
    if isinstance(formula, Var):
        return
    if isinstance(formula, Neg):
        _check_supported(formula.inner)
        return
    if isinstance(formula, (Sum, Prod)):
        _check_supported(formula.left)
        _check_supported(formula.right)
        return
    raise UnsupportedConnectiveError(formula)
