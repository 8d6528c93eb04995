"""Formula syntax trees shared by every other module.

Propositional trees use Peirce's connective set: the claw (illation, his
material implication), negation, Boolean product and sum, the two constants,
and a generalized binary connective addressed by its column index in the
sixteen-connective table of MS 431.  Relational trees add indexed predicate
atoms and Peirce's Pi/Sigma quantifiers over index variables.

All nodes are immutable; structural equality and hashing come from the
dataclasses.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

# Single letter, or an expansion atom such as l_0_1 produced by quantifier
# elimination (predicate name + underscore-joined element indices).  The four
# concrete grammars only ever parse the single-letter form.
_VAR_NAME = re.compile(r"^(?:[a-z]|[a-z][a-z0-9]*(?:_[0-9]+)+)$")

_PREDICATE_NAME = re.compile(r"^[a-z][a-z0-9]*$")


class PropFormula:
    """Base class for propositional formula nodes."""

    __hash__ = None  # concrete dataclasses supply their own


@dataclass(frozen=True)
class Var(PropFormula):
    name: str

    def __post_init__(self) -> None:
        if not _VAR_NAME.match(self.name):
            raise ValueError(f"bad variable name: {self.name!r}")


@dataclass(frozen=True)
class Const(PropFormula):
    # True is verum (v), False is falsum (f); constants are never variables.
    value: bool


@dataclass(frozen=True)
class Neg(PropFormula):
    inner: PropFormula


@dataclass(frozen=True)
class Claw(PropFormula):
    """Illation a -< b: false exactly when the antecedent holds and the
    consequent fails."""

    antecedent: PropFormula
    consequent: PropFormula


@dataclass(frozen=True)
class Prod(PropFormula):
    left: PropFormula
    right: PropFormula


@dataclass(frozen=True)
class Sum(PropFormula):
    left: PropFormula
    right: PropFormula


@dataclass(frozen=True)
class Conn16(PropFormula):
    """Binary connective number `index` (1..16) from the MS 431 table."""

    index: int
    left: PropFormula
    right: PropFormula

    def __post_init__(self) -> None:
        if not 1 <= self.index <= 16:
            raise ValueError(f"connective index out of range: {self.index}")


def free_vars(formula: PropFormula) -> list[str]:
    """Variable names in first-occurrence order (duplicate-free)."""
    seen: dict[str, None] = {}

    def walk(f: PropFormula) -> None:
        if isinstance(f, Var):
            seen.setdefault(f.name, None)
        elif isinstance(f, Const):
            pass
        elif isinstance(f, Neg):
            walk(f.inner)
        elif isinstance(f, Claw):
            walk(f.antecedent)
            walk(f.consequent)
        elif isinstance(f, (Prod, Sum)):
            walk(f.left)
            walk(f.right)
        elif isinstance(f, Conn16):
            walk(f.left)
            walk(f.right)
        else:
            raise TypeError(f"not a propositional formula: {f!r}")

    walk(formula)
    return list(seen)


def substitute(context: PropFormula, hole: str, filler: PropFormula) -> PropFormula:
    """Replace every occurrence of the variable `hole` with `filler`."""
    if isinstance(context, Var):
        return filler if context.name == hole else context
    if isinstance(context, Const):
        return context
    if isinstance(context, Neg):
        return Neg(substitute(context.inner, hole, filler))
    if isinstance(context, Claw):
        return Claw(
            substitute(context.antecedent, hole, filler),
            substitute(context.consequent, hole, filler),
        )
    if isinstance(context, Prod):
        return Prod(
            substitute(context.left, hole, filler),
            substitute(context.right, hole, filler),
        )
    if isinstance(context, Sum):
        return Sum(
            substitute(context.left, hole, filler),
            substitute(context.right, hole, filler),
        )
    if isinstance(context, Conn16):
        return Conn16(
            context.index,
            substitute(context.left, hole, filler),
            substitute(context.right, hole, filler),
        )
    raise TypeError(f"not a propositional formula: {context!r}")


# --- relational formulas -------------------------------------------------

PI = "Pi"
SIGMA = "Sigma"


class RelFormula:
    """Base class for relational (quantified) formula nodes."""

    __hash__ = None


@dataclass(frozen=True)
class RAtom(RelFormula):
    predicate: str
    indices: tuple[str, ...]

    def __post_init__(self) -> None:
        if not _PREDICATE_NAME.match(self.predicate):
            raise ValueError(f"bad predicate name: {self.predicate!r}")
        if not self.indices:
            raise ValueError("atoms need at least one index variable")


@dataclass(frozen=True)
class RNeg(RelFormula):
    inner: RelFormula


@dataclass(frozen=True)
class RClaw(RelFormula):
    antecedent: RelFormula
    consequent: RelFormula


@dataclass(frozen=True)
class RProd(RelFormula):
    left: RelFormula
    right: RelFormula


@dataclass(frozen=True)
class RSum(RelFormula):
    left: RelFormula
    right: RelFormula


@dataclass(frozen=True)
class Quant(RelFormula):
    """Peirce quantifier: Pi is the product (every element), Sigma the sum
    (some element)."""

    kind: str
    var: str
    body: RelFormula

    def __post_init__(self) -> None:
        if self.kind not in (PI, SIGMA):
            raise ValueError(f"quantifier kind must be {PI!r} or {SIGMA!r}")


def ensure_closed(formula: RelFormula) -> None:
    """Reject free or shadowed index variables.

    Every atom index must be bound by exactly one enclosing quantifier;
    the public relational operations only accept closed formulas.
    """

    def walk(f: RelFormula, bound: frozenset[str]) -> None:
        if isinstance(f, RAtom):
            for ix in f.indices:
                if ix not in bound:
                    raise ValueError(f"free index variable: {ix!r}")
        elif isinstance(f, RNeg):
            walk(f.inner, bound)
        elif isinstance(f, RClaw):
            walk(f.antecedent, bound)
            walk(f.consequent, bound)
        elif isinstance(f, (RProd, RSum)):
            walk(f.left, bound)
            walk(f.right, bound)
        elif isinstance(f, Quant):
            if f.var in bound:
                raise ValueError(f"index variable shadowed: {f.var!r}")
            walk(f.body, bound | {f.var})
        else:
            raise TypeError(f"not a relational formula: {f!r}")

    walk(formula, frozenset())


def predicate_signature(formula: RelFormula) -> dict[str, int]:
    """Predicate arities in first-occurrence order; arity clashes are errors."""
    sig: dict[str, int] = {}

    def walk(f: RelFormula) -> None:
        if isinstance(f, RAtom):
            arity = len(f.indices)
            if sig.setdefault(f.predicate, arity) != arity:
                raise ValueError(
                    f"predicate {f.predicate!r} used with arities "
                    f"{sig[f.predicate]} and {arity}"
                )
        elif isinstance(f, RNeg):
            walk(f.inner)
        elif isinstance(f, RClaw):
            walk(f.antecedent)
            walk(f.consequent)
        elif isinstance(f, (RProd, RSum)):
            walk(f.left)
            walk(f.right)
        elif isinstance(f, Quant):
            walk(f.body)
        else:
            raise TypeError(f"not a relational formula: {f!r}")

    walk(formula)
    return sig
