"""Peirce-Mitchell quantification over finite domains.

Sigma and Pi are sums and products in earnest: over a domain of size n,
Sigma_i b(i) expands to b(0) + ... + b(n-1) and Pi_i b(i) to the product,
folded left in index order.  Expansion atoms become propositional variables
named predicate_e1_..._ek (so l(1,0) at domain elements 1,0 is l_1_0), which
keeps the relational and propositional truth paths mutually checkable.

Also here: Tarskian evaluation in a finite structure, exhaustive first-witness
satisfiability search, the duplicate-an-element model extension (the finite
Loewenheim-Skolem-Tarski step upward), a Herbrand-flavored validity scan,
Mitchell's All/Some forms, the A/E/I/O syllogistic encodings, and Leibniz
indiscernibility of two elements.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Mapping, Optional

from .errors import LimitExceededError
from .formulas import (
    PI,
    SIGMA,
    Claw,
    Neg,
    Prod,
    PropFormula,
    Quant,
    RAtom,
    RClaw,
    RelFormula,
    RNeg,
    RProd,
    RSum,
    Sum,
    Var,
    ensure_closed,
    predicate_signature,
)
from .truth import find_counterexample

DEFAULT_MAX_ATOMS = 16
MAX_ATOMS_ENV = "ILLATION_MAX_ATOMS"


def max_atoms_limit(override: Optional[int] = None) -> int:
    if override is not None:
        return override
    raw = os.environ.get(MAX_ATOMS_ENV)
    if raw is None:
        return DEFAULT_MAX_ATOMS
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{MAX_ATOMS_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError(f"{MAX_ATOMS_ENV} must be positive, got {value}")
    return value


@dataclass
class Structure:
    """Finite relational structure: domain {0..n-1} plus predicate tables."""

    domain_size: int
    predicates: dict[str, tuple[int, frozenset[tuple[int, ...]]]]

    def __post_init__(self) -> None:
        if self.domain_size < 1:
            raise ValueError("domain must have at least one element")
        for name, (arity, rows) in self.predicates.items():
            for row in rows:
                if len(row) != arity:
                    raise ValueError(f"{name}: tuple {row} does not match arity {arity}")
                if any(not 0 <= x < self.domain_size for x in row):
                    raise ValueError(f"{name}: tuple {row} is outside the domain")

    def holds(self, predicate: str, elements: tuple[int, ...]) -> bool:
        arity, rows = self.predicates[predicate]
        if len(elements) != arity:
            raise ValueError(
                f"{predicate} has arity {arity}, got {len(elements)} elements"
            )
        return elements in rows


def structure_to_json(s: Structure) -> dict:
    return {
        "domain": s.domain_size,
        "predicates": {
            name: {"arity": arity, "true": [list(row) for row in sorted(rows)]}
            for name, (arity, rows) in sorted(s.predicates.items())
        },
    }


def structure_from_json(data: dict) -> Structure:
    if not isinstance(data, dict) or "domain" not in data:
        raise ValueError("structure JSON needs a 'domain' field")
    predicates = {}
    for name, body in data.get("predicates", {}).items():
        arity = body["arity"]
        rows = frozenset(tuple(row) for row in body.get("true", []))
        predicates[name] = (arity, rows)
    return Structure(int(data["domain"]), predicates)


# --- expansion --------------------------------------------------------------


def atom_name(predicate: str, elements: tuple[int, ...]) -> str:
    return predicate + "".join(f"_{e}" for e in elements)


def decode_atom(name: str) -> tuple[str, tuple[int, ...]]:
    head, *tail = name.split("_")
    if not tail:
        raise ValueError(f"{name!r} is not an expansion atom")
    return head, tuple(int(piece) for piece in tail)


def expand(
    formula: RelFormula, n: int, max_atoms: Optional[int] = None
) -> PropFormula:
    """Eliminate quantifiers over a domain of size n by sum/product folding."""
    if n < 1:
        raise ValueError("domain must have at least one element")
    ensure_closed(formula)
    limit = max_atoms_limit(max_atoms)
    seen: set[str] = set()

    def go(f: RelFormula, env: dict[str, int]) -> PropFormula:
        if isinstance(f, RAtom):
            name = atom_name(f.predicate, tuple(env[ix] for ix in f.indices))
            seen.add(name)
            if len(seen) > limit:
                raise LimitExceededError(
                    f"expansion needs more than {limit} distinct atoms"
                )
            return Var(name)
        if isinstance(f, RNeg):
            return Neg(go(f.inner, env))
        if isinstance(f, RClaw):
            return Claw(go(f.antecedent, env), go(f.consequent, env))
        if isinstance(f, RProd):
            return Prod(go(f.left, env), go(f.right, env))
        if isinstance(f, RSum):
            return Sum(go(f.left, env), go(f.right, env))
        if isinstance(f, Quant):
            parts = [go(f.body, {**env, f.var: d}) for d in range(n)]
            acc = parts[0]
            for part in parts[1:]:
                acc = Prod(acc, part) if f.kind == PI else Sum(acc, part)
            return acc
        raise TypeError(f"not a relational formula: {f!r}")

    return go(formula, {})


def assignment_from_structure(s: Structure, variables: list[str]) -> dict[str, bool]:
    """Read expansion atoms' truth values off a structure."""
    out = {}
    for name in variables:
        predicate, elements = decode_atom(name)
        out[name] = s.holds(predicate, elements)
    return out


# --- evaluation and search ---------------------------------------------------


def eval_in(formula: RelFormula, s: Structure) -> bool:
    """Tarskian truth of a closed formula in a finite structure."""
    ensure_closed(formula)
    for name, arity in predicate_signature(formula).items():
        if name not in s.predicates:
            raise ValueError(f"structure does not interpret predicate {name!r}")
        if s.predicates[name][0] != arity:
            raise ValueError(
                f"predicate {name!r}: formula uses arity {arity}, "
                f"structure has {s.predicates[name][0]}"
            )

    def go(f: RelFormula, env: dict[str, int]) -> bool:
        if isinstance(f, RAtom):
            return s.holds(f.predicate, tuple(env[ix] for ix in f.indices))
        if isinstance(f, RNeg):
            return not go(f.inner, env)
        if isinstance(f, RClaw):
            return (not go(f.antecedent, env)) or go(f.consequent, env)
        if isinstance(f, RProd):
            return go(f.left, env) and go(f.right, env)
        if isinstance(f, RSum):
            return go(f.left, env) or go(f.right, env)
        if isinstance(f, Quant):
            values = (go(f.body, {**env, f.var: d}) for d in range(s.domain_size))
            return all(values) if f.kind == PI else any(values)
        raise TypeError(f"not a relational formula: {f!r}")

    return go(formula, {})


def _interpretation_cells(
    formula: RelFormula, n: int, limit: int
) -> list[tuple[str, int, tuple[int, ...]]]:
    cells = []
    for name, arity in predicate_signature(formula).items():
        for row in product(range(n), repeat=arity):
            cells.append((name, arity, row))
    if len(cells) > limit:
        raise LimitExceededError(
            f"{len(cells)} interpretation cells exceed the limit of {limit}"
        )
    return cells


def _structures(formula: RelFormula, n: int, limit: int) -> Iterator[Structure]:
    """All interpretations in the fixed bit order: predicates in first-use
    order, tuples lexicographic, absent before present, first cell slowest."""
    cells = _interpretation_cells(formula, n, limit)
    arities = {name: arity for name, arity, _ in cells}
    for bits in product((False, True), repeat=len(cells)):
        tables: dict[str, set[tuple[int, ...]]] = {name: set() for name in arities}
        for (name, _, row), present in zip(cells, bits):
            if present:
                tables[name].add(row)
        yield Structure(
            n, {name: (arities[name], frozenset(rows)) for name, rows in tables.items()}
        )


def sat_search(
    formula: RelFormula, n: int, max_atoms: Optional[int] = None
) -> Optional[Structure]:
    """First satisfying structure in enumeration order, or None."""
    if n < 1:
        raise ValueError("domain must have at least one element")
    ensure_closed(formula)
    limit = max_atoms_limit(max_atoms)
    for candidate in _structures(formula, n, limit):
        if eval_in(formula, candidate):
            return candidate
    return None


def extend_model(formula: RelFormula, s: Structure) -> Structure:
    """Grow a satisfying structure by one element that duplicates element 0.

    Every true tuple is mirrored with the new element substituted for 0 in
    each combination of positions, so the newcomer is indiscernible from 0
    and satisfaction is preserved (checked; failure is an internal error).
    """
    if not eval_in(formula, s):
        raise ValueError("extend_model needs a structure that satisfies the formula")
    fresh = s.domain_size
    predicates = {}
    for name, (arity, rows) in s.predicates.items():
        grown = frozenset(
            row
            for row in product(range(fresh + 1), repeat=arity)
            if tuple(0 if x == fresh else x for x in row) in rows
        )
        predicates[name] = (arity, grown)
    bigger = Structure(fresh + 1, predicates)
    if not eval_in(formula, bigger):
        raise RuntimeError("extension postcondition failed: enlarged model does not satisfy")
    return bigger


@dataclass(frozen=True)
class SatScanReport:
    """Per-size satisfiability verdicts plus verified extension witnesses."""

    verdicts: tuple[tuple[int, Optional[Structure]], ...]
    extensions: tuple[tuple[int, Structure], ...]


def sat_scan(
    formula: RelFormula, max_size: int, max_atoms: Optional[int] = None
) -> SatScanReport:
    verdicts = []
    extensions = []
    for size in range(1, max_size + 1):
        try:
            witness = sat_search(formula, size, max_atoms)
        except LimitExceededError as err:
            raise LimitExceededError(f"size {size}: {err}") from None
        verdicts.append((size, witness))
        if witness is not None:
            extensions.append((size, extend_model(formula, witness)))
    return SatScanReport(tuple(verdicts), tuple(extensions))


def herbrand_scan(
    formula: RelFormula, max_size: int, max_atoms: Optional[int] = None
) -> Optional[tuple[int, PropFormula]]:
    """Least domain size whose expansion is a propositional tautology."""
    for size in range(1, max_size + 1):
        try:
            expansion = expand(formula, size, max_atoms)
        except LimitExceededError as err:
            raise LimitExceededError(f"size {size}: {err}") from None
        if find_counterexample(expansion) is None:
            return size, expansion
    return None


# --- classic forms ------------------------------------------------------------


def mitchell(kind: str, predicate: str) -> RelFormula:
    """Mitchell's 1883 forms: All U is F, Some U is F."""
    if kind == "All":
        return Quant(PI, "i", RAtom(predicate, ("i",)))
    if kind == "Some":
        return Quant(SIGMA, "i", RAtom(predicate, ("i",)))
    raise ValueError(f"kind must be 'All' or 'Some', got {kind!r}")


def aeio(form: str, subject: str, predicate: str) -> RelFormula:
    """Categorical forms over unary predicates, claw-encoded:

    A: Pi_i (s_i -< p_i)    E: Pi_i (s_i -< not p_i)
    I: Sigma_i (s_i p_i)    O: Sigma_i (s_i not p_i)
    """
    s = RAtom(subject, ("i",))
    p = RAtom(predicate, ("i",))
    if form == "A":
        return Quant(PI, "i", RClaw(s, p))
    if form == "E":
        return Quant(PI, "i", RClaw(s, RNeg(p)))
    if form == "I":
        return Quant(SIGMA, "i", RProd(s, p))
    if form == "O":
        return Quant(SIGMA, "i", RProd(s, RNeg(p)))
    raise ValueError(f"form must be one of A, E, I, O, got {form!r}")


def indiscernible(s: Structure, i: int, j: int) -> bool:
    """Leibniz identity 1_ij: no predicate separates i from j in any position
    of any tuple."""
    for e in (i, j):
        if not 0 <= e < s.domain_size:
            raise ValueError(f"element {e} is outside the domain")
    for name, (arity, rows) in s.predicates.items():
        for row in product(range(s.domain_size), repeat=arity):
            for pos in range(arity):
                with_i = row[:pos] + (i,) + row[pos + 1 :]
                with_j = row[:pos] + (j,) + row[pos + 1 :]
                if (with_i in rows) != (with_j in rows):
                    return False
    return True
