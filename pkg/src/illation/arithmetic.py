"""Peirce's 1881 axioms for the natural numbers, checked over finite
structures, plus Wiener's 1914 reduction of the ordered pair to sets.

The five axioms, for a carrier N with binary relation R and designated
element 1:

  1   N is partially ordered by R (reflexive reading: R is a <=-style order)
  2   N is connected by R (any two elements are comparable)
  3   N is closed with respect to predecessors: every element other than an
      R-minimum has an immediate predecessor, pred(x) being the R-greatest
      y != x with y R x
  4a  1 is the R-minimum
  4b  N has no R-maximum
  5   mathematical induction: any subset containing 1 and closed under
      immediate successor is all of N

Axiom 3 exempts the minimum because under these definitions the minimum
provably has no predecessor.  Axiom 4b can never hold in a finite structure
that satisfies 1 and 2, which is the point: the axioms characterize an
infinite progression, and chains {1..n} witness exactly that by failing 4b
alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .errors import LimitExceededError

MAX_CARRIER = 12  # induction enumerates 2^|N| subsets


@dataclass(frozen=True)
class NumberStructure:
    carrier: tuple[str, ...]
    relation: frozenset[tuple[str, str]]
    one: str

    def __post_init__(self) -> None:
        if not self.carrier:
            raise ValueError("carrier must be nonempty")
        if len(self.carrier) > MAX_CARRIER:
            raise LimitExceededError(
                f"carrier of {len(self.carrier)} elements exceeds the {MAX_CARRIER}-element limit"
            )
        if len(set(self.carrier)) != len(self.carrier):
            raise ValueError("carrier elements must be distinct")
        members = set(self.carrier)
        if self.one not in members:
            raise ValueError(f"designated element {self.one!r} is not in the carrier")
        for pair in self.relation:
            if len(pair) != 2 or not set(pair) <= members:
                raise ValueError(f"relation pair {pair!r} is outside the carrier")

    def related(self, x: str, y: str) -> bool:
        return (x, y) in self.relation


def number_structure_to_json(s: NumberStructure) -> dict:
    return {
        "carrier": list(s.carrier),
        "one": s.one,
        "R": [list(pair) for pair in sorted(s.relation)],
    }


def number_structure_from_json(data: dict) -> NumberStructure:
    try:
        carrier = tuple(data["carrier"])
        one = data["one"]
        relation = frozenset((pair[0], pair[1]) for pair in data["R"])
    except (KeyError, TypeError, IndexError) as err:
        raise ValueError(f"number structure JSON needs carrier/one/R: {err}") from None
    return NumberStructure(carrier, relation, one)


def chain(n: int) -> NumberStructure:
    """The n-element chain {1..n} under <=, with 1 designated."""
    if n < 1:
        raise ValueError("chain length must be at least 1")
    names = tuple(str(i) for i in range(1, n + 1))
    relation = frozenset(
        (str(i), str(j)) for i in range(1, n + 1) for j in range(i, n + 1)
    )
    return NumberStructure(names, relation, "1")


@dataclass(frozen=True)
class AxiomVerdict:
    holds: bool
    witness: Optional[str] = None  # human-readable counterexample


@dataclass(frozen=True)
class AxiomReport:
    reading: str
    verdicts: dict[str, AxiomVerdict]  # keys "1","2","3","4a","4b","5"

    def all_hold(self) -> bool:
        return all(v.holds for v in self.verdicts.values())


_READING = (
    "R is read as a reflexive (<=-style) order; "
    "pred(x)/succ(x) are the R-greatest/R-least strict neighbors"
)

_LABELS = {
    "1": "partial order",
    "2": "connected",
    "3": "closed under predecessors",
    "4a": "1 is the minimum",
    "4b": "no maximum",
    "5": "induction",
}


def _minima(s: NumberStructure) -> set[str]:
    return {m for m in s.carrier if all(s.related(m, x) for x in s.carrier)}


def _pred(s: NumberStructure, x: str) -> Optional[str]:
    candidates = [y for y in s.carrier if y != x and s.related(y, x)]
    for y in candidates:
        if all(s.related(z, y) for z in candidates):
            return y
    return None


def _succ(s: NumberStructure, x: str) -> Optional[str]:
    candidates = [y for y in s.carrier if y != x and s.related(x, y)]
    for y in candidates:
        if all(s.related(y, z) for z in candidates):
            return y
    return None


def check_axioms(s: NumberStructure) -> AxiomReport:
    if len(s.carrier) > MAX_CARRIER:
        raise LimitExceededError(
            f"carrier of {len(s.carrier)} exceeds the {MAX_CARRIER}-element limit"
        )
    verdicts: dict[str, AxiomVerdict] = {}

    verdicts["1"] = _check_partial_order(s)
    verdicts["2"] = _check_connected(s)
    verdicts["3"] = _check_predecessors(s)
    verdicts["4a"] = _check_minimum(s)
    verdicts["4b"] = _check_no_maximum(s)
    verdicts["5"] = _check_induction(s)
    return AxiomReport(_READING, verdicts)


def _check_partial_order(s: NumberStructure) -> AxiomVerdict:
    for x in s.carrier:
        if not s.related(x, x):
            return AxiomVerdict(False, f"not reflexive at {x}")
    for x, y in combinations(s.carrier, 2):
        if s.related(x, y) and s.related(y, x):
            return AxiomVerdict(False, f"not antisymmetric on {x},{y}")
    for x in s.carrier:
        for y in s.carrier:
            if not s.related(x, y):
                continue
            for z in s.carrier:
                if s.related(y, z) and not s.related(x, z):
                    return AxiomVerdict(False, f"not transitive on {x},{y},{z}")
    return AxiomVerdict(True)


def _check_connected(s: NumberStructure) -> AxiomVerdict:
    for x, y in combinations(s.carrier, 2):
        if not (s.related(x, y) or s.related(y, x)):
            return AxiomVerdict(False, f"incomparable pair {x},{y}")
    return AxiomVerdict(True)


def _check_predecessors(s: NumberStructure) -> AxiomVerdict:
    minima = _minima(s)
    for x in s.carrier:
        if x in minima:
            continue
        if _pred(s, x) is None:
            return AxiomVerdict(False, f"{x} has no immediate predecessor")
    return AxiomVerdict(True)


def _check_minimum(s: NumberStructure) -> AxiomVerdict:
    for x in s.carrier:
        if not s.related(s.one, x):
            return AxiomVerdict(False, f"{s.one} does not precede {x}")
    return AxiomVerdict(True)


def _check_no_maximum(s: NumberStructure) -> AxiomVerdict:
    for m in s.carrier:
        if all(s.related(x, m) for x in s.carrier):
            return AxiomVerdict(False, f"maximum element {m}")
    return AxiomVerdict(True)


def _check_induction(s: NumberStructure) -> AxiomVerdict:
    successor = {x: _succ(s, x) for x in s.carrier}
    n = len(s.carrier)
    for mask in range(1 << n):
        subset = {s.carrier[i] for i in range(n) if mask >> i & 1}
        if s.one not in subset:
            continue
        closed = all(
            successor[x] is None or successor[x] in subset for x in subset
        )
        if closed and len(subset) != n:
            inside = ",".join(x for x in s.carrier if x in subset)
            return AxiomVerdict(False, f"closed proper subset {{{inside}}}")
    return AxiomVerdict(True)


def report_text(report: AxiomReport) -> str:
    lines = [f"reading: {report.reading}"]
    for key in ("1", "2", "3", "4a", "4b", "5"):
        verdict = report.verdicts[key]
        line = f"axiom {key} ({_LABELS[key]}): {'pass' if verdict.holds else 'fail'}"
        if not verdict.holds and verdict.witness:
            line += f"  witness: {verdict.witness}"
        lines.append(line)
    return "\n".join(lines) + "\n"


def report_json(report: AxiomReport) -> dict:
    return {
        "reading": report.reading,
        "axioms": {
            key: {"holds": verdict.holds, "witness": verdict.witness}
            for key, verdict in report.verdicts.items()
        },
        "all_hold": report.all_hold(),
    }


# --- hereditarily finite sets and the Wiener pair ---------------------------


class HFSet:
    """Hereditarily finite sets over named atoms, with extensional equality."""

    __hash__ = None


class HFAtom(HFSet):
    def __init__(self, name: str):
        self.name = name
        self._key = ("atom", name)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, HFSet) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return self.name


class HFNode(HFSet):
    """A set of HFSets; duplicates collapse under extensional equality."""

    def __init__(self, elements: tuple[HFSet, ...] | list[HFSet] = ()):
        unique: dict[tuple, HFSet] = {}
        for element in elements:
            unique.setdefault(element._key, element)
        self.elements = tuple(unique.values())
        self._key = ("set", tuple(sorted(e._key for e in self.elements)))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, HFSet) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return "{" + ", ".join(sorted(repr(e) for e in self.elements)) + "}"


EMPTY = HFNode(())


def hf_equal(a: HFSet, b: HFSet) -> bool:
    """Extensional equality: same atoms, or element-for-element equal sets."""
    return a._key == b._key


def wiener_pair(x: HFSet, y: HFSet) -> HFNode:
    """Wiener's ordered pair <x,y> = {{{x}, {}}, {y}}."""
    return HFNode((HFNode((HFNode((x,)), EMPTY)), HFNode((y,))))
