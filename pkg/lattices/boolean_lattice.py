"""
The powerset Boolean algebra of a finite ground set and its Desargues property.

Subsets are bitmasks over elements 0..n-1. The ground set optionally carries display
labels; label i names bit i.
"""
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from lattices.base_lattice import BaseLattice
from utils.exceptions import PreconditionError, ShapeMismatchError
from utils.logger import logger

MAX_GROUND_SIZE = 16
MAX_SCAN_SIZE = 4

PAIRS: Tuple[Tuple[int, int, int], ...] = ((2, 3, 1), (1, 3, 2), (1, 2, 3))  # (i, j, k)


@dataclass(frozen=True)
class GroundSet:
    """Finite ground set {0, ..., size-1}."""
    size: int
    labels: Tuple[str, ...] = ()

    def __post_init__(self):
        if not 1 <= self.size <= MAX_GROUND_SIZE:
            raise PreconditionError(
                f"Ground set size must be between 1 and {MAX_GROUND_SIZE}, got {self.size}"
            )
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(self.size)))
        if len(self.labels) != self.size or len(set(self.labels)) != self.size:
            raise ShapeMismatchError(f"Ground set of size {self.size} needs {self.size} distinct labels")

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def subset(self, elements: Iterable[int]) -> "Subset":
        bits = 0
        for e in elements:
            if not 0 <= e < self.size:
                raise ShapeMismatchError(f"Element {e} outside ground set of size {self.size}")
            bits |= 1 << e
        return Subset(bits, self)

    def subset_from_labels(self, labels: Iterable[str]) -> "Subset":
        index = {label: i for i, label in enumerate(self.labels)}
        try:
            return self.subset(index[str(label)] for label in labels)
        except KeyError as e:
            raise ShapeMismatchError(f"Unknown ground-set label {e.args[0]!r}") from e


@dataclass(frozen=True)
class Subset:
    """Subset of a ground set, stored as a bitmask."""
    bits: int
    ground: GroundSet

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.ground.size:
            raise ShapeMismatchError(
                f"Bitmask {self.bits:#x} has bits outside a ground set of size {self.ground.size}"
            )

    def elements(self) -> List[int]:
        return [i for i in range(self.ground.size) if self.bits >> i & 1]

    def labels(self) -> List[str]:
        return [self.ground.labels[i] for i in self.elements()]

    def __len__(self) -> int:
        return bin(self.bits).count("1")

    def __or__(self, other: "Subset") -> "Subset":
        return union(self, other)

    def __and__(self, other: "Subset") -> "Subset":
        return intersect(self, other)

    def __le__(self, other: "Subset") -> bool:
        return leq(self, other)

    def __repr__(self) -> str:
        return "{" + ",".join(self.labels()) + "}"


def _require_same_ground(a: Subset, b: Subset) -> None:
    if a.ground != b.ground:
        raise ShapeMismatchError(f"Ground set mismatch: {a.ground.size} vs {b.ground.size} elements")


def union(a: Subset, b: Subset) -> Subset:
    _require_same_ground(a, b)
    return Subset(a.bits | b.bits, a.ground)


def intersect(a: Subset, b: Subset) -> Subset:
    _require_same_ground(a, b)
    return Subset(a.bits & b.bits, a.ground)


def complement(a: Subset, ground: Optional[GroundSet] = None) -> Subset:
    ground = ground or a.ground
    if ground != a.ground:
        raise ShapeMismatchError("Complement taken over a different ground set")
    return Subset(ground.full_mask & ~a.bits, ground)


def leq(a: Subset, b: Subset) -> bool:
    _require_same_ground(a, b)
    return a.bits & ~b.bits == 0


class BooleanLattice(BaseLattice[Subset]):
    """The powerset lattice 2^S."""

    def __init__(self, ground: GroundSet):
        self.ground = ground

    def bottom(self) -> Subset:
        return Subset(0, self.ground)

    def top(self) -> Subset:
        return Subset(self.ground.full_mask, self.ground)

    def join(self, a: Subset, b: Subset) -> Subset:
        return union(a, b)

    def meet(self, a: Subset, b: Subset) -> Subset:
        return intersect(a, b)

    def leq(self, a: Subset, b: Subset) -> bool:
        return leq(a, b)

    def complement(self, a: Subset) -> Subset:
        return complement(a, self.ground)


@dataclass(frozen=True)
class BooleanDesarguesInput:
    """Two triplets of subsets (A1, A2, A3) and (A'1, A'2, A'3) of one ground set."""
    a: Tuple[Subset, Subset, Subset]
    a_prime: Tuple[Subset, Subset, Subset]
    ground: GroundSet

    def validate(self) -> None:
        """
        Check shape, ground sets and within-triplet distinctness.

        Raises:
            ShapeMismatchError: On wrong triplet length or ground set
            PreconditionError: If a triplet repeats a subset
        """
        for name, triple in (("A", self.a), ("A'", self.a_prime)):
            if len(triple) != 3:
                raise ShapeMismatchError(f"Triplet {name} must have 3 subsets, got {len(triple)}")
            for s in triple:
                if s.ground != self.ground:
                    raise ShapeMismatchError(f"Subset {s!r} of {name} belongs to another ground set")
            if len({s.bits for s in triple}) != 3:
                raise PreconditionError(f"Subsets of triplet {name} must be pairwise distinct")

    def swapped(self) -> "BooleanDesarguesInput":
        """The input with the two triplets exchanged."""
        return BooleanDesarguesInput(self.a_prime, self.a, self.ground)


@dataclass(frozen=True)
class BooleanDerived:
    """Derived subsets of a Boolean Desargues input, indexed 1..3 as in the proposition."""
    b: Dict[Tuple[int, int], Subset] = field(hash=False)
    b_prime: Dict[Tuple[int, int], Subset] = field(hash=False)
    frak_b: Tuple[Subset, Subset, Subset]
    c: Tuple[Subset, Subset, Subset]
    source: BooleanDesarguesInput


def derive(data: BooleanDesarguesInput) -> BooleanDerived:
    """
    Compute B_ij = A_i v A_j, B'_ij, frak B_k = B_ij ^ B'_ij and C_i = A_i v A'_i.

    Args:
        data: Validated input

    Returns:
        BooleanDerived
    """
    data.validate()
    a, ap = data.a, data.a_prime
    b = {(i, j): a[i - 1] | a[j - 1] for i, j, _ in PAIRS}
    b_prime = {(i, j): ap[i - 1] | ap[j - 1] for i, j, _ in PAIRS}
    frak = {k: b[(i, j)] & b_prime[(i, j)] for i, j, k in PAIRS}
    c = tuple(a[i] | ap[i] for i in range(3))
    derived = BooleanDerived(b, b_prime, (frak[1], frak[2], frak[3]), c, data)
    logger.debug(f"Boolean derive: C={derived.c} frakB={derived.frak_b}")
    return derived


def antecedent(d: BooleanDerived) -> bool:
    """C1 ^ C2 is a subset of C3."""
    c1, c2, c3 = d.c
    return leq(c1 & c2, c3)


def consequent(d: BooleanDerived) -> bool:
    """frak B3 is a subset of frak B1 v frak B2."""
    f1, f2, f3 = d.frak_b
    return leq(f3, f1 | f2)


def antecedent_negated(d: BooleanDerived) -> bool:
    """
    The antecedent restated through complements:
    not A3 ^ not A'3 is a subset of (not A1 ^ not A'1) v (not A2 ^ not A'2).
    """
    n = [complement(s) for s in d.source.a]
    np_ = [complement(s) for s in d.source.a_prime]
    return leq(n[2] & np_[2], (n[0] & np_[0]) | (n[1] & np_[1]))


def consequent_negated(d: BooleanDerived) -> bool:
    """
    The consequent restated through complements, with
    not frak B_k = (not A_i ^ not A_j) v (not A'_i ^ not A'_j).
    """
    n = [complement(s) for s in d.source.a]
    np_ = [complement(s) for s in d.source.a_prime]
    not_frak = {k: (n[i - 1] & n[j - 1]) | (np_[i - 1] & np_[j - 1]) for i, j, k in PAIRS}
    return leq(not_frak[1] & not_frak[2], not_frak[3])


def _or_gate(x: Subset, y: Subset) -> Subset:
    return union(x, y)


def _and_gate(x: Subset, y: Subset) -> Subset:
    return intersect(x, y)


def circuit_fig2_eval(data: BooleanDesarguesInput) -> Subset:
    """
    Gate network whose output equals C3 exactly when the antecedent holds.

    Three OR gates produce C1, C2, C3; an AND gate combines C1 and C2; a final OR gate
    joins that with C3.
    """
    data.validate()
    a, ap = data.a, data.a_prime
    c1 = _or_gate(a[0], ap[0])
    c2 = _or_gate(a[1], ap[1])
    c3 = _or_gate(a[2], ap[2])
    return _or_gate(_and_gate(c1, c2), c3)


def circuit_fig3_eval(data: BooleanDesarguesInput) -> Subset:
    """
    Gate network whose output equals frak B3 exactly when the consequent holds.

    Six OR gates produce the sides B_ij and B'_ij, three AND gates the points frak B_k,
    one OR gate frak B1 v frak B2 and the final AND gate meets it with frak B3.
    """
    data.validate()
    a1, a2, a3 = data.a
    p1, p2, p3 = data.a_prime
    b23, b23p = _or_gate(a2, a3), _or_gate(p2, p3)
    b13, b13p = _or_gate(a1, a3), _or_gate(p1, p3)
    b12, b12p = _or_gate(a1, a2), _or_gate(p1, p2)
    frak1 = _and_gate(b23, b23p)
    frak2 = _and_gate(b13, b13p)
    frak3 = _and_gate(b12, b12p)
    return _and_gate(frak3, _or_gate(frak2, frak1))
