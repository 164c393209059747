"""
Exhaustive verification of the Boolean Desargues implication over small ground sets.
"""
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import List, Optional, Tuple

from lattices.boolean_lattice import (
    MAX_SCAN_SIZE,
    BooleanDesarguesInput,
    GroundSet,
    Subset,
)
from utils.exceptions import PreconditionError
from utils.logger import logger

RawTuple = Tuple[int, int, int, int, int, int]


@dataclass
class ScanReport:
    """Counts gathered over every distinct-triplet input of a ground set."""
    ground: GroundSet
    total: int = 0
    antecedent_true: int = 0
    consequent_true: int = 0
    violations: int = 0
    converse_counterexample: Optional[RawTuple] = None
    first_violation: Optional[RawTuple] = None

    def merge(self, other: "ScanReport") -> "ScanReport":
        """
        Combine two partial reports; self must cover the lexicographically earlier range.

        Args:
            other: Report over a later range

        Returns:
            ScanReport over both ranges
        """
        return ScanReport(
            ground=self.ground,
            total=self.total + other.total,
            antecedent_true=self.antecedent_true + other.antecedent_true,
            consequent_true=self.consequent_true + other.consequent_true,
            violations=self.violations + other.violations,
            converse_counterexample=self.converse_counterexample or other.converse_counterexample,
            first_violation=self.first_violation or other.first_violation,
        )

    def as_input(self, raw: RawTuple) -> BooleanDesarguesInput:
        subsets = [Subset(bits, self.ground) for bits in raw]
        return BooleanDesarguesInput(tuple(subsets[:3]), tuple(subsets[3:]), self.ground)


def evaluate_bits(a1: int, a2: int, a3: int, p1: int, p2: int, p3: int) -> Tuple[bool, bool]:
    """
    Antecedent and consequent of the implication on raw bitmasks.

    Returns:
        (C1 ^ C2 <= C3, frakB3 <= frakB1 v frakB2)
    """
    ante = ((a1 | p1) & (a2 | p2)) & ~(a3 | p3) == 0
    frak3 = (a1 | a2) & (p1 | p2)
    frak2 = (a1 | a3) & (p1 | p3)
    frak1 = (a2 | a3) & (p2 | p3)
    cons = frak3 & ~(frak1 | frak2) == 0
    return ante, cons


def _scan_range(size: int, first_values: List[int]) -> ScanReport:
    """Scan every raw tuple whose A1 lies in first_values, in lexicographic order."""
    ground = GroundSet(size)
    report = ScanReport(ground)
    count = 1 << size
    for a1 in first_values:
        for a2 in range(count):
            for a3 in range(count):
                if a1 == a2 or a1 == a3 or a2 == a3:
                    continue
                for p1 in range(count):
                    for p2 in range(count):
                        for p3 in range(count):
                            if p1 == p2 or p1 == p3 or p2 == p3:
                                continue
                            ante, cons = evaluate_bits(a1, a2, a3, p1, p2, p3)
                            report.total += 1
                            if ante:
                                report.antecedent_true += 1
                            if cons:
                                report.consequent_true += 1
                            if ante and not cons:
                                report.violations += 1
                                if report.first_violation is None:
                                    report.first_violation = (a1, a2, a3, p1, p2, p3)
                            elif cons and not ante and report.converse_counterexample is None:
                                report.converse_counterexample = (a1, a2, a3, p1, p2, p3)
    return report


def _partition(values: List[int], parts: int) -> List[List[int]]:
    """Split values into at most `parts` contiguous chunks, preserving order."""
    parts = max(1, min(parts, len(values)))
    size, extra = divmod(len(values), parts)
    chunks, start = [], 0
    for p in range(parts):
        end = start + size + (1 if p < extra else 0)
        chunks.append(values[start:end])
        start = end
    return chunks


def exhaustive_scan(ground: GroundSet, workers: int = 1) -> ScanReport:
    """
    Enumerate all (2^n)^6 raw six-tuples, keep those with distinct triplets, and count.

    The range of A1 is split into contiguous chunks; with workers > 1 each chunk runs in
    its own process and partial reports are merged in chunk order.

    Args:
        ground: Ground set with at most 4 elements
        workers: Number of worker processes

    Returns:
        ScanReport

    Raises:
        PreconditionError: If the ground set is too large to enumerate
    """
    if ground.size > MAX_SCAN_SIZE:
        raise PreconditionError(
            f"Exhaustive scan supports at most {MAX_SCAN_SIZE} elements, got {ground.size}"
        )
    chunks = _partition(list(range(1 << ground.size)), workers)
    logger.info(f"Scanning {(1 << ground.size) ** 6} raw tuples over n={ground.size} in {len(chunks)} chunk(s)")
    if workers > 1 and len(chunks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(_scan_range, [ground.size] * len(chunks), chunks))
    else:
        partials = [_scan_range(ground.size, chunk) for chunk in chunks]

    report = partials[0]
    for partial in partials[1:]:
        report = report.merge(partial)
    report.ground = ground
    logger.info(
        f"Scan done: total={report.total} antecedent_true={report.antecedent_true} "
        f"violations={report.violations}"
    )
    if report.violations:
        logger.error(f"Implication violated, first witness {report.first_violation}")
    return report
