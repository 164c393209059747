"""
Data of the worked H(5) example: input vectors, expected derived rays, projector tables
at four decimals, the input state and the expected measurement results.
"""
from dataclasses import dataclass, field
from typing import List, Tuple

Vec = List[str]


@dataclass(frozen=True)
class PaperExample:
    """Embedded expected values of the H(5) example."""
    D: int = 5
    TRIANGLE: Tuple[Vec, ...] = (
        ["0", "1", "1+1j", "2", "0"],
        ["0", "1", "0", "2", "0"],
        ["0", "1", "1+1j", "0", "0"],
    )
    TRIANGLE_PRIME: Tuple[Vec, ...] = (
        ["0", "1", "3", "2", "0"],
        ["0", "1-1j", "1+1j", "2", "0"],
        ["0", "1-1j", "-1-1j", "4-2j", "0"],
    )
    CENTER: Vec = field(default_factory=lambda: ["0", "2-1j", "0", "4-2j", "0"])
    CROSS_POINTS: Tuple[Vec, ...] = (
        ["0", "1-1j", "-1-1j", "4-2j", "0"],
        ["0", "1", "1+1j", "3", "0"],
        ["0", "1", "3", "2", "0"],
    )
    # (a_i, b_i) with a_i h_i + b_i h'_i = center
    CROSS_LINE_COEFFICIENTS: Tuple[Tuple[str, str], ...] = (
        ("3", "-1-1j"),
        ("2-1j", "0"),
        ("1", "1"),
    )
    # basis the example uses for Pi(H3)
    H3_BASIS: Tuple[Vec, ...] = (
        ["0", "1", "1+1j", "0", "0"],
        ["0", "1-1j", "-1-1j", "4-2j", "0"],
    )
    PI_H3: Tuple[Tuple[complex, ...], ...] = (
        (0, 0, 0, 0, 0),
        (0, 0.4286, 0.2857 - 0.2857j, 0.2857, 0),
        (0, 0.2857 + 0.2857j, 0.7143, -0.1429 - 0.1429j, 0),
        (0, 0.2857, -0.1429 + 0.1429j, 0.8571, 0),
        (0, 0, 0, 0, 0),
    )
    PI_H1_MEET_H2: Tuple[Tuple[complex, ...], ...] = (
        (0, 0, 0, 0, 0),
        (0, 0.2, 0, 0.4, 0),
        (0, 0, 0, 0, 0),
        (0, 0.4, 0, 0.8, 0),
        (0, 0, 0, 0, 0),
    )
    PI_FRAK_H3: Tuple[Tuple[complex, ...], ...] = (
        (0, 0, 0, 0, 0),
        (0, 0.0714, 0.2143, 0.1429, 0),
        (0, 0.2143, 0.6429, 0.4286, 0),
        (0, 0.1429, 0.4286, 0.2857, 0),
        (0, 0, 0, 0, 0),
    )
    PI_FRAK_H1_JOIN_H2: Tuple[Tuple[complex, ...], ...] = (
        (0, 0, 0, 0, 0),
        (0, 0.1017, 0.1186 + 0.0339j, 0.2712 - 0.0508j, 0),
        (0, 0.1186 - 0.0339j, 0.9831, -0.0339 + 0.0169j, 0),
        (0, 0.2712 + 0.0508j, -0.0339 - 0.0169j, 0.9153, 0),
        (0, 0, 0, 0, 0),
    )
    STATE: Tuple[float, ...] = (0.2294, 0.4588, 0.2294, 0.6882, 0.4588)
    P1: float = 0.673
    P2: float = 0.454
    Q1: float = 1.0
    Q2: float = 1.0
    S_COLLAPSED: Tuple[float, ...] = (0, 0.4472, 0, 0.8944, 0)
    T_COLLAPSED: Tuple[float, ...] = (0, 0.2673, 0.8018, 0.5345, 0)


PAPER_EXAMPLE = PaperExample()
