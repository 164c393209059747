"""
Tolerance constants used by the float mirror, the measurement simulator and the
worked-example checks.

Exact arithmetic decides every lattice predicate; the values below only apply where
floating point is involved.
"""
from dataclasses import dataclass, asdict
from typing import Dict


@dataclass(frozen=True)
class Tolerances:
    """Centralized tolerance table."""
    RAY_FIDELITY: float = 1e-9            # |<a|b>|^2 >= 1 - RAY_FIDELITY means same ray
    PAPER_DECIMAL: float = 1e-3           # probabilities quoted to three decimals
    PROJECTOR_TABLE: float = 5e-5         # projector tables quoted to four decimals
    ZERO_PROBABILITY: float = 1e-12       # below this a 'yes' outcome cannot collapse
    PROBABILITY_IMAG: float = 1e-10       # largest admissible imaginary part of <s|P|s>
    PROBABILITY_OVERSHOOT: float = 1e-12  # probability may exceed 1 by at most this
    STATE_NORM: float = 1e-9              # normalized states deviate from 1 by at most this
    STATE_RENORMALIZE: float = 1e-3       # input states within this of norm 1 are renormalized
    EIGENSTATE: float = 1e-8              # ||P s - s|| below this means eigenstate
    FLOAT_RANK: float = 1e-10             # relative pivot threshold of the float rank
    PROBABILITY_SUM: float = 1e-10        # p(yes) + p(no) must equal 1 within this
    COLLAPSED_FIDELITY: float = 1e-6      # collapsed rays of the worked example
    SURVIVAL: float = 1e-6                # stage-one probability needed in correlation suites

    @classmethod
    def as_dict(cls) -> Dict[str, float]:
        """Return the table as a plain dict keyed by constant name."""
        return asdict(cls())


TOLERANCES = Tolerances()
