"""
Base lattice object.
"""
from abc import ABC, abstractmethod
from typing import Generic, TypeVar

from utils.exceptions import PreconditionError
from utils.logger import logger

E = TypeVar("E")


class BaseLattice(ABC, Generic[E]):
    """Base class for the bounded complemented lattices of the toolkit."""

    @abstractmethod
    def bottom(self) -> E:
        """Least element."""

    @abstractmethod
    def top(self) -> E:
        """Greatest element."""

    @abstractmethod
    def join(self, a: E, b: E) -> E:
        """Least upper bound (logical OR)."""

    @abstractmethod
    def meet(self, a: E, b: E) -> E:
        """Greatest lower bound (logical AND)."""

    @abstractmethod
    def leq(self, a: E, b: E) -> bool:
        """Partial order."""

    @abstractmethod
    def complement(self, a: E) -> E:
        """Complement (logical NOT)."""

    def modularity_check(self, h1: E, h2: E, h3: E) -> bool:
        """
        Check h1 v (h2 ^ h3) = (h1 v h2) ^ h3 for h1 below h3.

        Args:
            h1: Lower element
            h2: Arbitrary element
            h3: Upper element

        Returns:
            bool: True if the modular law holds for the triple

        Raises:
            PreconditionError: If h1 is not below h3
        """
        if not self.leq(h1, h3):
            logger.error("Modularity check called with h1 not below h3")
            raise PreconditionError("modularity_check requires leq(h1, h3)")
        lhs = self.join(h1, self.meet(h2, h3))
        rhs = self.meet(self.join(h1, h2), h3)
        return lhs == rhs

    def is_distributive_triple(self, x: E, y: E, z: E) -> bool:
        """Check x ^ (y v z) = (x ^ y) v (x ^ z)."""
        return self.meet(x, self.join(y, z)) == self.join(self.meet(x, y), self.meet(x, z))

    def absorption_holds(self, a: E, b: E) -> bool:
        return self.join(a, self.meet(a, b)) == a and self.meet(a, self.join(a, b)) == a

    def de_morgan_holds(self, a: E, b: E) -> bool:
        c = self.complement
        return (c(self.meet(a, b)) == self.join(c(a), c(b))
                and c(self.join(a, b)) == self.meet(c(a), c(b)))
