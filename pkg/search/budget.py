"""
Node Budget
Caps the number of branch-and-bound node expansions
"""

import logging
from enum import Enum

from core.exceptions import RangeViolationError

logger = logging.getLogger(__name__)


class BudgetState(Enum):
    """Budget states"""
    ACTIVE = "active"        # Expansions still allowed
    EXHAUSTED = "exhausted"  # Limit reached, search must stop


class NodeBudget:
    """
    Expansion counter with a hard limit

    Once the limit is reached the budget stays EXHAUSTED until reset.
    """

    def __init__(self, limit: int):
        """
        Initialize node budget

        Args:
            limit: Maximum node expansions, at least 1
        """
        if limit < 1:
            raise RangeViolationError(f"budget must be positive, got {limit}")
        self.limit = limit
        self.used = 0
        self.state = BudgetState.ACTIVE

        logger.info(f"Node Budget initialized with {limit} expansions")

    def consume(self) -> bool:
        """
        Spend one expansion

        Returns:
            False once the budget is exhausted
        """
        if self.state == BudgetState.EXHAUSTED:
            return False
        if self.used >= self.limit:
            self._transition_to_exhausted()
            return False
        self.used += 1
        return True

    @property
    def remaining(self) -> int:
        return self.limit - self.used

    def is_exhausted(self) -> bool:
        return self.state == BudgetState.EXHAUSTED

    def _transition_to_exhausted(self):
        logger.warning(f"Node budget: {self.state.value} -> EXHAUSTED after {self.used} expansions")
        self.state = BudgetState.EXHAUSTED

    def reset(self):
        """Restore the full budget"""
        self.used = 0
        self.state = BudgetState.ACTIVE
        logger.debug("Node budget reset")

    def get_state(self):
        """Get current budget state"""
        return {
            'state': self.state.value,
            'limit': self.limit,
            'used': self.used,
            'remaining': self.remaining,
        }
