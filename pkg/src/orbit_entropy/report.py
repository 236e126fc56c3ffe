"""Result record for exact identity checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

__all__ = ["IdentityReport"]


@dataclass(frozen=True)
class IdentityReport:
    """Both sides of a checked identity; works for ints, fractions, and
    polynomials alike."""

    lhs: Any
    rhs: Any

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs

    @property
    def residual(self) -> Any:
        return self.lhs - self.rhs
