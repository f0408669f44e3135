"""Run configuration for the command-line frontend."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction

DIM_HARD_CAP = 10
CACHE_ENV_VAR = "TAUTINT_CACHE"


@dataclass
class Config:
    cache_path: str | None = None
    gmax: int = 3
    dimmax: int = 4
    rmax: int = 3
    s_min: int = -3
    s_max: int = 4
    x_samples: tuple = (Fraction(1), Fraction(-1), Fraction(1, 2))
    fmt: str = "text"  # text | json | csv
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.dimmax > DIM_HARD_CAP:
            raise ValueError(f"dimension bound capped at {DIM_HARD_CAP}")
        if min(self.gmax, self.dimmax, self.rmax, self.jobs) < 0 or self.jobs < 1:
            raise ValueError("bounds must be positive")
        if self.cache_path is None:
            self.cache_path = os.environ.get(CACHE_ENV_VAR) or None
