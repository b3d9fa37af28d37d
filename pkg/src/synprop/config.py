"""Resource ceilings for exhaustive enumeration."""

from __future__ import annotations

import os
from dataclasses import dataclass

ENV_MAX_BOUNDARY = "SYNPROP_MAX_BOUNDARY"


@dataclass(frozen=True)
class Limits:
    # Bell(10) = 115975 partitions; beyond this exhaustive suites stop being desk-scale.
    max_boundary: int = 10
    monotonicity_samples: int = 64

    @classmethod
    def from_env(cls) -> "Limits":
        raw = os.environ.get(ENV_MAX_BOUNDARY)
        if raw is None:
            return cls()
        return cls(max_boundary=int(raw))


def current_limits() -> Limits:
    return Limits.from_env()
