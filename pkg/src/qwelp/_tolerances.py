"""Numerical tolerance knobs used across the package.

All identity checks, orthonormality validation and solver thresholds read
from a single record so that callers can tighten or relax everything
consistently (e.g. the CLI's --tol flag).
"""
from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Tolerances:
    orthonormality: float = 1e-10     # codeword Gram matrix vs identity
    identity: float = 1e-9            # exact algebraic identities (MacWilliams, residuals)
    lemma: float = 1e-8               # connection/compression identity residuals
    completeness: float = 1e-10       # sum_W W^dag W = I for full channels
    feasibility: float = 1e-8         # LP primal feasibility
    certificate: float = 1e-7         # Farkas certificate margin
    strict_positive: float = 1e-9     # "strictly positive" objective threshold

    def scaled(self, factor: float) -> "Tolerances":
        return replace(
            self,
            orthonormality=self.orthonormality * factor,
            identity=self.identity * factor,
            lemma=self.lemma * factor,
            completeness=self.completeness * factor,
            feasibility=self.feasibility * factor,
            certificate=self.certificate * factor,
            strict_positive=self.strict_positive * factor,
        )


DEFAULT = Tolerances()
