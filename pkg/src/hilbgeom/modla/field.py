"""Prime-field configuration and the confirmation protocol for generic choices.

Every rank is computed modulo a prime near 2**62. Inputs with rational
coefficients have the same rank mod p unless p divides a nonzero minor, and
a random choice of "general" linear forms or points is special only on a
hypersurface of the parameter space. By the Schwartz-Zippel bound a single
run fails with probability at most (matrix size) / p, roughly 2**-50 at
desk scale. An answer is accepted only when ``confirmations`` runs with
independent primes and random draws agree.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterator, TypeVar

from sympy import isprime, prevprime

from hilbgeom.errors import DomainError, GenericityError

DEFAULT_PRIME = prevprime(2**62)  # 2**62 - 57

T = TypeVar("T")


@dataclass(frozen=True)
class RankEngineConfig:
    prime: int = DEFAULT_PRIME
    seed: int = 0
    confirmations: int = 2
    cap: int = 40

    def __post_init__(self):
        if self.confirmations < 1:
            raise DomainError("confirmations must be >= 1")
        if not (2**61 <= self.prime < 2**63) or not isprime(self.prime):
            raise DomainError("prime must be a prime in [2**61, 2**63)")

    def runs(self) -> Iterator[tuple[int, random.Random]]:
        """Yield (prime, rng) for each confirmation run, deterministically."""
        picker = random.Random(self.seed * 1_000_003 + 17)
        for k in range(self.confirmations):
            if k == 0:
                p = self.prime
            else:
                p = prevprime(picker.randrange(2**61 + 2**40, 2**62))
            yield p, random.Random(self.seed * 1_000_003 + k)

    def confirm(self, fn: Callable[[int, random.Random], T]) -> T:
        """Run ``fn(prime, rng)`` once per confirmation and insist on agreement."""
        results = [fn(p, rng) for p, rng in self.runs()]
        first = results[0]
        if any(r != first for r in results[1:]):
            raise GenericityError("generic choice unstable; raise confirmations")
        return first
