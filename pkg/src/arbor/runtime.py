"""Round accounting for simulated LOCAL-model runs, and reproducible random streams.

Algorithms here are executed centrally. Each phase declares how far it reads
(its radius) and how many times it repeats; the ledger turns that into a round
count. Randomness comes from streams derived by label so that the result of a
cluster computation does not depend on the order clusters are processed in.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np


@dataclass(frozen=True)
class Phase:
    label: str
    radius: int
    reps: int = 1

    @property
    def rounds(self) -> int:
        return self.radius * self.reps


@dataclass
class RoundLedger:
    phases: list[Phase] = field(default_factory=list)

    @property
    def total_rounds(self) -> int:
        return sum(p.rounds for p in self.phases)

    def charge(self, label: str, radius: int, reps: int = 1) -> "RoundLedger":
        if radius < 0:
            raise ValueError("radius must be nonnegative")
        if reps < 1:
            raise ValueError("repetitions must be at least 1")
        self.phases.append(Phase(label, int(radius), int(reps)))
        return self

    def extend(self, other: "RoundLedger", prefix: str = "") -> "RoundLedger":
        for p in other.phases:
            self.phases.append(Phase(prefix + p.label, p.radius, p.reps))
        return self

    def charge_parallel(self, label: str, parts: Iterable["RoundLedger"]) -> "RoundLedger":
        """Charge concurrently executed sub-runs as one phase costing the slowest of them."""
        return self.charge(label, merge_parallel(parts))

    def to_json(self) -> dict:
        return {"phases": [{"label": p.label, "radius": p.radius, "reps": p.reps} for p in self.phases],
                "total_rounds": self.total_rounds}

    @classmethod
    def from_json(cls, doc) -> "RoundLedger":
        return cls([Phase(p["label"], p["radius"], p["reps"]) for p in doc["phases"]])

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def charge_phase(ledger: RoundLedger, label: str, radius: int, repetitions: int = 1) -> RoundLedger:
    return ledger.charge(label, radius, repetitions)


def merge_parallel(parts: Iterable[RoundLedger]) -> int:
    """Rounds taken by sub-runs executed side by side (max, so order-independent)."""
    return max((p.total_rounds for p in parts), default=0)


def _label_key(label: str) -> int:
    return int.from_bytes(hashlib.blake2b(label.encode(), digest_size=4).digest(), "little")


@dataclass(frozen=True)
class RandomStream:
    """Pure function of (root_seed, path). ``derive`` extends the path."""

    root_seed: int
    path: tuple[tuple[str, int], ...] = ()

    def derive(self, label: str, index: int = 0) -> "RandomStream":
        return RandomStream(self.root_seed, self.path + ((label, int(index)),))

    def generator(self) -> np.random.Generator:
        key = []
        for label, index in self.path:
            key += [_label_key(label), index & 0xFFFFFFFF, (index >> 32) & 0xFFFFFFFF]
        seq = np.random.SeedSequence(entropy=self.root_seed & (2**64 - 1), spawn_key=tuple(key))
        return np.random.Generator(np.random.PCG64(seq))


def derive_stream(s: RandomStream, label: str, index: int = 0) -> RandomStream:
    return s.derive(label, index)


def as_stream(stream) -> RandomStream:
    """Accept a RandomStream, an int seed, or None (seed 0)."""
    if stream is None:
        return RandomStream(0)
    if isinstance(stream, RandomStream):
        return stream
    return RandomStream(int(stream))
