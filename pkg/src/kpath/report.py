from __future__ import annotations

import hashlib
import json
import random
from dataclasses import asdict, dataclass
from typing import Optional

ALGORITHMS = ("dfs", "color-coding", "divide-color", "count-ie", "count-colorful", "algebraic")

U64 = (1 << 64) - 1


def derive_seed(seed: int, *path: int) -> int:
    """Counter-based child seed: depends only on the parent seed and the index path."""
    h = hashlib.blake2b(digest_size=8)
    h.update((seed & U64).to_bytes(8, "little"))
    for p in path:
        h.update(int(p).to_bytes(8, "little", signed=True))
    return int.from_bytes(h.digest(), "little")


def trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(derive_seed(seed, trial))


@dataclass
class TrialReport:
    algorithm: str
    k: int
    seed: int
    trials_run: int
    decision: str
    witness: Optional[list[int]] = None
    count: Optional[int] = None
    wall_time: float = 0.0

    def __post_init__(self):
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algorithm!r}")
        if self.decision not in ("YES", "NO"):
            raise ValueError(f"decision must be YES or NO, got {self.decision!r}")
        if self.witness is not None:
            if self.decision != "YES":
                raise ValueError("witness present on a NO report")
            self.witness = list(self.witness)

    @property
    def yes(self) -> bool:
        return self.decision == "YES"

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))
