"""Synthetic spike-matrix generator for fixtures and property tests.

Noise uses Python's ``random.Random`` (Mersenne Twister), so a given seed
reproduces the same matrix on every platform.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from hypercode.codes import Pattern
from hypercode.errors import ConfigError, ParseError


@dataclass(frozen=True)
class SynthSpec:
    n: int
    patterns: dict[str, Pattern]
    schedule: tuple[tuple[int, tuple[str, ...]], ...]  # (bin, pattern names)
    noise_rate: float = 0.0
    seed: int = 0

    def validate(self) -> None:
        if self.n < 0:
            raise ConfigError(f"n must be >= 0, got {self.n}")
        if not 0.0 <= self.noise_rate <= 1.0:
            raise ConfigError(f"noise_rate must be in [0, 1], got {self.noise_rate}")
        for name, p in self.patterns.items():
            if p.members and p.members[-1] >= self.n:
                raise ConfigError(f"pattern {name!r} exceeds n={self.n}")
        for _, names in self.schedule:
            for name in names:
                if name not in self.patterns:
                    raise ConfigError(f"schedule references undefined pattern {name!r}")

    @classmethod
    def from_json_obj(cls, obj: dict) -> "SynthSpec":
        try:
            spec = cls(
                n=int(obj["n"]),
                patterns={
                    name: Pattern.of(members) for name, members in obj["patterns"].items()
                },
                schedule=tuple(
                    (int(b), tuple(names)) for b, names in obj["schedule"]
                ),
                noise_rate=float(obj.get("noise_rate", 0.0)),
                seed=int(obj.get("seed", 0)),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed synth spec JSON: {exc}") from exc
        spec.validate()
        return spec


def synth_generate(spec: SynthSpec) -> list[list[int]]:
    """Build the n x (max bin + 1) spike matrix of a spec.

    Each scheduled bin activates the union of its patterns; every cell is
    then flipped independently with probability ``noise_rate``.  With
    noise 0 the matrix is the exact scheduled unions.
    """
    spec.validate()
    width = max((b for b, _ in spec.schedule), default=-1) + 1
    grid = [[0] * width for _ in range(spec.n)]
    for b, names in spec.schedule:
        for name in names:
            for i in spec.patterns[name]:
                grid[i][b] = 1
    if spec.noise_rate > 0:
        rng = random.Random(spec.seed)
        for i in range(spec.n):
            for j in range(width):
                if rng.random() < spec.noise_rate:
                    grid[i][j] ^= 1
    return grid


def matrix_to_csv(grid: list[list[int]]) -> str:
    return "\n".join(",".join(str(c) for c in row) for row in grid) + ("\n" if grid else "")
