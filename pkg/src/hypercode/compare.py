"""Levelwise comparison of two hyperstructures over the same neuron universe."""

from __future__ import annotations

from dataclasses import dataclass

from hypercode.errors import UniverseError
from hypercode.homology import betti
from hypercode.hyperstructure import Hyperstructure, canonical_form
from hypercode.topology import NerveConfig, level_complex, nerve


@dataclass(frozen=True)
class LevelComparison:
    level: int
    size_a: int
    size_b: int
    shared: int
    jaccard: float
    map_status: str
    betti_a: tuple[int, ...]
    betti_b: tuple[int, ...]


@dataclass(frozen=True)
class ComparisonReport:
    n: int
    levels: tuple[LevelComparison, ...]
    nerve_betti_a: tuple[int, ...] | None = None
    nerve_betti_b: tuple[int, ...] | None = None

    def to_json_obj(self) -> dict:
        obj: dict = {
            "n": self.n,
            "levels": [
                {
                    "level": lc.level,
                    "size_a": lc.size_a,
                    "size_b": lc.size_b,
                    "shared": lc.shared,
                    "jaccard": lc.jaccard,
                    "map_status": lc.map_status,
                    "betti_a": list(lc.betti_a),
                    "betti_b": list(lc.betti_b),
                }
                for lc in self.levels
            ],
        }
        if self.nerve_betti_a is not None:
            obj["nerve"] = {
                "betti_a": list(self.nerve_betti_a),
                "betti_b": list(self.nerve_betti_b or ()),
            }
        return obj

    def to_table(self) -> str:
        header = ("level", "|A|", "|B|", "shared", "jaccard", "map", "betti_A", "betti_B")
        rows = [header]
        for lc in self.levels:
            rows.append(
                (
                    str(lc.level),
                    str(lc.size_a),
                    str(lc.size_b),
                    str(lc.shared),
                    f"{lc.jaccard:.3f}",
                    lc.map_status,
                    ",".join(map(str, lc.betti_a)),
                    ",".join(map(str, lc.betti_b)),
                )
            )
        widths = [max(len(r[c]) for r in rows) for c in range(len(header))]
        lines = ["  ".join(cell.ljust(w) for cell, w in zip(row, widths)) for row in rows]
        if self.nerve_betti_a is not None:
            lines.append(
                "nerve betti: A=(%s)  B=(%s)"
                % (
                    ",".join(map(str, self.nerve_betti_a)),
                    ",".join(map(str, self.nerve_betti_b or ())),
                )
            )
        return "\n".join(lines) + "\n"


def _map_status(size_a: int, size_b: int, shared: int) -> str:
    if shared == size_a == size_b:
        return "bijective"
    if shared == size_a:
        return "injective-only(A->B)"
    if shared == size_b:
        return "injective-only(B->A)"
    return "neither"


def compare_levels(
    a: Hyperstructure, b: Hyperstructure, with_nerve: bool = False
) -> ComparisonReport:
    """Match bonds levelwise by canonical-form equality and report sizes.

    Levels present in only one structure are reported with the other side
    empty.  Canonical forms are unique within a level, so the matching is
    a partial bijection by construction.
    """
    if a.n != b.n:
        raise UniverseError(f"neuron universes differ: {a.n} != {b.n}")
    levels = []
    for i in range(1, max(a.k, b.k) + 1):
        forms_a = (
            {canonical_form(a, i, bond.id) for bond in a.level(i)} if i <= a.k else set()
        )
        forms_b = (
            {canonical_form(b, i, bond.id) for bond in b.level(i)} if i <= b.k else set()
        )
        shared = len(forms_a & forms_b)
        denom = len(forms_a) + len(forms_b) - shared
        jaccard = shared / denom if denom else 1.0
        betti_a = tuple(betti(level_complex(a, i))) if i <= a.k else ()
        betti_b = tuple(betti(level_complex(b, i))) if i <= b.k else ()
        levels.append(
            LevelComparison(
                level=i,
                size_a=len(forms_a),
                size_b=len(forms_b),
                shared=shared,
                jaccard=jaccard,
                map_status=_map_status(len(forms_a), len(forms_b), shared),
                betti_a=betti_a,
                betti_b=betti_b,
            )
        )
    nerve_a = nerve_b = None
    if with_nerve:
        nerve_a = tuple(betti(nerve(a, NerveConfig())))
        nerve_b = tuple(betti(nerve(b, NerveConfig())))
    return ComparisonReport(
        n=a.n, levels=tuple(levels), nerve_betti_a=nerve_a, nerve_betti_b=nerve_b
    )
