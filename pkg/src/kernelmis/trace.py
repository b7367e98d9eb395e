"""Undo log of reduction events.

Each event records the local structure it destroyed and knows how to lift an
independent set of the graph after the event to one of the graph before it.
``gain`` is how much the event adds to the independence number.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import ClassVar, Union


@dataclass(frozen=True)
class SimplicialInclude:
    v: int
    removed: tuple[int, ...]
    gain: ClassVar[int] = 1

    def undo(self, mis: set[int]) -> None:
        mis.add(self.v)


@dataclass(frozen=True)
class Fold:
    v: int
    u: int
    w: int
    new_vertex: int
    new_neighbors: tuple[int, ...]
    gain: ClassVar[int] = 1

    def undo(self, mis: set[int]) -> None:
        if self.new_vertex in mis:
            mis.discard(self.new_vertex)
            mis.update((self.u, self.w))
        else:
            mis.add(self.v)


@dataclass(frozen=True)
class CriticalInclude:
    independent_set: tuple[int, ...]
    removed: tuple[int, ...]

    @property
    def gain(self) -> int:
        return len(self.independent_set)

    def undo(self, mis: set[int]) -> None:
        mis.update(self.independent_set)


@dataclass(frozen=True)
class LPInclude:
    included: tuple[int, ...]
    removed_neighbors: tuple[int, ...]

    @property
    def gain(self) -> int:
        return len(self.included)

    def undo(self, mis: set[int]) -> None:
        mis.update(self.included)


@dataclass(frozen=True)
class UnconfinedExclude:
    v: int
    gain: ClassVar[int] = 0

    def undo(self, mis: set[int]) -> None:
        pass


@dataclass(frozen=True)
class TwinInclude:
    u: int
    v: int
    neighborhood: tuple[int, ...]
    gain: ClassVar[int] = 2

    def undo(self, mis: set[int]) -> None:
        mis.update((self.u, self.v))


@dataclass(frozen=True)
class TwinGadget:
    u: int
    v: int
    neighborhood: tuple[int, ...]
    gadget: int
    gadget_neighbors: tuple[int, ...]
    gain: ClassVar[int] = 2

    def undo(self, mis: set[int]) -> None:
        # gadget chosen: no two-neighbor of u is in the set, so all of N(u) fits
        if self.gadget in mis:
            mis.discard(self.gadget)
            mis.update(self.neighborhood)
        else:
            mis.update((self.u, self.v))


@dataclass(frozen=True)
class FunnelResolve:
    a_set: tuple[int, ...]
    b_set: tuple[int, ...]
    c_set: tuple[int, ...]
    added_edges: tuple[tuple[int, int], ...]
    a_neighbors: tuple[int, ...]
    b_neighbors: tuple[int, ...]

    @property
    def gain(self) -> int:
        return len(self.a_set)

    def undo(self, mis: set[int]) -> None:
        gone = set(self.a_set) | set(self.b_set) | set(self.c_set)
        outer_a = set(self.a_neighbors) - gone
        mis.update(self.b_set if outer_a & mis else self.a_set)


Event = Union[
    SimplicialInclude, Fold, CriticalInclude, LPInclude,
    UnconfinedExclude, TwinInclude, TwinGadget, FunnelResolve,
]


@dataclass
class ReductionTrace:
    events: list[Event] = field(default_factory=list)
    offset: int = 0

    def record(self, event: Event) -> None:
        self.events.append(event)
        self.offset += event.gain

    def __len__(self) -> int:
        return len(self.events)

    def lift(self, mis) -> set[int]:
        """Replay events newest-first over an independent set of the kernel."""
        out = set(mis)
        for event in reversed(self.events):
            event.undo(out)
        return out
