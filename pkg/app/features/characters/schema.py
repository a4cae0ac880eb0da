"""
Characters Schema Definitions

Verma flags and truncated characters.
"""

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from app.features.weights.schema import Weight

Triple = tuple[int, int, int]


@dataclass(frozen=True)
class VermaFlag:
    """
    Multiset of Verma modules, keyed by rho-shifted label.

    Entries are kept sorted by label and never store a zero multiplicity.
    Intermediate results of ``minus`` may carry negative multiplicities;
    ``is_effective`` tells them apart from genuine flags.
    """

    entries: tuple[tuple[Weight, int], ...] = ()

    @classmethod
    def of(cls, mapping: Mapping[Triple, int] | Iterable[Triple]) -> "VermaFlag":
        counts = Counter(mapping) if not isinstance(mapping, Mapping) else mapping
        return cls(tuple(sorted((Weight(*w), m) for w, m in counts.items() if m)))

    def as_dict(self) -> dict[Weight, int]:
        return dict(self.entries)

    def multiplicity(self, f: Triple) -> int:
        return self.as_dict().get(Weight(*f), 0)

    def __contains__(self, f: object) -> bool:
        return isinstance(f, tuple) and self.multiplicity(f) != 0

    def __iter__(self) -> Iterator[tuple[Weight, int]]:
        return iter(self.entries)

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def support(self) -> list[Weight]:
        return [w for w, _ in self.entries]

    @property
    def length(self) -> int:
        """Total multiplicity."""
        return sum(m for _, m in self.entries)

    @property
    def is_effective(self) -> bool:
        return all(m > 0 for _, m in self.entries)

    def scaled(self, factor: int) -> "VermaFlag":
        return VermaFlag.of({w: m * factor for w, m in self.entries})

    def plus(self, other: "VermaFlag") -> "VermaFlag":
        total = Counter(self.as_dict())
        for w, m in other.entries:
            total[w] += m
        return VermaFlag.of(total)

    def minus(self, other: "VermaFlag") -> "VermaFlag":
        return self.plus(other.scaled(-1))

    def negated(self) -> "VermaFlag":
        return VermaFlag.of({-w: m for w, m in self.entries})

    def mirrored(self) -> "VermaFlag":
        return VermaFlag.of({Weight(w.x, w.z, w.y): m for w, m in self.entries})

    def payload(self) -> dict[str, int]:
        """{"x,y,z": multiplicity} in lexicographic order of the labels."""
        return {w.render(): m for w, m in self.entries}


@dataclass(frozen=True)
class TruncatedCharacter:
    """Formal character cut off at a root height below the anchor."""

    anchor: Triple
    height: int
    coefficients: tuple[tuple[Triple, int], ...]

    @classmethod
    def of(cls, anchor: Triple, height: int, coefficients: Mapping[Triple, int]) -> "TruncatedCharacter":
        return cls(tuple(anchor), height, tuple(sorted((tuple(w), c) for w, c in coefficients.items() if c)))

    def as_dict(self) -> dict[Triple, int]:
        return dict(self.coefficients)

    def coefficient(self, weight: Triple) -> int:
        return self.as_dict().get(tuple(weight), 0)

    def payload(self) -> list[dict]:
        return [{"weight": list(w), "coefficient": c} for w, c in self.coefficients]
