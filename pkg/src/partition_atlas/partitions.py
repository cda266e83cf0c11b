"""Integer partitions: canonical enumeration, conjugation, text format."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing sequence of positive integers.

    The total ``n`` is computed once at construction. Instances are
    immutable and hashable, so they can be shared freely across threads
    and used as dictionary keys.
    """

    parts: tuple[int, ...]
    n: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        parts = tuple(int(p) for p in self.parts)
        if not parts:
            raise ValueError("a partition has at least one part (n >= 1)")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing, got {a} before {b}")
        if parts[-1] < 1:
            raise ValueError(f"parts must be positive, got {parts[-1]}")
        object.__setattr__(self, "parts", parts)
        object.__setattr__(self, "n", sum(parts))

    @property
    def largest(self) -> int:
        return self.parts[0]

    @property
    def length(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __str__(self) -> str:
        return format_partition(self)

    def conjugate(self) -> "Partition":
        """Reflect the Ferrers diagram: part j of the result counts parts >= j."""
        parts = self.parts
        out = []
        count = len(parts)
        for j in range(1, parts[0] + 1):
            while parts[count - 1] < j:
                count -= 1
            out.append(count)
        return Partition(tuple(out))

    def is_self_conjugate(self) -> bool:
        return self.conjugate().parts == self.parts


@dataclass(frozen=True)
class PartitionIndex:
    """Position of a partition in the canonical enumeration for one total."""

    n: int
    index: int


@lru_cache(maxsize=None)
def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of ``n``, in reverse-lexicographic order.

    The first entry is ``(n)`` and the last is ``(1^n)``; the position of
    a partition in the returned tuple is its canonical vertex index.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    return tuple(Partition(t) for t in _partition_tuples(n))


def _partition_tuples(n: int) -> list[tuple[int, ...]]:
    out = []
    cur = [n]
    while True:
        out.append(tuple(cur))
        i = len(cur) - 1
        while i >= 0 and cur[i] == 1:
            i -= 1
        if i < 0:
            return out
        cur[i] -= 1
        rem = len(cur) - i  # freed units: the trailing ones plus the decrement
        del cur[i + 1 :]
        while rem > 0:
            t = min(cur[i], rem)
            cur.append(t)
            rem -= t


@lru_cache(maxsize=None)
def canonical_index(n: int) -> dict[tuple[int, ...], int]:
    """Parts tuple -> position in the canonical enumeration. Do not mutate."""
    return {p.parts: i for i, p in enumerate(enumerate_partitions(n))}


def format_partition(p: Partition) -> str:
    """Render as comma-separated parts with no spaces, e.g. ``"4,2,1"``."""
    return ",".join(str(x) for x in p.parts)


def parse_partition(text: str) -> Partition:
    """Parse the ``"4,2,1"`` form; rejects anything not already canonical.

    Input that is not weakly decreasing is an error, never silently
    re-sorted, so caller-side ordering bugs stay visible.
    """
    parts = []
    for token in text.strip().split(","):
        if not token.isdigit() or str(int(token)) != token or int(token) < 1:
            raise ValueError(f"invalid partition part {token!r} in {text!r}")
        parts.append(int(token))
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise ValueError(f"parts not weakly decreasing at token {b!r} in {text!r}")
    return Partition(tuple(parts))


def partition_count(n: int) -> int:
    """Number of partitions of ``n``, by the pentagonal-number recurrence.

    Shares no code with :func:`enumerate_partitions`; used as an
    independent cross-check on the enumeration.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    counts = [1]
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 == 1 else -1
            total += sign * counts[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * counts[m - g2]
            k += 1
        counts.append(total)
    return counts[n]
