"""Set partitions of [n], integer partitions, and the refinement lattice."""

from __future__ import annotations

import itertools
from math import factorial
from typing import Iterator, NamedTuple, Sequence


class SetPartition:
    """A set partition of {1, ..., n} in canonical form.

    Blocks are stored sorted internally ascending and ordered by minimum
    element, which gives a total order usable as a dict key.
    """

    __slots__ = ("n", "blocks", "_hash")

    def __init__(self, n: int, blocks) -> None:
        if n < 1:
            raise ValueError("n must be positive")
        seen = set()
        cleaned = []
        for block in blocks:
            b = tuple(sorted(block))
            if not b:
                raise ValueError("empty block")
            cleaned.append(b)
            for x in b:
                if not 1 <= x <= n:
                    raise ValueError(f"element {x} outside 1..{n}")
                if x in seen:
                    raise ValueError(f"element {x} repeated")
                seen.add(x)
        if len(seen) != n:
            raise ValueError("blocks do not cover 1..n")
        self.n = n
        self.blocks = tuple(sorted(cleaned))
        self._hash = hash((n, self.blocks))

    @classmethod
    def singletons(cls, n: int) -> "SetPartition":
        return cls(n, [(i,) for i in range(1, n + 1)])

    @classmethod
    def whole(cls, n: int) -> "SetPartition":
        return cls(n, [range(1, n + 1)])

    @classmethod
    def from_string(cls, s: str) -> "SetPartition":
        """Parse "13/2" style text; elements comma-separated when n > 9."""
        blocks = []
        for part in s.split("/"):
            part = part.strip()
            if not part:
                raise ValueError(f"empty block in {s!r}")
            if "," in part:
                blocks.append(tuple(int(tok) for tok in part.split(",")))
            else:
                blocks.append(tuple(int(ch) for ch in part))
        n = sum(len(b) for b in blocks)
        return cls(n, blocks)

    def block_containing(self, x: int):
        for b in self.blocks:
            if x in b:
                return b
        raise ValueError(f"{x} not in ground set")

    def __eq__(self, other):
        return (
            isinstance(other, SetPartition)
            and self.n == other.n
            and self.blocks == other.blocks
        )

    def __lt__(self, other):
        return (self.n, self.blocks) < (other.n, other.blocks)

    def __hash__(self):
        return self._hash

    def __str__(self):
        sep = "," if self.n > 9 else ""
        return "/".join(sep.join(str(x) for x in b) for b in self.blocks)

    def __repr__(self):
        return f"SetPartition({self})"


class ClassKey(NamedTuple):
    """Equivalence-class label: block sizes plus the size of n's block."""

    lam: tuple
    last: int


def refines(sigma: SetPartition, pi: SetPartition) -> bool:
    """True iff every block of sigma is contained in some block of pi."""
    if sigma.n != pi.n:
        raise ValueError("mismatched ground sets")
    home = {}
    for idx, b in enumerate(pi.blocks):
        for x in b:
            home[x] = idx
    return all(len({home[x] for x in b}) == 1 for b in sigma.blocks)


def mobius_hat0(sigma: SetPartition) -> int:
    """Mobius value mu(0^, sigma) of the refinement lattice."""
    out = 1
    for b in sigma.blocks:
        k = len(b) - 1
        out *= (-1) ** k * factorial(k)
    return out


def oplus(pi: SetPartition, j: int) -> SetPartition:
    """Extend pi on [n-1] to [n]: put n with j, or alone when j == n."""
    n = pi.n + 1
    if not 1 <= j <= n:
        raise ValueError(f"j={j} out of range 1..{n}")
    if j == n:
        return SetPartition(n, pi.blocks + ((n,),))
    return SetPartition(
        n, tuple(b + (n,) if j in b else b for b in pi.blocks)
    )


def shift_concat(pi: SetPartition, sigma: SetPartition) -> SetPartition:
    """pi|sigma: sigma's elements shifted up by pi.n."""
    shift = pi.n
    shifted = tuple(tuple(x + shift for x in b) for b in sigma.blocks)
    return SetPartition(pi.n + sigma.n, pi.blocks + shifted)


def lambda_of(pi: SetPartition) -> tuple:
    """Block sizes, weakly decreasing."""
    return tuple(sorted((len(b) for b in pi.blocks), reverse=True))


def pi_factorial(pi: SetPartition) -> int:
    out = 1
    for b in pi.blocks:
        out *= factorial(len(b))
    return out


def class_key(pi: SetPartition) -> ClassKey:
    return ClassKey(lambda_of(pi), len(pi.block_containing(pi.n)))


def class_representative(key: ClassKey) -> SetPartition:
    """Partition with consecutive-run blocks, n's block placed last."""
    rest = list(key.lam)
    rest.remove(key.last)
    blocks = []
    start = 1
    for size in rest + [key.last]:
        blocks.append(tuple(range(start, start + size)))
        start += size
    return SetPartition(start - 1, blocks)


def partitions_of_set(elems: Sequence[int]) -> Iterator[tuple]:
    """All set partitions of the given elements, as tuples of tuples."""
    elems = tuple(elems)
    if not elems:
        yield ()
        return
    first, rest = elems[0], elems[1:]
    for sub in partitions_of_set(rest):
        for i, block in enumerate(sub):
            yield sub[:i] + ((first,) + block,) + sub[i + 1 :]
        yield ((first,),) + sub


def enumerate_partitions(n: int) -> Iterator[SetPartition]:
    """Every set partition of [n] once, in restricted-growth order."""
    if n < 1:
        raise ValueError("n must be positive")

    def rec(i, blocks):
        if i > n:
            yield SetPartition(n, blocks)
            return
        for k in range(len(blocks)):
            blocks[k].append(i)
            yield from rec(i + 1, blocks)
            blocks[k].pop()
        blocks.append([i])
        yield from rec(i + 1, blocks)
        blocks.pop()

    yield from rec(1, [])


def act(delta: Sequence[int], pi: SetPartition) -> SetPartition:
    """Relabel elements by the permutation delta (one-line notation)."""
    if sorted(delta) != list(range(1, pi.n + 1)):
        raise ValueError("delta is not a permutation of [n]")
    return SetPartition(
        pi.n, tuple(tuple(delta[x - 1] for x in b) for b in pi.blocks)
    )
