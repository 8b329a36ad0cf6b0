"""Set partitions of {1,...,n} and the non-crossing lattice NC(n).

Partitions are stored canonically: every block is sorted ascending and the
blocks themselves are ordered by their minimum element.  On top of the
canonical type this module provides

- the non-crossing predicate and the reverse-refinement order,
- the meet (common to NC(n) and the full partition lattice P(n)),
- both joins: the connectivity join of P(n) and the non-crossing join
  of NC(n),
- the trace permutation of a partition (increasing cycle on each block)
  and its inverse, the orbit partition of a permutation,
- deterministic enumeration of NC(n), of the even-block partitions
  NCE(m) and of the non-crossing pairings NCP(m).

Enumeration order is fixed by the lexicographic order of balanced
parenthesis strings ('(' < ')'); each string is read as a non-crossing
pairing of 2n points, which contracts to an element of NC(n) by collapsing
the interval [2i-1, 2i] back to the point i.  The order is part of the
public contract: parallel counting splits ranges of this exact stream.
"""

from __future__ import annotations

import math
from typing import Iterator, Sequence

# Ground sets are capped so that element-indexed scratch arrays and the
# pairwise bitmask tricks used by callers stay within one machine word.
MAX_GROUND_SET = 63


class SetPartition:
    """A partition of {1,...,n} in canonical form."""

    __slots__ = ("n", "blocks", "_block_of")

    def __init__(self, n: int, blocks):
        if not 1 <= n <= MAX_GROUND_SET:
            raise ValueError(f"ground-set size must be in 1..{MAX_GROUND_SET}, got {n}")
        canon = sorted(tuple(sorted(b)) for b in blocks)
        seen = [False] * (n + 1)
        for block in canon:
            if not block:
                raise ValueError("empty block")
            for e in block:
                if not isinstance(e, int) or not 1 <= e <= n:
                    raise ValueError(f"element {e!r} outside 1..{n}")
                if seen[e]:
                    raise ValueError(f"element {e} appears twice")
                seen[e] = True
        if not all(seen[1:]):
            raise ValueError("blocks do not cover the ground set")
        self.n = n
        self.blocks = tuple(canon)
        block_of = [0] * n
        for idx, block in enumerate(canon):
            for e in block:
                block_of[e - 1] = idx
        self._block_of = tuple(block_of)

    # -- constructors -------------------------------------------------

    @staticmethod
    def bottom(n: int) -> "SetPartition":
        """0_n: every element is a singleton."""
        return SetPartition(n, [(i,) for i in range(1, n + 1)])

    @staticmethod
    def top(n: int) -> "SetPartition":
        """1_n: one block containing everything."""
        return SetPartition(n, [tuple(range(1, n + 1))])

    @staticmethod
    def from_block_labels(labels: Sequence[int]) -> "SetPartition":
        """Partition of {1..len(labels)} grouping equal labels."""
        groups: dict[int, list[int]] = {}
        for pos, lab in enumerate(labels, start=1):
            groups.setdefault(lab, []).append(pos)
        return SetPartition(len(labels), list(groups.values()))

    @staticmethod
    def from_string(text: str) -> "SetPartition":
        """Parse the text form ``{1,2,4|3|5,6}``."""
        s = text.strip()
        if not (s.startswith("{") and s.endswith("}")):
            raise ValueError(f"partition text must be wrapped in braces: {text!r}")
        body = s[1:-1]
        if not body:
            raise ValueError("empty partition text")
        blocks = []
        for chunk in body.split("|"):
            items = [item.strip() for item in chunk.split(",")]
            if any(not item for item in items):
                raise ValueError(f"malformed block {chunk!r}")
            blocks.append(tuple(int(item) for item in items))
        n = max(max(b) for b in blocks)
        return SetPartition(n, blocks)

    # -- basic queries ------------------------------------------------

    def block_count(self) -> int:
        return len(self.blocks)

    def block_of(self, element: int) -> int:
        """Index (in canonical order) of the block containing ``element``."""
        return self._block_of[element - 1]

    def block_labels(self) -> tuple[int, ...]:
        """Canonical block index of each element 1..n."""
        return self._block_of

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SetPartition)
            and self.n == other.n
            and self.blocks == other.blocks
        )

    def __hash__(self) -> int:
        return hash((self.n, self.blocks))

    def __str__(self) -> str:
        return "{" + "|".join(",".join(str(e) for e in b) for b in self.blocks) + "}"

    def __repr__(self) -> str:
        return f"SetPartition.from_string({str(self)!r})"


class Permutation:
    """A bijection of {1,...,n}, stored as the tuple of images."""

    __slots__ = ("n", "images")

    def __init__(self, images: Sequence[int]):
        imgs = tuple(images)
        n = len(imgs)
        if n < 1:
            raise ValueError("permutation of an empty set")
        if sorted(imgs) != list(range(1, n + 1)):
            raise ValueError(f"images {imgs!r} are not a bijection of 1..{n}")
        self.n = n
        self.images = imgs

    @staticmethod
    def identity(n: int) -> "Permutation":
        return Permutation(range(1, n + 1))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, v in enumerate(self.images, start=1):
            inv[v - 1] = i
        return Permutation(inv)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)!r})"


# -- predicates and the partial order ----------------------------------


def is_noncrossing(p: SetPartition) -> bool:
    """True iff no a<b<c<d have a,c in one block and b,d in another."""
    return _find_crossing_blocks(p) is None


def leq(p: SetPartition, q: SetPartition) -> bool:
    """Reverse refinement: every block of p is inside some block of q."""
    if p.n != q.n:
        raise ValueError(f"ground-set mismatch: {p.n} vs {q.n}")
    qb = q._block_of
    for block in p.blocks:
        target = qb[block[0] - 1]
        for e in block[1:]:
            if qb[e - 1] != target:
                return False
    return True


def meet(p: SetPartition, q: SetPartition) -> SetPartition:
    """Greatest lower bound: non-empty pairwise block intersections."""
    if p.n != q.n:
        raise ValueError(f"ground-set mismatch: {p.n} vs {q.n}")
    groups: dict[tuple[int, int], list[int]] = {}
    pb, qb = p._block_of, q._block_of
    for e in range(1, p.n + 1):
        groups.setdefault((pb[e - 1], qb[e - 1]), []).append(e)
    return SetPartition(p.n, list(groups.values()))


def join_full(p: SetPartition, q: SetPartition) -> SetPartition:
    """Least upper bound in the full partition lattice P(n).

    Connectivity closure: i ~ j when they are linked through blocks of p
    and q in any alternation.
    """
    if p.n != q.n:
        raise ValueError(f"ground-set mismatch: {p.n} vs {q.n}")
    parent = list(range(p.n + 1))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for part in (p, q):
        for block in part.blocks:
            root = find(block[0])
            for e in block[1:]:
                r = find(e)
                if r != root:
                    parent[r] = root
    groups: dict[int, list[int]] = {}
    for e in range(1, p.n + 1):
        groups.setdefault(find(e), []).append(e)
    return SetPartition(p.n, list(groups.values()))


def _merge_crossings(partition: SetPartition) -> SetPartition:
    """Coarsen by merging crossing block pairs until non-crossing."""
    current = partition
    while True:
        clash = _find_crossing_blocks(current)
        if clash is None:
            return current
        a, b = clash
        blocks = list(current.blocks)
        merged = blocks[a] + blocks[b]
        rest = [blk for i, blk in enumerate(blocks) if i not in (a, b)]
        current = SetPartition(current.n, rest + [merged])


def _find_crossing_blocks(p: SetPartition) -> tuple[int, int] | None:
    """A pair of crossing blocks, or None if p is non-crossing.

    Linear scan with a stack of open blocks: a partition is non-crossing
    exactly when every element belongs to the innermost open block.
    """
    last = [b[-1] for b in p.blocks]
    stack: list[int] = []
    open_mask = 0
    for pos in range(1, p.n + 1):
        b = p._block_of[pos - 1]
        bit = 1 << b
        if stack and stack[-1] == b:
            pass
        elif open_mask & bit:
            return stack[-1], b
        else:
            stack.append(b)
            open_mask |= bit
        if pos == last[b]:
            stack.pop()
            open_mask &= ~bit
    return None


def join_nc(p: SetPartition, q: SetPartition) -> SetPartition:
    """Least upper bound in NC(n).

    Computed as the P(n) join followed by merging crossing block pairs to
    a fixpoint.  Every merge is forced (two crossing blocks must land in a
    common block of any non-crossing coarsening), so the fixpoint is the
    minimum non-crossing upper bound.
    """
    if not is_noncrossing(p):
        raise ValueError(f"{p} is not non-crossing")
    if not is_noncrossing(q):
        raise ValueError(f"{q} is not non-crossing")
    return _merge_crossings(join_full(p, q))


# -- trace permutations -------------------------------------------------


def trace_permutation(p: SetPartition) -> Permutation:
    """Increasing cycle on each block: i1 -> i2 -> ... -> ik -> i1."""
    images = [0] * p.n
    for block in p.blocks:
        for a, b in zip(block, block[1:]):
            images[a - 1] = b
        images[block[-1] - 1] = block[0]
    return Permutation(images)


def orbits(t: Permutation) -> SetPartition:
    """Cycle decomposition of a permutation, as a partition."""
    seen = [False] * (t.n + 1)
    blocks = []
    for start in range(1, t.n + 1):
        if seen[start]:
            continue
        cycle = []
        x = start
        while not seen[x]:
            seen[x] = True
            cycle.append(x)
            x = t.images[x - 1]
        blocks.append(cycle)
    return SetPartition(t.n, blocks)


def orbit_count(t: Permutation) -> int:
    seen = [False] * (t.n + 1)
    count = 0
    for start in range(1, t.n + 1):
        if seen[start]:
            continue
        count += 1
        x = start
        while not seen[x]:
            seen[x] = True
            x = t.images[x - 1]
    return count


# -- enumeration --------------------------------------------------------


def catalan(n: int) -> int:
    """C_n = (2n)! / (n! (n+1)!), exactly."""
    if n < 0:
        raise ValueError("catalan is defined for n >= 0")
    return math.comb(2 * n, n) // (n + 1)


def _balanced_strings(n: int) -> Iterator[list[int]]:
    """Matched-partner arrays of balanced parenthesis strings of length 2n,
    in lexicographic order with '(' < ')'.

    Yields partner[x] = position matched with x (0-based).  The yielded
    list is reused between iterations; callers must copy if they keep it.
    """
    m = 2 * n
    partner = [0] * m
    stack: list[int] = []

    def rec(pos: int, opens: int) -> Iterator[list[int]]:
        if pos == m:
            yield partner
            return
        if opens < n:
            stack.append(pos)
            yield from rec(pos + 1, opens + 1)
            stack.pop()
        if len(stack) > 0:
            a = stack.pop()
            partner[a] = pos
            partner[pos] = a
            yield from rec(pos + 1, opens)
            stack.append(a)

    yield from rec(0, 0)


def _pairing_to_nc(partner: Sequence[int], n: int) -> SetPartition:
    """Contract a non-crossing pairing of 2n points to an element of NC(n).

    The pairing is the doubled picture of a unique non-crossing partition:
    the partner of the even point 2i is 2*P(i)-1 for the trace permutation
    P of that partition, so P is read off directly and its orbits are the
    blocks.  Matched parentheses always join points of opposite parity,
    which makes the division exact.
    """
    images = [0] * n
    for j in range(n):
        images[j] = partner[2 * j + 1] // 2 + 1
    return orbits(Permutation(images))


def enumerate_nc(n: int) -> Iterator[SetPartition]:
    """All of NC(n), exactly once, in the documented deterministic order."""
    if n < 1:
        raise ValueError("enumerate_nc needs n >= 1")
    for partner in _balanced_strings(n):
        yield _pairing_to_nc(partner, n)


def enumerate_ncp(m: int) -> Iterator[SetPartition]:
    """All non-crossing pairings of {1..m} (m even), deterministic order."""
    if m < 2 or m % 2:
        raise ValueError(f"non-crossing pairings need a positive even ground set, got {m}")
    for partner in _balanced_strings(m // 2):
        blocks = [(a + 1, partner[a] + 1) for a in range(m) if partner[a] > a]
        yield SetPartition(m, blocks)


def enumerate_nce(m: int) -> Iterator[SetPartition]:
    """Elements of NC(m) whose blocks all have even size (m even)."""
    if m < 2 or m % 2:
        raise ValueError(f"even-block partitions need a positive even ground set, got {m}")
    for p in enumerate_nc(m):
        if all(len(b) % 2 == 0 for b in p.blocks):
            yield p


def kernel(values: Sequence[int]) -> SetPartition:
    """Kernel partition of a tuple: i ~ j iff values[i] == values[j]."""
    if not values:
        raise ValueError("kernel of an empty tuple")
    return SetPartition.from_block_labels(list(values))
