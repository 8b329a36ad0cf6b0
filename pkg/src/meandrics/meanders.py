"""Meandric systems built from pairs of non-crossing partitions.

A pair (top, bottom) in NC(n)^2 determines two arch systems on 2n points
via the doubling construction (point i of the original picture becomes the
interval [2i-1, 2i]).  Drawing the top arches above and the bottom arches
below a line produces a family of closed curves; these curves are the
orbits of an explicit permutation of {1,...,2n}, which is what this module
manipulates.  The interesting predicates:

- a *meander* has a single curve through all 2n points;
- an *irreducible* system leaves no proper subinterval of {1,...,2n}
  invariant;
- a *strictly non-crossing* system has a non-crossing orbit partition.

Irreducibility can be read off either from the interval scan, from the
doubled pairings (their NC(2n) join is full), or from the lattice data of
the original pair (join full, meet trivial); all three routes are exposed
so they can be checked against each other.
"""

from __future__ import annotations

from .partitions import (
    Permutation,
    SetPartition,
    is_noncrossing,
    join_full,
    join_nc,
    meet,
    orbits,
    trace_permutation,
)


def doubling(p: SetPartition) -> SetPartition:
    """The doubled picture of p: a non-crossing pairing of 2n points.

    The even point 2i is paired with 2*P(i)-1, where P is the trace
    permutation of p.
    """
    if not is_noncrossing(p):
        raise ValueError(f"{p} is not non-crossing")
    t = trace_permutation(p)
    pairs = [(2 * i, 2 * t(i) - 1) for i in range(1, p.n + 1)]
    return SetPartition(2 * p.n, pairs)


def doubling_inverse(a: SetPartition) -> SetPartition:
    """The unique p in NC(n) whose doubled picture is the pairing a."""
    if a.n % 2:
        raise ValueError(f"pairings live on an even ground set, got {a.n}")
    if any(len(b) != 2 for b in a.blocks):
        raise ValueError(f"{a} is not a pairing")
    if not is_noncrossing(a):
        raise ValueError(f"{a} is not non-crossing")
    n = a.n // 2
    partner = [0] * a.n
    for x, y in a.blocks:
        partner[x - 1] = y
        partner[y - 1] = x
    images = [0] * n
    for i in range(1, n + 1):
        mate = partner[2 * i - 1]  # partner of the even point 2i
        if mate % 2 == 0:
            raise ValueError(f"{a} pairs two points of the same parity")
        images[i - 1] = (mate + 1) // 2
    return orbits(Permutation(images))


class MeandricSystem:
    """The curves drawn by a top and a bottom partition in NC(n)."""

    __slots__ = ("n", "top", "bottom", "perm", "orbit_partition")

    def __init__(self, top: SetPartition, bottom: SetPartition):
        if top.n != bottom.n:
            raise ValueError(f"ground-set mismatch: {top.n} vs {bottom.n}")
        if not is_noncrossing(top):
            raise ValueError(f"top {top} is not non-crossing")
        if not is_noncrossing(bottom):
            raise ValueError(f"bottom {bottom} is not non-crossing")
        n = top.n
        t_top = trace_permutation(top)
        t_bot = trace_permutation(bottom)
        inv_top = t_top.inverse()
        images = [0] * (2 * n)
        for i in range(1, n + 1):
            images[2 * i - 2] = 2 * inv_top(i)      # odd point 2i-1
            images[2 * i - 1] = 2 * t_bot(i) - 1    # even point 2i
        self.n = n
        self.top = top
        self.bottom = bottom
        self.perm = Permutation(images)
        self.orbit_partition = orbits(self.perm)

    def __repr__(self) -> str:
        return f"MeandricSystem(top={self.top}, bottom={self.bottom})"

    def describe(self) -> str:
        """Multi-line text rendering: both arch systems plus the orbits."""
        lines = [
            f"bridges: {2 * self.n}",
            f"top arches:    {doubling(self.top)}",
            f"bottom arches: {doubling(self.bottom)}",
            f"orbits: {self.orbit_partition}",
            f"components: {component_count(self)}",
            f"meander: {is_meander(self)}",
            f"irreducible: {is_irreducible_direct(self)}",
            f"strictly non-crossing: {is_strictly_noncrossing(self)}",
        ]
        return "\n".join(lines)


def build_meandric(p: SetPartition, r: SetPartition) -> MeandricSystem:
    return MeandricSystem(p, r)


def component_count(m: MeandricSystem) -> int:
    return m.orbit_partition.block_count()


def is_meander(m: MeandricSystem) -> bool:
    return component_count(m) == 1


def is_strictly_noncrossing(m: MeandricSystem) -> bool:
    return is_noncrossing(m.orbit_partition)


def is_irreducible_direct(m: MeandricSystem) -> bool:
    """No proper subinterval of {1,...,2n} is invariant under the curves.

    A set is invariant exactly when it is simultaneously a union of top
    arches and of bottom arches, so from each starting point the scan
    grows the smallest interval closed under both partner maps; finding
    any proper closed interval means the system is reducible.  Closed
    intervals are unions of arches, hence of even size, so only intervals
    [a,b] with b-a odd ever complete.
    """
    two_n = 2 * m.n
    top_partner = _partner_array(doubling(m.top))
    bot_partner = _partner_array(doubling(m.bottom))
    for start in range(1, two_n + 1):
        end = max(top_partner[start - 1], bot_partner[start - 1])
        if end < start:
            continue  # an arch reaches left of start: no interval here
        x = start
        closed = True
        while x <= end:
            a, b = top_partner[x - 1], bot_partner[x - 1]
            if a < start or b < start:
                closed = False
                break
            if a > end:
                end = a
            if b > end:
                end = b
            x += 1
        if closed and (end - start) < two_n - 1:
            return False
    return True


def _partner_array(pairing: SetPartition) -> list[int]:
    partner = [0] * pairing.n
    for x, y in pairing.blocks:
        partner[x - 1] = y
        partner[y - 1] = x
    return partner


def is_irreducible_lattice(p: SetPartition, r: SetPartition) -> bool:
    """Lattice form of irreducibility: join is full and meet is trivial."""
    n = p.n
    return (
        join_nc(p, r) == SetPartition.top(n)
        and meet(p, r) == SetPartition.bottom(n)
    )


def is_irreducible_doubled(p: SetPartition, r: SetPartition) -> bool:
    """Doubled form of irreducibility: NC(2n) join of the pairings is full."""
    return join_nc(doubling(p), doubling(r)) == SetPartition.top(2 * p.n)


def meander_criterion_fulljoin(p: SetPartition, r: SetPartition) -> bool:
    """Meander test via the full partition lattice on the doubled points."""
    return join_full(doubling(p), doubling(r)) == SetPartition.top(2 * p.n)
