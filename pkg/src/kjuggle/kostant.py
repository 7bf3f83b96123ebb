"""Partitions of a weight into positive roots: enumeration and counting.

A partition is stored as a canonically sorted tuple of (root, multiplicity)
pairs.  Counting walks the allowed roots in canonical order, bounding each
multiplicity by the coordinates the remaining roots can no longer raise, so
multisets are produced exactly once.
"""

from __future__ import annotations

from .errors import DomainError
from .roots import MINUS, PLUS, SINGLE, Root, root_to_weight

Partition = tuple  # tuple[tuple[Root, int], ...]


def canonical_roots(roots) -> tuple[Root, ...]:
    """Deduplicate and sort a root collection into canonical order."""
    return tuple(sorted(set(roots), key=Root.sort_key))


def partition_weight(partition: Partition, ambient: int) -> tuple[int, ...]:
    """Sum of the parts of a partition, as a coordinate vector."""
    total = [0] * ambient
    for root, mult in partition:
        for k, x in enumerate(root_to_weight(root, ambient)):
            total[k] += mult * x
    return tuple(total)


def partition_parts(partition: Partition):
    """Expand a partition into its parts, repeating by multiplicity."""
    for root, mult in partition:
        for _ in range(mult):
            yield root


def make_partition(parts) -> Partition:
    """Build the canonical (root, multiplicity) form from an iterable of roots."""
    counts: dict[Root, int] = {}
    for root in parts:
        counts[root] = counts.get(root, 0) + 1
    return tuple(sorted(counts.items(), key=lambda it: it[0].sort_key()))


def _max_mult(root: Root, w) -> int:
    """Largest multiplicity of `root` that can still lead to a zero residual.

    Later canonical roots never raise the coordinates consumed here, so the
    bound is exact: a negative bound means the branch is dead.
    """
    if root.kind == MINUS:
        return w[root.i - 1]
    if root.kind == PLUS:
        return min(w[root.i - 1], w[root.j - 1])
    if root.kind == SINGLE:
        return w[root.i - 1]
    return w[root.i - 1] // 2


def _subtract(w, root: Root, mult: int):
    out = list(w)
    if root.kind == MINUS:
        out[root.i - 1] -= mult
        out[root.j - 1] += mult
    elif root.kind == PLUS:
        out[root.i - 1] -= mult
        out[root.j - 1] -= mult
    elif root.kind == SINGLE:
        out[root.i - 1] -= mult
    else:
        out[root.i - 1] -= 2 * mult
    return tuple(out)


def _check_ambient(target, roots):
    ambient = len(target)
    for root in roots:
        top = root.j if root.kind in (MINUS, PLUS) else root.i
        if top > ambient:
            raise DomainError(f"root {root} does not fit in ambient dimension {ambient}")
    return ambient


def count_partitions(target, allowed) -> int:
    """Number of multisets of allowed roots summing to the target weight.

    The empty weight has exactly one partition (the empty one).
    """
    target = tuple(target)
    roots = canonical_roots(allowed)
    _check_ambient(target, roots)
    n = len(roots)
    # Position of the first non-MINUS root; from there on every coordinate
    # of the residual must be nonnegative.
    first_mixed = next((k for k, r in enumerate(roots) if r.kind != MINUS), n)
    memo: dict = {}

    def rec(idx, w):
        if not any(w):
            return 1
        if idx == n:
            return 0
        key = (idx, w)
        cached = memo.get(key)
        if cached is not None:
            return cached
        root = roots[idx]
        if idx >= first_mixed and min(w) < 0:
            memo[key] = 0
            return 0
        if root.kind == MINUS:
            # Pure e_i - e_j root sets never touch coordinates below i again.
            if first_mixed == n and any(w[k] for k in range(root.i - 1)):
                memo[key] = 0
                return 0
            if w[root.i - 1] < 0:
                memo[key] = 0
                return 0
        bound = _max_mult(root, w)
        total = 0
        for mult in range(bound + 1):
            total += rec(idx + 1, _subtract(w, root, mult) if mult else w)
        memo[key] = total
        return total

    return rec(0, target)


def enumerate_partitions(target, allowed) -> list[Partition]:
    """All partitions of the target into allowed roots, canonically ordered."""
    target = tuple(target)
    roots = canonical_roots(allowed)
    _check_ambient(target, roots)
    n = len(roots)
    first_mixed = next((k for k, r in enumerate(roots) if r.kind != MINUS), n)
    found: list[Partition] = []
    chosen: list[tuple[Root, int]] = []

    def rec(idx, w):
        if not any(w):
            found.append(tuple(chosen))
            return
        if idx == n:
            return
        root = roots[idx]
        if idx >= first_mixed and min(w) < 0:
            return
        if root.kind == MINUS:
            if first_mixed == n and any(w[k] for k in range(root.i - 1)):
                return
            if w[root.i - 1] < 0:
                return
        bound = _max_mult(root, w)
        for mult in range(bound + 1):
            if mult:
                chosen.append((root, mult))
            rec(idx + 1, _subtract(w, root, mult) if mult else w)
            if mult:
                chosen.pop()

    rec(0, target)
    found.sort(key=lambda p: tuple((r.sort_key(), m) for r, m in p))
    return found


def type_a_reachable(weight) -> bool:
    """Whether a weight is a nonnegative sum of e_i - e_j roots: all prefix
    sums nonnegative and total zero."""
    acc = 0
    for x in weight:
        acc += x
        if acc < 0:
            return False
    return acc == 0


def count_capacity_restricted(target, allowed, initial, capacity: int) -> int:
    """Partitions of the target into e_i - e_j roots obeying the hand-capacity
    inequality: for every coordinate j, initial_j plus the number of parts
    with negative entry at j stays at most the capacity.
    """
    target = tuple(target)
    roots = canonical_roots(allowed)
    ambient = _check_ambient(target, roots)
    if any(r.kind != MINUS for r in roots):
        raise DomainError("capacity-restricted counting is defined only for e_i - e_j roots")
    if capacity < 1:
        raise DomainError("capacity must be a positive integer")
    initial = tuple(initial)
    budgets = tuple(capacity - (initial[k] if k < len(initial) else 0) for k in range(ambient))
    if min(budgets, default=0) < 0:
        return 0
    n = len(roots)
    memo: dict = {}

    def rec(idx, w, bud):
        if not any(w):
            return 1
        if idx == n:
            return 0
        key = (idx, w, bud)
        cached = memo.get(key)
        if cached is not None:
            return cached
        root = roots[idx]
        if w[root.i - 1] < 0 or any(w[k] for k in range(root.i - 1)):
            memo[key] = 0
            return 0
        bound = min(w[root.i - 1], bud[root.j - 1])
        total = 0
        for mult in range(bound + 1):
            if mult:
                nb = list(bud)
                nb[root.j - 1] -= mult
                total += rec(idx + 1, _subtract(w, root, mult), tuple(nb))
            else:
                total += rec(idx + 1, w, bud)
        memo[key] = total
        return total

    return rec(0, target, budgets)
