"""The graded poset on juggling sequences.

Two sequences are adjacent when merging a throw at time i to height j with a
throw at time i+j to height k into a single throw at time i to height j+k
turns one into the other; in root terms, chained parts e_a - e_b, e_b - e_c
fuse into e_a - e_c.  The poset is graded by throw count with the
fewest-throw sequence at the bottom (splitting a throw steps up); that
orientation is the one whose characteristic polynomial factors as a power of
q - 1 on binary start states.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .bijection import gamma_inverse
from .errors import DomainError, InvariantViolation
from .juggling import enumerate_sequences
from .kostant import Partition, make_partition, partition_parts
from .roots import eminus


@dataclass(frozen=True)
class JugglingPoset:
    sequences: tuple
    partitions: tuple
    covers: tuple  # (below, above) index pairs; above has one throw more
    ranks: tuple

    def __len__(self):
        return len(self.sequences)

    @property
    def top_rank(self) -> int:
        return max(self.ranks)


def build_poset(a, b, n: int, capacity=None) -> JugglingPoset:
    """Construct the poset on all sequences from a to b of length n."""
    seqs = enumerate_sequences(a, b, n, capacity)
    if not seqs:
        raise DomainError("no juggling sequences exist for these parameters")
    partitions = [gamma_inverse(s) for s in seqs]
    index = {p: k for k, p in enumerate(partitions)}
    min_throws = min(len(s.throws) for s in seqs)
    ranks = tuple(len(s.throws) - min_throws for s in seqs)
    covers = set()
    for k, part in enumerate(partitions):
        roots = sorted(set(partition_parts(part)), key=lambda r: r.sort_key())
        counts = dict(part)
        for first in roots:
            for second in roots:
                if first.j != second.i:
                    continue
                merged = _merge(counts, first, second)
                other = index.get(merged)
                if other is None:
                    raise InvariantViolation(
                        f"merge of {first} and {second} left the sequence set")
                covers.add((other, k))
    for lo, hi in covers:
        if ranks[hi] != ranks[lo] + 1:
            raise InvariantViolation("cover does not raise rank by one")
    return JugglingPoset(tuple(seqs), tuple(partitions), tuple(sorted(covers)), ranks)


def _merge(counts, first, second) -> Partition:
    parts = []
    for root, mult in counts.items():
        mult -= (root == first) + (root == second)
        parts.extend([root] * mult)
    parts.append(eminus(first.i, second.j))
    return make_partition(parts)


def _strictly_below(poset: JugglingPoset):
    """Bitmask per element of everything strictly below it."""
    n = len(poset)
    below = [0] * n
    order = sorted(range(n), key=lambda k: poset.ranks[k])
    covers_into: dict[int, list[int]] = {}
    for lo, hi in poset.covers:
        covers_into.setdefault(hi, []).append(lo)
    for x in order:
        mask = 0
        for lo in covers_into.get(x, ()):
            mask |= below[lo] | (1 << lo)
        below[x] = mask
    return below


def minimal_elements(poset: JugglingPoset) -> list[int]:
    uppers = {hi for _, hi in poset.covers}
    return [k for k in range(len(poset)) if k not in uppers]


def mobius_from_bottom(poset: JugglingPoset) -> list[int]:
    """Mobius values from the unique minimal element to every element."""
    minima = minimal_elements(poset)
    if len(minima) != 1:
        names = ", ".join(str(poset.partitions[k]) for k in sorted(minima))
        raise DomainError(f"poset has {len(minima)} minimal elements: {names}")
    below = _strictly_below(poset)
    n = len(poset)
    mobius = [0] * n
    for x in sorted(range(n), key=lambda k: poset.ranks[k]):
        if below[x] == 0:
            mobius[x] = 1
            continue
        total = 0
        mask = below[x]
        y = 0
        while mask:
            if mask & 1:
                total += mobius[y]
            mask >>= 1
            y += 1
        mobius[x] = -total
    return mobius


def characteristic_polynomial(poset: JugglingPoset) -> tuple[int, ...]:
    """Coefficients, ascending in q, of sum_x mu(bottom, x) q^(top - rank x)."""
    mobius = mobius_from_bottom(poset)
    top = poset.top_rank
    coeffs = [0] * (top + 1)
    for x, value in enumerate(mobius):
        coeffs[top - poset.ranks[x]] += value
    return tuple(coeffs)


def binomial_power_coefficients(k: int) -> tuple[int, ...]:
    """Coefficients of (q - 1)^k, ascending."""
    return tuple(comb(k, j) * (-1) ** (k - j) for j in range(k + 1))


def poset_dot(poset: JugglingPoset) -> str:
    """The cover graph in DOT format, bottom to top."""
    lines = ["digraph juggling_poset {", "  rankdir=BT;"]
    for k, part in enumerate(poset.partitions):
        label = " ".join(str(r) for r in partition_parts(part)) or "(empty)"
        lines.append(f'  n{k} [label="{label}"];')
    for lo, hi in poset.covers:
        lines.append(f"  n{lo} -> n{hi};")
    lines.append("}")
    return "\n".join(lines)
