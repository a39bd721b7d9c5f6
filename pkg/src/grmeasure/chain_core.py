"""Finite posets, the lexicographic order on chains and induced chain length functions.

A *measure* is the image of a chain under a length function: a strictly
increasing tuple of positive :class:`~fractions.Fraction` values.  Chains are
compared with the lexicographic order in which the chain whose first differing
value is *smaller* is the greater one, and every proper extension of a chain is
greater than the chain itself.  ``l_star(x)`` is the maximum of that order over
all chains ending in ``x``.
"""

from __future__ import annotations

import enum
from collections.abc import Callable, Hashable, Iterable, Iterator, Mapping, Sequence
from fractions import Fraction

from .errors import LengthFunctionError, OracleBudgetError, PosetError

Measure = tuple[Fraction, ...]
Filtration = tuple[Hashable, ...]

ORACLE_CHAIN_LIMIT = 2**20


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def lex_compare(a: Sequence[Fraction], b: Sequence[Fraction]) -> Ordering:
    """Compare two measures under the chain order.

    >>> lex_compare((1, 3, 4), (1, 2, 4))
    <Ordering.LESS: -1>
    >>> lex_compare((1,), (1, 2))
    <Ordering.LESS: -1>
    """
    for x, y in zip(a, b):
        if x != y:
            return Ordering.GREATER if x < y else Ordering.LESS
    if len(a) == len(b):
        return Ordering.EQUAL
    return Ordering.GREATER if len(a) > len(b) else Ordering.LESS


def lex_key(measure: Sequence[Fraction]) -> tuple[Fraction, ...]:
    """Sort key realising the chain order with plain tuple comparison."""
    return tuple(-v for v in measure)


def lex_max(measures: Iterable[Sequence[Fraction]]) -> Measure:
    return tuple(max(measures, key=lex_key))


def is_measure(values: Sequence[Fraction]) -> bool:
    return all(v > 0 for v in values) and all(x < y for x, y in zip(values, values[1:]))


class FinitePoset:
    """A finite poset given by its Hasse diagram.

    ``elements`` fixes the element indices used for deterministic ordering;
    ``covers`` lists ``(lower, upper)`` pairs.  The constructor rejects cyclic
    cover graphs and cover pairs that are implied by a longer path.
    """

    def __init__(self, elements: Iterable[Hashable], covers: Iterable[tuple[Hashable, Hashable]]):
        self.elements: tuple[Hashable, ...] = tuple(elements)
        self.index: dict[Hashable, int] = {}
        for i, e in enumerate(self.elements):
            if e in self.index:
                raise PosetError(f"duplicate element {e!r}")
            self.index[e] = i
        n = len(self.elements)
        self._down: list[list[int]] = [[] for _ in range(n)]
        self._up: list[list[int]] = [[] for _ in range(n)]
        seen = set()
        for lower, upper in covers:
            i, j = self._idx(lower), self._idx(upper)
            if i == j:
                raise PosetError(f"cover pair ({lower!r}, {upper!r}) is a loop")
            if (i, j) in seen:
                continue
            seen.add((i, j))
            self._up[i].append(j)
            self._down[j].append(i)
        for adj in (*self._up, *self._down):
            adj.sort()
        self._below = self._strict_down_sets()
        for i, j in seen:
            # j covers i only if no other lower cover of j lies above i
            if any((self._below[k] >> i) & 1 for k in self._down[j] if k != i):
                raise PosetError(
                    f"({self.elements[i]!r}, {self.elements[j]!r}) is implied by a longer path"
                )

    def _idx(self, x: Hashable) -> int:
        try:
            return self.index[x]
        except (KeyError, TypeError):
            raise PosetError(f"unknown element {x!r}") from None

    def _strict_down_sets(self) -> list[int]:
        n = len(self.elements)
        indeg = [len(self._down[j]) for j in range(n)]
        order = [j for j in range(n) if indeg[j] == 0]
        for j in order:
            for k in self._up[j]:
                indeg[k] -= 1
                if indeg[k] == 0:
                    order.append(k)
        if len(order) != n:
            raise PosetError("cover graph contains a cycle")
        below = [0] * n
        for j in order:
            for i in self._down[j]:
                below[j] |= below[i] | (1 << i)
        return below

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: object) -> bool:
        try:
            return x in self.index
        except TypeError:
            return False

    def leq(self, x: Hashable, y: Hashable) -> bool:
        i, j = self._idx(x), self._idx(y)
        return i == j or bool((self._below[j] >> i) & 1)

    def lower_covers(self, x: Hashable) -> list[Hashable]:
        return [self.elements[i] for i in self._down[self._idx(x)]]

    def upper_covers(self, x: Hashable) -> list[Hashable]:
        return [self.elements[i] for i in self._up[self._idx(x)]]

    def is_cover(self, x: Hashable, y: Hashable) -> bool:
        return self._idx(x) in self._down[self._idx(y)]

    def strictly_below(self, x: Hashable) -> list[Hashable]:
        mask = self._below[self._idx(x)]
        return [e for i, e in enumerate(self.elements) if (mask >> i) & 1]

    def minimal_elements(self) -> list[Hashable]:
        return [e for i, e in enumerate(self.elements) if not self._down[i]]

    def covers(self) -> list[tuple[Hashable, Hashable]]:
        return [
            (self.elements[i], self.elements[j])
            for j in range(len(self.elements))
            for i in self._down[j]
        ]

    def position_key(self, chain: Iterable[Hashable]) -> tuple[int, ...]:
        return tuple(self.index[x] for x in chain)

    def __repr__(self) -> str:
        return f"FinitePoset({len(self.elements)} elements, {sum(map(len, self._down))} covers)"


def order_leq(poset: FinitePoset, x: Hashable, y: Hashable) -> bool:
    return poset.leq(x, y)


def check_length_function(
    poset: FinitePoset, length: Mapping[Hashable, Fraction], elements: Iterable[Hashable] | None = None
) -> None:
    """Raise :class:`LengthFunctionError` unless ``length`` is positive and strictly monotone.

    Strict monotonicity along cover pairs implies it for the whole order.
    """
    elements = poset.elements if elements is None else elements
    for y in elements:
        if y not in length:
            raise LengthFunctionError(f"no length for element {y!r}", upper=y)
        if length[y] <= 0:
            raise LengthFunctionError(f"length of {y!r} is not positive", upper=y)
        for x in poset.lower_covers(y):
            if not length[x] < length[y]:
                raise LengthFunctionError(
                    f"{x!r} < {y!r} but length {length[x]} is not below {length[y]}",
                    lower=x,
                    upper=y,
                )


def chain_values(length: Mapping[Hashable, Fraction], chain: Iterable[Hashable]) -> Measure:
    return tuple(sorted(length[x] for x in chain))


def l_star(poset: FinitePoset, length: Mapping[Hashable, Fraction], x: Hashable) -> Measure:
    """Induced chain length of ``x``: ``{l(x)}`` joined with the largest ``l*`` of a lower cover."""
    ideal = poset.strictly_below(x) + [x]
    check_length_function(poset, length, ideal)
    memo: dict[Hashable, Measure] = {}
    # a strictly larger element has a strictly larger down-set, so this order is bottom-up
    for y in sorted(ideal, key=lambda e: len(poset.strictly_below(e))):
        below = [memo[z] for z in poset.lower_covers(y)]
        memo[y] = (lex_max(below) if below else ()) + (length[y],)
    return memo[x]


def all_filtrations(poset: FinitePoset, x: Hashable) -> list[Filtration]:
    """Every cover chain from a minimal element up to ``x``, ordered by element index sequence."""
    poset._idx(x)
    memo: dict[Hashable, list[Filtration]] = {}

    def down(y: Hashable) -> list[Filtration]:
        if y not in memo:
            lower = poset.lower_covers(y)
            if not lower:
                memo[y] = [(y,)]
            else:
                memo[y] = [f + (y,) for z in lower for f in down(z)]
        return memo[y]

    return sorted(down(x), key=poset.position_key)


def greedy_max_filtrations(
    minimals: Iterable[Hashable],
    upper_covers: Callable[[Hashable], Iterable[Hashable]],
    length: Callable[[Hashable], Fraction],
    target: Hashable,
    below_target: Callable[[Hashable], bool] = lambda _: True,
) -> list[Filtration]:
    """Level-synchronous greedy search for the maximal filtrations of ``target``.

    All live branches share the same value sequence.  Each round extends every
    branch by the covers of minimal length (within the ideal of ``target``) and
    keeps only those of globally minimal length, so ties branch instead of
    being broken arbitrarily.  Unordered: callers sort.
    """
    starts = [m for m in minimals if below_target(m)]
    if not starts:
        raise PosetError(f"no minimal element below {target!r}")
    best = min(length(m) for m in starts)
    branches: list[Filtration] = [(m,) for m in starts if length(m) == best]
    while branches[0][-1] != target:
        extensions = [b + (z,) for b in branches for z in upper_covers(b[-1]) if below_target(z)]
        if not extensions:
            raise PosetError(f"branch {branches[0]!r} cannot be extended towards {target!r}")
        best = min(length(e[-1]) for e in extensions)
        branches = [e for e in extensions if length(e[-1]) == best]
    # equal lengths force equal elements at the target, so every branch has stopped
    assert all(b[-1] == target for b in branches)
    return branches


def max_filtrations(poset: FinitePoset, length: Mapping[Hashable, Fraction], x: Hashable) -> list[Filtration]:
    """All filtrations of ``x`` whose value chain equals ``l_star(x)``."""
    check_length_function(poset, length, poset.strictly_below(x) + [x])
    found = greedy_max_filtrations(
        poset.minimal_elements(),
        poset.upper_covers,
        length.__getitem__,
        x,
        lambda z: poset.leq(z, x),
    )
    return sorted(found, key=poset.position_key)


def iter_chains_ending_at(poset: FinitePoset, x: Hashable, limit: int = ORACLE_CHAIN_LIMIT) -> Iterator[Filtration]:
    """Yield every finite chain with maximum ``x`` (not only cover chains)."""
    count = 0

    def rec(top: Hashable, suffix: Filtration) -> Iterator[Filtration]:
        nonlocal count
        count += 1
        if count > limit:
            raise OracleBudgetError(f"more than {limit} chains end at {x!r}")
        yield suffix
        for y in poset.strictly_below(top):
            yield from rec(y, (y,) + suffix)

    yield from rec(x, (x,))


def oracle_l_star(
    poset: FinitePoset, length: Mapping[Hashable, Fraction], x: Hashable, limit: int = ORACLE_CHAIN_LIMIT
) -> Measure:
    """Exhaustive maximum of the chain values over all chains with maximum ``x``."""
    check_length_function(poset, length, poset.strictly_below(x) + [x])
    return lex_max(chain_values(length, c) for c in iter_chains_ending_at(poset, x, limit))
