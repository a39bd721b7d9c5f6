"""Thin representations, handled through their supports.

A thin representation has every vertex space of dimension at most one.  Over
acyclic quivers with tree supports it is determined up to isomorphism by its
support, and its indecomposable subrepresentations correspond to the elements
of the subobject poset of that support.  Lengths on the category are given by
their values on simples; the length of a module is the dimension-weighted sum.

No function here takes a field: every answer is computed from supports alone.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from fractions import Fraction

from . import chain_core
from .chain_core import Measure, Ordering, lex_compare
from .errors import DisconnectedSupportError, FiltrationError, HypothesisError, UnsupportedSupportError
from .quiver_poset import (
    Arrow,
    Quiver,
    SupportClass,
    SupportQuiver,
    canonical,
    components,
    covers_above,
    forward_closure,
    full_support,
    is_connected,
    is_subobject_element,
    materialize_poset,
    minimal_elements,
    set_weight,
    support_of,
    weight_lengths,
)

SimpleLengths = Mapping[str, Fraction]
DimVector = dict[str, int]
SupportFiltration = tuple[frozenset, ...]


@dataclass(frozen=True)
class ThinRep:
    """A thin representation in canonical form (identity maps on its support)."""

    quiver: Quiver
    support: SupportQuiver

    def __post_init__(self) -> None:
        if not self.support.vertices <= set(self.quiver.vertices):
            raise HypothesisError("support is not inside the ambient quiver")
        if not self.support.arrows <= set(self.quiver.arrows):
            raise HypothesisError("support arrows are not arrows of the ambient quiver")

    @classmethod
    def on(cls, quiver: Quiver, vertices: Iterable[str], zero_arrows: Iterable[str] = ()) -> ThinRep:
        return cls(quiver, support_of(quiver, vertices, zero_arrows))

    @classmethod
    def simple(cls, quiver: Quiver, vertex: str) -> ThinRep:
        return cls.on(quiver, [vertex])

    @property
    def vertices(self) -> frozenset[str]:
        return self.support.vertices

    def dim_vector(self) -> DimVector:
        return {v: int(v in self.support.vertices) for v in sorted(self.quiver.vertices)}


def _has_cycle(support: SupportQuiver) -> bool:
    # a forest has |E| = |V| - (number of components)
    return len(support.arrows) != len(support.vertices) - len(components(support.vertices, support.arrows))


def is_indecomposable(rep: ThinRep) -> bool:
    return is_connected(rep.support)


def iso_equal(n: ThinRep, n2: ThinRep) -> bool:
    """Isomorphism test for thin representations whose supports have no cycles."""
    if _has_cycle(n.support) or _has_cycle(n2.support):
        raise HypothesisError("isomorphism by support equality needs cycle-free supports")
    return n.quiver == n2.quiver and n.support == n2.support


def embeds(n: ThinRep, m: ThinRep) -> bool:
    """Whether there is a monomorphism ``n -> m``.

    Requires both indecomposable and ``n`` with a tree support.  True exactly when
    ``n``'s support is the full induced subquiver of ``m``'s support on a vertex set
    closed under arrow targets inside ``m``.
    """
    if not (is_indecomposable(n) and is_indecomposable(m)):
        raise HypothesisError("embedding test needs indecomposable representations")
    if _has_cycle(n.support):
        raise HypothesisError("embedding test needs a tree support for the subobject")
    if n.quiver != m.quiver:
        return False
    xs = n.support.vertices
    if not xs <= m.support.vertices:
        return False
    return n.support.arrows == m.support.induced_arrows(xs) and forward_closure(m.support, xs) == xs


def length_of(rep: ThinRep | Mapping[str, int], lengths: SimpleLengths) -> Fraction:
    """Length as the dimension-weighted sum of the values on simples.

    Accepts a representation or a plain dimension vector (entries may exceed 1 here,
    e.g. ``[1, 1, 2, 1]``).
    """
    dims = rep.dim_vector() if isinstance(rep, ThinRep) else rep
    total = Fraction(0)
    for v, d in dims.items():
        if d < 0:
            raise ValueError(f"negative dimension at vertex {v}")
        if d:
            total += d * Fraction(lengths[v])
    return total


def measurable_support(rep: ThinRep) -> SupportQuiver:
    if not is_indecomposable(rep):
        raise DisconnectedSupportError("representation is decomposable (support not connected)")
    if rep.support.classification is SupportClass.OTHER:
        raise UnsupportedSupportError("support is neither a tree nor a cycle")
    return rep.support


def _check_lengths(rep: ThinRep, lengths: SimpleLengths) -> None:
    for v in rep.support.vertices:
        if v not in lengths:
            raise HypothesisError(f"no length for the simple at {v}")
        if lengths[v] <= 0:
            raise HypothesisError(f"length of the simple at {v} must be positive")


def gr_filtrations(rep: ThinRep, lengths: SimpleLengths) -> list[SupportFiltration]:
    """All GR filtrations, as chains of supports, in canonical order.

    Greedy over the subquiver poset: start from the lightest sinks and repeatedly
    move to the lightest direct successors, exploring every tie.
    """
    support = measurable_support(rep)
    _check_lengths(rep, lengths)
    found = chain_core.greedy_max_filtrations(
        minimal_elements(support),
        lambda x: covers_above(support, x),
        lambda x: set_weight(lengths, x),
        support.vertices,
    )
    return sorted(found, key=lambda f: tuple(canonical(x) for x in f))


def gr_measure(rep: ThinRep, lengths: SimpleLengths) -> Measure:
    filtrations = gr_filtrations(rep, lengths)
    return tuple(set_weight(lengths, x) for x in filtrations[0])


def subobject_poset(rep: ThinRep, lengths: SimpleLengths):
    """Materialised subobject poset of ``rep`` and its induced length assignment."""
    support = measurable_support(rep)
    _check_lengths(rep, lengths)
    poset = materialize_poset(support)
    return poset, weight_lengths(poset, lengths)


def gr_factor(rep: ThinRep, x: Iterable[str], y: Iterable[str]) -> DimVector:
    """Dimension vector of the quotient ``Y / X`` for a cover pair ``X < Y``."""
    xs, ys = frozenset(x), frozenset(y)
    support = rep.support
    if not is_subobject_element(support, xs) or xs == support.vertices or ys not in covers_above(support, xs):
        raise FiltrationError(f"{canonical(xs)} < {canonical(ys)} is not a cover pair")
    return {v: int(v in ys and v not in xs) for v in sorted(rep.quiver.vertices)}


# The D4 star: source 3 with arrows to the sinks 1, 2 and 4.
D4_VERTICES = ("1", "2", "3", "4")
D4_SOURCE = "3"
D4_SINKS = ("1", "2", "4")


def d4_quiver() -> Quiver:
    return Quiver("D4", D4_VERTICES, tuple(Arrow(f"a{s}", D4_SOURCE, s) for s in D4_SINKS))


@dataclass(frozen=True)
class D4Comparison:
    lightest_sink: str
    measure_n: Measure
    # (support of N', measure of N', ordering of mu(N) against mu(N'))
    rivals: tuple[tuple[frozenset, Measure, Ordering], ...]

    @property
    def ok(self) -> bool:
        return all(order is Ordering.LESS for _, _, order in self.rivals)


def d4_limit_comparison(lengths: SimpleLengths) -> D4Comparison:
    """Compare ``N`` (all four vertices) with each length-3 indecomposable ``N'`` containing
    the lightest sink ``j`` (ties broken by vertex id).

    Every such ``N'`` should have a strictly larger measure than ``N``.
    """
    q = d4_quiver()
    j = min(D4_SINKS, key=lambda s: (Fraction(lengths[s]), s))
    mu_n = gr_measure(ThinRep(q, full_support(q)), lengths)
    rivals = []
    for dropped in D4_SINKS:
        if dropped == j:
            continue
        rival = ThinRep.on(q, [v for v in D4_VERTICES if v != dropped])
        mu = gr_measure(rival, lengths)
        rivals.append((rival.vertices, mu, lex_compare(mu_n, mu)))
    return D4Comparison(j, mu_n, tuple(rivals))
