"""Weight functions that make a prescribed filtration maximal.

Works on finite families of sets ordered by inclusion (subobject posets of
supports are the main instance).  The construction is inductive: start with
weight 1 everywhere (the first stage shares total weight 1) and, for each step
``X^n < X^{n+1}``, give every new element the constant ``c_n = w(X^n) + 1``.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from .chain_core import FinitePoset, Measure, l_star, lex_compare, max_filtrations, Ordering
from .errors import FiltrationError, PosetError
from .quiver_poset import canonical, materialize_poset, set_weight, weight_lengths
from .thin_rep import ThinRep, measurable_support

SubsetFiltration = tuple[frozenset, ...]


class Uniqueness(enum.Enum):
    UNIQUE = "Unique"
    NOT_UNIQUE = "NotUnique"
    UNKNOWN = "Unknown"


@dataclass
class SynthesisResult:
    weights: dict[str, Fraction]
    stage_constants: tuple[Fraction, ...]
    unique: Uniqueness = Uniqueness.UNKNOWN
    max_filtrations: list[SubsetFiltration] = field(default_factory=list)


@dataclass
class Verdict:
    is_gr: bool
    measure: Measure
    values: Measure
    witness: SubsetFiltration | None = None


def parse_filtration(text: str) -> SubsetFiltration:
    """Parse ``"3 | 3,4,5 | 3,4,5,6"`` into a tuple of vertex sets."""
    if not text.strip():
        raise FiltrationError("empty filtration string")
    stages = []
    for i, part in enumerate(text.split("|"), start=1):
        ids = [t.strip() for t in part.split(",")]
        if any(not t for t in ids):
            raise FiltrationError(f"stage {i} has an empty vertex id")
        stages.append(frozenset(ids))
    return tuple(stages)


def format_filtration(stages: Iterable[Iterable[str]]) -> str:
    return " | ".join(",".join(canonical(s)) for s in stages)


def check_filtration(poset: FinitePoset, stages: Sequence[frozenset]) -> SubsetFiltration:
    """Raise :class:`FiltrationError` naming the first violated condition."""
    stages = tuple(frozenset(s) for s in stages)
    if not stages:
        raise FiltrationError("a filtration needs at least one stage")
    for i, s in enumerate(stages, start=1):
        if s not in poset:
            raise FiltrationError(f"stage {i} {{{','.join(canonical(s))}}} is not an element of the poset")
    if poset.lower_covers(stages[0]):
        raise FiltrationError("first stage is not a minimal element")
    for i, (a, b) in enumerate(zip(stages, stages[1:]), start=1):
        if not a < b:
            raise FiltrationError(f"stage {i} is not strictly contained in stage {i + 1}")
        if not poset.is_cover(a, b):
            raise FiltrationError(f"stage {i} -> {i + 1} is not a cover pair")
    return stages


def _ground(poset: FinitePoset, ground: Iterable[str] | None) -> list[str]:
    out = set(ground or ())
    for x in poset.elements:
        out |= x
    return sorted(out)


def _build(stages: SubsetFiltration, ground: list[str], offsets: Sequence[Fraction]):
    weights = dict.fromkeys(ground, Fraction(1))
    for v in stages[0]:
        weights[v] = Fraction(1, len(stages[0]))
    constants = []
    for n, (a, b) in enumerate(zip(stages, stages[1:])):
        c = set_weight(weights, a) + 1 + offsets[n]
        constants.append(c)
        for v in b - a:
            weights[v] = c
    return weights, tuple(constants)


def verify_filtration(poset: FinitePoset, stages: Sequence[frozenset], weights: Mapping[str, Fraction]) -> Verdict:
    """Is the filtration maximal for the induced length?  If not, return a better one."""
    stages = check_filtration(poset, stages)
    for x in poset.elements:
        for v in x:
            if v not in weights or weights[v] <= 0:
                raise PosetError(f"weight of {v} is missing or not positive")
    lengths = weight_lengths(poset, weights)
    target = stages[-1]
    best = l_star(poset, lengths, target)
    values = tuple(lengths[s] for s in stages)
    if values == best:
        return Verdict(True, best, values)
    witness = max_filtrations(poset, lengths, target)[0]
    assert lex_compare(tuple(lengths[s] for s in witness), values) is Ordering.GREATER
    return Verdict(False, best, values, witness)


def synthesize(
    poset: FinitePoset,
    stages: Sequence[frozenset],
    ground: Iterable[str] | None = None,
    _offsets: Sequence[Fraction] | None = None,
) -> SynthesisResult:
    """Weights under which ``stages`` is a maximal filtration of its last stage.

    Vertices outside the last stage get weight 1; a singleton first stage also has weight 1.
    """
    stages = check_filtration(poset, stages)
    offsets = _offsets or [Fraction(0)] * len(stages)
    weights, constants = _build(stages, _ground(poset, ground), offsets)
    if not verify_filtration(poset, stages, weights).is_gr:
        raise RuntimeError(f"synthesized weights do not realise {format_filtration(stages)}")
    return SynthesisResult(weights, constants)


def synthesize_unique(
    poset: FinitePoset, stages: Sequence[frozenset], budget: int = 8, ground: Iterable[str] | None = None
) -> SynthesisResult:
    """Like :func:`synthesize`, then check by enumeration that the filtration is the only maximal one.

    If it is not, round ``k`` (1..budget) adds ``n / (k (m + 1))`` to the ``n``-th
    stage constant and checks again.  The last attempt is returned.
    """
    if budget < 1:
        raise ValueError("budget must be a positive integer")
    stages = check_filtration(poset, stages)
    m = len(stages)
    result = synthesize(poset, stages, ground)
    for k in range(0, budget + 1):
        if k:
            offsets = [Fraction(n, k * (m + 1)) for n in range(1, m + 1)]
            result = synthesize(poset, stages, ground, offsets)
        found = max_filtrations(poset, weight_lengths(poset, result.weights), stages[-1])
        result.max_filtrations = found
        result.unique = Uniqueness.UNIQUE if len(found) == 1 else Uniqueness.NOT_UNIQUE
        if result.unique is Uniqueness.UNIQUE:
            break
    return result


def rep_poset(rep: ThinRep) -> FinitePoset:
    """Subobject poset of an indecomposable thin representation with tree or cycle support."""
    return materialize_poset(measurable_support(rep))


def synthesize_for_rep(rep: ThinRep, stages: Sequence[frozenset], budget: int = 8) -> SynthesisResult:
    """Simple lengths making ``stages`` a GR filtration; weights are reported on every vertex."""
    return synthesize_unique(rep_poset(rep), stages, budget, ground=rep.quiver.vertices)
