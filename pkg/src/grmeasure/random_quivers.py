"""Seeded random quivers, supports and weights for oracle cross-checks."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .quiver_poset import Arrow, Quiver, SupportQuiver, full_support, support_of
from .thin_rep import ThinRep


@dataclass(frozen=True)
class Instance:
    kind: str
    rep: ThinRep
    weights: dict[str, Fraction]


def _names(n: int) -> list[str]:
    return [str(i) for i in range(1, n + 1)]


def random_tree_quiver(rng: random.Random, n: int) -> Quiver:
    vs = _names(n)
    arrows = []
    for i in range(1, n):
        j = rng.randrange(i)
        a, b = (vs[i], vs[j]) if rng.random() < 0.5 else (vs[j], vs[i])
        arrows.append(Arrow(f"a{i}", a, b))
    return Quiver(f"tree{n}", tuple(vs), tuple(arrows))


def cycle_quiver(orientation: tuple[bool, ...]) -> Quiver:
    """Cycle ``1 - 2 - ... - n - 1``; ``True`` at position i orients edge i forwards."""
    n = len(orientation)
    vs = _names(n)
    arrows = []
    for i, forward in enumerate(orientation):
        a, b = vs[i], vs[(i + 1) % n]
        arrows.append(Arrow(f"c{i + 1}", a, b) if forward else Arrow(f"c{i + 1}", b, a))
    return Quiver(f"cycle{n}", tuple(vs), tuple(arrows))


def acyclic_cycle_orientations(n: int) -> list[tuple[bool, ...]]:
    """All orientations of an ``n``-cycle without an oriented cycle (n >= 2)."""
    return [o for o in itertools.product((True, False), repeat=n) if any(o) and not all(o)]


def random_cycle_quiver(rng: random.Random, n: int) -> Quiver:
    return cycle_quiver(rng.choice(acyclic_cycle_orientations(n)))


def random_dag_with_tree_support(rng: random.Random, n: int, p: float = 0.45) -> tuple[Quiver, SupportQuiver]:
    """Random acyclic quiver plus a tree support obtained by zeroing non-tree arrows."""
    vs = _names(n)
    perm = vs[:]
    rng.shuffle(perm)
    arrows = []
    for i, j in itertools.combinations(range(n), 2):
        if rng.random() < p:
            arrows.append(Arrow(f"e{len(arrows) + 1}", perm[i], perm[j]))
    quiver = Quiver(f"dag{n}", tuple(vs), tuple(arrows))
    # grow a random tree along arrows from a random start vertex
    start = rng.choice(vs)
    inside = {start}
    tree = []
    frontier = [a for a in arrows if (a.source in inside) != (a.target in inside)]
    target_size = rng.randint(1, n)
    while frontier and len(inside) < target_size:
        a = rng.choice(frontier)
        tree.append(a)
        inside |= {a.source, a.target}
        frontier = [b for b in arrows if (b.source in inside) != (b.target in inside)]
    kept = {a.id for a in tree}
    zero = [a.id for a in arrows if a.source in inside and a.target in inside and a.id not in kept]
    return quiver, support_of(quiver, sorted(inside), zero)


def random_weights(rng: random.Random, vertices, spread: int = 4) -> dict[str, Fraction]:
    """Small positive rationals, so that ties are frequent."""
    return {v: Fraction(rng.randint(1, spread), rng.choice((1, 2))) for v in vertices}


def random_instance(rng: random.Random, max_vertices: int = 9) -> Instance:
    """A thin indecomposable representation with tree or cycle support, plus weights."""
    kind = rng.choice(("tree", "cycle", "dag"))
    if kind == "tree":
        quiver = random_tree_quiver(rng, rng.randint(1, max_vertices))
        support = full_support(quiver)
        # sometimes restrict to a connected sub-block that is closed in no particular way
        if len(quiver.vertices) > 2 and rng.random() < 0.3:
            support = _random_connected_subtree(rng, quiver)
    elif kind == "cycle":
        quiver = random_cycle_quiver(rng, rng.randint(2, max(2, max_vertices)))
        support = full_support(quiver)
    else:
        quiver, support = random_dag_with_tree_support(rng, rng.randint(1, max_vertices))
    return Instance(kind, ThinRep(quiver, support), random_weights(rng, quiver.vertices))


def _random_connected_subtree(rng: random.Random, quiver: Quiver) -> SupportQuiver:
    inside = {rng.choice(quiver.vertices)}
    size = rng.randint(1, len(quiver.vertices))
    while len(inside) < size:
        options = [a for a in quiver.arrows if (a.source in inside) != (a.target in inside)]
        a = rng.choice(options)
        inside |= {a.source, a.target}
    return support_of(quiver, sorted(inside))


def random_corpus(seed: int, count: int, max_vertices: int = 9) -> list[Instance]:
    rng = random.Random(seed)
    return [random_instance(rng, max_vertices) for _ in range(count)]
