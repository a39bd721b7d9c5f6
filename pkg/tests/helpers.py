"""Shared test helpers and brute-force oracles."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from pathlib import Path

from grmeasure.chain_core import FinitePoset
from grmeasure.quiver_poset import parse_quiver_file

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# PASS/FAIL lines from the acceptance suite, echoed in the terminal summary
ACCEPTANCE_LINES: list[str] = []


def load_fixture(name: str):
    return parse_quiver_file((FIXTURES / name).read_text(encoding="utf-8"))


def fs(*sets):
    """Vertex sets from strings like "345" (single-character ids only)."""
    return tuple(frozenset(s) for s in sets)


def unit(vertices):
    return {v: Fraction(1) for v in vertices}


def brute_hasse(n: int, relation: set[tuple[int, int]]) -> list[tuple[int, int]]:
    """Cover pairs of the order generated by ``relation`` on range(n), by brute force."""
    leq = {(i, i) for i in range(n)} | set(relation)
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in itertools.product(list(leq), repeat=2):
            if b == c and (a, d) not in leq:
                leq.add((a, d))
                changed = True
    return [
        (a, b)
        for a, b in leq
        if a != b and not any(z not in (a, b) and (a, z) in leq and (z, b) in leq for z in range(n))
    ]


def random_poset(rng: random.Random, n: int, p: float = 0.35):
    """Random finite poset on range(n) with a random strictly monotone positive length."""
    relation = {(i, j) for i, j in itertools.combinations(range(n), 2) if rng.random() < p}
    covers = brute_hasse(n, relation)
    poset = FinitePoset(range(n), covers)
    length = {}
    for j in range(n):  # range order is a linear extension
        below = [length[i] for i, k in covers if k == j]
        length[j] = max(below, default=Fraction(0)) + Fraction(rng.randint(1, 3), rng.choice((1, 2)))
    return poset, length
