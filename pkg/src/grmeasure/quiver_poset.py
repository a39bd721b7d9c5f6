"""Quivers, their text format, supports and subobject posets.

Elements of the subobject poset of a support ``M`` are vertex sets ``X`` that
are nonempty, closed under arrow targets inside ``M`` and whose full induced
subquiver of ``M`` is connected.  They are stored as frozensets of vertex ids.
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from fractions import Fraction

from .chain_core import FinitePoset
from .errors import (
    DisconnectedSupportError,
    OrientedCycleError,
    QuiverSyntaxError,
    QuiverValidationError,
    UnsupportedSupportError,
)

VertexSet = frozenset
WeightFunction = Mapping[str, Fraction]

MATERIALIZE_MAX_VERTICES = 20


@dataclass(frozen=True, order=True)
class Arrow:
    id: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    name: str
    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise QuiverValidationError("a quiver needs at least one vertex")
        _check_unique(self.vertices, "vertex")
        _check_unique([a.id for a in self.arrows], "arrow")
        known = set(self.vertices)
        for a in self.arrows:
            for end in (a.source, a.target):
                if end not in known:
                    raise QuiverValidationError(f"arrow {a.id} uses undeclared vertex {end}")
        cycle = find_oriented_cycle(self.vertices, self.arrows)
        if cycle:
            raise OrientedCycleError(cycle)

    def arrow(self, arrow_id: str) -> Arrow:
        for a in self.arrows:
            if a.id == arrow_id:
                return a
        raise QuiverValidationError(f"unknown arrow {arrow_id}")


class SupportClass(enum.Enum):
    TREE = "Tree"
    CYCLE = "CycleAn"
    OTHER = "Other"


@dataclass(frozen=True)
class SupportQuiver:
    """A subquiver of an ambient quiver: the support of a thin representation."""

    vertices: frozenset[str]
    arrows: frozenset[Arrow]

    def __post_init__(self) -> None:
        if not self.vertices:
            raise QuiverValidationError("a support needs at least one vertex")
        for a in self.arrows:
            if a.source not in self.vertices or a.target not in self.vertices:
                raise QuiverValidationError(f"arrow {a.id} leaves the support")

    @property
    def top(self) -> frozenset[str]:
        return self.vertices

    @property
    def classification(self) -> SupportClass:
        return _classify(self)

    def sinks(self) -> list[str]:
        sources = {a.source for a in self.arrows}
        return sorted(v for v in self.vertices if v not in sources)

    def sources(self) -> list[str]:
        targets = {a.target for a in self.arrows}
        return sorted(v for v in self.vertices if v not in targets)

    def induced_arrows(self, vertices: Iterable[str]) -> frozenset[Arrow]:
        vs = set(vertices)
        return frozenset(a for a in self.arrows if a.source in vs and a.target in vs)


@dataclass
class QuiverFile:
    """Everything a quiver file declares: the quiver, weights and named representations."""

    quiver: Quiver
    weights: dict[str, Fraction]
    reps: dict[str, SupportQuiver] = field(default_factory=dict)


def _check_unique(ids: Iterable[str], what: str) -> None:
    seen = set()
    for i in ids:
        if i in seen:
            raise QuiverValidationError(f"duplicate {what} id {i}")
        seen.add(i)


def find_oriented_cycle(vertices: Iterable[str], arrows: Iterable[Arrow]) -> list[str] | None:
    """Return the vertices of some oriented cycle, or ``None`` for an acyclic quiver."""
    out: dict[str, list[str]] = {v: [] for v in vertices}
    for a in arrows:
        out[a.source].append(a.target)
    state = dict.fromkeys(out, 0)
    stack: list[str] = []

    def visit(u: str) -> list[str] | None:
        state[u] = 1
        stack.append(u)
        for v in out[u]:
            if state[v] == 1:
                return stack[stack.index(v):]
            if state[v] == 0:
                found = visit(v)
                if found:
                    return found
        stack.pop()
        state[u] = 2
        return None

    for v in sorted(out):
        if state[v] == 0:
            found = visit(v)
            if found:
                return list(found)
    return None


def parse_fraction(token: str) -> Fraction:
    """Parse ``0.5`` or ``1/2`` into an exact rational."""
    try:
        value = Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"not a rational number: {token!r}") from None
    return value


def _columns(line: str) -> list[tuple[str, int]]:
    tokens = []
    i = 0
    while i < len(line):
        if line[i].isspace():
            i += 1
            continue
        j = i
        while j < len(line) and not line[j].isspace():
            j += 1
        tokens.append((line[i:j], i + 1))
        i = j
    return tokens


def parse_quiver_file(text: str) -> QuiverFile:
    """Parse the line-oriented quiver format.

    Directives: ``q <name>``, ``v <id>``, ``a <id> <src> <tgt>``, ``w <id> <value>``
    and ``rep <name> <v>[,<v>...] [!<arrow>[,<arrow>...]]``.  ``#`` starts a comment.
    """
    name = None
    vertices: list[str] = []
    arrows: list[Arrow] = []
    weights: dict[str, tuple[Fraction, int]] = {}
    rep_lines: list[tuple[str, list[str], list[str], int]] = []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = _columns(line)
        if not tokens:
            continue
        (kind, col), args = tokens[0], tokens[1:]

        def arity(*allowed: int) -> None:
            if len(args) not in allowed:
                where = args[max(allowed)][1] if len(args) > max(allowed) else len(line.rstrip()) + 1
                raise QuiverSyntaxError(
                    f"'{kind}' expects {' or '.join(map(str, allowed))} argument(s), got {len(args)}",
                    lineno,
                    where,
                )

        if kind == "q":
            arity(1)
            if name is not None:
                raise QuiverSyntaxError("second 'q' header", lineno, col)
            name = args[0][0]
        elif kind == "v":
            arity(1)
            vertices.append(args[0][0])
        elif kind == "a":
            arity(3)
            arrows.append(Arrow(args[0][0], args[1][0], args[2][0]))
        elif kind == "w":
            arity(2)
            vid, (value_tok, value_col) = args[0][0], args[1]
            try:
                value = parse_fraction(value_tok)
            except ValueError as exc:
                raise QuiverSyntaxError(str(exc), lineno, value_col) from None
            if value <= 0:
                raise QuiverSyntaxError(f"weight must be positive, got {value_tok}", lineno, value_col)
            if vid in weights:
                raise QuiverValidationError(f"line {lineno}: duplicate weight for vertex {vid}")
            weights[vid] = (value, lineno)
        elif kind == "rep":
            arity(2, 3)
            rep_vertices = args[1][0].split(",")
            zero: list[str] = []
            if len(args) == 3:
                tok, tcol = args[2]
                if not tok.startswith("!") or len(tok) == 1:
                    raise QuiverSyntaxError("zero-arrow list must look like !a,b", lineno, tcol)
                zero = tok[1:].split(",")
            if "" in rep_vertices or "" in zero:
                raise QuiverSyntaxError("empty id in comma-separated list", lineno, args[1][1])
            rep_lines.append((args[0][0], rep_vertices, zero, lineno))
        else:
            raise QuiverSyntaxError(f"unknown directive {kind!r}", lineno, col)

    if name is None:
        raise QuiverSyntaxError("missing 'q <name>' header", 1, 1)

    quiver = Quiver(name, tuple(vertices), tuple(arrows))
    known = set(vertices)
    for vid, (_, lineno) in weights.items():
        if vid not in known:
            raise QuiverValidationError(f"line {lineno}: weight for undeclared vertex {vid}")
    full_weights = {v: weights[v][0] if v in weights else Fraction(1) for v in vertices}

    reps: dict[str, SupportQuiver] = {}
    for rep_name, rep_vertices, zero, lineno in rep_lines:
        if rep_name in reps:
            raise QuiverValidationError(f"line {lineno}: duplicate representation {rep_name}")
        try:
            reps[rep_name] = support_of(quiver, rep_vertices, zero)
        except QuiverValidationError as exc:
            raise QuiverValidationError(f"line {lineno}: {exc}") from None
    return QuiverFile(quiver, full_weights, reps)


def parse_quiver(text: str) -> Quiver:
    return parse_quiver_file(text).quiver


def parse_weight_lines(text: str, quiver: Quiver) -> dict[str, Fraction]:
    """Parse an override file consisting of ``w <vertex> <value>`` lines only."""
    out: dict[str, Fraction] = {}
    known = set(quiver.vertices)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = _columns(raw.split("#", 1)[0])
        if not tokens:
            continue
        if tokens[0][0] != "w" or len(tokens) != 3:
            raise QuiverSyntaxError("expected 'w <vertex> <value>'", lineno, tokens[0][1])
        vid, (tok, col) = tokens[1][0], tokens[2]
        if vid not in known:
            raise QuiverValidationError(f"line {lineno}: weight for undeclared vertex {vid}")
        try:
            value = parse_fraction(tok)
        except ValueError as exc:
            raise QuiverSyntaxError(str(exc), lineno, col) from None
        if value <= 0:
            raise QuiverSyntaxError(f"weight must be positive, got {tok}", lineno, col)
        out[vid] = value
    return out


def format_quiver(qf: QuiverFile) -> str:
    """Serialise back to the text format (weights equal to 1 are omitted)."""
    q = qf.quiver
    lines = [f"q {q.name}"]
    lines += [f"v {v}" for v in q.vertices]
    lines += [f"a {a.id} {a.source} {a.target}" for a in q.arrows]
    lines += [f"w {v} {w}" for v, w in qf.weights.items() if w != 1]
    for rep_name, s in qf.reps.items():
        line = f"rep {rep_name} {','.join(sorted(s.vertices))}"
        zero = sorted(a.id for a in q.arrows if a.source in s.vertices and a.target in s.vertices and a not in s.arrows)
        if zero:
            line += " !" + ",".join(zero)
        lines.append(line)
    return "\n".join(lines) + "\n"


def support_of(quiver: Quiver, vertices: Iterable[str], zero_arrows: Iterable[str] = ()) -> SupportQuiver:
    """Support on ``vertices``: all induced arrows except the ones named in ``zero_arrows``."""
    vs = list(vertices)
    _check_unique(vs, "support vertex")
    known = set(quiver.vertices)
    for v in vs:
        if v not in known:
            raise QuiverValidationError(f"support uses undeclared vertex {v}")
    vset = frozenset(vs)
    zero = set(zero_arrows)
    for aid in zero:
        a = quiver.arrow(aid)
        if a.source not in vset or a.target not in vset:
            raise QuiverValidationError(f"zero arrow {aid} is not an arrow between support vertices")
    arrows = frozenset(a for a in quiver.arrows if a.source in vset and a.target in vset and a.id not in zero)
    return SupportQuiver(vset, arrows)


def full_support(quiver: Quiver) -> SupportQuiver:
    return SupportQuiver(frozenset(quiver.vertices), frozenset(quiver.arrows))


def canonical(x: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(x))


def components(vertices: Iterable[str], arrows: Iterable[Arrow]) -> list[frozenset[str]]:
    """Connected components of the underlying undirected graph."""
    adj: dict[str, set[str]] = {v: set() for v in vertices}
    for a in arrows:
        adj[a.source].add(a.target)
        adj[a.target].add(a.source)
    seen: set[str] = set()
    out = []
    for v in sorted(adj):
        if v in seen:
            continue
        comp = {v}
        todo = [v]
        while todo:
            u = todo.pop()
            for w in adj[u] - comp:
                comp.add(w)
                todo.append(w)
        seen |= comp
        out.append(frozenset(comp))
    return out


def is_connected(support: SupportQuiver) -> bool:
    return len(components(support.vertices, support.arrows)) == 1


def _classify(support: SupportQuiver) -> SupportClass:
    if not is_connected(support):
        raise DisconnectedSupportError("support is not connected")
    n, m = len(support.vertices), len(support.arrows)
    if m == n - 1:
        return SupportClass.TREE
    degree = dict.fromkeys(support.vertices, 0)
    for a in support.arrows:
        degree[a.source] += 1
        degree[a.target] += 1
    if all(d == 2 for d in degree.values()):
        return SupportClass.CYCLE
    return SupportClass.OTHER


def classify_support(support: SupportQuiver) -> SupportClass:
    return support.classification


def forward_closure(quiver: Quiver | SupportQuiver, start: Iterable[str]) -> frozenset[str]:
    """Least superset of ``start`` containing the target of every arrow whose source it contains."""
    out: dict[str, list[str]] = {}
    for a in quiver.arrows:
        out.setdefault(a.source, []).append(a.target)
    closed = set(start)
    todo = list(closed)
    while todo:
        for t in out.get(todo.pop(), ()):
            if t not in closed:
                closed.add(t)
                todo.append(t)
    return frozenset(closed)


def is_subobject_element(support: SupportQuiver, x: Iterable[str]) -> bool:
    xs = frozenset(x)
    if not xs or not xs <= support.vertices:
        return False
    if forward_closure(support, xs) != xs:
        return False
    return len(components(xs, support.induced_arrows(xs))) == 1


def minimal_elements(support: SupportQuiver) -> list[frozenset[str]]:
    """Sink singletons, which are the minimal elements of the subobject poset."""
    return [frozenset([v]) for v in support.sinks()]


def _neighbours(support: SupportQuiver, xs: frozenset[str]) -> set[str]:
    out = set()
    for a in support.arrows:
        if a.source in xs and a.target not in xs:
            out.add(a.target)
        elif a.target in xs and a.source not in xs:
            out.add(a.source)
    return out


def covers_above(support: SupportQuiver, x: Iterable[str]) -> list[frozenset[str]]:
    """Direct successors of ``x`` in the subobject poset of ``support``.

    Every strictly larger element contains a vertex adjacent to ``x`` together with
    its forward closure, so the inclusion-minimal such unions are the covers.
    """
    xs = frozenset(x)
    if not is_subobject_element(support, xs):
        raise QuiverValidationError(f"{canonical(xs)} is not an element of the subobject poset")
    if xs == support.vertices:
        raise QuiverValidationError("the top element has no covers")
    candidates = {xs | forward_closure(support, [v]) for v in _neighbours(support, xs)}
    minimal = [c for c in candidates if not any(d < c for d in candidates)]
    return sorted(minimal, key=canonical)


def _require_tree_or_cycle(support: SupportQuiver) -> SupportClass:
    cls = support.classification
    if cls is SupportClass.OTHER:
        raise UnsupportedSupportError("support is neither a tree nor a cycle")
    return cls


def subobject_elements(support: SupportQuiver) -> list[frozenset[str]]:
    """Every element of the subobject poset, by exhaustive subset scan."""
    order = sorted(support.vertices)
    if len(order) > MATERIALIZE_MAX_VERTICES:
        raise UnsupportedSupportError(f"support has more than {MATERIALIZE_MAX_VERTICES} vertices")
    out = []
    for mask in range(1, 1 << len(order)):
        xs = frozenset(v for i, v in enumerate(order) if (mask >> i) & 1)
        if is_subobject_element(support, xs):
            out.append(xs)
    return sorted(out, key=canonical)


def materialize_poset(support: SupportQuiver) -> FinitePoset:
    """Explicit Hasse diagram of the subobject poset (inclusion order).

    Covers come from the transitive reduction of inclusion, independently of
    :func:`covers_above`.
    """
    _require_tree_or_cycle(support)
    elements = subobject_elements(support)
    covers = []
    for y in elements:
        below = [x for x in elements if x < y]
        for x in below:
            if not any(x < z for z in below):
                covers.append((x, y))
    return FinitePoset(elements, covers)


def set_weight(weights: WeightFunction, x: Iterable[str]) -> Fraction:
    xs = list(x)
    if not xs:
        raise ValueError("weight of the empty set is undefined")
    return sum((Fraction(weights[v]) for v in xs), Fraction(0))


def weight_lengths(poset: FinitePoset, weights: WeightFunction) -> dict[frozenset[str], Fraction]:
    """Length assignment induced on vertex-set elements by summing weights."""
    return {x: set_weight(weights, x) for x in poset.elements}


def check_weights(quiver: Quiver, weights: WeightFunction) -> dict[str, Fraction]:
    """Validate a weight function: total on the quiver's vertices and strictly positive."""
    out = {}
    for v in quiver.vertices:
        if v not in weights:
            raise QuiverValidationError(f"no weight for vertex {v}")
        w = Fraction(weights[v])
        if w <= 0:
            raise QuiverValidationError(f"weight of vertex {v} must be positive, got {w}")
        out[v] = w
    return out
