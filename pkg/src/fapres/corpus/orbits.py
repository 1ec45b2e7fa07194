"""FA-presentations of finitely generated subalgebras of algebras (S, σ), σ unary.

Generators are added one at a time.  The orbit x, xσ, xσ², ... of a new
generator either runs into elements already presented (new symbols
p_{i,0..k-1} lead into an old word u), closes into a cycle of its own
(symbols p_{i,0..k+m-1} with a back edge), or is infinite (a fresh tail
language t_i a*).  Which case holds is not decidable in general, so the
caller supplies it and the builder only refutes claims within a step limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence, Union

from .. import automata as fa
from ..automata import PAD, Dfa, Word
from ..presentation import Presentation, PresentationError, apply_operation, identity_relation


class OrbitError(ValueError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class MeetsPrevious:
    """xσ^k is the element already presented by word u; xσ^j (j < k) are new."""

    k: int
    u: Word


@dataclass(frozen=True)
class EventuallyPeriodic:
    """xσ^(k+m) = xσ^k, with no earlier repetition and no previously presented element."""

    k: int
    m: int


@dataclass(frozen=True)
class InfiniteOrbit:
    pass


@dataclass(frozen=True)
class Unknown:
    """No case settled within the step limit."""


OrbitData = Union[MeetsPrevious, EventuallyPeriodic, InfiniteOrbit]

DEFAULT_LIMIT = 10**5


def p_symbol(i: int, j: int) -> str:
    return f"p{i}.{j}"


def t_symbol(i: int) -> str:
    return f"t{i}"


@dataclass(frozen=True)
class OrbitPresentation:
    presentation: Presentation
    op: str
    phi: Callable[[Word], Word]
    generators: tuple[Word, ...]

    def base_word(self, w) -> Word:
        return self.phi(fa.as_word(w))


def _unary_op(base: Presentation) -> str:
    ops = base.signature.operations
    if len(ops) != 1 or ops[0][1] != 1:
        raise PresentationError("the base algebra must have exactly one unary operation")
    if not base.injective:
        raise PresentationError("the base presentation must be injective")
    return ops[0][0]


class _Stage:
    """Words presented so far and their base-algebra images."""

    def __init__(self, base: Presentation, op: str, limit: int):
        self.base, self.op, self.limit = base, op, limit
        self.finite: dict[Word, Word] = {}  # presented word -> base word
        self.tails: list[tuple[int, Word]] = []  # (i, base word of t_i)
        self._tail_orbits: dict[int, dict[Word, int]] = {}

    def sigma(self, w: Word) -> Word:
        return apply_operation(self.base, self.op, [w])

    def tail_orbit(self, i: int, x: Word) -> dict[Word, int]:
        if i not in self._tail_orbits:
            orbit, y = {}, x
            for j in range(self.limit + 1):
                orbit.setdefault(y, j)
                y = self.sigma(y)
            self._tail_orbits[i] = orbit
        return self._tail_orbits[i]

    def lookup(self, y: Word) -> Word | None:
        """Presented word for base word y, searching tails up to the limit."""
        for w, b in self.finite.items():
            if b == y:
                return w
        for i, x in self.tails:
            j = self.tail_orbit(i, x).get(y)
            if j is not None:
                return (t_symbol(i),) + ("a",) * j
        return None

    def phi(self, w: Word) -> Word:
        if w in self.finite:
            return self.finite[w]
        if w and w[0].startswith("t"):
            i = int(w[0][1:])
            x = dict(self.tails)[i]
            for _ in w[1:]:
                x = self.sigma(x)
            return x
        raise KeyError(w)


def detect_orbit(stage: _Stage, x: Word) -> OrbitData | Unknown:
    seen: dict[Word, int] = {}
    y = x
    for j in range(stage.limit + 1):
        u = stage.lookup(y)
        if u is not None:
            return MeetsPrevious(j, u)
        if y in seen:
            return EventuallyPeriodic(seen[y], j - seen[y])
        seen[y] = j
        y = stage.sigma(y)
    return Unknown()


def _orbit(stage: _Stage, x: Word, n: int) -> list[Word]:
    out = [x]
    for _ in range(n):
        out.append(stage.sigma(out[-1]))
    return out


def _check(stage: _Stage, i: int, x: Word, data: OrbitData) -> None:
    if isinstance(data, MeetsPrevious):
        if data.k < 0:
            raise OrbitError("k must be non-negative")
        orbit = _orbit(stage, x, data.k)
        if len(set(orbit[:-1])) != data.k:
            raise OrbitError(f"generator {i}: orbit repeats before step {data.k}", orbit)
        for j, y in enumerate(orbit[:-1]):
            if stage.lookup(y) is not None:
                raise OrbitError(f"generator {i}: step {j} is already presented", y)
        try:
            target = stage.phi(fa.as_word(data.u))
        except KeyError:
            raise OrbitError(f"generator {i}: witness {data.u!r} is not a presented word", data.u)
        if orbit[-1] != target:
            raise OrbitError(f"generator {i}: step {data.k} is not the element of {data.u!r}", orbit[-1])
    elif isinstance(data, EventuallyPeriodic):
        if data.k < 0 or data.m < 1:
            raise OrbitError("need k >= 0 and m >= 1")
        orbit = _orbit(stage, x, data.k + data.m)
        if len(set(orbit[:-1])) != data.k + data.m or orbit[-1] != orbit[data.k]:
            raise OrbitError(f"generator {i}: orbit is not a {data.k}-tail into a {data.m}-cycle", orbit)
        for j, y in enumerate(orbit[:-1]):
            if stage.lookup(y) is not None:
                raise OrbitError(f"generator {i}: step {j} is already presented", y)
    elif isinstance(data, InfiniteOrbit):
        found = detect_orbit(stage, x)
        if not isinstance(found, Unknown):
            raise OrbitError(f"generator {i}: orbit is not infinite ({found})", found)
    else:
        raise OrbitError(f"unknown orbit data {data!r}")


def build_prop33(
    base: Presentation,
    generators: Sequence,
    data: Sequence[OrbitData | None] | None = None,
    limit: int = DEFAULT_LIMIT,
) -> OrbitPresentation:
    """Presentation of the subalgebra generated by ``generators``.

    ``data[i]`` describes the orbit of generator i+1; ``None`` asks for
    bounded detection, which fails on orbits not settled within ``limit``.
    """
    op = _unary_op(base)
    gens = [fa.as_word(g) for g in generators]
    for g in gens:
        if not base.domain.contains(g):
            raise PresentationError(f"{''.join(g)!r} is not in the domain")
    data = list(data) if data is not None else [None] * len(gens)
    if len(data) != len(gens):
        raise ValueError("one orbit description per generator")
    stage = _Stage(base, op, limit)
    edges: list[tuple[Word, Word]] = []
    tails: list[int] = []
    reps: list[Word] = []
    for i, (x, d) in enumerate(zip(gens, data), start=1):
        if d is None:
            d = detect_orbit(stage, x)
            if isinstance(d, Unknown):
                raise OrbitError(f"generator {i}: orbit not settled within {limit} steps")
        else:
            _check(stage, i, x, d)
        if isinstance(d, InfiniteOrbit):
            stage.tails.append((i, x))
            tails.append(i)
            reps.append((t_symbol(i),))
            continue
        n = d.k if isinstance(d, MeetsPrevious) else d.k + d.m
        orbit = _orbit(stage, x, n)
        ps = [(p_symbol(i, j),) for j in range(n)]
        for j, w in enumerate(ps):
            stage.finite[w] = orbit[j]
        edges.extend(zip(ps, ps[1:]))
        if isinstance(d, MeetsPrevious):
            u = fa.as_word(d.u)
            if ps:
                edges.append((ps[-1], u))
            reps.append(ps[0] if ps else u)
        else:
            edges.append((ps[-1], ps[d.k]))
            reps.append(ps[0])

    sigma = sorted({w[0] for w in stage.finite} | {t_symbol(i) for i in tails})
    if tails:
        sigma.append("a")
    sigma = tuple(sigma) or ("a",)
    domain = fa.finite_language(sigma, 1, list(stage.finite))
    graph = fa.finite_language(sigma, 2, edges)
    for i in tails:
        nb = fa.NfaBuilder(sigma, 1)
        s0, s1 = nb.state(initial=True), nb.state(accepting=True)
        nb.add(s0, (t_symbol(i),), s1)
        nb.add(s1, ("a",), s1)
        domain = fa.union(domain, nb.to_dfa())
        gb = fa.NfaBuilder(sigma, 2)
        g0, g1, g2 = gb.state(initial=True), gb.state(), gb.state(accepting=True)
        gb.add(g0, (t_symbol(i), t_symbol(i)), g1)
        gb.add(g1, ("a", "a"), g1)
        gb.add(g1, (PAD, "a"), g2)
        graph = fa.union(graph, gb.to_dfa())
    pres = Presentation(sigma, base.signature, domain, identity_relation(domain), {op: graph})
    return OrbitPresentation(pres, op, stage.phi, tuple(reps))
