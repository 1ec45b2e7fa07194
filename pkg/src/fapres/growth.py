"""Growth level of a finitely generated algebra.

G_0 is the generating set and G_i adds every result of one operation
applied to elements of G_{i-1}; the growth level is g(i) = |G_i|.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from . import automata as fa
from .automata import Word
from .presentation import DomainError, Presentation, PresentationError, apply_operation, evaluator
from .unary import UnaryPresentation


def fresh_tuples(old: Sequence[Word], new: Sequence[Word], k: int) -> Iterator[tuple[Word, ...]]:
    """Every k-tuple over old+new with at least one component from new, once."""
    both = list(old) + list(new)
    for j in range(k):
        for head in itertools.product(old, repeat=j):
            for mid in new:
                for tail in itertools.product(both, repeat=k - j - 1):
                    yield head + (mid,) + tail


def expand(p: Presentation, old: Iterable[Word], new: Iterable[Word], operations: Sequence[str] | None = None) -> set[Word]:
    """Results of single operation applications that use at least one new argument."""
    old, new = list(old), list(new)
    names = operations if operations is not None else [n for n, _ in p.signature.operations]
    out: set[Word] = set()
    for name in names:
        k = p.signature.graph_arity(name) - 1
        ev = evaluator(p, name)
        for args in fresh_tuples(old, new, k):
            w = ev(args)
            if w is None:
                raise PresentationError(f"{name} has no image for {[''.join(a) for a in args]}")
            out.add(w)
    return out


def generation_layers(
    p: Presentation, G0: Iterable, depth: int, operations: Sequence[str] | None = None
) -> list[frozenset[Word]]:
    """[G_0, ..., G_depth] computed semi-naively."""
    start = {fa.as_word(w) for w in G0}
    for w in start:
        if not p.domain.contains(w):
            raise DomainError(f"{''.join(w)!r} is not in the domain")
    layers = [frozenset(start)]
    old: set[Word] = set()
    new = set(start)
    for _ in range(depth):
        produced = expand(p, sorted(old), sorted(new), operations)
        cur = layers[-1] | produced
        old = set(layers[-1])
        new = set(cur - layers[-1])
        layers.append(frozenset(cur))
    return layers


@dataclass(frozen=True)
class GrowthTable:
    G_sets: tuple[frozenset[Word], ...]
    values: tuple[int, ...]
    x: int | None = None
    a: int | None = None
    b: int | None = None

    def bound(self, i: int) -> int | None:
        if self.a is None or self.b is None:
            return None
        return self.a + self.b * i

    def rows(self) -> list[tuple[int, int, int | None]]:
        return [(i, g, self.bound(i)) for i, g in enumerate(self.values)]


def _present(p) -> Presentation:
    return p.presentation if isinstance(p, UnaryPresentation) else p


def growth_table(p: Presentation | UnaryPresentation, G0: Iterable, n: int) -> GrowthTable:
    """g(0), ..., g(n) for the algebra generated by G0."""
    pres = _present(p)
    if not pres.injective:
        raise PresentationError("growth counts words, which needs an injective presentation")
    layers = generation_layers(pres, G0, n)
    return GrowthTable(tuple(layers), tuple(len(s) for s in layers))


@dataclass(frozen=True)
class LinearBound:
    x: int
    a: int
    b: int
    holds: bool
    table: GrowthTable

    @property
    def first_violation(self) -> int | None:
        for i, g in enumerate(self.table.values):
            if g > self.a + self.b * i:
                return i
        return None


def linear_bound(p: UnaryPresentation | Presentation, G0: Iterable, n: int = 50) -> LinearBound:
    """Check g(i) <= (x+1)D + D*i, x the last column holding a generator."""
    up = p if isinstance(p, UnaryPresentation) else UnaryPresentation.of(p)
    gens = [fa.as_word(w) for w in G0]
    x = max((len(w) // up.D for w in gens), default=0)
    a, b = (x + 1) * up.D, up.D
    t = growth_table(up, gens, n)
    t = GrowthTable(t.G_sets, t.values, x, a, b)
    return LinearBound(x, a, b, all(g <= a + b * i for i, g in enumerate(t.values)), t)
