"""Brute-force oracles used to check the automata-based constructions."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from ..automata import Word
from ..growth import generation_layers
from ..presentation import Presentation


def bfs_closure(
    p: Presentation,
    gens: Iterable,
    depth: int,
    operations: Sequence[str] | None = None,
) -> frozenset[Word]:
    """Words reachable from gens by at most ``depth`` rounds of operation applications.

    ``operations`` restricts the rounds to a subset of the signature; the
    result is then a subset of the generated subalgebra.
    """
    return generation_layers(p, gens, depth, operations)[-1]


def bfs_until(
    p: Presentation,
    gens: Iterable,
    done,
    max_depth: int,
    operations: Sequence[str] | None = None,
) -> tuple[int, frozenset[Word]] | None:
    """Least depth whose closure satisfies ``done``, searched up to max_depth."""
    from ..growth import expand
    from .. import automata as fa

    cur = frozenset(fa.as_word(w) for w in gens)
    old: set[Word] = set()
    new = set(cur)
    for d in range(max_depth + 1):
        if done(cur):
            return d, cur
        if d == max_depth or not new:
            return None
        produced = expand(p, sorted(old), sorted(new), operations)
        nxt = cur | produced
        old, new = set(cur), set(nxt - cur)
        cur = frozenset(nxt)
    return None


class PigeonholeError(ValueError):
    pass


def pigeonhole_check(theta: Sequence[int] | Mapping[int, int]) -> int:
    """Some i with theta(i) >= i for an injective theta on {0..N}."""
    pairs = sorted(theta.items()) if isinstance(theta, Mapping) else list(enumerate(theta))
    if [i for i, _ in pairs] != list(range(len(pairs))):
        raise PigeonholeError("theta must be defined on 0..N")
    values = [v for _, v in pairs]
    if any(v < 0 for v in values):
        raise PigeonholeError("theta must map into the non-negative integers")
    if len(set(values)) != len(values):
        raise PigeonholeError("theta is not injective")
    for i, v in pairs:
        if v >= i:
            return i
    raise AssertionError("an injection on 0..N cannot map every i below itself")  # pragma: no cover
