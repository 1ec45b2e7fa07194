"""Small unary presentations used throughout the tests and demos."""

from __future__ import annotations

from .. import automata as fa
from ..automata import PAD, Dfa
from ..presentation import Presentation
from ..unary import UNARY, UnaryPresentation


def _shift_graph(c: int) -> Dfa:
    """{(a^n, a^(n+c))}."""
    nb = fa.NfaBuilder(UNARY, 2)
    s = nb.state(initial=True, accepting=(c == 0))
    nb.add(s, ("a", "a"), s)
    prev = s
    for i in range(c):
        t = nb.state(accepting=(i == c - 1))
        nb.add(prev, (PAD, "a"), t)
        prev = t
    return nb.to_dfa()


def _unary(ops: dict[str, Dfa], domain: Dfa | None = None) -> UnaryPresentation:
    L = domain if domain is not None else fa.universal_language(UNARY)
    return UnaryPresentation.of(Presentation.build(UNARY, L, operations=ops))


def build_nat_succ() -> UnaryPresentation:
    """(N, n+1) with n written a^n."""
    return _unary({"succ": _shift_graph(1)})


def build_plus_two() -> UnaryPresentation:
    """(N, n+2)."""
    return _unary({"plus2": _shift_graph(2)})


def build_identity() -> UnaryPresentation:
    return _unary({"id": _shift_graph(0)})


def build_max() -> UnaryPresentation:
    """(N, max): a binary operation."""
    nb = fa.NfaBuilder(UNARY, 3)
    s = nb.state(initial=True, accepting=True)
    left = nb.state(accepting=True)
    right = nb.state(accepting=True)
    nb.add(s, ("a", "a", "a"), s)
    nb.add(s, ("a", PAD, "a"), left)
    nb.add(left, ("a", PAD, "a"), left)
    nb.add(s, (PAD, "a", "a"), right)
    nb.add(right, (PAD, "a", "a"), right)
    return _unary({"max": nb.to_dfa()})


def build_bounce() -> UnaryPresentation:
    """n -> n+1 below 5, n -> n-2 from 5 on: every orbit ends in the cycle 3, 4, 5."""
    up = _shift_graph(1)
    nb = fa.NfaBuilder(UNARY, 2)
    states = [nb.state(initial=True)] + [nb.state() for _ in range(3)]
    for i in range(3):
        nb.add(states[i], ("a", "a"), states[i + 1])
    nb.add(states[3], ("a", "a"), states[3])
    a1 = nb.state()
    a2 = nb.state(accepting=True)
    nb.add(states[3], ("a", PAD), a1)
    nb.add(a1, ("a", PAD), a2)
    down = nb.to_dfa()  # (a^n, a^(n-2)) for n >= 5
    small = fa.intersection(up, fa.finite_language(UNARY, 2, [("a" * i, "a" * (i + 1)) for i in range(5)]))
    return _unary({"bounce": fa.union(small, down)})


def build_even_succ() -> Presentation:
    """Domain (aa)* with a^(2n) -> a^(2n+2): injective but not over all of a*."""
    nb = fa.NfaBuilder(UNARY, 1)
    s0, s1 = nb.state(initial=True, accepting=True), nb.state()
    nb.add(s0, ("a",), s1)
    nb.add(s1, ("a",), s0)
    even = nb.to_dfa()
    g = fa.restrict_tracks(_shift_graph(2), [even, even])
    return Presentation.build(UNARY, even, operations={"succ": g})


def unary_corpus() -> dict[str, UnaryPresentation]:
    return {
        "nat_succ": build_nat_succ(),
        "plus_two": build_plus_two(),
        "identity": build_identity(),
        "max": build_max(),
        "bounce": build_bounce(),
    }
