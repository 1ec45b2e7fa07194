"""Subalgebras of algebras with injective unary presentations.

The language of words representing the subalgebra generated by a finite
set is regular and computable: grow the set by applying operations, and
whenever a window of r+1 consecutive columns embeds into a later window,
extend everything from that column on periodically.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence

from . import automata as fa
from .automata import Dfa
from .presentation import Presentation, identity_relation
from .unary import UNARY, UnaryError, UnaryPresentation, column_slice, lengths, periodic_extension, words_dfa


class SubalgebraError(UnaryError):
    pass


class ResourceExhausted(RuntimeError):
    pass


def _unary(p: UnaryPresentation | Presentation) -> UnaryPresentation:
    return p if isinstance(p, UnaryPresentation) else UnaryPresentation.of(p)


def _lengths_of(words: Iterable) -> list[int]:
    out = []
    for w in words:
        if isinstance(w, int):
            out.append(w)
            continue
        word = fa.as_word(w)
        if any(c != "a" for c in word):
            raise SubalgebraError(f"{''.join(word)!r} is not a unary word")
        out.append(len(word))
    return out


def one_step_image(p: UnaryPresentation | Presentation, Li: Dfa) -> Dfa:
    """Words obtained by one application of some operation to arguments from Li."""
    pres = p.presentation if isinstance(p, UnaryPresentation) else p
    out = fa.empty_language(pres.alphabet, 1)
    for name, k in pres.signature.operations:
        d = fa.restrict_tracks(pres.interpretations[name], [Li] * k + [None])
        for _ in range(k):
            d = fa.project(d, 0)
        out = fa.union(out, d)
    return out


def window_embeds(Li, h: int, h2: int, D: int, r: int) -> bool:
    """L[h, h+r] moved h2-h columns right lies inside L[h2, h2+r]."""
    a = column_slice(Li, h, h + r, D).contents
    b = column_slice(Li, h2, h2 + r, D).contents
    return all(x <= y for x, y in zip(a, b))


def find_shift_pair(Li: Dfa, D: int, r: int, min_h: int = 0) -> tuple[int, int]:
    """Least (h, h') with h >= min_h, h' > h and L[h,h+r] shifted into L[h',h'+r].

    Column contents repeat from column ceil(T/D) on with period P/gcd(P, D)
    (T, P the threshold and period of Li's length set), so the search box
    is finite and always contains a solution.
    """
    ls = lengths(Li)
    tc = -(-ls.threshold // D)
    pc = ls.period // gcd(ls.period, D)
    h0 = max(min_h, tc)
    for h in range(min_h, h0 + 1):
        for h2 in range(h + 1, max(h + 1, tc) + pc + 1):
            if window_embeds(ls, h, h2, D, r):
                return h, h2
    raise AssertionError("periodic columns always admit a shift pair")  # pragma: no cover


@dataclass(frozen=True)
class ClosureStep:
    index: int
    language: Dfa
    h: int
    h_prime: int
    image: Dfa
    extension: Dfa
    generated: frozenset[int]


@dataclass(frozen=True)
class ClosureTrace:
    steps: tuple[ClosureStep, ...]
    final: Dfa

    def to_json(self) -> dict:
        from .serialize import dfa_to_json

        return {
            "iterations": [
                {
                    "i": s.index,
                    "L_i": dfa_to_json(s.language),
                    "h": s.h,
                    "h_prime": s.h_prime,
                    "K_next": dfa_to_json(s.image),
                    "extension": dfa_to_json(s.extension),
                    "generated": sorted(s.generated),
                }
                for s in self.steps
            ],
            "final": dfa_to_json(self.final),
        }


def closure_language(
    p: UnaryPresentation | Presentation,
    X: Sequence,
    max_iterations: int = 10000,
) -> tuple[Dfa, ClosureTrace]:
    """Automaton for the words representing the subalgebra generated by X.

    ``L_{i+1} = L_i + periodic extension + one-step image of L_i``; stops
    when nothing new appears.  Shift pairs are read from ``B_i``, the words
    with a derivation of depth at most i, and only accepted with
    ``h >= max column of X - r``: under those conditions every extended
    word provably belongs to the subalgebra.
    """
    up = _unary(p)
    pres = up.presentation
    D, r = up.D, up.max_arity
    gens = _lengths_of(X)
    if not gens:
        raise SubalgebraError("need at least one generator")
    for n in gens:
        if not pres.domain.contains(("a",) * n):
            raise SubalgebraError(f"a^{n} is not in the domain")
    min_h = max(0, max(gens) // D - r)
    B = frozenset(gens)
    L = words_dfa(B)
    steps = []
    for i in range(max_iterations):
        K = one_step_image(up, L)
        Bd = words_dfa(B)
        h, h2 = find_shift_pair(Bd, D, r, min_h)
        E = periodic_extension([n for n in B if n // D >= h], D * (h2 - h))
        nxt = fa.union(fa.union(L, E), K)
        steps.append(ClosureStep(i, L, h, h2, K, E, B))
        if nxt == L:
            return L, ClosureTrace(tuple(steps), L)
        L = nxt
        B = B | frozenset(lengths(one_step_image(up, Bd)).head)
    raise ResourceExhausted(f"no fixpoint after {max_iterations} iterations")


def is_member(p: UnaryPresentation | Presentation, X: Sequence, w) -> bool:
    """Does w represent an element of the subalgebra generated by X?"""
    (n,) = _lengths_of([w])
    if n in _lengths_of(X):
        return True
    L, _ = closure_language(p, X)
    return L.contains(("a",) * n)


def induced_presentation(p: UnaryPresentation | Presentation, X: Sequence) -> Presentation:
    """Presentation of the generated subalgebra: restrict everything to its language."""
    up = _unary(p)
    pres = up.presentation
    L, _ = closure_language(up, X)
    interps = {
        name: fa.restrict_tracks(d, [L] * d.arity) for name, d in pres.interpretations.items()
    }
    return Presentation(UNARY, pres.signature, L, identity_relation(L), interps)
