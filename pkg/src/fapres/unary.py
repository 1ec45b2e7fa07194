"""Injective unary presentations: pumping constant, grid calculus, normal form.

A word a^n of a unary presentation is drawn in a grid of D rows: it sits in
column n // D and row n % D.  Relation automata cannot tell apart tuples
that differ by shifting whole column blocks past an empty column, which is
what :func:`shift_tuple` does.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from . import automata as fa
from .automata import PAD, Dfa, Word
from .logic import compile_formula
from .presentation import Presentation, PresentationError, identity_relation, validate_presentation

UNARY = ("a",)


class UnaryError(PresentationError):
    pass


class ShiftError(ValueError):
    """A shift rule was applied outside its precondition."""


def _length(w: str | Iterable[str] | int) -> int:
    if isinstance(w, int):
        return w
    word = fa.as_word(w)
    if any(c != "a" for c in word):
        raise UnaryError(f"{''.join(word)!r} is not a unary word")
    return len(word)


def unary_word(n: int) -> Word:
    return ("a",) * n


# -- ultimately periodic length sets ------------------------------------------

@dataclass(frozen=True)
class LengthSet:
    """{n : n in head} for n < threshold, {n : (n - threshold) % period in cycle} beyond.

    ``head`` holds members below ``threshold``; ``cycle`` holds offsets in
    ``[0, period)``.  Finite sets have an empty cycle.
    """

    threshold: int
    period: int
    head: frozenset[int]
    cycle: frozenset[int]

    def __contains__(self, n: int) -> bool:
        if n < self.threshold:
            return n in self.head
        return (n - self.threshold) % self.period in self.cycle

    @property
    def finite(self) -> bool:
        return not self.cycle

    def __iter__(self) -> Iterator[int]:
        yield from sorted(self.head)
        if not self.cycle:
            return
        base = self.threshold
        offs = sorted(self.cycle)
        while True:
            for o in offs:
                yield base + o
            base += self.period

    def upto(self, bound: int) -> list[int]:
        """Members <= bound."""
        out = []
        for n in self:
            if n > bound:
                break
            out.append(n)
        return out

    def __len__(self) -> int:
        if self.cycle:
            raise UnaryError("infinite length set has no size")
        return len(self.head)

    @classmethod
    def from_dfa(cls, d: Dfa) -> "LengthSet":
        if d.arity != 1 or d.alphabet != UNARY:
            raise UnaryError("expected an arity-1 automaton over {a}")
        seen: dict[int, int] = {}
        path: list[int] = []
        s: int | None = d.initial
        while s is not None and s not in seen:
            seen[s] = len(path)
            path.append(s)
            s = d.delta[s].get(("a",))
        acc = [q in d.accepting for q in path]
        if s is None:
            return cls(len(path), 1, frozenset(i for i, x in enumerate(acc) if x), frozenset())
        mu = seen[s]
        lam = len(path) - mu
        return cls(
            mu,
            lam,
            frozenset(i for i in range(mu) if acc[i]),
            frozenset(i - mu for i in range(mu, len(path)) if acc[i]),
        )

    @classmethod
    def from_rule(cls, threshold: int, period: int, member: Callable[[int], bool]) -> "LengthSet":
        """Set that agrees with ``member`` below threshold+period and is periodic after."""
        return cls(
            threshold,
            period,
            frozenset(n for n in range(threshold) if member(n)),
            frozenset(o for o in range(period) if member(threshold + o)),
        )

    def to_dfa(self) -> Dfa:
        n = self.threshold + (self.period if self.cycle else 0)
        delta: list[dict] = [{} for _ in range(max(n, 1))]
        for i in range(n - 1):
            delta[i][("a",)] = i + 1
        if self.cycle:
            delta[n - 1][("a",)] = self.threshold
        accepting = set(self.head) | {self.threshold + o for o in self.cycle}
        return fa.build_dfa(UNARY, 1, 0, accepting, delta)


def lengths(d: Dfa) -> LengthSet:
    return LengthSet.from_dfa(d)


def words_dfa(ns: Iterable[int]) -> Dfa:
    """Finite unary language {a^n : n in ns}."""
    return fa.finite_language(UNARY, 1, [unary_word(n) for n in ns])


def periodic_extension(ns: Iterable[int], step: int) -> Dfa:
    """{a^(n + k*step) : n in ns, k >= 0}."""
    ns = sorted(set(ns))
    if not ns:
        return fa.empty_language(UNARY, 1)
    top = ns[-1]
    residues = {n % step for n in ns}
    members = set(ns)
    return LengthSet.from_rule(
        top, step, lambda n: n in members if n < top else n % step in residues
    ).to_dfa()


# -- pumping constant ---------------------------------------------------------

def letter_cycle_lengths(d: Dfa) -> set[int]:
    """Cycle lengths of the partial map q -> delta(q, b), for every letter b."""
    out: set[int] = set()
    for b in d.letters():
        done: set[int] = set()
        for start in range(d.num_states):
            if start in done:
                continue
            order: dict[int, int] = {}
            s: int | None = start
            while s is not None and s not in order and s not in done:
                order[s] = len(order)
                s = d.delta[s].get(b)
            if s is not None and s in order:
                out.add(len(order) - order[s])
            done.update(order)
    return out


def compute_pumping_constant(p: Presentation) -> int:
    """Least multiple of every single-letter cycle length exceeding every state count.

    Ranges over the relation and operation automata together with the
    domain and equality automata.
    """
    if p.alphabet != UNARY:
        raise UnaryError(f"alphabet {p.alphabet!r} is not unary")
    autos = [p.domain, p.equality, *p.interpretations.values()]
    period = math.lcm(1, *(c for d in autos for c in letter_cycle_lengths(d)))
    most = max(d.num_states for d in autos)
    return period * (most // period + 1)


def _is_initial_segment(d: Dfa) -> int | None:
    """Size M if d accepts exactly {a^0 .. a^(M-1)}, -1 for a*, else None."""
    ls = lengths(d)
    if ls.finite:
        m = len(ls)
        return m if ls.head == frozenset(range(m)) else None
    if ls.head == frozenset(range(ls.threshold)) and ls.cycle == frozenset(range(ls.period)):
        return -1
    return None


@dataclass(frozen=True)
class UnaryPresentation:
    """An injective presentation over {a} with its pumping constant D.

    The domain is a* or, for finite structures, an initial segment
    {a^0, ..., a^(M-1)}.
    """

    presentation: Presentation
    D: int

    def __post_init__(self):
        p = self.presentation
        if p.alphabet != UNARY:
            raise UnaryError(f"alphabet {p.alphabet!r} is not unary")
        if _is_initial_segment(p.domain) is None:
            raise UnaryError("domain must be a* or an initial segment of a*")
        if not p.injective:
            raise UnaryError("presentation is not injective")
        if self.D < 1:
            raise UnaryError("pumping constant must be positive")

    @classmethod
    def of(cls, p: Presentation) -> "UnaryPresentation":
        return cls(p, compute_pumping_constant(p))

    @property
    def full_domain(self) -> bool:
        return _is_initial_segment(self.presentation.domain) == -1

    @property
    def max_arity(self) -> int:
        return self.presentation.signature.max_operation_arity

    def __getattr__(self, name):
        # delegate read-only presentation attributes
        if name.startswith("_"):
            raise AttributeError(name)
        return getattr(self.presentation, name)


# -- grid ---------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class GridCoord:
    x: int
    y: int

    def length(self, D: int) -> int:
        return self.x * D + self.y


def grid(w: str | Iterable[str] | int, D: int) -> GridCoord:
    if D < 1:
        raise ValueError("D must be positive")
    x, y = divmod(_length(w), D)
    return GridCoord(x, y)


def column(w: str | Iterable[str] | int, D: int) -> int:
    return _length(w) // D


def _marker(i: int) -> str:
    return str(i + 1) if i < 9 else chr(ord("a") + i - 9)


def render_grid(words: Sequence[str | Iterable[str] | int], D: int, width: int | None = None) -> str:
    """ASCII drawing of a tuple: row D-1 on top, component i marked i+1.

    Cells holding several components show '+'.  ``width`` is the number of
    columns drawn (default: enough to show every component).
    """
    coords = [grid(w, D) for w in words]
    if width is None:
        width = max((c.x for c in coords), default=0) + 1
    cells: dict[tuple[int, int], list[int]] = {}
    for i, c in enumerate(coords):
        cells.setdefault((c.x, c.y), []).append(i)
    label = len(str(D - 1))
    lines = []
    for y in range(D - 1, -1, -1):
        row = []
        for x in range(width):
            here = cells.get((x, y), [])
            row.append("." if not here else _marker(here[0]) if len(here) == 1 else "+")
        lines.append(f"{y:>{label}} " + "".join(row))
    lines.append(" " * (label + 1) + "".join(str(x % 10) for x in range(width)))
    return "\n".join(lines)


def tau(w: str | Iterable[str] | int, n: int, D: int) -> Word | None:
    """Move a word n columns (n*D letters); None if it would pass column 0."""
    k = _length(w) + n * D
    return unary_word(k) if k >= 0 else None


def shift_tuple(
    t: Sequence[str | Iterable[str] | int],
    rule: str,
    gap: tuple[int, int] | int,
    k: int,
    D: int,
) -> tuple[Word, ...]:
    """Apply a shift rule across an empty column interval.

    ``gap`` is a closed column interval (x0, x1), or a single column.
    Components right of the gap move k columns right (``rule="right"``) or
    left (``rule="left"``, which needs k <= x1 - x0).
    """
    x0, x1 = (gap, gap) if isinstance(gap, int) else gap
    if x0 > x1 or x0 < 0:
        raise ShiftError(f"bad column interval {gap!r}")
    if k < 1:
        raise ShiftError("k must be positive")
    ns = [_length(w) for w in t]
    for i, n in enumerate(ns):
        if x0 <= n // D <= x1:
            raise ShiftError(f"component {i + 1} lies in the gap C[{x0},{x1}]")
    if rule == "right":
        step = k * D
    elif rule == "left":
        if k > x1 - x0:
            raise ShiftError(f"left shift by {k} needs a gap wider than {x1 - x0}")
        step = -k * D
    else:
        raise ShiftError(f"unknown rule {rule!r}")
    return tuple(unary_word(n + step if n // D > x1 else n) for n in ns)


@dataclass(frozen=True)
class ColumnWindow:
    start: int
    width: int
    contents: tuple[frozenset[int], ...]

    def words(self, D: int) -> list[int]:
        return sorted((self.start + i) * D + y for i, rows in enumerate(self.contents) for y in rows)

    def shifted(self, n: int) -> "ColumnWindow":
        return ColumnWindow(self.start + n, self.width, self.contents)


def column_slice(L: Dfa | LengthSet, x: int, y: int, D: int) -> ColumnWindow:
    """Rows of L present in each column of C[x, y]."""
    if x > y:
        raise ValueError("need x <= y")
    ls = L if isinstance(L, LengthSet) else lengths(L)
    contents = tuple(
        frozenset(r for r in range(D) if c * D + r in ls) for c in range(x, y + 1)
    )
    return ColumnWindow(x, y - x + 1, contents)


# -- normal form ----------------------------------------------------------------

def _shorter() -> Dfa:
    """{(a^i, a^j) : i < j}."""
    nb = fa.NfaBuilder(UNARY, 2)
    s = nb.state(initial=True)
    t = nb.state(accepting=True)
    nb.add(s, ("a", "a"), s)
    nb.add(s, (PAD, "a"), t)
    nb.add(t, (PAD, "a"), t)
    return nb.to_dfa()


def _reindex(R: Dfa, nxt: Callable[[int], int | None], gap: Callable[[int], int], start: int) -> Dfa:
    """Automaton for {(a^i1..a^ik) : (a^s(i1)..a^s(ik)) in R}.

    Index classes abstract positions n of the survivor sequence s: reading
    letter b at class t stands for b repeated gap(t) = s(n+1) - s(n) times.
    """
    k = R.arity

    def run(q: int, b, times: int) -> int | None:
        for _ in range(times):
            q = R.delta[q].get(b)
            if q is None:
                return None
        return q

    q0 = run(R.initial, ("a",) * k, start)
    if q0 is None:
        return fa.empty_language(UNARY, k)
    ids = {(q0, 0): 0}
    order = [(q0, 0)]
    delta: list[dict] = []
    letters = fa.tuple_letters(UNARY, k)
    i = 0
    while i < len(order):
        q, t = order[i]
        i += 1
        row = {}
        t2 = nxt(t)
        if t2 is not None:
            for b in letters:
                q2 = run(q, b, gap(t))
                if q2 is None:
                    continue
                key = (q2, t2)
                if key not in ids:
                    ids[key] = len(order)
                    order.append(key)
                row[b] = ids[key]
        delta.append(row)
    accepting = {ids[s] for s in order if s[0] in R.accepting}
    return fa.build_dfa(UNARY, k, 0, accepting, delta)


def _saturate(p: Presentation, name: str, k: int) -> Dfa:
    """Tuples equal componentwise to some tuple of the relation."""
    xs = [f"x{i}" for i in range(k)]
    vs = [f"v{i}" for i in range(k)]
    body = f"(and {' '.join(f'(= {v} {x})' for v, x in zip(vs, xs))} (rel {name} {' '.join(vs)}))"
    for v in reversed(vs):
        body = f"(exists {v} {body})"
    return compile_formula(p, body, xs).automaton


def normalize_injective(p: Presentation) -> UnaryPresentation:
    """Equivalent injective presentation whose domain is a* (or an initial segment).

    Each equality class keeps its shortest word; the n-th shortest survivor
    becomes a^n and every relation is re-read through that renumbering.
    """
    if p.alphabet != UNARY:
        raise UnaryError(f"alphabet {p.alphabet!r} is not unary")
    report = validate_presentation(p)
    if not report.ok:
        bad = ", ".join(c.name for c in report.failures())
        raise UnaryError(f"presentation fails validation: {bad}")
    S = compile_formula(
        p,
        "(and (= w w) (not (exists v (and (= v w) (rel _shorter v w)))))",
        ["w"],
        {"_shorter": _shorter()},
    ).automaton
    ls = lengths(S)
    head = sorted(ls.head)
    if ls.finite:
        m = len(head)
        if m == 0:
            raise UnaryError("empty domain")
        nxt = lambda t: t + 1 if t + 1 < m else None  # noqa: E731
        gap = lambda t: head[t + 1] - head[t]  # noqa: E731
        domain = words_dfa(range(m))
    else:
        cyc = [ls.threshold + o for o in sorted(ls.cycle)]
        seq = head + cyc + [cyc[0] + ls.period]
        c, j = len(head), len(cyc)
        classes = c + j
        nxt = lambda t: t + 1 if t + 1 < classes else c  # noqa: E731
        gap = lambda t: seq[t + 1] - seq[t]  # noqa: E731
        domain = fa.universal_language(UNARY)
    start = (head + ([] if ls.finite else [ls.threshold + min(ls.cycle)]))[0]
    interps = {}
    for name, R in p.interpretations.items():
        if not p.injective:
            R = fa.restrict_tracks(_saturate(p, name, R.arity), [S] * R.arity)
        interps[name] = _reindex(R, nxt, gap, start)
    q = Presentation(UNARY, p.signature, domain, identity_relation(domain), interps)
    return UnaryPresentation.of(q)
