"""Finite automata over padded tuple alphabets.

A relation of arity ``r`` over an alphabet ``A`` is encoded by the language of
its convolutions: words whose letters are ``r``-tuples over ``A`` plus the pad
token ``"$"``.  Every automaton produced here is a trimmed, minimized,
canonically numbered partial DFA, so two automata recognize the same language
exactly when they compare equal.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping, Sequence

PAD = "$"

Letter = tuple[str, ...]
Word = tuple[str, ...]
PaddedWord = tuple[Letter, ...]


class AutomatonError(ValueError):
    """Invalid automaton input (alphabet mismatch, bad letter, bad padding)."""


class PaddingError(AutomatonError):
    pass


def as_word(w: str | Iterable[str]) -> Word:
    """Normalize a word given as a string of one-character symbols or a sequence."""
    return tuple(w)


def make_alphabet(symbols: Iterable[str]) -> tuple[str, ...]:
    syms = tuple(symbols)
    if not syms:
        raise AutomatonError("alphabet must be non-empty")
    if len(set(syms)) != len(syms):
        raise AutomatonError(f"duplicate symbols in alphabet {syms!r}")
    for s in syms:
        if not isinstance(s, str) or not s or not s.isprintable():
            raise AutomatonError(f"invalid symbol {s!r}")
        if s == PAD:
            raise AutomatonError("the pad token '$' cannot be an alphabet symbol")
    return syms


def conv(words: Sequence[str | Iterable[str]], alphabet: Sequence[str] | None = None) -> PaddedWord:
    """Convolution of a tuple of words: track ``i`` reads word ``i`` then pads."""
    ws = [as_word(w) for w in words]
    if not ws:
        raise AutomatonError("conv needs at least one word")
    if alphabet is not None:
        allowed = set(alphabet)
        for w in ws:
            bad = [s for s in w if s not in allowed]
            if bad:
                raise AutomatonError(f"symbol {bad[0]!r} not in alphabet")
    n = max(len(w) for w in ws)
    return tuple(tuple(w[i] if i < len(w) else PAD for w in ws) for i in range(n))


def deconv(padded: Sequence[Sequence[str]], arity: int | None = None) -> tuple[Word, ...]:
    """Inverse of :func:`conv`; raises :class:`PaddingError` on non-suffix padding."""
    letters = [tuple(l) for l in padded]
    if arity is None:
        if not letters:
            raise AutomatonError("arity required to deconvolve the empty word")
        arity = len(letters[0])
    out: list[list[str]] = [[] for _ in range(arity)]
    ended = [False] * arity
    for pos, letter in enumerate(letters):
        if len(letter) != arity:
            raise AutomatonError(f"letter {letter!r} has wrong arity")
        if all(c == PAD for c in letter):
            raise PaddingError(f"all-pad letter at position {pos}")
        for i, c in enumerate(letter):
            if c == PAD:
                ended[i] = True
            elif ended[i]:
                raise PaddingError(f"track {i} resumes after padding at position {pos}")
            else:
                out[i].append(c)
    return tuple(tuple(w) for w in out)


def is_valid_padded(padded: Sequence[Letter]) -> bool:
    try:
        if padded:
            deconv(padded)
    except AutomatonError:
        return False
    return True


def letter_key(alphabet: Sequence[str]):
    """Sort key on letters: declared symbol order, pad last."""
    idx = {s: i for i, s in enumerate(alphabet)}
    idx[PAD] = len(alphabet)
    return lambda letter: tuple(idx[c] for c in letter)


def tuple_letters(alphabet: Sequence[str], arity: int) -> list[Letter]:
    """All letters of the tuple alphabet (the all-pad tuple excluded), sorted."""
    syms = list(alphabet) + [PAD]
    return [l for l in product(syms, repeat=arity) if any(c != PAD for c in l)]


@dataclass(frozen=True, eq=False)
class Dfa:
    """Canonical minimal partial DFA over ``arity``-tuples of ``alphabet``.

    Missing transitions reject.  Instances are only created through
    :func:`build_dfa` (or operations using it), which trims, minimizes and
    renumbers states in breadth-first order.
    """

    alphabet: tuple[str, ...]
    arity: int
    initial: int
    accepting: frozenset[int]
    delta: tuple[Mapping[Letter, int], ...]

    @property
    def num_states(self) -> int:
        return len(self.delta)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Dfa):
            return NotImplemented
        return (
            self.alphabet == other.alphabet
            and self.arity == other.arity
            and self.initial == other.initial
            and self.accepting == other.accepting
            and self.delta == other.delta
        )

    def __hash__(self) -> int:
        return hash((self.alphabet, self.arity, self.num_states, self.accepting))

    def __repr__(self) -> str:
        ntrans = sum(len(d) for d in self.delta)
        return (
            f"Dfa(alphabet={self.alphabet!r}, arity={self.arity}, states={self.num_states}, "
            f"accepting={sorted(self.accepting)}, transitions={ntrans})"
        )

    def run(self, padded: Iterable[Sequence[str]]) -> int | None:
        state: int | None = self.initial
        for letter in padded:
            state = self.delta[state].get(tuple(letter))
            if state is None:
                return None
        return state

    def accepts(self, padded: Iterable[Sequence[str]]) -> bool:
        """Membership of a padded word (a sequence of letters)."""
        state = self.run(padded)
        return state is not None and state in self.accepting

    def contains(self, *words: str | Iterable[str]) -> bool:
        """Membership of a word tuple, i.e. of ``conv(words)``."""
        if len(words) != self.arity:
            raise AutomatonError(f"expected {self.arity} words, got {len(words)}")
        if self.arity == 0:
            return self.initial in self.accepting
        return self.accepts(conv(words))

    def is_empty(self) -> bool:
        return not self.accepting

    def letters(self) -> set[Letter]:
        return {l for d in self.delta for l in d}

    def sort_key(self):
        return letter_key(self.alphabet)


def _check_letter(letter: Letter, alphabet: Sequence[str], arity: int) -> None:
    if len(letter) != arity:
        raise AutomatonError(f"letter {letter!r} does not have arity {arity}")
    if arity and all(c == PAD for c in letter):
        raise AutomatonError("the all-pad letter is not part of a tuple alphabet")
    for c in letter:
        if c != PAD and c not in alphabet:
            raise AutomatonError(f"symbol {c!r} not in alphabet")


def build_dfa(
    alphabet: Sequence[str],
    arity: int,
    initial: int,
    accepting: Iterable[int],
    delta: Sequence[Mapping[Letter, int]],
) -> Dfa:
    """Trim, minimize and canonically renumber a partial DFA."""
    alphabet = tuple(alphabet)
    accepting = set(accepting)
    n = len(delta)

    reach = {initial}
    stack = [initial]
    while stack:
        s = stack.pop()
        for t in delta[s].values():
            if t not in reach:
                reach.add(t)
                stack.append(t)
    rev: dict[int, list[int]] = defaultdict(list)
    for s in reach:
        for t in delta[s].values():
            rev[t].append(s)
    live = {s for s in reach if s in accepting}
    stack = list(live)
    while stack:
        t = stack.pop()
        for s in rev[t]:
            if s not in live:
                live.add(s)
                stack.append(s)
    if initial not in live:
        return Dfa(alphabet, arity, 0, frozenset(), ({},))

    states = sorted(live)
    trans = {s: {l: t for l, t in delta[s].items() if t in live} for s in states}

    # Moore partition refinement; missing transitions go to an implicit dead class.
    cls = {s: int(s in accepting) for s in states}
    nclasses = len(set(cls.values()))
    while True:
        sigs: dict[tuple, int] = {}
        new = {}
        for s in states:
            sig = (cls[s], frozenset((l, cls[t]) for l, t in trans[s].items()))
            new[s] = sigs.setdefault(sig, len(sigs))
        cls = new
        if len(sigs) == nclasses:
            break
        nclasses = len(sigs)

    rep: dict[int, int] = {}
    for s in states:
        rep.setdefault(cls[s], s)
    key = letter_key(alphabet)
    order = {cls[initial]: 0}
    queue = deque([cls[initial]])
    new_delta: list[dict[Letter, int]] = []
    new_acc = set()
    while queue:
        c = queue.popleft()
        s = rep[c]
        if s in accepting:
            new_acc.add(order[c])
        row = {}
        for l in sorted(trans[s], key=key):
            tc = cls[trans[s][l]]
            if tc not in order:
                order[tc] = len(order)
                queue.append(tc)
            row[l] = order[tc]
        new_delta.append(row)
    return Dfa(alphabet, arity, 0, frozenset(new_acc), tuple(new_delta))


class NfaBuilder:
    """Incremental NFA (with epsilon moves) that determinizes to a :class:`Dfa`."""

    def __init__(self, alphabet: Sequence[str], arity: int):
        self.alphabet = make_alphabet(alphabet)
        self.arity = arity
        self.trans: list[dict[Letter, set[int]]] = []
        self.eps: list[set[int]] = []
        self.initial: set[int] = set()
        self.accepting: set[int] = set()

    def state(self, initial: bool = False, accepting: bool = False) -> int:
        self.trans.append(defaultdict(set))
        self.eps.append(set())
        s = len(self.trans) - 1
        if initial:
            self.initial.add(s)
        if accepting:
            self.accepting.add(s)
        return s

    def add(self, p: int, letter: Sequence[str], q: int) -> None:
        letter = tuple(letter)
        _check_letter(letter, self.alphabet, self.arity)
        self.trans[p][letter].add(q)

    def add_eps(self, p: int, q: int) -> None:
        self.eps[p].add(q)

    def _closure(self, states: Iterable[int]) -> frozenset[int]:
        seen = set(states)
        stack = list(seen)
        while stack:
            s = stack.pop()
            for t in self.eps[s]:
                if t not in seen:
                    seen.add(t)
                    stack.append(t)
        return frozenset(seen)

    def to_dfa(self) -> Dfa:
        start = self._closure(self.initial)
        index = {start: 0}
        delta: list[dict[Letter, int]] = []
        acc = []
        queue = deque([start])
        while queue:
            S = queue.popleft()
            if S & self.accepting:
                acc.append(index[S])
            moves: dict[Letter, set[int]] = defaultdict(set)
            for s in S:
                for l, ts in self.trans[s].items():
                    moves[l] |= ts
            row = {}
            for l, ts in moves.items():
                T = self._closure(ts)
                if T not in index:
                    index[T] = len(index)
                    queue.append(T)
                row[l] = index[T]
            delta.append(row)
        return build_dfa(self.alphabet, self.arity, 0, acc, delta)


def from_transitions(
    alphabet: Sequence[str],
    arity: int,
    initial: int,
    accepting: Iterable[int],
    transitions: Iterable[tuple[int, Sequence[str], int]],
    num_states: int | None = None,
) -> Dfa:
    """Build from an explicit (possibly nondeterministic) transition list."""
    nb = NfaBuilder(alphabet, arity)
    trans = list(transitions)
    n = num_states
    if n is None:
        n = 1 + max([initial, *accepting, *(max(p, q) for p, _, q in trans)])
    for _ in range(n):
        nb.state()
    nb.initial.add(initial)
    nb.accepting.update(accepting)
    for p, l, q in trans:
        nb.add(p, l, q)
    return nb.to_dfa()


def empty_language(alphabet: Sequence[str], arity: int) -> Dfa:
    return Dfa(make_alphabet(alphabet), arity, 0, frozenset(), ({},))


def epsilon_language(alphabet: Sequence[str], arity: int) -> Dfa:
    """The language {conv(eps, ..., eps)} (for arity 0: the 'true' relation)."""
    return Dfa(make_alphabet(alphabet), arity, 0, frozenset({0}), ({},))


def finite_language(alphabet: Sequence[str], arity: int, tuples: Iterable[Sequence]) -> Dfa:
    """Automaton for a finite set of word tuples (a single word per tuple if arity 1)."""
    nb = NfaBuilder(alphabet, arity)
    root = nb.state(initial=True)
    children: dict[tuple[int, Letter], int] = {}
    for t in tuples:
        words = (t,) if arity == 1 else tuple(t)
        s = root
        for letter in conv(words, nb.alphabet) if arity else ():
            nxt = children.get((s, letter))
            if nxt is None:
                nxt = nb.state()
                nb.add(s, letter, nxt)
                children[(s, letter)] = nxt
            s = nxt
        nb.accepting.add(s)
    return nb.to_dfa()


def universal_language(alphabet: Sequence[str]) -> Dfa:
    """A* as an arity-1 automaton."""
    alphabet = make_alphabet(alphabet)
    return build_dfa(alphabet, 1, 0, [0], [{(s,): 0 for s in alphabet}])


def valid_conv_language(alphabet: Sequence[str], r: int) -> Dfa:
    """Exactly the convolutions of r-tuples of words over ``alphabet``."""
    alphabet = make_alphabet(alphabet)
    if r < 1:
        raise AutomatonError("arity must be at least 1")
    index: dict[frozenset[int], int] = {}
    delta: list[dict[Letter, int]] = []
    start = frozenset()
    index[start] = 0
    delta.append({})
    queue = deque([start])
    while queue:
        ended = queue.popleft()
        row = delta[index[ended]]
        for letter in tuple_letters(alphabet, r):
            if any(letter[i] != PAD for i in ended):
                continue
            nxt = ended | {i for i, c in enumerate(letter) if c == PAD}
            if nxt not in index:
                index[nxt] = len(delta)
                delta.append({})
                queue.append(nxt)
            row[letter] = index[nxt]
    return build_dfa(alphabet, r, 0, range(len(delta)), delta)


def _same_space(a: Dfa, b: Dfa) -> None:
    if a.alphabet != b.alphabet or a.arity != b.arity:
        raise AutomatonError(
            f"alphabet mismatch: {a.alphabet!r}/{a.arity} vs {b.alphabet!r}/{b.arity}"
        )


def _product(a: Dfa, b: Dfa, accept, explore_b: bool) -> Dfa:
    """Synchronous product; a missing side is the dead state ``None``."""
    index = {(a.initial, b.initial): 0}
    delta: list[dict[Letter, int]] = [{}]
    acc = []
    queue = deque([(a.initial, b.initial)])
    while queue:
        p, q = queue.popleft()
        i = index[(p, q)]
        if accept(p is not None and p in a.accepting, q is not None and q in b.accepting):
            acc.append(i)
        letters = set(a.delta[p]) if p is not None else set()
        if explore_b and q is not None:
            letters |= set(b.delta[q])
        row = delta[i]
        for l in letters:
            np_ = a.delta[p].get(l) if p is not None else None
            nq = b.delta[q].get(l) if q is not None else None
            if np_ is None and nq is None:
                continue
            key = (np_, nq)
            if key not in index:
                index[key] = len(delta)
                delta.append({})
                queue.append(key)
            row[l] = index[key]
    return build_dfa(a.alphabet, a.arity, 0, acc, delta)


def union(a: Dfa, b: Dfa) -> Dfa:
    _same_space(a, b)
    return _product(a, b, lambda x, y: x or y, explore_b=True)


def intersection(a: Dfa, b: Dfa) -> Dfa:
    _same_space(a, b)
    return _product(a, b, lambda x, y: x and y, explore_b=False)


def difference(a: Dfa, b: Dfa) -> Dfa:
    _same_space(a, b)
    return _product(a, b, lambda x, y: x and not y, explore_b=False)


def complement(a: Dfa, universe: Dfa | None = None) -> Dfa:
    """Complement relative to ``universe`` (default: all valid convolutions)."""
    if universe is None:
        if a.arity == 0:
            universe = epsilon_language(a.alphabet, 0)
        else:
            universe = valid_conv_language(a.alphabet, a.arity)
    return difference(universe, a)


def combine(kind: str, a: Dfa, b: Dfa | None = None) -> Dfa:
    """Boolean combination by name: union, intersection, complement, difference."""
    if kind == "complement":
        return complement(a)
    if b is None:
        raise AutomatonError(f"{kind} needs two automata")
    ops = {"union": union, "intersection": intersection, "difference": difference}
    if kind not in ops:
        raise AutomatonError(f"unknown combination {kind!r}")
    return ops[kind](a, b)


def project(a: Dfa, track: int) -> Dfa:
    """Existentially quantify away 0-based ``track``; arity may drop to 0."""
    if not 0 <= track < a.arity:
        raise AutomatonError(f"track {track} out of range for arity {a.arity}")

    def drop(l: Letter) -> Letter:
        return l[:track] + l[track + 1 :]

    # Letters whose only non-pad symbol is on the dropped track form a tail.
    tail_acc = set()
    rev: dict[int, list[int]] = defaultdict(list)
    for s, row in enumerate(a.delta):
        for l, t in row.items():
            if all(c == PAD for c in drop(l)):
                rev[t].append(s)
    stack = list(a.accepting)
    tail_acc.update(stack)
    while stack:
        t = stack.pop()
        for s in rev[t]:
            if s not in tail_acc:
                tail_acc.add(s)
                stack.append(s)

    start = frozenset({a.initial})
    index = {start: 0}
    delta: list[dict[Letter, int]] = [{}]
    acc = []
    queue = deque([start])
    while queue:
        S = queue.popleft()
        i = index[S]
        if S & tail_acc:
            acc.append(i)
        moves: dict[Letter, set[int]] = defaultdict(set)
        for s in S:
            for l, t in a.delta[s].items():
                dl = drop(l)
                if any(c != PAD for c in dl):
                    moves[dl].add(t)
        for dl, ts in moves.items():
            T = frozenset(ts)
            if T not in index:
                index[T] = len(delta)
                delta.append({})
                queue.append(T)
            delta[i][dl] = index[T]
    return build_dfa(a.alphabet, a.arity - 1, 0, acc, delta)


def project_existential(a: Dfa, track: int) -> Dfa:
    """Public projection with 1-based ``track``; arity must be at least 2."""
    if a.arity < 2:
        raise AutomatonError("projection needs arity >= 2; use emptiness for arity 1")
    if not 1 <= track <= a.arity:
        raise AutomatonError(f"track {track} out of range 1..{a.arity}")
    return project(a, track - 1)


def permute(a: Dfa, order: Sequence[int]) -> Dfa:
    """Reorder tracks: new track ``i`` is old track ``order[i]``."""
    if sorted(order) != list(range(a.arity)):
        raise AutomatonError(f"{order!r} is not a permutation of the tracks")
    delta = [{tuple(l[j] for j in order): t for l, t in row.items()} for row in a.delta]
    return build_dfa(a.alphabet, a.arity, a.initial, a.accepting, delta)


def join(a: Dfa, vars_a: Sequence[str], b: Dfa, vars_b: Sequence[str]) -> tuple[Dfa, tuple[str, ...]]:
    """Natural join of two relations on named tracks.

    The result's tracks are ``vars_a`` followed by the variables of ``vars_b``
    not already present.  Only letters compatible on shared variables are
    explored, so no cylindrification blow-up occurs.
    """
    if a.alphabet != b.alphabet:
        raise AutomatonError("alphabet mismatch in join")
    vars_a, vars_b = tuple(vars_a), tuple(vars_b)
    if len(set(vars_a)) != len(vars_a) or len(set(vars_b)) != len(vars_b):
        raise AutomatonError("repeated variable in join")
    out_vars = vars_a + tuple(v for v in vars_b if v not in vars_a)
    shared_b = [i for i, v in enumerate(vars_b) if v in vars_a]
    shared_a = [vars_a.index(vars_b[i]) for i in shared_b]
    extra_b = [i for i, v in enumerate(vars_b) if v not in vars_a]
    pad_a = (PAD,) * a.arity
    pad_b = (PAD,) * b.arity
    FIN = -1

    def options(d: Dfa, s: int, pad: Letter):
        opts = []
        if s != FIN:
            opts.extend(d.delta[s].items())
            if s in d.accepting:
                opts.append((pad, FIN))
        else:
            opts.append((pad, FIN))
        return opts

    index = {(a.initial, b.initial): 0}
    delta: list[dict[Letter, int]] = [{}]
    acc = []
    queue = deque([(a.initial, b.initial)])
    while queue:
        p, q = queue.popleft()
        i = index[(p, q)]
        if (p == FIN or p in a.accepting) and (q == FIN or q in b.accepting):
            acc.append(i)
        by_key: dict[tuple, list] = defaultdict(list)
        for lb, nq in options(b, q, pad_b):
            by_key[tuple(lb[j] for j in shared_b)].append((lb, nq))
        row = delta[i]
        for la, np_ in options(a, p, pad_a):
            for lb, nq in by_key.get(tuple(la[j] for j in shared_a), ()):
                letter = la + tuple(lb[j] for j in extra_b)
                if all(c == PAD for c in letter):
                    continue
                key = (np_, nq)
                if key not in index:
                    index[key] = len(delta)
                    delta.append({})
                    queue.append(key)
                row[letter] = index[key]
    return build_dfa(a.alphabet, len(out_vars), 0, acc, delta), out_vars


def restrict_tracks(a: Dfa, langs: Sequence[Dfa | None]) -> Dfa:
    """Intersect track ``i`` with the arity-1 language ``langs[i]`` (None = free)."""
    names = [f"t{i}" for i in range(a.arity)]
    out = a
    for i, lang in enumerate(langs):
        if lang is not None:
            out, _ = join(out, names, lang, [names[i]])
    return out


def power(lang: Dfa, r: int) -> Dfa:
    """conv(L^r) for an arity-1 language L."""
    if lang.arity != 1:
        raise AutomatonError("power needs an arity-1 language")
    if r == 0:
        return epsilon_language(lang.alphabet, 0)
    out, names = lang, ("t0",)
    for i in range(1, r):
        out, names = join(out, names, lang, (f"t{i}",))
    return out


def cylindrify(a: Dfa, position: int) -> Dfa:
    """Insert an unconstrained track at 1-based ``position`` (1..arity+1)."""
    if not 1 <= position <= a.arity + 1:
        raise AutomatonError(f"position {position} out of range 1..{a.arity + 1}")
    names = [f"t{i}" for i in range(a.arity)]
    out, _ = join(a, names, universal_language(a.alphabet), ["new"])
    order = list(range(a.arity))
    order.insert(position - 1, a.arity)
    return permute(out, order)


def diagonal(a: Dfa, groups: Sequence[Sequence[int]]) -> Dfa:
    """Keep words whose tracks in each group agree, then drop all but the first.

    Used for atoms with repeated variables such as ``R(x, x, y)``.
    """
    keep = []
    same: list[tuple[int, ...]] = []
    for g in groups:
        g = tuple(g)
        keep.append(g[0])
        if len(g) > 1:
            same.append(g)
    delta = []
    for row in a.delta:
        new_row = {}
        for l, t in row.items():
            if all(len({l[j] for j in g}) == 1 for g in same):
                new_row[tuple(l[j] for j in keep)] = t
        delta.append(new_row)
    return build_dfa(a.alphabet, len(keep), a.initial, a.accepting, delta)


def shortest_accepted(a: Dfa) -> PaddedWord | None:
    """Length-lex least accepted padded word, or None if the language is empty."""
    key = a.sort_key()
    parent: dict[int, tuple[int, Letter] | None] = {a.initial: None}
    queue = deque([a.initial])
    while queue:
        s = queue.popleft()
        if s in a.accepting:
            out = []
            while parent[s] is not None:
                prev, l = parent[s]
                out.append(l)
                s = prev
            return tuple(reversed(out))
        for l in sorted(a.delta[s], key=key):
            t = a.delta[s][l]
            if t not in parent:
                parent[t] = (s, l)
                queue.append(t)
    return None


@dataclass(frozen=True)
class Decision:
    holds: bool
    witness: PaddedWord | None = None

    def __bool__(self) -> bool:
        return self.holds

    def witness_tuple(self, arity: int) -> tuple[Word, ...] | None:
        if self.witness is None:
            return None
        return deconv(self.witness, arity)


def decide(kind: str, a: Dfa, b: Dfa | Sequence | None = None) -> Decision:
    """Exact decisions: emptiness, membership, equivalence, inclusion (a <= b).

    A failed equivalence or inclusion, and a non-empty language, come with the
    length-lex least witness word.
    """
    if kind == "emptiness":
        w = shortest_accepted(a)
        return Decision(w is None, w)
    if kind == "membership":
        if b is None:
            raise AutomatonError("membership needs a word tuple")
        words = (b,) if a.arity == 1 and isinstance(b, str) else tuple(b)
        return Decision(a.contains(*words))
    if not isinstance(b, Dfa):
        raise AutomatonError(f"{kind} needs two automata")
    _same_space(a, b)
    if kind == "inclusion":
        w = shortest_accepted(difference(a, b))
        return Decision(w is None, w)
    if kind == "equivalence":
        if a == b:
            return Decision(True)
        w1 = shortest_accepted(difference(a, b))
        w2 = shortest_accepted(difference(b, a))
        cands = [w for w in (w1, w2) if w is not None]
        key = a.sort_key()
        w = min(cands, key=lambda w: (len(w), [key(l) for l in w]))
        return Decision(False, w)
    raise AutomatonError(f"unknown decision {kind!r}")


def is_subset(a: Dfa, b: Dfa) -> bool:
    return decide("inclusion", a, b).holds


def enumerate_accepted(a: Dfa, max_len: int) -> list[PaddedWord]:
    """All accepted padded words of length <= max_len in length-lex order."""
    if max_len < 0:
        raise AutomatonError("max_len must be non-negative")
    key = a.sort_key()
    letters = {s: sorted(row, key=key) for s, row in enumerate(a.delta)}
    out: list[PaddedWord] = []
    level: list[tuple[PaddedWord, int]] = [((), a.initial)]
    for n in range(max_len + 1):
        out.extend(w for w, s in level if s in a.accepting)
        if n == max_len:
            break
        level = [(w + (l,), a.delta[s][l]) for w, s in level for l in letters[s]]
    return out


def enumerate_tuples(a: Dfa, max_len: int) -> list[tuple[Word, ...]]:
    """Accepted word tuples with every component of length <= max_len."""
    if a.arity == 0:
        return [()] if a.initial in a.accepting else []
    return [deconv(w, a.arity) for w in enumerate_accepted(a, max_len)]


def enumerate_words(a: Dfa, max_len: int) -> list[Word]:
    """Accepted words of an arity-1 automaton, length-lex ordered."""
    if a.arity != 1:
        raise AutomatonError("enumerate_words needs arity 1")
    return [tuple(l[0] for l in w) for w in enumerate_accepted(a, max_len)]


def length_lex_key(alphabet: Sequence[str]):
    idx = {s: i for i, s in enumerate(alphabet)}
    return lambda w: (len(w), [idx[c] for c in w])
