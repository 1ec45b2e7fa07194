"""FA-presentations of structures and algebras, with exact validation."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from . import automata as fa
from .automata import PAD, Dfa, Word


class PresentationError(ValueError):
    pass


class StructureError(PresentationError):
    """Arity or alphabet mismatch detected before any semantic check."""


class DomainError(PresentationError):
    """An argument word is not in the domain language."""


class TotalityError(PresentationError):
    """An operation graph has no image for some argument tuple."""


@dataclass(frozen=True)
class Signature:
    relations: tuple[tuple[str, int], ...] = ()
    operations: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        names = [n for n, _ in self.relations] + [n for n, _ in self.operations]
        if len(set(names)) != len(names):
            raise StructureError(f"duplicate symbol names in signature: {names}")
        for name, arity in self.relations + self.operations:
            if arity < 1:
                raise StructureError(f"{name!r}: arity must be >= 1 (encode constants as unary relations)")

    def graph_arity(self, name: str) -> int:
        for n, k in self.relations:
            if n == name:
                return k
        for n, k in self.operations:
            if n == name:
                return k + 1
        raise KeyError(name)

    def is_operation(self, name: str) -> bool:
        return any(n == name for n, _ in self.operations)

    @property
    def max_operation_arity(self) -> int:
        return max((k for _, k in self.operations), default=0)


def identity_relation(domain: Dfa) -> Dfa:
    """{(w, w) : w in L} for an arity-1 domain automaton."""
    delta = [{(l[0], l[0]): t for l, t in row.items()} for row in domain.delta]
    return fa.build_dfa(domain.alphabet, 2, domain.initial, domain.accepting, delta)


@dataclass(frozen=True, eq=False)
class Presentation:
    """A domain language, an equality relation and named relation automata.

    Operations are stored as their graphs: an operation of arity k is a
    (k+1)-ary relation whose last track is the result.
    """

    alphabet: tuple[str, ...]
    signature: Signature
    domain: Dfa
    equality: Dfa
    interpretations: Mapping[str, Dfa]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        alphabet = fa.make_alphabet(self.alphabet)
        object.__setattr__(self, "alphabet", alphabet)
        if self.domain.arity != 1:
            raise StructureError("domain automaton must have arity 1")
        if self.equality.arity != 2:
            raise StructureError("equality automaton must have arity 2")
        declared = {n for n, _ in self.signature.relations + self.signature.operations}
        if set(self.interpretations) != declared:
            raise StructureError(
                f"interpretations {sorted(self.interpretations)} do not match signature {sorted(declared)}"
            )
        for name, d in [("domain", self.domain), ("equality", self.equality), *self.interpretations.items()]:
            if d.alphabet != alphabet:
                raise StructureError(f"{name}: alphabet {d.alphabet!r} differs from {alphabet!r}")
        for name, d in self.interpretations.items():
            want = self.signature.graph_arity(name)
            if d.arity != want:
                raise StructureError(f"{name}: automaton arity {d.arity}, signature requires {want}")
        for name, d in [("equality", self.equality), *self.interpretations.items()]:
            stray = fa.difference(d, fa.valid_conv_language(alphabet, d.arity))
            if not stray.is_empty():
                raise StructureError(f"{name}: accepts a string that is not a padded tuple")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Presentation):
            return NotImplemented
        return (self.alphabet, self.signature, self.domain, self.equality) == (
            other.alphabet, other.signature, other.domain, other.equality
        ) and dict(self.interpretations) == dict(other.interpretations)

    def __hash__(self) -> int:
        return hash((self.alphabet, self.signature, self.domain))

    @classmethod
    def build(
        cls,
        alphabet: Sequence[str],
        domain: Dfa,
        relations: Mapping[str, Dfa] | None = None,
        operations: Mapping[str, Dfa] | None = None,
        equality: Dfa | None = None,
    ) -> "Presentation":
        """Convenience constructor; arities are read off the automata."""
        relations = dict(relations or {})
        operations = dict(operations or {})
        sig = Signature(
            tuple((n, d.arity) for n, d in relations.items()),
            tuple((n, d.arity - 1) for n, d in operations.items()),
        )
        return cls(
            tuple(alphabet),
            sig,
            domain,
            equality if equality is not None else identity_relation(domain),
            {**relations, **operations},
        )

    @cached_property
    def injective(self) -> bool:
        return self.equality == identity_relation(self.domain)

    @property
    def operations(self) -> list[tuple[str, int]]:
        return list(self.signature.operations)

    @property
    def relations(self) -> list[tuple[str, int]]:
        return list(self.signature.relations)

    def graph(self, name: str) -> Dfa:
        return self.interpretations[name]

    def in_domain(self, w: str | Iterable[str]) -> bool:
        return self.domain.contains(fa.as_word(w))

    def replace(self, **changes) -> "Presentation":
        fields = dict(
            alphabet=self.alphabet,
            signature=self.signature,
            domain=self.domain,
            equality=self.equality,
            interpretations=self.interpretations,
        )
        fields.update(changes)
        return Presentation(**fields)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    witness: tuple[Word, ...] | None = None
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


def _witness(d: Dfa) -> tuple[Word, ...] | None:
    w = fa.shortest_accepted(d)
    if w is None:
        return None
    if d.arity == 0:
        return ()
    return fa.deconv(w, d.arity)


def _check(name: str, bad: Dfa, detail: str = "") -> Check:
    w = _witness(bad)
    return Check(name, w is None, w, detail)


def validate_presentation(p: Presentation) -> ValidationReport:
    """Decide the FA-presentation conditions exactly.

    Checks: equality is an equivalence on L; every relation lies inside
    conv(L^r); every operation graph is total and single-valued up to
    equality, and respects equality.
    """
    L, E = p.domain, p.equality
    checks = []

    checks.append(_check("equality-in-domain", fa.difference(E, fa.restrict_tracks(E, [L, L]))))
    checks.append(_check("equality-reflexive", fa.difference(L, fa.diagonal(E, [[0, 1]]))))
    swapped = fa.permute(E, [1, 0])
    checks.append(_check("equality-symmetric", fa.difference(E, swapped)))
    chain, _ = fa.join(E, ("x", "y"), E, ("y", "z"))
    trans = fa.project(chain, 1)
    checks.append(_check("equality-transitive", fa.difference(trans, E)))

    not_eq = fa.difference(fa.power(L, 2), E)
    for name, k in p.signature.relations:
        R = p.interpretations[name]
        checks.append(_check(f"{name}:in-domain", fa.difference(R, fa.restrict_tracks(R, [L] * k))))

    for name, k in p.signature.operations:
        G = p.interpretations[name]
        checks.append(_check(f"{name}:in-domain", fa.difference(G, fa.restrict_tracks(G, [L] * (k + 1)))))
        image = fa.project(G, k)
        checks.append(_check(f"{name}:total", fa.difference(fa.power(L, k), image)))
        xs = tuple(f"x{i}" for i in range(k))
        pair, names = fa.join(G, xs + ("y",), G, xs + ("y'",))
        bad, _ = fa.join(pair, names, not_eq, ("y", "y'"))
        checks.append(_check(f"{name}:single-valued", bad))
        if p.injective:
            checks.append(Check(f"{name}:congruence", True, None, "equality is the identity"))
            continue
        witness = None
        for i in range(k):
            xs2 = xs[:i] + ("x'",) + xs[i + 1 :]
            j1, n1 = fa.join(G, xs + ("y",), E, (xs[i], "x'"))
            j2, n2 = fa.join(j1, n1, G, xs2 + ("y'",))
            j3, _ = fa.join(j2, n2, not_eq, ("y", "y'"))
            witness = _witness(j3)
            if witness is not None:
                break
        checks.append(Check(f"{name}:congruence", witness is None, witness))
    return ValidationReport(tuple(checks))


class _Evaluator:
    """Computes the length-lex least image of an argument tuple under a graph."""

    def __init__(self, graph: Dfa):
        self.graph = graph
        self.k = graph.arity - 1
        self.index: list[dict[tuple, list[tuple[str, int]]]] = []
        for row in graph.delta:
            by_args: dict[tuple, list[tuple[str, int]]] = {}
            for l, t in row.items():
                by_args.setdefault(l[:-1], []).append((l[-1], t))
            self.index.append(by_args)
        self._tails: dict[int, Word | None] = {}
        self._key = fa.length_lex_key(graph.alphabet)

    def tail(self, q: int) -> Word | None:
        if q not in self._tails:
            pad = (PAD,) * self.k
            key = fa.letter_key(self.graph.alphabet)
            parent = {q: None}
            frontier = [q]
            found = None
            while frontier and found is None:
                nxt = []
                for s in frontier:
                    if s in self.graph.accepting:
                        found = s
                        break
                    for c, t in sorted(self.index[s].get(pad, ()), key=lambda ct: key((ct[0],))):
                        if t not in parent:
                            parent[t] = (s, c)
                            nxt.append(t)
                frontier = nxt
            if found is None:
                self._tails[q] = None
            else:
                out = []
                s = found
                while parent[s] is not None:
                    s, c = parent[s]
                    out.append(c)
                self._tails[q] = tuple(reversed(out))
        return self._tails[q]

    def __call__(self, args: Sequence[Word]) -> Word | None:
        n = max((len(a) for a in args), default=0)
        branches: dict[tuple[int, bool], Word] = {(self.graph.initial, False): ()}
        key = self._key
        for i in range(n):
            part = tuple(a[i] if i < len(a) else PAD for a in args)
            nxt: dict[tuple[int, bool], Word] = {}
            for (q, ended), prefix in branches.items():
                for c, t in self.index[q].get(part, ()):
                    if c == PAD:
                        cand, k2 = prefix, (t, True)
                    elif ended:
                        continue
                    else:
                        cand, k2 = prefix + (c,), (t, False)
                    old = nxt.get(k2)
                    if old is None or key(cand) < key(old):
                        nxt[k2] = cand
            branches = nxt
            if not branches:
                return None
        best = None
        for (q, ended), prefix in branches.items():
            if ended:
                cand = prefix if q in self.graph.accepting else None
            else:
                t = self.tail(q)
                cand = None if t is None else prefix + t
            if cand is not None and (best is None or key(cand) < key(best)):
                best = cand
        return best


def evaluator(p: Presentation, name: str) -> _Evaluator:
    ev = p._cache.get(("eval", name))
    if ev is None:
        if not p.signature.is_operation(name):
            raise PresentationError(f"{name!r} is not an operation")
        ev = p._cache[("eval", name)] = _Evaluator(p.interpretations[name])
    return ev


def apply_operation(p: Presentation, name: str, args: Sequence[str | Iterable[str]]) -> Word:
    """Apply operation ``name`` to argument words, returning a representative.

    For an injective presentation this is the unique image word; otherwise
    the length-lex least word in the image.
    """
    words = tuple(fa.as_word(a) for a in args)
    k = p.signature.graph_arity(name) - 1
    if len(words) != k:
        raise StructureError(f"{name} takes {k} arguments, got {len(words)}")
    for w in words:
        if not p.domain.contains(w):
            raise DomainError(f"{''.join(w)!r} is not in the domain")
    out = evaluator(p, name)(words)
    if out is None:
        raise TotalityError(f"{name} has no image for {[''.join(w) for w in words]}")
    return out


def image_language(p: Presentation, name: str, args: Sequence[str | Iterable[str]]) -> Dfa:
    """All image words of ``args`` as an automaton; an independent route to apply."""
    G = p.interpretations[name]
    k = G.arity - 1
    names = [f"x{i}" for i in range(k)] + ["y"]
    d = G
    for i, a in enumerate(args):
        single = fa.finite_language(p.alphabet, 1, [fa.as_word(a)])
        d, names = fa.join(d, names, single, [f"x{i}"])
    for _ in range(k):
        d = fa.project(d, 0)
    return d
