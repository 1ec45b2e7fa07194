"""First-order formulas over a presentation's signature, compiled to automata.

Formulas use an s-expression syntax::

    (exists y (and (rel succ x y) (not (= x y))))
    (forall x (implies (rel P x) (= (f x) x)))

Atoms are ``(rel NAME t1 ... tk)`` and ``(= t1 t2)``; a term is a variable or
an operation application ``(f t1 ... tk)``, desugared into graph atoms under
fresh existential variables.  Quantifiers range over the domain language.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence, Union

from . import automata as fa
from .automata import Dfa
from .presentation import Presentation


class FormulaError(ValueError):
    pass


@dataclass(frozen=True)
class App:
    name: str
    args: tuple["Term", ...]


Term = Union[str, App]


@dataclass(frozen=True)
class Rel:
    name: str
    args: tuple[Term, ...]


@dataclass(frozen=True)
class Eq:
    left: Term
    right: Term


@dataclass(frozen=True)
class Not:
    body: "Formula"


@dataclass(frozen=True)
class And:
    parts: tuple["Formula", ...]


@dataclass(frozen=True)
class Or:
    parts: tuple["Formula", ...]


@dataclass(frozen=True)
class Implies:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Exists:
    var: str
    body: "Formula"


@dataclass(frozen=True)
class Forall:
    var: str
    body: "Formula"


Formula = Union[Rel, Eq, Not, And, Or, Implies, Exists, Forall]


# -- construction helpers ---------------------------------------------------

def rel(name: str, *args: Term) -> Rel:
    return Rel(name, tuple(args))


def eq(a: Term, b: Term) -> Eq:
    return Eq(a, b)


def conj(*parts: Formula) -> And:
    return And(tuple(parts))


def disj(*parts: Formula) -> Or:
    return Or(tuple(parts))


def neg(body: Formula) -> Not:
    return Not(body)


def exists(var: str, body: Formula) -> Exists:
    return Exists(var, body)


def forall(var: str, body: Formula) -> Forall:
    return Forall(var, body)


# -- parsing and printing ---------------------------------------------------

def _tokenize(text: str) -> list[str]:
    return text.replace("(", " ( ").replace(")", " ) ").split()


def _read(tokens: list[str], pos: int):
    if pos >= len(tokens):
        raise FormulaError("unexpected end of formula")
    tok = tokens[pos]
    if tok == ")":
        raise FormulaError(f"unexpected ')' at token {pos}")
    if tok != "(":
        return tok, pos + 1
    items = []
    pos += 1
    while True:
        if pos >= len(tokens):
            raise FormulaError("missing ')'")
        if tokens[pos] == ")":
            return items, pos + 1
        item, pos = _read(tokens, pos)
        items.append(item)


def _term(x) -> Term:
    if isinstance(x, str):
        return x
    if not x or not isinstance(x[0], str):
        raise FormulaError(f"bad term {x!r}")
    return App(x[0], tuple(_term(a) for a in x[1:]))


def _formula(x) -> Formula:
    if isinstance(x, str) or not x:
        raise FormulaError(f"expected a formula, got {x!r}")
    head, rest = x[0], x[1:]
    if head in ("exists", "forall"):
        if len(rest) != 2 or not isinstance(rest[0], str):
            raise FormulaError(f"({head} VAR BODY) expected")
        cls = Exists if head == "exists" else Forall
        return cls(rest[0], _formula(rest[1]))
    if head == "and":
        return And(tuple(_formula(r) for r in rest))
    if head == "or":
        return Or(tuple(_formula(r) for r in rest))
    if head == "not":
        if len(rest) != 1:
            raise FormulaError("(not BODY) expected")
        return Not(_formula(rest[0]))
    if head in ("implies", "->"):
        if len(rest) != 2:
            raise FormulaError("(implies A B) expected")
        return Implies(_formula(rest[0]), _formula(rest[1]))
    if head == "=":
        if len(rest) != 2:
            raise FormulaError("(= A B) expected")
        return Eq(_term(rest[0]), _term(rest[1]))
    if head == "rel":
        if not rest or not isinstance(rest[0], str):
            raise FormulaError("(rel NAME ARGS...) expected")
        return Rel(rest[0], tuple(_term(a) for a in rest[1:]))
    raise FormulaError(f"unknown connective {head!r}")


def parse(text: str) -> Formula:
    tokens = _tokenize(text)
    tree, pos = _read(tokens, 0)
    if pos != len(tokens):
        raise FormulaError("trailing tokens after formula")
    return _formula(tree)


def _fmt_term(t: Term) -> str:
    if isinstance(t, str):
        return t
    return "(" + " ".join([t.name, *map(_fmt_term, t.args)]) + ")"


def to_sexpr(f: Formula) -> str:
    match f:
        case Rel(name, args):
            return "(" + " ".join(["rel", name, *map(_fmt_term, args)]) + ")"
        case Eq(a, b):
            return f"(= {_fmt_term(a)} {_fmt_term(b)})"
        case Not(b):
            return f"(not {to_sexpr(b)})"
        case And(parts):
            return "(" + " ".join(["and", *map(to_sexpr, parts)]) + ")"
        case Or(parts):
            return "(" + " ".join(["or", *map(to_sexpr, parts)]) + ")"
        case Implies(a, b):
            return f"(implies {to_sexpr(a)} {to_sexpr(b)})"
        case Exists(v, b):
            return f"(exists {v} {to_sexpr(b)})"
        case Forall(v, b):
            return f"(forall {v} {to_sexpr(b)})"
    raise FormulaError(f"not a formula: {f!r}")


# -- analysis -----------------------------------------------------------------

def _term_vars(t: Term) -> Iterator[str]:
    if isinstance(t, str):
        yield t
    else:
        for a in t.args:
            yield from _term_vars(a)


def free_vars(f: Formula) -> set[str]:
    match f:
        case Rel(_, args):
            return {v for a in args for v in _term_vars(a)}
        case Eq(a, b):
            return set(_term_vars(a)) | set(_term_vars(b))
        case Not(b):
            return free_vars(b)
        case And(parts) | Or(parts):
            return set().union(*(free_vars(p) for p in parts))
        case Implies(a, b):
            return free_vars(a) | free_vars(b)
        case Exists(v, b) | Forall(v, b):
            return free_vars(b) - {v}
    raise FormulaError(f"not a formula: {f!r}")


def _all_vars(f: Formula) -> set[str]:
    match f:
        case Exists(v, b) | Forall(v, b):
            return {v} | _all_vars(b)
        case Not(b):
            return _all_vars(b)
        case And(parts) | Or(parts):
            return set().union(*(_all_vars(p) for p in parts))
        case Implies(a, b):
            return _all_vars(a) | _all_vars(b)
    return free_vars(f)


class _Fresh:
    def __init__(self, taken: set[str]):
        self.taken = set(taken)
        self.counter = itertools.count()

    def __call__(self) -> str:
        while True:
            v = f"_t{next(self.counter)}"
            if v not in self.taken:
                self.taken.add(v)
                return v


def _flatten(t: Term, fresh: _Fresh, atoms: list[Rel], bound: list[str]) -> str:
    if isinstance(t, str):
        return t
    args = tuple(_flatten(a, fresh, atoms, bound) for a in t.args)
    v = fresh()
    bound.append(v)
    atoms.append(Rel(t.name, args + (v,)))
    return v


def desugar(f: Formula, fresh: _Fresh | None = None) -> Formula:
    """Replace operation terms by graph atoms under fresh existentials."""
    if fresh is None:
        fresh = _Fresh(_all_vars(f))
    match f:
        case Rel(name, args) if any(isinstance(a, App) for a in args):
            atoms: list[Rel] = []
            bound: list[str] = []
            flat = tuple(_flatten(a, fresh, atoms, bound) for a in args)
            out: Formula = And(tuple(atoms) + (Rel(name, flat),))
            for v in reversed(bound):
                out = Exists(v, out)
            return out
        case Eq(a, b) if isinstance(a, App) or isinstance(b, App):
            if isinstance(a, App) and isinstance(b, str):
                return desugar(Rel(a.name, a.args + (b,)), fresh)
            if isinstance(b, App) and isinstance(a, str):
                return desugar(Rel(b.name, b.args + (a,)), fresh)
            atoms, bound = [], []
            x = _flatten(a, fresh, atoms, bound)
            y = _flatten(b, fresh, atoms, bound)
            out = And(tuple(atoms) + (Eq(x, y),))
            for v in reversed(bound):
                out = Exists(v, out)
            return out
        case Rel() | Eq():
            return f
        case Not(b):
            return Not(desugar(b, fresh))
        case And(parts):
            return And(tuple(desugar(p, fresh) for p in parts))
        case Or(parts):
            return Or(tuple(desugar(p, fresh) for p in parts))
        case Implies(a, b):
            return Implies(desugar(a, fresh), desugar(b, fresh))
        case Exists(v, b):
            return Exists(v, desugar(b, fresh))
        case Forall(v, b):
            return Forall(v, desugar(b, fresh))
    raise FormulaError(f"not a formula: {f!r}")


# -- compilation --------------------------------------------------------------

@dataclass(frozen=True)
class CompiledRelation:
    """An automaton whose track ``i`` carries free variable ``variables[i]``."""

    variables: tuple[str, ...]
    automaton: Dfa

    @property
    def arity(self) -> int:
        return len(self.variables)

    def contains(self, *words) -> bool:
        return self.automaton.contains(*words)

    def reorder(self, order: Sequence[str]) -> "CompiledRelation":
        order = tuple(order)
        if sorted(order) != sorted(self.variables):
            raise FormulaError(f"order {order} does not match free variables {self.variables}")
        if order == self.variables:
            return self
        perm = [self.variables.index(v) for v in order]
        return CompiledRelation(order, fa.permute(self.automaton, perm))


class _Compiler:
    def __init__(self, p: Presentation, extra: Mapping[str, Dfa]):
        self.p = p
        self.L = p.domain
        self.rels = dict(p.interpretations)
        for name, d in extra.items():
            if name in self.rels:
                raise FormulaError(f"extra relation {name!r} shadows a signature symbol")
            if d.alphabet != p.alphabet:
                raise FormulaError(f"extra relation {name!r} has a different alphabet")
            self.rels[name] = d
        self._powers: dict[int, Dfa] = {}

    def universe(self, n: int) -> Dfa:
        if n not in self._powers:
            self._powers[n] = fa.power(self.L, n)
        return self._powers[n]

    def complement(self, c: CompiledRelation) -> CompiledRelation:
        return CompiledRelation(c.variables, fa.difference(self.universe(c.arity), c.automaton))

    def extend(self, c: CompiledRelation, target: Sequence[str]) -> CompiledRelation:
        d, names = c.automaton, c.variables
        for v in target:
            if v not in names:
                d, names = fa.join(d, names, self.L, (v,))
        return CompiledRelation(names, d).reorder(target)

    def conj(self, cs: list[CompiledRelation]) -> CompiledRelation:
        out = cs[0] if cs else CompiledRelation((), fa.epsilon_language(self.p.alphabet, 0))
        for c in cs[1:]:
            d, names = fa.join(out.automaton, out.variables, c.automaton, c.variables)
            out = CompiledRelation(names, d)
        return out

    def disj(self, cs: list[CompiledRelation]) -> CompiledRelation:
        if not cs:
            return CompiledRelation((), fa.empty_language(self.p.alphabet, 0))
        target: list[str] = []
        for c in cs:
            target.extend(v for v in c.variables if v not in target)
        aligned = [self.extend(c, target) for c in cs]
        d = aligned[0].automaton
        for c in aligned[1:]:
            d = fa.union(d, c.automaton)
        return CompiledRelation(tuple(target), d)

    def exists(self, v: str, c: CompiledRelation) -> CompiledRelation:
        if v not in c.variables:
            if self.L.is_empty():
                return CompiledRelation(c.variables, fa.empty_language(self.p.alphabet, c.arity))
            return c
        d, names = fa.join(c.automaton, c.variables, self.L, (v,))
        i = names.index(v)
        return CompiledRelation(names[:i] + names[i + 1 :], fa.project(d, i))

    def atom(self, d: Dfa, args: Sequence[str]) -> CompiledRelation:
        order: list[str] = []
        for a in args:
            if a not in order:
                order.append(a)
        if len(order) != len(args):
            d = fa.diagonal(d, [[i for i, a in enumerate(args) if a == v] for v in order])
        d = fa.restrict_tracks(d, [self.L] * len(order))
        return CompiledRelation(tuple(order), d)

    def compile(self, f: Formula, negated: bool = False) -> CompiledRelation:
        match f:
            case Rel(name, args):
                if name not in self.rels:
                    raise FormulaError(f"unknown relation or operation {name!r}")
                d = self.rels[name]
                if d.arity != len(args):
                    raise FormulaError(f"{name} expects {d.arity} arguments, got {len(args)}")
                c = self.atom(d, args)
                return self.complement(c) if negated else c
            case Eq(a, b):
                c = self.atom(self.p.equality, (a, b))
                return self.complement(c) if negated else c
            case Not(b):
                return self.compile(b, not negated)
            case And(parts):
                cs = [self.compile(q, negated) for q in parts]
                return self.disj(cs) if negated else self.conj(cs)
            case Or(parts):
                cs = [self.compile(q, negated) for q in parts]
                return self.conj(cs) if negated else self.disj(cs)
            case Implies(a, b):
                return self.compile(Or((Not(a), b)), negated)
            case Exists(v, b):
                e = self.exists(v, self.compile(b))
                return self.complement(e) if negated else e
            case Forall(v, b):
                e = self.exists(v, self.compile(b, True))
                return e if negated else self.complement(e)
        raise FormulaError(f"not a formula: {f!r}")


def compile_formula(
    p: Presentation,
    formula: Formula | str,
    order: Sequence[str] | None = None,
    extra_relations: Mapping[str, Dfa] | None = None,
) -> CompiledRelation:
    """Automaton for the tuples of domain words satisfying ``formula``.

    ``order`` lists the free variables (default: sorted).  ``extra_relations``
    supplies additional named relation automata usable in atoms.
    """
    if isinstance(formula, str):
        formula = parse(formula)
    fv = free_vars(formula)
    if order is None:
        order = sorted(fv)
    if set(order) != fv or len(set(order)) != len(order):
        raise FormulaError(f"order {list(order)} does not match free variables {sorted(fv)}")
    compiler = _Compiler(p, extra_relations or {})
    c = compiler.compile(desugar(formula))
    return compiler.extend(c, order)


def holds(p: Presentation, sentence: Formula | str, extra_relations: Mapping[str, Dfa] | None = None) -> bool:
    """Truth of a sentence in the presented structure."""
    if isinstance(sentence, str):
        sentence = parse(sentence)
    fv = free_vars(sentence)
    if fv:
        raise FormulaError(f"sentence has free variables {sorted(fv)}")
    c = compile_formula(p, sentence, (), extra_relations)
    return c.automaton.initial in c.automaton.accepting
