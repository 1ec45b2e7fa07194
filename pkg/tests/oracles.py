"""Independent oracles for the tests.

Nothing here uses automata: unary structures are evaluated on integers
(a^n is n) and closures are computed by plain iteration.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Callable

from fapres.logic import And, App, Eq, Exists, Forall, Implies, Not, Or, Rel, free_vars


@dataclass
class IntStructure:
    """A structure on N whose operations move elements by at most ``step``.

    ``ops`` maps a name to (arity, function); ``rels`` maps a name to
    (arity, predicate).  Operation names double as graph relations, as in a
    presentation.
    """

    ops: dict[str, tuple[int, Callable]]
    rels: dict[str, tuple[int, Callable]] = field(default_factory=dict)
    step: int = 1

    def term(self, t, env) -> int:
        if isinstance(t, str):
            return env[t]
        _, fn = self.ops[t.name]
        return fn(*(self.term(a, env) for a in t.args))

    def atom(self, f, env) -> bool:
        if isinstance(f, Eq):
            return self.term(f.left, env) == self.term(f.right, env)
        vals = [self.term(a, env) for a in f.args]
        if f.name in self.ops:
            return self.ops[f.name][1](*vals[:-1]) == vals[-1]
        return bool(self.rels[f.name][1](*vals))


def _term_depth(t) -> int:
    return 0 if isinstance(t, str) else 1 + max((_term_depth(a) for a in t.args), default=0)


def _max_term_depth(f) -> int:
    match f:
        case Eq(a, b):
            return max(_term_depth(a), _term_depth(b))
        case Rel(_, args):
            return 1 + max((_term_depth(a) for a in args), default=0)
        case Not(b) | Exists(_, b) | Forall(_, b):
            return _max_term_depth(b)
        case And(ps) | Or(ps):
            return max((_max_term_depth(p) for p in ps), default=0)
        case Implies(a, b):
            return max(_max_term_depth(a), _max_term_depth(b))
    raise TypeError(f)


def quantifier_depth(f) -> int:
    match f:
        case Eq() | Rel():
            return 0
        case Not(b):
            return quantifier_depth(b)
        case Exists(_, b) | Forall(_, b):
            return 1 + quantifier_depth(b)
        case And(ps) | Or(ps):
            return max((quantifier_depth(p) for p in ps), default=0)
        case Implies(a, b):
            return max(quantifier_depth(a), quantifier_depth(b))
    raise TypeError(f)


def evaluator(s: IntStructure, f, slack: int = 0) -> Callable[[dict[str, int]], bool]:
    """Exact truth value of f in s, as a function of the assignment.

    A quantifier whose body has quantifier depth d only needs witnesses up
    to M + step*(t+1)*2^(d+1) + 2*step, M the largest parameter and t the
    term depth: atoms see distances up to step*(t+1), and with d rounds left
    all points further than step*(t+1)*2^d from every parameter are
    interchangeable (an Ehrenfeucht-Fraisse argument for successor-like
    structures).  ``slack`` enlarges every range, for self-checks.
    """
    fvs: dict[int, tuple[str, ...]] = {}
    reach: dict[int, int] = {}

    def restrict(g, env) -> tuple:
        k = id(g)
        if k not in fvs:
            fvs[k] = tuple(sorted(free_vars(g)))
        return tuple(env[v] for v in fvs[k])

    def radius(b) -> int:
        k = id(b)
        if k not in reach:
            scale = s.step * (_max_term_depth(b) + 1)
            reach[k] = scale * 2 ** (quantifier_depth(b) + 1) + 2 * s.step + slack
        return reach[k]

    @lru_cache(maxsize=None)
    def ev(g, vals: tuple) -> bool:
        e = dict(zip(fvs[id(g)], vals))
        match g:
            case Eq() | Rel():
                return s.atom(g, e)
            case Not(b):
                return not ev(b, restrict(b, e))
            case And(ps):
                return all(ev(p, restrict(p, e)) for p in ps)
            case Or(ps):
                return any(ev(p, restrict(p, e)) for p in ps)
            case Implies(a, b):
                return (not ev(a, restrict(a, e))) or ev(b, restrict(b, e))
            case Exists(v, b) | Forall(v, b):
                bound = max(vals, default=0) + radius(b)
                want = isinstance(g, Exists)
                for n in range(bound + 1):
                    e[v] = n
                    if ev(b, restrict(b, e)) == want:
                        return want
                return not want
        raise TypeError(g)

    return lambda env: ev(f, restrict(f, env))


def evaluate(s: IntStructure, f, env: dict[str, int], slack: int = 0) -> bool:
    return evaluator(s, f, slack)(env)


def truth_table(s: IntStructure, f, order: list[str], max_value: int, slack: int = 0) -> set[tuple[int, ...]]:
    ev = evaluator(s, f, slack)
    return {vals for vals in product(range(max_value + 1), repeat=len(order)) if ev(dict(zip(order, vals)))}


# -- structures matching the corpus fixtures ----------------------------------

NAT_SUCC = IntStructure({"succ": (1, lambda n: n + 1)}, step=1)
PLUS_TWO = IntStructure({"plus2": (1, lambda n: n + 2)}, step=2)


# -- random formulas ----------------------------------------------------------

def random_term(rng: random.Random, op: str, variables: list[str], depth: int = 2):
    t = rng.choice(variables)
    for _ in range(rng.randint(0, depth)):
        t = App(op, (t,))
    return t


def random_atom(rng: random.Random, op: str, variables: list[str]):
    if rng.random() < 0.5:
        return Rel(op, (random_term(rng, op, variables, 1), random_term(rng, op, variables, 1)))
    return Eq(random_term(rng, op, variables), random_term(rng, op, variables))


def random_qf(rng: random.Random, op: str, variables: list[str], size: int = 3):
    if size <= 1:
        return random_atom(rng, op, variables)
    kind = rng.choice(["not", "and", "or", "implies"])
    if kind == "not":
        return Not(random_qf(rng, op, variables, size - 1))
    a = random_qf(rng, op, variables, size // 2)
    b = random_qf(rng, op, variables, size - size // 2)
    return {"and": And((a, b)), "or": Or((a, b)), "implies": Implies(a, b)}[kind]


def random_quantified(rng: random.Random, op: str, free: list[str], depth: int = 3):
    """A formula of quantifier depth <= depth whose free variables lie in ``free``."""
    if depth == 0 or rng.random() < 0.2:
        return random_qf(rng, op, free, rng.randint(1, 3))
    v = f"q{depth}"
    body = random_quantified(rng, op, free + [v], depth - 1)
    if rng.random() < 0.4:
        body = And((body, random_qf(rng, op, free + [v], 2)))
    q = Exists(v, body) if rng.random() < 0.5 else Forall(v, body)
    return Not(q) if rng.random() < 0.2 else q


# -- unary closure by iteration -------------------------------------------------

def int_closure(fns: list[tuple[int, Callable]], gens: set[int], max_value: int, extra: int = 0) -> set[int]:
    """Elements <= max_value of the subalgebra generated by gens.

    Operations must be non-decreasing in the sense that computing with
    values <= max_value + extra loses nothing below max_value.
    """
    cap = max_value + extra
    seen = {g for g in gens if g <= cap}
    frontier = set(seen)
    while frontier:
        new = set()
        for arity, fn in fns:
            for args in product(sorted(seen), repeat=arity):
                if not any(a in frontier for a in args):
                    continue
                y = fn(*args)
                if y <= cap and y not in seen:
                    new.add(y)
        seen |= new
        frontier = new
    return {x for x in seen if x <= max_value}
