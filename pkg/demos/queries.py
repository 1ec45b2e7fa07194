"""First-order queries over the successor structure (N, n+1).

Every formula compiles to an automaton over the unary alphabet; a sentence
reduces to an emptiness check.
"""

from fapres import automata as fa
from fapres.corpus import build_nat_succ
from fapres.logic import compile_formula, holds

p = build_nat_succ().presentation

for text in [
    "(forall x (exists y (rel succ x y)))",
    "(exists x (rel succ x x))",
    "(forall x (forall y (implies (= (succ x) (succ y)) (= x y))))",
]:
    print(f"{holds(p, text)!s:5}  {text}")

# zero is the only element with no predecessor
c = compile_formula(p, "(not (exists y (rel succ y x)))")
print("non-successors:", ["".join(w) or "eps" for w in fa.enumerate_words(c.automaton, 10)])

# x and y two apart, as a relation automaton
c = compile_formula(p, "(= (succ (succ x)) y)", ["x", "y"])
print("states:", c.automaton.num_states)
print("pairs up to length 5:", [tuple(len(w) for w in t) for t in fa.enumerate_tuples(c.automaton, 5)])
