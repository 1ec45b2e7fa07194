"""The counterexample algebra X.

X is FA-presentable and generated by one element, yet the subalgebra
generated by the initial configuration g0 reaches the chains M_k only
when k is a perfect square: the Turing machine hits its box state at
tapes a^1, a^4, a^9, ...
"""

import time

from fapres import automata as fa
from fapres.corpus import build_example_X, design_square_tm
from fapres.corpus.example_x import g0_word, top_minimal_word
from fapres.corpus.turing import box_visits
from fapres.growth import expand
from fapres.presentation import apply_operation

tm = design_square_tm()
for v in box_visits(tm, 4):
    print(f"box state at step {v.step:4}: tape a^{len(v.tape)}")

t = time.perf_counter()
X = build_example_X(tm)
print(f"built X over {len(X.alphabet)} symbols in {time.perf_counter() - t:.1f}s")


def ap(op, *args):
    return "".join(apply_operation(X, op, list(args)))


print("alpha(⊤q_) =", ap("alpha", "⊤q_"))
print("gamma(⊥aa□a) =", ap("gamma", "⊥aa□a"))
print("beta(1000) =", ap("beta", "1000"))
print("zeta(⊤q) =", ap("zeta", top_minimal_word()))

# BFS from g0, counting elements of each chain M_k as they appear
cur = {fa.as_word(g0_word())}
old, new = set(), set(cur)
seen = {}
for depth in range(1, 121):
    fresh = expand(X, sorted(old), sorted(new)) - cur
    old, new = set(cur), fresh
    cur |= fresh
    for w in fresh:
        if all(c in "01" for c in w) and w:
            seen[len(w)] = seen.get(len(w), 0) + 1
    if depth % 20 == 0:
        print(f"depth {depth:3}: {len(cur):5} elements, chain sizes {dict(sorted(seen.items()))}")
