"""Generated subalgebras of unary presentations.

closure_language returns a regular language for the subalgebra; the grid
picture shows where its elements sit relative to the pumping constant D.
"""

from fapres import automata as fa
from fapres.corpus import unary_corpus
from fapres.growth import linear_bound
from fapres.subalgebra import closure_language, is_member
from fapres.unary import lengths, render_grid

corpus = unary_corpus()

for name, gens in [("nat_succ", ["aaa"]), ("plus_two", [""]), ("bounce", ["a" * 10]), ("max", ["a", "aaaa"])]:
    up = corpus[name]
    L, trace = closure_language(up, gens)
    ls = lengths(L)
    sample = sorted(len(w) for w in fa.enumerate_words(L, 20))
    print(f"{name:9} D={up.D}  gens={[len(g) for g in gens]}  iterations={len(trace.steps)}")
    print(f"          lengths<=20: {sample}  threshold={ls.threshold} period={ls.period}")

up = corpus["nat_succ"]
print("a^2 in <a^3>?", is_member(up, ["aaa"], "aa"))
print("a^7 in <a^3>?", is_member(up, ["aaa"], "a" * 7))

print()
print(render_grid(["aaaa", "a" * 7, "a" * 11], up.D))

lb = linear_bound(corpus["plus_two"], ["", "a"], 12)
print()
print("plus_two from {eps, a}: g =", list(lb.table.values))
print(f"bound (x+1)D + Dn with x={lb.x}, D={corpus['plus_two'].D}: holds={lb.holds}")
