"""A finitely generated FA-presentable algebra with a non-FA-presentable subalgebra.

Carrier: the zero-union S of chains M_k (2^k elements each) together with
two copies G_top, G_bot of a Turing machine's configuration graph.  Words:

    z           the zero of S
    u in {0,1}^k  the element of M_k at height u (read in binary)
    ⊤uqv, ⊥uqv  configurations in G_top, G_bot
"""

from __future__ import annotations

from .. import automata as fa
from ..automata import PAD, Dfa
from ..logic import compile_formula
from ..presentation import Presentation, identity_relation
from .turing import TMSpec, check_square_tm, design_square_tm

TOP, BOT, ZERO = "⊤", "⊥", "z"
BITS = ("0", "1")


def alphabet(tm: TMSpec) -> tuple[str, ...]:
    return (ZERO, *BITS, TOP, BOT, *tm.tape, *tm.states)


def _config_lang(sigma, tm: TMSpec, heads) -> Dfa:
    nb = fa.NfaBuilder(sigma, 1)
    s0, s1, s2 = nb.state(initial=True), nb.state(), nb.state(accepting=True)
    for h in heads:
        nb.add(s0, (h,), s1)
    for b in tm.tape:
        nb.add(s1, (b,), s1)
        nb.add(s2, (b,), s2)
    for q in tm.states:
        nb.add(s1, (q,), s2)
    return nb.to_dfa()


def _semilattice_lang(sigma) -> Dfa:
    nb = fa.NfaBuilder(sigma, 1)
    s0, s1 = nb.state(initial=True, accepting=True), nb.state(accepting=True)
    nb.add(s0, (ZERO,), s1)
    s2 = nb.state(accepting=True)
    for b in BITS:
        nb.add(s0, (b,), s2)
        nb.add(s2, (b,), s2)
    return nb.to_dfa()


def _bits_lang(sigma) -> Dfa:
    nb = fa.NfaBuilder(sigma, 1)
    s = nb.state(initial=True, accepting=True)
    for b in BITS:
        nb.add(s, (b,), s)
    return nb.to_dfa()


def _box_lang(sigma, tm: TMSpec) -> Dfa:
    """⊥ a* q_box a*."""
    nb = fa.NfaBuilder(sigma, 1)
    s0, s1, s2 = nb.state(initial=True), nb.state(), nb.state(accepting=True)
    nb.add(s0, (BOT,), s1)
    nb.add(s1, (tm.letter,), s1)
    nb.add(s1, (tm.box,), s2)
    nb.add(s2, (tm.letter,), s2)
    return nb.to_dfa()


def leq_relation(sigma) -> Dfa:
    """Order of S: z below everything, equal-length bit strings compared as numbers."""
    nb = fa.NfaBuilder(sigma, 2)
    start = nb.state(initial=True, accepting=True)
    same = nb.state(accepting=True)
    low = nb.state(accepting=True)
    zs = nb.state(accepting=True)
    zb = nb.state(accepting=True)
    for s in (start, same):
        nb.add(s, ("0", "0"), same)
        nb.add(s, ("1", "1"), same)
        nb.add(s, ("0", "1"), low)
    for x in BITS:
        for y in BITS:
            nb.add(low, (x, y), low)
    nb.add(start, (ZERO, ZERO), zs)
    nb.add(start, (ZERO, PAD), zs)
    for b in BITS:
        nb.add(start, (ZERO, b), zb)
        nb.add(zb, (PAD, b), zb)
    return nb.to_dfa()


def _union(*ds: Dfa) -> Dfa:
    out = ds[0]
    for d in ds[1:]:
        out = fa.union(out, d)
    return out


def _base(tm: TMSpec) -> tuple[tuple[str, ...], dict[str, Dfa]]:
    sigma = alphabet(tm)
    parts = {
        "S": _semilattice_lang(sigma),
        "bits": _bits_lang(sigma),
        "top": _config_lang(sigma, tm, [TOP]),
        "bot": _config_lang(sigma, tm, [BOT]),
        "box": _box_lang(sigma, tm),
    }
    parts["G"] = fa.union(parts["top"], parts["bot"])
    parts["L"] = fa.union(parts["S"], parts["G"])
    return sigma, parts


def meet_graph(sigma, parts) -> Dfa:
    """Graph of the multiplication: meet on S, configurations absorb everything."""
    base = Presentation.build(sigma, parts["L"])
    extra = {
        "leq": leq_relation(sigma),
        "inS": parts["S"],
        "inG": parts["G"],
        "zero": fa.finite_language(sigma, 1, [ZERO]),
    }
    phi = """(or (and (rel leq x y) (= w x))
                 (and (rel leq y x) (not (rel leq x y)) (= w y))
                 (and (rel inS x) (rel inS y) (not (rel leq x y)) (not (rel leq y x)) (rel zero w))
                 (and (rel inG x) (= w x))
                 (and (rel inS x) (rel inG y) (= w y)))"""
    return compile_formula(base, phi, ["x", "y", "w"], extra).automaton


def alpha_graph(sigma, tm, parts) -> Dfa:
    nb = fa.NfaBuilder(sigma, 2)
    s0, s1, s2 = nb.state(initial=True), nb.state(), nb.state(accepting=True)
    nb.add(s0, (TOP, BOT), s1)
    for b in tm.tape:
        nb.add(s1, (b, b), s1)
        nb.add(s2, (b, b), s2)
    for q in tm.states:
        nb.add(s1, (q, q), s2)
    return fa.union(nb.to_dfa(), identity_relation(fa.union(parts["S"], parts["bot"])))


def beta_graph(sigma, tm, parts) -> Dfa:
    """Step down within M_k; the bottom 0^k of M_k goes to z."""
    zeros = fa.NfaBuilder(sigma, 2)
    t0 = zeros.state(initial=True)
    t1 = zeros.state(accepting=True)
    zeros.add(t0, (PAD, ZERO), zeros.state(accepting=True))  # epsilon, the only element of M_0
    zeros.add(t0, ("0", ZERO), t1)
    zeros.add(t1, ("0", PAD), t1)
    down = fa.NfaBuilder(sigma, 2)
    d0 = down.state(initial=True)
    d1 = down.state(accepting=True)
    for b in BITS:
        down.add(d0, (b, b), d0)
    down.add(d0, ("1", "0"), d1)
    down.add(d1, ("0", "1"), d1)
    fixed = fa.union(fa.finite_language(sigma, 1, [ZERO]), parts["G"])
    return _union(zeros.to_dfa(), down.to_dfa(), identity_relation(fixed))


def gamma_graph(sigma, tm, parts) -> Dfa:
    """⊥a^k q_box a^l goes to 1^(k+l), the top of M_(k+l)."""
    nb = fa.NfaBuilder(sigma, 2)
    ids = {}
    for phase in ("start", "A", "B"):
        for pads in range(3):
            ids[phase, pads] = nb.state(initial=(phase, pads) == ("start", 0), accepting=(phase, pads) == ("B", 2))
    moves = [("start", BOT, "A"), ("A", tm.letter, "A"), ("A", tm.box, "B"), ("B", tm.letter, "B")]
    for src, c, dst in moves:
        for pads in range(3):
            if pads == 0:
                nb.add(ids[src, 0], (c, "1"), ids[dst, 0])
            if pads < 2:
                nb.add(ids[src, pads], (c, PAD), ids[dst, pads + 1])
    rest = fa.difference(parts["L"], parts["box"])
    return fa.union(nb.to_dfa(), identity_relation(rest))


def delta_graph(sigma, tm: TMSpec, parts) -> Dfa:
    """One machine step on ⊥-configurations; identity elsewhere.

    A step rewrites a window of at most three letters around the state
    symbol, so the relation is read letter by letter with one guess of
    where the window starts.
    """
    nb = fa.NfaBuilder(sigma, 2)
    start = nb.state(initial=True)
    u0 = nb.state()  # just read ⊥: u is empty
    copy = nb.state()  # inside u, at least one symbol read
    tail = nb.state(accepting=True)  # window done, copying v
    done = nb.state(accepting=True)  # window done at the end of both words
    nb.add(start, (BOT, BOT), u0)
    for b in tm.tape:
        nb.add(u0, (b, b), copy)
        nb.add(copy, (b, b), copy)
        nb.add(tail, (b, b), tail)

    def path(src: int, pairs: list[tuple[str, str]], end: int) -> None:
        s = src
        for i, letter in enumerate(pairs):
            t = end if i == len(pairs) - 1 else nb.state()
            nb.add(s, letter, t)
            s = t

    def window(src_states, left: str, right: str, at_end: bool) -> None:
        # left and right are the old and new window contents
        pairs = [(left[i] if i < len(left) else PAD, right[i] if i < len(right) else PAD) for i in range(max(len(left), len(right)))]
        for src in src_states:
            path(src, pairs, done if at_end else tail)

    for q in tm.states:
        for b in tm.tape + (None,):  # None: head past the end of the tape
            sym = tm.blank if b is None else b
            r = tm.rule(q, sym)
            at_end = b is None
            old = q + ("" if at_end else b)
            if r is None:
                window([u0, copy], old, old, at_end)
                continue
            q2, w, mv = r
            if mv == "N":
                window([u0, copy], old, q2 + w, at_end)
            elif mv == "R":
                window([u0, copy], old, w + q2, at_end)
            else:
                window([u0], old, q2 + w, at_end)
                for c in tm.tape:
                    window([u0, copy], c + old, q2 + c + w, at_end)
    rest = fa.union(parts["S"], parts["top"])
    return fa.union(nb.to_dfa(), identity_relation(rest))


def lenlex_less(sigma) -> Dfa:
    """u strictly before v in length-plus-lexicographic order (symbol order of sigma)."""
    nb = fa.NfaBuilder(sigma, 2)
    eq = nb.state(initial=True)
    lt = nb.state()
    gt = nb.state()
    acc = nb.state(accepting=True)
    rank = {c: i for i, c in enumerate(sigma)}
    for x in sigma:
        for y in sigma:
            if x == y:
                nb.add(eq, (x, y), eq)
            elif rank[x] < rank[y]:
                nb.add(eq, (x, y), lt)
            else:
                nb.add(eq, (x, y), gt)
            nb.add(lt, (x, y), lt)
            nb.add(gt, (x, y), gt)
        for s in (eq, lt, gt, acc):
            nb.add(s, (PAD, x), acc)
        nb.add(acc, (PAD, x), acc)
    nb.accepting.add(lt)
    return nb.to_dfa()


def zeta_graph(sigma, parts) -> Dfa:
    """Successor within ⊤B*QB* in length-plus-lexicographic order; identity elsewhere."""
    base = Presentation.build(sigma, parts["L"])
    extra = {"lt": lenlex_less(sigma), "inT": parts["top"]}
    phi = """(and (rel inT x) (rel inT y) (rel lt x y)
                  (not (exists v (and (rel inT v) (rel lt x v) (rel lt v y)))))"""
    succ = compile_formula(base, phi, ["x", "y"], extra).automaton
    return fa.union(succ, identity_relation(fa.difference(parts["L"], parts["top"])))


def lambda_graph(sigma, parts) -> Dfa:
    """u in {0,1}^k goes to 1^k, the top of its chain."""
    nb = fa.NfaBuilder(sigma, 2)
    s = nb.state(initial=True, accepting=True)
    for b in BITS:
        nb.add(s, (b, "1"), s)
    fixed = fa.union(fa.finite_language(sigma, 1, [ZERO]), parts["G"])
    return fa.union(nb.to_dfa(), identity_relation(fixed))


def mu_graph(sigma, parts) -> Dfa:
    """Everything in S goes to z."""
    nb = fa.NfaBuilder(sigma, 2)
    s0, s1, s2 = nb.state(initial=True), nb.state(accepting=True), nb.state(accepting=True)
    nb.add(s0, (ZERO, ZERO), s2)
    nb.add(s0, (PAD, ZERO), s2)
    for b in BITS:
        nb.add(s0, (b, ZERO), s1)
        nb.add(s1, (b, PAD), s1)
    return fa.union(nb.to_dfa(), identity_relation(parts["G"]))


def _checked(tm: TMSpec | None) -> TMSpec:
    tm = tm or design_square_tm()
    check_square_tm(tm)
    return tm


def build_example_X(tm: TMSpec | None = None) -> Presentation:
    """(X, ∘, α, β, γ, δ, ζ) with the order ``leq`` of S as an extra relation."""
    tm = _checked(tm)
    sigma, parts = _base(tm)
    return Presentation.build(
        sigma,
        parts["L"],
        relations={"leq": leq_relation(sigma)},
        operations={
            "meet": meet_graph(sigma, parts),
            "alpha": alpha_graph(sigma, tm, parts),
            "beta": beta_graph(sigma, tm, parts),
            "gamma": gamma_graph(sigma, tm, parts),
            "delta": delta_graph(sigma, tm, parts),
            "zeta": zeta_graph(sigma, parts),
        },
    )


def build_example_X_prime(tm: TMSpec | None = None) -> Presentation:
    """The variant with only unary operations: ∘ replaced by λ and μ."""
    tm = _checked(tm)
    sigma, parts = _base(tm)
    return Presentation.build(
        sigma,
        parts["L"],
        relations={"leq": leq_relation(sigma)},
        operations={
            "alpha": alpha_graph(sigma, tm, parts),
            "beta": beta_graph(sigma, tm, parts),
            "gamma": gamma_graph(sigma, tm, parts),
            "delta": delta_graph(sigma, tm, parts),
            "zeta": zeta_graph(sigma, parts),
            "lambda": lambda_graph(sigma, parts),
            "mu": mu_graph(sigma, parts),
        },
    )


def g0_word(tm: TMSpec | None = None) -> str:
    """Initial configuration in G_bot."""
    return (tm or design_square_tm()).initial_config(BOT)


def top_minimal_word(tm: TMSpec | None = None) -> str:
    """The length-plus-lexicographically least word of ⊤B*QB*."""
    tm = tm or design_square_tm()
    return TOP + tm.states[0]
