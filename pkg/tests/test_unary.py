import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fapres import automata as fa
from fapres.automata import PAD
from fapres.logic import holds
from fapres.presentation import Presentation, validate_presentation
from fapres.unary import (
    UNARY,
    GridCoord,
    LengthSet,
    ShiftError,
    UnaryError,
    UnaryPresentation,
    column_slice,
    compute_pumping_constant,
    grid,
    lengths,
    normalize_injective,
    periodic_extension,
    render_grid,
    shift_tuple,
    tau,
    unary_word,
    words_dfa,
)

A = UNARY


def n_of(w):
    return None if w is None else len(w)


# -- length sets ---------------------------------------------------------------------

@st.composite
def length_sets(draw):
    t = draw(st.integers(0, 8))
    p = draw(st.integers(1, 6))
    head = draw(st.sets(st.integers(0, max(t - 1, 0)), max_size=t)) if t else set()
    cyc = draw(st.sets(st.integers(0, p - 1)))
    return t, p, frozenset(head), frozenset(cyc)


@given(length_sets())
def test_length_set_roundtrip(spec):
    t, p, head, cyc = spec

    def member(n):
        return n in head if n < t else (n - t) % p in cyc

    d = LengthSet(t, p, head, cyc).to_dfa()
    for n in range(60):
        assert d.contains("a" * n) == member(n)
    ls = lengths(d)
    assert [n for n in range(60) if n in ls] == [n for n in range(60) if member(n)]
    assert ls.to_dfa() == d


def test_periodic_extension():
    d = periodic_extension([3, 5], 4)
    assert [len(w) for w in fa.enumerate_words(d, 15)] == [3, 5, 7, 9, 11, 13, 15]
    assert words_dfa([0, 2]) == fa.finite_language(A, 1, ["", "aa"])


# -- pumping constant -------------------------------------------------------------------

def test_pumping_constant_nat_succ(nat_succ):
    # minimal DFA for {conv(a^n, a^(n+1))}: a loop on (a,a) at the start state and a
    # ($,a) edge to an accepting state, so 2 states, cycle length 1; domain and
    # identity equality have one state each: least multiple of 1 above 2
    g = nat_succ.presentation.graph("succ")
    assert g.num_states == 2
    assert compute_pumping_constant(nat_succ.presentation) == 3 == nat_succ.D


def test_pumping_constant_loop_three():
    R = fa.from_transitions(
        A, 2, 0, [0, 3], [(0, ("a", "a"), 1), (1, ("a", "a"), 2), (2, ("a", "a"), 0), (0, (PAD, "a"), 3)]
    )
    assert R.num_states == 4
    p = Presentation.build(A, fa.universal_language(A), relations={"R": R})
    assert compute_pumping_constant(p) == 6


def test_pumping_constant_empty_relation():
    E = fa.empty_language(A, 2)
    p = Presentation.build(A, fa.universal_language(A), relations={"R": E})
    assert compute_pumping_constant(p) == E.num_states + 1 == 2


def test_corpus_pumping_constants(corpus):
    assert {k: v.D for k, v in corpus.items()} == {"nat_succ": 3, "plus_two": 4, "identity": 2, "max": 4, "bounce": 9}


def test_unary_presentation_checks(even_succ):
    with pytest.raises(UnaryError):
        UnaryPresentation.of(even_succ)  # domain (aa)* is not a* or an initial segment
    with pytest.raises(UnaryError):
        compute_pumping_constant(Presentation.build(("a", "b"), fa.universal_language(("a", "b"))))


# -- grid and shifts ---------------------------------------------------------------------

def test_grid_examples():
    D = 7
    assert grid("a" * (3 * D + 2), D) == GridCoord(3, 2) == grid(3 * D + 2, D)
    assert grid("", D) == GridCoord(0, 0)
    assert grid(D, D) == GridCoord(1, 0)


def test_tau_examples():
    assert tau(5, -1, 2) == unary_word(3)
    assert tau(1, -1, 2) is None
    assert tau(0, 3, 7) == unary_word(21)


@given(st.integers(0, 200), st.integers(-20, 20), st.integers(1, 12))
def test_tau_inverse_and_grid(k, n, D):
    w = tau(k, n, D)
    if w is not None:
        assert n_of(tau(w, -n, D)) == k
        assert grid(w, D).x == grid(k, D).x + n
        assert grid(w, D).y == grid(k, D).y


@pytest.mark.parametrize("D", [4, 5, 9])  # the example tuple uses rows up to 3
def test_shift_examples(D):
    t = [2 * D + 1, D + 2, 5 * D + 3, 7 * D + 2]
    for k in (1, 2, 3):
        got = shift_tuple(t, "right", (3, 4), k, D)
        assert [len(w) for w in got] == [2 * D + 1, D + 2, (5 + k) * D + 3, (7 + k) * D + 2]
        got = shift_tuple(t, "right", 0, k, D)
        assert [len(w) for w in got] == [n + k * D for n in t]
        got = shift_tuple(t, "right", 6, k, D)
        assert [len(w) for w in got] == t[:3] + [(7 + k) * D + 2]
    got = shift_tuple(t, "left", (3, 4), 1, D)
    assert [len(w) for w in got] == [2 * D + 1, D + 2, 4 * D + 3, 6 * D + 2]


def test_shift_legality(nat_succ):
    D = 4
    t = [2 * D + 1, D + 2, 5 * D + 3, 7 * D + 2]
    with pytest.raises(ShiftError):
        shift_tuple(t, "left", (3, 4), 2, D)  # gap of two columns allows only k = 1
    with pytest.raises(ShiftError):
        shift_tuple(t, "right", 2, 1, D)  # column 2 is occupied
    with pytest.raises(ShiftError):
        shift_tuple(t, "sideways", 0, 1, D)
    with pytest.raises(ShiftError):
        shift_tuple(t, "right", 0, 0, D)


def legal_shifts(ns, D, kmax=3):
    """Every (rule, gap, k) allowed by the two shift rules for lengths ns."""
    cols = {n // D for n in ns}
    top = max(cols, default=0)
    out = []
    for x in range(top + 1):
        if x in cols:
            continue
        out.extend(("right", x, k) for k in range(1, kmax + 1))
        h = 0
        while x + h + 1 <= top and x + h + 1 not in cols:
            h += 1
            out.extend(("left", (x, x + h), k) for k in range(1, min(h, kmax) + 1))
    return out


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["nat_succ", "plus_two", "identity", "max", "bounce"]), st.integers(0, 10**6))
def test_shift_rules_preserve_relations(name, seed):
    from fapres.corpus import unary_corpus

    up = unary_corpus()[name]
    D = up.D
    rng = random.Random(seed)
    for rel_name, R in [*up.interpretations.items(), ("=", up.equality)]:
        tuples = fa.enumerate_tuples(R, 4 * D)
        for t in rng.sample(tuples, min(10, len(tuples))):
            ns = [len(w) for w in t]
            for rule, gap, k in legal_shifts(ns, D):
                assert R.contains(*shift_tuple(ns, rule, gap, k, D)), (rel_name, ns, rule, gap, k)


def test_column_slice_examples():
    w = column_slice(fa.universal_language(A), 2, 4, 3)
    assert all(rows == frozenset(range(3)) for rows in w.contents)
    from_three = LengthSet(3, 1, frozenset(), frozenset({0})).to_dfa()
    w = column_slice(from_three, 0, 1, 2)
    assert w.contents == (frozenset(), frozenset({1}))
    assert w.words(2) == [3]
    w = column_slice(fa.empty_language(A, 1), 0, 5, 4)
    assert all(not rows for rows in w.contents)


def test_render_grid():
    text = render_grid(["aaaa", "a" * 7], 3)
    assert text.splitlines() == ["2 ...", "1 .12", "0 ...", "  012"]
    # collisions and an explicit width
    text = render_grid([1, 1, 0], 2, width=3)
    assert text.splitlines() == ["1 +..", "0 3..", "  012"]


# -- normal form -------------------------------------------------------------------------

def test_normalize_even_succ(even_succ, nat_succ):
    up = normalize_injective(even_succ)
    assert up.full_domain
    assert up.presentation.graph("succ") == nat_succ.presentation.graph("succ")
    # the doubling map n -> 2n carries the new graph onto the old one; it is not a
    # synchronous rational relation, so the check is by enumeration
    old, new = even_succ.graph("succ"), up.presentation.graph("succ")
    for n in range(30):
        for m in range(30):
            assert new.contains("a" * n, "a" * m) == old.contains("a" * (2 * n), "a" * (2 * m))


def test_normalize_is_idempotent(corpus, even_succ):
    for up in corpus.values():
        assert normalize_injective(up.presentation).presentation.interpretations == dict(up.interpretations)
    once = normalize_injective(even_succ)
    twice = normalize_injective(once.presentation)
    assert twice.presentation.interpretations == once.presentation.interpretations


def test_normalize_finite():
    L = fa.finite_language(A, 1, ["", "a"])
    ident = fa.finite_language(A, 2, [("", ""), ("a", "a")])
    up = normalize_injective(Presentation.build(A, L, operations={"id": ident}))
    assert not up.full_domain
    assert up.domain == L and up.graph("id") == ident


def test_normalize_quotient():
    # parity equality on a*: the quotient is {eps, a} with the swap
    from test_presentation import parity_equality

    E = parity_equality()
    swap = fa.difference(fa.valid_conv_language(A, 2), E)
    p = Presentation.build(A, fa.universal_language(A), operations={"s": swap}, equality=E)
    up = normalize_injective(p)
    assert up.domain == fa.finite_language(A, 1, ["", "a"])
    assert up.graph("s") == fa.finite_language(A, 2, [("", "a"), ("a", "")])
    assert validate_presentation(up.presentation).ok


def test_normalize_preserves_sentences(even_succ):
    up = normalize_injective(even_succ)
    sentences = [
        "(forall x (exists y (rel succ x y)))",
        "(exists x (forall y (not (rel succ y x))))",
        "(exists x (rel succ x x))",
        "(forall x (forall y (implies (= (succ x) (succ y)) (= x y))))",
    ]
    for s in sentences:
        assert holds(even_succ, s) == holds(up.presentation, s)
