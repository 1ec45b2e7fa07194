from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fapres import automata as fa
from fapres.automata import PAD

A = ("a",)
AB = ("a", "b")


def words_upto(alphabet, n):
    return [w for k in range(n + 1) for w in product(alphabet, repeat=k)]


def succ_graph():
    nb = fa.NfaBuilder(A, 2)
    s, t = nb.state(initial=True), nb.state(accepting=True)
    nb.add(s, ("a", "a"), s)
    nb.add(s, (PAD, "a"), t)
    return nb.to_dfa()


def regex_like(alphabet, pattern):
    """Tiny builder for a*a, aa*, a(aa)* over one letter."""
    nb = fa.NfaBuilder(alphabet, 1)
    if pattern == "a*a":
        s, t = nb.state(initial=True), nb.state(accepting=True)
        nb.add(s, ("a",), s)
        nb.add(s, ("a",), t)
    elif pattern == "aa*":
        s, t = nb.state(initial=True), nb.state(accepting=True)
        nb.add(s, ("a",), t)
        nb.add(t, ("a",), t)
    elif pattern == "a(aa)*":
        s, t = nb.state(initial=True), nb.state(accepting=True)
        nb.add(s, ("a",), t)
        nb.add(t, ("a",), s)
    return nb.to_dfa()


# -- conv / deconv ----------------------------------------------------------------

def test_conv_examples():
    assert fa.conv(["ab", "b"]) == (("a", "b"), ("b", PAD))
    assert fa.conv(["", "aa"]) == ((PAD, "a"), (PAD, "a"))
    assert fa.conv(["a"]) == (("a",),)


def test_deconv_examples():
    assert fa.deconv((("a", "b"), ("b", PAD))) == (("a", "b"), ("b",))
    assert fa.deconv((), 2) == ((), ())
    with pytest.raises(fa.PaddingError):
        fa.deconv(((PAD, "a"), ("a", "a")))


def test_conv_rejects_foreign_symbol():
    with pytest.raises(fa.AutomatonError):
        fa.conv(["ac"], AB)


def test_alphabet_rejects_pad_and_duplicates():
    with pytest.raises(fa.AutomatonError):
        fa.make_alphabet(["a", PAD])
    with pytest.raises(fa.AutomatonError):
        fa.make_alphabet(["a", "a"])


@given(st.lists(st.text(alphabet="ab", max_size=6), min_size=1, max_size=4))
def test_conv_roundtrip(ws):
    c = fa.conv(ws)
    assert fa.deconv(c, len(ws)) == tuple(tuple(w) for w in ws)
    assert len(c) == max(len(w) for w in ws)


# -- valid_conv_language ------------------------------------------------------------

def test_valid_conv_examples():
    v = fa.valid_conv_language(A, 2)
    assert v.contains("aa", "aaa")
    assert not v.accepts(((PAD, "a"), ("a", "a")))
    assert v.accepts(())


def test_valid_conv_matches_deconv_exhaustively():
    v = fa.valid_conv_language(AB, 2)
    letters = fa.tuple_letters(AB, 2)
    for n in range(4):
        for w in product(letters, repeat=n):
            assert v.accepts(w) == fa.is_valid_padded(w)


# -- boolean combinations -----------------------------------------------------------

def test_combine_examples():
    g = succ_graph()
    assert fa.combine("union", g, fa.empty_language(A, 2)) == g
    v = fa.valid_conv_language(A, 2)
    assert fa.combine("complement", v).is_empty()
    both = fa.combine("intersection", regex_like(A, "a*a"), regex_like(A, "aa*"))
    assert fa.enumerate_words(both, 5) == [("a",) * k for k in range(1, 6)]


def test_combine_rejects_unknown_kind():
    with pytest.raises(fa.AutomatonError):
        fa.combine("xor", succ_graph(), succ_graph())


def test_mixed_spaces_rejected():
    with pytest.raises(fa.AutomatonError):
        fa.union(succ_graph(), fa.universal_language(A))


@st.composite
def small_languages(draw):
    """Random NFA over {a,b} with up to 4 states, plus its own simulator."""
    n = draw(st.integers(1, 4))
    edges = draw(st.lists(st.tuples(st.integers(0, n - 1), st.sampled_from(AB), st.integers(0, n - 1)), max_size=10))
    acc = draw(st.sets(st.integers(0, n - 1)))

    def member(w):
        cur = {0}
        for c in w:
            cur = {q for p, x, q in edges if p in cur and x == c}
        return bool(cur & acc)

    d = fa.from_transitions(AB, 1, 0, acc, [(p, (x,), q) for p, x, q in edges], num_states=n)
    return d, member


@settings(max_examples=60, deadline=None)
@given(small_languages(), small_languages())
def test_combine_matches_set_operations(x, y):
    (a, ma), (b, mb) = x, y
    words = words_upto(AB, 8)
    u, i, d, c = fa.union(a, b), fa.intersection(a, b), fa.difference(a, b), fa.complement(a)
    for w in words:
        assert u.contains(w) == (ma(w) or mb(w))
        assert i.contains(w) == (ma(w) and mb(w))
        assert d.contains(w) == (ma(w) and not mb(w))
        assert c.contains(w) == (not ma(w))


@settings(max_examples=60, deadline=None)
@given(small_languages())
def test_canonical_form(x):
    a, member = x
    # the same language reached through other operations
    b = fa.union(fa.intersection(a, fa.universal_language(AB)), fa.empty_language(AB, 1))
    assert a == b
    assert fa.complement(fa.complement(a)) == a


@settings(max_examples=40, deadline=None)
@given(small_languages())
def test_results_only_accept_valid_padding(x):
    a, _ = x
    g, _names = fa.join(a, ["x"], a, ["y"])
    assert fa.is_subset(g, fa.valid_conv_language(AB, 2))
    assert fa.is_subset(fa.cylindrify(a, 1), fa.valid_conv_language(AB, 2))


# -- projection and cylindrification ----------------------------------------------

def test_projection_examples():
    g = succ_graph()
    assert fa.project_existential(g, 2) == fa.universal_language(A)
    assert fa.project_existential(g, 1) == regex_like(A, "aa*")
    assert fa.project_existential(fa.empty_language(A, 2), 1).is_empty()


def test_projection_by_enumeration():
    # pairs (a^n, a^(n+1)) up to length 10, projected by hand
    pairs = fa.enumerate_tuples(succ_graph(), 10)
    firsts = sorted({p[0] for p in pairs}, key=len)
    assert firsts == [("a",) * n for n in range(10)]
    assert fa.enumerate_words(fa.project_existential(succ_graph(), 1), 10) == [("a",) * n for n in range(1, 11)]


def test_cylindrify_examples():
    assert fa.cylindrify(fa.universal_language(A), 2) == fa.valid_conv_language(A, 2)
    assert fa.cylindrify(fa.empty_language(A, 1), 1).is_empty()


def test_cylindrify_then_project_is_identity():
    g = succ_graph()
    for k in (1, 2, 3):
        assert fa.project_existential(fa.cylindrify(g, k), k) == g


def test_projection_track_bounds():
    with pytest.raises(fa.AutomatonError):
        fa.project_existential(succ_graph(), 3)
    with pytest.raises(fa.AutomatonError):
        fa.project_existential(fa.universal_language(A), 1)


# -- decisions and enumeration ------------------------------------------------------

def test_decide_examples():
    assert fa.decide("equivalence", regex_like(A, "a*a"), regex_like(A, "aa*")).holds
    assert fa.decide("emptiness", fa.complement(fa.universal_language(A))).holds
    inc = fa.decide("inclusion", regex_like(A, "a(aa)*"), fa.universal_language(A))
    assert inc.holds and inc.witness is None


def test_decide_witnesses():
    d = fa.decide("inclusion", fa.universal_language(A), regex_like(A, "a(aa)*"))
    assert not d.holds and d.witness_tuple(1) == ((),)
    e = fa.decide("equivalence", regex_like(A, "a(aa)*"), regex_like(A, "aa*"))
    assert not e.holds and e.witness_tuple(1) == (("a", "a"),)
    assert fa.decide("membership", succ_graph(), ["a", "aa"]).holds


def test_enumerate_examples():
    assert fa.enumerate_words(fa.universal_language(A), 2) == [(), ("a",), ("a", "a")]
    assert fa.enumerate_accepted(fa.empty_language(A, 1), 5) == []
    assert fa.enumerate_accepted(succ_graph(), 2) == [fa.conv(["", "a"]), fa.conv(["a", "aa"])]


def test_finite_language_and_shortest():
    d = fa.finite_language(AB, 2, [("ab", ""), ("b", "bb")])
    assert d.contains("ab", "") and d.contains("b", "bb") and not d.contains("b", "b")
    assert fa.deconv(fa.shortest_accepted(d), 2) == (("a", "b"), ())


def test_join_on_shared_variable():
    g = succ_graph()
    two, names = fa.join(g, ["x", "y"], g, ["y", "z"])
    assert names == ("x", "y", "z")
    assert two.contains("a", "aa", "aaa") and not two.contains("a", "aa", "aa")


def test_diagonal_and_permute():
    g = succ_graph()
    assert fa.diagonal(g, [[0, 1]]).is_empty()
    back = fa.permute(fa.permute(g, [1, 0]), [1, 0])
    assert back == g
    assert fa.permute(g, [1, 0]).contains("aa", "a")
