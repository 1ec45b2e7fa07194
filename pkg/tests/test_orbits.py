import pytest

from fapres import automata as fa
from fapres.corpus.oracle import bfs_closure
from fapres.corpus.orbits import (
    EventuallyPeriodic,
    InfiniteOrbit,
    MeetsPrevious,
    OrbitError,
    build_prop33,
)
from fapres.presentation import Presentation, PresentationError, apply_operation, validate_presentation

A = ("a",)
LIMIT = 300  # ample for orbits of length 10 and keeps refutation of infinite claims fast


def f_int(n):
    return {4: 2, 5: 6, 6: 3}.get(n, n + 1)


def make_base():
    """a^n -> a^f(n): 0,1 run into the 3-cycle 2,3,4; 5,6 lead into it; from 7 on n+1."""
    fin = fa.finite_language(A, 2, [("a" * n, "a" * f_int(n)) for n in range(7)])
    nb = fa.NfaBuilder(A, 2)
    s = [nb.state(initial=True)] + [nb.state() for _ in range(7)]
    for i in range(7):
        nb.add(s[i], ("a", "a"), s[i + 1])
    nb.add(s[7], ("a", "a"), s[7])
    end = nb.state(accepting=True)
    nb.add(s[7], (fa.PAD, "a"), end)
    p = Presentation.build(A, fa.universal_language(A), operations={"f": fa.union(fin, nb.to_dfa())})
    return p


@pytest.fixture(scope="module")
def base():
    p = make_base()
    assert validate_presentation(p).ok
    return p


GENS = ["", "a" * 5, "a" * 7, "a" * 9]
DATA = [EventuallyPeriodic(2, 3), MeetsPrevious(2, ("p1.3",)), InfiniteOrbit(), MeetsPrevious(0, ("t3", "a", "a"))]


@pytest.fixture(scope="module")
def result(base):
    return build_prop33(base, GENS, DATA, limit=LIMIT)


def test_all_three_cases(result):
    p = result.presentation
    assert validate_presentation(p).ok
    assert p.alphabet == ("p1.0", "p1.1", "p1.2", "p1.3", "p1.4", "p2.0", "p2.1", "t3", "a")
    assert result.generators == (("p1.0",), ("p2.0",), ("t3",), ("t3", "a", "a"))
    # the cycle closes back to p1.2, the second orbit joins it at p1.3
    assert apply_operation(p, "f", [("p1.4",)]) == ("p1.2",)
    assert apply_operation(p, "f", [("p2.1",)]) == ("p1.3",)
    assert apply_operation(p, "f", [("t3", "a")]) == ("t3", "a", "a")


def test_isomorphic_to_generated_subalgebra(base, result):
    p = result.presentation
    S = bfs_closure(p, result.generators, 10)
    B = bfs_closure(base, GENS, 10)
    images = {w: result.phi(w) for w in S}
    assert len(set(images.values())) == len(S)
    assert set(images.values()) == B
    for w in S:
        assert result.phi(apply_operation(p, "f", [w])) == apply_operation(base, "f", [images[w]])
    # the subalgebra itself, by integer arithmetic
    want = set()
    for g in (0, 5, 7, 9):
        n = g
        for _ in range(11):
            want.add(n)
            n = f_int(n)
    assert {len(w) for w in B} == want


def test_detection_without_data(base):
    r = build_prop33(base, ["", "a" * 5], limit=LIMIT)
    assert r.generators == (("p1.0",), ("p2.0",))
    with pytest.raises(OrbitError):
        build_prop33(base, ["a" * 7], limit=LIMIT)  # infinite orbits are never settled


@pytest.mark.parametrize(
    "gens,data",
    [
        ([""], [EventuallyPeriodic(2, 4)]),
        ([""], [EventuallyPeriodic(1, 3)]),
        ([""], [InfiniteOrbit()]),
        (["a" * 7], [EventuallyPeriodic(0, 1)]),
        (["", "a" * 5], [EventuallyPeriodic(2, 3), MeetsPrevious(1, ("p1.3",))]),
        (["", "a" * 5], [EventuallyPeriodic(2, 3), MeetsPrevious(2, ("p9.9",))]),
        (["", "a" * 3], [EventuallyPeriodic(2, 3), EventuallyPeriodic(0, 3)]),
        ([""], [MeetsPrevious(-1, ("p1.0",))]),
    ],
)
def test_false_claims_are_refuted(base, gens, data):
    with pytest.raises(OrbitError):
        build_prop33(base, gens, data, limit=LIMIT)


def test_input_errors(base, nat_succ, max_alg):
    with pytest.raises(PresentationError):
        build_prop33(max_alg.presentation, ["a"], limit=LIMIT)
    with pytest.raises(ValueError):
        build_prop33(base, ["", "a"], [InfiniteOrbit()], limit=LIMIT)
    r = build_prop33(nat_succ.presentation, ["aaa"], [InfiniteOrbit()], limit=LIMIT)
    assert r.phi(("t1", "a", "a")) == ("a",) * 5
