import json

import pytest

from fapres.corpus import MachineError, design_square_tm, tm_from_json, tm_to_json
from fapres.corpus.turing import BOX, TMSpec, box_visits, check_square_tm


def test_box_visits_at_squares():
    tm = design_square_tm()
    seen = box_visits(tm, 6)
    assert [v.step for v in seen] == [1, 17, 63, 169, 377, 741]
    assert [v.tape for v in seen] == ["a" * (j * j) for j in range(1, 7)]
    assert all(BOX in v.config for v in seen)
    assert check_square_tm(tm) == seen[:3]


def test_step_semantics():
    tm = design_square_tm()
    assert tm.initial_config() == "q_"
    assert tm.step("q_") == BOX + "a"
    assert tm.step("⊥q_") == "⊥" + BOX + "a"  # a leading marker passes through
    # m moves left past the start of the tape: the head stays on cell 0
    assert tm.step("ma") == "mx"
    # pairs without a rule are fixed
    assert tm.step("qa") == "qa"
    with pytest.raises(MachineError):
        tm.split("aa")
    with pytest.raises(MachineError):
        tm.split("qq")


def test_json_roundtrip():
    tm = design_square_tm()
    obj = json.loads(json.dumps(tm_to_json(tm)))
    assert tm_from_json(obj) == tm


@pytest.mark.parametrize(
    "mutate",
    [
        lambda o: o.pop("transitions"),
        lambda o: o["transitions"].append(list(o["transitions"][0])),
        lambda o: o["transitions"][0].pop(),
        lambda o: o["transitions"][0].__setitem__(4, "U"),
        lambda o: o.__setitem__("initial", "Z"),
        lambda o: o.__setitem__("tape", o["tape"] + ["q"]),
        lambda o: o.__setitem__("states", 7),
    ],
)
def test_json_errors(mutate):
    obj = tm_to_json(design_square_tm())
    mutate(obj)
    with pytest.raises(MachineError):
        tm_from_json(obj)


def test_wrong_machines_are_rejected():
    tm = design_square_tm()
    halting = TMSpec(tm.states, tm.tape, {("q", "_"): ("m", "a", "N")}, "q")
    with pytest.raises(MachineError):
        check_square_tm(halting)
    t = dict(tm.transitions)
    t["d", "_"] = ("k", "a", "R")  # appends without turning back
    with pytest.raises(MachineError):
        check_square_tm(TMSpec(tm.states, tm.tape, t, "q"), budget=5000)
