"""A deterministic Turing machine that visits a distinguished state at square tape lengths.

Configurations are words ``u q v`` over tape symbols and one state symbol:
the tape holds ``uv`` and the head reads the first symbol of ``v`` (a blank
past the end when ``v`` is empty).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping

BLANK = "_"
BOX = "□"


class MachineError(ValueError):
    pass


@dataclass(frozen=True)
class TMSpec:
    states: tuple[str, ...]
    tape: tuple[str, ...]
    transitions: Mapping[tuple[str, str], tuple[str, str, str]]
    initial: str
    box: str = BOX
    blank: str = BLANK
    letter: str = "a"
    _index: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        syms = self.states + self.tape
        if len(set(syms)) != len(syms) or any(len(s) != 1 for s in syms):
            raise MachineError("state and tape symbols must be distinct single characters")
        for s in (self.initial, self.box):
            if s not in self.states:
                raise MachineError(f"{s!r} is not a state")
        for s in (self.blank, self.letter):
            if s not in self.tape:
                raise MachineError(f"{s!r} is not a tape symbol")
        for (q, b), (q2, w, mv) in self.transitions.items():
            if q not in self.states or q2 not in self.states or b not in self.tape or w not in self.tape:
                raise MachineError(f"bad transition {(q, b)} -> {(q2, w, mv)}")
            if mv not in ("L", "R", "N"):
                raise MachineError(f"bad move {mv!r}")

    def rule(self, q: str, b: str) -> tuple[str, str, str] | None:
        return self.transitions.get((q, b))

    def initial_config(self, head: str = "") -> str:
        """Initial configuration: empty tape shown as a single blank."""
        return head + self.initial + self.blank

    def split(self, config: str) -> tuple[str, str, str, str]:
        """(prefix outside B*QB*, u, q, v)."""
        head = config[0] if config and config[0] not in self.tape and config[0] not in self.states else ""
        body = config[len(head):]
        pos = [i for i, c in enumerate(body) if c in self.states]
        if len(pos) != 1 or any(c not in self.tape for i, c in enumerate(body) if i != pos[0]):
            raise MachineError(f"{config!r} is not a configuration")
        i = pos[0]
        return head, body[:i], body[i], body[i + 1 :]

    def step(self, config: str) -> str:
        """One computation step; configurations without a rule are left unchanged."""
        head, u, q, v = self.split(config)
        b = v[0] if v else self.blank
        r = self.rule(q, b)
        if r is None:
            return config
        q2, w, mv = r
        v = w + v[1:]
        if mv == "R":
            u, v = u + v[0], v[1:]
        elif mv == "L" and u:
            u, v = u[:-1], u[-1] + v
        return head + u + q2 + v

    def run(self, config: str) -> Iterator[str]:
        while True:
            yield config
            config = self.step(config)


def design_square_tm() -> TMSpec:
    """Machine entering the box state exactly at tape contents a^1, a^4, a^9, ...

    From a^(j*j) with the head at cell j-1 it marks cells 0..j-1, appends two
    a's per mark plus one more, restores the marks and re-enters the box
    state at cell j.
    """
    t = {
        ("q", BLANK): (BOX, "a", "N"),
        (BOX, "a"): ("m", "x", "L"),
        ("m", "a"): ("m", "x", "L"),
        ("m", "x"): ("p", "x", "N"),
        ("p", "x"): ("e", "y", "R"),
        ("e", "x"): ("e", "x", "R"),
        ("e", "y"): ("e", "y", "R"),
        ("e", "a"): ("e", "a", "R"),
        ("e", BLANK): ("d", "a", "R"),
        ("d", BLANK): ("k", "a", "L"),
        ("k", "a"): ("k", "a", "L"),
        ("k", "x"): ("j", "x", "L"),
        ("k", "y"): ("f", "y", "R"),
        ("j", "x"): ("j", "x", "L"),
        ("j", "y"): ("p", "y", "R"),
        ("f", "a"): ("f", "a", "R"),
        ("f", BLANK): ("g", "a", "L"),
        ("g", "a"): ("g", "a", "L"),
        ("g", "y"): ("g", "w", "L"),
        ("g", "w"): ("r", "w", "N"),
        ("r", "w"): ("r", "a", "R"),
        ("r", "a"): (BOX, "a", "N"),
    }
    return TMSpec(
        states=("q", BOX, "m", "p", "e", "d", "k", "j", "f", "g", "r"),
        tape=("a", "x", "y", "w", BLANK),
        transitions=t,
        initial="q",
    )


@dataclass(frozen=True)
class BoxVisit:
    step: int
    config: str
    tape: str


def box_visits(tm: TMSpec, count: int, budget: int = 10**6) -> list[BoxVisit]:
    """First ``count`` visits to the box state from the initial configuration."""
    out = []
    for i, c in enumerate(tm.run(tm.initial_config())):
        if i > budget:
            raise MachineError(f"only {len(out)} box visits within {budget} steps")
        _, u, q, v = tm.split(c)
        if q == tm.box:
            out.append(BoxVisit(i, c, u + v))
            if len(out) == count:
                return out
        b = v[0] if v else tm.blank
        if tm.rule(q, b) is None:
            raise MachineError(f"machine halts at step {i} in {c!r}")


def check_square_tm(tm: TMSpec, visits: int = 3, budget: int = 10**6) -> list[BoxVisit]:
    """Reject machines whose first box visits are not at tapes a^1, a^4, a^9, ..."""
    seen = box_visits(tm, visits, budget)
    for j, v in enumerate(seen, start=1):
        if v.tape != tm.letter * (j * j):
            raise MachineError(f"box visit {j} has tape {v.tape!r}, expected a^{j * j}")
    return seen


def tm_to_json(tm: TMSpec) -> dict:
    return {
        "states": list(tm.states),
        "tape": list(tm.tape),
        "initial": tm.initial,
        "box": tm.box,
        "blank": tm.blank,
        "letter": tm.letter,
        "transitions": [[q, b, *tm.transitions[q, b]] for q, b in sorted(tm.transitions)],
    }


def tm_from_json(obj) -> TMSpec:
    """Inverse of tm_to_json; transitions are [state, read, next, write, move] rows."""
    try:
        t = {}
        for row in obj["transitions"]:
            q, b, q2, w, mv = row
            if (q, b) in t:
                raise MachineError(f"two rules for {(q, b)}")
            t[q, b] = (q2, w, mv)
        return TMSpec(
            states=tuple(obj["states"]),
            tape=tuple(obj["tape"]),
            transitions=t,
            initial=obj["initial"],
            box=obj.get("box", BOX),
            blank=obj.get("blank", BLANK),
            letter=obj.get("letter", "a"),
        )
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, MachineError):
            raise
        raise MachineError(f"malformed machine description: {e!r}") from e
