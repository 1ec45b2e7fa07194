"""Concrete presentations, constructions and brute-force oracles."""

from .example_x import build_example_X, build_example_X_prime, g0_word, top_minimal_word
from .fixtures import (
    build_bounce,
    build_even_succ,
    build_identity,
    build_max,
    build_nat_succ,
    build_plus_two,
    unary_corpus,
)
from .oracle import bfs_closure, bfs_until, pigeonhole_check
from .orbits import EventuallyPeriodic, InfiniteOrbit, MeetsPrevious, OrbitError, build_prop33, detect_orbit
from .turing import MachineError, TMSpec, box_visits, check_square_tm, design_square_tm, tm_from_json, tm_to_json

__all__ = [
    "EventuallyPeriodic",
    "InfiniteOrbit",
    "MachineError",
    "MeetsPrevious",
    "OrbitError",
    "TMSpec",
    "bfs_closure",
    "bfs_until",
    "box_visits",
    "build_bounce",
    "build_even_succ",
    "build_example_X",
    "build_example_X_prime",
    "build_identity",
    "build_max",
    "build_nat_succ",
    "build_plus_two",
    "build_prop33",
    "check_square_tm",
    "design_square_tm",
    "detect_orbit",
    "g0_word",
    "pigeonhole_check",
    "tm_from_json",
    "tm_to_json",
    "top_minimal_word",
    "unary_corpus",
]
