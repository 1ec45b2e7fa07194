"""JSON and DOT formats for automata and presentations."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from . import automata as fa
from .automata import PAD, AutomatonError, Dfa
from .presentation import Presentation, PresentationError, Signature, identity_relation


class FormatError(ValueError):
    """Malformed input document; ``where`` locates the problem."""

    def __init__(self, message: str, where: str = "$"):
        super().__init__(f"{where}: {message}")
        self.where = where


def dfa_to_json(d: Dfa) -> dict[str, Any]:
    key = fa.letter_key(d.alphabet)
    transitions = [
        {"from": s, "symbol": list(letter), "to": t}
        for s, row in enumerate(d.delta)
        for letter, t in sorted(row.items(), key=lambda lt: key(lt[0]))
    ]
    return {
        "alphabet": list(d.alphabet),
        "arity": d.arity,
        "states": d.num_states,
        "initial": d.initial,
        "accepting": sorted(d.accepting),
        "transitions": transitions,
    }


def _need(obj: dict, key: str, kind, where: str):
    if not isinstance(obj, dict):
        raise FormatError("expected an object", where)
    if key not in obj:
        raise FormatError(f"missing field {key!r}", where)
    val = obj[key]
    if not isinstance(val, kind) or (kind is int and isinstance(val, bool)):
        raise FormatError(f"field {key!r} has the wrong type", f"{where}.{key}")
    return val


def dfa_from_json(obj: Any, where: str = "$", alphabet: tuple[str, ...] | None = None) -> Dfa:
    if not isinstance(obj, dict):
        raise FormatError("expected an automaton object", where)
    sigma = tuple(_need(obj, "alphabet", list, where)) if "alphabet" in obj or alphabet is None else alphabet
    if alphabet is not None and sigma != alphabet:
        raise FormatError("alphabet differs from the presentation's", f"{where}.alphabet")
    arity = _need(obj, "arity", int, where)
    n = _need(obj, "states", int, where)
    init = _need(obj, "initial", int, where)
    acc = _need(obj, "accepting", list, where)
    trans = _need(obj, "transitions", list, where)
    if n < 1 or not 0 <= init < n:
        raise FormatError("state count or initial state out of range", where)
    delta: list[dict] = [{} for _ in range(n)]
    for i, t in enumerate(trans):
        here = f"{where}.transitions[{i}]"
        s = _need(t, "from", int, here)
        sym = _need(t, "symbol", list, here)
        q = _need(t, "to", int, here)
        if not (0 <= s < n and 0 <= q < n):
            raise FormatError("state out of range", here)
        letter = tuple(sym)
        if len(letter) != arity or any(c != PAD and c not in sigma for c in letter):
            raise FormatError(f"bad symbol {sym!r}", here)
        if letter in delta[s] and delta[s][letter] != q:
            raise FormatError("nondeterministic transition", here)
        delta[s][letter] = q
    for a in acc:
        if not isinstance(a, int) or not 0 <= a < n:
            raise FormatError(f"accepting state {a!r} out of range", f"{where}.accepting")
    try:
        return fa.build_dfa(sigma, arity, init, set(acc), delta)
    except AutomatonError as e:
        raise FormatError(str(e), where) from e


def presentation_to_json(p: Presentation) -> dict[str, Any]:
    return {
        "alphabet": list(p.alphabet),
        "signature": {
            "relations": [{"name": n, "arity": k} for n, k in p.signature.relations],
            "operations": [{"name": n, "arity": k} for n, k in p.signature.operations],
        },
        "domain": dfa_to_json(p.domain),
        "equality": "identity" if p.injective else dfa_to_json(p.equality),
        "interpretations": {n: dfa_to_json(d) for n, d in p.interpretations.items()},
    }


def _symbols(obj: Any, key: str, where: str) -> list[tuple[str, int]]:
    out = []
    for i, item in enumerate(_need(obj, key, list, where)):
        here = f"{where}.{key}[{i}]"
        out.append((_need(item, "name", str, here), _need(item, "arity", int, here)))
    return out


def presentation_from_json(obj: Any) -> Presentation:
    alphabet = tuple(_need(obj, "alphabet", list, "$"))
    sig_obj = _need(obj, "signature", dict, "$")
    try:
        sig = Signature(
            tuple(_symbols(sig_obj, "relations", "$.signature")),
            tuple(_symbols(sig_obj, "operations", "$.signature")),
        )
        domain = dfa_from_json(_need(obj, "domain", dict, "$"), "$.domain", alphabet)
        eq = obj.get("equality", "identity")
        if eq == "identity":
            equality = identity_relation(domain)
        else:
            equality = dfa_from_json(eq, "$.equality", alphabet)
        interps = {
            name: dfa_from_json(d, f"$.interpretations.{name}", alphabet)
            for name, d in _need(obj, "interpretations", dict, "$").items()
        }
        return Presentation(alphabet, sig, domain, equality, interps)
    except (PresentationError, AutomatonError) as e:
        if isinstance(e, FormatError):
            raise
        raise FormatError(str(e)) from e


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _load_json(path: str | Path) -> Any:
    text = Path(path).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(e.msg, f"{path}:{e.lineno}:{e.colno}") from e


def load_presentation(path: str | Path) -> Presentation:
    return presentation_from_json(_load_json(path))


def save_presentation(p: Presentation, path: str | Path) -> None:
    Path(path).write_text(dumps(presentation_to_json(p)), encoding="utf-8")


def load_dfa(path: str | Path) -> Dfa:
    return dfa_from_json(_load_json(path))


def to_dot(d: Dfa, name: str = "A") -> str:
    """Graphviz rendering; parallel edges are merged into one label."""
    lines = [f'digraph "{name}" {{', "  rankdir=LR;", '  __start [shape=point, label=""];']
    for s in range(d.num_states):
        shape = "doublecircle" if s in d.accepting else "circle"
        lines.append(f'  {s} [shape={shape}, label="{s}"];')
    lines.append(f"  __start -> {d.initial};")
    key = fa.letter_key(d.alphabet)
    for s, row in enumerate(d.delta):
        by_target: dict[int, list] = {}
        for letter, t in sorted(row.items(), key=lambda lt: key(lt[0])):
            by_target.setdefault(t, []).append(letter)
        for t, letters in by_target.items():
            label = ", ".join(",".join(l) if d.arity != 1 else l[0] for l in letters)
            label = label.replace("\\", "\\\\").replace('"', '\\"')
            lines.append(f'  {s} -> {t} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
