"""JSON exchange format for labelings.

A document looks like::

    {"n": 6, "center": 7, "vertices": [5, 13, 2, 9, 1, 12],
     "midpoints": [3, 6, 10, 11, 8, 4]}

``vertices`` lists v_1..v_n clockwise and ``midpoints[i-1]`` sits between v_i
and v_{i+1}.  Canonical formatting is :func:`dumps`: keys in the order above,
two-space indentation, arrays on one line, trailing newline.
"""

from __future__ import annotations

import json

from .core import DomainError, Labeling

KEYS = ("n", "center", "vertices", "midpoints")


class DocumentError(DomainError):
    """A labeling document failed to parse or validate.

    ``problems`` holds one message per offending field.
    """

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(self.problems))


def labeling_to_dict(labeling: Labeling) -> dict:
    return {
        "n": labeling.n,
        "center": labeling.center,
        "vertices": list(labeling.vertices),
        "midpoints": list(labeling.midpoints),
    }


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def labeling_from_dict(doc) -> Labeling:
    """Validate a decoded document and build the labeling."""
    if not isinstance(doc, dict):
        raise DocumentError(["document must be a JSON object"])
    problems = []
    for key in KEYS:
        if key not in doc:
            problems.append(f"{key}: missing")
    for key in sorted(set(doc) - set(KEYS)):
        problems.append(f"{key}: unknown field")
    if problems:
        raise DocumentError(problems)

    n = doc["n"]
    if not _is_int(n) or n < 3:
        raise DocumentError([f"n: expected an integer >= 3, got {n!r}"])
    top = 2 * n + 1
    center = doc["center"]
    if not _is_int(center):
        problems.append(f"center: expected an integer, got {center!r}")
    elif not 1 <= center <= top:
        problems.append(f"center: {center} outside [1, {top}]")
    for key in ("vertices", "midpoints"):
        arr = doc[key]
        if not isinstance(arr, list):
            problems.append(f"{key}: expected an array")
            continue
        if len(arr) != n:
            problems.append(f"{key}: expected {n} entries, got {len(arr)}")
        for i, x in enumerate(arr, start=1):
            if not _is_int(x):
                problems.append(f"{key}[{i}]: expected an integer, got {x!r}")
            elif not 1 <= x <= top:
                problems.append(f"{key}[{i}]: {x} outside [1, {top}]")
    if problems:
        raise DocumentError(problems)
    return Labeling(n, tuple(doc["vertices"]), tuple(doc["midpoints"]), center)


def dumps(labeling: Labeling) -> str:
    d = labeling_to_dict(labeling)
    body = ",\n".join(f"  {json.dumps(k)}: {json.dumps(d[k])}" for k in KEYS)
    return "{\n" + body + "\n}\n"


def loads(text: str) -> Labeling:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError([f"invalid JSON: {exc}"]) from None
    return labeling_from_dict(doc)


def read(path) -> Labeling:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def write(labeling: Labeling, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(labeling))
