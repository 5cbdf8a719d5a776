from __future__ import annotations

import re
from typing import List

from sympy.combinatorics import Permutation

from perm.permutations import identity

CYCLE_RE = re.compile(r"\(([^()]*)\)")
SEPARATOR_RE = re.compile(r"[\s,]+")
IDENTITY_WORDS = {"", "e", "()"}


def _cycle_points(body: str, degree: int, text: str) -> List[int]:
    body = body.strip()
    if not body:
        return []
    tokens = [token for token in SEPARATOR_RE.split(body) if token]
    if len(tokens) == 1 and len(body) > 1 and body.isdigit() and degree <= 9:
        # compact form such as (123)
        tokens = list(body)
    points: List[int] = []
    for token in tokens:
        if not token.isdigit():
            raise ValueError(f"bad point {token!r} in {text!r}")
        points.append(int(token))
    return points


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse 1-based disjoint-cycle notation such as ``(1,2)(3,4,5)``."""
    stripped = text.strip()
    if stripped in IDENTITY_WORDS:
        return identity(degree)
    if CYCLE_RE.sub("", stripped).strip():
        raise ValueError(f"unparseable cycle notation: {text!r}")

    seen = set()
    cycles: List[List[int]] = []
    for body in CYCLE_RE.findall(stripped):
        points = _cycle_points(body, degree, text)
        for point in points:
            if not 1 <= point <= degree:
                raise ValueError(f"point {point} out of range 1..{degree} in {text!r}")
            if point in seen:
                raise ValueError(f"repeated point {point} in {text!r}")
            seen.add(point)
        if len(points) >= 2:
            cycles.append([point - 1 for point in points])

    if not cycles:
        return identity(degree)
    return Permutation(cycles, size=degree)


def format_cycles(p: Permutation) -> str:
    if p.is_Identity:
        return "()"
    return "".join(
        "(" + ",".join(str(point + 1) for point in c) + ")" for c in p.cyclic_form
    )
