"""Named normal-subgroup families and their generator recipes.

Depth-2 families live in S_n wr S_m with the top S_n acting on m-point
blocks (spec (n, m)):

  EA          e wr A_m: every base entry even
  EAt         e wr A~_m: trivial top, base rank sum even
  Tt          T~_m: trivial top, base entries all even or all odd
  ES          e wr S_m: the first level stabilizer
  AnAt        A_n wr A~_m (the derived subgroup)
  SnAt        S_n wr A~_m
  AnS         A_n wr S_m
  AnE         A_n wr E: even top, trivial base
  AnA         A_n wr A_m: every entry even
  DiagKernel  kernel of sign(top) * sign(product of base entries)
  Trivial, Whole

``Ni`` is N_i at any depth and ``Triple`` covers the candidates in
S_n wr S_n wr S_n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from perm.permutations import transposition
from tableau.spec import WreathSpec
from tableau.tableau import Tableau, identity_tableau, sparse_tableau
from wreath.layers import (
    Layer,
    layer_generators,
    layer_order,
    layered_generators,
    layered_order,
)
from wreath.products import parity_kernel_layers

E = Layer("E")
A = Layer("A")
S = Layer("S")
AT = Layer("At", 1)
TT = Layer("Tt", 1)

DEPTH_TWO_LAYERS: Dict[str, Tuple[Layer, Layer]] = {
    "Trivial": (E, E),
    "EA": (E, A),
    "EAt": (E, AT),
    "Tt": (E, TT),
    "ES": (E, S),
    "AnAt": (A, AT),
    "SnAt": (S, AT),
    "AnS": (A, S),
    "AnE": (A, E),
    "AnA": (A, A),
    "Whole": (S, S),
}
DEPTH_TWO_FAMILIES = tuple(DEPTH_TWO_LAYERS) + ("DiagKernel",)
FAMILY_NI = "Ni"
FAMILY_TRIPLE = "Triple"
TRIPLE_KINDS = ("T023", "T003", "T123")


@dataclass(frozen=True)
class NamedSubgroupSpec:
    """A catalog entry.

    Triple entries are either purely ``layers`` (three of them), or an
    ``inner`` depth-2 family placed on levels 1-2 (``inner_at="top"``, with
    ``layers[2]`` at level 3) or copied into every subtree below the root
    (``inner_at="bottom"``).
    """

    family: str
    spec: WreathSpec
    index: Optional[int] = None
    kind: Optional[str] = None
    layers: Tuple[Layer, ...] = field(default=())
    inner: Optional[str] = None
    inner_at: Optional[str] = None
    note: str = ""

    def __post_init__(self) -> None:
        if self.family in DEPTH_TWO_FAMILIES:
            valid = self.spec.depth == 2
        elif self.family == FAMILY_NI:
            valid = self.index is not None and 1 <= self.index <= self.spec.depth
        elif self.family == FAMILY_TRIPLE:
            valid = (
                self.spec.depth == 3
                and len(set(self.spec.degrees)) == 1
                and self.kind in TRIPLE_KINDS
                and len(self.layers) == 3
                and (self.inner is None or (self.inner in DEPTH_TWO_FAMILIES and self.inner_at in ("top", "bottom")))
            )
        else:
            valid = False
        if not valid:
            raise ValueError("invalid pairing")

    @property
    def name(self) -> str:
        if self.family == FAMILY_NI:
            return f"N{self.index}"
        if self.family == FAMILY_TRIPLE:
            if self.inner_at == "top":
                body = f"{self.inner}~{self.layers[2].label()}"
            elif self.inner_at == "bottom":
                body = f"E~({self.inner})"
            else:
                body = "~".join(layer.label() for layer in self.layers)
            return f"{self.kind}:{body}"
        return self.family


def named(family: str, spec: WreathSpec) -> NamedSubgroupSpec:
    return NamedSubgroupSpec(family=family, spec=spec)


def _inner_spec(spec: WreathSpec) -> WreathSpec:
    return WreathSpec(spec.degrees[:2])


def _diag_kernel_generators(spec: WreathSpec) -> List[Tableau]:
    n, m = spec.degrees
    gens = layered_generators(spec, (A, AT))
    gens.append(
        sparse_tableau(spec, {(1, 1): transposition(1, 2, n), (2, 1): transposition(1, 2, m)})
    )
    return gens


def _lift_to_top(t: Tableau, spec: WreathSpec) -> Tableau:
    bottom = identity_tableau(spec).levels[2]
    return Tableau(spec, t.levels + (bottom,))


def _copy_below_root(t: Tableau, spec: WreathSpec, child: int) -> Tableau:
    n = spec.degrees[1]
    entries = {(2, child): t.levels[0][0]}
    for x, p in enumerate(t.levels[1], start=1):
        entries[(3, (child - 1) * n + x)] = p
    return sparse_tableau(spec, entries)


def generators_of(name: NamedSubgroupSpec) -> List[Tableau]:
    spec = name.spec
    if name.family == "DiagKernel":
        return _diag_kernel_generators(spec)
    if name.family in DEPTH_TWO_LAYERS:
        return layered_generators(spec, DEPTH_TWO_LAYERS[name.family])
    if name.family == FAMILY_NI:
        return layered_generators(spec, parity_kernel_layers(spec, name.index))

    if name.inner is None:
        return layered_generators(spec, name.layers)
    inner = generators_of(named(name.inner, _inner_spec(spec)))
    if name.inner_at == "top":
        gens = layer_generators(spec, 3, name.layers[2])
        gens.extend(_lift_to_top(t, spec) for t in inner)
        return gens
    return [
        _copy_below_root(t, spec, child)
        for child in range(1, spec.degrees[0] + 1)
        for t in inner
    ]


def _depth_two_order(family: str, n: int, m: int) -> int:
    fn, fm = math.factorial(n), math.factorial(m)
    return {
        "Trivial": 1,
        "EA": (fm // 2) ** n,
        "EAt": fm ** n // 2,
        "Tt": 2 * (fm // 2) ** n,
        "ES": fm ** n,
        "AnAt": (fn // 2) * fm ** n // 2,
        "SnAt": fn * fm ** n // 2,
        "DiagKernel": fn * fm ** n // 2,
        "AnS": (fn // 2) * fm ** n,
        "AnE": fn // 2,
        "AnA": (fn // 2) * (fm // 2) ** n,
        "Whole": fn * fm ** n,
    }[family]


def expected_order(name: NamedSubgroupSpec) -> int:
    spec = name.spec
    if name.family in DEPTH_TWO_FAMILIES:
        return _depth_two_order(name.family, *spec.degrees)
    if name.family == FAMILY_NI:
        return math.prod(
            math.factorial(n) ** count // 2
            for n, count in list(zip(spec.degrees, spec.vertex_counts))[name.index - 1:]
        )

    if name.inner is None:
        return layered_order(spec, name.layers)
    inner = _depth_two_order(name.inner, *spec.degrees[:2])
    if name.inner_at == "top":
        return inner * layer_order(spec, 3, name.layers[2])
    return inner ** spec.degrees[0]


def triple_candidates(n: int) -> List[NamedSubgroupSpec]:
    """The listed candidates in S_n wr S_n wr S_n."""
    spec = WreathSpec((n, n, n))
    at_siblings = Layer("At", 2)
    tt_siblings = Layer("Tt", 2)
    tops = (at_siblings, AT, S)
    inner_normal = ("Trivial", "EA", "EAt", "Tt", "ES", "AnAt", "SnAt", "AnS", "DiagKernel", "Whole")

    candidates: List[NamedSubgroupSpec] = []
    for second in (AT, TT):
        for third in tops:
            candidates.append(
                NamedSubgroupSpec(FAMILY_TRIPLE, spec, kind="T023", layers=(E, second, third))
            )
    candidates.append(NamedSubgroupSpec(FAMILY_TRIPLE, spec, kind="T023", layers=(E, S, AT)))
    for inner in inner_normal:
        candidates.append(
            NamedSubgroupSpec(
                FAMILY_TRIPLE, spec, kind="T023", layers=(E, E, E), inner=inner, inner_at="bottom"
            )
        )

    candidates.append(NamedSubgroupSpec(FAMILY_TRIPLE, spec, kind="T003", layers=(E, E, AT)))
    candidates.append(
        NamedSubgroupSpec(
            FAMILY_TRIPLE, spec, kind="T003", layers=(E, E, tt_siblings),
            note="per-block uniform parity",
        )
    )

    for inner in inner_normal:
        for third in (S, at_siblings, AT):
            candidates.append(
                NamedSubgroupSpec(
                    FAMILY_TRIPLE, spec, kind="T123", layers=(E, E, third), inner=inner, inner_at="top"
                )
            )

    return candidates


def alternative_triple_candidate(n: int) -> NamedSubgroupSpec:
    """Reading in which all third-level entries share one parity across the whole level."""
    return NamedSubgroupSpec(
        FAMILY_TRIPLE, WreathSpec((n, n, n)), kind="T003", layers=(E, E, TT),
        note="global uniform parity",
    )

