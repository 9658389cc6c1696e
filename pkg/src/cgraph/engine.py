"""Commuting graphs and their genus.

Builds the commuting graph of a finite non-abelian group, resolves genus
through block decomposition with formula / planarity / oracle dispatch,
implements the centralizer-family shortcut for AC-groups, the closed-form
family formulas, and the Heawood-style bounds.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass

from .graphs import (
    DEFAULT_ORACLE_EDGE_CAP,
    GenusResult,
    SimpleGraph,
    disjoint_clique_lower_bound,
    genus_complete,
    genus_complete_bipartite,
    genus_lower_bound_euler,
    genus_oracle,
    genus_upper_bound_betti,
    max_clique,
)
from .groups import FiniteGroup

ORACLE_CAP_ENV = "CGRAPH_ORACLE_CAP"


def oracle_cap_from_env(default=DEFAULT_ORACLE_EDGE_CAP) -> int:
    raw = os.environ.get(ORACLE_CAP_ENV)
    return int(raw) if raw else default


# -- genus of an arbitrary graph ------------------------------------------

def _block_genus(block: SimpleGraph, oracle_cap: int) -> GenusResult:
    """Genus of a single block (or any connected graph)."""
    n = block.recognize_complete()
    if n is not None:
        return GenusResult.exact(genus_complete(n), "CompleteFormula")
    mn = block.recognize_complete_bipartite()
    if mn is not None:
        return GenusResult.exact(genus_complete_bipartite(*mn), "BipartiteFormula")
    if block.is_planar():
        return GenusResult.exact(0, "PlanarTest")
    if block.edge_count <= oracle_cap:
        return GenusResult.exact(genus_oracle(block, oracle_cap), "RotationOracle")
    lower = genus_lower_bound_euler(block)
    provenance = ["EulerLower", "BettiUpper"]
    clique_lower = _clique_pair_lower_bound(block)
    if clique_lower > lower:
        lower = clique_lower
        provenance[0] = "DisjointCliqueLower"
    return GenusResult.bounds(lower, genus_upper_bound_betti(block), provenance)


def _clique_pair_lower_bound(g: SimpleGraph) -> int:
    """Lower bound from two disjoint maximum cliques (additivity of genus)."""
    first = max_clique(g)
    if len(first) < 5:
        return 0
    rest = sorted(set(range(g.n)) - set(first))
    second = []
    if len(rest) >= 5:
        remainder = g.induced_subgraph(rest)
        second = [rest[v] for v in max_clique(remainder)]
    return disjoint_clique_lower_bound(g, first, second)


def genus_of_graph(g: SimpleGraph, oracle_cap=DEFAULT_ORACLE_EDGE_CAP) -> GenusResult:
    """Total genus: sum over connected components, each a sum over blocks."""
    results = [_block_genus(b, oracle_cap) for b in g.blocks().block_subgraphs()]
    if all(r.is_exact for r in results):
        total = sum(r.value for r in results)
        cert = results[0].certificate if len(results) == 1 else "BlockSum"
        return GenusResult.exact(total, cert or "BlockSum")
    provenance = sorted({p for r in results if not r.is_exact for p in r.provenance})
    return GenusResult.bounds(sum(r.low() for r in results),
                              sum(r.high() for r in results), provenance)


# -- commuting graphs ------------------------------------------------------

@dataclass(frozen=True)
class CommutingGraphReport:
    """Everything the genus engine derives from one group."""

    group: FiniteGroup
    graph: SimpleGraph
    vertex_elements: tuple   # vertex index -> group element index
    girth: float
    blocks: tuple            # vertex tuples of the commuting graph
    block_results: tuple     # GenusResult per block
    total: GenusResult
    is_ac: bool
    family: object           # CentralizerFamily when is_ac, else None


def commuting_graph_of(group: FiniteGroup) -> SimpleGraph:
    """The graph on G \\ Z(G) with edges between distinct commuting elements."""
    if group.is_abelian():
        raise ValueError("commuting graph requires a non-abelian group")
    center = set(group.center())
    vertices = [x for x in range(group.order) if x not in center]
    pos = {x: i for i, x in enumerate(vertices)}
    edges = [(pos[x], pos[y])
             for i, x in enumerate(vertices) for y in vertices[i + 1:]
             if group.commute(x, y)]
    labels = [group.labels[x] for x in vertices]
    return SimpleGraph(len(vertices), edges, labels)


def commuting_graph(group: FiniteGroup,
                    oracle_cap=DEFAULT_ORACLE_EDGE_CAP) -> CommutingGraphReport:
    graph = commuting_graph_of(group)
    center = set(group.center())
    vertices = tuple(x for x in range(group.order) if x not in center)
    decomposition = graph.blocks()
    block_results = tuple(_block_genus(b, oracle_cap)
                          for b in decomposition.block_subgraphs())
    if all(r.is_exact for r in block_results):
        total = GenusResult.exact(sum(r.value for r in block_results), "BlockSum")
    else:
        provenance = sorted({p for r in block_results
                             if not r.is_exact for p in r.provenance})
        total = GenusResult.bounds(sum(r.low() for r in block_results),
                                   sum(r.high() for r in block_results), provenance)
    is_ac = group.is_ac_group()
    family = group.centralizer_family() if is_ac else None
    return CommutingGraphReport(
        group=group,
        graph=graph,
        vertex_elements=vertices,
        girth=graph.girth(),
        blocks=decomposition.blocks,
        block_results=block_results,
        total=total,
        is_ac=is_ac,
        family=family,
    )


def ac_genus(group: FiniteGroup) -> GenusResult:
    """Genus of an AC-group via its centralizer family: sum of gamma(K_|X|)."""
    if group.is_abelian():
        raise ValueError("AC genus requires a non-abelian group")
    if not group.is_ac_group():
        raise ValueError("group is not an AC-group")
    family = group.centralizer_family()
    value = sum(genus_complete(len(member)) for member in family)
    return GenusResult.exact(value, "BlockSum")


# -- closed-form family formulas -------------------------------------------

FAMILY_TAGS = ("Dihedral", "Dicyclic", "Semidihedral", "PQ", "PCubed",
               "PSL2", "GL2", "AbelianTimesAC")


def _is_prime(n):
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


@dataclass(frozen=True)
class FamilyParams:
    """Parameters selecting one family instance (see `family_genus`)."""

    tag: str
    n: int | None = None        # Dihedral (order 2n), Dicyclic (order 4n)
    p: int | None = None        # PQ, PCubed, GL2 characteristic
    q: int | None = None        # PQ, GL2 field order
    k: int | None = None        # Semidihedral (order 2^k), PSL2 exponent
    abelian_order: int | None = None    # AbelianTimesAC factor |A|
    family_sizes: tuple = ()            # AbelianTimesAC base-group |X| sizes

    def __post_init__(self):
        if self.tag not in FAMILY_TAGS:
            raise ValueError(f"unknown family tag {self.tag!r}")
        tag = self.tag
        if tag == "Dihedral" and (self.n is None or self.n < 3):
            raise ValueError("dihedral formula needs n >= 3 (group order 2n)")
        if tag == "Dicyclic" and (self.n is None or self.n < 2):
            raise ValueError("dicyclic formula needs n >= 2 (group order 4n)")
        if tag == "Semidihedral" and (self.k is None or self.k < 4):
            raise ValueError("semidihedral formula needs k >= 4 (group order 2^k)")
        if tag == "PQ":
            if not (self.p and self.q and _is_prime(self.p) and _is_prime(self.q)):
                raise ValueError("pq formula needs primes p and q")
            if (self.q - 1) % self.p:
                raise ValueError(f"pq formula needs p | q-1, got p={self.p}, q={self.q}")
        if tag == "PCubed" and not (self.p and _is_prime(self.p)):
            raise ValueError("p^3 formula needs a prime p")
        if tag == "PSL2" and (self.k is None or self.k < 2):
            raise ValueError("PSL(2,2^k) formula needs k >= 2")
        if tag == "GL2":
            if self.q is None or self.q < 3:
                raise ValueError("GL(2,q) formula needs q > 2")
            base = min(d for d in range(2, self.q + 1) if self.q % d == 0)
            power = self.q
            while power % base == 0:
                power //= base
            if power != 1:
                raise ValueError(f"GL(2,q) formula needs a prime power q, got {self.q}")
        if tag == "AbelianTimesAC":
            if not self.abelian_order or not self.family_sizes:
                raise ValueError("product formula needs |A| and the base family sizes")


def family_genus(params: FamilyParams) -> int:
    """Closed-form genus of the commuting graph for the given family."""
    t = params.tag
    if t == "Dihedral":
        n = params.n
        return genus_complete(n - 2) if n % 2 == 0 else genus_complete(n - 1)
    if t == "Dicyclic":
        return genus_complete(2 * (params.n - 1))
    if t == "Semidihedral":
        return genus_complete(2 ** (params.k - 1) - 2)
    if t == "PQ":
        p, q = params.p, params.q
        return genus_complete(q - 1) + q * genus_complete(p - 1)
    if t == "PCubed":
        p = params.p
        return (p + 1) * genus_complete(p * (p - 1))
    if t == "PSL2":
        m = 2 ** params.k
        return ((m + 1) * genus_complete(m - 1)
                + (m // 2) * (m + 1) * genus_complete(m - 2)
                + (m // 2) * (m - 1) * genus_complete(m))
    if t == "GL2":
        q = params.q
        return (q * (q + 1) // 2 * genus_complete((q - 1) * (q - 2))
                + q * (q - 1) // 2 * genus_complete(q * (q - 1))
                + (q + 1) * genus_complete((q - 1) ** 2))
    # AbelianTimesAC: each family member X of G scales to |A| * |X|.
    a = params.abelian_order
    return sum(genus_complete(a * x) for x in params.family_sizes)


# -- Heawood-style bounds --------------------------------------------------

def heawood_clique_bound(g: int) -> int:
    """h(g) = floor((7 + sqrt(1 + 48 g)) / 2); h(0) = 4 by the K5 argument."""
    if g < 0:
        raise ValueError("genus cannot be negative")
    if g == 0:
        return 4
    return (7 + math.isqrt(1 + 48 * g)) // 2


@dataclass(frozen=True)
class HeawoodBounds:
    """The bounds on clique size, center, abelian subgroups and group order."""

    genus: int
    h: int
    center_bound: int | None          # floor(h / (t-1)) when t was supplied
    abelian_bound: int | None         # h + |A meet Z(G)| when overlap supplied
    order_bound_base: int             # order bound is base ** exponent
    order_bound_exponent: int

    def order_bound(self) -> int:
        return self.order_bound_base ** self.order_bound_exponent


def heawood_bounds(g: int, t: int | None = None,
                   center_overlap: int | None = None) -> HeawoodBounds:
    if t is not None and t < 2:
        raise ValueError("quotient exponent t must be >= 2")
    h = heawood_clique_bound(g)
    return HeawoodBounds(
        genus=g,
        h=h,
        center_bound=None if t is None else h // (t - 1),
        abelian_bound=None if center_overlap is None else h + center_overlap,
        order_bound_base=2 * h,
        order_bound_exponent=h * (4 * h + 1) ** 2,
    )


@dataclass(frozen=True)
class BoundCheck:
    name: str
    passed: bool
    observed: object
    limit: object
    witness: str = ""


def check_bounds_against_group(group: FiniteGroup,
                               report: CommutingGraphReport) -> list:
    """Verify the clique / center / abelian-subgroup / order bounds."""
    if not report.total.is_exact:
        raise ValueError("bound checks need an exact genus")
    g = report.total.value
    t = group.quotient_exponent()
    bounds = heawood_bounds(g, t=t)
    checks = []

    clique = max_clique(report.graph)
    checks.append(BoundCheck(
        "max_commuting_set", len(clique) <= bounds.h, len(clique), bounds.h,
        witness=",".join(report.graph.label(v) for v in clique)))

    z = len(group.center())
    checks.append(BoundCheck(
        "center_size", z <= bounds.center_bound, z, bounds.center_bound,
        witness=f"t={t}"))

    center = set(group.center())
    worst = None
    ok = True
    for sub in group.abelian_subgroups():
        overlap = len(sub & center)
        limit = bounds.h + overlap
        if len(sub) > limit:
            ok = False
        if worst is None or len(sub) - overlap > worst[0]:
            worst = (len(sub) - overlap, len(sub), limit)
    checks.append(BoundCheck(
        "abelian_subgroups", ok, worst[1], worst[2],
        witness=f"largest |A|-|A∩Z| = {worst[0]}"))

    checks.append(BoundCheck(
        "order_bound", group.order < bounds.order_bound(), group.order,
        f"{bounds.order_bound_base}^{bounds.order_bound_exponent}"))
    return checks


# -- JSON rendering --------------------------------------------------------

def _genus_json(result: GenusResult):
    if result.is_exact:
        return {"kind": "exact", "value": result.value,
                "certificate": result.certificate}
    return {"kind": "bounds", "lower": result.lower, "upper": result.upper,
            "certificate": "+".join(result.provenance)}


def _block_type(block: SimpleGraph) -> str:
    n = block.recognize_complete()
    if n is not None:
        return f"K{n}"
    mn = block.recognize_complete_bipartite()
    if mn is not None:
        return f"K{mn[0]},{mn[1]}"
    return "other"


def report_to_json(report: CommutingGraphReport, name=None) -> dict:
    group = report.group
    blocks = []
    for vertices, result in zip(report.blocks, report.block_results):
        sub = report.graph.induced_subgraph(vertices)
        entry = {"size": len(vertices), "type": _block_type(sub)}
        entry["genus"] = result.value if result.is_exact else \
            {"lower": result.lower, "upper": result.upper}
        blocks.append(entry)
    payload = {
        "group": {
            "name": name or group.name,
            "order": group.order,
            "center_order": len(group.center()),
            "is_ac": report.is_ac,
        },
        "graph": {
            "vertices": report.graph.n,
            "edges": report.graph.edge_count,
            "girth": None if report.girth == math.inf else int(report.girth),
        },
        "blocks": blocks,
        "genus": _genus_json(report.total),
    }
    if report.total.is_exact:
        bounds = heawood_bounds(report.total.value, t=group.quotient_exponent())
        payload["bounds"] = {
            "h": bounds.h,
            "center_bound": bounds.center_bound,
            "order_bound": {"base": bounds.order_bound_base,
                            "exponent": bounds.order_bound_exponent},
        }
    return payload


def to_json_text(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"
