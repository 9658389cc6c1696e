"""Named construction recipes for every group the verification suites use.

Each entry records how to build the group together with its expected
invariants (order, center size, AC flag, genus where a closed form pins it
down).  Groups realized from presentations use explicit faithful permutation
or matrix representations; correctness follows from the generators satisfying
the defining relations while reaching the full group order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .engine import FamilyParams, commuting_graph
from .fields import FieldContext, Mat2
from .groups import FiniteGroup, direct_product, group_from_operation, group_from_permutations, group_from_matrices

CLASSIFICATION_TAGS = ("acyclic-list", "planar-list", "toroidal-list",
                       "counterexample", "counterexample-candidate")


# -- elementary builders ---------------------------------------------------

def _cyclic(n):
    return group_from_permutations([tuple((i + 1) % n for i in range(n))],
                                   name=f"Z{n}")


def _dihedral(order):
    if order % 2 or order < 6:
        raise ValueError(f"dihedral group order must be even and >= 6, got {order}")
    n = order // 2
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    return group_from_permutations([rot, ref], name=f"D{order}")


def _dicyclic(order):
    if order % 4 or order < 8:
        raise ValueError(f"dicyclic group order must be 4n with n >= 2, got {order}")
    n = order // 4
    m = 2 * n
    # element model: (i, 0) = y^i, (i, 1) = x y^i, with x^2 = y^n, x y x^-1 = y^-1
    elems = [(i, e) for e in range(2) for i in range(m)]

    def op(a, b):
        (i, e), (j, f) = a, b
        if e == 0:
            return ((i + j) % m, 0) if f == 0 else ((j - i) % m, 1)
        return ((i + j) % m, 1) if f == 0 else ((n - i + j) % m, 0)

    def label(elem):
        i, e = elem
        return ("x" if e else "") + (f"y^{i}" if i else ("" if e else "1"))

    return group_from_operation(elems, op, (0, 0), label, name=f"Q{order}")


def _semidihedral(order):
    if order < 16 or order & (order - 1):
        raise ValueError(f"semidihedral group order must be 2^k with k >= 4, got {order}")
    half = order // 2
    k = half // 2 - 1  # s r s = r^(2^(n-2) - 1)
    rot = tuple((i + 1) % half for i in range(half))
    ref = tuple((k * i) % half for i in range(half))
    return group_from_permutations([rot, ref], name=f"SD{order}")


def _symmetric(n):
    transposition = tuple([1, 0] + list(range(2, n)))
    cycle = tuple(list(range(1, n)) + [0])
    return group_from_permutations([transposition, cycle], name=f"S{n}")


def _alternating(n):
    three_cycle = tuple([1, 2, 0] + list(range(3, n)))
    if n % 2:
        long_cycle = tuple(list(range(1, n)) + [0])
    else:
        long_cycle = tuple([0] + list(range(2, n)) + [1])
    return group_from_permutations([three_cycle, long_cycle], name=f"A{n}")


_FIELD_BY_ORDER = {2: (2, 1), 3: (3, 1), 4: (2, 2), 5: (5, 1), 7: (7, 1),
                   8: (2, 3), 9: (3, 2), 16: (2, 4)}


@lru_cache(maxsize=None)
def field(q) -> FieldContext:
    if q not in _FIELD_BY_ORDER:
        raise ValueError(f"unsupported field order {q}")
    return FieldContext(*_FIELD_BY_ORDER[q])


def _gl2(q):
    ctx = field(q)
    # row operations: a primitive scaling, a transvection and the swap
    z = 2 if q > 2 else 1
    gens = [Mat2.of(ctx, z, 0, 0, 1), Mat2.of(ctx, 1, 1, 0, 1),
            Mat2.of(ctx, 0, 1, 1, 0)]
    return group_from_matrices(gens, ctx, name=f"GL(2,{q})")


def _sl2(q):
    ctx = field(q)
    gens = [Mat2.of(ctx, 1, 1, 0, 1), Mat2.of(ctx, 1, 0, 1, 1)]
    if q > 3:
        # transvections over the prime field only reach SL(2,p); add a torus
        # generator to cover the field extension
        t = ctx.element(2)
        gens.append(Mat2(t, ctx.zero, ctx.zero, t.inv()))
    return group_from_matrices(gens, ctx, name=f"SL(2,{q})")


def _psl2_char2(q):
    group = _sl2(q)  # trivial center in characteristic 2, so PSL = SL
    group.name = f"PSL(2,{q})"
    return group


def _holonomy(n, mult, name):
    """Z_n semidirect a cyclic group acting by x -> mult * x."""
    rot = tuple((i + 1) % n for i in range(n))
    act = tuple((mult * i) % n for i in range(n))
    return group_from_permutations([rot, act], name=name)


def _sg16_3():
    # a = (1 2 3 4)(5 6 7 8), b = (2 4)(5 6 7 8): these satisfy
    # a^4 = b^4 = 1, ab = (ab)^-1, ab^-1 = (ab^-1)^-1 and generate order 16,
    # hence realize SG(16,3) faithfully.
    return group_from_permutations([(1, 2, 3, 0, 5, 6, 7, 4),
                                    (0, 3, 2, 1, 5, 6, 7, 4)], name="SG(16,3)")


def _z4_rtimes_z4():
    # a = (1 2 3 4), b = (2 4)(5 6 7 8): a^4 = b^4 = 1, b a b^-1 = a^-1
    return group_from_permutations([(1, 2, 3, 0, 4, 5, 6, 7),
                                    (0, 3, 2, 1, 5, 6, 7, 4)], name="Z4:Z4")


def _d8_star_z4():
    # central product: (D8 x Z4) / <(z, c^2)> with z the central involution
    d8 = _dihedral(8)
    z4 = _cyclic(4)
    prod = direct_product(d8, z4)
    z = next(x for x in d8.center() if x != 0)
    c2 = next(x for x in range(4) if z4.element_order(x) == 2)
    fused = prod.quotient(prod.subgroup_closure([z * 4 + c2]))
    fused.name = "D8*Z4"
    return fused


def _heisenberg27():
    # affine maps of GF(3)^2: a translation and a shear generate the
    # extraspecial group of order 27 and exponent 3
    points = [(i, j) for i in range(3) for j in range(3)]
    index = {p: i for i, p in enumerate(points)}
    translate = tuple(index[(i, (j + 1) % 3)] for (i, j) in points)
    shear = tuple(index[((i + j) % 3, j)] for (i, j) in points)
    return group_from_permutations([translate, shear], name="27_exp3")


_SIMPLE_BUILDERS = {
    "S3": lambda: _symmetric(3),
    "S4": lambda: _symmetric(4),
    "S5": lambda: _symmetric(5),
    "A4": lambda: _alternating(4),
    "A5": lambda: _alternating(5),
    "Sz(2)": lambda: _holonomy(5, 2, "Sz(2)"),
    "Z7:Z3": lambda: _holonomy(7, 2, "Z7:Z3"),
    "M16": lambda: _holonomy(8, 5, "M16"),
    "SG16_3": _sg16_3,
    "Z4:Z4": _z4_rtimes_z4,
    "D8*Z4": _d8_star_z4,
    "SL(2,3)": lambda: _sl2(3),
    "27_exp3": _heisenberg27,
    "27_exp9": lambda: _holonomy(9, 4, "27_exp9"),
    "Z2xD8": lambda: direct_product(_cyclic(2), _dihedral(8)),
    "Z2xQ8": lambda: direct_product(_cyclic(2), _dicyclic(8)),
    "Z2xA4": lambda: direct_product(_cyclic(2), _alternating(4)),
    "Z2xD12": lambda: direct_product(_cyclic(2), _dihedral(12)),
    "Z3xS3": lambda: direct_product(_cyclic(3), _symmetric(3)),
    "Z3xD8": lambda: direct_product(_cyclic(3), _dihedral(8)),
    "Z3xQ8": lambda: direct_product(_cyclic(3), _dicyclic(8)),
    "Z3xD10": lambda: direct_product(_cyclic(3), _dihedral(10)),
    "Z5xS3": lambda: direct_product(_cyclic(5), _symmetric(3)),
}

_PARAMETRIC_BUILDERS = {
    "D": _dihedral,
    "Q": _dicyclic,
    "SD": _semidihedral,
    "S": _symmetric,
    "A": _alternating,
    "Z": _cyclic,
    "GL2": _gl2,
    "SL2": _sl2,
    "PSL2": _psl2_char2,
}


@lru_cache(maxsize=None)
def build(name: str, param: int | None = None) -> FiniteGroup:
    """Build a catalog group by name, e.g. build("D", 14) or build("Sz(2)")."""
    if param is not None:
        if name not in _PARAMETRIC_BUILDERS:
            raise ValueError(f"unknown parametric family {name!r}")
        return _PARAMETRIC_BUILDERS[name](param)
    if name in _SIMPLE_BUILDERS:
        return _SIMPLE_BUILDERS[name]()
    for prefix in ("SD", "D", "Q"):
        if name.startswith(prefix) and name[len(prefix):].isdigit():
            return _PARAMETRIC_BUILDERS[prefix](int(name[len(prefix):]))
    raise ValueError(f"unknown catalog group {name!r}")


# -- the catalog -----------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    """One named group with its expected invariants."""

    name: str
    builder: tuple                    # (builder name, param or None)
    expected_order: int
    expected_center: int
    expected_ac: bool
    expected_genus: int | None        # None: no exact value is asserted
    tags: tuple
    family: FamilyParams | None = None  # closed-form formula, when one applies
    alias_of: str | None = None       # isomorphic to another catalog entry

    def build(self) -> FiniteGroup:
        return build(*self.builder)

    def effective_name(self) -> str:
        """Name used for classification membership (aliases collapse)."""
        return self.alias_of or self.name


def _entry(name, builder, order, center, ac, genus, tags=("counterexample",),
           family=None, alias_of=None):
    return CatalogEntry(name, builder, order, center, ac, genus, tuple(tags),
                        family, alias_of)


def _dihedral_entries():
    entries = []
    tags_by_order = {
        6: ("counterexample",), 8: ("acyclic-list", "planar-list"),
        10: ("planar-list",), 12: ("planar-list",), 14: ("toroidal-list",),
        16: ("toroidal-list",), 18: ("counterexample",), 20: ("counterexample",),
        22: ("counterexample",), 24: ("counterexample", "counterexample-candidate"),
        30: ("counterexample",),
    }
    for order, tags in tags_by_order.items():
        if order == 6:
            continue  # D6 is catalogued as S3
        n = order // 2
        genus = FamilyParams("Dihedral", n=n)
        entries.append(_entry(
            f"D{order}", ("D", order), order, 2 if n % 2 == 0 else 1, True,
            None, tags, family=genus))
    return entries


def _dicyclic_entries():
    entries = []
    tags_by_order = {
        8: ("acyclic-list", "planar-list"), 12: ("planar-list",),
        16: ("toroidal-list",), 20: ("counterexample",),
        24: ("counterexample", "counterexample-candidate"),
        28: ("counterexample",), 40: ("counterexample",),
    }
    for order, tags in tags_by_order.items():
        entries.append(_entry(
            f"Q{order}", ("Q", order), order, 2, True, None, tags,
            family=FamilyParams("Dicyclic", n=order // 4)))
    return entries


def _catalog() -> list:
    pq = lambda p, q: FamilyParams("PQ", p=p, q=q)
    entries = [
        _entry("S3", ("S", 3), 6, 1, True, 0,
               ("acyclic-list", "planar-list"), family=pq(2, 3)),
        _entry("D10", ("D", 10), 10, 1, True, 0, ("planar-list",),
               family=pq(2, 5)),
        _entry("A4", ("A", 4), 12, 1, True, 0, ("planar-list",)),
        _entry("Sz(2)", ("Sz(2)", None), 20, 1, True, 0, ("planar-list",)),
        _entry("S4", ("S", 4), 24, 1, False, 0, ("planar-list",)),
        _entry("A5", ("A", 5), 60, 1, True, 0, ("planar-list",)),
        _entry("D12", ("D", 12), 12, 2, True, 0, ("planar-list",),
               family=FamilyParams("Dihedral", n=6)),
        _entry("Q12", ("Q", 12), 12, 2, True, 0, ("planar-list",),
               family=FamilyParams("Dicyclic", n=3)),
        _entry("SL(2,3)", ("SL(2,3)", None), 24, 2, True, 0, ("planar-list",)),
        _entry("Z2xD8", ("Z2xD8", None), 16, 4, True, 0, ("planar-list",)),
        _entry("Z2xQ8", ("Z2xQ8", None), 16, 4, True, 0, ("planar-list",)),
        _entry("SG16_3", ("SG16_3", None), 16, 4, True, 0, ("planar-list",)),
        _entry("Z4:Z4", ("Z4:Z4", None), 16, 4, True, 0, ("planar-list",)),
        _entry("D8*Z4", ("D8*Z4", None), 16, 4, True, 0, ("planar-list",)),
        _entry("M16", ("M16", None), 16, 4, True, 0, ("planar-list",)),
        _entry("Z7:Z3", ("Z7:Z3", None), 21, 1, True, 1, ("toroidal-list",),
               family=pq(3, 7)),
        _entry("Z2xA4", ("Z2xA4", None), 24, 2, True, 1, ("toroidal-list",)),
        _entry("Z3xS3", ("Z3xS3", None), 18, 3, True, 1, ("toroidal-list",)),
        _entry("SD16", ("SD", 16), 16, 2, True, 1, ("toroidal-list",),
               family=FamilyParams("Semidihedral", k=4)),
        # counterexamples exercised by the classification proofs
        _entry("S5", ("S", 5), 120, 1, False, None),
        _entry("GL(2,3)", ("GL2", 3), 48, 2, True, 3,
               family=FamilyParams("GL2", q=3)),
        _entry("PSL(2,4)", ("PSL2", 4), 60, 1, True, 0, ("counterexample",),
               family=FamilyParams("PSL2", k=2), alias_of="A5"),
        _entry("PSL(2,8)", ("PSL2", 8), 504, 1, True, 101,
               family=FamilyParams("PSL2", k=3)),
        _entry("SD32", ("SD", 32), 32, 2, True, 10,
               family=FamilyParams("Semidihedral", k=5)),
        _entry("27_exp3", ("27_exp3", None), 27, 3, True, 4,
               family=FamilyParams("PCubed", p=3)),
        _entry("27_exp9", ("27_exp9", None), 27, 3, True, 4,
               family=FamilyParams("PCubed", p=3)),
        _entry("D30", ("D", 30), 30, 1, True, 10,
               family=FamilyParams("Dihedral", n=15)),
        _entry("Z3xD10", ("Z3xD10", None), 30, 3, True, 6),
        _entry("Z5xS3", ("Z5xS3", None), 30, 5, True, 7),
        _entry("Z2xD12", ("Z2xD12", None), 24, 4, True, 2,
               tags=("counterexample", "counterexample-candidate")),
        _entry("Z3xD8", ("Z3xD8", None), 24, 6, True, 3,
               tags=("counterexample", "counterexample-candidate")),
        _entry("Z3xQ8", ("Z3xQ8", None), 24, 6, True, 3,
               tags=("counterexample", "counterexample-candidate")),
    ]
    listed = {e.name for e in entries}
    sweep_genus = {  # family-formula values for the parameter sweeps
        "D14": 1, "D16": 1, "D18": 2, "D20": 2, "D22": 4, "D24": 4,
        "Q16": 1, "Q20": 2, "Q24": 4, "Q28": 6, "Q40": 18,
    }
    for extra in _dihedral_entries() + _dicyclic_entries():
        if extra.name in listed:
            continue
        genus = sweep_genus.get(extra.name)
        entries.append(CatalogEntry(
            extra.name, extra.builder, extra.expected_order,
            extra.expected_center, extra.expected_ac, genus, extra.tags,
            extra.family, extra.alias_of))
    entries.sort(key=lambda e: e.name)
    return entries


_ENTRIES = _catalog()


def catalog_entries(tag: str = "all") -> list:
    """Entries carrying the given classification tag, or all of them."""
    if tag == "all":
        return list(_ENTRIES)
    if tag not in CLASSIFICATION_TAGS:
        raise ValueError(f"unknown classification tag {tag!r}")
    return [e for e in _ENTRIES if tag in e.tags]


def entry_by_name(name: str) -> CatalogEntry:
    for e in _ENTRIES:
        if e.name == name:
            return e
    raise ValueError(f"no catalog entry named {name!r}")


@lru_cache(maxsize=None)
def report_for(name: str):
    """Cached commuting-graph report for a catalog entry."""
    return commuting_graph(entry_by_name(name).build())


@dataclass(frozen=True)
class VerificationRecord:
    name: str
    checks: tuple  # (field, expected, actual, ok)

    @property
    def passed(self):
        return all(ok for *_, ok in self.checks)


def verify_entry(entry: CatalogEntry) -> VerificationRecord:
    """Build the group and compare invariants against expectations."""
    group = entry.build()
    report = report_for(entry.name)
    checks = [
        ("order", entry.expected_order, group.order,
         group.order == entry.expected_order),
        ("center_order", entry.expected_center, len(group.center()),
         len(group.center()) == entry.expected_center),
        ("is_ac", entry.expected_ac, report.is_ac,
         report.is_ac == entry.expected_ac),
    ]
    if entry.expected_genus is not None:
        actual = report.total.value if report.total.is_exact else \
            (report.total.lower, report.total.upper)
        checks.append(("genus", entry.expected_genus, actual,
                       report.total.is_exact and actual == entry.expected_genus))
    return VerificationRecord(entry.name, tuple(checks))


def catalog_json() -> str:
    """All entries with expected invariants, for external tooling."""
    payload = []
    for e in _ENTRIES:
        payload.append({
            "name": e.name,
            "builder": {"family": e.builder[0], "param": e.builder[1]},
            "expected": {
                "order": e.expected_order,
                "center_order": e.expected_center,
                "is_ac": e.expected_ac,
                "genus": e.expected_genus,
            },
            "tags": list(e.tags),
            "alias_of": e.alias_of,
        })
    return json.dumps(payload, indent=2) + "\n"
