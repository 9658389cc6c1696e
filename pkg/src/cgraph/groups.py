"""Finite groups as complete multiplication tables.

Groups are built by generator closure (permutations or 2x2 matrices over a
finite field), by direct products, or from an explicit element model, and are
immutable once constructed.  Element ordering is BFS from the identity over
the generators in the order given, which keeps labels deterministic.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from .fields import FieldContext, Mat2

DEFAULT_CLOSURE_CAP = 10000


class ClosureCapError(ValueError):
    """Generator closure exceeded the configured element cap."""


def _bfs_closure(identity, generators, mul, cap):
    """Closure under right multiplication; returns elements in BFS order."""
    index = {identity: 0}
    elements = [identity]
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s in generators:
                h = mul(g, s)
                if h not in index:
                    if len(elements) >= cap:
                        raise ClosureCapError(
                            f"closure exceeds cap of {cap} elements")
                    index[h] = len(elements)
                    elements.append(h)
                    nxt.append(h)
        frontier = nxt
    return elements, index


class FiniteGroup:
    """A finite group given by its full multiplication table.

    `table[i][j]` is the index of the product of elements i and j; index 0 is
    the identity.  Labels are purely cosmetic.
    """

    def __init__(self, table, labels=None, name=None):
        n = len(table)
        self.order = n
        self.table = [tuple(row) for row in table]
        self.name = name
        for i, row in enumerate(self.table):
            if len(row) != n:
                raise ValueError(f"row {i} has length {len(row)}, expected {n}")
            if sorted(row) != list(range(n)):
                raise ValueError(f"row {i} is not a permutation of 0..{n - 1}")
        for j in range(n):
            col = sorted(self.table[i][j] for i in range(n))
            if col != list(range(n)):
                raise ValueError(f"column {j} is not a permutation of 0..{n - 1}")
        identity = next(
            (e for e in range(n)
             if all(self.table[e][x] == x == self.table[x][e] for x in range(n))),
            None)
        if identity is None:
            raise ValueError("table has no identity element")
        if identity != 0:
            raise ValueError("identity must be at index 0")
        self.identity = identity
        self.inverse = [0] * n
        for x in range(n):
            self.inverse[x] = next(y for y in range(n) if self.table[x][y] == 0)
        self.labels = list(labels) if labels is not None else [str(i) for i in range(n)]
        if len(self.labels) != n:
            raise ValueError("label count does not match group order")

    # -- basic arithmetic -------------------------------------------------

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def inv(self, x: int) -> int:
        return self.inverse[x]

    def conjugate(self, g: int, x: int) -> int:
        """g x g^-1."""
        return self.mul(self.mul(g, x), self.inverse[g])

    def element_order(self, x: int) -> int:
        order, acc = 1, x
        while acc != 0:
            acc = self.mul(acc, x)
            order += 1
        return order

    def elements(self):
        return range(self.order)

    # -- structural queries ----------------------------------------------

    def centralizer(self, x: int) -> "ElementSet":
        return ElementSet(self, [y for y in range(self.order)
                                 if self.table[x][y] == self.table[y][x]])

    def center(self) -> "ElementSet":
        return ElementSet(self, self._center_indices)

    @cached_property
    def _center_indices(self):
        return tuple(
            x for x in range(self.order)
            if all(self.table[x][y] == self.table[y][x] for y in range(self.order)))

    def conjugacy_class(self, x: int) -> "ElementSet":
        return ElementSet(self, {self.conjugate(g, x) for g in range(self.order)})

    def is_abelian(self) -> bool:
        return len(self._center_indices) == self.order

    def commute(self, x: int, y: int) -> bool:
        return self.table[x][y] == self.table[y][x]

    def is_subset_abelian(self, indices) -> bool:
        idx = list(indices)
        return all(self.commute(x, y) for i, x in enumerate(idx) for y in idx[i + 1:])

    def is_ac_group(self) -> bool:
        """True iff every centralizer of a non-central element is abelian."""
        center = set(self._center_indices)
        return all(self.is_subset_abelian(self.centralizer(x))
                   for x in range(self.order) if x not in center)

    def centralizer_family(self) -> "CentralizerFamily":
        """Deduplicated sets C(u) \\ Z over all non-central u."""
        if self.is_abelian():
            raise ValueError("centralizer family requires a non-abelian group")
        center = set(self._center_indices)
        seen = set()
        members = []
        for u in range(self.order):
            if u in center:
                continue
            stripped = frozenset(self.centralizer(u)) - center
            if stripped not in seen:
                seen.add(stripped)
                members.append(ElementSet(self, stripped))
        members.sort(key=lambda s: s.indices)
        return CentralizerFamily(members)

    # -- subgroup machinery ----------------------------------------------

    def subgroup_closure(self, seed) -> frozenset:
        """The subgroup generated by the given element indices."""
        elems = {0}
        frontier = [0]
        gens = list(seed)
        while frontier:
            nxt = []
            for g in frontier:
                for s in gens:
                    h = self.table[g][s]
                    if h not in elems:
                        elems.add(h)
                        nxt.append(h)
            frontier = nxt
        return frozenset(elems)

    def abelian_subgroups(self):
        """All abelian subgroups, by iterative centralizing extension.

        Seeded with the cyclic subgroups; each abelian subgroup H is extended
        by elements of C(H) \\ H and re-closed.  Elementary abelian subgroups
        needing 3+ generators are reached this way.
        """
        cent = [frozenset(self.centralizer(x)) for x in range(self.order)]
        found = set()
        work = []
        for x in range(self.order):
            h = self.subgroup_closure([x])
            if h not in found:
                found.add(h)
                work.append(h)
        while work:
            h = work.pop()
            csub = frozenset.intersection(*(cent[x] for x in h))
            for z in csub - h:
                ext = self.subgroup_closure(h | {z})
                if ext not in found:
                    found.add(ext)
                    work.append(ext)
        return found

    def abelian_subgroup_orders(self) -> set:
        return {len(h) for h in self.abelian_subgroups()}

    def exists_abelian_subgroup_of_order(self, k: int) -> bool:
        return k in self.abelian_subgroup_orders()

    def max_abelian_subgroup_order(self) -> int:
        return max(self.abelian_subgroup_orders())

    # -- quotients --------------------------------------------------------

    def quotient(self, normal) -> "FiniteGroup":
        """Quotient by a normal subgroup given as an element index set."""
        nset = frozenset(normal)
        if 0 not in nset:
            raise ValueError("normal subgroup must contain the identity")
        for g in range(self.order):
            for x in nset:
                if self.conjugate(g, x) not in nset:
                    raise ValueError("subgroup is not normal")
        coset_of = {}
        reps = []
        for x in range(self.order):
            if x in coset_of:
                continue
            members = sorted(self.table[x][h] for h in nset)
            rep = members[0]
            for m in members:
                coset_of[m] = rep
            reps.append(rep)
        # identity coset first, rest in representative order
        reps.sort()
        assert reps[0] == coset_of[0]
        rep_index = {r: i for i, r in enumerate(reps)}
        table = [[rep_index[coset_of[self.table[a][b]]] for b in reps] for a in reps]
        labels = [f"{self.labels[r]}N" for r in reps]
        return FiniteGroup(table, labels, name=f"{self.name}/N" if self.name else None)

    def quotient_by_center(self) -> "FiniteGroup":
        return self.quotient(self._center_indices)

    def quotient_exponent(self) -> int:
        """Maximum element order in G/Z(G)."""
        if self.is_abelian():
            raise ValueError("quotient exponent requires a non-abelian group")
        q = self.quotient_by_center()
        return max(q.element_order(x) for x in range(q.order))

    def __repr__(self):
        name = self.name or "FiniteGroup"
        return f"<{name} of order {self.order}>"


@dataclass(frozen=True)
class ElementSet:
    """A sorted set of element indices of a parent group."""

    group: FiniteGroup
    indices: tuple

    def __init__(self, group, indices):
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "indices", tuple(sorted(set(indices))))

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __contains__(self, x):
        return x in set(self.indices)

    def labels(self):
        return [self.group.labels[i] for i in self.indices]


@dataclass(frozen=True)
class CentralizerFamily:
    """The deduplicated collection of centralizers with the center removed."""

    members: tuple

    def __init__(self, members):
        object.__setattr__(self, "members", tuple(members))

    def sizes(self):
        return sorted(len(m) for m in self.members)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


# -- constructions ---------------------------------------------------------

def _perm_compose(p, q):
    """(p o q)(i) = p[q[i]]."""
    return tuple(p[i] for i in q)


def perm_cycle_label(perm) -> str:
    """Disjoint-cycle notation with 1-based points; identity renders as ()."""
    n = len(perm)
    seen = [False] * n
    parts = []
    for start in range(n):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cycle = [start]
        seen[start] = True
        nxt = perm[start]
        while nxt != start:
            cycle.append(nxt)
            seen[nxt] = True
            nxt = perm[nxt]
        parts.append("(" + " ".join(str(i + 1) for i in cycle) + ")")
    return "".join(parts) or "()"


def group_from_permutations(generators, cap=DEFAULT_CLOSURE_CAP, name=None) -> FiniteGroup:
    """The group generated by permutations on {0..m-1} under composition."""
    gens = [tuple(g) for g in generators]
    m = len(gens[0]) if gens else 1
    for g in gens:
        if sorted(g) != list(range(m)):
            raise ValueError(f"generator {g} is not a bijection on 0..{m - 1}")
    identity = tuple(range(m))
    elements, index = _bfs_closure(identity, gens, _perm_compose, cap)
    table = [[index[_perm_compose(a, b)] for b in elements] for a in elements]
    labels = [perm_cycle_label(p) for p in elements]
    return FiniteGroup(table, labels, name=name)


def group_from_matrices(generators, context: FieldContext,
                        cap=DEFAULT_CLOSURE_CAP, name=None) -> FiniteGroup:
    """The matrix group generated by invertible 2x2 matrices over `context`."""
    gens = []
    for g in generators:
        if not isinstance(g, Mat2):
            g = Mat2.of(context, *[x for row in g for x in row])
        if not g.det():
            raise ValueError(f"generator {g} is singular")
        gens.append(g)
    identity = Mat2.identity(context)
    keyed = {identity.key(): identity}
    keyed.update({g.key(): g for g in gens})

    def mul(a_key, b_key):
        prod = keyed[a_key] * keyed[b_key]
        keyed.setdefault(prod.key(), prod)
        return prod.key()

    elements, index = _bfs_closure(identity.key(), [g.key() for g in gens],
                                   mul, cap)
    table = [[index[mul(a, b)] for b in elements] for a in elements]
    labels = [repr(keyed[k]) for k in elements]
    return FiniteGroup(table, labels, name=name)


def group_from_operation(elements, op, identity, label=str,
                         cap=DEFAULT_CLOSURE_CAP, name=None) -> FiniteGroup:
    """A group from an explicit element model with multiplication `op`."""
    elements = list(elements)
    if len(elements) > cap:
        raise ClosureCapError(f"model has more than {cap} elements")
    if elements[0] != identity:
        elements = [identity] + [e for e in elements if e != identity]
    index = {e: i for i, e in enumerate(elements)}
    table = [[index[op(a, b)] for b in elements] for a in elements]
    return FiniteGroup(table, [label(e) for e in elements], name=name)


def direct_product(a: FiniteGroup, b: FiniteGroup,
                   cap=DEFAULT_CLOSURE_CAP, name=None) -> FiniteGroup:
    """Componentwise product; element (i, j) gets index i * |B| + j."""
    if a.order * b.order > cap:
        raise ClosureCapError(f"product order {a.order * b.order} exceeds cap {cap}")
    nb = b.order
    table = [[a.table[i][k] * nb + b.table[j][l]
              for k in range(a.order) for l in range(nb)]
             for i in range(a.order) for j in range(nb)]
    labels = [f"({a.labels[i]},{b.labels[j]})"
              for i in range(a.order) for j in range(nb)]
    if name is None and a.name and b.name:
        name = f"{a.name} x {b.name}"
    return FiniteGroup(table, labels, name=name)


# -- text format -----------------------------------------------------------

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, m: int):
    """Parse disjoint-cycle notation like ``(1 2)(3 4)`` into a permutation."""
    normalized = text.replace(",", " ")
    if _CYCLE_RE.sub("", normalized).strip():
        raise ValueError(f"malformed cycle notation: {text!r}")
    perm = list(range(m))
    for body in _CYCLE_RE.findall(normalized):
        try:
            points = [int(tok) - 1 for tok in body.split()]
        except ValueError:
            raise ValueError(f"non-integer point in cycle ({body})") from None
        if not points:
            continue
        if any(not 0 <= pt < m for pt in points) or len(set(points)) != len(points):
            raise ValueError(f"bad cycle ({body}) for degree {m}")
        for i, pt in enumerate(points):
            perm[pt] = points[(i + 1) % len(points)]
    return tuple(perm)


def group_from_file_text(text: str, cap=DEFAULT_CLOSURE_CAP) -> FiniteGroup:
    """Parse the plain-text group format.

    First line is ``order n``; then either ``table`` followed by n rows of n
    indices, or ``perm-generators m`` followed by one generator per line in
    disjoint-cycle notation.
    """
    lines = text.splitlines()
    rows = [(i + 1, ln.strip()) for i, ln in enumerate(lines)
            if ln.strip() and not ln.strip().startswith("#")]
    if not rows:
        raise ValueError("line 1: empty group file")

    def fail(lineno, msg):
        raise ValueError(f"line {lineno}: {msg}")

    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] != "order" or not parts[1].isdigit():
        fail(lineno, f"expected 'order n', got {header!r}")
    n = int(parts[1])
    if len(rows) < 2:
        fail(lineno, "missing 'table' or 'perm-generators' section")
    lineno, mode = rows[1]
    mparts = mode.split()
    if mparts[0] == "table":
        body = rows[2:]
        if len(body) != n:
            fail(lineno, f"expected {n} table rows, got {len(body)}")
        table = []
        for rowno, line in body:
            try:
                row = [int(tok) for tok in line.split()]
            except ValueError:
                fail(rowno, f"non-integer entry in {line!r}")
            if len(row) != n:
                fail(rowno, f"expected {n} entries, got {len(row)}")
            table.append(row)
        try:
            return FiniteGroup(table)
        except ValueError as exc:
            fail(lineno, str(exc))
    elif mparts[0] == "perm-generators":
        if len(mparts) != 2 or not mparts[1].isdigit():
            fail(lineno, f"expected 'perm-generators m', got {mode!r}")
        m = int(mparts[1])
        gens = []
        for rowno, line in rows[2:]:
            try:
                gens.append(parse_cycles(line, m))
            except ValueError as exc:
                fail(rowno, str(exc))
        group = group_from_permutations(gens, cap=cap)
        if group.order != n:
            fail(lineno, f"generators produce order {group.order}, header says {n}")
        return group
    else:
        fail(lineno, f"unknown section {mparts[0]!r}")
