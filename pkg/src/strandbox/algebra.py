"""Quiver presentations with monomial relations.

The central family is the gentle algebra on an A_n spine with loops at the
two end vertices and square-zero relations on the loops, parameterized by n
and a per-edge orientation of the spine.  Generic presentations built by
hand are accepted by the string/word machinery as long as
``validate_string_algebra`` reports no violations.

Presentations are immutable; everything here is pure and safe to share.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .errors import DomainError, InternalCheckError


@dataclass(frozen=True)
class Arrow:
    name: str
    source: int
    target: int

    @property
    def is_loop(self):
        return self.source == self.target

    def __repr__(self):
        return f"{self.name}({self.source}->{self.target})"


def arrow_key(a: Arrow):
    """Total order on arrows: loops first, then by source, then target."""
    return (0 if a.is_loop else 1, a.source, a.target)


@dataclass(frozen=True)
class Presentation:
    """A quiver with monomial relations.

    ``relations`` are composable paths stored in word order: the relation
    c_1 c_2 means "first c_2 then c_1" and requires s(c_1) = t(c_2).
    ``orientation`` is the per-spine-edge direction tuple ('R' = i->i+1)
    for members of the C-tilde family, None for generic presentations.
    """

    n: int
    arrows: tuple[Arrow, ...]
    relations: tuple[tuple[Arrow, ...], ...]
    orientation: tuple[str, ...] | None = None

    @property
    def vertices(self):
        return range(1, self.n + 1)

    def __repr__(self):
        o = "".join(self.orientation) if self.orientation else "generic"
        return f"Presentation(n={self.n}, {o})"


def spine_arrow_name(j, i):
    """Name of the spine arrow i -> j (target written first, as a_ji)."""
    if max(i, j) <= 9:
        return f"a{j}{i}"
    return f"a{j}_{i}"


def normalize_orientation(orientation, n):
    if isinstance(orientation, str):
        orientation = tuple(orientation)
    else:
        orientation = tuple(orientation)
    if len(orientation) != n - 1 or any(d not in ("R", "L") for d in orientation):
        raise DomainError(f"orientation must be {n - 1} letters from {{R,L}}")
    return orientation


def build_type_C_algebra(n, orientation):
    """The C-tilde presentation: A_n spine, loops e1/en, relations e1^2, en^2."""
    if n < 3:
        raise DomainError("the C-tilde Cartan pattern requires n >= 3")
    orientation = normalize_orientation(orientation, n)
    e1 = Arrow("e1", 1, 1)
    en = Arrow(f"e{n}", n, n)
    arrows = [e1, en]
    for k, d in enumerate(orientation, start=1):
        if d == "R":
            arrows.append(Arrow(spine_arrow_name(k + 1, k), k, k + 1))
        else:
            arrows.append(Arrow(spine_arrow_name(k, k + 1), k + 1, k))
    arrows.sort(key=arrow_key)
    return Presentation(
        n=n,
        arrows=tuple(arrows),
        relations=((e1, e1), (en, en)),
        orientation=orientation,
    )


# ---------------------------------------------------------------------------
# cached structural accessors
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def arrows_by_source(p: Presentation):
    out = {u: [] for u in p.vertices}
    for a in p.arrows:
        out[a.source].append(a)
    return {u: tuple(sorted(v, key=arrow_key)) for u, v in out.items()}


@lru_cache(maxsize=None)
def arrows_by_target(p: Presentation):
    out = {u: [] for u in p.vertices}
    for a in p.arrows:
        out[a.target].append(a)
    return {u: tuple(sorted(v, key=arrow_key)) for u, v in out.items()}


@lru_cache(maxsize=None)
def arrow_named(p: Presentation):
    return {a.name: a for a in p.arrows}


@lru_cache(maxsize=None)
def relation_lengths(p: Presentation):
    return tuple(sorted({len(r) for r in p.relations}))


def path_in_ideal(p: Presentation, path):
    """True iff the composable path (word order) has a relation as a factor."""
    rels = set(p.relations)
    m = len(path)
    for length in relation_lengths(p):
        if length > m:
            continue
        for i in range(m - length + 1):
            if tuple(path[i:i + length]) in rels:
                return True
    return False


@lru_cache(maxsize=None)
def spine_arrows(p: Presentation):
    return tuple(a for a in p.arrows if not a.is_loop)


@lru_cache(maxsize=None)
def loop_arrows(p: Presentation):
    return tuple(a for a in p.arrows if a.is_loop)


def is_ctilde(p: Presentation):
    """Membership in the C-tilde family (loops exactly at 1 and n, A_n spine)."""
    if p.orientation is None:
        return False
    loops = {a.source for a in loop_arrows(p)}
    if loops != {1, p.n}:
        return False
    edges = {frozenset((a.source, a.target)) for a in spine_arrows(p)}
    return edges == {frozenset((i, i + 1)) for i in range(1, p.n)}


def omega_pairs(p: Presentation):
    """The orientation as a set of pairs (j, i) per spine arrow i -> j."""
    return {(a.target, a.source) for a in spine_arrows(p)}


# ---------------------------------------------------------------------------
# string-algebra validation
# ---------------------------------------------------------------------------

def validate_string_algebra(p: Presentation):
    """Check the three string-algebra conditions; returns a list of violations.

    An empty list means the presentation is a string algebra.  Violations
    carry the witnessing vertex or arrow.
    """
    violations = []
    by_src = arrows_by_source(p)
    by_tgt = arrows_by_target(p)
    for u in p.vertices:
        if len(by_src[u]) > 2:
            violations.append(f"condition (1): vertex {u} has {len(by_src[u])} outgoing arrows")
        if len(by_tgt[u]) > 2:
            violations.append(f"condition (1): vertex {u} has {len(by_tgt[u])} incoming arrows")
    for a in p.arrows:
        befores = [b for b in by_src[a.target] if not path_in_ideal(p, (b, a))]
        if len(befores) > 1:
            names = ",".join(b.name for b in befores)
            violations.append(f"condition (2): arrow {a.name} has continuations {names} outside I")
        afters = [g for g in by_tgt[a.source] if not path_in_ideal(p, (a, g))]
        if len(afters) > 1:
            names = ",".join(g.name for g in afters)
            violations.append(f"condition (2): arrow {a.name} has pre-compositions {names} outside I")
    for rel in p.relations:
        for c, d in zip(rel, rel[1:]):
            if c.source != d.target:
                violations.append(f"condition (3): relation {'.'.join(x.name for x in rel)} is not a composable path")
                break
    return violations


def admissible_vertices(p: Presentation):
    """Vertices that are a sink or a source of the loop-free quiver Q^0."""
    result = set()
    for u in p.vertices:
        incident_out = [a for a in spine_arrows(p) if a.source == u]
        incident_in = [a for a in spine_arrows(p) if a.target == u]
        if not incident_out and incident_in:
            result.add((u, "sink"))
        elif not incident_in and incident_out:
            result.add((u, "source"))
    return result


# ---------------------------------------------------------------------------
# side functions for the Butler-Ringel calculus
# ---------------------------------------------------------------------------
#
# Each arrow is assigned a side (+1/-1) at its source (sigma) and at its
# target (epsilon).  Two arrows sharing a source get opposite sigma; two
# sharing a target opposite epsilon; and sigma(b) = -epsilon(d) whenever the
# length-2 path b.d avoids the ideal.  The constraint graph is bipartite for
# any string algebra, so a 2-coloring always exists.  Only trivial strings
# consult these sides (nontrivial words have unique extensions per side);
# the seeds below make the hook rays at the loop vertices continue along the
# spine, which is the convention the tube/local-freeness analysis expects.

@lru_cache(maxsize=None)
def side_functions(p: Presentation):
    eps = {}
    sig = {}
    by_src = arrows_by_source(p)
    by_tgt = arrows_by_target(p)

    def propagate(stack):
        while stack:
            kind, arrow = stack.pop()
            table = eps if kind == "e" else sig
            val = table[arrow]
            u = arrow.target if kind == "e" else arrow.source
            partners = by_tgt[u] if kind == "e" else by_src[u]
            for b in partners:
                if b != arrow:
                    if table.get(b, -val) != -val:
                        raise InternalCheckError("inconsistent side assignment")
                    if b not in table:
                        table[b] = -val
                        stack.append((kind, b))
            # through-constraints at u couple sigma and epsilon
            if kind == "e":
                for b in by_src[u]:
                    if not path_in_ideal(p, (b, arrow)):
                        if sig.get(b, -val) != -val:
                            raise InternalCheckError("inconsistent side assignment")
                        if b not in sig:
                            sig[b] = -val
                            stack.append(("s", b))
            else:
                for d in by_tgt[u]:
                    if not path_in_ideal(p, (arrow, d)):
                        if eps.get(d, -val) != -val:
                            raise InternalCheckError("inconsistent side assignment")
                        if d not in eps:
                            eps[d] = -val
                            stack.append(("e", d))

    for u in p.vertices:
        ins = by_tgt[u]
        if len(ins) == 2 and ins[1] not in eps:
            eps[ins[1]] = 1
            propagate([("e", ins[1])])
    for u in p.vertices:
        outs = by_src[u]
        if len(outs) == 2 and outs[0] not in sig:
            sig[outs[0]] = 1
            propagate([("s", outs[0])])
    for a in sorted(p.arrows, key=arrow_key):
        if a not in eps:
            eps[a] = 1
            propagate([("e", a)])
        if a not in sig:
            sig[a] = 1
            propagate([("s", a)])
    return eps, sig


def in_side(p: Presentation):
    """epsilon: side of each arrow at its target."""
    return side_functions(p)[0]


def out_side(p: Presentation):
    """sigma: side of each arrow at its source."""
    return side_functions(p)[1]


# ---------------------------------------------------------------------------
# JSON serialization
# ---------------------------------------------------------------------------

def presentation_to_json(p: Presentation):
    doc = {
        "n": p.n,
        "orientation": list(p.orientation) if p.orientation else None,
        "arrows": [{"name": a.name, "source": a.source, "target": a.target} for a in p.arrows],
        "relations": [[a.name for a in rel] for rel in p.relations],
    }
    return json.dumps(doc, sort_keys=False)


def presentation_from_json(text):
    doc = json.loads(text)
    arrows = tuple(Arrow(a["name"], a["source"], a["target"]) for a in doc["arrows"])
    named = {a.name: a for a in arrows}
    relations = tuple(tuple(named[nm] for nm in rel) for rel in doc["relations"])
    orientation = tuple(doc["orientation"]) if doc.get("orientation") else None
    return Presentation(n=doc["n"], arrows=arrows, relations=relations, orientation=orientation)
