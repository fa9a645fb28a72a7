"""Map structure from a (G, x, y) triple, and all map invariants.

Convention (the single orientation convention of the whole package):
arcs are the elements of G; the vertex rotation is R: g -> gy; the edge
involution is L: g -> g(xy); vertices, edges and faces are the left
cosets of <y>, <xy> and <x>; automorphisms act as left translations.
The orientation-preserving automorphism group is then the centralizer
of <R, L> in the symmetric group on arcs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .construct import ParamSet, build_G, param_sets
from .grp import (GroupModel, centralizer_order, closure, commutator_subgroup,
                  element_order, hom_extend, power, rmul_table)


@dataclass
class AlgebraicMap:
    """An orientably-regular map presented algebraically."""

    group: GroupModel
    x: int
    y: int
    z: int                      # xy, the edge involution generator
    R: list[int]
    L: list[int]
    vertex_of: list[int]
    n_vertices: int
    m: int                      # face length = ord(x)
    n: int                      # valency = ord(y)

    @property
    def n_arcs(self) -> int:
        return self.group.n

    @property
    def n_edges(self) -> int:
        return self.group.n // 2

    @property
    def n_faces(self) -> int:
        return self.group.n // self.m


def build_map(G: GroupModel, x: int | None = None, y: int | None = None,
              check_generates: bool = True) -> AlgebraicMap:
    """The map with arc set G determined by the generator pair (x, y)."""
    x = G.gen_x if x is None else x
    y = G.gen_y if y is None else y
    z = G.mul(x, y)
    if z == G.identity:
        raise ValueError("xy is the identity; no edge involution")
    if G.mul(z, z) != G.identity:
        raise ValueError("xy is not an involution")
    if check_generates and len(closure(G, (x, y))) != G.n:
        raise ValueError("generators do not generate the group")
    n = G.n
    R = rmul_table(G, y)
    L = rmul_table(G, z)
    vertex_of = [-1] * n
    vid = 0
    for g in range(n):
        if vertex_of[g] < 0:
            h = g
            while vertex_of[h] < 0:
                vertex_of[h] = vid
                h = R[h]
            vid += 1
    m = element_order(G, x)
    nval = element_order(G, y)
    if n % m or n % nval or n // nval != vid:
        raise RuntimeError("coset counts are inconsistent")
    return AlgebraicMap(group=G, x=x, y=y, z=z, R=R, L=L,
                        vertex_of=vertex_of, n_vertices=vid, m=m, n=nval)


@dataclass(frozen=True)
class MultigraphVerdict:
    ok: bool
    r: int | None = None
    t: int | None = None
    reason: str = ""


def underlying_multigraph(M: AlgebraicMap) -> MultigraphVerdict:
    """Check the underlying multigraph is a complete K_r^(t); return
    (r, t) or a counterexample verdict."""
    V = M.n_vertices
    counts: dict[tuple[int, int], int] = {}
    for g in range(M.n_arcs):
        h = M.L[g]
        if g < h:
            u, w = M.vertex_of[g], M.vertex_of[h]
            if u == w:
                return MultigraphVerdict(False, reason=f"loop at vertex {u} (dart {g})")
            key = (u, w) if u < w else (w, u)
            counts[key] = counts.get(key, 0) + 1
    if len(counts) != V * (V - 1) // 2:
        return MultigraphVerdict(False, reason="not all vertex pairs adjacent")
    mults = set(counts.values())
    if len(mults) != 1:
        return MultigraphVerdict(False, reason=f"unequal multiplicities {sorted(mults)}")
    return MultigraphVerdict(True, r=V, t=mults.pop())


def type_of(M: AlgebraicMap) -> tuple[int, int]:
    return M.m, M.n


def genus_of(M: AlgebraicMap) -> int:
    chi = M.n_vertices - M.n_edges + M.n_faces
    if chi % 2:
        raise RuntimeError("odd Euler characteristic")
    g = (2 - chi) // 2
    if g < 0:
        raise RuntimeError(f"negative genus {g}")
    return g


def is_orientably_regular(M: AlgebraicMap) -> bool:
    """Independent regularity check: the centralizer of the monodromy
    group <R, L> must act regularly on the arcs."""
    return centralizer_order([M.R, M.L]) == M.n_arcs


def maps_isomorphic(M1: AlgebraicMap, M2: AlgebraicMap) -> bool:
    """Map isomorphism: the assignment (x1, y1) -> (x2, y2) extends to a
    group isomorphism."""
    if M1.n_arcs != M2.n_arcs or (M1.m, M1.n) != (M2.m, M2.n):
        return False
    return hom_extend(M1.group, M2.group, M2.x, M2.y,
                      src_x=M1.x, src_y=M1.y) is not None


def chirality_certificate(M: AlgebraicMap) -> list[int] | None:
    """The mirror isomorphism x -> x^-1, y -> y^-1, if it exists."""
    G = M.group
    return hom_extend(G, G, G.inv(M.x), G.inv(M.y), src_x=M.x, src_y=M.y)


def is_chiral(M: AlgebraicMap) -> bool:
    return chirality_certificate(M) is None


def duality_certificate(M: AlgebraicMap) -> list[int] | None:
    """The generator-swapping automorphism x <-> y, if it exists."""
    if M.m != M.n:
        return None
    G = M.group
    return hom_extend(G, G, M.y, M.x, src_x=M.x, src_y=M.y)


def is_self_dual(M: AlgebraicMap) -> bool:
    return duality_certificate(M) is not None


def wilson_power(M: AlgebraicMap, j: int) -> AlgebraicMap:
    """The j-th rotational power: y is replaced by y^j, z = xy is kept.

    Requires gcd(j, ord(y)) = 1; the underlying multigraph is
    re-verified to be unchanged.
    """
    if math.gcd(j, M.n) != 1:
        raise ValueError(f"j={j} is not coprime to the valency {M.n}")
    G = M.group
    yj = power(G, M.y, j % M.n)
    xj = G.mul(M.x, power(G, M.y, (1 - j) % M.n))
    Mj = build_map(G, xj, yj)
    before = underlying_multigraph(M)
    after = underlying_multigraph(Mj)
    if (before.r, before.t) != (after.r, after.t):
        raise RuntimeError("rotational power changed the underlying graph")
    return Mj


def wilson_orbits(maps: list[AlgebraicMap]) -> list[int]:
    """Partition of a classified family under all rotational powers,
    closed up to map isomorphism.  Orbit ids follow list order."""
    k = len(maps)
    orbit = [-1] * k
    if k == 0:
        return orbit
    ttabs = [(rmul_table(M.group, M.x), rmul_table(M.group, M.y)) for M in maps]
    oid = 0
    for i in range(k):
        if orbit[i] >= 0:
            continue
        orbit[i] = oid
        M = maps[i]
        G = M.group
        nval = M.n
        for j in range(1, nval + 1):
            if math.gcd(j, nval) != 1:
                continue
            yj = power(G, M.y, j % nval)
            xj = G.mul(M.x, power(G, M.y, (1 - j) % nval))
            mj = element_order(G, xj)
            t1x = rmul_table(G, xj)
            t1y = rmul_table(G, yj)
            found = -1
            for r in range(k):
                if maps[r].m != mj or maps[r].n != nval:
                    continue
                phi = hom_extend(G, maps[r].group, maps[r].x, maps[r].y,
                                 tables=(t1x, t1y, ttabs[r][0], ttabs[r][1]))
                if phi is not None:
                    found = r
                    break
            if found < 0:
                raise RuntimeError(
                    f"rotational power j={j} left the classified family")
            if orbit[found] < 0:
                orbit[found] = oid
            elif orbit[found] != oid:
                raise RuntimeError("rotational-power orbits are inconsistent")
        oid += 1
    return orbit


@dataclass(frozen=True)
class CayleyVerdict:
    ok: bool
    detail: str


def balanced_cayley_check(M: AlgebraicMap) -> CayleyVerdict:
    """Balanced-Cayley verdict: some normal subgroup of automorphisms
    (acting by left translation) acts regularly on the vertices.

    The derived subgroup is tried first; for 4 vertices the quaternion
    exception is certified by exhausting all order-4 subgroups, for 2
    vertices by exhausting the involutions.
    """
    G = M.group
    V = M.n_vertices

    def regular_on_vertices(S) -> bool:
        if len(S) != V:
            return False
        seen = set(M.vertex_of[h] for h in S)
        return len(seen) == V

    Gp = commutator_subgroup(G)
    if regular_on_vertices(Gp):
        return CayleyVerdict(True, f"G' (order {len(Gp)}) acts regularly on the {V} vertices")

    def is_normal(S: frozenset[int]) -> bool:
        for h in (G.gen_x, G.gen_y):
            hi = G.inv(h)
            if any(G.mul(G.mul(h, s), hi) not in S for s in S):
                return False
        return True

    if V in (2, 4):
        cands = [g for g in G.elements if g and power(G, g, V) == G.identity]
        subs: set[frozenset[int]] = set()
        for i, g in enumerate(cands):
            for h in cands[i:]:
                try:
                    S = closure(G, (g, h), bound=V + 1)
                except Exception:
                    continue
                if len(S) == V:
                    subs.add(S)
        regular = [S for S in subs if regular_on_vertices(S)]
        balanced = [S for S in regular if is_normal(S)]
        if balanced:
            return CayleyVerdict(True, f"normal order-{V} subgroup acts regularly")
        if regular:
            return CayleyVerdict(False,
                                 f"{len(regular)} regular order-{V} subgroup(s), none normal "
                                 f"({len(subs)} subgroups examined)")
        return CayleyVerdict(False,
                             f"no subgroup of order {V} acts regularly on the {V} vertices "
                             f"({len(subs)} subgroups examined)")
    return CayleyVerdict(False, "derived subgroup does not act regularly")


@dataclass
class RegularMapRecord:
    """One classified orientably-regular embedding of K_q^(t)."""

    ps: ParamSet
    m: int
    n: int
    genus: int
    vertices: int
    edges: int
    faces: int
    chiral: bool
    self_dual: bool
    balanced_cayley: bool
    wilson_orbit: int = -1
    map: AlgebraicMap = field(repr=False, default=None)

    def to_json(self) -> dict:
        ps = self.ps
        return {
            "q": ps.q,
            "t": ps.t,
            "poly": ps.mu.compact() if ps.mu else None,
            "variant": ps.variant,
            "ell": ps.ell,
            "a": ps.a,
            "b": ps.b,
            "c": ps.c,
            "e": list(ps.e),
            "f": ps.f,
            "m": self.m,
            "n": self.n,
            "genus": self.genus,
            "vertices": self.vertices,
            "edges": self.edges,
            "faces": self.faces,
            "chiral": self.chiral,
            "self_dual": self.self_dual,
            "balanced_cayley": self.balanced_cayley,
            "wilson_orbit": self.wilson_orbit,
        }


def classify(q: int, t: int) -> list[RegularMapRecord]:
    """All orientably-regular embeddings of K_q^(t), one record per
    admissible parameter set, with invariants computed, pairwise
    non-isomorphism verified, and the underlying multigraph verified.

    Returns [] when there are none (q not a prime power, or odd q with
    even t)."""
    sets = param_sets(q, t)
    records: list[RegularMapRecord] = []
    maps: list[AlgebraicMap] = []
    for ps in sets:
        G = build_G(ps)
        M = build_map(G)
        verdict = underlying_multigraph(M)
        if not verdict.ok or (verdict.r, verdict.t) != (q, t):
            raise RuntimeError(f"{ps.label()}: underlying graph check failed: "
                               f"{verdict}")
        records.append(RegularMapRecord(
            ps=ps,
            m=M.m,
            n=M.n,
            genus=genus_of(M),
            vertices=M.n_vertices,
            edges=M.n_edges,
            faces=M.n_faces,
            chiral=is_chiral(M),
            self_dual=is_self_dual(M),
            balanced_cayley=balanced_cayley_check(M).ok,
            map=M,
        ))
        maps.append(M)
    for i in range(len(maps)):
        for j in range(i + 1, len(maps)):
            if maps_isomorphic(maps[i], maps[j]):
                raise RuntimeError(
                    f"{sets[i].label()} and {sets[j].label()} are isomorphic")
    for rec, oid in zip(records, wilson_orbits(maps)):
        rec.wilson_orbit = oid
    return records


def to_rotation_system(M: AlgebraicMap):
    """Export as the census exchange representation."""
    from .oracle import RotationSystem

    verdict = underlying_multigraph(M)
    if not verdict.ok:
        raise ValueError(f"not a complete multigraph: {verdict.reason}")
    return RotationSystem(r=verdict.r, t=verdict.t,
                          vertex_of=tuple(M.vertex_of),
                          R=tuple(M.R), L=tuple(M.L))
