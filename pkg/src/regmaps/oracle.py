"""Independent brute-force census of orientably-regular embeddings of
small complete multigraphs via explicit rotation systems.

The census enumerates vertex rotations directly and filters by
regularity of the monodromy group; it uses none of the construction's
algebra, so it serves as a ground-truth oracle for the classification
counts.  Enumerated systems share a fixed dart labeling: edges of
K_r^(t) are the triples (u, w, copy) with u < w in lexicographic order,
edge e contributing darts 2e (at u) and 2e+1 (at w), so the edge
involution is dart XOR 1 and only the rotations vary.

Sound search reductions (each preserves at least one representative of
every isomorphism class; survivors are classified by dart conjugation):

  * the rotation at vertex 0 runs over canonical representatives under
    relabelings fixing vertex 0 (neighbour and parallel-copy renaming);
  * all closed faces must share one length from the set allowed by
    divisibility of the dart count and nonnegativity of the genus;
  * for t >= 2, every vertex rotation must match vertex 0's abstract
    neighbour pattern (vertex-transitivity is necessary for regularity).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import permutations


DEFAULT_FEASIBILITY: dict[int, int] = {2: 7, 3: 3, 4: 2, 5: 1}


class FeasibilityError(ValueError):
    """(r, t) outside the configured census feasibility table."""


class CensusLimitError(RuntimeError):
    """Node budget exhausted; carries the progress state."""

    def __init__(self, nodes: int, survivors: int):
        super().__init__(f"census node limit exceeded after {nodes} nodes "
                         f"({survivors} survivors so far)")
        self.nodes = nodes
        self.survivors = survivors


@dataclass(frozen=True)
class RotationSystem:
    """Darts 0..2E-1 with vertex assignment, rotation R and edge
    involution L (fixed-point-free, pairing darts into edges)."""

    r: int
    t: int
    vertex_of: tuple[int, ...]
    R: tuple[int, ...]
    L: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.R)
        if len(self.L) != n or len(self.vertex_of) != n:
            raise ValueError("dart arrays disagree in length")
        for d in range(n):
            if self.L[d] == d or self.L[self.L[d]] != d:
                raise ValueError("L is not a fixed-point-free involution")
            if self.vertex_of[self.R[d]] != self.vertex_of[d]:
                raise ValueError("R does not preserve vertices")

    @property
    def n_darts(self) -> int:
        return len(self.R)

    def to_text(self) -> str:
        """Canonical serialization: cycles sorted by vertex, lowest dart
        first in each cycle; edge pairs sorted."""
        lines = [f"{self.r} {self.t} {self.n_darts}"]
        by_vertex: dict[int, list[int]] = {}
        for d in range(self.n_darts):
            by_vertex.setdefault(self.vertex_of[d], []).append(d)
        for v in sorted(by_vertex):
            d0 = min(by_vertex[v])
            cyc = [d0]
            d = self.R[d0]
            while d != d0:
                cyc.append(d)
                d = self.R[d]
            lines.append(f"V {v}: " + " ".join(map(str, cyc)))
        pairs = sorted((d, self.L[d]) for d in range(self.n_darts)
                       if d < self.L[d])
        for d, dd in pairs:
            lines.append(f"E: {d} {dd}")
        return "\n".join(lines) + "\n"

    @staticmethod
    def from_text(text: str) -> "RotationSystem":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
        r, t, n = map(int, lines[0].split())
        vertex_of = [-1] * n
        R = [-1] * n
        L = [-1] * n
        for ln in lines[1:]:
            if ln.startswith("V"):
                head, _, rest = ln.partition(":")
                v = int(head[1:])
                cyc = [int(tok) for tok in rest.split()]
                for i, d in enumerate(cyc):
                    vertex_of[d] = v
                    R[d] = cyc[(i + 1) % len(cyc)]
            elif ln.startswith("E:"):
                d, dd = map(int, ln[2:].split())
                L[d] = dd
                L[dd] = d
        return RotationSystem(r=r, t=t, vertex_of=tuple(vertex_of),
                              R=tuple(R), L=tuple(L))


def _canonical_key(R, L) -> tuple:
    """Canonical relabeling key of (R, L), minimized over base darts.

    Two systems are dart-conjugate iff their keys coincide (any
    conjugating bijection is determined by the image of a base dart on
    a transitive monodromy group)."""
    n = len(R)
    best = None
    for base in range(n):
        new = [-1] * n
        order = [base]
        new[base] = 0
        cnt = 1
        i = 0
        while i < len(order):
            d = order[i]
            i += 1
            for nd in (R[d], L[d]):
                if new[nd] < 0:
                    new[nd] = cnt
                    cnt += 1
                    order.append(nd)
        if cnt < n:
            raise ValueError("monodromy group is not transitive")
        newR = [0] * n
        newL = [0] * n
        for d in range(n):
            newR[new[d]] = new[R[d]]
            newL[new[d]] = new[L[d]]
        key = (tuple(newR), tuple(newL))
        if best is None or key < best:
            best = key
    return best


def rotation_systems_isomorphic(A: RotationSystem, B: RotationSystem) -> bool:
    """Dart-conjugation test by base-dart image propagation."""
    n = A.n_darts
    if B.n_darts != n:
        return False
    for cand in range(n):
        sigma = [-1] * n
        sigma[0] = cand
        stack = [0]
        ok = True
        while stack and ok:
            d = stack.pop()
            sd = sigma[d]
            for nd, snd in ((A.R[d], B.R[sd]), (A.L[d], B.L[sd])):
                if sigma[nd] < 0:
                    sigma[nd] = snd
                    stack.append(nd)
                elif sigma[nd] != snd:
                    ok = False
                    break
        if ok and len(set(sigma)) == n and -1 not in sigma:
            return True
    return False


# ---------------------------------------------------------------------------
# Census machinery
# ---------------------------------------------------------------------------

def _layout(r: int, t: int):
    """Fixed dart labeling of K_r^(t): vertex_of, darts_at."""
    vertex_of = []
    for u in range(r):
        for w in range(u + 1, r):
            for _ in range(t):
                vertex_of.extend((u, w))
    darts_at = [[] for _ in range(r)]
    for d, v in enumerate(vertex_of):
        darts_at[v].append(d)
    return vertex_of, darts_at


def allowed_face_lengths(r: int, t: int) -> list[int]:
    """Face lengths compatible with an all-equal-face embedding of
    K_r^(t): length divides the dart count, the face count has the
    parity of E - V, and the genus is nonnegative."""
    V = r
    E = r * (r - 1) // 2 * t
    darts = 2 * E
    out = []
    for m in range(2, darts + 1):
        if darts % m:
            continue
        F = darts // m
        if F > E - V + 2 or (F - (E - V)) % 2:
            continue
        out.append(m)
    return out


def _pattern_key(seq_neighbors: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical abstract pattern of a cyclic neighbour sequence:
    first-occurrence renaming, minimized over rotations."""
    L = len(seq_neighbors)
    best = None
    for s in range(L):
        names: dict[int, int] = {}
        out = []
        for i in range(L):
            v = seq_neighbors[(s + i) % L]
            if v not in names:
                names[v] = len(names)
            out.append(names[v])
        key = tuple(out)
        if best is None or key < best:
            best = key
    return best


def _vertex_candidates(v: int, darts_at_v: list[int], nbr_of: list[int],
                       pattern: tuple[int, ...] | None):
    """All cyclic rotations of the darts at v (anchored at the least
    dart), as successor tuples aligned with darts_at_v; optionally
    filtered by abstract neighbour pattern."""
    d0 = darts_at_v[0]
    rest = darts_at_v[1:]
    pos = {d: i for i, d in enumerate(darts_at_v)}
    out = []
    for perm in permutations(rest):
        cyc = (d0,) + perm
        if pattern is not None:
            if _pattern_key(tuple(nbr_of[d] for d in cyc)) != pattern:
                continue
        succ = [0] * len(darts_at_v)
        for i, d in enumerate(cyc):
            succ[pos[d]] = cyc[(i + 1) % len(cyc)]
        out.append(tuple(succ))
    return out


def _v0_representatives(darts_at_0: list[int], nbr_of: list[int]):
    """Canonical vertex-0 rotations: one concrete rotation per abstract
    pattern class (= orbit under relabelings fixing vertex 0)."""
    d0 = darts_at_0[0]
    seen = set()
    reps = []
    pos = {d: i for i, d in enumerate(darts_at_0)}
    for perm in permutations(darts_at_0[1:]):
        cyc = (d0,) + perm
        key = _pattern_key(tuple(nbr_of[d] for d in cyc))
        if key in seen:
            continue
        seen.add(key)
        succ = [0] * len(darts_at_0)
        for i, d in enumerate(cyc):
            succ[pos[d]] = cyc[(i + 1) % len(cyc)]
        reps.append((key, tuple(succ)))
    return reps


def _is_regular(rot: list[int], n: int) -> bool:
    """Closure of the monodromy group <R, L> with early abort: the map
    is orientably-regular iff |<R, L>| equals the dart count (the
    action is transitive for a connected graph).  A single equivariant
    base-image propagation is used as a cheap pre-filter."""
    # pre-filter: sigma(0) = rot[0] must extend to an equivariant map
    sigma = [-1] * n
    sigma[0] = rot[0]
    stack = [0]
    while stack:
        d = stack.pop()
        sd = sigma[d]
        for nd, snd in ((rot[d], rot[sd]), (d ^ 1, sd ^ 1)):
            if sigma[nd] < 0:
                sigma[nd] = snd
                stack.append(nd)
            elif sigma[nd] != snd:
                return False
    # transitivity
    seen = bytearray(n)
    seen[0] = 1
    stack = [0]
    cnt = 1
    while stack:
        d = stack.pop()
        for nd in (rot[d], d ^ 1):
            if not seen[nd]:
                seen[nd] = 1
                cnt += 1
                stack.append(nd)
    if cnt != n:
        return False
    # full closure with early abort
    ident = tuple(range(n))
    Rp = tuple(rot)
    Lp = tuple(d ^ 1 for d in range(n))
    elems = {ident}
    queue = [ident]
    while queue:
        g = queue.pop()
        for h in (tuple(Rp[v] for v in g), tuple(Lp[v] for v in g)):
            if h not in elems:
                if len(elems) >= n:
                    return False
                elems.add(h)
                queue.append(h)
    return len(elems) == n


class _Search:
    def __init__(self, r: int, t: int, node_limit=None, progress=None):
        self.r, self.t = r, t
        self.vertex_of, self.darts_at = _layout(r, t)
        self.n = len(self.vertex_of)
        self.nbr_of = [self.vertex_of[d ^ 1] for d in range(self.n)]
        self.allowed = allowed_face_lengths(r, t)
        self.max_allowed = max(self.allowed, default=0)
        self.rot = [-1] * self.n
        self.visited = [0] * self.n
        self.stamp = 0
        self.nodes = 0
        self.node_limit = node_limit
        self.progress = progress
        self.survivors: list[tuple[int, ...]] = []

    def place(self, v: int, succ: tuple[int, ...]) -> None:
        rot = self.rot
        for i, d in enumerate(self.darts_at[v]):
            rot[d] = succ[i]

    def unplace(self, v: int) -> None:
        rot = self.rot
        for d in self.darts_at[v]:
            rot[d] = -1

    def face_check(self, v: int, target: int) -> tuple[bool, int]:
        """Walk faces through the newly fixed vertex v.  Returns
        (ok, updated target face length); target 0 means unset."""
        rot = self.rot
        visited = self.visited
        self.stamp += 1
        stamp = self.stamp
        cap = target if target else self.max_allowed
        allowed = self.allowed
        for e in self.darts_at[v]:
            s = rot[e]
            if visited[s] == stamp:
                continue
            d = s
            steps = 0
            while True:
                visited[d] = stamp
                nd = rot[d ^ 1]
                if nd < 0:
                    break
                steps += 1
                if nd == s:
                    if target == 0:
                        if steps not in allowed:
                            return False, 0
                        target = steps
                        cap = steps
                    elif steps != target:
                        return False, 0
                    break
                if steps >= cap:
                    return False, 0
                if visited[nd] == stamp:
                    break
                d = nd
        return True, target

    def run(self, v0_succ: tuple[int, ...], first_slice=None) -> None:
        """DFS over vertices 1..r-1; vertex 0 is fixed to v0_succ.
        `first_slice` optionally restricts vertex 1's candidate list."""
        self.place(0, v0_succ)
        ok, target = self.face_check(0, 0)
        if ok:
            self._dfs(1, target, first_slice)
        self.unplace(0)

    def _dfs(self, v: int, target: int, first_slice) -> None:
        r = self.r
        cands = self._cands[v] if first_slice is None or v != 1 else first_slice
        for succ in cands:
            self.nodes += 1
            if self.node_limit is not None and self.nodes > self.node_limit:
                raise CensusLimitError(self.nodes, len(self.survivors))
            if self.progress is not None and self.nodes % 250000 == 0:
                self.progress(self.nodes)
            self.place(v, succ)
            ok, tgt = self.face_check(v, target)
            if ok:
                if v == r - 1:
                    if _is_regular(self.rot, self.n):
                        self.survivors.append(tuple(self.rot))
                else:
                    self._dfs(v + 1, tgt, first_slice)
            self.unplace(v)


@dataclass
class CensusResult:
    r: int
    t: int
    count: int
    representatives: list[RotationSystem]
    nodes: int
    labeled_survivors: int


def _census_core(r: int, t: int, node_limit=None, progress=None,
                 v1_slice=None) -> tuple[list[tuple[int, ...]], int]:
    s = _Search(r, t, node_limit=node_limit, progress=progress)
    reps = _v0_representatives(s.darts_at[0], s.nbr_of)
    for pattern, v0_succ in reps:
        filt = pattern if t >= 2 else None
        s._cands = [None] + [
            _vertex_candidates(v, s.darts_at[v], s.nbr_of, filt)
            for v in range(1, r)]
        first = None
        if v1_slice is not None:
            lo, hi = v1_slice
            first = s._cands[1][lo:hi]
        s.run(v0_succ, first_slice=first)
    return s.survivors, s.nodes


def _census_worker(args):
    r, t, lo, hi = args
    return _census_core(r, t, v1_slice=(lo, hi))


def census(r: int, t: int, feasibility: dict[int, int] | None = None,
           jobs: int = 1, node_limit: int | None = None,
           progress=None) -> CensusResult:
    """Count and represent the orientably-regular embeddings of
    K_r^(t), up to isomorphism, by exhausting rotation systems.

    `feasibility` maps r to the largest allowed t (defaults to the
    desk-scale table); pass an explicit table to go beyond it.
    """
    if r < 2 or t < 1:
        raise ValueError("need r >= 2 and t >= 1")
    table = DEFAULT_FEASIBILITY if feasibility is None else feasibility
    if r not in table or t > table[r]:
        raise FeasibilityError(
            f"census for (r={r}, t={t}) exceeds the feasibility table {table}")

    if jobs > 1 and r > 2:
        from multiprocessing import Pool

        probe = _Search(r, t)
        ncand = len(_vertex_candidates(1, probe.darts_at[1], probe.nbr_of, None))
        chunk = max(1, math.ceil(ncand / (4 * jobs)))
        tasks = [(r, t, lo, min(lo + chunk, ncand))
                 for lo in range(0, ncand, chunk)]
        survivors: list[tuple[int, ...]] = []
        nodes = 0
        with Pool(jobs) as pool:
            for surv, nd in pool.imap(_census_worker, tasks):
                survivors.extend(surv)
                nodes += nd
    else:
        survivors, nodes = _census_core(r, t, node_limit=node_limit,
                                        progress=progress)

    vertex_of, _ = _layout(r, t)
    classes: dict[tuple, RotationSystem] = {}
    for rot in survivors:
        L = tuple(d ^ 1 for d in range(len(rot)))
        key = _canonical_key(rot, L)
        if key not in classes:
            classes[key] = RotationSystem(r=r, t=t,
                                          vertex_of=tuple(vertex_of),
                                          R=tuple(rot), L=L)
    reps = [classes[k] for k in sorted(classes)]
    return CensusResult(r=r, t=t, count=len(reps), representatives=reps,
                        nodes=nodes, labeled_survivors=len(survivors))


@dataclass
class CrossCheckVerdict:
    ok: bool
    count: int
    detail: str


def oracle_vs_construction(q: int, t: int,
                           feasibility: dict[int, int] | None = None,
                           jobs: int = 1) -> CrossCheckVerdict:
    """Match census representatives one-to-one against the classified
    maps by dart conjugation, and confirm equal counts."""
    from .mapcore import classify, to_rotation_system  # lazy: keep census independent

    result = census(q, t, feasibility=feasibility, jobs=jobs)
    records = classify(q, t)
    if result.count != len(records):
        return CrossCheckVerdict(False, result.count,
                                 f"census {result.count} != classification {len(records)}")
    exported = [to_rotation_system(rec.map) for rec in records]
    used = [False] * len(exported)
    for rep in result.representatives:
        hit = -1
        for i, ex in enumerate(exported):
            if not used[i] and rotation_systems_isomorphic(rep, ex):
                hit = i
                break
        if hit < 0:
            return CrossCheckVerdict(False, result.count,
                                     "census representative matches no constructed map")
        used[hit] = True
    return CrossCheckVerdict(True, result.count,
                             f"{result.count} class(es) matched one-to-one")
