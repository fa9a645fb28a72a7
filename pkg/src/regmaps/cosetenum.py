"""Todd-Coxeter coset enumeration for two-generator finite presentations.

A complete enumeration yields the group order and a faithful
permutation model on cosets of the trivial subgroup (the regular
representation); hitting the coset limit yields an inconclusive result,
never a wrong order.  Two engines share the machinery:

  * the direct engine enumerates cosets of the trivial subgroup:
    batches of single-entry definitions alternate with full relator
    sweeps (deductions at gap one, coincidences, no blind gap-filling,
    which on relators like (x y^((q+1)/2))^p makes the table grow
    without bound); the first sweep that leaves a complete table
    unchanged certifies closure;

  * the cyclic engine first enumerates the cosets of <y> on a weighted
    table whose entries carry y-exponents, collecting proven relations
    y^E = 1 whose gcd D bounds ord(y) from above, so |G| <= index * D;
    the table is then expanded to the regular representation on
    index * D points, and its verified closure and transitivity give
    |G| >= index * D.  Both bounds are machine-checked, pinning the
    order exactly.

The cyclic engine is selected automatically when a pure power of y is
among the relators; it is what makes presentations with relator blocks
of quadratic length (the AGL presentations for one-digit fields of
large characteristic) enumerable at all, where blind HLT diverges.

Relators are scanned syllable by syllable.  Runs of y-letters are
traversed through a chain index over the partial y-cycles of the table,
so power relators such as y^((q-1)t) cost O(1) per scan instead of
O(length); chain records are rebuilt lazily, one chain at a time, after
coincidences invalidate them.  As a further guard against gratuitously
long scans, y-exponents of non-power relators are reduced modulo N
whenever a pure power y^N is among the relators (and likewise for x), a
presentation-preserving rewrite.

Alphabet codes: x=0, x^-1=1, y=2, y^-1=3; code^1 is the inverse letter.
"""

from __future__ import annotations

import math
from bisect import bisect_right
from collections import deque
from dataclasses import dataclass, field

from .grp import GroupModel, Word


class _LimitExceeded(Exception):
    pass


@dataclass(frozen=True)
class Presentation:
    """Two-generator presentation <x, y | relators>."""

    relators: tuple[Word, ...]

    def __post_init__(self) -> None:
        if not self.relators:
            raise ValueError("presentation needs at least one relator")

    @staticmethod
    def of(relators) -> "Presentation":
        return Presentation(tuple(relators))

    def to_text(self) -> str:
        return "\n".join(w.to_text() for w in self.relators) + "\n"

    @staticmethod
    def from_text(text: str) -> "Presentation":
        rels = []
        for line in text.splitlines():
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            rels.append(Word.from_text(line))
        return Presentation(tuple(rels))


def _pure_power(w: Word, sym: str) -> int | None:
    if len(w.letters) == 1 and w.letters[0][0] == sym:
        return abs(w.letters[0][1])
    return None


def _reduce_exponents(relators: tuple[Word, ...]) -> list[Word]:
    """Reduce generator exponents modulo pure power relators.

    If y^N appears as a relator, every other relator's y-exponents are
    replaced by the absolutely smallest representative mod N (same for
    x).  The presented group is unchanged; relators reduced to the
    empty word are dropped.
    """
    mods = {}
    for sym in ("x", "y"):
        powers = [n for w in relators if (n := _pure_power(w, sym))]
        if powers:
            mods[sym] = min(powers)
    out = []
    for w in relators:
        if any(_pure_power(w, sym) for sym in mods):
            out.append(w)
            continue
        pairs = []
        for sym, e in w.letters:
            if sym in mods:
                n = mods[sym]
                e = e % n
                if 2 * e > n:
                    e -= n
            pairs.append((sym, e))
        w2 = Word.of(pairs)
        if w2.letters:
            out.append(w2)
    return out


class _Chains:
    """Index over the partial y-cycles of a coset table.

    Each record describes one maximal y-path (or closed y-cycle) of
    live cosets and supports O(1) position jumps.  Records present in
    `chains` are always current: every table mutation either updates
    them or deletes them, and whole-table invalidation (after
    coincidence processing) simply clears the dict.  A coset whose
    chain id is missing from the dict gets its chain rebuilt on demand
    by walking the y-columns.
    """

    def __init__(self, ycol: list[int], Ycol: list[int]):
        self.ycol = ycol
        self.Ycol = Ycol
        self.cid: list[int] = []
        self.pos: list[int] = []
        self.chains: dict[int, dict] = {}
        self.nextid = 0

    def add_coset(self) -> None:
        self.cid.append(-1)
        self.pos.append(0)

    def invalidate(self) -> None:
        self.chains.clear()

    def _rebuild_from(self, a: int) -> dict:
        """Walk the y-columns to rebuild the chain through a."""
        ycol, Ycol = self.ycol, self.Ycol
        h = a
        closed = False
        while True:
            prev = Ycol[h]
            if prev < 0:
                break
            if prev == a:
                closed = True
                break
            h = prev
        i = self.nextid
        self.nextid += 1
        elems = {}
        c = h
        p = 0
        while True:
            elems[p] = c
            self.cid[c] = i
            self.pos[c] = p
            nxt = ycol[c]
            if nxt < 0 or nxt == h:
                break
            c = nxt
            p += 1
        ch = {"elems": elems, "head": 0, "tail": p, "closed": closed}
        self.chains[i] = ch
        return ch

    def _get(self, a: int) -> dict:
        ch = self.chains.get(self.cid[a])
        if ch is None:
            ch = self._rebuild_from(a)
        return ch

    def define_after(self, tail: int, new: int) -> None:
        """Fresh definition tail*y = new (new has no other y-links)."""
        ch = self.chains.get(self.cid[tail])
        if ch is None:
            return  # built on demand later
        p = self.pos[tail] + 1
        ch["elems"][p] = new
        ch["tail"] = p
        self.cid[new] = self.cid[tail]
        self.pos[new] = p

    def define_before(self, head: int, new: int) -> None:
        """Fresh definition new*y = head."""
        ch = self.chains.get(self.cid[head])
        if ch is None:
            return
        p = self.pos[head] - 1
        ch["elems"][p] = new
        ch["head"] = p
        self.cid[new] = self.cid[head]
        self.pos[new] = p

    def link(self, tail: int, head: int) -> None:
        """Deduction tail*y = head between existing cosets."""
        cha = self.chains.get(self.cid[tail])
        chb = self.chains.get(self.cid[head])
        if cha is None or chb is None:
            # one side unknown: drop the other's record; both rebuild on demand
            if cha is not None:
                del self.chains[self.cid[tail]]
            if chb is not None:
                del self.chains[self.cid[head]]
            return
        if cha is chb:
            cha["closed"] = True
            return
        a, b = self.cid[tail], self.cid[head]
        if len(cha["elems"]) >= len(chb["elems"]):
            delta = self.pos[tail] + 1 - chb["head"]
            for p, c in chb["elems"].items():
                np = p + delta
                cha["elems"][np] = c
                self.cid[c] = a
                self.pos[c] = np
            cha["tail"] = chb["tail"] + delta
            del self.chains[b]
        else:
            delta = chb["head"] - 1 - self.pos[tail]
            for p, c in cha["elems"].items():
                np = p + delta
                chb["elems"][np] = c
                self.cid[c] = b
                self.pos[c] = np
            chb["head"] = cha["head"] + delta
            del self.chains[a]

    def jump(self, a: int, code: int, need: int) -> tuple[int, int]:
        """Advance up to `need` y-steps from a (code 2 forward, 3
        backward); returns (reached coset, steps taken)."""
        ch = self._get(a)
        p = self.pos[a]
        if ch["closed"]:
            span = ch["tail"] - ch["head"] + 1
            off = need % span
            np = p + off if code == 2 else p - off
            np = ch["head"] + (np - ch["head"]) % span
            return ch["elems"][np], need
        if code == 2:
            take = min(need, ch["tail"] - p)
            return ch["elems"][p + take], take
        take = min(need, p - ch["head"])
        return ch["elems"][p - take], take


class _Enumerator:
    def __init__(self, relators: list[list[tuple[int, int]]], limit: int):
        self.limit = limit
        self.cols: list[list[int]] = [[], [], [], []]
        self.p: list[int] = []
        self.nalive = 0
        self.relators = relators
        self.prefix = [self._prefix(r) for r in relators]
        self.chains = _Chains(self.cols[2], self.cols[3])
        self.changed = False
        self._new_coset()

    @staticmethod
    def _prefix(syls) -> list[int]:
        out = [0]
        for _, cnt in syls:
            out.append(out[-1] + cnt)
        return out

    # -- basic table operations --

    def _new_coset(self) -> int:
        if len(self.p) >= self.limit:
            raise _LimitExceeded
        a = len(self.p)
        self.p.append(a)
        for col in self.cols:
            col.append(-1)
        self.chains.add_coset()
        self.nalive += 1
        return a

    def rep(self, a: int) -> int:
        p = self.p
        r = a
        while p[r] != r:
            r = p[r]
        while p[a] != r:
            p[a], a = r, p[a]
        return r

    def alive(self, a: int) -> bool:
        return self.p[a] == a

    def _set(self, a: int, code: int, b: int) -> None:
        """Record the deduction a*code = b (both mirror slots empty)."""
        self.cols[code][a] = b
        self.cols[code ^ 1][b] = a
        if code == 2:
            self.chains.link(a, b)
        elif code == 3:
            self.chains.link(b, a)
        self.changed = True

    def _define(self, a: int, code: int) -> int:
        b = self._new_coset()
        self.cols[code][a] = b
        self.cols[code ^ 1][b] = a
        if code == 2:
            self.chains.define_after(a, b)
        elif code == 3:
            self.chains.define_before(a, b)
        return b

    # -- coincidences (standard queue processing) --

    def _merge(self, a: int, b: int, queue) -> None:
        a, b = self.rep(a), self.rep(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        self.p[b] = a
        self.nalive -= 1
        queue.append(b)

    def _coincidence(self, a: int, b: int) -> None:
        queue: deque[int] = deque()
        self._merge(a, b, queue)
        cols = self.cols
        while queue:
            e = queue.popleft()
            for code in range(4):
                d = cols[code][e]
                if d < 0:
                    continue
                cols[code][e] = -1
                if cols[code ^ 1][d] == e:
                    cols[code ^ 1][d] = -1
                mu = self.rep(e)
                nu = self.rep(d)
                if cols[code][mu] >= 0:
                    self._merge(nu, cols[code][mu], queue)
                elif cols[code ^ 1][nu] >= 0:
                    self._merge(mu, cols[code ^ 1][nu], queue)
                else:
                    cols[code][mu] = nu
                    cols[code ^ 1][nu] = mu
        self.chains.invalidate()
        self.changed = True

    # -- relator scanning (no fills: deduction and coincidence only) --

    def _scan(self, a: int, ridx: int, deduce: bool = True) -> bool:
        """Scan relator ridx at live coset a.

        Applies a coincidence if the trace closes mismatched and, when
        `deduce` is set, fills a gap of exactly one letter.  Returns
        False only when the trace is left incomplete.
        """
        syls = self.relators[ridx]
        pre = self.prefix[ridx]
        L = pre[-1]
        cols = self.cols
        chains = self.chains

        f, fpos = a, 0
        b, bpos = a, L
        while fpos < bpos:
            si = bisect_right(pre, fpos) - 1
            code = syls[si][0]
            if code >= 2:
                need = min(pre[si + 1], bpos) - fpos
                f, took = chains.jump(f, code, need)
                fpos += took
                if took < need:
                    break
            else:
                nx = cols[code][f]
                if nx < 0:
                    break
                f, fpos = nx, fpos + 1
        if fpos == bpos:
            if f != b:
                self._coincidence(f, b)
            return True
        while bpos > fpos:
            si = bisect_right(pre, bpos - 1) - 1
            code = syls[si][0] ^ 1
            if code >= 2:
                need = bpos - max(pre[si], fpos)
                b, took = chains.jump(b, code, need)
                bpos -= took
                if took < need:
                    break
            else:
                nx = cols[code][b]
                if nx < 0:
                    break
                b, bpos = nx, bpos - 1
        if bpos == fpos:
            if f != b:
                self._coincidence(f, b)
            return True
        if deduce and bpos - fpos == 1:
            si = bisect_right(pre, fpos) - 1
            self._set(f, syls[si][0], b)
            return True
        return False

    def sweep(self, deduce: bool = True) -> bool:
        """Scan every relator at every live coset; True if anything
        changed (deduction or coincidence)."""
        self.changed = False
        nrel = len(self.relators)
        a = 0
        p = self.p
        while a < len(p):
            if p[a] == a:
                for r in range(nrel):
                    self._scan(a, r, deduce=deduce)
                    if p[a] != a:
                        break
            a += 1
        return self.changed

    def complete(self) -> bool:
        p = self.p
        cols = self.cols
        for a in range(len(p)):
            if p[a] != a:
                continue
            for code in range(4):
                if cols[code][a] < 0:
                    return False
        return True

    def run(self) -> None:
        """Alternate definition batches with sweeps until a sweep leaves
        a complete table untouched (the table is then closed)."""
        cols = self.cols
        p = self.p
        while True:
            changed = self.sweep()
            first_hole = None
            a = 0
            while a < len(p):
                if p[a] == a and any(cols[code][a] < 0 for code in range(4)):
                    first_hole = a
                    break
                a += 1
            if first_hole is None:
                if not changed:
                    return
                continue
            # definition batch: fill rows left to right, one entry at a time
            budget = max(64, self.nalive // 8)
            a = first_hole
            while a < len(p) and budget > 0:
                if p[a] == a:
                    for code in (0, 1, 2, 3):
                        if budget > 0 and cols[code][a] < 0:
                            self._define(a, code)
                            budget -= 1
                a += 1

    def verify_closed(self) -> bool:
        """Every relator must trace to closure at every live coset.

        Mutation-free: forward syllable march (with y-cycle jumps) that
        must return to its start without hitting an undefined entry.
        """
        cols = self.cols
        chains = self.chains
        for r, syls in enumerate(self.relators):
            for a in range(len(self.p)):
                if self.p[a] != a:
                    continue
                f = a
                ok = True
                for code, cnt in syls:
                    if code >= 2:
                        f, took = chains.jump(f, code, cnt)
                        if took < cnt:
                            ok = False
                            break
                    else:
                        col = cols[code]
                        for _ in range(cnt):
                            f = col[f]
                            if f < 0:
                                ok = False
                                break
                        if not ok:
                            break
                if not ok or f != a:
                    return False
        return True

    @classmethod
    def from_complete(cls, relators, cols) -> "_Enumerator":
        """Wrap a prebuilt complete table for verification only."""
        self = cls.__new__(cls)
        n = len(cols[0])
        self.limit = n
        self.cols = cols
        self.p = list(range(n))
        self.nalive = n
        self.relators = relators
        self.prefix = [cls._prefix(r) for r in relators]
        self.chains = _Chains(cols[2], cols[3])
        for _ in range(n):
            self.chains.add_coset()
        self.changed = False
        return self

    def transitive(self) -> bool:
        n = len(self.p)
        seen = bytearray(n)
        seen[0] = 1
        stack = [0]
        cnt = 1
        while stack:
            a = stack.pop()
            for code in range(4):
                b = self.cols[code][a]
                if b >= 0 and not seen[b]:
                    seen[b] = 1
                    cnt += 1
                    stack.append(b)
        return cnt == n


class _WeightedDSU:
    """Union-find with y-exponent potentials: rep_a = y^pot(a) rep_root."""

    def __init__(self):
        self.parent: list[int] = []
        self.pot: list[int] = []

    def add(self) -> None:
        self.parent.append(len(self.parent))
        self.pot.append(0)

    def find(self, a: int) -> tuple[int, int]:
        """Root of a and the accumulated exponent rep_a = y^off rep_root."""
        path = []
        while self.parent[a] != a:
            path.append(a)
            a = self.parent[a]
        off = 0
        for b in reversed(path):
            off += self.pot[b]
            self.parent[b] = a
            self.pot[b] = off
        return a, off if path else 0

    def offset(self, a: int) -> int:
        self.find(a)
        return self.pot[a] if self.parent[a] != a else 0


class _CyclicEnumerator:
    """Weighted enumeration of the cosets of <y>.

    Table entries carry exponents: entry (a, g) = (b, d) means
    rep_a * g = y^d * rep_b.  Relator traces that return to their start
    coset prove relations y^E = 1; the gcd D of the collected E bounds
    ord(y) from above.  The table is tiny (the index of <y>), so all
    scanning is letterwise.
    """

    def __init__(self, relators: list[list[tuple[int, int]]], limit: int):
        self.limit = limit
        self.relators = relators
        self.letters = [self._expand(r) for r in relators]
        self.cols: list[list[int]] = [[], [], [], []]
        self.wts: list[list[int]] = [[], [], [], []]
        self.dsu = _WeightedDSU()
        self.nalive = 0
        self.D = 0
        self.changed = False
        self._new_coset()
        # seed the subgroup generator: rep_0 * y = y^1 * rep_0
        self.cols[2][0] = 0
        self.wts[2][0] = 1
        self.cols[3][0] = 0
        self.wts[3][0] = -1

    @staticmethod
    def _expand(syls) -> list[int]:
        out = []
        for code, cnt in syls:
            out.extend([code] * cnt)
        return out

    def _new_coset(self) -> int:
        if len(self.cols[0]) >= self.limit:
            raise _LimitExceeded
        a = len(self.cols[0])
        for col in self.cols:
            col.append(-1)
        for wcol in self.wts:
            wcol.append(0)
        self.dsu.add()
        self.nalive += 1
        return a

    def _relation(self, e: int) -> None:
        if e:
            self.D = math.gcd(self.D, abs(e))

    def alive(self, a: int) -> bool:
        return self.dsu.parent[a] == a

    def _set(self, a: int, code: int, b: int, d: int) -> None:
        self.cols[code][a] = b
        self.wts[code][a] = d
        self.cols[code ^ 1][b] = a
        self.wts[code ^ 1][b] = -d
        self.changed = True

    def _merge(self, a: int, b: int, omega: int, queue) -> None:
        """Record rep_a = y^omega rep_b."""
        ra, oa = self.dsu.find(a)
        rb, ob = self.dsu.find(b)
        # rep_ra = y^(-oa+omega+ob) rep_rb
        w = -oa + omega + ob
        if ra == rb:
            self._relation(w)
            return
        if ra > rb:
            ra, rb, w = rb, ra, -w
        # attach larger root under smaller: rep_rb = y^(-w) rep_ra
        self.dsu.parent[rb] = ra
        self.dsu.pot[rb] = -w
        self.nalive -= 1
        queue.append(rb)
        self.changed = True

    def _coincidence(self, a: int, b: int, omega: int) -> None:
        queue: deque[int] = deque()
        self._merge(a, b, omega, queue)
        cols, wts = self.cols, self.wts
        while queue:
            e = queue.popleft()
            phi = self.dsu.pot[e]     # rep_e = y^phi rep_parent, parent is root
            m = self.dsu.parent[e]
            for code in range(4):
                d = cols[code][e]
                if d < 0:
                    continue
                delta = wts[code][e]
                cols[code][e] = -1
                if cols[code ^ 1][d] == e:
                    cols[code ^ 1][d] = -1
                rm, om = self.dsu.find(m)
                rd, od = self.dsu.find(d)
                # rep_rm * g = y^(-om + -phi... ) derive: rep_e g = y^delta rep_d
                # rep_m = y^(-phi) rep_e -> rep_m g = y^(delta - phi) rep_d
                # rep_rm = y^(-om) rep_m ; rep_d = y^od rep_rd
                w = -om + delta - phi + od
                if cols[code][rm] >= 0:
                    # rep_rm g = y^w' rep_d' already
                    self._merge(rd, cols[code][rm], wts[code][rm] - w, queue)
                elif cols[code ^ 1][rd] >= 0:
                    self._merge(rm, cols[code ^ 1][rd], wts[code ^ 1][rd] + w, queue)
                else:
                    self._set(rm, code, rd, w)

    def _scan(self, a: int, ridx: int, fill: bool = False) -> None:
        """Invariants during the trace of relator w at coset a:
        rep_a w[0..fpos) = y^ef rep_f and rep_a (w[bpos..L))^-1 = y^eb rep_b.
        """
        letters = self.letters[ridx]
        L = len(letters)
        cols, wts = self.cols, self.wts
        f, fpos, ef = a, 0, 0
        while fpos < L:
            code = letters[fpos]
            nx = cols[code][f]
            if nx < 0:
                break
            ef += wts[code][f]
            f = nx
            fpos += 1
        if fpos == L:
            if f != a:
                self._coincidence(a, f, ef)   # rep_a = y^ef rep_f
            else:
                self._relation(ef)
            return
        b, bpos, eb = a, L, 0
        while bpos > fpos:
            code = letters[bpos - 1] ^ 1
            nx = cols[code][b]
            if nx < 0:
                break
            eb += wts[code][b]
            b = nx
            bpos -= 1
        if bpos == fpos:
            # both traces meet: y^ef rep_f = y^eb rep_b
            if f == b:
                self._relation(eb - ef)
            else:
                self._coincidence(f, b, eb - ef)
            return
        if fill:
            while bpos - fpos > 1:
                nc = self._new_coset()
                self._set(f, letters[fpos], nc, 0)  # rep_nc := rep_f * letter
                f = nc
                fpos += 1
        if bpos - fpos == 1:
            # one letter gap, both mirror slots undefined by stuck scans:
            # rep_f * w[fpos] = y^(eb - ef) rep_b
            self._set(f, letters[fpos], b, eb - ef)

    def _sweep_until_stable(self) -> None:
        while True:
            self.changed = False
            a = 0
            cols = self.cols
            while a < len(cols[0]):
                if self.alive(a):
                    for r in range(len(self.relators)):
                        self._scan(a, r)
                        if not self.alive(a):
                            break
                a += 1
            if not self.changed:
                return

    def run(self) -> None:
        """HLT-style main loop at the scale of the <y>-cosets: scan and
        fill each relator at each live coset, with collapsing sweeps
        whenever enough new cosets have piled up."""
        cols = self.cols
        nrel = len(self.relators)
        last_sweep = 0
        i = 0
        while True:
            while i < len(cols[0]):
                if self.alive(i):
                    for r in range(nrel):
                        self._scan(i, r, fill=True)
                        if not self.alive(i):
                            break
                    if self.alive(i):
                        for code in range(4):
                            if cols[code][i] < 0:
                                b = self._new_coset()
                                self._set(i, code, b, 0)
                i += 1
                if len(cols[0]) - last_sweep > 512:
                    self._sweep_until_stable()
                    last_sweep = len(cols[0])
            self._sweep_until_stable()
            # coincidence processing can reopen entries at earlier cosets
            hole = None
            for a in range(len(cols[0])):
                if self.alive(a):
                    for code in range(4):
                        if cols[code][a] < 0:
                            hole = (a, code)
                            break
                    if hole:
                        break
            if hole is None:
                return
            b = self._new_coset()
            self._set(hole[0], hole[1], b, 0)

    def expand(self) -> tuple[tuple[int, int, int, int], ...] | None:
        """The regular representation on index * D points, or None when
        no relation bounded ord(y)."""
        if self.D == 0:
            return None
        D = self.D
        live = [a for a in range(len(self.cols[0])) if self.alive(a)]
        index = {a: i for i, a in enumerate(live)}
        n = len(live) * D
        if n > self.limit:
            raise _LimitExceeded
        rows = []
        for a in live:
            # normalize targets onto live representatives
            arow = []
            wrow = []
            for c in range(4):
                d = self.cols[c][a]
                rd, od = self.dsu.find(d)
                arow.append(index[rd])
                wrow.append(self.wts[c][a] + od)
            for e in range(D):
                # point y^e rep_a; letter g: y^e rep_a g = y^(e+d) rep_b
                rows.append(tuple(arow[c] * D + (e + wrow[c]) % D
                                  for c in range(4)))
        return tuple(rows)


@dataclass
class CosetTable:
    """Result of a coset enumeration over the trivial subgroup."""

    status: str                    # "complete" | "exceeded-limit"
    order: int | None
    presentation: Presentation
    limit: int
    rows: tuple[tuple[int, int, int, int], ...] = ()
    _words: list[tuple[int, ...]] | None = field(default=None, repr=False)

    @property
    def complete(self) -> bool:
        return self.status == "complete"

    def column(self, code: int) -> list[int]:
        return [row[code] for row in self.rows]

    def _schreier_words(self) -> list[tuple[int, ...]]:
        """Letter word reaching each coset from coset 0 (BFS, fixed order)."""
        if self._words is None:
            n = len(self.rows)
            words: list = [None] * n
            words[0] = ()
            queue = deque((0,))
            while queue:
                a = queue.popleft()
                for code in (0, 2, 1, 3):
                    b = self.rows[a][code]
                    if words[b] is None:
                        words[b] = words[a] + (code,)
                        queue.append(b)
            self._words = words
        return self._words

    def follow(self, a: int, codes) -> int:
        for code in codes:
            a = self.rows[a][code]
        return a

    def group_model(self, name: str = "coset-table") -> GroupModel:
        """The regular representation as a GroupModel on coset indices."""
        if not self.complete:
            raise ValueError("enumeration was inconclusive")
        words = self._schreier_words()

        def mul(a: int, b: int) -> int:
            return self.follow(a, words[b])

        def inv(a: int) -> int:
            return self.follow(0, [c ^ 1 for c in reversed(words[a])])

        return GroupModel(
            name=name,
            n=len(self.rows),
            mul=mul,
            inv=inv,
            gen_x=self.rows[0][0],
            gen_y=self.rows[0][2],
            describe=lambda a: f"coset{a}",
        )


def enumerate_cosets(P: Presentation, limit: int, strategy: str = "auto") -> CosetTable:
    """Enumerate the cosets of the trivial subgroup in <x,y | P>.

    Returns a complete table with the group order, or an inconclusive
    exceeded-limit result.  Deterministic: identical presentations,
    limits and strategies produce identical tables.

    strategy: "auto" picks the cyclic engine when a pure power of y is
    among the relators, the direct engine otherwise; "cyclic" and
    "trivial" force an engine.
    """
    if limit < 1:
        raise ValueError("limit must be >= 1")
    rels = []
    for w in _reduce_exponents(P.relators):
        syls = w.syllables()
        if syls:
            rels.append(syls)
    if not rels:
        raise ValueError("all relators are empty")
    if strategy not in ("auto", "cyclic", "trivial"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy == "auto":
        has_ypower = any(len(r) == 1 and r[0][0] == 2 for r in rels)
        strategy = "cyclic" if has_ypower else "trivial"

    if strategy == "cyclic":
        enum = _CyclicEnumerator(rels, limit)
        try:
            enum.run()
            rows = enum.expand()
        except _LimitExceeded:
            return CosetTable("exceeded-limit", None, P, limit)
        if rows is None:
            strategy = "trivial"  # no relation bounded ord(y)
        else:
            cols = [[row[c] for row in rows] for c in range(4)]
            shell = _Enumerator.from_complete(rels, cols)
            if not (shell.transitive() and shell.verify_closed()):
                raise RuntimeError(
                    "internal error: expanded table is not a closed "
                    "transitive action")
            return CosetTable("complete", len(rows), P, limit, rows)

    enum = _Enumerator(rels, limit)
    try:
        enum.run()
    except _LimitExceeded:
        return CosetTable("exceeded-limit", None, P, limit)
    if not enum.verify_closed():
        raise RuntimeError("internal error: completed table is not closed")
    live = [a for a in range(len(enum.p)) if enum.p[a] == a]
    index = {a: i for i, a in enumerate(live)}
    rows = tuple(
        tuple(index[enum.rep(enum.cols[c][a])] for c in range(4))
        for a in live)
    return CosetTable("complete", len(live), P, limit, rows)


def order_of_generator(table: CosetTable, sym: str) -> int:
    """Order of generator 'x' or 'y' in the enumerated group.

    In the regular representation every cycle of the generator column
    has the same length, the element order; follow the cycle of coset 0.
    """
    if not table.complete:
        raise ValueError("enumeration was inconclusive")
    code = {"x": 0, "y": 2}[sym]
    n = 1
    a = table.rows[0][code]
    while a != 0:
        a = table.rows[a][code]
        n += 1
    return n
