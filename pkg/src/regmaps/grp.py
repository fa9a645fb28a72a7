"""Generic finite-group engine over pluggable element models.

Elements of a GroupModel are integers 0..n-1 (each concrete model
defines its own packing; 0 is always the identity).  Words over the
generator alphabet {x, y} are the currency for relators.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence


class ClosureBoundError(RuntimeError):
    """Subgroup closure exceeded its configured size bound."""


# ---------------------------------------------------------------------------
# Words
# ---------------------------------------------------------------------------

_LETTER_CODES = {("x", 1): 0, ("x", -1): 1, ("y", 1): 2, ("y", -1): 3}


@dataclass(frozen=True)
class Word:
    """A word in the free group on {x, y}: sequence of (symbol, exponent).

    Normalized so exponents are nonzero and adjacent letters carry
    distinct symbols.
    """

    letters: tuple[tuple[str, int], ...] = ()

    @staticmethod
    def of(pairs: Iterable[tuple[str, int]]) -> "Word":
        stack: list[list] = []
        for sym, exp in pairs:
            if sym not in ("x", "y"):
                raise ValueError(f"unknown generator symbol {sym!r}")
            if exp == 0:
                continue
            if stack and stack[-1][0] == sym:
                stack[-1][1] += exp
                if stack[-1][1] == 0:
                    stack.pop()
            else:
                stack.append([sym, exp])
        return Word(tuple((s, e) for s, e in stack))

    @staticmethod
    def gen(sym: str, exp: int = 1) -> "Word":
        return Word.of([(sym, exp)])

    def __mul__(self, other: "Word") -> "Word":
        return Word.of(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple((s, -e) for s, e in reversed(self.letters)))

    def __pow__(self, e: int) -> "Word":
        if e < 0:
            return self.inverse() ** (-e)
        out = Word()
        for _ in range(e):
            out = out * self
        return out

    def length(self) -> int:
        return sum(abs(e) for _, e in self.letters)

    def syllables(self) -> list[tuple[int, int]]:
        """List of (letter code, count) with codes x=0, x^-1=1, y=2, y^-1=3."""
        return [(_LETTER_CODES[(s, 1 if e > 0 else -1)], abs(e))
                for s, e in self.letters]

    def to_text(self) -> str:
        return " ".join(s if e == 1 else f"{s}^{e}" for s, e in self.letters)

    @staticmethod
    def from_text(text: str) -> "Word":
        pairs = []
        for tok in text.split():
            if "^" in tok:
                sym, _, exp = tok.partition("^")
                pairs.append((sym, int(exp)))
            else:
                pairs.append((tok, 1))
        return Word.of(pairs)

    def __str__(self) -> str:
        return self.to_text() if self.letters else "1"


def conjugate(w: Word, by: Word) -> Word:
    """by * w * by^-1."""
    return by * w * by.inverse()


def commutator(a: Word, b: Word) -> Word:
    """[a, b] = a^-1 b^-1 a b."""
    return a.inverse() * b.inverse() * a * b


# ---------------------------------------------------------------------------
# Group models
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupModel:
    """A finite group on elements 0..n-1 with distinguished generators.

    0 is the identity in every model.  Instances are immutable and safe
    to share; `mul` and `inv` must be pure.
    """

    name: str
    n: int
    mul: Callable[[int, int], int]
    inv: Callable[[int], int]
    gen_x: int
    gen_y: int
    describe: Callable[[int], str] = field(default=str, repr=False)

    identity: int = 0

    @property
    def elements(self) -> range:
        return range(self.n)

    def check_generated(self, bound: int | None = None) -> None:
        """Verify that {gen_x, gen_y} generates the whole universe."""
        got = closure(self, (self.gen_x, self.gen_y), bound=bound)
        if len(got) != self.n:
            raise ValueError(
                f"{self.name}: generators span {len(got)} of {self.n} elements")

    def __repr__(self) -> str:  # keep callables out of the repr
        return f"GroupModel({self.name!r}, n={self.n})"


def power(G: GroupModel, g: int, e: int) -> int:
    """g^e by square-and-multiply; negative exponents via inv."""
    if e < 0:
        g, e = G.inv(g), -e
    acc = G.identity
    while e > 0:
        if e & 1:
            acc = G.mul(acc, g)
        g = G.mul(g, g)
        e >>= 1
    return acc


def element_order(G: GroupModel, g: int) -> int:
    n = 1
    h = g
    while h != G.identity:
        h = G.mul(h, g)
        n += 1
        if n > G.n:
            raise RuntimeError("order exceeds group size; mul is inconsistent")
    return n


def closure(G: GroupModel, gens: Iterable[int], bound: int | None = None) -> frozenset[int]:
    """Subgroup generated by gens, by breadth-first product saturation."""
    gens = [g for g in gens]
    seen = {G.identity}
    queue = deque(seen)
    gens_inv = gens + [G.inv(g) for g in gens]
    mul = G.mul
    while queue:
        a = queue.popleft()
        for g in gens_inv:
            b = mul(a, g)
            if b not in seen:
                if bound is not None and len(seen) >= bound:
                    raise ClosureBoundError(
                        f"closure exceeded bound {bound} in {G.name}")
                seen.add(b)
                queue.append(b)
    return frozenset(seen)


def commutator_subgroup(G: GroupModel, bound: int | None = None) -> frozenset[int]:
    """The derived subgroup G'.

    Computed as the normal closure of the commutators of the
    distinguished generators, which equals the subgroup generated by
    all commutators for any group generated by those generators.
    """
    x, y = G.gen_x, G.gen_y
    mul, inv = G.mul, G.inv
    base = mul(mul(inv(x), inv(y)), mul(x, y))
    conj_by = [x, y, inv(x), inv(y)]
    seeds = {base}
    queue = deque(seeds)
    while queue:
        c = queue.popleft()
        for h in conj_by:
            d = mul(mul(h, c), inv(h))
            if d not in seeds:
                seeds.add(d)
                queue.append(d)
        if bound is not None and len(seeds) > bound:
            raise ClosureBoundError(f"commutator closure exceeded bound {bound}")
    return closure(G, seeds, bound=bound)


def eval_word(G: GroupModel, w: Word, gx: int | None = None, gy: int | None = None) -> int:
    """Evaluate w under x -> gx, y -> gy (defaults: distinguished pair)."""
    gx = G.gen_x if gx is None else gx
    gy = G.gen_y if gy is None else gy
    acc = G.identity
    for sym, exp in w.letters:
        acc = G.mul(acc, power(G, gx if sym == "x" else gy, exp))
    return acc


def rmul_table(G: GroupModel, g: int) -> list[int]:
    """Right-multiplication table h -> h*g as a flat list."""
    mul = G.mul
    return [mul(h, g) for h in range(G.n)]


def hom_extend(
    G1: GroupModel,
    G2: GroupModel,
    img_x: int,
    img_y: int,
    src_x: int | None = None,
    src_y: int | None = None,
    tables: tuple[list[int], list[int], list[int], list[int]] | None = None,
) -> list[int] | None:
    """Extend src_x -> img_x, src_y -> img_y to an isomorphism G1 -> G2.

    The source pair defaults to G1's distinguished generators and must
    generate G1.  Breadth-first labeling of G1's Cayley graph,
    propagating images via phi(g*s) = phi(g)*phi(s).  Returns the full
    bijection as a list (the certificate), or None on any conflict or
    failure of bijectivity.  `tables` optionally supplies precomputed
    right-multiplication tables (t1x, t1y, t2x, t2y) for the hot path.
    """
    if G1.n != G2.n:
        return None
    n = G1.n
    phi = [-1] * n
    hit = bytearray(n)
    phi[0] = 0
    hit[0] = 1
    queue = deque((0,))
    if tables is not None:
        t1x, t1y, t2x, t2y = tables
        steps = ((t1x, t2x), (t1y, t2y))
        while queue:
            g = queue.popleft()
            pg = phi[g]
            for t1, t2 in steps:
                h = t1[g]
                ph = t2[pg]
                if phi[h] < 0:
                    if hit[ph]:
                        return None
                    phi[h] = ph
                    hit[ph] = 1
                    queue.append(h)
                elif phi[h] != ph:
                    return None
    else:
        mul1, mul2 = G1.mul, G2.mul
        gens = ((G1.gen_x if src_x is None else src_x, img_x),
                (G1.gen_y if src_y is None else src_y, img_y))
        while queue:
            g = queue.popleft()
            pg = phi[g]
            for s1, s2 in gens:
                h = mul1(g, s1)
                ph = mul2(pg, s2)
                if phi[h] < 0:
                    if hit[ph]:
                        return None
                    phi[h] = ph
                    hit[ph] = 1
                    queue.append(h)
                elif phi[h] != ph:
                    return None
    if any(v < 0 for v in phi):
        raise ValueError(f"{G1.name}: source generator pair does not generate")
    return phi


def hom_extend_report(G1: GroupModel, G2: GroupModel, img_x: int, img_y: int,
                      src_x: int | None = None, src_y: int | None = None) -> dict:
    """hom_extend with an explicit verdict payload."""
    if G1.n != G2.n:
        return {"ok": False, "reason": f"order mismatch {G1.n} != {G2.n}"}
    phi = hom_extend(G1, G2, img_x, img_y, src_x=src_x, src_y=src_y)
    if phi is None:
        return {"ok": False, "reason": "generator assignment does not extend"}
    return {"ok": True, "mapping": phi}


def quotient_model(G: GroupModel, normal: Iterable[int], name: str | None = None) -> tuple[GroupModel, list[int]]:
    """Quotient of G by a normal subgroup given as an element set.

    Returns the quotient model (cosets indexed by ascending minimal
    representative; identity coset first) and the element->coset-index
    map.
    """
    nset = sorted(set(normal))
    if G.identity not in nset:
        raise ValueError("normal subgroup must contain the identity")
    mul = G.mul
    rep_of = [-1] * G.n
    reps: list[int] = []
    for g in range(G.n):
        if rep_of[g] >= 0:
            continue
        coset = sorted(mul(g, h) for h in nset)
        r = coset[0]
        idx = len(reps)
        reps.append(r)
        for c in coset:
            if rep_of[c] >= 0:
                raise ValueError("subgroup is not normal or not a subgroup")
            rep_of[c] = idx
    index = {r: i for i, r in enumerate(reps)}

    def qmul(a: int, b: int) -> int:
        return rep_of[mul(reps[a], reps[b])]

    def qinv(a: int) -> int:
        return rep_of[G.inv(reps[a])]

    Q = GroupModel(
        name=name or f"{G.name}/N",
        n=len(reps),
        mul=qmul,
        inv=qinv,
        gen_x=rep_of[G.gen_x],
        gen_y=rep_of[G.gen_y],
        describe=lambda a: f"coset[{G.describe(reps[a])}]",
    )
    return Q, rep_of


def centralizer_order(perm_gens: Sequence[Sequence[int]]) -> int:
    """Order of the centralizer in Sym(n) of the group generated by
    permutations acting transitively on 0..n-1.

    Counts the equivariant bijections by propagating each candidate
    image of the base point 0; on a transitive action every consistent
    propagation is automatically a bijection.  Raises ValueError if the
    generated group is intransitive.
    """
    if not perm_gens:
        raise ValueError("need at least one permutation")
    n = len(perm_gens[0])
    if any(len(g) != n for g in perm_gens):
        raise ValueError("permutations act on different point sets")
    # transitivity check
    seen = bytearray(n)
    seen[0] = 1
    queue = deque((0,))
    count = 1
    while queue:
        a = queue.popleft()
        for g in perm_gens:
            b = g[a]
            if not seen[b]:
                seen[b] = 1
                count += 1
                queue.append(b)
    if count != n:
        raise ValueError("action is not transitive")

    total = 0
    for cand in range(n):
        sigma = [-1] * n
        sigma[0] = cand
        queue = deque((0,))
        ok = True
        while queue and ok:
            a = queue.popleft()
            sa = sigma[a]
            for g in perm_gens:
                b = g[a]
                sb = g[sa]
                if sigma[b] < 0:
                    sigma[b] = sb
                    queue.append(b)
                elif sigma[b] != sb:
                    ok = False
                    break
        if ok:
            total += 1
    return total
