"""Prime powers, polynomial arithmetic over F_p, and primitive polynomials.

Polynomials of degree k are monic throughout; they are stored as the
coefficient tuple (a_0, ..., a_{k-1}) of

    lambda^k + a_{k-1} lambda^{k-1} + ... + a_1 lambda + a_0

with the leading 1 implicit.  A degree-1 polynomial with root xi is
lambda - xi, stored as a_0 = -xi mod p.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (desk scale, n up to ~10^6)."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def euler_phi(n: int) -> int:
    phi = 1
    for p, e in factorize(n).items():
        phi *= (p - 1) * p ** (e - 1)
    return phi


def prime_power_decompose(q: int) -> tuple[int, int] | None:
    """Return (p, k) with q = p^k, or None if q is not a prime power."""
    if q < 2:
        return None
    fac = factorize(q)
    if len(fac) != 1:
        return None
    p, k = next(iter(fac.items()))
    return p, k


@dataclass(frozen=True)
class PrimePower:
    """A prime power q = p^k."""

    p: int
    k: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if self.k < 1:
            raise ValueError(f"k={self.k} must be >= 1")

    @property
    def q(self) -> int:
        return self.p ** self.k

    @staticmethod
    def of(q: int) -> "PrimePower":
        dec = prime_power_decompose(q)
        if dec is None:
            raise ValueError(f"{q} is not a prime power")
        return PrimePower(*dec)


# -- dense polynomial helpers (coefficient lists, lowest degree first) --

def _poly_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_trim(out)


def _poly_mod(a: list[int], m: list[int], p: int) -> list[int]:
    """Remainder of a modulo m; m need not be monic."""
    a = a[:]
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p) if m[-1] != 1 else 1
    while len(a) - 1 >= dm and a:
        coef = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mi in enumerate(m):
            a[shift + i] = (a[shift + i] - coef * mi) % p
        _poly_trim(a)
    return a


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = a[:], b[:]
    while b:
        a, b = b, _poly_mod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _poly_powmod(base: list[int], e: int, m: list[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(base, m, p)
    while e > 0:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), m, p)
        base = _poly_mod(_poly_mul(base, base, p), m, p)
        e >>= 1
    return result


def _full_coeffs(coeffs: tuple[int, ...] | list[int]) -> list[int]:
    """Dense list a_0..a_{k-1}, 1 for the monic polynomial."""
    return list(coeffs) + [1]


def _check_coeffs(coeffs, pp: PrimePower) -> tuple[int, ...]:
    coeffs = tuple(coeffs)
    if len(coeffs) != pp.k:
        raise ValueError(f"expected {pp.k} coefficients, got {len(coeffs)}")
    for c in coeffs:
        if not isinstance(c, int) or not 0 <= c < pp.p:
            raise ValueError(f"coefficient {c!r} out of range for F_{pp.p}")
    return coeffs


def poly_is_irreducible(coeffs, pp: PrimePower) -> bool:
    """Irreducibility of the monic polynomial over F_p.

    Uses the standard criterion: lambda^(p^k) = lambda mod mu, and
    gcd(lambda^(p^(k/r)) - lambda, mu) = 1 for every prime r | k.
    """
    coeffs = _check_coeffs(coeffs, pp)
    p, k = pp.p, pp.k
    mu = _full_coeffs(coeffs)
    if k == 1:
        return True
    lam = [0, 1]
    if _poly_powmod(lam, p ** k, mu, p) != lam:
        return False
    for r in factorize(k):
        h = _poly_powmod(lam, p ** (k // r), mu, p)
        n = max(len(h), len(lam))
        diff = _poly_trim([(a - b) % p for a, b in
                           zip(h + [0] * (n - len(h)), lam + [0] * (n - len(lam)))])
        if len(_poly_gcd(mu, diff, p)) != 1:
            return False
    return True


def poly_is_primitive(coeffs, pp: PrimePower) -> bool:
    """True iff monic irreducible and lambda mod mu has order q-1."""
    coeffs = _check_coeffs(coeffs, pp)
    if not poly_is_irreducible(coeffs, pp):
        return False
    p, q = pp.p, pp.q
    mu = _full_coeffs(coeffs)
    lam = [0, 1] if pp.k > 1 else _poly_mod([0, 1], mu, p)
    if _poly_powmod(lam, q - 1, mu, p) != [1]:
        return False
    for r in factorize(q - 1):
        if _poly_powmod(lam, (q - 1) // r, mu, p) == [1]:
            return False
    return True


@dataclass(frozen=True)
class PrimitivePoly:
    """A monic primitive polynomial mu for the field F_q, q = p^k."""

    pp: PrimePower
    coeffs: tuple[int, ...]  # a_0 .. a_{k-1}

    def __post_init__(self) -> None:
        if not poly_is_primitive(self.coeffs, self.pp):
            raise ValueError(f"{self._render()} is not primitive")

    @property
    def k(self) -> int:
        return self.pp.k

    def _render(self) -> str:
        p = self.pp.p
        terms = []
        for i in range(len(self.coeffs), -1, -1):
            c = 1 if i == len(self.coeffs) else self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                lam = "λ" if i == 1 else f"λ^{i}"
                terms.append(lam if c == 1 else f"{c}{lam}")
        return " + ".join(terms) if terms else "0"

    def __str__(self) -> str:
        return f"{self._render()} over F_{self.pp.p}"

    def compact(self) -> str:
        return self._render().replace(" ", "")

    def to_json(self) -> dict:
        return {"p": self.pp.p, "k": self.pp.k, "coeffs": list(self.coeffs)}

    def eval_at(self, v: int) -> int:
        """mu(v) mod p, including the implicit leading coefficient."""
        p = self.pp.p
        acc = 1
        for c in reversed(self.coeffs):
            acc = (acc * v + c) % p
        return acc

    def reciprocal(self) -> "PrimitivePoly":
        """The monic reciprocal polynomial lambda^k mu(1/lambda) / a_0."""
        p, k = self.pp.p, self.pp.k
        a0_inv = pow(self.coeffs[0], p - 2, p)
        full = _full_coeffs(self.coeffs)
        rev = list(reversed(full))  # constant term becomes leading
        rec = [c * a0_inv % p for c in rev]
        return PrimitivePoly(self.pp, tuple(rec[:-1]))


def enumerate_primitive(pp: PrimePower) -> list[PrimitivePoly]:
    """All monic primitive degree-k polynomials over F_p.

    Ordered lexicographically on (a_{k-1}, ..., a_0); the count is
    phi(q-1)/k.
    """
    out = []
    for high_first in product(range(pp.p), repeat=pp.k):
        coeffs = tuple(reversed(high_first))
        if poly_is_primitive(coeffs, pp):
            out.append(PrimitivePoly(pp, coeffs))
    return out
