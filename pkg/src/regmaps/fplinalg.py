"""Vectors and matrices over F_p; the companion-transpose matrix of a
primitive polynomial and its identities.

Matrices are dense and tiny (k <= 16 at desk scale), stored row-major
as tuples of tuples.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ffield import PrimePower, PrimitivePoly, factorize


@dataclass(frozen=True)
class VecFp:
    """Column vector over F_p."""

    pp: PrimePower
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        p = self.pp.p
        if any(not 0 <= e < p for e in self.entries):
            raise ValueError("vector entries not reduced mod p")

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class MatFp:
    """Square matrix over F_p, row-major."""

    pp: PrimePower
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.rows)
        p = self.pp.p
        for row in self.rows:
            if len(row) != n:
                raise ValueError("matrix is not square")
            if any(not 0 <= e < p for e in row):
                raise ValueError("matrix entries not reduced mod p")

    @property
    def n(self) -> int:
        return len(self.rows)


def zero_vector(pp: PrimePower, n: int) -> VecFp:
    return VecFp(pp, (0,) * n)


def unit_vector(pp: PrimePower, n: int, i: int) -> VecFp:
    """The i-th unit vector e_i, 1-indexed."""
    if not 1 <= i <= n:
        raise ValueError(f"unit vector index {i} out of range 1..{n}")
    return VecFp(pp, tuple(1 if j == i - 1 else 0 for j in range(n)))


def identity_matrix(pp: PrimePower, n: int) -> MatFp:
    return MatFp(pp, tuple(tuple(1 if i == j else 0 for j in range(n))
                           for i in range(n)))


def vec_add(u: VecFp, v: VecFp) -> VecFp:
    if u.pp.p != v.pp.p or len(u) != len(v):
        raise ValueError("vector dimension/field mismatch")
    p = u.pp.p
    return VecFp(u.pp, tuple((a + b) % p for a, b in zip(u.entries, v.entries)))


def vec_neg(v: VecFp) -> VecFp:
    p = v.pp.p
    return VecFp(v.pp, tuple((-a) % p for a in v.entries))


def mat_apply(A: MatFp, v: VecFp) -> VecFp:
    if A.n != len(v):
        raise ValueError("matrix/vector dimension mismatch")
    p = A.pp.p
    return VecFp(A.pp, tuple(sum(a * b for a, b in zip(row, v.entries)) % p
                             for row in A.rows))


def mat_mul(A: MatFp, B: MatFp) -> MatFp:
    if A.n != B.n:
        raise ValueError("matrix dimension mismatch")
    p = A.pp.p
    n = A.n
    bt = list(zip(*B.rows))
    return MatFp(A.pp, tuple(
        tuple(sum(a * b for a, b in zip(row, col)) % p for col in bt)
        for row in A.rows))


def mat_inverse(A: MatFp) -> MatFp:
    """Inverse by Gauss-Jordan elimination; raises on singular input."""
    p, n = A.pp.p, A.n
    aug = [list(row) + [1 if i == j else 0 for j in range(n)]
           for i, row in enumerate(A.rows)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = pow(aug[col][col], p - 2, p)
        aug[col] = [x * inv % p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [(x - f * y) % p for x, y in zip(aug[r], aug[col])]
    return MatFp(A.pp, tuple(tuple(row[n:]) for row in aug))


def mat_pow(A: MatFp, e: int) -> MatFp:
    """A^e by square-and-multiply; negative e goes through the inverse."""
    if e < 0:
        return mat_pow(mat_inverse(A), -e)
    result = identity_matrix(A.pp, A.n)
    base = A
    while e > 0:
        if e & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        e >>= 1
    return result


def companion_transpose(mu: PrimitivePoly) -> MatFp:
    """The transpose of the standard companion matrix of mu.

    Subdiagonal ones, last column (-a_0, ..., -a_{k-1}); its
    characteristic polynomial is mu and its order is q-1.
    """
    p, k = mu.pp.p, mu.pp.k
    rows = []
    for i in range(k):
        row = [0] * k
        if i > 0:
            row[i - 1] = 1
        row[k - 1] = (-mu.coeffs[i]) % p
        rows.append(tuple(row))
    return MatFp(mu.pp, tuple(rows))


def char_poly(A: MatFp) -> tuple[int, ...]:
    """Coefficients (c_0, ..., c_{n-1}) of det(lambda*I - A), monic implicit.

    Berkowitz's division-free algorithm, valid in any characteristic.
    """
    p, n = A.pp.p, A.n
    M = [list(row) for row in A.rows]
    # poly holds coefficients highest degree first
    poly = [1]
    for i in range(n):
        # leading principal i x i block, row/column strips, corner entry
        R = M[i][:i]
        C = [M[r][i] for r in range(i)]
        a = M[i][i]
        # first column of the Toeplitz matrix: 1, -a, -R C, -R M_i C, ...
        col = [1, (-a) % p]
        vec = C[:]
        for _ in range(i):
            col.append((-sum(r * v for r, v in zip(R, vec))) % p)
            vec = [sum(M[r][c] * vec[c] for c in range(i)) % p for r in range(i)]
        # multiply the (i+2) x (i+1) Toeplitz matrix into poly
        new = [0] * (i + 2)
        for r in range(i + 2):
            s = 0
            for c in range(min(r, i) + 1):
                s += col[r - c] * poly[c]
            new[r] = s % p
        poly = new
    # poly = coefficients of char poly, highest first; normalize layout
    low_first = list(reversed(poly))
    assert low_first[-1] == 1
    return tuple(low_first[:-1])


def matrix_order(A: MatFp, multiple: int | None = None) -> int:
    """Least n >= 1 with A^n = I.

    With a known multiple of the order (q-1 for companion matrices of
    primitive polynomials), uses factored-order descent; otherwise
    iterates.
    """
    I = identity_matrix(A.pp, A.n)
    mat_inverse(A)  # raises on singular input
    if multiple is not None:
        if mat_pow(A, multiple) != I:
            raise ValueError(f"{multiple} is not a multiple of the order")
        order = multiple
        for r, e in factorize(multiple).items():
            for _ in range(e):
                if mat_pow(A, order // r) == I:
                    order //= r
                else:
                    break
        return order
    B = A
    n = 1
    bound = A.pp.p ** (A.n * A.n)
    while B != I:
        B = mat_mul(B, A)
        n += 1
        if n > bound:
            raise RuntimeError("order iteration exceeded group bound")
    return n
