"""Coefficient matrices of Hermitian polynomials and exact inertia by congruence.

The matrix of a bihomogeneous p of degree (d, d) lives on the monomial basis of
V(d, nvars).  Its inertia is computed block by block: monomials linked by a
nonzero coefficient form a connected block, every other basis vector is a
zero direction.  Each block is diagonalized by Lagrange reduction and the
change of basis is kept as a witness that can be re-multiplied exactly.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, field

import numpy as np

from .polyring import HermPoly, bihomogenize, dim_v, glex_key, monomial_basis
from .scalar import (
    ONE,
    ZERO,
    Complex,
    conj,
    is_zero,
    real_part,
    sign_of,
)

IMAG_UNIT = Complex(ZERO, ONE)


class AmbientError(ValueError):
    """The declared ambient space does not contain the polynomial."""


@dataclass(frozen=True)
class FormMatrix:
    ambient: tuple[int, int]
    basis: list
    entries: list

    @property
    def dim(self) -> int:
        return len(self.basis)

    def to_numpy(self) -> np.ndarray:
        return np.array([[complex(x) if isinstance(x, Complex) else float(x) for x in row] for row in self.entries])


def _nonzero(x) -> bool:
    if isinstance(x, Complex):
        return sign_of(x.re) != 0 or sign_of(x.im) != 0
    return sign_of(x) != 0


def _resolve_ambient(p: HermPoly, degree, nvars):
    if not p.is_bihomogeneous():
        if degree is not None and nvars is not None and nvars == p.nvars:
            raise AmbientError("a non-bihomogeneous polynomial needs one extra variable")
        p = bihomogenize(p, degree)
    d = p.degree() if degree is None else degree
    if p.terms and not p.is_bihomogeneous(d):
        raise AmbientError(f"polynomial is not bihomogeneous of degree ({d},{d})")
    n = p.nvars if nvars is None else nvars
    if n < p.nvars:
        raise AmbientError(f"declared {n} variables but the polynomial uses {p.nvars}")
    if n > p.nvars:
        p = p.pad(n)
    return p, d, n


def form_matrix(p: HermPoly, degree: int | None = None, nvars: int | None = None) -> FormMatrix:
    """Dense coefficient matrix: entry (alpha, beta) is c[alpha, beta]."""
    p, d, n = _resolve_ambient(p, degree, nvars)
    basis = monomial_basis(d, n)
    index = {m: i for i, m in enumerate(basis)}
    N = len(basis)
    entries = [[ZERO] * N for _ in range(N)]
    for (a, b), c in p.terms.items():
        entries[index[a]][index[b]] = c
    return FormMatrix((d, n), basis, entries)


# -----------------------------------------------------------------------------
# Congruence diagonalization
# -----------------------------------------------------------------------------
def congruence_diagonalize(M: list[list], witness: bool = True):
    """Return (diag, T) with T* M T = diag(diag) for Hermitian M.

    Pivots on a nonzero diagonal entry when one exists; otherwise replaces
    e_i by e_i + c e_j (c = 1, or i when Re a_ij = 0) to create one.
    ``T`` is None when ``witness`` is False.
    """
    n = len(M)
    A = [list(row) for row in M]
    T = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)] if witness else None
    order = []
    diag = []
    active = list(range(n))
    while active:
        piv = next((i for i in active if _nonzero(A[i][i])), None)
        if piv is None:
            pair = None
            for ii, i in enumerate(active):
                for j in active[ii + 1 :]:
                    if _nonzero(A[i][j]):
                        pair = (i, j)
                        break
                if pair:
                    break
            if pair is None:
                for i in active:
                    order.append(i)
                    diag.append(ZERO)
                break
            i, j = pair
            c = ONE if sign_of(real_part(A[i][j])) != 0 else IMAG_UNIT
            cc = conj(c)
            for r in active:
                A[r][i] = A[r][i] + A[r][j] * c
            for r in active:
                A[i][r] = A[i][r] + cc * A[j][r]
            A[i][i] = real_part(A[i][i])
            if T is not None:
                for r in range(n):
                    T[r][i] = T[r][i] + T[r][j] * c
            piv = i
        k = piv
        akk = real_part(A[k][k])
        active.remove(k)
        order.append(k)
        diag.append(akk)
        row_k = A[k]
        for j in active:
            akj = row_k[j]
            if not _nonzero(akj):
                continue
            mu = akj / akk
            mu_c = conj(mu)
            Aj = A[j]
            for l in active:
                akl = row_k[l]
                if _nonzero(akl):
                    Aj[l] = Aj[l] - mu_c * akl
            if T is not None:
                for r in range(n):
                    tk = T[r][k]
                    if not is_zero(tk):
                        T[r][j] = T[r][j] - tk * mu
        for j in active:
            A[j][j] = real_part(A[j][j])
    if T is not None:
        T = [[row[c] for c in order] for row in T]
    return diag, T


@dataclass
class CongruenceBlock:
    """One connected block: basis monomials, transform T and diagonal D."""

    basis: list
    matrix: list
    diag: list
    T: list | None

    def verify(self) -> bool:
        """Exact check that T* M T equals diag(D)."""
        if self.T is None:
            return False
        n = len(self.basis)
        M, T = self.matrix, self.T
        MT = [[sum((M[i][l] * T[l][j] for l in range(n) if not is_zero(M[i][l])), ZERO) for j in range(n)] for i in range(n)]
        for i in range(n):
            for j in range(n):
                v = sum((conj(T[l][i]) * MT[l][j] for l in range(n) if not is_zero(T[l][i])), ZERO)
                target = self.diag[i] if i == j else ZERO
                if not is_zero(v - target):
                    return False
        return True


@dataclass
class InertiaResult:
    ambient: tuple[int, int]
    A: int
    B: int
    k: int
    blocks: list = field(default_factory=list, repr=False)

    @property
    def triple(self) -> tuple[int, int, int]:
        return (self.A, self.B, self.k)

    @property
    def signature(self) -> tuple[int, int]:
        return (self.A, self.B)

    @property
    def rank(self) -> int:
        return self.A + self.B

    def verify_witness(self) -> bool:
        return all(b.verify() for b in self.blocks)

    def digest(self) -> str:
        h = hashlib.sha256()
        for b in self.blocks:
            h.update(repr(b.basis).encode())
            h.update(";".join(str(x) for x in b.diag).encode())
            if b.T is not None:
                for row in b.T:
                    h.update(",".join(str(x) for x in row).encode())
            h.update(b"|")
        return h.hexdigest()

    def transform(self):
        """Dense change of basis on the support (block-diagonal assembly)."""
        basis = [m for b in self.blocks for m in b.basis]
        n = len(basis)
        T = [[ZERO] * n for _ in range(n)]
        off = 0
        for b in self.blocks:
            s = len(b.basis)
            for i in range(s):
                for j in range(s):
                    T[off + i][off + j] = b.T[i][j]
            off += s
        return basis, T


def _blocks(p: HermPoly):
    parent: dict = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in p.terms:
        parent.setdefault(a, a)
        parent.setdefault(b, b)
    for a, b in p.terms:
        if a != b:
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
    comps: dict = {}
    for m in parent:
        comps.setdefault(find(m), []).append(m)
    out = [sorted(ms, key=glex_key, reverse=True) for ms in comps.values()]
    out.sort(key=lambda ms: glex_key(ms[0]), reverse=True)
    return out


def inertia(p: HermPoly, degree: int | None = None, nvars: int | None = None, witness: bool = True) -> InertiaResult:
    """Exact inertia triple (A, B, k) of p in V(degree, nvars).

    Defaults: the minimal ambient, i.e. p's own degree and variable count.
    A non-bihomogeneous p is bihomogenized first (one extra variable).
    """
    p, d, n = _resolve_ambient(p, degree, nvars)
    total = dim_v(d, n)
    A = B = 0
    blocks = []
    for ms in _blocks(p):
        if len(ms) == 1:
            c = p.terms.get((ms[0], ms[0]), ZERO)
            diag, T = [c], [[ONE]]
            M = [[c]]
        else:
            index = {m: i for i, m in enumerate(ms)}
            M = [[ZERO] * len(ms) for _ in ms]
            for (a, b), c in p.terms.items():
                if a in index:
                    M[index[a]][index[b]] = c
            diag, T = congruence_diagonalize(M, witness)
        for x in diag:
            s = sign_of(x)
            if s > 0:
                A += 1
            elif s < 0:
                B += 1
        blocks.append(CongruenceBlock(ms, M, diag, T))
    return InertiaResult((d, n), A, B, total - A - B, blocks)


def matrix_inertia(M: list[list], witness: bool = False) -> tuple[int, int, int]:
    """Inertia of an explicit Hermitian matrix."""
    diag, _ = congruence_diagonalize(M, witness)
    A = sum(1 for x in diag if sign_of(x) > 0)
    B = sum(1 for x in diag if sign_of(x) < 0)
    return (A, B, len(M) - A - B)


def signature_pair(p: HermPoly) -> tuple[int, int]:
    if p.is_zero():
        return (0, 0)
    return inertia(p, witness=False).signature


def rank(p: HermPoly) -> int:
    A, B = signature_pair(p)
    return A + B


def is_indefinite(p: HermPoly) -> bool:
    A, B = signature_pair(p)
    return A >= 1 and B >= 1


def eigen_oracle(m, tol: float = 1e-9) -> tuple[int, int, int]:
    """Floating inertia from numpy's Hermitian eigensolver (tests only)."""
    if isinstance(m, FormMatrix):
        arr = m.to_numpy()
    else:
        arr = np.array(
            [[complex(x) if isinstance(x, Complex) else float(x) for x in row] for row in m]
        )
    if arr.size == 0:
        return (0, 0, 0)
    w = np.linalg.eigvalsh(arr)
    scale = max(1.0, float(np.max(np.abs(w))))
    A = int(np.sum(w > tol * scale))
    B = int(np.sum(w < -tol * scale))
    return (A, B, len(w) - A - B)


__all__ = [
    "AmbientError",
    "FormMatrix",
    "InertiaResult",
    "CongruenceBlock",
    "form_matrix",
    "inertia",
    "matrix_inertia",
    "signature_pair",
    "rank",
    "is_indefinite",
    "eigen_oracle",
    "congruence_diagonalize",
]
