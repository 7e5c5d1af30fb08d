"""Matrix embeddings: the map Psi_k into M_{N^k} (x) O_N, the homogeneous
matrix-coefficient decomposition, and operator norms of gauge-homogeneous
elements via exact embedding plus power iteration."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from .algebra import AlgebraElement, Monomial, Word, words
from .errors import (ConvergenceError, DimensionCapError, NotHomogeneousError)
from .scalars import GaussianRational

DIM_CAP = 1024
POWER_TOL = 1e-12
POWER_MAX_ITER = 10_000


@dataclass(frozen=True)
class OperatorMatrix:
    """N^k x N^k array of algebra elements, rows/columns indexed by the
    length-k words in lexicographic order."""

    n_gens: int
    k: int
    entries: Tuple[Tuple[AlgebraElement, ...], ...]

    @property
    def dim(self) -> int:
        return self.n_gens ** self.k

    def __eq__(self, other) -> bool:
        if not isinstance(other, OperatorMatrix):
            return NotImplemented
        if (self.n_gens, self.k) != (other.n_gens, other.k):
            return False
        return all(a == b for row_a, row_b in zip(self.entries, other.entries)
                   for a, b in zip(row_a, row_b))

    def matmul(self, other: "OperatorMatrix") -> "OperatorMatrix":
        d = self.dim
        rows = []
        for i in range(d):
            row = []
            for j in range(d):
                acc = AlgebraElement.zero(self.n_gens)
                for t in range(d):
                    acc = acc + self.entries[i][t] * other.entries[t][j]
                row.append(acc)
            rows.append(tuple(row))
        return OperatorMatrix(self.n_gens, self.k, tuple(rows))

    def conjugate_transpose(self) -> "OperatorMatrix":
        d = self.dim
        return OperatorMatrix(self.n_gens, self.k, tuple(
            tuple(self.entries[j][i].adjoint() for j in range(d)) for i in range(d)
        ))


def psi(x: AlgebraElement, k: int) -> OperatorMatrix:
    """Psi_k(X): entry (K, M) = s_K^* X s_M."""
    n = x.n_gens
    basis = [AlgebraElement.isometry(n, w) for w in words(n, k)]
    rows = tuple(
        tuple(sk.adjoint() * x * sm for sm in basis) for sk in basis
    )
    return OperatorMatrix(n, k, rows)


def embed_degree0(x: AlgebraElement) -> np.ndarray:
    """Level a degree-0 element to bidegree (m, m) and return its complex
    matrix in M_{N^m} (lexicographic word order)."""
    if any(d != 0 for d in x.degrees()):
        raise NotHomogeneousError("embed_degree0 requires gauge degree 0")
    n = x.n_gens
    m = x.max_right_length(0)
    dim = n ** m
    if dim > DIM_CAP:
        raise DimensionCapError(f"matrix dimension {dim} exceeds cap {DIM_CAP}")
    lev = x.level({0: m})
    out = np.zeros((dim, dim), dtype=complex)
    index = {w: i for i, w in enumerate(words(n, m))}
    for mono, c in lev.terms.items():
        out[index[mono.left], index[mono.right]] = complex(c)
    return out


def exact_degree0_matrix(x: AlgebraElement) -> Dict[Tuple[Word, Word], GaussianRational]:
    """Exact coefficient dictionary of the leveled degree-0 matrix, used
    when the decomposition must be reconstructed without rounding."""
    if any(d != 0 for d in x.degrees()):
        raise NotHomogeneousError("requires gauge degree 0")
    lev = x.level({0: x.max_right_length(0)})
    return {(m.left, m.right): c for m, c in lev.terms.items()}


def largest_eigenvalue(mat: np.ndarray) -> float:
    """Top eigenvalue of a positive semidefinite matrix by power iteration
    (all-ones seed, tolerance 1e-12, iteration cap 10^4)."""
    dim = mat.shape[0]
    if dim == 0:
        return 0.0
    v = np.ones(dim, dtype=complex) / np.sqrt(dim)
    prev = 0.0
    for _ in range(POWER_MAX_ITER):
        w = mat @ v
        norm = float(np.linalg.norm(w))
        if norm < POWER_TOL:
            return 0.0
        v = w / norm
        val = float(np.real(np.conjugate(v) @ (mat @ v)))
        if abs(val - prev) <= POWER_TOL * max(1.0, abs(val)):
            return val
        prev = val
    raise ConvergenceError("power iteration did not converge")


def operator_norm(x: AlgebraElement) -> float:
    """||X|| for gauge-homogeneous X, via the positive matrix of X^* X."""
    degs = x.degrees()
    if len(degs) > 1:
        raise NotHomogeneousError("operator_norm requires a homogeneous element")
    if not degs:
        return 0.0
    gram = embed_degree0(x.adjoint() * x)
    return float(np.sqrt(max(largest_eigenvalue(gram), 0.0)))


def norm_bounds(x: AlgebraElement) -> Tuple[float, float]:
    """(lower, upper) bounds for a possibly mixed element: max and sum of
    the homogeneous component norms."""
    norms = [operator_norm(c) for c in x.gauge_components().values()]
    if not norms:
        return (0.0, 0.0)
    return (max(norms), sum(norms))


@dataclass(frozen=True)
class HomogeneousDecomposition:
    """Psi_k(X) = sum_J T_J (x) s_J (degree > 0), T (x) 1 (degree 0), or
    the s_J^* form (degree < 0).  Parts are kept exactly; numeric() rounds."""

    n_gens: int
    k: int
    degree: int
    parts: Dict[Word, Dict[Tuple[Word, Word], GaussianRational]]

    @property
    def direction(self) -> str:
        if self.degree > 0:
            return "creation"
        if self.degree < 0:
            return "annihilation"
        return "scalar"

    def numeric(self) -> Dict[Word, np.ndarray]:
        dim = self.n_gens ** self.k
        index = {w: i for i, w in enumerate(words(self.n_gens, self.k))}
        out = {}
        for j_word, coeffs in self.parts.items():
            mat = np.zeros((dim, dim), dtype=complex)
            for (row, col), c in coeffs.items():
                mat[index[row], index[col]] = complex(c)
            out[j_word] = mat
        return out

    def part_norms(self) -> Dict[Word, float]:
        return {j: float(np.sqrt(max(largest_eigenvalue(m.conj().T @ m), 0.0)))
                for j, m in self.numeric().items()}

    def reconstruct_psi(self) -> OperatorMatrix:
        """Rebuild sum_J T_J (x) s_J as an OperatorMatrix for comparison
        against psi(X, k)."""
        n, k = self.n_gens, self.k
        basis = list(words(n, k))
        index = {w: i for i, w in enumerate(basis)}
        zero = AlgebraElement.zero(n)
        grid: List[List[AlgebraElement]] = [[zero] * len(basis) for _ in basis]
        for j_word, coeffs in self.parts.items():
            if self.degree > 0:
                tensor = AlgebraElement.isometry(n, j_word)
            elif self.degree < 0:
                tensor = AlgebraElement.isometry(n, j_word).adjoint()
            else:
                tensor = AlgebraElement.one(n)
            for (row, col), c in coeffs.items():
                i, j = index[row], index[col]
                grid[i][j] = grid[i][j] + tensor.scaled(c)
        return OperatorMatrix(n, k, tuple(tuple(r) for r in grid))


def homogeneous_parts(x: AlgebraElement, k: int) -> HomogeneousDecomposition:
    """Extract the matrix coefficients T_J of Psi_k(X) for homogeneous X of
    degree d = p - l with k >= max(p, l): entry (K, M) of Psi_k(X) equals
    sum_J (T_J)_{K,M} s_J with |J| = |d|."""
    degs = x.degrees()
    if len(degs) > 1:
        raise NotHomogeneousError("decomposition requires a homogeneous element")
    d = next(iter(degs), 0)
    n = x.n_gens
    mat = psi(x, k)
    absd = abs(d)
    parts: Dict[Word, Dict[Tuple[Word, Word], GaussianRational]] = {}
    basis = list(words(n, k))
    for i, kw in enumerate(basis):
        for j, mw in enumerate(basis):
            entry = mat.entries[i][j]
            if entry.is_zero():
                continue
            # entry = sum_J c_J s_J (d>0) / c_J s_J^* (d<0) / c * 1 (d=0);
            # read coefficients off the canonical contraction
            canon = entry.canonical()
            for mono, c in canon.terms.items():
                if d > 0:
                    if len(mono.left) != absd or mono.right:
                        raise NotHomogeneousError(
                            f"k={k} too small: residual monomial {mono} in entry")
                    j_word = mono.left
                elif d < 0:
                    if len(mono.right) != absd or mono.left:
                        raise NotHomogeneousError(
                            f"k={k} too small: residual monomial {mono} in entry")
                    j_word = mono.right
                else:
                    if mono.left or mono.right:
                        raise NotHomogeneousError(
                            f"k={k} too small: residual monomial {mono} in entry")
                    j_word = ()
                parts.setdefault(j_word, {})[(kw, mw)] = c
    return HomogeneousDecomposition(n, k, d, parts)
