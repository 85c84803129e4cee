"""Concrete finite-dimensional models: effects and positive operators on C^d.

Positivity and the partial effect sum are decided spectrally.  The
eigensolver is a cyclic Jacobi iteration run on the real symmetric 2d x 2d
embedding [[Re A, -Im A], [Im A, Re A]] of a Hermitian matrix; every
eigenvalue of A shows up twice there and eigenvectors split back into real
and imaginary parts.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .algebra import (AlgebraTable, MorphismSpec, check_gea_axioms, classify_morphism,
                      induced_order, is_sub_gea)
from .errors import InputError
from .represent import build_representation, verify_injective, verify_morphism, \
    verify_order_reflecting
from .states import GeneralizedState, StateWitnessSet

HERMITIAN_TOL = 1e-9
PSD_TOL = 1e-9


@dataclass(frozen=True)
class EffectMatrix:
    """Hermitian matrix with the tolerances its positivity checks use."""

    mat: np.ndarray
    hermitian_tol: float = HERMITIAN_TOL
    psd_tol: float = PSD_TOL

    def __post_init__(self) -> None:
        arr = np.asarray(self.mat, dtype=complex)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise InputError("effect matrices must be square")
        object.__setattr__(self, "mat", arr)

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    def hermitian_defect(self) -> float:
        return float(np.max(np.abs(self.mat - self.mat.conj().T)))


def _require_hermitian(a: EffectMatrix) -> None:
    defect = a.hermitian_defect()
    if defect > a.hermitian_tol:
        raise InputError(f"matrix is not Hermitian (defect {defect:.3e})")


def _require_same_dim(a: EffectMatrix, b: EffectMatrix) -> None:
    if a.dim != b.dim:
        raise InputError(f"dimension mismatch: {a.dim} vs {b.dim}")


def jacobi_eigh(sym: np.ndarray, sweep_tol: float = 1e-14,
                max_sweeps: int = 60) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi diagonalization of a real symmetric matrix.

    Returns eigenvalues in ascending order and the matching orthonormal
    eigenvectors as columns.
    """
    a = np.array(sym, dtype=float)
    n = a.shape[0]
    v = np.eye(n)
    scale = max(1.0, float(np.max(np.abs(a))))
    for _ in range(max_sweeps):
        off = math.sqrt(max(0.0, float(np.sum(a * a) - np.sum(np.diag(a) ** 2))))
        if off <= sweep_tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                if abs(apq) < 1e-36 * abs(diff):
                    t = apq / diff
                else:
                    theta = diff / (2.0 * apq)
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0.0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for mat, rows in ((a, True), (a, False), (v, False)):
                    if rows:
                        col_p, col_q = mat[p, :].copy(), mat[q, :].copy()
                        mat[p, :] = c * col_p - s * col_q
                        mat[q, :] = s * col_p + c * col_q
                    else:
                        col_p, col_q = mat[:, p].copy(), mat[:, q].copy()
                        mat[:, p] = c * col_p - s * col_q
                        mat[:, q] = s * col_p + c * col_q
                a[p, q] = a[q, p] = 0.0
    eigvals = np.diag(a).copy()
    order = np.argsort(eigvals, kind="stable")
    return eigvals[order], v[:, order]


def _real_embedding(mat: np.ndarray) -> np.ndarray:
    x, y = mat.real, mat.imag
    return np.block([[x, -y], [y, x]])


def hermitian_spectrum(a: EffectMatrix) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (ascending, each twice) and complex eigenvectors (columns)
    of a Hermitian matrix, via the real embedding."""
    _require_hermitian(a)
    w, v = jacobi_eigh(_real_embedding(a.mat))
    d = a.dim
    vectors = v[:d, :] + 1j * v[d:, :]
    return w, vectors


def is_positive(a: EffectMatrix) -> bool:
    """Spectral positivity: the least eigenvalue clears -psd_tol."""
    w, _ = hermitian_spectrum(a)
    return bool(w[0] >= -a.psd_tol)


def is_effect(a: EffectMatrix) -> bool:
    """Effects sit between the null operator and the identity."""
    w, _ = hermitian_spectrum(a)
    return bool(w[0] >= -a.psd_tol and w[-1] <= 1.0 + a.psd_tol)


def effect_sum(a: EffectMatrix, b: EffectMatrix) -> Optional[EffectMatrix]:
    """Partial sum of the effect algebra on C^d: defined iff A + B stays at
    or below the identity (within psd_tol, boundary counted as defined)."""
    _require_same_dim(a, b)
    if not (is_effect(a) and is_effect(b)):
        raise InputError("effect_sum needs two effects between 0 and the identity")
    total = EffectMatrix(a.mat + b.mat, a.hermitian_tol, a.psd_tol)
    w, _ = hermitian_spectrum(total)
    if w[-1] > 1.0 + a.psd_tol:
        return None
    return total


def gdh_sum(a: EffectMatrix, b: EffectMatrix) -> EffectMatrix:
    """Total sum in the algebra of positive operators."""
    _require_same_dim(a, b)
    if not (is_positive(a) and is_positive(b)):
        raise InputError("gdh_sum needs two positive operators")
    return EffectMatrix(a.mat + b.mat, a.hermitian_tol, a.psd_tol)


def vector_witness(a: EffectMatrix, b: EffectMatrix) -> Optional[np.ndarray]:
    """Unit vector x with <x, A x> > <x, B x> when A is not below B.

    Returns None exactly when B - A is positive.  The witness is an
    eigenvector of B - A for its most negative eigenvalue.
    """
    _require_same_dim(a, b)
    diff = EffectMatrix(b.mat - a.mat, a.hermitian_tol, a.psd_tol)
    w, vectors = hermitian_spectrum(diff)
    if w[0] >= -diff.psd_tol:
        return None
    x = vectors[:, 0]
    return x / np.linalg.norm(x)


def generalized_vector_state(x: np.ndarray, a: EffectMatrix) -> float:
    """The value <x, A x>, real for Hermitian A."""
    return float(np.real(np.vdot(x, a.mat @ x)))


def random_positive_matrix(rng: random.Random, dim: int,
                           psd_tol: float = PSD_TOL) -> EffectMatrix:
    """Seeded random positive matrix G*G / d, spectral radius at most 2d."""
    g = np.array([[complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
                   for _ in range(dim)] for _ in range(dim)])
    return EffectMatrix((g.conj().T @ g) / dim, psd_tol=psd_tol)


def random_vector(rng: random.Random, dim: int) -> np.ndarray:
    return np.array([complex(rng.uniform(-1, 1), rng.uniform(-1, 1))
                     for _ in range(dim)])


def _exact_diag_value(mat: np.ndarray, k: int) -> Fraction:
    value = mat[k, k].real
    nearest = round(value)
    assert abs(value - nearest) < 1e-12
    return Fraction(nearest)


def projector_demo_matrices() -> dict[str, EffectMatrix]:
    zero = EffectMatrix(np.zeros((2, 2)))
    pi1 = EffectMatrix(np.diag([1.0, 0.0]).astype(complex))
    pi2 = EffectMatrix(np.diag([0.0, 1.0]).astype(complex))
    ident = EffectMatrix(np.eye(2, dtype=complex))
    return {"0": zero, "pi1": pi1, "pi2": pi2, "id": ident}


def projector_table() -> AlgebraTable:
    """The three-element algebra {0, pi1, pi2} carrying only zero sums."""
    sums = {(0, 0): 0, (0, 1): 1, (1, 0): 1, (0, 2): 2, (2, 0): 2}
    return AlgebraTable(("0", "pi1", "pi2"), 0, sums)


def table_from_effects(labels: list[str], mats: dict[str, EffectMatrix],
                       unit: Optional[str] = None) -> AlgebraTable:
    """Restrict the effect-algebra partial sum to a finite set of matrices:
    a sum is recorded when it is defined and lands back in the set."""
    sums = {}
    for i, la in enumerate(labels):
        for j, lb in enumerate(labels):
            total = effect_sum(mats[la], mats[lb])
            if total is None:
                continue
            for k, lc in enumerate(labels):
                if np.allclose(total.mat, mats[lc].mat, atol=1e-12):
                    sums[(i, j)] = k
                    break
    unit_index = labels.index(unit) if unit is not None else None
    return AlgebraTable(tuple(labels), labels.index("0"), sums, unit_index)


def demo_excd() -> dict:
    """End-to-end demonstration on the two orthogonal projectors of C^2.

    The three-element projector algebra has an order determining set of
    vector states, and its inclusion into the surrounding four-element effect
    fragment is an order reflecting morphism but not an embedding.
    """
    mats = projector_demo_matrices()
    table = projector_table()
    axioms = check_gea_axioms(table)

    basis_states = []
    inner_products: dict[str, dict[str, str]] = {}
    for k, name in ((0, "e1"), (1, "e2")):
        values = tuple(_exact_diag_value(mats[lab].mat, k) for lab in table.elements)
        basis_states.append(GeneralizedState(values))
        inner_products[name] = {lab: str(v) for lab, v in zip(table.elements, values)}

    order = induced_order(table)
    witnesses = StateWitnessSet(goal="order")
    witnesses.states = list(basis_states)
    for a, b in order.pairs_not_leq():
        slot = next((i for i, s in enumerate(witnesses.states)
                     if s.values[a] > s.values[b]), None)
        if slot is None:
            witnesses.failures.append((a, b))
        else:
            witnesses.provenance[(a, b)] = slot

    extended = table_from_effects(["0", "pi1", "pi2", "id"], mats, unit="id")
    inclusion = classify_morphism(MorphismSpec(table, extended, (0, 1, 2)))
    closed, triple = is_sub_gea([0, 1, 2], extended)

    rep = build_representation(table, witnesses)
    rep_morphism = verify_morphism(rep, table)
    rep_injective, _ = verify_injective(rep)
    rep_order, _ = verify_order_reflecting(rep, table)

    sum_12 = effect_sum(mats["pi1"], mats["pi2"])
    sum_label = None
    if sum_12 is not None and np.allclose(sum_12.mat, mats["id"].mat):
        sum_label = "id"

    return {
        "gea_axioms_pass": axioms.passed,
        "order_determining_found": witnesses.ok,
        "vector_states": inner_products,
        "sum_pi1_pi2": sum_label,
        "is_morphism": inclusion.is_morphism,
        "injective": inclusion.injective,
        "order_reflecting": inclusion.order_reflecting,
        "embedding": inclusion.embedding,
        "sub_gea_closed": closed,
        "sub_gea_violation": [extended.elements[i] for i in triple] if triple else None,
        "representation": {
            "morphism": rep_morphism.passed,
            "injective": rep_injective,
            "order_reflecting": rep_order,
        },
    }
