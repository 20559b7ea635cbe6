"""Floating-point cross-check of integrability using explicit sl(n) matrices.

Nothing here feeds back into the exact code; it only evaluates the Nijenhuis
tensor on +i eigenvectors and reports whether it vanishes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

import numpy as np

from .errors import FlagGCSError, InvalidRootSystem
from .roots import RootSystem, root_system
from .structures import InvariantGCS, eigenspace_basis

BUILD_TOL = 1e-12
NIJENHUIS_TOL = 1e-9


def _unit(n: int, i: int, j: int) -> np.ndarray:
    m = np.zeros((n, n), dtype=complex)
    m[i, j] = 1
    return m


def bracket(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return x @ y - y @ x


@dataclass
class RootData:
    i: int
    j: int
    X: np.ndarray
    Xneg: np.ndarray
    A: np.ndarray
    S: np.ndarray
    H: np.ndarray
    k: float


@dataclass
class SlnRealization:
    n: int
    lambdas: tuple
    H: np.ndarray
    algebra: RootSystem
    roots: dict = field(default_factory=dict)  # positive root (simple coords) -> RootData
    tol: float = BUILD_TOL

    def killing(self, x: np.ndarray, y: np.ndarray) -> complex:
        return 2 * self.n * np.trace(x @ y)


def default_lambdas(n: int) -> tuple:
    return tuple(Fraction(n - 1 - 2 * i, 2) for i in range(n))


def root_of_pair(n: int, i: int, j: int) -> tuple:
    """Simple-root coordinates of ``e_i - e_j`` (i < j, 0-based) in A_{n-1}."""
    return tuple(1 if i <= t < j else 0 for t in range(n - 1))


def realize(n: int, lambdas: Optional[Sequence] = None, tol: float = BUILD_TOL) -> SlnRealization:
    if n < 2:
        raise InvalidRootSystem("sl(n) needs n >= 2")
    lambdas = default_lambdas(n) if lambdas is None else tuple(Fraction(l) for l in lambdas)
    if len(lambdas) != n:
        raise FlagGCSError(f"expected {n} eigenvalues, got {len(lambdas)}")
    if len(set(lambdas)) != n:
        raise FlagGCSError("eigenvalues must be distinct (H must be regular)")
    if sum(lambdas) != 0:
        raise FlagGCSError("eigenvalues must sum to zero")
    H = np.diag([1j * float(l) for l in lambdas])
    real = SlnRealization(n, lambdas, H, root_system(f"A{n - 1}"), tol=tol)
    scale = 1 / np.sqrt(2 * n)
    for i in range(n):
        for j in range(i + 1, n):
            X, Y = _unit(n, i, j) * scale, _unit(n, j, i) * scale
            Ha = (_unit(n, i, i) - _unit(n, j, j)) / (2 * n)
            k = 1 / (2j * real.killing(H, Ha))
            real.roots[root_of_pair(n, i, j)] = RootData(i, j, X, Y, X - Y, 1j * (X + Y), Ha, k)
    _verify(real)
    return real


def _close(value, target, tol) -> bool:
    return abs(complex(value) - complex(target)) <= tol


def _verify(real: SlnRealization) -> None:
    tol = real.tol
    n = real.n
    probes = [np.diag([complex(t) for t in row]) for row in np.eye(n)]
    for root, r in real.roots.items():
        checks = {
            "<X, X_-> = 1": _close(real.killing(r.X, r.Xneg), 1, tol),
            "k real": abs(np.imag(r.k)) <= tol,
            "<A, A> = -2": _close(real.killing(r.A, r.A), -2, tol),
            "<S, S> = -2": _close(real.killing(r.S, r.S), -2, tol),
            "k <H, [A, S]> = 1": _close(r.k * real.killing(real.H, bracket(r.A, r.S)), 1, tol),
        }
        for p in probes:
            alpha_p = p[r.i, r.i] - p[r.j, r.j]
            checks.setdefault("alpha(H') = <H_alpha, H'>", True)
            if not _close(alpha_p, real.killing(r.H, p), tol):
                checks["alpha(H') = <H_alpha, H'>"] = False
        failed = [name for name, ok in checks.items() if not ok]
        if failed:
            raise FlagGCSError(f"realization check failed at root {list(root)}: {', '.join(failed)}")


def kks_dual(real: SlnRealization, root, X: np.ndarray) -> tuple[complex, complex]:
    """Coordinates ``(c3, c4)`` of ``k omega(X, .)`` in the ``(-S*, A*)`` basis."""
    r = real.roots[tuple(root)]
    on_a = r.k * real.killing(real.H, bracket(X, r.A))
    on_s = r.k * real.killing(real.H, bracket(X, r.S))
    # validate by decomposing X and comparing with the dual-basis prediction
    coeffs = np.linalg.lstsq(
        np.stack([r.A.ravel(), r.S.ravel()], axis=1), X.ravel(), rcond=None
    )[0]
    if np.linalg.norm(coeffs[0] * r.A + coeffs[1] * r.S - X) > real.tol * max(1.0, np.linalg.norm(X)):
        raise FlagGCSError("kks_dual input is not in the root space")
    predicted = (-coeffs[1], coeffs[0])
    if not (_close(on_a, predicted[0], real.tol * 10) and _close(on_s, predicted[1], real.tol * 10)):
        raise FlagGCSError("dual-basis check failed in kks_dual")
    return complex(on_a), complex(on_s)


def split(real: SlnRealization, root, v: Sequence) -> tuple[np.ndarray, np.ndarray, float]:
    """Vector part and matrix of the form part of a block-coordinate vector."""
    r = real.roots[tuple(root)]
    c1, c2, c3, c4 = (complex(t) for t in v)
    return c1 * r.A + c2 * r.S, c4 * r.A - c3 * r.S, r.k


def nijenhuis(real: SlnRealization, a, b, c) -> complex:
    """``a``, ``b``, ``c`` are ``(root, vector)`` pairs in block coordinates."""
    A1, A2, ka = split(real, *a)
    B1, B2, kb = split(real, *b)
    C1, C2, kc = split(real, *c)
    H = real.H
    return complex(
        kc * real.killing(H, bracket(C2, bracket(A1, B1)))
        + ka * real.killing(H, bracket(A2, bracket(B1, C1)))
        + kb * real.killing(H, bracket(B2, bracket(C1, A1)))
    ) / 12


def _numeric_basis(block) -> list[np.ndarray]:
    out = []
    for v in eigenspace_basis(block):
        arr = np.array([complex(t) for t in v])
        out.append(arr / np.linalg.norm(arr))
    return out


def triple_residuals(real: SlnRealization, j: InvariantGCS) -> list[tuple[tuple, float]]:
    """Largest ``|N|`` over eigenvector choices, per additive triple."""
    out = []
    for a, b, c in j.algebra.triples:
        m = 0.0
        for va, vb, vc in product(_numeric_basis(j[a]), _numeric_basis(j[b]), _numeric_basis(j[c])):
            m = max(m, abs(nijenhuis(real, (a, va), (b, vb), (c, vc))))
        out.append(((a, b, c), m))
    return out


def numeric_integrability(real: SlnRealization, j: InvariantGCS, tol: float = NIJENHUIS_TOL) -> bool:
    if j.algebra != real.algebra:
        raise InvalidRootSystem(f"oracle realizes {real.algebra.name}, structure is on {j.algebra.name}")
    return all(m < tol for _, m in triple_residuals(real, j))


def failing_triples(real: SlnRealization, j: InvariantGCS, tol: float = NIJENHUIS_TOL) -> list[tuple]:
    return [t for t, m in triple_residuals(real, j) if m >= tol]


def realization_for(rs: RootSystem, tol: float = BUILD_TOL) -> SlnRealization:
    if rs.family != "A":
        raise InvalidRootSystem(f"the oracle only realizes type A, got {rs.name}")
    return realize(rs.rank + 1, tol=tol)
