"""Seeded random matrices for tests, self-checks and experiments.

All generators take a ``numpy.random.Generator`` so runs are reproducible.
"""

from __future__ import annotations

import numpy as np

__all__ = [
    "random_complex",
    "random_hermitian",
    "random_psd",
    "random_density",
    "random_pure",
    "random_unitary",
    "random_kraus_set",
]


def random_complex(rng: np.random.Generator, d: int) -> np.ndarray:
    """Complex matrix with independent standard-normal real and imaginary parts."""
    return rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))


def random_hermitian(rng: np.random.Generator, d: int) -> np.ndarray:
    G = random_complex(rng, d)
    return (G + G.conj().T) / 2


def random_psd(rng: np.random.Generator, d: int) -> np.ndarray:
    G = random_complex(rng, d)
    return G.conj().T @ G


def random_density(rng: np.random.Generator, d: int) -> np.ndarray:
    """Unit-trace PSD matrix."""
    B = random_psd(rng, d)
    return B / np.trace(B).real


def random_pure(rng: np.random.Generator, d: int) -> np.ndarray:
    """Rank-one unit-trace projector onto a random state vector."""
    psi = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    psi /= np.linalg.norm(psi)
    return np.outer(psi, psi.conj())


def random_unitary(rng: np.random.Generator, d: int) -> np.ndarray:
    """Haar-distributed unitary via QR with the standard phase fix."""
    Q, R = np.linalg.qr(random_complex(rng, d))
    phases = np.diag(R).copy()
    phases /= np.abs(phases)
    return Q * phases


def random_kraus_set(
    rng: np.random.Generator, d: int, n_outcomes: int
) -> list[np.ndarray]:
    """Random complete measurement: operators ``M_m`` with ``sum M_m^dag M_m = I``.

    Draws independent complex matrices ``G_m`` and right-normalizes by
    ``S^{-1/2}`` where ``S = sum G_m^dag G_m``.
    """
    if n_outcomes < 1:
        raise ValueError("need at least one outcome")
    Gs = [random_complex(rng, d) for _ in range(n_outcomes)]
    S = sum(G.conj().T @ G for G in Gs)
    w, V = np.linalg.eigh(S)
    S_inv_half = (V / np.sqrt(w)) @ V.conj().T
    return [G @ S_inv_half for G in Gs]
