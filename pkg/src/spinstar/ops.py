"""Bitmask spin-1/2 operator plumbing for the ring and the full star.

Basis conventions used everywhere:
  * ring basis states are integers, bit i = spin i, bit value 1 = up;
  * the full star space is ordered qubit (x) ring, index q * 2**N + r,
    with qubit index 0 = up;
  * ladder operators follow the standard convention with real positive
    matrix elements, s^- |up> = |down>.
"""

from __future__ import annotations

import numpy as np
import scipy.sparse as sparse


def sector_states(n_sites: int, n_up: int) -> np.ndarray:
    """Sorted basis states of the S^z sector with ``n_up`` up spins."""
    states = [s for s in range(1 << n_sites) if bin(s).count("1") == n_up]
    return np.asarray(states, dtype=np.int64)


def _index_map(states: np.ndarray) -> dict:
    return {int(s): i for i, s in enumerate(states)}


def sector_ring_hamiltonian(n_sites: int, states: np.ndarray) -> np.ndarray:
    """Ring Heisenberg Hamiltonian (1/N) sum_i s_i.s_{i+1} in one S^z sector.

    Dimensionless: the returned matrix is H_B divided by the ring coupling.
    The bond sum runs i = 0..N-1 with periodic wrap, so N = 2 counts its
    single bond twice.
    """
    dim = len(states)
    idx = _index_map(states)
    h = np.zeros((dim, dim))
    for col, s in enumerate(states):
        s = int(s)
        for i in range(n_sites):
            j = (i + 1) % n_sites
            bi = (s >> i) & 1
            bj = (s >> j) & 1
            if bi == bj:
                h[col, col] += 0.25
            else:
                h[col, col] -= 0.25
                flipped = s ^ ((1 << i) | (1 << j))
                h[idx[flipped], col] += 0.5
    return h / n_sites


def sector_total_spin_sq(n_sites: int, states: np.ndarray) -> np.ndarray:
    """Total-spin operator S^2 of the ring restricted to one S^z sector."""
    dim = len(states)
    idx = _index_map(states)
    n_up = bin(int(states[0])).count("1")
    m = n_up - n_sites / 2.0
    s2 = np.zeros((dim, dim))
    np.fill_diagonal(s2, m * m + n_sites / 2.0)
    for col, s in enumerate(states):
        s = int(s)
        for i in range(n_sites):
            if (s >> i) & 1:
                continue
            for j in range(n_sites):
                if i == j or not ((s >> j) & 1):
                    continue
                # s_i^+ s_j^- moves one up spin from site j to site i
                flipped = s ^ ((1 << i) | (1 << j))
                s2[idx[flipped], col] += 1.0
    return s2


def lowering_operator(n_sites: int) -> sparse.csr_matrix:
    """Total-spin lowering operator S^- = sum_i s_i^- on the full ring space."""
    dim = 1 << n_sites
    rows, cols = [], []
    for s in range(dim):
        for i in range(n_sites):
            if (s >> i) & 1:
                rows.append(s ^ (1 << i))
                cols.append(s)
    data = np.ones(len(rows))
    return sparse.csr_matrix((data, (rows, cols)), shape=(dim, dim))


def ring_hamiltonian_full(n_sites: int) -> sparse.csr_matrix:
    """Dimensionless ring Hamiltonian on the full 2**N space (sparse)."""
    dim = 1 << n_sites
    mat = sparse.dok_matrix((dim, dim))
    for s in range(dim):
        for i in range(n_sites):
            j = (i + 1) % n_sites
            bi = (s >> i) & 1
            bj = (s >> j) & 1
            if bi == bj:
                mat[s, s] += 0.25
            else:
                mat[s, s] -= 0.25
                mat[s ^ ((1 << i) | (1 << j)), s] += 0.5
    return (mat / n_sites).tocsr()


def total_spin_components(n_sites: int):
    """Ring total-spin components (S_x, S_y, S_z) as sparse matrices."""
    dim = 1 << n_sites
    minus = lowering_operator(n_sites)
    plus = minus.T.tocsr()
    sx = 0.5 * (plus + minus)
    sy = -0.5j * (plus - minus)
    sz = sparse.diags(
        [bin(s).count("1") - n_sites / 2.0 for s in range(dim)], format="csr"
    )
    return sx, sy, sz


def star_hamiltonian(n_sites: int, k: float, g: float) -> sparse.csr_matrix:
    """Full star Hamiltonian H = H_B + (g/N) (sigma/2).S on qubit (x) ring."""
    pauli = {
        "x": np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
        "y": np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
        "z": np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
    }
    ring_h = ring_hamiltonian_full(n_sites)
    eye_q = sparse.identity(2, format="csr")
    h = sparse.kron(eye_q, k * ring_h, format="csr").astype(complex)
    for axis, comp in zip("xyz", total_spin_components(n_sites)):
        h = h + (g / n_sites) * sparse.kron(0.5 * pauli[axis], comp, format="csr")
    return h.tocsr()


def reduced_qubit_density(amplitudes: np.ndarray) -> np.ndarray:
    """Trace the ring out of a pure star state; returns the 2x2 qubit matrix."""
    psi = np.asarray(amplitudes, dtype=complex).reshape(2, -1)
    return psi @ psi.conj().T
