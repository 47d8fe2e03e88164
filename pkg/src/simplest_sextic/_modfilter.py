"""Batched determinants modulo a word-sized prime (numpy int64).

Used only to *reject* box-search candidates: if a determinant differs from
every admissible target mod p, it differs over Z as well.
"""

import numpy as np

PRIME = 2_147_483_647  # 2**31 - 1; products of two residues stay below 2**62


def _powmod(base, exp, p):
    result = np.ones_like(base)
    base = base % p
    while exp:
        if exp & 1:
            result = result * base % p
        base = base * base % p
        exp >>= 1
    return result


def batch_det_mod(a, p=PRIME):
    """Determinants mod ``p`` of a stack of square matrices, shape (N, n, n)."""
    a = np.array(a, dtype=np.int64) % p
    n_mat, n, _ = a.shape
    det = np.ones(n_mat, dtype=np.int64)
    idx = np.arange(n_mat)
    for k in range(n):
        nz = a[:, k:, k] != 0
        has = nz.any(axis=1)
        det[~has] = 0
        piv = nz.argmax(axis=1) + k
        swap = piv != k
        if swap.any():
            rk = a[idx, k].copy()
            a[idx, k] = a[idx, piv]
            a[idx, piv] = rk
            det = np.where(swap, (p - det) % p, det)
        pivot = a[:, k, k]
        det = det * pivot % p
        if k == n - 1:
            break
        inv = _powmod(pivot, p - 2, p)
        factors = a[:, k + 1 :, k] * inv[:, None] % p
        a[:, k + 1 :, :] = (a[:, k + 1 :, :] - factors[:, :, None] * a[:, k, None, :]) % p
    return det


def linear_combination_mod(y, mats, p=PRIME):
    """Stack of sum_i y[:, i] * mats[i] mod p."""
    y = np.asarray(y, dtype=np.int64) % p
    mats = [np.array([[int(x) % p for x in row] for row in m], dtype=np.int64) for m in mats]
    acc = np.zeros((y.shape[0],) + mats[0].shape, dtype=np.int64)
    for i, m in enumerate(mats):
        acc = (acc + y[:, i, None, None] * m[None]) % p
    return acc
