"""Pure-Python batched matrix product on arbitrary-precision integers."""

import numpy as np


def batched_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Return ``c[n] = a[n] @ b[n]`` for object arrays of Python ints."""
    B, M, K = a.shape
    N = b.shape[2]
    out = np.empty((B, M, N), dtype=object)
    out.fill(0)
    for n in range(B):
        an = a[n]
        bn = b[n]
        rows = [(k, bn[k]) for k in range(K) if any(bn[k])]
        for i in range(M):
            acc = [0] * N
            ai = an[i]
            for k, bk in rows:
                x = ai[k]
                if x:
                    for j in range(N):
                        y = bk[j]
                        if y:
                            acc[j] += x * y
            out[n, i] = acc
    return out
