"""Kernels on stacks of polynomial arrays sharing a leading batch axis."""

from __future__ import annotations

import numpy as np

from .algebra import FieldSpec


def contract(field: FieldSpec, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """sum over the batch of x[n] (t-array) times y[n] (theta-array).

    ``x`` has shape (N, T, e) and ``y`` shape (N, H, e); the result is a
    (T, H, e) array reduced mod p.
    """
    n, tlen, e = x.shape
    hlen = y.shape[1]
    if e == 1:
        return (x[:, :, 0].T @ y[:, :, 0])[:, :, None] % field.p
    prod = (x.reshape(n, tlen * e).T @ y.reshape(n, hlen * e)).reshape(tlen, e, hlen, e)
    return np.einsum("tuhv,uvc->thc", prod, field.structure) % field.p


def multipliers(field: FieldSpec, stack: np.ndarray) -> np.ndarray | None:
    """Per-coefficient multiplication matrices of a stack (N, r, e), or None for prime fields."""
    if field.e == 1:
        return None
    return np.einsum("niu,uvc->nivc", stack, field.structure)


def mul_stack(field: FieldSpec, cur: np.ndarray, factor: np.ndarray, mats: np.ndarray | None) -> np.ndarray:
    """Row-wise product of a stack ``cur`` (N, w, e) with ``factor`` (N, r, e)."""
    n, w, e = cur.shape
    r = factor.shape[1]
    out = np.zeros((n, w + r - 1, e), dtype=np.int64)
    for i in range(r):
        if mats is None:
            out[:, i:i + w] += cur * factor[:, i, :][:, None, :]
        else:
            for v in range(e):
                out[:, i:i + w] += cur[:, :, v:v + 1] * mats[:, i, v][:, None, :]
    return out % field.p


def apply_matrix(arr: np.ndarray, mat: np.ndarray) -> np.ndarray:
    """``arr @ mat`` over the trailing coordinate axis, without reduction."""
    out = arr[..., 0:1] * mat[0]
    for v in range(1, mat.shape[0]):
        out = out + arr[..., v:v + 1] * mat[v]
    return out
