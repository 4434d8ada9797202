"""Vectorised numpy implementation of the batch kernels.

This is the fallback used when the compiled ``_ckernels`` extension is not
available.  Both modules expose the same functions with the same contract:

* ``psi`` is an ``int32`` array of shape ``(N, 2L)`` holding ``l0, r0, l1, r1, ...``
* ``field`` and ``g`` are ``int32`` arrays of shape ``(N, L)`` holding
  permutation ranks (see :class:`gaugeca.permutation.PermTable`);
  ``g`` may also have a single row, broadcast over the batch
* ``act``, ``mul``, ``inv`` are the lookup tables of the rank encoding

Every function returns fresh arrays and never mutates its inputs.
"""

import numpy as np

NAME = "numpy"


def _split(psi):
    return psi[:, 0::2], psi[:, 1::2]


def _join(l, r):
    out = np.empty((l.shape[0], 2 * l.shape[1]), dtype=np.int32)
    out[:, 0::2] = l
    out[:, 1::2] = r
    return out


def step_r(psi):
    l, r = _split(psi)
    return _join(np.roll(l, -1, axis=1), np.roll(r, 1, axis=1))


def step_r_inv(psi):
    l, r = _split(psi)
    return _join(np.roll(l, 1, axis=1), np.roll(r, -1, axis=1))


def step_ra(act, inv, psi, field):
    l, r = _split(psi)
    new_l = act[inv[field], np.roll(l, -1, axis=1)]
    new_r = act[np.roll(field, 1, axis=1), np.roll(r, 1, axis=1)]
    return _join(new_l, new_r)


def step_ra_inv(act, inv, psi, field):
    l, r = _split(psi)
    old_l = act[np.roll(field, 1, axis=1), np.roll(l, 1, axis=1)]
    old_r = act[inv[field], np.roll(r, -1, axis=1)]
    return _join(old_l, old_r)


def gauge_matter(act, g, psi):
    if psi.shape[1] == 0:
        return psi.copy()
    l, r = _split(psi)
    g = np.broadcast_to(g, l.shape)
    return _join(act[g, l], act[g, r])


def gauge_field(mul, inv, g, field):
    if field.shape[1] == 0:
        return field.copy()
    g = np.broadcast_to(g, field.shape)
    return mul[mul[np.roll(g, -1, axis=1), field], inv[g]]


def state_keys(psi, field, K, P):
    """Mixed-radix integer keys ordering states lexicographically."""
    keys = np.zeros(max(psi.shape[0], field.shape[0]), dtype=np.int64)
    for j in range(psi.shape[1]):
        keys = keys * K + psi[:, j]
    for j in range(field.shape[1]):
        keys = keys * P + field[:, j]
    return keys


def orbit_min_keys(act, mul, inv, G, psi, field, K, P):
    """For every state, the smallest key over its whole orbit under ``G``."""
    best = None
    for m in range(G.shape[0]):
        g = G[m : m + 1]
        keys = state_keys(gauge_matter(act, g, psi), gauge_field(mul, inv, g, field), K, P)
        best = keys if best is None else np.minimum(best, keys)
    return best


def fixed_counts(act, mul, inv, G, psi, field):
    """For every transform in ``G``, how many states it leaves unchanged."""
    counts = np.zeros(G.shape[0], dtype=np.int64)
    for m in range(G.shape[0]):
        g = G[m : m + 1]
        same = np.ones(max(psi.shape[0], field.shape[0]), dtype=bool)
        if psi.shape[1]:
            same &= (gauge_matter(act, g, psi) == psi).all(axis=1)
        if field.shape[1]:
            same &= (gauge_field(mul, inv, g, field) == field).all(axis=1)
        counts[m] = same.sum()
    return counts
