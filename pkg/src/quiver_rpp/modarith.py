"""Exact dense linear algebra over the fixed prime field F_P, P = 2**31 - 1.

Matrices are C-contiguous numpy int64 arrays with entries already reduced
mod P.  P is a Mersenne prime, so a product of two reduced entries fits in an
unsigned 64-bit word and reduction needs only shifts, masks and one
conditional subtract.

Two interchangeable kernel backends:

* ``numba`` -- @njit loops; the default whenever numba imports.
* ``numpy`` -- pure-numpy fallback: 16-bit limb splitting for matmul,
  vectorized row operations for elimination.

Select explicitly with the environment variable QUIVER_RPP_BACKEND
(``numba`` or ``numpy``, read at import time).  ``backend_name()`` reports
the active choice; ``benchmarks/bench_modarith.py`` compares the two.
"""

import os

import numpy as np

P = 2_147_483_647  # 2**31 - 1, the global field modulus
_MASK = 0x7FFFFFFF


def as_matrix(a):
    """Coerce to a C-contiguous int64 matrix reduced mod P."""
    m = np.ascontiguousarray(np.asarray(a, dtype=np.int64) % P)
    if m.ndim != 2:
        raise ValueError("expected a 2-d array")
    return m


def zeros(rows, cols):
    return np.zeros((rows, cols), dtype=np.int64)


def identity(n):
    return np.eye(n, dtype=np.int64)


def inv_mod(x):
    """Multiplicative inverse in F_P."""
    x = int(x) % P
    if x == 0:
        raise ZeroDivisionError("0 is not invertible mod P")
    return pow(x, P - 2, P)


def random_matrix(rng, rows, cols):
    """Uniform random matrix over F_P from a numpy Generator."""
    return rng.integers(0, P, size=(rows, cols), dtype=np.int64)


# ---------------------------------------------------------------------------
# numpy fallback kernels
# ---------------------------------------------------------------------------
#
# Limb splitting: with a = hi*2**16 + lo (hi < 2**15, lo < 2**16) every
# intermediate of hi@b and lo@b stays below 2**63 for inner dimensions up to
# 2**15, far beyond anything this package builds.


def _matmul_numpy(a, b):
    if a.shape[1] != b.shape[0]:
        raise ValueError("matmul shape mismatch")
    if a.shape[0] == 0 or b.shape[1] == 0 or a.shape[1] == 0:
        return zeros(a.shape[0], b.shape[1])
    hi = a >> 16
    lo = a & 0xFFFF
    c = ((((hi @ b) % P) << 16) + ((lo @ b) % P)) % P
    return c


def _rref_numpy(a):
    m = a.copy()
    rows, cols = m.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            m[[r, p]] = m[[p, r]]
        m[r] = (m[r] * inv_mod(m[r, c])) % P
        col = m[:, c].copy()
        col[r] = 0
        tgt = np.nonzero(col)[0]
        if tgt.size:
            m[tgt] = (m[tgt] - np.outer(col[tgt], m[r])) % P
        pivots.append(c)
        r += 1
    return m, np.array(pivots, dtype=np.int64)


# ---------------------------------------------------------------------------
# numba kernels
# ---------------------------------------------------------------------------

_FORCED = os.environ.get("QUIVER_RPP_BACKEND", "").strip().lower()
if _FORCED not in ("", "numba", "numpy"):
    raise RuntimeError(f"QUIVER_RPP_BACKEND must be 'numba' or 'numpy', got {_FORCED!r}")

_HAVE_NUMBA = False
if _FORCED != "numpy":
    try:
        from numba import njit

        _HAVE_NUMBA = True
    except ImportError:
        if _FORCED == "numba":
            raise
        _HAVE_NUMBA = False

if _HAVE_NUMBA:

    @njit(cache=True, inline="always")
    def _mred(x):
        # reduce x < 2**62 mod the Mersenne prime
        x = (x >> 31) + (x & np.uint64(_MASK))
        x = (x >> 31) + (x & np.uint64(_MASK))
        if x >= np.uint64(P):
            x -= np.uint64(P)
        return x

    @njit(cache=True)
    def _matmul_nb(a, b):
        n, k = a.shape
        m = b.shape[1]
        out = np.zeros((n, m), dtype=np.int64)
        for i in range(n):
            for j in range(m):
                acc = np.uint64(0)
                for l in range(k):
                    acc += _mred(np.uint64(a[i, l]) * np.uint64(b[l, j]))
                out[i, j] = np.int64(_mred(acc))
        return out

    @njit(cache=True)
    def _powmod_nb(x, e):
        r = np.uint64(1)
        base = np.uint64(x)
        while e > 0:
            if e & 1:
                r = _mred(r * base)
            base = _mred(base * base)
            e >>= 1
        return r

    @njit(cache=True)
    def _rank_nb(a):
        # forward elimination only; destroys its copy
        m = a.copy()
        rows, cols = m.shape
        r = 0
        for c in range(cols):
            if r == rows:
                break
            p = -1
            for i in range(r, rows):
                if m[i, c] != 0:
                    p = i
                    break
            if p < 0:
                continue
            if p != r:
                for j in range(c, cols):
                    m[r, j], m[p, j] = m[p, j], m[r, j]
            inv = _powmod_nb(np.uint64(m[r, c]), P - 2)
            for i in range(r + 1, rows):
                f = m[i, c]
                if f == 0:
                    continue
                mult = _mred(np.uint64(P - f) * inv)
                for j in range(c, cols):
                    m[i, j] = np.int64(
                        _mred(np.uint64(m[i, j]) + _mred(mult * np.uint64(m[r, j])))
                    )
            r += 1
        return r

    @njit(cache=True)
    def _rank_profile_nb(a):
        # ranks of a, a^2, ... down to 0; profile[k] = -1 past the end
        n = a.shape[0]
        profile = np.full(n + 1, -1, dtype=np.int64)
        pw = a.copy()
        for k in range(n):
            rk = _rank_nb(pw)
            profile[k] = rk
            if rk == 0:
                return profile[: k + 1]
            pw = _matmul_nb(pw, a)
        return profile  # caller treats a trailing -1-free full array as failure

    @njit(cache=True)
    def _rref_nb(a):
        m = a.copy()
        rows, cols = m.shape
        pivots = np.empty(min(rows, cols), dtype=np.int64)
        r = 0
        for c in range(cols):
            if r == rows:
                break
            p = -1
            for i in range(r, rows):
                if m[i, c] != 0:
                    p = i
                    break
            if p < 0:
                continue
            if p != r:
                for j in range(cols):
                    m[r, j], m[p, j] = m[p, j], m[r, j]
            inv = _powmod_nb(np.uint64(m[r, c]), P - 2)
            for j in range(cols):
                m[r, j] = np.int64(_mred(np.uint64(m[r, j]) * inv))
            for i in range(rows):
                f = m[i, c]
                if i == r or f == 0:
                    continue
                neg = np.uint64(P - f)
                for j in range(cols):
                    m[i, j] = np.int64(
                        _mred(np.uint64(m[i, j]) + _mred(neg * np.uint64(m[r, j])))
                    )
            pivots[r] = c
            r += 1
        return m, pivots[:r]


_BACKEND = "numba" if _HAVE_NUMBA else "numpy"


def backend_name():
    return _BACKEND


def matmul(a, b):
    """a @ b over F_P."""
    if _BACKEND == "numba":
        return _matmul_nb(a, b)
    return _matmul_numpy(a, b)


def rref(a):
    """Reduced row echelon form: returns (matrix, pivot column indices)."""
    if a.shape[0] == 0 or a.shape[1] == 0:
        return a.copy(), np.array([], dtype=np.int64)
    if _BACKEND == "numba":
        return _rref_nb(a)
    return _rref_numpy(a)


def rank(a):
    return len(rref(a)[1])


def nullspace(a):
    """Basis of the right kernel {x : a @ x = 0}, returned as rows.

    The basis is the standard free-variable one from the RREF, so it is
    deterministic for a given input.
    """
    rows, cols = a.shape
    if cols == 0:
        return zeros(0, 0)
    if rows == 0:
        return identity(cols)
    r, piv = rref(a)
    piv = [int(c) for c in piv]
    free = [c for c in range(cols) if c not in set(piv)]
    basis = zeros(len(free), cols)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, c in enumerate(piv):
            basis[k, c] = (-int(r[i, f])) % P
    return basis


def nilpotent_rank_profile(a):
    """[rank(a), rank(a^2), ...] down to the first zero rank.

    Raises ValueError if the rank has not reached 0 after n powers, i.e. the
    matrix is not nilpotent.
    """
    n = a.shape[0]
    if n != a.shape[1]:
        raise ValueError("expected a square matrix")
    if n == 0:
        return [0]
    if _BACKEND == "numba":
        profile = _rank_profile_nb(a)
        if profile[-1] != 0:
            raise ValueError("matrix is not nilpotent")
        return [int(r) for r in profile]
    ranks = []
    pw = a
    for _ in range(n):
        rk = rank(pw)
        ranks.append(rk)
        if rk == 0:
            return ranks
        pw = matmul(pw, a)
    raise ValueError("matrix is not nilpotent")
