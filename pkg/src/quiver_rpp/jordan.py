"""Generic Jordan data of nilpotent endomorphisms.

Applies to direct sums of indecomposables supported at a minuscule vertex.

A generic nilpotent endomorphism of V = (+) M_u^{c_u} is sampled blockwise:
the block from the copies of M_u to the copies of M_v (u != v) is a uniform
random combination of a Hom(M_u, M_v) basis, independently per copy pair,
and each diagonal block is a strictly upper triangular c_u x c_u scalar
coefficient matrix.  End(M_u) is one-dimensional (Dynkin indecomposables
are bricks), so the semisimple quotient of the sampled phi is exactly that
strictly upper triangular part, which forces nilpotency.

The Jordan type of each vertex map is read off the rank sequence of its
powers; genericity is certified operationally by 3-of-3 agreement across
independent samples.
"""

from functools import lru_cache

import numpy as np

from . import modarith as fp
from .bijection import poset_of
from .poset import RPP
from .quiver import direct_sum, hom_basis, indecomposable


class GenericityError(RuntimeError):
    pass


class JordanError(ValueError):
    pass


@lru_cache(maxsize=None)
def _hom_basis_cached(q, root_u, root_v):
    return hom_basis(indecomposable(q, root_u), indecomposable(q, root_v))


def jordan_type(mat):
    """Partition of a nilpotent matrix from the ranks of its powers.

    The number of parts of size >= s equals rank(mat^{s-1}) - rank(mat^s).
    """
    n = mat.shape[0]
    if n == 0:
        return ()
    profile = fp.nilpotent_rank_profile(mat)  # raises if not nilpotent
    ranks = [n] + profile
    conj = [ranks[s - 1] - ranks[s] for s in range(1, len(ranks))]
    parts = []
    for size in range(len(conj), 0, -1):
        count = conj[size - 1] - (conj[size] if size < len(conj) else 0)
        parts.extend([size] * count)
    parts.sort(reverse=True)
    return tuple(parts)


def _flat_seed(seed):
    if isinstance(seed, int):
        return (seed & 0x7FFFFFFFFFFF,)
    out = ()
    for s in seed:
        out += _flat_seed(s)
    return out


def generic_nilpotent_endo(q, summands, seed, check_nilpotent=True):
    """Sample a generic nilpotent endomorphism of (+) M_u^{c_u}.

    ``summands`` is an ordered list of (root, multiplicity) with positive
    multiplicities.  Returns (V, [phi_1, ..., phi_n]); the morphism and
    nilpotency conditions are re-checked and violations raise, since they
    would signal a construction bug.  gen_jf passes check_nilpotent=False
    because its jordan_type calls redo exactly that verification.
    """
    rng = np.random.default_rng(_flat_seed(seed) + (0x9E377,))
    summands = [(tuple(r), int(c)) for r, c in summands if c > 0]
    if not summands:
        raise JordanError("empty representation has no endomorphisms to sample")
    reps = [(indecomposable(q, r), c) for r, c in summands]
    big = direct_sum(reps)
    n = q.rank
    start = []  # per summand, per-vertex offset of its copy block
    cursor = [0] * n
    for rep, c in reps:
        start.append(tuple(cursor))
        for i in range(n):
            cursor[i] += c * rep.dims[i]
    phi = [fp.zeros(big.dims[i], big.dims[i]) for i in range(n)]
    for a, (root_a, ca) in enumerate(summands):
        da = reps[a][0].dims
        for b, (root_b, cb) in enumerate(summands):
            db = reps[b][0].dims
            if a == b:
                coefs = np.triu(
                    rng.integers(0, fp.P, size=(ca, ca), dtype=np.int64), k=1
                )
                for i in range(n):
                    if da[i] == 0:
                        continue
                    block = np.kron(coefs, np.eye(da[i], dtype=np.int64)) % fp.P
                    r0 = start[a][i]
                    phi[i][r0 : r0 + block.shape[0], r0 : r0 + block.shape[1]] = block
                continue
            basis = _hom_basis_cached(q, root_a, root_b)
            if not basis:
                continue
            coef_mats = [
                rng.integers(0, fp.P, size=(cb, ca), dtype=np.int64) for _ in basis
            ]
            for i in range(n):
                if da[i] == 0 or db[i] == 0:
                    continue
                block = fp.zeros(cb * db[i], ca * da[i])
                for coefs, theta in zip(coef_mats, basis):
                    block = (block + np.kron(coefs, theta[i + 1])) % fp.P
                r0, c0 = start[b][i], start[a][i]
                phi[i][r0 : r0 + block.shape[0], c0 : c0 + block.shape[1]] = block
    _check_endo(q, big, phi, check_nilpotent)
    return big, phi


def _check_endo(q, big, phi, check_nilpotent):
    for (s, t) in q.arrows:
        f = big.maps[(s, t)]
        left = fp.matmul(phi[t - 1], f)
        right = fp.matmul(f, phi[s - 1])
        if not np.array_equal(left, right):
            raise GenericityError("sampled phi is not a morphism")
    if check_nilpotent:
        for mat in phi:
            if mat.shape[0]:
                fp.nilpotent_rank_profile(mat)  # raises if not nilpotent


def gen_jf(ar, m, rep, seed=0, samples=3, retries=3):
    """Generic Jordan data of the representation with multiplicities ``rep``.

    Samples ``samples`` independent endomorphisms and requires their Jordan
    data to agree exactly; disagreement triggers fresh seeds, up to
    ``retries`` rounds, before raising GenericityError.
    """
    q = ar.quiver
    poset = poset_of(ar, m)
    for dv, c in rep.items():
        if c < 0:
            raise JordanError("multiplicities must be nonnegative")
        if c > 0 and dv not in poset:
            raise JordanError(f"{dv} is not supported at vertex {m}")
    summands = sorted((dv, c) for dv, c in rep.items() if c > 0)
    if not summands:
        return tuple(() for _ in range(q.rank))
    for round_no in range(retries):
        results = []
        for s in range(samples):
            _, phi = generic_nilpotent_endo(
                q, summands, (seed, round_no, s), check_nilpotent=False
            )
            results.append(tuple(jordan_type(phi[i]) for i in range(q.rank)))
        if all(r == results[0] for r in results):
            return results[0]
    raise GenericityError(f"Jordan data unstable after {retries} rounds")


def jordan_to_rpp(jd, poset):
    """Write per-vertex partitions onto the tau-orbits of the poset.

    Within orbit j the parts (padded with zeros) are placed in weakly
    decreasing order from the orbit's poset-minimal element upward, the
    unique order-reversing placement along the orbit.  The global filling
    must come out order-reversing; anything else signals inconsistent
    Jordan data and raises.
    """
    by_orbit = {}
    for x in poset.elements:
        ann = poset.annotations[x]
        by_orbit.setdefault(ann["orbit"], []).append((ann["position"], x))
    values = {}
    for j, chain in sorted(by_orbit.items()):
        chain.sort()
        parts = list(jd[j - 1]) if j - 1 < len(jd) else []
        if len(parts) > len(chain):
            raise JordanError(
                f"orbit {j} holds {len(chain)} elements but lambda^{j} has {len(parts)} parts"
            )
        parts = sorted(parts, reverse=True) + [0] * (len(chain) - len(parts))
        for (_, x), part in zip(chain, parts):
            values[x] = part
    for j in range(1, len(jd) + 1):
        if jd[j - 1] and j not in by_orbit:
            raise JordanError(f"orbit {j} misses the poset but lambda^{j} is nonempty")
    try:
        return RPP(poset, values)
    except Exception as exc:
        raise JordanError(f"Jordan data is not order-reversing on the poset: {exc}")
