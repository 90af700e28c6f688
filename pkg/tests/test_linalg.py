import numpy as np
from hypothesis import given, settings, strategies as st

from genus2split.linalg import max_block, nullspace_mod_p, rank_mod_p

from oracles import nullspace_gauss

P = 999983


def _planted(rows, cols, rank, seed, p=P):
    rng = np.random.default_rng(seed)
    a = rng.integers(0, p, (rows, rank), dtype=np.int64)
    b = rng.integers(0, p, (rank, cols), dtype=np.int64)
    m = np.zeros((rows, cols), dtype=np.int64)
    for k in range(rank):  # exact int64 accumulation with reductions
        m = (m + a[:, k:k + 1] * b[k:k + 1, :] % p) % p
    return m


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 12), st.integers(1, 12), st.integers(0, 10 ** 6), st.sampled_from([7, 101, 10007, P]))
def test_nullspace_matches_gauss(rows, cols, seed, p):
    rng = np.random.default_rng(seed)
    m = rng.integers(0, p, (rows, cols), dtype=np.int64)
    if seed % 3 == 0 and rows > 1:
        m[-1] = (m[0] * 2) % p  # force a dependent row
    ours = [list(map(int, v)) for v in nullspace_mod_p(m.astype(np.float64), p)]
    assert ours == nullspace_gauss(m.tolist(), p)


def test_planted_rank_and_block_independence():
    m = _planted(300, 260, 240, seed=4)
    results = []
    for block in (1, 7, 64, 256):
        assert rank_mod_p(m, P, block=block) == 240
        null = nullspace_mod_p(m, P, block=block)
        assert len(null) == 20
        assert all(not np.any(_matvec(m, v) % P) for v in null)
        results.append([v.tolist() for v in null])
    assert all(r == results[0] for r in results)


def _matvec(m, v):
    return np.array([sum(int(a) * int(b) for a, b in zip(row, v)) for row in m.tolist()], dtype=object)


def test_block_bound_and_clamping():
    assert max_block(P) * (P - 1) ** 2 < 2 ** 53
    m = _planted(40, 30, 25, seed=9)
    clamped = nullspace_mod_p(m, P, block=10 ** 6)
    assert [v.tolist() for v in clamped] == nullspace_gauss(m.tolist(), P)
