import pytest

from quatlie.errors import DegenerateInputError, MalformedInputError
from quatlie.matrices import (
    MJMatrix,
    QuatMatrix,
    apply_J,
    apply_sigma,
    apply_tau,
    coordinate_change,
    flatten,
    interleave,
    is_J_submodule,
    is_sigma_submodule,
    mj_embed,
    mj_extract,
    quat_transpose_mj,
    sigma_eigenvalue,
)
from quatlie.scalars import GR_I, GR_ONE, GR_ZERO, Q_I, Q_J, Q_K, Q_ONE, Quaternion

from conftest import rand_qmatrix


def full_equal(mj, entries):
    return mj.to_full() == tuple(tuple(row) for row in entries)


def test_mj_embed_of_j():
    m = QuatMatrix([[Q_J]])
    one, zero, neg = GR_ONE, GR_ZERO, -GR_ONE
    assert full_equal(mj_embed(m), [[zero, neg], [one, zero]])


def test_mj_embed_of_i():
    m = QuatMatrix([[Q_I]])
    assert full_equal(mj_embed(m), [[GR_I, GR_ZERO], [GR_ZERO, -GR_I]])


def test_mj_extract_inverse(rng):
    for _ in range(20):
        m = rand_qmatrix(rng, 3)
        assert mj_extract(mj_embed(m)) == m


def test_mj_embed_multiplicative(rng):
    for _ in range(30):
        x = rand_qmatrix(rng, 3)
        y = rand_qmatrix(rng, 3)
        assert mj_embed(x @ y) == mj_embed(x) @ mj_embed(y)
        assert mj_embed(x + y) == mj_embed(x) + mj_embed(y)


def test_mj_embed_unit_preserving():
    n = 3
    eye = QuatMatrix.identity(n)
    full = mj_embed(eye).to_full()
    for p in range(2 * n):
        for q in range(2 * n):
            assert full[p][q] == (GR_ONE if p == q else GR_ZERO)


def test_mj_from_full_validates(rng):
    m = rand_qmatrix(rng, 2)
    full = mj_embed(m).to_full()
    assert MJMatrix.from_full(full) == mj_embed(m)
    bad = [list(row) for row in full]
    bad[0][2] = bad[0][2] + GR_ONE  # breaks -conj(B) in the upper right
    with pytest.raises(MalformedInputError):
        MJMatrix.from_full(bad)


# ---------------------------------------------------------------------------
# coordinate change between the blockwise-2x2 and big-block layouts
# ---------------------------------------------------------------------------


def test_coordinate_change_identity():
    data = [
        [GR_ONE, GR_ZERO],
        [GR_ZERO, GR_ONE],
    ]
    mj = coordinate_change(data)
    assert full_equal(mj, [[GR_ONE, GR_ZERO], [GR_ZERO, GR_ONE]])


def test_coordinate_change_e12():
    # n = 2, a = E12, b = 0: block (1,2) holds [[1, 0], [0, 1]]
    z = GR_ZERO
    one = GR_ONE
    data = [
        [z, z, one, z],
        [z, z, z, one],
        [z, z, z, z],
        [z, z, z, z],
    ]
    mj = coordinate_change(data)
    assert mj.block_a[0][1] == one
    assert mj.block_b == ((z, z), (z, z))
    full = mj.to_full()
    assert full[0][1] == one and full[2][3] == one


def test_coordinate_change_malformed():
    z, one = GR_ZERO, GR_ONE
    data = [
        [one, z],
        [z, one + one],  # lower-right must equal conj(a)
    ]
    with pytest.raises(MalformedInputError):
        coordinate_change(data)


def test_coordinate_change_respects_products(rng):
    def cmul(x, y):
        n = len(x)
        return tuple(
            tuple(
                sum((x[p][r] * y[r][q] for r in range(n)), GR_ZERO)
                for q in range(n)
            )
            for p in range(n)
        )

    for _ in range(10):
        p = interleave(mj_embed(rand_qmatrix(rng, 2)))
        q = interleave(mj_embed(rand_qmatrix(rng, 2)))
        direct = coordinate_change(cmul(p, q))
        assert direct == coordinate_change(p) @ coordinate_change(q)


# ---------------------------------------------------------------------------
# conjugation operators
# ---------------------------------------------------------------------------


def test_sigma_tau_definitions(rng):
    for _ in range(10):
        m = rand_qmatrix(rng, 3)
        s = apply_sigma(m)
        t = apply_tau(m)
        for p in range(3):
            for q in range(3):
                assert s.entry(p, q).z1 == m.entry(p, q).z1
                assert s.entry(p, q).z2 == -m.entry(p, q).z2
                assert t.entry(p, q).z1 == m.entry(p, q).z1.conj()
                assert t.entry(p, q).z2 == m.entry(p, q).z2.conj()


def test_J_squared_matrix(rng):
    for _ in range(10):
        m = rand_qmatrix(rng, 3)
        assert apply_J(apply_J(m)) == -m


def test_operator_identities_on_gl3_basis():
    # sigma tau = tau sigma and J sigma = -sigma J on every basis element
    n = 3
    for p in range(n):
        for q in range(n):
            for coeff in (Q_ONE, Q_I, Q_J, Q_K):
                m = QuatMatrix.unit(n, p, q, coeff)
                assert apply_sigma(apply_tau(m)) == apply_tau(apply_sigma(m))
                assert apply_J(apply_sigma(m)) == -apply_sigma(apply_J(m))


# ---------------------------------------------------------------------------
# MJ-image transpose
# ---------------------------------------------------------------------------


def test_transpose_mj_of_j():
    m = QuatMatrix([[Q_J]])
    assert quat_transpose_mj(m) == QuatMatrix([[-Q_J]])


def test_transpose_mj_plain():
    m = QuatMatrix.unit(2, 0, 1, Q_ONE)
    assert quat_transpose_mj(m) == QuatMatrix.unit(2, 1, 0, Q_ONE)


def test_transpose_mj_matches_full_transpose(rng):
    for _ in range(20):
        m = rand_qmatrix(rng, 3)
        full = mj_embed(m).to_full()
        transposed = tuple(
            tuple(full[q][p] for q in range(6)) for p in range(6)
        )
        assert mj_embed(quat_transpose_mj(m)).to_full() == transposed


def test_transpose_mj_involution(rng):
    for _ in range(20):
        m = rand_qmatrix(rng, 3)
        assert quat_transpose_mj(quat_transpose_mj(m)) == m


# ---------------------------------------------------------------------------
# flattening and submodule predicates
# ---------------------------------------------------------------------------


def test_flatten_round_trip(rng):
    for _ in range(20):
        m = rand_qmatrix(rng, 3)
        assert QuatMatrix.unflatten(3, flatten(m)) == m


def test_flatten_linear(rng):
    x = rand_qmatrix(rng, 2)
    y = rand_qmatrix(rng, 2)
    fx, fy, fs = flatten(x), flatten(y), flatten(x + y)
    for idx in set(fx) | set(fy) | set(fs):
        assert fs.get(idx, 0) == fx.get(idx, 0) + fy.get(idx, 0)


def test_sigma_submodule_example_i_j_ji():
    # span{i, j, j*i} is sigma-invariant but not J-invariant
    basis = [
        QuatMatrix([[Q_I]]),
        QuatMatrix([[Q_J]]),
        QuatMatrix([[Quaternion(GR_ZERO, GR_I)]]),  # j*i
    ]
    assert is_sigma_submodule(basis)
    assert not is_J_submodule(basis)


def test_not_sigma_submodule_example():
    basis = [QuatMatrix([[Q_ONE + Q_J]])]
    assert not is_sigma_submodule(basis)


def test_full_module_both_predicates():
    n = 2
    basis = []
    for p in range(n):
        for q in range(n):
            basis.append(QuatMatrix.unit(n, p, q, Q_ONE))
            basis.append(QuatMatrix.unit(n, p, q, Q_J))
    assert is_J_submodule(basis)
    assert is_sigma_submodule(basis)


def test_dependent_basis_rejected():
    m = QuatMatrix([[Q_ONE]])
    with pytest.raises(DegenerateInputError):
        is_sigma_submodule([m, m])


def test_naive_transpose_gives_wrong_antisymmetric_dimension():
    # the naive entrywise-transpose condition tX + X = 0 kills the whole
    # diagonal and leaves 2n^2 - 2n real dimensions, not the n(2n - 1) of
    # the MJ-image condition; this is why transposition is defined through
    # the complex picture
    from quatlie.linalg import SpanBasis

    n = 3
    naive = SpanBasis(4 * n * n)
    for p in range(n):
        for q in range(p + 1, n):
            for coeff in (Q_ONE, Q_I, Q_J, Q_K):
                naive.insert(
                    flatten(
                        QuatMatrix.unit_sum(n, [(p, q, coeff), (q, p, -coeff)])
                    )
                )
    assert naive.rank == 2 * n * n - 2 * n
    from quatlie.realizations import build_named

    assert build_named("so_star_2n", n).dim == n * (2 * n - 1)
    assert naive.rank != n * (2 * n - 1)


def test_sigma_eigenvalue():
    assert sigma_eigenvalue(QuatMatrix([[Q_ONE]])) == 1
    assert sigma_eigenvalue(QuatMatrix([[Q_J]])) == -1
    assert sigma_eigenvalue(QuatMatrix([[Q_ONE + Q_J]])) is None
    assert sigma_eigenvalue(QuatMatrix.zeros(1)) is None
