from fractions import Fraction

import pytest

from chaincomm import complexes
from chaincomm.complexes import (
    ChainComplex,
    ChainEndomorphism,
    commutator,
    homotopy_boundary,
    subtract,
    trace_report,
    validate_chain_map,
)
from chaincomm.errors import (
    FieldTooSmall,
    FiniteFieldUnsupported,
    SelectionExhausted,
    StretchObstruction,
    TraceObstruction,
)
from chaincomm.fields import GF2, RATIONALS as Q, PrimeField
from chaincomm.generate import random_chain_map, random_complex, random_endomorphism, random_homotopy
from chaincomm.linalg import inverse, is_invertible, sylvester_operator
from chaincomm.matrices import Matrix, enumerate_matrices
from chaincomm.splitting import extract_blocks, split_complex
from chaincomm.witnesses import (
    analyze,
    commutant_set,
    commutator_decomposition,
    commutator_witness,
    commutator_witness_detailed,
    homotopy_commutator_witness,
    homotopy_pointwise_witness,
    pointwise_commutator_witness,
    prescribed_trace_nullhomotopy,
    select_separated_pairs,
    zero_diagonal_basis,
)

from helpers import alternating_reflection, corner_window, exact_two_term, mat, seeds, zero_differential_complex

F3 = PrimeField(3)

# Over F_2, C([[0,0],[1,0]]) consists of these six matrices (used as the
# expected containment set for decomposition factors).
LOWER_CORNER_COMMUTANT_F2 = {
    mat(GF2, rows)
    for rows in (
        [[0, 0], [0, 1]],
        [[0, 0], [1, 0]],
        [[0, 0], [1, 1]],
        [[1, 0], [0, 0]],
        [[1, 0], [1, 0]],
        [[1, 0], [1, 1]],
    )
}
UPPER_CORNER_COMMUTANT_F2 = {
    mat(GF2, rows)
    for rows in (
        [[0, 0], [0, 1]],
        [[0, 1], [0, 0]],
        [[0, 1], [0, 1]],
        [[1, 0], [0, 0]],
        [[1, 1], [0, 0]],
        [[1, 1], [0, 1]],
    )
}


# -- single-matrix decomposition ------------------------------------------------


def test_decomposition_of_zero_matrices():
    for n in range(4):
        p, q = commutator_decomposition(Matrix.zeros(Q, n, n))
        assert p.is_zero() and q.is_zero()


def test_decomposition_rejects_nonzero_trace():
    with pytest.raises(ValueError):
        commutator_decomposition(Matrix.identity(Q, 2))


def test_decomposition_lower_corner_over_f2():
    m = mat(GF2, [[0, 0], [1, 0]])
    p, q = commutator_decomposition(m)
    assert p * q - q * p == m
    assert p in LOWER_CORNER_COMMUTANT_F2


def test_decomposition_every_traceless_2x2_over_f3():
    # oracle: the set of all commutators over F_3 2x2, by full enumeration
    commutators = set()
    mats = list(enumerate_matrices(F3, 2, 2))
    for a in mats:
        for b in mats:
            commutators.add(a * b - b * a)
    traceless = [m for m in mats if m.trace() == 0]
    assert len(traceless) == 27
    assert set(traceless) == commutators
    for m in traceless:
        p, q = commutator_decomposition(m)
        assert p * q - q * p == m


def test_decomposition_1000_random_rational_matrices():
    import random

    rng = random.Random(12345)
    for _ in range(1000):
        n = rng.randint(1, 5)
        entries = [[Fraction(rng.randint(-6, 6)) for _ in range(n)] for _ in range(n)]
        # force trace zero on the last diagonal entry
        entries[n - 1][n - 1] = -sum(entries[i][i] for i in range(n - 1))
        m = mat(Q, entries)
        p, q = commutator_decomposition(m)
        assert p * q - q * p == m


def test_scalar_traceless_matrices_in_positive_characteristic():
    i2 = Matrix.identity(GF2, 2)
    p, q = commutator_decomposition(i2)
    assert p * q - q * p == i2
    one_f3 = Matrix.identity(F3, 3)
    p, q = commutator_decomposition(one_f3)
    assert p * q - q * p == one_f3
    doubled = Matrix.identity(F3, 3).scale(2)
    p, q = commutator_decomposition(doubled)
    assert p * q - q * p == doubled


def test_field_too_small_cases():
    with pytest.raises(FieldTooSmall):
        commutator_decomposition(Matrix.identity(GF2, 4))  # scalar, fallback out of bounds
    with pytest.raises(FieldTooSmall):
        # non-scalar traceless 4x4 over F_2: no 4 distinct elements, size > 3
        m = Matrix.zeros(GF2, 4, 4)
        m = mat(GF2, [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [0, 0, 0, 0]])
        commutator_decomposition(m)


def test_zero_diagonal_basis_on_awkward_diagonals():
    # trailing-scalar escape in characteristic 2 and 3
    for m in (Matrix.diagonal(GF2, [0, 1, 1]), Matrix.diagonal(F3, [0, 1, 1, 1])):
        p = zero_diagonal_basis(m)
        conj = inverse(p) * m * p
        assert all(conj.entry(i, i) == 0 for i in range(m.rows))


def test_zero_diagonal_basis_random_rational():
    import random

    rng = random.Random(99)
    for _ in range(50):
        n = rng.randint(2, 5)
        entries = [[Fraction(rng.randint(-5, 5)) for _ in range(n)] for _ in range(n)]
        entries[n - 1][n - 1] = -sum(entries[i][i] for i in range(n - 1))
        m = mat(Q, entries)
        if m.is_scalar():
            continue
        p = zero_diagonal_basis(m)
        conj = inverse(p) * m * p
        assert all(conj.entry(i, i) == 0 for i in range(n))


# -- commutant enumeration -------------------------------------------------------


def test_commutant_sets_of_the_corner_matrices():
    assert commutant_set(mat(GF2, [[0, 0], [1, 0]])) == frozenset(LOWER_CORNER_COMMUTANT_F2)
    assert commutant_set(mat(GF2, [[0, 1], [0, 0]])) == frozenset(UPPER_CORNER_COMMUTANT_F2)


def test_commutant_of_zero_is_everything():
    assert commutant_set(Matrix.zeros(GF2, 1, 1)) == frozenset(
        {Matrix.zeros(GF2, 1, 1), Matrix.identity(GF2, 1)}
    )


def test_commutant_rejects_rationals():
    with pytest.raises(ValueError):
        commutant_set(Matrix.zeros(Q, 1, 1))


# -- separated pair selection -----------------------------------------------------


def test_selection_on_scalar_zero_families():
    sel = select_separated_pairs([Matrix.zeros(Q, 1, 1)] * 2, [Matrix.zeros(Q, 1, 1)] * 2, Q)
    # all five condition families hold; 1x1 conditions reduce to nonzero scalars
    for i in range(3):
        a3 = (sel.first_left(i), sel.second_left(i))
        if None not in a3:
            assert is_invertible(sylvester_operator(*a3))


def test_selection_empty_input_is_vacuous():
    sel = select_separated_pairs([], [], Q)
    assert sel.first_pairs == () and sel.second_pairs == ()


def test_selection_rejects_nonzero_trace():
    with pytest.raises(ValueError):
        select_separated_pairs([Matrix.identity(Q, 1)], [], Q)


def test_selection_exhausts_on_the_f2_counterexample():
    m = mat(GF2, [[0, 0], [1, 0]])
    n = mat(GF2, [[0, 1], [0, 0]])
    with pytest.raises(SelectionExhausted):
        select_separated_pairs([m, m], [n, Matrix.zeros(GF2, 0, 0)], GF2)


def test_selection_random_rational_families():
    import random

    rng = random.Random(3)
    for _ in range(10):
        count = rng.randint(1, 3)

        def traceless(nmax):
            n = rng.randint(0, nmax)
            entries = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
            if n:
                entries[n - 1][n - 1] = -sum(entries[i][i] for i in range(n - 1))
            return mat(Q, entries) if n else Matrix.zeros(Q, 0, 0)

        first = [traceless(3) for _ in range(count + 1)]
        second = [traceless(3) for _ in range(count)]
        sel = select_separated_pairs(first, second, Q)
        for m, (p, q) in zip(first, sel.first_pairs):
            assert p * q - q * p == m
        for m, (s, t) in zip(second, sel.second_pairs):
            assert s * t - t * s == m


# -- pointwise witnesses (theorem 1) ----------------------------------------------


def test_pointwise_witness_zero():
    c = corner_window(Q, 3)
    w = pointwise_commutator_witness(ChainEndomorphism.zero(c))
    for i in c.degrees:
        a, b = w.pairs[i]
        assert a.is_zero() and b.is_zero()


def test_pointwise_witness_on_random_commutators():
    for seed, rng in seeds(15):
        c = random_complex(rng, Q, max_dim=4, length=4)
        phi = random_endomorphism(rng, c, ensure="t1")
        w = pointwise_commutator_witness(phi)
        for i in c.degrees:
            a, b = w.pairs[i]
            assert a * b - b * a == phi.map(i)


def test_pointwise_witness_trace_obstruction():
    c = exact_two_term()
    with pytest.raises(TraceObstruction) as err:
        pointwise_commutator_witness(ChainEndomorphism.identity(c))
    assert err.value.degree == 0 and err.value.kind == "degree"


# -- chain commutator witnesses (theorem 2) ----------------------------------------


def test_commutator_witness_zero():
    c = corner_window(Q, 3)
    w = commutator_witness(ChainEndomorphism.zero(c))
    assert commutator(w.alpha, w.beta) == ChainEndomorphism.zero(c)


def test_commutator_witness_roundtrip_and_block_equations():
    for seed, rng in seeds(15):
        c = random_complex(rng, Q, max_dim=4, length=4)
        s = split_complex(c)
        phi = random_endomorphism(rng, c, ensure="t2", splitting=s)
        w, detail = commutator_witness_detailed(phi)
        assert validate_chain_map(w.alpha) == []
        assert validate_chain_map(w.beta) == []
        assert commutator(w.alpha, w.beta) == phi
        blocks = extract_blocks(phi, detail.splitting)
        sel = detail.selection
        for i in c.degrees:
            idx = i - c.lo
            p_i, q_i = sel.first_pairs[idx]
            p_next, q_next = sel.first_pairs[idx + 1]
            s_i, t_i = sel.second_pairs[idx]
            x = detail.mixed_solutions[i]
            t_corner = detail.corner_solutions[i]
            z = detail.cross_solutions[i]
            assert p_i * x - x * s_i == blocks.block(i, 0, 1)
            assert t_corner * q_next - q_i * t_corner == blocks.block(i, 0, 2)
            assert s_i * z - z * p_next == blocks.block(i, 1, 2)


def test_commutator_witness_obstructions():
    c = exact_two_term()
    with pytest.raises(TraceObstruction):
        commutator_witness(ChainEndomorphism.identity(c))

    window = corner_window(Q, 4)
    phi = alternating_reflection(window)
    with pytest.raises(TraceObstruction) as err:
        commutator_witness(phi)
    assert err.value.kind == "cohomology"

    f2_complex = corner_window(GF2, 3)
    with pytest.raises(FiniteFieldUnsupported):
        commutator_witness(ChainEndomorphism.zero(f2_complex))


def test_commutator_witness_need_not_equal_generator():
    rng_seed = 8
    import random

    rng = random.Random(rng_seed)
    c = random_complex(rng, Q, max_dim=3, length=3)
    a0 = random_chain_map(rng, c)
    b0 = random_chain_map(rng, c)
    phi = commutator(a0, b0)
    w = commutator_witness(phi)
    assert commutator(w.alpha, w.beta) == phi  # same commutator, any factorization


# -- homotopy-to-commutator witnesses (theorem 3) -----------------------------------


def test_homotopy_commutator_null_homotopic_input():
    for seed, rng in seeds(10):
        c = random_complex(rng, Q, max_dim=4, length=4)
        phi = homotopy_boundary(random_homotopy(rng, c))
        w = homotopy_commutator_witness(phi)
        assert w.residual.alpha == ChainEndomorphism.zero(c)
        assert w.residual.beta == ChainEndomorphism.zero(c)
        assert subtract(phi, homotopy_boundary(w.homotopy)) == ChainEndomorphism.zero(c)


def test_homotopy_commutator_identity_on_exact_complex():
    c = exact_two_term()
    ident = ChainEndomorphism.identity(c)
    w = homotopy_commutator_witness(ident)
    # H = 0 everywhere: the homotopy carries all of phi
    assert subtract(ident, homotopy_boundary(w.homotopy)) == ChainEndomorphism.zero(c)


def test_homotopy_commutator_roundtrip_with_block_form():
    for seed, rng in seeds(15):
        field = Q if seed % 3 else GF2
        c = random_complex(rng, field, max_dim=3, length=4)
        s = split_complex(c)
        try:
            phi = random_endomorphism(rng, c, ensure="t3", splitting=s)
            w = homotopy_commutator_witness(phi)
        except FieldTooSmall:
            assert field.finite
            continue
        residual = subtract(phi, homotopy_boundary(w.homotopy))
        residual_blocks = extract_blocks(residual, s)
        phi_blocks = extract_blocks(phi, s)
        for i in c.degrees:
            for pos in ((0, 0), (0, 1), (0, 2), (1, 2), (2, 2)):
                assert residual_blocks.block(i, *pos).is_zero()
            assert residual_blocks.block(i, 1, 1) == phi_blocks.block(i, 1, 1)
        assert commutator(w.residual.alpha, w.residual.beta) == residual


def test_homotopy_commutator_obstruction():
    window = corner_window(Q, 4)
    with pytest.raises(TraceObstruction) as err:
        homotopy_commutator_witness(alternating_reflection(window))
    assert err.value.kind == "cohomology"


# -- prescribed-trace null-homotopies and theorem 4 ----------------------------------


def test_prescribed_traces_zero_gives_zero():
    c = corner_window(Q, 3)
    tau, sigma = prescribed_trace_nullhomotopy(c, {})
    assert tau == ChainEndomorphism.zero(c)
    assert homotopy_boundary(sigma) == tau


def test_prescribed_traces_rank_one_window():
    c = ChainComplex(Q, 0, [2, 2], [mat(Q, [[0, 1], [0, 0]])])
    value = Fraction(7, 2)
    tau, sigma = prescribed_trace_nullhomotopy(c, {0: value, 1: value})
    assert tau.map(0).trace() == value
    assert tau.map(1).trace() == value
    assert homotopy_boundary(sigma) == tau
    assert validate_chain_map(tau) == []


def test_prescribed_traces_stretch_obstruction():
    c = ChainComplex(Q, 0, [2, 2], [mat(Q, [[0, 1], [0, 0]])])
    with pytest.raises(StretchObstruction) as err:
        prescribed_trace_nullhomotopy(c, {0: Fraction(1), 1: Fraction(2)})
    assert (err.value.start, err.value.end) == (0, 1)


def test_prescribed_traces_reject_values_off_window():
    c = exact_two_term()
    with pytest.raises(ValueError):
        prescribed_trace_nullhomotopy(c, {5: Fraction(1)})


def test_homotopy_pointwise_reduces_to_pointwise_when_traceless():
    for seed, rng in seeds(10):
        c = random_complex(rng, Q, max_dim=4, length=3)
        phi = random_endomorphism(rng, c, ensure="t1")
        w = homotopy_pointwise_witness(phi)
        assert homotopy_boundary(w.homotopy) == ChainEndomorphism.zero(c)
        for i in c.degrees:
            a, b = w.residual.pairs[i]
            assert a * b - b * a == phi.map(i)


def test_homotopy_pointwise_identity_on_exact_complex():
    c = exact_two_term()
    ident = ChainEndomorphism.identity(c)
    w = homotopy_pointwise_witness(ident)
    boundary = homotopy_boundary(w.homotopy)
    assert boundary.map(0).trace() == 1
    assert boundary.map(1).trace() == 1
    residual = subtract(ident, boundary)
    for i in c.degrees:
        a, b = w.residual.pairs[i]
        assert a * b - b * a == residual.map(i)


def test_homotopy_pointwise_stretch_obstruction():
    z = zero_differential_complex(Q, [2, 1])
    with pytest.raises(StretchObstruction):
        homotopy_pointwise_witness(ChainEndomorphism.identity(z))


def test_homotopy_pointwise_roundtrip():
    for seed, rng in seeds(15):
        c = random_complex(rng, Q, max_dim=4, length=4)
        phi = random_endomorphism(rng, c, ensure="t4")
        w = homotopy_pointwise_witness(phi)
        residual = subtract(phi, homotopy_boundary(w.homotopy))
        for i in c.degrees:
            a, b = w.residual.pairs[i]
            assert a * b - b * a == residual.map(i)


# -- analyze --------------------------------------------------------------------------


def test_analyze_zero_endomorphism():
    c = corner_window(Q, 3)
    result = analyze(ChainEndomorphism.zero(c))
    assert all(v.condition_holds for v in result.verdicts.values())
    assert all(v.construction_available for v in result.verdicts.values())


def test_analyze_alternating_reflection():
    window = corner_window(Q, 5)
    result = analyze(alternating_reflection(window))
    assert result.verdicts["theorem1"].condition_holds  # all degree traces vanish
    assert not result.verdicts["theorem2"].condition_holds  # boundary cohomology sticks out
    assert not result.verdicts["theorem3"].condition_holds
    assert result.verdicts["theorem4"].condition_holds


def test_analyze_random_commutator_all_positive():
    for seed, rng in seeds(10):
        c = random_complex(rng, Q, max_dim=3, length=3)
        phi = random_endomorphism(rng, c, ensure="t2")
        result = analyze(phi)
        assert all(v.condition_holds for v in result.verdicts.values())


def test_analyze_finite_field_reports_unavailable_construction():
    c = corner_window(GF2, 3)
    result = analyze(ChainEndomorphism.zero(c))
    assert result.verdicts["theorem2"].condition_holds
    assert not result.verdicts["theorem2"].construction_available
    assert result.verdicts["theorem1"].construction_available
