import dataclasses
from fractions import Fraction

import pytest

from heckemod import (
    Cyc,
    Mat,
    NotAPartition,
    NotScalar,
    NotStandard,
    apply_transposition,
    build_module,
    central_character,
    commutant_dimension,
    direct_sum,
    enumerate_shapes,
    enumerate_syt,
    generator_matrix,
    jm_consistency,
    module_to_json,
    module_weights,
    partition_shape,
    shift_contents,
    twist,
    validate_and_canonicalize,
    verify_intertwiners,
    verify_relations,
    weight_of,
)


def module_21():
    return build_module(partition_shape(1, [[2, 1]]))


def test_module_21_matrices():
    M = module_21()
    assert M.dim == 2 and M.ell == 1 and M.n == 3
    half = Fraction(1, 2)
    assert generator_matrix(M, "u", 1).diagonal_entries() == [0, 0]
    assert generator_matrix(M, "u", 2).diagonal_entries() == [1, -1]
    assert generator_matrix(M, "u", 3).diagonal_entries() == [-1, 1]
    s1 = generator_matrix(M, "s", 1)
    assert s1 == Mat.diagonal(1, [1, -1])
    s2 = generator_matrix(M, "s", 2)
    assert s2[0, 0] == -half and s2[1, 1] == half
    assert s2[0, 1] == Fraction(3, 4) and s2[1, 0] == 1
    assert s2 * s2 == Mat.identity(1, 2)
    # ell = 1 means trivial colors and pi = identity
    assert generator_matrix(M, "zeta", 2) == Mat.identity(1, 2)
    assert generator_matrix(M, "pi", 1) == Mat.identity(1, 2)


def test_intertwiner_matrices():
    M = module_21()
    tau1 = generator_matrix(M, "tau", 1)
    assert tau1.is_zero()  # labels 1, 2 are adjacent in both fillings
    tau2 = generator_matrix(M, "tau", 2)
    assert tau2[0, 0].is_zero() and tau2[1, 1].is_zero()
    assert tau2[0, 1] == Fraction(3, 4) and tau2[1, 0] == 1
    assert tau2 * tau2 == Mat.identity(1, 2).scale(Fraction(3, 4))


def test_generator_matrix_argument_checks():
    M = module_21()
    with pytest.raises(ValueError):
        generator_matrix(M, "q", 1)
    with pytest.raises(IndexError):
        generator_matrix(M, "s", 3)
    with pytest.raises(IndexError):
        generator_matrix(M, "u", 0)
    with pytest.raises(IndexError):
        generator_matrix(M, "tau", 0)


def test_verify_relations_passes():
    shapes = [
        partition_shape(1, [[2, 1]]),
        partition_shape(1, [[2, 2]]),
        partition_shape(2, [[2], [1]]),
        partition_shape(3, [[1], [1], [1]]),
        validate_and_canonicalize(1, [(0, 0, [(1, 1), (2, 0), (2, -1)])]),
        validate_and_canonicalize(2, [(0, 0, [(1, 0)]),
                                      (0, Fraction(1, 2), [(1, 0), (1, 1)])]),
    ]
    for D in shapes:
        M = build_module(D)
        report = verify_relations(M)
        assert report.ok, (D, [c.name for c in report.failures()])
        assert len(report.checks) > 0


def test_verify_relations_isolates_corruption():
    M = module_21()
    bad_s = list(M.mat_s)
    m = bad_s[1].copy()
    m[0, 1] = -m[0, 1]
    bad_s[1] = m
    bad = dataclasses.replace(M, mat_s=tuple(bad_s))
    report = verify_relations(bad)
    assert not report.ok
    assert {c.name for c in report.failures()} == {"s2^2=1", "s1s2s1=s2s1s2"}
    # witnesses point at a concrete matrix position
    failure = report.failures()[0]
    assert failure.witness is not None


def test_verify_intertwiners():
    for D in (partition_shape(1, [[2, 1]]), partition_shape(2, [[2], [1]])):
        report = verify_intertwiners(build_module(D))
        assert report.ok, [c.name for c in report.failures()]
    names = {c.name for c in verify_intertwiners(module_21()).checks}
    assert "tau1tau2tau1=tau2tau1tau2" in names
    assert "tau2^2=((u2-u3)^2-pi^2)/(u2-u3)^2" in names


def test_tau_on_cross_coordinate_pair_is_plain_swap():
    # both boxes carry different colors, so tau equals s itself
    D = partition_shape(2, [[1], [1]])
    M = build_module(D)
    assert generator_matrix(M, "tau", 1) == generator_matrix(M, "s", 1)
    assert generator_matrix(M, "s", 1) * generator_matrix(M, "s", 1) == Mat.identity(2, 2)


def test_tau_kills_exactly_the_blocked_same_color_vectors():
    # the column of tau_i at f_T vanishes precisely when the boxes of i and
    # i + 1 share a color and swapping them is illegal
    shapes = [D for n in (2, 3, 4) for D in enumerate_shapes(1, n, n)]
    shapes += list(enumerate_shapes(2, 3, 3))
    for D in shapes:
        M = build_module(D)
        for i in range(1, M.n):
            tau = generator_matrix(M, "tau", i)
            zi = generator_matrix(M, "zeta", i)
            zj = generator_matrix(M, "zeta", i + 1)
            for t, T in enumerate(M.basis):
                column_zero = all(tau[r, t].is_zero() for r in range(M.dim))
                same_color = zi[t, t] == zj[t, t]
                try:
                    apply_transposition(T, i)
                    blocked = False
                except NotStandard:
                    blocked = True
                assert column_zero == (same_color and blocked)


def test_tau_guard_on_colliding_eigenvalues():
    M = module_21()
    bad_u = list(M.mat_u)
    bad_u[1] = M.mat_u[0].copy()
    bad = dataclasses.replace(M, mat_u=tuple(bad_u))
    with pytest.raises(ZeroDivisionError):
        generator_matrix(bad, "tau", 1)


def test_module_weights_match_tableaux():
    for D in (partition_shape(1, [[2, 1]]),
              partition_shape(2, [[2], [1]]),
              validate_and_canonicalize(2, [(1, Fraction(1, 2), [(1, 0), (2, -1)])])):
        M = build_module(D)
        assert module_weights(M) == [weight_of(t) for t in enumerate_syt(D)]


def test_commutant_dimension():
    M = module_21()
    assert commutant_dimension(M) == 1
    assert commutant_dimension(direct_sum(M, M)) == 4
    single = build_module(partition_shape(1, [[1]]))
    assert commutant_dimension(single) == 1
    # two non-isomorphic summands: 1 + 1
    other = build_module(partition_shape(1, [[3]]))
    assert commutant_dimension(direct_sum(M, other)) == 2


def test_direct_sum():
    M = module_21()
    other = build_module(partition_shape(1, [[3]]))
    S = direct_sum(M, other)
    assert S.dim == M.dim + other.dim
    assert module_weights(S) == module_weights(M) + module_weights(other)
    assert verify_relations(S).ok
    assert S.shape is None


def test_central_character_values():
    M = module_21()
    cc = central_character(M)
    one = Cyc.from_rational(1, 1)
    assert cc == [one * 0, -one, one * 0, one * 3, one * 3, one]
    # e_k(zeta) sees the coordinates: two boxes of colors 0 and 1 for ell=2
    D = partition_shape(2, [[1], [1]])
    cc2 = central_character(build_module(D))
    z = Cyc.from_rational(2, 1)
    assert cc2[2] == z * 0  # e_1(zeta) = 1 + (-1)
    assert cc2[3] == -z  # e_2(zeta) = product of colors


def test_central_character_rejects_non_scalar():
    M = module_21()
    bad_u = list(M.mat_u)
    m = bad_u[0].copy()
    m[0, 0] = 5
    bad_u[0] = m
    bad = dataclasses.replace(M, mat_u=tuple(bad_u))
    with pytest.raises(NotScalar):
        central_character(bad)


def test_twist_translation():
    M = module_21()
    assert twist(M, "t", 0) == M
    shifted = twist(M, "t", Fraction(1, 2))
    assert verify_relations(shifted).ok
    for w, w0 in zip(module_weights(shifted), module_weights(M)):
        assert [x - x0 for x, x0 in zip(w.a, w0.a)] == [Fraction(1, 2)] * 3
        assert w.b == w0.b
    # composing translations adds offsets
    assert twist(shifted, "t", Fraction(-1, 2)) == M


def test_twist_rho_is_an_involution():
    for D in (partition_shape(1, [[2, 1]]), partition_shape(2, [[2], [1]])):
        M = build_module(D)
        R = twist(M, "rho")
        assert verify_relations(R).ok
        assert twist(R, "rho") == M
        # weights are reversed and negated
        for w, w0 in zip(module_weights(R), module_weights(M)):
            assert w.a == tuple(-x for x in reversed(w0.a))
            assert w.b == tuple((-b) % M.ell for b in reversed(w0.b))


def test_twist_rejects_unknown_automorphism():
    with pytest.raises(ValueError):
        twist(module_21(), "sigma")
    with pytest.raises(ValueError):
        twist(module_21(), "t")  # missing kappa


def test_jm_consistency():
    for ell, parts in ((1, [[2, 1]]), (2, [[2], [1]]), (2, [[1], [1]]),
                       (3, [[1], [], [2]])):
        M = build_module(partition_shape(ell, parts))
        report = jm_consistency(M)
        assert report.ok, [c.name for c in report.failures()]
        assert len(report.checks) == M.n


def test_jm_consistency_requires_partition_shape():
    skew = validate_and_canonicalize(1, [(0, 0, [(1, 1), (2, 0), (2, -1)])])
    with pytest.raises(NotAPartition):
        jm_consistency(build_module(skew))
    shifted = build_module(shift_contents(partition_shape(1, [[2, 1]]), 1))
    with pytest.raises(NotAPartition):
        jm_consistency(shifted)
    with pytest.raises(NotAPartition):
        jm_consistency(twist(module_21(), "t", Fraction(1, 2)))


def test_offset_half_module():
    D = validate_and_canonicalize(
        2, [(0, 0, [(1, 0), (1, 1)]), (1, Fraction(1, 2), [(1, 0)])])
    M = build_module(D)
    assert verify_relations(M).ok
    assert verify_intertwiners(M).ok
    # the half-offset coordinate contributes odd eigenvalues for ell = 2
    ws = module_weights(M)
    assert [list(w.a) for w in ws] == [[0, 2, 1], [0, 1, 2], [1, 0, 2]]
    assert [w.b for w in ws] == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    # a genuinely fractional offset shows up in the eigenvalues themselves
    frac = build_module(validate_and_canonicalize(
        2, [(0, Fraction(1, 3), [(1, 0)])]))
    assert module_weights(frac)[0].a == (Fraction(2, 3),)


def test_module_to_json():
    M = module_21()
    data = module_to_json(M)
    assert data["ell"] == 1 and data["n"] == 3 and data["dim"] == 2
    assert "mat_s" not in data
    assert len(data["weights"]) == 2 and len(data["basis"]) == 2
    full = module_to_json(M, include_matrices=True)
    assert len(full["mat_s"]) == 2 and len(full["mat_u"]) == 3
    assert full["mat_u"][0] == {"rows": 2, "entries": []}
    dense = module_to_json(M, include_matrices=True, dense=True)
    assert dense["mat_s"][1][0][1] == {"ell": 1, "coeffs": ["3/4"]}


def test_report_to_json():
    report = verify_relations(module_21())
    data = report.to_json()
    assert data["ok"] is True
    assert all(item["ok"] for item in data["checks"])


def test_verify_relations_full_small_corpus():
    for D in enumerate_shapes(2, 3, 3):
        M = build_module(D)
        assert verify_relations(M).ok
        assert verify_intertwiners(M).ok
        assert commutant_dimension(M) == 1
