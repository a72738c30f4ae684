"""Spectrum verification, constructions, pairings, progressions, rank cases."""

import itertools
import random
from fractions import Fraction

import pytest

from spectile.cyclotomic import RootOfUnity
from spectile.errors import NoGoodPairingError, PreconditionError
from spectile.intervals import IntervalUnion, d_tiles, in_zero_set
from spectile.spectra import (
    FiniteSpectrumWindow,
    PeriodicSet,
    ap_extension_check,
    check_orthogonality,
    completeness_matrix,
    construct_half_pair,
    construct_unit3_pair,
    construct_unit4_pair,
    find_aps,
    good_pairing,
    half_pair_reduction_identity,
    rank_case,
    separation,
    spectrum_ap_extension,
    verify_spectral_pair,
)
from spectile.ztiling import newman_tiles

F = Fraction


def test_periodic_set_basics():
    ps = PeriodicSet(F(1), (F(0), F(1, 3), F(2, 3)))
    assert ps.density == 3
    assert ps.contains(F(7, 3))
    assert not ps.contains(F(1, 2))
    pts = ps.points_in_window(2)
    assert pts[0] == -2 and pts[-1] == 2 and F(4, 3) in pts
    with pytest.raises(ValueError):
        PeriodicSet(F(1), (F(1, 3),))


def test_periodic_set_json():
    ps = PeriodicSet(F(1, 2), (F(0), F(1, 4)))
    data = ps.to_json_dict()
    assert data == {"period": ["1", "2"], "cosets": [["0", "1"], ["1", "4"]]}
    assert PeriodicSet.from_json_dict(data) == ps


def test_residues_mod_one():
    ps = PeriodicSet(F(1, 2), (F(0), F(1, 4)))
    assert ps.residues_mod_one() == (F(0), F(1, 4), F(1, 2), F(3, 4))


def test_orthogonality_simple_failure():
    om = IntervalUnion.from_pieces([(0, 1)])
    win = FiniteSpectrumWindow.from_points([0, F(1, 2)], 2)
    rep = check_orthogonality(om, win)
    assert not rep.orthogonal
    assert rep.violation == (F(0), F(1, 2))


def test_orthogonality_trivial_singleton():
    om = IntervalUnion.from_pieces([(0, 1)])
    win = FiniteSpectrumWindow.from_points([0], 2)
    assert check_orthogonality(om, win).orthogonal


def test_orthogonality_three_cells():
    om = IntervalUnion.from_unit_cells([0, 4, 2])
    ps = PeriodicSet(F(1), (F(0), F(1, 3), F(2, 3)))
    win = FiniteSpectrumWindow.from_periodic(ps, 3)
    assert check_orthogonality(om, win).orthogonal


def test_completeness_matrix_examples():
    assert completeness_matrix([0, 4, 2], [F(0), F(1, 3), F(2, 3)])
    assert completeness_matrix([0, 1], [F(0), F(1, 2)])
    assert not completeness_matrix([0, 2], [F(0), F(1, 3)])
    with pytest.raises(ValueError):
        completeness_matrix([0, 1], [F(0)])


def test_completeness_matrix_against_float_oracle():
    import cmath

    rng = random.Random(17)
    for _ in range(60):
        k = rng.choice([2, 3, 4])
        cells = sorted(rng.sample(range(0, 8), k))
        mus = sorted({F(rng.randrange(12), 12) for _ in range(k)})
        if len(mus) != k:
            continue
        exact = completeness_matrix(cells, mus)
        # float Gram matrix
        gram_ok = True
        for i in range(k):
            for j in range(i + 1, k):
                s = sum(
                    cmath.exp(2j * cmath.pi * float((mus[i] - mus[j]) * a))
                    for a in cells
                )
                if abs(s) > 1e-9:
                    gram_ok = False
        assert exact == gram_ok


def test_unit3_construction_examples():
    om, ps = construct_unit3_pair(0, 1, 0)
    assert [a for a, _ in om.pieces] == [0, 2, 4]
    assert ps.cosets == (F(0), F(1, 3), F(2, 3))
    om, ps = construct_unit3_pair(1, 0, 0)
    assert sorted([a for a, _ in om.pieces]) == [0, 3, 6]
    assert ps.cosets == (F(0), F(1, 9), F(2, 9))
    om, ps = construct_unit3_pair(0, 0, 0)
    assert om.measure == 3 and [a for a, _ in om.pieces] == [0, 1, 2]


def test_unit3_round_trip():
    for j, r, s in itertools.product(range(3), range(-2, 3), range(-2, 3)):
        om, ps = construct_unit3_pair(j, r, s)
        rep = verify_spectral_pair(om, ps, 12)
        assert rep.orthogonal and rep.completeness == "unitary"
        assert rep.density_matches
        a = 3**j * (3 * r + 1)
        b = 3**j * (3 * s + 2)
        assert newman_tiles([0, a, b]).tiles


def test_unit4_construction_examples():
    om, ps = construct_unit4_pair(1, 1, 1)
    assert [a for a, _ in om.pieces] == [0, 2, 3]
    assert ps.period == F(1, 2) and ps.cosets == (F(0), F(1, 4))
    om, ps = construct_unit4_pair(2, 1, 1)
    assert {a for a, _ in om.pieces} == {0, 5, 4}
    assert ps.cosets == (F(0), F(1, 8))
    om, ps = construct_unit4_pair(1, 1, 3)
    assert {a for a, _ in om.pieces} == {0, 3, 6}
    rep = verify_spectral_pair(om, ps, 12)
    assert rep.orthogonal and rep.completeness == "unitary"
    with pytest.raises(ValueError):
        construct_unit4_pair(1, 2, 1)
    with pytest.raises(ValueError):
        construct_unit4_pair(0, 1, 1)


def test_unit4_spectrum_density_matches_measure():
    om, ps = construct_unit4_pair(1, 1, 1)
    assert om.measure == 4
    assert ps.density == 4


def test_half_pair_examples():
    om, ps = construct_half_pair(1, 3, 1, F(1, 4))
    assert ps.period == 2 and ps.cosets == (F(0), F(1))
    rep = verify_spectral_pair(om, ps, 6)
    assert rep.orthogonal
    assert rep.completeness == "not-decided"
    assert rep.density_matches

    with pytest.raises(PreconditionError):
        construct_half_pair(2, 5, 1, F(1, 4))  # l not an integer
    with pytest.raises(PreconditionError):
        construct_half_pair(2, 4, 2, F(1, 4))  # k0 does not divide l


def test_half_pair_valid_variant():
    om, ps = construct_half_pair(2, 6, 2, F(1, 4))
    assert ps.cosets == (F(0), F(1, 2))
    rep = verify_spectral_pair(om, ps, 6)
    assert rep.orthogonal and rep.density_matches


def test_half_pair_reduction_identity():
    # differences of the candidate spectrum have lam*l integral
    for m in range(-3, 4):
        assert half_pair_reduction_identity(1, 3, 1, F(1, 4), 2 * m + 1)
        assert half_pair_reduction_identity(1, 3, 1, F(1, 4), 2 * m)


def test_good_pairing_examples():
    z = RootOfUnity(F(1, 5))
    w = RootOfUnity(F(1, 3))
    u = RootOfUnity(F(1, 7))
    pairing = good_pairing([z, z, w, w, u, u])
    assert pairing.pairs == ((0, 1), (2, 3), (4, 5))
    pairing = good_pairing([z, w, w, z, u, u])
    assert pairing.pairs == ((0, 3), (1, 2), (4, 5))
    with pytest.raises(NoGoodPairingError):
        good_pairing([z, z, z, w, w, w])


def test_good_pairing_matches_exhaustive_oracle():
    def oracle(zetas):
        # all ways to match even positions to odd positions
        for perm in itertools.permutations([1, 3, 5]):
            if all(zetas[e] == zetas[o] for e, o in zip([0, 2, 4], perm)):
                return True
        return False

    rng = random.Random(23)
    pool = [RootOfUnity(F(k, 6)) for k in range(6)]
    for _ in range(500):
        zetas = [rng.choice(pool) for _ in range(6)]
        try:
            pairing = good_pairing(zetas)
            ok = True
            for i, j in pairing.pairs:
                assert (i + j) % 2 == 1 and zetas[i] == zetas[j]
        except NoGoodPairingError:
            ok = False
        assert ok == oracle(zetas)


def test_separation_examples():
    assert separation([0, 1, 2]) == 1
    assert separation([0, F(1, 3), 1]) == F(1, 3)
    assert separation([0, F(1, 2), F(4, 5)]) == F(3, 10)
    with pytest.raises(ValueError):
        separation([1])


def test_find_aps_examples():
    pts = [0, 1, 2, 3, 4, 5, F(15, 2)]
    assert find_aps(pts, 6) == ((F(0), F(1), 6),)
    assert find_aps([0, 2, 4, 6], 4) == ((F(0), F(2), 4),)
    assert find_aps([0, 1, 3, 6, 10], 3) == ((F(0), F(3), 3),)


def ap_oracle(points, min_len):
    pts = sorted(points)
    ptset = set(pts)
    found = set()
    for i in range(len(pts)):
        for j in range(i + 1, len(pts)):
            d = pts[j] - pts[i]
            if pts[i] - d in ptset:
                continue
            length = 2
            x = pts[j] + d
            while x in ptset:
                length += 1
                x += d
            if length >= min_len:
                found.add((pts[i], d, length))
    return tuple(sorted(found))


def test_find_aps_against_oracle_and_reflection():
    rng = random.Random(31)
    for _ in range(200):
        pts = sorted(
            {F(rng.randint(-20, 20), rng.randint(1, 6)) for _ in range(rng.randint(2, 10))}
        )
        got = find_aps(pts, 3)
        assert got == ap_oracle(pts, 3)
        mirrored = find_aps([-p for p in pts], 3)
        assert len(mirrored) == len(got)
        for start, diff, length in got:
            assert (-(start + (length - 1) * diff), diff, length) in mirrored


def test_ap_extension_check():
    om = IntervalUnion.from_unit_cells([0, 4, 2]).scaled(F(1, 3))
    assert ap_extension_check(om, 1, 50)
    om1 = IntervalUnion.from_pieces([(0, 1)])
    assert ap_extension_check(om1, 1, 50)
    bad = IntervalUnion.from_pieces([(0, F(1, 2)), (F(3, 4), F(1, 2))])
    with pytest.raises(PreconditionError):
        ap_extension_check(bad, F(1, 2), 10)


def test_ap_extension_random_tilers():
    # random translate-structured sets satisfy the progression hypothesis
    rng = random.Random(37)
    count = 0
    while count < 40:
        d = rng.randint(1, 4)
        parts = _random_cover_runs(rng, d)
        if parts is None:
            continue
        om = IntervalUnion.from_pieces(parts).scaled(F(1, d))
        count += 1
        assert ap_extension_check(om, d, 50)
        assert d_tiles(om, d)


def _random_cover_runs(rng, d):
    # up to three runs of unit cells whose residues cover Z_d exactly once
    for _ in range(50):
        lengths = []
        remaining = d
        while remaining and len(lengths) < 3:
            take = rng.randint(1, remaining) if len(lengths) < 2 else remaining
            lengths.append(take)
            remaining -= take
        starts = [rng.randint(0, 3 * d) for _ in lengths]
        cells = sorted(
            c for s, ln in zip(starts, lengths) for c in range(s, s + ln)
        )
        if len(set(cells)) != d or sorted(c % d for c in cells) != list(range(d)):
            continue
        runs = []
        run_start = prev = cells[0]
        for c in cells[1:]:
            if c == prev + 1:
                prev = c
                continue
            runs.append((F(run_start), F(prev - run_start + 1)))
            run_start = prev = c
        runs.append((F(run_start), F(prev - run_start + 1)))
        if len(runs) > 3:
            continue
        return runs
    return None


def test_spectrum_ap_extension():
    om = IntervalUnion.from_unit_cells([0, 4, 2]).scaled(F(1, 3))
    ps = PeriodicSet(F(1), (F(0),))
    win = FiniteSpectrumWindow.from_periodic(ps, 8)
    rep = spectrum_ap_extension(om, win, 0, 1)
    assert rep.holds

    om4, ps4 = construct_unit4_pair(1, 1, 1)
    win4 = FiniteSpectrumWindow.from_periodic(ps4, 6)
    assert spectrum_ap_extension(om4, win4, 0, 1).holds

    # a hole beyond the first six points is found with its witness
    pts = [x for x in win.points if x != 7]
    win_hole = FiniteSpectrumWindow.from_points(pts, 8)
    rep = spectrum_ap_extension(om, win_hole, 0, 1)
    assert not rep.holds and rep.witness == (F(7), None)

    with pytest.raises(PreconditionError):
        spectrum_ap_extension(om, FiniteSpectrumWindow.from_points([0, 1, 2], 8), 0, 1)


def test_rank_case_equal_cells():
    om = IntervalUnion.from_pieces([(0, F(1, 3)), (1, F(1, 3)), (2, F(1, 3))])
    rep = rank_case(om, 3, F(1, 3))
    assert rep.rank == 1 and rep.kind == "equal-cell-decomposition"
    l2, l3, k1, k2, k3, d_int = rep.witness
    assert (l2, l3) == (3, 6)
    assert (k1, k2, k3) == (1, 1, 1)
    assert k1 + k2 + k3 == d_int == 3


def test_rank_case_distinct_nodes():
    om = IntervalUnion.from_unit_cells([0, 4, 2]).scaled(F(1, 3))
    rep = rank_case(om, 2, 1)
    assert rep.rank == 3 and rep.kind == "forced-equalities"
    for i, j, _ in rep.witness:
        assert (i + j) % 2 == 1


def test_rank_case_two_nodes():
    om = IntervalUnion.from_pieces([(0, F(1, 2)), (F(1, 2), F(1, 4)), (F(3, 4), F(1, 4))])
    rep = rank_case(om, 2, 1)
    assert rep.rank == 2 and rep.kind == "paired-cancellation"
    assert len(rep.witness) >= 1


def test_rank_case_relabeling_invariance():
    pieces = [(0, F(1, 3)), (1, F(1, 3)), (2, F(1, 3))]
    base = rank_case(IntervalUnion.from_pieces(pieces), 3, F(1, 3))
    for perm in itertools.permutations(pieces):
        rep = rank_case(IntervalUnion.from_pieces(perm), 3, F(1, 3))
        assert rep.rank == base.rank and rep.witness == base.witness


def test_rank_case_preconditions():
    om = IntervalUnion.from_pieces([(0, F(1, 3)), (1, F(1, 3)), (2, F(1, 3))])
    with pytest.raises(PreconditionError):
        rank_case(om, 3, 3)  # lam inside dZ
    with pytest.raises(PreconditionError):
        rank_case(om, 3, F(1, 2))  # lam not in the zero set
    om2 = IntervalUnion.from_unit_cells([0, 4, 2]).scaled(F(1, 3))
    with pytest.raises(PreconditionError):
        rank_case(om2, 2, F(5, 2))  # kd - lam leaves the zero set
