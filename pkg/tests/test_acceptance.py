"""Acceptance gate: every release-blocking check, one pass/fail line each.

Run with `pytest tests/test_acceptance.py -v -s` to see the summary lines.
Time limits are part of the contract and are asserted, not just reported.
"""

import time

from polysyz import (
    NpVerdict,
    betti_table,
    build_ring,
    coh_dim_ample_power,
    coh_dim_product,
    compose_is_zero,
    cor1,
    cor_hilbert,
    cor_polytope,
    cor_prodproj,
    ehrhart_polynomial,
    is_normal,
    is_regular_product,
    is_regular_single,
    k_polynomial_checksum,
    koszul_betti,
    lattice_points,
    np_level,
    reciprocity_check,
)

from .oracles import hull_area_twice

# memoized rings/tables shared between the Koszul criteria and the
# integrity sweep (criterion 5), so each window is computed once
_ARTIFACTS = {}


def _koszul_window(name, P, c, max_i, max_slope):
    if name not in _ARTIFACTS:
        ring = build_ring(P, c, max_slope + 1)
        table = betti_table(ring, max_i, max_slope)
        _ARTIFACTS[name] = (ring, table)
    return _ARTIFACTS[name]


def _emit(line):
    from .conftest import ACCEPTANCE_LINES

    ACCEPTANCE_LINES.append(line)
    print(line)


def _timed(num, desc, limit, body):
    t0 = time.perf_counter()
    try:
        body()
    except Exception:
        elapsed = time.perf_counter() - t0
        _emit(f"ACCEPTANCE {num} ({desc}): FAIL [{elapsed:.1f}s]")
        raise
    elapsed = time.perf_counter() - t0
    ok = elapsed <= limit
    _emit(
        f"ACCEPTANCE {num} ({desc}): {'PASS' if ok else 'FAIL (over time limit)'}"
        f" [{elapsed:.1f}s / limit {limit:.0f}s]"
    )
    assert ok, f"criterion {num} exceeded its {limit}s budget ({elapsed:.1f}s)"


def test_criterion_1_cubic_c1(cubic_triangle):
    def body():
        ring, table = _koszul_window("cubic_c1", cubic_triangle, 1, 1, 3)
        assert table.entries == {(0, 0): 1, (1, 3): 1}
        v = np_level(ring, 1, 3, table=table)
        assert v[0].status != NpVerdict.FAILS
        assert v[1].status == NpVerdict.FAILS
        assert v[1].certificate == (1, 3, 1)

    _timed(1, "cubic surface c=1: exact table, N_0 holds, N_1 fails", 5.0, body)


def test_criterion_2_cubic_c2(cubic_triangle):
    def body():
        ring, table = _koszul_window("cubic_c2", cubic_triangle, 2, 4, 4)
        v = np_level(ring, 4, 4, table=table)
        assert v[3].status != NpVerdict.FAILS
        assert v[4].status == NpVerdict.FAILS

    _timed(2, "cubic surface c=2: N_3 holds, N_4 fails", 600.0, body)


def test_criterion_3_simplex112(simplex112):
    def body():
        rep = is_normal(simplex112)
        assert not rep.normal
        assert rep.witness == ((1, 1, 1), 2)
        ring, table = _koszul_window("s112_c2", simplex112, 2, 2, 5)
        v = np_level(ring, 2, 5, table=table)
        assert v[1].status != NpVerdict.FAILS
        assert v[2].status == NpVerdict.FAILS

    _timed(3, "(1,1,2)-simplex: witness ((1,1,1),2); c=2 N_1 holds, N_2 fails", 120.0, body)


def test_criterion_4_veronese(unit_triangle):
    def body():
        ring, table = _koszul_window("tri_c2", unit_triangle, 2, 2, 4)
        v = np_level(ring, 2, 4, table=table)
        assert all(x.status != NpVerdict.FAILS for x in v)

    _timed(4, "unit triangle c=2: no failure through N_2", 30.0, body)


def test_criterion_5_property_suite(
    unit_triangle, cubic_triangle, simplex112, corpus50
):
    def body():
        # Ehrhart reciprocity on the whole corpus, Pick in dimension 2
        for P in corpus50:
            assert reciprocity_check(P, 5)
            if P.dim == 2:
                h = ehrhart_polynomial(P)
                a2 = hull_area_twice(P.vertices)
                boundary = 2 * h(1) - 2 - a2  # Pick: b = 2|P| - 2 - 2A
                for d in range(1, 6):
                    assert 2 * len(lattice_points(P, d)) == a2 * d * d + boundary * d + 2

        # integrity of every Betti window computed in criteria 1-4
        windows = [
            _koszul_window("cubic_c1", cubic_triangle, 1, 1, 3),
            _koszul_window("cubic_c2", cubic_triangle, 2, 4, 4),
            _koszul_window("s112_c2", simplex112, 2, 2, 5),
            _koszul_window("tri_c2", unit_triangle, 2, 2, 4),
        ]
        for ring, table in windows:
            assert k_polynomial_checksum(table)
            for i in range(1, table.max_i + 1):
                for j in range(i, i + table.max_slope + 1):
                    assert compose_is_zero(ring, i, j)

        # projective normality of the section ring agrees with the sumset test
        for P in corpus50:
            slope = P.dim + 2
            ring = build_ring(P, 1, slope)
            n0 = all(koszul_betti(ring, 0, j) == 0 for j in range(1, slope + 1))
            assert n0 == is_normal(P).normal

    _timed(5, "reciprocity+Pick, checksums, d∘d=0, N_0 ⟺ normal on corpus", 600.0, body)


def test_criterion_6_soundness_sweep(corpus50):
    def body():
        checked = 0
        for P in corpus50:
            n = P.dim
            slope = n + 2
            guarantees = {}  # d -> max guaranteed p
            for d in range(1, 5):
                for p in (0, 1, 2):
                    results = [cor1(n, d, p)]
                    if p >= 1:
                        results.append(cor_hilbert(P, d, p))
                    for r in results:
                        if r.guaranteed:
                            guarantees[d] = max(guarantees.get(d, -1), p)
            rp = cor_polytope(P, crosscheck=False)
            if rp.guaranteed and 1 <= rp.threshold <= 4:
                guarantees[rp.threshold] = max(guarantees.get(rp.threshold, -1), 0)
            for d, p in sorted(guarantees.items()):
                if len(lattice_points(P, d)) > 24:
                    continue  # outside desk-scale Koszul reach
                ring = build_ring(P, d, slope + 1)
                verdicts = np_level(ring, p, slope)
                assert all(
                    v.status != NpVerdict.FAILS for v in verdicts
                ), f"criterion guaranteed N_{p} but Koszul fails: {P.vertices}, d={d}"
                checked += 1
        assert checked > 0

    _timed(6, "criteria soundness sweep (p ≤ 2, d ≤ 4, zero counterexamples)", 1800.0, body)


def test_criterion_7_regularity(unit_triangle, cubic_triangle, corpus50):
    def body():
        assert is_regular_single(unit_triangle, 0) is True
        assert is_regular_single(cubic_triangle, 1) is False
        assert is_regular_single(cubic_triangle, 2) is True
        for P in corpus50:
            h = ehrhart_polynomial(P)
            for d in range(-5, 6):
                chi = sum(
                    (-1) ** i * coh_dim_ample_power(P, d, i) for i in range(P.dim + 1)
                )
                assert chi == h(d)

    _timed(7, "regularity fixtures and exact Euler identity on corpus", 120.0, body)


def test_criterion_8_product_engine(unit_triangle):
    def body():
        for d in range(-6, 7):
            for i in range(3):
                assert coh_dim_product([2], (d,), i) == coh_dim_ample_power(
                    unit_triangle, d, i
                )
        assert cor_prodproj([2, 2], (2, 2), 2).guaranteed
        assert is_regular_product([2, 2], (0, 0))

    _timed(8, "product cohomology: ℓ=1 agreement, Segre-Veronese bound, O(0) regular", 60.0, body)
