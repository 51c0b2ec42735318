"""Exit criteria, one test per criterion.

Every expected value is either computed here by an independent route
(naive enumeration, Dyck-path counting, binomial rows from ``math.comb``)
or recomputed by the group-ring oracle; none is copied in unchecked.
"""

import json
import random
from math import comb

import pytest

from radial import algebra as A
from radial.cli import main
from radial.engine import (
    RelationParams,
    coefficient_sequence,
    expand_power,
    expand_xk_Xn,
    paper_expansion,
    paper_trace_closed_form,
)
from radial.verify import (
    DEFAULT_ALTERNATING_SPECS,
    REFUTED,
    discrepancy_report,
    trace_alternating,
    trace_product,
)
from radial.words import word_count

from conftest import dyck_moment, record_criterion

GRID_N = (1, 2, 3)
GRID_K = range(6)
GRID_n = range(5)
LITERAL_EMBED_MAX = 200_000


def _presets(N):
    return (RelationParams.paper_text(N), RelationParams.verified(N))


def test_criterion_1_oracle_equivalence():
    failures = []
    literal = 0
    for N in GRID_N:
        params = RelationParams.verified(N)
        for n in GRID_n:
            product = A.build_X(N, n)
            for k in GRID_K:
                if k:
                    product = A.left_multiply_by_x(product)
                engine = expand_xk_Xn(params, k, n)
                if len(product) <= LITERAL_EMBED_MAX:
                    literal += 1
                    ok = A.from_radial(N, engine.coeffs) == product
                else:
                    # every length class complete with one shared coefficient
                    ok = A.radial_profile(product) == engine.nonzero()
                if not ok:
                    failures.append((N, k, n))
    total = len(GRID_N) * len(GRID_K) * len(GRID_n)
    assert record_criterion(1, "verified expansion equals oracle product on every word", not failures,
                            f"{total - len(failures)}/{total} points, {literal} by literal embedding")


def test_criterion_2_paper_text_reproduction():
    bad = []
    for N in (2, 3):
        c = N - 1
        # x^3 = X3 + (2N + (N-1)) X1
        if expand_xk_Xn(RelationParams.paper_text(N), 3, 0).nonzero() != {3: 1, 1: 2 * N + (N - 1)}:
            bad.append((N, "x^3"))
        # x^2 X3 = X5 + 2(N-1) X3 + (N-1)^2 X1
        want = {5: 1, 3: 2 * c, 1: c * c}
        for got in (expand_xk_Xn(RelationParams.paper_text(N), 2, 3), paper_expansion(N, 2, 3)):
            if got.nonzero() != {j: v for j, v in want.items() if v}:
                bad.append((N, "x^2 X3"))
        # x^5 X3 with nested products of the rows of (r + (N-1))^3 and (r + (N-1))^2
        r3 = {i + 1: comb(3, i) * c**i for i in range(4)}
        r2 = {i + 1: comb(2, i) * c**i for i in range(3)}
        want = {
            8: r3[1] * r2[1],
            6: r3[1] * r2[2] + r3[2] * r2[1],
            4: r3[1] * r2[3] + r3[2] * r2[2] + r3[3] * r2[1],
            2: r3[2] * r2[3] + r3[3] * r2[2] + r3[4],
            0: r3[3] * r2[3] + 2 * N * r3[4],
        }
        if paper_expansion(N, 5, 3).nonzero() != {j: v for j, v in want.items() if v}:
            bad.append((N, "x^5 X3"))
        if paper_trace_closed_form(N, 5, 3) != want[0]:
            bad.append((N, "x^5 X3 constant"))
    assert record_criterion(2, "printed expansions reproduced at N = 2, 3", not bad, f"mismatches: {bad}" if bad else "")


def test_criterion_3_moment_table():
    bad = []
    for N in GRID_N:
        powers = [A.identity(N)]
        odd_oracle_max = 11 if N <= 2 else 7
        for _ in range(odd_oracle_max):
            powers.append(A.left_multiply_by_x(powers[-1]))
        for params in _presets(N):
            if expand_power(params, 2)[0] != 2 * N:
                bad.append((N, params.mode, "x^2"))
            for k in range(1, 12, 2):
                if expand_power(params, k)[0] != 0:
                    bad.append((N, params.mode, k))
        for k in range(1, odd_oracle_max + 1, 2):
            if A.trace(powers[k]) != 0 or dyck_moment(N, k) != 0:
                bad.append((N, "oracle", k))
        if A.trace(powers[2]) != 2 * N:
            bad.append((N, "oracle", 2))
        four = 2 * N * (4 * N - 1)
        if not (four == dyck_moment(N, 4) == A.trace(powers[4]) == expand_power(RelationParams.verified(N), 4)[0]):
            bad.append((N, "x^4"))
    six = (dyck_moment(2, 6), A.trace(A.x_power(2, 6)), expand_power(RelationParams.verified(2), 6)[0])
    if six != (232, 232, 232):
        bad.append(("x^6", six))
    assert record_criterion(3, "moments of x: tau(x^2)=2N, odd moments 0, tau(x^4), tau(x^6)=232", not bad,
                            f"mismatches: {bad}" if bad else "")


def test_criterion_4_vanishing_above_index():
    bad = []
    checked = 0
    for N in GRID_N:
        for k in GRID_K:
            xk = A.x_power(N, k)
            for n in GRID_n:
                if n <= k:
                    continue
                checked += 1
                values = [expand_xk_Xn(p, k, n)[0] for p in _presets(N)]
                values += [paper_trace_closed_form(N, k, n), trace_product(xk, A.build_X(N, n))]
                if any(values):
                    bad.append((N, k, n, values))
    assert record_criterion(4, "tau(x^k X_n) = 0 for n > k in both presets and the oracle", not bad,
                            f"{checked} points")


def test_criterion_5_equal_index_claim_refuted():
    report = discrepancy_report(3, 4, 4)
    claim = next(c for c in report["claims"] if c["claim_id"] == "trace-equal-index")
    w = claim["witness"]
    values = {(v["N"], v["n"]): int(v["oracle"]) for v in w["oracle_values"]}
    # independent recomputation: trace of x^n X_n from a fresh product
    recomputed = {(N, n): trace_product(A.x_power(N, n), A.build_X(N, n)) for N in GRID_N for n in range(1, 5)}
    formula = {(N, n): 2 * N * (2 * N - 1) ** (n - 1) for N in GRID_N for n in range(1, 5)}
    ok = (
        claim["status"] == REFUTED
        and (w["N"], w["n"], w["paper"], w["oracle"]) == (2, 1, "1", "4")
        and values == recomputed == formula
        and w["oracle_formula_holds"]
    )
    assert record_criterion(5, "tau(x^n X_n) = (N-1)^n marked REFUTED, oracle gives 2N(2N-1)^(n-1)", ok,
                            f"witness N={w['N']} n={w['n']} paper={w['paper']} oracle={w['oracle']}")


def test_criterion_6_commutation_and_alternating_products():
    bad = []
    for N in GRID_N:
        for n in GRID_n:
            left = right = A.build_X(N, n)
            for k in GRID_K:
                if k:
                    left = A.left_multiply_by_x(left)
                    right = A.right_multiply_by_x(right)
                if left != right:
                    bad.append(("commute", N, k, n))
    evaluated = 0
    for N in GRID_N:
        for spec in DEFAULT_ALTERNATING_SPECS:
            direct, reduced = trace_alternating(spec, N)
            evaluated += 1
            if direct != reduced:
                bad.append(("alternating", N, spec, direct, reduced))
    ok = not bad and len(DEFAULT_ALTERNATING_SPECS) >= 10
    assert record_criterion(6, "x^k X_n = X_n x^k and alternating traces collapse", ok,
                            f"{evaluated} alternating products over {len(DEFAULT_ALTERNATING_SPECS)} specs")


def _random_element(rng, N, max_terms=15, max_len=4):
    alphabet = [ch for i in range(N) for ch in (chr(97 + i), chr(65 + i))]
    terms = []
    for _ in range(rng.randint(0, max_terms)):
        word = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, max_len)))
        terms.append((word, rng.randint(-30, 30)))
    return A.AlgebraElement(N, terms)


def test_criterion_7_property_suites():
    bad = []
    for N in GRID_N:
        for params in _presets(N):
            for k in range(13):
                v = expand_power(params, k)
                if any(c for j, c in enumerate(v.coeffs) if (j - k) % 2):
                    bad.append(("parity", N, params.mode, k))
        verified = RelationParams.verified(N)
        for k in range(9):
            for n in range(9 - k):
                v = expand_xk_Xn(verified, k, n)
                if sum(c * word_count(N, j) for j, c in enumerate(v.coeffs)) != (2 * N) ** k * word_count(N, n):
                    bad.append(("mass", N, k, n))
    rng = random.Random(20240601)
    samples = 0
    for _ in range(120):
        N = rng.choice(GRID_N)
        p, q = _random_element(rng, N), _random_element(rng, N)
        samples += 1
        if A.trace(A.mul(p, q)) != A.trace(A.mul(q, p)):
            bad.append(("trace", p, q))
        t = A.trace(A.mul(A.adjoint(p), p))
        if t < 0 or (t == 0) != (len(p) == 0):
            bad.append(("positivity", p))
    for c in (-2, 0, 1, 3, 5):
        for p in range(13):
            if coefficient_sequence(p, c).entries != tuple(comb(p, i) * c**i for i in range(p + 1)):
                bad.append(("triangle", p, c))
    assert record_criterion(7, "parity, mass conservation, trace/positivity, triangle rows", not bad,
                            f"{samples} random element pairs")


def test_criterion_8_verify_is_deterministic(capsys, tmp_path):
    outputs = []
    for i in range(2):
        target = tmp_path / f"report{i}.json"
        code = main(["verify", "--output", str(target)])
        assert code == 0
        outputs.append(target.read_bytes())
    capsys.readouterr()
    report = json.loads(outputs[0])
    ok = outputs[0] == outputs[1] and len(report["records"]) == 2 * 3 * 6 * 5
    assert record_criterion(8, "two default verify runs give byte-identical JSON", ok, f"{len(outputs[0])} bytes")
