"""Acceptance suite: one printed PASS/FAIL line per criterion, zero tolerance.

Run ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
"""

import json
import sys
import time
from contextlib import nullcontext
from fractions import Fraction
from pathlib import Path

import sympy

sys.path.insert(0, str(Path(__file__).parent))

from oracles import brute_force_multiplicity  # noqa: E402

from cayley_weights.cli import main as cli_main  # noqa: E402
from cayley_weights.deformations import twisted_cubic_coupled  # noqa: E402
from cayley_weights.eta import IndexQuery, NonFredholmRate, eta_report, expected_index  # noqa: E402
from cayley_weights.frames import (  # noqa: E402
    ExteriorForm,
    exterior_d,
    second_fundamental_form,
    verify_structure_equations,
)
from cayley_weights.profiles import C1, C2  # noqa: E402
from cayley_weights.spectrum import SpectrumQuery, eigenspace_dimension_crosscheck  # noqa: E402
from cayley_weights.weights import enumerate_weights, weight_multiplicity  # noqa: E402


def emit(capsys, line):
    with capsys.disabled() if capsys is not None else nullcontext():
        print(line, flush=True)


def judge(capsys, number, title, ok, detail, elapsed, limit):
    ok = ok and (limit is None or elapsed < limit)
    budget = f" (limit {limit} s)" if limit is not None else ""
    emit(capsys, f"\nACCEPTANCE {number} {'PASS' if ok else 'FAIL'}: {title}: {detail} [{elapsed:.3f} s{budget}]")
    assert ok, detail


def cli_json(argv):
    from io import StringIO
    from contextlib import redirect_stdout

    buf = StringIO()
    with redirect_stdout(buf):
        code = cli_main(argv + ["--json"])
    return code, json.loads(buf.getvalue())


def test_1_conical_dimensions(capsys):
    expected = {"c1": (12, 8), "c2": (22, 16), "c3": (30, 24)}
    got, worst = {}, 0.0
    for name in expected:
        t = time.perf_counter()
        code, report = cli_json(["dims", "--builtin", name])
        worst = max(worst, time.perf_counter() - t)
        r = report["result"]
        got[name] = (r["cayley_dim"], r["complex_dim"]) if code == 0 else None
    judge(capsys, 1, "conical dimensions", got == expected, f"(cayley, complex) = {got}", worst, 1.0)


def test_2_eta_invariant(capsys):
    t = time.perf_counter()
    code, report = cli_json(["eta", "--builtin", "c1"])
    r = report["result"]
    base = (r["eta0"], r["d0"], r["correction"])
    shifted = {k0: (lambda e: (e.eta, e.d0, e.correction))(eta_report(C1, k0=k0)) for k0 in (1, 3, 5)}
    elapsed = time.perf_counter() - t
    ok = code == 0 and base == ("-1", 4, "3/2") and all(v == (-1, 4, Fraction(3, 2)) for v in shifted.values())
    judge(capsys, 2, "eta invariant", ok, f"eta(0), d(0), correction = {base}; k0 in {{1,3,5}} invariant", elapsed, 1.0)


def test_3_genus(capsys):
    t = time.perf_counter()
    code, report = cli_json(["genus", "--degrees", "4,3"])
    g = report["result"]["genus"]
    judge(capsys, 3, "complete-intersection genus", code == 0 and g == 19, f"g(4,3) = {g}", time.perf_counter() - t, None)


def test_4_spectrum_fidelity(capsys):
    t = time.perf_counter()
    cases = mismatches = 0
    for d in range(-10, 11):
        for kappa in (Fraction(8), Fraction(4), Fraction(8, 3)):
            query = SpectrumQuery(d, kappa)
            for q in range(11):
                cases += 1
                if 1 + abs(d) + 2 * q != query.multiplicity(q) or query.multiplicity(q) != eigenspace_dimension_crosscheck(query, q):
                    mismatches += 1
    elapsed = time.perf_counter() - t
    ok = cases == 693 and mismatches == 0
    judge(capsys, 4, "spectrum fidelity", ok, f"{cases} cases, {mismatches} mismatches", elapsed, 1.0)


def test_5_oracle_equivalence(capsys):
    t = time.perf_counter()
    families = {"c1": (C1, [(1, 1), (1, 1)]), "c2": (C2, [(2, 2), (2, 4)])}
    bad = []
    for name, (profile, fam) in families.items():
        for lam in range(-6, 7):
            ours = weight_multiplicity(profile, lam).multiplicity
            theirs = brute_force_multiplicity(fam, profile.kappa, lam, q_max=50)
            if ours != theirs:
                bad.append((name, lam, ours, theirs))
    d = lambda lam: weight_multiplicity(C1, lam).multiplicity  # noqa: E731
    positive = all(d(lam) == 4 * (lam + 1) + 2 * lam * (lam + 1) for lam in range(1, 21))
    negative_literal = all(d(-lam) == 2 * (lam - 2) * (lam - 1) for lam in range(3, 21))
    asym = all(d(k) - d(-k) == 12 * k for k in range(1, 21))
    elapsed = time.perf_counter() - t
    ok = not bad and positive and negative_literal and asym
    detail = f"oracle mismatches {bad or 'none'} over 26 weights; closed forms {positive and negative_literal}; d(k)-d(-k)=12k {asym}"
    judge(capsys, 5, "oracle equivalence", ok, detail, elapsed, 5.0)


def test_6_coupled_system(capsys):
    t = time.perf_counter()
    counts = {Fraction(j, 3): sum(e.count for e in twisted_cubic_coupled(Fraction(j, 3))) for j in range(-11, 0)}
    split = sorted(e.count for e in twisted_cubic_coupled(Fraction(-2, 3)))
    m = sympy.Symbol("m")
    a = (6 * m + 16) / (4 - 3 * m)
    r = sympy.Rational
    residual = (r(8, 3) + m) * (r(4, 3) + 4 / a - m) - ((r(8, 3) + a + m) * (r(4, 3) - m) - r(4, 3) * (3 * m + 2))
    symbolic = sympy.simplify(sympy.together(residual)) == 0
    pointwise = all(residual.subs(m, r(j, 3)) == 0 for j in range(-11, 0) if a.subs(m, r(j, 3)) != 0)
    elapsed = time.perf_counter() - t
    others = {k: v for k, v in counts.items() if k != Fraction(-2, 3)}
    ok = counts[Fraction(-2, 3)] == 6 and split == [1, 5] and not any(others.values()) and symbolic and pointwise
    detail = f"m=-2/3 gives {counts[Fraction(-2, 3)]} ({'+'.join(map(str, reversed(split)))}), others {set(others.values())}; identity {symbolic and pointwise}"
    judge(capsys, 6, "twisted-cubic coupled system", ok, detail, elapsed, 1.0)


def test_7_structure_equations(capsys):
    t = time.perf_counter()
    report = verify_structure_equations()
    d2 = [exterior_d(exterior_d(ExteriorForm.generator(i))) for i in (1, 2, 3)]
    h = second_fundamental_form()
    symmetric = all(h[a, j, k] == h[a, k, j] for a in range(4, 8) for j in (1, 2, 3) for k in (1, 2, 3))
    first_row = all(h[a, 1, k] == 0 for a in range(4, 8) for k in (1, 2, 3))
    residuals = {c.name: c.passed for c in report.checks}
    elapsed = time.perf_counter() - t
    ok = len(residuals) == 5 and all(residuals.values()) and not any(d2) and symmetric and first_row
    detail = f"residuals zero {residuals}; d^2=0 {not any(d2)}; h symmetric {symmetric}; h_1k=0 {first_row}"
    judge(capsys, 7, "structure equations", ok, detail, elapsed, 1.0)


def test_8_index_formula(capsys):
    t = time.perf_counter()
    interior = [e for e in enumerate_weights(C1, 1, 2) if e.weight.cmp_rational(1) > 0 and e.weight.cmp_rational(2) < 0]
    rates = [Fraction(1) + Fraction(j, 17) for j in range(1, 17)]
    values = {expected_index(IndexQuery(4, mu, C1)) for mu in rates}
    try:
        expected_index(IndexQuery(4, 1, C1))
        rejects = False
    except NonFredholmRate:
        rejects = True
    elapsed = time.perf_counter() - t
    ok = not interior and len(values) == 1 and rejects
    detail = f"weights in (1,2): {len(interior)}; index over 16 rates {sorted(values)}; mu=1 rejected {rejects}"
    judge(capsys, 8, "index formula", ok, detail, elapsed, 1.0)


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn(None)
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
