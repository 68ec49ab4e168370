"""Acceptance criteria 1-7, one check each, each printing a PASS/FAIL line.

Run directly (``python3 tests/test_acceptance.py``) for the summary alone.
"""

import json
import random
import sys
import warnings
from fractions import Fraction
from pathlib import Path

import pytest

HERE = Path(__file__).resolve().parent
sys.path.insert(0, str(HERE))

import oracles  # noqa: E402
from jordanmax.corpus import bundled_documents, bundled_path, load_bundled  # noqa: E402
from jordanmax.criteria import (  # noqa: E402
    branches_nu_lambda1,
    curve_nu_03,
    load_h1_data,
    singular_nu_c,
    singular_nu_c_upper,
    smooth_hyperresolution,
    theorem3_nu,
    theorem4_check,
)
from jordanmax.eigen import (  # noqa: E402
    build_b_complex,
    build_c_complex,
    canonical_atlas,
    exponents_for,
    nu,
    nu_vector,
    parse_atlas,
)
from jordanmax.model import lambda_orders, parse_model  # noqa: E402
from jordanmax.spectrum import SpectrumPoly, spectrum_homogeneous, spectrum_yomdin  # noqa: E402

FROZEN = json.loads((HERE / "frozen_oracles.json").read_text())


class Check:
    def __init__(self):
        self.failures = []
        self.count = 0

    def eq(self, label, got, want):
        self.count += 1
        if got != want:
            self.failures.append(f"{label}: got {got!r}, want {want!r}")

    def true(self, label, cond):
        self.eq(label, bool(cond), True)


def criterion_1(ck):
    for m in (2, 3, 5):
        model, atlas = load_bundled("ex4_1" if m == 3 else f"ex4_1_m{m}")
        for a in exponents_for(m):
            ck.eq(f"m={m} a={a} C dims", build_c_complex(model, m, a).dims, (2, 1))
            ck.eq(f"m={m} a={a} B dims", build_b_complex(model, m, atlas, a).dims, (0, 1))
        for d in lambda_orders(model):
            for a in exponents_for(d):
                ck.eq(f"m={m} nu^1(d={d},a={a})", nu(model, atlas, d, a, 1), 0 if d == 1 else 1)


def criterion_2(ck):
    model, atlas = load_bundled("ex4_3A")
    for a in exponents_for(3):
        ck.eq(f"A a={a} b", build_b_complex(model, 3, atlas, a).dims, (0, 3, 6))
        ck.eq(f"A a={a} c", build_c_complex(model, 3, a).dims, (1, 5, 6))
        ck.eq(f"A a={a} nu^2", nu(model, atlas, 3, a, 2), 3)
        ck.eq(f"A a={a} nu^2 (Euler)", theorem3_nu(model, atlas, 3, a)[2], 3)
    model, atlas = load_bundled("ex4_3B")
    for a in exponents_for(3):
        ck.eq(f"B a={a} nu^2", nu(model, atlas, 3, a, 2), 2)
        ck.eq(f"B a={a} nu^2 (Euler)", theorem3_nu(model, atlas, 3, a)[2], 2)


def criterion_3(ck):
    for a in (2, 3, 4):
        model, atlas = load_bundled(f"ex4_4_a{a}")
        dims = build_c_complex(model, 2).dims
        ck.eq(f"a={a} dim C^0", dims[0], 2 * a - 3)
        ck.eq(f"a={a} dim C^1", dims[1], 2 * a - 2)
        h1 = load_h1_data(bundled_path(f"ex4_4_a{a}.h1.json"))
        ck.true(f"a={a} H_1 vanishing per stratum", theorem4_check(model, 2, h1).b_equals_c)
        ck.true(f"a={a} H_1 vanishing on the union", theorem4_check(model, 2, h1, scope="union").b_equals_c)
        ck.eq(f"a={a} B = C", build_b_complex(model, 2, canonical_atlas()).dims, dims)
        ck.eq(f"a={a} nu^1", nu(model, atlas, 2, 1, 1), 1)
        ck.eq(f"a={a} nu^1 (Euler)", theorem3_nu(model, atlas, 2)[1], 1)


def criterion_4(ck):
    ck.eq("cubic", spectrum_homogeneous(2, 3, [1, 1, 1]), SpectrumPoly({1: 1, 2: -2}))
    for p in range(4, 13):
        want = SpectrumPoly({1: 1, 2: -2})
        for l in range(1, p + 1):
            want = want + SpectrumPoly.monomial(1 + Fraction(l, p), 3)
        got = spectrum_yomdin(2, 3, p - 3, [1, 1, 1])
        ck.eq(f"T_{p}{p}{p}", got, want)
        ck.true(f"T_{p}{p}{p} symmetric", got.is_symmetric(3))
        ck.eq(f"T_{p}{p}{p} total", got.total(), 3 * p - 1)
        ck.eq(f"T_{p}{p}{p} Milnor oracle", got.total(), FROZEN["t_ppp_milnor"][str(p)])


def _n1_stems():
    docs = bundled_documents()
    for name, doc in sorted(docs.items()):
        if name.endswith((".atlas.json", ".h1.json", ".hyper.json")) or doc.get("n") != 1:
            continue
        yield name[: -len(".json")]


def criterion_5(ck):
    compared = 0
    for stem in _n1_stems():
        model, atlas = load_bundled(stem)
        if not model.isolated_singularity or model.horizontal:
            continue
        for d in lambda_orders(model):
            if d == 1:
                continue
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                value = curve_nu_03(model, d)
            ck.eq(f"{stem} d={d} pair count vs Euler", value, theorem3_nu(model, atlas, d)[1])
            compared += 1
        r = model.flags.get("branches")
        if r is not None:
            ck.eq(f"{stem} nu^1(1) = r - 1", nu(model, atlas, 1, 1, 1), branches_nu_lambda1(r))
            ck.eq(f"{stem} Euler at 1", theorem3_nu(model, atlas, 1)[1], r - 1)
    ck.true("some n=1 models compared", compared >= 10)


def criterion_6(ck):
    from test_properties import _atlas_doc, _with_random_horizontal

    instances = 0
    for seed in range(220):
        rng = random.Random(seed)
        doc = oracles.random_model_doc(rng, max_strata=8)
        model = parse_model(doc)
        instances += 1
        for d in oracles.divisors_of_some(doc):
            c = build_c_complex(model, d)
            c.complex.check()
            ck.eq(f"seed {seed} d={d} C", c.cohomology(), oracles.oracle_cohomology(doc, d)[1])
            b1 = build_b_complex(model, 1, canonical_atlas())
            ck.eq(f"seed {seed} collapse", b1.differentials, build_c_complex(model, 1).differentials)
            if d == 1:
                continue
            ordered, kappa = oracles.random_trivial_and_gauge(rng, doc, d)
            atlas = parse_atlas(_atlas_doc(doc, d, ordered, kappa), model)
            hs = set()
            for a in exponents_for(d):
                b = build_b_complex(model, d, atlas, a)
                b.complex.check()
                graded, mats = oracles.cech_matrices(doc, d, ordered, kappa, a)
                ck.true(f"seed {seed} d={d} a={a} oracle d^2", oracles.square_is_zero(mats, d))
                h = b.cohomology()
                ck.eq(f"seed {seed} d={d} a={a} B", h, oracles.cohomology_from_matrices([len(g) for g in graded], mats, d))
                ck.true(f"seed {seed} d={d} B <= C", all(x <= y for x, y in zip(b.dims, c.dims)))
                ck.eq(f"seed {seed} Euler", sum((-1) ** j * x for j, x in enumerate(h)), b.euler_characteristic())
                hs.add(tuple(h))
            ck.eq(f"seed {seed} d={d} Galois", len(hs), 1)
    ck.true("at least 200 random instances", instances >= 200)
    for seed in range(60):
        rng = random.Random(10_000 + seed)
        model = parse_model(_with_random_horizontal(rng, oracles.random_model_doc(rng, max_strata=8)))
        inp = smooth_hyperresolution(model, canonical_atlas())
        for d in lambda_orders(model):
            h, hc = nu_vector(model, canonical_atlas(), d)
            ck.eq(f"smooth {seed} d={d} nu_c", [singular_nu_c(inp, d, 1, j) for j in range(model.n + 1)], hc)
            ck.eq(f"smooth {seed} d={d} upper", [singular_nu_c_upper(inp, d, 1, j) for j in range(model.n + 1)], h)


def criterion_7(ck):
    ma, aa = load_bundled("ex4_3A")
    mb, ab = load_bundled("ex4_3B")
    for d in lambda_orders(ma):
        ck.eq(f"d={d} C dims agree", build_c_complex(ma, d).dims, build_c_complex(mb, d).dims)
    ck.eq("same lattice", ma.strata, mb.strata)
    ck.eq("same multiplicities", ma.multiplicities, mb.multiplicities)
    na, nb = nu(ma, aa, 3, 1, 2), nu(mb, ab, 3, 1, 2)
    ck.eq("nu^2 variants", (na, nb), (3, 2))
    ck.true("nu^2 differs", na != nb)


CRITERIA = [
    (1, "elliptic surface with torsion", criterion_1),
    (2, "inflection-line surface, two atlases", criterion_2),
    (3, "curve pair family", criterion_3),
    (4, "spectrum checks", criterion_4),
    (5, "formula coherence", criterion_5),
    (6, "property suite", criterion_6),
    (7, "combinatorics do not determine nu", criterion_7),
]


def evaluate(fn):
    ck = Check()
    try:
        fn(ck)
    except Exception as exc:  # reported as a failure line, not swallowed
        ck.failures.append(f"raised {type(exc).__name__}: {exc}")
    return ck


def _line(number, title, ck):
    status = "PASS" if not ck.failures else "FAIL"
    line = f"criterion {number} ({title}): {status} [{ck.count} checks]"
    if ck.failures:
        line += " first failure: " + ck.failures[0]
    return line


@pytest.mark.parametrize("number, title, fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, fn, capsys):
    ck = evaluate(fn)
    with capsys.disabled():
        print("\n" + _line(number, title, ck))
    assert not ck.failures, "\n".join(ck.failures[:10])


if __name__ == "__main__":
    bad = 0
    for number, title, fn in CRITERIA:
        ck = evaluate(fn)
        bad += bool(ck.failures)
        print(_line(number, title, ck))
    raise SystemExit(1 if bad else 0)
