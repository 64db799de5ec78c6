"""Smoke tests for the python module and the command line tool."""

import json
import os
import subprocess
from fractions import Fraction

import pytest

import rieszrep as rr


def dihedral_example():
    g = rr.dihedral_infinite()
    return rr.Signal(g, {0: {0: Fraction(3, 8)}, 1: {-1: Fraction(1, 8)}})


def test_group_arithmetic():
    g = rr.dihedral_infinite()
    assert g.kappa == 2
    assert g.multiply(([2], 1), ([3], 1)) == ([-1], 0)
    assert g.inverse(([3], 1)) == ([3], 1)

    z4 = rr.dihedral_finite(4)
    assert z4.multiply(([1], 1), ([1], 1)) == ([0], 0)
    assert len(z4.elements()) == 8


def test_analysis_of_the_worked_pair():
    f = dihedral_example()
    assert f.is_exact
    rep = rr.analyze(f)
    assert rep["verdicts"]["riesz"] is True
    assert rep["verdicts"]["onb"] is False
    assert abs(rep["A_sing"] - 0.25) < 1e-12
    assert abs(rep["B_sing"] - 0.5) < 1e-12
    assert abs(rep["A_eig"] - 1 / 16) < 1e-12
    assert abs(rep["B_eig"] - 1 / 4) < 1e-12


def test_exact_dual_coefficients():
    f = dihedral_example()
    g = rr.dual_exact(f)
    assert g is not None
    phases = g.phases()
    assert phases[0][0] == Fraction(3)
    assert phases[1][-1] == Fraction(-1)

    check = rr.biorthogonality_check(f, g)
    assert check["pass"] and check["worst_error"] == 0.0

    h = rr.inverse_filter(f)
    residual = rr.max_abs_diff(rr.convolve(f, h), rr.delta(f.group))
    assert residual == 0.0


def test_delta_is_an_onb():
    d = rr.delta(rr.dihedral_infinite())
    assert rr.onb_check(d)
    rep = rr.analyze(d)
    assert rep["verdicts"]["onb"] is True


def test_oracle_agreement_on_a_finite_group():
    z6 = rr.dihedral_finite(6)
    f = rr.Signal(z6, {0: {0: 1.0, 1: 0.25, 3: -0.125}, 1: {2: 0.5}})
    rep = rr.analyze(f)
    lo, hi = rr.oracle.synthesis_spectrum(f)
    assert abs(lo - rep["A_eig"]) < 1e-10
    assert abs(hi - rep["B_eig"]) < 1e-10
    assert abs(rr.oracle.synthesis_norm(f) - rep["cstar_norm"]) < 1e-10

    if rep["verdicts"]["riesz"]:
        d = rr.dual(f)
        brute = rr.oracle.brute_dual(f)
        assert rr.max_abs_diff(d["signal"], brute) < 1e-10


def test_spline_case_constants():
    sc = rr.spline_case(Fraction(1, 4))
    assert sc["C"] == {"re": {"num": 3627, "den": 64}}
    assert sc["D"] == {"re": {"num": 0, "den": 1}}
    assert sc["feasible"] is True
    assert sc["compact_dual"] is True
    assert abs(sc["condition"]["eig_ratio_sqrt"] - 124 / 13) < 1e-9
    assert sc["interpolator"]["support"] == [-1.0, 2.0]


def test_sample_and_reconstruct_round_trip():
    ts = [(-4 + 8 * i / 100) for i in range(101)]
    out = rr.sample_and_reconstruct("1/4", {0: {0: 1.0, 2: -0.5}, 1: {1: 0.25}}, ts)
    worst = max(abs(a - b) for a, b in zip(out["reconstructed"], out["reference"]))
    assert worst < 1e-8


def test_piecewise_generator_evaluation():
    phi = rr.demo_spline_generator()
    assert phi(0.25) == pytest.approx(-147 / 64)
    assert phi(2.5) == 0.0
    hat = rr.piecewise_generator([(0, Fraction(1, 2), [0, 2]), (Fraction(1, 2), 1, [2, -2])])
    assert hat(0.5) == pytest.approx(1.0)


CLI = os.environ.get("RIESZREP_CLI")


@pytest.mark.skipif(CLI is None, reason="CLI path not provided")
def test_cli_demo_and_verify(tmp_path):
    demo = subprocess.run(
        [CLI, "demo", "dinf-spline", "--p", "0.25"], capture_output=True, text=True
    )
    assert demo.returncode == 0, demo.stderr
    report = json.loads(demo.stdout)
    assert report["C"] == {"re": {"num": 3627, "den": 64}}
    assert report["roundtrip_max_error"] < 1e-8

    verify = subprocess.run([CLI, "verify", "--trials", "5"], capture_output=True, text=True)
    assert verify.returncode == 0, verify.stdout + verify.stderr
    assert "FAIL" not in verify.stdout

    delta_signal = {
        "group": {
            "N": {"kind": "lattice", "rank": 1},
            "H": {"table": [[0, 1], [1, 0]]},
            "sigma": {"matrices": [[[1]], [[-1]]]},
        },
        "phases": {"0": [{"n": [0], "re": {"num": 1, "den": 1}}]},
    }
    delta_path = tmp_path / "delta.json"
    delta_path.write_text(json.dumps(delta_signal))
    analyzed = subprocess.run(
        [CLI, "analyze", "--signal", str(delta_path)], capture_output=True, text=True
    )
    assert analyzed.returncode == 0, analyzed.stderr
    rep = json.loads(analyzed.stdout)
    assert rep["A_eig"] == pytest.approx(1.0)
    assert rep["B_eig"] == pytest.approx(1.0)
    assert rep["verdicts"]["onb"] is True


@pytest.mark.skipif(CLI is None, reason="CLI path not provided")
def test_cli_dual_then_analyze_reciprocity(tmp_path):
    signal = {
        "group": {
            "N": {"kind": "lattice", "rank": 1},
            "H": {"table": [[0, 1], [1, 0]]},
            "sigma": {"matrices": [[[1]], [[-1]]]},
        },
        "phases": {
            "0": [{"n": [0], "re": {"num": 3, "den": 8}}],
            "1": [{"n": [-1], "re": {"num": 1, "den": 8}}],
        },
    }
    sig_path = tmp_path / "f.json"
    sig_path.write_text(json.dumps(signal))

    analyze = subprocess.run(
        [CLI, "analyze", "--signal", str(sig_path)], capture_output=True, text=True
    )
    assert analyze.returncode == 0, analyze.stderr
    rep_f = json.loads(analyze.stdout)

    dual_path = tmp_path / "g.json"
    dual = subprocess.run(
        [CLI, "dual", "--signal", str(sig_path), "--exact", "--out", str(dual_path)],
        capture_output=True,
        text=True,
    )
    assert dual.returncode == 0, dual.stderr

    analyze_g = subprocess.run(
        [CLI, "analyze", "--signal", str(dual_path)], capture_output=True, text=True
    )
    assert analyze_g.returncode == 0, analyze_g.stderr
    rep_g = json.loads(analyze_g.stdout)

    assert abs(rep_g["A_eig"] - 1 / rep_f["B_eig"]) < 1e-9
    assert abs(rep_g["B_eig"] - 1 / rep_f["A_eig"]) < 1e-9


@pytest.mark.skipif(CLI is None, reason="CLI path not provided")
def test_cli_sample_reconstruct_pipeline(tmp_path):
    phi_path = tmp_path / "phi.json"
    phi = {
        "kind": "piecewise_poly",
        "dim": 1,
        "pieces": [
            {
                "interval": [{"num": 0, "den": 1}, {"num": 2, "den": 1}],
                "coefficients": [
                    {"num": 0, "den": 1},
                    {"num": 0, "den": 1},
                    {"num": -52, "den": 1},
                    {"num": 52, "den": 1},
                    {"num": 51, "den": 1},
                    {"num": -64, "den": 1},
                    {"num": 16, "den": 1},
                ],
            }
        ],
    }
    phi_path.write_text(json.dumps(phi))

    coeffs = {
        "group": {
            "N": {"kind": "lattice", "rank": 1},
            "H": {"table": [[0, 1], [1, 0]]},
            "sigma": {"matrices": [[[1]], [[-1]]]},
        },
        "phases": {"0": [{"n": [0], "re": 1.0}, {"n": [2], "re": -0.5}], "1": [{"n": [1], "re": 0.25}]},
    }
    coeffs_path = tmp_path / "a.json"
    coeffs_path.write_text(json.dumps(coeffs))

    samples_path = tmp_path / "samples.csv"
    sample = subprocess.run(
        [
            CLI, "sample", "--generator", str(phi_path), "--coeffs", str(coeffs_path),
            "--p", "0.25", "--window", "16", "--out", str(samples_path),
        ],
        capture_output=True,
        text=True,
    )
    assert sample.returncode == 0, sample.stderr
    assert samples_path.read_text().startswith("n,h,value")

    recon = subprocess.run(
        [
            CLI, "reconstruct", "--generator", str(phi_path), "--samples", str(samples_path),
            "--p", "0.25", "--tmin", "-2", "--tmax", "2", "--points", "41",
        ],
        capture_output=True,
        text=True,
    )
    assert recon.returncode == 0, recon.stderr
    lines = recon.stdout.strip().splitlines()
    assert lines[0] == "t,value"
    assert len(lines) == 42


def test_sampling_signals_from_python():
    phi = rr.demo_spline_generator()
    fp = rr.pointwise_sample_signal(phi, Fraction(1, 4))
    phases = fp.phases()
    assert phases[0][0] == Fraction(-147, 64)
    assert phases[0][-1] == Fraction(675, 64)
    assert phases[1][1] == Fraction(-225, 64)
    assert phases[1][2] == Fraction(441, 64)

    favg = rr.average_sample_signal(phi, phi)
    assert favg.is_exact
    assert rr.analyze(favg)["verdicts"]["riesz"] is True

    bound = rr.rkhs_bound(phi, [i / 100 for i in range(100)])
    assert bound > 0
