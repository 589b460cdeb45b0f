"""Exit criteria. Each test records a one-line PASS/FAIL verdict (see the
"acceptance criteria" section of the pytest terminal summary)."""

import hashlib
import json
import math
import subprocess
import sys
import time

import numpy as np
import pytest
from scipy.stats import chi2

import oracles
from chaoslut.analysis import (
    attack_demo,
    cipher_key_sensitivity,
    decipher_key_sensitivity,
    plaintext_sensitivity,
    sensitivity_tables,
    single_component_perturbations,
)
from chaoslut.cipher import K0, SecretKey, decrypt, encrypt
from chaoslut.metrics import (
    DIRECTIONS,
    PixelPairSample,
    chi_square_uniformity,
    correlation,
    entropy,
    histogram,
    mae,
    npcr,
    sample_adjacent_pairs,
    uaci,
)
from chaoslut.pgm import write_pgm

from conftest import DATA

pytestmark = pytest.mark.slow

# every (uaci, mae) pair computed below, for the identity check of criterion 11
_diff_pairs = []


def _track(u, m):
    _diff_pairs.append((u, m))


@pytest.fixture(scope="module", autouse=True)
def _warm_kernels():
    # JIT compilation (or cache load) is not part of any runtime budget
    tiny = np.zeros((2, 2), dtype=np.uint8)
    decrypt(encrypt(tiny, K0), K0)


def test_c01_round_trip_exactness(report_line):
    rng = np.random.default_rng(1)
    keys = [
        SecretKey(rng.uniform(0.1, 0.9), rng.uniform(3.9, 4.0), rng.uniform(0.1, 0.9), rng.uniform(3.9, 4.0))
        for _ in range(20)
    ]
    sizes = [(1, 1), (1, 64), (64, 1), (64, 64)] + [tuple(rng.integers(1, 65, 2)) for _ in range(196)]
    t0 = time.perf_counter()
    failures = 0
    for i, (h, w) in enumerate(sizes):
        img = rng.integers(0, 256, (h, w), dtype=np.uint8)
        key = keys[i % 20]
        if decrypt(encrypt(img, key), key).pixels.tolist() != img.tolist():
            failures += 1
    elapsed = time.perf_counter() - t0
    ok = failures == 0 and elapsed < 10.0
    report_line("C1 round trip", ok, f"{len(sizes)} images x 20 keys, {failures} failures, {elapsed:.2f}s (< 10s)")
    assert ok


def test_c02_entropy(corpus, report_line):
    worst_h, worst_t = 8.0, 0.0
    for name, img in corpus.items():
        t0 = time.perf_counter()
        c = encrypt(img, K0)
        worst_t = max(worst_t, time.perf_counter() - t0)
        worst_h = min(worst_h, entropy(c))
    ok = worst_h >= 7.99 and worst_t < 5.0
    report_line("C2 entropy", ok, f"min {worst_h:.5f} bits/pixel over {len(corpus)} images (>= 7.99), "
                f"max encrypt time {worst_t:.2f}s (< 5s)")
    assert ok


def test_c03_histogram_uniformity(corpus, report_line):
    critical = chi2.ppf(0.99, 255)
    assert critical == pytest.approx(310.46, abs=0.005)
    stats = {name: chi_square_uniformity(histogram(encrypt(img, K0))) for name, img in corpus.items()}
    passing = sum(v < critical for v in stats.values())
    ok = len(stats) == 10 and passing >= 9
    report_line("C3 chi-square", ok, f"{passing}/10 images below {critical:.2f}; max {max(stats.values()):.1f}")
    assert ok


def test_c04_correlation(camera, report_line):
    cipher = encrypt(camera, K0)
    plain_r = {d: correlation(sample_adjacent_pairs(camera, d, 2500, 42)) for d in DIRECTIONS}
    cipher_r = {d: correlation(sample_adjacent_pairs(cipher, d, 2500, 42)) for d in DIRECTIONS}
    ok = all(abs(plain_r[d]) >= 0.85 and abs(cipher_r[d]) <= 0.05 for d in DIRECTIONS)
    detail = ", ".join(f"{d} {plain_r[d]:.4f}/{cipher_r[d]:+.4f}" for d in DIRECTIONS)
    report_line("C4 correlation", ok, f"plain/encrypted: {detail} (plain >= 0.85, |enc| <= 0.05)")
    assert ok


def test_c05_differential_center_change(corpus, report_line):
    bad = []
    results = {}
    for name, img in corpus.items():
        d = plaintext_sensitivity(img, K0)
        _track(d.uaci, d.mae)
        results[name] = d
        if not (d.npcr >= 99.0 and 28 <= d.uaci <= 36 and 70 <= d.mae <= 90):
            bad.append(name)
    worst = min(results.values(), key=lambda d: d.npcr)
    report_line("C5 differential (center pixel)", not bad,
                f"{len(corpus) - len(bad)}/{len(corpus)} images meet NPCR>=99, UACI in [28,36], MAE in [70,90]; "
                f"worst NPCR {worst.npcr:.4f} UACI {worst.uaci:.4f} MAE {worst.mae:.4f}")
    assert not bad


def test_c06_cipher_key_sensitivity(camera, report_line):
    tables = sensitivity_tables(camera, K0, single_component_perturbations(1e-15))["cipher"]
    n_m, u_m = tables["npcr"], tables["uaci"]
    ciphers = list(range(5))  # I_C .. I_C4; the last label is the plain image
    off = [(a, b) for a in ciphers for b in ciphers if a != b]
    min_n = min(n_m.cells[a, b] for a, b in off)
    min_u = min(u_m.cells[a, b] for a, b in off)
    for a in range(6):
        for b in range(6):
            _track(tables["uaci"].cells[a, b], tables["mae"].cells[a, b])
    structure = all(m.has_zero_diagonal() and m.is_symmetric() for m in tables.values())
    ok = min_n > 99 and min_u > 28 and structure
    report_line("C6 cipher-key sensitivity", ok,
                f"min ciphertext NPCR {min_n:.4f} (> 99), min UACI {min_u:.4f} (> 28), zero diagonal & symmetric: {structure}")
    assert ok
    # single-metric entry point agrees with the batched tables
    assert np.array_equal(cipher_key_sensitivity(camera, K0, metric="npcr").cells, n_m.cells)


def test_c07_decipher_key_sensitivity(camera, report_line):
    tables = sensitivity_tables(camera, K0, single_component_perturbations(1e-15))["decipher"]
    exact = all(tables[m].cell("I_D", "I") == 0.0 for m in ("npcr", "uaci", "mae"))
    wrong = [tables["npcr"].cell(f"I_D{i}", "I") for i in range(1, 5)]
    for a in range(6):
        for b in range(6):
            _track(tables["uaci"].cells[a, b], tables["mae"].cells[a, b])
    ok = exact and min(wrong) >= 98
    report_line("C7 decipher-key sensitivity", ok,
                f"correct key NPCR/UACI/MAE all 0: {exact}; wrong-key NPCR min {min(wrong):.4f} (>= 98)")
    assert ok
    assert decipher_key_sensitivity(camera, K0).cell("I_D", "I") == 0.0


def test_c08_keystream_attack(camera, astronaut, report_line):
    res = attack_demo(camera, astronaut, K0)
    _track(res.transfer.uaci, res.transfer.mae)
    ok = res.source_npcr == 0.0 and res.transfer.npcr >= 98
    report_line("C8 keystream attack", ok,
                f"source recovery NPCR {res.source_npcr} (== 0), transfer NPCR {res.transfer.npcr:.4f} (>= 98)")
    assert ok


def test_c09_metric_oracle_equivalence(report_line):
    rng = np.random.default_rng(9)
    worst = 0.0
    for _ in range(100):
        a = rng.integers(0, 256, (8, 8), dtype=np.uint8)
        b = rng.integers(0, 256, (8, 8), dtype=np.uint8)
        la, lb = a.tolist(), b.tolist()
        xs, ys = [p for row in la for p in row], [p for row in lb for p in row]
        u, m = uaci(a, b), mae(a, b)
        _track(u, m)
        worst = max(
            worst,
            abs(entropy(a) - oracles.bf_entropy(la)),
            abs(npcr(a, b) - oracles.bf_npcr(la, lb)),
            abs(u - oracles.bf_uaci(la, lb)),
            abs(m - oracles.bf_mae(la, lb)),
            abs(correlation(PixelPairSample(np.array(xs), np.array(ys), "horizontal", 0)) - oracles.bf_corr(xs, ys)),
        )
    ok = worst <= 1e-9
    report_line("C9 metric oracle equivalence", ok, f"100 random 8x8 pairs, max deviation {worst:.3g} (<= 1e-9)")
    assert ok


def _cli(*args):
    return subprocess.run([sys.executable, "-m", "chaoslut", *map(str, args)], capture_output=True, text=True)


def test_c10_determinism(camera, tmp_path, report_line):
    recorded = json.loads((DATA / "golden" / "recorded.json").read_text())
    key = DATA / "k0.key"
    plain = DATA / "corpus" / "camera.pgm"
    golden_report = (DATA / "golden" / "camera_report.json").read_bytes()
    golden_small = (DATA / "golden" / "ramp16_k0.pgm").read_bytes()

    in_process = hashlib.sha256(write_pgm(encrypt(camera, K0))).hexdigest()
    hashes, reports, smalls = [in_process], [], []
    for run in ("a", "b"):
        out = tmp_path / run
        out.mkdir()
        for proc in (
            _cli("encrypt", "--in", plain, "--key", key, "--out", out / "c.pgm"),
            _cli("analyze", "--plain", plain, "--key", key, "--out", out / "r.json"),
            _cli("encrypt", "--in", DATA / "golden" / "ramp16.pgm", "--key", key, "--out", out / "s.pgm"),
        ):
            assert proc.returncode == 0, proc.stderr
        hashes.append(hashlib.sha256((out / "c.pgm").read_bytes()).hexdigest())
        reports.append((out / "r.json").read_bytes())
        smalls.append((out / "s.pgm").read_bytes())
    ok = (
        set(hashes) == {recorded["camera_k0_cipher_sha256"]}
        and all(r == golden_report for r in reports)
        and all(s == golden_small for s in smalls)
    )
    report_line("C10 determinism", ok,
                "golden ciphertexts and report byte-identical across in-process and two CLI runs "
                "(this platform only; second platform not available here)")
    assert ok


def test_c11_uaci_mae_identity(report_line):
    # runs last in file order, after the other criteria have fed _diff_pairs
    assert _diff_pairs, "no metric pairs were collected"
    worst = max(abs(u - m / 255 * 100) for u, m in _diff_pairs)
    ok = worst <= 1e-9 and all(math.isfinite(u) for u, _ in _diff_pairs)
    report_line("C11 uaci = mae/255*100", ok, f"{len(_diff_pairs)} pairs, max deviation {worst:.3g} (<= 1e-9)")
    assert ok
