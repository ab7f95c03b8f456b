import json

import numpy as np
import pytest

import qubitpair as qp
from qubitpair import fileio
from qubitpair.cli import main

SQ2 = 1.0 / np.sqrt(2.0)
SINGLET = np.array([0.0, SQ2, -SQ2, 0.0], dtype=complex)


def write_state(path, psi):
    fileio.save_state(path, psi)
    return str(path)


def write_schedule(path, qubit, schedule):
    fileio.save_schedule(path, qubit, schedule)
    return str(path)


def read_json(path):
    return json.loads(path.read_text())


def stdout_json(capsys):
    return json.loads(capsys.readouterr().out)


class TestConvert:
    def test_singlet_to_spinors(self, tmp_path):
        src = write_state(tmp_path / "in.json", SINGLET)
        out = tmp_path / "out.json"
        assert main(["convert", "--in", src, "--from", "amplitudes",
                     "--to", "spinors", "--out", str(out)]) == 0
        obj = read_json(out)
        assert obj["chi"] == pytest.approx(np.pi / 2, abs=1e-12)
        assert obj["spinor1"] == [[1, 0], [0, 0]]
        assert obj["spinor2"] == [[0, 0], [1, 0]]

    def test_zero_state_to_angles_has_null_gamma(self, tmp_path):
        src = write_state(tmp_path / "in.json", [1, 0, 0, 0])
        out = tmp_path / "out.json"
        assert main(["convert", "--in", src, "--from", "amplitudes",
                     "--to", "angles", "--out", str(out)]) == 0
        obj = read_json(out)
        assert obj["gamma"] is None
        assert obj["chi"] == 0

    def test_maximal_to_angles_fails_cleanly(self, tmp_path, capsys):
        src = write_state(tmp_path / "in.json", SINGLET)
        code = main(["convert", "--in", src, "--from", "amplitudes",
                     "--to", "angles", "--out", str(tmp_path / "out.json")])
        assert code == 2
        assert stdout_json(capsys)["error"]["code"] == "MAX_ENTANGLED"

    def test_malformed_input_is_parse_error(self, tmp_path, capsys):
        bad = tmp_path / "bad.json"
        bad.write_text("{broken")
        code = main(["convert", "--in", str(bad), "--from", "amplitudes",
                     "--to", "angles", "--out", str(tmp_path / "out.json")])
        assert code == 2
        assert stdout_json(capsys)["error"]["code"] == "PARSE"

    def test_angles_without_gamma_cannot_build_entangled_state(self, tmp_path, capsys):
        src = tmp_path / "angles.json"
        fileio.save_angles(src, qp.AngleSet(0.5, 1.0, 0.0, 1.0, 0.0, None))
        code = main(["convert", "--in", str(src), "--from", "angles",
                     "--to", "amplitudes", "--out", str(tmp_path / "out.json")])
        assert code == 2
        assert stdout_json(capsys)["error"]["code"] == "SEPARABLE_GAMMA"

    def test_full_cycle_amplitudes_angles_amplitudes(self, tmp_path):
        ang = qp.AngleSet(0.7, 1.2, 0.4, 2.1, -1.0, 0.9)
        psi = qp.state_from_angles(ang)
        src = write_state(tmp_path / "in.json", psi)
        mid = tmp_path / "angles.json"
        out = tmp_path / "back.json"
        assert main(["convert", "--in", src, "--from", "amplitudes",
                     "--to", "angles", "--out", str(mid)]) == 0
        assert main(["convert", "--in", str(mid), "--from", "angles",
                     "--to", "amplitudes", "--out", str(out)]) == 0
        assert np.max(np.abs(fileio.load_state(out) - psi)) < 1e-9

    def test_spinors_to_amplitudes(self, tmp_path):
        psi = qp.sample_haar(1, 8)[0]
        mid = tmp_path / "spinors.json"
        fileio.save_decomposition(mid, qp.decompose(psi))
        out = tmp_path / "out.json"
        assert main(["convert", "--in", str(mid), "--from", "spinors",
                     "--to", "amplitudes", "--out", str(out)]) == 0
        assert np.max(np.abs(fileio.load_state(out) - psi)) < 1e-10


class TestDecomposeCommand:
    def test_matches_library(self, tmp_path):
        psi = qp.sample_haar(1, 21)[0]
        src = write_state(tmp_path / "in.json", psi)
        out = tmp_path / "dec.json"
        assert main(["decompose", "--in", src, "--out", str(out)]) == 0
        d = fileio.load_decomposition(out)
        ref = qp.decompose(psi)
        assert d.chi == ref.chi
        assert np.array_equal(d.spinor1, ref.spinor1)


class TestEvolve:
    def _files(self, tmp_path, steps=5, scalar=True, seed=33):
        rng = np.random.default_rng(seed)
        psi = qp.sample_haar(1, seed)[0]
        sched = lambda: [(qp.LocalHamiltonian(float(rng.normal()) if scalar else 0.0,
                                              rng.normal(size=3)),
                          float(rng.uniform(0.05, 0.3))) for _ in range(steps)]
        return (write_state(tmp_path / "state.json", psi),
                write_schedule(tmp_path / "s1.json", 1, sched()),
                write_schedule(tmp_path / "s2.json", 2, sched()))

    def test_zero_schedules_deviation_zero(self, tmp_path):
        psi = qp.sample_haar(1, 1)[0]
        state = write_state(tmp_path / "state.json", psi)
        s1 = write_schedule(tmp_path / "s1.json", 1, [(qp.ZERO_HAMILTONIAN, 1.0)])
        s2 = write_schedule(tmp_path / "s2.json", 2, [(qp.ZERO_HAMILTONIAN, 1.0)])
        out = tmp_path / "out.json"
        assert main(["evolve", "--in", state, "--schedule1", s1, "--schedule2", s2,
                     "--backend", "both", "--out", str(out)]) == 0
        obj = read_json(out)
        # identity evolution leaves only the decompose/reconstruct rounding
        assert obj["max_component_deviation"] < 1e-12
        assert obj["backends_agree"] is True

    def test_random_schedules_agree(self, tmp_path):
        state, s1, s2 = self._files(tmp_path, scalar=False)
        out = tmp_path / "out.json"
        assert main(["evolve", "--in", state, "--schedule1", s1, "--schedule2", s2,
                     "--backend", "both", "--out", str(out)]) == 0
        assert read_json(out)["max_component_deviation"] < 1e-9

    def test_scalar_parts_still_agree(self, tmp_path):
        state, s1, s2 = self._files(tmp_path, scalar=True)
        out = tmp_path / "out.json"
        assert main(["evolve", "--in", state, "--schedule1", s1, "--schedule2", s2,
                     "--backend", "both", "--out", str(out)]) == 0
        assert read_json(out)["max_component_deviation"] < 1e-9

    def test_single_backends_match_each_other(self, tmp_path):
        state, s1, s2 = self._files(tmp_path, seed=44)
        full_out = tmp_path / "full.json"
        sep_out = tmp_path / "sep.json"
        assert main(["evolve", "--in", state, "--schedule1", s1, "--schedule2", s2,
                     "--backend", "full", "--out", str(full_out)]) == 0
        assert main(["evolve", "--in", state, "--schedule1", s1, "--schedule2", s2,
                     "--backend", "separable", "--out", str(sep_out)]) == 0
        full = np.array([complex(re, im) for re, im in read_json(full_out)["amplitudes"]])
        sep_obj = read_json(sep_out)
        sep = np.array([complex(re, im) for re, im in sep_obj["amplitudes"]])
        assert np.max(np.abs(full - sep)) < 1e-9
        assert {"chi", "spinor1", "spinor2", "beta1", "beta2"} <= set(sep_obj)

    def test_swapped_schedule_tag_rejected(self, tmp_path, capsys):
        state, s1, s2 = self._files(tmp_path, seed=55)
        code = main(["evolve", "--in", state, "--schedule1", s2, "--schedule2", s1])
        assert code == 2
        assert stdout_json(capsys)["error"]["code"] == "PARSE"


class TestVerifyCommand:
    def test_roundtrip_suite_passes(self, tmp_path, capsys):
        out = tmp_path / "verify.json"
        code = main(["verify", "--suite", "roundtrip", "--trials", "100",
                     "--seed", "7", "--out", str(out)])
        assert code == 0
        obj = read_json(out)
        assert obj["passed"] is True
        assert all(p["passed"] for p in obj["properties"])
        err = capsys.readouterr().err
        assert "PASS" in err and "FAIL" not in err

    def test_all_suites_small(self, tmp_path):
        out = tmp_path / "verify.json"
        assert main(["verify", "--suite", "all", "--trials", "40",
                     "--seed", "11", "--out", str(out)]) == 0
        assert read_json(out)["passed"] is True


class TestBenchCommand:
    def test_small_run_valid_but_low_confidence(self, tmp_path):
        out = tmp_path / "bench.json"
        assert main(["bench", "--steps", "200", "--trials", "2", "--seed", "3",
                     "--out", str(out)]) == 0
        obj = read_json(out)
        assert obj["status"] == "VALID"
        assert obj["timing_confidence"] == "LOW_CONFIDENCE"
        assert obj["max_deviation"] < 1e-9

    def test_single_step_boundary(self, tmp_path):
        out = tmp_path / "bench.json"
        assert main(["bench", "--steps", "1", "--trials", "1", "--seed", "3",
                     "--out", str(out)]) == 0
        assert read_json(out)["timing_confidence"] == "LOW_CONFIDENCE"

    def test_deviation_deterministic_across_runs(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        assert main(["bench", "--steps", "300", "--trials", "2", "--seed", "5",
                     "--out", str(a)]) == 0
        assert main(["bench", "--steps", "300", "--trials", "2", "--seed", "5",
                     "--out", str(b)]) == 0
        assert read_json(a)["max_deviation"] == read_json(b)["max_deviation"]


class TestSampleCommand:
    def test_writes_normalized_states(self, tmp_path):
        out = tmp_path / "samples.json"
        assert main(["sample", "--count", "3", "--seed", "1", "--out", str(out)]) == 0
        records = read_json(out)
        assert len(records) == 3
        for rec in records:
            psi = np.array([complex(re, im) for re, im in rec["amplitudes"]])
            assert abs(np.vdot(psi, psi).real - 1) < 1e-12

    def test_fixed_chi_samples(self, tmp_path):
        out = tmp_path / "samples.json"
        assert main(["sample", "--count", "5", "--seed", "2",
                     "--fixed-chi", str(np.pi / 2), "--out", str(out)]) == 0
        for rec in read_json(out):
            psi = np.array([complex(re, im) for re, im in rec["amplitudes"]])
            assert abs(qp.concurrence(psi) - 1.0) < 1e-12

    def test_byte_identical_reruns(self, tmp_path):
        a, b = tmp_path / "a.json", tmp_path / "b.json"
        assert main(["sample", "--count", "4", "--seed", "9", "--out", str(a)]) == 0
        assert main(["sample", "--count", "4", "--seed", "9", "--out", str(b)]) == 0
        assert a.read_bytes() == b.read_bytes()

    def test_bad_fixed_chi_is_usage_error(self, tmp_path, capsys):
        code = main(["sample", "--count", "1", "--seed", "1", "--fixed-chi", "9"])
        assert code == 2
        assert stdout_json(capsys)["error"]["code"] == "PARSE"

    def test_missing_file_is_exit_2(self, tmp_path, capsys):
        code = main(["convert", "--in", str(tmp_path / "nope.json"),
                     "--from", "amplitudes", "--to", "angles",
                     "--out", str(tmp_path / "out.json")])
        assert code == 2
