# Copyright 2022 The GenStore Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Tests for :py:mod:`genstore.cli`."""

import json

import pytest

from genstore.cli import EXIT_CAPACITY, EXIT_INPUT, EXIT_MISMATCH, EXIT_OK, main, resolve_threads
from genstore.errors import ConfigError
from genstore.pipeline import read_report


@pytest.fixture(scope="module")
def workspace(tmp_path_factory):
    """A small reference with short and long reads and both indexes, built through the CLI."""
    root = tmp_path_factory.mktemp("cli")
    paths = {
        name: str(root / name)
        for name in ("ref.fa", "reads.fq", "long.fq", "em.gsi", "nm.gsi")
    }
    commands = [
        ["gen", "reference", "--length", "30000", "--seed", "1", "--out", paths["ref.fa"]],
        [
            "gen", "reads", "--reference", paths["ref.fa"], "--count", "300",
            "--read-length", "100", "--exact-fraction", "0.8", "--seed", "2",
            "--out", paths["reads.fq"],
        ],
        [
            "gen", "longreads", "--reference", paths["ref.fa"], "--count", "40",
            "--mean-length", "2000", "--align-fraction", "0.5", "--error-rate", "0.05",
            "--seed", "3", "--out", paths["long.fq"],
        ],
        [
            "build-index", "--mode", "em", "--reference", paths["ref.fa"],
            "--read-length", "100", "--out", paths["em.gsi"],
        ],
        ["build-index", "--mode", "nm", "--reference", paths["ref.fa"], "--out", paths["nm.gsi"]],
    ]
    for command in commands:
        assert main(command) == EXIT_OK
    return root, paths


def _filter(paths, out, mode="em", threads=1):
    reads = paths["reads.fq"] if mode == "em" else paths["long.fq"]
    return main(
        [
            "filter", "--mode", mode, "--index", paths[f"{mode}.gsi"], "--reads", reads,
            "--out-fastq", str(out / "forwarded.fq"),
            "--out-decisions", str(out / "decisions.bin"),
            "--out-stats", str(out / "stats.json"),
            "--threads", str(threads),
        ]
    )


def test_generated_files(workspace):
    _, paths = workspace
    with open(paths["ref.fa"]) as fp:
        assert fp.readline().startswith(">synthetic genstore-synth/")
    with open(paths["reads.fq"]) as fp:
        lines = fp.read().splitlines()
    assert len(lines) == 4 * 300
    assert all(len(line) == 100 for line in lines[1::4])


def test_em_filter(workspace, tmp_path):
    _, paths = workspace
    assert _filter(paths, tmp_path) == EXIT_OK
    with open(tmp_path / "stats.json") as fp:
        stats = json.load(fp)
    assert stats["mode"] == "em"
    assert stats["reads_total"] == 300
    assert stats["reads_filtered"] == 240
    assert stats["filter_ratio"] == pytest.approx(0.8)
    assert stats["parameters"]["read_len"] == 100
    with open(tmp_path / "forwarded.fq") as fp:
        assert len(fp.read().splitlines()) == 4 * stats["reads_forwarded"]


def test_nm_filter(workspace, tmp_path):
    _, paths = workspace
    assert _filter(paths, tmp_path, mode="nm") == EXIT_OK
    with open(tmp_path / "stats.json") as fp:
        stats = json.load(fp)
    assert stats["reads_total"] == 40
    assert sum(stats["verdicts"].values()) == 40
    assert stats["parameters"]["min_seeds"] == 3


@pytest.mark.parametrize("mode", ["em", "nm"])
def test_outputs_do_not_depend_on_threads(workspace, tmp_path, mode):
    _, paths = workspace
    runs = []
    for threads in (1, 4):
        out = tmp_path / f"threads{threads}"
        out.mkdir()
        assert _filter(paths, out, mode=mode, threads=threads) == EXIT_OK
        runs.append(
            [(out / name).read_bytes() for name in ("forwarded.fq", "decisions.bin", "stats.json")]
        )
    assert runs[0] == runs[1]


def test_empty_read_set(workspace, tmp_path):
    _, paths = workspace
    empty = tmp_path / "empty.fq"
    empty.write_bytes(b"")
    for mode in ("em", "nm"):
        code = main(
            [
                "filter", "--mode", mode, "--index", paths[f"{mode}.gsi"],
                "--reads", str(empty),
                "--out-fastq", str(tmp_path / "out.fq"),
                "--out-decisions", str(tmp_path / "out.bin"),
                "--out-stats", str(tmp_path / "out.json"),
            ]
        )
        assert code == EXIT_OK
        with open(tmp_path / "out.json") as fp:
            assert json.load(fp)["filter_ratio"] == 0.0
        assert (tmp_path / "out.fq").read_bytes() == b""


def test_analytic_simulation(tmp_path):
    out = tmp_path / "report.json"
    code = main(
        [
            "simulate", "--analytic-only", "--ssd", "SSD-H", "--ratio", "0.8",
            "--readset-gb", "22", "--ref-gb", "7", "--out", str(out),
        ]
    )
    assert code == EXIT_OK
    with open(out) as fp:
        report = read_report(fp)
    assert report.dm_saving == pytest.approx(2.544, abs=1e-3)
    assert report.ssd == "SSD-H"
    assert report.parameters["analytic_only"] is True


def test_analytic_simulation_to_stdout(capsys):
    assert main(["simulate", "--analytic-only", "--ssd", "SSD-M"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)
    assert report["ssd"] == "SSD-M"
    assert report["bytes_ref"] == pytest.approx(7e9)


def test_simulated_run_with_events(workspace, tmp_path):
    _, paths = workspace
    events = tmp_path / "events.csv"
    code = main(
        [
            "simulate", "--ssd", "SSD-L", "--mode", "em", "--reference", paths["ref.fa"],
            "--reads", paths["reads.fq"], "--index", paths["em.gsi"], "--scale", "10",
            "--events-csv", str(events), "--out", str(tmp_path / "report.json"),
        ]
    )
    assert code == EXIT_OK
    with open(tmp_path / "report.json") as fp:
        report = read_report(fp)
    assert report.reads_total == 3000
    assert report.parameters["scale"] == 10.0
    assert events.read_text().splitlines()[0].startswith("batch,")


def test_presets_listing(capsys):
    assert main(["presets"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "SSD-L: internal 9.6 GB/s, external 0.5 GB/s, ratio 19.200" in out
    assert "ratio 5.486" in out
    assert "ratio 2.743" in out
    assert "long-noref-1: align fraction 0.0035" in out


def test_bad_input_exit_code(workspace, tmp_path, capsys):
    _, paths = workspace
    gen = ["gen", "reads", "--out", str(tmp_path / "x"), "--reference"]
    assert main(gen + [str(tmp_path / "missing.fa")]) == EXIT_INPUT
    assert "genstore: error:" in capsys.readouterr().err
    assert main(gen + [paths["ref.fa"], "--preset", "nope"]) == EXIT_INPUT
    assert main(gen + [paths["ref.fa"], "--preset", "long-noref-1"]) == EXIT_INPUT
    assert main(gen + [paths["ref.fa"], "--exact-fraction", "1.5"]) == EXIT_INPUT
    assert main(["simulate", "--analytic-only", "--ssd", "SSD-X"]) == EXIT_INPUT
    assert main(["simulate", "--ssd", "SSD-L"]) == EXIT_INPUT


def test_srtable_must_be_a_read_table(workspace, tmp_path, capsys):
    _, paths = workspace
    for wrong in ("em.gsi", "nm.gsi"):
        code = main(
            [
                "filter", "--mode", "em", "--index", paths["em.gsi"],
                "--reads", paths["reads.fq"], "--srtable", paths[wrong],
                "--out-fastq", str(tmp_path / "forwarded.fq"),
                "--out-decisions", str(tmp_path / "decisions.bin"),
            ]
        )
        assert code == EXIT_INPUT
        assert "expected SRTABLE" in capsys.readouterr().err


def test_mode_mismatch_exit_code(workspace, tmp_path):
    _, paths = workspace
    code = main(
        [
            "filter", "--mode", "nm", "--index", paths["em.gsi"], "--reads", paths["long.fq"],
            "--out-fastq", str(tmp_path / "out.fq"),
            "--out-decisions", str(tmp_path / "out.bin"),
        ]
    )
    assert code == EXIT_MISMATCH


def test_capacity_exit_code(workspace, tmp_path):
    _, paths = workspace
    config = tmp_path / "tiny.json"
    config.write_text(json.dumps({"base": "SSD-L", "dram_gib": 1e-6}))
    code = main(
        [
            "simulate", "--ssd", str(config), "--mode", "nm", "--reference", paths["ref.fa"],
            "--reads", paths["long.fq"], "--index", paths["nm.gsi"],
        ]
    )
    assert code == EXIT_CAPACITY


def test_thread_count_resolution(monkeypatch):
    monkeypatch.delenv("GENSTORE_THREADS", raising=False)
    assert resolve_threads(None) == 1
    assert resolve_threads(3) == 3
    monkeypatch.setenv("GENSTORE_THREADS", "2")
    assert resolve_threads(None) == 2
    monkeypatch.setenv("GENSTORE_THREADS", "many")
    with pytest.raises(ConfigError):
        resolve_threads(None)
    with pytest.raises(ConfigError):
        resolve_threads(0)
    assert main(["presets"]) == EXIT_INPUT
