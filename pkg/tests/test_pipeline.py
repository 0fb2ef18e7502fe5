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

"""Tests for :py:mod:`genstore.pipeline`."""

import io
import json
import math
from dataclasses import replace

import numpy as np
import pytest

from genstore.errors import CapacityError, ConfigError, IndexMismatchError, ParseError
from genstore.pipeline import (
    DmInputs,
    TimingInputs,
    Workload,
    dm_saving,
    host_model,
    model_workload,
    read_report,
    run_pipeline,
    t_ideal_isf,
    t_ideal_osf,
    validate_report,
    write_report,
)
from genstore.ssd import preset

GB = 1e9


def _report(ratio=0.8, ssd="SSD-H", host="software", **kwargs):
    workload = Workload.from_ratio(7 * GB, 22 * GB, ratio, index_bytes=32 * GB)
    return model_workload(workload, preset(ssd), host_model(host), **kwargs)


def test_dm_saving_reference_values():
    assert dm_saving(DmInputs(7, 22, 0.8)) == pytest.approx(2.544, abs=1e-3)
    assert round(dm_saving(DmInputs(0.0146, 12.4, 0.9965))) == 214
    assert dm_saving(DmInputs(7, 22, 0.0)) == 1.0
    assert dm_saving(DmInputs(0, 22, 1.0)) == math.inf
    assert dm_saving(DmInputs(0, 0, 0.5)) == 1.0
    with pytest.raises(ValueError):
        DmInputs(7, 22, 1.5)


def test_out_of_storage_bound_never_beats_in_storage():
    rng = np.random.default_rng(3)
    for _ in range(1000):
        t_ref, t_all, t_rm_all = rng.uniform(0, 100, size=3)
        kept = rng.uniform()
        inputs = TimingInputs(
            t_io_ref=t_ref,
            t_io_unfiltered=t_all * kept,
            t_io_all=t_all,
            t_rm_unfiltered=t_rm_all * kept,
            t_rm_all=t_rm_all,
        )
        assert t_ideal_osf(inputs) >= t_ideal_isf(inputs)


def test_timing_inputs_validation():
    with pytest.raises(ValueError):
        TimingInputs(1.0, 2.0, 1.0, 0.0)
    with pytest.raises(ValueError):
        TimingInputs(-1.0, 0.0, 1.0, 0.0)


def test_ideal_filters_reach_their_bounds():
    report = _report(ideal=True)
    assert report.t_filter_internal == 0.0
    assert report.t_total == pytest.approx(report.t_metadata_flush + report.t_ideal_isf)
    outside = _report(ideal=True, in_storage=False)
    assert outside.t_total == pytest.approx(outside.t_ideal_osf)
    assert outside.t_total >= report.t_total


def test_model_terms():
    report = _report()
    assert report.dm_saving == pytest.approx(2.544, abs=1e-3)
    assert report.bytes_external == pytest.approx(7 * GB + 22 * GB * 0.2)
    assert report.bytes_internal == pytest.approx(7 * GB + 32 * GB + 22 * GB)
    assert report.critical_path == "mapping"
    assert report.t_total == pytest.approx(
        report.t_metadata_flush
        + report.t_io_ref
        + max(report.t_filter_internal, report.t_io_unfiltered, report.t_rm_unfiltered)
    )
    assert report.baseline_t_total == pytest.approx(
        report.t_io_ref + max(report.baseline_t_io_all, report.baseline_t_rm_all)
    )
    assert report.speedup == pytest.approx(report.baseline_t_total / report.t_total)


def test_speedup_grows_with_read_set_size():
    workload = Workload.from_ratio(7 * GB, 22 * GB, 0.8, index_bytes=32 * GB)
    speedups = [
        model_workload(workload.scaled(scale), preset("SSD-H"), host_model("software")).speedup
        for scale in (1, 10, 20)
    ]
    assert speedups == sorted(speedups)
    assert speedups[0] < speedups[-1]


def test_speedup_grows_with_filter_ratio():
    speedups = [_report(ratio).speedup for ratio in (0.75, 0.80, 0.85)]
    assert speedups[0] < speedups[1] < speedups[2]


def test_nm_speedup_grows_as_fewer_reads_align():
    speedups = []
    for align in (0.37, 0.231, 0.0035):
        workload = Workload.from_ratio(3 * GB, 100 * GB, 1 - align, mode="nm")
        speedups.append(
            model_workload(workload, preset("SSD-H"), host_model("hw-long")).speedup
        )
    assert speedups == sorted(speedups)
    assert speedups[0] < speedups[-1]
    assert all(speedup > 1 for speedup in speedups)


def test_filtering_saves_energy():
    report = _report()
    assert 0 < report.energy_j < report.baseline_energy_j
    unfiltered = _report(ratio=0.0)
    assert unfiltered.energy_j > 0


def test_report_round_trip_is_byte_identical():
    first = io.StringIO()
    write_report(_report(), first)
    report = read_report(io.StringIO(first.getvalue()))
    second = io.StringIO()
    write_report(report, second)
    assert first.getvalue() == second.getvalue()
    assert report == _report()


def test_report_validation():
    data = _report().to_dict()
    validate_report(data)
    with pytest.raises(ParseError):
        validate_report({key: value for key, value in data.items() if key != "t_total"})
    with pytest.raises(ParseError):
        validate_report({**data, "extra": 1})
    with pytest.raises(ParseError):
        validate_report({**data, "reads_total": "many"})
    with pytest.raises(ParseError):
        validate_report({**data, "schema_version": 99})
    with pytest.raises(ParseError):
        read_report(io.StringIO("not json"))
    with pytest.raises(ParseError):
        validate_report(json.loads("[1, 2]"))


def test_host_model_errors():
    with pytest.raises(ConfigError):
        host_model("gpu")
    with pytest.raises(ConfigError):
        host_model("software", throughput_gbps=0)


def test_em_pipeline_run(small_reference, short_reads, skindex):
    result = run_pipeline(
        short_reads, skindex, "em", preset("SSD-L"), host_model("software"), small_reference.nbytes
    )
    report = result.report
    assert report.reads_total == len(short_reads)
    assert report.reads_filtered + report.reads_forwarded == report.reads_total
    assert report.filter_ratio == pytest.approx(0.8, abs=0.02)
    assert len(result.forwarded) == report.reads_forwarded
    assert [read.id for read in result.forwarded] == sorted(read.id for read in result.forwarded)
    assert report.bytes_forwarded == result.forwarded.nbytes
    assert report.parameters["read_len"] == 150
    assert report.parameters["scale"] == 1.0


def test_ideal_run_reaches_the_bound(small_reference, short_reads, skindex):
    report = run_pipeline(
        short_reads,
        skindex,
        "em",
        preset("SSD-M"),
        host_model("hw-short"),
        small_reference.nbytes,
        ideal=True,
    ).report
    assert report.t_total == pytest.approx(report.t_metadata_flush + report.t_ideal_isf)


def test_scaled_run(small_reference, short_reads, skindex):
    args = (short_reads, skindex, "em", preset("SSD-H"), host_model("software"))
    base = run_pipeline(*args, small_reference.nbytes).report
    scaled = run_pipeline(*args, small_reference.nbytes, scale=100).report
    assert scaled.bytes_reads == pytest.approx(base.bytes_reads * 100)
    assert scaled.reads_total == base.reads_total * 100


def test_nm_pipeline_run(small_reference, long_reads, kmer_index):
    result = run_pipeline(
        long_reads, kmer_index, "nm", preset("SSD-H"), host_model("hw-long"), small_reference.nbytes
    )
    report = result.report
    assert report.mode == "nm"
    assert sum(report.verdicts.values()) == len(long_reads)
    assert report.parameters["k"] == kmer_index.k


def test_pipeline_rejects_wrong_index(small_reference, short_reads, skindex, kmer_index):
    ssd, host = preset("SSD-L"), host_model("software")
    with pytest.raises(IndexMismatchError):
        run_pipeline(short_reads, kmer_index, "em", ssd, host, small_reference.nbytes)
    with pytest.raises(IndexMismatchError):
        run_pipeline(short_reads, skindex, "nm", ssd, host, small_reference.nbytes)
    with pytest.raises(IndexMismatchError):
        run_pipeline(short_reads, skindex, "exact", ssd, host, small_reference.nbytes)


def test_kmer_index_must_fit_ssd_dram(small_reference, long_reads, kmer_index):
    tiny = replace(preset("SSD-L"), dram_gib=kmer_index.nbytes / 2 / 2 ** 30, name="tiny")
    with pytest.raises(CapacityError):
        run_pipeline(
            long_reads, kmer_index, "nm", tiny, host_model("software"), small_reference.nbytes
        )


@pytest.mark.parametrize("mode", ["em", "nm"])
def test_output_does_not_depend_on_threads(
    mode, small_reference, short_reads, long_reads, skindex, kmer_index
):
    reads, index = (short_reads, skindex) if mode == "em" else (long_reads, kmer_index)
    results = [
        run_pipeline(
            reads,
            index,
            mode,
            preset("SSD-M"),
            host_model("software"),
            small_reference.nbytes,
            threads=threads,
        )
        for threads in (1, 4)
    ]
    assert results[0].report == results[1].report
    assert results[0].forwarded == results[1].forwarded
    assert results[0].decisions == results[1].decisions
