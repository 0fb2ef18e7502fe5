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

"""Tests for :py:mod:`genstore.metrics` and :py:mod:`genstore.contexts`."""

import pytest

from genstore.contexts import BaseContext, FilterContext
from genstore.emfilter import EmDecision
from genstore.errors import IndexMismatchError
from genstore.metrics import (
    FilterRatio,
    ForwardedBytes,
    Metric,
    ReadsFiltered,
    ReadsForwarded,
    ReadsTotal,
    VerdictHistogram,
)
from genstore.modes import EmVerdict, FilterMode, NmVerdict
from genstore.nmfilter import NmDecision
from genstore.seqio import ReadSet


@pytest.fixture
def reads():
    return ReadSet.from_sequences(["ACGTACGT", "TTTTTTTT", "GGGGGGGG", "CCCCCCCC"])


def _all_metrics():
    return [
        ReadsTotal(),
        ReadsFiltered(),
        ReadsForwarded(),
        FilterRatio(),
        ForwardedBytes(),
        VerdictHistogram(),
    ]


def test_filter_metrics_on_exact_match_decisions(reads):
    decisions = [
        EmDecision(2, EmVerdict.EXACT_MATCH),
        EmDecision(0, EmVerdict.FORWARD),
        EmDecision(3, EmVerdict.EXACT_MATCH),
        EmDecision(1, EmVerdict.EXACT_MATCH),
    ]
    context = FilterContext(FilterMode.EM, reads, decisions, metrics=_all_metrics())
    context.measure_metrics()
    assert context.results() == {
        "reads_total": 4,
        "reads_filtered": 3,
        "reads_forwarded": 1,
        "filter_ratio": 0.75,
        "forwarded_bytes": reads[0].nbytes,
        "verdicts": {"EXACT_MATCH": 3, "FORWARD": 1},
    }
    assert context.forwarded_mask == (True, False, False, False)
    assert [read.id for read in context.forwarded_reads()] == [0]


def test_filter_metrics_on_non_matching_decisions(reads):
    decisions = [
        NmDecision(0, NmVerdict.FILTER_LOW_SEEDS),
        NmDecision(1, NmVerdict.FORWARD_MANY_SEEDS),
        NmDecision(2, NmVerdict.FILTER_LOW_CHAIN, 12, 5),
        NmDecision(3, NmVerdict.FORWARD_CHAINED, 80, 9),
    ]
    context = FilterContext("nm", reads, decisions, metrics=_all_metrics())
    context.measure_metrics()
    results = context.results()
    assert context.mode == FilterMode.NM
    assert results["reads_forwarded"] == 2
    assert results["filter_ratio"] == 0.5
    assert [read.id for read in context.forwarded_reads()] == [1, 3]
    assert list(results["verdicts"]) == sorted(results["verdicts"])


def test_reset_states(reads):
    metric = ReadsTotal()
    context = FilterContext(
        FilterMode.EM,
        reads,
        [EmDecision(i, EmVerdict.FORWARD) for i in range(4)],
        metrics=[metric],
    )
    context.measure_metrics()
    context.measure_metrics()
    assert metric.result() == 8
    metric.reset_states()
    assert metric.result() == 0


def test_empty_read_set_ratio():
    context = FilterContext(FilterMode.EM, ReadSet(), [], metrics=[FilterRatio()])
    context.measure_metrics()
    assert context.results() == {"filter_ratio": 0.0}


def test_decisions_must_cover_the_reads(reads):
    with pytest.raises(IndexMismatchError):
        FilterContext(FilterMode.EM, reads, [EmDecision(0, EmVerdict.FORWARD)])
    with pytest.raises(IndexMismatchError):
        FilterContext(
            FilterMode.EM,
            reads,
            [EmDecision(i % 3, EmVerdict.FORWARD) for i in range(4)],
        )


def test_context_rejects_non_metrics():
    with pytest.raises(ValueError):
        BaseContext(metrics=["reads_total"])


def test_metric_json_helpers(tmp_path):
    path = str(tmp_path / "nested" / "stats.json")
    Metric.json_write(path, {"b": 1, "a": 2})
    assert Metric.json_read(path) == {"a": 2, "b": 1}
    with open(path) as fp:
        text = fp.read()
    assert text.index('"a"') < text.index('"b"')
    with pytest.raises(FileNotFoundError):
        Metric.json_read(str(tmp_path / "missing.json"))
