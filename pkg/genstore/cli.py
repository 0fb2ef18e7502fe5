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

"""
Command line interface.

Exit codes: 0 on success, 2 for bad input or parameters, 3 when the index
does not suit the filter, 4 when a structure does not fit the SSD DRAM.
"""

import argparse
import json
import logging
import os
import sys

from genstore.contexts import FilterContext
from genstore.emfilter import em_filter_reads, write_em_decisions
from genstore.errors import CapacityError, ConfigError, GenStoreError, IndexMismatchError
from genstore.index import (
    IndexParams,
    KmerIndex,
    SkIndex,
    build_kmer_index,
    build_skindex,
    build_srtable,
    load_index,
    save_index,
)
from genstore.index.params import DEFAULT_K, DEFAULT_MAX_LOCATIONS, DEFAULT_READ_LEN, DEFAULT_W
from genstore.metrics import (
    FilterRatio,
    ForwardedBytes,
    ReadsFiltered,
    ReadsForwarded,
    ReadsTotal,
    VerdictHistogram,
)
from genstore.modes import FilterMode, IndexKind, IoPath
from genstore.nmfilter import NmParams, nm_filter_reads, write_nm_decisions
from genstore.pipeline import (
    Workload,
    host_model,
    model_workload,
    run_pipeline,
    write_report,
)
from genstore.seqio import open_stream, parse_fasta, parse_fastq, write_fasta, write_fastq
from genstore.ssd import PRESETS, load_config, simulate_stream, stream_time, write_events_csv
from genstore.ssd.config import GB
from genstore.synth import (
    GENERATOR_VERSION,
    PRESETS as WORKLOAD_PRESETS,
    LongReadPreset,
    ShortReadPreset,
    gen_longreads,
    gen_reads,
    gen_reference,
    get_preset,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_MISMATCH = 3
EXIT_CAPACITY = 4

THREADS_ENV = "GENSTORE_THREADS"
DEFAULT_REF_GB = 7.0

logger = logging.getLogger(__name__)


def resolve_threads(flag):
    """``--threads`` when given, else ``$GENSTORE_THREADS``, else 1."""
    value = flag if flag is not None else os.environ.get(THREADS_ENV, 1)
    try:
        threads = int(value)
    except ValueError:
        raise ConfigError(f"{THREADS_ENV}={value!r} is not an integer") from None
    if threads < 1:
        raise ConfigError(f"thread count must be at least 1, got {threads}")
    return threads


def _read_reference(path):
    with open_stream(path) as stream:
        return parse_fasta(stream)


def _read_reads(path):
    with open_stream(path) as stream:
        return parse_fastq(stream)


def _nm_params(args, index):
    return NmParams(
        min_seeds=args.min_seeds,
        max_seeds=args.max_seeds,
        lookback=args.lookback,
        k=index.k,
        w=index.w,
        min_chain_score=args.min_chain_score,
        max_gap=args.max_gap,
    )


def _expect_index(index, mode):
    expected = SkIndex if FilterMode(mode) == FilterMode.EM else KmerIndex
    if not isinstance(index, expected):
        raise IndexMismatchError(
            f"--mode {FilterMode(mode).value} needs a {expected.__name__}, "
            f"the index file holds a {type(index).__name__}"
        )


def cmd_build_index(args):
    ref = _read_reference(args.reference)
    if args.mode == FilterMode.EM.value:
        index = build_skindex(
            ref, args.read_length, canonical=args.canonical_em, threads=args.threads
        )
    else:
        params = IndexParams(k=args.k, w=args.w, max_locations=args.max_locations)
        index = build_kmer_index(ref, params)
    save_index(index, args.out)
    print(f"[build-index] {type(index).__name__}: {len(index)} entries -> {args.out}")


def cmd_preprocess_reads(args):
    reads = _read_reads(args.reads)
    table = build_srtable(reads, canonical=args.canonical_em)
    save_index(table, args.out)
    print(f"[preprocess-reads] SrTable: {len(table)} entries -> {args.out}")


def cmd_filter(args):
    index = load_index(args.index)
    _expect_index(index, args.mode)
    reads = _read_reads(args.reads)
    mode = FilterMode(args.mode)

    if mode == FilterMode.EM:
        srtable = None
        if args.srtable:
            srtable = load_index(args.srtable, kind=IndexKind.SRTABLE)
        parameters = {"read_len": index.k, "canonical": index.canonical}
        decisions = []
        if len(reads):
            decisions, stats = em_filter_reads(
                reads, index, srtable=srtable, threads=args.threads
            )
            parameters["comparator_steps"] = stats.comparator_steps
        write_decisions = write_em_decisions
    else:
        params = _nm_params(args, index)
        parameters = {**params.to_dict(), "max_locations": index.max_locations}
        decisions, _ = nm_filter_reads(reads, index, params, threads=args.threads)
        write_decisions = write_nm_decisions

    context = FilterContext(
        mode,
        reads,
        decisions,
        metrics=[
            ReadsTotal(),
            ReadsFiltered(),
            ReadsForwarded(),
            FilterRatio(),
            ForwardedBytes(),
            VerdictHistogram(),
        ],
    )
    context.measure_metrics()
    stats = {"mode": mode.value, "parameters": parameters, **context.results()}

    with open(args.out_fastq, "wb") as stream:
        write_fastq(context.forwarded_reads(), stream)
    with open(args.out_decisions, "wb") as stream:
        write_decisions(decisions, stream)
    if args.out_stats:
        with open(args.out_stats, "w") as stream:
            json.dump(stats, stream, indent=4, sort_keys=True)
            stream.write("\n")
    print(
        f"[filter] {mode.value}: {stats['reads_filtered']} of {stats['reads_total']} "
        f"reads filtered, {stats['reads_forwarded']} forwarded"
    )


def _simulate_analytic(args, ssd, host):
    workload = Workload.from_ratio(
        ref_bytes=(args.ref_gb if args.ref_gb is not None else DEFAULT_REF_GB) * GB,
        read_bytes=args.readset_gb * GB,
        ratio=args.ratio,
        index_bytes=args.index_gb * GB,
        mode=args.mode,
    ).scaled(args.scale)
    return model_workload(
        workload,
        ssd,
        host,
        in_storage=not args.external_filter,
        ideal=args.ideal,
        parameters={"analytic_only": True, "ratio": args.ratio, "scale": args.scale},
    )


def _simulate_run(args, ssd, host):
    for flag in ("reference", "reads", "index"):
        if getattr(args, flag) is None:
            raise ConfigError(f"--{flag} is required unless --analytic-only is given")
    ref = _read_reference(args.reference)
    reads = _read_reads(args.reads)
    index = load_index(args.index)
    _expect_index(index, args.mode)
    kwargs = {}
    if args.mode == FilterMode.NM.value:
        kwargs["params"] = _nm_params(args, index)
    ref_bytes = args.ref_gb * GB if args.ref_gb is not None else ref.nbytes
    result = run_pipeline(
        reads,
        index,
        args.mode,
        ssd,
        host,
        ref_bytes,
        in_storage=not args.external_filter,
        ideal=args.ideal,
        scale=args.scale,
        threads=args.threads,
        **kwargs,
    )
    return result.report


def cmd_simulate(args):
    ssd = load_config(args.ssd)
    host = host_model(args.host, args.host_throughput)
    if args.analytic_only:
        report = _simulate_analytic(args, ssd, host)
    else:
        report = _simulate_run(args, ssd, host)

    if args.events_csv:
        streamed = report.bytes_internal - report.bytes_ref
        timeline = simulate_stream(int(streamed), ssd)
        analytic = stream_time(streamed, ssd, IoPath.INTERNAL).seconds
        logger.info(
            "event mode streamed %d bytes in %.6f s, analytic %.6f s",
            int(streamed),
            timeline.total_s,
            analytic,
        )
        with open(args.events_csv, "w", newline="") as stream:
            write_events_csv(timeline, stream)

    if args.out:
        with open(args.out, "w") as stream:
            write_report(report, stream)
        print(
            f"[simulate] {report.mode} on {report.ssd}/{report.host}: "
            f"speedup {report.speedup:.3f}, dm_saving {report.dm_saving:.3f} -> {args.out}"
        )
    else:
        write_report(report, sys.stdout)


def _write_reads(reads, path):
    with open(path, "wb") as stream:
        write_fastq(reads, stream)


def cmd_gen(args):
    if args.kind == "reference":
        if args.length is None:
            raise ConfigError("gen reference needs --length")
        ref = gen_reference(args.length, seed=args.seed)
        with open(args.out, "wb") as stream:
            write_fasta(ref, stream, header_suffix=GENERATOR_VERSION)
        print(f"[gen] reference of {ref.length} bases -> {args.out}")
        return

    if args.reference is None:
        raise ConfigError(f"gen {args.kind} needs --reference")
    ref = _read_reference(args.reference)
    if args.preset:
        preset = get_preset(args.preset)
        expected = ShortReadPreset if args.kind == "reads" else LongReadPreset
        if not isinstance(preset, expected):
            raise ConfigError(f"preset {args.preset!r} does not describe {args.kind}")
        reads = preset.generate(ref, args.count, seed=args.seed)
    elif args.kind == "reads":
        reads = gen_reads(
            ref,
            read_len=args.read_length,
            count=args.count,
            exact_fraction=args.exact_fraction,
            subst_rate=args.subst_rate,
            seed=args.seed,
        )
    else:
        reads = gen_longreads(
            ref,
            mean_len=args.mean_length,
            count=args.count,
            align_fraction=args.align_fraction,
            error_rate=args.error_rate,
            seed=args.seed,
            indel_fraction=args.indel_fraction,
        )
    _write_reads(reads, args.out)
    print(f"[gen] {len(reads)} {args.kind} -> {args.out}")


def cmd_presets(args):
    for name, config in PRESETS.items():
        print(
            f"{name}: internal {config.internal_bw_gbps:.1f} GB/s, "
            f"external {config.external_bw_gbps:.1f} GB/s, "
            f"ratio {config.ratio:.3f}"
        )
    for name, preset in WORKLOAD_PRESETS.items():
        if isinstance(preset, ShortReadPreset):
            print(f"{name}: exact fraction {preset.exact_fraction}, {preset.description}")
        else:
            print(f"{name}: align fraction {preset.align_fraction}, {preset.description}")


def _add_nm_arguments(parser):
    group = parser.add_argument_group("non-matching filter")
    group.add_argument("-M", "--min-seeds", type=int, default=3)
    group.add_argument("-N", "--max-seeds", type=int, default=64)
    group.add_argument("--lookback", type=int, default=50)
    group.add_argument("--min-chain-score", type=int, default=40)
    group.add_argument("--max-gap", type=int, default=5000)


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=None, help=f"workers, or ${THREADS_ENV}")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("-v", "--verbose", action="count", default=0)

    parser = argparse.ArgumentParser(
        prog="genstore", description="In-storage read filtering for genome sequence analysis"
    )
    commands = parser.add_subparsers(dest="command", required=True)
    modes = [mode.value for mode in FilterMode]

    build = commands.add_parser("build-index", parents=[common], help="build a filter index")
    build.add_argument("--mode", choices=modes, required=True)
    build.add_argument("--reference", required=True)
    build.add_argument("--read-length", type=int, default=DEFAULT_READ_LEN)
    build.add_argument("-k", type=int, default=DEFAULT_K)
    build.add_argument("-w", type=int, default=DEFAULT_W)
    build.add_argument("--max-locations", type=int, default=DEFAULT_MAX_LOCATIONS)
    build.add_argument("--canonical-em", action="store_true")
    build.add_argument("--out", required=True)
    build.set_defaults(func=cmd_build_index)

    pre = commands.add_parser("preprocess-reads", parents=[common], help="build a read table")
    pre.add_argument("--reads", required=True)
    pre.add_argument("--canonical-em", action="store_true")
    pre.add_argument("--out", required=True)
    pre.set_defaults(func=cmd_preprocess_reads)

    flt = commands.add_parser("filter", parents=[common], help="filter a read set")
    flt.add_argument("--mode", choices=modes, required=True)
    flt.add_argument("--index", required=True)
    flt.add_argument("--reads", required=True)
    flt.add_argument("--srtable")
    flt.add_argument("--out-fastq", required=True)
    flt.add_argument("--out-decisions", required=True)
    flt.add_argument("--out-stats")
    _add_nm_arguments(flt)
    flt.set_defaults(func=cmd_filter)

    sim = commands.add_parser("simulate", parents=[common], help="model a filtered run")
    sim.add_argument("--ssd", default="SSD-L", help="preset name or JSON config file")
    sim.add_argument("--host", default="software")
    sim.add_argument("--host-throughput", type=float, help="GB/s")
    sim.add_argument("--mode", choices=modes, default=FilterMode.EM.value)
    sim.add_argument("--analytic-only", action="store_true")
    sim.add_argument("--ratio", type=float, default=0.8)
    sim.add_argument("--readset-gb", type=float, default=22.0)
    sim.add_argument("--ref-gb", type=float)
    sim.add_argument("--index-gb", type=float, default=0.0)
    sim.add_argument("--reference")
    sim.add_argument("--reads")
    sim.add_argument("--index")
    sim.add_argument("--scale", type=float, default=1.0)
    sim.add_argument("--external-filter", action="store_true")
    sim.add_argument("--ideal", action="store_true")
    sim.add_argument("--events-csv")
    sim.add_argument("--out")
    _add_nm_arguments(sim)
    sim.set_defaults(func=cmd_simulate)

    gen = commands.add_parser("gen", parents=[common], help="generate synthetic data")
    gen.add_argument("kind", choices=["reference", "reads", "longreads"])
    gen.add_argument("--out", required=True)
    gen.add_argument("--length", type=int)
    gen.add_argument("--reference")
    gen.add_argument("--preset")
    gen.add_argument("--count", type=int, default=1000)
    gen.add_argument("--read-length", type=int, default=DEFAULT_READ_LEN)
    gen.add_argument("--exact-fraction", type=float, default=0.8)
    gen.add_argument("--subst-rate", type=float, default=0.01)
    gen.add_argument("--mean-length", type=int, default=10_000)
    gen.add_argument("--align-fraction", type=float, default=0.5)
    gen.add_argument("--error-rate", type=float, default=0.10)
    gen.add_argument("--indel-fraction", type=float, default=0.05)
    gen.set_defaults(func=cmd_gen)

    presets = commands.add_parser("presets", parents=[common], help="list presets")
    presets.set_defaults(func=cmd_presets)
    return parser


def main(argv=None):
    """Run the command line and return its exit code."""
    args = build_parser().parse_args(argv)
    level = logging.WARNING - 10 * min(args.verbose, 2)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    try:
        args.threads = resolve_threads(args.threads)
        args.func(args)
    except IndexMismatchError as error:
        print(f"genstore: error: {error}", file=sys.stderr)
        return EXIT_MISMATCH
    except CapacityError as error:
        print(f"genstore: error: {error}", file=sys.stderr)
        return EXIT_CAPACITY
    except (GenStoreError, ValueError, OSError) as error:
        print(f"genstore: error: {error}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
