import argparse
import sys

from harness.ExperimentManager import ExperimentManager, compareFiles, evaluate, synth, writeText
from evaluation.ApfdTable import summarize_apfd, writeApfdSummaryCsv
from evaluation.Efficiency import renderEfficiencyCsv, renderEfficiencyText
from mods.log_control import PrioritizerLogger
from stats.Comparison import renderSummaryCsv, renderSummaryText
from utils.const import (
    DEFAULT_ALPHA,
    DEFAULT_REPEATS,
    DEFAULT_WARMUP_RUNS,
    EXIT_INPUT_ERROR,
    EXIT_INVARIANT_VIOLATION,
    EXIT_OK,
    STORED_SETTING_FILE,
    STRATEGY_TYPES,
    UINT64_MASK,
)
from utils.Exceptions import InvariantViolationException, PlanException, PrioritizerException
from utils.PrioritizerParams import ExperimentPlan, SynthSpec
from utils.StrategySettings import StrategyConfig, loadStrategySettings

logger = PrioritizerLogger.get_instance().getLogger()


class PrioritizerArgumentParser(argparse.ArgumentParser):
    # usage errors are input errors; 2 is reserved for invariant violations
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT_ERROR, f"{self.prog}: error: {message}\n")


def seedType(value: str) -> int:
    seed = int(value, 0)
    if not 0 <= seed <= UINT64_MASK:
        raise argparse.ArgumentTypeError(f"seed {value} is not an unsigned 64-bit integer")
    return seed


def setupArgParser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", type=str, choices=["tsv", "json"], default="tsv", help="matrix file format")
    common.add_argument("--out", type=str, default=None, help="output file (synth: output directory)")
    common.add_argument("--log-file", type=str, default=None, help="also log to this file")
    common.add_argument("--verbose", action="store_true", help="debug logging")

    strategy = argparse.ArgumentParser(add_help=False)
    strategy.add_argument("--coverage", type=str, required=True, help="coverage matrix file")
    strategy.add_argument("--kill", type=str, default=None, help="kill matrix file; logs the mean APFD of each strategy")
    strategy.add_argument(
        "--strategy",
        type=str,
        action="append",
        choices=STRATEGY_TYPES,
        default=None,
        help="strategy to run, repeatable (default: ocp)",
    )
    strategy.add_argument("--repeats", type=int, default=DEFAULT_REPEATS, help="runs per strategy")
    strategy.add_argument("--seed", type=seedType, default=0, help="base seed")
    strategy.add_argument("--config", type=str, default=STORED_SETTING_FILE, help="strategy settings file")
    strategy.add_argument("--unified-ratio", type=float, default=None, help="unified-greedy weight reduction ratio")
    strategy.add_argument("--art-candidates", type=int, default=None, help="ART candidate set size")
    strategy.add_argument("--ga-population", type=int, default=None, help="GA population size")
    strategy.add_argument("--ga-generations", type=int, default=None, help="GA generations")
    strategy.add_argument("--groups", type=str, default=None, help="GroupMap file; prioritize groups instead of tests")
    strategy.add_argument("--group-by-class", action="store_true", help="group test methods by their class name")

    parser = PrioritizerArgumentParser(prog="tcp_prioritizer", description="coverage-based test case prioritization")
    subparsers = parser.add_subparsers(dest="command", required=True)

    prioritize = subparsers.add_parser("prioritize", parents=[common, strategy], help="write orderings as JSON lines")
    prioritize.add_argument("--workers", type=int, default=1, help="concurrent runs")

    bench = subparsers.add_parser("bench", parents=[common, strategy], help="efficiency table over timed runs")
    bench.add_argument("--warmup", type=int, default=DEFAULT_WARMUP_RUNS, help="discarded runs per strategy before timing")

    evaluateParser = subparsers.add_parser("evaluate", parents=[common], help="APFD of each ordering")
    evaluateParser.add_argument("--orderings", type=str, required=True, help="orderings JSONL file")
    evaluateParser.add_argument("--kill", type=str, required=True, help="kill matrix file")
    evaluateParser.add_argument("--coverage", type=str, default=None, help="coverage file the orderings were made from; aligns tests by name")
    evaluateParser.add_argument("--drop-undetected", action="store_true", help="drop faults no test detects instead of failing")
    evaluateParser.add_argument("--groups", type=str, default=None, help="GroupMap file used for prioritization")
    evaluateParser.add_argument("--group-by-class", action="store_true", help="orderings rank test classes")
    evaluateParser.add_argument("--summary", type=str, default=None, help="also write per-strategy APFD distribution CSV")

    compareParser = subparsers.add_parser("compare", parents=[common], help="Mann-Whitney U and A12 verdicts")
    compareParser.add_argument("apfd", nargs="+", help="one or two APFD CSV files")
    compareParser.add_argument("--alpha", type=float, default=DEFAULT_ALPHA, help="significance level")
    compareParser.add_argument("--baseline", type=str, choices=STRATEGY_TYPES, default=None, help="compare this strategy against every other")

    synthParser = subparsers.add_parser("synth", parents=[common], help="generate a synthetic coverage and kill matrix")
    synthParser.add_argument("--tests", type=int, required=True)
    synthParser.add_argument("--units", type=int, required=True)
    synthParser.add_argument("--density", type=float, required=True)
    synthParser.add_argument("--faults", type=int, required=True)
    synthParser.add_argument("--fault-coupling", type=float, default=0.5)
    synthParser.add_argument("--fault-site-size", type=int, default=2)
    synthParser.add_argument("--seed", type=seedType, default=0)
    return parser


def buildConfig(args) -> StrategyConfig:
    config = loadStrategySettings(args.config)
    overrides = {
        "unified_ratio": args.unified_ratio,
        "art_candidate_size": args.art_candidates,
        "ga_population": args.ga_population,
        "ga_generations": args.ga_generations,
    }
    for key, val in overrides.items():
        if val is not None:
            config.update_settings(key, val)
    return config.validate()


def buildPlan(args) -> ExperimentPlan:
    return ExperimentPlan(
        coverage=args.coverage,
        strategies=args.strategy if args.strategy is not None else ["ocp"],
        kill=args.kill,
        repeats=args.repeats,
        base_seed=args.seed,
        config=buildConfig(args),
        out=args.out,
        format=args.format,
        groups=args.groups,
        group_by_class=args.group_by_class,
        workers=getattr(args, "workers", 1),
        warmup=getattr(args, "warmup", DEFAULT_WARMUP_RUNS),
    )


def runCommand(args):
    if args.command == "prioritize":
        ExperimentManager(buildPlan(args)).prioritize()
    elif args.command == "bench":
        table = ExperimentManager(buildPlan(args)).bench()
        sys.stdout.write(renderEfficiencyText(table))
        if args.out is not None:
            writeText(renderEfficiencyCsv(table), args.out)
    elif args.command == "evaluate":
        records = evaluate(
            args.orderings,
            args.kill,
            args.format,
            coveragePath=args.coverage,
            drop_undetected=args.drop_undetected,
            groups=args.groups,
            group_by_class=args.group_by_class,
            out=args.out,
        )
        if args.summary is not None:
            with open(args.summary, "w", encoding="utf-8", newline="\n") as f:
                writeApfdSummaryCsv(summarize_apfd(records), f)
    elif args.command == "compare":
        if len(args.apfd) > 2:
            raise PlanException("compare takes one or two APFD files")
        rows = compareFiles(args.apfd[0], args.apfd[1] if len(args.apfd) == 2 else None, args.alpha, args.baseline)
        sys.stdout.write(renderSummaryText(rows))
        if args.out is not None:
            writeText(renderSummaryCsv(rows), args.out)
    elif args.command == "synth":
        spec = SynthSpec(
            tests=args.tests,
            units=args.units,
            density=args.density,
            faults=args.faults,
            fault_coupling=args.fault_coupling,
            seed=args.seed,
            fault_site_size=args.fault_site_size,
        )
        synth(spec, args.out if args.out is not None else ".", args.format)


def main(argv: list[str] | None = None) -> int:
    parser = setupArgParser()
    args = parser.parse_args(argv)
    PrioritizerLogger.get_instance().initialize(args.log_file, args.verbose)

    try:
        runCommand(args)
    except InvariantViolationException as e:
        logger.error(f"[Prioritizer] {e}")
        return EXIT_INVARIANT_VIOLATION
    except (PrioritizerException, OSError) as e:
        logger.error(f"[Prioritizer] {e}")
        return EXIT_INPUT_ERROR
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
