"""
Synthetic subject generator.

Every test covers every unit independently with probability `density`. Each
fault is seeded into a random site of `fault_site_size` units; a test kills it
with probability fault_coupling times the fraction of the site the test
covers. Fault columns nobody kills are redrawn, and after MAX_REDRAWS the test
with the largest site overlap is made the killer.
"""
import os

import numpy as np

from coverage_model.CoverageMatrix import CoverageMatrix, KillMatrix
from coverage_model.MatrixIO import serialize_coverage, serialize_kill
from mods.log_control import PrioritizerLogger
from strategies.StrategyManager import newGenerator
from utils.const import MatrixFormat
from utils.PrioritizerParams import SynthSpec

logger = PrioritizerLogger.get_instance().getLogger()

MAX_REDRAWS = 10


def syntheticTestNames(n: int) -> list[str]:
    width = len(str(n))
    return [f"t{i + 1:0{width}d}" for i in range(n)]


def generate(spec: SynthSpec) -> tuple[CoverageMatrix, KillMatrix]:
    spec.validate()
    rng = newGenerator(spec.seed)
    n, m, k = spec.tests, spec.units, spec.faults

    dense = rng.random((n, m)) < spec.density
    kills = np.zeros((n, k), dtype=bool)
    siteSize = min(spec.fault_site_size, m)
    forced = 0
    for f in range(k):
        site = rng.choice(m, size=siteSize, replace=False)
        overlap = dense[:, site].sum(axis=1) / siteSize
        probability = spec.fault_coupling * overlap
        for _ in range(MAX_REDRAWS):
            column = rng.random(n) < probability
            if column.any():
                break
        else:
            column = np.zeros(n, dtype=bool)
            column[int(np.argmax(overlap))] = True
            forced += 1
        kills[:, f] = column

    if forced > 0:
        logger.debug(f"[Synth] {forced} of {k} faults got a forced killer")
    names = syntheticTestNames(n)
    return CoverageMatrix.fromDense(names, dense), KillMatrix.fromDense(names, kills)


def synthPaths(outDir: str, format: MatrixFormat) -> tuple[str, str]:
    if format == "json":
        return os.path.join(outDir, "synth.cov.json"), os.path.join(outDir, "synth.kill.json")
    return os.path.join(outDir, "synth.cov"), os.path.join(outDir, "synth.kill")


def writeSynth(spec: SynthSpec, outDir: str, format: MatrixFormat = "tsv") -> tuple[str, str]:
    matrix, kills = generate(spec)
    os.makedirs(outDir, exist_ok=True)
    covPath, killPath = synthPaths(outDir, format)
    with open(covPath, "w", encoding="utf-8", newline="\n") as f:
        f.write(serialize_coverage(matrix, format))
    with open(killPath, "w", encoding="utf-8", newline="\n") as f:
        f.write(serialize_kill(kills, format))
    logger.info(f"[Synth] {spec.tests} tests x {spec.units} units, {spec.faults} faults -> {covPath}, {killPath}")
    return covPath, killPath
