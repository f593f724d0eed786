from dataclasses import dataclass, field

from utils.const import DEFAULT_REPEATS, DEFAULT_WARMUP_RUNS, MatrixFormat, StrategyType
from utils.Exceptions import PlanException
from utils.StrategySettings import StrategyConfig


@dataclass
class ExperimentPlan:
    coverage: str
    strategies: list[StrategyType]
    kill: str | None = None
    repeats: int = DEFAULT_REPEATS
    base_seed: int = 0
    config: StrategyConfig = field(default_factory=StrategyConfig)
    out: str | None = None
    format: MatrixFormat = "tsv"
    groups: str | None = None
    group_by_class: bool = False
    workers: int = 1
    warmup: int = DEFAULT_WARMUP_RUNS

    def validate(self):
        if self.repeats < 1:
            raise PlanException("repeats must be >= 1")
        if len(self.strategies) == 0:
            raise PlanException("at least one strategy is required")
        if not 0 <= self.base_seed < 2**64:
            raise PlanException("seed must be an unsigned 64-bit integer")
        if self.workers < 1:
            raise PlanException("workers must be >= 1")
        if self.warmup < 0:
            raise PlanException("warmup must be >= 0")
        self.config.validate()
        return self


@dataclass
class SynthSpec:
    tests: int
    units: int
    density: float
    faults: int
    fault_coupling: float = 0.5
    seed: int = 0
    # units a seeded fault lives in
    fault_site_size: int = 2

    def validate(self):
        if self.tests < 1 or self.units < 1 or self.faults < 1:
            raise PlanException("tests, units and faults must be >= 1")
        if not 0.0 < self.density <= 1.0:
            raise PlanException("density must lie in (0, 1]")
        if not 0.0 < self.fault_coupling <= 1.0:
            raise PlanException("fault coupling must lie in (0, 1]")
        if self.fault_site_size < 1:
            raise PlanException("fault site size must be >= 1")
        return self
