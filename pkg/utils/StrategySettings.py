import json
import os
from dataclasses import asdict, dataclass, field

from mods.log_control import PrioritizerLogger
from utils.Exceptions import StrategyConfigException

logger = PrioritizerLogger.get_instance().getLogger()


@dataclass
class GAParams:
    population: int = 50
    generations: int = 100
    crossover_rate: float = 0.8
    mutation_rate: float = 0.1
    tournament_size: int = 2


@dataclass
class StrategyConfig:
    unified_ratio: float = 0.5
    art_candidate_size: int = 10
    ga: GAParams = field(default_factory=GAParams)

    # Enumerate only mutable items
    intData: list[str] = field(
        default_factory=lambda: [
            "art_candidate_size",
            "ga_population",
            "ga_generations",
            "ga_tournament_size",
        ]
    )
    floatData: list[str] = field(
        default_factory=lambda: [
            "unified_ratio",
            "ga_crossover_rate",
            "ga_mutation_rate",
        ]
    )

    def update_settings(self, key: str, val: int | float | str) -> bool:
        try:
            if key in self.intData:
                newVal = int(val)
            elif key in self.floatData:
                newVal = float(val)
            else:
                return False
        except (TypeError, ValueError):
            raise StrategyConfigException(key, val)

        if key.startswith("ga_"):
            setattr(self.ga, key[len("ga_"):], newVal)
        else:
            setattr(self, key, newVal)
        logger.debug(f"[StrategySettings] {key} -> {newVal}")
        return True

    def validate(self):
        if not 0.0 <= self.unified_ratio <= 1.0:
            raise StrategyConfigException("unified_ratio", self.unified_ratio)
        if self.art_candidate_size < 1:
            raise StrategyConfigException("art_candidate_size", self.art_candidate_size)
        if self.ga.population < 1:
            raise StrategyConfigException("ga_population", self.ga.population)
        if self.ga.generations < 0:
            raise StrategyConfigException("ga_generations", self.ga.generations)
        if not 0.0 <= self.ga.crossover_rate <= 1.0:
            raise StrategyConfigException("ga_crossover_rate", self.ga.crossover_rate)
        if not 0.0 <= self.ga.mutation_rate <= 1.0:
            raise StrategyConfigException("ga_mutation_rate", self.ga.mutation_rate)
        if self.ga.tournament_size < 1:
            raise StrategyConfigException("ga_tournament_size", self.ga.tournament_size)
        return self

    def to_dict(self) -> dict:
        data = asdict(self)
        data.pop("intData")
        data.pop("floatData")
        return data


def loadStrategySettings(path: str | None) -> StrategyConfig:
    """Reads a settings file written in the to_dict() layout.

    Missing file or missing keys fall back to defaults; values are validated
    by the caller once command-line overrides are applied. GA keys may be given
    nested under "ga" or flat with a "ga_" prefix.
    """
    config = StrategyConfig()
    if path is None or not os.path.exists(path):
        return config

    with open(path, "r", encoding="utf-8") as f:
        try:
            stored = json.load(f)
        except json.JSONDecodeError as e:
            raise StrategyConfigException(path, e.msg)
    for key, val in stored.items():
        if key == "ga" and isinstance(val, dict):
            for gaKey, gaVal in val.items():
                if not config.update_settings(f"ga_{gaKey}", gaVal):
                    logger.warning(f"[StrategySettings] unknown ga setting {gaKey} in {path}")
        elif not config.update_settings(key, val):
            logger.warning(f"[StrategySettings] unknown setting {key} in {path}")
    logger.info(f"[StrategySettings] loaded {path}")
    return config
