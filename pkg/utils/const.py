from typing import Literal, TypeAlias


StrategyType: TypeAlias = Literal[
    "total",
    "additional",
    "unified",
    "lexicographical",
    "art",
    "search",
    "ocp",
]

# Canonical order; also the order records are written in.
STRATEGY_TYPES: list[StrategyType] = [
    "total",
    "additional",
    "unified",
    "lexicographical",
    "art",
    "search",
    "ocp",
]

MatrixFormat: TypeAlias = Literal[
    "tsv",
    "json",
]

Verdict: TypeAlias = Literal[
    "BETTER",
    "WORSE",
    "NODIFF",
]

EffectMagnitude: TypeAlias = Literal[
    "negligible",
    "small",
    "medium",
    "large",
]

STORED_SETTING_FILE = "strategy_setting.json"

DEFAULT_REPEATS = 1000
DEFAULT_ALPHA = 0.05
DEFAULT_WARMUP_RUNS = 3

# unified-greedy scores closer than this are ties
SCORE_TIE_TOLERANCE = 1e-12

# combined sample size at or below which Mann-Whitney p is exact (tie-free only)
EXACT_MWU_LIMIT = 20

UINT64_MASK = (1 << 64) - 1

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_INVARIANT_VIOLATION = 2
