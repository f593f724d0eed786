"""
Per-run seeds.

Run r of strategy s uses base_seed XOR H(s) XOR r, where H(s) is the first
eight bytes (little-endian) of the BLAKE2b digest of the strategy name. A run's
seed depends only on the plan, so runs may execute in any order or in
parallel.
"""
import hashlib

from utils.const import UINT64_MASK, StrategyType


def strategyHash(strategy: StrategyType) -> int:
    digest = hashlib.blake2b(strategy.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "little")


def deriveRunSeed(base_seed: int, strategy: StrategyType, run: int) -> int:
    return (base_seed ^ strategyHash(strategy) ^ run) & UINT64_MASK
