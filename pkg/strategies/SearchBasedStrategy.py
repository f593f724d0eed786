"""
Genetic search over test orderings.

Individuals are permutations scored by APSC. Each generation keeps the best
individual unchanged and fills the rest of the population with children of
tournament-selected parents (PMX crossover, then a swap mutation).
"""
import numpy as np

from coverage_model.CoverageMatrix import CoverageMatrix
from evaluation.Metrics import apsc_score
from mods.log_control import PrioritizerLogger
from strategies.SelectionRecorder import SelectionRecorder
from strategies.Strategy import Strategy, StrategyCounters
from utils.const import StrategyType
from utils.StrategySettings import GAParams

logger = PrioritizerLogger.get_instance().getLogger()


def partially_mapped_crossover(parent1: np.ndarray, parent2: np.ndarray, rng: np.random.Generator) -> np.ndarray:
    length = len(parent1)
    i, j = sorted(rng.choice(length, 2, replace=False).tolist())
    child = np.full(length, -1, dtype=np.int64)
    child[i : j + 1] = parent1[i : j + 1]
    inChild = np.zeros(length, dtype=bool)
    inChild[parent1[i : j + 1]] = True
    where2 = np.empty(length, dtype=np.int64)
    where2[parent2] = np.arange(length)

    for k in range(i, j + 1):
        gene = parent2[k]
        if inChild[gene]:
            continue
        slot = k
        # follow the mapping out of the copied segment
        while child[slot] != -1:
            slot = where2[child[slot]]
        child[slot] = gene
        inChild[gene] = True

    empty = child == -1
    child[empty] = parent2[empty]
    return child


def swap_mutation(individual: np.ndarray, rng: np.random.Generator):
    i, j = rng.choice(len(individual), 2, replace=False)
    individual[i], individual[j] = individual[j], individual[i]


class SearchBasedStrategy(Strategy):

    def __init__(self, ga: GAParams):
        super().__init__()
        self.strategyType: StrategyType = "search"
        self.ga = ga

    def prioritize(
        self,
        matrix: CoverageMatrix,
        rng: np.random.Generator,
        counters: StrategyCounters,
        recorder: SelectionRecorder | None = None,
    ) -> list[int]:
        n = matrix.n
        if n < 2:
            return list(range(n))

        dense = matrix.dense
        ga = self.ga

        def fitness(individual: np.ndarray) -> float:
            counters.recompute_count += 1
            return apsc_score(individual, dense)

        def tournament(population: list[np.ndarray], scores: list[float]) -> np.ndarray:
            entrants = rng.integers(len(population), size=ga.tournament_size)
            winner = max(entrants.tolist(), key=lambda e: scores[e])
            return population[winner]

        population = [rng.permutation(n) for _ in range(ga.population)]
        scores = [fitness(p) for p in population]

        for generation in range(ga.generations):
            elite = int(np.argmax(scores))
            nextPopulation = [population[elite]]
            nextScores = [scores[elite]]
            while len(nextPopulation) < ga.population:
                parent1 = tournament(population, scores)
                parent2 = tournament(population, scores)
                if rng.random() < ga.crossover_rate:
                    child = partially_mapped_crossover(parent1, parent2, rng)
                else:
                    child = parent1.copy()
                if rng.random() < ga.mutation_rate:
                    swap_mutation(child, rng)
                nextPopulation.append(child)
                nextScores.append(fitness(child))
            population, scores = nextPopulation, nextScores

        best = int(np.argmax(scores))
        logger.debug(f"[GA] best APSC {scores[best]:.6f} after {ga.generations} generations")
        order = population[best].tolist()
        if recorder is not None:
            for t in order:
                recorder.record(t, scores[best])
        return order

    def getStrategyInfo(self):
        return {
            "strategyType": self.strategyType,
            "population": self.ga.population,
            "generations": self.ga.generations,
        }
