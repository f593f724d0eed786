from dataclasses import dataclass, field


@dataclass
class SelectionStep:
    step: int
    picked: int
    score: float | tuple[int, ...]
    # the covered set was cleared right before this pick
    restarted: bool = False
    # candidate -> score, for the candidates evaluated at this step
    scores: dict[int, float | tuple[int, ...]] = field(default_factory=dict)


class SelectionRecorder:
    """Per-step trace of a prioritization run, filled when passed to a strategy."""

    def __init__(self):
        self.steps: list[SelectionStep] = []

    def record(self, picked: int, score, restarted: bool = False, scores: dict | None = None):
        self.steps.append(SelectionStep(len(self.steps), int(picked), score, restarted, dict(scores or {})))

    def restartSteps(self) -> list[int]:
        return [s.step for s in self.steps if s.restarted]
