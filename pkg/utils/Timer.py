import time
from collections import defaultdict, deque


class RunTimer(object):
    """Monotonic nanosecond timer; keeps the last few readings per title."""

    history: dict[str, deque[int]] = defaultdict(lambda: deque(maxlen=RunTimer.maxStores))
    maxStores = 10

    def __init__(self, title: str):
        self.title = title
        self.nsecs = 0

    def __enter__(self):
        self.start = time.perf_counter_ns()
        return self

    def __exit__(self, *_):
        # clamp so a zero-resolution clock still reports a positive duration
        self.nsecs = max(1, time.perf_counter_ns() - self.start)
        self.history[self.title].append(self.nsecs)

    @property
    def msecs(self) -> float:
        return self.nsecs / 1_000_000

    @classmethod
    def averageMsecs(cls, title: str) -> float:
        stored = cls.history.get(title)
        if not stored:
            return 0.0
        return sum(stored) / len(stored) / 1_000_000
