class PartitionState:
    """Unselected candidates filed under their last computed additional coverage.

    A stored value is an upper bound on the candidate's current additional
    coverage: coverage only grows between restarts, so a recomputed value can
    never exceed the stored one.
    """

    def __init__(self, candidates, initial: int, unit_count: int):
        self.unit_count = unit_count
        self.stored: dict[int, int] = {}
        self.partitions: dict[int, list[int]] = {}
        for t in candidates:
            self.file(t, initial)

    def __len__(self) -> int:
        return len(self.stored)

    def __contains__(self, t: int) -> bool:
        return t in self.stored

    def levels(self) -> list[int]:
        """Distinct stored values, descending."""
        return sorted(self.partitions, reverse=True)

    def topValue(self) -> int:
        return max(self.partitions)

    def members(self, value: int) -> list[int]:
        return list(self.partitions.get(value, []))

    def file(self, t: int, value: int):
        if value < 0 or value > self.unit_count:
            raise ValueError(f"stored value {value} outside [0, {self.unit_count}]")
        self.stored[t] = value
        self.partitions.setdefault(value, []).append(t)

    def take(self, value: int) -> list[int]:
        """Removes and returns the partition filed under `value`."""
        members = self.partitions.pop(value)
        for t in members:
            del self.stored[t]
        return members

    def resetAll(self, value: int):
        candidates = sorted(self.stored)
        self.stored.clear()
        self.partitions.clear()
        for t in candidates:
            self.file(t, value)

    def discard(self, t: int):
        value = self.stored.pop(t)
        members = self.partitions[value]
        members.remove(t)
        if len(members) == 0:
            del self.partitions[value]
