class PrioritizerException(Exception):
    def __str__(self):
        return "Prioritizer error."


class MatrixFormatException(PrioritizerException):
    """`line` locates TSV and JSONL errors; `entry` is the index into a JSON document's "tests" list."""

    def __init__(self, message: str, line: int | None = None, source: str | None = None, entry: int | None = None):
        self.message = message
        self.line = line
        self.source = source
        self.entry = entry

    def __str__(self):
        where = ""
        if self.source is not None:
            where += f"{self.source}"
        if self.line is not None:
            where += f":{self.line}" if where else f"line {self.line}"
        if self.entry is not None:
            where += f" tests[{self.entry}]" if where else f"tests[{self.entry}]"
        return f"{where}: {self.message}" if where else self.message


class UndetectedFaultException(PrioritizerException):
    def __init__(self, fault: int, source: str | None = None):
        self.fault = fault
        self.source = source

    def __str__(self):
        prefix = f"{self.source}: " if self.source else ""
        return f"{prefix}fault f{self.fault} undetected"


class GroupMapException(PrioritizerException):
    def __init__(self, message: str, line: int | None = None):
        self.message = message
        self.line = line

    def __str__(self):
        if self.line is None:
            return self.message
        return f"line {self.line}: {self.message}"


class UnknownStrategyException(PrioritizerException):
    def __init__(self, strategy):
        self.strategy = strategy

    def __str__(self):
        return f"Unknown strategy {self.strategy!r}."


class StrategyConfigException(PrioritizerException):
    def __init__(self, key: str, val):
        self.key = key
        self.val = val

    def __str__(self):
        return f"Invalid strategy setting {self.key}={self.val!r}."


class UniverseMismatchException(PrioritizerException):
    def __init__(self, message: str, test: str | None = None):
        self.message = message
        self.test = test

    def __str__(self):
        if self.test is None:
            return f"Test universe mismatch: {self.message}"
        return f"Test universe mismatch at test {self.test!r}: {self.message}"


class EmptySampleException(PrioritizerException):
    def __init__(self, message: str = "Statistical comparison needs non-empty samples."):
        self.message = message

    def __str__(self):
        return self.message


class InvariantViolationException(PrioritizerException):
    def __init__(self, message: str):
        self.message = message

    def __str__(self):
        return f"Internal invariant violated: {self.message}"


class PlanException(PrioritizerException):
    def __init__(self, message: str):
        self.message = message

    def __str__(self):
        return f"Invalid experiment plan: {self.message}"
