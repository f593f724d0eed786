import logging


class NullHandler(logging.Handler):
    def emit(self, record):
        pass


class PrioritizerLogger:
    _instance = None

    @classmethod
    def get_instance(cls):
        if cls._instance is None:
            cls._instance = cls()
        return cls._instance

    def __init__(self):
        logger = logging.getLogger("tcpocp")
        logger.setLevel(logging.DEBUG)
        logger.addHandler(NullHandler())
        self.logger = logger
        self.initialized = False

    def initialize(self, logFile: str | None = None, verbose: bool = False):
        # handlers are attached once per process
        if self.initialized:
            return
        self.initialized = True
        if logFile is not None:
            file_handler = logging.FileHandler(logFile, encoding="utf-8", mode="w")
            file_formatter = logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(process)d - %(message)s")
            file_handler.setFormatter(file_formatter)
            file_handler.setLevel(logging.DEBUG)
            self.logger.addHandler(file_handler)

        stream_formatter = logging.Formatter("%(message)s")
        stream_handler = logging.StreamHandler()
        stream_handler.setFormatter(stream_formatter)
        stream_handler.setLevel(logging.DEBUG if verbose else logging.INFO)
        self.logger.addHandler(stream_handler)

    def getLogger(self):
        return self.logger
