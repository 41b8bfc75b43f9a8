import logging

from . import utils


class CustomFormatter(logging.Formatter):
    """custom formatter class to add colors to logging"""

    fmt = "{}%(levelname)s{} %(name)s - %(message)s"

    FORMATS = {
        logging.DEBUG: fmt.format(utils.GREEN, utils.RESET),
        logging.INFO: fmt.format(utils.WHITE, utils.RESET),
        logging.WARNING: fmt.format(utils.YELLOW, utils.RESET),
        logging.ERROR: fmt.format(utils.RED, utils.RESET),
        logging.CRITICAL: fmt.format(utils.RED_BOLD, utils.RESET),
    }

    def format(self, record):
        log_fmt = self.FORMATS.get(record.levelno)
        formatter = logging.Formatter(log_fmt, datefmt="%H:%M:%S")
        return formatter.format(record)


class SctxFormatter(logging.Formatter):
    """INFO lines plain, everything else prefixed with the bold level name"""

    def __init__(self, datefmt=None):
        super().__init__(datefmt=datefmt)
        self._info_formatter = logging.Formatter("%(message)s", datefmt=datefmt)
        self._other_formatter = logging.Formatter(
            utils.bold("*%(levelname)s*") + " %(message)s", datefmt=datefmt
        )

    def format(self, record):
        if record.levelname == "INFO":
            return self._info_formatter.format(record)
        return self._other_formatter.format(record)


def config_log(debug=True, colour=False, stream=None):
    """attach a stderr handler to the 'sctx' logger tree"""
    handler = logging.StreamHandler(stream=stream)
    handler.setFormatter(CustomFormatter() if colour else SctxFormatter())
    logger = logging.getLogger("sctx")
    for old in list(logger.handlers):
        logger.removeHandler(old)
    logger.addHandler(handler)
    logger.setLevel(logging.DEBUG if debug else logging.INFO)
    logger.propagate = False
    return logger
