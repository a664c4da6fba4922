"""Test isolation: restore the logging configuration after every test.

``cli.main`` points the package file handlers at the run's output
directory; tests remove that directory afterwards, so the handlers must
not leak into later tests.
"""
import logging

import pytest

LOGGER_NAMES = ("priorart", "corpus", "claims", "keywords", "search", "evaluation")


@pytest.fixture(autouse=True)
def restoreLogging():
    loggers = [logging.getLogger(name) for name in LOGGER_NAMES]
    saved = [(lg, list(lg.handlers), lg.level, lg.propagate, lg.disabled) for lg in loggers]
    yield
    for lg, handlers, level, propagate, disabled in saved:
        for handler in lg.handlers:
            if handler not in handlers:
                handler.close()
        lg.handlers[:] = handlers
        lg.setLevel(level)
        lg.propagate = propagate
        lg.disabled = disabled
