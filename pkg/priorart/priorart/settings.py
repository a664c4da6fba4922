"""
Settings for the priorart project.

Site defaults and the logging configuration are read from the YAML files in
the configuration directory. The directory is ``config/`` next to
``manage.py`` unless ``PRIORART_CONFIG_DIR`` points elsewhere.
"""

from pathlib import Path
import logging.config
import os

from . import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent

# Path above BASE_DIR (where, e.g., requirements.txt for the project lives)
REPO_DIR = Path(__file__).resolve().parent.parent.parent


PRIORART_ENV = os.environ.get("PRIORART_ENV", default="local")
PRIORART_CONFIG_DIR = Path(os.environ.get(config.CONF_DIR_ENVVAR,
                                          default=BASE_DIR / "config/"))


siteConfig = config.Config.fromYaml(PRIORART_CONFIG_DIR / "site.yaml")
loggingConfig = config.Config.fromYaml(PRIORART_CONFIG_DIR / "logging.yaml")

OUTPUT_ROOT = siteConfig.resolveAbsFromOrigin(siteConfig.output_root)

BOOST_MAX = siteConfig.scoring.boost_max

BASELINE_KEYWORDS = siteConfig.baseline.keywords

N_MAX = siteConfig.evaluation.n_max
RANDOMIZATION_ITERATIONS = siteConfig.evaluation.randomization_iterations
GRID_ALPHAS = siteConfig.evaluation.alpha_grid
GRID_BETAS = siteConfig.evaluation.beta_grid

if "run" in siteConfig:
    RUN_DEFAULTS = siteConfig.run.asDict()
else:
    RUN_DEFAULTS = {}

RUN_DEFAULTS.setdefault("n_max", N_MAX)
RUN_DEFAULTS.setdefault("output_dir", OUTPUT_ROOT)
RUN_DEFAULTS.setdefault("baseline_k", BASELINE_KEYWORDS)
RUN_DEFAULTS.setdefault("iterations", RANDOMIZATION_ITERATIONS)
RUN_DEFAULTS.setdefault("alpha_grid", GRID_ALPHAS)
RUN_DEFAULTS.setdefault("beta_grid", GRID_BETAS)

LOGGING = loggingConfig.asDict()


def configure_logging(logDir=None):
    """Applies the logging configuration.

    Parameters
    ----------
    logDir : `str` or `None`, optional
        Directory in which file handlers write their logs. Defaults to the
        current working directory.
    """
    logConf = loggingConfig.asDict()
    for handler in logConf.get("handlers", {}).values():
        if "filename" in handler and logDir is not None:
            handler["filename"] = os.path.join(logDir, handler["filename"])
    logging.config.dictConfig(logConf)
