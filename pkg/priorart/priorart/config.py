import os

import yaml


__all__ = ["CONF_DIR_ENVVAR", "ConfigError", "yaml_to_dict", "Config",
           "RunConfig", "PRESETS", "METHODS"]


CONF_DIR_ENVVAR = "PRIORART_CONFIG_DIR"
"""Name of the environmental variable that contains the path to the directory
holding ``site.yaml`` and ``logging.yaml``. When the env var does not exist
the ``config`` directory next to ``manage.py`` is used."""

METHODS = ("clst05", "clst06", "baseline")
"""Keyword extraction methods a run can be configured with."""

PRESETS = {
    "clst05": {"method": "clst05", "boost": False, "retag": True},
    "clst05-boost": {"method": "clst05", "boost": True, "retag": True},
    "clst06": {"method": "clst06", "boost": False, "retag": True},
    "clst06-boost": {"method": "clst06", "boost": True, "retag": True},
    "clst06-noretag": {"method": "clst06", "boost": False, "retag": False},
    "clst06-noretag-boost": {"method": "clst06", "boost": True, "retag": False},
    "baseline": {"method": "baseline", "boost": False, "retag": True},
}
"""Named run variants, one per compared system."""


class ConfigError(ValueError):
    """Exception raised when a configuration value is invalid.

    Attributes:
        message -- explanation of the error
    """

    def __init__(self, message="The configuration is not valid"):
        self.message = message
        super().__init__(self.message)


def yaml_to_dict(filePath):
    """Reads given YAML file and returns a dictionary.

    Parameters
    ----------
    filePath : `str`
        Path to the YAML file. JSON files are valid YAML and can be read too.

    Returns
    -------
    confDict : `dict`
        Dictionary of YAML key-value pairs.

    Raises
    ------
    FileNotFoundError
        When the file does not exist.
    ConfigError
        When the file does not contain a mapping.
    """
    if not os.path.isfile(filePath):
        raise FileNotFoundError(f"No configuration file found: {filePath}")

    with open(filePath, 'r', encoding="utf-8") as stream:
        confDict = yaml.safe_load(stream)

    if confDict is None:
        return {}
    if not isinstance(confDict, dict):
        raise ConfigError(f"Configuration file {filePath} must contain a mapping, "
                          f"got {type(confDict).__name__}.")

    return confDict


class Config():
    """Represents a general YAML configuration file. YAML keys are mapped to
    class attributes.

    Parameters
    ----------
    confDict : `dict`, optional
        Dictionary whose keys will be mapped to attributes of the class.
    origin : `str`, optional
        Path to the config file, if one was used to instantiate a config
        from.
    """

    defaults = {}
    """Default instantiation values."""

    def __init__(self, confDict=None, origin=None):
        if confDict is None:
            confDict = self.defaults
        self._keys = []
        self._subConfs = []
        self._recurseDownDicts(confDict)
        self.origin = origin

    def _makeSubConfig(self, confDict):
        """Returns the config instance used to represent a nested mapping."""
        # class to underlying class here is important for inheritance
        return self.__class__(confDict)

    def _recurseDownDicts(self, confDict):
        """Recursively walks the dictionary keys and values and maps keys to
        instance attributes.

        Parameters
        ----------
        confDict : `dict`
            Dictionary whose keys will be mapped to attributes of the class.
        """
        for key, val in confDict.items():
            if isinstance(val, dict):
                self._subConfs.append(key)
                setattr(self, key, self._makeSubConfig(val))
            else:
                self._keys.append(key)
                setattr(self, key, val)

    @classmethod
    def fromYaml(cls, filePath):
        """Create a new Config instance from a YAML (or JSON) file.

        Parameters
        ----------
        filePath : `str`
            A file path to the configuration.
        """
        return cls(yaml_to_dict(filePath), filePath)

    def __repr__(self):
        reprStr = f"{self.__class__.__name__}("

        for key in self._subConfs:
            reprStr += f"{key}={getattr(self, key)}, "

        for key in self._keys:
            reprStr += f"{key}={getattr(self, key)}, "
        reprStr = reprStr[:-2] if self._keys or self._subConfs else reprStr

        return reprStr+")"

    def __eq__(self, other):
        if not isinstance(other, Config):
            return NotImplemented

        if set(self._keys) != set(other._keys) or set(self._subConfs) != set(other._subConfs):
            return False

        for key in self._keys + self._subConfs:
            if getattr(self, key) != getattr(other, key):
                return False

        return True

    def __contains__(self, key):
        return key in self._keys or key in self._subConfs

    def get(self, key, default=None):
        """Returns the value of the key, or the default when it is missing."""
        return getattr(self, key) if key in self else default

    def normalizePath(self, path):
        """Expands shell variables and normalizes the given path.

        Parameters
        ----------
        path : `str`
            Path-like string

        Returns
        -------
        normedPath : `str`
            Normalized path.
        """
        expanded = os.path.expandvars(os.path.expanduser(path))
        return os.path.normpath(expanded)

    def resolveAbsFromOrigin(self, path):
        """Expands shell variables, and resolves the absolute path as if path
        was relative to `origin`. Normalizes the result. If the given path was
        already absolute, returns the path unchanged.

        Parameters
        ----------
        path : `str`
            Path-like string, relative to origin.

        Returns
        -------
        expandedPath : `str`
            Expanded and normalized path.
        """
        if os.path.isabs(path):
            return path

        if self.origin is None:
            raise ValueError("Config has no origin.")

        origin = self.normalizePath(os.path.abspath(self.origin))
        if os.path.isfile(origin):
            origin = os.path.dirname(origin)

        path = self.normalizePath(path)
        resolved = os.path.normpath(os.path.join(origin, path))
        return os.path.abspath(resolved)

    def asDict(self, capitalizeKeys=False):
        """Returns the Conf as a dictionary.

        Parameters
        ----------
        capitalizeKeys : bool
            Capitalize all keys (does not captalize values).

        Returns
        -------
        config : `dict`
            Config object as a Python dictionary.
        """
        if capitalizeKeys:
            res = {key.upper(): getattr(self, key) for key in self._keys}
        else:
            res = {key: getattr(self, key) for key in self._keys}

        for subKey in self._subConfs:
            subDict = getattr(self, subKey).asDict(capitalizeKeys=capitalizeKeys)
            subKey = subKey.upper() if capitalizeKeys else subKey
            res[subKey] = subDict

        return res


class RunConfig(Config):
    """Configuration of a single experiment run.

    Holds the keyword extraction method and its variants, the scoring
    hyperparameters, the evaluation cut-off, input paths and the seed all
    randomness is derived from.

    Parameters
    ----------
    confDict : `dict`, optional
        Values overriding the class defaults.
    origin : `str`, optional
        Path to the config file the values were read from. Relative paths
        in the config are resolved against it.
    """

    defaults = {
        "method": "clst05",
        "boost": False,
        "retag": True,
        "top_n": 100,
        "alpha": 1.0,
        "beta": 0.5,
        "n_max": 100,
        "baseline_k": 70,
        "seed": 0,
        "iterations": 100000,
        "alpha_grid": [0.0, 0.5, 1.0, 2.0, 3.0, 4.0, 5.0],
        "beta_grid": [0.0, 0.25, 0.5, 1.0, 2.0],
        "run_tag": "priorart",
        "corpus": None,
        "parses": None,
        "qrels": None,
        "index": None,
        "output_dir": ".",
    }
    """Default instantiation values."""

    pathKeys = ("corpus", "parses", "qrels", "index", "output_dir")
    """Keys holding file system paths."""

    def __init__(self, confDict=None, origin=None):
        merged = dict(self.defaults)
        if confDict is not None:
            merged.update(confDict)
        super().__init__(merged, origin)

    def _makeSubConfig(self, confDict):
        return Config(confDict)

    @classmethod
    def fromSources(cls, configPath=None, overrides=None, base=None):
        """Create a run config from layered sources.

        Values are taken, in increasing order of precedence, from the class
        defaults, ``base`` (usually the site configuration), the config
        file and finally the explicit overrides (command-line flags).
        Overrides whose value is `None` are ignored.

        Parameters
        ----------
        configPath : `str` or `None`, optional
            YAML or JSON config file.
        overrides : `dict` or `None`, optional
            Explicitly set values.
        base : `dict` or `None`, optional
            Site-wide defaults.

        Returns
        -------
        config : `RunConfig`
            Merged configuration with paths resolved.
        """
        values = {}
        if base:
            values.update(base)

        if configPath is not None:
            fileValues = yaml_to_dict(configPath)
            preset = fileValues.pop("preset", None)
            if preset is not None:
                values.update(cls.presetValues(preset))
            values.update(fileValues)

        overrides = {} if overrides is None else dict(overrides)
        preset = overrides.pop("preset", None)
        if preset is not None:
            values.update(cls.presetValues(preset))
        values.update({k: v for k, v in overrides.items() if v is not None})

        conf = cls(values, origin=configPath)
        if configPath is not None:
            for key in cls.pathKeys:
                val = getattr(conf, key)
                if val is not None and overrides.get(key) is None:
                    setattr(conf, key, conf.resolveAbsFromOrigin(val))

        return conf

    @staticmethod
    def presetValues(preset):
        """Returns the values of a named run variant.

        Raises
        ------
        ConfigError
            When the preset is unknown.
        """
        try:
            return dict(PRESETS[preset])
        except KeyError:
            raise ConfigError(f"Unknown preset {preset!r}. Known presets: {list(PRESETS)}") from None

    @property
    def systemName(self):
        """Display name of the configured system, e.g. ``CLST-06 NO RETAG BOOST``."""
        if self.method == "baseline":
            return "TF-IDF BASELINE"
        name = self.method.upper().replace("CLST", "CLST-")
        if not self.retag:
            name += " NO RETAG"
        if self.boost:
            name += " BOOST"
        return name

    def validate(self, requirePaths=()):
        """Checks the run configuration.

        Parameters
        ----------
        requirePaths : `iterable`, optional
            Names of path keys that must be set and exist.

        Raises
        ------
        ConfigError
            When a value is out of range or a required path is missing.
        """
        if self.method not in METHODS:
            raise ConfigError(f"Unknown method {self.method!r}, expected one of {METHODS}.")

        if not isinstance(self.top_n, int) or self.top_n % 10 != 0 or not 10 <= self.top_n <= 100:
            raise ConfigError(f"top_n must be a multiple of 10 in [10, 100], got {self.top_n}.")

        for key in ("alpha", "beta"):
            if getattr(self, key) < 0:
                raise ConfigError(f"{key} must be non-negative, got {getattr(self, key)}.")

        for key in ("n_max", "baseline_k", "iterations"):
            val = getattr(self, key)
            if not isinstance(val, int) or val < 1:
                raise ConfigError(f"{key} must be a positive integer, got {val}.")

        if not self.alpha_grid or not self.beta_grid:
            raise ConfigError("Grid search requires non-empty alpha_grid and beta_grid.")

        for key in requirePaths:
            path = getattr(self, key)
            if path is None:
                raise ConfigError(f"Missing required path: {key}.")
            if not os.path.exists(path):
                raise ConfigError(f"Path given for {key} does not exist: {path}")

    def scoringParams(self):
        """Returns the `keywords.scoring.ScoringParams` of this run."""
        # local import, config has to stay importable before the apps are
        from keywords.scoring import ScoringParams
        method = "CLST06" if self.method == "clst06" else "CLST05"
        return ScoringParams(alpha=float(self.alpha), beta=float(self.beta),
                             method=method, top_n=self.top_n)
