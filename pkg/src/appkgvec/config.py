#!/usr/bin/env python3
'''
Pipeline Configuration

Pipeline configuration: a flat table of keys read from an INI style
key=value file, overridden by command line flags, then validated.
Precedence is flags > file > defaults.

Copyright (C) 2026 Jason Piszcyk
Email: Jason.Piszcyk@gmail.com

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with this program (See file: COPYING). If not, see
<https://www.gnu.org/licenses/>.
'''
###########################################################################
#
# Imports
#
###########################################################################
from __future__ import annotations

# Shared variables, constants, etc
from appkgvec.base import DEFAULT_LOGGER_NAME, derive_seed, open_text, write_text
from appkgvec.benchmark import ALL_VARIANTS, EvalSettings, Variant, parse_variants
from appkgvec.exceptions import ConfigError
from appkgvec.model import TrainConfig
from appkgvec.synthetic import SyntheticGraphSpec
from appkgvec.typing import EvalTask, ModelType, WalkMode
from appkgvec.validation import closest_match, to_enum
from appkgvec.walks import WalkConfig

# System Modules
import configparser
import os
from appcore.conversion import DataType, set_value
from applogging.logging import get_logger

# Local app modules

# Imports for python variable type hints
from typing import Any, Callable, Mapping, NamedTuple


###########################################################################
#
# Module Specific Items
#
###########################################################################
#
# Types
#
class ConfigKey(NamedTuple):
    ''' A configuration key: its parser, default and help text '''
    name: str
    parse: Callable[[Any], Any]
    default: Any
    help: str


#
# Constants
#
SECTION = "pipeline"
THREADS_ENV = "APPKGVEC_THREADS"
RESOLVED_CONFIG_FILE = "config.resolved.ini"


#
# Global Variables
#


###########################################################################
#
# Value Parsers
#
###########################################################################
def _int(minimum: int) -> Callable[[Any], int]:
    def _parse(value: Any) -> int:
        if isinstance(value, bool): raise ValueError(f"expected an integer, got {value!r}")
        _value = int(value) if isinstance(value, int) else int(str(value).strip())
        if _value < minimum: raise ValueError(f"must be >= {minimum}, got {_value}")
        return _value
    return _parse


def _float(minimum: float) -> Callable[[Any], float]:
    def _parse(value: Any) -> float:
        _value = float(value)
        if not _value >= minimum: raise ValueError(f"must be >= {minimum}, got {_value}")
        return _value
    return _parse


def _bool(value: Any) -> bool:
    if isinstance(value, bool): return value

    _text = str(value).strip().lower()
    if _text not in configparser.ConfigParser.BOOLEAN_STATES:
        raise ValueError(f"expected a boolean, got {value!r}")

    return configparser.ConfigParser.BOOLEAN_STATES[_text]


def _str(value: Any) -> str:
    return str(value).strip()


def _enum(enum_type: type, name: str) -> Callable[[Any], Any]:
    return lambda value: to_enum(str(value).strip(), enum_type, name).value


def _tasks(value: Any) -> str:
    _names = [_n.strip() for _n in str(value).split(",") if _n.strip()]
    if not _names or _names == ["all"]: return "all"

    return ",".join(to_enum(_n, EvalTask, "task").value for _n in _names)


def _variants(value: Any) -> str:
    _variants = parse_variants(str(value))
    if len(_variants) == len(ALL_VARIANTS): return "all"

    return ",".join(_v.name for _v in _variants)


def default_threads() -> int:
    ''' The thread count from the environment (1 if unset or invalid) '''
    _threads = set_value(data=os.environ.get(THREADS_ENV, "1"), type=DataType.INT, default=1)

    return _threads if isinstance(_threads, int) and _threads >= 1 else 1


###########################################################################
#
# Key Table
#
###########################################################################
KEYS: dict[str, ConfigKey] = {_k.name: _k for _k in (
    # Inputs and outputs
    ConfigKey("graph", _str, "", "N-Triples input file(s), comma separated"),
    ConfigKey("corpus", _str, "", "walk corpus file (train input)"),
    ConfigKey("embeddings", _str, "", "embedding file (nearest/analogy/eval input)"),
    ConfigKey("gold_dir", _str, "", "directory of gold files (eval input)"),
    ConfigKey("output_dir", _str, "out", "directory for artifacts"),
    ConfigKey("skip_literals", _bool, True, "drop literal objects"),
    ConfigKey("skip_predicates", _str, "", "predicate IRIs to drop, comma separated"),

    # Walks
    ConfigKey("walks_per_node", _int(1), 500, "walks per entity"),
    ConfigKey("backward_hops", _int(0), 2, "hops before the focus entity"),
    ConfigKey("forward_hops", _int(0), 2, "hops after the focus entity"),
    ConfigKey("walk_mode", _enum(WalkMode, "walk_mode"), WalkMode.CLASSIC.value, "classic, p or e"),
    ConfigKey("dedup", _bool, True, "drop duplicate walks per entity"),

    # Training
    ConfigKey("model", _enum(ModelType, "model"), ModelType.SG.value, "sg, sg_oa, cbow or cbow_oa"),
    ConfigKey("dim", _int(1), 200, "vector width"),
    ConfigKey("window", _int(1), 5, "context window"),
    ConfigKey("epochs", _int(1), 5, "passes over the corpus"),
    ConfigKey("alpha", _float(0.0), 0.0, "initial learning rate (0 = model default)"),
    ConfigKey("negatives", _int(1), 5, "negative samples per example"),
    ConfigKey("exponent", _float(0.0), 0.75, "negative sampling smoothing exponent"),
    ConfigKey("min_count", _int(0), 0, "minimum token count"),
    ConfigKey("sample", _float(0.0), 0.0, "subsampling threshold (0 = off)"),
    ConfigKey("batch_size", _int(1), 64, "examples per SGD step"),

    # Evaluation
    ConfigKey("tasks", _tasks, "all", "evaluation tasks, comma separated"),
    ConfigKey("variants", _variants, "all", "benchmark variants, comma separated"),
    ConfigKey("k", _int(1), 5, "neighbours for kNN tasks and listings"),
    ConfigKey("restarts", _int(1), 10, "k-means restarts"),
    ConfigKey("separation_samples", _int(1), 2000, "random pairs for separation"),

    # Synthetic graph
    ConfigKey("classes", _int(2), 4, "synthetic classes"),
    ConfigKey("entities_per_class", _int(2), 25, "synthetic entities per class"),
    ConfigKey("attributes_per_class", _int(1), 3, "synthetic attributes per class"),
    ConfigKey("partner_groups", _int(1), 6, "synthetic partner groups"),
    ConfigKey("partners_per_group", _int(2), 5, "synthetic partners per group"),
    ConfigKey("hubs_per_group", _int(1), 3, "synthetic hubs per group"),
    ConfigKey("context_per_group", _int(1), 4, "synthetic context entities per group"),
    ConfigKey("analogy_pairs", _int(2), 12, "synthetic capital/country pairs"),
    ConfigKey("document_pairs", _int(2), 40, "synthetic document pairs"),

    # Run
    ConfigKey("seed", _int(0), 0, "global seed"),
    ConfigKey("threads", _int(1), None, f"worker count (default ${THREADS_ENV} or 1)"),
    ConfigKey("deterministic", _bool, False, "single worker, reproducible output"),
)}


###########################################################################
#
# PipelineConfig Class Definition
#
###########################################################################
class PipelineConfig():
    '''
    A resolved configuration.  Values are read by key (config["dim"]) and
    the component settings are built from them with the named sub-seeds of
    the global seed.

    Attributes:
        values (dict) [ReadOnly]: key -> value for every key
        sources (dict) [ReadOnly]: key -> "default", "file" or "flag"
    '''
    #
    # __init__
    #
    def __init__(
            self,
            values: Mapping[str, Any] | None = None,
            sources: Mapping[str, str] | None = None
    ):
        self._values = {
            _k: _key.default if _key.default is None else _key.parse(_key.default)
            for _k, _key in KEYS.items()
        }
        self._sources = {_k: "default" for _k in KEYS}

        if self._values["threads"] is None: self._values["threads"] = default_threads()

        for _name, _value in (values or {}).items():
            self._values[_name] = validate_value(_name, _value)
            self._sources[_name] = (sources or {}).get(_name, "flag")

        if self._values["deterministic"]:
            self._values["threads"] = 1


    ###########################################################################
    #
    # Properties
    #
    ###########################################################################
    @property
    def values(self) -> dict[str, Any]:
        return dict(self._values)

    @property
    def sources(self) -> dict[str, str]:
        return dict(self._sources)

    def __getitem__(self, name: str) -> Any:
        if name not in self._values: raise _unknown_key(name)
        return self._values[name]


    ###########################################################################
    #
    # Component Settings
    #
    ###########################################################################
    def sub_seed(self, name: str) -> int:
        ''' A named sub-seed of the global seed '''
        return derive_seed(self._values["seed"], name)

    def graph_paths(self) -> list[str]:
        return [_p.strip() for _p in self._values["graph"].split(",") if _p.strip()]

    def skip_predicates(self) -> list[str]:
        return [_p.strip() for _p in self._values["skip_predicates"].split(",") if _p.strip()]

    def walk_config(self, mode: WalkMode | None = None) -> WalkConfig:
        return WalkConfig(
            walks_per_node=self._values["walks_per_node"],
            backward_hops=self._values["backward_hops"],
            forward_hops=self._values["forward_hops"],
            mode=mode or WalkMode(self._values["walk_mode"]),
            seed=self.sub_seed("walk"),
            dedup=self._values["dedup"]
        )

    def train_config(self, model: ModelType | None = None) -> TrainConfig:
        return TrainConfig(
            dim=self._values["dim"],
            window=self._values["window"],
            epochs=self._values["epochs"],
            alpha=self._values["alpha"] or None,
            negatives=self._values["negatives"],
            exponent=self._values["exponent"],
            min_count=self._values["min_count"],
            model=model or ModelType(self._values["model"]),
            seed=self._values["seed"],
            sample=self._values["sample"],
            batch_size=self._values["batch_size"],
            threads=self._values["threads"]
        )

    def eval_settings(self) -> EvalSettings:
        _tasks = self._values["tasks"]
        return EvalSettings(
            tasks=tuple(EvalTask) if _tasks == "all" else tuple(_tasks.split(",")),
            k=self._values["k"],
            restarts=self._values["restarts"],
            kmeans_seed=self.sub_seed("kmeans"),
            separation_seed=self.sub_seed("separation"),
            separation_samples=self._values["separation_samples"]
        )

    def variants(self) -> list[Variant]:
        return parse_variants(self._values["variants"])

    def synthetic_spec(self) -> SyntheticGraphSpec:
        return SyntheticGraphSpec(
            classes=self._values["classes"],
            entities_per_class=self._values["entities_per_class"],
            attributes_per_class=self._values["attributes_per_class"],
            partner_groups=self._values["partner_groups"],
            partners_per_group=self._values["partners_per_group"],
            hubs_per_group=self._values["hubs_per_group"],
            context_per_group=self._values["context_per_group"],
            analogy_pairs=self._values["analogy_pairs"],
            document_pairs=self._values["document_pairs"],
            seed=self.sub_seed("synthetic")
        )


    ###########################################################################
    #
    # Output
    #
    ###########################################################################
    def as_dict(self) -> dict[str, Any]:
        ''' Every key with its resolved value (for provenance records) '''
        return dict(self._values)

    def write(self, path: str = "") -> str:
        '''
        Write the resolved configuration as an INI file (readable by
        parse_config)

        Args:
            path (str): The file to write

        Returns:
            str: The path

        Raises:
            OSError:
                When the file cannot be written
        '''
        _parser = configparser.ConfigParser(interpolation=None)
        _parser[SECTION] = {_k: str(_v) for _k, _v in self._values.items()}

        with write_text(path) as _stream:
            _parser.write(_stream)

        return path


###########################################################################
#
# Module Functions
#
###########################################################################
def _unknown_key(name: str) -> ConfigError:
    _hint = closest_match(name, KEYS)
    return ConfigError(
        f"unknown configuration key '{name}'",
        key=name,
        suggestion=_hint[0] if _hint else ""
    )


#
# validate_value
#
def validate_value(name: str = "", value: Any = None) -> Any:
    '''
    Check and convert the value of a key

    Args:
        name (str): The key
        value (Any): The raw value (string from a file or flag, or typed)

    Returns:
        Any: The converted value

    Raises:
        ConfigError:
            When the key is unknown (naming the closest key) or the value is
            invalid (enum keys list the valid choices)
    '''
    if name not in KEYS: raise _unknown_key(name)

    try:
        return KEYS[name].parse(value)

    except (TypeError, ValueError) as _err:
        raise ConfigError(f"invalid value for '{name}': {_err}", key=name) from None


#
# read_config_file
#
def read_config_file(path: str = "") -> dict[str, str]:
    '''
    Read key=value pairs from a file (an optional [pipeline] header)

    Args:
        path (str): The file

    Returns:
        dict: key -> raw string value

    Raises:
        FileNotFoundError:
            When the file does not exist
        ConfigError:
            When the file cannot be parsed, has another section or an
            unknown key
    '''
    with open_text(path) as _stream:
        _text = _stream.read()

    if not _text.lstrip().startswith("["): _text = f"[{SECTION}]\n{_text}"

    _parser = configparser.ConfigParser(interpolation=None)
    try:
        _parser.read_string(_text, source=path)

    except configparser.Error as _err:
        raise ConfigError(f"cannot parse {path}: {_err}") from None

    _extra = [_s for _s in _parser.sections() if _s != SECTION]
    if _extra:
        raise ConfigError(f"{path}: unexpected section [{_extra[0]}]", key=_extra[0])

    _values = dict(_parser[SECTION]) if _parser.has_section(SECTION) else {}
    for _name in _values:
        if _name not in KEYS: raise _unknown_key(_name)

    return _values


#
# parse_config
#
def parse_config(
        path: str = "",
        flags: Mapping[str, Any] | None = None,
        logger_name: str = ""
) -> PipelineConfig:
    '''
    Resolve the configuration from defaults, a file and flags

    Args:
        path (str): Optional config file
        flags (Mapping): Values given on the command line (None values are
            treated as not given)
        logger_name (str): Logger for override notices

    Returns:
        PipelineConfig: The resolved configuration

    Raises:
        FileNotFoundError:
            When the config file does not exist
        ConfigError:
            When a key is unknown or a value invalid
    '''
    _logger = get_logger(name=logger_name or DEFAULT_LOGGER_NAME)

    _file = read_config_file(path) if path else {}
    _flags = {_k: _v for _k, _v in (flags or {}).items() if _v is not None}

    _values: dict[str, Any] = {}
    _sources: dict[str, str] = {}
    for _name, _value in _file.items():
        _values[_name] = _value
        _sources[_name] = "file"

    for _name, _value in _flags.items():
        if _name in _file and validate_value(_name, _file[_name]) != validate_value(_name, _value):
            _logger.info(
                f"'{_name}' from the command line ({_value}) overrides "
                f"the config file ({_file[_name]})"
            )
        _values[_name] = _value
        _sources[_name] = "flag"

    _config = PipelineConfig(values=_values, sources=_sources)
    if _config["deterministic"] and _values.get("threads") not in (None, 1, "1"):
        _logger.info("deterministic mode: threads forced to 1")

    return _config


###########################################################################
#
# In case this is run directly rather than imported...
#
###########################################################################
'''
Handle case of being run directly rather than imported
'''
if __name__ == "__main__":
    pass
