#!/usr/bin/env python3
'''
Command Line

Command line front end.

  appkgvec generate | walk | train | nearest TOKEN | analogy A A_STAR B
           | eval | benchmark   [--config FILE] [--<key> VALUE ...]

Every configuration key is also a flag.  Failures exit nonzero with a JSON
error object on stderr.

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
from appkgvec import __version__
from appkgvec.base import DEFAULT_LOGGER_NAME, write_provenance, write_text
from appkgvec.benchmark import (
    BenchmarkReport,
    BenchmarkRunner,
    EvalData,
    evaluate,
    load_eval_data,
)
from appkgvec.config import KEYS, RESOLVED_CONFIG_FILE, PipelineConfig, parse_config
from appkgvec.exceptions import ConfigError
from appkgvec.graph import KnowledgeGraph, load_graph
from appkgvec.store import EmbeddingStore, format_neighbours
from appkgvec.synthetic import GOLD_FILES, generate_synthetic_kg
from appkgvec.train import Trainer
from appkgvec.walks import WalkEngine

# System Modules
import argparse
import os
import sys
from appcore.conversion import to_json
from applogging.logging import init_console_logger

# Local app modules

# Imports for python variable type hints
from typing import Any, Callable, Sequence


###########################################################################
#
# Module Specific Items
#
###########################################################################
#
# Types
#


#
# Constants
#
PROG = "appkgvec"
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INTERRUPTED = 130


#
# Global Variables
#


###########################################################################
#
# Paths
#
###########################################################################
def _output(config: PipelineConfig, name: str) -> str:
    os.makedirs(config["output_dir"], exist_ok=True)
    return os.path.join(config["output_dir"], name)


def _require_file(path: str, key: str) -> str:
    if not path:
        raise ConfigError(f"'{key}' is required for this command", key=key)

    if not os.path.isfile(path):
        raise FileNotFoundError(f"{key} file not found: {path}")

    return path


def _corpus_path(config: PipelineConfig) -> str:
    return config["corpus"] or _output(config, f"corpus-{config['walk_mode']}.txt")


def _embeddings_path(config: PipelineConfig) -> str:
    return config["embeddings"] or _output(
        config, f"embeddings-{config['walk_mode']}-{config['model']}.txt"
    )


def _load_graph(config: PipelineConfig) -> KnowledgeGraph:
    _paths = config.graph_paths()
    if not _paths:
        raise ConfigError("'graph' is required for this command", key="graph")

    for _path in _paths: _require_file(_path, "graph")

    return load_graph(
        paths=_paths,
        skip_literals=config["skip_literals"],
        skip_predicates=config.skip_predicates(),
        logger_name=DEFAULT_LOGGER_NAME
    )


def _finish(config: PipelineConfig, artifact: str, inputs: list[str], extra: dict | None = None):
    ''' Provenance for an artifact and the resolved configuration '''
    write_provenance(
        artifact=artifact,
        config=config.as_dict(),
        seed=config["seed"],
        inputs=inputs,
        extra=extra
    )
    config.write(_output(config, RESOLVED_CONFIG_FILE))


###########################################################################
#
# Commands
#
###########################################################################
#
# cmd_generate
#
def cmd_generate(config: PipelineConfig, args: argparse.Namespace) -> int:
    ''' Write the synthetic graph and its gold files '''
    _dataset = generate_synthetic_kg(config.synthetic_spec())
    _paths = _dataset.write(config["output_dir"])

    _finish(config, _paths["graph"], [], {"statistics": _dataset.graph.statistics()})
    print(to_json(data=_paths, skip_invalid=True, container=False))

    return EXIT_OK


#
# cmd_walk
#
def cmd_walk(config: PipelineConfig, args: argparse.Namespace) -> int:
    ''' Write a walk corpus '''
    _graph = _load_graph(config)
    _path = _corpus_path(config)

    with write_text(_path) as _stream:
        _stats = WalkEngine(
            threads=config["threads"],
            logger_name=DEFAULT_LOGGER_NAME
        ).extract_corpus(graph=_graph, config=config.walk_config(), sink=_stream)

    _finish(config, _path, config.graph_paths(), {"statistics": _stats.as_dict()})
    print(to_json(data={"corpus": _path, **_stats.as_dict()}, skip_invalid=True, container=False))

    return EXIT_OK


#
# cmd_train
#
def cmd_train(config: PipelineConfig, args: argparse.Namespace) -> int:
    ''' Train embeddings from a corpus '''
    _corpus = _require_file(_corpus_path(config), "corpus")
    _path = _embeddings_path(config)

    _trainer = Trainer(config=config.train_config(), logger_name=DEFAULT_LOGGER_NAME)
    if config["threads"] > 1:
        print(
            f"{PROG}: training with {config['threads']} threads is not reproducible",
            file=sys.stderr
        )

    _store = _trainer.train(_corpus)
    _store.save(_path)

    _finish(config, _path, [_corpus], {"loss_history": _trainer.loss_history})
    print(to_json(
        data={"embeddings": _path, "tokens": len(_store), "dim": _store.dim},
        skip_invalid=True,
        container=False
    ))

    return EXIT_OK


#
# cmd_nearest
#
def cmd_nearest(config: PipelineConfig, args: argparse.Namespace) -> int:
    ''' Print the nearest neighbours of a token '''
    _store = EmbeddingStore.load(
        _require_file(_embeddings_path(config), "embeddings"),
        logger_name=DEFAULT_LOGGER_NAME
    )
    sys.stdout.write(format_neighbours(args.token, _store.nearest(args.token, k=config["k"])))

    return EXIT_OK


#
# cmd_analogy
#
def cmd_analogy(config: PipelineConfig, args: argparse.Namespace) -> int:
    ''' Print the best answers to an analogy '''
    _store = EmbeddingStore.load(
        _require_file(_embeddings_path(config), "embeddings"),
        logger_name=DEFAULT_LOGGER_NAME
    )
    _answers = _store.analogy(args.a, args.a_star, args.b, k=config["k"])
    sys.stdout.write(format_neighbours(f"{args.a} : {args.a_star} :: {args.b} : ?", _answers))

    return EXIT_OK


#
# cmd_eval
#
def cmd_eval(config: PipelineConfig, args: argparse.Namespace) -> int:
    ''' Evaluate an embedding file against gold files '''
    _embeddings = _require_file(_embeddings_path(config), "embeddings")
    _store = EmbeddingStore.load(_embeddings, logger_name=DEFAULT_LOGGER_NAME)
    _gold_dir = config["gold_dir"] or config["output_dir"]

    _name = os.path.basename(_embeddings)
    _settings = {_k: config[_k] for _k in ("tasks", "k", "restarts", "separation_samples")}
    _report = BenchmarkReport(variants=[_name], configs={"eval": _settings})
    for _row, _cell in evaluate(_store, load_eval_data(_gold_dir), config.eval_settings()).items():
        _report.set_cell(_row, _name, _cell)

    _paths = _report.write(config["output_dir"], name="eval")
    _finish(
        config,
        _paths["json"],
        [_embeddings] + sorted(
            os.path.join(_gold_dir, _f) for _f in GOLD_FILES.values()
            if os.path.isfile(os.path.join(_gold_dir, _f))
        )
    )
    sys.stdout.write(_report.render_text())

    return EXIT_FAILED if _report.has_failures else EXIT_OK


#
# cmd_benchmark
#
def cmd_benchmark(config: PipelineConfig, args: argparse.Namespace) -> int:
    '''
    Run the variant matrix.  Without a graph the synthetic graph is
    generated; without a gold directory its gold data is used.
    '''
    _inputs = config.graph_paths()
    if _inputs:
        _graph = _load_graph(config)
        _data = load_eval_data(config["gold_dir"]) if config["gold_dir"] else EvalData()
        _data.population = [str(_e) for _e in _graph.entities()]
    else:
        _dataset = generate_synthetic_kg(config.synthetic_spec())
        _graph = _dataset.graph
        _data = load_eval_data(config["gold_dir"]) if config["gold_dir"] \
            else EvalData.from_synthetic(_dataset)

    if config["threads"] > 1:
        print(
            f"{PROG}: training with {config['threads']} threads is not reproducible",
            file=sys.stderr
        )

    _report = BenchmarkRunner(
        walk_config=config.walk_config(),
        train_config=config.train_config(),
        settings=config.eval_settings(),
        walk_threads=config["threads"],
        work_dir=_output(config, "variants"),
        logger_name=DEFAULT_LOGGER_NAME
    ).run(graph=_graph, data=_data, variants=config.variants())

    _paths = _report.write(config["output_dir"], name="benchmark")
    _finish(config, _paths["json"], _inputs)
    sys.stdout.write(_report.render_text())

    return EXIT_FAILED if _report.has_failures else EXIT_OK


COMMANDS: dict[str, tuple[Callable[[PipelineConfig, argparse.Namespace], int], str]] = {
    "generate": (cmd_generate, "write the synthetic graph and gold files"),
    "walk": (cmd_walk, "extract a walk corpus from a graph"),
    "train": (cmd_train, "train embeddings from a walk corpus"),
    "nearest": (cmd_nearest, "list the nearest neighbours of a token"),
    "analogy": (cmd_analogy, "solve a : a_star :: b : ?"),
    "eval": (cmd_eval, "evaluate embeddings against gold files"),
    "benchmark": (cmd_benchmark, "walk, train and evaluate the variant matrix"),
}


###########################################################################
#
# Argument Parsing
#
###########################################################################
#
# build_parser
#
def build_parser() -> argparse.ArgumentParser:
    ''' The argument parser: one sub-command per command, one flag per key '''
    _common = argparse.ArgumentParser(add_help=False)
    _common.add_argument("--config", default="", help="key=value configuration file")
    _common.add_argument("--verbose", action="store_true", help="debug logging")

    _keys = _common.add_argument_group("configuration")
    for _key in KEYS.values():
        if isinstance(_key.default, bool):
            _keys.add_argument(
                f"--{_key.name.replace('_', '-')}",
                dest=_key.name,
                action=argparse.BooleanOptionalAction,
                default=None,
                help=_key.help
            )
        else:
            _keys.add_argument(
                f"--{_key.name.replace('_', '-')}",
                dest=_key.name,
                default=None,
                metavar=_key.name.upper(),
                help=f"{_key.help} (default: {_key.default})"
            )

    _parser = argparse.ArgumentParser(prog=PROG, description="RDF graph embedding toolkit")
    _parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    _commands = _parser.add_subparsers(dest="command", required=True)
    for _name, (_, _help) in COMMANDS.items():
        _sub = _commands.add_parser(_name, parents=[_common], help=_help)
        if _name == "nearest":
            _sub.add_argument("token")
        elif _name == "analogy":
            _sub.add_argument("a")
            _sub.add_argument("a_star")
            _sub.add_argument("b")

    return _parser


#
# _error
#
def _error(err: BaseException, stage: str) -> str:
    _message = err.args[0] if isinstance(err, KeyError) and err.args else str(err)
    return to_json(
        data={"error": type(err).__name__, "message": str(_message), "stage": stage},
        skip_invalid=True,
        container=False
    )


#
# main
#
def main(argv: Sequence[str] | None = None) -> int:
    '''
    Run a command

    Args:
        argv (Sequence): Arguments (sys.argv[1:] if None)

    Returns:
        int: 0 on success, 1 if any stage failed, 130 if interrupted

    Raises:
        SystemExit:
            For usage errors, --help and --version (from argparse)
    '''
    _args = build_parser().parse_args(argv)

    _logger = init_console_logger(name=DEFAULT_LOGGER_NAME)
    _logger.setLevel(level="DEBUG" if _args.verbose else "INFO")

    _flags: dict[str, Any] = {_k: getattr(_args, _k, None) for _k in KEYS}

    try:
        _config = parse_config(path=_args.config, flags=_flags, logger_name=DEFAULT_LOGGER_NAME)
        _command = COMMANDS[_args.command][0]
        return _command(_config, _args)

    except KeyboardInterrupt:
        print(_error(KeyboardInterrupt("interrupted"), _args.command), file=sys.stderr)
        return EXIT_INTERRUPTED

    except Exception as _err:
        _logger.debug("command failed", exc_info=True)
        print(_error(_err, _args.command), file=sys.stderr)
        return EXIT_FAILED


###########################################################################
#
# In case this is run directly rather than imported...
#
###########################################################################
'''
Handle case of being run directly rather than imported
'''
if __name__ == "__main__":
    sys.exit(main())
