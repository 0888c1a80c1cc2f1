#!/usr/bin/env python3
'''
Benchmark

The variant matrix: every (walk mode, model) pair is walked, trained and
evaluated on every task, giving a tasks x variants report.

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
from appkgvec.base import AppKGVecBaseClass, write_text
from appkgvec.gold import (
    AnalogyQuad,
    DocumentPair,
    GoldLabelSet,
    GoldRanking,
    read_documents,
    read_labels,
    read_pairs,
    read_quads,
    read_rankings,
)
from appkgvec.graph import KnowledgeGraph
from appkgvec.metrics import (
    analogy_accuracy,
    document_similarity,
    entity_relatedness,
    kmeans_cluster_accuracy,
    knn_classify_loo,
    knn_regress_loo,
    pair_separation,
)
from appkgvec.model import TrainConfig
from appkgvec.store import EmbeddingStore
from appkgvec.synthetic import GOLD_FILES, SyntheticDataset
from appkgvec.train import Trainer
from appkgvec.typing import EvalTask, Metric, ModelType, WalkMode
from appkgvec.validation import check_int, to_enum
from appkgvec.walks import WalkConfig, WalkEngine

# System Modules
import os
import tempfile
import time
from appcore.conversion import to_json
from dataclasses import asdict, dataclass, field, replace

# Local app modules

# Imports for python variable type hints
from typing import Any, Callable, Iterable, NamedTuple, Sequence


###########################################################################
#
# Module Specific Items
#
###########################################################################
#
# Types
#
class Variant(NamedTuple):
    ''' One column of the report: a walk mode and a model '''
    walk_mode: WalkMode
    model: ModelType

    @property
    def name(self) -> str:
        return f"{self.walk_mode.value}-{self.model.value}"


class TaskRow(NamedTuple):
    ''' One row of the report '''
    task: EvalTask
    dataset: str
    metric: Metric

    @property
    def key(self) -> str:
        return f"{self.task.value}:{self.dataset}"


class Cell(NamedTuple):
    ''' A metric value, or the error that prevented it '''
    value: float | None = None
    error: str = ""

    @property
    def ok(self) -> bool:
        return self.value is not None


@dataclass
class EvalData():
    ''' The gold data available for evaluation (None / empty = task skipped) '''
    labels: GoldLabelSet | None = None
    targets: GoldLabelSet | None = None
    quads: list[AnalogyQuad] = field(default_factory=list)
    rankings: list[GoldRanking] = field(default_factory=list)
    documents: list[DocumentPair] = field(default_factory=list)
    twins: list[tuple[str, str]] = field(default_factory=list)
    partners: list[tuple[str, str]] = field(default_factory=list)
    population: list[str] | None = None

    @classmethod
    def from_synthetic(cls, dataset: SyntheticDataset) -> EvalData:
        ''' The gold data of a generated dataset '''
        return cls(
            labels=dataset.labels,
            targets=dataset.targets,
            quads=list(dataset.quads),
            rankings=list(dataset.rankings),
            documents=list(dataset.documents),
            twins=list(dataset.structural_twins),
            partners=list(dataset.contextual_partners),
            population=[str(_e) for _e in dataset.graph.entities()]
        )


@dataclass(frozen=True)
class EvalSettings():
    ''' Evaluation parameters '''
    tasks: tuple[EvalTask, ...] = tuple(EvalTask)
    k: int = 5
    restarts: int = 10
    kmeans_seed: int = 0
    separation_seed: int = 0
    separation_samples: int = 2000

    def __post_init__(self):
        object.__setattr__(
            self, "tasks", tuple(to_enum(_t, EvalTask, "task") for _t in self.tasks)
        )
        check_int(self.k, "k", minimum=1)
        check_int(self.restarts, "restarts", minimum=1)
        check_int(self.separation_samples, "separation_samples", minimum=1)


#
# Constants
#
WALK_MODES = (WalkMode.CLASSIC, WalkMode.E, WalkMode.P)
MODELS = (ModelType.SG, ModelType.SG_OA, ModelType.CBOW, ModelType.CBOW_OA)
ALL_VARIANTS = tuple(Variant(_w, _m) for _w in WALK_MODES for _m in MODELS)

ROWS = (
    TaskRow(EvalTask.CLASSIFICATION, "class labels", Metric.ACC),
    TaskRow(EvalTask.CLUSTERING, "class labels", Metric.ACC),
    TaskRow(EvalTask.REGRESSION, "class targets", Metric.RMSE),
    TaskRow(EvalTask.ANALOGY, "capital country entities", Metric.ACC),
    TaskRow(EvalTask.RELATEDNESS, "partner rankings", Metric.KENDALL_TAU),
    TaskRow(EvalTask.DOCUMENTS, "class documents", Metric.HARMONIC_MEAN),
    TaskRow(EvalTask.SEPARATION, "structural twins", Metric.MARGIN),
    TaskRow(EvalTask.SEPARATION, "contextual partners", Metric.MARGIN),
)

FAILED = "FAIL"
VALUE_FORMAT = "{:.4f}"
BEST_MARK = "*"


#
# Global Variables
#


###########################################################################
#
# Variants
#
###########################################################################
#
# parse_variants
#
def parse_variants(value: str | Iterable[str] = "all") -> list[Variant]:
    '''
    Parse variant names ('classic-sg', 'p-cbow_oa', ...)

    Args:
        value (str | Iterable): 'all', a comma separated string or names

    Returns:
        list: The variants in report order

    Raises:
        ValueError:
            When a name is not a valid variant
    '''
    _names = value.split(",") if isinstance(value, str) else list(value)
    _names = [_n.strip() for _n in _names if _n.strip()]
    if not _names or _names == ["all"]: return list(ALL_VARIANTS)

    _known = {_v.name: _v for _v in ALL_VARIANTS}
    _wanted = set()
    for _name in _names:
        if _name not in _known:
            _choices = ",".join(_known)
            raise ValueError(f"variant={_name} is not one of {{{_choices}}}")
        _wanted.add(_name)

    return [_v for _v in ALL_VARIANTS if _v.name in _wanted]


###########################################################################
#
# Evaluation
#
###########################################################################
#
# load_eval_data
#
def load_eval_data(directory: str = "") -> EvalData:
    '''
    Read the gold files present in a directory (as written by 'generate')

    Args:
        directory (str): The directory

    Returns:
        EvalData: The gold data (absent files leave their task empty)

    Raises:
        EvaluationError:
            When a gold file is malformed
    '''
    def _path(name: str) -> str | None:
        _file = os.path.join(directory, GOLD_FILES[name])
        return _file if os.path.exists(_file) else None

    _data = EvalData()
    if _p := _path("labels"): _data.labels = read_labels(_p)
    if _p := _path("targets"): _data.targets = read_labels(_p, numeric=True)
    if _p := _path("quads"): _data.quads = read_quads(_p)
    if _p := _path("rankings"): _data.rankings = read_rankings(_p)
    if _p := _path("documents"): _data.documents = read_documents(_p)
    if _p := _path("twins"): _data.twins = read_pairs(_p)
    if _p := _path("partners"): _data.partners = read_pairs(_p)

    return _data


#
# _row_task
#
def _row_task(
        row: TaskRow,
        store: EmbeddingStore,
        data: EvalData,
        settings: EvalSettings
) -> Callable[[], float] | None:
    ''' The evaluation for a row, None if there is no gold data for it '''
    if row.task == EvalTask.CLASSIFICATION and data.labels:
        return lambda: knn_classify_loo(store, data.labels, k=settings.k).value

    if row.task == EvalTask.CLUSTERING and data.labels:
        return lambda: kmeans_cluster_accuracy(
            store, data.labels, restarts=settings.restarts, seed=settings.kmeans_seed
        ).value

    if row.task == EvalTask.REGRESSION and data.targets:
        return lambda: knn_regress_loo(store, data.targets, k=settings.k).value

    if row.task == EvalTask.ANALOGY and data.quads:
        return lambda: analogy_accuracy(store, data.quads).value

    if row.task == EvalTask.RELATEDNESS and data.rankings:
        return lambda: entity_relatedness(store, data.rankings).value

    if row.task == EvalTask.DOCUMENTS and data.documents:
        return lambda: document_similarity(store, data.documents).value

    if row.task == EvalTask.SEPARATION:
        _pairs = data.twins if row.dataset == "structural twins" else data.partners
        if not _pairs: return None

        return lambda: pair_separation(
            store,
            _pairs,
            seed=settings.separation_seed,
            samples=settings.separation_samples,
            population=data.population
        ).margin

    return None


#
# evaluate
#
def evaluate(
        store: EmbeddingStore | None = None,
        data: EvalData | None = None,
        settings: EvalSettings | None = None
) -> dict[TaskRow, Cell]:
    '''
    Run every selected task that has gold data

    Args:
        store (EmbeddingStore): The embeddings
        data (EvalData): The gold data
        settings (EvalSettings): The task selection and parameters

    Returns:
        dict: row -> Cell, a failing task gives a Cell with the error

    Raises:
        None
    '''
    assert isinstance(store, EmbeddingStore), "a store is required"
    assert isinstance(data, EvalData), "evaluation data is required"
    _settings = EvalSettings() if settings is None else settings

    _cells: dict[TaskRow, Cell] = {}
    for _row in ROWS:
        if _row.task not in _settings.tasks: continue

        _task = _row_task(_row, store, data, _settings)
        if _task is None: continue

        try:
            _cells[_row] = Cell(value=float(_task()))

        except Exception as _err:
            _cells[_row] = Cell(error=f"{type(_err).__name__}: {_err}")

    return _cells


###########################################################################
#
# BenchmarkReport Class Definition
#
###########################################################################
class BenchmarkReport():
    '''
    Tasks x variants matrix of metric values.

    Attributes:
        variants (list) [ReadOnly]: Column names in report order
        rows (list) [ReadOnly]: The task rows with at least one cell
        configs (dict) [ReadOnly]: The exact settings used
        failures (list) [ReadOnly]: (variant, stage, message) of each failure
    '''
    #
    # __init__
    #
    def __init__(
            self,
            variants: Sequence[str] = (),
            configs: dict[str, Any] | None = None
    ):
        self._variants = list(variants)
        self._configs = dict(configs or {})
        self._cells: dict[tuple[TaskRow, str], Cell] = {}
        self._failures: list[tuple[str, str, str]] = []


    ###########################################################################
    #
    # Properties
    #
    ###########################################################################
    @property
    def variants(self) -> list[str]:
        return list(self._variants)

    @property
    def rows(self) -> list[TaskRow]:
        return [_r for _r in ROWS if any((_r, _v) in self._cells for _v in self._variants)]

    @property
    def configs(self) -> dict[str, Any]:
        return dict(self._configs)

    @property
    def failures(self) -> list[tuple[str, str, str]]:
        return list(self._failures)

    @property
    def has_failures(self) -> bool:
        return bool(self._failures)


    ###########################################################################
    #
    # Cells
    #
    ###########################################################################
    def set_cell(self, row: TaskRow, variant: str, cell: Cell):
        self._cells[(row, variant)] = cell
        if not cell.ok: self.add_failure(variant, row.key, cell.error)

    def cell(self, row: TaskRow, variant: str) -> Cell | None:
        return self._cells.get((row, variant))

    def add_failure(self, variant: str, stage: str, message: str):
        self._failures.append((variant, stage, message))


    #
    # best
    #
    def best(self, row: TaskRow) -> list[str]:
        '''
        The variants with the best value of a row (all of them when tied)

        Values are compared as displayed, to 4 decimal places.

        Args:
            row (TaskRow): The row

        Returns:
            list: Variant names (empty if no cell has a value)

        Raises:
            None
        '''
        _values = {
            _v: round(_c.value, 4)
            for _v in self._variants
            if (_c := self.cell(row, _v)) is not None and _c.value is not None
        }
        if not _values: return []

        _pick = max if row.metric.higher_is_better else min
        _target = _pick(_values.values())

        return [_v for _v, _x in _values.items() if _x == _target]


    #
    # range_violations
    #
    def range_violations(self) -> list[str]:
        ''' Cells whose value is outside the valid range of their metric '''
        _bad = []
        for (_row, _variant), _cell in self._cells.items():
            if _cell.value is None: continue

            _low, _high = _row.metric.valid_range
            if not _low - 1e-9 <= _cell.value <= _high + 1e-9:
                _bad.append(f"{_row.key} {_variant} = {_cell.value}")

        return _bad


    ###########################################################################
    #
    # Rendering
    #
    ###########################################################################
    def _header(self) -> list[str]:
        _lines = ["# appkgvec benchmark"]
        for _section, _values in self._configs.items():
            if isinstance(_values, dict):
                _text = ", ".join(f"{_k}={_v}" for _k, _v in _values.items())
            else:
                _text = str(_values)
            _lines.append(f"# {_section}: {_text}")

        return _lines


    def _display(self, row: TaskRow, variant: str, mark: bool) -> str:
        _cell = self.cell(row, variant)
        if _cell is None: return "-"
        if _cell.value is None: return FAILED

        _text = VALUE_FORMAT.format(_cell.value)
        if mark and variant in self.best(row): _text += BEST_MARK

        return _text


    #
    # render_text
    #
    def render_text(self) -> str:
        '''
        Aligned text table, best cell(s) of each row marked with '*'

        Returns:
            str: The report with a '#' header listing the settings
        '''
        _table = [["Task", "Dataset", "Metric"] + self._variants]
        for _row in self.rows:
            _table.append(
                [_row.task.value, _row.dataset, _row.metric.value]
                + [self._display(_row, _v, mark=True) for _v in self._variants]
            )

        _widths = [max(len(_r[_i]) for _r in _table) for _i in range(len(_table[0]))]
        _lines = self._header()
        for _r in _table:
            _lines.append("  ".join(
                _c.ljust(_w) if _i < 3 else _c.rjust(_w)
                for _i, (_c, _w) in enumerate(zip(_r, _widths))
            ).rstrip())

        for _variant, _stage, _message in self._failures:
            _lines.append(f"# failure {_variant} {_stage}: {_message}")

        return "\n".join(_lines) + "\n"


    #
    # render_tsv
    #
    def render_tsv(self) -> str:
        ''' Tab separated table with a final 'best' column '''
        _lines = ["\t".join(["task", "dataset", "metric"] + self._variants + ["best"])]
        for _row in self.rows:
            _lines.append("\t".join(
                [_row.task.value, _row.dataset, _row.metric.value]
                + [self._display(_row, _v, mark=False) for _v in self._variants]
                + [",".join(self.best(_row))]
            ))

        return "\n".join(_lines) + "\n"


    #
    # as_dict / render_json
    #
    def as_dict(self) -> dict[str, Any]:
        return {
            "variants": self._variants,
            "configs": self._configs,
            "rows": [
                {
                    "task": _row.task.value,
                    "dataset": _row.dataset,
                    "metric": _row.metric.value,
                    "values": {
                        _v: (_c.value if _c.ok else FAILED)
                        for _v in self._variants
                        if (_c := self.cell(_row, _v)) is not None
                    },
                    "best": self.best(_row),
                }
                for _row in self.rows
            ],
            "failures": [
                {"variant": _v, "stage": _s, "message": _m}
                for _v, _s, _m in self._failures
            ],
        }

    def render_json(self) -> str:
        return to_json(data=self.as_dict(), skip_invalid=True, container=False)


    #
    # write
    #
    def write(self, directory: str = "", name: str = "benchmark") -> dict[str, str]:
        ''' Write the text, TSV and JSON renderings; returns format -> path '''
        os.makedirs(directory, exist_ok=True)
        _paths = {}
        for _suffix, _render in (
            ("txt", self.render_text),
            ("tsv", self.render_tsv),
            ("json", self.render_json),
        ):
            _paths[_suffix] = os.path.join(directory, f"{name}.{_suffix}")
            with write_text(_paths[_suffix]) as _stream:
                _stream.write(_render())
                if _suffix == "json": _stream.write("\n")

        return _paths


###########################################################################
#
# BenchmarkRunner Class Definition
#
###########################################################################
class BenchmarkRunner(AppKGVecBaseClass):
    '''
    Runs the variant matrix.  Corpora are extracted once per walk mode and
    shared by the models of that mode.  A failing stage is recorded against
    its variant and the remaining variants still run.

    Attributes:
        walk_config (WalkConfig) [ReadOnly]: Mode is set per variant
        train_config (TrainConfig) [ReadOnly]: Model is set per variant
        settings (EvalSettings) [ReadOnly]: Evaluation settings
        walk_threads (int) [ReadOnly]: Worker processes for walk extraction
    '''
    #
    # __init__
    #
    def __init__(
            self,
            *args,
            walk_config: WalkConfig | None = None,
            train_config: TrainConfig | None = None,
            settings: EvalSettings | None = None,
            walk_threads: int = 1,
            work_dir: str = "",
            **kwargs
    ):
        '''
        Initialises the instance.

        Args:
            *args (Undef): Unnamed arguments to be passed to the constructor
                of the inherited process
            walk_config (WalkConfig): Walk settings (defaults if None)
            train_config (TrainConfig): Training settings (defaults if None)
            settings (EvalSettings): Evaluation settings (defaults if None)
            walk_threads (int): Worker processes for walk extraction
            work_dir (str): Where corpora and embeddings are kept.  If empty
                a temporary directory is used and removed afterwards
            **kwargs (Undef): Keyword arguments to be passed to the constructor
                of the inherited process

        Returns:
            None

        Raises:
            None
        '''
        super().__init__(*args, **kwargs)

        # Private Attributes
        self._walk_config = walk_config or WalkConfig()
        self._train_config = train_config or TrainConfig()
        self._settings = settings or EvalSettings()
        self._walk_threads = check_int(walk_threads, "walk_threads", minimum=1)
        self._work_dir = work_dir

        # Attributes


    ###########################################################################
    #
    # Properties
    #
    ###########################################################################
    @property
    def walk_config(self) -> WalkConfig:
        return self._walk_config

    @property
    def train_config(self) -> TrainConfig:
        return self._train_config

    @property
    def settings(self) -> EvalSettings:
        return self._settings

    @property
    def walk_threads(self) -> int:
        return self._walk_threads


    #
    # configs
    #
    def configs(self) -> dict[str, Any]:
        ''' The settings echoed in the report header '''
        def _plain(value: Any) -> Any:
            if isinstance(value, (tuple, list)): return ",".join(str(_plain(_v)) for _v in value)
            return getattr(value, "value", value)

        _walk = {_k: _plain(_v) for _k, _v in asdict(self._walk_config).items() if _k != "mode"}
        _train = {_k: _plain(_v) for _k, _v in asdict(self._train_config).items() if _k != "model"}
        _train["alpha"] = "model default" if self._train_config.alpha is None else self._train_config.alpha

        return {
            "walk": _walk,
            "train": _train,
            "eval": {_k: _plain(_v) for _k, _v in asdict(self._settings).items()},
        }


    ###########################################################################
    #
    # Running
    #
    ###########################################################################
    #
    # run
    #
    def run(
            self,
            graph: KnowledgeGraph | None = None,
            data: EvalData | None = None,
            variants: Sequence[Variant] | None = None
    ) -> BenchmarkReport:
        '''
        Walk, train and evaluate every variant

        Args:
            graph (KnowledgeGraph): The graph
            data (EvalData): The gold data
            variants (Sequence): The variants (all 12 if None)

        Returns:
            BenchmarkReport: The report (failures recorded, never raised)

        Raises:
            AssertionError:
                When graph or data are not supplied
        '''
        assert isinstance(graph, KnowledgeGraph), "a graph is required"
        assert isinstance(data, EvalData), "evaluation data is required"

        _variants = list(ALL_VARIANTS if variants is None else variants)
        _report = BenchmarkReport(
            variants=[_v.name for _v in _variants],
            configs=self.configs()
        )

        if self._work_dir:
            os.makedirs(self._work_dir, exist_ok=True)
            self._run_all(graph, data, _variants, _report, self._work_dir)
        else:
            with tempfile.TemporaryDirectory(prefix="appkgvec-") as _tmp:
                self._run_all(graph, data, _variants, _report, _tmp)

        return _report


    #
    # _run_all
    #
    def _run_all(
            self,
            graph: KnowledgeGraph,
            data: EvalData,
            variants: list[Variant],
            report: BenchmarkReport,
            work_dir: str
    ):
        _corpora: dict[WalkMode, str] = {}
        _walk_errors: dict[WalkMode, str] = {}

        for _variant in variants:
            _mode = _variant.walk_mode

            if _mode not in _corpora and _mode not in _walk_errors:
                try:
                    _corpora[_mode] = self._extract(graph, _mode, work_dir)

                except Exception as _err:
                    self._logger.error(f"{_mode.value} walks failed: {_err}")
                    _walk_errors[_mode] = f"{type(_err).__name__}: {_err}"

            if _mode in _walk_errors:
                report.add_failure(_variant.name, "walk", _walk_errors[_mode])
                continue

            _started = time.monotonic()
            try:
                _store = Trainer(
                    config=replace(self._train_config, model=_variant.model),
                    **self._logger_kwargs()
                ).train(_corpora[_mode])
                _store.save(os.path.join(work_dir, f"embeddings-{_variant.name}.txt"))

            except Exception as _err:
                self._logger.error(f"{_variant.name}: training failed: {_err}")
                report.add_failure(_variant.name, "train", f"{type(_err).__name__}: {_err}")
                continue

            self._logger.info(
                f"{_variant.name}: trained in {time.monotonic() - _started:.1f}s"
            )

            for _row, _cell in evaluate(_store, data, self._settings).items():
                if not _cell.ok:
                    self._logger.warning(f"{_variant.name}: {_row.key} failed: {_cell.error}")
                report.set_cell(_row, _variant.name, _cell)


    #
    # _extract
    #
    def _extract(self, graph: KnowledgeGraph, mode: WalkMode, work_dir: str) -> str:
        ''' Write the corpus of a walk mode and return its path '''
        _path = os.path.join(work_dir, f"corpus-{mode.value}.txt")
        _started = time.monotonic()

        with write_text(_path) as _stream:
            WalkEngine(
                threads=self._walk_threads,
                **self._logger_kwargs()
            ).extract_corpus(
                graph=graph,
                config=replace(self._walk_config, mode=mode),
                sink=_stream
            )

        self._logger.info(f"{mode.value} corpus in {time.monotonic() - _started:.1f}s")

        return _path


#
# run_benchmark
#
def run_benchmark(
        graph: KnowledgeGraph | None = None,
        variants: Sequence[Variant] | None = None,
        data: EvalData | None = None,
        walk_config: WalkConfig | None = None,
        train_config: TrainConfig | None = None,
        settings: EvalSettings | None = None,
        **kwargs
) -> BenchmarkReport:
    ''' Run the variant matrix (see BenchmarkRunner.run) '''
    return BenchmarkRunner(
        walk_config=walk_config,
        train_config=train_config,
        settings=settings,
        **kwargs
    ).run(graph=graph, data=data, variants=variants)


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
