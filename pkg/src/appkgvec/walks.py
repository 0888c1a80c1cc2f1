#!/usr/bin/env python3
'''
Walk Engine

Centered random walks over a knowledge graph, their predicate-only
(p-walk) and entity-only (e-walk) projections, and corpus extraction.

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
from appkgvec.base import AppKGVecBaseClass, open_text
from appkgvec.exceptions import CorpusWriteError
from appkgvec.graph import KnowledgeGraph
from appkgvec.typing import WalkMode
from appkgvec.validation import check_int, to_enum

# System Modules
import numpy as np
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

# Local app modules

# Imports for python variable type hints
from typing import IO, Iterable, Iterator


###########################################################################
#
# Module Specific Items
#
###########################################################################
#
# Types
#
@dataclass(frozen=True)
class WalkConfig():
    '''
    Walk extraction settings.  The defaults are 500 walks per node with
    4 hops, split evenly either side of the focus entity.
    '''
    walks_per_node: int = 500
    backward_hops: int = 2
    forward_hops: int = 2
    mode: WalkMode = WalkMode.CLASSIC
    seed: int = 0
    dedup: bool = True

    def __post_init__(self):
        check_int(self.walks_per_node, "walks_per_node", minimum=1)
        check_int(self.backward_hops, "backward_hops", minimum=0)
        check_int(self.forward_hops, "forward_hops", minimum=0)
        check_int(self.seed, "seed", minimum=0)
        if self.backward_hops + self.forward_hops < 1:
            raise ValueError("backward_hops + forward_hops must be >= 1")

        object.__setattr__(self, "mode", to_enum(self.mode, WalkMode, "walk_mode"))


@dataclass(frozen=True)
class Walk():
    '''
    A token sequence with the position of its focus entity.

    For a classic walk the token at an even offset from the focus is an
    entity handle and at an odd offset a predicate handle.  A p-walk holds
    only the focus entity among predicates; an e-walk only entities.
    '''
    tokens: tuple[int, ...]
    focus_index: int
    kind: WalkMode = WalkMode.CLASSIC

    def __len__(self) -> int:
        return len(self.tokens)

    @property
    def focus(self) -> int:
        ''' The handle of the focus entity '''
        return self.tokens[self.focus_index]

    def is_entity(self, index: int = 0) -> bool:
        ''' True if the token at index is an entity handle '''
        if self.kind == WalkMode.E: return True
        if self.kind == WalkMode.P: return index == self.focus_index

        return (index - self.focus_index) % 2 == 0

    def lexical(self, graph: KnowledgeGraph) -> list[str]:
        ''' The tokens as lexical forms '''
        return [
            graph.entity_lexical(_t) if self.is_entity(_i)
            else graph.predicate_lexical(_t)
            for _i, _t in enumerate(self.tokens)
        ]

    def render(self, graph: KnowledgeGraph) -> str:
        ''' The walk as a corpus line (without the line ending) '''
        return " ".join(self.lexical(graph))


@dataclass
class CorpusStats():
    ''' Counters from a corpus extraction '''
    nodes_processed: int = 0
    walks_emitted: int = 0
    duplicates_dropped: int = 0

    def as_dict(self) -> dict[str, int]:
        return {
            "nodes_processed": self.nodes_processed,
            "walks_emitted": self.walks_emitted,
            "duplicates_dropped": self.duplicates_dropped,
        }


#
# Constants
#
WORKER_CHUNK = 64


#
# Global Variables
#
# Set in each extraction worker process by _init_worker
_worker_graph: KnowledgeGraph | None = None
_worker_config: WalkConfig | None = None


###########################################################################
#
# Walk Generation
#
###########################################################################
#
# generate_centered_walk
#
def generate_centered_walk(
        graph: KnowledgeGraph | None = None,
        focus: object = 0,
        config: WalkConfig | None = None,
        rng: np.random.Generator | None = None
) -> Walk:
    '''
    Generate a classic walk centred on a focus entity

    Forward hops follow out edges from the current tail, backward hops follow
    in edges from the current head, each choosing uniformly.  A side with no
    edge available stops early, so the walk may be shorter than nominal.

    Args:
        graph (KnowledgeGraph): The graph
        focus (Iri | str | int): The focus entity
        config (WalkConfig): Supplies forward_hops and backward_hops
        rng (np.random.Generator): The random source

    Returns:
        Walk: A classic walk

    Raises:
        AssertionError:
            When graph, config or rng are not supplied
        KeyError:
            When the focus is not in the graph
    '''
    assert isinstance(graph, KnowledgeGraph), "a graph is required"
    assert isinstance(config, WalkConfig), "a walk config is required"
    assert isinstance(rng, np.random.Generator), "a random generator is required"

    _focus = graph.entity_handle(focus)
    _draws = rng.random(config.forward_hops + config.backward_hops)

    _tail = [_focus]
    _current = _focus
    for _hop in range(config.forward_hops):
        _edges = graph.out_handles(_current)
        if not _edges: break

        _p, _o = _edges[int(_draws[_hop] * len(_edges))]
        _tail.append(_p)
        _tail.append(_o)
        _current = _o

    # Built outwards from the focus, so reversed at the end
    _head: list[int] = []
    _current = _focus
    for _hop in range(config.backward_hops):
        _edges = graph.in_handles(_current)
        if not _edges: break

        _s, _p = _edges[int(_draws[config.forward_hops + _hop] * len(_edges))]
        _head.append(_p)
        _head.append(_s)
        _current = _s

    _head.reverse()

    return Walk(
        tokens=tuple(_head + _tail),
        focus_index=len(_head),
        kind=WalkMode.CLASSIC
    )


#
# derive_p_walk
#
def derive_p_walk(walk: Walk | None = None) -> Walk:
    '''
    Keep the predicates of a classic walk plus its focus entity

    Args:
        walk (Walk): A classic walk

    Returns:
        Walk: The p-walk

    Raises:
        AssertionError:
            When the walk is not a classic walk
    '''
    if not isinstance(walk, Walk) or walk.kind != WalkMode.CLASSIC:
        raise AssertionError("p-walks can only be derived from classic walks")

    _tokens = tuple(
        _t for _i, _t in enumerate(walk.tokens)
        if _i == walk.focus_index or (_i - walk.focus_index) % 2 != 0
    )

    # Half of the tokens before an even focus position are predicates
    return Walk(tokens=_tokens, focus_index=walk.focus_index // 2, kind=WalkMode.P)


#
# derive_e_walk
#
def derive_e_walk(walk: Walk | None = None) -> Walk:
    '''
    Keep only the entities of a classic walk

    Args:
        walk (Walk): A classic walk

    Returns:
        Walk: The e-walk

    Raises:
        AssertionError:
            When the walk is not a classic walk
    '''
    if not isinstance(walk, Walk) or walk.kind != WalkMode.CLASSIC:
        raise AssertionError("e-walks can only be derived from classic walks")

    _tokens = tuple(
        _t for _i, _t in enumerate(walk.tokens)
        if (_i - walk.focus_index) % 2 == 0
    )

    return Walk(tokens=_tokens, focus_index=walk.focus_index // 2, kind=WalkMode.E)


#
# project_walk
#
def project_walk(walk: Walk | None = None, mode: WalkMode = WalkMode.CLASSIC) -> Walk:
    ''' Apply the projection for a walk mode (classic is the identity) '''
    if mode == WalkMode.P: return derive_p_walk(walk)
    if mode == WalkMode.E: return derive_e_walk(walk)

    assert isinstance(walk, Walk), "a walk is required"
    return walk


#
# entity_walks
#
def entity_walks(
        graph: KnowledgeGraph,
        handle: int,
        config: WalkConfig
) -> tuple[list[str], int]:
    '''
    All corpus lines for one focus entity

    The random source is seeded from (seed, entity handle) so the result
    does not depend on which worker handles the entity.

    Args:
        graph (KnowledgeGraph): The graph
        handle (int): The focus entity handle
        config (WalkConfig): The walk settings

    Returns:
        tuple: (lines, duplicates dropped)

    Raises:
        None
    '''
    _rng = np.random.default_rng([config.seed, handle])
    _seen: set[tuple[int, ...]] = set()
    _lines: list[str] = []
    _dropped = 0

    for _ in range(config.walks_per_node):
        _walk = project_walk(
            generate_centered_walk(graph, handle, config, _rng),
            config.mode
        )

        if config.dedup:
            if _walk.tokens in _seen:
                _dropped += 1
                continue

            _seen.add(_walk.tokens)

        _lines.append(_walk.render(graph))

    return _lines, _dropped


###########################################################################
#
# Worker Processes
#
###########################################################################
def _init_worker(graph: KnowledgeGraph, config: WalkConfig):
    global _worker_graph, _worker_config
    _worker_graph = graph
    _worker_config = config


def _extract_chunk(handles: range) -> list[tuple[list[str], int]]:
    assert _worker_graph is not None and _worker_config is not None
    return [entity_walks(_worker_graph, _h, _worker_config) for _h in handles]


###########################################################################
#
# WalkEngine Class Definition
#
###########################################################################
class WalkEngine(AppKGVecBaseClass):
    '''
    Writes a walk corpus for every entity of a graph.

    Work is split over focus entities.  Results are merged in entity handle
    order so the corpus is the same for any number of workers.

    Attributes:
        threads (int) [ReadOnly]: Number of worker processes (1 = in process)
    '''
    #
    # __init__
    #
    def __init__(
            self,
            *args,
            threads: int = 1,
            **kwargs
    ):
        '''
        Initialises the instance.

        Args:
            *args (Undef): Unnamed arguments to be passed to the constructor
                of the inherited process
            threads (int): Number of worker processes
            **kwargs (Undef): Keyword arguments to be passed to the constructor
                of the inherited process

        Returns:
            None

        Raises:
            ValueError:
                When threads is not a positive integer
        '''
        check_int(threads, "threads", minimum=1)

        super().__init__(*args, **kwargs)

        # Private Attributes
        self._threads = threads

        # Attributes


    ###########################################################################
    #
    # Properties
    #
    ###########################################################################
    @property
    def threads(self) -> int:
        ''' The number of worker processes '''
        return self._threads


    ###########################################################################
    #
    # Extraction
    #
    ###########################################################################
    #
    # _results
    #
    def _results(
            self,
            graph: KnowledgeGraph,
            config: WalkConfig
    ) -> Iterator[tuple[list[str], int]]:
        ''' Per-entity results in handle order '''
        _count = graph.num_entities

        if self._threads == 1 or _count <= WORKER_CHUNK:
            for _handle in range(_count):
                yield entity_walks(graph, _handle, config)
            return

        _chunks = [
            range(_start, min(_start + WORKER_CHUNK, _count))
            for _start in range(0, _count, WORKER_CHUNK)
        ]

        with ProcessPoolExecutor(
            max_workers=self._threads,
            initializer=_init_worker,
            initargs=(graph, config)
        ) as _executor:
            # map returns in submission order
            for _chunk_results in _executor.map(_extract_chunk, _chunks):
                yield from _chunk_results


    #
    # extract_corpus
    #
    def extract_corpus(
            self,
            graph: KnowledgeGraph | None = None,
            config: WalkConfig | None = None,
            sink: IO[str] | None = None
    ) -> CorpusStats:
        '''
        Generate walks for every entity and write them to the sink

        One walk per line, tokens separated by single spaces.  Lines for an
        entity are written together, entities in handle order.

        Args:
            graph (KnowledgeGraph): The graph
            config (WalkConfig): The walk settings
            sink (IO): Text stream to write the corpus to

        Returns:
            CorpusStats: Counters for the run (all zero for an empty graph)

        Raises:
            AssertionError:
                When graph, config or sink are not supplied
            CorpusWriteError:
                When writing to the sink fails
        '''
        assert isinstance(graph, KnowledgeGraph), "a graph is required"
        assert isinstance(config, WalkConfig), "a walk config is required"
        assert sink is not None, "a sink is required"

        _stats = CorpusStats()
        if graph.num_entities == 0:
            self._logger.warning("Empty graph - no walks generated")
            return _stats

        self._logger.info(
            f"Extracting {config.mode.value} walks: {graph.num_entities} "
            f"entities x {config.walks_per_node} walks, "
            f"{config.backward_hops} back / {config.forward_hops} forward hops"
        )

        for _lines, _dropped in self._results(graph, config):
            try:
                for _line in _lines:
                    sink.write(_line)
                    sink.write("\n")
                    _stats.walks_emitted += 1

            except OSError as _err:
                raise CorpusWriteError(
                    f"failed writing walk corpus: {_err}",
                    walks_written=_stats.walks_emitted
                ) from _err

            _stats.nodes_processed += 1
            _stats.duplicates_dropped += _dropped

            if _stats.nodes_processed % 10000 == 0:
                self._logger.debug(f"Nodes processed: {_stats.nodes_processed}")

        self._logger.info(f"Corpus extracted: {_stats.as_dict()}")

        return _stats


###########################################################################
#
# Module Functions
#
###########################################################################
#
# extract_corpus
#
def extract_corpus(
        graph: KnowledgeGraph | None = None,
        config: WalkConfig | None = None,
        sink: IO[str] | None = None,
        threads: int = 1
) -> CorpusStats:
    ''' Extract a walk corpus (see WalkEngine.extract_corpus) '''
    return WalkEngine(threads=threads).extract_corpus(
        graph=graph,
        config=config,
        sink=sink
    )


#
# read_corpus
#
def read_corpus(source: str | Iterable[str] = "") -> Iterator[list[str]]:
    '''
    Iterate the walks of a corpus as token lists

    Args:
        source (str | Iterable): A corpus file path (gzip if .gz) or an
            iterable of lines

    Yields:
        list: The tokens of each non-empty line

    Raises:
        FileNotFoundError:
            When a path does not exist
    '''
    if isinstance(source, str):
        with open_text(source) as _stream:
            for _line in _stream:
                _tokens = _line.split()
                if _tokens: yield _tokens
        return

    for _line in source:
        _tokens = _line.split()
        if _tokens: yield _tokens


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
