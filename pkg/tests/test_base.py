#!/usr/bin/env python3
'''
PyTest - Base class for test functions

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
from tests.constants import *

# System Modules
import numpy as np

# Local app modules
from appkgvec.graph import KnowledgeGraph
from appkgvec.model import (
    ContextExample,
    EmbeddingMatrices,
    TrainingPair,
    pair_loss_and_gradients
)
from appkgvec.typing import Metric, WalkMode
from appkgvec.walks import Walk, WalkConfig

# Imports for python variable type hints
from typing import Sequence


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

#
# Global Variables
#


###########################################################################
#
# Base Class for tests
#
###########################################################################
#
# Base Class
#
class TestBase():
    '''
    Base Test Class

    Attributes:
        None
    '''
    #
    # check a classic walk follows the graph
    #
    def _assert_classic_walk(
            self,
            graph: KnowledgeGraph | None,
            walk: Walk | None,
            config: WalkConfig | None
    ):
        '''
        Assert that a classic walk alternates entity / predicate, that every
        step is an edge of the graph and that the walk is within its hops

        Args:
            graph (KnowledgeGraph): The graph walked
            walk (Walk): The walk
            config (WalkConfig): The settings the walk was made with

        Returns:
            None

        Raises:
            AssertionError:
                when test fails
        '''
        assert isinstance(graph, KnowledgeGraph)
        assert isinstance(walk, Walk)
        assert isinstance(config, WalkConfig)

        assert walk.kind == WalkMode.CLASSIC
        assert len(walk) % 2 == 1
        assert walk.focus_index % 2 == 0

        # Length bounds either side of the focus
        assert walk.focus_index <= 2 * config.backward_hops
        assert len(walk) - 1 - walk.focus_index <= 2 * config.forward_hops

        # Every entity-predicate-entity step is an edge
        _edges = set(graph.edge_handles())
        for _i in range(0, len(walk) - 1, 2):
            assert walk.is_entity(_i)
            assert not walk.is_entity(_i + 1)
            assert (walk.tokens[_i], walk.tokens[_i + 1], walk.tokens[_i + 2]) in _edges


    #
    # check one sequence is a subsequence of another
    #
    def _assert_subsequence(self, sub: Sequence = (), seq: Sequence = ()):
        ''' Assert the items of sub appear in seq in the same order '''
        _it = iter(seq)
        assert all(any(_x == _y for _y in _it) for _x in sub)


    #
    # check the projections of a classic walk
    #
    def _assert_projections(self, classic: Walk | None, p_walk: Walk | None, e_walk: Walk | None):
        '''
        Assert the p-walk keeps exactly the predicates plus the focus and the
        e-walk exactly the entities of a classic walk

        Args:
            classic (Walk): The classic walk
            p_walk (Walk): Its p-walk
            e_walk (Walk): Its e-walk

        Returns:
            None

        Raises:
            AssertionError:
                when test fails
        '''
        assert isinstance(classic, Walk)
        assert isinstance(p_walk, Walk)
        assert isinstance(e_walk, Walk)

        _f = classic.focus_index
        _tokens = classic.tokens

        assert p_walk.tokens == tuple(
            _t for _i, _t in enumerate(_tokens) if _i == _f or (_i - _f) % 2
        )
        assert e_walk.tokens == _tokens[_f % 2::2]

        assert p_walk.focus == classic.focus
        assert e_walk.focus == classic.focus
        assert len(p_walk) + len(e_walk) == len(classic) + 1

        self._assert_subsequence(p_walk.tokens, _tokens)
        self._assert_subsequence(e_walk.tokens, _tokens)


    #
    # check a metric value is in range
    #
    def _assert_metric_range(self, metric: Metric, value: float):
        ''' Assert a metric value lies in the valid range of the metric '''
        _low, _high = metric.valid_range
        assert np.isfinite(value)
        assert _low <= value <= _high


    #
    # random parameters for gradient checks
    #
    def _random_matrices(
            self,
            rng: np.random.Generator,
            model,
            vocab_size: int = 4,
            dim: int = 3,
            window: int = 2
    ) -> EmbeddingMatrices:
        ''' Matrices with every entry drawn from N(0, 0.5) '''
        _slots = EmbeddingMatrices.num_slots(model, window)

        return EmbeddingMatrices(
            input=rng.normal(0.0, 0.5, (vocab_size, dim)),
            output=rng.normal(0.0, 0.5, (_slots, vocab_size, dim)),
            model=model,
            window=window
        )


    #
    # gradient check
    #
    def _gradient_error(
            self,
            matrices: EmbeddingMatrices,
            example: TrainingPair | ContextExample,
            negatives: Sequence[int] = ()
    ) -> float:
        '''
        Relative error between the analytic gradient and central finite
        differences over every parameter

        Args:
            matrices (EmbeddingMatrices): The parameters
            example (TrainingPair | ContextExample): The example
            negatives (Sequence): The negative ids

        Returns:
            float: |analytic - numeric| / (|analytic| + |numeric|)

        Raises:
            None
        '''
        _grads = pair_loss_and_gradients(matrices, example, negatives)

        _analytic_in = np.zeros_like(matrices.input)
        for _row, _grad in _grads.input.items():
            _analytic_in[_row] += _grad

        _analytic_out = np.zeros_like(matrices.output)
        for (_slot, _row), _grad in _grads.output.items():
            _analytic_out[_slot, _row] += _grad

        def _numeric(array: np.ndarray) -> np.ndarray:
            _result = np.zeros_like(array)
            for _index in np.ndindex(array.shape):
                _saved = array[_index]
                array[_index] = _saved + GRADIENT_STEP
                _plus = pair_loss_and_gradients(matrices, example, negatives).loss
                array[_index] = _saved - GRADIENT_STEP
                _minus = pair_loss_and_gradients(matrices, example, negatives).loss
                array[_index] = _saved
                _result[_index] = (_plus - _minus) / (2 * GRADIENT_STEP)

            return _result

        _analytic = np.concatenate([_analytic_in.ravel(), _analytic_out.ravel()])
        _numerical = np.concatenate([
            _numeric(matrices.input).ravel(),
            _numeric(matrices.output).ravel()
        ])

        _scale = np.linalg.norm(_analytic) + np.linalg.norm(_numerical)
        if _scale == 0.0: return 0.0

        return float(np.linalg.norm(_analytic - _numerical) / _scale)
