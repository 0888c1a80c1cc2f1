#!/usr/bin/env python3
'''
PyTest - Test of the word2vec models

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
# Shared variables, constants, etc
from tests.constants import *

# System Modules
import pytest
import math
import numpy as np

# Local app modules
from test_base import TestBase
from appkgvec.model import (
    ContextExample,
    EmbeddingMatrices,
    TrainConfig,
    TrainingPair,
    cbow_examples,
    extract_pairs,
    pair_loss_and_gradients,
    sg_examples
)
from appkgvec.typing import ModelType

# Imports for python variable type hints


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
GRADIENT_VOCAB = 4
GRADIENT_DIM = 3
GRADIENT_WINDOW = 2


#
# Global Variables
#


###########################################################################
#
# The tests...
#
###########################################################################
#
# Configuration
#
class Test_Model_Config(TestBase):
    '''
    Test Class - Training settings

    Attributes:
        None
    '''
    #
    # Defaults
    #
    def test_defaults(self):
        '''
        Default settings and learning rates

        Args:
            None

        Returns:
            None

        Raises:
            AssertionError:
                when test fails
        '''
        _config = TrainConfig()

        assert _config.dim == 200
        assert _config.window == 5
        assert _config.negatives == 5
        assert _config.exponent == 0.75
        assert _config.model == ModelType.SG
        assert _config.learning_rate == 0.025
        assert TrainConfig(model="cbow_oa").learning_rate == 0.05
        assert TrainConfig(alpha=0.1).learning_rate == 0.1
        assert _config.min_learning_rate == pytest.approx(0.025 * 1e-4)


    @pytest.mark.parametrize("kwargs", [
        {"dim": 0},
        {"window": 0},
        {"epochs": 0},
        {"negatives": 0},
        {"alpha": 0.0},
        {"exponent": -1.0},
        {"model": "glove"},
        {"batch_size": 0},
        {"threads": 0},
    ])
    def test_invalid(self, kwargs):
        ''' Invalid settings raise ValueError '''
        with pytest.raises(ValueError):
            TrainConfig(**kwargs)


#
# Pairs and slots
#
class Test_Model_Pairs(TestBase):
    '''
    Test Class - Training pairs and output slots

    Attributes:
        None
    '''
    #
    # extract_pairs
    #
    def test_window_one(self):
        '''
        Window 1 over three tokens

        Args:
            None

        Returns:
            None

        Raises:
            AssertionError:
                when test fails
        '''
        _a, _p, _b = 0, 1, 2

        assert set(extract_pairs([_a, _p, _b], window=1)) == {
            TrainingPair(_a, _p, 1),
            TrainingPair(_p, _a, -1),
            TrainingPair(_p, _b, 1),
            TrainingPair(_b, _p, -1),
        }


    def test_single_token(self):
        ''' A single token has no pairs '''
        assert extract_pairs([0], window=3) == []


    def test_window_two(self):
        ''' Window 2 over three tokens gives six pairs '''
        assert extract_pairs([0, 1, 2], window=2) == [
            TrainingPair(0, 1, 1),
            TrainingPair(0, 2, 2),
            TrainingPair(1, 0, -1),
            TrainingPair(1, 2, 1),
            TrainingPair(2, 0, -2),
            TrainingPair(2, 1, -1),
        ]


    #
    # Output slots
    #
    def test_output_index(self):
        '''
        Order-aware models use one output matrix per offset

        Args:
            None

        Returns:
            None

        Raises:
            AssertionError:
                when test fails
        '''
        _rng = np.random.default_rng(0)
        _oa = EmbeddingMatrices.initialise(3, 2, ModelType.SG_OA, window=2, rng=_rng)
        _classic = EmbeddingMatrices.initialise(3, 2, ModelType.SG, window=2, rng=_rng)

        assert [_oa.output_index(_r) for _r in (-2, -1, 1, 2)] == [0, 1, 2, 3]
        assert [_classic.output_index(_r) for _r in (-2, -1, 1, 2)] == [0, 0, 0, 0]

        for _offset in (0, 3, -3):
            with pytest.raises(AssertionError):
                _oa.output_index(_offset)


    def test_initialise(self):
        ''' Inputs start small and uniform, outputs at zero '''
        _dim = 8
        _matrices = EmbeddingMatrices.initialise(
            10, _dim, ModelType.CBOW_OA, window=3, rng=np.random.default_rng(0)
        )

        assert _matrices.input.shape == (10, _dim)
        assert _matrices.output.shape == (6, 10, _dim)
        assert np.all(np.abs(_matrices.input) <= 0.5 / _dim)
        assert not np.any(_matrices.output)


    def test_shape_mismatch(self):
        ''' Output matrices must match the model and window '''
        with pytest.raises(ValueError):
            EmbeddingMatrices(
                input=np.zeros((3, 2)),
                output=np.zeros((1, 3, 2)),
                model=ModelType.SG_OA,
                window=2
            )


    #
    # Vectorised examples
    #
    @pytest.mark.parametrize("model", [ModelType.SG, ModelType.SG_OA])
    def test_sg_examples(self, model):
        '''
        The vectorised skip-gram examples are the pairs of every sentence

        Args:
            model (ModelType): The model variant

        Returns:
            None

        Raises:
            AssertionError:
                when test fails
        '''
        _sentences = [[0, 1, 2, 3], [4], [2, 2, 5]]
        _window = 2
        _matrices = EmbeddingMatrices.initialise(
            6, 2, model, window=_window, rng=np.random.default_rng(0)
        )

        _flat = np.concatenate([np.asarray(_s) for _s in _sentences])
        _ids = np.repeat(np.arange(len(_sentences)), [len(_s) for _s in _sentences])
        _batch = sg_examples(_flat, _ids, _window, model)

        _pairs = [_p for _s in _sentences for _p in extract_pairs(_s, _window)]
        assert list(_batch.centers) == [_p.center for _p in _pairs]
        assert list(_batch.contexts) == [_p.context for _p in _pairs]
        assert list(_batch.slots) == [_matrices.output_index(_p.offset) for _p in _pairs]


    def test_cbow_examples(self):
        ''' One CBOW example per token with a context in its sentence '''
        _flat = np.asarray([0, 1, 2, 3, 4])
        _ids = np.asarray([0, 0, 0, 1, 2])

        _batch = cbow_examples(_flat, _ids, 1, ModelType.CBOW_OA)

        assert list(_batch.centers) == [0, 1, 2]
        assert list(_batch.counts) == [1.0, 2.0, 1.0]
        assert _batch.contexts[1].tolist() == [0, 2]
        assert _batch.slots[1].tolist() == [0, 1]
        assert _batch.mask.tolist() == [[0.0, 1.0], [1.0, 1.0], [1.0, 0.0]]


#
# Loss and gradients
#
class Test_Model_Loss(TestBase):
    '''
    Test Class - Negative sampling loss and gradients

    Attributes:
        None
    '''
    #
    # Zero vectors
    #
    @pytest.mark.parametrize("model", list(ModelType))
    def test_zero_vectors(self, model):
        '''
        With all vectors zero each term is log 2

        Args:
            model (ModelType): The model variant

        Returns:
            None

        Raises:
            AssertionError:
                when test fails
        '''
        _slots = EmbeddingMatrices.num_slots(model, 1)
        _matrices = EmbeddingMatrices(
            input=np.zeros((2, 3)),
            output=np.zeros((_slots, 2, 3)),
            model=model,
            window=1
        )

        _grads = pair_loss_and_gradients(_matrices, TrainingPair(0, 1, 1), [1])

        assert _grads.loss == pytest.approx(2 * math.log(2))
        assert _grads.loss == pytest.approx(1.3863, abs=1e-4)


    #
    # Confident positive
    #
    def test_confident_positive(self):
        ''' A score of 10 with no negatives costs about 4.54e-5 '''
        _v = [np.sqrt(10.0), 0.0]
        _matrices = EmbeddingMatrices(
            input=np.asarray([_v, [0.0, 0.0]]),
            output=np.asarray([[[0.0, 0.0], _v]]),
            model=ModelType.SG,
            window=1
        )

        _grads = pair_loss_and_gradients(_matrices, TrainingPair(0, 1, 1), [])

        assert _grads.loss == pytest.approx(math.log1p(math.exp(-10.0)), rel=1e-12)
        assert _grads.loss == pytest.approx(4.54e-5, rel=1e-3)


    #
    # Contract
    #
    def test_id_out_of_range(self):
        ''' Ids outside the vocabulary are a contract violation '''
        _matrices = EmbeddingMatrices.initialise(3, 2, ModelType.SG, window=1, rng=np.random.default_rng(0))

        with pytest.raises(AssertionError):
            pair_loss_and_gradients(_matrices, TrainingPair(0, 3, 1), [])

        with pytest.raises(AssertionError):
            pair_loss_and_gradients(_matrices, TrainingPair(0, 1, 1), [-1])

        with pytest.raises(AssertionError):
            pair_loss_and_gradients(_matrices, TrainingPair(0, 1, 2), [])


    #
    # Gradient checks
    #
    @pytest.mark.parametrize("model", list(ModelType))
    def test_gradient_check(self, model):
        '''
        Analytic gradients match central finite differences

        Args:
            model (ModelType): The model variant

        Returns:
            None

        Raises:
            AssertionError:
                when test fails
        '''
        _rng = np.random.default_rng(list(ModelType).index(model))
        _offsets = [_r for _r in range(-GRADIENT_WINDOW, GRADIENT_WINDOW + 1) if _r]

        for _case in range(GRADIENT_CASES):
            _matrices = self._random_matrices(
                _rng,
                model,
                vocab_size=GRADIENT_VOCAB,
                dim=GRADIENT_DIM,
                window=GRADIENT_WINDOW
            )
            _negatives = _rng.integers(0, GRADIENT_VOCAB, int(_rng.integers(0, 4))).tolist()

            if model.is_cbow:
                _size = int(_rng.integers(1, len(_offsets) + 1))
                _example = ContextExample(
                    center=int(_rng.integers(0, GRADIENT_VOCAB)),
                    contexts=tuple(_rng.integers(0, GRADIENT_VOCAB, _size).tolist()),
                    offsets=tuple(_rng.choice(_offsets, _size, replace=False).tolist())
                )
            else:
                _example = TrainingPair(
                    int(_rng.integers(0, GRADIENT_VOCAB)),
                    int(_rng.integers(0, GRADIENT_VOCAB)),
                    int(_rng.choice(_offsets))
                )

            assert self._gradient_error(_matrices, _example, _negatives) < GRADIENT_TOLERANCE


    #
    # Order-aware collapse
    #
    @pytest.mark.parametrize("classic,order_aware", [
        (ModelType.SG, ModelType.SG_OA),
        (ModelType.CBOW, ModelType.CBOW_OA),
    ])
    def test_order_aware_collapse(self, classic, order_aware):
        '''
        Identical position matrices reproduce the classic model

        Args:
            classic (ModelType): The classic variant
            order_aware (ModelType): Its order-aware variant

        Returns:
            None

        Raises:
            AssertionError:
                when test fails
        '''
        _rng = np.random.default_rng(42)
        _window = 3
        _plain = self._random_matrices(_rng, classic, vocab_size=6, dim=5, window=_window)
        _ordered = EmbeddingMatrices(
            input=_plain.input.copy(),
            output=np.repeat(_plain.output, 2 * _window, axis=0),
            model=order_aware,
            window=_window
        )

        _sentence = _rng.integers(0, 6, 8).tolist()
        for _pair in extract_pairs(_sentence, _window):
            _negatives = _rng.integers(0, 6, 5).tolist()
            _example = _pair
            if classic.is_cbow:
                _example = ContextExample(
                    center=_pair.center,
                    contexts=(_pair.context, _sentence[0]),
                    offsets=(_pair.offset, -_pair.offset)
                )

            _a = pair_loss_and_gradients(_plain, _example, _negatives)
            _b = pair_loss_and_gradients(_ordered, _example, _negatives)

            assert abs(_a.loss - _b.loss) < COLLAPSE_TOLERANCE
            for _row, _grad in _a.input.items():
                assert np.allclose(_grad, _b.input[_row], rtol=0.0, atol=COLLAPSE_TOLERANCE)


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
