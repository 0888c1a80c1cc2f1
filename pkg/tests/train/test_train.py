#!/usr/bin/env python3
'''
PyTest - Test of embedding training

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
import numpy as np

# Local app modules
from test_base import TestBase
from appkgvec.exceptions import TrainingError, VocabularyError
from appkgvec.model import TrainConfig
from appkgvec.train import Trainer, train
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

#
# Global Variables
#


###########################################################################
#
# The tests...
#
###########################################################################
#
# Training
#
class Test_Train(TestBase):
    '''
    Test Class - Training embeddings from a corpus

    Attributes:
        None
    '''
    #
    # Loss decreases
    #
    def test_loss_decreases(self, tiny_corpus):
        '''
        The mean epoch loss falls over the first epochs

        Args:
            None

        Returns:
            None

        Raises:
            AssertionError:
                when test fails
        '''
        _trainer = Trainer(config=TrainConfig(dim=TINY_DIM, window=2, epochs=3, seed=1))
        _trainer.train(tiny_corpus)

        _history = _trainer.loss_history
        assert len(_history) == 3
        assert _history[0] > _history[1] > _history[2]


    #
    # All models
    #
    @pytest.mark.parametrize("model", list(ModelType))
    def test_models(self, tiny_corpus, model):
        '''
        Every model variant gives a finite store over the vocabulary

        Args:
            model (ModelType): The model variant

        Returns:
            None

        Raises:
            AssertionError:
                when test fails
        '''
        _trainer = Trainer(config=TrainConfig(dim=TINY_DIM, window=2, epochs=2, model=model))
        _store = _trainer.train(tiny_corpus)

        assert _store.tokens == _trainer.vocabulary.tokens
        assert _store.dim == TINY_DIM
        assert np.all(np.isfinite(_store.matrix))
        assert _trainer.matrices.output.shape[0] == (4 if model.is_order_aware else 1)
        assert _trainer.loss_history[-1] < _trainer.loss_history[0]


    #
    # Determinism
    #
    @pytest.mark.parametrize("model", [ModelType.SG_OA, ModelType.CBOW])
    def test_deterministic(self, tmp_path, tiny_corpus, model):
        '''
        Two single thread runs with one seed write identical files

        Args:
            model (ModelType): The model variant

        Returns:
            None

        Raises:
            AssertionError:
                when test fails
        '''
        _config = TrainConfig(dim=TINY_DIM, window=2, epochs=TINY_EPOCHS, model=model, seed=9, sample=1e-2)

        _first = train(tiny_corpus, _config)
        _second = train(tiny_corpus, _config)
        assert np.array_equal(_first.matrix, _second.matrix)

        _first.save(str(tmp_path / "first.txt"))
        _second.save(str(tmp_path / "second.txt"))
        assert (tmp_path / "first.txt").read_bytes() == (tmp_path / "second.txt").read_bytes()

        _other = train(tiny_corpus, TrainConfig(dim=TINY_DIM, window=2, epochs=TINY_EPOCHS, model=model, seed=10))
        assert not np.array_equal(_first.matrix, _other.matrix)


    #
    # Corpus sources
    #
    def test_corpus_file(self, tmp_path, tiny_corpus):
        ''' A corpus file trains the same as its lines '''
        _path = tmp_path / "corpus.txt"
        _path.write_text("\n".join(tiny_corpus) + "\n", encoding="utf-8")
        _config = TrainConfig(dim=TINY_DIM, window=2, epochs=1)

        assert train(str(_path), _config) == train(tiny_corpus, _config)
        assert train([_l.split() for _l in tiny_corpus], _config) == train(tiny_corpus, _config)


    #
    # Threads
    #
    def test_threads(self, tiny_corpus):
        ''' Lock free multi thread training completes with finite vectors '''
        _store = train(tiny_corpus, TrainConfig(dim=TINY_DIM, window=2, epochs=2, threads=3))

        assert len(_store) == 8
        assert np.all(np.isfinite(_store.matrix))


    #
    # Errors
    #
    def test_empty_corpus(self):
        ''' An empty corpus cannot be trained '''
        with pytest.raises(VocabularyError):
            train([], TrainConfig(dim=TINY_DIM))


    def test_non_finite_loss(self, tiny_corpus):
        '''
        A diverging run stops with diagnostics

        Args:
            None

        Returns:
            None

        Raises:
            AssertionError:
                when test fails
        '''
        _config = TrainConfig(dim=TINY_DIM, window=2, epochs=2, alpha=1e300, batch_size=1)

        with np.errstate(all="ignore"):
            with pytest.raises(TrainingError) as _err:
                train(tiny_corpus, _config)

        assert "learning_rate" in _err.value.diagnostics
        assert _err.value.epoch >= 0


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
