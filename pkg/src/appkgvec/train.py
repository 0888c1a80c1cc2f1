#!/usr/bin/env python3
'''
Trainer

Mini-batch SGD trainer for the four word2vec variants over a walk corpus.

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
from appkgvec.base import AppKGVecBaseClass, derive_seed
from appkgvec.exceptions import TrainingError
from appkgvec.model import (
    BatchResult,
    ContextBatch,
    EmbeddingMatrices,
    SkipGramBatch,
    TrainConfig,
    apply_gradients,
    cbow_batch,
    cbow_examples,
    sg_batch,
    sg_examples,
)
from appkgvec.store import EmbeddingStore
from appkgvec.vocab import Corpus, Vocabulary, build_vocab
from appkgvec.walks import read_corpus

# System Modules
import math
import numpy as np
from concurrent.futures import ThreadPoolExecutor

# Local app modules

# Imports for python variable type hints
from typing import Any


###########################################################################
#
# Module Specific Items
#
###########################################################################
#
# Types
#
Batch = SkipGramBatch | ContextBatch


#
# Constants
#
# Examples are built for this many corpus tokens at a time
CHUNK_TOKENS = 50000


#
# Global Variables
#


###########################################################################
#
# Helpers
#
###########################################################################
def _slice(batch: Batch, start: int, stop: int) -> Batch:
    return type(batch)(*(_a[start:stop] for _a in batch))


def _chunk_bounds(sentence_ids: np.ndarray) -> list[int]:
    ''' Chunk boundaries (at sentence starts) of about CHUNK_TOKENS tokens '''
    _n = len(sentence_ids)
    if _n == 0: return [0]

    _starts = np.concatenate([[0], np.flatnonzero(np.diff(sentence_ids)) + 1, [_n]])
    _picks = np.searchsorted(_starts, np.arange(0, _n, CHUNK_TOKENS))

    return sorted(set(_starts[_picks].tolist()) | {_n})


###########################################################################
#
# Trainer Class Definition
#
###########################################################################
class Trainer(AppKGVecBaseClass):
    '''
    Trains embeddings from a walk corpus.

    With threads = 1 training is fully reproducible for a given seed.  With
    more threads, workers update the shared matrices without locks and
    results vary from run to run.

    Attributes:
        config (TrainConfig) [ReadOnly]: The training settings
        vocabulary (Vocabulary) [ReadOnly]: Set by train()
        matrices (EmbeddingMatrices) [ReadOnly]: Set by train()
        loss_history (list) [ReadOnly]: Mean loss per example of each epoch
    '''
    #
    # __init__
    #
    def __init__(
            self,
            *args,
            config: TrainConfig | None = None,
            **kwargs
    ):
        '''
        Initialises the instance.

        Args:
            *args (Undef): Unnamed arguments to be passed to the constructor
                of the inherited process
            config (TrainConfig): The training settings (defaults if None)
            **kwargs (Undef): Keyword arguments to be passed to the constructor
                of the inherited process

        Returns:
            None

        Raises:
            AssertionError:
                When config is not a TrainConfig
        '''
        _config = TrainConfig() if config is None else config
        assert isinstance(_config, TrainConfig), "config must be a TrainConfig"

        super().__init__(*args, **kwargs)

        # Private Attributes
        self._config = _config
        self._vocabulary: Vocabulary | None = None
        self._matrices: EmbeddingMatrices | None = None
        self._loss_history: list[float] = []

        # Attributes


    ###########################################################################
    #
    # Properties
    #
    ###########################################################################
    @property
    def config(self) -> TrainConfig:
        return self._config

    @property
    def vocabulary(self) -> Vocabulary | None:
        return self._vocabulary

    @property
    def matrices(self) -> EmbeddingMatrices | None:
        return self._matrices

    @property
    def loss_history(self) -> list[float]:
        return list(self._loss_history)


    ###########################################################################
    #
    # Corpus
    #
    ###########################################################################
    #
    # _encode
    #
    def _encode(self, sentences: list[list[str]]) -> tuple[np.ndarray, np.ndarray]:
        ''' The flattened id corpus and the sentence id of each token '''
        assert self._vocabulary is not None

        _encoded = [self._vocabulary.encode(_s) for _s in sentences]
        _encoded = [_e for _e in _encoded if len(_e) > 0]
        if not _encoded:
            return np.zeros(0, dtype=np.int64), np.zeros(0, dtype=np.int64)

        _lengths = [len(_e) for _e in _encoded]
        return (
            np.concatenate(_encoded),
            np.repeat(np.arange(len(_encoded)), _lengths)
        )


    ###########################################################################
    #
    # Training
    #
    ###########################################################################
    #
    # _examples
    #
    def _examples(self, flat: np.ndarray, sentence_ids: np.ndarray) -> Batch:
        if self._config.model.is_cbow:
            return cbow_examples(flat, sentence_ids, self._config.window, self._config.model)

        return sg_examples(flat, sentence_ids, self._config.window, self._config.model)


    #
    # _step
    #
    def _step(
            self,
            batch: Batch,
            rng: np.random.Generator,
            learning_rate: float
    ) -> BatchResult:
        ''' Draw negatives, compute the gradients and apply them '''
        assert self._vocabulary is not None and self._matrices is not None

        if isinstance(batch, ContextBatch):
            _targets = batch.centers
            _core = cbow_batch
        else:
            _targets = batch.contexts
            _core = sg_batch

        _negatives = self._vocabulary.sample_negatives(
            rng,
            size=(len(_targets), self._config.negatives),
            exclude=_targets
        )
        _result = _core(self._matrices, batch, _negatives)
        if math.isfinite(_result.loss):
            apply_gradients(self._matrices, _result, learning_rate)

        return _result


    #
    # _run_batches
    #
    def _run_batches(
            self,
            examples: Batch,
            rng: np.random.Generator,
            alpha_at: Any,
            epoch: int
    ) -> tuple[float, int]:
        '''
        Train on examples in batch order

        Args:
            examples (Batch): The examples
            rng (np.random.Generator): Source of negatives
            alpha_at (callable): Learning rate for a fraction of the examples
            epoch (int): For diagnostics

        Returns:
            tuple: (total loss, examples processed)

        Raises:
            TrainingError:
                When a batch loss is not finite
        '''
        _total = len(examples.centers)
        _size = self._config.batch_size
        _loss = 0.0

        for _number, _start in enumerate(range(0, _total, _size)):
            _rate = alpha_at(_start / _total)
            _result = self._step(_slice(examples, _start, _start + _size), rng, _rate)

            if not math.isfinite(_result.loss):
                raise TrainingError(
                    "non-finite loss",
                    epoch=epoch,
                    batch=_number,
                    diagnostics=self._diagnostics(_rate)
                )

            _loss += _result.loss

        return _loss, _total


    #
    # _diagnostics
    #
    def _diagnostics(self, learning_rate: float) -> dict[str, float]:
        assert self._matrices is not None
        with np.errstate(invalid="ignore"):
            return {
                "learning_rate": learning_rate,
                "input_max_abs": float(np.nanmax(np.abs(self._matrices.input))),
                "output_max_abs": float(np.nanmax(np.abs(self._matrices.output))),
            }


    #
    # train
    #
    def train(self, corpus: Corpus = ()) -> EmbeddingStore:
        '''
        Train embeddings from a walk corpus

        Every epoch passes over the corpus in order.  The learning rate
        decays linearly over all epochs to a floor of 1e-4 of its initial
        value.  Input vectors start uniform in [-0.5/dim, 0.5/dim) and output
        matrices at zero.

        Args:
            corpus (Corpus): A corpus file path, or an iterable of lines or of
                token sequences

        Returns:
            EmbeddingStore: The input vector of every vocabulary token

        Raises:
            VocabularyError:
                When the corpus has no trainable tokens
            TrainingError:
                When the loss stops being finite
        '''
        _cfg = self._config

        if isinstance(corpus, str):
            _sentences = list(read_corpus(corpus))
        else:
            _sentences = [
                _s.split() if isinstance(_s, str) else list(_s) for _s in corpus
            ]

        self._vocabulary = build_vocab(_sentences, min_count=_cfg.min_count, exponent=_cfg.exponent)
        _flat, _sentence_ids = self._encode(_sentences)

        self._matrices = EmbeddingMatrices.initialise(
            vocab_size=len(self._vocabulary),
            dim=_cfg.dim,
            model=_cfg.model,
            window=_cfg.window,
            rng=np.random.default_rng(derive_seed(_cfg.seed, "init"))
        )
        self._loss_history = []

        _neg_seed = derive_seed(_cfg.seed, "negatives")
        _neg_rng = np.random.default_rng(_neg_seed)
        _sample_rng = np.random.default_rng(derive_seed(_cfg.seed, "sample"))
        _keep = self._vocabulary.keep_probabilities(_cfg.sample)

        self._logger.info(
            f"Training {_cfg.model.value}: {len(self._vocabulary)} tokens, "
            f"{len(_flat)} corpus tokens, dim {_cfg.dim}, window {_cfg.window}, "
            f"{_cfg.epochs} epochs, threads {_cfg.threads}"
        )
        if _cfg.threads > 1:
            self._logger.warning(
                f"Training with {_cfg.threads} threads: results are not reproducible"
            )

        _alpha = _cfg.learning_rate
        _floor = _cfg.min_learning_rate

        for _epoch in range(_cfg.epochs):
            if _cfg.sample > 0.0:
                _kept = _sample_rng.random(len(_flat)) < _keep[_flat]
                _epoch_flat, _epoch_ids = _flat[_kept], _sentence_ids[_kept]
            else:
                _epoch_flat, _epoch_ids = _flat, _sentence_ids

            _epoch_tokens = max(len(_epoch_flat), 1)
            _bounds = _chunk_bounds(_epoch_ids)
            _loss, _count = 0.0, 0

            for _chunk, (_lo, _hi) in enumerate(zip(_bounds[:-1], _bounds[1:])):
                _examples = self._examples(_epoch_flat[_lo:_hi], _epoch_ids[_lo:_hi])

                def _alpha_at(
                        fraction: float,
                        lo: int = _lo,
                        hi: int = _hi,
                        epoch: int = _epoch
                ) -> float:
                    _progress = (epoch + (lo + fraction * (hi - lo)) / _epoch_tokens) / _cfg.epochs
                    return max(_alpha * (1.0 - _progress), _floor)

                if _cfg.threads == 1:
                    _chunk_loss, _chunk_count = self._run_batches(
                        _examples, _neg_rng, _alpha_at, _epoch
                    )

                else:
                    _chunk_loss, _chunk_count = self._run_hogwild(
                        _examples, [_neg_seed, _epoch, _chunk], _alpha_at, _epoch
                    )

                _loss += _chunk_loss
                _count += _chunk_count

            _mean = _loss / _count if _count else 0.0
            self._loss_history.append(_mean)
            self._logger.info(f"Epoch {_epoch + 1}/{_cfg.epochs}: mean loss {_mean:.6f}")

        return EmbeddingStore.from_matrix(
            tokens=self._vocabulary.tokens,
            matrix=self._matrices.input,
            **self._logger_kwargs()
        )


    #
    # _run_hogwild
    #
    def _run_hogwild(
            self,
            examples: Batch,
            seed: list[int],
            alpha_at: Any,
            epoch: int
    ) -> tuple[float, int]:
        ''' Split the examples over threads that update without locking '''
        _threads = self._config.threads
        _total = len(examples.centers)
        _edges = np.linspace(0, _total, _threads + 1).astype(int)

        def _worker(part: int) -> tuple[float, int]:
            _lo, _hi = int(_edges[part]), int(_edges[part + 1])
            if _hi <= _lo: return 0.0, 0

            return self._run_batches(
                _slice(examples, _lo, _hi),
                np.random.default_rng(seed + [part]),
                lambda fraction: alpha_at((_lo + fraction * (_hi - _lo)) / _total),
                epoch
            )

        with ThreadPoolExecutor(max_workers=_threads) as _executor:
            _results = list(_executor.map(_worker, range(_threads)))

        return sum(_r[0] for _r in _results), sum(_r[1] for _r in _results)


###########################################################################
#
# Module Functions
#
###########################################################################
#
# train
#
def train(
        corpus: Corpus = (),
        config: TrainConfig | None = None,
        logger_name: str = "",
        logger_level: str = "CRITICAL"
) -> EmbeddingStore:
    ''' Train embeddings from a walk corpus (see Trainer.train) '''
    return Trainer(
        config=config,
        logger_name=logger_name,
        logger_level=logger_level
    ).train(corpus)


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
