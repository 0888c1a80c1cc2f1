#!/usr/bin/env python3
'''
Embedding Model

Skip-gram and CBOW with negative sampling, classic and order-aware.

Order-aware models keep one output matrix per context offset
(-window..-1, +1..+window); classic models keep one.  The loss and
gradient cores work on batches and are shared by the trainer and by
pair_loss_and_gradients.

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
from appkgvec.typing import ModelType
from appkgvec.validation import check_float, check_int, to_enum

# System Modules
import numpy as np
from dataclasses import dataclass, field
from scipy.special import expit

# Local app modules

# Imports for python variable type hints
from typing import NamedTuple, Sequence


###########################################################################
#
# Module Specific Items
#
###########################################################################
#
# Types
#
@dataclass(frozen=True)
class TrainConfig():
    '''
    Training settings.  alpha=None selects the model default (0.025 for the
    skip-gram family, 0.05 for the CBOW family).
    '''
    dim: int = 200
    window: int = 5
    epochs: int = 5
    alpha: float | None = None
    negatives: int = 5
    exponent: float = 0.75
    min_count: int = 0
    model: ModelType = ModelType.SG
    seed: int = 0
    sample: float = 0.0
    batch_size: int = 64
    threads: int = 1

    def __post_init__(self):
        check_int(self.dim, "dim", minimum=1)
        check_int(self.window, "window", minimum=1)
        check_int(self.epochs, "epochs", minimum=1)
        check_int(self.negatives, "negatives", minimum=1)
        check_float(self.exponent, "exponent", minimum=0.0)
        check_int(self.min_count, "min_count", minimum=0)
        check_int(self.seed, "seed", minimum=0)
        check_float(self.sample, "sample", minimum=0.0)
        check_int(self.batch_size, "batch_size", minimum=1)
        check_int(self.threads, "threads", minimum=1)
        if self.alpha is not None:
            check_float(self.alpha, "alpha", minimum=0.0, exclusive=True)

        object.__setattr__(self, "model", to_enum(self.model, ModelType, "model"))

    @property
    def learning_rate(self) -> float:
        ''' The initial learning rate '''
        if self.alpha is not None: return float(self.alpha)
        return CBOW_ALPHA if self.model.is_cbow else SG_ALPHA

    @property
    def min_learning_rate(self) -> float:
        ''' The floor of the linear decay '''
        return self.learning_rate * MIN_ALPHA_RATIO


class TrainingPair(NamedTuple):
    ''' A (center, context) id pair and the signed offset of the context '''
    center: int
    context: int
    offset: int


class ContextExample(NamedTuple):
    '''
    A CBOW example: the center id predicted from its window.  contexts and
    offsets are parallel.
    '''
    center: int
    contexts: tuple[int, ...]
    offsets: tuple[int, ...]

    @classmethod
    def from_pair(cls, pair: TrainingPair) -> ContextExample:
        ''' A one-token window holding the context of a pair '''
        return cls(pair.center, (pair.context,), (pair.offset,))


@dataclass
class PairGradients():
    '''
    Loss and gradient of one example.  Gradients are keyed by input row and
    by (output slot, output row) and summed where a row is touched twice.
    '''
    loss: float = 0.0
    input: dict[int, np.ndarray] = field(default_factory=dict)
    output: dict[tuple[int, int], np.ndarray] = field(default_factory=dict)


class SkipGramBatch(NamedTuple):
    ''' Parallel arrays: input rows, output rows and output slots '''
    centers: np.ndarray
    contexts: np.ndarray
    slots: np.ndarray


class ContextBatch(NamedTuple):
    '''
    Padded CBOW examples.  contexts, slots and mask are (B, C); padding has
    mask 0 and counts holds the real window size of each row.
    '''
    centers: np.ndarray
    contexts: np.ndarray
    slots: np.ndarray
    mask: np.ndarray
    counts: np.ndarray


class BatchResult(NamedTuple):
    '''
    Total loss of a batch and the gradient for each row of the index arrays
    used to gather it (ready for np.add.at).
    '''
    loss: float
    input_rows: np.ndarray
    input_grad: np.ndarray
    output_slots: np.ndarray
    output_rows: np.ndarray
    output_grad: np.ndarray


#
# Constants
#
SG_ALPHA = 0.025
CBOW_ALPHA = 0.05
MIN_ALPHA_RATIO = 1e-4


#
# Global Variables
#


###########################################################################
#
# EmbeddingMatrices Class Definition
#
###########################################################################
class EmbeddingMatrices():
    '''
    The parameters of a model.

    Attributes:
        input (np.ndarray): The (V, d) input matrix W (the embeddings)
        output (np.ndarray): The (M, V, d) output matrices, M = 1 for classic
            models and 2 * window for order-aware models
        model (ModelType) [ReadOnly]: The model variant
        window (int) [ReadOnly]: The window the slots are laid out for
    '''
    #
    # __init__
    #
    def __init__(
            self,
            input: np.ndarray | None = None,
            output: np.ndarray | None = None,
            model: ModelType = ModelType.SG,
            window: int = 5
    ):
        '''
        Initialises the instance.

        Args:
            input (np.ndarray): The (V, d) input matrix
            output (np.ndarray): The (M, V, d) output matrices
            model (ModelType): The model variant
            window (int): The context window

        Returns:
            None

        Raises:
            ValueError:
                When the shapes do not agree with the model and window
        '''
        self._model = to_enum(model, ModelType, "model")
        self._window = check_int(window, "window", minimum=1)

        self.input = np.asarray(input, dtype=np.float64)
        self.output = np.asarray(output, dtype=np.float64)

        if self.input.ndim != 2 or self.output.ndim != 3:
            raise ValueError("input must be (V, d) and output (M, V, d)")

        if self.output.shape != (self.num_slots(self._model, self._window),) + self.input.shape:
            raise ValueError(
                f"output shape {self.output.shape} does not match input "
                f"{self.input.shape} for {self._model.value} with window {self._window}"
            )


    #
    # initialise
    #
    @classmethod
    def initialise(
            cls,
            vocab_size: int = 1,
            dim: int = 1,
            model: ModelType = ModelType.SG,
            window: int = 5,
            rng: np.random.Generator | None = None
    ) -> EmbeddingMatrices:
        '''
        Create matrices: input uniform in [-0.5/dim, 0.5/dim), outputs zero

        Args:
            vocab_size (int): The number of tokens
            dim (int): The vector width
            model (ModelType): The model variant
            window (int): The context window
            rng (np.random.Generator): The random source

        Returns:
            EmbeddingMatrices: The new parameters

        Raises:
            AssertionError:
                When rng is not supplied
        '''
        assert isinstance(rng, np.random.Generator), "a random generator is required"
        check_int(vocab_size, "vocab_size", minimum=1)
        check_int(dim, "dim", minimum=1)

        _model = to_enum(model, ModelType, "model")
        _input = (rng.random((vocab_size, dim)) - 0.5) / dim
        _output = np.zeros((cls.num_slots(_model, window), vocab_size, dim))

        return cls(input=_input, output=_output, model=_model, window=window)


    ###########################################################################
    #
    # Properties
    #
    ###########################################################################
    @property
    def model(self) -> ModelType:
        return self._model

    @property
    def window(self) -> int:
        return self._window

    @property
    def vocab_size(self) -> int:
        return self.input.shape[0]

    @property
    def dim(self) -> int:
        return self.input.shape[1]


    ###########################################################################
    #
    # Slots
    #
    ###########################################################################
    @staticmethod
    def num_slots(model: ModelType, window: int) -> int:
        ''' The number of output matrices for a model and window '''
        return 2 * window if model.is_order_aware else 1


    #
    # output_index
    #
    def output_index(self, offset: int = 0) -> int:
        '''
        The output matrix used for a context offset

        Args:
            offset (int): Signed offset, 0 < |offset| <= window

        Returns:
            int: 0 for classic models, else offsets -w..-1 map to 0..w-1 and
                +1..+w to w..2w-1

        Raises:
            AssertionError:
                When the offset is 0 or outside the window
        '''
        if offset == 0 or abs(offset) > self._window:
            raise AssertionError(f"offset {offset} outside window {self._window}")

        return int(offset_slots(np.asarray([offset]), self._model, self._window)[0])


    #
    # check_ids
    #
    def check_ids(self, *ids: int | Sequence[int] | np.ndarray):
        ''' Contract check that ids are valid rows '''
        for _ids in ids:
            _array = np.asarray(_ids)
            if _array.size and (_array.min() < 0 or _array.max() >= self.vocab_size):
                raise AssertionError(
                    f"token id out of range [0, {self.vocab_size})"
                )


    #
    # copy
    #
    def copy(self) -> EmbeddingMatrices:
        return EmbeddingMatrices(
            input=self.input.copy(),
            output=self.output.copy(),
            model=self._model,
            window=self._window
        )


###########################################################################
#
# Pairs and Examples
#
###########################################################################
#
# offset_slots
#
def offset_slots(offsets: np.ndarray, model: ModelType, window: int) -> np.ndarray:
    ''' Vectorised EmbeddingMatrices.output_index '''
    if not model.is_order_aware: return np.zeros(offsets.shape, dtype=np.int64)

    return np.where(offsets < 0, offsets + window, offsets + window - 1).astype(np.int64)


#
# extract_pairs
#
def extract_pairs(sentence: Sequence[int] = (), window: int = 5) -> list[TrainingPair]:
    '''
    All (center, context, offset) pairs of a sentence with a fixed window

    The pairs are the same for every model variant, ordered by center
    position then offset.

    Args:
        sentence (Sequence): Token ids
        window (int): The maximum absolute offset

    Returns:
        list: The pairs (empty for a one token sentence)

    Raises:
        ValueError:
            When window < 1
    '''
    check_int(window, "window", minimum=1)

    _length = len(sentence)
    _pairs = []
    for _t in range(_length):
        for _r in range(-window, window + 1):
            if _r == 0 or not 0 <= _t + _r < _length: continue

            _pairs.append(TrainingPair(int(sentence[_t]), int(sentence[_t + _r]), _r))

    return _pairs


#
# _window_arrays
#
def _window_arrays(
        flat: np.ndarray,
        sentence_ids: np.ndarray,
        window: int
) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    '''
    Context positions of every token of a flattened corpus

    Returns:
        tuple: (offsets (2w,), positions (N, 2w), valid (N, 2w)) where
            positions[t, j] = t + offsets[j] clipped into range
    '''
    _offsets = np.concatenate([np.arange(-window, 0), np.arange(1, window + 1)])
    _n = len(flat)
    _raw = np.arange(_n)[:, np.newaxis] + _offsets[np.newaxis, :]
    _positions = np.clip(_raw, 0, max(_n - 1, 0))
    _valid = (_raw >= 0) & (_raw < _n) & (sentence_ids[_positions] == sentence_ids[:, np.newaxis])

    return _offsets, _positions, _valid


#
# sg_examples
#
def sg_examples(
        flat: np.ndarray,
        sentence_ids: np.ndarray,
        window: int,
        model: ModelType
) -> SkipGramBatch:
    '''
    The skip-gram examples of a flattened corpus, in extract_pairs order

    Args:
        flat (np.ndarray): Token ids of consecutive sentences
        sentence_ids (np.ndarray): The sentence of each token
        window (int): The context window
        model (ModelType): Selects the output slots

    Returns:
        SkipGramBatch: centers, contexts and output slots

    Raises:
        None
    '''
    _offsets, _positions, _valid = _window_arrays(flat, sentence_ids, window)
    _rows, _cols = np.nonzero(_valid)

    return SkipGramBatch(
        centers=flat[_rows],
        contexts=flat[_positions[_rows, _cols]],
        slots=offset_slots(_offsets[_cols], model, window)
    )


#
# cbow_examples
#
def cbow_examples(
        flat: np.ndarray,
        sentence_ids: np.ndarray,
        window: int,
        model: ModelType
) -> ContextBatch:
    '''
    The CBOW examples (one per token with at least one context) of a
    flattened corpus

    Args:
        flat (np.ndarray): Token ids of consecutive sentences
        sentence_ids (np.ndarray): The sentence of each token
        window (int): The context window
        model (ModelType): Selects the output slots

    Returns:
        ContextBatch: The padded examples

    Raises:
        None
    '''
    _offsets, _positions, _valid = _window_arrays(flat, sentence_ids, window)
    _keep = _valid.any(axis=1)
    _mask = _valid[_keep].astype(np.float64)

    return ContextBatch(
        centers=flat[_keep],
        contexts=np.where(_valid[_keep], flat[_positions[_keep]], 0),
        slots=np.broadcast_to(
            offset_slots(_offsets, model, window), _mask.shape
        ).copy(),
        mask=_mask,
        counts=_mask.sum(axis=1)
    )


###########################################################################
#
# Loss and Gradient Cores
#
###########################################################################
#
# sg_batch
#
def sg_batch(
        matrices: EmbeddingMatrices,
        batch: SkipGramBatch,
        negatives: np.ndarray
) -> BatchResult:
    '''
    Skip-gram loss and gradients: v = W[center] predicts u = W'_slot[context]

    loss = -log s(u.v) - sum_k log s(-u_k.v), the negatives u_k taken from
    the same output slot as the positive.

    Args:
        matrices (EmbeddingMatrices): The parameters (not modified)
        batch (SkipGramBatch): B examples
        negatives (np.ndarray): (B, K) negative ids

    Returns:
        BatchResult: The loss and gradients

    Raises:
        None
    '''
    _w, _wo = matrices.input, matrices.output
    _slots = batch.slots

    _v = _w[batch.centers]                                 # (B, d)
    _u_pos = _wo[_slots, batch.contexts]                   # (B, d)
    _u_neg = _wo[_slots[:, np.newaxis], negatives]         # (B, K, d)

    _s_pos = np.einsum("bd,bd->b", _u_pos, _v)
    _s_neg = np.einsum("bkd,bd->bk", _u_neg, _v)

    _loss = np.logaddexp(0.0, -_s_pos).sum() + np.logaddexp(0.0, _s_neg).sum()

    _g_pos = expit(_s_pos) - 1.0
    _g_neg = expit(_s_neg)

    _grad_v = _g_pos[:, np.newaxis] * _u_pos + np.einsum("bk,bkd->bd", _g_neg, _u_neg)
    _grad_pos = _g_pos[:, np.newaxis] * _v
    _grad_neg = _g_neg[:, :, np.newaxis] * _v[:, np.newaxis, :]

    _k = negatives.shape[1]
    _d = _w.shape[1]

    return BatchResult(
        loss=float(_loss),
        input_rows=batch.centers,
        input_grad=_grad_v,
        output_slots=np.concatenate([_slots, np.repeat(_slots, _k)]),
        output_rows=np.concatenate([batch.contexts, negatives.reshape(-1)]),
        output_grad=np.concatenate([_grad_pos, _grad_neg.reshape(-1, _d)])
    )


#
# cbow_batch
#
def cbow_batch(
        matrices: EmbeddingMatrices,
        batch: ContextBatch,
        negatives: np.ndarray
) -> BatchResult:
    '''
    CBOW loss and gradients.  The score of a candidate t is

        s(t) = (1/n) sum_j W'_slot(j)[t] . W[context_j]

    With a single slot (classic CBOW) this is W'[t] . mean(W[context]).
    Order-aware CBOW scores each context token against the output matrix of
    its offset.

    Args:
        matrices (EmbeddingMatrices): The parameters (not modified)
        batch (ContextBatch): B padded examples
        negatives (np.ndarray): (B, K) negative ids

    Returns:
        BatchResult: The loss and gradients

    Raises:
        None
    '''
    _w, _wo = matrices.input, matrices.output
    _scale = batch.mask / batch.counts[:, np.newaxis]      # (B, C)

    _x = _w[batch.contexts]                                            # (B, C, d)
    _u_pos = _wo[batch.slots, batch.centers[:, np.newaxis]]            # (B, C, d)
    _u_neg = _wo[batch.slots[:, np.newaxis, :], negatives[:, :, np.newaxis]]  # (B, K, C, d)

    _s_pos = np.einsum("bc,bcd,bcd->b", _scale, _u_pos, _x)
    _s_neg = np.einsum("bc,bkcd,bcd->bk", _scale, _u_neg, _x)

    _loss = np.logaddexp(0.0, -_s_pos).sum() + np.logaddexp(0.0, _s_neg).sum()

    _g_pos = expit(_s_pos) - 1.0
    _g_neg = expit(_s_neg)

    _grad_x = _scale[:, :, np.newaxis] * (
        _g_pos[:, np.newaxis, np.newaxis] * _u_pos
        + np.einsum("bk,bkcd->bcd", _g_neg, _u_neg)
    )
    _grad_pos = (_scale * _g_pos[:, np.newaxis])[:, :, np.newaxis] * _x
    _grad_neg = (
        _g_neg[:, :, np.newaxis] * _scale[:, np.newaxis, :]
    )[:, :, :, np.newaxis] * _x[:, np.newaxis, :, :]

    _b, _c = batch.contexts.shape
    _k = negatives.shape[1]
    _d = _w.shape[1]

    _neg_slots = np.broadcast_to(batch.slots[:, np.newaxis, :], (_b, _k, _c))
    _neg_rows = np.broadcast_to(negatives[:, :, np.newaxis], (_b, _k, _c))
    _pos_rows = np.broadcast_to(batch.centers[:, np.newaxis], (_b, _c))

    return BatchResult(
        loss=float(_loss),
        input_rows=batch.contexts.reshape(-1),
        input_grad=_grad_x.reshape(-1, _d),
        output_slots=np.concatenate([batch.slots.reshape(-1), _neg_slots.reshape(-1)]),
        output_rows=np.concatenate([_pos_rows.reshape(-1), _neg_rows.reshape(-1)]),
        output_grad=np.concatenate([_grad_pos.reshape(-1, _d), _grad_neg.reshape(-1, _d)])
    )


#
# apply_gradients
#
def apply_gradients(
        matrices: EmbeddingMatrices,
        result: BatchResult,
        learning_rate: float
):
    ''' One SGD step with the gradients of a batch (rows may repeat) '''
    np.add.at(matrices.input, result.input_rows, -learning_rate * result.input_grad)
    np.add.at(
        matrices.output,
        (result.output_slots, result.output_rows),
        -learning_rate * result.output_grad
    )


#
# pair_loss_and_gradients
#
def pair_loss_and_gradients(
        matrices: EmbeddingMatrices | None = None,
        pair: TrainingPair | ContextExample | None = None,
        negatives: Sequence[int] = (),
        model: ModelType | None = None
) -> PairGradients:
    '''
    Negative sampling loss of one example and its gradient for every
    touched row

    For skip-gram models the example is a TrainingPair and the output matrix
    is the one of the pair's offset.  For CBOW models it is a ContextExample
    (a TrainingPair is taken as a one token window).

    Args:
        matrices (EmbeddingMatrices): The parameters (not modified)
        pair (TrainingPair | ContextExample): The example
        negatives (Sequence): Negative ids (may be empty)
        model (ModelType): Defaults to the model of the matrices

    Returns:
        PairGradients: The loss and gradients of the loss

    Raises:
        AssertionError:
            When an id or offset is out of range
    '''
    assert isinstance(matrices, EmbeddingMatrices), "matrices are required"

    _model = matrices.model if model is None else to_enum(model, ModelType, "model")
    if _model.is_order_aware != matrices.model.is_order_aware:
        raise AssertionError(f"matrices were built for {matrices.model.value}")

    _negatives = np.asarray(list(negatives), dtype=np.int64).reshape(1, -1)

    if _model.is_cbow:
        _example = ContextExample.from_pair(pair) if isinstance(pair, TrainingPair) else pair
        assert isinstance(_example, ContextExample), "a CBOW example is required"

        matrices.check_ids(_example.center, _example.contexts, _negatives)
        _slots = [matrices.output_index(_r) for _r in _example.offsets]
        _count = len(_example.contexts)
        _result = cbow_batch(
            matrices,
            ContextBatch(
                centers=np.asarray([_example.center], dtype=np.int64),
                contexts=np.asarray([_example.contexts], dtype=np.int64),
                slots=np.asarray([_slots], dtype=np.int64),
                mask=np.ones((1, _count)),
                counts=np.asarray([float(_count)])
            ),
            _negatives
        )

    else:
        assert isinstance(pair, TrainingPair), "a training pair is required"

        matrices.check_ids(pair.center, pair.context, _negatives)
        _result = sg_batch(
            matrices,
            SkipGramBatch(
                centers=np.asarray([pair.center], dtype=np.int64),
                contexts=np.asarray([pair.context], dtype=np.int64),
                slots=np.asarray([matrices.output_index(pair.offset)], dtype=np.int64)
            ),
            _negatives
        )

    _grads = PairGradients(loss=_result.loss)
    for _row, _grad in zip(_result.input_rows, _result.input_grad):
        _key = int(_row)
        _grads.input[_key] = _grads.input.get(_key, 0.0) + _grad

    for _slot, _row, _grad in zip(_result.output_slots, _result.output_rows, _result.output_grad):
        _key = (int(_slot), int(_row))
        _grads.output[_key] = _grads.output.get(_key, 0.0) + _grad

    return _grads


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
