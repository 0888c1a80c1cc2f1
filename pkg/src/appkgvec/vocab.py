#!/usr/bin/env python3
'''
Vocabulary

Token vocabulary for a walk corpus: dense ids, counts, the negative
sampling distribution and frequent token subsampling.

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
from appkgvec.exceptions import VocabularyError
from appkgvec.validation import check_float, check_int
from appkgvec.walks import read_corpus

# System Modules
import numpy as np
from collections import Counter

# Local app modules

# Imports for python variable type hints
from typing import Iterable, Sequence


###########################################################################
#
# Module Specific Items
#
###########################################################################
#
# Types
#
Corpus = str | Iterable[Sequence[str] | str]


#
# Constants
#
DEFAULT_EXPONENT = 0.75

# Negative draws that keep hitting the target are given up on after this
MAX_RESAMPLE = 100


#
# Global Variables
#


###########################################################################
#
# Vocabulary Class Definition
#
###########################################################################
class Vocabulary():
    '''
    Dense token ids ordered by descending count (first seen order for equal
    counts), with the cumulative negative sampling distribution built from
    the counts raised to the smoothing exponent.

    Attributes:
        tokens (list) [ReadOnly]: id -> token
        counts (np.ndarray) [ReadOnly]: id -> corpus count
        cum_table (np.ndarray) [ReadOnly]: Non-decreasing, last entry is 1.0
        exponent (float) [ReadOnly]: The smoothing exponent
        total (int) [ReadOnly]: The sum of the counts
    '''
    #
    # __init__
    #
    def __init__(
            self,
            tokens: Sequence[str] = (),
            counts: Sequence[int] = (),
            exponent: float = DEFAULT_EXPONENT
    ):
        '''
        Initialises the instance.

        Args:
            tokens (Sequence): The tokens, in id order
            counts (Sequence): The count of each token
            exponent (float): The smoothing exponent for negative sampling

        Returns:
            None

        Raises:
            VocabularyError:
                When there are no tokens
            ValueError:
                When tokens and counts differ in length, a count is not
                positive or a token repeats
        '''
        if not tokens: raise VocabularyError("no trainable tokens")
        if len(tokens) != len(counts):
            raise ValueError("tokens and counts must be the same length")

        check_float(exponent, "exponent", minimum=0.0)

        # Private Attributes
        self._tokens = list(tokens)
        self._index = {_t: _i for _i, _t in enumerate(self._tokens)}
        if len(self._index) != len(self._tokens):
            raise ValueError("tokens must be unique")

        self._counts = np.asarray(counts, dtype=np.int64)
        if np.any(self._counts < 1): raise ValueError("counts must be >= 1")

        self._exponent = float(exponent)

        _weights = self._counts.astype(np.float64) ** self._exponent
        self._cum_table = np.cumsum(_weights) / _weights.sum()
        self._cum_table[-1] = 1.0

        # Attributes


    #
    # from_counts
    #
    @classmethod
    def from_counts(
            cls,
            counts: dict[str, int] | None = None,
            min_count: int = 0,
            exponent: float = DEFAULT_EXPONENT
    ) -> Vocabulary:
        '''
        Build a vocabulary from token counts (in first seen order)

        Args:
            counts (dict): token -> count, insertion order is first seen order
            min_count (int): Tokens with a smaller count are dropped
            exponent (float): The smoothing exponent

        Returns:
            Vocabulary: The vocabulary

        Raises:
            VocabularyError:
                When no token survives
        '''
        assert isinstance(counts, dict), "counts must be a dict"
        check_int(min_count, "min_count", minimum=0)

        _kept = [(_t, _c) for _t, _c in counts.items() if _c >= max(min_count, 1)]

        # sorted() is stable so equal counts keep first seen order
        _kept = sorted(_kept, key=lambda _item: -_item[1])

        return cls(
            tokens=[_t for _t, _ in _kept],
            counts=[_c for _, _c in _kept],
            exponent=exponent
        )


    ###########################################################################
    #
    # Properties
    #
    ###########################################################################
    @property
    def tokens(self) -> list[str]:
        return list(self._tokens)

    @property
    def counts(self) -> np.ndarray:
        return self._counts.copy()

    @property
    def cum_table(self) -> np.ndarray:
        return self._cum_table.copy()

    @property
    def exponent(self) -> float:
        return self._exponent

    @property
    def total(self) -> int:
        return int(self._counts.sum())


    ###########################################################################
    #
    # Lookups
    #
    ###########################################################################
    def __len__(self) -> int:
        return len(self._tokens)

    def __contains__(self, token: object) -> bool:
        return token in self._index

    def __iter__(self):
        return iter(self._tokens)

    def id(self, token: str = "") -> int:
        ''' The id of a token (KeyError if unknown) '''
        return self._index[token]

    def token(self, id: int = 0) -> str:
        ''' The token for an id '''
        return self._tokens[id]

    def count(self, token: str = "") -> int:
        ''' The corpus count of a token '''
        return int(self._counts[self._index[token]])


    #
    # encode
    #
    def encode(self, tokens: Iterable[str] = ()) -> np.ndarray:
        '''
        Convert tokens to ids, dropping tokens not in the vocabulary

        Args:
            tokens (Iterable): The tokens

        Returns:
            np.ndarray: int64 ids

        Raises:
            None
        '''
        return np.fromiter(
            (self._index[_t] for _t in tokens if _t in self._index),
            dtype=np.int64
        )


    ###########################################################################
    #
    # Sampling
    #
    ###########################################################################
    #
    # probabilities
    #
    def probabilities(self) -> np.ndarray:
        ''' The negative sampling probability of each id '''
        return np.diff(self._cum_table, prepend=0.0)


    #
    # sample_negatives
    #
    def sample_negatives(
            self,
            rng: np.random.Generator | None = None,
            size: int | tuple[int, ...] = 1,
            exclude: np.ndarray | None = None
    ) -> np.ndarray:
        '''
        Draw ids from the smoothed unigram distribution

        Args:
            rng (np.random.Generator): The random source
            size (int | tuple): The shape of the result
            exclude (np.ndarray): Optional ids, one per row of the result
                (shape = size[:-1]), that are redrawn if hit

        Returns:
            np.ndarray: int64 ids of the requested shape

        Raises:
            AssertionError:
                When rng is not supplied
        '''
        assert isinstance(rng, np.random.Generator), "a random generator is required"

        _last = len(self._tokens) - 1
        _ids = np.searchsorted(self._cum_table, rng.random(size), side="right")
        _ids = np.minimum(_ids, _last).astype(np.int64)

        if exclude is None or _last == 0: return _ids

        _exclude = np.asarray(exclude, dtype=np.int64)[..., np.newaxis]
        for _ in range(MAX_RESAMPLE):
            _hits = _ids == _exclude
            _count = int(_hits.sum())
            if _count == 0: break

            _redraw = np.searchsorted(self._cum_table, rng.random(_count), side="right")
            _ids[_hits] = np.minimum(_redraw, _last)

        return _ids


    #
    # keep_probabilities
    #
    def keep_probabilities(self, sample: float = 0.0) -> np.ndarray:
        '''
        The word2vec probability of keeping each id when subsampling

        Args:
            sample (float): The threshold (0 disables subsampling)

        Returns:
            np.ndarray: Probabilities in (0, 1]

        Raises:
            None
        '''
        check_float(sample, "sample", minimum=0.0)
        if sample == 0.0: return np.ones(len(self._tokens), dtype=np.float64)

        _threshold = sample * self.total
        _counts = self._counts.astype(np.float64)
        _keep = (np.sqrt(_counts / _threshold) + 1.0) * (_threshold / _counts)

        return np.minimum(_keep, 1.0)


###########################################################################
#
# Module Functions
#
###########################################################################
#
# count_tokens
#
def count_tokens(corpus: Corpus = ()) -> dict[str, int]:
    '''
    Count the tokens of a corpus (path, lines or token lists)

    Args:
        corpus (Corpus): A corpus file path, or an iterable of lines or of
            token sequences

    Returns:
        dict: token -> count, in first seen order

    Raises:
        FileNotFoundError:
            When a corpus path does not exist
    '''
    _counter: Counter[str] = Counter()

    if isinstance(corpus, str):
        for _tokens in read_corpus(corpus): _counter.update(_tokens)
        return dict(_counter)

    for _sentence in corpus:
        _counter.update(_sentence.split() if isinstance(_sentence, str) else _sentence)

    return dict(_counter)


#
# build_vocab
#
def build_vocab(
        corpus: Corpus = (),
        min_count: int = 0,
        exponent: float = DEFAULT_EXPONENT
) -> Vocabulary:
    '''
    Build the vocabulary of a walk corpus

    Args:
        corpus (Corpus): A corpus file path, or an iterable of lines or of
            token sequences
        min_count (int): Tokens seen fewer times are dropped
        exponent (float): The smoothing exponent for negative sampling

    Returns:
        Vocabulary: The vocabulary

    Raises:
        VocabularyError:
            When the corpus has no token with at least min_count occurrences
    '''
    return Vocabulary.from_counts(
        counts=count_tokens(corpus),
        min_count=min_count,
        exponent=exponent
    )


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
