#!/usr/bin/env python3
'''
Vector Store

Embedding store: token vectors in word2vec text format with cosine
nearest neighbour and 3CosAdd analogy queries.

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
from appkgvec.base import (
    DEFAULT_LOGGER_NAME,
    AppKGVecBaseClass,
    open_text,
    write_text,
)
from appkgvec.exceptions import EmbeddingFormatError
from appkgvec.validation import check_int, closest_match

# System Modules
import math
import numpy as np
from applogging.logging import get_logger

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
Neighbour = tuple[str, float]


#
# Constants
#
FLOAT_FORMAT = "%.9g"
HINT_COUNT = 3


#
# Global Variables
#


###########################################################################
#
# Module Functions
#
###########################################################################
#
# cosine
#
def cosine(u: Sequence[float] | np.ndarray = (), v: Sequence[float] | np.ndarray = ()) -> float:
    '''
    Cosine similarity of two vectors

    Args:
        u (array like): A vector
        v (array like): A vector of the same length

    Returns:
        float: u.v / (|u| |v|) in [-1, 1], or 0.0 (with a logged warning)
            if either vector has zero norm

    Raises:
        AssertionError:
            When the lengths differ
    '''
    _u = np.asarray(u, dtype=np.float64)
    _v = np.asarray(v, dtype=np.float64)
    if _u.shape != _v.shape:
        raise AssertionError(f"dimension mismatch: {_u.shape} vs {_v.shape}")

    _norm = float(np.linalg.norm(_u) * np.linalg.norm(_v))
    if _norm == 0.0:
        get_logger(name=DEFAULT_LOGGER_NAME).warning(
            "cosine of a zero-norm vector is defined as 0"
        )
        return 0.0

    return float(np.clip(np.dot(_u, _v) / _norm, -1.0, 1.0))


#
# format_neighbours
#
def format_neighbours(query: str = "", neighbours: Iterable[Neighbour] = ()) -> str:
    '''
    A ranked neighbour listing: the query then one '#  token  score' row each

    Args:
        query (str): The query description
        neighbours (Iterable): (token, score) pairs, best first

    Returns:
        str: The listing (newline terminated)

    Raises:
        None
    '''
    _rows = [f"{query}"]
    for _rank, (_token, _score) in enumerate(neighbours, start=1):
        _rows.append(f"{_rank:>2}  {_token}  {_score:.4f}")

    return "\n".join(_rows) + "\n"


###########################################################################
#
# EmbeddingStore Class Definition
#
###########################################################################
class EmbeddingStore(AppKGVecBaseClass):
    '''
    An immutable set of token vectors kept in file order.

    Attributes:
        dim (int) [ReadOnly]: The vector width
        tokens (list) [ReadOnly]: The tokens in file order
        matrix (np.ndarray) [ReadOnly]: The (V, dim) vectors (read only view)
    '''
    #
    # __init__
    #
    def __init__(
            self,
            *args,
            tokens: Sequence[str] = (),
            vectors: np.ndarray | Sequence[Sequence[float]] | None = None,
            **kwargs
    ):
        '''
        Initialises the instance.

        Args:
            *args (Undef): Unnamed arguments to be passed to the constructor
                of the inherited process
            tokens (Sequence): The tokens
            vectors (array like): One row per token
            **kwargs (Undef): Keyword arguments to be passed to the constructor
                of the inherited process

        Returns:
            None

        Raises:
            ValueError:
                When the shapes disagree, a token repeats or contains
                whitespace, or a value is not finite
        '''
        super().__init__(*args, **kwargs)

        _matrix = np.array(
            [] if vectors is None else vectors, dtype=np.float64, ndmin=2
        )
        if len(tokens) == 0: _matrix = _matrix.reshape(0, _matrix.shape[-1])

        if _matrix.shape[0] != len(tokens):
            raise ValueError(f"{len(tokens)} tokens but {_matrix.shape[0]} vectors")

        if not np.all(np.isfinite(_matrix)):
            raise ValueError("vectors must be finite")

        # Private Attributes
        self._tokens = [str(_t) for _t in tokens]
        self._index = {_t: _i for _i, _t in enumerate(self._tokens)}
        if len(self._index) != len(self._tokens):
            raise ValueError("tokens must be unique")

        for _token in self._tokens:
            if not _token or any(_c.isspace() for _c in _token):
                raise ValueError(f"token {_token!r} is empty or contains whitespace")

        _matrix.setflags(write=False)
        self._matrix = _matrix

        _norms = np.linalg.norm(_matrix, axis=1)
        self._zero = _norms == 0.0
        if np.any(self._zero):
            self._logger.warning(
                f"{int(self._zero.sum())} zero-norm vector(s), their cosines are scored as 0"
            )

        self._unit = np.divide(
            _matrix,
            _norms[:, np.newaxis],
            out=np.zeros_like(_matrix),
            where=~self._zero[:, np.newaxis]
        )

        # Lexicographic rank of every token, used to break score ties
        self._lex_rank = np.empty(len(self._tokens), dtype=np.int64)
        self._lex_rank[np.argsort(np.asarray(self._tokens, dtype=object), kind="stable")] = \
            np.arange(len(self._tokens))

        # Attributes


    #
    # from_matrix
    #
    @classmethod
    def from_matrix(
            cls,
            tokens: Sequence[str] = (),
            matrix: np.ndarray | None = None,
            **kwargs
    ) -> EmbeddingStore:
        ''' Create a store from a token list and a (V, d) matrix '''
        return cls(tokens=tokens, vectors=matrix, **kwargs)


    ###########################################################################
    #
    # Properties
    #
    ###########################################################################
    @property
    def dim(self) -> int:
        ''' The vector width '''
        return self._matrix.shape[1]

    @property
    def tokens(self) -> list[str]:
        ''' The tokens in file order '''
        return list(self._tokens)

    @property
    def matrix(self) -> np.ndarray:
        ''' The vectors (read only) '''
        return self._matrix


    ###########################################################################
    #
    # Lookups
    #
    ###########################################################################
    def __len__(self) -> int:
        return len(self._tokens)

    def __contains__(self, token: object) -> bool:
        return token in self._index

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EmbeddingStore): return NotImplemented
        return self._tokens == other._tokens and np.array_equal(self._matrix, other._matrix)


    #
    # index
    #
    def index(self, token: str = "") -> int:
        '''
        The row of a token

        Args:
            token (str): The token

        Returns:
            int: The row

        Raises:
            KeyError:
                When the token is unknown.  The message lists the lexically
                closest tokens
        '''
        try:
            return self._index[token]

        except KeyError:
            _hint = closest_match(token, self._tokens, count=HINT_COUNT)
            _msg = f"unknown token {token!r}"
            if _hint: _msg += f"; closest matches: {', '.join(_hint)}"
            raise KeyError(_msg) from None


    #
    # vector
    #
    def vector(self, token: str = "") -> np.ndarray:
        ''' The vector of a token (KeyError with hints if unknown) '''
        return self._matrix[self.index(token)]


    ###########################################################################
    #
    # Queries
    #
    ###########################################################################
    #
    # similarities
    #
    def similarities(self, query: Sequence[float] | np.ndarray = ()) -> np.ndarray:
        '''
        Cosine of a query vector against every stored vector

        Args:
            query (array like): A vector of length dim

        Returns:
            np.ndarray: One score per token (0 for zero-norm vectors)

        Raises:
            AssertionError:
                When the query length is not dim
        '''
        _query = np.asarray(query, dtype=np.float64)
        if _query.shape != (self.dim,):
            raise AssertionError(f"dimension mismatch: {_query.shape} vs ({self.dim},)")

        _norm = float(np.linalg.norm(_query))
        if _norm == 0.0:
            self._logger.warning("zero-norm query vector, scored as 0")
            return np.zeros(len(self._tokens))

        return np.clip(self._unit @ (_query / _norm), -1.0, 1.0)


    #
    # rank
    #
    def rank(
            self,
            scores: np.ndarray,
            k: int = 1,
            exclude: Iterable[int] = ()
    ) -> list[Neighbour]:
        '''
        The top k rows by descending score, ties by token order

        Args:
            scores (np.ndarray): One score per token
            k (int): How many to return
            exclude (Iterable): Rows never returned

        Returns:
            list: (token, score) pairs, best first

        Raises:
            ValueError:
                When k < 1
        '''
        check_int(k, "k", minimum=1)

        _order = np.lexsort((self._lex_rank, -scores))
        _excluded = set(exclude)

        _ranked = []
        for _row in _order:
            if _row in _excluded: continue

            _ranked.append((self._tokens[_row], float(scores[_row])))
            if len(_ranked) == k: break

        return _ranked


    #
    # nearest
    #
    def nearest(self, token: str = "", k: int = 5) -> list[Neighbour]:
        '''
        The k tokens most similar to a token (by cosine, itself excluded)

        Args:
            token (str): The query token
            k (int): How many neighbours to return

        Returns:
            list: (token, score) pairs, best first, ties in token order

        Raises:
            KeyError:
                When the token is unknown
            ValueError:
                When k < 1
        '''
        check_int(k, "k", minimum=1)
        _row = self.index(token)

        return self.rank(self.similarities(self._matrix[_row]), k=k, exclude=(_row,))


    #
    # analogy
    #
    def analogy(
            self,
            a: str = "",
            a_star: str = "",
            b: str = "",
            k: int = 1
    ) -> list[Neighbour]:
        '''
        Solve "a is to a_star as b is to ?" with 3CosAdd

        Candidates are ranked by cosine to a_star - a + b; the three query
        tokens are never returned.

        Args:
            a (str): The first token of the known pair
            a_star (str): The second token of the known pair
            b (str): The first token of the open pair
            k (int): How many candidates to return

        Returns:
            list: (token, score) pairs, best first

        Raises:
            KeyError:
                When a query token is unknown
            ValueError:
                When k < 1
        '''
        check_int(k, "k", minimum=1)
        _rows = [self.index(a), self.index(a_star), self.index(b)]

        _target = self._matrix[_rows[1]] - self._matrix[_rows[0]] + self._matrix[_rows[2]]

        return self.rank(self.similarities(_target), k=k, exclude=_rows)


    ###########################################################################
    #
    # Persistence
    #
    ###########################################################################
    #
    # save
    #
    def save(self, path: str = "") -> str:
        '''
        Write the store in word2vec text format (gzip if path ends in .gz)

        Args:
            path (str): The file to write

        Returns:
            str: The path

        Raises:
            AssertionError:
                When path is not a non-empty string
        '''
        with write_text(path) as _stream:
            _stream.write(f"{len(self._tokens)} {self.dim}\n")
            for _token, _row in zip(self._tokens, self._matrix):
                _stream.write(_token)
                for _value in _row:
                    _stream.write(" ")
                    _stream.write(FLOAT_FORMAT % _value)
                _stream.write("\n")

        self._logger.info(f"Saved {len(self._tokens)} x {self.dim} embeddings to {path}")

        return path


    #
    # load
    #
    @classmethod
    def load(cls, path: str = "", **kwargs) -> EmbeddingStore:
        '''
        Read a store in word2vec text format

        Args:
            path (str): The file to read (gzip if it ends in .gz)
            **kwargs: Logger arguments for the store

        Returns:
            EmbeddingStore: The store

        Raises:
            FileNotFoundError:
                When the file does not exist
            EmbeddingFormatError:
                When the header is malformed or disagrees with the body, a
                vector has the wrong width or a non-finite value, or a token
                repeats
        '''
        with open_text(path) as _stream:
            return cls.parse(_stream, **kwargs)


    #
    # parse
    #
    @classmethod
    def parse(cls, lines: Iterable[str] = (), **kwargs) -> EmbeddingStore:
        ''' Read a store from word2vec text lines (see load) '''
        _iter = iter(lines)
        _header = next(_iter, "").split()
        if len(_header) != 2 or not all(_h.isdigit() for _h in _header):
            raise EmbeddingFormatError("header must be '<count> <dim>'", line_number=1)

        _count, _dim = int(_header[0]), int(_header[1])
        if _dim < 1: raise EmbeddingFormatError("dim must be >= 1", line_number=1)

        _tokens: list[str] = []
        _seen: set[str] = set()
        _matrix = np.empty((_count, _dim), dtype=np.float64)

        _line_number = 1
        for _line_number, _line in enumerate(_iter, start=2):
            _fields = _line.split()
            if not _fields: continue

            if len(_tokens) == _count:
                raise EmbeddingFormatError(
                    f"more vectors than the {_count} in the header",
                    line_number=_line_number
                )

            if len(_fields) != _dim + 1:
                raise EmbeddingFormatError(
                    f"expected {_dim} values, got {len(_fields) - 1}",
                    line_number=_line_number
                )

            _token = _fields[0]
            if _token in _seen:
                raise EmbeddingFormatError(f"duplicate token {_token!r}", line_number=_line_number)

            try:
                _values = [float(_f) for _f in _fields[1:]]
            except ValueError as _err:
                raise EmbeddingFormatError(str(_err), line_number=_line_number) from None

            if not all(math.isfinite(_v) for _v in _values):
                raise EmbeddingFormatError("non-finite value", line_number=_line_number)

            _matrix[len(_tokens)] = _values
            _tokens.append(_token)
            _seen.add(_token)

        if len(_tokens) != _count:
            raise EmbeddingFormatError(
                f"header declares {_count} vectors, found {len(_tokens)}",
                line_number=_line_number + 1
            )

        return cls(tokens=_tokens, vectors=_matrix, **kwargs)


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
