#!/usr/bin/env python3
'''
Gold Data

Gold standard data for the evaluation tasks and its tab separated file
formats.

  labels      token<TAB>label                     (one per line)
  rankings    anchor, then one token per line     (blank line between)
  quads       a<TAB>a_star<TAB>b<TAB>b_star        (one per line)
  pairs       token<TAB>token                     (one per line)
  documents   tok:w tok:w | tok:w | score          (one pair per line)

Blank lines (outside rankings) and lines starting with '#' are ignored.

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
from appkgvec.base import open_text, write_text
from appkgvec.exceptions import EvaluationError

# System Modules
import math
from dataclasses import dataclass, field

# Local app modules

# Imports for python variable type hints
from typing import Iterable, Iterator


###########################################################################
#
# Module Specific Items
#
###########################################################################
#
# Types
#
@dataclass
class GoldLabelSet():
    '''
    Entity token -> class label, or -> numeric target when numeric is set
    '''
    labels: dict[str, str | float] = field(default_factory=dict)
    numeric: bool = False

    def __post_init__(self):
        if self.numeric:
            for _token, _value in self.labels.items():
                if isinstance(_value, bool) or not isinstance(_value, (int, float)) \
                        or not math.isfinite(_value):
                    raise EvaluationError(f"target for {_token} must be a finite number")

    def __len__(self) -> int:
        return len(self.labels)

    def classes(self) -> list[str]:
        ''' The distinct labels, sorted '''
        return sorted({str(_v) for _v in self.labels.values()})


@dataclass(frozen=True)
class GoldRanking():
    ''' An anchor and its comparison entities, most related first '''
    anchor: str
    ranking: tuple[str, ...]

    def __post_init__(self):
        if len(self.ranking) < 2:
            raise EvaluationError(f"ranking for {self.anchor} needs at least 2 entities")

        if len(set(self.ranking)) != len(self.ranking):
            raise EvaluationError(f"ranking for {self.anchor} has duplicates")


@dataclass(frozen=True)
class AnalogyQuad():
    ''' a is to a_star as b is to b_star '''
    a: str
    a_star: str
    b: str
    b_star: str

    def __post_init__(self):
        if len({self.a, self.a_star, self.b, self.b_star}) != 4:
            raise EvaluationError(f"analogy tokens must be distinct: {tuple(self)}")

    def __iter__(self) -> Iterator[str]:
        return iter((self.a, self.a_star, self.b, self.b_star))


@dataclass(frozen=True)
class DocumentPair():
    ''' Two weighted entity sets and their gold similarity '''
    first: tuple[tuple[str, float], ...]
    second: tuple[tuple[str, float], ...]
    score: float

    def __post_init__(self):
        for _doc in (self.first, self.second):
            if not _doc: raise EvaluationError("a document needs at least one entity")

            for _token, _weight in _doc:
                if not _weight >= 0.0:
                    raise EvaluationError(f"weight of {_token} must be >= 0")

        if not math.isfinite(self.score):
            raise EvaluationError("gold score must be finite")


#
# Constants
#
COMMENT = "#"
FIELD_SEPARATOR = "\t"
DOCUMENT_SEPARATOR = "|"
WEIGHT_SEPARATOR = ":"


#
# Global Variables
#


###########################################################################
#
# Helpers
#
###########################################################################
def _records(path: str) -> Iterator[tuple[int, list[str]]]:
    ''' (line number, fields) of each non-blank, non-comment line '''
    with open_text(path) as _stream:
        for _line_number, _line in enumerate(_stream, start=1):
            _text = _line.strip()
            if not _text or _text.startswith(COMMENT): continue

            yield _line_number, _text.split(FIELD_SEPARATOR)


def _error(path: str, line_number: int, message: str) -> EvaluationError:
    return EvaluationError(f"{path} line {line_number}: {message}")


def _parse_document(text: str) -> tuple[tuple[str, float], ...]:
    # Every entry is token:weight, split at the last colon
    _entries = []
    for _item in text.split():
        _token, _sep, _weight = _item.rpartition(WEIGHT_SEPARATOR)
        if not _sep or not _token:
            raise ValueError(f"entry '{_item}' is not token{WEIGHT_SEPARATOR}weight")

        try:
            _entries.append((_token, float(_weight)))

        except ValueError:
            raise ValueError(f"entry '{_item}' has no weight after its last '{WEIGHT_SEPARATOR}'") from None

    return tuple(_entries)


###########################################################################
#
# Readers
#
###########################################################################
#
# read_labels
#
def read_labels(path: str = "", numeric: bool = False) -> GoldLabelSet:
    '''
    Read a label (or numeric target) file

    Args:
        path (str): The file
        numeric (bool): Parse the second column as a number

    Returns:
        GoldLabelSet: The labels

    Raises:
        EvaluationError:
            When a line does not have two fields, a token repeats or a
            numeric target does not parse
    '''
    _labels: dict[str, str | float] = {}
    for _line_number, _fields in _records(path):
        if len(_fields) != 2:
            raise _error(path, _line_number, "expected token<TAB>label")

        _token, _value = _fields[0].strip(), _fields[1].strip()
        if _token in _labels:
            raise _error(path, _line_number, f"duplicate token {_token}")

        if numeric:
            try:
                _labels[_token] = float(_value)
            except ValueError:
                raise _error(path, _line_number, f"target {_value!r} is not a number") from None
        else:
            _labels[_token] = _value

    return GoldLabelSet(labels=_labels, numeric=numeric)


#
# read_rankings
#
def read_rankings(path: str = "") -> list[GoldRanking]:
    '''
    Read a rankings file: blocks of an anchor line then the ranked tokens,
    separated by blank lines

    Args:
        path (str): The file

    Returns:
        list: The rankings in file order

    Raises:
        EvaluationError:
            When a block is too short or has duplicates
    '''
    _rankings: list[GoldRanking] = []
    _block: list[str] = []
    _start = 0

    def _close():
        if not _block: return
        try:
            _rankings.append(GoldRanking(anchor=_block[0], ranking=tuple(_block[1:])))
        except EvaluationError as _err:
            raise _error(path, _start, str(_err)) from None

    with open_text(path) as _stream:
        for _line_number, _line in enumerate(_stream, start=1):
            _text = _line.strip()
            if _text.startswith(COMMENT): continue

            if not _text:
                _close()
                _block = []
                continue

            if not _block: _start = _line_number
            _block.append(_text)

    _close()

    return _rankings


#
# read_quads
#
def read_quads(path: str = "") -> list[AnalogyQuad]:
    ''' Read an analogy file of four tokens per line '''
    _quads = []
    for _line_number, _fields in _records(path):
        _tokens = [_f for _f in " ".join(_fields).split() if _f]
        if len(_tokens) != 4:
            raise _error(path, _line_number, "expected 4 tokens")

        try:
            _quads.append(AnalogyQuad(*_tokens))
        except EvaluationError as _err:
            raise _error(path, _line_number, str(_err)) from None

    return _quads


#
# read_documents
#
def read_documents(path: str = "") -> list[DocumentPair]:
    '''
    Read a document pair file

    Each line is 'tok:weight ... | tok:weight ... | score'.  The weight is
    taken from after the last colon; a token without a numeric weight gets
    weight 1.

    Args:
        path (str): The file

    Returns:
        list: The pairs

    Raises:
        EvaluationError:
            When a line does not have three parts or the score does not parse
    '''
    _pairs = []
    with open_text(path) as _stream:
        for _line_number, _line in enumerate(_stream, start=1):
            _text = _line.strip()
            if not _text or _text.startswith(COMMENT): continue

            _parts = _text.split(DOCUMENT_SEPARATOR)
            if len(_parts) != 3:
                raise _error(path, _line_number, "expected 'docA | docB | score'")

            try:
                _pairs.append(DocumentPair(
                    first=_parse_document(_parts[0]),
                    second=_parse_document(_parts[1]),
                    score=float(_parts[2])
                ))
            except (ValueError, EvaluationError) as _err:
                raise _error(path, _line_number, str(_err)) from None

    return _pairs


#
# read_pairs
#
def read_pairs(path: str = "") -> list[tuple[str, str]]:
    ''' Read a file of token pairs (eg structural twins) '''
    _pairs = []
    for _line_number, _fields in _records(path):
        if len(_fields) != 2:
            raise _error(path, _line_number, "expected token<TAB>token")

        _pairs.append((_fields[0].strip(), _fields[1].strip()))

    return _pairs


###########################################################################
#
# Writers
#
###########################################################################
def write_labels(path: str = "", gold: GoldLabelSet | None = None) -> str:
    ''' Write a label or target file '''
    assert isinstance(gold, GoldLabelSet), "a label set is required"

    with write_text(path) as _stream:
        for _token, _value in gold.labels.items():
            _text = repr(float(_value)) if gold.numeric else str(_value)
            _stream.write(f"{_token}{FIELD_SEPARATOR}{_text}\n")

    return path


def write_rankings(path: str = "", rankings: Iterable[GoldRanking] = ()) -> str:
    ''' Write a rankings file '''
    with write_text(path) as _stream:
        _blocks = ["\n".join((_r.anchor,) + _r.ranking) + "\n" for _r in rankings]
        _stream.write("\n".join(_blocks))

    return path


def write_quads(path: str = "", quads: Iterable[AnalogyQuad] = ()) -> str:
    ''' Write an analogy file '''
    with write_text(path) as _stream:
        for _quad in quads:
            _stream.write(FIELD_SEPARATOR.join(_quad) + "\n")

    return path


def write_pairs(path: str = "", pairs: Iterable[tuple[str, str]] = ()) -> str:
    ''' Write a file of token pairs '''
    with write_text(path) as _stream:
        for _first, _second in pairs:
            _stream.write(f"{_first}{FIELD_SEPARATOR}{_second}\n")

    return path


def write_documents(path: str = "", pairs: Iterable[DocumentPair] = ()) -> str:
    ''' Write a document pair file '''
    def _doc(entries: tuple[tuple[str, float], ...]) -> str:
        return " ".join(f"{_t}{WEIGHT_SEPARATOR}{_w!r}" for _t, _w in entries)

    with write_text(path) as _stream:
        for _pair in pairs:
            _stream.write(
                f"{_doc(_pair.first)} {DOCUMENT_SEPARATOR} {_doc(_pair.second)} "
                f"{DOCUMENT_SEPARATOR} {_pair.score!r}\n"
            )

    return path


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
