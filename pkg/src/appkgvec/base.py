#!/usr/bin/env python3
'''
AppKGVec - Base Class

Shared plumbing for the walk, training, store and evaluation components:
logger set up, text file access (with transparent gzip), artifact
provenance and seed derivation.

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
from appkgvec import __version__

# System Modules
import gzip
import hashlib
import io
import os
from contextlib import contextmanager
from applogging.logging import get_logger, init_console_logger
from appcore.helpers import timestamp
from appcore.conversion import to_json

# Local app modules

# Imports for python variable type hints
from typing import Any, IO, Iterator


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
DEFAULT_LOGGER_NAME = "AppKGVec"
TOOL_NAME = "appkgvec"
TOOL_VERSION = __version__

ENCODE_METHOD = "utf-8"
GZIP_SUFFIX = ".gz"
INCOMPLETE_SUFFIX = ".incomplete"
PROVENANCE_SUFFIX = ".provenance.json"

# Seeds are kept within 63 bits so they survive any signed 64-bit store
SEED_MASK = (1 << 63) - 1


#
# Global Variables
#


###########################################################################
#
# File Helpers
#
###########################################################################
#
# is_compressed
#
def is_compressed(path: str = "") -> bool:
    ''' True if the path names a gzip file (by suffix) '''
    return str(path).endswith(GZIP_SUFFIX)


#
# open_text
#
def open_text(path: str = "") -> IO[str]:
    '''
    Open a UTF-8 text file for reading, decompressing if the name ends in .gz

    Args:
        path (str): The file to open

    Returns:
        IO[str]: A text stream

    Raises:
        AssertionError:
            When path is not a non-empty string
        FileNotFoundError:
            When the file does not exist
    '''
    assert isinstance(path, str), "path must be a string"
    assert path, "a path is required"

    if is_compressed(path):
        return gzip.open(path, mode="rt", encoding=ENCODE_METHOD)

    return open(path, mode="r", encoding=ENCODE_METHOD)


#
# write_text
#
@contextmanager
def write_text(path: str = "") -> Iterator[IO[str]]:
    '''
    Write a UTF-8 text file (LF line endings, gzip if the name ends in .gz)

    The data is written to '<path>.incomplete' and only renamed to the final
    name when the block completes.  An interrupted or failed write leaves the
    '.incomplete' file behind.  Compressed output carries no file name or
    modification time so identical content gives identical bytes.

    Args:
        path (str): The final name of the file

    Yields:
        IO[str]: A text stream to write to

    Raises:
        AssertionError:
            When path is not a non-empty string
    '''
    assert isinstance(path, str), "path must be a string"
    assert path, "a path is required"

    _tmp_path = f"{path}{INCOMPLETE_SUFFIX}"
    _raw = open(_tmp_path, mode="wb")
    _gz = None

    if is_compressed(path):
        _gz = gzip.GzipFile(filename="", mode="wb", fileobj=_raw, mtime=0)
        _stream = io.TextIOWrapper(_gz, encoding=ENCODE_METHOD, newline="\n")
    else:
        _stream = io.TextIOWrapper(_raw, encoding=ENCODE_METHOD, newline="\n")

    try:
        yield _stream

    finally:
        # Flush everything down to the raw file (detach leaves it open)
        _stream.detach()
        if _gz is not None: _gz.close()
        _raw.close()

    os.replace(_tmp_path, path)


#
# content_digest
#
def content_digest(paths: list[str] | None = None) -> str:
    '''
    Compute a SHA-256 digest over the content of the given files (in order)

    Args:
        paths (list): The files to include

    Returns:
        str: The hex digest (empty string if no paths)

    Raises:
        FileNotFoundError:
            When one of the files does not exist
    '''
    if not paths: return ""

    _hash = hashlib.sha256()
    for _path in paths:
        with open(_path, mode="rb") as _file:
            for _block in iter(lambda: _file.read(1 << 20), b""):
                _hash.update(_block)

    return _hash.hexdigest()


#
# write_provenance
#
def write_provenance(
        artifact: str = "",
        config: dict | None = None,
        seed: int = 0,
        inputs: list[str] | None = None,
        extra: dict | None = None
) -> str:
    '''
    Write the provenance record for an artifact as a JSON sidecar file

    Args:
        artifact (str): Path of the artifact being described
        config (dict): The fully resolved configuration
        seed (int): The global seed
        inputs (list): Input files the artifact was derived from
        extra (dict): Additional items to record (eg statistics)

    Returns:
        str: The path of the provenance file

    Raises:
        AssertionError:
            When artifact is not a non-empty string
    '''
    assert isinstance(artifact, str), "artifact must be a string"
    assert artifact, "an artifact path is required"

    _record: dict[str, Any] = {
        "tool": TOOL_NAME,
        "version": TOOL_VERSION,
        "artifact": os.path.basename(artifact),
        "created": timestamp(),
        "seed": seed,
        "inputs": list(inputs or []),
        "input_digest": content_digest(list(inputs or [])),
        "config": dict(config or {}),
    }
    if extra: _record.update(extra)

    _path = f"{artifact}{PROVENANCE_SUFFIX}"
    with write_text(_path) as _stream:
        _stream.write(to_json(data=_record, skip_invalid=True, container=False))
        _stream.write("\n")

    return _path


###########################################################################
#
# Seeds
#
###########################################################################
#
# derive_seed
#
def derive_seed(seed: int = 0, name: str = "") -> int:
    '''
    Derive a named sub-seed from the global seed

    The derivation is a keyed digest so it is stable across processes and
    python versions (unlike hash()).

    Args:
        seed (int): The global seed
        name (str): The name of the component (eg "walk", "init")

    Returns:
        int: A non-negative 63 bit seed

    Raises:
        AssertionError:
            When seed is not an integer or name is not a string
    '''
    assert isinstance(seed, int), "seed must be an integer"
    assert isinstance(name, str), "name must be a string"

    _digest = hashlib.blake2b(
        f"{seed}:{name}".encode(ENCODE_METHOD),
        digest_size=8
    ).digest()

    return int.from_bytes(_digest, "big") & SEED_MASK


###########################################################################
#
# AppKGVecBaseClass Class Definition
#
###########################################################################
class AppKGVecBaseClass():
    '''
    The base class to be used for the long lived components (readers, walk
    engine, trainer, store, benchmark runner)

    Attributes:
        logger_name (str) [ReadOnly]: The name of the logger in use
        logger_level (str) [ReadOnly]: The level set on a created logger
    '''

    #
    # __init__
    #
    def __init__(
            self,
            logger_name: str = "",
            logger_level: str = "CRITICAL"
    ):
        '''
        Initialises the instance.

        Args:
            logger_name (str): The name of the logger to use.  If empty (or
                not a string) then a logger will be created to log to the
                console
            logger_level (str): If no logger name is provided, the created
                logger will be set to log events at or above this level (default
                = "CRITICAL")

        Returns:
            None

        Raises:
            None
        '''
        # Private Attributes
        self._logger_name = logger_name if isinstance(logger_name, str) else ""
        self._logger_level = logger_level

        if self._logger_name:
            self._logger = get_logger(name=self._logger_name)

        else:
            self._logger = init_console_logger(name=DEFAULT_LOGGER_NAME)
            self._logger.setLevel(level=logger_level)

        # Attributes


    ###########################################################################
    #
    # Properties
    #
    ###########################################################################
    #
    # logger_name
    #
    @property
    def logger_name(self) -> str:
        ''' The name of the logger passed in (empty if console logger) '''
        return self._logger_name


    #
    # logger_level
    #
    @property
    def logger_level(self) -> str:
        ''' The level for a created console logger '''
        return self._logger_level


    ###########################################################################
    #
    # Helpers
    #
    ###########################################################################
    #
    # _logger_kwargs
    #
    def _logger_kwargs(self) -> dict:
        '''
        The logger arguments to hand on to components created by this one

        Args:
            None

        Returns:
            dict: logger_name and logger_level keyword arguments

        Raises:
            None
        '''
        return {
            "logger_name": self._logger_name,
            "logger_level": self._logger_level
        }


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
