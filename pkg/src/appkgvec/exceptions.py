#!/usr/bin/env python3
'''
Exceptions

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

# System Modules

# Local app modules

# Imports for python variable type hints


###########################################################################
#
# Graph / Walks
#
###########################################################################
#
# NTriplesParseError
#
class NTriplesParseError(ValueError):
    '''
    A line of N-Triples input could not be parsed

    Attributes:
        line_number (int): The 1-based line number of the offending line
        text (str): The offending line
    '''
    def __init__(self, message: str = "", line_number: int = 0, text: str = ""):
        super().__init__(f"line {line_number}: {message}: {text.strip()!r}")
        self.line_number = line_number
        self.text = text


#
# CorpusWriteError
#
class CorpusWriteError(OSError):
    '''
    The walk corpus sink failed part way through

    Attributes:
        walks_written (int): Walks successfully written before the failure
    '''
    def __init__(self, message: str = "", walks_written: int = 0):
        super().__init__(f"{message} (after {walks_written} walks)")
        self.walks_written = walks_written


###########################################################################
#
# Training / Store
#
###########################################################################
#
# VocabularyError
#
class VocabularyError(ValueError):
    ''' The corpus yields no trainable tokens '''


#
# TrainingError
#
class TrainingError(FloatingPointError):
    '''
    Training produced a non-finite loss

    Attributes:
        epoch (int): The epoch (0-based) in which it happened
        batch (int): The batch number within the epoch
        diagnostics (dict): Learning rate and parameter magnitudes
    '''
    def __init__(
            self,
            message: str = "",
            epoch: int = 0,
            batch: int = 0,
            diagnostics: dict | None = None
    ):
        super().__init__(
            f"{message} (epoch {epoch}, batch {batch}, {diagnostics or {}})"
        )
        self.epoch = epoch
        self.batch = batch
        self.diagnostics = diagnostics or {}


#
# EmbeddingFormatError
#
class EmbeddingFormatError(ValueError):
    '''
    An embedding file does not follow the word2vec text format

    Attributes:
        line_number (int): The 1-based line number of the problem
    '''
    def __init__(self, message: str = "", line_number: int = 0):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


###########################################################################
#
# Evaluation / Configuration
#
###########################################################################
#
# EvaluationError
#
class EvaluationError(ValueError):
    ''' An evaluation task could not produce a defined result '''


#
# GenerationError
#
class GenerationError(ValueError):
    ''' The sizes of a synthetic graph cannot be realised '''


#
# ConfigError
#
class ConfigError(ValueError):
    '''
    A configuration key or value is invalid

    Attributes:
        key (str): The key at fault
        suggestion (str): The closest valid key or the valid choices
    '''
    def __init__(self, message: str = "", key: str = "", suggestion: str = ""):
        _hint = f" (did you mean '{suggestion}'?)" if suggestion else ""
        super().__init__(f"{message}{_hint}")
        self.key = key
        self.suggestion = suggestion


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
