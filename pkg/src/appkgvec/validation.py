#!/usr/bin/env python3
'''
General validation functions

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
import difflib
import enum
import math

# Local app modules

# Imports for python variable type hints
from typing import Any, Iterable, TypeVar


###########################################################################
#
# Module Specific Items
#
###########################################################################
#
# Types
#
EnumType = TypeVar("EnumType", bound=enum.Enum)


#
# Constants
#
CLOSE_MATCH_CUTOFF = 0.5


#
# Global Variables
#


###########################################################################
#
# Module
#
###########################################################################
#
# closest_match
#
def closest_match(
        name: str = "",
        candidates: Iterable[str] = (),
        count: int = 1
) -> list[str]:
    '''
    Find the candidates lexically closest to a name

    Args:
        name (str): The name that was not found
        candidates (Iterable): The valid names
        count (int): The maximum number of matches to return

    Returns:
        list: The closest candidates, best first (may be empty)

    Raises:
        None
    '''
    return difflib.get_close_matches(
        str(name),
        [str(_c) for _c in candidates],
        n=count,
        cutoff=CLOSE_MATCH_CUTOFF
    )


#
# check_int
#
def check_int(value: Any = None, name: str = "", minimum: int = 0) -> int:
    '''
    Check a value is an integer (bools excluded) no less than a minimum

    Args:
        value (Any): The value to check
        name (str): The name of the value (for the message)
        minimum (int): The smallest allowed value

    Returns:
        int: The value

    Raises:
        ValueError:
            When the value is not an integer or is below the minimum
    '''
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{name} must be an integer, got {value!r}")

    if value < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {value}")

    return value


#
# check_float
#
def check_float(
        value: Any = None,
        name: str = "",
        minimum: float = 0.0,
        exclusive: bool = False
) -> float:
    '''
    Check a value is a real number no less than (or above) a minimum

    Args:
        value (Any): The value to check
        name (str): The name of the value (for the message)
        minimum (float): The lower bound
        exclusive (bool): If True the bound itself is not allowed

    Returns:
        float: The value as a float

    Raises:
        ValueError:
            When the value is not a number or is out of range
    '''
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        raise ValueError(f"{name} must be a finite number, got {value!r}")

    _value = float(value)
    if _value < minimum or (exclusive and _value == minimum):
        _op = ">" if exclusive else ">="
        raise ValueError(f"{name} must be {_op} {minimum}, got {_value}")

    return _value


#
# to_enum
#
def to_enum(
        value: Any = None,
        enum_type: type[EnumType] | None = None,
        name: str = ""
) -> EnumType:
    '''
    Convert a value (enum member or its string value) to an enum member

    Args:
        value (Any): The value to convert
        enum_type (type): The enum class
        name (str): The name of the value (for the message)

    Returns:
        EnumType: The enum member

    Raises:
        AssertionError:
            When enum_type is not an Enum class
        ValueError:
            When the value is not one of the enum values.  The message lists
            the valid choices
    '''
    assert isinstance(enum_type, type) and issubclass(enum_type, enum.Enum), \
        "enum_type must be an Enum class"

    if isinstance(value, enum_type): return value

    for _member in enum_type:
        if str(value) == str(_member.value): return _member

    _choices = ",".join(sorted(str(_m.value) for _m in enum_type))
    raise ValueError(f"{name}={value} is not one of {{{_choices}}}")


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
