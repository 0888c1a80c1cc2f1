#!/usr/bin/env python3
'''
Typing

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
import enum

# Local app modules

# Imports for python variable type hints


###########################################################################
#
# Enums
#
###########################################################################
#
# WalkMode
#
class WalkMode(enum.Enum):
    ''' The walk flavour written to a corpus '''
    CLASSIC         = "classic"
    P               = "p"
    E               = "e"


#
# ModelType
#
class ModelType(enum.Enum):
    ''' The word2vec model variant '''
    SG              = "sg"
    SG_OA           = "sg_oa"
    CBOW            = "cbow"
    CBOW_OA         = "cbow_oa"

    @property
    def is_cbow(self) -> bool:
        ''' True for the CBOW family '''
        return self in (ModelType.CBOW, ModelType.CBOW_OA)

    @property
    def is_order_aware(self) -> bool:
        ''' True if the output parameters are indexed by context position '''
        return self in (ModelType.SG_OA, ModelType.CBOW_OA)


#
# Metric
#
class Metric(enum.Enum):
    ''' Report metrics with their direction and valid range '''
    ACC             = "ACC"
    RMSE            = "RMSE"
    KENDALL_TAU     = "Kendall Tau"
    HARMONIC_MEAN   = "Harmonic Mean"
    MARGIN          = "Margin"

    @property
    def higher_is_better(self) -> bool:
        ''' False only for error style metrics '''
        return self != Metric.RMSE

    @property
    def valid_range(self) -> tuple[float, float]:
        ''' Closed interval the metric must fall in '''
        if self == Metric.ACC: return (0.0, 1.0)
        if self == Metric.RMSE: return (0.0, float("inf"))
        if self == Metric.MARGIN: return (-2.0, 2.0)
        return (-1.0, 1.0)


#
# EvalTask
#
class EvalTask(enum.Enum):
    ''' The evaluation task families '''
    CLASSIFICATION  = "classification"
    CLUSTERING      = "clustering"
    REGRESSION      = "regression"
    ANALOGY         = "analogy"
    RELATEDNESS     = "relatedness"
    DOCUMENTS       = "documents"
    SEPARATION      = "separation"


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
