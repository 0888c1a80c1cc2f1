#!/usr/bin/env python3
'''
PyTest - Testing Config

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
import os

# Local app modules
from appkgvec.graph import KnowledgeGraph, parse_ntriples
from appkgvec.synthetic import (
    SyntheticDataset,
    SyntheticGraphSpec,
    generate_synthetic_kg
)

# Imports for python variable type hints


###########################################################################
#
# Config
#
###########################################################################
def pytest_configure(config: pytest.Config):
    '''
    Global configuration for the PyTest session

    Args:
        config (pytest.Config): Configuration information

    Returns:
        None

    Raises:
        None
    '''
    config.addinivalue_line(
        "markers",
        "slow: long running reproductions of the walk mode comparisons"
    )


###########################################################################
#
# Fixtures
#
###########################################################################
#
# Small graphs
#
@pytest.fixture(scope="function")
def chain_graph() -> KnowledgeGraph:
    ''' a -p-> b -q-> c '''
    return parse_ntriples(CHAIN_NT)


@pytest.fixture(scope="function")
def long_chain_graph() -> KnowledgeGraph:
    ''' a -p-> b -q-> c -r-> d '''
    return parse_ntriples(LONG_CHAIN_NT)


@pytest.fixture(scope="function")
def star_graph() -> KnowledgeGraph:
    ''' a -p-> b, a -p-> c '''
    return parse_ntriples(STAR_NT)


@pytest.fixture(scope="function")
def self_loop_graph() -> KnowledgeGraph:
    ''' a -p-> a '''
    return parse_ntriples(SELF_LOOP_NT)


@pytest.fixture(scope="function")
def single_node_graph() -> KnowledgeGraph:
    ''' A lone entity with no edges '''
    _graph = KnowledgeGraph()
    _graph.add_entity(V)
    return _graph


#
# Tiny corpus
#
@pytest.fixture(scope="function")
def tiny_corpus() -> list[str]:
    '''
    100 walk-like lines over a handful of entities and predicates

    Args:
        None

    Returns:
        list: The corpus lines

    Raises:
        None
    '''
    return [
        f"e{_i % 5} p{_i % 3} e{(_i + 1) % 5} p{(_i + 2) % 3} e{(_i + 2) % 5}"
        for _i in range(100)
    ]


#
# Synthetic data
#
@pytest.fixture(scope="function")
def small_dataset() -> SyntheticDataset:
    ''' A small synthetic graph with every gold set populated '''
    return generate_synthetic_kg(
        SyntheticGraphSpec(
            classes=2,
            entities_per_class=4,
            attributes_per_class=2,
            partner_groups=2,
            partners_per_group=3,
            hubs_per_group=2,
            analogy_pairs=3,
            document_pairs=6,
            seed=0
        )
    )


#
# Config file
#
@pytest.fixture(scope="function")
def config_file(request: pytest.FixtureRequest, tmp_path) -> str:
    '''
    Path for a pipeline config file, deleted at the end of the test

    Args:
        None

    Returns:
        str: The path for the config file

    Raises:
        None
    '''
    _path = str(tmp_path / CONFIG_FILE_NAME)

    def _delete_file():
        if os.path.exists(_path):
            os.remove(_path)

    # Add a finaliser to delete the file regardless of the test status
    request.addfinalizer(_delete_file)

    return _path
