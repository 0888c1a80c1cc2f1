#!/usr/bin/env python3
'''
Synthetic Graph

Synthetic knowledge graph with gold data for every evaluation task.

Three blocks share one graph:

  classes    members of a class use the same attribute predicates but
             each points at private values (structural twins)
  partners   members of a group point at the same hubs, each through
             its own predicates, and the hubs lead on to group context
             entities that point back at every partner (contextual
             partners)
  capitals   capital city / country pairs with typed, linked entities
             (analogy quads)

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
from appkgvec.base import write_text
from appkgvec.exceptions import GenerationError
from appkgvec.gold import (
    AnalogyQuad,
    DocumentPair,
    GoldLabelSet,
    GoldRanking,
    write_documents,
    write_labels,
    write_pairs,
    write_quads,
    write_rankings,
)
from appkgvec.graph import KnowledgeGraph, write_ntriples

# System Modules
import itertools
import os
import numpy as np
from dataclasses import dataclass, field, replace

# Local app modules

# Imports for python variable type hints


###########################################################################
#
# Module Specific Items
#
###########################################################################
#
# Types
#
@dataclass(frozen=True)
class SyntheticGraphSpec():
    '''
    Sizes of the synthetic graph.  The defaults give about 500 entities.
    '''
    classes: int = 4
    entities_per_class: int = 25
    attributes_per_class: int = 3
    partner_groups: int = 6
    partners_per_group: int = 5
    hubs_per_group: int = 3
    context_per_group: int = 4
    analogy_pairs: int = 12
    document_pairs: int = 40
    seed: int = 0

    def validate(self):
        ''' Raise GenerationError if the sizes cannot be realised '''
        _minimums = {
            "classes": 2,
            "entities_per_class": 2,
            "attributes_per_class": 1,
            "partner_groups": 1,
            "partners_per_group": 2,
            "hubs_per_group": 1,
            "context_per_group": 1,
            "analogy_pairs": 2,
            "document_pairs": 2,
            "seed": 0,
        }
        for _name, _minimum in _minimums.items():
            _value = getattr(self, _name)
            if isinstance(_value, bool) or not isinstance(_value, int) or _value < _minimum:
                raise GenerationError(f"{_name} must be an integer >= {_minimum}, got {_value!r}")


@dataclass
class SyntheticDataset():
    ''' A generated graph and its gold data '''
    graph: KnowledgeGraph
    spec: SyntheticGraphSpec
    structural_twins: list[tuple[str, str]] = field(default_factory=list)
    contextual_partners: list[tuple[str, str]] = field(default_factory=list)
    quads: list[AnalogyQuad] = field(default_factory=list)
    labels: GoldLabelSet = field(default_factory=GoldLabelSet)
    targets: GoldLabelSet = field(default_factory=lambda: GoldLabelSet(numeric=True))
    rankings: list[GoldRanking] = field(default_factory=list)
    documents: list[DocumentPair] = field(default_factory=list)

    def write(self, directory: str = "") -> dict[str, str]:
        '''
        Write the graph and the gold files to a directory

        Args:
            directory (str): The output directory (created if needed)

        Returns:
            dict: name -> path of every file written

        Raises:
            OSError:
                When the files cannot be written
        '''
        os.makedirs(directory, exist_ok=True)
        _paths = {_n: os.path.join(directory, _f) for _n, _f in GOLD_FILES.items()}

        with write_text(_paths["graph"]) as _stream:
            write_ntriples(self.graph, _stream)

        write_labels(_paths["labels"], self.labels)
        write_labels(_paths["targets"], self.targets)
        write_quads(_paths["quads"], self.quads)
        write_rankings(_paths["rankings"], self.rankings)
        write_documents(_paths["documents"], self.documents)
        write_pairs(_paths["twins"], self.structural_twins)
        write_pairs(_paths["partners"], self.contextual_partners)

        return _paths


#
# Constants
#
NAMESPACE = "http://example.org/kg/"
RDF_TYPE = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type"

GOLD_FILES = {
    "graph": "graph.nt",
    "labels": "labels.tsv",
    "targets": "targets.tsv",
    "quads": "quads.tsv",
    "rankings": "rankings.tsv",
    "documents": "documents.tsv",
    "twins": "twins.tsv",
    "partners": "partners.tsv",
}

DOCUMENT_SIZE = 4
TARGET_NOISE = 0.1


#
# Global Variables
#


###########################################################################
#
# Helpers
#
###########################################################################
def _iri(*parts: object) -> str:
    return NAMESPACE + "/".join(str(_p) for _p in parts)


def _all_pairs(members: list[str]) -> list[tuple[str, str]]:
    return list(itertools.combinations(members, 2))


###########################################################################
#
# Blocks
#
###########################################################################
#
# _class_block
#
def _class_block(
        graph: KnowledgeGraph,
        spec: SyntheticGraphSpec,
        rng: np.random.Generator
) -> tuple[list[list[str]], GoldLabelSet, GoldLabelSet]:
    ''' Class members with private attribute values: members, labels, targets '''
    _members: list[list[str]] = []
    _labels: dict[str, str | float] = {}
    _targets: dict[str, str | float] = {}

    for _c in range(spec.classes):
        _class = f"class{_c}"
        _entities = []
        for _i in range(spec.entities_per_class):
            _entity = _iri(_class, f"entity{_i}")
            graph.add_entity(_entity)
            for _a in range(spec.attributes_per_class):
                graph.add_triple(
                    _entity,
                    _iri("prop", f"{_class}_attr{_a}"),
                    _iri(_class, f"entity{_i}", f"value{_a}")
                )

            _entities.append(_entity)
            _labels[_entity] = _class
            _targets[_entity] = round(float(_c + TARGET_NOISE * rng.standard_normal()), 6)

        _members.append(_entities)

    return (
        _members,
        GoldLabelSet(labels=_labels),
        GoldLabelSet(labels=_targets, numeric=True)
    )


#
# _partner_block
#
def _partner_block(
        graph: KnowledgeGraph,
        spec: SyntheticGraphSpec,
        rng: np.random.Generator
) -> tuple[list[list[str]], list[list[str]]]:
    '''
    Partner groups: each partner links every hub of its group through its
    own predicates.  Every hub links every context entity of the group and
    every context entity links every partner, so walks through a partner
    stay inside its group.  Returns the partners and hubs of each group.
    '''
    _groups: list[list[str]] = []
    _hubs: list[list[str]] = []

    for _g in range(spec.partner_groups):
        _group_hubs = [_iri(f"group{_g}", f"hub{_h}") for _h in range(spec.hubs_per_group)]
        _partners = [_iri(f"group{_g}", f"partner{_i}") for _i in range(spec.partners_per_group)]
        _context = [_iri(f"group{_g}", f"context{_c}") for _c in range(spec.context_per_group)]

        # Predicate sets are shared across groups, shuffled within each
        _slots = rng.permutation(spec.partners_per_group)
        for _partner, _slot in zip(_partners, _slots):
            for _h, _hub in enumerate(_group_hubs):
                graph.add_triple(_partner, _iri("prop", f"rel{_slot}_{_h}"), _hub)

        for _entity in _context:
            for _hub in _group_hubs:
                graph.add_triple(_hub, _iri("prop", "near"), _entity)
            for _partner in _partners:
                graph.add_triple(_entity, _iri("prop", "mentions"), _partner)

        _groups.append(_partners)
        _hubs.append(_group_hubs)

    return _groups, _hubs


#
# _capital_block
#
def _capital_block(graph: KnowledgeGraph, spec: SyntheticGraphSpec) -> list[AnalogyQuad]:
    ''' Capital / country pairs and every ordered analogy quad over them '''
    _regions = max(2, spec.analogy_pairs // 3)
    _pairs = []

    for _i in range(spec.analogy_pairs):
        _city = _iri("city", f"capital{_i}")
        _country = _iri("country", f"country{_i}")
        _region = _iri("region", f"region{_i % _regions}")

        graph.add_triple(_city, _iri("prop", "capitalOf"), _country)
        graph.add_triple(_country, _iri("prop", "capital"), _city)
        graph.add_triple(_city, RDF_TYPE, _iri("type", "City"))
        graph.add_triple(_country, RDF_TYPE, _iri("type", "Country"))
        graph.add_triple(_country, _iri("prop", "language"), _iri("language", f"language{_i}"))
        graph.add_triple(_city, _iri("prop", "mayor"), _iri("person", f"mayor{_i}"))
        graph.add_triple(_city, _iri("prop", "locatedIn"), _region)
        graph.add_triple(_country, _iri("prop", "locatedIn"), _region)

        _pairs.append((_city, _country))

    # "city_i is to country_i as city_j is to country_j" for every i != j
    return [
        AnalogyQuad(_a, _a_star, _b, _b_star)
        for (_a, _a_star), (_b, _b_star) in itertools.permutations(_pairs, 2)
    ]


#
# _documents
#
def _documents(
        members: list[list[str]],
        spec: SyntheticGraphSpec,
        rng: np.random.Generator
) -> list[DocumentPair]:
    '''
    Document pairs over class members.  The gold score is the cosine of the
    class histograms of the two documents.
    '''
    def _document() -> tuple[tuple[tuple[str, float], ...], np.ndarray]:
        _classes = rng.choice(spec.classes, size=DOCUMENT_SIZE)
        _histogram = np.bincount(_classes, minlength=spec.classes).astype(np.float64)
        _entries = tuple(
            (members[_c][int(rng.integers(0, spec.entities_per_class))], 1.0)
            for _c in _classes
        )
        return _entries, _histogram

    _pairs = []
    for _ in range(spec.document_pairs):
        _first, _h1 = _document()
        _second, _h2 = _document()
        _score = float(_h1 @ _h2 / (np.linalg.norm(_h1) * np.linalg.norm(_h2)))
        _pairs.append(DocumentPair(first=_first, second=_second, score=round(_score, 6)))

    return _pairs


###########################################################################
#
# Generator
#
###########################################################################
#
# generate_synthetic_kg
#
def generate_synthetic_kg(
        spec: SyntheticGraphSpec | None = None,
        seed: int | None = None
) -> SyntheticDataset:
    '''
    Build the synthetic graph and its gold data

    Structural twins are the pairs within a class, contextual partners the
    pairs within a partner group.  Labels and regression targets cover the
    class members.  Each relatedness ranking anchors on a partner and orders
    its own hub, a partner from its group and (with more than one group) a
    hub of the next group.

    Args:
        spec (SyntheticGraphSpec): The sizes (defaults if None)
        seed (int): Overrides spec.seed when given

    Returns:
        SyntheticDataset: The graph and gold data (identical for a seed)

    Raises:
        GenerationError:
            When the sizes are too small to realise
    '''
    _spec = SyntheticGraphSpec() if spec is None else spec
    assert isinstance(_spec, SyntheticGraphSpec), "spec must be a SyntheticGraphSpec"
    if seed is not None:
        _spec = replace(_spec, seed=seed)

    _spec.validate()

    _rng = np.random.default_rng(_spec.seed)
    _graph = KnowledgeGraph()

    _members, _labels, _targets = _class_block(_graph, _spec, _rng)
    _groups, _hubs = _partner_block(_graph, _spec, _rng)
    _quads = _capital_block(_graph, _spec)

    _rankings = []
    for _g, _partners in enumerate(_groups):
        _other = _hubs[(_g + 1) % len(_hubs)][0] if len(_hubs) > 1 else None
        for _i, _partner in enumerate(_partners):
            _ranking = [_hubs[_g][0], _partners[(_i + 1) % len(_partners)]]
            if _other: _ranking.append(_other)
            _rankings.append(GoldRanking(anchor=_partner, ranking=tuple(_ranking)))

    return SyntheticDataset(
        graph=_graph,
        spec=_spec,
        structural_twins=[_p for _m in _members for _p in _all_pairs(_m)],
        contextual_partners=[_p for _g in _groups for _p in _all_pairs(_g)],
        quads=_quads,
        labels=_labels,
        targets=_targets,
        rankings=_rankings,
        documents=_documents(_members, _spec, _rng)
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
