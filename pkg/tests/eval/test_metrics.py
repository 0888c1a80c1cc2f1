#!/usr/bin/env python3
'''
PyTest - Test of the evaluation metrics

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
import itertools
import numpy as np
from collections import Counter

# Local app modules
from test_base import TestBase
from appkgvec.exceptions import EvaluationError
from appkgvec.gold import AnalogyQuad, DocumentPair, GoldLabelSet, GoldRanking
from appkgvec.metrics import (
    analogy_accuracy,
    cluster_accuracy,
    document_similarity,
    entity_relatedness,
    kendall_tau,
    kmeans_cluster_accuracy,
    knn_classify_loo,
    knn_regress_loo,
    pair_separation,
    rank_by_cosine
)
from appkgvec.store import EmbeddingStore, cosine
from appkgvec.typing import Metric

# Imports for python variable type hints


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
ORACLE_CASES = 25
ORACLE_ENTITIES = 20


#
# Global Variables
#


###########################################################################
#
# Oracles
#
###########################################################################
def _neighbours_oracle(store: EmbeddingStore, tokens: list[str], token: str, k: int) -> list[str]:
    ''' The k most similar other tokens by brute force '''
    _others = [_t for _t in tokens if _t != token]
    _others.sort(key=lambda _t: (-cosine(store.vector(token), store.vector(_t)), _t))
    return _others[:k]


def _classify_oracle(store: EmbeddingStore, labels: dict, k: int) -> float:
    _tokens = list(labels)
    _correct = 0
    for _token in _tokens:
        _votes = Counter(labels[_n] for _n in _neighbours_oracle(store, _tokens, _token, k))
        _best = max(_votes.values())
        if min(_l for _l, _c in _votes.items() if _c == _best) == labels[_token]:
            _correct += 1

    return _correct / len(_tokens)


def _regress_oracle(store: EmbeddingStore, targets: dict, k: int) -> float:
    _tokens = list(targets)
    _errors = []
    for _token in _tokens:
        _neighbours = _neighbours_oracle(store, _tokens, _token, k)
        _prediction = sum(targets[_n] for _n in _neighbours) / k
        _errors.append((_prediction - targets[_token]) ** 2)

    return (sum(_errors) / len(_errors)) ** 0.5


def _tau_oracle(gold: list[str], predicted: list[str]) -> float:
    _concordant = _discordant = 0
    for _x, _y in itertools.combinations(gold, 2):
        if predicted.index(_x) < predicted.index(_y): _concordant += 1
        else: _discordant += 1

    _n = len(gold)
    return (_concordant - _discordant) / (_n * (_n - 1) / 2)


def _ranks(values: list[float]) -> np.ndarray:
    _ranks = np.empty(len(values))
    _ranks[np.argsort(values)] = np.arange(len(values))
    return _ranks


def _random_store(rng: np.random.Generator, count: int, dim: int = 3) -> EmbeddingStore:
    return EmbeddingStore(
        tokens=[f"t{_i:02d}" for _i in range(count)],
        vectors=rng.normal(size=(count, dim))
    )


###########################################################################
#
# The tests...
#
###########################################################################
#
# Classification
#
class Test_Metrics_Classify(TestBase):
    '''
    Test Class - Leave-one-out kNN classification

    Attributes:
        None
    '''
    #
    # Separated clusters
    #
    def test_separated(self):
        '''
        Two separated clusters classify perfectly

        Args:
            None

        Returns:
            None

        Raises:
            AssertionError:
                when test fails
        '''
        _store = EmbeddingStore(
            tokens=["a1", "a2", "a3", "b1", "b2", "b3"],
            vectors=[[1, 0]] * 3 + [[0, 1]] * 3
        )
        _gold = GoldLabelSet(labels={"a1": "A", "a2": "A", "a3": "A", "b1": "B", "b2": "B", "b3": "B"})

        _result = knn_classify_loo(_store, _gold, k=1)

        assert _result.value == 1.0
        assert _result.evaluated == 6
        assert _result.excluded == ()


    #
    # Identical vectors
    #
    def test_identical_vectors(self):
        ''' With all vectors equal the neighbour is decided by token order '''
        _store = EmbeddingStore(tokens=["a", "b", "c", "d"], vectors=[[1, 1]] * 4)
        _labels = {"a": "A", "b": "A", "c": "B", "d": "B"}

        _result = knn_classify_loo(_store, GoldLabelSet(labels=_labels), k=1)

        assert _result.value == _classify_oracle(_store, _labels, 1)
        assert _result.value == 0.5


    #
    # Whole population
    #
    def test_whole_population(self):
        ''' With k = n - 1 on balanced classes the vote goes against each item '''
        _rng = np.random.default_rng(3)
        _store = _random_store(_rng, 4)
        _labels = {"t00": "A", "t01": "A", "t02": "B", "t03": "B"}

        _result = knn_classify_loo(_store, GoldLabelSet(labels=_labels), k=3)

        assert _result.value == _classify_oracle(_store, _labels, 3)
        assert _result.value == 0.0


    #
    # Oracle
    #
    def test_oracle(self):
        '''
        Random instances agree with the brute force oracle

        Args:
            None

        Returns:
            None

        Raises:
            AssertionError:
                when test fails
        '''
        _rng = np.random.default_rng(11)

        for _case in range(ORACLE_CASES):
            _count = int(_rng.integers(4, ORACLE_ENTITIES + 1))
            _store = _random_store(_rng, _count)
            _labels = {_t: f"class{_rng.integers(0, 3)}" for _t in _store.tokens}
            if len(set(_labels.values())) < 2: continue
            _k = int(_rng.integers(1, min(5, _count - 1) + 1))

            _result = knn_classify_loo(_store, GoldLabelSet(labels=_labels), k=_k)

            assert abs(_result.value - _classify_oracle(_store, _labels, _k)) < ORACLE_TOLERANCE
            self._assert_metric_range(Metric.ACC, _result.value)


    #
    # Exclusions
    #
    def test_missing_entities(self):
        ''' Entities missing from the store are reported, not scored '''
        _store = EmbeddingStore(tokens=["a", "b", "c"], vectors=[[1, 0], [1, 0.1], [0, 1]])
        _labels = {"a": "A", "b": "A", "c": "B", "z": "B", "y": "A"}

        _result = knn_classify_loo(_store, GoldLabelSet(labels=_labels), k=1)

        assert _result.excluded == ("y", "z")
        assert _result.evaluated == 3


    def test_too_small(self):
        ''' k must leave a neighbour pool '''
        _store = EmbeddingStore(tokens=["a", "b"], vectors=np.eye(2))

        with pytest.raises(EvaluationError):
            knn_classify_loo(_store, GoldLabelSet(labels={"a": "A", "b": "B"}), k=2)


#
# Regression
#
class Test_Metrics_Regress(TestBase):
    '''
    Test Class - Leave-one-out kNN regression

    Attributes:
        None
    '''
    #
    # Duplicates
    #
    def test_duplicates(self):
        ''' Clustered duplicates sharing a target predict it exactly '''
        _store = EmbeddingStore(
            tokens=["a1", "a2", "b1", "b2"],
            vectors=[[1, 0], [1, 0], [0, 1], [0, 1]]
        )
        _gold = GoldLabelSet(labels={"a1": 2.0, "a2": 2.0, "b1": 7.5, "b2": 7.5}, numeric=True)

        assert knn_regress_loo(_store, _gold, k=1).value == 0.0


    #
    # Two points
    #
    def test_two_points(self):
        ''' Two mutual neighbours predict each other '''
        _store = EmbeddingStore(tokens=["a", "b"], vectors=[[1, 0], [1, 1]])
        _gold = GoldLabelSet(labels={"a": 0.0, "b": 1.0}, numeric=True)

        assert knn_regress_loo(_store, _gold, k=1).value == pytest.approx(1.0)


    #
    # Oracle
    #
    def test_oracle(self):
        '''
        Random instances agree with the brute force oracle

        Args:
            None

        Returns:
            None

        Raises:
            AssertionError:
                when test fails
        '''
        _rng = np.random.default_rng(12)

        for _case in range(ORACLE_CASES):
            _count = int(_rng.integers(3, ORACLE_ENTITIES + 1))
            _store = _random_store(_rng, _count)
            _targets = {_t: float(_rng.normal()) for _t in _store.tokens}
            _k = int(_rng.integers(1, min(5, _count - 1) + 1))

            _result = knn_regress_loo(_store, GoldLabelSet(labels=_targets, numeric=True), k=_k)

            assert abs(_result.value - _regress_oracle(_store, _targets, _k)) < 1e-12
            self._assert_metric_range(Metric.RMSE, _result.value)


    def test_labels_required(self):
        ''' Regression needs numeric targets '''
        _store = EmbeddingStore(tokens=["a", "b"], vectors=np.eye(2))

        with pytest.raises(AssertionError):
            knn_regress_loo(_store, GoldLabelSet(labels={"a": "A", "b": "B"}), k=1)


#
# Clustering
#
class Test_Metrics_Cluster(TestBase):
    '''
    Test Class - k-means clustering accuracy

    Attributes:
        None
    '''
    #
    # Far clusters
    #
    def test_far_clusters(self):
        '''
        Far apart clusters are recovered

        Args:
            None

        Returns:
            None

        Raises:
            AssertionError:
                when test fails
        '''
        _rng = np.random.default_rng(0)
        _vectors = np.concatenate([
            _rng.normal(0.0, 0.1, (5, 2)) + [10, 0],
            _rng.normal(0.0, 0.1, (5, 2)) + [0, 10],
        ])
        _tokens = [f"e{_i}" for _i in range(10)]
        _store = EmbeddingStore(tokens=_tokens, vectors=_vectors)
        _labels = {_t: ("A" if _i < 5 else "B") for _i, _t in enumerate(_tokens)}

        _result = kmeans_cluster_accuracy(_store, GoldLabelSet(labels=_labels), k=2, seed=1)
        assert _result.value == 1.0

        # Renaming the classes changes nothing
        _renamed = {_t: {"A": "Z", "B": "Y"}[_l] for _t, _l in _labels.items()}
        assert kmeans_cluster_accuracy(
            _store, GoldLabelSet(labels=_renamed), k=2, seed=1
        ).value == _result.value


    #
    # One dimension
    #
    def test_one_dimension(self):
        ''' {0, 0.1} and {10, 10.1} form the two clusters '''
        _store = EmbeddingStore(tokens=["w", "x", "y", "z"], vectors=[[0.0], [0.1], [10.0], [10.1]])
        _gold = GoldLabelSet(labels={"w": "low", "x": "low", "y": "high", "z": "high"})

        assert kmeans_cluster_accuracy(_store, _gold, k=2).value == 1.0


    #
    # Relabelling
    #
    def test_relabel_invariance(self):
        ''' A permutation of class names keeps the accuracy on random data '''
        _rng = np.random.default_rng(5)
        _store = _random_store(_rng, 15)
        _labels = {_t: f"c{_rng.integers(0, 3)}" for _t in _store.tokens}
        _perm = {"c0": "c2", "c1": "c0", "c2": "c1"}

        _first = kmeans_cluster_accuracy(_store, GoldLabelSet(labels=_labels), k=3, seed=2)
        _second = kmeans_cluster_accuracy(
            _store, GoldLabelSet(labels={_t: _perm[_l] for _t, _l in _labels.items()}), k=3, seed=2
        )

        assert _first.value == _second.value
        self._assert_metric_range(Metric.ACC, _first.value)


    #
    # Assignment
    #
    def test_cluster_accuracy(self):
        ''' Accuracy under the best matching of clusters to labels '''
        assert cluster_accuracy(["A", "A", "B", "B"], [1, 1, 0, 0]) == 1.0
        assert cluster_accuracy(["A", "A", "B", "B"], [0, 1, 0, 1]) == 0.5
        assert cluster_accuracy(["A", "A", "A", "B"], [0, 0, 0, 0]) == 0.75

        # Brute force over every cluster to label matching
        _labels = ["A", "B", "C", "A", "B", "C", "A", "A"]
        _clusters = [2, 2, 0, 2, 1, 0, 1, 2]
        _best = max(
            sum(1 for _l, _c in zip(_labels, _clusters) if _perm[_c] == _l)
            for _perm in itertools.permutations(["A", "B", "C"])
        )
        assert cluster_accuracy(_labels, _clusters) == _best / len(_labels)


    def test_too_many_clusters(self):
        ''' k larger than the population is an error '''
        _store = EmbeddingStore(tokens=["a", "b"], vectors=np.eye(2))

        with pytest.raises(EvaluationError):
            kmeans_cluster_accuracy(_store, GoldLabelSet(labels={"a": "A", "b": "B"}), k=3)


    def test_seeded(self):
        ''' The same seed gives the same result '''
        _rng = np.random.default_rng(8)
        _store = _random_store(_rng, 12)
        _gold = GoldLabelSet(labels={_t: f"c{_i % 3}" for _i, _t in enumerate(_store.tokens)})

        assert kmeans_cluster_accuracy(_store, _gold, seed=4) == kmeans_cluster_accuracy(_store, _gold, seed=4)


#
# Analogies
#
class Test_Metrics_Analogy(TestBase):
    '''
    Test Class - Analogy accuracy

    Attributes:
        None
    '''
    #
    # Exact offsets
    #
    def test_exact_offsets(self):
        '''
        A store with one shared offset answers every quad

        Args:
            None

        Returns:
            None

        Raises:
            AssertionError:
                when test fails
        '''
        _offset = np.asarray([0.0, 0.0, 1.0])
        _bases = {"x": [1.0, 0.0, 0.0], "y": [0.0, 1.0, 0.0], "w": [-1.0, 0.0, 0.0]}
        _tokens, _vectors = [], []
        for _name, _base in _bases.items():
            _tokens += [f"{_name}_city", f"{_name}_country"]
            _vectors += [_base, np.asarray(_base) + _offset]

        _store = EmbeddingStore(tokens=_tokens, vectors=_vectors)
        _pairs = [(f"{_n}_city", f"{_n}_country") for _n in _bases]
        _quads = [AnalogyQuad(_a, _b, _c, _d) for (_a, _b), (_c, _d) in itertools.permutations(_pairs, 2)]

        _result = analogy_accuracy(_store, _quads)

        assert len(_quads) == 6
        assert _result.value == 1.0


    #
    # Missing answer
    #
    def test_missing_answer(self):
        ''' A quad with an absent token is wrong and reported '''
        _store = EmbeddingStore(
            tokens=["a", "a_star", "b", "x"],
            vectors=[[1, 0], [1, 1], [3, 0], [3, 1]]
        )
        _quads = [
            AnalogyQuad("a", "a_star", "b", "x"),
            AnalogyQuad("a", "a_star", "b", "missing"),
        ]

        _result = analogy_accuracy(_store, _quads)

        assert _result.value == 0.5
        assert _result.excluded == ("missing",)


    #
    # Oracle
    #
    def test_oracle(self):
        ''' Random quads agree with a brute force 3CosAdd '''
        _rng = np.random.default_rng(13)
        _store = _random_store(_rng, ORACLE_ENTITIES, dim=4)

        _quads = []
        for _ in range(40):
            _picked = _rng.choice(_store.tokens, 4, replace=False).tolist()
            _quads.append(AnalogyQuad(*_picked))

        _correct = 0
        for _quad in _quads:
            _target = _store.vector(_quad.a_star) - _store.vector(_quad.a) + _store.vector(_quad.b)
            _candidates = [_t for _t in _store.tokens if _t not in (_quad.a, _quad.a_star, _quad.b)]
            _best = min(_candidates, key=lambda _t: (-cosine(_target, _store.vector(_t)), _t))
            if _best == _quad.b_star: _correct += 1

        assert abs(analogy_accuracy(_store, _quads).value - _correct / len(_quads)) < ORACLE_TOLERANCE


    def test_no_quads(self):
        ''' An empty quad set is an error '''
        with pytest.raises(EvaluationError):
            analogy_accuracy(EmbeddingStore(tokens=["a"], vectors=[[1.0]]), [])


#
# Relatedness
#
class Test_Metrics_Relatedness(TestBase):
    '''
    Test Class - Kendall tau and entity relatedness

    Attributes:
        None
    '''
    #
    # Kendall tau
    #
    def test_kendall_tau(self):
        '''
        Identical, reversed and one-swap rankings

        Args:
            None

        Returns:
            None

        Raises:
            AssertionError:
                when test fails
        '''
        assert kendall_tau(["a", "b"], ["a", "b"]) == pytest.approx(1.0)
        assert kendall_tau(list("abcdefg"), list("abcdefg")) == pytest.approx(1.0)
        assert kendall_tau(["a", "b", "c"], ["c", "b", "a"]) == pytest.approx(-1.0)
        assert kendall_tau(["a", "b", "c", "d"], ["a", "c", "b", "d"]) == pytest.approx(1 - 2 / 6)
        assert kendall_tau(GoldRanking("x", ("a", "b", "c")), ["a", "c", "b"]) == pytest.approx(1 / 3)


    def test_kendall_tau_mismatch(self):
        ''' Rankings over different items are a contract violation '''
        with pytest.raises(AssertionError):
            kendall_tau(["a", "b"], ["a", "c"])

        with pytest.raises(AssertionError):
            kendall_tau(["a", "b"], ["a", "b", "c"])


    def test_kendall_tau_oracle(self):
        ''' Random permutations agree with pair counting '''
        _rng = np.random.default_rng(14)

        for _ in range(ORACLE_CASES):
            _items = [f"i{_j}" for _j in range(int(_rng.integers(2, ORACLE_ENTITIES + 1)))]
            _predicted = _rng.permutation(_items).tolist()

            _tau = kendall_tau(_items, _predicted)
            assert abs(_tau - _tau_oracle(_items, _predicted)) < ORACLE_TOLERANCE
            self._assert_metric_range(Metric.KENDALL_TAU, _tau)


    #
    # Cosine ranking
    #
    def test_rank_by_cosine(self):
        ''' Candidates by descending cosine, ties by token '''
        _store = EmbeddingStore(
            tokens=["anchor", "near", "far", "tie_b", "tie_a"],
            vectors=[[1, 0], [1, 0.1], [0, 1], [1, 1], [1, 1]]
        )

        assert rank_by_cosine(_store, "anchor", ["far", "tie_b", "near", "tie_a"]) == \
            ["near", "tie_a", "tie_b", "far"]


    def test_entity_relatedness(self):
        '''
        Mean tau over rankings, with missing entities dropped

        Args:
            None

        Returns:
            None

        Raises:
            AssertionError:
                when test fails
        '''
        _store = EmbeddingStore(
            tokens=["q", "a", "b", "c"],
            vectors=[[1, 0], [1, 0.1], [1, 1], [0, 1]]
        )
        _rankings = [
            GoldRanking("q", ("a", "b", "c")),
            GoldRanking("q", ("c", "b", "a")),
            GoldRanking("q", ("a", "missing", "c")),
            GoldRanking("gone", ("a", "b")),
        ]

        _result = entity_relatedness(_store, _rankings)

        assert _result.evaluated == 3
        assert _result.value == pytest.approx((1.0 - 1.0 + 1.0) / 3)
        assert _result.excluded == ("gone", "missing")


#
# Document similarity
#
class Test_Metrics_Documents(TestBase):
    '''
    Test Class - Document similarity

    Attributes:
        None
    '''
    #
    # Helpers
    #
    def _store_and_pairs(self) -> tuple[EmbeddingStore, list[tuple[str, str]]]:
        _angles = [0.0, 0.3, 0.9, 1.4, 2.0, 2.9]
        _store = EmbeddingStore(
            tokens=[f"d{_i}" for _i in range(len(_angles))],
            vectors=[[np.cos(_a), np.sin(_a)] for _a in _angles]
        )

        return _store, [("d0", "d1"), ("d0", "d2"), ("d1", "d3"), ("d1", "d5"), ("d0", "d4")]


    #
    # Perfect agreement
    #
    def test_perfect(self):
        '''
        Gold scores equal to the predictions give 1, negated give -1

        Args:
            None

        Returns:
            None

        Raises:
            AssertionError:
                when test fails
        '''
        _store, _pairs = self._store_and_pairs()
        _cosines = [cosine(_store.vector(_x), _store.vector(_y)) for _x, _y in _pairs]

        _same = [DocumentPair(((_x, 1.0),), ((_y, 1.0),), _c) for (_x, _y), _c in zip(_pairs, _cosines)]
        _negated = [DocumentPair(((_x, 1.0),), ((_y, 1.0),), -_c) for (_x, _y), _c in zip(_pairs, _cosines)]

        assert document_similarity(_store, _same).value == pytest.approx(1.0)
        assert document_similarity(_store, _negated).value == pytest.approx(-1.0)


    #
    # Oracle
    #
    def test_oracle(self):
        '''
        Weighted documents agree with an independent computation

        Args:
            None

        Returns:
            None

        Raises:
            AssertionError:
                when test fails
        '''
        _rng = np.random.default_rng(15)
        _store = _random_store(_rng, 12)

        _pairs, _predicted = [], []
        for _ in range(10):
            _docs = []
            for _side in range(2):
                _tokens = _rng.choice(_store.tokens, 3, replace=False).tolist()
                _weights = _rng.uniform(0.5, 2.0, 3).round(3).tolist()
                _docs.append(tuple(zip(_tokens, _weights)))

            _vectors = [
                sum(_w * _store.vector(_t) for _t, _w in _doc) / sum(_w for _, _w in _doc)
                for _doc in _docs
            ]
            _predicted.append(cosine(_vectors[0], _vectors[1]))
            _pairs.append(DocumentPair(_docs[0], _docs[1], float(_predicted[-1] + _rng.normal(0, 0.2))))

        _gold = [_p.score for _p in _pairs]
        _r = float(np.corrcoef(_predicted, _gold)[0, 1])
        _rho = float(np.corrcoef(_ranks(_predicted), _ranks(_gold))[0, 1])

        if _r * _rho > 0:
            _expected = 2 * _r * _rho / (_r + _rho)
            assert abs(document_similarity(_store, _pairs).value - _expected) < ORACLE_TOLERANCE

        else:
            with pytest.raises(EvaluationError):
                document_similarity(_store, _pairs)


    #
    # Undefined cases
    #
    def test_undefined(self):
        ''' Too few pairs and constant scores cannot be correlated '''
        _store, _pairs = self._store_and_pairs()

        _one = [DocumentPair((("d0", 1.0),), (("d1", 1.0),), 0.5)]
        with pytest.raises(EvaluationError):
            document_similarity(_store, _one)

        _constant_gold = [DocumentPair(((_x, 1.0),), ((_y, 1.0),), 0.5) for _x, _y in _pairs]
        with pytest.raises(EvaluationError):
            document_similarity(_store, _constant_gold)

        _constant_prediction = [
            DocumentPair((("d0", 1.0),), (("d1", 1.0),), 0.1),
            DocumentPair((("d0", 1.0),), (("d1", 1.0),), 0.9),
        ]
        with pytest.raises(EvaluationError):
            document_similarity(_store, _constant_prediction)


#
# Separation
#
class Test_Metrics_Separation(TestBase):
    '''
    Test Class - Gold pair separation

    Attributes:
        None
    '''
    #
    # Margin
    #
    def test_margin(self):
        '''
        Pairs sharing a direction beat random pairs

        Args:
            None

        Returns:
            None

        Raises:
            AssertionError:
                when test fails
        '''
        _rng = np.random.default_rng(16)
        _store = _random_store(_rng, 20, dim=8)
        _tokens = _store.tokens + ["twin_a", "twin_b"]
        _matrix = np.vstack([_store.matrix, [[1.0] * 8, [1.1] * 8]])
        _store = EmbeddingStore(tokens=_tokens, vectors=_matrix)

        _result = pair_separation(_store, [("twin_a", "twin_b"), ("twin_a", "absent")], seed=1, samples=500)

        assert _result.pair_mean == pytest.approx(1.0)
        assert _result.margin == pytest.approx(_result.pair_mean - _result.random_mean)
        assert _result.margin > 0.0
        assert _result.evaluated == 1
        assert _result.excluded == ("absent",)
        self._assert_metric_range(Metric.MARGIN, _result.margin)

        assert pair_separation(_store, [("twin_a", "twin_b")], seed=1, samples=500) == \
            pair_separation(_store, [("twin_a", "twin_b")], seed=1, samples=500)


    def test_no_pairs(self):
        ''' No evaluable pair is an error '''
        with pytest.raises(EvaluationError):
            pair_separation(EmbeddingStore(tokens=["a", "b"], vectors=np.eye(2)), [("a", "z")])


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
