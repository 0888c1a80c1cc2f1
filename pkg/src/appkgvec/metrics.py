#!/usr/bin/env python3
'''
Metrics

Evaluation metrics over an embedding store: leave-one-out kNN
classification and regression, k-means clustering accuracy, analogy
accuracy, entity relatedness (Kendall tau), document similarity and
pair separation.

Gold entities missing from the store are excluded and reported, never
replaced by zero vectors.

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
from appkgvec.base import DEFAULT_LOGGER_NAME
from appkgvec.exceptions import EvaluationError
from appkgvec.gold import AnalogyQuad, DocumentPair, GoldLabelSet, GoldRanking
from appkgvec.store import EmbeddingStore
from appkgvec.validation import check_int

# System Modules
import numpy as np
from applogging.logging import get_logger
from collections import Counter
from scipy.optimize import linear_sum_assignment
from scipy.stats import kendalltau, pearsonr, spearmanr

# Local app modules

# Imports for python variable type hints
from typing import Iterable, NamedTuple, Sequence


###########################################################################
#
# Module Specific Items
#
###########################################################################
#
# Types
#
class MetricResult(NamedTuple):
    ''' A metric value, the number of items it covers and what was left out '''
    value: float
    evaluated: int
    excluded: tuple[str, ...] = ()


class Separation(NamedTuple):
    ''' Mean cosine of gold pairs against random pairs '''
    pair_mean: float
    random_mean: float
    margin: float
    evaluated: int
    excluded: tuple[str, ...] = ()


#
# Constants
#
DEFAULT_K = 5
DEFAULT_RESTARTS = 10
MAX_KMEANS_ITERATIONS = 300
DEFAULT_SEPARATION_SAMPLES = 2000


#
# Global Variables
#


###########################################################################
#
# Helpers
#
###########################################################################
def _logger():
    return get_logger(name=DEFAULT_LOGGER_NAME)


#
# _split_present
#
def _split_present(
        store: EmbeddingStore,
        tokens: Iterable[str],
        task: str
) -> tuple[list[str], tuple[str, ...]]:
    ''' Tokens found in the store and (sorted, unique) tokens that are not '''
    _present, _missing = [], set()
    for _token in tokens:
        if _token in store: _present.append(_token)
        else: _missing.add(_token)

    if _missing:
        _logger().warning(f"{task}: {len(_missing)} gold entities missing from the store excluded")

    return _present, tuple(sorted(_missing))


#
# _unit_rows
#
def _unit_rows(store: EmbeddingStore, tokens: Sequence[str]) -> np.ndarray:
    ''' Unit vectors of tokens (zero rows stay zero) '''
    _rows = np.asarray([store.vector(_t) for _t in tokens], dtype=np.float64)
    _norms = np.linalg.norm(_rows, axis=1, keepdims=True)

    return np.divide(_rows, _norms, out=np.zeros_like(_rows), where=_norms > 0)


def _loo_neighbours(store: EmbeddingStore, tokens: Sequence[str], k: int) -> np.ndarray:
    ''' (n, k) indices of the k nearest other items of each item '''
    _unit = _unit_rows(store, tokens)
    _sims = _unit @ _unit.T
    _n = len(tokens)

    _lex = np.empty(_n, dtype=np.int64)
    _lex[np.argsort(np.asarray(tokens, dtype=object), kind="stable")] = np.arange(_n)

    _result = np.empty((_n, k), dtype=np.int64)
    for _i in range(_n):
        _scores = _sims[_i].copy()
        _order = np.lexsort((_lex, -_scores))
        _result[_i] = _order[_order != _i][:k]

    return _result


###########################################################################
#
# Classification / Regression
#
###########################################################################
#
# knn_classify_loo
#
def knn_classify_loo(
        store: EmbeddingStore | None = None,
        gold: GoldLabelSet | None = None,
        k: int = DEFAULT_K
) -> MetricResult:
    '''
    Leave-one-out k nearest neighbour classification accuracy

    Each entity is classified by a vote of its k most cosine similar other
    labelled entities (ties between neighbours by token order).  A tied vote
    goes to the lexicographically smallest label.

    Args:
        store (EmbeddingStore): The embeddings
        gold (GoldLabelSet): Class labels
        k (int): Neighbours per vote

    Returns:
        MetricResult: Accuracy in [0, 1]

    Raises:
        EvaluationError:
            When fewer than k + 1 labelled entities are in the store or there
            are fewer than 2 classes
    '''
    assert isinstance(store, EmbeddingStore), "a store is required"
    assert isinstance(gold, GoldLabelSet) and not gold.numeric, "class labels are required"
    check_int(k, "k", minimum=1)

    _tokens, _excluded = _split_present(store, gold.labels, "classification")
    if len(_tokens) < k + 1:
        raise EvaluationError(f"classification needs at least {k + 1} entities, have {len(_tokens)}")

    _labels = [str(gold.labels[_t]) for _t in _tokens]
    if len(set(_labels)) < 2:
        raise EvaluationError("classification needs at least 2 classes")

    _neighbours = _loo_neighbours(store, _tokens, k)
    _correct = 0
    for _i, _row in enumerate(_neighbours):
        _votes = Counter(_labels[_j] for _j in _row)
        _best = max(_votes.values())
        _winner = min(_l for _l, _c in _votes.items() if _c == _best)
        if _winner == _labels[_i]: _correct += 1

    return MetricResult(_correct / len(_tokens), len(_tokens), _excluded)


#
# knn_regress_loo
#
def knn_regress_loo(
        store: EmbeddingStore | None = None,
        gold: GoldLabelSet | None = None,
        k: int = DEFAULT_K
) -> MetricResult:
    '''
    Leave-one-out k nearest neighbour regression error

    Each entity's prediction is the mean target of its k most cosine similar
    other entities.

    Args:
        store (EmbeddingStore): The embeddings
        gold (GoldLabelSet): Numeric targets
        k (int): Neighbours per prediction

    Returns:
        MetricResult: The root mean squared error

    Raises:
        EvaluationError:
            When fewer than k + 1 entities are in the store
    '''
    assert isinstance(store, EmbeddingStore), "a store is required"
    assert isinstance(gold, GoldLabelSet) and gold.numeric, "numeric targets are required"
    check_int(k, "k", minimum=1)

    _tokens, _excluded = _split_present(store, gold.labels, "regression")
    if len(_tokens) < k + 1:
        raise EvaluationError(f"regression needs at least {k + 1} entities, have {len(_tokens)}")

    _targets = np.asarray([float(gold.labels[_t]) for _t in _tokens])
    _predicted = _targets[_loo_neighbours(store, _tokens, k)].mean(axis=1)
    _rmse = float(np.sqrt(np.mean((_predicted - _targets) ** 2)))

    return MetricResult(_rmse, len(_tokens), _excluded)


###########################################################################
#
# Clustering
#
###########################################################################
#
# kmeans_plusplus
#
def kmeans_plusplus(points: np.ndarray, k: int, rng: np.random.Generator) -> np.ndarray:
    ''' k-means++ seeding: the (k, d) initial centres '''
    _n = points.shape[0]
    _centres = np.empty((k, points.shape[1]), dtype=np.float64)
    _centres[0] = points[rng.integers(0, _n)]

    _dist = ((points - _centres[0]) ** 2).sum(axis=1)
    for _i in range(1, k):
        _total = _dist.sum()
        if _total > 0.0:
            _next = rng.choice(_n, p=_dist / _total)
        else:
            _next = rng.integers(0, _n)

        _centres[_i] = points[_next]
        _dist = np.minimum(_dist, ((points - _centres[_i]) ** 2).sum(axis=1))

    return _centres


#
# kmeans
#
def kmeans(
        points: np.ndarray,
        k: int,
        rng: np.random.Generator,
        max_iterations: int = MAX_KMEANS_ITERATIONS
) -> tuple[np.ndarray, float]:
    '''
    Lloyd's k-means from a k-means++ start

    Args:
        points (np.ndarray): (n, d) points
        k (int): Number of clusters
        rng (np.random.Generator): The random source
        max_iterations (int): Iteration limit

    Returns:
        tuple: (cluster of each point, inertia)

    Raises:
        None
    '''
    _centres = kmeans_plusplus(points, k, rng)
    _assign = np.full(points.shape[0], -1)

    for _ in range(max_iterations):
        _dist = ((points[:, np.newaxis, :] - _centres[np.newaxis, :, :]) ** 2).sum(axis=2)
        _new = _dist.argmin(axis=1)
        if np.array_equal(_new, _assign): break

        _assign = _new
        for _c in range(k):
            _members = points[_assign == _c]
            if len(_members):
                _centres[_c] = _members.mean(axis=0)
            else:
                # Empty cluster restarts at the point worst served
                _centres[_c] = points[_dist.min(axis=1).argmax()]

    _inertia = float(((points - _centres[_assign]) ** 2).sum())

    return _assign, _inertia


#
# cluster_accuracy
#
def cluster_accuracy(labels: Sequence[str], clusters: Sequence[int]) -> float:
    ''' Accuracy under the best one-to-one cluster -> label matching '''
    _classes = sorted(set(labels))
    _ids = sorted(set(int(_c) for _c in clusters))
    _confusion = np.zeros((len(_ids), len(_classes)), dtype=np.int64)
    for _label, _cluster in zip(labels, clusters):
        _confusion[_ids.index(int(_cluster)), _classes.index(_label)] += 1

    _rows, _cols = linear_sum_assignment(_confusion, maximize=True)

    return float(_confusion[_rows, _cols].sum()) / len(labels)


#
# kmeans_cluster_accuracy
#
def kmeans_cluster_accuracy(
        store: EmbeddingStore | None = None,
        gold: GoldLabelSet | None = None,
        k: int | None = None,
        restarts: int = DEFAULT_RESTARTS,
        seed: int = 0
) -> MetricResult:
    '''
    Clustering accuracy of k-means over the gold entities

    The run with the lowest inertia over the restarts is kept.  Accuracy is
    taken under the optimal assignment of clusters to gold classes, so
    renaming the classes does not change it.

    Args:
        store (EmbeddingStore): The embeddings
        gold (GoldLabelSet): Class labels
        k (int): Number of clusters (defaults to the number of classes)
        restarts (int): Number of k-means runs
        seed (int): Seed for the runs

    Returns:
        MetricResult: Accuracy in [0, 1]

    Raises:
        EvaluationError:
            When k exceeds the number of entities in the store
    '''
    assert isinstance(store, EmbeddingStore), "a store is required"
    assert isinstance(gold, GoldLabelSet) and not gold.numeric, "class labels are required"
    check_int(restarts, "restarts", minimum=1)
    check_int(seed, "seed", minimum=0)

    _tokens, _excluded = _split_present(store, gold.labels, "clustering")
    _labels = [str(gold.labels[_t]) for _t in _tokens]
    _k = len(set(_labels)) if k is None else check_int(k, "k", minimum=1)

    if _k > len(_tokens) or not _tokens:
        raise EvaluationError(f"cannot form {_k} clusters from {len(_tokens)} entities")

    _points = np.asarray([store.vector(_t) for _t in _tokens], dtype=np.float64)
    _rng = np.random.default_rng(seed)

    _best: tuple[np.ndarray, float] | None = None
    for _ in range(restarts):
        _run = kmeans(_points, _k, _rng)
        if _best is None or _run[1] < _best[1]: _best = _run

    assert _best is not None

    return MetricResult(cluster_accuracy(_labels, _best[0]), len(_tokens), _excluded)


###########################################################################
#
# Analogies
#
###########################################################################
#
# analogy_accuracy
#
def analogy_accuracy(
        store: EmbeddingStore | None = None,
        quads: Sequence[AnalogyQuad] = ()
) -> MetricResult:
    '''
    Fraction of quads where 3CosAdd on (a, a_star, b) ranks b_star first

    Quads with a token missing from the store count as incorrect and the
    missing tokens are reported.

    Args:
        store (EmbeddingStore): The embeddings
        quads (Sequence): The analogy quads

    Returns:
        MetricResult: Accuracy in [0, 1] over all quads

    Raises:
        EvaluationError:
            When there are no quads
    '''
    assert isinstance(store, EmbeddingStore), "a store is required"
    if not quads: raise EvaluationError("analogy needs at least one quad")

    _missing: set[str] = set()
    _correct = 0
    for _quad in quads:
        _absent = [_t for _t in _quad if _t not in store]
        if _absent:
            _missing.update(_absent)
            continue

        _answer = store.analogy(_quad.a, _quad.a_star, _quad.b, k=1)
        if _answer and _answer[0][0] == _quad.b_star: _correct += 1

    if _missing:
        _logger().warning(f"analogy: {len(_missing)} tokens missing, their quads count as wrong")

    return MetricResult(_correct / len(quads), len(quads), tuple(sorted(_missing)))


###########################################################################
#
# Entity Relatedness
#
###########################################################################
#
# kendall_tau
#
def kendall_tau(
        gold: GoldRanking | Sequence[str] | None = None,
        predicted: Sequence[str] = ()
) -> float:
    '''
    Kendall tau between a gold ranking and a predicted ranking

    Both rankings hold the same distinct items, so there are no ties and
    tau-b equals (concordant - discordant) / (n (n - 1) / 2).

    Args:
        gold (GoldRanking | Sequence): The gold order
        predicted (Sequence): The same items in predicted order

    Returns:
        float: tau in [-1, 1]

    Raises:
        AssertionError:
            When the two rankings do not hold the same items
    '''
    _gold = list(gold.ranking if isinstance(gold, GoldRanking) else gold or ())
    _predicted = list(predicted)
    if sorted(_gold) != sorted(_predicted) or len(set(_gold)) != len(_gold):
        raise AssertionError("rankings must hold the same distinct items")

    if len(_gold) < 2: raise AssertionError("rankings need at least 2 items")

    _position = {_t: _i for _i, _t in enumerate(_predicted)}

    return float(kendalltau(range(len(_gold)), [_position[_t] for _t in _gold]).statistic)


#
# rank_by_cosine
#
def rank_by_cosine(
        store: EmbeddingStore | None = None,
        anchor: str = "",
        candidates: Sequence[str] = ()
) -> list[str]:
    '''
    Order candidates by descending cosine to an anchor, ties by token order

    Args:
        store (EmbeddingStore): The embeddings
        anchor (str): The anchor token
        candidates (Sequence): Tokens to order

    Returns:
        list: The candidates, most similar first

    Raises:
        KeyError:
            When a token is not in the store
    '''
    assert isinstance(store, EmbeddingStore), "a store is required"

    _scores = store.similarities(store.vector(anchor))
    return sorted(candidates, key=lambda _t: (-_scores[store.index(_t)], _t))


#
# entity_relatedness
#
def entity_relatedness(
        store: EmbeddingStore | None = None,
        rankings: Sequence[GoldRanking] = ()
) -> MetricResult:
    '''
    Mean Kendall tau of the cosine ranking against each gold ranking

    Missing comparison entities are dropped from their ranking; a ranking
    whose anchor is missing or that keeps fewer than 2 entities is skipped.

    Args:
        store (EmbeddingStore): The embeddings
        rankings (Sequence): The gold rankings

    Returns:
        MetricResult: Mean tau in [-1, 1] over the rankings evaluated

    Raises:
        EvaluationError:
            When no ranking can be evaluated
    '''
    assert isinstance(store, EmbeddingStore), "a store is required"

    _taus = []
    _missing: set[str] = set()
    for _gold in rankings:
        _present, _absent = _split_present(store, _gold.ranking, "relatedness")
        _missing.update(_absent)
        if _gold.anchor not in store:
            _missing.add(_gold.anchor)
            continue

        if len(_present) < 2: continue

        _taus.append(kendall_tau(_present, rank_by_cosine(store, _gold.anchor, _present)))

    if not _taus: raise EvaluationError("no relatedness ranking could be evaluated")

    return MetricResult(float(np.mean(_taus)), len(_taus), tuple(sorted(_missing)))


###########################################################################
#
# Document Similarity
#
###########################################################################
#
# document_vector
#
def document_vector(
        store: EmbeddingStore,
        document: Iterable[tuple[str, float]]
) -> np.ndarray | None:
    ''' Weight normalised mean of the entity vectors present (None if none) '''
    _total = 0.0
    _sum = np.zeros(store.dim)
    for _token, _weight in document:
        if _token not in store: continue

        _sum += _weight * store.vector(_token)
        _total += _weight

    return _sum / _total if _total > 0.0 else None


#
# document_similarity
#
def document_similarity(
        store: EmbeddingStore | None = None,
        pairs: Sequence[DocumentPair] = ()
) -> MetricResult:
    '''
    Harmonic mean of the Pearson and Spearman correlations between the cosine
    of document vectors and the gold scores

    Args:
        store (EmbeddingStore): The embeddings
        pairs (Sequence): The document pairs

    Returns:
        MetricResult: 2 r rho / (r + rho)

    Raises:
        EvaluationError:
            When fewer than 2 pairs can be evaluated, the gold scores or the
            predictions are constant, or the correlations differ in sign (the
            harmonic mean is then undefined)
    '''
    assert isinstance(store, EmbeddingStore), "a store is required"

    _predicted, _gold = [], []
    _missing: set[str] = set()
    for _pair in pairs:
        _missing.update(_t for _t, _ in _pair.first + _pair.second if _t not in store)

        _first = document_vector(store, _pair.first)
        _second = document_vector(store, _pair.second)
        if _first is None or _second is None: continue

        _norm = float(np.linalg.norm(_first) * np.linalg.norm(_second))
        _predicted.append(float(_first @ _second) / _norm if _norm > 0.0 else 0.0)
        _gold.append(_pair.score)

    if _missing:
        _logger().warning(f"documents: {len(_missing)} entities missing from the store excluded")

    if len(_gold) < 2: raise EvaluationError("document similarity needs at least 2 pairs")
    if np.ptp(_gold) == 0.0: raise EvaluationError("gold document scores are constant")
    if np.ptp(_predicted) == 0.0:
        raise EvaluationError("predicted document similarities are constant")

    _r = float(pearsonr(_predicted, _gold).statistic)
    _rho = float(spearmanr(_predicted, _gold).statistic)
    if _r * _rho <= 0.0:
        raise EvaluationError(
            f"harmonic mean undefined for r={_r:.4f}, rho={_rho:.4f}"
        )

    return MetricResult(2.0 * _r * _rho / (_r + _rho), len(_gold), tuple(sorted(_missing)))


###########################################################################
#
# Pair Separation
#
###########################################################################
#
# pair_separation
#
def pair_separation(
        store: EmbeddingStore | None = None,
        pairs: Sequence[tuple[str, str]] = (),
        seed: int = 0,
        samples: int = DEFAULT_SEPARATION_SAMPLES,
        population: Sequence[str] | None = None
) -> Separation:
    '''
    Mean cosine of gold pairs compared with random pairs

    Args:
        store (EmbeddingStore): The embeddings
        pairs (Sequence): Gold (token, token) pairs
        seed (int): Seed for the random pairs
        samples (int): Number of random pairs
        population (Sequence): Tokens random pairs are drawn from (defaults
            to every token of the store)

    Returns:
        Separation: The two means and their difference (the margin)

    Raises:
        EvaluationError:
            When no gold pair is in the store or the population has fewer
            than 2 tokens
    '''
    assert isinstance(store, EmbeddingStore), "a store is required"
    check_int(samples, "samples", minimum=1)

    _missing: set[str] = set()
    _scores = []
    for _first, _second in pairs:
        _absent = [_t for _t in (_first, _second) if _t not in store]
        if _absent:
            _missing.update(_absent)
            continue

        _unit = _unit_rows(store, [_first, _second])
        _scores.append(float(_unit[0] @ _unit[1]))

    if not _scores: raise EvaluationError("no gold pair is in the store")

    _population = [_t for _t in (store.tokens if population is None else population) if _t in store]
    if len(_population) < 2:
        raise EvaluationError("random pairs need at least 2 tokens")

    _rng = np.random.default_rng(seed)
    _i = _rng.integers(0, len(_population), samples)
    _j = (_i + _rng.integers(1, len(_population), samples)) % len(_population)

    _unit = _unit_rows(store, _population)
    _random = float(np.mean(np.einsum("nd,nd->n", _unit[_i], _unit[_j])))
    _pair_mean = float(np.mean(_scores))

    return Separation(
        pair_mean=_pair_mean,
        random_mean=_random,
        margin=_pair_mean - _random,
        evaluated=len(_scores),
        excluded=tuple(sorted(_missing))
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
