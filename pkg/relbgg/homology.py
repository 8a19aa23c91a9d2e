"""
Motor de homologia no nível dos pesos.

Os pesos ``nu`` são reportados como negativos de pesos mínimos: a componente
de grau k com palavra w é a q0-irredutível de peso mínimo -nu, nu = w·lambda.
"""

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Sequence, Tuple

from relbgg import weyl
from relbgg.errors import ConsistencyError, WeightError
from relbgg.oracle import weyl_dimension
from relbgg.parabolic import (
    ParabolicPair,
    delta_p,
    hasse,
    is_dominant,
    is_integral,
    relative_hasse,
)
from relbgg.rootsys import Root, RootSystem, Weight, add_weights, as_weight, delta, format_weight
from relbgg.weyl import WeylElement

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class HomologyEntry:
    degree: int
    weyl_word: WeylElement
    nu: Weight
    laplacian_gap: Fraction = Fraction(0)


@dataclass
class BigradedTable:
    """Entradas indexadas por (grau relativo i, grau absoluto em p j)."""

    entries: Dict[Tuple[int, int], List[HomologyEntry]] = field(default_factory=dict)

    def flatten(self) -> Dict[int, List[HomologyEntry]]:
        by_degree: Dict[int, List[HomologyEntry]] = {}
        for (i, j), items in sorted(self.entries.items()):
            by_degree.setdefault(i + j, []).extend(items)
        return by_degree

    def degree_counts(self) -> List[int]:
        flat = self.flatten()
        if not flat:
            return []
        return [len(flat.get(k, [])) for k in range(max(flat) + 1)]


@dataclass(frozen=True)
class SingularPattern:
    entries: List[HomologyEntry]
    walls: List[Root]


def _check_weight(weight: Sequence, rs: RootSystem, sigma: Iterable[int], what: str) -> Weight:
    weight = as_weight(weight)
    if len(weight) != rs.rank:
        raise WeightError(f"peso com {len(weight)} coordenadas; esperado {rs.rank}", flag="--lambda")
    if not is_integral(weight):
        raise WeightError(f"peso {format_weight(weight)} não é inteiro", flag="--lambda")
    if not is_dominant(weight, sigma):
        raise WeightError(f"peso {format_weight(weight)} não é {what}-dominante", flag="--lambda")
    return weight


def laplacian_scalar(weight: Sequence, nu: Sequence, pair: ParabolicPair, rs: RootSystem) -> Fraction:
    """½(||lambda + delta_p||² - ||nu + delta_p||²)."""
    dp = delta_p(pair, rs)
    return (rs.norm_sq(add_weights(weight, dp)) - rs.norm_sq(add_weights(nu, dp))) / 2


def _relative_entries(weight: Weight, pair: ParabolicPair, rs: RootSystem) -> List[HomologyEntry]:
    dp = delta_p(pair, rs)
    d = delta(rs)
    entries = []
    seen = set()
    for w in relative_hasse(pair, rs):
        nu = weyl.affine_action(w, weight, dp)
        if nu != weyl.affine_action(w, weight, d):
            logger.error(f"Deslocamentos delta e delta_p discordam para w = {weyl.word_string(w)}")
            raise ConsistencyError(f"w(lambda+delta)-delta != w(lambda+delta_p)-delta_p para {weyl.word_string(w)}")
        if not (is_integral(nu) and is_dominant(nu, pair.sigma_q)):
            logger.error(f"nu = {format_weight(nu)} não é q-dominante para w = {weyl.word_string(w)}")
            raise ConsistencyError(f"nu = {format_weight(nu)} não é q-dominante inteiro")
        if nu in seen:
            raise ConsistencyError(f"nu = {format_weight(nu)} repetido na órbita relativa")
        seen.add(nu)
        gap = laplacian_scalar(weight, nu, pair, rs)
        if gap != 0:
            raise ConsistencyError(f"escalar do laplaciano {gap} não nulo em nu = {format_weight(nu)}")
        entries.append(HomologyEntry(degree=w.length, weyl_word=w, nu=nu, laplacian_gap=gap))
    return entries


def relative_homology(weight: Sequence, pair: ParabolicPair, rs: RootSystem) -> List[HomologyEntry]:
    """H_*(q+/p+, V) no nível dos pesos: uma entrada por w ∈ W^q_p.

    Args:
        weight: lambda, p-dominante inteiro (V tem peso mínimo -lambda)
        pair: Par parabólico
        rs: Sistema de raízes

    Returns:
        Entradas ordenadas por grau e palavra canônica
    """
    weight = _check_weight(weight, rs, pair.sigma_p, "p")
    return _relative_entries(weight, pair, rs)


def absolute_homology(weight: Sequence, sigma_q: Iterable[int], rs: RootSystem) -> List[HomologyEntry]:
    """Teorema de Kostant: H_*(q+, V) para V uma g-irredutível."""
    weight = _check_weight(weight, rs, (), "g")
    return _relative_entries(weight, ParabolicPair(frozenset(), frozenset(sigma_q)), rs)


def factorized_homology(weight: Sequence, pair: ParabolicPair, rs: RootSystem) -> BigradedTable:
    """Tabela bigraduada H_i(q+/p+, H_j(p+, V)).

    Para cada w2 ∈ W^p calcula mu = w2·lambda e aplica a homologia relativa
    a mu; o resultado achatado por i + j é comparado com a homologia absoluta.
    """
    weight = _check_weight(weight, rs, (), "g")
    d = delta(rs)
    table = BigradedTable()
    for w2 in hasse(pair.sigma_p, rs):
        mu = weyl.affine_action(w2, weight, d)
        if not is_dominant(mu, pair.sigma_p):
            raise ConsistencyError(f"mu = {format_weight(mu)} não é p-dominante para w2 = {weyl.word_string(w2)}")
        for entry in _relative_entries(mu, pair, rs):
            w = weyl.multiply(entry.weyl_word, w2)
            if entry.nu != weyl.affine_action(w, weight, d):
                raise ConsistencyError(f"w1·(w2·lambda) != (w1 w2)·lambda para w = {weyl.word_string(w)}")
            key = (entry.degree, w2.length)
            table.entries.setdefault(key, []).append(
                HomologyEntry(degree=w.length, weyl_word=w, nu=entry.nu, laplacian_gap=entry.laplacian_gap)
            )
    for items in table.entries.values():
        items.sort(key=lambda e: e.weyl_word.sort_key)

    flat = Counter((k, e.nu) for k, items in table.flatten().items() for e in items)
    absolute = Counter((e.degree, e.nu) for e in _relative_entries(weight, ParabolicPair(frozenset(), pair.sigma_q), rs))
    if flat != absolute:
        logger.error(f"Tabela fatorada difere da homologia absoluta para lambda = {format_weight(weight)}")
        raise ConsistencyError("multiconjunto da tabela fatorada difere da homologia absoluta")
    logger.debug(f"Tabela fatorada com {sum(len(v) for v in table.entries.values())} entradas")
    return table


def walls(weight: Sequence, rs: RootSystem) -> List[Root]:
    """Raízes positivas alpha com <lambda + delta, alpha^vee> = 0."""
    shifted = add_weights(as_weight(weight), delta(rs))
    return [root for root in rs.positive_roots if rs.pairing(shifted, root) == 0]


def singular_patterns(weight: Sequence, pair: ParabolicPair, rs: RootSystem) -> SingularPattern:
    """Mesma órbita relativa, acompanhada das paredes em que lambda + delta está."""
    entries = relative_homology(weight, pair, rs)
    return SingularPattern(entries=entries, walls=walls(weight, rs))


def degree_counts(entries: Iterable[HomologyEntry]) -> List[int]:
    counts = Counter(e.degree for e in entries)
    if not counts:
        return []
    return [counts.get(k, 0) for k in range(max(counts) + 1)]


def homology_dimensions(weight: Sequence, pair: ParabolicPair, rs: RootSystem) -> Dict[int, int]:
    """dim H_k(q+/p+, V) prevista: soma de weyl_dimension(w·lambda) sobre o Levi de q."""
    dims: Dict[int, int] = {}
    for entry in relative_homology(weight, pair, rs):
        dims[entry.degree] = dims.get(entry.degree, 0) + weyl_dimension(entry.nu, pair.sigma_q, rs)
    return dims
