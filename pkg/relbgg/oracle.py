"""
Oráculos de força bruta: multiplicidades de Freudenthal, fórmula de dimensão
de Weyl e enumeração exaustiva dos pesos das cadeias.

Este módulo não usa ``relbgg.homology``; serve para conferir o motor
principal de forma independente.
"""

import logging
from collections import Counter
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Sequence, Tuple

from relbgg import weyl
from relbgg.errors import ConsistencyError, WeightError
from relbgg.parabolic import (
    ParabolicPair,
    delta_p,
    levi_delta,
    levi_nodes,
    levi_roots,
    partition,
    relative_hasse,
)
from relbgg.rootsys import Root, RootSystem, Weight, add_weights, as_weight, neg_weight, sub_weights

logger = logging.getLogger(__name__)


def _require_levi_dominant(weight: Weight, levi_sigma: Iterable[int], rs: RootSystem) -> None:
    if len(weight) != rs.rank:
        raise WeightError(f"peso com {len(weight)} coordenadas; esperado {rs.rank}", flag="--lambda")
    for i in levi_nodes(levi_sigma, rs):
        x = weight[i - 1]
        if x.denominator != 1 or x < 0:
            raise WeightError(
                f"peso {tuple(str(c) for c in weight)} não é dominante inteiro no nó {i}", flag="--lambda"
            )


def freudenthal(weight: Sequence, levi_sigma: Iterable[int], rs: RootSystem) -> Dict[Weight, int]:
    """Multiplicidades da irredutível do Levi com peso máximo ``weight``.

    Percorre os pesos por profundidade (número de raízes simples do Levi
    subtraídas) usando a recursão de Freudenthal com a forma de Killing de g.
    As coordenadas dos nós cruzados (centro do Levi) são carregadas intactas.

    Args:
        weight: Peso máximo, dominante inteiro nos nós não cruzados
        levi_sigma: Nós cruzados da parabólica cujo Levi é considerado
        rs: Sistema de raízes

    Returns:
        Dicionário peso -> multiplicidade positiva
    """
    top = as_weight(weight)
    levi_sigma = tuple(levi_sigma)
    _require_levi_dominant(top, levi_sigma, rs)
    nodes = levi_nodes(levi_sigma, rs)
    roots = [(sum(r), rs.root_to_weight(r)) for r in levi_roots(levi_sigma, rs)]
    d_levi = levi_delta(levi_sigma, rs)
    top_norm = rs.norm_sq(add_weights(top, d_levi))

    mult: Dict[Weight, int] = {top: 1}
    depth_of: Dict[Weight, int] = {top: 0}
    level = [top]
    depth = 0
    while level:
        depth += 1
        candidates = []
        for mu in level:
            for i in nodes:
                nxt = sub_weights(mu, rs.simple_root_weight(i))
                if nxt not in depth_of:
                    depth_of[nxt] = depth
                    candidates.append(nxt)
        level = []
        for mu in candidates:
            denominator = top_norm - rs.norm_sq(add_weights(mu, d_levi))
            if denominator == 0:
                continue
            numerator = Fraction(0)
            for ht, alpha in roots:
                for k in range(1, depth // ht + 1):
                    shifted = add_weights(mu, [k * a for a in alpha])
                    m = mult.get(shifted, 0)
                    if m:
                        numerator += m * rs.inner(shifted, alpha)
            value = 2 * numerator / denominator
            if value.denominator != 1:
                logger.error(f"Multiplicidade não inteira {value} no peso {mu}")
                raise ConsistencyError(f"recursão de Freudenthal produziu valor não inteiro {value}")
            if value > 0:
                mult[mu] = int(value)
                level.append(mu)
    return mult


def weyl_dimension(weight: Sequence, levi_sigma: Iterable[int], rs: RootSystem) -> int:
    """Dimensão da irredutível do Levi com peso máximo ``weight``."""
    top = as_weight(weight)
    levi_sigma = tuple(levi_sigma)
    _require_levi_dominant(top, levi_sigma, rs)
    d_levi = levi_delta(levi_sigma, rs)
    shifted = add_weights(top, d_levi)
    result = Fraction(1)
    for root in levi_roots(levi_sigma, rs):
        alpha = rs.root_to_weight(root)
        result *= rs.inner(shifted, alpha) / rs.inner(d_levi, alpha)
    if result.denominator != 1:
        raise ConsistencyError(f"fórmula de Weyl produziu valor não inteiro {result}")
    return int(result)


def _root_sum(roots: Sequence[Root], rs: RootSystem) -> Weight:
    total = as_weight([0] * rs.rank)
    for root in roots:
        total = add_weights(total, rs.root_to_weight(root))
    return total


def chain_multiplicity(nu: Sequence, k: int, weight: Sequence, pair: ParabolicPair, rs: RootSystem) -> int:
    """Multiplicidade do peso -nu em Λ^k(q+ ∩ p0) ⊗ V.

    V tem peso mínimo -lambda, logo m_V(x) = m_lambda(-x). Conta os pares
    (Psi, v) com -nu = wt(v) + soma(Psi), |Psi| = k.
    """
    nu = as_weight(nu)
    mult = freudenthal(weight, pair.sigma_p, rs)
    mid = partition(pair, rs).mid
    total = 0
    for subset in combinations(mid, k):
        total += mult.get(add_weights(nu, _root_sum(subset, rs)), 0)
    return total


def chain_weights(k: int, weight: Sequence, pair: ParabolicPair, rs: RootSystem) -> Counter:
    """Multiconjunto de todos os pesos de Λ^k(q+ ∩ p0) ⊗ V."""
    mult = freudenthal(weight, pair.sigma_p, rs)
    mid = partition(pair, rs).mid
    weights: Counter = Counter()
    for subset in combinations(mid, k):
        shift = _root_sum(subset, rs)
        for mu, m in mult.items():
            weights[add_weights(neg_weight(mu), shift)] += m
    return weights


def lowest_weight_exclusion(weight: Sequence, pair: ParabolicPair, rs: RootSystem) -> List[Tuple[Weight, Root]]:
    """Pares (nu_w, alpha) que violam ||nu_w + alpha + delta_p|| > ||lambda + delta_p||.

    Percorre w ∈ W^q_p e alpha ∈ Delta+(q0); lista vazia significa que a
    desigualdade estrita vale em todos os casos.
    """
    weight = as_weight(weight)
    dp = delta_p(pair, rs)
    bound = rs.norm_sq(add_weights(weight, dp))
    q0 = partition(pair, rs).q0
    violations = []
    for w in relative_hasse(pair, rs):
        nu = weyl.affine_action(w, weight, dp)
        for alpha in q0:
            if rs.norm_sq(add_weights(nu, rs.root_to_weight(alpha), dp)) <= bound:
                violations.append((nu, alpha))
    return violations
