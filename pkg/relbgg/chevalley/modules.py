"""
Módulos de peso máximo irredutíveis construídos nível a nível.

Cada candidato ``f_i b`` é identificado pela sua assinatura
``(e_j f_i b)_j = (f_i e_j b + δ_ij <wt(b), alpha_i^vee> b)_j``; num módulo
irredutível um vetor abaixo do topo é nulo se e só se todos os e_j o anulam,
então as relações lineares entre candidatos são as relações entre
assinaturas, obtidas por escalonamento exato.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterable, List, Tuple

from sympy.polys.matrices import DomainMatrix

from relbgg import config, linalg
from relbgg.errors import ChainSizeExceeded, ConsistencyError
from relbgg.rootsys import Root, RootSystem, Weight, as_weight, sub_weights

logger = logging.getLogger(__name__)

Vector = Dict[int, Fraction]


@dataclass
class HighestWeightModule:
    """Base de vetores-peso com as matrizes de e_i e f_i (coluna b = imagem de b)."""

    weights: List[Weight]
    raising: Dict[int, DomainMatrix]
    lowering: Dict[int, DomainMatrix]

    @property
    def dim(self) -> int:
        return len(self.weights)


def _apply(columns: Dict[int, Vector], vec: Vector) -> Vector:
    out: Vector = {}
    for b, coef in vec.items():
        for r, val in columns.get(b, {}).items():
            out[r] = out.get(r, Fraction(0)) + coef * val
    return {r: v for r, v in out.items() if v}


def _signature(i: int, b: int, nodes: List[int], weights: List[Weight],
               e_cols: Dict[int, Dict[int, Vector]], f_cols: Dict[int, Dict[int, Vector]]) -> Dict[Tuple[int, int], Fraction]:
    sig: Dict[Tuple[int, int], Fraction] = {}
    for j in nodes:
        vec = _apply(f_cols[i], e_cols[j].get(b, {}))
        if i == j and weights[b][i - 1]:
            vec[b] = vec.get(b, Fraction(0)) + weights[b][i - 1]
        for r, val in vec.items():
            if val:
                sig[(j, r)] = val
    return sig


def highest_weight_module(rs: RootSystem, highest, nodes: Iterable[int]) -> HighestWeightModule:
    """Irredutível de peso máximo ``highest`` para a subálgebra gerada por e_i, f_i, i ∈ nodes.

    Os pesos são carregados em todas as coordenadas; as coordenadas fora de
    ``nodes`` mudam apenas pelas linhas da matriz de Cartan.
    """
    nodes = sorted(nodes)
    cap = config.max_chain_dim()
    weights: List[Weight] = [as_weight(highest)]
    e_cols: Dict[int, Dict[int, Vector]] = {i: {} for i in nodes}
    f_cols: Dict[int, Dict[int, Vector]] = {i: {} for i in nodes}
    level = [0]
    depth = 0
    while level:
        depth += 1
        groups: Dict[Weight, List[Tuple[int, int]]] = {}
        for b in level:
            for i in nodes:
                groups.setdefault(sub_weights(weights[b], rs.simple_root_weight(i)), []).append((i, b))
        new_level = []
        for wt, candidates in groups.items():
            signatures = [_signature(i, b, nodes, weights, e_cols, f_cols) for i, b in candidates]
            row_of: Dict[Tuple[int, int], int] = {}
            entries = {}
            for col, sig in enumerate(signatures):
                for key, val in sig.items():
                    entries[(row_of.setdefault(key, len(row_of)), col)] = val
            if not row_of:
                for i, b in candidates:
                    f_cols[i][b] = {}
                continue
            reduced, pivots = linalg.rref(linalg.sparse(entries, (len(row_of), len(candidates))))
            reduced_rows = reduced.to_dod()
            new_index = {}
            for col in pivots:
                i, b = candidates[col]
                n = len(weights)
                weights.append(wt)
                new_index[col] = n
                new_level.append(n)
                f_cols[i][b] = {n: Fraction(1)}
                for j in nodes:
                    block = {r: val for (jj, r), val in signatures[col].items() if jj == j}
                    if block:
                        e_cols[j][n] = block
            pivot_set = set(pivots)
            for col, (i, b) in enumerate(candidates):
                if col in pivot_set:
                    continue
                vec = {}
                for r, p in enumerate(pivots):
                    value = reduced_rows.get(r, {}).get(col)
                    if value:
                        vec[new_index[p]] = linalg.to_fraction(value)
                f_cols[i][b] = vec
        if len(weights) > cap:
            logger.warning(f"Módulo de peso máximo excedeu {cap} vetores (RELBGG_MAX_CHAIN_DIM)")
            raise ChainSizeExceeded(f"módulo com mais de {cap} vetores")
        logger.debug(f"Nível {depth}: {len(new_level)} vetores novos")
        level = new_level

    dim = len(weights)

    def to_matrix(cols: Dict[int, Vector]) -> DomainMatrix:
        return linalg.sparse({(r, b): v for b, vec in cols.items() for r, v in vec.items()}, (dim, dim))

    return HighestWeightModule(
        weights=weights,
        raising={i: to_matrix(e_cols[i]) for i in nodes},
        lowering={i: to_matrix(f_cols[i]) for i in nodes},
    )


@lru_cache(maxsize=None)
def root_recipe(rs: RootSystem, root: Root) -> Tuple[int, Root, int]:
    """(i, beta, p) com alpha = alpha_i + beta, i mínimo, p máximo com beta - p alpha_i raiz."""
    for i in rs.nodes:
        if root[i - 1] <= 0:
            continue
        beta = list(root)
        beta[i - 1] -= 1
        beta = tuple(beta)
        if not rs.is_positive_root(beta):
            continue
        p = 0
        down = list(beta)
        while True:
            down[i - 1] -= 1
            if rs.is_root(tuple(down)):
                p += 1
            else:
                break
        return i, beta, p
    raise ConsistencyError(f"raiz {root} sem decomposição alpha_i + beta")


def extend_root_vectors(raising: Dict[int, DomainMatrix], lowering: Dict[int, DomainMatrix],
                        rs: RootSystem, nodes: Iterable[int]) -> Tuple[Dict[Root, DomainMatrix], Dict[Root, DomainMatrix]]:
    """Vetores de raiz E_alpha, F_alpha para as raízes positivas suportadas em ``nodes``.

    E_alpha = [e_i, E_beta]/(p+1) e F_alpha = [F_beta, f_i]/(p+1), de modo que
    [E_alpha, F_alpha] é a co-raiz de alpha.
    """
    support = set(nodes)
    e_vec: Dict[Root, DomainMatrix] = {}
    f_vec: Dict[Root, DomainMatrix] = {}
    for root in rs.positive_roots:
        if any(c and (k + 1) not in support for k, c in enumerate(root)):
            continue
        if sum(root) == 1:
            i = root.index(1) + 1
            e_vec[root] = raising[i]
            f_vec[root] = lowering[i]
            continue
        i, beta, p = root_recipe(rs, root)
        factor = Fraction(1, p + 1)
        e_vec[root] = linalg.scale(linalg.commutator(raising[i], e_vec[beta]), factor)
        f_vec[root] = linalg.scale(linalg.commutator(f_vec[beta], lowering[i]), factor)
    return e_vec, f_vec
