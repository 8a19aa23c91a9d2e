"""
Representações irredutíveis explícitas de p sobre os racionais.

V tem peso mínimo -lambda: constrói-se o módulo de peso máximo lambda do
Levi e torce-se pela involução de Chevalley (e_alpha -> -f_alpha,
f_alpha -> -e_alpha, h -> -h). O radical p_+ age por zero.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from sympy.polys.matrices import DomainMatrix

from relbgg import linalg
from relbgg.chevalley.basis import ChevalleyBasis
from relbgg.chevalley.modules import extend_root_vectors, highest_weight_module
from relbgg.errors import ConsistencyError, WeightError
from relbgg.oracle import weyl_dimension
from relbgg.parabolic import is_dominant, is_integral, levi_nodes, sigma_height
from relbgg.rootsys import Weight, as_weight, neg_weight

logger = logging.getLogger(__name__)


@dataclass
class ExplicitRep:
    """Vetores-peso e matrizes de ação indexadas pela base de Chevalley."""

    weights: List[Weight]
    actions: Dict[int, DomainMatrix]
    label: str = ""
    dimension: Optional[int] = None

    @property
    def dim(self) -> int:
        if self.dimension is not None:
            return self.dimension
        return len(self.weights)

    def action(self, index: int) -> DomainMatrix:
        try:
            return self.actions[index]
        except KeyError:
            raise ConsistencyError(f"elemento {index} da base não age em {self.label or 'V'}")

    def defines(self, index: int) -> bool:
        return index in self.actions

    def representation_violations(self, cb: ChevalleyBasis) -> List[Tuple[int, int]]:
        """Pares (a, b) com rho([x_a, x_b]) != [rho(x_a), rho(x_b)]."""
        failures = []
        indices = sorted(self.actions)
        for pos, a in enumerate(indices):
            for b in indices[pos + 1:]:
                bracket = cb.bracket(a, b)
                if any(c not in self.actions for c in bracket):
                    continue
                lhs = linalg.total(
                    (linalg.scale(self.actions[c], coef) for c, coef in bracket.items()),
                    (self.dim, self.dim),
                )
                if not linalg.equal(lhs, linalg.commutator(self.actions[a], self.actions[b])):
                    failures.append((a, b))
        return failures


def build_irrep(weight, levi_sigma: Iterable[int], cb: ChevalleyBasis) -> ExplicitRep:
    """Irredutível da parabólica ``levi_sigma`` com peso mínimo -``weight``.

    Args:
        weight: lambda, dominante inteiro nos nós não cruzados
        levi_sigma: Nós cruzados da parabólica (vazio para g)
        cb: Base de Chevalley de g

    Returns:
        ExplicitRep com e_alpha, h_i para todo alpha e f_alpha para alpha no Levi
    """
    rs = cb.rs
    top = as_weight(weight)
    levi_sigma = tuple(sorted(levi_sigma))
    if len(top) != rs.rank:
        raise WeightError(f"peso com {len(top)} coordenadas; esperado {rs.rank}", flag="--lambda")
    if not (is_integral(top) and is_dominant(top, levi_sigma)):
        raise WeightError(f"peso {tuple(str(x) for x in top)} não é dominante inteiro para o Levi", flag="--lambda")
    nodes = levi_nodes(levi_sigma, rs)
    module = highest_weight_module(rs, top, nodes)
    expected = weyl_dimension(top, levi_sigma, rs)
    if module.dim != expected:
        logger.error(f"Irredutível de lambda = {top} com dimensão {module.dim}, esperado {expected}")
        raise ConsistencyError(f"dimensão {module.dim} difere da fórmula de Weyl {expected}")
    e_vec, f_vec = extend_root_vectors(module.raising, module.lowering, rs, nodes)

    weights = [neg_weight(w) for w in module.weights]
    dim = module.dim
    actions: Dict[int, DomainMatrix] = {}
    for root in rs.positive_roots:
        if sigma_height(root, levi_sigma) == 0:
            actions[cb.e(root)] = linalg.scale(f_vec[root], -1)
            actions[cb.f(root)] = linalg.scale(e_vec[root], -1)
        else:
            actions[cb.e(root)] = linalg.zeros((dim, dim))
    for i in rs.nodes:
        actions[cb.h(i)] = linalg.diagonal([w[i - 1] for w in weights])
    label = "V(" + ",".join(str(x) for x in top) + ")"
    logger.info(f"Representação {label} construída: dimensão {dim}")
    return ExplicitRep(weights=weights, actions=actions, label=label)


def casimir_operator(rep: ExplicitRep, cb: ChevalleyBasis, indices: Iterable[int]) -> DomainMatrix:
    """Σ rho(x_a) rho(x^a) com x^a a base dual de ``indices`` para a forma de Killing.

    ``indices`` deve gerar uma subálgebra redutiva em que B é não degenerada
    (g inteira ou um Levi).
    """
    indices = list(indices)
    gram = linalg.from_rows([[cb.killing_form(a, b) for b in indices] for a in indices])
    dual = linalg.to_fraction_rows(linalg.inverse(gram))
    terms = []
    for a, x in enumerate(indices):
        for c, y in enumerate(indices):
            if dual[c][a]:
                terms.append(linalg.scale(linalg.mul(rep.action(x), rep.action(y)), dual[c][a]))
    return linalg.total(terms, (rep.dim, rep.dim))


def levi_basis(cb: ChevalleyBasis, levi_sigma: Iterable[int]) -> List[int]:
    """e_alpha, f_alpha do Levi e todos os h_i."""
    levi_sigma = tuple(levi_sigma)
    roots = [r for r in cb.rs.positive_roots if sigma_height(r, levi_sigma) == 0]
    return [cb.e(r) for r in roots] + [cb.h(i) for i in cb.rs.nodes] + [cb.f(r) for r in roots]
