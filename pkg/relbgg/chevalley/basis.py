"""
Base de Chevalley de g, realizada pela representação adjunta.

A adjunta de cada componente simples é o módulo de peso máximo igual à raiz
mais alta; as constantes de estrutura saem dos comutadores dessas matrizes.
Ordem da base: e_alpha (ordem de Delta+), h_1..h_n, f_alpha.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from relbgg import linalg
from relbgg.chevalley.modules import extend_root_vectors, highest_weight_module
from relbgg.errors import ConsistencyError
from relbgg.rootsys import Root, RootSystem

logger = logging.getLogger(__name__)

Vector = Dict[int, Fraction]


def _add_into(target: Vector, vec: Vector, coef=1) -> None:
    for k, v in vec.items():
        value = target.get(k, Fraction(0)) + coef * v
        if value:
            target[k] = value
        else:
            target.pop(k, None)


class ChevalleyBasis:
    """Tabela de colchetes inteira de g com forma de Killing.

    Attributes:
        rs: Sistema de raízes
        matrices: Matriz na adjunta de cada elemento da base
        brackets: ``(a, b) -> {c: N}`` com [x_a, x_b] = Σ N x_c
        killing: ``(a, b) -> tr(ad x_a ad x_b)`` (entradas não nulas)
    """

    def __init__(self, rs: RootSystem, matrices: List[DomainMatrix]):
        self.rs = rs
        self.matrices = matrices
        self.n_roots = len(rs.positive_roots)
        self.dim = 2 * self.n_roots + rs.rank
        self.brackets: Dict[Tuple[int, int], Vector] = {}
        self.killing: Dict[Tuple[int, int], Fraction] = {}
        self._build_brackets()
        self._build_killing()

    # ========== ÍNDICES ==========

    def e(self, root: Sequence[int]) -> int:
        return self.rs.root_index(root)

    def f(self, root: Sequence[int]) -> int:
        return self.n_roots + self.rs.rank + self.rs.root_index(root)

    def h(self, i: int) -> int:
        return self.n_roots + i - 1

    def index_of_root(self, root: Sequence[int]) -> int:
        """Índice de x_gamma para uma raiz com sinal."""
        root = tuple(root)
        if self.rs.is_positive_root(root):
            return self.e(root)
        return self.f(tuple(-c for c in root))

    def root_of(self, index: int) -> Root:
        """Raiz (com sinal) do elemento; zero para os h_i."""
        if index < self.n_roots:
            return self.rs.positive_roots[index]
        if index < self.n_roots + self.rs.rank:
            return tuple([0] * self.rs.rank)
        return tuple(-c for c in self.rs.positive_roots[index - self.n_roots - self.rs.rank])

    def is_cartan(self, index: int) -> bool:
        return self.n_roots <= index < self.n_roots + self.rs.rank

    def label(self, index: int) -> str:
        if self.is_cartan(index):
            return f"h{index - self.n_roots + 1}"
        root = self.root_of(index)
        prefix = "e" if index < self.n_roots else "f"
        return prefix + "(" + ",".join(str(abs(c)) for c in root) + ")"

    # ========== COLCHETES ==========

    def _build_brackets(self) -> None:
        rs = self.rs
        weight_columns = linalg.from_rows(
            [[w for w in self._diag(self.h(i))] for i in rs.nodes]
        ).transpose()
        for a, b in combinations(range(self.dim), 2):
            m = linalg.commutator(self.matrices[a], self.matrices[b])
            if linalg.is_zero(m):
                continue
            gamma = tuple(x + y for x, y in zip(self.root_of(a), self.root_of(b)))
            if not any(gamma):
                diag = [linalg.entry(m, r, r) for r in range(m.shape[0])]
                if not linalg.equal(m, linalg.diagonal(diag)):
                    self._fail(a, b, "comutador de peso zero não diagonal")
                coords = linalg.solve(weight_columns, linalg.column_vector(dict(enumerate(diag)), len(diag)))
                result = {self.h(i): linalg.entry(coords, i - 1, 0) for i in rs.nodes}
            elif rs.is_root(gamma):
                c = self.index_of_root(gamma)
                r, s, val = next(linalg.items(self.matrices[c]))
                coef = linalg.entry(m, r, s) / linalg.to_fraction(val)
                if not linalg.equal(m, linalg.scale(self.matrices[c], coef)):
                    self._fail(a, b, "comutador não proporcional ao vetor de raiz")
                result = {c: coef}
            else:
                self._fail(a, b, "comutador não nulo fora das raízes")
            result = {k: v for k, v in result.items() if v}
            if any(v.denominator != 1 for v in result.values()):
                self._fail(a, b, f"constante de estrutura não inteira {result}")
            self.brackets[(a, b)] = result
            self.brackets[(b, a)] = {k: -v for k, v in result.items()}

    def _diag(self, index: int) -> List[Fraction]:
        m = self.matrices[index]
        return [linalg.entry(m, r, r) for r in range(m.shape[0])]

    def _fail(self, a: int, b: int, message: str) -> None:
        logger.error(f"Base de Chevalley inconsistente em [{self.label(a)}, {self.label(b)}]: {message}")
        raise ConsistencyError(f"[{self.label(a)}, {self.label(b)}]: {message}")

    def bracket(self, a: int, b: int) -> Vector:
        return self.brackets.get((a, b), {})

    def bracket_vectors(self, x: Vector, y: Vector) -> Vector:
        out: Vector = {}
        for a, ca in x.items():
            for b, cb in y.items():
                _add_into(out, self.bracket(a, b), ca * cb)
        return out

    def structure_constant(self, alpha: Sequence[int], beta: Sequence[int]) -> int:
        """N_{alpha,beta} com [x_alpha, x_beta] = N x_{alpha+beta}; zero se a soma não for raiz."""
        gamma = tuple(x + y for x, y in zip(alpha, beta))
        if not self.rs.is_root(gamma):
            return 0
        value = self.bracket(self.index_of_root(alpha), self.index_of_root(beta)).get(self.index_of_root(gamma), 0)
        return int(value)

    def jacobi_violations(self) -> List[Tuple[int, int, int]]:
        """Triplas (a, b, c) onde a identidade de Jacobi falha."""
        failures = []
        for a, b, c in combinations(range(self.dim), 3):
            total: Vector = {}
            _add_into(total, self.bracket_vectors(self.bracket(a, b), {c: Fraction(1)}))
            _add_into(total, self.bracket_vectors(self.bracket(b, c), {a: Fraction(1)}))
            _add_into(total, self.bracket_vectors(self.bracket(c, a), {b: Fraction(1)}))
            if total:
                failures.append((a, b, c))
        return failures

    # ========== FORMA DE KILLING ==========

    def ad(self, a: int) -> Dict[Tuple[int, int], Fraction]:
        """Entradas de ad x_a: (c, b) -> coeficiente de x_c em [x_a, x_b]."""
        return {(c, b): v for b in range(self.dim) for c, v in self.bracket(a, b).items()}

    def _build_killing(self) -> None:
        ads = [self.ad(a) for a in range(self.dim)]
        for a in range(self.dim):
            for b in range(a, self.dim):
                value = sum(
                    (ads[a].get((c, d), 0) * v for (d, c), v in ads[b].items()),
                    Fraction(0),
                )
                if value:
                    self.killing[(a, b)] = value
                    self.killing[(b, a)] = value
        for i in self.rs.nodes:
            for j in self.rs.nodes:
                if self.killing_form(self.h(i), self.h(j)) != self.rs.coroot_killing[i - 1][j - 1]:
                    logger.error(f"Forma de Killing em (h{i}, h{j}) difere da do sistema de raízes")
                    raise ConsistencyError(f"forma de Killing inconsistente em (h{i}, h{j})")

    def killing_form(self, a: int, b: int) -> Fraction:
        return self.killing.get((a, b), Fraction(0))

    def killing_vectors(self, x: Vector, y: Vector) -> Fraction:
        return sum(
            (ca * cb * self.killing_form(a, b) for a, ca in x.items() for b, cb in y.items()),
            Fraction(0),
        )


@lru_cache(maxsize=None)
def build_chevalley(rs: RootSystem) -> ChevalleyBasis:
    """Base de Chevalley determinística a partir da adjunta de cada componente simples."""
    raising: Dict[int, List[DomainMatrix]] = {i: [] for i in rs.nodes}
    lowering: Dict[int, List[DomainMatrix]] = {i: [] for i in rs.nodes}
    weights = []
    for comp in rs.components():
        theta = rs.highest_root(comp)
        module = highest_weight_module(rs, rs.root_to_weight(theta), comp)
        n_comp = sum(1 for r in rs.positive_roots if any(r[i - 1] for i in comp))
        if module.dim != 2 * n_comp + len(comp):
            logger.error(f"Adjunta da componente {comp} com dimensão {module.dim}")
            raise ConsistencyError(f"dimensão da adjunta {module.dim} != {2 * n_comp + len(comp)}")
        zero = linalg.zeros((module.dim, module.dim))
        for i in rs.nodes:
            raising[i].append(module.raising.get(i, zero))
            lowering[i].append(module.lowering.get(i, zero))
        weights.extend(module.weights)
    e_simple = {i: linalg.block_diagonal(blocks) for i, blocks in raising.items()}
    f_simple = {i: linalg.block_diagonal(blocks) for i, blocks in lowering.items()}
    e_vec, f_vec = extend_root_vectors(e_simple, f_simple, rs, rs.nodes)
    matrices = (
        [e_vec[r] for r in rs.positive_roots]
        + [linalg.diagonal([w[i - 1] for w in weights]) for i in rs.nodes]
        + [f_vec[r] for r in rs.positive_roots]
    )
    cb = ChevalleyBasis(rs, matrices)
    logger.info(f"Base de Chevalley de {rs.label} construída: dimensão {cb.dim}")
    return cb
