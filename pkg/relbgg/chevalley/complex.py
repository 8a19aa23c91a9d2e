"""
Complexos de cadeias explícitos Λ^k(n) ⊗ V.

Monômios são pares (subconjunto ordenado de posições de geradores, índice
de vetor de V), numerados como ``indice_do_subconjunto * dim V + v``.
O colchete entre geradores é tomado em g e projetado ao longo de
``quotient``; componentes fora do span dos geradores e do quociente indicam
erro interno.
"""

import logging
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from relbgg import config, linalg
from relbgg.chevalley.basis import ChevalleyBasis
from relbgg.chevalley.irrep import ExplicitRep, build_irrep
from relbgg.errors import ChainSizeExceeded, ConsistencyError
from relbgg.parabolic import ParabolicPair, partition
from relbgg.rootsys import Weight, add_weights, as_weight

logger = logging.getLogger(__name__)

# Sinal do emparelhamento que identifica q+ ∩ p0 com o dual de q- ∩ p0.
# Com -B o laplaciano é semidefinido positivo e age pelo escalar
# ½(||lambda+delta_p||² - ||nu+delta_p||²).
DUALITY_SIGN = -1

Subset = Tuple[int, ...]


def sort_with_sign(seq: Sequence[int]) -> Tuple[Optional[Subset], int]:
    """Ordena ``seq`` devolvendo o sinal da permutação; (None, 0) se houver repetição."""
    if len(set(seq)) != len(seq):
        return None, 0
    inversions = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
    return tuple(sorted(seq)), (-1) ** inversions


def _accumulate(entries: Dict[Tuple[int, int], Fraction], key: Tuple[int, int], value) -> None:
    entries[key] = entries.get(key, Fraction(0)) + value


class LieComplex:
    """Complexo de homologia de Lie de span(generators) (módulo ``quotient``) com coeficientes em V."""

    def __init__(self, cb: ChevalleyBasis, generators: Sequence[int], rep: ExplicitRep,
                 quotient: Iterable[int] = (), name: str = ""):
        self.cb = cb
        self.rs = cb.rs
        self.generators = list(generators)
        self.rep = rep
        self.quotient = frozenset(quotient)
        self.name = name or "complexo"
        self.n = len(self.generators)
        self.dim_v = rep.dim
        self.position = {g: pos for pos, g in enumerate(self.generators)}
        cap = config.max_chain_dim()
        largest = max(comb(self.n, k) for k in range(self.n + 1)) * self.dim_v
        if largest > cap:
            logger.warning(f"{self.name}: espaço de cadeias com {largest} dimensões excede {cap}")
            raise ChainSizeExceeded(f"espaço de cadeias com {largest} dimensões excede RELBGG_MAX_CHAIN_DIM={cap}")
        self._subsets = {k: list(combinations(range(self.n), k)) for k in range(self.n + 1)}
        self._subset_index = {k: {s: i for i, s in enumerate(subs)} for k, subs in self._subsets.items()}
        self._rho_items: Dict[int, List[Tuple[int, int, Fraction]]] = {}
        self._bracket_cache: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
        self._cache: Dict[Tuple, DomainMatrix] = {}

    # ========== BASE ==========

    @property
    def degrees(self) -> range:
        return range(self.n + 1)

    def subsets(self, k: int) -> List[Subset]:
        return self._subsets.get(k, [])

    def chain_dim(self, k: int) -> int:
        if k < 0 or k > self.n:
            return 0
        return len(self._subsets[k]) * self.dim_v

    def index(self, subset: Subset, v: int) -> int:
        return self._subset_index[len(subset)][subset] * self.dim_v + v

    def monomial(self, k: int, index: int) -> Tuple[Subset, int]:
        return self._subsets[k][index // self.dim_v], index % self.dim_v

    def weights(self, k: int) -> List[Weight]:
        """Peso de cada monômio de grau k (coordenadas fundamentais)."""
        gen_weights = [self.rs.root_to_weight(self.cb.root_of(g)) for g in self.generators]
        out = []
        for subset in self.subsets(k):
            base = add_weights(*([gen_weights[p] for p in subset] or [as_weight([0] * self.rs.rank)]))
            for v in range(self.dim_v):
                out.append(add_weights(base, self.rep.weights[v]))
        return out

    # ========== COLCHETES E AÇÕES ==========

    def project(self, vec: Dict[int, Fraction]) -> Dict[int, Fraction]:
        """Reescreve um elemento de g nas posições dos geradores, descartando o quociente."""
        out = {}
        for index, coef in vec.items():
            if index in self.quotient:
                continue
            if index not in self.position:
                logger.error(f"{self.name}: {self.cb.label(index)} fora do span dos geradores")
                raise ConsistencyError(f"{self.cb.label(index)} não está no span dos geradores de {self.name}")
            out[self.position[index]] = coef
        return out

    def gen_bracket(self, s: int, t: int) -> Dict[int, Fraction]:
        key = (s, t)
        if key not in self._bracket_cache:
            self._bracket_cache[key] = self.project(self.cb.bracket(self.generators[s], self.generators[t]))
        return self._bracket_cache[key]

    def rho_items(self, index: int) -> List[Tuple[int, int, Fraction]]:
        if index not in self._rho_items:
            self._rho_items[index] = [
                (r, c, linalg.to_fraction(v)) for r, c, v in linalg.items(self.rep.action(index))
            ]
        return self._rho_items[index]

    def d_star(self, k: int) -> DomainMatrix:
        """Codiferencial C_k -> C_{k-1}.

        Z_1∧…∧Z_k⊗v ↦ Σ_i (-1)^i …Ẑ_i…⊗Z_i·v + Σ_{i<j} (-1)^{i+j} [Z_i,Z_j]∧…Ẑ_i…Ẑ_j…⊗v
        """
        key = ("d_star", k)
        if key in self._cache:
            return self._cache[key]
        shape = (self.chain_dim(k - 1), self.chain_dim(k))
        entries: Dict[Tuple[int, int], Fraction] = {}
        if 0 < k <= self.n:
            for subset in self.subsets(k):
                col0 = self.index(subset, 0)
                for t, gen in enumerate(subset):
                    rest = subset[:t] + subset[t + 1:]
                    row0 = self.index(rest, 0)
                    sign = (-1) ** (t + 1)
                    for r, c, val in self.rho_items(self.generators[gen]):
                        _accumulate(entries, (row0 + r, col0 + c), sign * val)
                for s, t in combinations(range(k), 2):
                    rest = tuple(x for pos, x in enumerate(subset) if pos not in (s, t))
                    for u, coef in self.gen_bracket(subset[s], subset[t]).items():
                        target, perm = sort_with_sign((u,) + rest)
                        if target is None:
                            continue
                        row0 = self.index(target, 0)
                        value = (-1) ** (s + t) * perm * coef
                        for v in range(self.dim_v):
                            _accumulate(entries, (row0 + v, col0 + v), value)
        m = linalg.sparse(entries, shape)
        logger.debug(f"{self.name}: d_star({k}) com forma {shape}")
        self._cache[key] = m
        return m

    def derivation_action(self, x: int, k: int) -> DomainMatrix:
        """Ação de x ∈ g no fator exterior: Σ_i Z_1∧…[x,Z_i]…∧Z_k ⊗ v."""
        key = ("derivation", x, k)
        if key in self._cache:
            return self._cache[key]
        dim = self.chain_dim(k)
        entries: Dict[Tuple[int, int], Fraction] = {}
        images = {pos: self.project(self.cb.bracket(x, g)) for pos, g in enumerate(self.generators)}
        for subset in self.subsets(k):
            col0 = self.index(subset, 0)
            for t, gen in enumerate(subset):
                for u, coef in images[gen].items():
                    target, perm = sort_with_sign(subset[:t] + (u,) + subset[t + 1:])
                    if target is None:
                        continue
                    row0 = self.index(target, 0)
                    for v in range(self.dim_v):
                        _accumulate(entries, (row0 + v, col0 + v), perm * coef)
        m = linalg.sparse(entries, (dim, dim))
        self._cache[key] = m
        return m

    def coefficient_action(self, x: int, k: int) -> DomainMatrix:
        """id ⊗ rho(x)."""
        key = ("coefficient", x, k)
        if key in self._cache:
            return self._cache[key]
        dim = self.chain_dim(k)
        entries = {}
        items = self.rho_items(x)
        for subset in self.subsets(k):
            base = self.index(subset, 0)
            for r, c, val in items:
                entries[(base + r, base + c)] = val
        m = linalg.sparse(entries, (dim, dim))
        self._cache[key] = m
        return m

    def action(self, x: int, k: int) -> DomainMatrix:
        return linalg.add(self.derivation_action(x, k), self.coefficient_action(x, k))

    def wedge(self, pos: int, k: int) -> DomainMatrix:
        """Z_pos ∧ (·): C_k -> C_{k+1}."""
        entries = {}
        for subset in self.subsets(k):
            target, perm = sort_with_sign((pos,) + subset)
            if target is None:
                continue
            col0 = self.index(subset, 0)
            row0 = self.index(target, 0)
            for v in range(self.dim_v):
                entries[(row0 + v, col0 + v)] = perm
        return linalg.sparse(entries, (self.chain_dim(k + 1), self.chain_dim(k)))

    # ========== HOMOLOGIA ==========

    def homology_dims(self) -> Dict[int, int]:
        ranks = {k: linalg.rank(self.d_star(k)) for k in range(self.n + 2)}
        return {k: self.chain_dim(k) - ranks[k] - ranks[k + 1] for k in self.degrees}

    def cycles(self, k: int) -> DomainMatrix:
        return linalg.kernel(self.d_star(k))

    def boundaries(self, k: int) -> DomainMatrix:
        return linalg.image(self.d_star(k + 1))


class RelativeComplex(LieComplex):
    """C_*(q+/p+, V) realizado em Λ*(q+ ∩ p0) ⊗ V, com ∂_ρ e □_ρ."""

    def __init__(self, weight, pair: ParabolicPair, cb: ChevalleyBasis, rep: Optional[ExplicitRep] = None):
        part = partition(pair, cb.rs)
        self.pair = pair
        self.weight = as_weight(weight)
        self.partition = part
        rep = rep or build_irrep(self.weight, pair.sigma_p, cb)
        super().__init__(
            cb,
            [cb.e(r) for r in part.mid],
            rep,
            quotient=[cb.e(r) for r in part.pplus],
            name=f"C(q+/p+, {rep.label})",
        )
        self.dual_generators = [cb.f(r) for r in part.mid]
        self._pairing = [DUALITY_SIGN * cb.killing_form(cb.e(r), cb.f(r)) for r in part.mid]
        self._dual_position = {g: pos for pos, g in enumerate(self.dual_generators)}
        logger.info(f"Complexo relativo {self.name} construído: {self.n} geradores, dim V = {self.dim_v}")

    def dual_bracket(self, a: int, b: int) -> Dict[int, Fraction]:
        """[xi_a, xi_b] na base dual xi_u = f_u / pairing_u."""
        bracket = self.cb.bracket(self.dual_generators[a], self.dual_generators[b])
        out = {}
        for index, coef in bracket.items():
            if index not in self._dual_position:
                logger.error(f"{self.name}: {self.cb.label(index)} fora de q- ∩ p0")
                raise ConsistencyError(f"[xi, xi] fora de q- ∩ p0: {self.cb.label(index)}")
            u = self._dual_position[index]
            out[u] = coef * self._pairing[u] / (self._pairing[a] * self._pairing[b])
        return out

    def d(self, k: int) -> DomainMatrix:
        """Diferencial transportado ∂_ρ: C_k -> C_{k+1}."""
        key = ("d", k)
        if key in self._cache:
            return self._cache[key]
        shape = (self.chain_dim(k + 1), self.chain_dim(k))
        entries: Dict[Tuple[int, int], Fraction] = {}
        if 0 <= k < self.n:
            for target in self.subsets(k + 1):
                row0 = self.index(target, 0)
                for i, gen in enumerate(target):
                    rest = target[:i] + target[i + 1:]
                    col0 = self.index(rest, 0)
                    scale = Fraction((-1) ** i) / self._pairing[gen]
                    for r, c, val in self.rho_items(self.dual_generators[gen]):
                        _accumulate(entries, (row0 + r, col0 + c), scale * val)
                for i, j in combinations(range(k + 1), 2):
                    rest = tuple(x for pos, x in enumerate(target) if pos not in (i, j))
                    for u, coef in self.dual_bracket(target[i], target[j]).items():
                        source, perm = sort_with_sign((u,) + rest)
                        if source is None:
                            continue
                        col0 = self.index(source, 0)
                        value = (-1) ** (i + j) * perm * coef
                        for v in range(self.dim_v):
                            _accumulate(entries, (row0 + v, col0 + v), value)
        m = linalg.sparse(entries, shape)
        self._cache[key] = m
        return m

    def box(self, k: int) -> DomainMatrix:
        """Laplaciano □_ρ = ∂*_ρ ∂_ρ + ∂_ρ ∂*_ρ em grau k."""
        key = ("box", k)
        if key not in self._cache:
            self._cache[key] = linalg.add(
                linalg.mul(self.d_star(k + 1), self.d(k)),
                linalg.mul(self.d(k - 1), self.d_star(k)),
            )
        return self._cache[key]

    def cohomology_dims(self) -> Dict[int, int]:
        ranks = {k: linalg.rank(self.d(k)) for k in range(-1, self.n + 1)}
        return {k: self.chain_dim(k) - ranks[k] - ranks[k - 1] for k in self.degrees}


class AbsoluteComplex(LieComplex):
    """C_*(q+, V) em Λ*(q+) ⊗ V com a bigraduação Λ^(r,s) = Λ^r(q+ ∩ p0) ⊗ Λ^s(p+)."""

    def __init__(self, weight, pair: ParabolicPair, cb: ChevalleyBasis):
        part = partition(pair, cb.rs)
        self.pair = pair
        self.weight = as_weight(weight)
        self.partition = part
        rep = build_irrep(self.weight, (), cb)
        self.m = len(part.mid)
        self.r = len(part.pplus)
        super().__init__(
            cb,
            [cb.e(r) for r in part.mid] + [cb.e(r) for r in part.pplus],
            rep,
            name=f"C(q+, {rep.label})",
        )
        self.p_complex = LieComplex(cb, [cb.e(r) for r in part.pplus], rep, name=f"C(p+, {rep.label})")
        logger.info(f"Complexo absoluto {self.name} construído: {self.n} geradores, dim V = {self.dim_v}")

    def split_subset(self, subset: Subset) -> Tuple[Subset, Subset]:
        """(posições em q+ ∩ p0, posições em p+ relativas ao complexo de p+)."""
        return (
            tuple(x for x in subset if x < self.m),
            tuple(x - self.m for x in subset if x >= self.m),
        )

    def join_subset(self, mid_part: Subset, p_part: Subset) -> Subset:
        return tuple(mid_part) + tuple(x + self.m for x in p_part)

    def bidegree(self, k: int, index: int) -> Tuple[int, int]:
        subset, _ = self.monomial(k, index)
        mid_part, p_part = self.split_subset(subset)
        return len(mid_part), len(p_part)

    def components(self, k: int) -> Tuple[DomainMatrix, DomainMatrix]:
        """(∂*_1, ∂*_2): partes de bigrau (-1, 0) e (0, -1) de d_star(k)."""
        key = ("components", k)
        if key in self._cache:
            return self._cache[key]
        shape = (self.chain_dim(k - 1), self.chain_dim(k))
        first, second = {}, {}
        for row, col, val in linalg.items(self.d_star(k)):
            (r0, s0), (r1, s1) = self.bidegree(k, col), self.bidegree(k - 1, row)
            if (r1, s1) == (r0 - 1, s0):
                first[(row, col)] = val
            elif (r1, s1) == (r0, s0 - 1):
                second[(row, col)] = val
            else:
                logger.error(f"{self.name}: entrada de bigrau ({r1 - r0},{s1 - s0}) em d_star({k})")
                raise ConsistencyError(f"d_star({k}) com componente de bigrau ({r1 - r0},{s1 - s0})")
        result = (linalg.sparse(first, shape), linalg.sparse(second, shape))
        self._cache[key] = result
        return result

    def p_lift(self, k: int) -> DomainMatrix:
        """(-1)^r id ⊗ ∂*_p escrito na base de C_k(q+, V)."""
        entries = {}
        p_columns = {s: linalg.columns(self.p_complex.d_star(s)) for s in range(self.r + 1)}
        for col in range(self.chain_dim(k)):
            subset, v = self.monomial(k, col)
            mid_part, p_part = self.split_subset(subset)
            sign = (-1) ** len(mid_part)
            p_col = self.p_complex.index(p_part, v)
            for p_row, val in p_columns[len(p_part)].get(p_col, {}).items():
                target, w = self.p_complex.monomial(len(p_part) - 1, p_row)
                row = self.index(self.join_subset(mid_part, target), w)
                entries[(row, col)] = sign * linalg.to_fraction(val)
        return linalg.sparse(entries, (self.chain_dim(k - 1), self.chain_dim(k)))

    def filtration_indices(self, ell: int, k: int) -> List[int]:
        """Índices dos monômios de F^ℓ_k (s >= ℓ)."""
        return [i for i in range(self.chain_dim(k)) if self.bidegree(k, i)[1] >= ell]


def relative_complex(weight, pair: ParabolicPair, cb: ChevalleyBasis) -> RelativeComplex:
    return RelativeComplex(weight, pair, cb)


def absolute_complex(weight, pair: ParabolicPair, cb: ChevalleyBasis) -> AbsoluteComplex:
    return AbsoluteComplex(weight, pair, cb)


def codifferential(k: int, complex_: LieComplex) -> DomainMatrix:
    return complex_.d_star(k)


def cohomology_differential(k: int, complex_: RelativeComplex) -> DomainMatrix:
    return complex_.d(k)
