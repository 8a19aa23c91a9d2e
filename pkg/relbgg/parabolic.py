"""
Pares parabólicos aninhados q ⊂ p ⊂ g e diagramas de Hasse.

Convenção de nós cruzados: ``sigma`` lista as raízes simples cujos espaços
de raízes ficam em g_1. Cruzar mais nós dá uma parabólica menor, então
q ⊂ p corresponde a ``sigma_p ⊆ sigma_q``.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from relbgg import weyl
from relbgg.errors import ConsistencyError, InclusionError, NotInHasse
from relbgg.rootsys import Root, RootSystem, Weight, as_weight
from relbgg.weyl import WeylElement

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ParabolicPair:
    """Conjuntos de nós cruzados de p e de q, com ``sigma_p ⊆ sigma_q``."""

    sigma_p: FrozenSet[int]
    sigma_q: FrozenSet[int]

    def __post_init__(self):
        object.__setattr__(self, "sigma_p", frozenset(int(i) for i in self.sigma_p))
        object.__setattr__(self, "sigma_q", frozenset(int(i) for i in self.sigma_q))
        if not self.sigma_p <= self.sigma_q:
            extra = sorted(self.sigma_p - self.sigma_q)
            raise InclusionError(f"sigma_p deve estar contido em sigma_q; sobram {extra}", flag="--p")

    @property
    def relative(self) -> FrozenSet[int]:
        """Nós de sigma_q que não estão em sigma_p."""
        return self.sigma_q - self.sigma_p


@dataclass(frozen=True)
class RootPartition:
    """Delta+ = q0 ⊔ mid ⊔ pplus, cada parte na ordem de Delta+."""

    q0: Tuple[Root, ...]
    mid: Tuple[Root, ...]
    pplus: Tuple[Root, ...]


def make_pair(sigma_p: Iterable[int], sigma_q: Iterable[int], rs: RootSystem) -> ParabolicPair:
    """Valida os índices contra o posto e monta o par."""
    for flag, sigma in (("--p", sigma_p), ("--q", sigma_q)):
        for i in sigma:
            if i < 1 or i > rs.rank:
                raise InclusionError(f"nó {i} fora de 1..{rs.rank}", flag=flag)
    return ParabolicPair(frozenset(sigma_p), frozenset(sigma_q))


def sigma_height(root: Sequence[int], sigma: Iterable[int]) -> int:
    return sum(root[i - 1] for i in sigma)


def root_grading(root: Sequence[int], pair: ParabolicPair) -> Tuple[int, int]:
    """(altura em sigma_q, altura em sigma_p)."""
    return sigma_height(root, pair.sigma_q), sigma_height(root, pair.sigma_p)


def levi_nodes(sigma: Iterable[int], rs: RootSystem) -> List[int]:
    crossed = set(sigma)
    return [i for i in rs.nodes if i not in crossed]


def levi_roots(sigma: Iterable[int], rs: RootSystem) -> Tuple[Root, ...]:
    sigma = tuple(sigma)
    return tuple(r for r in rs.positive_roots if sigma_height(r, sigma) == 0)


def levi_delta(sigma: Iterable[int], rs: RootSystem) -> Weight:
    """Meia soma das raízes positivas do Levi da parabólica ``sigma``."""
    roots = levi_roots(sigma, rs)
    half_sum = [Fraction(sum(r[k] for r in roots), 2) for k in range(rs.rank)]
    return rs.root_to_weight(half_sum)


def partition(pair: ParabolicPair, rs: RootSystem) -> RootPartition:
    q0, mid, pplus = [], [], []
    for root in rs.positive_roots:
        q_height, p_height = root_grading(root, pair)
        if q_height == 0:
            q0.append(root)
        elif p_height > 0:
            pplus.append(root)
        else:
            mid.append(root)
    return RootPartition(q0=tuple(q0), mid=tuple(mid), pplus=tuple(pplus))


def delta_p(pair: ParabolicPair, rs: RootSystem) -> Weight:
    return levi_delta(pair.sigma_p, rs)


def delta_qp(pair: ParabolicPair, rs: RootSystem) -> Weight:
    """Soma dos pesos fundamentais dos nós em sigma_q \\ sigma_p."""
    return as_weight(1 if i in pair.relative else 0 for i in rs.nodes)


def is_integral(weight: Sequence) -> bool:
    return all(Fraction(x).denominator == 1 for x in weight)


def is_dominant(weight: Sequence, sigma: Iterable[int]) -> bool:
    """<lambda, alpha_i^vee> inteiro não negativo para todo nó i não cruzado."""
    crossed = set(sigma)
    for i, x in enumerate(weight, start=1):
        if i in crossed:
            continue
        x = Fraction(x)
        if x.denominator != 1 or x < 0:
            return False
    return True


def in_hasse(w: WeylElement, sigma: Iterable[int]) -> bool:
    """Phi_w ⊆ Delta+(p_+)."""
    sigma = tuple(sigma)
    return all(sigma_height(root, sigma) > 0 for root in w.phi)


def in_relative_hasse(w: WeylElement, pair: ParabolicPair) -> bool:
    """Phi_w ⊆ Delta+(p_0 ∩ q_+)."""
    return all(
        q_height > 0 and p_height == 0
        for q_height, p_height in (root_grading(root, pair) for root in w.phi)
    )


def relative_hasse(pair: ParabolicPair, rs: RootSystem) -> List[WeylElement]:
    """W^q_p a partir da órbita de delta^q_p sob W_p.

    O ponto alcançado pela palavra u é u(delta^q_p); o elemento do diagrama
    é w = u^-1. Ordenado por comprimento e depois pela palavra canônica.
    """
    points = weyl.orbit(delta_qp(pair, rs), levi_nodes(pair.sigma_p, rs), rs)
    elements = []
    for word in points.values():
        w = weyl.from_word(tuple(reversed(word)), rs)
        if not in_relative_hasse(w, pair):
            logger.error(f"Elemento {weyl.word_string(w)} fora de W^q_p para o par {sorted(pair.sigma_p)} ⊆ {sorted(pair.sigma_q)}")
            raise ConsistencyError(f"Phi_w não contido em Delta+(p0 ∩ q+) para w = {weyl.word_string(w)}")
        elements.append(w)
    return sorted(elements, key=lambda w: w.sort_key)


def hasse(sigma: Iterable[int], rs: RootSystem) -> List[WeylElement]:
    """W^p, como diagrama relativo do par (g, p)."""
    return relative_hasse(ParabolicPair(frozenset(), frozenset(sigma)), rs)


def factorize(w: WeylElement, pair: ParabolicPair, rs: RootSystem) -> Tuple[WeylElement, WeylElement]:
    """Fatora w ∈ W^q como w1 w2 com w1 ∈ W^q_p e w2 ∈ W^p."""
    if not in_hasse(w, pair.sigma_q):
        raise NotInHasse(f"{weyl.word_string(w)} não pertence a W^q para sigma_q = {sorted(pair.sigma_q)}")
    uncrossed = set(levi_nodes(pair.sigma_p, rs))
    letters = []
    current = w
    while True:
        descent = next((i for i in sorted(uncrossed) if current.key[i - 1] < 0), None)
        if descent is None:
            break
        letters.append(descent)
        current = weyl.from_key(rs.reflect_weight(descent, current.key), rs)
    w1 = weyl.from_word(letters, rs)
    w2 = current
    if (
        weyl.multiply(w1, w2) != w
        or w1.length + w2.length != w.length
        or not in_relative_hasse(w1, pair)
        or not in_hasse(w2, pair.sigma_p)
    ):
        logger.error(f"Fatoração inconsistente de {weyl.word_string(w)}: {weyl.word_string(w1)} · {weyl.word_string(w2)}")
        raise ConsistencyError(f"fatoração inválida de {weyl.word_string(w)}")
    return w1, w2
