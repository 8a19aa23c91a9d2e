"""
Elementos do grupo de Weyl como palavras reduzidas.

Uma palavra ``s_{i1} ... s_{ik}`` representa a composição
``sigma_{i1} ∘ ... ∘ sigma_{ik}``: a reflexão mais à direita age primeiro.
Cada elemento é identificado pela sua chave ``w(delta)`` (inteira e regular),
e a palavra canônica é a menor lexicograficamente entre as reduzidas.
"""

import logging
import re
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from relbgg import config
from relbgg.errors import OrbitCapExceeded, SpecError
from relbgg.rootsys import Root, RootSystem, Weight, add_weights, as_weight, delta, sub_weights

logger = logging.getLogger(__name__)

_WORD_TOKEN = re.compile(r"^s?(\d+)$")


@dataclass(frozen=True)
class WeylElement:
    """Elemento de W com palavra reduzida canônica e conjunto Phi_w.

    ``phi`` é {alpha em Delta+ : w^-1(alpha) < 0}; ``len(word) == len(phi)``.
    """

    word: Tuple[int, ...]
    key: Tuple[int, ...]
    phi: FrozenSet[Root] = field(compare=False, repr=False)
    rs: RootSystem = field(compare=False, repr=False)

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return (len(self.word), self.word)

    def __str__(self) -> str:
        return word_string(self)


def _delta_key(rs: RootSystem) -> Tuple[int, ...]:
    return tuple(int(x) for x in delta(rs))


def _phi_from_key(key: Sequence[int], rs: RootSystem) -> FrozenSet[Root]:
    # (alpha, w(delta)) < 0, com (alpha_i, mu) proporcional a d_i * mu_i
    norms = [rs.simple_norm(i) for i in rs.nodes]
    return frozenset(
        root for root in rs.positive_roots
        if sum(c * d * k for c, d, k in zip(root, norms, key)) < 0
    )


def from_key(key: Sequence[int], rs: RootSystem) -> WeylElement:
    """Reconstrói o elemento a partir de ``w(delta)`` descascando descidas à esquerda."""
    key = tuple(int(x) for x in key)
    word = []
    current = key
    while True:
        descent = next((i for i in rs.nodes if current[i - 1] < 0), None)
        if descent is None:
            break
        word.append(descent)
        current = tuple(int(x) for x in rs.reflect_weight(descent, current))
    return WeylElement(word=tuple(word), key=key, phi=_phi_from_key(key, rs), rs=rs)


def _check_indices(word: Iterable[int], rs: RootSystem, flag: str) -> Tuple[int, ...]:
    word = tuple(int(i) for i in word)
    for i in word:
        if i < 1 or i > rs.rank:
            raise SpecError(f"índice de reflexão {i} fora de 1..{rs.rank}", flag=flag)
    return word


def identity(rs: RootSystem) -> WeylElement:
    return from_key(_delta_key(rs), rs)


def from_word(word: Iterable[int], rs: RootSystem) -> WeylElement:
    """Elemento representado por uma palavra qualquer (não necessariamente reduzida)."""
    word = _check_indices(word, rs, flag="--word")
    key = _delta_key(rs)
    for i in reversed(word):
        key = tuple(int(x) for x in rs.reflect_weight(i, key))
    return from_key(key, rs)


def parse_word(text: str, rs: RootSystem, flag: str = "--word") -> WeylElement:
    """Lê "e", "s2 s3" ou "2,3"."""
    raw = (text or "").strip()
    if raw in ("", "e"):
        return identity(rs)
    letters = []
    for token in re.split(r"[\s,]+", raw):
        match = _WORD_TOKEN.match(token)
        if not match:
            raise SpecError(f"palavra inválida {text!r}; use por exemplo 's2 s3'", flag=flag)
        letters.append(int(match.group(1)))
    return from_word(_check_indices(letters, rs, flag), rs)


def word_string(w: WeylElement) -> str:
    if not w.word:
        return "e"
    return " ".join(f"s{i}" for i in w.word)


def length(w: WeylElement) -> int:
    return len(w.word)


def apply(w: WeylElement, weight: Sequence) -> Weight:
    """Ação linear de w em um peso (coordenadas fundamentais)."""
    result = as_weight(weight)
    for i in reversed(w.word):
        result = w.rs.reflect_weight(i, result)
    return result


def phi_set(w: WeylElement, rs: Optional[RootSystem] = None) -> FrozenSet[Root]:
    return w.phi


def affine_action(w: WeylElement, weight: Sequence, shift: Sequence) -> Weight:
    """w(lambda + shift) - shift."""
    return sub_weights(apply(w, add_weights(weight, shift)), shift)


def multiply(w1: WeylElement, w2: WeylElement) -> WeylElement:
    key = apply(w1, w2.key)
    return from_key(key, w1.rs)


def inverse(w: WeylElement) -> WeylElement:
    return from_word(reversed(w.word), w.rs)


def is_in_subgroup(w: WeylElement, generators: Iterable[int]) -> bool:
    allowed = set(generators)
    return all(i in allowed for i in w.word)


def orbit(weight: Sequence, generators: Iterable[int], rs: RootSystem) -> Dict[Weight, Tuple[int, ...]]:
    """Órbita de um peso sob o subgrupo gerado por ``generators``.

    Retorna ``{ponto: palavra}`` em ordem de busca em largura, onde a palavra
    ``u`` é uma das mais curtas com ``u(weight) == ponto``.
    """
    gens = sorted(set(_check_indices(generators, rs, flag="--generators")))
    cap = config.orbit_cap()
    start = as_weight(weight)
    seen: Dict[Weight, Tuple[int, ...]] = {start: ()}
    queue = deque([start])
    while queue:
        point = queue.popleft()
        word = seen[point]
        for i in gens:
            image = rs.reflect_weight(i, point)
            if image in seen:
                continue
            seen[image] = (i,) + word
            if len(seen) > cap:
                logger.warning(f"Órbita excedeu o limite de {cap} pontos (RELBGG_ORBIT_CAP)")
                raise OrbitCapExceeded(f"órbita maior que {cap} pontos; ajuste RELBGG_ORBIT_CAP")
            queue.append(image)
    logger.debug(f"Órbita com {len(seen)} pontos sob geradores {gens}")
    return seen


def enumerate_group(rs: RootSystem, generators: Optional[Iterable[int]] = None) -> List[WeylElement]:
    """Todos os elementos de W (ou do subgrupo parabólico gerado), ordenados."""
    gens = list(rs.nodes) if generators is None else list(generators)
    points = orbit(delta(rs), gens, rs)
    elements = [from_key(point, rs) for point in points]
    return sorted(elements, key=lambda w: w.sort_key)


@lru_cache(maxsize=None)
def _reflection_keys(rs: RootSystem) -> FrozenSet[Tuple[int, ...]]:
    d = delta(rs)
    keys = set()
    for beta in rs.positive_roots:
        c = rs.pairing(d, beta)
        image = sub_weights(d, [c * x for x in rs.root_to_weight(beta)])
        keys.add(tuple(int(x) for x in image))
    return frozenset(keys)


def bruhat_covers(elements: Iterable[WeylElement]) -> List[Tuple[WeylElement, WeylElement]]:
    """Pares (w, w') com l(w') = l(w) + 1 e w' w^-1 uma reflexão."""
    ordered = sorted(set(elements), key=lambda w: w.sort_key)
    if not ordered:
        return []
    reflections = _reflection_keys(ordered[0].rs)
    by_length: Dict[int, List[WeylElement]] = {}
    for w in ordered:
        by_length.setdefault(w.length, []).append(w)
    edges = []
    for w in ordered:
        w_inv = inverse(w)
        for upper in by_length.get(w.length + 1, []):
            if multiply(upper, w_inv).key in reflections:
                edges.append((w, upper))
    return edges
