"""
Sistemas de raízes, pesos e forma de Killing em aritmética racional exata.

Convenções:
- Raízes em coordenadas de raízes simples (tuplas de int).
- Pesos em coordenadas de pesos fundamentais (tuplas de Fraction).
- Nós do diagrama de Dynkin numerados a partir de 1, da esquerda para a direita.
- Matriz de Cartan ``A[i][j] = <alpha_i, alpha_j^vee>``; a raiz simples i em
  coordenadas fundamentais é a linha i de A.
"""

import json
import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from relbgg import linalg
from relbgg.errors import CartanError

logger = logging.getLogger(__name__)

Weight = Tuple[Fraction, ...]
Root = Tuple[int, ...]

# Número de raízes positivas por tipo, usado só para validar a construção
_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1) // 2,
    "B": lambda n: n * n,
    "C": lambda n: n * n,
    "D": lambda n: n * (n - 1),
    "E": lambda n: {6: 36, 7: 63, 8: 120}[n],
    "F": lambda n: 24,
    "G": lambda n: 6,
}

_TYPE_TOKEN = re.compile(r"^([A-Ga-g])(\d+)$")


def as_weight(values: Iterable) -> Weight:
    """Converte uma sequência de números para ``Weight``."""
    return tuple(Fraction(v) for v in values)


def add_weights(*weights: Sequence) -> Weight:
    return tuple(sum(coords, Fraction(0)) for coords in zip(*weights))


def sub_weights(a: Sequence, b: Sequence) -> Weight:
    return tuple(Fraction(x) - Fraction(y) for x, y in zip(a, b))


def neg_weight(a: Sequence) -> Weight:
    return tuple(-Fraction(x) for x in a)


def format_weight(weight: Sequence) -> str:
    """``(1,-2,1)``; coordenadas não inteiras como ``1/2``."""
    return "(" + ",".join(str(Fraction(x)) for x in weight) + ")"


def height(root: Sequence[int]) -> int:
    return sum(root)


def _symmetrizer(a: Tuple[Tuple[int, ...], ...]) -> List[Fraction]:
    """Retorna d com ``A[i][j] * d[j] == A[j][i] * d[i]``; erro se não existir."""
    n = len(a)
    d: List[Optional[Fraction]] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j == i or a[i][j] == 0:
                    continue
                value = Fraction(a[j][i]) * d[i] / a[i][j]
                if d[j] is None:
                    d[j] = value
                    stack.append(j)
                elif d[j] != value:
                    raise CartanError("matriz não simetrizável", flag="--algebra")
    return d  # type: ignore[return-value]


def _validate_cartan(a: Tuple[Tuple[int, ...], ...]) -> None:
    n = len(a)
    if n == 0:
        raise CartanError("matriz de Cartan vazia", flag="--algebra")
    if any(len(row) != n for row in a):
        raise CartanError("matriz de Cartan não quadrada", flag="--algebra")
    for i in range(n):
        if a[i][i] != 2:
            raise CartanError(f"entrada diagonal ({i + 1},{i + 1}) diferente de 2", flag="--algebra")
        for j in range(n):
            if i == j:
                continue
            if a[i][j] > 0:
                raise CartanError(f"entrada ({i + 1},{j + 1}) positiva", flag="--algebra")
            if (a[i][j] == 0) != (a[j][i] == 0):
                raise CartanError(f"padrão de zeros assimétrico em ({i + 1},{j + 1})", flag="--algebra")
    d = _symmetrizer(a)
    sym = [[Fraction(a[i][j]) * d[j] for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        minor = linalg.from_rows([row[:k] for row in sym[:k]]).to_dense().det()
        if linalg.to_fraction(minor) <= 0:
            raise CartanError("matriz de Cartan de tipo não finito (simetrização não definida positiva)", flag="--algebra")


@dataclass(frozen=True)
class CartanSpec:
    """Matriz de Cartan validada, com rótulo opcional ("A3", "B2xA1", ...)."""

    entries: Tuple[Tuple[int, ...], ...]
    label: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(tuple(int(x) for x in row) for row in self.entries))
        _validate_cartan(self.entries)

    @property
    def rank(self) -> int:
        return len(self.entries)


def cartan_of_type(letter: str, n: int) -> Tuple[Tuple[int, ...], ...]:
    """Matriz de Cartan do tipo de Dynkin ``letter`` e posto ``n`` (numeração de Bourbaki)."""
    letter = letter.upper()
    valid = {
        "A": n >= 1,
        "B": n >= 2,
        "C": n >= 2,
        "D": n >= 3,
        "E": n in (6, 7, 8),
        "F": n == 4,
        "G": n == 2,
    }
    if not valid.get(letter, False):
        raise CartanError(f"tipo de Dynkin inválido: {letter}{n}", flag="--algebra")
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i][j] = aij
        a[j][i] = aji

    if letter in "ABC":
        for i in range(n - 1):
            link(i, i + 1)
        if letter == "B":
            link(n - 2, n - 1, -2, -1)
        elif letter == "C":
            link(n - 2, n - 1, -1, -2)
    elif letter == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif letter == "E":
        for i, j in [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)]:
            if i < n and j < n:
                link(i, j)
    elif letter == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif letter == "G":
        link(0, 1, -1, -3)
    return tuple(tuple(row) for row in a)


def _block_diagonal(blocks: Sequence[Tuple[Tuple[int, ...], ...]]) -> Tuple[Tuple[int, ...], ...]:
    size = sum(len(b) for b in blocks)
    rows = []
    offset = 0
    for b in blocks:
        for row in b:
            rows.append(tuple([0] * offset + list(row) + [0] * (size - offset - len(b))))
        offset += len(b)
    return tuple(rows)


def parse_algebra(text: str, flag: str = "--algebra") -> CartanSpec:
    """Lê "A3", "A2xA1" ou uma matriz de Cartan em JSON."""
    raw = (text or "").strip()
    if not raw:
        raise CartanError("especificação de álgebra vazia", flag=flag)
    if raw.startswith("["):
        try:
            entries = json.loads(raw)
        except json.JSONDecodeError as e:
            raise CartanError(f"JSON inválido: {e}", flag=flag)
        if not isinstance(entries, list) or not all(isinstance(r, list) for r in entries):
            raise CartanError("a matriz deve ser uma lista de listas de inteiros", flag=flag)
        if not all(isinstance(x, int) and not isinstance(x, bool) for r in entries for x in r):
            raise CartanError("a matriz deve ter entradas inteiras", flag=flag)
        try:
            return CartanSpec(tuple(tuple(r) for r in entries))
        except CartanError as e:
            raise CartanError(str(e), flag=flag)
    blocks = []
    labels = []
    for token in re.split(r"[xX×]", raw):
        match = _TYPE_TOKEN.match(token.strip())
        if not match:
            raise CartanError(f"componente inválida {token!r}; use por exemplo A3 ou B2xA1", flag=flag)
        letter, n = match.group(1).upper(), int(match.group(2))
        try:
            blocks.append(cartan_of_type(letter, n))
        except CartanError as e:
            raise CartanError(str(e), flag=flag)
        labels.append(f"{letter}{n}")
    return CartanSpec(_block_diagonal(blocks), label="x".join(labels))


def _positive_roots(a: Tuple[Tuple[int, ...], ...]) -> Tuple[Root, ...]:
    """Raízes positivas por cadeias de raízes, nível a nível de altura."""
    n = len(a)
    simple = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    roots = set(simple)
    level = list(simple)
    while level:
        upper = []
        for beta in level:
            for i in range(n):
                pairing = sum(beta[j] * a[j][i] for j in range(n))
                down = list(beta)
                r = 0
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        r += 1
                    else:
                        break
                if r - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        upper.append(up)
        level = upper
    return tuple(sorted(roots, key=lambda c: (height(c), tuple(-x for x in c))))


@dataclass(frozen=True)
class RootSystem:
    """Sistema de raízes com raízes positivas ordenadas e forma de Killing.

    ``killing`` é a matriz de Gram do produto interno induzido pela forma de
    Killing no espaço de pesos (coordenadas fundamentais);
    ``coroot_killing[i][j] = kappa(h_i, h_j)``.
    """

    cartan: CartanSpec
    positive_roots: Tuple[Root, ...]
    killing: Tuple[Tuple[Fraction, ...], ...]
    coroot_killing: Tuple[Tuple[Fraction, ...], ...]

    @property
    def rank(self) -> int:
        return self.cartan.rank

    @property
    def label(self) -> str:
        return self.cartan.label or "cartan"

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    @property
    def a(self) -> Tuple[Tuple[int, ...], ...]:
        return self.cartan.entries

    @cached_property
    def _root_index(self) -> Dict[Root, int]:
        return {root: n for n, root in enumerate(self.positive_roots)}

    @cached_property
    def _inverse_cartan(self) -> Tuple[Tuple[Fraction, ...], ...]:
        inv = linalg.inverse(linalg.from_rows(self.a))
        return tuple(tuple(row) for row in linalg.to_fraction_rows(inv))

    def simple_root(self, i: int) -> Root:
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    def simple_root_weight(self, i: int) -> Weight:
        return tuple(Fraction(x) for x in self.a[i - 1])

    def root_to_weight(self, root: Sequence) -> Weight:
        n = self.rank
        return tuple(
            sum((Fraction(root[k]) * self.a[k][j] for k in range(n)), Fraction(0))
            for j in range(n)
        )

    def weight_to_root(self, weight: Sequence) -> Tuple[Fraction, ...]:
        """Coordenadas de um peso na base de raízes simples."""
        n = self.rank
        inv = self._inverse_cartan
        return tuple(sum((Fraction(weight[i]) * inv[i][j] for i in range(n)), Fraction(0)) for j in range(n))

    def inner(self, x: Sequence, y: Sequence) -> Fraction:
        g = self.killing
        n = self.rank
        return sum(
            (Fraction(x[i]) * g[i][j] * Fraction(y[j]) for i in range(n) for j in range(n) if x[i] and y[j]),
            Fraction(0),
        )

    def norm_sq(self, x: Sequence) -> Fraction:
        return self.inner(x, x)

    def is_root(self, root: Sequence[int]) -> bool:
        root = tuple(root)
        return root in self._root_index or tuple(-c for c in root) in self._root_index

    def is_positive_root(self, root: Sequence[int]) -> bool:
        return tuple(root) in self._root_index

    def root_index(self, root: Sequence[int]) -> int:
        return self._root_index[tuple(root)]

    def reflect_weight(self, i: int, weight: Sequence) -> tuple:
        """sigma_i(lambda) = lambda - <lambda, alpha_i^vee> alpha_i."""
        c = weight[i - 1]
        if not c:
            return tuple(weight)
        row = self.a[i - 1]
        return tuple(w - c * r for w, r in zip(weight, row))

    def reflect_root(self, i: int, root: Sequence[int]) -> Root:
        pairing = sum(root[j] * self.a[j][i - 1] for j in range(self.rank))
        out = list(root)
        out[i - 1] -= pairing
        return tuple(out)

    def pairing(self, weight: Sequence, root: Sequence[int]) -> Fraction:
        """<lambda, alpha^vee> = 2 (lambda, alpha) / (alpha, alpha)."""
        alpha = self.root_to_weight(root)
        return 2 * self.inner(weight, alpha) / self.norm_sq(alpha)

    def simple_norm(self, i: int) -> Fraction:
        return self.norm_sq(self.simple_root_weight(i))

    def coroot_coefficients(self, root: Sequence[int]) -> Tuple[Fraction, ...]:
        """alpha^vee = sum_i c_i alpha_i^vee."""
        d_alpha = self.norm_sq(self.root_to_weight(root))
        return tuple(Fraction(root[i - 1]) * self.simple_norm(i) / d_alpha for i in self.nodes)

    def components(self) -> List[Tuple[int, ...]]:
        """Componentes conexas do diagrama de Dynkin (nós a partir de 1)."""
        seen = set()
        out = []
        for start in self.nodes:
            if start in seen:
                continue
            comp = []
            stack = [start]
            seen.add(start)
            while stack:
                i = stack.pop()
                comp.append(i)
                for j in self.nodes:
                    if j not in seen and self.a[i - 1][j - 1] != 0:
                        seen.add(j)
                        stack.append(j)
            out.append(tuple(sorted(comp)))
        return out

    def highest_root(self, component: Sequence[int]) -> Root:
        support = set(component)
        candidates = [
            r for r in self.positive_roots
            if all((c == 0) or (k + 1 in support) for k, c in enumerate(r))
        ]
        return max(candidates, key=height)


@lru_cache(maxsize=None)
def build_root_system(spec: CartanSpec) -> RootSystem:
    """Constrói o sistema de raízes e a forma de Killing a partir de uma matriz de Cartan."""
    a = spec.entries
    n = spec.rank
    positive = _positive_roots(a)
    if spec.label:
        expected = 0
        for token in spec.label.split("x"):
            match = _TYPE_TOKEN.match(token)
            if match:
                expected += _ROOT_COUNTS[match.group(1)](int(match.group(2)))
        if expected != len(positive):
            raise CartanError(f"{spec.label}: esperadas {expected} raízes positivas, obtidas {len(positive)}")
    # kappa(h_i, h_j) = sum_{alpha em Delta} alpha(h_i) alpha(h_j)
    pairings = [[sum(root[k] * a[k][i] for k in range(n)) for i in range(n)] for root in positive]
    coroot_killing = tuple(
        tuple(Fraction(2 * sum(p[i] * p[j] for p in pairings)) for j in range(n)) for i in range(n)
    )
    gram = linalg.inverse(linalg.from_rows(coroot_killing))
    killing = tuple(tuple(row) for row in linalg.to_fraction_rows(gram))
    rs = RootSystem(cartan=spec, positive_roots=positive, killing=killing, coroot_killing=coroot_killing)
    logger.info(f"Sistema de raízes {rs.label} construído: posto {n}, {len(positive)} raízes positivas")
    return rs


def delta(rs: RootSystem) -> Weight:
    """Meia soma das raízes positivas; em coordenadas fundamentais é (1,...,1)."""
    half_sum = tuple(Fraction(sum(r[k] for r in rs.positive_roots), 2) for k in range(rs.rank))
    return rs.root_to_weight(half_sum)


def pairing(weight: Sequence, root: Sequence[int], rs: RootSystem) -> Fraction:
    return rs.pairing(weight, root)


def norm_sq(weight: Sequence, rs: RootSystem) -> Fraction:
    return rs.norm_sq(weight)


_BONDS = {1: "—", 2: "=", 3: "≡"}


def dynkin_ascii(rs: RootSystem, sigma: Iterable[int] = ()) -> str:
    """Diagrama de Dynkin com os nós de ``sigma`` cruzados, ex.: ``x—o—o``."""
    crossed = set(sigma)
    parts = []
    for comp in rs.components():
        text = ""
        extra = []
        for pos, i in enumerate(comp):
            if pos:
                prev = comp[pos - 1]
                bond = rs.a[prev - 1][i - 1] * rs.a[i - 1][prev - 1]
                text += _BONDS.get(bond, " ")
            text += "x" if i in crossed else "o"
        for pos, i in enumerate(comp):
            for j in comp[pos + 2:]:
                if rs.a[i - 1][j - 1]:
                    extra.append(f"{i}—{j}")
        if extra:
            text += " (" + ", ".join(extra) + ")"
        parts.append(text)
    return " × ".join(parts)
