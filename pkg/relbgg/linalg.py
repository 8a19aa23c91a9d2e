"""
Álgebra linear racional exata sobre ``DomainMatrix`` do sympy.

Todas as matrizes são mantidas no formato esparso (SDM) sobre ``QQ``;
os operadores ``*``/``+`` do sympy convertem para o formato denso, por isso
os complexos de cadeias usam apenas as funções deste módulo.
Vetores são matrizes coluna; subespaços são representados por matrizes cujas
colunas formam uma base.
"""

import logging
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple, Union

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from relbgg.errors import ConsistencyError

logger = logging.getLogger(__name__)

Scalar = Union[int, Fraction]
Entries = Mapping[Tuple[int, int], object]


def qq(value):
    """Converte int/Fraction (ou elemento de QQ) para elemento de QQ."""
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, int):
        return QQ(value)
    return QQ.convert(value)


def to_fraction(element) -> Fraction:
    """Converte um elemento de QQ para ``Fraction``."""
    return Fraction(int(element.numerator), int(element.denominator))


def sparse(entries: Entries, shape: Tuple[int, int]) -> DomainMatrix:
    """Monta uma matriz esparsa a partir de ``{(linha, coluna): valor}``."""
    rows: Dict[int, Dict[int, object]] = {}
    for (i, j), value in entries.items():
        element = qq(value)
        if element:
            rows.setdefault(i, {})[j] = element
    return DomainMatrix(rows, shape, QQ)


def from_rows(rows: Sequence[Sequence[Scalar]]) -> DomainMatrix:
    """Matriz esparsa a partir de uma lista de linhas."""
    ncols = len(rows[0]) if rows else 0
    entries = {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row) if v}
    return sparse(entries, (len(rows), ncols))


def zeros(shape: Tuple[int, int]) -> DomainMatrix:
    return DomainMatrix({}, shape, QQ)


def identity(n: int) -> DomainMatrix:
    return sparse({(i, i): 1 for i in range(n)}, (n, n))


def diagonal(values: Sequence[Scalar]) -> DomainMatrix:
    return sparse({(i, i): v for i, v in enumerate(values)}, (len(values), len(values)))


def _sparse_rep(m: DomainMatrix) -> DomainMatrix:
    return m if m.rep.fmt == "sparse" else m.to_sparse()


def mul(*matrices: DomainMatrix) -> DomainMatrix:
    """Produto matricial (esquerda para a direita) mantendo o formato esparso."""
    result = _sparse_rep(matrices[0])
    for m in matrices[1:]:
        m = _sparse_rep(m)
        if result.shape[1] != m.shape[0]:
            raise ConsistencyError(f"Dimensões incompatíveis: {result.shape} x {m.shape}")
        if 0 in result.shape or 0 in m.shape:
            result = zeros((result.shape[0], m.shape[1]))
        else:
            result = result.matmul(m)
    return result


def add(a: DomainMatrix, b: DomainMatrix) -> DomainMatrix:
    return _sparse_rep(a).add(_sparse_rep(b))


def sub(a: DomainMatrix, b: DomainMatrix) -> DomainMatrix:
    return _sparse_rep(a).sub(_sparse_rep(b))


def scale(m: DomainMatrix, c) -> DomainMatrix:
    return _sparse_rep(m).scalarmul(qq(c))


def total(matrices: Iterable[DomainMatrix], shape: Tuple[int, int]) -> DomainMatrix:
    result = zeros(shape)
    for m in matrices:
        result = add(result, m)
    return result


def commutator(a: DomainMatrix, b: DomainMatrix) -> DomainMatrix:
    return sub(mul(a, b), mul(b, a))


def is_zero(m: DomainMatrix) -> bool:
    return 0 in m.shape or m.is_zero_matrix


def equal(a: DomainMatrix, b: DomainMatrix) -> bool:
    return a.shape == b.shape and is_zero(sub(a, b))


def items(m: DomainMatrix) -> Iterator[Tuple[int, int, object]]:
    """Itera ``(linha, coluna, elemento)`` sobre as entradas não nulas."""
    for i, row in _sparse_rep(m).to_dod().items():
        for j, value in row.items():
            yield i, j, value


def entry(m: DomainMatrix, i: int, j: int) -> Fraction:
    return to_fraction(m[i, j].element)


def columns(m: DomainMatrix) -> Dict[int, Dict[int, object]]:
    """Colunas não nulas: ``{coluna: {linha: elemento}}``."""
    cols: Dict[int, Dict[int, object]] = {}
    for i, j, value in items(m):
        cols.setdefault(j, {})[i] = value
    return cols


def extract(m: DomainMatrix, rows: Sequence[int], cols: Sequence[int]) -> DomainMatrix:
    """Submatriz; aceita listas vazias."""
    rows, cols = list(rows), list(cols)
    if not rows or not cols:
        return zeros((len(rows), len(cols)))
    return _sparse_rep(m).extract(rows, cols)


def embed(m: DomainMatrix, rows: Sequence[int], nrows: int) -> DomainMatrix:
    """Inverso de ``extract`` nas linhas: coloca a linha ``r`` de ``m`` em ``rows[r]``."""
    entries = {(rows[i], j): v for i, j, v in items(m)}
    return sparse(entries, (nrows, m.shape[1]))


def hstack(*matrices: DomainMatrix) -> DomainMatrix:
    nrows = matrices[0].shape[0]
    entries = {}
    offset = 0
    for m in matrices:
        if m.shape[0] != nrows:
            raise ConsistencyError(f"hstack com alturas diferentes: {m.shape[0]} != {nrows}")
        for i, j, v in items(m):
            entries[(i, offset + j)] = v
        offset += m.shape[1]
    return sparse(entries, (nrows, offset))


def vstack(*matrices: DomainMatrix) -> DomainMatrix:
    ncols = matrices[0].shape[1]
    entries = {}
    offset = 0
    for m in matrices:
        if m.shape[1] != ncols:
            raise ConsistencyError(f"vstack com larguras diferentes: {m.shape[1]} != {ncols}")
        for i, j, v in items(m):
            entries[(offset + i, j)] = v
        offset += m.shape[0]
    return sparse(entries, (offset, ncols))


def block_diagonal(blocks: Sequence[DomainMatrix]) -> DomainMatrix:
    entries = {}
    r0 = c0 = 0
    for b in blocks:
        for i, j, v in items(b):
            entries[(r0 + i, c0 + j)] = v
        r0 += b.shape[0]
        c0 += b.shape[1]
    return sparse(entries, (r0, c0))


def rref(m: DomainMatrix) -> Tuple[DomainMatrix, Tuple[int, ...]]:
    if 0 in m.shape:
        return m, ()
    reduced, pivots = _sparse_rep(m).rref()
    return reduced, tuple(pivots)


def rank(m: DomainMatrix) -> int:
    if 0 in m.shape:
        return 0
    return len(rref(m)[1])


def kernel(m: DomainMatrix) -> DomainMatrix:
    """Base do núcleo (colunas)."""
    nrows, ncols = m.shape
    if ncols == 0:
        return zeros((0, 0))
    if nrows == 0:
        return identity(ncols)
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(ncols) if j not in pivot_set]
    rows = _sparse_rep(reduced).to_dod()
    entries = {}
    for n, f in enumerate(free):
        entries[(f, n)] = QQ(1)
        for r, p in enumerate(pivots):
            value = rows.get(r, {}).get(f)
            if value:
                entries[(p, n)] = -value
    return sparse(entries, (ncols, len(free)))


def image(m: DomainMatrix) -> DomainMatrix:
    """Base da imagem (colunas pivô de ``m``)."""
    nrows, ncols = m.shape
    if nrows == 0 or ncols == 0:
        return zeros((nrows, 0))
    _, pivots = rref(m)
    return extract(m, range(nrows), pivots)


def span_rank(*matrices: DomainMatrix) -> int:
    return rank(hstack(*matrices))


def intersection_dim(a: DomainMatrix, b: DomainMatrix) -> int:
    """dim(col(a) ∩ col(b))."""
    return rank(a) + rank(b) - span_rank(a, b)


def contains(space: DomainMatrix, vectors: DomainMatrix) -> bool:
    """Verifica se as colunas de ``vectors`` estão no espaço coluna de ``space``."""
    if vectors.shape[1] == 0 or is_zero(vectors):
        return True
    return rank(space) == span_rank(space, vectors)


def complement(sub_basis: DomainMatrix, basis: DomainMatrix) -> DomainMatrix:
    """Colunas de ``basis`` que completam ``sub_basis`` (colunas independentes) a uma base."""
    nsub = sub_basis.shape[1]
    _, pivots = rref(hstack(sub_basis, basis))
    chosen = [p - nsub for p in pivots if p >= nsub]
    return extract(basis, range(basis.shape[0]), chosen)


def solve(m: DomainMatrix, rhs: DomainMatrix) -> DomainMatrix:
    """Resolve ``m · c = rhs`` para ``m`` de posto coluna completo.

    Levanta ``ConsistencyError`` se alguma coluna de ``rhs`` não estiver no
    espaço coluna de ``m``.
    """
    nrows, ncols = m.shape
    if ncols == 0:
        if not is_zero(rhs):
            raise ConsistencyError("Sistema inconsistente: base vazia e lado direito não nulo")
        return zeros((0, rhs.shape[1]))
    if rhs.shape[1] == 0:
        return zeros((ncols, 0))
    reduced, pivots = rref(hstack(m, rhs))
    if pivots[:ncols] != tuple(range(ncols)) or len(pivots) > ncols:
        raise ConsistencyError("Sistema inconsistente ou base dependente em solve()")
    return extract(reduced, range(ncols), range(ncols, ncols + rhs.shape[1]))


def inverse(m: DomainMatrix) -> DomainMatrix:
    n = m.shape[0]
    if n == 0:
        return zeros((0, 0))
    return solve(m, identity(n))


def to_fraction_rows(m: DomainMatrix) -> List[List[Fraction]]:
    nrows, ncols = m.shape
    rows = [[Fraction(0)] * ncols for _ in range(nrows)]
    for i, j, v in items(m):
        rows[i][j] = to_fraction(v)
    return rows


def column_vector(values: Mapping[int, Scalar], n: int) -> DomainMatrix:
    return sparse({(i, 0): v for i, v in values.items()}, (n, 1))
