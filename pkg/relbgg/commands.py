"""
Registro de comandos compartilhado pela CLI e pela API HTTP.

Cada handler recebe um ``Request`` já validado e devolve um dicionário
pronto para JSON com o campo ``schema`` (``relbgg/<comando>/v1``). Os
renderizadores de texto e DOT ficam em ``relbgg.render``.
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Any, Callable, Dict, FrozenSet, List, Optional, Sequence, Union

from relbgg import homology, oracle, weyl
from relbgg.errors import SpecError, VerificationFailed, WeightError
from relbgg.parabolic import (
    ParabolicPair,
    delta_p,
    delta_qp,
    factorize,
    hasse,
    is_integral,
    make_pair,
    partition,
    relative_hasse,
    root_grading,
)
from relbgg.rootsys import Root, RootSystem, Weight, build_root_system, delta, dynkin_ascii, format_weight, height, parse_algebra
from relbgg.weyl import WeylElement

logger = logging.getLogger(__name__)

SCHEMA_VERSION = "v1"

TextOrList = Union[str, Sequence, None]


@dataclass
class Request:
    """Entrada de um comando; campos em texto como vêm da CLI ou do corpo JSON."""

    command: str
    algebra: str
    p: TextOrList = None
    q: TextOrList = None
    weight: TextOrList = None
    word: Optional[str] = None
    generators: TextOrList = None


# ========== PARSING ==========

def _tokens(value: TextOrList) -> List[str]:
    if value is None:
        return []
    if isinstance(value, str):
        raw = value.strip()
        if raw in ("", "-", "none"):
            return []
        raw = raw.strip("()[]{}")
        return [t for t in re.split(r"[\s,]+", raw) if t]
    if isinstance(value, (int, Fraction)):
        return [str(value)]
    return [str(v) for v in value]


def parse_sigma(value: TextOrList, flag: str) -> FrozenSet[int]:
    """Lista de nós cruzados: "1,2", "1 2", [1, 2] ou vazio."""
    nodes = set()
    for token in _tokens(value):
        try:
            nodes.add(int(token))
        except ValueError:
            raise SpecError(f"índice de nó inválido {token!r}", flag=flag)
    return frozenset(nodes)


def parse_weight(value: TextOrList, rank: int, flag: str = "--lambda") -> Weight:
    """Peso em coordenadas fundamentais: "1,0,-2", "1/2,0" ou lista."""
    tokens = _tokens(value)
    if not tokens:
        raise WeightError("peso obrigatório para este comando", flag=flag)
    try:
        weight = tuple(Fraction(t) for t in tokens)
    except (ValueError, ZeroDivisionError):
        raise WeightError(f"peso inválido {value!r}", flag=flag)
    if len(weight) != rank:
        raise WeightError(f"peso com {len(weight)} coordenadas; esperado {rank}", flag=flag)
    return weight


def _require_integral(weight: Weight, flag: str = "--lambda") -> Weight:
    if not is_integral(weight):
        raise WeightError(f"peso {format_weight(weight)} não é inteiro", flag=flag)
    return weight


# ========== SERIALIZAÇÃO ==========

def number(value) -> Any:
    value = Fraction(value)
    return int(value) if value.denominator == 1 else str(value)


def weight_json(weight: Sequence) -> List[Any]:
    return [number(x) for x in weight]


def _word_text(word: Sequence[int]) -> str:
    return " ".join(f"s{i}" for i in word) or "e"


def element_json(w: WeylElement) -> Dict[str, Any]:
    return {
        "word": weyl.word_string(w),
        "length": w.length,
        "phi": sorted([list(r) for r in w.phi]),
    }


def entry_json(entry: homology.HomologyEntry) -> Dict[str, Any]:
    return {
        "k": entry.degree,
        "word": weyl.word_string(entry.weyl_word),
        "nu": weight_json(entry.nu),
        "gap": number(entry.laplacian_gap),
    }


# ========== CONTEXTO ==========

class Context:
    """Sistema de raízes e par parabólico resolvidos a partir de um ``Request``."""

    def __init__(self, request: Request):
        self.request = request
        self.rs: RootSystem = build_root_system(parse_algebra(request.algebra))

    def pair(self, require_q: bool = True) -> ParabolicPair:
        """Par (p, q); sem --p vale p = g (sigma_p vazio)."""
        if require_q and self.request.q is None:
            raise SpecError("parabólica q obrigatória para este comando", flag="--q")
        sigma_p = parse_sigma(self.request.p, "--p")
        sigma_q = parse_sigma(self.request.q, "--q")
        return make_pair(sigma_p, sigma_q, self.rs)

    def weight(self) -> Weight:
        return parse_weight(self.request.weight, self.rs.rank)

    def header(self, pair: Optional[ParabolicPair] = None) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "schema": f"relbgg/{self.request.command}/{SCHEMA_VERSION}",
            "algebra": self.rs.label,
            "rank": self.rs.rank,
        }
        if pair is not None:
            out["sigma_p"] = sorted(pair.sigma_p)
            out["sigma_q"] = sorted(pair.sigma_q)
        return out


# ========== HANDLERS ==========

def _part_of(root: Root, pair: ParabolicPair) -> str:
    q_height, p_height = root_grading(root, pair)
    if q_height == 0:
        return "q0"
    return "mid" if p_height == 0 else "pplus"


def run_roots(ctx: Context) -> Dict[str, Any]:
    """Raízes positivas; com --q também a partição q0 ⊔ mid ⊔ pplus."""
    rs = ctx.rs
    has_pair = ctx.request.q is not None or ctx.request.p is not None
    pair = ctx.pair(require_q=False) if has_pair else None
    roots = []
    for root in rs.positive_roots:
        item = {"root": list(root), "height": height(root), "weight": weight_json(rs.root_to_weight(root))}
        if pair is not None:
            item["part"] = _part_of(root, pair)
            item["grading"] = list(root_grading(root, pair))
        roots.append(item)
    out = ctx.header(pair)
    out.update({
        "cartan": [list(row) for row in rs.a],
        "delta": weight_json(delta(rs)),
        "positive_roots": roots,
    })
    if pair is not None:
        out["delta_p"] = weight_json(delta_p(pair, rs))
    return out


def run_hasse(ctx: Context) -> Dict[str, Any]:
    """W^q com as coberturas de Bruhat."""
    pair = ctx.pair()
    elements = hasse(pair.sigma_q, ctx.rs)
    out = ctx.header(pair)
    out["elements"] = [element_json(w) for w in elements]
    out["covers"] = [[weyl.word_string(a), weyl.word_string(b)] for a, b in weyl.bruhat_covers(elements)]
    return out


def run_relative_hasse(ctx: Context) -> Dict[str, Any]:
    """W^q_p; cada elemento vem com o ponto w^-1(delta^q_p) da órbita que o gerou."""
    pair = ctx.pair()
    rs = ctx.rs
    start = delta_qp(pair, rs)
    elements = relative_hasse(pair, rs)
    out = ctx.header(pair)
    out["delta_qp"] = weight_json(start)
    out["elements"] = [
        dict(element_json(w), point=weight_json(weyl.apply(weyl.inverse(w), start))) for w in elements
    ]
    out["covers"] = [[weyl.word_string(a), weyl.word_string(b)] for a, b in weyl.bruhat_covers(elements)]
    return out


def run_factorize(ctx: Context) -> Dict[str, Any]:
    """Fatoração w = w1 w2 com w1 ∈ W^q_p e w2 ∈ W^p."""
    pair = ctx.pair()
    if ctx.request.word is None:
        raise SpecError("palavra obrigatória para factorize", flag="--word")
    w = weyl.parse_word(ctx.request.word, ctx.rs)
    w1, w2 = factorize(w, pair, ctx.rs)
    out = ctx.header(pair)
    out.update({"w": element_json(w), "w1": element_json(w1), "w2": element_json(w2)})
    return out


def run_orbit(ctx: Context) -> Dict[str, Any]:
    """Órbita linear de lambda sob o subgrupo gerado por --generators (todos os nós por padrão)."""
    rs = ctx.rs
    weight = ctx.weight()
    generators = parse_sigma(ctx.request.generators, "--generators") if ctx.request.generators is not None else rs.nodes
    points = weyl.orbit(weight, generators, rs)
    out = ctx.header()
    out.update({
        "lambda": weight_json(weight),
        "generators": sorted(generators),
        "points": [
            {"weight": weight_json(point), "word": _word_text(word), "depth": len(word)}
            for point, word in points.items()
        ],
    })
    return out


def run_homology(ctx: Context) -> Dict[str, Any]:
    """H_*(q+/p+, V) no nível dos pesos, com as dimensões previstas."""
    pair = ctx.pair()
    weight = _require_integral(ctx.weight())
    entries = homology.relative_homology(weight, pair, ctx.rs)
    dims = homology.homology_dimensions(weight, pair, ctx.rs)
    out = ctx.header(pair)
    out.update({
        "lambda": weight_json(weight),
        "entries": [entry_json(e) for e in entries],
        "degree_counts": homology.degree_counts(entries),
        "dimensions": [dims.get(k, 0) for k in range(max(dims) + 1)] if dims else [],
    })
    return out


def run_factorized(ctx: Context) -> Dict[str, Any]:
    """Tabela H_i(q+/p+, H_j(p+, V)) achatada e comparada com Kostant."""
    pair = ctx.pair()
    weight = _require_integral(ctx.weight())
    table = homology.factorized_homology(weight, pair, ctx.rs)
    out = ctx.header(pair)
    out.update({
        "lambda": weight_json(weight),
        "cells": [
            {"i": i, "j": j, "entries": [entry_json(e) for e in items]}
            for (i, j), items in sorted(table.entries.items())
        ],
        "degree_counts": table.degree_counts(),
    })
    return out


def run_singular(ctx: Context) -> Dict[str, Any]:
    """Órbita relativa com as paredes em que lambda + delta está."""
    pair = ctx.pair()
    weight = _require_integral(ctx.weight())
    pattern = homology.singular_patterns(weight, pair, ctx.rs)
    out = ctx.header(pair)
    out.update({
        "lambda": weight_json(weight),
        "entries": [entry_json(e) for e in pattern.entries],
        "walls": [list(r) for r in pattern.walls],
    })
    return out


def run_verify_complex(ctx: Context) -> Dict[str, Any]:
    """Complexos explícitos; a parte absoluta só roda para lambda g-dominante."""
    from relbgg.chevalley import build_chevalley, verify

    pair = ctx.pair()
    weight = _require_integral(ctx.weight())
    reports = verify(weight, pair, build_chevalley(ctx.rs))
    out = ctx.header(pair)
    out.update({
        "lambda": weight_json(weight),
        "ok": all(r.ok for r in reports),
        "reports": [r.to_dict() for r in reports],
    })
    return out


def run_verify_mult_one(ctx: Context) -> Dict[str, Any]:
    """Multiplicidade um das componentes w·lambda por força bruta sobre Λ^k(q+ ∩ p0) ⊗ V."""
    from relbgg.chevalley.checks import CheckResult

    rs = ctx.rs
    pair = ctx.pair()
    weight = _require_integral(ctx.weight())
    entries = homology.relative_homology(weight, pair, rs)
    checks: List[CheckResult] = []

    rows, failures = [], []
    for e in entries:
        mult = oracle.chain_multiplicity(e.nu, e.degree, weight, pair, rs)
        rows.append({"k": e.degree, "word": weyl.word_string(e.weyl_word), "nu": weight_json(e.nu), "multiplicity": mult})
        if mult != 1:
            failures.append(rows[-1])
    checks.append(CheckResult("multiplicity-one", "fail" if failures else "pass", {"entries": rows, "failures": failures}))

    violations = oracle.lowest_weight_exclusion(weight, pair, rs)
    checks.append(CheckResult(
        "lowest-weight-exclusion",
        "fail" if violations else "pass",
        {"violations": [{"nu": weight_json(nu), "alpha": list(alpha)} for nu, alpha in violations]},
    ))

    m = len(partition(pair, rs).mid)
    dim_v = oracle.weyl_dimension(weight, pair.sigma_p, rs)
    totals = [sum(oracle.chain_weights(k, weight, pair, rs).values()) for k in range(m + 1)]
    expected = [comb(m, k) * dim_v for k in range(m + 1)]
    checks.append(CheckResult(
        "total-dimension",
        "pass" if totals == expected else "fail",
        {"totals": totals, "expected": expected},
    ))

    out = ctx.header(pair)
    out.update({
        "lambda": weight_json(weight),
        "ok": all(c.ok for c in checks),
        "checks": [c.to_dict() for c in checks],
    })
    return out


def run_dot(ctx: Context) -> Dict[str, Any]:
    """Diagrama de Hasse em DOT: relativo quando --p é dado, senão W^q."""
    from relbgg.render import hasse_dot

    if ctx.request.p is not None:
        data = run_relative_hasse(ctx)
    else:
        data = run_hasse(ctx)
    out = {key: data[key] for key in ("algebra", "rank", "sigma_p", "sigma_q")}
    out["schema"] = f"relbgg/{ctx.request.command}/{SCHEMA_VERSION}"
    out["dot"] = hasse_dot(data)
    return out


def run_dynkin(ctx: Context) -> Dict[str, Any]:
    """Diagramas de Dynkin com os nós de p e de q cruzados."""
    has_pair = ctx.request.q is not None or ctx.request.p is not None
    pair = ctx.pair(require_q=False) if has_pair else None
    out = ctx.header(pair)
    out["g"] = dynkin_ascii(ctx.rs)
    if pair is not None:
        out["p"] = dynkin_ascii(ctx.rs, pair.sigma_p)
        out["q"] = dynkin_ascii(ctx.rs, pair.sigma_q)
    return out


# Registro de comandos (mesmo padrão de lookup por nome da CLI e da API)
COMMANDS: Dict[str, Callable[[Context], Dict[str, Any]]] = {
    "roots": run_roots,
    "hasse": run_hasse,
    "relative-hasse": run_relative_hasse,
    "factorize": run_factorize,
    "orbit": run_orbit,
    "homology": run_homology,
    "factorized": run_factorized,
    "singular": run_singular,
    "verify-complex": run_verify_complex,
    "verify-mult-one": run_verify_mult_one,
    "dot": run_dot,
    "dynkin": run_dynkin,
}

VERIFY_COMMANDS = frozenset({"verify-complex", "verify-mult-one"})


def run(request: Request) -> Dict[str, Any]:
    """Executa um comando registrado.

    Args:
        request: Comando e argumentos em texto

    Returns:
        Dicionário JSON com ``schema``

    Raises:
        SpecError: Comando ou argumentos inválidos
        VerificationFailed: Algum item de um relatório de verificação falhou
    """
    handler = COMMANDS.get(request.command)
    if handler is None:
        raise SpecError(f"comando desconhecido: {request.command}", flag="command")
    logger.info(f"Executando {request.command} para {request.algebra}")
    result = handler(Context(request))
    if request.command in VERIFY_COMMANDS and not result.get("ok", True):
        logger.warning(f"Verificação {request.command} falhou para {request.algebra}")
        raise VerificationFailed(f"{request.command}: verificação falhou", report=result)
    return result


def describe_commands() -> List[Dict[str, str]]:
    """Nome e primeira linha da docstring de cada comando registrado."""
    out = []
    for name, handler in COMMANDS.items():
        doc = (handler.__doc__ or "").strip().splitlines()
        out.append({"name": name, "description": doc[0] if doc else ""})
    return out
