"""
Renderização dos resultados dos comandos em texto, JSON e DOT.

O texto é uma tabela com colunas separadas por `` | ``; linhas iniciadas
por ``#`` são cabeçalho e podem ser ignoradas por quem consome a saída.
"""

import json
from typing import Any, Callable, Dict, List, Sequence

from relbgg.errors import SpecError

FORMATS = ("text", "json", "dot")


def _weight(values: Sequence) -> str:
    return "(" + ",".join(str(x) for x in values) + ")"


def _nodes(values: Sequence[int]) -> str:
    return "{" + ",".join(str(x) for x in values) + "}"


def _header(data: Dict[str, Any]) -> List[str]:
    line = f"# {data['algebra']}"
    if "sigma_p" in data:
        line += f" | p = {_nodes(data['sigma_p'])} | q = {_nodes(data['sigma_q'])}"
    if "lambda" in data:
        line += f" | lambda = {_weight(data['lambda'])}"
    return [line]


# ========== TEXTO POR COMANDO ==========

def _roots(data: Dict[str, Any]) -> List[str]:
    lines = _header(data) + [f"# delta = {_weight(data['delta'])}"]
    for item in data["positive_roots"]:
        row = f"{_weight(item['root'])} | {item['height']}"
        if "part" in item:
            row += f" | {item['part']}"
        lines.append(row)
    return lines


def _elements(data: Dict[str, Any]) -> List[str]:
    lines = _header(data)
    if "delta_qp" in data:
        points = " → ".join(_weight(e["point"]) for e in data["elements"])
        lines.append(f"# órbita de {_weight(data['delta_qp'])}: {points}")
    lines.extend(f"{e['word']} | {e['length']}" for e in data["elements"])
    return lines


def _factorize(data: Dict[str, Any]) -> List[str]:
    return _header(data) + ["# w | w1 | w2", f"{data['w']['word']} | {data['w1']['word']} | {data['w2']['word']}"]


def _orbit(data: Dict[str, Any]) -> List[str]:
    lines = _header(data) + [f"# geradores {_nodes(data['generators'])}, {len(data['points'])} pontos"]
    lines.extend(f"{p['word']} | {_weight(p['weight'])}" for p in data["points"])
    return lines


def _entries(entries: List[Dict[str, Any]]) -> List[str]:
    return [f"{e['k']} | {e['word']} | {_weight(e['nu'])} | {e['gap']}" for e in entries]


def _homology(data: Dict[str, Any]) -> List[str]:
    lines = _header(data) + ["# k | w | nu | gap"]
    lines.extend(_entries(data["entries"]))
    if data.get("dimensions"):
        lines.append("# dimensões por grau: " + ", ".join(str(d) for d in data["dimensions"]))
    return lines


def _factorized(data: Dict[str, Any]) -> List[str]:
    lines = _header(data) + ["# i | j | w | nu"]
    for cell in data["cells"]:
        for e in cell["entries"]:
            lines.append(f"{cell['i']} | {cell['j']} | {e['word']} | {_weight(e['nu'])}")
    lines.append("# contagem por grau: " + ", ".join(str(c) for c in data["degree_counts"]))
    return lines


def _singular(data: Dict[str, Any]) -> List[str]:
    walls = ", ".join(_weight(r) for r in data["walls"]) or "nenhuma"
    return _header(data) + [f"# paredes: {walls}", "# k | w | nu | gap"] + _entries(data["entries"])


def _checks(checks: List[Dict[str, Any]]) -> List[str]:
    return [f"{c['name']} | {c['status']}" for c in checks]


def _verify_complex(data: Dict[str, Any]) -> List[str]:
    lines = _header(data)
    for report in data["reports"]:
        lines.append(f"# {report['instance']['kind']}")
        lines.extend(_checks(report["checks"]))
    lines.append(f"# {'ok' if data['ok'] else 'FALHOU'}")
    return lines


def _verify_mult_one(data: Dict[str, Any]) -> List[str]:
    lines = _header(data) + _checks(data["checks"])
    lines.append(f"# {'ok' if data['ok'] else 'FALHOU'}")
    return lines


def _dot(data: Dict[str, Any]) -> List[str]:
    return data["dot"].splitlines()


def _dynkin(data: Dict[str, Any]) -> List[str]:
    lines = [f"g | {data['g']}"]
    for key in ("p", "q"):
        if key in data:
            lines.append(f"{key} | {data[key]}")
    return _header(data) + lines


TEXT_RENDERERS: Dict[str, Callable[[Dict[str, Any]], List[str]]] = {
    "roots": _roots,
    "hasse": _elements,
    "relative-hasse": _elements,
    "factorize": _factorize,
    "orbit": _orbit,
    "homology": _homology,
    "factorized": _factorized,
    "singular": _singular,
    "verify-complex": _verify_complex,
    "verify-mult-one": _verify_mult_one,
    "dot": _dot,
    "dynkin": _dynkin,
}


# ========== DOT ==========

def hasse_dot(data: Dict[str, Any]) -> str:
    """Digrafo do diagrama de Hasse (arestas das coberturas de Bruhat, de baixo para cima)."""
    lines = ["digraph hasse {", "  rankdir=BT;", "  node [shape=box];"]
    for e in data["elements"]:
        label = f"{e['word']}\\nl = {e['length']}"
        if "point" in e:
            label += f"\\n{_weight(e['point'])}"
        lines.append(f'  "{e["word"]}" [label="{label}"];')
    for low, high in data["covers"]:
        lines.append(f'  "{low}" -> "{high}";')
    lines.append("}")
    return "\n".join(lines)


def render(command: str, data: Dict[str, Any], fmt: str = "text") -> str:
    """Texto final de um resultado de comando."""
    if fmt == "json":
        return json.dumps(data, indent=2, ensure_ascii=False)
    if fmt == "dot":
        if "dot" in data:
            return data["dot"]
        if "elements" in data and "covers" in data:
            return hasse_dot(data)
        raise SpecError(f"formato dot não disponível para {command}", flag="--format")
    return "\n".join(TEXT_RENDERERS[command](data))
