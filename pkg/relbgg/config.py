"""
Configurações lidas de variáveis de ambiente (ver VARIABLES.md).
"""

import os

from relbgg.errors import SpecError

DEFAULT_ORBIT_CAP = 10 ** 7
DEFAULT_MAX_CHAIN_DIM = 50_000

LOG_LEVEL = os.environ.get("RELBGG_LOG_LEVEL", "WARNING")


def _int_env(name: str, default: int) -> int:
    raw = os.environ.get(name, "").strip()
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise SpecError(f"valor inteiro inválido: {raw!r}", flag=name)
    if value <= 0:
        raise SpecError(f"deve ser positivo: {value}", flag=name)
    return value


def orbit_cap() -> int:
    """Tamanho máximo de órbita (RELBGG_ORBIT_CAP)."""
    return _int_env("RELBGG_ORBIT_CAP", DEFAULT_ORBIT_CAP)


def max_chain_dim() -> int:
    """Maior espaço de cadeias admitido (RELBGG_MAX_CHAIN_DIM)."""
    return _int_env("RELBGG_MAX_CHAIN_DIM", DEFAULT_MAX_CHAIN_DIM)
