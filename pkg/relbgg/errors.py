"""
Hierarquia de exceções do relbgg.

``SpecError`` e subclasses são erros de uso (código de saída 2 na CLI,
HTTP 422 na API); as demais indicam limites excedidos ou falhas internas.
"""

from typing import Optional


class RelBGGError(Exception):
    """Erro base do relbgg."""


class SpecError(RelBGGError):
    """Entrada malformada (álgebra, parabólica, peso ou palavra)."""

    def __init__(self, message: str, flag: Optional[str] = None):
        super().__init__(message)
        self.flag = flag

    def diagnostic(self) -> str:
        """Mensagem de uma linha nomeando a flag ofensora."""
        if self.flag:
            return f"{self.flag}: {self}"
        return str(self)


class CartanError(SpecError):
    """Matriz que não é de Cartan de tipo finito."""


class InclusionError(SpecError):
    """sigma_p não contido em sigma_q, ou índice fora do posto."""


class WeightError(SpecError):
    """Peso não dominante ou não integral onde isso é exigido."""


class OrbitCapExceeded(RelBGGError):
    """Órbita maior que RELBGG_ORBIT_CAP."""


class ChainSizeExceeded(RelBGGError):
    """Espaço de cadeias maior que RELBGG_MAX_CHAIN_DIM."""


class NotInHasse(RelBGGError):
    """Elemento de Weyl fora do diagrama de Hasse exigido."""


class ConsistencyError(RelBGGError):
    """Uma identidade interna falhou; indica bug, não erro de uso."""


class VerificationFailed(RelBGGError):
    """Algum item de um relatório de verificação falhou."""

    def __init__(self, message: str, report: Optional[dict] = None):
        super().__init__(message)
        self.report = report
