"""
Serviço HTTP do relbgg.
Espelha a CLI: registra endpoints e delega para o registro de comandos em relbgg.commands.
"""

import os
import json
import logging
from typing import Any, Dict, Optional

from fastapi import FastAPI, HTTPException, Query, Request
from fastapi.responses import JSONResponse, Response
from starlette.concurrency import run_in_threadpool

from relbgg import __version__
from relbgg.commands import COMMANDS, Request as CommandRequest, describe_commands, run
from relbgg.errors import (
    ChainSizeExceeded,
    NotInHasse,
    OrbitCapExceeded,
    RelBGGError,
    SpecError,
    VerificationFailed,
)
from relbgg.render import render

# Configuração de logging
logging.basicConfig(level=os.environ.get("RELBGG_LOG_LEVEL", "INFO"))
logger = logging.getLogger(__name__)

# Inicialização do FastAPI
app = FastAPI(title="relbgg - Homologia relativa de parabólicas", version=__version__)

# Comandos com saída DOT
DOT_COMMANDS = ("hasse", "relative-hasse")

# Campos aceitos no corpo de POST /run/{command}
BODY_FIELDS = ("algebra", "p", "q", "lambda", "word", "generators")


def _build_request(command: str, body: Dict[str, Any]) -> CommandRequest:
    """Converte o corpo JSON em um Request da camada de comandos."""
    unknown = sorted(set(body) - set(BODY_FIELDS))
    if unknown:
        raise SpecError(f"campos desconhecidos: {unknown}", flag="body")
    if not body.get("algebra"):
        raise SpecError("campo 'algebra' obrigatório", flag="algebra")
    return CommandRequest(
        command=command,
        algebra=json.dumps(body["algebra"]) if isinstance(body["algebra"], list) else str(body["algebra"]),
        p=body.get("p"),
        q=body.get("q"),
        weight=body.get("lambda"),
        word=body.get("word"),
        generators=body.get("generators"),
    )


async def _execute(request: CommandRequest) -> Dict[str, Any]:
    """Executa o comando fora do event loop e traduz erros para HTTP."""
    try:
        return await run_in_threadpool(run, request)
    except VerificationFailed as e:
        logger.warning(f"Verificação falhou em {request.command}: {e}")
        return e.report or {"ok": False, "error": str(e)}
    except (SpecError, NotInHasse) as e:
        logger.info(f"Requisição inválida para {request.command}: {e}")
        flag = getattr(e, "flag", None)
        raise HTTPException(status_code=422, detail={"error": str(e), "flag": flag})
    except (OrbitCapExceeded, ChainSizeExceeded) as e:
        logger.warning(f"Limite excedido em {request.command}: {e}")
        raise HTTPException(status_code=413, detail={"error": str(e)})
    except RelBGGError as e:
        logger.error(f"Erro interno em {request.command}: {e}", exc_info=True)
        raise HTTPException(status_code=500, detail={"error": f"{type(e).__name__}: {e}"})


# ========== ENDPOINTS DE COMANDOS ==========

@app.get("/commands")
async def list_commands():
    """Lista os comandos registrados."""
    return {"commands": describe_commands()}


@app.post("/run/{command}")
async def run_command(command: str, request: Request):
    """
    Executa um comando do registro.

    Args:
        command: Nome do comando (ex: homology, relative-hasse)

    Returns:
        HTTP 200 com o mesmo JSON de ``relbgg <command> --format json``
        HTTP 404 se o comando não existe
        HTTP 413 se a órbita ou o espaço de cadeias excede o limite configurado
        HTTP 422 se a entrada é inválida
        HTTP 500 se uma identidade interna falhar
    """
    try:
        if command not in COMMANDS:
            logger.error(f"Comando não suportado: {command}")
            raise HTTPException(status_code=404, detail=f"Command not supported: {command}")

        try:
            body = await request.json()
        except Exception:
            raise HTTPException(status_code=422, detail={"error": "corpo JSON inválido"})
        if not isinstance(body, dict):
            raise HTTPException(status_code=422, detail={"error": "corpo deve ser um objeto JSON"})

        try:
            command_request = _build_request(command, body)
        except SpecError as e:
            raise HTTPException(status_code=422, detail={"error": str(e), "flag": e.flag})

        result = await _execute(command_request)
        return JSONResponse(content=result, status_code=200)

    except HTTPException:
        raise
    except Exception as e:
        logger.error(f"Erro inesperado ao executar {command}: {e}", exc_info=True)
        raise HTTPException(status_code=500, detail="Erro interno ao executar comando")


@app.get("/dot/{command}")
async def dot_command(
    command: str,
    algebra: str = Query(...),
    p: Optional[str] = Query(None),
    q: Optional[str] = Query(None),
):
    """
    Diagrama de Hasse em DOT (text/vnd.graphviz).

    Args:
        command: hasse ou relative-hasse
        algebra: Tipo ou matriz de Cartan em JSON
        p: Nós cruzados de p
        q: Nós cruzados de q
    """
    if command not in DOT_COMMANDS:
        logger.error(f"Comando sem saída DOT: {command}")
        raise HTTPException(status_code=404, detail=f"DOT not available for: {command}")
    result = await _execute(CommandRequest(command=command, algebra=algebra, p=p, q=q))
    return Response(content=render(command, result, "dot"), media_type="text/vnd.graphviz")


# ========== ENDPOINT HEALTH CHECK ==========

@app.get("/health")
async def health_check():
    """Endpoint de health check."""
    return {"status": "healthy", "service": "relbgg", "version": __version__}


# ========== MAIN ==========

if __name__ == "__main__":
    import uvicorn
    port = int(os.environ.get("PORT", 8080))
    uvicorn.run(app, host="0.0.0.0", port=port)
