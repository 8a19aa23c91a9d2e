"""
Entrada de linha de comando ``relbgg``.

Exemplos:
    relbgg relative-hasse --algebra A3 --p 1 --q 1,2
    relbgg homology --algebra A3 --p 1 --q 1,2 --lambda 0,0,0
    relbgg hasse --algebra A3 --q 1,2 --format dot

Pesos com coordenada inicial negativa devem usar ``--lambda=-1,0,0``.
Códigos de saída: 0 sucesso, 1 verificação falhou ou erro interno,
2 erro de uso.
"""

import argparse
import logging
import sys
from typing import List, Optional

from relbgg import __version__, config
from relbgg.commands import COMMANDS, Request, run
from relbgg.errors import RelBGGError, SpecError, VerificationFailed
from relbgg.render import FORMATS, render

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relbgg",
        description="Homologia relativa e absoluta de parabólicas aninhadas q ⊂ p ⊂ g em aritmética exata.",
    )
    parser.add_argument("--version", action="version", version=f"relbgg {__version__}")
    parser.add_argument("command", choices=list(COMMANDS), help="comando a executar")
    parser.add_argument("--algebra", required=True,
                        help='tipo (ex.: "A3", "B2xA1") ou matriz de Cartan em JSON')
    parser.add_argument("--p", default=None, help="nós cruzados de p, ex.: 1 (padrão: nenhum, p = g)")
    parser.add_argument("--q", default=None, help="nós cruzados de q, ex.: 1,2")
    parser.add_argument("--lambda", dest="weight", default=None,
                        help="peso em coordenadas fundamentais, ex.: 0,0,0")
    parser.add_argument("--word", default=None, help='elemento de Weyl, ex.: "s2 s3" ou "e"')
    parser.add_argument("--generators", default=None, help="nós que geram o subgrupo da órbita")
    parser.add_argument("--format", choices=FORMATS, default="text", help="formato de saída")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    logging.basicConfig(level=config.LOG_LEVEL, stream=sys.stderr)
    args = build_parser().parse_args(argv)
    request = Request(
        command=args.command,
        algebra=args.algebra,
        p=args.p,
        q=args.q,
        weight=args.weight,
        word=args.word,
        generators=args.generators,
    )
    try:
        result = run(request)
        print(render(args.command, result, args.format))
        return 0
    except SpecError as e:
        print(f"relbgg: erro: {e.diagnostic()}", file=sys.stderr)
        return 2
    except VerificationFailed as e:
        if e.report is not None:
            print(render(args.command, e.report, args.format))
        print(f"relbgg: {e}", file=sys.stderr)
        return 1
    except RelBGGError as e:
        logger.error(f"Falha em {args.command}: {e}")
        print(f"relbgg: {type(e).__name__}: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
