#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
森林 Hopf 代数 - 命令行入口
参数解析后分发到 commands 下的各子命令
"""

import argparse
import sys
from typing import List, Optional

from ..core.config import Config, LOG_LEVELS
from ..core.coproduct import COPRODUCTS
from ..core.exceptions import ForestArgumentError, ForestHopfError
from ..core.main import ForestHopfSystem
from ..core.poly_model import TARGETS
from ..core.utils import logger
from ..core.verification import SUITE_NAMES
from .commands.antipode_command import run_antipode
from .commands.check_command import run_check
from .commands.coprod_command import run_coprod
from .commands.enumerate_command import run_enumerate
from .commands.morphism_command import run_morphism
from .commands.parse_command import PARSERS, run_parse
from .commands.status_command import run_status

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    """构造参数解析器"""
    parser = argparse.ArgumentParser(
        prog="forest-hopf",
        description="Infinitesimal unitary Hopf algebra of decorated planar rooted forests",
    )
    parser.add_argument("--config", help="config file (.json, .yml or .yaml)")
    parser.add_argument("--log-level", choices=LOG_LEVELS, help="override system.log_level")
    parser.add_argument("--json", action="store_true", help="print JSON instead of canonical text")
    parser.add_argument("--workers", type=int, help="worker threads for the verification suites")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="echo the canonical form of an expression")
    p.add_argument("expr")
    p.add_argument("--kind", choices=sorted(PARSERS), default="forest")
    p.set_defaults(handler=run_parse)

    p = sub.add_parser("coprod", help="compute a coproduct")
    p.add_argument("--method", choices=sorted(COPRODUCTS), default="eps")
    p.add_argument("expr")
    p.set_defaults(handler=run_coprod)

    p = sub.add_parser("antipode", help="compute the antipode of a linear combination")
    p.add_argument("expr")
    p.add_argument("--recursive", action="store_true", help="use the recursive solution of the antipode equation")
    p.set_defaults(handler=run_antipode)

    p = sub.add_parser("morphism", help="image under the universal morphism")
    p.add_argument("--target", choices=sorted(TARGETS), default="kx")
    p.add_argument("--check", action="store_true", help="also verify the compatibility laws")
    p.add_argument("expr")
    p.set_defaults(handler=run_morphism)

    p = sub.add_parser("enumerate", help="list or count forests")
    p.add_argument("--max-vertices", type=int)
    p.add_argument("--alphabet", help="comma-separated generator names, empty for none")
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(handler=run_enumerate)

    p = sub.add_parser("check", help="run verification suites")
    p.add_argument("--suite", choices=list(SUITE_NAMES) + ["all"], default="all")
    p.add_argument("--max-vertices", type=int)
    p.add_argument("--alphabet", help="comma-separated generator names, empty for none")
    p.add_argument("--mutate", action="store_true", help="corrupt the coproduct to self-test the suites")
    p.set_defaults(handler=run_check)

    p = sub.add_parser("status", help="print configuration and cache status as JSON")
    p.set_defaults(handler=run_status)

    return parser


def _load_config(args: argparse.Namespace) -> Config:
    config = Config(args.config)
    if args.log_level:
        config.set("system.log_level", args.log_level)
    if args.json:
        config.set("output.json", True)
    if args.workers is not None:
        config.set("verification.workers", args.workers)
    return config


def main(argv: Optional[List[str]] = None, stream=None) -> int:
    """命令行主函数

    Args:
        argv: 参数列表，默认取 sys.argv[1:]
        stream: 结果输出流，默认标准输出

    Returns:
        0 成功，1 定律被违反，2 用法、格式或参数错误
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        config = _load_config(args)
        system = ForestHopfSystem(config=config, mutate=getattr(args, "mutate", False))
        try:
            return args.handler(system, args, stream)
        except RecursionError as e:
            raise ForestArgumentError("expression is nested too deeply to evaluate") from e
    except ForestHopfError as e:
        logger.error(f"{args.command} failed: {e}")
        sys.stderr.write(f"error: {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
