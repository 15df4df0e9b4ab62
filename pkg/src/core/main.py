#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import importlib
from typing import Any, Dict, Iterable, List, Optional

from . import enumerator, hopf, poly_model
# 包属性 coproduct 被同名函数覆盖（见 __init__.py），须按模块名导入
coproduct = importlib.import_module(".coproduct", __package__)
from .config import Config
from .hopf import ANTIPODE, D_EPS, RECURSIVE_ANTIPODE
from .verification import SuiteResult, SuiteRunner
from .utils import logger, setup_logging


def clear_caches() -> None:
    """清空全部按基元素的记忆表：余乘、枚举、D_ε 与对极、默认泛态射"""
    for module in (coproduct, enumerator, hopf, poly_model):
        module.clear_caches()
    logger.info("All memo tables cleared")


class ForestHopfSystem:
    """森林 Hopf 代数系统主类：持有配置、日志与验证套件执行器"""

    def __init__(self, config_path: Optional[str] = None, config: Optional[Config] = None, mutate: bool = False):
        """初始化系统

        Args:
            config_path: 配置文件路径
            config: 已构造的配置对象，优先于 config_path
            mutate: 以损坏的 Δε 运行套件（自检）
        """
        self.config = config if config is not None else Config(config_path)
        self._setup_logging()
        self.config.add_observer(self._on_config_change)

        logger.info("Initializing forest Hopf system...")
        self.runner = SuiteRunner(self.config, mutate=mutate)
        logger.info("Forest Hopf system initialized")

    def _setup_logging(self) -> None:
        setup_logging(
            self.config.get("system.log_level", "WARNING"),
            self.config.get("system.log_path"),
            self.config.get("system.log_format", "text"),
        )

    def _on_config_change(self, key: str, old_value: Any, new_value: Any) -> None:
        """日志相关配置变更时重新配置日志"""
        if key.startswith("system.log"):
            self._setup_logging()
        elif key.startswith("verification.") or key.startswith("poly_model."):
            # 执行器在构造时读取配置
            self.runner = SuiteRunner(self.config, mutate=self.runner.mutate)

    def run_suite(self, name: str, max_vertices: Optional[int] = None,
                  alphabet: Optional[Iterable[str]] = None) -> List[SuiteResult]:
        """运行验证套件

        Args:
            name: 套件名或 "all"
            max_vertices: 顶点数上界，默认取 enumeration.max_vertices
            alphabet: 生成元集合，默认取 enumeration.alphabet

        Returns:
            各套件的结果
        """
        if max_vertices is None:
            max_vertices = self.config.get("enumeration.max_vertices", 5)
        if alphabet is None:
            alphabet = self.config.get("enumeration.alphabet", ["x", "y"])
        return self.runner.run_many(name, max_vertices, alphabet)

    def clear_caches(self) -> None:
        """长时间运行时释放记忆表"""
        clear_caches()

    def get_status(self) -> Dict:
        """获取系统状态

        Returns:
            配置摘要、缓存规模与套件统计
        """
        return {
            "system": {
                "log_level": self.config.get("system.log_level"),
                "log_format": self.config.get("system.log_format"),
            },
            "enumeration": {
                "max_vertices": self.config.get("enumeration.max_vertices"),
                "alphabet": self.config.get("enumeration.alphabet"),
                "counts": enumerator.counts_up_to(
                    self.config.get("enumeration.max_vertices", 5),
                    len(self.config.get("enumeration.alphabet", [])),
                ),
            },
            "caches": {
                "coproducts": coproduct.cache_sizes(),
                "d_eps": D_EPS.cache_size(),
                "antipode": ANTIPODE.cache_size(),
                "antipode_recursive": RECURSIVE_ANTIPODE.cache_size(),
                "morphism": poly_model.morphism_cache_size(),
            },
            "suites": self.runner.get_stats(),
            "last_results": [r.to_dict() for r in self.runner.get_results(limit=5)],
        }


if __name__ == "__main__":
    import sys

    from ..cli.app import main

    sys.exit(main())
