#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import os
import json
import copy
from typing import Any, Callable, Dict, List, Optional

import yaml
from platformdirs import user_config_dir

from .utils import logger, is_identifier

# 环境变量：覆盖默认的最大顶点数
MAX_VERTICES_ENV = "FOREST_HOPF_MAX_VERTICES"

LOG_LEVELS = ["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]
RESERVED_NAMES = ("@", "1")


def default_config_path() -> str:
    """默认配置文件路径（平台相关的用户配置目录）"""
    return os.path.join(user_config_dir("forest-hopf"), "config.json")


class Config:
    """配置管理类"""

    def __init__(self, config_path: Optional[str] = None, use_env: bool = True):
        """初始化配置

        Args:
            config_path: 配置文件路径（.json/.yml/.yaml），默认尝试用户配置目录
            use_env: 是否应用环境变量覆盖
        """
        self.config: Dict[str, Any] = self._load_default_config()
        self._observers: List[Callable[[str, Any, Any], None]] = []  # 配置变更观察者列表

        if config_path is None:
            candidate = default_config_path()
            if os.path.exists(candidate):
                config_path = candidate

        if config_path:
            if os.path.exists(config_path):
                self._load_config(config_path)
            else:
                logger.warning(f"Config file not found: {config_path}, using defaults")

        if use_env:
            self._apply_env_overrides()

        # 初始验证配置
        self.validate_config()

    def add_observer(self, observer: Callable[[str, Any, Any], None]) -> None:
        """添加配置变更观察者

        Args:
            observer: 观察者函数，接收参数(key, old_value, new_value)
        """
        if observer not in self._observers:
            self._observers.append(observer)

    def remove_observer(self, observer: Callable[[str, Any, Any], None]) -> None:
        """移除配置变更观察者"""
        if observer in self._observers:
            self._observers.remove(observer)

    def _notify_observers(self, key: str, old_value: Any, new_value: Any) -> None:
        """通知所有观察者配置已变更"""
        for observer in self._observers:
            try:
                observer(key, old_value, new_value)
            except Exception as e:
                logger.error(f"Error notifying config observer: {e}")

    def _load_default_config(self) -> Dict[str, Any]:
        """加载默认配置"""
        return {
            # 系统配置
            "system": {
                "log_level": "WARNING",
                "log_path": None,  # None: 只输出到控制台
                "log_format": "text"  # text, json
            },

            # 枚举配置，约束所有穷举验证的规模
            "enumeration": {
                "max_vertices": 5,
                "alphabet": ["x", "y"]
            },

            # 验证套件配置
            "verification": {
                "workers": 1,  # 线程数，按基元素分片
                "stop_on_first_failure": True,
                "sample_count": 25,  # 抽样定律的样本数
                "sample_seed": 20240101
            },

            # k[x] 模型配置
            "poly_model": {
                "max_degree": 12
            },

            # 输出配置
            "output": {
                "json": False
            }
        }

    def _load_config(self, config_path: str) -> None:
        """从文件加载配置"""
        try:
            with open(config_path, "r", encoding="utf-8") as f:
                if config_path.endswith((".yml", ".yaml")):
                    custom_config = yaml.safe_load(f) or {}
                else:
                    custom_config = json.load(f)
            if not isinstance(custom_config, dict):
                logger.error(f"Config file {config_path} must contain a mapping")
                return
            self._merge_config(self.config, custom_config)
            logger.debug(f"Loaded config from {config_path}")
        except (OSError, ValueError, yaml.YAMLError) as e:
            logger.error(f"Error loading config file: {e}")

    def _merge_config(self, base: Dict[str, Any], custom: Dict[str, Any], parent_key: str = "") -> None:
        """合并配置字典，支持观察者通知

        Args:
            base: 基础配置字典
            custom: 自定义配置字典
            parent_key: 父配置键，用于构建完整的配置路径
        """
        for key, value in custom.items():
            full_key = f"{parent_key}.{key}" if parent_key else key

            if key in base and isinstance(base[key], dict) and isinstance(value, dict):
                # 递归合并字典
                self._merge_config(base[key], value, full_key)
            else:
                old_value = base[key] if key in base else None
                base[key] = value
                self._notify_observers(full_key, old_value, value)

    def _apply_env_overrides(self) -> None:
        """应用环境变量覆盖"""
        raw = os.environ.get(MAX_VERTICES_ENV)
        if raw is None or raw.strip() == "":
            return
        try:
            value = int(raw)
        except ValueError:
            logger.warning(f"Ignoring invalid {MAX_VERTICES_ENV}={raw!r}")
            return
        old_value = self.get("enumeration.max_vertices")
        self.config["enumeration"]["max_vertices"] = value
        self._notify_observers("enumeration.max_vertices", old_value, value)

    def get(self, key: str, default: Any = None) -> Any:
        """获取配置值，支持点分隔符

        Args:
            key: 配置键，如 "enumeration.max_vertices"
            default: 默认值

        Returns:
            配置值
        """
        keys = key.split(".")
        value = self.config

        try:
            for k in keys:
                value = value[k]
            return value
        except (KeyError, TypeError):
            return default

    def validate_config(self) -> bool:
        """验证配置的有效性，无效值回退为默认值

        Returns:
            bool: 配置是否有效
        """
        valid = True
        defaults = self._load_default_config()

        log_level = self.get("system.log_level")
        if not isinstance(log_level, str) or log_level.upper() not in LOG_LEVELS:
            logger.warning(f"Invalid log level: {log_level}, falling back to WARNING")
            self._reset("system.log_level", "WARNING")
            valid = False

        log_format = self.get("system.log_format")
        if log_format not in ("text", "json"):
            logger.warning(f"Invalid log format: {log_format}, falling back to text")
            self._reset("system.log_format", "text")
            valid = False

        max_vertices = self.get("enumeration.max_vertices")
        if not isinstance(max_vertices, int) or isinstance(max_vertices, bool) or max_vertices < 0:
            logger.warning(f"Invalid max_vertices: {max_vertices}, falling back to 5")
            self._reset("enumeration.max_vertices", 5)
            valid = False

        alphabet = self.get("enumeration.alphabet")
        if isinstance(alphabet, str):
            alphabet = [name.strip() for name in alphabet.split(",") if name.strip()]
            self.config["enumeration"]["alphabet"] = alphabet
        if not isinstance(alphabet, list) or not all(
            isinstance(name, str) and is_identifier(name) and name not in RESERVED_NAMES for name in alphabet
        ):
            logger.warning(f"Invalid alphabet: {alphabet}, falling back to ['x', 'y']")
            self._reset("enumeration.alphabet", copy.deepcopy(defaults["enumeration"]["alphabet"]))
            valid = False

        workers = self.get("verification.workers")
        if not isinstance(workers, int) or workers < 1:
            logger.warning(f"Invalid worker count: {workers}, falling back to 1")
            self._reset("verification.workers", 1)
            valid = False

        sample_count = self.get("verification.sample_count")
        if not isinstance(sample_count, int) or sample_count < 1:
            logger.warning(f"Invalid sample count: {sample_count}, falling back to 25")
            self._reset("verification.sample_count", 25)
            valid = False

        max_degree = self.get("poly_model.max_degree")
        if not isinstance(max_degree, int) or max_degree < 0:
            logger.warning(f"Invalid poly_model.max_degree: {max_degree}, falling back to 12")
            self._reset("poly_model.max_degree", 12)
            valid = False

        return valid

    def _reset(self, key: str, value: Any) -> None:
        """不触发二次验证地写入配置值"""
        keys = key.split(".")
        config = self.config
        for k in keys[:-1]:
            config = config.setdefault(k, {})
        old_value = config.get(keys[-1])
        config[keys[-1]] = value
        self._notify_observers(key, old_value, value)

    def set(self, key: str, value: Any) -> None:
        """设置配置值，支持点分隔符

        Args:
            key: 配置键，如 "system.log_level"
            value: 配置值
        """
        self._reset(key, value)

        # 设置后验证配置
        self.validate_config()

    def save(self, config_path: str) -> None:
        """保存配置到文件

        Args:
            config_path: 配置文件路径，扩展名决定 JSON 或 YAML
        """
        try:
            dir_path = os.path.dirname(config_path)
            if dir_path and not os.path.exists(dir_path):
                os.makedirs(dir_path)
            with open(config_path, "w", encoding="utf-8") as f:
                if config_path.endswith((".yml", ".yaml")):
                    yaml.safe_dump(self.config, f, allow_unicode=True, sort_keys=False)
                else:
                    json.dump(self.config, f, indent=2, ensure_ascii=False)
        except OSError as e:
            logger.error(f"Error saving config file: {e}")
