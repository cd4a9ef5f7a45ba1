#!/usr/bin/env python3
"""
配置管理
统一的配置管理系统：群阶上限、次数上限、并行度与日志配置
"""

import os
import json
import logging
import math
from dataclasses import dataclass, asdict
from typing import Optional, Dict, Any
from pathlib import Path

from .utils.logging_config import DEFAULT_LOG_FORMAT

logger = logging.getLogger(__name__)

# 硬性上限，覆盖配置时不可突破
HARD_ORDER_CAP = math.factorial(10)
HARD_DEGREE_CAP = 8
HARD_BRUTE_CAP = 5
HARD_GROUP_TABLE_CAP = 256
HARD_CANONICAL_CAP = 10
HARD_XE_FAMILY_CAP = 2 ** 20

_LOG_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


@dataclass
class RackConfig:
    """Rack框架配置类"""

    # 置换群配置
    order_cap: int = math.factorial(10)
    degree_cap: int = 6

    # 枚举配置
    brute_cap: int = 4
    canonical_cap: int = 9
    xe_family_cap: int = 4096
    jobs: int = 1
    show_progress: bool = False

    # 抽象群乘法表配置
    group_table_cap: int = 64

    # 日志配置
    log_level: str = "WARNING"
    log_format: str = DEFAULT_LOG_FORMAT
    enable_file_logging: bool = False
    log_dir: str = "logs"

    def __post_init__(self):
        """参数验证"""
        if not 0 < self.order_cap <= HARD_ORDER_CAP:
            raise ValueError(f"order_cap必须在1到{HARD_ORDER_CAP}之间")

        if not 0 < self.degree_cap <= HARD_DEGREE_CAP:
            raise ValueError(f"degree_cap必须在1到{HARD_DEGREE_CAP}之间")

        if not 0 < self.brute_cap <= HARD_BRUTE_CAP:
            raise ValueError(f"brute_cap必须在1到{HARD_BRUTE_CAP}之间")

        if not 0 < self.canonical_cap <= HARD_CANONICAL_CAP:
            raise ValueError(f"canonical_cap必须在1到{HARD_CANONICAL_CAP}之间")

        if not 0 < self.xe_family_cap <= HARD_XE_FAMILY_CAP:
            raise ValueError(f"xe_family_cap必须在1到{HARD_XE_FAMILY_CAP}之间")

        if not 0 < self.group_table_cap <= HARD_GROUP_TABLE_CAP:
            raise ValueError(f"group_table_cap必须在1到{HARD_GROUP_TABLE_CAP}之间")

        if self.jobs < 1:
            raise ValueError("jobs必须大于等于1")

        if self.log_level.upper() not in _LOG_LEVELS:
            raise ValueError(f"log_level必须是 {', '.join(_LOG_LEVELS)} 之一")

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典"""
        return asdict(self)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'RackConfig':
        """从字典创建配置"""
        return cls(**data)


def _env_flag(name: str, default: str) -> bool:
    return os.getenv(name, default).lower() in ('1', 'true', 'yes', 'on')


class ConfigManager:
    """配置管理器（单例模式）"""

    _instance = None
    _config = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def load_config(self, config_path: Optional[str] = None) -> RackConfig:
        """
        加载配置

        Args:
            config_path: 配置文件路径，如果为None则从环境变量加载

        Returns:
            配置实例
        """
        if self._config is None:
            if config_path and Path(config_path).exists():
                self._config = self._load_from_file(config_path)
                logger.info(f"从文件加载配置: {config_path}")
            else:
                self._config = self._load_from_env()
                logger.debug("从环境变量加载配置")

        return self._config

    def get_config(self) -> Optional[RackConfig]:
        """获取当前配置"""
        return self._config

    def update_config(self, **kwargs) -> RackConfig:
        """
        更新配置

        Args:
            **kwargs: 要更新的配置项

        Returns:
            更新后的配置
        """
        if self._config is None:
            self._config = self._load_from_env()

        config_dict = self._config.to_dict()
        config_dict.update(kwargs)

        self._config = RackConfig.from_dict(config_dict)
        logger.debug(f"配置已更新: {list(kwargs.keys())}")

        return self._config

    def save_config(self, config_path: str):
        """
        保存配置到文件

        Args:
            config_path: 配置文件路径
        """
        if self._config is None:
            raise ValueError("没有可保存的配置")

        Path(config_path).parent.mkdir(parents=True, exist_ok=True)

        with open(config_path, 'w', encoding='utf-8') as f:
            json.dump(self._config.to_dict(), f, indent=2, ensure_ascii=False)

        logger.info(f"配置已保存到: {config_path}")

    def _load_from_file(self, config_path: str) -> RackConfig:
        """从文件加载配置"""
        try:
            with open(config_path, 'r', encoding='utf-8') as f:
                config_data = json.load(f)

            return RackConfig.from_dict(config_data)

        except (json.JSONDecodeError, FileNotFoundError, TypeError) as e:
            logger.error(f"加载配置文件失败: {e}")
            logger.info("回退到环境变量配置")
            return self._load_from_env()

    def _load_from_env(self) -> RackConfig:
        """从环境变量加载配置"""
        return RackConfig(
            # 置换群配置
            order_cap=int(os.getenv('RACK_ORDER_CAP', str(math.factorial(10)))),
            degree_cap=int(os.getenv('RACK_DEGREE_CAP', '6')),

            # 枚举配置
            brute_cap=int(os.getenv('RACK_BRUTE_CAP', '4')),
            canonical_cap=int(os.getenv('RACK_CANONICAL_CAP', '9')),
            xe_family_cap=int(os.getenv('RACK_XE_FAMILY_CAP', '4096')),
            jobs=int(os.getenv('RACK_JOBS', '1')),
            show_progress=_env_flag('RACK_SHOW_PROGRESS', 'false'),

            # 抽象群配置
            group_table_cap=int(os.getenv('RACK_GROUP_TABLE_CAP', '64')),

            # 日志配置
            log_level=os.getenv('RACK_LOG_LEVEL', 'WARNING'),
            log_format=os.getenv('RACK_LOG_FORMAT', DEFAULT_LOG_FORMAT),
            enable_file_logging=_env_flag('RACK_ENABLE_FILE_LOGGING', 'false'),
            log_dir=os.getenv('RACK_LOG_DIR', 'logs'),
        )

    def reset_config(self):
        """重置配置"""
        self._config = None
        logger.debug("配置已重置")

    def validate_config(self) -> list[str]:
        """
        验证配置

        Returns:
            验证错误列表
        """
        errors = []

        if self._config is None:
            errors.append("配置未加载")
            return errors

        if self._config.degree_cap > 6:
            errors.append(f"degree_cap={self._config.degree_cap} 超过默认值6，子群共轭类枚举可能非常耗时")

        if self._config.brute_cap > 4:
            errors.append(f"brute_cap={self._config.brute_cap} 启用了实验性的 n=5 暴力枚举")

        if self._config.jobs > (os.cpu_count() or 1):
            errors.append(f"jobs={self._config.jobs} 超过CPU核数 {os.cpu_count()}")

        return errors


# 全局配置管理器实例
config_manager = ConfigManager()


def get_config() -> RackConfig:
    """获取全局配置"""
    return config_manager.load_config()


def update_config(**kwargs) -> RackConfig:
    """更新全局配置"""
    return config_manager.update_config(**kwargs)
