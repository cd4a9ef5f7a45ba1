"""
日志配置模块
提供统一的日志配置和管理功能，控制台日志只写标准错误
"""
import os
import sys
import time
import uuid
import logging
import logging.handlers
from datetime import datetime
from functools import wraps
from pathlib import Path
from typing import Optional

# 文件日志的默认格式，可由 RackConfig.log_format 覆盖
DEFAULT_LOG_FORMAT = '%(asctime)s [%(levelname)-8s] [%(run_id)s] %(name)s:%(lineno)d - %(message)s'


class ColoredFormatter(logging.Formatter):
    """彩色日志格式化器"""

    # ANSI颜色代码
    COLORS = {
        'DEBUG': '\033[36m',      # 青色
        'INFO': '\033[32m',       # 绿色
        'WARNING': '\033[33m',    # 黄色
        'ERROR': '\033[31m',      # 红色
        'CRITICAL': '\033[35m',   # 紫色
        'RESET': '\033[0m'        # 重置颜色
    }

    def __init__(self, *args, use_color: bool = True, **kwargs):
        super().__init__(*args, **kwargs)
        self.use_color = use_color

    def format(self, record):
        if self.use_color:
            color = self.COLORS.get(record.levelname, self.COLORS['RESET'])
            reset = self.COLORS['RESET']
            record.levelname_colored = f"{color}{record.levelname:8}{reset}"
            record.name_colored = f"\033[94m{record.name}\033[0m"  # 蓝色模块名
        else:
            record.levelname_colored = f"{record.levelname:8}"
            record.name_colored = record.name

        return super().format(record)


class RunContextFilter(logging.Filter):
    """运行上下文过滤器，为每条日志添加本次命令调用的run_id"""

    def __init__(self, run_id: str):
        super().__init__()
        self.run_id = run_id

    def filter(self, record):
        record.run_id = self.run_id
        return True


class LoggingConfig:
    """日志配置管理器"""

    def __init__(self, log_dir: Optional[str] = None):
        self.log_dir = Path(log_dir) if log_dir else Path.cwd() / 'logs'
        self.run_id = uuid.uuid4().hex[:8]

    def setup_log_directory(self):
        """设置日志目录"""
        self.log_dir.mkdir(parents=True, exist_ok=True)
        (self.log_dir / 'error').mkdir(exist_ok=True)
        (self.log_dir / 'performance').mkdir(exist_ok=True)

    def configure_logging(self, level=logging.INFO, enable_file_logging=False,
                          log_format: Optional[str] = None):
        """配置日志系统，log_format 作用于文件日志"""

        # 清理现有的handlers
        root_logger = logging.getLogger()
        for handler in root_logger.handlers[:]:
            root_logger.removeHandler(handler)

        root_logger.setLevel(level)
        context_filter = RunContextFilter(self.run_id)

        console_formatter = ColoredFormatter(
            fmt='%(asctime)s [%(levelname_colored)s] %(name_colored)s: %(message)s',
            datefmt='%H:%M:%S',
            use_color=sys.stderr.isatty()
        )

        file_formatter = logging.Formatter(
            fmt=log_format or DEFAULT_LOG_FORMAT,
            datefmt='%Y-%m-%d %H:%M:%S'
        )

        # 控制台处理器（标准错误，标准输出只留给结论）
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(level)
        console_handler.setFormatter(console_formatter)
        console_handler.addFilter(context_filter)
        root_logger.addHandler(console_handler)

        performance_logger = logging.getLogger('performance')
        for handler in performance_logger.handlers[:]:
            performance_logger.removeHandler(handler)
        performance_logger.propagate = True

        if enable_file_logging:
            self.setup_log_directory()
            today = datetime.now().strftime('%Y%m%d')

            # 应用日志文件处理器
            app_handler = logging.handlers.TimedRotatingFileHandler(
                filename=self.log_dir / f"app_{today}.log",
                when='midnight',
                interval=1,
                backupCount=30,
                encoding='utf-8'
            )
            app_handler.setLevel(level)
            app_handler.setFormatter(file_formatter)
            app_handler.addFilter(context_filter)
            root_logger.addHandler(app_handler)

            # 错误日志处理器
            error_handler = logging.handlers.TimedRotatingFileHandler(
                filename=self.log_dir / 'error' / f"error_{today}.log",
                when='midnight',
                interval=1,
                backupCount=90,  # 错误日志保留更长时间
                encoding='utf-8'
            )
            error_handler.setLevel(logging.ERROR)
            error_handler.setFormatter(file_formatter)
            error_handler.addFilter(context_filter)
            root_logger.addHandler(error_handler)

            # 性能日志处理器
            performance_handler = logging.handlers.TimedRotatingFileHandler(
                filename=self.log_dir / 'performance' / f"performance_{today}.log",
                when='midnight',
                interval=1,
                backupCount=7,  # 性能日志保留时间较短
                encoding='utf-8'
            )
            performance_handler.setLevel(logging.INFO)
            performance_handler.setFormatter(file_formatter)
            performance_handler.addFilter(context_filter)
            performance_logger.addHandler(performance_handler)
            performance_logger.propagate = False  # 不传播到根日志器，避免重复

        logging.getLogger(__name__).debug(f"日志系统配置完成 run_id={self.run_id}")

    def get_logger(self, name: str) -> logging.Logger:
        """获取指定名称的日志器"""
        return logging.getLogger(name)


# 全局日志配置实例
_logging_config = None


def get_logging_config(log_dir: Optional[str] = None):
    """获取全局日志配置实例"""
    global _logging_config
    if _logging_config is None or (log_dir and Path(log_dir) != _logging_config.log_dir):
        _logging_config = LoggingConfig(log_dir)
    return _logging_config


def setup_logging(level=None, enable_file_logging=False, log_dir: Optional[str] = None,
                  log_format: Optional[str] = None):
    """设置日志配置"""
    if level is None:
        level = logging.DEBUG if os.getenv('DEBUG', '').lower() in ('1', 'true') else logging.WARNING
    if isinstance(level, str):
        level = getattr(logging, level.upper())

    config = get_logging_config(log_dir)
    config.configure_logging(level, enable_file_logging, log_format)
    return config


def get_logger(name: str) -> logging.Logger:
    """便捷函数：获取日志器"""
    return logging.getLogger(name)


def log_performance(logger_name: str = 'performance'):
    """性能监控装饰器"""
    def decorator(func):
        @wraps(func)
        def wrapper(*args, **kwargs):
            perf_logger = get_logger(logger_name)
            start_time = time.time()

            try:
                result = func(*args, **kwargs)
                duration = time.time() - start_time
                perf_logger.info(f"{func.__name__} 执行时间: {duration:.3f}s")
                return result
            except Exception as e:
                duration = time.time() - start_time
                perf_logger.error(f"{func.__name__} 执行失败 ({duration:.3f}s): {str(e)}")
                raise

        return wrapper
    return decorator
