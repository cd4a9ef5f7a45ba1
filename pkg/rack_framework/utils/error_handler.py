"""
统一错误处理工具
异常层级与命令行退出码映射，提供完整的错误处理和日志记录功能
"""
from functools import wraps
import logging
import sys
import time
import traceback
import uuid
from typing import Dict, Any, Optional
from datetime import datetime, timezone

logger = logging.getLogger(__name__)

# 命令行退出码
EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


class RackError(Exception):
    """框架异常基类"""
    exit_code = EXIT_NEGATIVE

    def __init__(self, message: str, details: Optional[Dict] = None,
                 error_id: Optional[str] = None):
        self.message = message
        self.details = details or {}
        self.error_id = error_id or uuid.uuid4().hex[:8]
        self.timestamp = datetime.now(timezone.utc).isoformat()
        super().__init__(self.message)

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典格式"""
        return {
            'error_id': self.error_id,
            'error_type': type(self).__name__,
            'message': self.message,
            'exit_code': self.exit_code,
            'details': self.details,
            'timestamp': self.timestamp
        }


class FormatError(RackError):
    """文本格式解析错误"""
    exit_code = EXIT_USAGE

    def __init__(self, message: str, line: Optional[int] = None, source: Optional[str] = None):
        self.line = line
        self.source = source
        if line is not None:
            message = f"{message} (line {line})"
        details = {'line': line, 'source': source} if line is not None or source else {}
        super().__init__(message, details)


class MalformedTableError(FormatError):
    """运算表形状或取值越界"""


class DegreeMismatchError(RackError):
    """置换次数不一致"""
    exit_code = EXIT_USAGE

    def __init__(self, left: int, right: int):
        super().__init__(f"degree mismatch: {left} != {right}", {'left': left, 'right': right})


class PointRangeError(RackError):
    """点编号越界"""
    exit_code = EXIT_USAGE

    def __init__(self, point: int, degree: int):
        # 对外统一使用1起始编号
        super().__init__(f"point {point + 1} out of range 1..{degree}",
                         {'point': point + 1, 'degree': degree})


class DimensionError(RackError):
    """矩阵或参数维度不匹配"""
    exit_code = EXIT_USAGE


class ResourceCapError(RackError):
    """超出资源上限"""
    exit_code = EXIT_RESOURCE

    def __init__(self, message: str, cap_name: str, cap: int, requested: Optional[int] = None):
        super().__init__(message, {'cap': cap_name, 'limit': cap, 'requested': requested})


class ConditionAError(RackError):
    """蓝图不满足中心化子条件 C_G(π_i) ⊇ G_{α_i}"""

    def __init__(self, orbit: int, witness, pi):
        self.orbit = orbit
        self.witness = witness
        self.pi = pi
        super().__init__(
            f"condition (A) fails at orbit {orbit + 1}: {witness.cycle_string()} fixes the "
            f"representative but does not commute with pi = {pi.cycle_string()}",
            {'orbit': orbit + 1, 'witness': witness.cycle_string(), 'pi': pi.cycle_string()}
        )


class BlueprintError(RackError):
    """蓝图数据不一致"""
    exit_code = EXIT_USAGE


class NotAGroupError(RackError):
    """乘法表不满足群公理"""
    exit_code = EXIT_USAGE

    def __init__(self, axiom: str, witness: Optional[tuple] = None):
        self.axiom = axiom
        self.witness = witness
        message = f"not a group: {axiom} fails"
        if witness is not None:
            message += f" at {tuple(w + 1 for w in witness)}"
        super().__init__(message, {'axiom': axiom, 'witness': witness})


class NotARackError(RackError):
    """输入运算表不是 rack"""
    exit_code = EXIT_USAGE

    def __init__(self, verdict: str):
        super().__init__(f"input is not a rack: {verdict}", {'verdict': verdict})


class NormalClosureError(RackError):
    """正规闭包前提不成立"""


class InvariantViolation(RackError):
    """内部自检失败（一定是实现缺陷）"""


def check_invariant(condition: bool, message: str, **details):
    """自检断言，失败时抛出 InvariantViolation"""
    if not condition:
        logger.error(f"自检失败: {message} {details}")
        raise InvariantViolation(message, details)


def cli_error_handler(f):
    """增强的命令行错误处理装饰器"""
    @wraps(f)
    def decorated_function(*args, **kwargs):
        error_logger = logging.getLogger('rack_framework.cli.error')
        start_time = time.time()
        command = f.__name__

        try:
            result = f(*args, **kwargs)
            duration = time.time() - start_time

            logger.info(f"命令完成: {command} -> {result} ({duration:.3f}s)")
            return result

        except RackError as e:
            duration = time.time() - start_time

            error_logger.warning(f"命令业务错误 [{e.error_id}]: {e.message} "
                                 f"(退出码: {e.exit_code}, 耗时: {duration:.3f}s)")
            print(f"error: {e.message}", file=sys.stderr)
            return e.exit_code

        except ValueError as e:
            # 配置校验失败归为用法错误
            error_logger.warning(f"参数错误: {e}")
            print(f"error: {e}", file=sys.stderr)
            return EXIT_USAGE

        except OSError as e:
            error_logger.warning(f"文件读写失败: {e}")
            print(f"error: {e}", file=sys.stderr)
            return EXIT_USAGE

        except Exception as e:
            duration = time.time() - start_time
            error_id = uuid.uuid4().hex[:8]

            error_logger.error(f"系统错误 [{error_id}]: {str(e)} ({duration:.3f}s)")
            error_logger.error(f"错误详情: {traceback.format_exc()}")
            print(f"error: internal error [{error_id}]: {e}", file=sys.stderr)
            return EXIT_NEGATIVE

    return decorated_function
