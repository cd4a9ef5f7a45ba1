"""
pytest配置文件 - rack框架公共fixtures
"""

import os
import sys

import factory.random
import pytest
from dotenv import load_dotenv

# 添加项目根目录到Python路径
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

# 加载环境变量
load_dotenv()

from rack_framework.config import config_manager  # noqa: E402
from rack_framework.enumerator import Engine, EnumerationRequest, enumerate_brute  # noqa: E402
from rack_framework.lower_bound import EMatrix  # noqa: E402
from rack_framework.rack_core import RackKind, RackTable  # noqa: E402

SEVEN_POINT_ROWS = [
    [1, 1, 2, 2, 1, 1, 1],
    [2, 2, 1, 1, 2, 2, 2],
    [4, 4, 3, 3, 4, 4, 3],
    [3, 3, 4, 4, 3, 3, 4],
    [6, 6, 5, 5, 5, 5, 5],
    [5, 5, 6, 6, 6, 6, 6],
    [7, 7, 7, 7, 7, 7, 7],
]
SEVEN_POINT_E = [[0, 1, 0], [1, 0, 1], [1, 0, 0]]


@pytest.fixture(autouse=True)
def fresh_config():
    """每个测试使用从环境变量重新加载的配置"""
    config_manager.reset_config()
    yield
    config_manager.reset_config()


@pytest.fixture(autouse=True)
def seeded_factories():
    """固定factory_boy与Faker的随机种子"""
    factory.random.reseed_random(20111027)


@pytest.fixture
def seven_point_table():
    """n=7 的参考 kei"""
    return RackTable.from_rows(SEVEN_POINT_ROWS)


@pytest.fixture
def seven_point_ematrix():
    """生成参考 kei 的 E 矩阵"""
    return EMatrix(SEVEN_POINT_E)


@pytest.fixture
def trivial_two():
    """x ▷ y = x，n=2"""
    return RackTable.from_rows([[1, 1], [2, 2]])


@pytest.fixture
def constant_swap_two():
    """两列都是 (1 2)"""
    return RackTable.from_rows([[2, 2], [1, 1]])


@pytest.fixture(scope="session")
def small_racks():
    """n ≤ 4 的全部 rack 同构类代表元"""
    config_manager.reset_config()
    racks = []
    for n in range(1, 5):
        racks.extend(enumerate_brute(EnumerationRequest(n, RackKind.RACK, Engine.BRUTE)).representatives)
    return racks


@pytest.fixture
def write_file(tmp_path):
    """写临时文件并返回路径字符串"""
    def _write(name: str, text: str) -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return _write
