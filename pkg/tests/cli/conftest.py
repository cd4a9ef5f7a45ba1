"""
命令行测试配置文件
提供调用入口、写输入文件与检查输出的fixtures
"""

import json

import pytest

from rack_framework.cli import main


@pytest.fixture
def run_cli(capsys):
    """调用 main(argv)，返回 (退出码, 标准输出, 标准错误)"""
    def _run(*argv):
        code = main([str(a) for a in argv])
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return _run


@pytest.fixture
def table_file(write_file):
    """把1起始的行写成运算表文件"""
    def _make(rows, name="table.txt"):
        body = "\n".join(" ".join(str(v) for v in row) for row in rows)
        return write_file(name, f"{len(rows)}\n{body}\n")
    return _make


@pytest.fixture
def assert_cli_result():
    """检查退出码，doc 格式时解析并返回JSON"""
    def _assert(result, expected_code, doc=False):
        code, out, err = result
        assert code == expected_code, f"退出码 {code} != {expected_code}, stderr: {err}"
        if doc:
            return json.loads(out)
        return out
    return _assert
