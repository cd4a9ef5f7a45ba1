#!/usr/bin/env python3
"""
文本格式验证器
解析并输出全部外部格式：轮换记号、运算表、蓝图、E 矩阵与群乘法表
所有外部编号从1开始，错误带1起始行号
"""

import re
from typing import List, Optional, Sequence, Tuple

from .construction import RackBlueprint
from .group_table import GroupTable
from .lower_bound import EMatrix
from .perm_group import Permutation, generate
from .rack_core import RackTable
from .utils.error_handler import FormatError, MalformedTableError

_CYCLE = re.compile(r'\(([^()]*)\)')

Line = Tuple[int, str]


class FormatValidator:
    """格式验证器"""

    @staticmethod
    def content_lines(text: str) -> List[Line]:
        """
        非空、非注释行

        Returns:
            (1起始行号, 去掉首尾空白的内容) 列表
        """
        result = []
        for number, raw in enumerate(text.splitlines(), start=1):
            stripped = raw.strip()
            if stripped and not stripped.startswith('#'):
                result.append((number, stripped))
        return result

    @staticmethod
    def parse_cycles(text: str, degree: int, line: Optional[int] = None) -> Permutation:
        """
        解析轮换记号，例如 "(1 2)(3 4)"；"()" 或空串为恒等置换

        Args:
            text: 轮换串
            degree: 次数
            line: 所在行号

        Returns:
            置换

        Raises:
            FormatError: 语法错误、点越界或轮换内重复
        """
        leftover = _CYCLE.sub('', text)
        if leftover.strip():
            raise FormatError(f"invalid cycle notation '{text.strip()}'", line)
        cycles = []
        for body in _CYCLE.findall(text):
            tokens = body.split()
            if not tokens:
                continue
            if not all(tok.isdigit() for tok in tokens):
                raise FormatError(f"non-integer point in cycle '({body.strip()})'", line)
            points = [int(tok) for tok in tokens]
            for p in points:
                if not 1 <= p <= degree:
                    raise FormatError(f"point {p} out of range 1..{degree}", line)
            if len(set(points)) != len(points):
                raise FormatError(f"repeated point in cycle '({body.strip()})'", line)
            cycles.append(points)
        return Permutation.from_cycles(cycles, degree)

    @staticmethod
    def format_cycles(p: Permutation) -> str:
        return p.cycle_string()

    @staticmethod
    def parse_generator_list(text: str, degree: int, line: Optional[int] = None) -> List[Permutation]:
        """逗号分隔的轮换串列表，空串表示没有生成元"""
        items = [item for item in text.split(',') if item.strip()]
        return [FormatValidator.parse_cycles(item, degree, line) for item in items]

    @staticmethod
    def _parse_int(token: str, line: int, what: str) -> int:
        try:
            return int(token)
        except ValueError:
            raise FormatError(f"expected integer {what}, got '{token}'", line)

    @staticmethod
    def _parse_square(lines: Sequence[Line], start: int, what: str) -> Tuple[List[List[int]], List[int], int]:
        """
        从 lines[start] 开始读取 "m" 与 m 行、每行 m 个整数

        Returns:
            (行列表, 各行行号, 下一个未读位置)
        """
        if start >= len(lines):
            raise FormatError(f"missing {what} size")
        number, header = lines[start]
        tokens = header.split()
        if len(tokens) != 1:
            raise FormatError(f"{what} size line must hold a single integer", number)
        m = FormatValidator._parse_int(tokens[0], number, f"{what} size")
        if m < 1:
            raise FormatError(f"{what} size must be positive", number)

        rows, numbers = [], []
        for i in range(m):
            index = start + 1 + i
            if index >= len(lines):
                raise FormatError(f"expected {m} rows, got {i}", lines[-1][0])
            number, content = lines[index]
            tokens = content.split()
            if len(tokens) != m:
                raise FormatError(f"row {i + 1} has {len(tokens)} entries, expected {m}", number)
            rows.append([FormatValidator._parse_int(tok, number, "entry") for tok in tokens])
            numbers.append(number)
        return rows, numbers, start + 1 + m

    @staticmethod
    def _table_from(rows: List[List[int]], numbers: List[int], source: Optional[str]) -> RackTable:
        n = len(rows)
        for row, number in zip(rows, numbers):
            for v in row:
                if not 1 <= v <= n:
                    raise MalformedTableError(f"entry {v} out of range 1..{n}", number, source)
        return RackTable.from_rows(rows)

    @staticmethod
    def parse_table(text: str, source: Optional[str] = None) -> RackTable:
        """
        解析运算表：可选 '#' 注释行，首个记号 n，随后 n 行、每行 n 个 1..n 的整数

        Raises:
            FormatError: 形状或记号错误
            MalformedTableError: 取值越界
        """
        lines = FormatValidator.content_lines(text)
        rows, numbers, end = FormatValidator._parse_square(lines, 0, "table")
        if end < len(lines):
            raise FormatError("unexpected content after table", lines[end][0], source)
        return FormatValidator._table_from(rows, numbers, source)

    @staticmethod
    def parse_tables(text: str, source: Optional[str] = None) -> List[RackTable]:
        """解析连续的多个运算表记录"""
        lines = FormatValidator.content_lines(text)
        tables, index = [], 0
        while index < len(lines):
            rows, numbers, index = FormatValidator._parse_square(lines, index, "table")
            tables.append(FormatValidator._table_from(rows, numbers, source))
        return tables

    @staticmethod
    def format_table(t: RackTable) -> str:
        rows = "\n".join(" ".join(str(v) for v in row) for row in t.rows_one_based())
        return f"{t.n}\n{rows}\n"

    @staticmethod
    def format_tables(tables: Sequence[RackTable]) -> str:
        """记录之间空一行"""
        return "\n".join(FormatValidator.format_table(t) for t in tables)

    @staticmethod
    def parse_blueprint(text: str) -> RackBlueprint:
        """
        解析蓝图：
            degree <n>
            gens <逗号分隔的轮换串>
            rep <点> pi <轮换串>   （每个轨道一行）
        """
        lines = FormatValidator.content_lines(text)
        if len(lines) < 2:
            raise FormatError("blueprint needs a degree line and a gens line")

        number, content = lines[0]
        tokens = content.split()
        if tokens and tokens[0] == 'degree':
            tokens = tokens[1:]
        if len(tokens) != 1:
            raise FormatError("expected 'degree <n>'", number)
        degree = FormatValidator._parse_int(tokens[0], number, "degree")
        if degree < 1:
            raise FormatError("degree must be positive", number)

        number, content = lines[1]
        if not content.startswith('gens'):
            raise FormatError("expected 'gens <cycles, ...>'", number)
        gens = FormatValidator.parse_generator_list(content[len('gens'):], degree, number)
        group = generate(gens, degree=degree)

        entries = {}
        for number, content in lines[2:]:
            match = re.fullmatch(r'rep\s+(\S+)\s+pi\s*(.*)', content)
            if not match:
                raise FormatError("expected 'rep <point> pi <cycles>'", number)
            rep = FormatValidator._parse_int(match.group(1), number, "rep")
            if not 1 <= rep <= degree:
                raise FormatError(f"rep {rep} out of range 1..{degree}", number)
            if rep - 1 in entries:
                raise FormatError(f"duplicate rep {rep}", number)
            entries[rep - 1] = FormatValidator.parse_cycles(match.group(2), degree, number)

        reps = tuple(sorted(entries))
        return RackBlueprint(group, reps, tuple(entries[r] for r in reps))

    @staticmethod
    def format_blueprint(b: RackBlueprint) -> str:
        gens = ", ".join(g.cycle_string() for g in b.group.generators) or "()"
        lines = [f"degree {b.degree}", f"gens {gens}"]
        lines += [f"rep {rep + 1} pi {pi.cycle_string()}" for rep, pi in zip(b.reps, b.pis)]
        return "\n".join(lines) + "\n"

    @staticmethod
    def parse_ematrix(text: str) -> EMatrix:
        """首个记号 k，随后 k 行、每行 k 个 0/1，对角线必须为0"""
        lines = FormatValidator.content_lines(text)
        rows, numbers, end = FormatValidator._parse_square(lines, 0, "matrix")
        if end < len(lines):
            raise FormatError("unexpected content after matrix", lines[end][0])
        for i, (row, number) in enumerate(zip(rows, numbers)):
            for v in row:
                if v not in (0, 1):
                    raise FormatError(f"matrix entry {v} is not 0 or 1", number)
            if row[i] != 0:
                raise FormatError(f"diagonal entry e[{i + 1}][{i + 1}] must be 0", number)
        return EMatrix(tuple(tuple(row) for row in rows))

    @staticmethod
    def format_ematrix(E: EMatrix) -> str:
        rows = "\n".join(" ".join(str(v) for v in row) for row in E.entries)
        return f"{E.k}\n{rows}\n"

    @staticmethod
    def parse_group_table(text: str, cap: Optional[int] = None) -> GroupTable:
        """首个记号 m，随后 m 行、每行 m 个 1..m 的整数，(i, j) 处为 i·j"""
        lines = FormatValidator.content_lines(text)
        rows, numbers, end = FormatValidator._parse_square(lines, 0, "group table")
        if end < len(lines):
            raise FormatError("unexpected content after group table", lines[end][0])
        return GroupTable.from_rows(rows, cap=cap)

    @staticmethod
    def format_group_table(G: GroupTable) -> str:
        rows = "\n".join(" ".join(str(v) for v in row) for row in G.rows_one_based())
        return f"{G.order}\n{rows}\n"
