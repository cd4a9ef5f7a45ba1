#!/usr/bin/env python3
"""
命令行入口
子命令：validate、canon、iso、construct、decompose、xe、enumerate、report、selftest
结论写标准输出，诊断写标准错误

使用方法:
    python -m rack_framework validate table.txt
    python -m rack_framework enumerate --n 3 --kind quandle --engine both
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional

from dotenv import load_dotenv

from .config import config_manager, get_config
from .construction import build_rack, check_blueprint, decompose
from .enumerator import (
    ENUMERABLE_KINDS, Engine, EnumerationRequest, bounds_report, cross_validate,
    enumerate_kinds, enumerate_racks
)
from .lower_bound import (
    SEVEN_POINT_E, SEVEN_POINT_TABLE, EMatrix, all_ematrices, build_xe, check_xe_family_cap,
    lower_bound_report, xe_collision_report, xe_distinctness
)
from .rack_core import RackKind, RackTable, canonical_form, fingerprint, is_isomorphic, validate
from .utils.error_handler import (
    EXIT_NEGATIVE, EXIT_OK, FormatError, NotARackError, RackError, cli_error_handler
)
from .utils.logging_config import setup_logging
from .validators import FormatValidator

logger = logging.getLogger(__name__)


def _common_parser() -> argparse.ArgumentParser:
    """全局参数，子命令前后都可出现（默认值用 SUPPRESS 避免相互覆盖）"""
    common = argparse.ArgumentParser(add_help=False)
    group = common.add_argument_group("global options")
    group.add_argument("--format", choices=("text", "doc"), default=argparse.SUPPRESS,
                       help="输出格式：文本或结构化JSON文档")
    group.add_argument("--output", default=argparse.SUPPRESS, help="输出文件路径（默认标准输出）")
    group.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="并行进程数")
    group.add_argument("--brute-cap", type=int, default=argparse.SUPPRESS, help="暴力引擎阶上限")
    group.add_argument("--degree-cap", type=int, default=argparse.SUPPRESS, help="子群共轭类次数上限")
    group.add_argument("--order-cap", type=int, default=argparse.SUPPRESS, help="置换群阶上限")
    group.add_argument("--xe-family-cap", type=int, default=argparse.SUPPRESS,
                       help="完整 X_E 族的矩阵个数上限")
    group.add_argument("--log-level", default=argparse.SUPPRESS,
                       choices=("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"), help="日志级别")
    group.add_argument("--config", default=argparse.SUPPRESS, help="JSON配置文件路径")
    group.add_argument("--progress", action="store_true", default=argparse.SUPPRESS,
                       help="在标准错误显示进度条")
    return common


def build_parser() -> argparse.ArgumentParser:
    """构建参数解析器"""
    common = _common_parser()
    parser = argparse.ArgumentParser(prog="rack_framework", parents=[common],
                                     description="有限 rack、quandle 与 kei 工具")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="校验并分类运算表")
    p.add_argument("file")
    p.set_defaults(handler=cmd_validate)

    p = sub.add_parser("canon", parents=[common], help="输出规范形")
    p.add_argument("file")
    p.set_defaults(handler=cmd_canon)

    p = sub.add_parser("iso", parents=[common], help="同构判定")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.set_defaults(handler=cmd_iso)

    p = sub.add_parser("construct", parents=[common], help="由蓝图构造 rack")
    p.add_argument("file")
    p.set_defaults(handler=cmd_construct)

    p = sub.add_parser("decompose", parents=[common], help="把 rack 分解为蓝图")
    p.add_argument("file")
    p.set_defaults(handler=cmd_decompose)

    p = sub.add_parser("xe", parents=[common], help="X_E kei 族与下界报告")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("efile", nargs="?")
    p.add_argument("--distinct", action="store_true", help="检查全部矩阵给出两两不同的运算表")
    p.add_argument("--collisions", action="store_true", help="统计同构碰撞")
    p.set_defaults(handler=cmd_xe)

    p = sub.add_parser("enumerate", parents=[common], help="枚举同构类")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=[k.value for k in ENUMERABLE_KINDS], default="rack")
    p.add_argument("--engine", choices=[e.value for e in Engine], default="both")
    p.add_argument("--emit-tables", metavar="PATH", help="把规范代表元写入文件")
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("report", parents=[common], help="常数与小阶计数报告")
    p.add_argument("--n", type=int, default=3)
    p.set_defaults(handler=cmd_report)

    p = sub.add_parser("selftest", parents=[common], help="冒烟自检")
    p.set_defaults(handler=cmd_selftest)
    return parser


def _option(args: argparse.Namespace, name: str, default=None):
    return getattr(args, name, default)


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _emit(args: argparse.Namespace, text: str) -> None:
    """写 --output 指定的文件，否则写标准输出"""
    output = _option(args, "output")
    if output:
        Path(output).write_text(text, encoding="utf-8")
        logger.info(f"已写入: {output}")
    else:
        sys.stdout.write(text)


def _emit_doc(args: argparse.Namespace, document: Dict[str, Any]) -> None:
    _emit(args, json.dumps(document, indent=2, ensure_ascii=False) + "\n")


def _doc_mode(args: argparse.Namespace) -> bool:
    return _option(args, "format", "text") == "doc"


def _load_rack(path: str) -> RackTable:
    table = FormatValidator.parse_table(_read(path), source=path)
    verdict = validate(table)
    if not verdict.is_rack:
        raise NotARackError(verdict.describe())
    return table


def _table_doc(t: RackTable) -> Dict[str, Any]:
    return {'n': t.n, 'table': t.rows_one_based()}


def cmd_validate(args: argparse.Namespace) -> int:
    """分类运算表：rack 或更强时退出码0"""
    try:
        table = FormatValidator.parse_table(_read(args.file), source=args.file)
    except FormatError as e:
        print(f"malformed: {e.message}")
        return e.exit_code
    verdict = validate(table)
    if _doc_mode(args):
        _emit_doc(args, {
            'classification': verdict.kind.value,
            'verdict': verdict.describe(),
            'column_witness': None if verdict.column_witness is None else verdict.column_witness + 1,
            'triple_witness': None if verdict.triple_witness is None
            else [w + 1 for w in verdict.triple_witness],
        })
    else:
        print(verdict.describe())
    return EXIT_OK if verdict.is_rack else EXIT_NEGATIVE


def cmd_canon(args: argparse.Namespace) -> int:
    """输出规范形"""
    canonical = canonical_form(_load_rack(args.file))
    if _doc_mode(args):
        _emit_doc(args, _table_doc(canonical))
    else:
        _emit(args, FormatValidator.format_table(canonical))
    return EXIT_OK


def cmd_iso(args: argparse.Namespace) -> int:
    """同构时输出见证，不同构时输出不同的指纹字段"""
    a = _load_rack(args.file_a)
    b = _load_rack(args.file_b)
    iso = is_isomorphic(a, b)
    if iso is not None:
        if _doc_mode(args):
            _emit_doc(args, {'isomorphic': True, 'witness': iso.cycle_string(),
                             'mapping': [x + 1 for x in iso.mapping]})
        else:
            print("isomorphic")
            print(iso.cycle_string())
        return EXIT_OK

    differences = fingerprint(a).differences(fingerprint(b)) if a.n == b.n else {'n': (a.n, b.n)}
    if _doc_mode(args):
        _emit_doc(args, {'isomorphic': False,
                         'differences': {k: [str(v[0]), str(v[1])] for k, v in differences.items()}})
    else:
        print("not isomorphic")
        for name, (left, right) in differences.items():
            print(f"{name}: {left} != {right}")
        if not differences:
            print("fingerprints agree; no isomorphism exists")
    return EXIT_NEGATIVE


def cmd_construct(args: argparse.Namespace) -> int:
    """由蓝图构造运算表，标志写标准错误"""
    blueprint = FormatValidator.parse_blueprint(_read(args.file))
    flags = check_blueprint(blueprint)
    table = build_rack(blueprint)
    if _doc_mode(args):
        _emit_doc(args, {**_table_doc(table), 'flags': flags.to_dict()})
    else:
        _emit(args, FormatValidator.format_table(table))
        print(flags.describe(), file=sys.stderr)
    return EXIT_OK


def cmd_decompose(args: argparse.Namespace) -> int:
    """输出蓝图"""
    blueprint = decompose(_load_rack(args.file))
    if _doc_mode(args):
        _emit_doc(args, {
            'degree': blueprint.degree,
            'gens': [g.cycle_string() for g in blueprint.group.generators],
            'orbits': [{'rep': rep + 1, 'pi': pi.cycle_string()}
                       for rep, pi in zip(blueprint.reps, blueprint.pis)],
        })
    else:
        _emit(args, FormatValidator.format_blueprint(blueprint))
    return EXIT_OK


def cmd_xe(args: argparse.Namespace) -> int:
    """X_E 运算表、单射性检查、碰撞报告或下界报告"""
    n = args.n
    if args.efile:
        table = build_xe(n, FormatValidator.parse_ematrix(_read(args.efile)))
        if _doc_mode(args):
            _emit_doc(args, _table_doc(table))
        else:
            _emit(args, FormatValidator.format_table(table))
        return EXIT_OK

    if args.distinct:
        check_xe_family_cap(n)
        matrices = list(all_ematrices(n // 2))
        distinct = xe_distinctness(n, matrices)
        document = {'n': n, 'matrix_count': len(matrices), 'distinct': distinct}
        if _doc_mode(args):
            _emit_doc(args, document)
        else:
            print(f"n={n} matrix_count={len(matrices)} distinct={str(distinct).lower()}")
        return EXIT_OK if distinct else EXIT_NEGATIVE

    if args.collisions:
        report = xe_collision_report(n)
        if _doc_mode(args):
            _emit_doc(args, report.to_dict())
        else:
            _emit(args, "".join(f"{k}={v}\n" for k, v in report.to_dict().items()))
        return EXIT_OK

    report = lower_bound_report(n)
    if _doc_mode(args):
        _emit_doc(args, report.to_dict())
    else:
        _emit(args, "\n".join(report.lines()) + "\n")
    return EXIT_OK


def cmd_enumerate(args: argparse.Namespace) -> int:
    """枚举同构类；engine=both 时引擎不一致退出码1"""
    request = EnumerationRequest(args.n, RackKind(args.kind), Engine(args.engine),
                                 emit_tables=bool(args.emit_tables))
    result = enumerate_racks(request)
    if args.emit_tables:
        Path(args.emit_tables).write_text(FormatValidator.format_tables(result.representatives),
                                          encoding="utf-8")
    if _doc_mode(args):
        _emit_doc(args, result.to_dict(args.emit_tables))
    else:
        lines = [result.summary()] + [row.describe() for row in result.breakdown]
        _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_report(args: argparse.Namespace) -> int:
    """常数与 m ≤ n 的计数观测"""
    results = []
    for m in range(1, args.n + 1):
        results.extend(enumerate_kinds(m, Engine.STRUCTURED).values())
    report = bounds_report(results)
    if _doc_mode(args):
        _emit_doc(args, report.to_dict())
    else:
        _emit(args, "\n".join(report.lines()) + "\n")
    return EXIT_OK


def _selftest_checks() -> List[tuple]:
    def seven_point() -> None:
        table = build_xe(7, EMatrix(SEVEN_POINT_E))
        if table != RackTable.from_rows(SEVEN_POINT_TABLE):
            raise AssertionError("X_E table differs from the reference")
        if validate(table).kind != RackKind.KEI:
            raise AssertionError("reference table is not classified kei")

    checks = [("seven-point X_E reference", seven_point)]
    for n in range(1, 4):
        for kind in ENUMERABLE_KINDS:
            checks.append((f"engine agreement n={n} kind={kind.value}",
                           lambda n=n, kind=kind: cross_validate(n, kind)))
    return checks


def cmd_selftest(args: argparse.Namespace) -> int:
    """参考实例与 n ≤ 3 的双引擎一致性"""
    failures = 0
    for name, check in _selftest_checks():
        try:
            check()
            print(f"ok {name}")
        except (AssertionError, RackError) as e:
            failures += 1
            print(f"FAIL {name}: {e}")
    return EXIT_OK if failures == 0 else EXIT_NEGATIVE


def _configure(args: argparse.Namespace) -> None:
    """加载配置并应用命令行覆盖（越过硬性上限时抛出 ValueError）"""
    config_manager.reset_config()
    config_manager.load_config(_option(args, "config"))
    overrides = {
        'jobs': _option(args, "jobs"),
        'brute_cap': _option(args, "brute_cap"),
        'degree_cap': _option(args, "degree_cap"),
        'order_cap': _option(args, "order_cap"),
        'xe_family_cap': _option(args, "xe_family_cap"),
        'log_level': _option(args, "log_level"),
        'show_progress': _option(args, "progress"),
    }
    overrides = {k: v for k, v in overrides.items() if v is not None}
    if overrides:
        config_manager.update_config(**overrides)
    config = get_config()
    setup_logging(config.log_level, config.enable_file_logging, config.log_dir, config.log_format)
    for problem in config_manager.validate_config():
        logger.warning(problem)


def _run(args: argparse.Namespace) -> int:
    _configure(args)
    handler: Callable[[argparse.Namespace], int] = args.handler
    return cli_error_handler(handler)(args)


def main(argv: Optional[List[str]] = None) -> int:
    """命令行主函数，返回退出码"""
    load_dotenv()
    args = build_parser().parse_args(argv)
    return cli_error_handler(_run)(args)


if __name__ == "__main__":
    sys.exit(main())
