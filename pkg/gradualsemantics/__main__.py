"""命令行入口点。

退出码：
    0  成功
    1  DSL 解析错误
    2  结构（含环）、求值或场景错误，以及输入文件无法读取
    3  未知的语义或性质名称
    4  夹具自检未全部通过
"""

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path

from gradualsemantics.evaluator import GraphEvaluator
from gradualsemantics.models.graph import StatementGraph
from gradualsemantics.models.parsing import ParseErrorKind
from gradualsemantics.models.properties import Scenario
from gradualsemantics.properties import (
    check_property,
    fuzz,
    get_property,
    run_fixtures,
    satisfaction_matrix,
    select_fixtures,
)
from gradualsemantics.reporting import all_passed, get_formatter
from gradualsemantics.utils.exceptions import (
    EvaluationError,
    GradualSemanticsError,
    GraphStructureError,
    ScenarioError,
    SGParseError,
    UnknownNameError,
)
from gradualsemantics.utils.logging_config import setup_logging

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_STRUCTURE = 2
EXIT_UNKNOWN_NAME = 3
EXIT_FIXTURES_FAILED = 4


def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    return Path(path).read_text(encoding="utf-8")


def _split_names(values: Sequence[str] | None) -> list[str] | None:
    """``--semantics a,b --semantics c`` → ``[a, b, c]``。"""
    if not values:
        return None
    return [name.strip() for value in values for name in value.split(",") if name.strip()]


def _parse_focus(items: Sequence[str]) -> dict[str, str]:
    focus: dict[str, str] = {}
    for item in items:
        role, sep, sid = item.partition("=")
        if not sep or not role or not sid:
            raise argparse.ArgumentTypeError(f"--focus 需要 role=id 形式: {item}")
        focus[role.strip()] = sid.strip()
    return focus


def build_parser() -> argparse.ArgumentParser:
    """构造参数解析器。"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--log-level",
        type=str,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        default=None,
        help="日志级别（默认取配置 GRADUAL_LOG_LEVEL）",
    )
    common.add_argument("--log-file", type=str, help="日志文件路径（可选）")

    report = argparse.ArgumentParser(add_help=False, parents=[common])
    report.add_argument(
        "-f",
        "--format",
        type=str,
        choices=["text", "json"],
        default="text",
        help="输出格式（默认：text）",
    )

    parser = argparse.ArgumentParser(
        prog="gradualsemantics",
        description="GradualSemantics - 陈述图渐进语义求值与性质实验工具",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--mcp", action="store_true", help="以 MCP 服务器模式运行")
    sub = parser.add_subparsers(dest="command")

    p_eval = sub.add_parser("eval", parents=[report], help="计算每个陈述的强度")
    p_eval.add_argument("input", nargs="?", help=".sg 文件路径，省略或 - 表示标准输入")
    p_eval.add_argument("-s", "--semantics", type=str, default=None, help="语义名称")

    p_classify = sub.add_parser("classify", parents=[report], help="完备性分类")
    p_classify.add_argument("input", nargs="?", help=".sg 文件路径，省略或 - 表示标准输入")

    p_props = sub.add_parser("props", parents=[report], help="运行夹具或检查单个场景")
    p_props.add_argument("--fixtures", action="store_true", help="运行内置夹具")
    p_props.add_argument("-p", "--property", action="append", help="性质名称，可重复或逗号分隔")
    p_props.add_argument("-s", "--semantics", action="append", help="语义名称，可重复或逗号分隔")
    p_props.add_argument("--graph", type=str, help="场景图 G 的 .sg 文件")
    p_props.add_argument("--graph2", type=str, help="图对场景中 G′ 的 .sg 文件")
    p_props.add_argument(
        "--focus", action="append", default=[], help="焦点绑定 role=id，可重复"
    )
    p_props.add_argument("--tolerance", type=float, default=None, help="相等判定容差")

    p_fuzz = sub.add_parser("fuzz", parents=[report], help="对单个性质运行随机试验")
    p_fuzz.add_argument("-p", "--property", required=True, help="性质名称")
    p_fuzz.add_argument("-s", "--semantics", required=True, help="语义名称")
    p_fuzz.add_argument("--trials", type=int, default=None, help="试验次数")
    p_fuzz.add_argument("--seed", type=int, default=None, help="基础种子")
    p_fuzz.add_argument("--workers", type=int, default=None, help="进程数")

    p_matrix = sub.add_parser("matrix", parents=[report], help="计算满足矩阵")
    p_matrix.add_argument("-s", "--semantics", action="append", help="语义名称，可重复或逗号分隔")
    p_matrix.add_argument("-p", "--property", action="append", help="性质名称，可重复或逗号分隔")
    p_matrix.add_argument("--trials", type=int, default=None, help="每格试验次数")
    p_matrix.add_argument("--seed", type=int, default=None, help="基础种子")
    p_matrix.add_argument("--workers", type=int, default=None, help="进程数")

    p_export = sub.add_parser("export", parents=[common], help="导出为 JSON 或 DOT")
    p_export.add_argument("input", nargs="?", help=".sg 文件路径，省略或 - 表示标准输入")
    p_export.add_argument(
        "-f", "--format", choices=["json", "dot"], default="json", help="导出格式（默认：json）"
    )
    p_export.add_argument("-s", "--semantics", type=str, default=None, help="附带强度的语义")
    return parser


def _cmd_eval(args: argparse.Namespace) -> str:
    evaluator = GraphEvaluator(args.semantics)
    graph = evaluator.load(_read_input(args.input), source=args.input)
    strengths = evaluator.evaluate(graph)
    return get_formatter(args.format).format_strengths(strengths, evaluator.semantics.name)


def _cmd_classify(args: argparse.Namespace) -> str:
    evaluator = GraphEvaluator()
    graph = evaluator.load(_read_input(args.input), source=args.input)
    return get_formatter(args.format).format_completeness(evaluator.classify(graph))


def _load_graph(evaluator: GraphEvaluator, path: str) -> StatementGraph:
    return evaluator.load(_read_input(path), source=path)


def _cmd_props(args: argparse.Namespace) -> tuple[str, int]:
    formatter = get_formatter(args.format)
    semantics = _split_names(args.semantics)
    properties = _split_names(args.property)
    if args.fixtures or args.graph is None:
        pids = [get_property(p).pid for p in properties] if properties else None
        results = run_fixtures(select_fixtures(pids, semantics))
        code = EXIT_OK if all_passed(results) else EXIT_FIXTURES_FAILED
        return formatter.format_verdicts(results), code

    if not properties or len(properties) != 1 or not semantics or len(semantics) != 1:
        raise argparse.ArgumentTypeError("检查单个场景需要恰好一个 --property 与 --semantics")
    pid = get_property(properties[0]).pid
    evaluator = GraphEvaluator(semantics[0])
    focus = _parse_focus(args.focus)
    before = _load_graph(evaluator, args.graph)
    if args.graph2 is None:
        scenario = Scenario.single(before, **focus)
    else:
        scenario = Scenario.pair(before, _load_graph(evaluator, args.graph2), **focus)
    verdict = check_property(pid, evaluator.semantics, scenario, args.tolerance)
    return formatter.format_verdict(verdict), EXIT_OK


def _cmd_fuzz(args: argparse.Namespace) -> str:
    report = fuzz(
        get_property(args.property).pid,
        GraphEvaluator(args.semantics).semantics,
        trials=args.trials,
        seed=args.seed,
        workers=args.workers,
    )
    return get_formatter(args.format).format_fuzz_report(report)


def _cmd_matrix(args: argparse.Namespace) -> str:
    matrix = satisfaction_matrix(
        _split_names(args.semantics),
        _split_names(args.property),
        trials=args.trials,
        seed=args.seed,
        workers=args.workers,
    )
    return get_formatter(args.format).format_matrix(matrix)


def _cmd_export(args: argparse.Namespace) -> str:
    evaluator = GraphEvaluator(args.semantics)
    graph = evaluator.load(_read_input(args.input), source=args.input)
    return evaluator.export(graph, args.format, args.semantics).rstrip("\n")


def _dispatch(args: argparse.Namespace) -> tuple[str, int]:
    if args.command == "props":
        return _cmd_props(args)
    handlers = {
        "eval": _cmd_eval,
        "classify": _cmd_classify,
        "fuzz": _cmd_fuzz,
        "matrix": _cmd_matrix,
        "export": _cmd_export,
    }
    return handlers[args.command](args), EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    """主入口函数。

    Args:
        argv: 命令行参数，默认取 ``sys.argv[1:]``

    Returns:
        int: 退出码
    """
    parser = build_parser()
    args = parser.parse_args(argv)

    setup_logging(getattr(args, "log_level", None), getattr(args, "log_file", None))

    if args.mcp:
        from gradualsemantics.mcp import main_sync

        main_sync()
        return EXIT_OK

    if args.command is None:
        parser.print_help(sys.stderr)
        print("\n错误：需要指定子命令或使用 --mcp 启动 MCP 服务器", file=sys.stderr)
        return EXIT_STRUCTURE

    try:
        output, code = _dispatch(args)
    except SGParseError as e:
        for error in e.errors:
            print(f"{getattr(args, 'input', None) or '<stdin>'}:{error}", file=sys.stderr)
        # 仅含环错误时视为结构错误
        if all(error.kind == ParseErrorKind.CYCLIC_GRAPH for error in e.errors):
            return EXIT_STRUCTURE
        return EXIT_PARSE
    except UnknownNameError as e:
        print(f"错误: {e.message}", file=sys.stderr)
        if e.details:
            print(f"详情: {e.details}", file=sys.stderr)
        return EXIT_UNKNOWN_NAME
    except (GraphStructureError, EvaluationError, ScenarioError) as e:
        print(f"错误: {e}", file=sys.stderr)
        return EXIT_STRUCTURE
    except argparse.ArgumentTypeError as e:
        print(f"参数错误: {e}", file=sys.stderr)
        return EXIT_STRUCTURE
    except OSError as e:
        print(f"错误：无法读取输入: {e}", file=sys.stderr)
        return EXIT_STRUCTURE
    except GradualSemanticsError as e:
        print(f"意外错误: {e}", file=sys.stderr)
        return EXIT_STRUCTURE

    if output:
        print(output)
    return code


def main_sync() -> None:
    """同步入口点（用于 CLI）。"""
    sys.exit(main())


if __name__ == "__main__":
    main_sync()
