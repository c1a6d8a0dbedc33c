"""
主程序入口
"""
import argparse
import sys
from typing import List, Optional

from supervirasoro.commands import COMMANDS
from supervirasoro.config.settings import Settings, get_settings
from supervirasoro.graph.verification_graph import VerificationGraph
from supervirasoro.tools.report_tools import Report, format_summary
from supervirasoro.utils.logger import ROOT_LOGGER, setup_logger


class SessionVerifier:
    """超 Virasoro 型代数验证器主类"""

    def __init__(self, settings: Optional[Settings] = None):
        """
        初始化验证器

        Args:
            settings: 进程级配置
        """
        self.settings = settings or get_settings()
        self.graph = VerificationGraph(self.settings)

    def run(self, command: str, **kwargs) -> Report:
        """
        执行一个命令

        Args:
            command: 命令名，见 COMMANDS
            **kwargs: config_path / window_path / input_path / out_path / seed / jobs

        Returns:
            已定状态的报告
        """
        return self.graph.run(command, **kwargs)["report"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="supervirasoro",
        description="广义 super-Virasoro 李超代数 SV[Γ,s]（非有限分次）的精确验证工具",
    )
    parser.add_argument("command", choices=list(COMMANDS), help="要执行的检查")
    parser.add_argument("--config", type=str, default=None, help="会话配置文件（JSON）")
    parser.add_argument("--window", type=str, default=None, help="窗口文件（JSON），覆盖会话中的窗口")
    parser.add_argument("--input", type=str, default=None, help="命令输入文件（JSON）")
    parser.add_argument("--out", type=str, default=None, help="报告输出路径（默认写入 reports_dir，未设置时为 output_dir/reports）")
    parser.add_argument("--seed", type=int, default=None, help="随机抽样种子，覆盖会话中的种子")
    parser.add_argument("--jobs", type=int, default=None, help="并行进程数（默认：1）")
    parser.add_argument("--log-level", type=str, default=None, help="日志级别（DEBUG/INFO/WARNING/ERROR）")
    parser.add_argument("--quiet", action="store_true", help="不在标准输出打印摘要")
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """命令行主函数，返回退出码 0 / 1 / 2"""
    args = build_parser().parse_args(argv)
    settings = get_settings()
    setup_logger(ROOT_LOGGER, args.log_level or settings.log_level, settings.log_file)

    verifier = SessionVerifier(settings)
    report = verifier.run(
        args.command,
        config_path=args.config,
        window_path=args.window,
        input_path=args.input,
        out_path=args.out,
        seed=args.seed,
        jobs=args.jobs,
    )
    if not args.quiet:
        print(format_summary(report))
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
