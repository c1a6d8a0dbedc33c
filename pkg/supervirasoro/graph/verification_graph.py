"""
验证图定义
使用 LangGraph 把一次命令运行组织成 load → execute → write 的工作流
"""
from typing import Any, Dict, Optional, TypedDict

from langgraph.graph import END, StateGraph

from supervirasoro.commands import Command, CommandOptions, get_command
from supervirasoro.config.session import Session, SessionConfig, build_session
from supervirasoro.config.settings import Settings, get_settings
from supervirasoro.tools.report_tools import Report, save_report
from supervirasoro.utils.file_utils import InputFileError, read_json
from supervirasoro.utils.logger import get_logger


class RunState(TypedDict):
    """运行状态"""
    command: str
    config_path: Optional[str]
    window_path: Optional[str]
    input_path: Optional[str]
    out_path: Optional[str]
    seed: Optional[int]
    jobs: int
    session: Optional[Session]
    report: Optional[Report]
    report_path: Optional[str]


def load_session_config(config_path: Optional[str]) -> SessionConfig:
    """
    读取会话文件；没有给出时使用全部默认值

    Raises:
        InputFileError: 文件不可读、JSON 不合法或字段校验失败
    """
    if config_path is None:
        return SessionConfig()
    doc = read_json(config_path)
    try:
        return SessionConfig.model_validate(doc.data)
    except ValueError as exc:
        raise InputFileError(config_path, str(exc)) from exc


class VerificationGraph:
    """验证图"""

    def __init__(self, settings: Optional[Settings] = None):
        """
        初始化验证图

        Args:
            settings: 进程级配置，缺省时读取 get_settings()
        """
        self.settings = settings or get_settings()
        self.logger = get_logger("verification_graph")

        # 构建图
        self.graph = self._build_graph()

    def _build_graph(self):
        """构建状态图"""
        workflow = StateGraph(RunState)

        # 添加节点
        workflow.add_node("load", self._load_node)
        workflow.add_node("execute", self._execute_node)
        workflow.add_node("write", self._write_node)

        # 定义边：加载失败时直接写出错误报告
        workflow.set_entry_point("load")
        workflow.add_conditional_edges(
            "load",
            self._after_load,
            {"execute": "execute", "write": "write"},
        )
        workflow.add_edge("execute", "write")
        workflow.add_edge("write", END)

        return workflow.compile()

    @staticmethod
    def _after_load(state: RunState) -> str:
        return "write" if state.get("report") is not None else "execute"

    def _load_node(self, state: RunState) -> RunState:
        """加载节点：会话文件、窗口文件、种子"""
        self.logger.info("正在加载会话配置...")
        try:
            config = load_session_config(state["config_path"])
            window_data = None
            if state["window_path"] is not None:
                window_data = read_json(state["window_path"]).data
            session = build_session(config, self.settings, window_data=window_data, seed=state["seed"])
        except (ValueError, OSError) as exc:
            self.logger.error("会话加载失败: %s", exc)
            return {**state, "report": Report.failure(state["command"], str(exc))}
        self.logger.info(
            "会话: d=%d, 变体 %s, 窗口 %d 个指标, i_max=%d",
            config.d, session.algebra.variant.value, len(session.window.degrees), session.window.i_max,
        )
        return {**state, "session": session}

    def _execute_node(self, state: RunState) -> RunState:
        """执行节点"""
        command: Command = get_command(state["command"])
        options = CommandOptions(self.settings, state["input_path"], state["jobs"])
        self.logger.info("正在执行 %s ...", command.name)
        try:
            report = command.run(state["session"], options)
        except (ValueError, OSError) as exc:
            self.logger.error("命令 %s 失败: %s", command.name, exc)
            report = Report.failure(command.name, str(exc))
        return {**state, "report": report}

    def _write_node(self, state: RunState) -> RunState:
        """写出节点"""
        report = state["report"].finalize()
        try:
            path = save_report(report, state["out_path"], self.settings.report_directory)
        except OSError as exc:
            self.logger.error("报告写出失败: %s", exc)
            report.error = str(exc)
            return {**state, "report": report.finalize(), "report_path": None}
        self.logger.info("报告已保存至: %s", path)
        return {**state, "report": report, "report_path": path}

    def run(
        self,
        command: str,
        config_path: Optional[str] = None,
        window_path: Optional[str] = None,
        input_path: Optional[str] = None,
        out_path: Optional[str] = None,
        seed: Optional[int] = None,
        jobs: Optional[int] = None,
    ) -> Dict[str, Any]:
        """
        运行验证图

        Returns:
            最终状态字典，report 总是存在
        """
        initial_state: RunState = {
            "command": command,
            "config_path": config_path,
            "window_path": window_path,
            "input_path": input_path,
            "out_path": out_path,
            "seed": seed,
            "jobs": jobs if jobs is not None else self.settings.default_jobs,
            "session": None,
            "report": None,
            "report_path": None,
        }
        return self.graph.invoke(initial_state)
