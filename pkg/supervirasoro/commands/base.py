"""
命令基类
每个 CLI 命令是一个处理器，把会话和输入文件交给对应模块，产出 Report
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Optional

from supervirasoro.config.session import Session
from supervirasoro.config.settings import Settings
from supervirasoro.tools.report_tools import Report
from supervirasoro.utils.file_utils import InputFileError, JsonDocument, read_json


@dataclass
class CommandOptions:
    settings: Settings
    input_path: Optional[str] = None
    jobs: int = 1


class Command(ABC):
    """命令处理器"""

    name: str = ""
    needs_input: bool = False

    def load_input(self, options: CommandOptions) -> Optional[JsonDocument]:
        if options.input_path is None:
            if self.needs_input:
                raise InputFileError("<input>", f"命令 {self.name} 需要 --input")
            return None
        return read_json(options.input_path)

    @abstractmethod
    def execute(self, session: Session, doc: Optional[JsonDocument], options: CommandOptions) -> Report:
        ...

    def run(self, session: Session, options: CommandOptions) -> Report:
        doc = self.load_input(options)
        return self.execute(session, doc, options).finalize()
