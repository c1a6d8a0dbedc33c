"""
文件操作工具
"""
import json
import os
from typing import Any, Optional


class InputFileError(ValueError):
    """输入文件无法读取或解析；定位到文件、行号和出错的记号"""

    def __init__(self, path: str, message: str, line: Optional[int] = None, token: Optional[str] = None):
        self.path = path
        self.line = line
        self.token = token
        self.message = message
        location = path if line is None else f"{path}:{line}"
        suffix = f" (记号 {token!r})" if token is not None else ""
        super().__init__(f"{location}: {message}{suffix}")


def ensure_dir(dir_path: str) -> None:
    """
    确保目录存在，如果不存在则创建

    Args:
        dir_path: 目录路径
    """
    if dir_path:
        os.makedirs(dir_path, exist_ok=True)


def read_file(file_path: str, encoding: str = "utf-8") -> str:
    """
    读取文件内容

    Raises:
        InputFileError: 文件不存在或不可读
    """
    try:
        with open(file_path, "r", encoding=encoding) as f:
            return f.read()
    except OSError as exc:
        raise InputFileError(file_path, f"无法读取文件: {exc.strerror or exc}") from exc


def write_file(file_path: str, content: str, encoding: str = "utf-8") -> None:
    """
    写入文件内容

    Args:
        file_path: 文件路径
        content: 文件内容
        encoding: 编码格式
    """
    ensure_dir(os.path.dirname(file_path))
    with open(file_path, "w", encoding=encoding) as f:
        f.write(content)


def locate_line(text: str, token: str) -> Optional[int]:
    """token 在文本中第一次出现的行号（从 1 开始）"""
    if not token:
        return None
    for candidate in (json.dumps(token, ensure_ascii=False), token):
        idx = text.find(candidate)
        if idx >= 0:
            return text.count("\n", 0, idx) + 1
    return None


class JsonDocument:
    """
    已解析的 JSON 输入文件

    保留原文，以便把语义错误定位到具体的行。
    """

    def __init__(self, path: str, text: str, data: Any):
        self.path = path
        self.text = text
        self.data = data

    def error(self, message: str, token: Optional[str] = None) -> InputFileError:
        line = locate_line(self.text, token) if token is not None else None
        return InputFileError(self.path, message, line=line, token=token)


def read_json(file_path: str) -> JsonDocument:
    """
    读取 JSON 文件

    Raises:
        InputFileError: 文件不可读或 JSON 语法错误（带行号与出错字符）
    """
    text = read_file(file_path)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        lines = text.splitlines()
        token = None
        if 0 < exc.lineno <= len(lines):
            line = lines[exc.lineno - 1]
            token = line[exc.colno - 1:exc.colno + 9].strip() or "<end>"
        raise InputFileError(file_path, exc.msg, line=exc.lineno, token=token) from exc
    return JsonDocument(file_path, text, data)


def write_json(file_path: str, data: Any) -> str:
    """
    以稳定的键序写出 JSON

    Returns:
        写入的文件路径
    """
    write_file(file_path, json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n")
    return file_path
