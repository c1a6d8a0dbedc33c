"""
工具函数模块
"""

from supervirasoro.utils.logger import setup_logger, get_logger
from supervirasoro.utils.file_utils import (
    InputFileError,
    JsonDocument,
    ensure_dir,
    read_file,
    read_json,
    write_file,
    write_json,
)
from supervirasoro.utils.parallel import chunked, run_partitioned

__all__ = [
    "setup_logger",
    "get_logger",
    "InputFileError",
    "JsonDocument",
    "ensure_dir",
    "read_file",
    "read_json",
    "write_file",
    "write_json",
    "chunked",
    "run_partitioned",
]
