"""
配置设置
"""
import os
from typing import Optional

from dotenv import load_dotenv
from pydantic_settings import BaseSettings, SettingsConfigDict


# 加载环境变量
load_dotenv()


class Settings(BaseSettings):
    """进程级默认值

    Pydantic BaseSettings 从环境变量读取，前缀 SVIR_
    例如：SVIR_DEFAULT_SEED -> default_seed
    """

    model_config = SettingsConfigDict(
        env_prefix="SVIR_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # 随机抽样
    default_seed: int = 20240917
    random_triples: int = 20000
    max_exhaustive_triples: int = 200000

    # 并行
    default_jobs: int = 1

    # 未配置窗口时使用
    default_degree_bound: int = 2
    default_i_max: int = 3

    # 输出配置，reports_dir 未设置时报告写入 output_dir/reports
    output_dir: str = "./outputs"
    reports_dir: Optional[str] = None

    # 日志配置
    log_level: str = "INFO"
    log_file: Optional[str] = None

    @property
    def report_directory(self) -> str:
        return self.reports_dir or os.path.join(self.output_dir, "reports")


# 全局配置实例
_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """
    获取配置实例（单例模式）

    Returns:
        配置实例
    """
    global _settings
    if _settings is None:
        _settings = Settings()
    return _settings


def reset_settings() -> None:
    """丢弃缓存的配置，下次 get_settings 重新读取环境变量"""
    global _settings
    _settings = None
