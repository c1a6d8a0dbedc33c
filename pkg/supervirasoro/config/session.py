"""
会话配置：二次域、指标群、变体、窗口、种子
"""
from dataclasses import dataclass
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from supervirasoro.algebra.basis import Variant
from supervirasoro.algebra.superalgebra import SuperAlgebra
from supervirasoro.algebra.window import Window
from supervirasoro.config.settings import Settings
from supervirasoro.field.literals import parse_scalar
from supervirasoro.field.quadratic import QuadraticField, is_square_free
from supervirasoro.formats.literals import parse_window
from supervirasoro.grading.index_group import IndexGroup


class SessionConfig(BaseModel):
    """会话文件（--config）的结构"""

    model_config = ConfigDict(extra="forbid")

    d: int = 2
    gamma_generators: List[str] = Field(default_factory=lambda: ["1"])
    s: str = "1/2"
    variant: Variant = Variant.SV
    window: Optional[Dict[str, Any]] = None
    seed: Optional[int] = None

    @field_validator("d")
    @classmethod
    def _check_d(cls, v: int) -> int:
        if v in (0, 1) or not is_square_free(v):
            raise ValueError(f"d 必须是无平方因子的整数且不等于 0、1，收到 {v}")
        return v

    @field_validator("variant", mode="before")
    @classmethod
    def _parse_variant(cls, v):
        return Variant.parse(v) if isinstance(v, str) else v

    @field_validator("gamma_generators")
    @classmethod
    def _check_generators(cls, v: List[str]) -> List[str]:
        if not v:
            raise ValueError("gamma_generators 不能为空")
        return v


@dataclass
class Session:
    """由 SessionConfig 构造出的运行时对象"""

    config: SessionConfig
    field: QuadraticField
    group: IndexGroup
    algebra: SuperAlgebra
    window: Window
    seed: int


def build_session(
    config: SessionConfig,
    settings: Settings,
    window_data: Optional[Dict[str, Any]] = None,
    seed: Optional[int] = None,
) -> Session:
    """
    构造会话

    window_data / seed 覆盖配置文件中的值；都没有时使用 Settings 的默认值。

    Raises:
        LiteralParseError / FieldMismatchError / GroupValidationError / WindowError
    """
    field = QuadraticField(config.d)
    generators = [parse_scalar(g, field) for g in config.gamma_generators]
    s = parse_scalar(config.s, field)
    group = IndexGroup.canonical(field, generators, s)
    algebra = SuperAlgebra(group, config.variant)
    data = window_data if window_data is not None else config.window
    if data is None:
        window = Window.from_bound(group.rank, settings.default_degree_bound, settings.default_i_max)
    else:
        window = parse_window(data, group)
    if seed is None:
        seed = config.seed if config.seed is not None else settings.default_seed
    return Session(config, field, group, algebra, window, seed)
