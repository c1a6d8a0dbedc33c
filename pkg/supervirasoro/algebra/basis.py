"""
基向量 L_{α,i}、G_{μ,j}、C 与代数变体
"""
from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import Optional, Tuple

from supervirasoro.grading.index_group import GroupElement


class BasisError(ValueError):
    """基向量不合法（指标不在对应陪集、层数为负、变体中不存在该类向量）"""


class VariantError(ValueError):
    """变体不匹配"""


class Kind(str, Enum):
    C = "C"
    L = "L"
    G = "G"


class Parity(IntEnum):
    EVEN = 0
    ODD = 1

    def __add__(self, other):
        return Parity((int(self) + int(other)) % 2)

    @classmethod
    def parse(cls, text: str) -> "Parity":
        try:
            return cls[text.strip().upper()]
        except KeyError:
            raise ValueError(f"未知的奇偶性 {text!r}，应为 even 或 odd") from None


class Variant(str, Enum):
    """
    SV: 非有限分次的广义 super-Virasoro 代数
    W: 由 L 张成的广义 Witt 子代数
    SVir: 带中心元 C 的中心扩张，只含第 0 层
    SVir0: SVir 去掉中心，即 SV 的第 0 层
    """

    SV = "SV"
    W = "W"
    SVIR = "SVir"
    SVIR0 = "SVir0"

    @property
    def has_odd(self) -> bool:
        return self is not Variant.W

    @property
    def has_center(self) -> bool:
        return self is Variant.SVIR

    @property
    def level_zero_only(self) -> bool:
        return self in (Variant.SVIR, Variant.SVIR0)

    @classmethod
    def parse(cls, text: str) -> "Variant":
        for member in cls:
            if member.value.lower() == str(text).strip().lower():
                return member
        raise VariantError(f"未知的代数变体 {text!r}，可选 SV / W / SVir / SVir0")


_KIND_ORDER = {Kind.C: 0, Kind.L: 1, Kind.G: 2}


@dataclass(frozen=True)
class BasisVector:
    """
    基向量

    C 没有次数和层数；L、G 的层数非负。排序为 C < L < G，然后按次数、层数。
    """

    kind: Kind
    degree: Optional[GroupElement] = None
    level: Optional[int] = None

    def __post_init__(self):
        if self.kind is Kind.C:
            if self.degree is not None or self.level is not None:
                raise BasisError("中心元 C 不带次数和层数")
            return
        if self.degree is None or self.level is None:
            raise BasisError(f"{self.kind.value} 需要次数和层数")
        if self.level < 0:
            raise BasisError(f"层数必须非负，收到 {self.level}")

    @classmethod
    def L(cls, degree: GroupElement, level: int = 0) -> "BasisVector":
        return cls(Kind.L, degree, level)

    @classmethod
    def G(cls, degree: GroupElement, level: int = 0) -> "BasisVector":
        return cls(Kind.G, degree, level)

    @classmethod
    def central(cls) -> "BasisVector":
        return cls(Kind.C)

    @property
    def parity(self) -> Parity:
        return Parity.ODD if self.kind is Kind.G else Parity.EVEN

    @property
    def is_central(self) -> bool:
        return self.kind is Kind.C

    def sort_key(self) -> Tuple:
        if self.kind is Kind.C:
            return (0, (), 0)
        return (_KIND_ORDER[self.kind], self.degree.coords, self.level)

    def __lt__(self, other: "BasisVector") -> bool:
        return self.sort_key() < other.sort_key()

    def __le__(self, other: "BasisVector") -> bool:
        return self.sort_key() <= other.sort_key()

    def __gt__(self, other: "BasisVector") -> bool:
        return self.sort_key() > other.sort_key()

    def __ge__(self, other: "BasisVector") -> bool:
        return self.sort_key() >= other.sort_key()

    def __repr__(self) -> str:
        if self.kind is Kind.C:
            return "C"
        return f"{self.kind.value}{self.degree.coords}_{self.level}"
