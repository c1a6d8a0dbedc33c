"""
有限窗口：所有枚举型检查的范围
"""
from dataclasses import dataclass
from itertools import product
from typing import FrozenSet, Iterable, List

from supervirasoro.grading.index_group import GroupElement


class WindowError(ValueError):
    """窗口不合法"""


@dataclass(frozen=True)
class Window:
    """次数的有限集合（关于取负封闭、含 0）与层数上界 i_max"""

    degrees: FrozenSet[GroupElement]
    i_max: int

    def __post_init__(self):
        if not self.degrees:
            raise WindowError("窗口的次数集合不能为空")
        if self.i_max < 0:
            raise WindowError(f"i_max 必须非负，收到 {self.i_max}")
        ranks = {len(g.coords) for g in self.degrees}
        if len(ranks) != 1:
            raise WindowError("窗口中次数的坐标长度不一致")
        rank = ranks.pop()
        if GroupElement.zero(rank) not in self.degrees:
            raise WindowError("窗口必须包含次数 0")
        for g in self.degrees:
            if -g not in self.degrees:
                raise WindowError(f"窗口关于取负不封闭: 缺少 {(-g).coords}")

    @classmethod
    def from_bound(cls, rank: int, bound: int, i_max: int) -> "Window":
        """所有坐标在 [-bound, bound] 内的次数"""
        if bound < 0:
            raise WindowError(f"degree_coord_bound 必须非负，收到 {bound}")
        degrees = frozenset(
            GroupElement(tuple(c)) for c in product(range(-bound, bound + 1), repeat=rank)
        )
        return cls(degrees, i_max)

    @classmethod
    def from_degrees(cls, degrees: Iterable[GroupElement], i_max: int) -> "Window":
        return cls(frozenset(degrees), i_max)

    @property
    def rank(self) -> int:
        return len(next(iter(self.degrees)).coords)

    def sorted_degrees(self) -> List[GroupElement]:
        return sorted(self.degrees)

    def hull(self) -> "Window":
        """包含窗口内任意两个基向量括号支撑的窗口：次数 α+β，层数至 2·i_max"""
        degrees = frozenset(a + b for a in self.degrees for b in self.degrees)
        return Window(degrees, 2 * self.i_max)

    def __contains__(self, degree: GroupElement) -> bool:
        return degree in self.degrees
