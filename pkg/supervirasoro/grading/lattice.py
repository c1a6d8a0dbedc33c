"""
有理格与整数 Hermite 标准形
F = Q(√d) 看作二维 Q-空间，格的元素以 (a, b) 坐标表示
"""
from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple

from sympy import Matrix
from sympy.matrices.normalforms import hermite_normal_form as column_hnf


IntVector = Tuple[int, ...]
RationalVector = Tuple[Fraction, ...]


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> List[IntVector]:
    """
    行式 Hermite 标准形

    返回生成同一整数格的上三角基：主元为正，主元上方的元素取模主元约化到 [0, 主元)。
    零行被丢弃，因此结果的长度等于格的秩。

    sympy 给出的是列式 HNF（主元在各列最下方的非零行）；把坐标逆序后按列输入，
    再把坐标和列的顺序都逆回来，就得到行式的规范基。

    Args:
        rows: 整数行向量

    Returns:
        HNF 的非零行
    """
    matrix = [list(r) for r in rows if any(r)]
    if not matrix:
        return []
    H = column_hnf(Matrix([r[::-1] for r in matrix]).T)
    columns = [tuple(int(x) for x in H.col(j))[::-1] for j in range(H.cols)]
    return [c for c in reversed(columns) if any(c)]


def _pivot_column(row: IntVector) -> int:
    for idx, x in enumerate(row):
        if x != 0:
            return idx
    raise ValueError("零行没有主元")


class Lattice:
    """
    Q^n 中的有限生成子群（格）

    以公分母 D 和 D·Λ ⊆ Z^n 的 HNF 表示；D 取生成元坐标分母的最小公倍数，
    它只依赖于格本身，所以 (D, HNF) 是格的规范形式。
    """

    def __init__(self, denominator: int, hnf: List[IntVector], dim: int):
        self.denominator = denominator
        self.hnf = hnf
        self.dim = dim

    @classmethod
    def from_generators(cls, vectors: Sequence[Sequence[Fraction]], dim: int = 2) -> "Lattice":
        denominator = 1
        for v in vectors:
            for x in v:
                denominator = lcm(denominator, Fraction(x).denominator)
        rows = [tuple(int(Fraction(x) * denominator) for x in v) for v in vectors]
        return cls(denominator, hermite_normal_form(rows), dim)

    @property
    def rank(self) -> int:
        return len(self.hnf)

    @property
    def basis(self) -> List[RationalVector]:
        return [tuple(Fraction(x, self.denominator) for x in row) for row in self.hnf]

    def coordinates(self, vector: Sequence[Fraction]) -> Optional[IntVector]:
        """
        向量在规范基下的整数坐标

        Returns:
            不在格中时返回 None
        """
        scaled = [Fraction(x) * self.denominator for x in vector]
        if any(x.denominator != 1 for x in scaled):
            return None
        remainder = [int(x) for x in scaled]
        coords = []
        for row in self.hnf:
            col = _pivot_column(row)
            q, r = divmod(remainder[col], row[col])
            if r != 0:
                return None
            coords.append(q)
            if q:
                remainder = [x - q * y for x, y in zip(remainder, row)]
        if any(remainder):
            return None
        return tuple(coords)

    def contains(self, vector: Sequence[Fraction]) -> bool:
        return self.coordinates(vector) is not None

    def vector(self, coords: Sequence[int]) -> RationalVector:
        """整数坐标对应的有理向量"""
        total = [0] * self.dim
        for c, row in zip(coords, self.hnf):
            if c:
                total = [t + c * x for t, x in zip(total, row)]
        return tuple(Fraction(t, self.denominator) for t in total)

    def contains_lattice(self, other: "Lattice") -> bool:
        return all(self.contains(b) for b in other.basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Lattice):
            return NotImplemented
        return self.denominator == other.denominator and self.hnf == other.hnf

    def __hash__(self) -> int:
        return hash((self.denominator, tuple(self.hnf)))

    def __repr__(self) -> str:
        return f"Lattice(denominator={self.denominator}, hnf={self.hnf})"
