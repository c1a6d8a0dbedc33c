"""
F = Q(√d) 上的精确稀疏线性代数，计算交给 sympy 的 DomainMatrix
向量是 键 → QuadExtScalar 的字典，只存非零项；列的顺序由调用方给出的键序列决定
"""
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Generic, Hashable, List, Sequence, Set, TypeVar

from sympy import Rational, sqrt
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from supervirasoro.field.quadratic import QuadExtScalar, QuadraticField


K = TypeVar("K", bound=Hashable)
SparseRow = Dict[K, QuadExtScalar]


@lru_cache(maxsize=None)
def _algebraic_field(d: int):
    return QQ.algebraic_field(sqrt(d))


class ScalarBridge:
    """
    QuadExtScalar 与 sympy 多项式域元素之间的转换

    全部系数有理时用 QQ，否则用 QQ(√d)。
    """

    def __init__(self, field: QuadraticField, rational: bool):
        self.field = field
        self.root = sqrt(field.d)
        self.domain = QQ if rational else _algebraic_field(field.d)
        self._gen = None if rational else self.domain.from_sympy(self.root)

    @classmethod
    def for_rows(cls, field: QuadraticField, rows: Sequence[SparseRow]) -> "ScalarBridge":
        rational = all(v.is_rational() for row in rows for v in row.values())
        return cls(field, rational)

    def to_domain(self, x: QuadExtScalar):
        a = QQ(x.a.numerator, x.a.denominator)
        if self._gen is None:
            return a
        b = QQ(x.b.numerator, x.b.denominator)
        K = self.domain
        return K.convert_from(a, QQ) + K.convert_from(b, QQ) * self._gen

    def from_expr(self, expr) -> QuadExtScalar:
        """sympy 表达式 a + b·√d 的坐标"""
        b = Rational(expr.coeff(self.root))
        a = Rational(expr - b * self.root)
        return self.field(Fraction(int(a.p), int(a.q)), Fraction(int(b.p), int(b.q)))

    def matrix(self, rows: Sequence[SparseRow], keys: Sequence[K], transpose: bool = False) -> DomainMatrix:
        """按 keys 排列列；transpose 时每个向量成为一列"""
        index = {k: idx for idx, k in enumerate(keys)}
        entries: Dict[int, Dict[int, object]] = {}
        for r, row in enumerate(rows):
            for key, value in row.items():
                if not value:
                    continue
                i, j = (index[key], r) if transpose else (r, index[key])
                entries.setdefault(i, {})[j] = self.to_domain(value)
        shape = (len(keys), len(rows)) if transpose else (len(rows), len(keys))
        return DomainMatrix(entries, shape, self.domain)


def nullspace(
    equations: Sequence[SparseRow],
    unknowns: Sequence[K],
    field: QuadraticField,
) -> List[SparseRow]:
    """
    齐次线性方程组 Σ coeff·x_u = 0 的解空间基

    每个解按 unknowns 的顺序把最后一个非零分量（自由变量）归一为 1。

    Args:
        equations: 每个方程是 未知量 → 系数
        unknowns: 全部未知量，决定列的顺序
        field: 标量域

    Returns:
        解空间的基，每个解是 未知量 → 取值（只含非零项）
    """
    equations = [e for e in equations if any(e.values())]
    if not equations:
        return [{u: field.one} for u in unknowns]
    order = {u: idx for idx, u in enumerate(unknowns)}
    bridge = ScalarBridge.for_rows(field, equations)
    kernel = bridge.matrix(equations, unknowns).nullspace().to_Matrix()
    basis: List[SparseRow] = []
    for r in range(kernel.rows):
        solution = {
            unknowns[j]: bridge.from_expr(kernel[r, j])
            for j in range(kernel.cols)
            if kernel[r, j] != 0
        }
        free = max(solution, key=order.__getitem__)
        scale = solution[free].inverse()
        basis.append({k: v * scale for k, v in solution.items()})
    basis.sort(key=lambda s: max(order[k] for k in s))
    return basis


class RowSpace(Generic[K]):
    """
    增量维护的行空间

    只保存线性无关的原始向量；独立性由 [已有向量 | 候选] 按列排布后的 rref 主元列决定。
    """

    def __init__(self, keys: Sequence[K], field: QuadraticField):
        self.keys = list(keys)
        self.field = field
        self._rows: List[SparseRow] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> List[SparseRow]:
        return list(self._rows)

    def extend(self, vectors: Sequence[SparseRow]) -> List[int]:
        """
        把候选向量并入行空间

        Returns:
            扩大了行空间的候选下标（按 rref 的贪心顺序）
        """
        candidates = [i for i, v in enumerate(vectors) if any(v.values())]
        if not candidates:
            return []
        columns = self._rows + [vectors[i] for i in candidates]
        bridge = ScalarBridge.for_rows(self.field, columns)
        _, pivots = bridge.matrix(columns, self.keys, transpose=True).rref()
        offset = len(self._rows)
        fresh = [candidates[p - offset] for p in pivots if p >= offset]
        self._rows.extend(vectors[i] for i in fresh)
        return fresh

    def contains(self, vector: SparseRow) -> bool:
        trial = RowSpace(self.keys, self.field)
        trial._rows = list(self._rows)
        return not trial.extend([vector])

    def unit_keys(self) -> Set[K]:
        """单位向量 e_k 落在行空间中的键 k：零化子在第 k 列全为零"""
        if not self._rows:
            return set()
        bridge = ScalarBridge.for_rows(self.field, self._rows)
        kernel = bridge.matrix(self._rows, self.keys).nullspace().to_Matrix()
        return {k for j, k in enumerate(self.keys) if all(kernel[r, j] == 0 for r in range(kernel.rows))}
