"""
枚举任务的分块并行
worker 必须是模块级函数，context 与各块必须可 pickle
"""
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Callable, List, Sequence, TypeVar

from supervirasoro.utils.logger import get_logger


T = TypeVar("T")
R = TypeVar("R")


def chunked(items: Sequence[T], parts: int) -> List[List[T]]:
    """把序列切成至多 parts 个连续块，保持原顺序"""
    items = list(items)
    parts = max(1, min(parts, len(items)))
    size, extra = divmod(len(items), parts)
    chunks = []
    start = 0
    for k in range(parts):
        end = start + size + (1 if k < extra else 0)
        chunks.append(items[start:end])
        start = end
    return chunks


def run_partitioned(
    worker: Callable[[Any, List[T]], R],
    context: Any,
    items: Sequence[T],
    jobs: int = 1,
) -> List[R]:
    """
    按块执行 worker(context, chunk)

    Args:
        worker: 模块级函数
        context: 所有块共享的只读上下文
        items: 待枚举的条目
        jobs: 进程数，<= 1 时在当前进程顺序执行

    Returns:
        各块的结果，按块顺序排列
    """
    if jobs <= 1 or len(items) < 2:
        return [worker(context, list(items))]
    chunks = chunked(items, jobs)
    get_logger("parallel").debug("%d 个条目分成 %d 块并行执行", len(items), len(chunks))
    with ProcessPoolExecutor(max_workers=len(chunks)) as pool:
        futures = [pool.submit(worker, context, chunk) for chunk in chunks]
        return [f.result() for f in futures]
