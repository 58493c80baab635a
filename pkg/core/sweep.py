"""
按 r 并行扫描

结果按输入顺序返回，与各任务完成先后无关。
"""

from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, List, Optional, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def sweep(
    task: Callable[[T], R],
    items: Iterable[T],
    workers: int = 1,
    logger: Optional[Callable] = None,
) -> List[R]:
    """
    对 items 逐个执行 task

    Args:
        task: 模块级函数（多进程时需可 pickle）
        items: 任务参数，通常为 r 的序列
        workers: 进程数，1 表示在当前进程串行执行
        logger: 可选日志记录器

    Returns:
        List: 与 items 同序的结果
    """
    items = list(items)
    if workers <= 1 or len(items) <= 1:
        results = []
        for index, item in enumerate(items, 1):
            if logger:
                logger(f"计算第 {index}/{len(items)} 项", "DEBUG")
            results.append(task(item))
        return results

    if logger:
        logger(f"使用 {workers} 个进程并行计算 {len(items)} 项", "DEBUG")
    with ProcessPoolExecutor(max_workers=workers) as executor:
        return list(executor.map(task, items))
