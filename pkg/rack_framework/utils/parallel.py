"""
并行分发工具
把相互独立的搜索子树分发到进程池，可选tqdm进度条
"""
import logging
import multiprocessing
from typing import Any, Callable, Iterable, List, Optional

from tqdm import tqdm

logger = logging.getLogger(__name__)

_BAR_FORMAT = '{l_bar}{bar}| {n_fmt}/{total_fmt} ({elapsed}<{remaining})'


def pbar(it: Iterable, total: Optional[int] = None, desc: Optional[str] = None,
         verbose: bool = False):
    """
    按需包装进度条

    Args:
        it: 要遍历的对象
        total: 总数
        desc: 进度条描述
        verbose: 是否显示进度条

    Returns:
        原迭代器或tqdm迭代器
    """
    if verbose:
        return tqdm(it, total=total, desc=desc, ncols=80, leave=False, bar_format=_BAR_FORMAT)
    return it


def apply_pool(func: Callable, arguments: Iterable[tuple], jobs: int = 1,
               desc: Optional[str] = None, show_progress: bool = False) -> List[Any]:
    """
    对每组参数调用func，结果顺序与参数顺序一致

    Args:
        func: 模块级函数（进程池需要可pickle）
        arguments: 参数元组序列
        jobs: 进程数，1表示在当前进程内顺序执行
        desc: 进度条描述
        show_progress: 是否显示进度条

    Returns:
        结果列表
    """
    arguments = list(arguments)
    if not arguments:
        return []

    if jobs <= 1 or len(arguments) == 1:
        return [func(*args) for args in pbar(arguments, len(arguments), desc, show_progress)]

    workers = min(jobs, len(arguments))
    logger.debug(f"进程池分发 {len(arguments)} 个子任务到 {workers} 个进程")
    with multiprocessing.Pool(processes=workers) as pool:
        results = pool.starmap(func, arguments)
    return results
