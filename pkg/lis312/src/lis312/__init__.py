"""
lis312 顶层包：避开 312 与 τ 的排列按长度与最长递增子序列计数的生成函数 F_τ(x, q)。

说明：
- 确保可以通过 `python -m lis312.xxx` 的方式运行子模块的自检；
- 命令行入口见 `lis312.app:main`。
"""

__version__ = "0.1.0"
