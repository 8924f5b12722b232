"""包内资源（config/、logs/）的路径解析。"""

from pathlib import Path

# utils/ 的上一级即 lis312 包目录
_PACKAGE_ROOT = Path(__file__).resolve().parent.parent


def get_abs_path(relative_path: str) -> str:
    """包内相对路径 → 绝对路径；传入绝对路径视为误用，抛 ValueError。"""
    if Path(relative_path).is_absolute():
        raise ValueError(f"需要包内相对路径，收到 {relative_path!r}")
    return str((_PACKAGE_ROOT / relative_path).resolve())


if __name__ == "__main__":
    for rel in ("config/engine.yml", "logs"):
        print(rel, "->", get_abs_path(rel))
