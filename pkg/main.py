"""项目根目录入口点。

重定向到 gradualsemantics 包的主入口。
"""

from gradualsemantics.__main__ import main_sync

if __name__ == "__main__":
    main_sync()
