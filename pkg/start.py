#!/usr/bin/env python3
"""
galrep 启动脚本
与控制台脚本 galrep 相同，转发到 src.cli:main
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from src.cli import main  # noqa: E402

if __name__ == "__main__":
    main()
