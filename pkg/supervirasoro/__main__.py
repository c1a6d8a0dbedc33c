"""
命令行入口
"""
import sys
from supervirasoro.main import main

if __name__ == "__main__":
    sys.exit(main())
