"""CLI wrapper module for tilemm."""

import sys

from .__main__ import main

if __name__ == "__main__":
    sys.exit(main())
