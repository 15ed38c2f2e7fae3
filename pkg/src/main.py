#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Program entry point
"""

import logging
import os
import sys

# Add the project root to the Python path
current_dir = os.path.dirname(os.path.abspath(__file__))
project_root = os.path.dirname(current_dir)
sys.path.insert(0, project_root)

from src.controllers.cli_controller import CliController  # noqa: E402


def main(argv=None) -> int:
    """Configure logging and run the command line

    Args:
        argv (list, optional): Arguments, sys.argv[1:] by default

    Returns:
        int: Exit code
    """
    logging.basicConfig(format="%(asctime)s %(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    return CliController().run(argv)


if __name__ == "__main__":
    sys.exit(main())
