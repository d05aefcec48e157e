"""
Main entry point for arrangement-homotopy.
"""
import sys

from arrangement_homotopy.cli import main


if __name__ == "__main__":
    sys.exit(main())
