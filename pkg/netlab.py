"""
Dual 3-nets in PG(2, q)

Builds nets from the known families, checks their axioms, runs the theorem
validators on them and searches for small nets. Run ``python netlab.py -h``.
"""

import sys

from commands import main

if __name__ == "__main__":
    sys.exit(main())
