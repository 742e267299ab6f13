# Entropic and conventional Bell inequalities for dichotomic variables.
# See `python bell_entropy.py --help` for the subcommands.

import sys

sys.path.append("./")
sys.path.append("../")

from src import cli

if __name__ == "__main__":
    sys.exit(cli.main())
