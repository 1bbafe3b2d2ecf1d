# main.py

import sys

from cli.commands import run


def start_cli():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    start_cli()
