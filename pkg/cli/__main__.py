import sys

from cli.commands import run

sys.exit(run())
