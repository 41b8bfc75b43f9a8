"""
*** SCTX: simplicial distributions and contextuality ***
License GNU GPL version 3 (See LICENSE)

"""
import sys

from . import Sctx


def run():
    sys.exit(Sctx.commandline())


if __name__ == "__main__":
    run()
