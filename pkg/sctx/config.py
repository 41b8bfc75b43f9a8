"""
*** SCTX: simplicial distributions and contextuality ***
License GNU GPL version 3 (See LICENSE)

config.py: run-wide options

"""
import os
import pathlib


class GlobalInfo:
    def __init__(self):
        # enumeration guards
        self.labeling_cap = 2**20
        self.coordinate_cap = 40
        # sampling
        self.samples = 200
        self.seed = 0
        # command-line options
        self.out = None
        self.timing = False
        self.progress = False
        self.options = None
        self.init_caps()
        self.init_directories()

    def init_caps(self):
        """SCTX_CAP=<labelings> or SCTX_CAP=<labelings>:<coordinates>"""
        value = os.environ.get("SCTX_CAP")
        if not value:
            return
        labelings, _, coords = value.partition(":")
        if labelings:
            self.labeling_cap = int(labelings)
        if coords:
            self.coordinate_cap = int(coords)

    def init_directories(self):
        sctx_directory = pathlib.Path(__file__).resolve().parent
        self.sysdir = sctx_directory
        self.sctx_resources = sctx_directory / "resources"
        self.sctx_scenarios = self.sctx_resources / "scenarios"
        self.sctx_dists = self.sctx_resources / "dists"
        self.sctx_families = self.sctx_resources / "families"
        self.sctx_collections = self.sctx_resources / "collections"


gx = GlobalInfo()


def labeling_cap(cap=None):
    return gx.labeling_cap if cap is None else cap


def coordinate_cap(cap=None):
    return gx.coordinate_cap if cap is None else cap
