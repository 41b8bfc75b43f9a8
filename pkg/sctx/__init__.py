"""
*** SCTX: simplicial distributions and contextuality ***
License GNU GPL version 3 (See LICENSE)

"""

import argparse
import logging
import sys

from . import bell, cone, config, error, factory, fileio, log, polytope, scenario, utils

__version__ = "0.3.0"

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INVALID = 2
EXIT_USAGE = 64


class SctxArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


DET_EXAMPLES = ("three-way", "odd", "remark")
AVG_EXAMPLES = ("diagonal",)


class Sctx:
    """Main sctx frontend class
    """
    def __init__(self, options):
        self.configure_log()
        error.clear()
        self.gx = self.configure(options)
        self.gx.options = options
        self.report = fileio.RunReport(
            ["sctx"] + list(getattr(options, "argv", [])),
            seed=self.gx.seed if options.subcmd == "bell" else None,
            timing=self.gx.timing,
        )

    def configure_log(self):
        # silent -> WARNING only, debug -> DEBUG, default -> INFO
        self.log = log.config_log(debug=False, colour=sys.stderr.isatty(), stream=sys.stderr)

    def configure(self, args):
        gx = config.GlobalInfo()

        if args.debug:
            self.log.setLevel(logging.DEBUG)

        if args.silent:
            self.log.setLevel(logging.WARNING)

        if args.out:
            gx.out = args.out

        if args.timing:
            gx.timing = True

        if args.progress:
            gx.progress = True

        if getattr(args, "seed", None) is not None:
            gx.seed = args.seed

        if getattr(args, "samples", None) is not None:
            gx.samples = args.samples

        config.gx = gx
        return gx

    # --- inputs

    def scenario(self):
        path = self.gx.options.scenario
        if path is None:
            raise error.ValidationError([error.Violation("--scenario", "required")], what="arguments")
        self.report.add_input(path, "scenarios")
        return fileio.parse_scenario_file(path)

    def dist(self, x):
        path = self.gx.options.dist
        if path is None:
            raise error.ValidationError([error.Violation("--dist", "required")], what="arguments")
        self.report.add_input(path, "dists")
        return fileio.parse_sdist_file(path, x, self.gx.options.m)

    def modulus(self):
        m = self.gx.options.m
        if m is None:
            raise error.ValidationError([error.Violation("--m", "required")], what="arguments")
        return m

    def family(self):
        name = self.gx.options.family
        if name != "chsh":
            self.report.add_input(name, "families")
        return fileio.parse_family(name)

    def collection(self):
        opts = self.gx.options
        if opts.input:
            self.report.add_input(opts.input, "collections")
            return fileio.parse_collection_file(opts.input)
        m = opts.m or 3
        example = opts.example or "three-way"
        if example == "three-way":
            return factory.three_way_collection()
        if example == "odd":
            return factory.example_det_collection(m)
        if example == "remark":
            return factory.remark_det_collection()
        return factory.diagonal_avg_collection(m)

    # --- scenario

    def scenario_new(self):
        opts = self.gx.options
        if opts.kind == "point":
            x = scenario.point()
        elif opts.kind == "line":
            x = scenario.build_line(opts.n)
        else:
            x = scenario.build_cycle(opts.n)
        fileio.write(fileio.scenario_to_json(x), self.gx.out)

    def scenario_cone(self):
        x = scenario.cone(self.scenario(), cone_point=self.gx.options.cone_point)
        fileio.write(fileio.scenario_to_json(x), self.gx.out)

    def scenario_suspend(self):
        x = scenario.suspension(self.scenario())
        fileio.write(fileio.scenario_to_json(x), self.gx.out)

    def scenario_validate(self):
        x = self.scenario()
        self.report["valid"] = True
        self.report["name"] = x.name
        self.report["generators"] = x.generators()
        self.report["connected"] = scenario.is_connected(x)
        self.report.write(self.gx.out)

    # --- dist

    def dist_validate(self):
        x = self.scenario()
        p = self.dist(x)
        self.report["valid"] = True
        self.report["m"] = p.m
        self.report.write(self.gx.out)

    def dist_contextual(self):
        x = self.scenario()
        cert = polytope.is_noncontextual(self.dist(x))
        self.report["verdict"] = cert.verdict
        self.report["certificate"] = fileio.certificate_to_json(cert)
        self.report.write(self.gx.out)

    def dist_vertex(self):
        x = self.scenario()
        self.report["vertex"] = fileio.vertex_report_to_json(polytope.is_vertex(self.dist(x)))
        self.report.write(self.gx.out)

    def dist_decompose(self):
        x = self.scenario()
        p = self.dist(x)
        if len(x.cones) == 1:
            point = cone.cone_decompose(p)
            self.report["join"] = fileio.join_to_json(point)
            self.report["components"] = [
                None if comp is None else polytope.is_noncontextual(comp).verdict for comp in point.components()
            ]
        elif len(x.cones) == 2:
            sp = cone.suspension_decompose(p)
            verdict = cone.suspension_noncontextuality_lp(sp)
            self.report["suspension"] = fileio.suspension_point_to_json(sp)
            self.report["verdict"] = polytope.NONCONTEXTUAL if verdict.noncontextual else polytope.CONTEXTUAL
        else:
            raise error.MismatchError(f"{x.name} is neither a cone nor a suspension")
        self.report.write(self.gx.out)

    # --- polytope

    def polytope_vertices(self):
        x = self.scenario()
        m = self.modulus()
        vertices = polytope.enumerate_vertices(x, m)
        noncontextual, contextual = polytope.classify_vertices(x, m, vertices=vertices)
        self.report["count"] = len(vertices)
        self.report["noncontextual"] = len(noncontextual)
        self.report["contextual"] = len(contextual)
        self.report["vertices"] = fileio.vertices_to_json(vertices)
        self.report.write(self.gx.out)

    def polytope_vsupp(self):
        x = self.scenario()
        vertices = polytope.vsupp(self.dist(x))
        self.report["count"] = len(vertices)
        self.report["vertices"] = fileio.vertices_to_json(vertices)
        self.report.write(self.gx.out)

    # --- bell

    def bell_family(self):
        fileio.write(fileio.family_to_json(self.family(), self.gx.options.family), self.gx.out)

    def bell_lift(self):
        opts = self.gx.options
        x = self.scenario() if opts.scenario else None
        lifted = bell.lift_to_cone(self.family(), self.modulus(), x)
        fileio.write(fileio.family_to_json(lifted, f"cone({opts.family})"), self.gx.out)

    def bell_evaluate(self):
        x = self.scenario()
        p = self.dist(x)
        rows = []
        for ineq in self.family():
            lhs, satisfied = bell.evaluate(ineq, p)
            rows.append({"name": ineq.name, "lhs": utils.rat_str(lhs), "satisfied": satisfied})
        self.report["evaluations"] = rows
        self.report["satisfies"] = all(row["satisfied"] for row in rows)
        self.report.write(self.gx.out)

    def bell_check(self):
        x = self.scenario()
        result = bell.verify_characterization(
            x, self.modulus(), self.family(), progress=self.gx.progress)
        self.report["passed"] = result.passed
        self.report["vertices"] = result.vertices
        self.report["noncontextual_vertices"] = result.noncontextual_vertices
        self.report["contextual_vertices"] = result.contextual_vertices
        self.report["samples"] = result.samples
        self.report["counterexamples"] = [reason for reason, _ in result.counterexamples]
        self.report.write(self.gx.out)

    # --- factory

    def factory_validate_collection(self):
        c = self.collection()
        if isinstance(c, factory.AvgCollection):
            violations = factory.validate_avg_collection(c)
        else:
            violations = factory.validate_det_collection(c)
        self.report["collection"] = fileio.collection_to_json(c)
        self.report["valid"] = not violations
        self.report["violations"] = [str(v) for v in violations]
        self.report.write(self.gx.out)
        error.raise_if(violations, what="collection")

    def factory_suspension_vertex(self):
        opts = self.gx.options
        if opts.input:
            self.report.add_input(opts.input)
            kind, inputs = fileio.construction_from_json(fileio.load_json(opts.input))
            build = factory.build_suspension_vertex_det if kind == "det" else factory.build_suspension_vertex_avg
            p, result = build(*inputs)
        elif opts.example == "pr-box":
            p, result = factory.pr_box_vertex()
        elif opts.example == "line-det":
            p, result = factory.line_det_vertex(opts.m or 3)
        else:
            p, result = factory.three_way_vertex()
        self.report["construction"] = result.construction
        self.report["is_vertex"] = result.is_vertex
        self.report["rank"] = result.rank
        self.report["n"] = result.n
        self.report["contextual"] = result.contextual
        self.report["suspension_lp_contextual"] = result.suspension_lp_contextual
        if result.h is not None:
            self.report["h"] = result.h
        self.report["collection"] = fileio.collection_to_json(result.collection)
        self.report["dist"] = fileio.sdist_to_json(p)
        self.report.write(self.gx.out)

    # --- solve

    def solve_uniqueness(self):
        opts = self.gx.options
        if opts.all_avg:
            collections = factory.enumerate_avg_collections(opts.m or 2)
        else:
            collections = [self.collection()]
        rows = []
        for c in collections:
            result = factory.collection_uniqueness_solve(c)
            rows.append({
                "collection": fileio.collection_to_json(c),
                "nullspace_dim": result.nullspace_dim,
                "unique": result.unique,
                "uniform": result.uniform,
                "solution": None if result.solution is None else [utils.rat_str(v) for v in result.solution],
            })
        self.report["solutions"] = rows
        self.report["all_unique_uniform"] = all(row["unique"] and row["uniform"] for row in rows)
        self.report.write(self.gx.out)

    def execute(self):
        opts = self.gx.options
        handler = getattr(self, f"{opts.subcmd}_{opts.action.replace('-', '_')}")
        try:
            handler()
        except error.ValidationError as e:
            self.log.error("%s failed", e.what)
            for violation in e.violations:
                error.error(violation, warning=True)
            error.print_errors()
            return EXIT_INVALID
        except (error.HypothesisError, error.ParseError) as e:
            self.log.error("%s", e)
            if isinstance(e, error.HypothesisError):
                for failure in e.failures:
                    self.log.error("  %s", failure)
            return EXIT_INVALID
        except error.SctxError as e:
            self.log.error("%s", e)
            return EXIT_ERROR
        except Exception:
            self.log.exception("internal error")
            return EXIT_ERROR
        return EXIT_OK

    @classmethod
    def commandline(cls, bypassargs=None):
        """command line api; returns the exit code
        """
        argv = list(sys.argv[1:] if bypassargs is None else bypassargs)

        # --- command-line options
        common = SctxArgumentParser(add_help=False)
        opt = common.add_argument

        opt("-o", "--out",        help="Write the result to this file instead of stdout")
        opt("-s", "--silent",     help="Silent mode, only show warnings", action="store_true")
        opt("-d", "--debug",      help="Show debug output", action="store_true")
        opt("--progress",         help="Show a progress bar while sampling", action="store_true")
        opt("--timing",           help="Include elapsed time in the report", action="store_true")
        opt("--scenario",         help="Scenario JSON file (or shipped name)")
        opt("--dist",             help="Distribution JSON file (or shipped name)")
        opt("--m",                help="Outcome modulus", type=int)

        parser = SctxArgumentParser(
            prog = 'sctx',
            description = 'Simplicial distributions, contextuality and Bell inequalities',
        )
        parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

        subparsers = parser.add_subparsers(
            title='subcommands',
            dest='subcmd')

        parser_scenario = subparsers.add_parser('scenario', help="build and check scenarios")
        actions = parser_scenario.add_subparsers(title='actions', dest='action')

        opt = actions.add_parser('new', parents=[common], help="cycle, line or point").add_argument
        opt("--kind",             help="Scenario kind (default: '%(default)s')", choices=["cycle", "line", "point"], default="cycle")
        opt("--n",                help="Number of edges (default: %(default)s)", type=int, default=4)

        opt = actions.add_parser('cone', parents=[common], help="cone on a scenario").add_argument
        opt("--cone-point",       help="Cone point id (default: '%(default)s')", default="c")

        actions.add_parser('suspend', parents=[common], help="suspension of a scenario")
        actions.add_parser('validate', parents=[common], help="check the simplicial identities")

        parser_dist = subparsers.add_parser('dist', help="simplicial distributions")
        actions = parser_dist.add_subparsers(title='actions', dest='action')
        actions.add_parser('validate', parents=[common], help="check a distribution")
        actions.add_parser('contextual', parents=[common], help="noncontextuality LP with certificate")
        actions.add_parser('vertex', parents=[common], help="active-constraint rank test")
        actions.add_parser('decompose', parents=[common], help="cone or suspension decomposition")

        parser_polytope = subparsers.add_parser('polytope', help="vertex enumeration")
        actions = parser_polytope.add_subparsers(title='actions', dest='action')
        actions.add_parser('vertices', parents=[common], help="all vertices of sDist(X)")
        actions.add_parser('vsupp', parents=[common], help="vertices under a distribution")

        parser_bell = subparsers.add_parser('bell', help="Bell inequalities")
        actions = parser_bell.add_subparsers(title='actions', dest='action')
        for name, text in (("family", "print a family"), ("lift", "lift a family to the cone"),
                           ("evaluate", "evaluate a family on a distribution"),
                           ("check", "does the family characterize noncontextuality")):
            opt = actions.add_parser(name, parents=[common], help=text).add_argument
            opt("--family",       help="'chsh' or a family JSON file (default: '%(default)s')", default="chsh")
            opt("--seed",         help="Sampling seed (default: %(default)s)", type=int, default=0)
            opt("--samples",      help="Number of random points (default: %(default)s)", type=int, default=200)

        parser_factory = subparsers.add_parser('factory', help="contextual suspension vertices")
        actions = parser_factory.add_subparsers(title='actions', dest='action')
        opt = actions.add_parser('validate-collection', parents=[common], help="check a complete collection").add_argument
        opt("--example",          help="Shipped collection", choices=DET_EXAMPLES + AVG_EXAMPLES)
        opt("--input",            help="Collection JSON file")
        opt = actions.add_parser('suspension-vertex', parents=[common], help="build and certify a vertex").add_argument
        opt("--example",          help="Worked example", choices=["three-way", "pr-box", "line-det"])
        opt("--input",            help="Construction JSON file")

        parser_solve = subparsers.add_parser('solve', help="exact linear systems")
        actions = parser_solve.add_subparsers(title='actions', dest='action')
        opt = actions.add_parser('uniqueness', parents=[common], help="uniqueness of the gluing weights").add_argument
        opt("--example",          help="Shipped collection", choices=DET_EXAMPLES + AVG_EXAMPLES)
        opt("--input",            help="Collection JSON file")
        opt("--all-avg",          help="Every average collection for --m", action="store_true")

        args = parser.parse_args(args=argv)
        if not args.subcmd or not getattr(args, "action", None):
            parser.error("missing subcommand")
        args.argv = argv

        sx = cls(args)
        sx.log.debug("*** SCTX %s ***", __version__)
        return sx.execute()
