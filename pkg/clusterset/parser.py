# -*- coding: utf-8 -*-
"""parse command line
"""
import argparse


DESCR = (u"Decide, certify and simulate cluster consensus "
         u"of finite sets of stochastic matrices.")


def add_common_args(subparser, input_required=True):
    """Options shared by every computing command"""
    if input_required:
        subparser.add_argument("--input", required=True,
                               help=u"JSON matrix-set document")
    subparser.add_argument("--config", help=u"option file (INI)")
    subparser.add_argument("-p", action='store_true', help=u"activate profiler")
    verbosity_parser = subparser.add_mutually_exclusive_group()
    verbosity_parser.add_argument("-v", action='count', help=u"increase verbosity")
    verbosity_parser.add_argument("-q", action='count', help=u"decrease verbosity")


arg_parser = argparse.ArgumentParser(prog='clusterset', description=DESCR)
subparsers = arg_parser.add_subparsers()

# check a matrix set and report assumptions
validate_parser = subparsers.add_parser("validate",
                                        help=u"validate a matrix set and report its assumptions")
add_common_args(validate_parser)
validate_parser.add_argument("--dot", metavar="DIR",
                             help=u"write the graph and condensation of each matrix as DOT files")

# decide the cluster consensus property
decide_parser = subparsers.add_parser("decide",
                                      help=u"decide whether a set is a cluster consensus set")
add_common_args(decide_parser)
decide_parser.add_argument("--state-budget", type=int, dest='state_budget',
                           help=u"maximum number of explored pair states")
decide_parser.add_argument("--witness", help=u"where to write the witness, if any")
decide_parser.add_argument("--necessary-only", action='store_true', dest='necessary_only',
                           help=u"skip assumption checks, never conclude positively")
decide_parser.add_argument("--window-length", type=int, dest='window_length',
                           help=u"decide on all products of that many consecutive matrices")
decide_parser.add_argument("--windows", nargs='+',
                           help=u"decide on the products of these comma-separated "
                                u"sequences, e.g. Qa,Qb Qb,Qa")

# check a witness
verify_parser = subparsers.add_parser("verify", help=u"verify a witness")
add_common_args(verify_parser)
verify_parser.add_argument("--witness", required=True, help=u"witness JSON document")

# run the dynamics
simulate_parser = subparsers.add_parser("simulate", help=u"simulate the switched dynamics")
add_common_args(simulate_parser)
simulate_parser.add_argument("--policy", default='random',
                             choices=['periodic', 'random', 'fixed', 'witness'],
                             help=u"switching policy")
simulate_parser.add_argument("--matrices", nargs='+',
                             help=u"matrix names for the periodic and fixed policies")
simulate_parser.add_argument("--witness", help=u"witness JSON document (witness policy)")
simulate_parser.add_argument("--x0", type=float, nargs='+',
                             help=u"initial state (default: random, or from the witness)")
simulate_parser.add_argument("--horizon", type=int, help=u"number of steps")
simulate_parser.add_argument("--eps", type=float, help=u"convergence threshold")
simulate_parser.add_argument("--seed", type=int, help=u"random seed")
simulate_parser.add_argument("--out", help=u"CSV trajectory file ('-' for stdout)")

# ergodicity coefficients
tau_parser = subparsers.add_parser("tau", help=u"ergodicity coefficients of matrices and products")
add_common_args(tau_parser)
tau_parser.add_argument("--matrices", nargs='+',
                        help=u"sequence P(1) ... P(t) (default: each matrix alone)")
tau_parser.add_argument("--order", default='forward', choices=['forward', 'backward'],
                        help=u"multiplication order of the prefix products")

# cross-validation
oracle_parser = subparsers.add_parser("oracle",
                                      help=u"cross-validate decisions against simulations")
add_common_args(oracle_parser, input_required=False)
oracle_parser.add_argument("--cases", type=int, help=u"number of random sets")
oracle_parser.add_argument("--n", type=int, help=u"number of agents")
oracle_parser.add_argument("--k", type=int, help=u"number of clusters")
oracle_parser.add_argument("--seed", type=int, help=u"random seed")
oracle_parser.add_argument("--jobs", type=int, help=u"number of worker processes")
oracle_parser.add_argument("--inject-bug", action='store_true', dest='inject_bug',
                           help=u"disable the liveness fixpoint (self-test)")

# write fixtures
fixtures_parser = subparsers.add_parser("fixtures", help=u"write fixture documents")
add_common_args(fixtures_parser, input_required=False)
fixtures_parser.add_argument("--out", required=True, help=u"output directory")
fixtures_parser.add_argument("--random", type=int, default=0,
                             help=u"also write that many random sets")
fixtures_parser.add_argument("--agents", type=int, default=4, help=u"agents of random sets")
fixtures_parser.add_argument("--clusters", type=int, default=2, help=u"clusters of random sets")
fixtures_parser.add_argument("--regime", default='A123', choices=['A123', 'A14'],
                             help=u"generator of random sets")
fixtures_parser.add_argument("--random-seed", type=int, default=0, dest="random_seed",
                             help=u"seed of the random sets")

# display version
version_parser = subparsers.add_parser("version",
                                       help=u"display software version number")
