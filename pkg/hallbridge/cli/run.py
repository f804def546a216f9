"""Parser for hallbridge."""

import argparse

from .. import __version__
from ..blocks import SUPPORTED_CHECKS
from ..operations.modcat import ISO_SEARCH_CAP, SEED


def _common_parser():
    """Arguments shared by every sub-command."""
    parser = argparse.ArgumentParser(add_help=False)
    required = parser.add_argument_group("Required Arguments")
    required.add_argument(
        "fname",
        type=str,
        help=(
            "Complete path (absolute or relative) and name "
            "of the JSON file containing the algebra "
            "presentation (field size, vertices, arrows, "
            "relations)."
        ),
    )
    required.add_argument(
        "-md",
        "--max-dim",
        dest="max_dim",
        type=int,
        help="Bound on the total dimension of the enumerated modules.",
        required=True,
    )

    opt_search = parser.add_argument_group("Optional Arguments for exhaustive searches")
    opt_search.add_argument(
        "-b",
        "--budget",
        dest="budget",
        type=int,
        help=(
            "Cap on the number of candidates of every "
            "exhaustive search. Searches that would exceed "
            f"it stop with exit code 2. Default is {ISO_SEARCH_CAP}."
        ),
        default=ISO_SEARCH_CAP,
    )
    opt_search.add_argument(
        "-s",
        "--seed",
        dest="seed",
        type=int,
        help=(
            "The seed of random isomorphism candidates and "
            f"of sampled associativity triples. Default is {SEED}."
        ),
        default=SEED,
    )

    opt_out = parser.add_argument_group("Optional Arguments for output")
    opt_out.add_argument(
        "-odir",
        "--output-directory",
        dest="outdir",
        type=str,
        help=(
            "Output folder. If not specified, a folder "
            "named `hallbridge` is created next to the "
            "algebra file."
        ),
        default=None,
    )
    opt_out.add_argument(
        "-o",
        "--out",
        dest="outname",
        type=str,
        help=(
            "Name of the output JSON file. If it contains "
            "a folder, that folder is used as output folder."
        ),
        default=None,
    )

    optional = parser.add_argument_group("Other Optional Arguments")
    opt_logl = optional.add_mutually_exclusive_group()
    opt_logl.add_argument(
        "-debug",
        "--debug",
        dest="lgr_degree",
        action="store_const",
        const="debug",
        help="Print debugging info to log file.",
        default="info",
    )
    opt_logl.add_argument(
        "-quiet",
        "--quiet",
        dest="lgr_degree",
        action="store_const",
        const="quiet",
        help="Only print warnings to log file.",
        default="info",
    )
    optional.add_argument(
        "-h", "--help", action="help", help="Show this help message and exit"
    )
    return parser


def _get_parser():
    """Parse command line inputs for this function.

    Returns
    -------
    parser.parse_args() : argparse dict
    """
    parser = argparse.ArgumentParser(
        description=(
            "hallbridge, a tool to embed the twisted Ringel-Hall "
            "algebra of a finite dimensional algebra of global "
            "dimension at most 2 into the localized Hall algebra "
            "of 2-periodic complexes of projectives, and to verify "
            "the embedding by exact computation over finite fields.\n"
            f"Version {__version__}"
        ),
        add_help=False,
    )
    parser.add_argument(
        "-h", "--help", action="help", help="Show this help message and exit"
    )
    parser.add_argument(
        "-v", "--version", action="version", version=("%(prog)s " + __version__)
    )
    common = _common_parser()
    subparsers = parser.add_subparsers(dest="command", required=True)

    p_verify = subparsers.add_parser(
        "verify",
        parents=[common],
        add_help=False,
        help="Run the verification suite and write a JSON report.",
    )
    opt_checks = p_verify.add_argument_group(
        "Optional Arguments for verification",
        description=(
            "Use these flags to select which checks "
            "should be run. Note that the default "
            "behaviour is to run all checks."
        ),
    )
    opt_checks.add_argument(
        "-c",
        "--checks",
        dest="checks",
        type=str,
        help=(
            "Comma separated list of checks among "
            f"{', '.join(SUPPORTED_CHECKS)}. Default is all."
        ),
        default=None,
    )
    opt_checks.add_argument(
        "-w",
        "--workers",
        dest="workers",
        type=int,
        help="Number of threads used by the checks. Default is 1.",
        default=1,
    )
    opt_checks.add_argument(
        "--timings",
        dest="timings",
        action="store_true",
        help="Add wall times per phase to the report.",
        default=False,
    )

    p_table = subparsers.add_parser(
        "table",
        parents=[common],
        add_help=False,
        help="Export a table of structure constants as JSON.",
    )
    opt_table = p_table.add_argument_group("Optional Arguments for tables")
    opt_table.add_argument(
        "--which",
        dest="which",
        type=str,
        choices=("hall", "dh"),
        help=(
            "Table to export: products of module classes in the "
            'twisted Hall algebra ("hall") or products of their '
            'images in the localized Hall algebra ("dh"). '
            "Default is hall."
        ),
        default="hall",
    )

    subparsers.add_parser(
        "enumerate",
        parents=[common],
        add_help=False,
        help="Print the isomorphism classes of modules within the bound.",
    )
    return parser


if __name__ == "__main__":
    raise RuntimeError(
        "hallbridge/cli/run.py should not be run directly;\n"
        "Please `pip install` hallbridge and use the `hallbridge` command."
    )


"""
Copyright 2024, hallbridge developers.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
"""
