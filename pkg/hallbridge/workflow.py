#!/usr/bin/env python3
"""
`hallbridge` main workflows and related functions.

The workflows are callable either as python functions, or (preferably)
in a shell session:
```shell
$ hallbridge --help
```
"""

import datetime
import logging
import os
import sys
import time

from . import _version, blocks, io, references, utils
from .due import due
from .errors import GlobalDimensionExceeded, HallbridgeError
from .objects import HallLab
from .operations import hall
from .operations.modcat import ISO_SEARCH_CAP, SEED

LGR = logging.getLogger(__name__)
LGR.setLevel(logging.INFO)


def _outdir(fname, outname, outdir):
    """Resolve the output folder from the input file and the output name."""
    if outdir is None:
        if outname is not None and os.path.split(outname)[0] != "":
            outdir = os.path.split(outname)[0]
        else:
            outdir = os.path.dirname(fname)
        if outdir == "" or outdir == "/":
            outdir = "."
        outdir = os.path.join(outdir, "hallbridge")
    return os.path.abspath(outdir)


def save_bash_call(fname, outdir, outname=None):
    """
    Save the bash call into file `hallbridge_call_<isotime>.sh`.

    Parameters
    ----------
    fname : str or os.PathLike
        The algebra file, used to place the output folder.
    outdir : str, os.PathLike, or None
        Output directory.
    outname : str, os.PathLike, or None, optional
        Output file name, used to place the output folder.
    """
    outdir = _outdir(fname, outname, outdir)
    log_path = os.path.join(outdir, "logs")
    os.makedirs(log_path, exist_ok=True)
    arg_str = " ".join(sys.argv[1:])
    isotime = datetime.datetime.now().strftime("%Y-%m-%dT%H%M%S")
    with open(os.path.join(log_path, f"hallbridge_call_{isotime}.sh"), "a") as f:
        f.write(f"#!bin/bash \nhallbridge {arg_str}")


def _start_logging(outdir, lgr_degree):
    """Set up the log file and the stream handler; return the file handler."""
    log_path = os.path.join(outdir, "logs")
    os.makedirs(log_path, exist_ok=True)
    isotime = datetime.datetime.now().strftime("%Y-%m-%dT%H%M%S")
    logname = os.path.join(log_path, f"hallbridge_{isotime}.tsv")

    log_formatter = logging.Formatter(
        "%(asctime)s\t%(name)-12s\t%(levelname)-8s\t%(message)s",
        datefmt="%Y-%m-%dT%H:%M:%S",
    )
    log_handler = logging.FileHandler(logname)
    log_handler.setFormatter(log_formatter)
    sh = logging.StreamHandler()

    if lgr_degree == "quiet":
        level = logging.WARNING
    elif lgr_degree == "debug":
        level = logging.DEBUG
    else:
        level = logging.INFO
    logging.basicConfig(
        level=level,
        handlers=[log_handler, sh],
        format="%(levelname)-10s %(message)s",
        force=True,
    )
    LGR.info(f"Currently running hallbridge version {_version.__version__}")
    return log_handler


def _stop_logging(log_handler):
    logging.getLogger().removeHandler(log_handler)
    log_handler.close()


def _outname(outdir, outname, default):
    if outname is None:
        return os.path.join(outdir, default)
    if os.path.split(outname)[0] == "":
        return os.path.join(outdir, outname)
    return outname


@due.dcite(references.BRIDGELAND_2013)
@due.dcite(references.RINGEL_1990)
def verify(
    fname,
    max_dim,
    checks=None,
    budget=ISO_SEARCH_CAP,
    workers=1,
    outname=None,
    outdir=None,
    seed=SEED,
    timings=False,
    lgr_degree="info",
):
    """
    Run the verification suite on an algebra and write a JSON report.

    Parameters
    ----------
    fname : str or os.PathLike
        Path to the JSON presentation of the algebra.
    max_dim : int
        Bound on the total dimension of enumerated modules.
    checks : str, list of str, or None, optional
        Checks to run (see `blocks.SUPPORTED_CHECKS`). All if None.
    budget : int, optional
        Cap on every exhaustive search.
    workers : int, optional
        Number of threads.
    outname : str, os.PathLike, or None, optional
        Report file name. Default is ``report.json`` in `outdir`.
    outdir : str, os.PathLike, or None, optional
        Output folder. Default is a folder ``hallbridge`` next to `fname`.
    seed : int, optional
        Seed of random isomorphism candidates and sampled triples.
    timings : bool, optional
        If True, add wall times per phase to the report.
    lgr_degree : 'debug', 'info', or 'quiet', optional
        The degree of verbosity of the logger. Default is 'info'.

    Returns
    -------
    int
        0 if every check passed, 1 if a counterexample was found, 2 if the
        global dimension exceeds 2.

    Raises
    ------
    NotImplementedError
        If a check is not supported.
    hallbridge.errors.HallbridgeError
        On invalid inputs or exhausted budgets.
    """
    outdir = _outdir(fname, outname, outdir)
    log_handler = _start_logging(outdir, lgr_degree)
    try:
        names = utils.parse_checks(checks, blocks.SUPPORTED_CHECKS)
        LGR.info(f"Checks to run: {names}")
        lab = HallLab.from_file(fname, max_dim, budget=budget, seed=seed,
                                workers=workers)
        report = {
            "algebra": lab.fingerprint,
            "q": lab.q,
            "bound": lab.max_total_dim,
            "seed": seed,
        }
        walls = {}

        start = time.perf_counter()
        lab.build_basis()
        try:
            lab.certify_gldim()
        except GlobalDimensionExceeded as err:
            LGR.error(str(err))
            report.update({
                "gldim": None,
                "checks": [{"name": "gldim", "outcome": "global_dimension_exceeded",
                            "pairs_tested": 0, "failures": [str(err)]}],
                "passed": False,
            })
            io.export_json(report, _outname(outdir, outname, "report.json"))
            return err.exit_code
        lab.enumerate()
        walls["setup"] = time.perf_counter() - start
        LGR.info(f"Setup done in {walls['setup']:.2f}s: {len(lab.classes)} classes.")

        results = []
        for name in names:
            start = time.perf_counter()
            results.append(blocks.CHECKS[name](lab))
            walls[name] = time.perf_counter() - start
            LGR.info(f"Check {name} done in {walls[name]:.2f}s.")
        LGR.debug(f"Memo entries: {lab.ctx.memo_size()}, complex classes: "
                  f"{len(lab.ctx.store)}")

        passed = all(result.passed for result in results)
        report.update({
            "gldim": lab.gldim,
            "n_classes": len(lab.classes),
            "pairs_tested": {r.name: r.pairs_tested for r in results},
            "checks": [
                r.to_dict(lab.label, lab.ctx.store.canonical) for r in results
            ],
            "passed": passed,
        })
        if timings:
            report["timings"] = {k: round(v, 3) for k, v in walls.items()}
        io.export_json(report, _outname(outdir, outname, "report.json"))
        if passed:
            LGR.info("All checks passed.")
        else:
            LGR.warning("Some checks failed, see the report for counterexamples.")
        LGR.info(f"End of workflow, find results in {outdir}.")
        return 0 if passed else 1
    finally:
        _stop_logging(log_handler)


def table(
    fname,
    max_dim,
    which="hall",
    budget=ISO_SEARCH_CAP,
    outname=None,
    outdir=None,
    seed=SEED,
    lgr_degree="info",
):
    """
    Export the structure constants over the enumerated basis as JSON.

    Parameters
    ----------
    fname : str or os.PathLike
        Path to the JSON presentation of the algebra.
    max_dim : int
        Bound on the total dimension of enumerated modules.
    which : 'hall' or 'dh', optional
        ``hall`` tabulates ``[A] * [C]`` on in-bound pairs, ``dh`` tabulates
        ``E_A * E_C`` on all pairs.
    budget : int, optional
        Cap on every exhaustive search.
    outname, outdir : str, os.PathLike, or None, optional
        Output file and folder, as in `verify`.
    seed : int, optional
        Seed of random isomorphism candidates.
    lgr_degree : 'debug', 'info', or 'quiet', optional
        The degree of verbosity of the logger.

    Returns
    -------
    0
        If there are no errors.

    Raises
    ------
    NotImplementedError
        If `which` is not supported.
    """
    if which not in ("hall", "dh"):
        raise NotImplementedError(
            f"Table {which} is not supported. Supported tables are: ('hall', 'dh')"
        )
    outdir = _outdir(fname, outname, outdir)
    log_handler = _start_logging(outdir, lgr_degree)
    try:
        lab = HallLab.from_file(fname, max_dim, budget=budget, seed=seed).enumerate()
        ctx = lab.ctx
        rows = []
        if which == "hall":
            for a, c in hall.in_bound_pairs(ctx):
                rows.append({"left": lab.label(a), "right": lab.label(c),
                             "terms": io.element_to_list(lab.hall_product(a, c),
                                                         lab.label)})
        else:
            for a in lab.classes:
                for c in lab.classes:
                    rows.append({"left": lab.label(a), "right": lab.label(c),
                                 "terms": hall.dh_mul(ctx, lab.e(a), lab.e(c))})
            # complex ids settle once every product is known
            for row in rows:
                row["terms"] = io.element_to_list(row["terms"],
                                                  complexes=ctx.store.canonical)
        LGR.info(f"Tabulated {len(rows)} products.")
        io.export_json(
            {"algebra": lab.fingerprint, "q": lab.q, "bound": lab.max_total_dim,
             "which": which, "entries": rows},
            _outname(outdir, outname, f"table_{which}.json"),
        )
        return 0
    finally:
        _stop_logging(log_handler)


def enumerate_classes(
    fname,
    max_dim,
    budget=ISO_SEARCH_CAP,
    outname=None,
    outdir=None,
    seed=SEED,
    lgr_degree="info",
):
    """
    Print the isomorphism classes of modules up to a total dimension.

    Every class is printed with its label, dimension vector and arrow
    matrices. If `outname` is given, they are also written as JSON.

    Returns
    -------
    0
        If there are no errors.
    """
    outdir = _outdir(fname, outname, outdir)
    log_handler = _start_logging(outdir, lgr_degree)
    try:
        lab = HallLab.from_file(fname, max_dim, budget=budget, seed=seed).build_basis()
        universe = lab.enumerate().universe
        arrows = [a.name for a in lab.alg.arrows]
        listing = []
        for cid in universe:
            rep = universe.representative(cid)
            mats = {name: mat.tolist() for name, mat in zip(arrows, rep.mats)}
            listing.append({"label": universe.label(cid),
                            "dim_vector": list(rep.dim_vector), "arrows": mats})
            print(f"{universe.label(cid)}\t{list(rep.dim_vector)}\t{mats}")
        if outname is not None:
            io.export_json({"algebra": lab.fingerprint, "q": lab.q,
                            "bound": lab.max_total_dim, "classes": listing},
                           _outname(outdir, outname, "classes.json"))
        return 0
    finally:
        _stop_logging(log_handler)


def _main(argv=None):
    from .cli.run import _get_parser

    options = vars(_get_parser().parse_args(argv))
    command = options.pop("command")
    save_bash_call(options["fname"], options["outdir"], options["outname"])
    func = {"verify": verify, "table": table, "enumerate": enumerate_classes}[command]
    try:
        return func(**options)
    except (HallbridgeError, NotImplementedError, FileNotFoundError) as err:
        LGR.error(f"{type(err).__name__}: {err}")
        return getattr(err, "exit_code", 2)


if __name__ == "__main__":
    sys.exit(_main(sys.argv[1:]))


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
