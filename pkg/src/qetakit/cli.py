"""Batch command-line front end.

Subcommands::

    qetakit series <name> --order Q
    qetakit char --s S --t T --m M --n N --order Q [--form double|chi|product]
    qetakit verify <identity> [--k K | --s S --t T] --order Q
    qetakit verify suite [--manifest PATH | --max-st N] --order Q [--jobs J]

Orders are exact rationals (``p/q``).  Series are emitted in the text
interchange format; verification reports stream as one line each, or as a
single JSON document with ``--format structured``.  Exit status is 0 iff
every requested verification matched.  The ``QETAKIT_OUTPUT_DIR`` environment
variable relocates relative ``--output`` paths.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .eta import NAMED_SERIES, named_series
from .identities import (IDENTITY_NAMES, general_rhs, macdonald_rhs,
                         verify_identity)
from .minimal_models import (character_chi_form, character_double_sum,
                             character_product_2k1, make_model, weight_label)
from .rationals import rational
from .suite import adhoc_manifest, load_manifest, run_suite


class UsageError(Exception):
    pass


def _parse_order(text):
    try:
        return rational(text)
    except (ValueError, TypeError) as exc:
        raise UsageError(f"bad order {text!r}: {exc}") from None


def _resolve_output(path):
    if os.path.isabs(path):
        return path
    override = os.environ.get("QETAKIT_OUTPUT_DIR")
    return os.path.join(override, path) if override else path


def _emit(text, output):
    if output:
        path = _resolve_output(output)
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _cmd_series(args):
    series = named_series(args.name, _parse_order(args.order))
    _emit(series.to_text(), args.output)
    return 0


def _cmd_char(args):
    order = _parse_order(args.order)
    model = make_model(args.s, args.t)
    label = weight_label(model, args.m, args.n)
    if args.form == "double":
        series = character_double_sum(model, label, order)
    elif args.form == "chi":
        series = character_chi_form(model, label, order)
    else:
        if model.s != 2 or args.m != 1:
            raise UsageError("--form product needs s = 2 and m = 1")
        series = character_product_2k1(model.k, args.n, order)
    _emit(series.to_text(), args.output)
    return 0


def _report_params(args):
    params = {}
    if args.k is not None:
        params["k"] = args.k
    if args.s is not None:
        params["s"] = args.s
    if args.t is not None:
        params["t"] = args.t
    return params


def _structured_doc(version, reports, runtime):
    return json.dumps({
        "manifest_version": version,
        "reports": [r.to_dict() for r in reports],
        "runtime_seconds": round(runtime, 3),
    }, indent=2) + "\n"


def _window_audit(identity, order, params):
    """Re-enumerate lattice sums with padded windows; any change below the
    order bound signals a window-derivation bug and aborts the run."""
    if identity == "macdonald":
        plain = macdonald_rhs(params["k"], order)
        padded = macdonald_rhs(params["k"], order, window_pad=4)
    elif identity == "denominator":
        model = make_model(params["s"], params["t"])
        plain = general_rhs(model, order)
        padded = general_rhs(model, order, window_pad=4)
    else:
        raise UsageError("--window-audit applies to the lattice-sum "
                         "identities (macdonald, denominator)")
    if plain != padded:
        raise RuntimeError(f"window audit failed for {identity}: padded "
                           "enumeration changed coefficients below the order")


def _cmd_verify(args):
    started = time.monotonic()
    if args.identity == "suite":
        if args.manifest and args.max_st:
            raise UsageError("choose either --manifest or --max-st")
        if args.max_st:
            manifest = adhoc_manifest(args.max_st, _parse_order(args.order))
        else:
            manifest = load_manifest(args.manifest)
        reports = run_suite(manifest, jobs=args.jobs)
        version = manifest["version"]
        header = f"manifest={version}\n"
    else:
        params = _report_params(args)
        order = _parse_order(args.order)
        if args.window_audit:
            _window_audit(args.identity, order, params)
        reports = [verify_identity(args.identity, order=order, **params)]
        version = None
        header = ""
    runtime = time.monotonic() - started
    if args.format == "structured":
        _emit(_structured_doc(version, reports, runtime), args.output)
    else:
        _emit(header + "".join(r.to_line() + "\n" for r in reports),
              args.output)
    return 0 if all(r.match for r in reports) else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qetakit",
        description="Exact q-series builders and identity verification.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_series = sub.add_parser(
        "series", help="emit a named series in the text format")
    p_series.add_argument("name",
                          help=f"one of: {', '.join(NAMED_SERIES)}")
    p_series.add_argument("--order", default="20",
                          help="truncation order as a rational p/q")
    p_series.add_argument("--output", help="write to this file")
    p_series.set_defaults(func=_cmd_series)

    p_char = sub.add_parser("char", help="emit a minimal-model character")
    p_char.add_argument("--s", type=int, required=True)
    p_char.add_argument("--t", type=int, required=True)
    p_char.add_argument("--m", type=int, required=True)
    p_char.add_argument("--n", type=int, required=True)
    p_char.add_argument("--order", default="20")
    p_char.add_argument("--form", choices=("double", "chi", "product"),
                        default="double")
    p_char.add_argument("--output")
    p_char.set_defaults(func=_cmd_char)

    p_verify = sub.add_parser("verify", help="verify a named identity")
    p_verify.add_argument("identity",
                          choices=IDENTITY_NAMES + ("suite",))
    p_verify.add_argument("--k", type=int)
    p_verify.add_argument("--s", type=int)
    p_verify.add_argument("--t", type=int)
    p_verify.add_argument("--order", default="20")
    p_verify.add_argument("--format", choices=("text", "structured"),
                          default="text")
    p_verify.add_argument("--output")
    p_verify.add_argument("--manifest", help="suite manifest path")
    p_verify.add_argument("--max-st", type=int, dest="max_st",
                          help="generate the model-grid suite up to this s*t")
    p_verify.add_argument("--jobs", type=int, default=1,
                          help="parallel worker processes for suites")
    p_verify.add_argument("--window-audit", action="store_true",
                          dest="window_audit",
                          help="also re-enumerate lattice windows padded and "
                               "require identical coefficients")
    p_verify.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, RuntimeError, OSError) as exc:
        print(f"qetakit: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
