"""Batch verification suites driven by versioned manifests.

A manifest is a JSON document ``{"version": ..., "jobs": [...]}`` where each
job names an identity, its integer parameters and a truncation order.  Orders
that would leave nothing to compare (the request does not exceed the
identity's leading exponent) are raised to two units past that exponent, so
every report in a suite is a non-vacuous check; the report records the order
actually used.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from importlib import resources

from .identities import identity_lowest_exponent, verify_identity
from .minimal_models import coprime_models
from .rationals import rat_str, rational

MODEL_IDENTITIES = ("denominator", "wronskian_raw", "wronskian_normalized")


def adjusted_order(name, order, **params):
    """The requested order, raised when it would make the check vacuous."""
    order = rational(order)
    base = identity_lowest_exponent(name, **params)
    if order > base:
        return order
    return base + 2


def model_grid_jobs(max_st, order):
    """One job per model per identity family over the s*t <= max_st grid."""
    jobs = []
    for model in coprime_models(max_st):
        for name in MODEL_IDENTITIES:
            used = adjusted_order(name, order, s=model.s, t=model.t)
            jobs.append({"identity": name,
                         "params": {"s": model.s, "t": model.t},
                         "order": rat_str(used)})
    return jobs


def adhoc_manifest(max_st, order):
    """Manifest for the model-grid families generated from CLI arguments."""
    return {"version": f"adhoc-maxst{int(max_st)}-order{rat_str(rational(order))}",
            "jobs": model_grid_jobs(int(max_st), order)}


def default_manifest_text():
    """The manifest shipped with the package, as raw JSON text."""
    return resources.files("qetakit").joinpath(
        "data/suite_manifest.json").read_text(encoding="utf-8")


def load_manifest(path=None):
    """Load and validate a manifest from ``path`` (or the shipped default)."""
    if path is None:
        text = default_manifest_text()
    else:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    doc = json.loads(text)
    if not isinstance(doc, dict) or "version" not in doc or "jobs" not in doc:
        raise ValueError("manifest must be an object with 'version' and 'jobs'")
    for job in doc["jobs"]:
        if "identity" not in job or "order" not in job:
            raise ValueError(f"malformed manifest job: {job!r}")
    return doc


def run_job(job):
    """Run a single manifest job and return its report."""
    params = {key: int(value) for key, value in (job.get("params") or {}).items()}
    order = adjusted_order(job["identity"], rational(job["order"]), **params)
    return verify_identity(job["identity"], order=order, **params)


def run_suite(manifest, jobs=1):
    """Run every job of a manifest, in manifest order.

    Verifications are independent pure computations; with ``jobs > 1`` they
    run in worker processes, with the output order still following the
    manifest.
    """
    entries = manifest["jobs"]
    if jobs <= 1 or len(entries) <= 1:
        return [run_job(job) for job in entries]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(run_job, entries))
