"""
Report serialization with a stable key order.
"""
import json
import os
from typing import Dict

from .. import __version__
from .certify import CertificateReport

SCHEMA_KEYS = ("family", "sweep", "trad_field", "primes", "pairs")


def report_to_json(report: CertificateReport, header: Dict = None) -> str:
    """
    Schema keys first in their fixed order, then "meta" (seed, bounds, routes,
    anomalies, and the optional run header). Identical inputs give identical bytes.
    """
    data = report.to_dict()
    meta = dict(data.pop("meta"))
    meta["version"] = __version__
    if header:
        meta["run"] = dict(header)
    ordered = {key: data[key] for key in SCHEMA_KEYS}
    ordered["meta"] = meta
    return json.dumps(ordered, indent=2, ensure_ascii=False) + "\n"


def write_report(report: CertificateReport, path: str, header: Dict = None) -> str:
    """Write the report JSON; returns the text written."""
    text = report_to_json(report, header)
    parent = os.path.dirname(path)
    if parent:
        os.makedirs(parent, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(text)
    return text
