# discroot: explicit n-th roots of elliptic curve discriminants from torsion points
# Copyright 2026 The discroot Authors.
# SPDX-License-Identifier: Apache-2.0

"""Exact n-th roots of elliptic curve discriminants from torsion points.

The heavy lifting lives in the compiled extension; this package re-exports
the verification surface: curve enumeration, the suite runner, root and
calibration queries, the formal-series checks, and the isogeny sweep.
"""

from ._core import (
    CurveSpec,
    __version__,
    calibration,
    coates_sweep,
    curve_label,
    discriminant_roots,
    enumerate_curves,
    group_order,
    report_lines,
    run_suite,
    suite_names,
    tate_check,
)

__all__ = [
    "CurveSpec",
    "__version__",
    "calibration",
    "coates_sweep",
    "curve_label",
    "discriminant_roots",
    "enumerate_curves",
    "group_order",
    "report_lines",
    "run_suite",
    "suite_names",
    "tate_check",
]
