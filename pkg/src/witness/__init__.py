"""Scalar-curvature witness that a perturbed metric is not isometric to its base."""

from src.witness.scan import CurvatureScan, ScanGrid, curvature_scan
from src.witness.verdict import non_isometry_witness
