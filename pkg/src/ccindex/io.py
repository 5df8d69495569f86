"""Problem-specification files and machine-readable result records.

The input format is a JSON object with fields exactly
{n, d, alpha, masses, coordinates?}; census results are emitted as a JSON
array of records or as CSV with one row per class.  Floats serialize via
their shortest round-trip decimal representation, fields in a fixed order,
so emitting, parsing and re-emitting is byte-identical.
"""

import csv
import io as _io
import json
import logging
from dataclasses import dataclass
from typing import Any, Optional

import numpy as np

from .errors import SpecFileError
from .indices import TheoremReport
from .massgeometry import MassSystem
from .solver import CensusClass

logger = logging.getLogger(__name__)

SPEC_FIELDS = {"n", "d", "alpha", "masses", "coordinates"}

RECORD_FIELDS = [
    "class_id",
    "distance_vector",
    "chirality",
    "potential",
    "lambda",
    "morse_index",
    "kernel_dim",
    "orbit_dim",
    "fixed_point_index",
    "nondegenerate",
    "theorem_verified",
    "representative_coordinates",
]


@dataclass(frozen=True, eq=False)
class ProblemSpec:
    """A validated problem file: the mass system plus optional coordinates."""

    system: MassSystem
    coordinates: Optional[np.ndarray]


def load_problem_spec(path: str) -> ProblemSpec:
    """Parse and validate a problem JSON file.

    Masses are rescaled to sum to one; a warning is logged when the input
    sum is off by more than 1e-9.
    """
    try:
        with open(path) as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise SpecFileError("file", str(exc)) from exc
    except json.JSONDecodeError as exc:
        raise SpecFileError("file", f"invalid JSON: {exc}") from exc

    if not isinstance(raw, dict):
        raise SpecFileError("file", "top-level value must be an object")
    unknown = set(raw) - SPEC_FIELDS
    if unknown:
        raise SpecFileError(sorted(unknown)[0], "unknown field")
    for key in ("n", "d", "alpha", "masses"):
        if key not in raw:
            raise SpecFileError(key, "missing required field")
    n, d = raw["n"], raw["d"]
    if not isinstance(n, int) or n < 2:
        raise SpecFileError("n", "must be an integer >= 2")
    if not isinstance(d, int) or d < 1:
        raise SpecFileError("d", "must be an integer >= 1")
    alpha = raw["alpha"]
    if not isinstance(alpha, (int, float)) or isinstance(alpha, bool) or not alpha > 0:
        raise SpecFileError("alpha", "must be a positive number")
    masses = raw["masses"]
    if (
        not isinstance(masses, list)
        or len(masses) != n
        or not all(isinstance(m, (int, float)) and not isinstance(m, bool) for m in masses)
    ):
        raise SpecFileError("masses", f"must be a list of {n} numbers")
    if not all(m > 0 for m in masses):
        raise SpecFileError("masses", "must all be positive")
    total = float(sum(masses))
    if abs(total - 1.0) > 1e-9:
        logger.warning("masses sum to %.12g; rescaling to 1", total)

    coordinates = None
    if "coordinates" in raw and raw["coordinates"] is not None:
        coords = raw["coordinates"]
        ok = (
            isinstance(coords, list)
            and len(coords) == n
            and all(
                isinstance(row, list)
                and len(row) == d
                and all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in row)
                for row in coords
            )
        )
        if not ok:
            raise SpecFileError("coordinates", f"must be a list of {n} rows of {d} numbers")
        coordinates = np.array(coords, dtype=float)

    system = MassSystem(n=n, d=d, alpha=float(alpha), masses=np.array(masses, dtype=float))
    return ProblemSpec(system=system, coordinates=coordinates)


def census_record(class_id: int, cls: CensusClass, report: TheoremReport) -> dict[str, Any]:
    """Flatten one census class plus its verification into a record dict."""
    spectral = report.spectral
    return {
        "class_id": class_id,
        "distance_vector": list(cls.key.distance_vector),
        "chirality": cls.key.chirality,
        "potential": cls.potential,
        "lambda": cls.representative.lam,
        "morse_index": spectral.morse_index if spectral else None,
        "kernel_dim": spectral.kernel_dim if spectral else None,
        "orbit_dim": spectral.orbit_dim if spectral else None,
        "fixed_point_index": spectral.fixed_point_index if spectral else None,
        "nondegenerate": bool(spectral.nondegenerate) if spectral else False,
        "theorem_verified": report.passed is True,
        "representative_coordinates": [
            [float(x) for x in row] for row in cls.representative.q.points
        ],
    }


def records_to_json(records: list[dict[str, Any]]) -> str:
    return json.dumps(records, indent=2) + "\n"


def _csv_cell(value: Any) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return repr(value)
    if isinstance(value, (list, tuple)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def records_to_csv(records: list[dict[str, Any]]) -> str:
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(RECORD_FIELDS)
    for rec in records:
        writer.writerow([_csv_cell(rec[f]) for f in RECORD_FIELDS])
    return buf.getvalue()
