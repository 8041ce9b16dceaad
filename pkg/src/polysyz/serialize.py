"""JSON interchange with exact fraction strings (never floating point)."""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction
from typing import Any, Dict, List

from .errors import DegenerateInput
from .koszul import BettiTable, NpVerdict
from .lattice import LatticePolytope, normalize_full_dim
from .normality import NormalityReport


def frac_str(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_frac(s: str) -> Fraction:
    return Fraction(s)


def polytope_from_json(data: Any) -> LatticePolytope:
    """Parse {"vertices": [[int,...],...]} and normalize to full dimension."""
    if not isinstance(data, dict) or "vertices" not in data:
        raise DegenerateInput('polytope JSON must be {"vertices": [[int,...],...]}')
    verts = data["vertices"]
    if not isinstance(verts, list) or not verts:
        raise DegenerateInput("vertices must be a nonempty list")
    pts = []
    for v in verts:
        if not isinstance(v, list) or not all(isinstance(c, int) for c in v):
            raise DegenerateInput(f"bad vertex {v!r}: expected a list of ints")
        pts.append(tuple(v))
    if len({len(p) for p in pts}) != 1:
        raise DegenerateInput("vertices of mixed dimension")
    return normalize_full_dim(pts)


def polytope_to_json(P: LatticePolytope) -> Dict[str, Any]:
    return {"vertices": [list(v) for v in P.vertices]}


def load_polytope(path: str) -> LatticePolytope:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DegenerateInput(f"invalid JSON in {path}: {exc}") from exc
    return polytope_from_json(data)


def ehrhart_to_json(h) -> Dict[str, Any]:
    return {"coeffs": [frac_str(c) for c in h.coeffs], "degree": h.degree}


def normality_to_json(rep: NormalityReport) -> Dict[str, Any]:
    out: Dict[str, Any] = {"normal": rep.normal, "checked_up_to": rep.checked_up_to}
    if rep.witness is not None:
        point, m = rep.witness
        out["witness"] = {"point": list(point), "m": m}
    else:
        out["witness"] = None
    return out


def betti_to_json(table: BettiTable) -> Dict[str, Any]:
    return {
        "window": {"max_i": table.max_i, "max_slope": table.max_slope},
        "entries": {
            f"{i},{j}": v for (i, j), v in sorted(table.entries.items())
        },
    }


def betti_text_table(table: BettiTable) -> str:
    """Aligned text table: rows = slope j - i, columns = i."""
    cols = range(table.max_i + 1)
    lines = []
    header = ["slope\\i"] + [str(i) for i in cols]
    rows = []
    for s in range(table.max_slope + 1):
        row = [str(s)] + [
            str(table.get(i, i + s)) if table.get(i, i + s) else "."
            for i in cols
        ]
        rows.append(row)
    widths = [max(len(r[k]) for r in [header] + rows) for k in range(len(header))]
    for r in [header] + rows:
        lines.append("  ".join(cell.rjust(w) for cell, w in zip(r, widths)))
    return "\n".join(lines)


def verdicts_to_json(verdicts: List[NpVerdict]) -> List[Dict[str, Any]]:
    out = []
    for v in verdicts:
        entry: Dict[str, Any] = {"p": v.p, "status": v.status}
        if v.certificate is not None:
            entry["certificate"] = list(v.certificate)
        if v.bound is not None:
            entry["bound"] = v.bound
        if v.criterion is not None:
            entry["criterion"] = v.criterion
        out.append(entry)
    return out


def criterion_to_json(res) -> Dict[str, Any]:
    return {
        "criterion": res.criterion,
        "inputs": res.inputs,
        "guaranteed_p": res.guaranteed_p,
        "threshold": list(res.threshold)
        if isinstance(res.threshold, tuple)
        else res.threshold,
    }


def canonical_key(obj: Any) -> bytes:
    """Stable bytes for cache keys and prime derivation."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")).encode()


def content_hash(obj: Any) -> str:
    return hashlib.sha256(canonical_key(obj)).hexdigest()


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"
