"""Loaders for the bundled datasets and for user-supplied JSON files.

Bundled files live in ``foxhom/data``; every loader takes an optional
``data_dir`` so an alternate (for instance, deliberately corrupted) copy of
the datasets can be pointed at.  Bundled names: rst, nb, amalgam, n-final,
constants, delta_L, alexander-reference, map-free-abelian,
map-infinite-cyclic, cover-job.
"""

from __future__ import annotations

import hashlib
import json
from importlib import resources
from pathlib import Path

from .fox import AbelianizationMap
from .laurent import LaurentPoly
from .polymat import LaurentMatrix
from .presentations import Presentation
from .words import parse_word

PRESENTATIONS = ("rst", "nb", "amalgam", "n-final")


def data_dir():
    """Directory holding the bundled data files."""
    return Path(resources.files("foxhom") / "data")


def data_path(name, dir=None):
    base = Path(dir) if dir is not None else data_dir()
    path = base / (name if name.endswith(".json") else f"{name}.json")
    if not path.exists():
        raise FileNotFoundError(f"no data file {path}")
    return path


def _load_json(name, dir=None):
    with open(data_path(name, dir)) as f:
        return json.load(f)


def file_digest(path):
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def load_presentation(name, dir=None):
    """A bundled presentation by name, or any presentation JSON by path."""
    p = Path(name)
    if p.suffix == ".json" and p.exists():
        with open(p) as f:
            return Presentation.from_json(json.load(f))
    return Presentation.from_json(_load_json(name, dir))


def load_poly(name, dir=None):
    p = Path(name)
    if p.suffix == ".json" and p.exists():
        with open(p) as f:
            return LaurentPoly.from_json(json.load(f))
    return LaurentPoly.from_json(_load_json(name, dir))


def load_map(name, source=None, dir=None):
    p = Path(name)
    if p.suffix == ".json" and p.exists():
        with open(p) as f:
            return AbelianizationMap.from_json(json.load(f), source=source)
    return AbelianizationMap.from_json(_load_json(name, dir), source=source)


def load_constants(dir=None):
    """The peripheral words, parsed over the generators that occur in them."""
    raw = _load_json("constants", dir)["words"]
    alphabet = ("f4", "g1", "g2", "m", "m1", "m2", "s", "t", "u")
    return {name: parse_word(text, alphabet) for name, text in raw.items()}


def load_reference(dir=None):
    """The transcribed reference matrix and its derived polynomials."""
    raw = _load_json("alexander-reference", dir)
    vars = tuple(raw["vars"])

    def poly(terms):
        return LaurentPoly(vars, {tuple(t["exp"]): t["coef"] for t in terms})

    matrix = LaurentMatrix(
        tuple(raw["row_labels"]),
        tuple(raw["col_labels"]),
        tuple(tuple(poly(cell) for cell in row) for row in raw["entries"]),
    )
    minors = {g: poly(terms) for g, terms in raw["minors"].items()}
    delta = poly(raw["delta"])
    inf_vars = tuple(raw["delta_inf"]["vars"])
    delta_inf = LaurentPoly(
        inf_vars,
        {tuple(t["exp"]): t["coef"] for t in raw["delta_inf"]["terms"]},
    )
    return {"matrix": matrix, "minors": minors, "delta": delta, "delta_inf": delta_inf}


def load_job(name, dir=None):
    """A cover/fill job spec: presentation, degrees, n, slopes, mode."""
    p = Path(name)
    if p.suffix == ".json" and p.exists():
        with open(p) as f:
            raw = json.load(f)
        base_dir = p.parent
    else:
        raw = _load_json(name, dir)
        base_dir = Path(dir) if dir is not None else data_dir()
    pres_ref = raw["presentation"]
    candidate = base_dir / pres_ref if not Path(pres_ref).exists() else Path(pres_ref)
    if candidate.exists():
        presentation = load_presentation(str(candidate))
    else:
        presentation = load_presentation(pres_ref, dir)
    job = {
        "presentation": presentation,
        "degrees": {g: int(d) for g, d in raw["degrees"].items()},
        "n": int(raw.get("n", 1)),
        "mode": raw.get("mode", "h1"),
        "fill": tuple(
            parse_word(text, presentation.generators) for text in raw.get("fill", ())
        ),
    }
    return job


def standard_cover_job(dir=None):
    """The bundled job: the n-final presentation, its grading, the slopes."""
    return load_job("cover-job", dir)
