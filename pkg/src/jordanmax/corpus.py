"""Builders for the bundled models, atlases and H_1 files.

Each builder returns plain JSON-ready dicts.  The files under ``data/`` are
generated from these builders (``python3 -m jordanmax.corpus DIR``) and the
test-suite checks that they stay in sync.
"""

from __future__ import annotations

import json
import sys
from importlib import resources
from pathlib import Path

from .eigen import TrivializationAtlas, parse_atlas
from .model import DegenerationModel, lambda_orders, parse_model

__all__ = [
    "elliptic_torsion",
    "cubic_cone_lines",
    "cubic_with_inflection_lines",
    "curve_pair_family",
    "curve_node",
    "curve_cusp",
    "curve_ordinary_point",
    "smooth_section",
    "bundled_documents",
    "bundled_names",
    "bundled_path",
    "load_bundled",
    "write_bundled",
]


def _v(*pairs):
    return [{"id": i, "multiplicity": m} for i, m in pairs]


def _s(sid, index, touches=None, parents=None):
    out = {"id": sid, "I": list(index)}
    if touches is not None:
        out["touches"] = list(touches)
    if parents:
        out["parents"] = dict(parents)
    return out


def _full_atlas(doc) -> dict:
    """'all trivial, kappa = 0' blocks for every order d > 1."""
    model = parse_model(doc)
    return {"orders": [{"d": d, "trivial": "all", "kappa": []} for d in lambda_orders(model) if d > 1]}


# ---------------------------------------------------------------------------
# elliptic surface with a torsion point


def elliptic_torsion(m: int = 3) -> tuple[dict, dict]:
    """E x E blown up at (O, P), (P, O), f = pr1*g . pr2*g with div g = mO - mP.

    The fiber over 0 is m(D0~ + D0'~): two elliptic curves meeting in the
    point (O, O).  The nearby-cycle system is non-trivial on each curve
    (no m'-th root of f exists for 1 < m' <= m) and trivial on the point.
    """
    doc = {
        "name": f"elliptic surface, torsion order {m}",
        "n": 1,
        "vertical": _v(("D0", m), ("D0p", m)),
        "strata": [_s("OO", ["D0", "D0p"])],
        "flags": {"proper": True, "note": "the exceptional curves and the fiber at infinity are away from 0"},
    }
    orders = sorted({d for d in range(2, m + 1) if m % d == 0})
    atlas = {"orders": [{"d": d, "trivial": ["OO"], "kappa": []} for d in orders]}
    return doc, atlas


# ---------------------------------------------------------------------------
# h^3 h' with C an elliptic cubic and L_i inflectional tangents


def _cubic_lines_vertical():
    pairs = [("D0", 12), ("D1", 12), ("D2", 12), ("D3", 12), ("D4", 3)]
    pairs += [(f"A{i}", 4) for i in (1, 2, 3)]
    pairs += [(f"B{i}", 8) for i in (1, 2, 3)]
    pairs += [(f"H{i}", 1) for i in (1, 2, 3)]
    return _v(*pairs)


def cubic_cone_lines() -> tuple[dict, dict]:
    """Partial lattice of the homogeneous case, certified at order 3 only.

    D0 exceptional plane, Di last exceptional divisor over the cone on
    C cap L_i, D4 the cone on C; A_i, B_i earlier exceptional divisors
    (multiplicities 4, 8), H_i the planes over L_i.  Strata among
    components outside J(3) are omitted.
    """
    ii = ("1", "2", "3")
    strata = [
        _s("D0", ["D0"], [f"A{i}" for i in ii] + [f"B{i}" for i in ii] + [f"D{i}" for i in ii] + ["D4"] + [f"H{i}" for i in ii]),
        *[_s(f"D{i}", [f"D{i}"], ["D0", f"B{i}", "D4", f"H{i}"]) for i in ii],
        _s("D4", ["D4"], ["D0", "D1", "D2", "D3"]),
        _s("D04", ["D0", "D4"], ["D1", "D2", "D3"]),
        *[_s(f"D{i}4", [f"D{i}", "D4"], ["D0"]) for i in ii],
        *[_s(f"D0{i}", ["D0", f"D{i}"], [f"B{i}", "D4", f"H{i}"]) for i in ii],
        *[_s(f"D0{i}4", ["D0", f"D{i}", "D4"], []) for i in ii],
    ]
    doc = {
        "name": "cubic cone with three inflectional lines (affine chart)",
        "n": 2,
        "vertical": _cubic_lines_vertical(),
        "strata": strata,
        "flags": {
            "certified_orders": [3],
            "partial_lattice": True,
            "note": "strata among components of multiplicity prime to 3 are not listed",
        },
    }
    atlas = {"orders": [{"d": 3, "trivial": [f"D{i}4" for i in ii] + [f"D0{i}4" for i in ii], "kappa": []}]}
    return doc, atlas


def cubic_with_inflection_lines(condition_a: bool = True) -> tuple[dict, dict]:
    """Resolution of h^3 h' + h'' (deg h'' = 16), certified at order 3.

    D0 = E0 (12), D1..D3 = last exceptional divisors over the P_i (48),
    D4, D5 = first and last exceptional divisors over C' (15, 48).  The
    remaining components (G the proper transform, F_i1, F_i2 over P_i,
    E4a, E4b over C') have multiplicities prime to 3 and only enter
    through ``touches``.

    With condition (A) the degree-3 coverings over D4, D0 cap D4 and
    D4 cap D5 are non-trivial; without it every lambda-stratum is trivial.
    """
    ii = ("1", "2", "3")
    pairs = [("D0", 12), ("D1", 48), ("D2", 48), ("D3", 48), ("D4", 15), ("D5", 48), ("G", 1)]
    for i in ii:
        pairs += [(f"F{i}1", 16), (f"F{i}2", 32)]
    pairs += [("E4a", 16), ("E4b", 32)]
    f_all = [f"F{i}{k}" for i in ii for k in (1, 2)]
    strata = [
        _s("D0", ["D0"], ["G", *f_all, "D1", "D2", "D3", "D4"]),
        *[_s(f"D{i}", [f"D{i}"], ["D0", f"F{i}2", "G", "D4", "E4a", "E4b", "D5"]) for i in ii],
        _s("D4", ["D4"], ["D0", "D1", "D2", "D3", "D5"]),
        _s("D5", ["D5"], ["D4", "E4b", "G", "D1", "D2", "D3"]),
        *[_s(f"D0{i}", ["D0", f"D{i}"], ["G", f"F{i}2", "D4"]) for i in ii],
        _s("D04", ["D0", "D4"], ["D1", "D2", "D3"]),
        _s("D45", ["D4", "D5"], ["D1", "D2", "D3"]),
        *[_s(f"D{i}4", [f"D{i}", "D4"], ["D0", "D5"]) for i in ii],
        *[_s(f"D{i}5", [f"D{i}", "D5"], ["D4", "E4b", "G"]) for i in ii],
        *[_s(f"D0{i}4", ["D0", f"D{i}", "D4"], []) for i in ii],
        *[_s(f"D{i}45", [f"D{i}", "D4", "D5"], []) for i in ii],
    ]
    label = "A" if condition_a else "B"
    doc = {
        "name": f"h^3 h' + h'' resolution, variant {label}",
        "n": 2,
        "vertical": _v(*pairs),
        "strata": strata,
        "flags": {
            "isolated_singularity_compactification": True,
            "certified_orders": [3],
            "partial_lattice": True,
            "note": "only strata relevant at order 3 are listed; the A3 points on L_i cap L_j are not resolved here",
        },
    }
    if condition_a:
        trivial = [f"D{i}4" for i in ii] + [f"D0{i}4" for i in ii] + [f"D{i}45" for i in ii]
        atlas = {"orders": [{"d": 3, "trivial": trivial, "kappa": []}]}
    else:
        atlas = {"orders": [{"d": 3, "trivial": "all", "kappa": []}]}
    return doc, atlas


# ---------------------------------------------------------------------------
# plane curves


def curve_pair_family(a: int) -> tuple[dict, dict, dict]:
    """Minimal resolution of (x^2a + y^2)(x^2 + y^2a), a >= 2.

    E1 (multiplicity 4) from the first blow-up, then chains E_2..E_a and
    E'_2..E'_a (multiplicity 2k + 2) towards each factor; the compactified
    curve G is irreducible and meets E_a and E'_a in two points each.
    """
    if a < 2:
        raise ValueError("a >= 2")
    pairs = [("E1", 4)]
    for k in range(2, a + 1):
        pairs += [(f"E{k}", 2 * k + 2), (f"F{k}", 2 * k + 2)]
    pairs.append(("G", 1))
    strata = []
    for side in ("E", "F"):
        prev = "E1"
        for k in range(2, a + 1):
            cur = f"{side}{k}"
            strata.append(_s(f"{prev}.{cur}", [prev, cur]))
            prev = cur
        for p in (1, 2):
            strata.append(_s(f"G.{prev}.{p}", [prev, "G"]))
    doc = {
        "name": f"(x^{2 * a}+y^2)(x^2+y^{2 * a})",
        "n": 1,
        "vertical": _v(*pairs),
        "strata": strata,
        "flags": {"isolated_singularity_compactification": True, "branches": 4},
    }
    h1 = {v: {"b1": 0, "torsion": []} for v, _ in pairs if v != "G"}
    h1["union"] = {"b1": 0, "torsion": []}
    return doc, _full_atlas(doc), h1


def _curve(name, exc, meets, g_points, branches):
    """Tree of exceptional curves ``exc`` with edges ``meets``; G meets them at ``g_points``."""
    strata = [_s(f"{p}.{q}", [p, q]) for p, q in meets]
    for k, e in enumerate(g_points):
        strata.append(_s(f"G.{e}.{k}", [e, "G"]))
    doc = {
        "name": name,
        "n": 1,
        "vertical": _v(*exc, ("G", 1)),
        "strata": strata,
        "flags": {"isolated_singularity_compactification": True, "branches": branches},
    }
    return doc


def curve_node() -> dict:
    return _curve("node xy", [("E", 2)], [], ["E", "E"], 2)


def curve_cusp() -> dict:
    return _curve("cusp x^2+y^3", [("E1", 2), ("E2", 3), ("E3", 6)], [("E1", "E3"), ("E2", "E3")], ["E3"], 1)


def curve_ordinary_point(r: int) -> dict:
    return _curve(f"ordinary {r}-fold point", [("E", r)], [], ["E"] * r, r)


def smooth_section() -> tuple[dict, dict]:
    """Two components of multiplicity 2 meeting in a point, with a horizontal
    curve H through a general point of Y1."""
    doc = {
        "name": "two components and a section",
        "n": 1,
        "vertical": _v(("Y1", 2), ("Y2", 2)),
        "strata": [_s("Y12", ["Y1", "Y2"])],
        "horizontal": [{"id": "H", "strata": [_s("h1", ["Y1"], [])], "lift": {"h1": "Y1"}}],
        "flags": {},
    }
    atlas = {
        "orders": [{"d": 2, "trivial": "all", "kappa": []}],
        "horizontal": {"H": {"orders": [{"d": 2, "trivial": "all", "kappa": [], "lift_exp": []}]}},
    }
    return doc, atlas


# ---------------------------------------------------------------------------
# bundled files


def bundled_documents() -> dict[str, dict]:
    out: dict[str, dict] = {}
    for m in (2, 3, 5):
        doc, atlas = elliptic_torsion(m)
        stem = "ex4_1" if m == 3 else f"ex4_1_m{m}"
        out[f"{stem}.json"], out[f"{stem}.atlas.json"] = doc, atlas
    out["ex4_2.json"], out["ex4_2.atlas.json"] = cubic_cone_lines()
    for label, flag in (("A", True), ("B", False)):
        out[f"ex4_3{label}.json"], out[f"ex4_3{label}.atlas.json"] = cubic_with_inflection_lines(flag)
    for a in (2, 3, 4):
        doc, atlas, h1 = curve_pair_family(a)
        out[f"ex4_4_a{a}.json"], out[f"ex4_4_a{a}.atlas.json"], out[f"ex4_4_a{a}.h1.json"] = doc, atlas, h1
    for stem, doc in (
        ("curve_node", curve_node()),
        ("curve_cusp", curve_cusp()),
        ("curve_ordinary3", curve_ordinary_point(3)),
        ("curve_ordinary4", curve_ordinary_point(4)),
    ):
        out[f"{stem}.json"], out[f"{stem}.atlas.json"] = doc, _full_atlas(doc)
    doc, atlas = smooth_section()
    out["smooth_section.json"], out["smooth_section.atlas.json"] = doc, atlas
    out["smooth_section.hyper.json"] = {
        "x0": {"model": "smooth_section_x0.json", "atlas": "smooth_section_x0.atlas.json"},
        "x1": [],
        "d0": [
            {
                "model": "smooth_section_d0.json",
                "atlas": None,
                "rho": {"weight": 1, "strata": {"h1": "Y1"}},
            }
        ],
    }
    x0 = dict(doc, horizontal=[])
    out["smooth_section_x0.json"] = x0
    out["smooth_section_x0.atlas.json"] = {"orders": atlas["orders"]}
    out["smooth_section_d0.json"] = {
        "name": "H",
        "n": 0,
        "vertical": _v(("h1", 2)),
        "strata": [],
        "flags": {},
    }
    return out


def _dumps(doc) -> str:
    return json.dumps(doc, indent=1) + "\n"


def write_bundled(directory) -> list[Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name, doc in bundled_documents().items():
        p = directory / name
        p.write_text(_dumps(doc), encoding="utf-8")
        written.append(p)
    return written


def bundled_names() -> list[str]:
    return sorted(p.name for p in resources.files("jordanmax").joinpath("data").iterdir() if p.name.endswith(".json"))


def bundled_path(name: str) -> Path:
    return Path(str(resources.files("jordanmax").joinpath("data", name)))


def load_bundled(stem: str) -> tuple[DegenerationModel, TrivializationAtlas]:
    """Model and atlas for a bundled stem such as 'ex4_3A'."""
    model = parse_model(bundled_path(f"{stem}.json"))
    atlas_file = bundled_path(f"{stem}.atlas.json")
    atlas = parse_atlas(atlas_file, model) if atlas_file.exists() else TrivializationAtlas()
    return model, atlas


if __name__ == "__main__":
    target = sys.argv[1] if len(sys.argv) > 1 else str(bundled_path(""))
    for p in write_bundled(target):
        print(p)
