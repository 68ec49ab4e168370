"""Closed formulas and sufficient conditions on top of the complexes.

* :func:`theorem3_nu`: in the good-compactification setting only the
  dimensions of B are needed, nu^n = (-1)^n (chi(B) - delta_{lambda,1}).
* :func:`curve_nu_03`: the pair-count minus singleton-count formula for
  plane curve germs.
* :func:`theorem4_check`: Hom(H_1, Z/d) = 0 tests that let B = C.
* :func:`singular_nu_c`: kernel counts through a cubical hyperresolution
  X(1) => X(0) and a resolution D(0) of the horizontal divisor.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Mapping, Sequence

from .cyclotomic import CochainComplex, CycNum, ExactMatrix, kernel_dim_on_cohomology
from .eigen import (
    CechComplex,
    EigenvalueSpec,
    TrivializationAtlas,
    b_dimensions,
    build_b_complex,
    build_c_complex,
    canonical_atlas,
    parse_atlas,
)
from .errors import CommutationError, InconsistencyError, InputError, ModelError, PreconditionError
from .model import DegenerationModel, FiniteAbelianGroup, j_set, load_model, parse_model

__all__ = [
    "theorem3_nu",
    "curve_nu_03",
    "branches_nu_lambda1",
    "Theorem4Verdict",
    "theorem4_check",
    "load_h1_data",
    "Correspondence",
    "HyperresolutionInput",
    "singular_nu_c",
    "singular_nu_c_upper",
    "smooth_hyperresolution",
    "horizontal_as_model",
    "parse_hyperresolution",
    "load_hyperresolution",
]


def theorem3_nu(model: DegenerationModel, atlas: TrivializationAtlas | None, d: int, a: int = 1) -> list[int]:
    """nu^j for j in [0, n] from the Euler characteristic of B alone."""
    if not model.isolated_singularity:
        raise PreconditionError(
            f"model '{model.name or '?'}' is not flagged isolated_singularity_compactification; "
            "the Euler-characteristic formula is not asserted outside that setting"
        )
    if model.horizontal:
        raise PreconditionError("the Euler-characteristic formula needs D = 0 (no horizontal divisors)")
    eig = EigenvalueSpec(d, a)
    dims = b_dimensions(model, atlas or canonical_atlas(model), eig.d, eig.a)
    delta = 1 if eig.is_one else 0
    chi = sum((-1) ** j * c for j, c in enumerate(dims))
    top = (-1) ** model.n * (chi - delta)
    if top < 0:
        raise InconsistencyError(f"order {d}: Euler characteristic {chi} gives a negative count {top}")
    return [delta if j == 0 else 0 for j in range(model.n)] + [top]


def _pair_components(model: DegenerationModel, jset: frozenset) -> dict[frozenset, int]:
    out: dict[frozenset, int] = {}
    for s in model.strata:
        if s.depth == 2 and s.index <= jset:
            out[s.index] = out.get(s.index, 0) + 1
    return out


def curve_nu_03(model: DegenerationModel, d: int) -> int:
    """#{I in J, |I| = 2, Y_I nonempty} - #{j in J : Y_j meets no Y_i, i outside J}.

    The literal formula counts index pairs.  When some pair of curves meets in
    more than one point that differs from the number of points, so the
    function warns and returns -chi(C) instead (the value with B = C).
    """
    if model.n != 1:
        raise PreconditionError(f"the curve formula needs n = 1, model has n = {model.n}")
    if d <= 1:
        raise PreconditionError("the curve formula is stated for lambda != 1 (d > 1)")
    jset = j_set(model, d)
    pairs = _pair_components(model, jset)
    singles = sum(1 for s in model.strata if s.depth == 1 and s.index <= jset and s.touches <= jset)
    literal = len(pairs) - singles
    dims = build_c_complex(model, d).dims
    chi_value = dims[1] - dims[0]
    multi = sorted(sorted(p) for p, c in pairs.items() if c > 1)
    if multi:
        warnings.warn(
            f"pairs {multi} meet in several points; returning -chi(C) = {chi_value} instead of the pair count {literal}",
            stacklevel=2,
        )
        return chi_value
    if literal != chi_value:
        raise InconsistencyError(f"pair count {literal} disagrees with -chi(C) = {chi_value}")
    return literal


def branches_nu_lambda1(r: int) -> int:
    """nu^1 at lambda = 1 for a plane curve germ with r local branches."""
    if r < 1:
        raise PreconditionError(f"number of branches must be positive, got {r}")
    return r - 1


# ---------------------------------------------------------------------------
# H^1 vanishing


@dataclass(frozen=True)
class Theorem4Verdict:
    d: int
    scope: str
    targets: Mapping[str, bool]
    degrees: Mapping[int, bool] = field(default_factory=dict)
    complex_equal: bool | None = None

    @property
    def b_equals_c(self) -> bool:
        if self.scope == "union":
            return bool(self.complex_equal)
        return all(self.degrees.values())


def _lookup_h1(h1: Mapping[str, FiniteAbelianGroup], key: str, what: str) -> FiniteAbelianGroup:
    if key not in h1:
        raise InputError(f"missing H_1 data for {what} '{key}'")
    return h1[key]


def theorem4_check(
    model: DegenerationModel,
    d: int,
    h1_data: Mapping[str, FiniteAbelianGroup],
    scope: str = "per_stratum",
) -> Theorem4Verdict:
    """Hom(H_1(target), Z/d) = 0 for the relevant targets.

    ``per_stratum``: every component of Y^(lambda)_I, keyed by stratum id;
    degree j is settled when all components with |I| = j + 1 pass.  Points
    (depth n + 1) need no entry.  ``union``: the single target
    Y^(lambda), keyed ``union:<d>`` or ``union``.
    """
    jset = j_set(model, d)
    if scope in ("per_stratum", "i"):
        targets: dict[str, bool] = {}
        degrees: dict[int, bool] = {j: True for j in range(model.n + 1)}
        for s in model.strata:
            if not model.strata.is_lambda(s.id, jset):
                continue
            if s.depth == model.n + 1 and s.id not in h1_data:
                ok = True
            else:
                ok = _lookup_h1(h1_data, s.id, "stratum").hom_to_cyclic_vanishes(d)
            targets[s.id] = ok
            degrees[s.depth - 1] = degrees[s.depth - 1] and ok
        return Theorem4Verdict(d, "per_stratum", MappingProxyType(targets), MappingProxyType(degrees))
    if scope in ("union", "ii"):
        key = f"union:{d}" if f"union:{d}" in h1_data else "union"
        ok = _lookup_h1(h1_data, key, "the union").hom_to_cyclic_vanishes(d)
        return Theorem4Verdict(d, "union", MappingProxyType({key: ok}), complex_equal=ok)
    raise PreconditionError(f"scope must be 'per_stratum' or 'union', got {scope!r}")


def load_h1_data(source) -> dict[str, FiniteAbelianGroup]:
    if isinstance(source, (str, Path)) and Path(source).exists():
        try:
            source = json.loads(Path(source).read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise InputError(f"{source}: JSON syntax error at line {exc.lineno}: {exc.msg}") from None
    if not isinstance(source, dict):
        raise InputError("H_1 data must map target ids to {b1, torsion}")
    return {k: FiniteAbelianGroup.from_json(v, f"h1[{k}]") for k, v in source.items()}


# ---------------------------------------------------------------------------
# hyperresolutions


@dataclass(frozen=True)
class Correspondence:
    """A target piece with an integer-weighted correspondence to X(0).

    Each term maps target strata to X(0) strata (the pullback sends the
    basis vector of an X(0) stratum to the sum of the target strata over
    it).  ``exp`` attaches a root-of-unity exponent per target stratum
    (``exp_by_order`` does the same per order d), and
    ``vertical`` (target vertical id -> X(0) vertical id) supplies the sign
    of the induced reordering of index sets.
    """

    model: DegenerationModel
    atlas: TrivializationAtlas
    terms: tuple[Mapping, ...]
    role: str = "x1"


@dataclass(frozen=True)
class HyperresolutionInput:
    x0: DegenerationModel
    x0_atlas: TrivializationAtlas
    x1: tuple[Correspondence, ...] = ()
    d0: tuple[Correspondence, ...] = ()


def _perm_sign(seq: Sequence[int]) -> int:
    sign = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def _pullback(x0: CechComplex, x0_model, piece: Correspondence, tgt: CechComplex, d: int, a: int, length: int):
    maps = []
    rank0 = {v: k for k, v in enumerate(x0_model.vertical_ids)}
    for j in range(length):
        cols = x0.index_of(j)
        rows = tgt.basis[j] if j < len(tgt.basis) else ()
        grid = [[CycNum.zero(d)] * len(x0.basis[j]) for _ in rows]
        for r, s1 in enumerate(rows):
            for term in piece.terms:
                target = term["strata"].get(s1)
                if target is None or target not in cols:
                    continue
                exps = term.get("exp_by_order", {}).get(d, term.get("exp", {}))
                coeff = CycNum.zeta(d, a * exps.get(s1, 0)) * term.get("weight", 1)
                vmap = term.get("vertical")
                if vmap:
                    idx = piece.model.strata.sorted_index(piece.model.strata[s1].index)
                    coeff = coeff * _perm_sign([rank0[vmap[i]] for i in idx])
                grid[r][cols[target]] = grid[r][cols[target]] + coeff
        maps.append(ExactMatrix(grid, d, len(x0.basis[j])))
    return maps


def _paired(inp: HyperresolutionInput, d: int, a: int):
    eig = EigenvalueSpec(d, a)
    length = inp.x0.n + 1
    src = build_b_complex(inp.x0, d, inp.x0_atlas, eig.a)
    parts, blocks = [], []
    for piece in inp.x1 + inp.d0:
        tgt = build_b_complex(piece.model, d, piece.atlas, eig.a)
        maps = _pullback(src, inp.x0, piece, tgt, d, eig.a, length)
        parts.append(tgt.complex)
        blocks.append(maps)
    tgt_cx = CochainComplex.direct_sum(parts, d, length)
    maps = [
        ExactMatrix.vstack([b[j] for b in blocks]) if blocks else ExactMatrix.zeros(0, src.complex.dim(j), d)
        for j in range(length)
    ]
    return src, tgt_cx, maps


def singular_nu_c(inp: HyperresolutionInput, d: int, a: int, j: int) -> int:
    """dim Ker(H^j B(X0) -> H^j B(X1) + H^j B(D0)) along (gamma^*, rho^*)."""
    if not 0 <= j <= inp.x0.n:
        raise PreconditionError(f"degree {j} outside [0, {inp.x0.n}]")
    src, tgt, maps = _paired(inp, d, a)
    try:
        return kernel_dim_on_cohomology(src.complex, tgt, maps, j)
    except CommutationError as exc:
        raise CommutationError(f"hyperresolution correspondences at order {d}: {exc}") from None


def singular_nu_c_upper(inp: HyperresolutionInput, d: int, a: int, j: int) -> int:
    """nu_c^(2n - j) = dim H^j B(X0), for j in [0, n]."""
    if not 0 <= j <= inp.x0.n:
        raise PreconditionError(f"degree {j} outside [0, {inp.x0.n}]")
    return build_b_complex(inp.x0, d, inp.x0_atlas, a).cohomology()[j]


def horizontal_as_model(model: DegenerationModel, k: str) -> tuple[DegenerationModel, dict[str, str]]:
    """The fiber of f_k = f|D_k as a model of its own.

    Vertical components become the components of D_k cap Y_i (the depth-1
    sub-strata, multiplicity m_i); their order follows the ambient order so
    Cech signs agree.  Returns the model and the sub-stratum -> ambient
    stratum map (the lift).
    """
    h = model.horizontal_divisor(k)
    table = h.strata
    rank = {v: n for n, v in enumerate(model.vertical_ids)}
    declared = {sid: n for n, sid in enumerate(table.components)}
    singles = sorted((s for s in table if s.depth == 1), key=lambda s: (rank[next(iter(s.index))], declared[s.id]))
    mult = model.multiplicities

    def ancestor(sid, i):
        s = table[sid]
        while s.depth > 1:
            drop = next(x for x in table.sorted_index(s.index) if x != i)
            s = table[s.parents[drop]]
        return s.id

    vertical = [{"id": s.id, "multiplicity": mult[next(iter(s.index))]} for s in singles]
    strata = []
    for s in table:
        new_index = [ancestor(s.id, i) for i in table.sorted_index(s.index)]
        touches = set()
        for i in s.touches:
            kids = [c for c, dropped in table.children[s.id] if dropped == i]
            if not kids:
                raise ModelError(
                    f"horizontal '{k}': sub-stratum '{s.id}' touches '{i}' but lists no child over it; "
                    "cannot name the component of D_k cap Y_i it meets"
                )
            touches.update(ancestor(c, i) for c in kids)
        parents = {ancestor(s.id, i): p for i, p in s.parents.items()}
        strata.append({"id": s.id, "I": new_index, "touches": sorted(touches), "parents": parents})
    doc = {"name": f"{model.name}:{k}", "n": model.n - 1, "vertical": vertical, "strata": strata, "flags": {}}
    return parse_model(doc), dict(h.lift)


def smooth_hyperresolution(model: DegenerationModel, atlas: TrivializationAtlas) -> HyperresolutionInput:
    """X(0) = X, X(1) empty, D(0) = the disjoint union of the D_k with rho = lift."""
    x0 = DegenerationModel(model.n, model.vertical, model.strata, (), model.flags, model.name)
    pieces = []
    for h in model.horizontal:
        sub_model, lift = horizontal_as_model(model, h.id)
        if atlas.canonical:
            sub_atlas, blocks = atlas, {}
        else:
            blocks = dict(atlas.horizontal.get(h.id, {}))
            sub_atlas = TrivializationAtlas(blocks)
        exp_by_d = {dd: dict(b.lift_exp) for dd, b in blocks.items()}
        term = MappingProxyType({"weight": 1, "strata": lift, "exp_by_order": exp_by_d})
        pieces.append(Correspondence(sub_model, sub_atlas, (term,), "d0"))
    return HyperresolutionInput(x0, atlas, (), tuple(pieces))


def _load_piece_model(spec, base: Path):
    if isinstance(spec, str):
        return load_model(base / spec)
    return parse_model(spec)


def _load_piece_atlas(spec, model, base: Path):
    if spec is None:
        return canonical_atlas(model)
    if isinstance(spec, str):
        return parse_atlas(Path(base / spec), model)
    return parse_atlas(spec, model)


def parse_hyperresolution(doc, base_dir=".") -> HyperresolutionInput:
    """{x0: {model, atlas}, x1: [{model, atlas, gamma: [terms]}], d0: [{model, atlas, rho: term}]}.

    Model and atlas entries are inline objects or paths relative to ``base_dir``.
    A term is {weight, strata: {target id: x0 id}, exp?: {target id: e}, vertical?: {...}}.
    """
    base = Path(base_dir)
    if not isinstance(doc, dict) or "x0" not in doc:
        raise InputError("hyperresolution: missing 'x0'")
    x0 = _load_piece_model(doc["x0"].get("model"), base)
    x0_atlas = _load_piece_atlas(doc["x0"].get("atlas"), x0, base)
    pieces = {"x1": [], "d0": []}
    for role, key in (("x1", "gamma"), ("d0", "rho")):
        for k, raw in enumerate(doc.get(role, []) or []):
            where = f"hyperresolution.{role}[{k}]"
            m = _load_piece_model(raw.get("model"), base)
            at = _load_piece_atlas(raw.get("atlas"), m, base)
            terms = raw.get(key, [])
            if isinstance(terms, dict):
                terms = [terms]
            clean = []
            for t, term in enumerate(terms):
                if not isinstance(term, dict) or "strata" not in term:
                    raise InputError(f"{where}.{key}[{t}]: a term needs 'strata'")
                w = term.get("weight", 1)
                if not isinstance(w, int) or isinstance(w, bool):
                    raise InputError(f"{where}.{key}[{t}]: weight must be an integer")
                for s, s0 in term["strata"].items():
                    if s not in m.strata:
                        raise InputError(f"{where}.{key}[{t}]: unknown target stratum '{s}'")
                    if s0 not in x0.strata:
                        raise InputError(f"{where}.{key}[{t}]: unknown X(0) stratum '{s0}'")
                vmap = term.get("vertical")
                if vmap is not None:
                    missing = [v for v in m.vertical_ids if v not in vmap]
                    if missing:
                        raise InputError(f"{where}.{key}[{t}]: vertical map misses {missing}")
                    bad = [v for v in vmap.values() if v not in x0.multiplicities]
                    if bad:
                        raise InputError(f"{where}.{key}[{t}]: unknown X(0) vertical ids {bad}")
                clean.append(MappingProxyType(dict(term, weight=w)))
            pieces[role].append(Correspondence(m, at, tuple(clean), role))
    return HyperresolutionInput(x0, x0_atlas, tuple(pieces["x1"]), tuple(pieces["d0"]))


def load_hyperresolution(path) -> HyperresolutionInput:
    path = Path(path)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except OSError as exc:
        raise InputError(f"{path}: cannot read ({exc.strerror})") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: JSON syntax error at line {exc.lineno}: {exc.msg}") from None
    return parse_hyperresolution(doc, path.parent)
