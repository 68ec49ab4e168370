"""Cech complexes on lambda-strata, restriction morphisms and Jordan block counts.

For lambda of order d, the C-complex has basis the components S of Y_I
(I inside J(lambda)) that meet no Y_i' with i' outside J(lambda), in degree
|I| - 1.  The B-complex keeps only the components on which the nearby-cycle
local system is trivial; its differential carries root-of-unity constants
zeta_d^(a * kappa) read from a :class:`TrivializationAtlas`.

nu^j = dim H^j(B), and nu_c^j is the kernel of H^j(B) -> sum_k H^j(B_k) along
the restriction morphisms to the horizontal divisors.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .cyclotomic import CochainComplex, CycNum, ExactMatrix, kernel_dim_on_cohomology, _check_commutes
from .errors import AtlasError, CommutationError, NotAComplexError, PreconditionError
from .model import DegenerationModel, StrataTable, j_set, lambda_orders

__all__ = [
    "EigenvalueSpec",
    "OrderBlock",
    "TrivializationAtlas",
    "CechComplex",
    "ComplexMorphism",
    "JordanRow",
    "JordanReport",
    "parse_atlas",
    "load_atlas",
    "serialize_atlas",
    "canonical_atlas",
    "build_c_complex",
    "build_b_complex",
    "restriction_morphism",
    "nu",
    "nu_c",
    "nu_vector",
    "exponents_for",
    "jordan_report",
    "extend_by_duality",
    "default_orders",
    "b_dimensions",
]


@dataclass(frozen=True)
class EigenvalueSpec:
    """lambda = zeta_d^a with gcd(a, d) = 1 and 1 <= a <= d."""

    d: int
    a: int = 1

    def __post_init__(self):
        if self.d < 1:
            raise PreconditionError(f"eigenvalue order must be positive, got {self.d}")
        a = self.a % self.d or self.d
        if math.gcd(a, self.d) != 1:
            raise PreconditionError(f"exponent {self.a} is not coprime to the order {self.d}")
        object.__setattr__(self, "a", a)

    @property
    def conj(self) -> "EigenvalueSpec":
        return EigenvalueSpec(self.d, self.d - self.a)

    @property
    def is_one(self) -> bool:
        return self.d == 1

    @classmethod
    def parse(cls, text: str) -> "EigenvalueSpec":
        try:
            if ":" in text:
                d, a = text.split(":", 1)
                return cls(int(d), int(a))
            return cls(int(text), 1)
        except ValueError:
            raise PreconditionError(f"cannot read eigenvalue '{text}' (expected d or d:a)") from None

    def __str__(self):
        return "1" if self.d == 1 else f"zeta_{self.d}^{self.a}"


def exponents_for(d: int) -> list[int]:
    return [a for a in range(1, d + 1) if math.gcd(a, d) == 1]


# ---------------------------------------------------------------------------
# trivialization atlas


@dataclass(frozen=True)
class OrderBlock:
    """Trivialization data for one order d (and optionally one exponent).

    ``trivial`` is None for "every lambda-stratum".  ``kappa`` maps
    (parent id, child id) to an exponent mod d; ``kappa_default`` fills the
    adjacencies that are not listed.  ``lift_exp`` is only used for
    horizontal sub-models: the exponent attached to the restriction from the
    ambient component to the sub-model component.
    """

    d: int
    trivial: frozenset | None = None
    kappa: Mapping[tuple, int] = field(default_factory=dict)
    kappa_default: int | None = 0
    lift_exp: Mapping[str, int] = field(default_factory=dict)
    overrides: Mapping[int, "OrderBlock"] = field(default_factory=dict)

    def for_exponent(self, a: int) -> "OrderBlock":
        return self.overrides.get(a, self)

    def exponent(self, parent: str, child: str) -> int:
        key = (parent, child)
        if key in self.kappa:
            return self.kappa[key]
        if self.kappa_default is None:
            raise AtlasError(f"order {self.d}: no kappa for the adjacency '{parent}' -> '{child}'")
        return self.kappa_default


@dataclass(frozen=True)
class TrivializationAtlas:
    blocks: Mapping[int, OrderBlock] = field(default_factory=dict)
    horizontal: Mapping[str, Mapping[int, OrderBlock]] = field(default_factory=dict)
    canonical: bool = False

    def block(self, d: int, a: int = 1, sub: str | None = None) -> OrderBlock | None:
        if d == 1 or self.canonical:
            return OrderBlock(d)
        table = self.blocks if sub is None else self.horizontal.get(sub, {})
        blk = table.get(d)
        return None if blk is None else blk.for_exponent(a)

    @property
    def orders(self) -> list[int]:
        return sorted(set(self.blocks) | {1})


def canonical_atlas(model: DegenerationModel | None = None) -> TrivializationAtlas:
    """Every lambda-stratum trivial, kappa = 0, for every order.

    This is the atlas licensed by a vanishing H^1 check, and the only one
    accepted at lambda = 1.
    """
    return TrivializationAtlas(canonical=True)


def _parse_block(raw, model: DegenerationModel, table: StrataTable, where: str, sub: bool) -> OrderBlock:
    if not isinstance(raw, dict) or "d" not in raw:
        raise AtlasError(f"{where}: each order block needs 'd'")
    d = raw["d"]
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise AtlasError(f"{where}: order must be a positive integer, got {d!r}")
    where = f"{where} (d={d})"
    jset = j_set(model, d)
    trivial = raw.get("trivial", "all")
    if trivial == "all":
        trivial_set = None
    else:
        if not isinstance(trivial, list):
            raise AtlasError(f"{where}.trivial: expected a list of stratum ids or \"all\"")
        for sid in trivial:
            if sid not in table:
                raise AtlasError(f"{where}.trivial: unknown stratum '{sid}'")
            if not table.is_lambda(sid, jset):
                raise AtlasError(f"{where}.trivial: '{sid}' is not a lambda-stratum for order {d}")
        trivial_set = frozenset(trivial)
    kappa = {}
    for k, ent in enumerate(raw.get("kappa", []) or []):
        loc = f"{where}.kappa[{k}]"
        if not isinstance(ent, dict) or not {"parent", "child", "exp"} <= set(ent):
            raise AtlasError(f"{loc}: expected {{parent, child, exp}}")
        p, c, e = ent["parent"], ent["child"], ent["exp"]
        if c not in table or p not in table:
            raise AtlasError(f"{loc}: unknown stratum '{c if c not in table else p}'")
        if p not in table[c].parents.values():
            raise AtlasError(f"{loc}: '{p}' is not a parent of '{c}'")
        if not isinstance(e, int) or isinstance(e, bool):
            raise AtlasError(f"{loc}: exponent must be an integer")
        kappa[(p, c)] = e % d
    default = raw.get("kappa_default", None if kappa else 0)
    if default is not None:
        if not isinstance(default, int) or isinstance(default, bool):
            raise AtlasError(f"{where}.kappa_default: must be an integer or null")
        default %= d
    lift_exp = {}
    if sub:
        for k, ent in enumerate(raw.get("lift_exp", []) or []):
            loc = f"{where}.lift_exp[{k}]"
            if not isinstance(ent, dict) or not {"sub", "exp"} <= set(ent):
                raise AtlasError(f"{loc}: expected {{sub, exp}}")
            if ent["sub"] not in table:
                raise AtlasError(f"{loc}: unknown sub-stratum '{ent['sub']}'")
            lift_exp[ent["sub"]] = int(ent["exp"]) % d
    elif raw.get("lift_exp"):
        raise AtlasError(f"{where}: lift_exp only belongs in horizontal blocks")
    if d == 1 and (trivial_set is not None or any(kappa.values()) or default):
        raise AtlasError(f"{where}: order 1 is always the full complex with trivial constants")
    overrides = {}
    for k, ov in enumerate(raw.get("overrides", []) or []):
        loc = f"{where}.overrides[{k}]"
        if not isinstance(ov, dict) or "a" not in ov:
            raise AtlasError(f"{loc}: an override needs 'a'")
        a = ov["a"]
        if not isinstance(a, int) or math.gcd(a, d) != 1:
            raise AtlasError(f"{loc}: exponent {a!r} is not coprime to {d}")
        merged = {key: raw[key] for key in ("trivial", "kappa", "kappa_default", "lift_exp") if key in raw}
        merged.update({key: v for key, v in ov.items() if key != "a"})
        merged["d"] = d
        overrides[a % d or d] = _parse_block(merged, model, table, loc, sub)
    return OrderBlock(d, trivial_set, kappa, default, lift_exp, overrides)


def parse_atlas(document, model: DegenerationModel) -> TrivializationAtlas:
    """Validate an atlas against the model it trivializes."""
    if isinstance(document, Path):
        return load_atlas(document, model)
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise AtlasError(f"JSON syntax error at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(document, dict):
        raise AtlasError("atlas document must be a JSON object")
    blocks = {}
    for k, raw in enumerate(document.get("orders", []) or []):
        blk = _parse_block(raw, model, model.strata, f"orders[{k}]", sub=False)
        if blk.d in blocks:
            raise AtlasError(f"orders[{k}]: duplicate block for d={blk.d}")
        blocks[blk.d] = blk
    horizontal = {}
    raw_h = document.get("horizontal", {}) or {}
    if not isinstance(raw_h, dict):
        raise AtlasError("atlas.horizontal: expected an object keyed by horizontal id")
    for hid, hraw in raw_h.items():
        try:
            h = model.horizontal_divisor(hid)
        except KeyError:
            raise AtlasError(f"atlas.horizontal: unknown horizontal divisor '{hid}'") from None
        sub_blocks = {}
        for k, raw in enumerate((hraw or {}).get("orders", []) or []):
            blk = _parse_block(raw, model, h.strata, f"horizontal.{hid}.orders[{k}]", sub=True)
            sub_blocks[blk.d] = blk
        horizontal[hid] = sub_blocks
    return TrivializationAtlas(blocks, horizontal)


def load_atlas(path, model: DegenerationModel) -> TrivializationAtlas:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise AtlasError(f"{path}: cannot read ({exc.strerror})") from None
    try:
        return parse_atlas(text, model)
    except AtlasError as exc:
        raise AtlasError(f"{path}: {exc}") from None


def _block_json(blk: OrderBlock, table: StrataTable, sub: bool) -> dict:
    out = {"d": blk.d, "trivial": "all" if blk.trivial is None else sorted(blk.trivial)}
    out["kappa"] = [{"parent": p, "child": c, "exp": e} for (p, c), e in sorted(blk.kappa.items())]
    out["kappa_default"] = blk.kappa_default
    if sub:
        out["lift_exp"] = [{"sub": s, "exp": e} for s, e in sorted(blk.lift_exp.items())]
    if blk.overrides:
        out["overrides"] = []
        for a, ov in sorted(blk.overrides.items()):
            body = _block_json(ov, table, sub)
            body.pop("d")
            out["overrides"].append({"a": a, **body})
    return out


def serialize_atlas(atlas: TrivializationAtlas, model: DegenerationModel) -> dict:
    doc = {"orders": [_block_json(b, model.strata, False) for _, b in sorted(atlas.blocks.items())]}
    if atlas.horizontal:
        doc["horizontal"] = {
            hid: {"orders": [_block_json(b, model.horizontal_divisor(hid).strata, True) for _, b in sorted(bl.items())]}
            for hid, bl in atlas.horizontal.items()
        }
    return doc


# ---------------------------------------------------------------------------
# complexes


@dataclass(frozen=True)
class CechComplex:
    eigen: EigenvalueSpec
    kind: str
    basis: tuple[tuple[str, ...], ...]
    complex: CochainComplex

    @property
    def dims(self) -> tuple[int, ...]:
        return self.complex.dims

    @property
    def differentials(self) -> tuple[ExactMatrix, ...]:
        return self.complex.differentials

    def cohomology(self) -> list[int]:
        return self.complex.cohomology()

    def euler_characteristic(self) -> int:
        return self.complex.euler_characteristic()

    def index_of(self, j: int) -> dict[str, int]:
        return {sid: k for k, sid in enumerate(self.basis[j])} if j < len(self.basis) else {}


def _cech(table: StrataTable, basis_ids: set, length: int, d: int, entry) -> tuple:
    """Graded basis and Cech differentials restricted to ``basis_ids``.

    ``entry(parent, child, i)`` returns the non-sign part of the coefficient.
    """
    graded = [[] for _ in range(length)]
    declared = {sid: k for k, sid in enumerate(table.components)}
    for sid in sorted(basis_ids, key=lambda s: (table.index_key(table[s].index), declared[s])):
        j = table[sid].depth - 1
        if j >= length:
            raise AtlasError(f"stratum '{sid}' lies in degree {j}, beyond the complex length {length}")
        graded[j].append(sid)
    pos = [{sid: k for k, sid in enumerate(g)} for g in graded]
    diffs = []
    for j in range(length - 1):
        grid = [[CycNum.zero(d)] * len(graded[j]) for _ in graded[j + 1]]
        for r, sid in enumerate(graded[j + 1]):
            s = table[sid]
            for i, p in s.parents.items():
                c = pos[j].get(p)
                if c is None:
                    continue
                sign = -1 if table.position(i, s.index) % 2 else 1
                grid[r][c] = entry(p, sid, i) * sign
        diffs.append(ExactMatrix(grid, d, len(graded[j])))
    return tuple(tuple(g) for g in graded), tuple(diffs)


def _verify_square(basis, diffs, what):
    for j in range(len(diffs) - 1):
        sq = diffs[j + 1] @ diffs[j]
        for r, c, _ in sq.nonzero_entries():
            raise NotAComplexError(
                j, f"{what}: the square from '{basis[j][c]}' to '{basis[j + 2][r]}' does not cancel"
            )


def _lambda_ids(table: StrataTable, jset: frozenset) -> set:
    return {s.id for s in table if table.is_lambda(s.id, jset)}


def build_c_complex(model: DegenerationModel, d: int, a: int = 1, sub: str | None = None) -> CechComplex:
    """C-complex of f (or of f_k when ``sub`` names a horizontal divisor) at order d."""
    eig = EigenvalueSpec(d, a)
    table = model.strata if sub is None else model.horizontal_divisor(sub).strata
    ids = _lambda_ids(table, j_set(model, d))
    one = CycNum.one(d)
    basis, diffs = _cech(table, ids, model.n + 1, d, lambda p, c, i: one)
    _verify_square(basis, diffs, "C-complex")
    return CechComplex(eig, "c", basis, CochainComplex(tuple(len(b) for b in basis), diffs, d))


def _trivial_ids(model, table, d, blk: OrderBlock) -> set:
    lam = _lambda_ids(table, j_set(model, d))
    return set(lam) if blk.trivial is None else set(blk.trivial)


def _resolve_block(model, atlas, d, a, sub, table):
    blk = atlas.block(d, a, sub)
    if blk is None:
        if not _lambda_ids(table, j_set(model, d)):
            return OrderBlock(d, frozenset())
        where = "the main model" if sub is None else f"horizontal divisor '{sub}'"
        raise AtlasError(f"no trivialization data for order {d} on {where}")
    return blk


def build_b_complex(
    model: DegenerationModel, d: int, atlas: TrivializationAtlas, a: int = 1, sub: str | None = None
) -> CechComplex:
    eig = EigenvalueSpec(d, a)
    table = model.strata if sub is None else model.horizontal_divisor(sub).strata
    blk = _resolve_block(model, atlas, d, eig.a, sub, table)
    ids = _trivial_ids(model, table, d, blk)

    def entry(p, c, i):
        return CycNum.zeta(d, eig.a * blk.exponent(p, c))

    basis, diffs = _cech(table, ids, model.n + 1, d, entry)
    _verify_square(basis, diffs, f"B-complex at order {d}, exponent {eig.a}")
    return CechComplex(eig, "b", basis, CochainComplex(tuple(len(b) for b in basis), diffs, d))


@dataclass(frozen=True)
class ComplexMorphism:
    source: CechComplex
    target: CechComplex
    maps: tuple[ExactMatrix, ...]

    def check(self):
        for k in range(len(self.maps)):
            _check_commutes(self.source.complex, self.target.complex, self.maps, k)

    def kernel_dim(self, j: int) -> int:
        return kernel_dim_on_cohomology(self.source.complex, self.target.complex, self.maps, j)


def restriction_morphism(
    model: DegenerationModel,
    k: str,
    d: int,
    atlas: TrivializationAtlas | None = None,
    a: int = 1,
    kind: str = "b",
) -> ComplexMorphism:
    """r_k (kind 'c') or r'_k (kind 'b') from the complex of f to that of f_k."""
    eig = EigenvalueSpec(d, a)
    h = model.horizontal_divisor(k)
    if kind == "c":
        src = build_c_complex(model, d, eig.a)
        tgt = build_c_complex(model, d, eig.a, sub=k)
        exps = {}
    elif kind == "b":
        atlas = atlas or canonical_atlas()
        src = build_b_complex(model, d, atlas, eig.a)
        tgt = build_b_complex(model, d, atlas, eig.a, sub=k)
        sub_blk = _resolve_block(model, atlas, d, eig.a, k, h.strata)
        exps = sub_blk.lift_exp
    else:
        raise PreconditionError(f"kind must be 'c' or 'b', got {kind!r}")
    maps = []
    for j in range(model.n + 1):
        col = src.index_of(j)
        grid = [[CycNum.zero(d)] * len(src.basis[j]) for _ in tgt.basis[j]]
        for r, sk in enumerate(tgt.basis[j]):
            c = col.get(h.lift[sk])
            if c is not None:
                grid[r][c] = CycNum.zeta(d, eig.a * exps.get(sk, 0))
        maps.append(ExactMatrix(grid, d, len(src.basis[j])))
    mor = ComplexMorphism(src, tgt, tuple(maps))
    try:
        mor.check()
    except CommutationError as exc:
        raise CommutationError(f"restriction to '{k}' at order {d}: {exc} (atlas or lift inconsistent)") from None
    return mor


def _sum_morphism(model, d, atlas, a, kind="b") -> ComplexMorphism:
    """B_f -> sum_k B_{f_k}; the target is the zero complex when D is empty."""
    if kind == "b":
        src = build_b_complex(model, d, atlas, a)
    else:
        src = build_c_complex(model, d, a)
    parts = [restriction_morphism(model, h.id, d, atlas, a, kind) for h in model.horizontal]
    length = model.n + 1
    tgt_cx = CochainComplex.direct_sum([p.target.complex for p in parts], d, length)
    basis = tuple(tuple(sid for p in parts for sid in p.target.basis[j]) for j in range(length))
    tgt = CechComplex(src.eigen, kind, basis, tgt_cx)
    maps = tuple(
        ExactMatrix.vstack([p.maps[j] for p in parts]) if parts else ExactMatrix.zeros(0, src.complex.dim(j), d)
        for j in range(length)
    )
    return ComplexMorphism(src, tgt, maps)


def _check_degree(model, j):
    if not 0 <= j <= model.n:
        raise PreconditionError(f"degree {j} outside [0, {model.n}]; use the duality extension above n")


def nu(model: DegenerationModel, atlas: TrivializationAtlas, d: int, a: int, j: int) -> int:
    _check_degree(model, j)
    return build_b_complex(model, d, atlas, a).cohomology()[j]


def nu_c(model: DegenerationModel, atlas: TrivializationAtlas, d: int, a: int, j: int) -> int:
    _check_degree(model, j)
    return _sum_morphism(model, d, atlas, a).kernel_dim(j)


def nu_vector(model, atlas, d, a=1) -> tuple[list[int], list[int]]:
    """(nu^j, nu_c^j) for j in [0, n], sharing one construction."""
    mor = _sum_morphism(model, d, atlas, a)
    h = mor.source.cohomology()
    hc = [mor.kernel_dim(j) for j in range(model.n + 1)]
    return h, hc


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class JordanRow:
    d: int
    a: int
    j: int
    nu: int
    nu_c: int
    source: str = "computed"

    def tsv(self) -> str:
        return f"{self.d}\t{self.a}\t{self.j}\t{self.nu}\t{self.nu_c}\t{self.source}"


@dataclass
class JordanReport:
    n: int
    rows: list[JordanRow] = field(default_factory=list)
    diagnostics: list[str] = field(default_factory=list)

    HEADER = "d\ta\tj\tnu\tnu_c\tsource"

    def lookup(self, d: int, a: int, j: int, source: str | None = None) -> JordanRow:
        for r in self.rows:
            if (r.d, r.a, r.j) == (d, a, j) and (source is None or r.source == source):
                return r
        raise KeyError((d, a, j, source))

    def to_tsv(self) -> str:
        return "\n".join([self.HEADER] + [r.tsv() for r in self.rows]) + "\n"


def extend_by_duality(report: JordanReport, n: int | None = None) -> JordanReport:
    """Add rows j in [n, 2n]: nu^j(lambda) = nu_c^(2n-j)(conj), nu_c^j(lambda) = nu^(2n-j)(conj).

    At j = n the computed row is kept alongside the duality row; any
    disagreement between them is recorded in ``diagnostics``.
    """
    n = report.n if n is None else n
    base = {(r.d, r.a, r.j): r for r in report.rows if r.source != "duality"}
    out = JordanReport(n, list(report.rows), list(report.diagnostics))
    done = {(r.d, r.a, r.j) for r in report.rows if r.source == "duality"}
    for (d, a, j), row in sorted(base.items()):
        if j != 0:
            continue
        conj = EigenvalueSpec(d, a).conj
        for jj in range(n, 2 * n + 1):
            if (d, a, jj) in done:
                continue
            src = base.get((conj.d, conj.a, 2 * n - jj))
            if src is None:
                raise PreconditionError(
                    f"duality needs the row d={conj.d}, a={conj.a}, j={2 * n - jj} for the conjugate eigenvalue"
                )
            new = JordanRow(d, a, jj, src.nu_c, src.nu, "duality")
            out.rows.append(new)
            if jj == n and (d, a, n) in base:
                mid = base[(d, a, n)]
                if (mid.nu, mid.nu_c) != (new.nu, new.nu_c):
                    out.diagnostics.append(
                        f"d={d} a={a} j={n}: direct (nu={mid.nu}, nu_c={mid.nu_c}) and duality "
                        f"(nu={new.nu}, nu_c={new.nu_c}) disagree"
                    )
    out.rows.sort(key=lambda r: (r.d, r.a, r.j, r.source != "computed" and r.source != "theorem3"))
    return out


def default_orders(model: DegenerationModel, atlas: TrivializationAtlas) -> tuple[list[int], list[str]]:
    """Orders a report can cover, and a note for each order skipped for lack of data."""
    certified = model.flags.get("certified_orders")
    if certified:
        return sorted(int(d) for d in certified), []
    keep, notes = [], []
    for d in lambda_orders(model):
        if d == 1 or atlas.canonical or d in atlas.blocks:
            keep.append(d)
        elif not _lambda_ids(model.strata, j_set(model, d)):
            keep.append(d)
        else:
            notes.append(f"order {d} skipped: no trivialization data")
    return keep, notes


def jordan_report(
    model: DegenerationModel,
    atlas: TrivializationAtlas | None = None,
    orders: Iterable[int] | None = None,
    exponents: Iterable[int] | None = None,
    duality: bool = True,
    via: str = "computed",
) -> JordanReport:
    """Full table of nu, nu_c over the requested eigenvalues.

    ``via='theorem3'`` fills the rows from the Euler-characteristic formula
    instead of cohomology (the model must carry the isolated-singularity flag).
    """
    atlas = atlas or canonical_atlas(model)
    notes: list[str] = []
    if orders is None:
        orders, notes = default_orders(model, atlas)
    report = JordanReport(model.n, diagnostics=list(notes))
    for d in orders:
        alist = exponents_for(d) if exponents is None else [EigenvalueSpec(d, a).a for a in exponents]
        need = set(alist) | {EigenvalueSpec(d, a).conj.a for a in alist} if duality else set(alist)
        for a in sorted(need):
            if via == "theorem3":
                from .criteria import theorem3_nu

                vec = theorem3_nu(model, atlas, d, a)
                rows = [JordanRow(d, a, j, v, v, "theorem3") for j, v in enumerate(vec)]
            else:
                h, hc = nu_vector(model, atlas, d, a)
                rows = [JordanRow(d, a, j, h[j], hc[j]) for j in range(model.n + 1)]
            report.rows.extend(rows)
    if duality:
        report = extend_by_duality(report)
    wanted = None
    if exponents is not None:
        wanted = {(d, EigenvalueSpec(d, a).a) for d in orders for a in exponents}
        report.rows = [r for r in report.rows if (r.d, r.a) in wanted]
    return report


def b_dimensions(model: DegenerationModel, atlas: TrivializationAtlas, d: int, a: int = 1) -> list[int]:
    """dim B^j for j in [0, n], read off the atlas without building differentials."""
    eig = EigenvalueSpec(d, a)
    blk = _resolve_block(model, atlas, d, eig.a, None, model.strata)
    dims = [0] * (model.n + 1)
    for sid in _trivial_ids(model, model.strata, d, blk):
        dims[model.strata[sid].depth - 1] += 1
    return dims
