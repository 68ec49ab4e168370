"""Combinatorial models of simple-normal-crossing special fibers.

A model records, for a degeneration f: X -> Delta with SNC special fiber
Y = sum m_i Y_i, the connected components of every non-empty intersection
Y_I together with

* ``touches``: the vertical components outside I that the component meets,
* ``parents``: for each i in I, the component of Y_{I - {i}} containing it,

and the same data for each horizontal divisor D_k (with ``lift`` sending a
component of D_k cap Y_I to the component of Y_I containing it).

Everything is declared; nothing is derived from equations.  A few fields may
be omitted in model files because they are forced: the single component
over each {i} in the main table, parents that have only one candidate, and
``touches`` (then taken to be the set read off from the listed children).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import ModelError, PreconditionError

__all__ = [
    "VerticalComponent",
    "StratumComponent",
    "StrataTable",
    "HorizontalDivisor",
    "DegenerationModel",
    "FiniteAbelianGroup",
    "parse_model",
    "load_model",
    "serialize_model",
    "dump_model",
    "lambda_orders",
    "j_set",
    "lambda_strata",
]


@dataclass(frozen=True)
class VerticalComponent:
    id: str
    multiplicity: int


@dataclass(frozen=True, eq=True)
class StratumComponent:
    id: str
    index: frozenset
    touches: frozenset
    parents: Mapping[str, str] = field(default_factory=dict)

    @property
    def depth(self) -> int:
        return len(self.index)

    def parent(self, i: str) -> str:
        return self.parents[i]

    def __eq__(self, other):
        if not isinstance(other, StratumComponent):
            return NotImplemented
        return (self.id, self.index, self.touches, dict(self.parents)) == (
            other.id,
            other.index,
            other.touches,
            dict(other.parents),
        )

    def __hash__(self):
        return hash((self.id, self.index))


class StrataTable:
    """Validated table of stratum components, shared by models and sub-models."""

    def __init__(self, components: Iterable[StratumComponent], vertical_order: Iterable[str]):
        self.vertical_order = tuple(vertical_order)
        self._rank = {v: k for k, v in enumerate(self.vertical_order)}
        self.components = {s.id: s for s in components}
        self.by_index: dict[frozenset, list[str]] = {}
        self.children: dict[str, list[tuple[str, str]]] = {sid: [] for sid in self.components}
        for s in self.components.values():
            self.by_index.setdefault(s.index, []).append(s.id)
            for i, p in s.parents.items():
                self.children[p].append((s.id, i))

    def __eq__(self, other):
        if not isinstance(other, StrataTable):
            return NotImplemented
        return self.vertical_order == other.vertical_order and self.components == other.components

    def __getitem__(self, sid: str) -> StratumComponent:
        return self.components[sid]

    def __contains__(self, sid) -> bool:
        return sid in self.components

    def __iter__(self):
        return iter(self.components.values())

    def __len__(self):
        return len(self.components)

    def sorted_index(self, index: Iterable[str]) -> list[str]:
        return sorted(index, key=self._rank.__getitem__)

    def index_key(self, index: Iterable[str]) -> list[int]:
        return sorted(self._rank[v] for v in index)

    def position(self, i: str, index: Iterable[str]) -> int:
        """Position of i in I under the global order on vertical ids."""
        return self.sorted_index(index).index(i)

    def max_depth(self) -> int:
        return max((s.depth for s in self), default=0)

    def over(self, index: Iterable[str]) -> list[StratumComponent]:
        return [self.components[s] for s in self.by_index.get(frozenset(index), [])]

    def is_lambda(self, sid: str, jset: frozenset) -> bool:
        s = self.components[sid]
        return s.index <= jset and not (s.touches - jset)

    def lambda_components(self, jset: frozenset) -> dict[int, list[str]]:
        """Components passing the Y^(lambda) filter, graded by |I| - 1.

        Within a degree the order is by (sorted index set, declaration order),
        so bases are deterministic.
        """
        graded: dict[int, list[str]] = {}
        for s in self:
            if self.is_lambda(s.id, jset):
                graded.setdefault(s.depth - 1, []).append(s.id)
        for ids in graded.values():
            ids.sort(key=lambda sid: self.index_key(self.components[sid].index))
        return graded


@dataclass(frozen=True)
class HorizontalDivisor:
    id: str
    strata: StrataTable
    lift: Mapping[str, str]

    def __eq__(self, other):
        if not isinstance(other, HorizontalDivisor):
            return NotImplemented
        return self.id == other.id and self.strata == other.strata and dict(self.lift) == dict(other.lift)

    def __hash__(self):
        return hash(self.id)


@dataclass(frozen=True)
class DegenerationModel:
    n: int
    vertical: tuple[VerticalComponent, ...]
    strata: StrataTable
    horizontal: tuple[HorizontalDivisor, ...] = ()
    flags: Mapping[str, object] = field(default_factory=dict)
    name: str = ""

    def __eq__(self, other):
        if not isinstance(other, DegenerationModel):
            return NotImplemented
        return (
            self.n == other.n
            and self.vertical == other.vertical
            and self.strata == other.strata
            and self.horizontal == other.horizontal
            and dict(self.flags) == dict(other.flags)
            and self.name == other.name
        )

    def __hash__(self):
        return hash((self.name, self.n, self.vertical))

    @property
    def multiplicities(self) -> dict[str, int]:
        return {v.id: v.multiplicity for v in self.vertical}

    @property
    def vertical_ids(self) -> tuple[str, ...]:
        return tuple(v.id for v in self.vertical)

    @property
    def is_proper(self) -> bool:
        return not self.horizontal

    @property
    def isolated_singularity(self) -> bool:
        return bool(self.flags.get("isolated_singularity_compactification", False))

    def horizontal_divisor(self, k: str) -> HorizontalDivisor:
        for h in self.horizontal:
            if h.id == k:
                return h
        raise KeyError(k)


# ---------------------------------------------------------------------------
# finite abelian groups (H_1 data)


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Z^free_rank + Z/t_1 + ... + Z/t_k with t_1 | t_2 | ... | t_k."""

    invariant_factors: tuple[int, ...] = ()
    free_rank: int = 0

    def __post_init__(self):
        object.__setattr__(self, "invariant_factors", tuple(int(t) for t in self.invariant_factors))
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        for t in self.invariant_factors:
            if t < 2:
                raise ValueError(f"invariant factor {t} < 2")
        for a, b in zip(self.invariant_factors, self.invariant_factors[1:]):
            if b % a:
                raise ValueError(f"invariant factors must divide each other: {a} does not divide {b}")

    @classmethod
    def from_torsion(cls, torsion: Iterable[int], free_rank: int = 0) -> "FiniteAbelianGroup":
        """Normalise an arbitrary list of cyclic orders to invariant factors."""
        primes: dict[int, list[int]] = {}
        for t in torsion:
            t = int(t)
            if t < 1:
                raise ValueError(f"cyclic order {t} must be positive")
            p = 2
            while t > 1:
                if t % p == 0:
                    e = 1
                    while t % p == 0:
                        t //= p
                        e *= p
                    primes.setdefault(p, []).append(e)
                p += 1
        width = max((len(v) for v in primes.values()), default=0)
        factors = [1] * width
        for powers in primes.values():
            powers.sort()
            for k, q in enumerate(powers):
                factors[width - len(powers) + k] *= q
        return cls(tuple(f for f in factors if f > 1), free_rank)

    def hom_to_cyclic_vanishes(self, d: int) -> bool:
        """Hom(G, Z/d) = 0."""
        return self.free_rank == 0 and all(math.gcd(t, d) == 1 for t in self.invariant_factors)

    @classmethod
    def from_json(cls, obj, where="h1") -> "FiniteAbelianGroup":
        if not isinstance(obj, dict):
            raise ModelError(f"{where}: expected an object with b1/torsion")
        try:
            return cls.from_torsion(obj.get("torsion", []), int(obj.get("b1", 0)))
        except (TypeError, ValueError) as exc:
            raise ModelError(f"{where}: {exc}") from None

    def to_json(self):
        return {"b1": self.free_rank, "torsion": list(self.invariant_factors)}


# ---------------------------------------------------------------------------
# parsing and validation


def _ids(value, where):
    if not isinstance(value, (list, tuple)):
        raise ModelError(f"{where}: expected a list of ids")
    out = []
    for x in value:
        if not isinstance(x, str):
            raise ModelError(f"{where}: id {x!r} is not a string")
        out.append(x)
    return out


def _build_table(raw_strata, vertical_ids, where, auto_singletons):
    """Validate raw stratum dicts and return a StrataTable."""
    vset = set(vertical_ids)
    if not isinstance(raw_strata, list):
        raise ModelError(f"{where}: 'strata' must be a list")
    entries = []
    seen = set()
    for k, raw in enumerate(raw_strata):
        loc = f"{where}[{k}]"
        if not isinstance(raw, dict) or "id" not in raw or "I" not in raw:
            raise ModelError(f"{loc}: each stratum needs 'id' and 'I'")
        sid = raw["id"]
        if not isinstance(sid, str):
            raise ModelError(f"{loc}: id {sid!r} is not a string")
        loc = f"{where}[{k}] (stratum '{sid}')"
        if sid in seen:
            raise ModelError(f"{loc}: duplicate stratum id")
        seen.add(sid)
        index = _ids(raw["I"], loc + ".I")
        if not index or len(set(index)) != len(index):
            raise ModelError(f"{loc}: index set I must be non-empty without repeats")
        bad = [i for i in index if i not in vset]
        if bad:
            raise ModelError(f"{loc}: unknown vertical id(s) {bad} in I")
        touches = None
        if raw.get("touches") is not None:
            touches = _ids(raw["touches"], loc + ".touches")
            bad = [i for i in touches if i not in vset]
            if bad:
                raise ModelError(f"{loc}: unknown vertical id(s) {bad} in touches")
            if set(touches) & set(index):
                raise ModelError(f"{loc}: touches must be disjoint from I")
        parents = raw.get("parents") or {}
        if not isinstance(parents, dict):
            raise ModelError(f"{loc}: parents must be an object mapping dropped index -> stratum id")
        entries.append([sid, frozenset(index), touches, dict(parents), loc])

    by_index: dict[frozenset, list[str]] = {}
    for sid, index, _, _, _ in entries:
        by_index.setdefault(index, []).append(sid)

    if auto_singletons:
        for v in vertical_ids:
            key = frozenset([v])
            have = by_index.get(key, [])
            if len(have) > 1:
                raise ModelError(f"{where}: vertical component '{v}' is irreducible but {len(have)} strata list I=[{v}]")
            if not have:
                if v in seen:
                    raise ModelError(f"{where}: stratum id '{v}' is taken by a stratum not over {{{v}}}")
                entries.append([v, key, None, {}, f"{where} (implicit stratum '{v}')"])
                by_index[key] = [v]
                seen.add(v)

    loc_of = {e[0]: e[4] for e in entries}
    index_of = {e[0]: e[1] for e in entries}

    # parents
    for e in entries:
        sid, index, _, parents, loc = e
        if len(index) == 1:
            if parents:
                raise ModelError(f"{loc}: a stratum over a single component has no parents")
            continue
        for i in parents:
            if i not in index:
                raise ModelError(f"{loc}: parent key '{i}' is not in I")
        for i in index:
            want = index - {i}
            if i in parents:
                p = parents[i]
                if p not in index_of:
                    raise ModelError(f"{loc}: parent '{p}' (dropping '{i}') does not exist")
                if index_of[p] != want:
                    raise ModelError(
                        f"{loc}: parent '{p}' (dropping '{i}') lies over {sorted(index_of[p])}, expected {sorted(want)}"
                    )
            else:
                cands = by_index.get(want, [])
                if len(cands) == 1:
                    parents[i] = cands[0]
                elif not cands:
                    raise ModelError(f"{loc}: no stratum over {sorted(want)} to serve as parent (dropping '{i}')")
                else:
                    raise ModelError(
                        f"{loc}: parent for dropping '{i}' is ambiguous among {cands}; list it explicitly"
                    )

    # touches: derived set from children must be contained in the declared one
    derived: dict[str, set] = {e[0]: set() for e in entries}
    for sid, index, _, parents, _ in entries:
        for i, p in parents.items():
            derived[p].add(i)
    for e in entries:
        sid, index, touches, parents, loc = e
        if touches is None:
            e[2] = frozenset(derived[sid])
        else:
            missing = derived[sid] - set(touches)
            if missing:
                raise ModelError(
                    f"{loc}: touches omits {sorted(missing)} although a child stratum meets those components"
                )
            e[2] = frozenset(touches)

    comps = {e[0]: StratumComponent(e[0], e[1], e[2], MappingProxyType(dict(e[3]))) for e in entries}

    # monotonicity and commuting parents
    for sid, s in comps.items():
        loc = loc_of[sid]
        for i, p in s.parents.items():
            sp = comps[p]
            if not s.touches <= sp.touches:
                raise ModelError(
                    f"{loc}: monotonicity violated: touches {sorted(s.touches - sp.touches)} "
                    f"not touched by parent '{p}'"
                )
            if i not in sp.touches:
                raise ModelError(f"{loc}: monotonicity violated: parent '{p}' does not list dropped index '{i}' in touches")
        if s.depth >= 3:
            for i in s.index:
                for i2 in s.index:
                    if i2 <= i:
                        continue
                    a = comps[comps[s.parents[i]].parents[i2]].id
                    b = comps[comps[s.parents[i2]].parents[i]].id
                    if a != b:
                        raise ModelError(
                            f"{loc}: parent maps do not commute: dropping '{i}' then '{i2}' gives '{a}', "
                            f"the other order gives '{b}'"
                        )

    # keep declaration order, implicit singletons last
    return StrataTable([comps[e[0]] for e in entries], vertical_ids)


def parse_model(document) -> DegenerationModel:
    """Parse and validate a model from a dict, a JSON string, or a path."""
    if isinstance(document, Path):
        return load_model(document)
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise ModelError(f"JSON syntax error at line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(document, dict):
        raise ModelError("model document must be a JSON object")
    for key in ("n", "vertical"):
        if key not in document:
            raise ModelError(f"model: missing required key '{key}'")
    n = document["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise ModelError(f"model.n: expected a non-negative integer, got {n!r}")
    raw_vert = document["vertical"]
    if not isinstance(raw_vert, list) or not raw_vert:
        raise ModelError("model.vertical: need at least one vertical component")
    vertical = []
    seen = set()
    for k, v in enumerate(raw_vert):
        loc = f"vertical[{k}]"
        if not isinstance(v, dict) or "id" not in v or "multiplicity" not in v:
            raise ModelError(f"{loc}: expected {{id, multiplicity}}")
        vid, m = v["id"], v["multiplicity"]
        if not isinstance(vid, str):
            raise ModelError(f"{loc}: id {vid!r} is not a string")
        if vid in seen:
            raise ModelError(f"{loc}: duplicate vertical id '{vid}'")
        if not isinstance(m, int) or isinstance(m, bool) or m < 1:
            raise ModelError(f"{loc} ('{vid}'): multiplicity must be a positive integer, got {m!r}")
        seen.add(vid)
        vertical.append(VerticalComponent(vid, m))
    vids = [v.id for v in vertical]
    table = _build_table(document.get("strata", []), vids, "strata", auto_singletons=True)
    if table.max_depth() > n + 1:
        raise ModelError(f"model: a stratum has {table.max_depth()} indices but n + 1 = {n + 1}")

    horizontal = []
    hseen = set()
    for k, h in enumerate(document.get("horizontal", []) or []):
        loc = f"horizontal[{k}]"
        if not isinstance(h, dict) or "id" not in h:
            raise ModelError(f"{loc}: expected an object with 'id', 'strata', 'lift'")
        hid = h["id"]
        loc = f"horizontal[{k}] ('{hid}')"
        if hid in hseen:
            raise ModelError(f"{loc}: duplicate horizontal id")
        hseen.add(hid)
        sub = _build_table(h.get("strata", []), vids, loc + ".strata", auto_singletons=False)
        if sub.max_depth() > n:
            raise ModelError(f"{loc}: sub-model stratum deeper than n = {n}")
        lift = h.get("lift", {})
        if not isinstance(lift, dict):
            raise ModelError(f"{loc}.lift: expected an object sub-stratum -> stratum")
        for s in sub:
            if s.id not in lift:
                raise ModelError(f"{loc}.lift: sub-stratum '{s.id}' has no lift")
            up = lift[s.id]
            if up not in table:
                raise ModelError(f"{loc}.lift: '{s.id}' lifts to unknown stratum '{up}'")
            if table[up].index != s.index:
                raise ModelError(f"{loc}.lift: '{s.id}' over {sorted(s.index)} lifts to '{up}' over {sorted(table[up].index)}")
            if not s.touches <= table[up].touches:
                raise ModelError(f"{loc}.lift: '{s.id}' touches {sorted(s.touches - table[up].touches)} but '{up}' does not")
            for i, p in s.parents.items():
                if lift[p] != table[up].parents[i]:
                    raise ModelError(
                        f"{loc}.lift: lift does not commute with parents at '{s.id}' (dropping '{i}')"
                    )
        extra = set(lift) - set(sub.components)
        if extra:
            raise ModelError(f"{loc}.lift: unknown sub-strata {sorted(extra)}")
        horizontal.append(HorizontalDivisor(hid, sub, MappingProxyType(dict(lift))))

    flags = document.get("flags", {}) or {}
    if not isinstance(flags, dict):
        raise ModelError("model.flags: expected an object")
    if flags.get("proper") and horizontal:
        raise ModelError("model.flags: 'proper' is set but horizontal divisors are present")
    if flags.get("isolated_singularity_compactification") and horizontal:
        raise ModelError("model.flags: the isolated-singularity setting requires D to be empty")
    return DegenerationModel(
        n=n,
        vertical=tuple(vertical),
        strata=table,
        horizontal=tuple(horizontal),
        flags=MappingProxyType(dict(flags)),
        name=str(document.get("name", "")),
    )


def load_model(path) -> DegenerationModel:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ModelError(f"{path}: cannot read ({exc.strerror})") from None
    try:
        return parse_model(text)
    except ModelError as exc:
        raise ModelError(f"{path}: {exc}") from None


def _table_json(table: StrataTable, sub: bool):
    out = []
    for s in table:
        out.append(
            {
                "id": s.id,
                "I": table.sorted_index(s.index),
                "touches": table.sorted_index(s.touches),
                "parents": {i: s.parents[i] for i in table.sorted_index(s.parents)},
            }
        )
    return out


def serialize_model(model: DegenerationModel) -> dict:
    """Fully explicit JSON-ready form; parse_model inverts it."""
    doc = {"n": model.n}
    if model.name:
        doc["name"] = model.name
    doc["vertical"] = [{"id": v.id, "multiplicity": v.multiplicity} for v in model.vertical]
    doc["strata"] = _table_json(model.strata, False)
    doc["horizontal"] = [
        {"id": h.id, "strata": _table_json(h.strata, True), "lift": dict(h.lift)} for h in model.horizontal
    ]
    doc["flags"] = dict(model.flags)
    return doc


def dump_model(model: DegenerationModel, path) -> None:
    Path(path).write_text(json.dumps(serialize_model(model), indent=1) + "\n", encoding="utf-8")


# ---------------------------------------------------------------------------
# eigenvalue bookkeeping


def lambda_orders(model: DegenerationModel) -> list[int]:
    """Orders d >= 1 dividing at least one multiplicity."""
    out = set()
    for v in model.vertical:
        m = v.multiplicity
        for d in range(1, math.isqrt(m) + 1):
            if m % d == 0:
                out.add(d)
                out.add(m // d)
    return sorted(out)


def j_set(model: DegenerationModel, d: int) -> frozenset:
    """{i : lambda^{m_i} = 1} for lambda of order d, i.e. d | m_i."""
    if d < 1:
        raise PreconditionError(f"order must be positive, got {d}")
    return frozenset(v.id for v in model.vertical if v.multiplicity % d == 0)


def lambda_strata(model: DegenerationModel, d: int, index: Iterable[str]) -> list[StratumComponent]:
    """Components of Y_I meeting no Y_i' with i' outside J(lambda)."""
    jset = j_set(model, d)
    index = frozenset(index)
    if not index <= jset:
        raise PreconditionError(f"I = {sorted(index)} is not contained in J for order {d} (J = {sorted(jset)})")
    return [s for s in model.strata.over(index) if not (s.touches - jset)]
