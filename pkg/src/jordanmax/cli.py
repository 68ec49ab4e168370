"""Command-line front end.

Every command validates its inputs completely before computing anything.
Exit status: 0 on success, 1 on input errors, 2 on internal
inconsistencies (a differential that does not square to zero, a morphism
that does not commute).
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from . import __version__
from .corpus import bundled_path
from .criteria import (
    curve_nu_03,
    load_h1_data,
    load_hyperresolution,
    singular_nu_c,
    singular_nu_c_upper,
    theorem3_nu,
    theorem4_check,
)
from .eigen import (
    EigenvalueSpec,
    TrivializationAtlas,
    build_b_complex,
    build_c_complex,
    canonical_atlas,
    default_orders,
    exponents_for,
    jordan_report,
    load_atlas,
    nu_vector,
)
from .errors import InconsistencyError, InputError, JordanMaxError
from .model import DegenerationModel, j_set, lambda_orders, load_model
from .spectrum import parse_exponents, spectrum_homogeneous, spectrum_yomdin

__all__ = ["RunConfig", "run", "main", "build_parser"]


@dataclass
class RunConfig:
    command: str
    model: str | None = None
    atlas: str | None = None
    h1: str | None = None
    lam: str = "all"
    degree: int | None = None
    fmt: str = "tsv"
    kind: str = "b"
    scope: str = "per_stratum"
    via: str = "computed"
    duality: bool = True
    upper: bool = False
    n: int | None = None
    d: int | None = None
    k: int | None = None
    alphas: str | None = None
    alphas_file: str | None = None
    shift: bool = False
    extra: dict = field(default_factory=dict)


def _resolve(path: str) -> Path:
    """The given path, or the bundled file with the same name if it does not exist."""
    p = Path(path)
    if p.exists():
        return p
    fallback = bundled_path(p.name)
    if fallback.exists():
        return fallback
    raise InputError(f"{path}: no such file")


def _companion(model_path: Path, suffix: str) -> Path | None:
    stem = model_path.name[: -len(".json")] if model_path.name.endswith(".json") else model_path.stem
    cand = model_path.with_name(f"{stem}.{suffix}.json")
    return cand if cand.exists() else None


def _load(cfg: RunConfig) -> tuple[DegenerationModel, TrivializationAtlas, Path]:
    if not cfg.model:
        raise InputError(f"{cfg.command}: a model file is required")
    path = _resolve(cfg.model)
    model = load_model(path)
    if cfg.atlas == "canonical":
        atlas = canonical_atlas(model)
    elif cfg.atlas:
        atlas = load_atlas(_resolve(cfg.atlas), model)
    else:
        comp = _companion(path, "atlas")
        atlas = load_atlas(comp, model) if comp else TrivializationAtlas()
    return model, atlas, path


def _eigenvalues(cfg: RunConfig, model, atlas) -> list[EigenvalueSpec]:
    if cfg.lam == "all":
        orders, _ = default_orders(model, atlas)
        return [EigenvalueSpec(d, a) for d in orders for a in exponents_for(d)]
    if ":" in cfg.lam:
        return [EigenvalueSpec.parse(cfg.lam)]
    try:
        d = int(cfg.lam)
    except ValueError:
        raise InputError(f"--lambda: expected all, d or d:a, got '{cfg.lam}'") from None
    return [EigenvalueSpec(d, a) for a in exponents_for(d)] if d >= 1 else [EigenvalueSpec(d)]


def _degrees(cfg: RunConfig, n: int) -> list[int]:
    if cfg.degree is None:
        return list(range(n + 1))
    if not 0 <= cfg.degree <= n:
        raise InputError(f"--degree {cfg.degree} outside [0, {n}]")
    return [cfg.degree]


def _emit(out, header: Sequence[str], rows: list[Sequence], fmt: str):
    rows = [[str(x) for x in r] for r in rows]
    if fmt == "pretty":
        widths = [max([len(h)] + [len(r[k]) for r in rows]) for k, h in enumerate(header)]
        out.write("  ".join(h.rjust(w) for h, w in zip(header, widths)).rstrip() + "\n")
        for r in rows:
            out.write("  ".join(x.rjust(w) for x, w in zip(r, widths)).rstrip() + "\n")
    else:
        out.write("\t".join(header) + "\n")
        for r in rows:
            out.write("\t".join(r) + "\n")


def _cmd_validate(cfg, out):
    model, atlas, path = _load(cfg)
    out.write(
        f"ok\t{path.name}\tn={model.n}\tvertical={len(model.vertical)}\tstrata={len(model.strata)}"
        f"\thorizontal={len(model.horizontal)}\n"
    )
    if atlas.blocks or atlas.horizontal:
        out.write(f"ok\tatlas\torders={','.join(str(d) for d in atlas.orders)}\n")
    if cfg.h1:
        h1 = load_h1_data(_resolve(cfg.h1))
        out.write(f"ok\th1\ttargets={len(h1)}\n")


def _cmd_orders(cfg, out):
    model, _, _ = _load(cfg)
    rows = [(d, ",".join(model.strata.sorted_index(j_set(model, d)))) for d in lambda_orders(model)]
    _emit(out, ("d", "J"), rows, cfg.fmt)


def _cmd_complex(cfg, out):
    model, atlas, _ = _load(cfg)
    rows = []
    for eig in _eigenvalues(cfg, model, atlas):
        if cfg.kind == "c":
            cx = build_c_complex(model, eig.d, eig.a)
        else:
            cx = build_b_complex(model, eig.d, atlas, eig.a)
        h = cx.cohomology()
        for j in _degrees(cfg, model.n):
            rows.append((eig.d, eig.a, j, cx.dims[j], h[j]))
    _emit(out, ("d", "a", "j", "dim", "h"), rows, cfg.fmt)


def _cmd_nu(cfg, out, which):
    model, atlas, _ = _load(cfg)
    rows = []
    for eig in _eigenvalues(cfg, model, atlas):
        h, hc = nu_vector(model, atlas, eig.d, eig.a)
        vals = h if which == "nu" else hc
        for j in _degrees(cfg, model.n):
            rows.append((eig.d, eig.a, j, vals[j]))
    _emit(out, ("d", "a", "j", which.replace("nuc", "nu_c")), rows, cfg.fmt)


def _cmd_report(cfg, out, err):
    model, atlas, _ = _load(cfg)
    orders = exps = None
    if cfg.lam != "all":
        eigs = _eigenvalues(cfg, model, atlas)
        orders = sorted({e.d for e in eigs})
        exps = sorted({e.a for e in eigs}) if ":" in cfg.lam else None
    report = jordan_report(model, atlas, orders, exps, duality=cfg.duality, via=cfg.via)
    rows = [(r.d, r.a, r.j, r.nu, r.nu_c, r.source) for r in report.rows]
    _emit(out, ("d", "a", "j", "nu", "nu_c", "source"), rows, cfg.fmt)
    for note in report.diagnostics:
        err.write(f"note: {note}\n")


def _cmd_theorem3(cfg, out):
    model, atlas, _ = _load(cfg)
    rows = []
    for eig in _eigenvalues(cfg, model, atlas):
        vec = theorem3_nu(model, atlas, eig.d, eig.a)
        for j in _degrees(cfg, model.n):
            rows.append((eig.d, eig.a, j, vec[j], "theorem3"))
    _emit(out, ("d", "a", "j", "nu", "source"), rows, cfg.fmt)


def _cmd_theorem4(cfg, out):
    model, _, path = _load(cfg)
    h1_path = _resolve(cfg.h1) if cfg.h1 else _companion(path, "h1")
    if h1_path is None:
        raise InputError("theorem4: --h1 is required (no companion .h1.json next to the model)")
    h1 = load_h1_data(h1_path)
    if cfg.lam == "all":
        orders = [d for d in lambda_orders(model) if d > 1]
    else:
        orders = sorted({e.d for e in _eigenvalues(cfg, model, TrivializationAtlas())})
    rows = []
    for d in orders:
        v = theorem4_check(model, d, h1, cfg.scope)
        for target, ok in sorted(v.targets.items()):
            rows.append((d, "target", target, "vanishes" if ok else "nonzero"))
        for j, ok in sorted(v.degrees.items()):
            rows.append((d, "degree", j, "B=C" if ok else "undecided"))
        if v.complex_equal is not None:
            rows.append((d, "complex", "-", "B=C" if v.complex_equal else "undecided"))
    _emit(out, ("d", "kind", "target", "verdict"), rows, cfg.fmt)


def _cmd_curve03(cfg, out, err):
    model, atlas, _ = _load(cfg)
    rows = []
    orders = sorted({e.d for e in _eigenvalues(cfg, model, atlas)})
    for d in orders:
        if d == 1:
            continue
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            value = curve_nu_03(model, d)
        for w in caught:
            err.write(f"warning: d={d}: {w.message}\n")
        rows.append((d, 1, value))
    _emit(out, ("d", "j", "nu"), rows, cfg.fmt)


def _cmd_singular(cfg, out):
    if not cfg.model:
        raise InputError("singular-nuc: a hyperresolution file is required")
    inp = load_hyperresolution(_resolve(cfg.model))
    model = inp.x0
    rows = []
    for eig in _eigenvalues(cfg, model, inp.x0_atlas):
        for j in _degrees(cfg, model.n):
            if cfg.upper:
                rows.append((eig.d, eig.a, 2 * model.n - j, singular_nu_c_upper(inp, eig.d, eig.a, j)))
            else:
                rows.append((eig.d, eig.a, j, singular_nu_c(inp, eig.d, eig.a, j)))
    _emit(out, ("d", "a", "j", "nu_c"), rows, cfg.fmt)


def _cmd_spectrum(cfg, out):
    if cfg.n is None or cfg.d is None:
        raise InputError("spectrum: --n and --d are required")
    if cfg.alphas_file:
        p = _resolve(cfg.alphas_file)
        try:
            raw = json.loads(p.read_text(encoding="utf-8"))
        except json.JSONDecodeError as exc:
            raise InputError(f"{p}: JSON syntax error at line {exc.lineno}: {exc.msg}") from None
        if isinstance(raw, dict):
            raw = raw.get("alphas", [])
        alphas = parse_exponents(",".join(str(x) for x in raw))
    else:
        alphas = parse_exponents(cfg.alphas or "")
    if cfg.k is None:
        sp = spectrum_homogeneous(cfg.n, cfg.d, alphas)
    else:
        sp = spectrum_yomdin(cfg.n, cfg.d, cfg.k, alphas)
    if cfg.shift:
        sp = sp.shift(-1)
    for e, m in sp.items():
        out.write(f"{e}\t{m}\n")


def run(cfg: RunConfig, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    buf: list[str] = []

    class _Buffer:
        def write(self, s):
            buf.append(s)

    b = _Buffer()
    try:
        if cfg.command == "validate":
            _cmd_validate(cfg, b)
        elif cfg.command == "orders":
            _cmd_orders(cfg, b)
        elif cfg.command == "complex":
            _cmd_complex(cfg, b)
        elif cfg.command in ("nu", "nuc"):
            _cmd_nu(cfg, b, cfg.command)
        elif cfg.command == "report":
            _cmd_report(cfg, b, err)
        elif cfg.command == "theorem3":
            _cmd_theorem3(cfg, b)
        elif cfg.command == "theorem4":
            _cmd_theorem4(cfg, b)
        elif cfg.command == "curve03":
            _cmd_curve03(cfg, b, err)
        elif cfg.command == "singular-nuc":
            _cmd_singular(cfg, b)
        elif cfg.command == "spectrum":
            _cmd_spectrum(cfg, b)
        else:
            raise InputError(f"unknown command '{cfg.command}'")
    except InconsistencyError as exc:
        err.write(f"error: {exc}\n")
        return 2
    except InputError as exc:
        err.write(f"error: {exc}\n")
        return 1
    except JordanMaxError as exc:
        err.write(f"error: {exc}\n")
        return 2
    # nothing is printed unless the whole command succeeded
    out.write("".join(buf))
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"error: {message}\n")
        raise SystemExit(1)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="jordanmax", description="Maximal Jordan block counts from SNC degeneration models.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp, atlas=True, lam=True, degree=True):
        sp.add_argument("model", help="model file (bundled names such as ex4_3A.json also work)")
        if atlas:
            sp.add_argument("--atlas", help="atlas file, or 'canonical'; default: <model>.atlas.json if present")
        if lam:
            sp.add_argument("--lambda", dest="lam", default="all", help="all | d | d:a")
        if degree:
            sp.add_argument("--degree", type=int)
        sp.add_argument("--format", dest="fmt", choices=("tsv", "pretty"), default="tsv")

    sp = sub.add_parser("validate", help="check a model (and atlas, H_1 data)")
    common(sp, lam=False, degree=False)
    sp.add_argument("--h1")
    common(sub.add_parser("orders", help="orders d dividing some multiplicity, with J(d)"), atlas=False, lam=False, degree=False)
    sp = sub.add_parser("complex", help="dimensions and cohomology of C or B")
    common(sp)
    sp.add_argument("--kind", choices=("c", "b"), default="b")
    common(sub.add_parser("nu", help="nu^j = dim H^j B"))
    common(sub.add_parser("nuc", help="nu_c^j from the restriction to D"))
    sp = sub.add_parser("report", help="full table including the duality range")
    common(sp, degree=False)
    sp.add_argument("--via", choices=("computed", "theorem3"), default="computed")
    sp.add_argument("--no-duality", dest="duality", action="store_false")
    common(sub.add_parser("theorem3", help="nu from the Euler characteristic of B"))
    sp = sub.add_parser("theorem4", help="H_1 vanishing checks for B = C")
    common(sp, atlas=False, degree=False)
    sp.add_argument("--h1", help="H_1 data file; default: <model>.h1.json if present")
    sp.add_argument("--scope", choices=("per_stratum", "union"), default="per_stratum")
    common(sub.add_parser("curve03", help="pair-count formula for curves"), degree=False)
    sp = sub.add_parser("singular-nuc", help="nu_c through a hyperresolution")
    sp.add_argument("model", metavar="hyperresolution")
    sp.add_argument("--lambda", dest="lam", default="all")
    sp.add_argument("--degree", type=int)
    sp.add_argument("--upper", action="store_true", help="report nu_c^(2n-j) = dim H^j B(X0)")
    sp.add_argument("--format", dest="fmt", choices=("tsv", "pretty"), default="tsv")
    sp = sub.add_parser("spectrum", help="spectrum of a homogeneous or Yomdin-type singularity")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--k", type=int)
    sp.add_argument("--alphas", default="")
    sp.add_argument("--alphas-file")
    sp.add_argument("--shift", action="store_true", help="subtract 1 from every exponent")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(**{k: v for k, v in vars(args).items() if k in RunConfig.__dataclass_fields__})
    return run(cfg)


if __name__ == "__main__":
    raise SystemExit(main())
