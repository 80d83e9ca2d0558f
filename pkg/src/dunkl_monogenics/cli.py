"""Command line: build bases, run verification suites, tabulate dimensions.

Exit codes: 0 when everything passes, 1 on an identity or basis failure,
2 on a configuration error.

A JSON config file may supply any of the keys ``group``, ``kappa``, ``eps``
(or ``epsilon``), ``degree``, ``max_degree``, ``suite``, ``kind``, ``format``
and ``roots``; command-line flags take precedence.
"""
from __future__ import annotations

import argparse
import json
import sys

from gmpy2 import mpq

from .bases import Bases, BasisError, expected_dim
from .dunkl import DunklSetting
from .projections import ProjectionError
from .roots import RootSystemError, build_group
from .scalar import format_scalar, parse_scalar
from .suites import run_suite, suite_names

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2

_DEFAULTS = {"eps": -1, "degree": 2, "max_degree": 3, "suite": "all", "kind": "maxwell",
             "format": "json"}


class ConfigError(ValueError):
    pass


def _parse_kappa(value):
    items = value.split(",") if isinstance(value, str) else list(value)
    out = []
    for item in items:
        text = str(item).strip()
        try:
            out.append(mpq(text))
        except ValueError as exc:
            raise ConfigError(f"multiplicity {text!r} is not an exact rational") from exc
    if not out:
        raise ConfigError("empty multiplicity list")
    return out


def _parse_eps(value):
    try:
        eps = int(str(value).strip())
    except ValueError:
        eps = None
    if eps not in (1, -1):
        raise ConfigError(f"eps must be +1 or -1, got {value!r}")
    return eps


def _parse_roots(value):
    """Roots as ``"1,0;0,1"`` or a nested list; entries may use ``sqrt(m)``."""
    if isinstance(value, str):
        rows = [r.split(",") for r in value.split(";") if r.strip()]
    else:
        rows = value
    try:
        return [tuple(parse_scalar(str(a)) for a in r) for r in rows]
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc


def _int(name, value):
    try:
        n = int(value)
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{name} must be an integer, got {value!r}") from exc
    if n < 0:
        raise ConfigError(f"{name} must be non-negative")
    return n


def resolve_config(args) -> dict:
    """Merge defaults, the optional config file and explicit flags."""
    conf = dict(_DEFAULTS)
    if args.config:
        try:
            with open(args.config, encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config file: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError("config file must hold a JSON object")
        if "epsilon" in data:
            data.setdefault("eps", data.pop("epsilon"))
        unknown = set(data) - {"group", "kappa", "eps", "degree", "max_degree", "suite",
                               "kind", "format", "roots"}
        if unknown:
            raise ConfigError(f"unknown config keys: {', '.join(sorted(unknown))}")
        conf.update(data)
    for key in ("group", "kappa", "eps", "degree", "max_degree", "suite", "kind", "format",
                "roots"):
        value = getattr(args, key, None)
        if value is not None:
            conf[key] = value
    if "group" not in conf or "kappa" not in conf:
        raise ConfigError("both a group and kappa are required")
    conf["kappa"] = _parse_kappa(conf["kappa"])
    conf["eps"] = _parse_eps(conf["eps"])
    conf["degree"] = _int("degree", conf["degree"])
    conf["max_degree"] = _int("max-degree", conf["max_degree"])
    if conf.get("roots") is not None:
        conf["roots"] = _parse_roots(conf["roots"])
    return conf


def make_setting(conf) -> DunklSetting:
    try:
        roots = build_group(conf["group"], conf["kappa"], conf.get("roots"))
    except RootSystemError as exc:
        raise ConfigError(str(exc)) from exc
    return DunklSetting(roots, conf["eps"])


def _meta(conf, setting):
    return {"group": conf["group"], "d": setting.d,
            "kappa": [format_scalar(k) for k in conf["kappa"]],
            "eps": conf["eps"], "degree": conf["degree"]}


def cmd_basis(conf, out) -> int:
    setting = make_setting(conf)
    kind, fmt = conf["kind"], conf["format"]
    if kind not in ("maxwell", "ck", "partial-z"):
        raise ConfigError(f"unknown basis kind {kind!r}")
    if fmt not in ("json", "csv", "latex"):
        raise ConfigError(f"unknown format {fmt!r}")
    try:
        basis = Bases(setting).build(kind, conf["degree"])
    except BasisError as exc:
        if "requires" in str(exc):
            raise ConfigError(str(exc)) from exc
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    basis.meta = _meta(conf, setting)
    if fmt == "json":
        out.write(json.dumps(basis.to_json_obj(), sort_keys=True, indent=2) + "\n")
    elif fmt == "csv":
        out.write(basis.to_csv())
    else:
        out.write(basis.to_latex())
    return EXIT_OK


def cmd_verify(conf, out) -> int:
    setting = make_setting(conf)
    if conf["suite"] not in suite_names():
        raise ConfigError(f"unknown suite {conf['suite']!r}; choose from {', '.join(suite_names())}")
    try:
        reports = run_suite(conf["suite"], setting, conf["max_degree"])
    except (BasisError, ProjectionError) as exc:
        out.write(f"[FAIL] {conf['suite']}: {exc}\n")
        return EXIT_FAIL
    for r in reports:
        out.write(r.line() + "\n")
    failed = sum(not r.ok for r in reports)
    out.write(f"{len(reports) - failed} passed, {failed} failed\n")
    return EXIT_FAIL if failed else EXIT_OK


def cmd_dims(conf, out) -> int:
    setting = make_setting(conf)
    bases = Bases(setting)
    out.write("n\texpected\trank\n")
    ok = True
    for n in range(conf["degree"] + 1):
        want = expected_dim(setting.d, n, setting.dim)
        got = bases.maxwell_basis(n, strict=False).rank
        ok &= got == want
        out.write(f"{n}\t{want}\t{got}\n")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON config file; flags override its values")
    common.add_argument("--group", help="z2^d, b2 or roots")
    common.add_argument("--kappa", help="comma-separated exact rationals, one per root class")
    common.add_argument("--eps", help="Clifford sign, +1 or -1 (default -1)")
    common.add_argument("--roots", help="explicit roots for --group roots, e.g. '1,0;0,1'")

    p = argparse.ArgumentParser(prog="dunkl-monogenics", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    b = sub.add_parser("basis", parents=[common], help="build a basis of M_n")
    b.add_argument("--degree", type=int)
    b.add_argument("--kind", choices=["maxwell", "ck", "partial-z"])
    b.add_argument("--format", choices=["json", "csv", "latex"])
    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("--suite", help=", ".join(suite_names()))
    v.add_argument("--max-degree", dest="max_degree", type=int)
    d = sub.add_parser("dims", parents=[common], help="dimension table for n = 0..degree")
    d.add_argument("--degree", type=int)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else EXIT_OK
    try:
        conf = resolve_config(args)
        handler = {"basis": cmd_basis, "verify": cmd_verify, "dims": cmd_dims}[args.command]
        return handler(conf, out)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
