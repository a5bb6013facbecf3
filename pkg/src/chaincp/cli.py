"""Command-line front end.

One executable, ``chaincp``, with a ``--mode`` switch.  Parameters resolve in
a fixed precedence order: built-in defaults, then a ``--preset``, then a
``--config`` file of ``key = value`` lines, then command-line flags.  Every
run writes a single deterministic table (CSV with ``# key = value`` header
lines, or the same content as JSON), so repeated runs with the same inputs
are byte-identical.

Exit codes: 0 success; 2 configuration or usage problems; 3 parameters
outside the validity regime; 4 convergence or cross-check failures.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass

import numpy as np

from ._version import __version__
from .casimir import cp_energy, decay_profile, force_curve
from .errors import ConvergenceError, RegimeViolation
from .lattice import SymmetricSystem, brillouin_modes, dispersion, validate_regime
from .oracle import cp_energy_ed, cp_energy_quadrature
from .thermal import thermal_energy, thermal_force

MODES = (
    "force-sweep",
    "hopping-sweep",
    "detuning-sweep",
    "decay-profile",
    "thermal-sweep",
    "oracle-check",
    "dispersion-dump",
)

FORMATS = ("csv", "json")

#: Environment variable consulted for the default output directory; it has
#: no other effect, and an explicit --output always wins.
OUTDIR_ENV = "CHAINCP_OUTDIR"

#: oracle-check tolerances: quadrature must match the closed form to float
#: accuracy, diagonalisation carries percent-level fourth-order systematics.
QUAD_TOL = 1e-9
ED_TOL = 1e-2

PRESETS: dict[str, dict] = {
    # force vs separation for two hoppings at fixed detuning
    "fig2": {"mode": "force-sweep", "lambda": 0.01, "delta": -1.0, "eps0": 1.0,
             "N": 200, "rmin": 1, "rmax": 10, "j_values": (0.3, 0.4)},
    # force vs separation for two detunings at fixed hopping
    "fig3": {"mode": "force-sweep", "lambda": 0.01, "eps0": 1.0, "J": 0.6,
             "N": 200, "rmin": 1, "rmax": 10, "delta_values": (-2.0, -3.0)},
    # decay rate and range across the band parameter
    "fig4": {"mode": "decay-profile", "delta": -1.0, "eps0": 1.0, "lambda": 0.01,
             "amin": -0.99, "amax": -0.01, "asteps": 100},
    # thermal force for three temperatures and three chain lengths
    "fig5": {"mode": "thermal-sweep", "lambda": 0.1, "delta": -1.0, "eps0": 1.0,
             "J": 0.3, "temperatures": (0.0, 0.1, 1.0), "n_values": (100, 200, 400),
             "rmin": 1, "rmax": 8},
}


class ConfigError(ValueError):
    """Bad flag, file, or value; maps to exit code 2."""


_DEFAULTS: dict = {
    "mode": None, "format": "csv", "output": None,
    "eps0": 1.0, "omega": None, "delta": -1.0, "J": 0.3, "lambda": 0.01,
    "N": 200, "R": 1, "rmin": 1, "rmax": 10,
    "temperatures": (0.0, 0.1, 1.0),
    "n_values": None, "j_values": None, "delta_values": None,
    "amin": -0.99, "amax": -0.01, "asteps": 100,
    "jmin": 0.02, "jmax": 0.48, "jsteps": 24,
    "dmin": -3.0, "dmax": -0.7, "dsteps": 24,
    "max_points": 2 ** 22,
}

_FLOAT_KEYS = {"eps0", "omega", "delta", "J", "lambda",
               "amin", "amax", "jmin", "jmax", "dmin", "dmax"}
_INT_KEYS = {"N", "R", "rmin", "rmax", "asteps", "jsteps", "dsteps", "max_points"}
_FLOAT_TUPLE_KEYS = {"temperatures", "j_values", "delta_values"}
_INT_TUPLE_KEYS = {"n_values"}
_STR_KEYS = {"mode", "format", "output"}
_ALL_KEYS = _FLOAT_KEYS | _INT_KEYS | _FLOAT_TUPLE_KEYS | _INT_TUPLE_KEYS | _STR_KEYS


def _coerce(key: str, raw) -> object:
    """Parse a raw (usually string) value into the type the key expects."""
    if not isinstance(raw, str):
        return raw
    text = raw.strip()
    try:
        if key in _FLOAT_KEYS:
            return float(text)
        if key in _INT_KEYS:
            return int(text)
        if key in _FLOAT_TUPLE_KEYS:
            return tuple(float(part) for part in text.split(","))
        if key in _INT_TUPLE_KEYS:
            return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ConfigError(f"cannot parse value {raw!r} for key {key!r}") from None
    return text


def _parse_config_file(path: str) -> dict[str, object]:
    """Read ``key = value`` lines; ``#`` starts a comment line."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from exc

    values: dict[str, object] = {}
    for lineno, line in enumerate(lines, 1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        if "=" not in text:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {line.rstrip()!r}")
        key, _, raw = text.partition("=")
        key = key.strip()
        if key == "preset":
            raise ConfigError(f"{path}:{lineno}: a preset can only be chosen on the command line")
        if key not in _ALL_KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        if key in values:
            raise ConfigError(f"{path}:{lineno}: duplicate key {key!r}")
        values[key] = _coerce(key, raw)
    return values


@dataclass(frozen=True)
class RunConfig:
    """Fully resolved parameters for one CLI run."""

    mode: str
    fmt: str
    output: str | None
    preset: str | None
    eps0: float
    delta: float
    J: float
    lam: float
    N: int
    R: int
    rmin: int
    rmax: int
    temperatures: tuple[float, ...]
    n_values: tuple[int, ...] | None
    j_values: tuple[float, ...] | None
    delta_values: tuple[float, ...] | None
    amin: float
    amax: float
    asteps: int
    jmin: float
    jmax: float
    jsteps: int
    dmin: float
    dmax: float
    dsteps: int
    max_points: int
    sources: tuple[tuple[str, str], ...]

    @property
    def omega(self) -> float:
        return self.eps0 - self.delta


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chaincp",
        description="Casimir-Polder energies and forces for two impurities on a tight-binding chain.",
    )
    parser.add_argument("--mode", choices=MODES, help="what to compute")
    parser.add_argument("--preset", choices=sorted(PRESETS), help="named parameter set")
    parser.add_argument("--config", metavar="PATH", help="file of 'key = value' lines")
    parser.add_argument("--format", dest="format", choices=FORMATS, help="output format (default csv)")
    parser.add_argument("-o", "--output", metavar="PATH",
                        help="output file, '-' for stdout (default <mode>.<format> "
                             f"in the current dir or ${OUTDIR_ENV})")
    for key in ("eps0", "omega", "delta", "J", "lambda",
                "amin", "amax", "jmin", "jmax", "dmin", "dmax"):
        parser.add_argument(f"--{key}", metavar="X", help=f"{key} (float)")
    for key in ("N", "R", "rmin", "rmax", "asteps", "jsteps", "dsteps", "max_points"):
        parser.add_argument(f"--{key.replace('_', '-')}", dest=key, metavar="K", help=f"{key} (int)")
    for key in ("temperatures", "j_values", "delta_values", "n_values"):
        parser.add_argument(f"--{key.replace('_', '-')}", dest=key, metavar="A,B,...",
                            help=f"{key} (comma separated)")
    return parser


def load_config(argv: list[str] | None = None) -> RunConfig:
    """Resolve defaults, preset, config file, and flags into a RunConfig.

    Raises
    ------
    ConfigError
        For unknown keys, malformed values, inconsistent or out-of-range
        parameters.
    """
    args = _build_parser().parse_args(argv)

    merged = dict(_DEFAULTS)
    sources: dict[str, str] = {}

    if args.preset is not None:
        for key, value in PRESETS[args.preset].items():
            merged[key] = value
            sources[key] = "preset"

    if args.config is not None:
        for key, value in _parse_config_file(args.config).items():
            merged[key] = value
            sources[key] = "file"

    flag_keys = set()
    for key in _ALL_KEYS:
        raw = getattr(args, key, None)
        if raw is not None:
            merged[key] = _coerce(key, raw)
            sources[key] = "flag"
            flag_keys.add(key)

    # A scalar given on the command line supersedes a series the preset or
    # file would have swept over (--J against fig2's j_values, say).
    for scalar, series in (("J", "j_values"), ("delta", "delta_values"), ("N", "n_values")):
        if scalar in flag_keys and series not in flag_keys:
            merged[series] = None

    # omega is an alternative way to state the detuning.
    if merged["omega"] is not None:
        implied = merged["eps0"] - merged["omega"]
        if "delta" in sources and abs(implied - merged["delta"]) > 1e-12:
            raise ConfigError(
                f"omega={merged['omega']} implies delta={implied}, "
                f"which contradicts delta={merged['delta']}"
            )
        merged["delta"] = implied
        sources["delta"] = sources.get("omega", "flag")

    if merged["mode"] is None:
        raise ConfigError("no mode: pass --mode or a --preset that sets one")
    if merged["mode"] not in MODES:
        raise ConfigError(f"unknown mode {merged['mode']!r}; choose from {', '.join(MODES)}")
    if merged["format"] not in FORMATS:
        raise ConfigError(f"unknown format {merged['format']!r}; choose csv or json")

    for key, low in (("N", 1), ("R", 1), ("rmin", 1), ("max_points", 64),
                     ("asteps", 2), ("jsteps", 2), ("dsteps", 2)):
        if merged[key] < low:
            raise ConfigError(f"{key} must be >= {low}, got {merged[key]}")
    if merged["rmax"] < merged["rmin"]:
        raise ConfigError(f"rmax={merged['rmax']} is below rmin={merged['rmin']}")
    temps = merged["temperatures"]
    if any(t < 0 for t in temps):
        raise ConfigError("temperatures must be non-negative")
    if list(temps) != sorted(temps):
        raise ConfigError("temperatures must be sorted ascending")

    return RunConfig(
        mode=merged["mode"], fmt=merged["format"], output=merged["output"],
        preset=args.preset,
        eps0=merged["eps0"], delta=merged["delta"], J=merged["J"], lam=merged["lambda"],
        N=merged["N"], R=merged["R"], rmin=merged["rmin"], rmax=merged["rmax"],
        temperatures=tuple(temps),
        n_values=merged["n_values"], j_values=merged["j_values"],
        delta_values=merged["delta_values"],
        amin=merged["amin"], amax=merged["amax"], asteps=merged["asteps"],
        jmin=merged["jmin"], jmax=merged["jmax"], jsteps=merged["jsteps"],
        dmin=merged["dmin"], dmax=merged["dmax"], dsteps=merged["dsteps"],
        max_points=merged["max_points"],
        sources=tuple(sorted(sources.items())),
    )


def _system(cfg: RunConfig, *, delta: float | None = None, J: float | None = None,
            N: int | None = None, R: int | None = None) -> SymmetricSystem:
    return SymmetricSystem.from_detuning(
        delta=cfg.delta if delta is None else delta,
        J=cfg.J if J is None else J,
        lam=cfg.lam,
        R=cfg.R if R is None else R,
        N=cfg.N if N is None else N,
        eps0=cfg.eps0,
    )


def _check_regime(sys_: SymmetricSystem) -> None:
    report = validate_regime(sys_.chain, sys_.impurities)
    if not report.ok:
        raise RegimeViolation("; ".join(report.warnings)
                              or f"coupling ratio {report.coupling_ratio:.3g} too large")
    for note in report.warnings:
        print(f"chaincp: warning: {note}", file=sys.stderr)


def _fmt(value) -> str:
    if isinstance(value, (bool, np.bool_)):
        return "1" if value else "0"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format(float(value), ".17g")
    return str(value)


def _meta(cfg: RunConfig) -> list[tuple[str, str]]:
    pairs = [
        ("generator", f"chaincp {__version__}"),
        ("mode", cfg.mode),
        ("preset", cfg.preset or "none"),
        ("eps0", _fmt(cfg.eps0)),
        ("delta", _fmt(cfg.delta)),
        ("omega", _fmt(cfg.omega)),
        ("J", _fmt(cfg.J)),
        ("lambda", _fmt(cfg.lam)),
        ("N", _fmt(cfg.N)),
        ("R", _fmt(cfg.R)),
        ("rmin", _fmt(cfg.rmin)),
        ("rmax", _fmt(cfg.rmax)),
        ("temperatures", ",".join(_fmt(t) for t in cfg.temperatures)),
    ]
    for key in ("n_values", "j_values", "delta_values"):
        values = getattr(cfg, key)
        if values is not None:
            pairs.append((key, ",".join(_fmt(v) for v in values)))
    if cfg.mode == "decay-profile":
        pairs += [("amin", _fmt(cfg.amin)), ("amax", _fmt(cfg.amax)), ("asteps", _fmt(cfg.asteps))]
    if cfg.mode == "hopping-sweep":
        pairs += [("jmin", _fmt(cfg.jmin)), ("jmax", _fmt(cfg.jmax)), ("jsteps", _fmt(cfg.jsteps))]
    if cfg.mode == "detuning-sweep":
        pairs += [("dmin", _fmt(cfg.dmin)), ("dmax", _fmt(cfg.dmax)), ("dsteps", _fmt(cfg.dsteps))]
    if cfg.mode == "oracle-check":
        pairs += [("quad_tol", _fmt(QUAD_TOL)), ("ed_tol", _fmt(ED_TOL)),
                  ("max_points", _fmt(cfg.max_points))]
    overrides = " ".join(f"{k}<-{v}" for k, v in cfg.sources)
    pairs.append(("overrides", overrides or "none"))
    return pairs


def _run_force_sweep(cfg: RunConfig):
    columns = ("J", "delta", "R", "energy", "force", "abs_force")
    if cfg.delta_values is not None:
        series = [(cfg.J, d) for d in cfg.delta_values]
    else:
        series = [(j, cfg.delta) for j in (cfg.j_values or (cfg.J,))]
    rows = []
    for j, d in series:
        sys_ = _system(cfg, delta=d, J=j, R=cfg.rmin)
        _check_regime(sys_)
        for rec in force_curve(sys_, cfg.rmin, cfg.rmax).records:
            rows.append((float(j), float(d), rec.R, rec.energy, rec.force, abs(rec.force)))
    return columns, rows, 0


def _run_hopping_sweep(cfg: RunConfig):
    columns = ("J", "R", "energy", "force", "abs_force")
    rows = []
    for j in np.linspace(cfg.jmin, cfg.jmax, cfg.jsteps):
        sys_ = _system(cfg, J=float(j))
        _check_regime(sys_)
        for rec in force_curve(sys_, cfg.R, cfg.R).records:
            rows.append((float(j), rec.R, rec.energy, rec.force, abs(rec.force)))
    return columns, rows, 0


def _run_detuning_sweep(cfg: RunConfig):
    columns = ("delta", "R", "energy", "force", "abs_force")
    rows = []
    for d in np.linspace(cfg.dmin, cfg.dmax, cfg.dsteps):
        sys_ = _system(cfg, delta=float(d))
        _check_regime(sys_)
        for rec in force_curve(sys_, cfg.R, cfg.R).records:
            rows.append((float(d), rec.R, rec.energy, rec.force, abs(rec.force)))
    return columns, rows, 0


def _run_decay_profile(cfg: RunConfig):
    # Decay rate and range depend only on the band parameter, not on the
    # coupling, so this mode skips the weak-coupling gate; near the band
    # edge the amplitude column is the only thing to take with salt.
    columns = ("a", "J", "gamma", "rc", "amplitude")
    if not -1.0 < cfg.amin <= cfg.amax <= 0.0:
        raise ConfigError(f"need -1 < amin <= amax <= 0, got [{cfg.amin}, {cfg.amax}]")
    rows = []
    for a in np.linspace(cfg.amin, cfg.amax, cfg.asteps):
        j_a = float(a) * cfg.delta / 2.0
        sys_ = _system(cfg, J=j_a, R=1)
        prof = decay_profile(sys_)
        rows.append((float(a), j_a, prof.gamma, prof.rc, prof.amplitude))
    return columns, rows, 0


def _run_thermal_sweep(cfg: RunConfig):
    columns = ("T", "N", "R", "energy", "force")
    rows = []
    for n in cfg.n_values or (cfg.N,):
        sys_ = _system(cfg, N=int(n), R=cfg.rmin)
        _check_regime(sys_)
        for temp in cfg.temperatures:
            for r in range(cfg.rmin, cfg.rmax + 1):
                rows.append((float(temp), int(n),  r,
                             thermal_energy(sys_, temp, r), thermal_force(sys_, temp, r)))
    # |f_T| should not grow with temperature; report any surprise.
    by_nr: dict[tuple[int, int], list[tuple[float, float]]] = {}
    for temp, n, r, _, force in rows:
        by_nr.setdefault((n, r), []).append((temp, force))
    for (n, r), seq in sorted(by_nr.items()):
        for (t1, f1), (t2, f2) in zip(seq, seq[1:]):
            if abs(f2) > abs(f1) + 1e-15:
                print(f"chaincp: warning: |f_T| grew with T at N={n}, R={r}: "
                      f"{abs(f1):.6g} (T={t1:g}) -> {abs(f2):.6g} (T={t2:g})", file=sys.stderr)
    return columns, rows, 0


def _run_oracle_check(cfg: RunConfig):
    columns = ("R", "closed", "quadrature", "quad_rel_err", "quad_ok",
               "ed", "ed_rel_err", "ed_ok")
    if cfg.rmax > cfg.N // 4:
        raise ConfigError(
            f"oracle-check needs rmax <= N//4 to keep ring images out of the "
            f"diagonalisation estimate; got rmax={cfg.rmax}, N={cfg.N}"
        )
    sys_ = _system(cfg, R=cfg.rmin)
    _check_regime(sys_)
    rows = []
    all_ok = True
    for r in range(cfg.rmin, cfg.rmax + 1):
        closed = cp_energy(sys_, r)
        quad = cp_energy_quadrature(sys_, r, max_points=cfg.max_points)
        ed = cp_energy_ed(sys_, r)
        quad_rel = abs(quad - closed) / abs(closed)
        ed_rel = abs(ed - closed) / abs(closed)
        quad_ok = quad_rel < QUAD_TOL
        ed_ok = ed_rel < ED_TOL
        all_ok = all_ok and quad_ok and ed_ok
        rows.append((r, closed, quad, quad_rel, quad_ok, ed, ed_rel, ed_ok))
    return columns, rows, 0 if all_ok else 4


def _run_dispersion_dump(cfg: RunConfig):
    columns = ("k", "energy")
    chain = _system(cfg).chain
    modes = brillouin_modes(chain)
    energies = dispersion(chain, modes)
    rows = [(float(k), float(e)) for k, e in zip(modes, energies)]
    return columns, rows, 0


_RUNNERS = {
    "force-sweep": _run_force_sweep,
    "hopping-sweep": _run_hopping_sweep,
    "detuning-sweep": _run_detuning_sweep,
    "decay-profile": _run_decay_profile,
    "thermal-sweep": _run_thermal_sweep,
    "oracle-check": _run_oracle_check,
    "dispersion-dump": _run_dispersion_dump,
}


def _render_csv(meta, columns, rows) -> str:
    lines = [f"# {key} = {value}" for key, value in meta]
    lines.append(",".join(columns))
    lines.extend(",".join(_fmt(cell) for cell in row) for row in rows)
    return "\n".join(lines) + "\n"


def _render_json(meta, columns, rows) -> str:
    doc = {
        "meta": dict(meta),
        "columns": list(columns),
        "rows": [[bool(c) if isinstance(c, (bool, np.bool_)) else
                  int(c) if isinstance(c, (int, np.integer)) else float(c)
                  for c in row] for row in rows],
    }
    return json.dumps(doc, indent=2) + "\n"


def _output_path(cfg: RunConfig) -> str:
    if cfg.output is not None:
        return cfg.output
    outdir = os.environ.get(OUTDIR_ENV, ".")
    return os.path.join(outdir, f"{cfg.preset or cfg.mode}.{cfg.fmt}")


def run(cfg: RunConfig) -> int:
    """Execute one resolved configuration; returns the exit code."""
    columns, rows, code = _RUNNERS[cfg.mode](cfg)
    text = (_render_csv if cfg.fmt == "csv" else _render_json)(_meta(cfg), columns, rows)
    path = _output_path(cfg)
    if path == "-":
        sys.stdout.write(text)
    else:
        parent = os.path.dirname(path)
        if parent:
            os.makedirs(parent, exist_ok=True)
        with open(path, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)
        print(f"chaincp: wrote {path} ({len(rows)} rows)", file=sys.stderr)
    return code


def main(argv: list[str] | None = None) -> int:
    try:
        cfg = load_config(argv)
    except SystemExit as exc:  # argparse already printed its message
        return int(exc.code or 0)
    except ConfigError as exc:
        print(f"chaincp: config error: {exc}", file=sys.stderr)
        return 2
    try:
        return run(cfg)
    except RegimeViolation as exc:
        print(f"chaincp: regime violation: {exc}", file=sys.stderr)
        return 3
    except ConvergenceError as exc:
        print(f"chaincp: convergence failure: {exc}", file=sys.stderr)
        return 4
    except (ConfigError, ValueError) as exc:
        print(f"chaincp: config error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"chaincp: i/o error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
