"""Command-line front end.

    zagierpoly compute {bstar,bstar-poly,alpha,v,z} [--max-n N | --n N] [--j J] [--format F]
    zagierpoly verify SUITE [--max-n N] [--order N] [--heavy-max N] [--no-timing]
    zagierpoly oeis {export,compare} [--max-n N] [--snapshot PATH] [--fetch]

Exit codes: 0 success, 1 verification failure or mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import urllib.error
import urllib.request
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Callable, Optional

from . import classical, kernels, pipelines, series, vcoeff, zagier
from .exactnum import nu_p
from .report import VerifyReport, jsonable, merge_reports

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

SEQUENCES = ("bstar", "bstar-poly", "alpha", "v", "z")
FORMATS = ("json", "bfile", "csv")
OEIS_URL = "https://oeis.org/A216912/b216912.txt"
FETCH_TIMEOUT = 10.0


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    target: str
    n: Optional[int] = None
    max_n: Optional[int] = None
    j: Optional[int] = None
    order: Optional[int] = None
    heavy_max: Optional[int] = None
    format: str = "json"
    timing: bool = True
    snapshot: Optional[str] = None
    fetch: bool = False
    figure: Optional[str] = None

    def __post_init__(self):
        for name in ("n", "max_n", "order", "heavy_max"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise UsageError(f"--{name.replace('_', '-')} must be positive, got {value}")
        if self.n is not None and self.max_n is not None:
            raise UsageError("give either --n or --max-n, not both")


# -- output ---------------------------------------------------------------------

def render_rows(name: str, rows: list[tuple[int, object]], fmt: str) -> str:
    """Serialize (index, value) pairs; rationals always as exact "p/q" strings."""
    if fmt == "bfile":
        return "".join(f"{n} {v}\n" for n, v in rows)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", name])
        for n, v in rows:
            w.writerow([n, v])
        return buf.getvalue()
    doc = {"sequence": name, "terms": [{"n": n, "value": jsonable(v)} for n, v in rows]}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


# -- compute --------------------------------------------------------------------

def _indices(cfg: RunConfig, start: int, default: int) -> range:
    if cfg.n is not None:
        if cfg.n < start:
            raise UsageError(f"index must be >= {start}")
        return range(cfg.n, cfg.n + 1)
    return range(start, (cfg.max_n or default) + 1)


def compute_rows(cfg: RunConfig) -> list[tuple[int, object]]:
    t = cfg.target
    if cfg.j is not None and t not in ("bstar", "alpha"):
        raise UsageError("--j applies to bstar and alpha only")
    if t == "bstar":
        if cfg.j is None:
            return [(n, zagier.bstar(n)) for n in _indices(cfg, 1, 10)]
        return [(n, zagier.bstar_poly(n)(cfg.j)) for n in _indices(cfg, 1, 10)]
    if t == "bstar-poly":
        return [(n, zagier.bstar_poly(n)) for n in _indices(cfg, 1, 10)]
    if t == "alpha":
        if cfg.j is None:
            return [(n, zagier.alpha(n)) for n in _indices(cfg, 1, 10)]
        return [(n, zagier.alpha_at(n, cfg.j)) for n in _indices(cfg, 1, 10)]
    if t == "v":
        idx = range(cfg.n, cfg.n + 1) if cfg.n is not None else range(0, (cfg.max_n or 13) + 1)
        return [(n, vcoeff.v_umbral(n)) for n in idx]
    if t == "z":
        idx = _indices(cfg, 1, 10)
        zs = vcoeff.z_recurrence(idx[-1])
        return [(n, zs[n - 1]) for n in idx]
    raise UsageError(f"unknown sequence {t!r}")


def alpha_figure(n_max: int, path: str) -> Path:
    """nu_2(alpha_2n) for n <= n_max with the closed-form prediction."""
    from .plotting import plot_valuations

    ns = list(range(1, n_max + 1))
    observed = [nu_p(zagier.alpha(2 * n), 2) for n in ns]
    predicted = [zagier.nu2_closed_form(2 * n) for n in ns]
    return plot_valuations(ns, observed, predicted, path, "Power of 2 dividing the denominator of B*_2n", "nu_2(alpha_2n)")


def theorem12_figure(n_max: int, path: str) -> Path:
    from .plotting import plot_valuations

    ns = list(range(1, n_max + 1))
    observed = [-nu_p(zagier.bstar(n), 2) for n in ns]
    predicted = [zagier.nu2_closed_form(n) for n in ns]
    return plot_valuations(ns, observed, predicted, path, "-nu_2(B*_n) against its closed form", "-nu_2(B*_n)")


def cmd_compute(cfg: RunConfig, out) -> int:
    rows = compute_rows(cfg)
    out.write(render_rows(cfg.target, rows, cfg.format))
    if cfg.figure:
        if cfg.target != "alpha" or cfg.j is not None:
            raise UsageError("--figure is available for 'compute alpha' without --j")
        alpha_figure(max(n for n, _ in rows), cfg.figure)
    return EXIT_OK


# -- verify ---------------------------------------------------------------------

def _suite_theorem12(cfg):
    return zagier.nu2_theorem_check(cfg.max_n or 300)


def _suite_period6(cfg):
    return merge_reports(
        "period6",
        [zagier.nu2_8n_period_check(max(cfg.max_n or 120, 12)), zagier.odd_index_suite(121 if cfg.max_n is None else max(cfg.max_n, 13))],
    )


def _suite_period24(cfg):
    return series.mod8_genfun_check(cfg.order or 96)


def _suite_identities(cfg):
    n = cfg.max_n or 30
    N = cfg.order or 40
    return merge_reports(
        "identities",
        [
            zagier.translation_check(n),
            zagier.reflection_check(n),
            zagier.bstar59_check(n),
            zagier.umbral_check(n),
            zagier.odd_index_suite(max(n, 13)),
            zagier.denominator_independence_check(max(n, 60)),
            series.zagier_genfun_check((0, 1, -1, -2, 5, Fraction(-7, 3)), N),
            series.even_genfun_check(N),
            series.prop22_check(max(N, 64)),
            classical.chebU_halfinteger_check(n, range(-6, 7)),
            classical.chebT_doubling_check(n),
        ],
    )


def _suite_vcross(cfg):
    n = cfg.max_n or 40
    heavy = cfg.heavy_max if cfg.heavy_max is not None else min(16, n)
    if heavy > n:
        raise UsageError("--heavy-max must not exceed --max-n")
    return merge_reports(
        "vcross",
        [
            vcoeff.cross_check_all(n, heavy),
            vcoeff.z_recurrence_check(n),
            vcoeff.z_mod2_period_check(max(n, 300)),
            vcoeff.legendre_inversion_check(15),
            vcoeff.f_sum_check(40),
        ],
    )


def _suite_bell(cfg):
    n = cfg.max_n or 10
    return merge_reports(
        "bell",
        [
            kernels.bell_identity_checks(max(n, 3)),
            kernels.bell_der_grid_check(n),
            pipelines.hoppe_fk_coeff_check(max(n, 2)),
            pipelines.ik_oracle_check(),
            pipelines.psi_regrouping_check(),
        ],
    )


def _suite_apoly(cfg):
    return merge_reports(
        "apoly",
        [
            kernels.a_poly_check(cfg.max_n or 20),
            pipelines.polynomial_v_report(5, cfg.order or 14),
            kernels.nested_identity_check(6),
        ],
    )


def _suite_congruences(cfg):
    n = cfg.max_n or 200
    return merge_reports(
        "congruences",
        [
            classical.vsc_check(max(n, 2)),
            classical.bernoulli_mod8_check(max(n // 2, 1)),
            classical.voronoi_grid_check(min(n, 60)),
            classical.proof_scan_mod64(max(n, 6)),
            zagier.congruence_suite(max(n, 2)),
        ],
    )


def _suite_conjecture(cfg):
    return zagier.conjecture_scan(cfg.max_n or 200)


SUITES: dict[str, Callable[[RunConfig], VerifyReport]] = {
    "theorem12": _suite_theorem12,
    "period6": _suite_period6,
    "period24": _suite_period24,
    "identities": _suite_identities,
    "vcross": _suite_vcross,
    "bell": _suite_bell,
    "apoly": _suite_apoly,
    "congruences": _suite_congruences,
    "conjecture": _suite_conjecture,
}


def run_suite(cfg: RunConfig) -> VerifyReport:
    if cfg.target == "all":
        return merge_reports("all", [SUITES[name](cfg) for name in SUITES])
    return SUITES[cfg.target](cfg)


def cmd_verify(cfg: RunConfig, out, err) -> int:
    if cfg.figure and cfg.target != "theorem12":
        raise UsageError("--figure is available for 'verify theorem12' only")
    rep = run_suite(cfg)
    out.write(rep.to_json(timing=cfg.timing) + "\n")
    err.write(rep.summary() + "\n")
    if cfg.figure:
        theorem12_figure(rep.range[1], cfg.figure)
    return EXIT_OK if rep.ok else EXIT_FAIL


# -- oeis -----------------------------------------------------------------------

def bundled_snapshot() -> Path:
    return Path(str(resources.files("zagierpoly") / "data" / "a216912_snapshot.txt"))


def parse_bfile(text: str) -> dict[int, int]:
    terms: dict[int, int] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'n a(n)', got {line!r}")
        terms[int(parts[0])] = int(parts[1])
    return terms


def fetch_bfile(url: str = OEIS_URL, timeout: float = FETCH_TIMEOUT) -> str:
    with urllib.request.urlopen(url, timeout=timeout) as resp:
        return resp.read().decode("utf-8")


def a216912(n: int) -> int:
    """alpha_2n / 4."""
    return zagier.alpha(2 * n) // 4


def cmd_oeis(cfg: RunConfig, out, err) -> int:
    if cfg.target == "export":
        rows = [(n, a216912(n)) for n in range(1, (cfg.max_n or 14) + 1)]
        out.write(render_rows("A216912", rows, cfg.format))
        return EXIT_OK

    text = None
    source = None
    if cfg.fetch:
        try:
            text = fetch_bfile()
            source = OEIS_URL
        except (urllib.error.URLError, OSError, TimeoutError) as exc:
            err.write(f"fetch failed ({exc}); falling back to the snapshot\n")
    if text is None:
        path = Path(cfg.snapshot) if cfg.snapshot else bundled_snapshot()
        if not path.is_file():
            raise UsageError(f"snapshot {path} not found; pass --snapshot PATH to a b-file of A216912")
        text = path.read_text()
        source = str(path)
    try:
        terms = parse_bfile(text)
    except ValueError as exc:
        raise UsageError(f"cannot parse {source}: {exc}") from exc
    if not terms:
        raise UsageError(f"{source} holds no terms")
    n_hi = max(terms) if cfg.max_n is None else min(cfg.max_n, max(terms))
    rep = VerifyReport("oeis_compare", (1, n_hi))
    with rep.timed():
        c = rep.check("alpha_2n / 4 matches the A216912 terms", "A216912 lists alpha_2n/4")
        for n in sorted(k for k in terms if 1 <= k <= n_hi):
            got = a216912(n)
            c.record(got == terms[n], n=n, computed=got, listed=terms[n])
    out.write(rep.to_json(timing=cfg.timing) + "\n")
    err.write(f"compared against {source}\n" + rep.summary() + "\n")
    return EXIT_OK if rep.ok else EXIT_FAIL


# -- argument parsing -----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zagierpoly", description="Exact computations with Zagier's modified Bernoulli numbers.")
    sub = p.add_subparsers(dest="command", required=True)

    def bounds(sp, order=False, heavy=False):
        sp.add_argument("--max-n", type=int, help="upper end of the index range")
        if order:
            sp.add_argument("--order", type=int, help="series truncation order")
        if heavy:
            sp.add_argument("--heavy-max", type=int, help="largest even n for the Laurent pipelines")

    c = sub.add_parser("compute", help="emit a sequence")
    c.add_argument("target", choices=SEQUENCES)
    c.add_argument("--n", type=int, help="a single index instead of a range")
    bounds(c)
    c.add_argument("--j", type=int, help="evaluate at the integer j (bstar, alpha)")
    c.add_argument("--format", choices=FORMATS, default="json")
    c.add_argument("--figure", metavar="PATH", help="also plot nu_2(alpha_2n) to PATH (alpha only)")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("target", choices=tuple(SUITES) + ("all",))
    bounds(v, order=True, heavy=True)
    v.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0 for byte-identical output")
    v.add_argument("--figure", metavar="PATH", help="also plot -nu_2(B*_n) to PATH (theorem12 only)")

    o = sub.add_parser("oeis", help="export or compare A216912")
    o.add_argument("target", choices=("export", "compare"))
    bounds(o)
    o.add_argument("--format", choices=FORMATS, default=None)
    o.add_argument("--snapshot", metavar="PATH", help="b-file to compare against (default: bundled snapshot)")
    o.add_argument("--fetch", action="store_true", help="try the live OEIS b-file first")
    o.add_argument("--no-timing", action="store_true")
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    fmt = getattr(ns, "format", None)
    cfg = RunConfig(
        command=ns.command,
        target=ns.target,
        n=getattr(ns, "n", None),
        max_n=getattr(ns, "max_n", None),
        j=getattr(ns, "j", None),
        order=getattr(ns, "order", None),
        heavy_max=getattr(ns, "heavy_max", None),
        format=fmt or ("bfile" if ns.command == "oeis" else "json"),
        timing=not getattr(ns, "no_timing", False),
        snapshot=getattr(ns, "snapshot", None),
        fetch=getattr(ns, "fetch", False),
        figure=getattr(ns, "figure", None),
    )
    return cfg


def main(argv: Optional[list[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = config_from_args(ns)
        if cfg.command == "compute":
            return cmd_compute(cfg, out)
        if cfg.command == "verify":
            return cmd_verify(cfg, out, err)
        return cmd_oeis(cfg, out, err)
    except UsageError as exc:
        err.write(f"zagierpoly: error: {exc}\n")
        return EXIT_USAGE
    except ValueError as exc:
        err.write(f"zagierpoly: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
