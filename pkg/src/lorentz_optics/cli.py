"""Command-line front end.

    lorentz-optics compose "rot(3.141592653589793)"
    lorentz-optics lift "phase(0.5) atten(1)"
    lorentz-optics stokes "rot(1.2) atten(0.3)" --in 1,1,0,0 --decohere 0.5
    lorentz-optics lens --z1 2 --z2 2 --f 1
    lorentz-optics contract --side below --eps 1e-1,1e-2,1e-3

Output is JSON by default; ``--format csv`` is accepted for the table
commands (``stokes`` and ``contract``). Pass ``-`` as the chain to read it
from stdin.
"""
import argparse
import csv
import io
import json
import math
import sys

import numpy as np

from . import lens_system as lens_mod
from . import lorentz, polarization, sl2c
from .chain import parse_chain
from .config import Tolerances
from .errors import NumericalIntegrityError, OpticsError, UsageError

TABLE_COMMANDS = ("stokes", "contract")


def fmt(value):
    if not math.isfinite(value):
        raise NumericalIntegrityError(f"refusing to emit non-finite value {value}")
    text = format(value, ".17g")
    return text if value != 0 else "0"


def to_json(obj, indent=0):
    """Deterministic JSON with 17-significant-digit floats."""
    pad = "  " * (indent + 1)
    end = "  " * indent
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return fmt(float(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {to_json(v, indent + 1)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(obj, (list, tuple)):
        if all(isinstance(v, (int, float, np.number)) and not isinstance(v, bool) for v in obj):
            return "[" + ", ".join(to_json(v) for v in obj) + "]"
        items = [pad + to_json(v, indent + 1) for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def complex_matrix(m):
    return [[[float(v.real), float(v.imag)] for v in row] for row in np.asarray(m)]


def real_matrix(m):
    return [[float(v) for v in row] for row in np.asarray(m, dtype=np.float64)]


def envelope(command, inputs, results, tol):
    return {"command": command, "inputs": inputs, "results": results, "tolerances": tol.as_dict()}


def read_chain(args):
    text = sys.stdin.read() if args.chain == "-" else args.chain
    spec = parse_chain(text)
    return spec.with_degrees() if args.degrees else spec


def parse_floats(text, flag, count=None):
    try:
        values = [float(v) for v in text.split(",")]
    except ValueError:
        raise UsageError(f"{flag} expects comma-separated numbers, got {text!r}") from None
    if count is not None and len(values) != count:
        raise UsageError(f"{flag} expects {count} numbers, got {len(values)}")
    if not all(math.isfinite(v) for v in values):
        raise UsageError(f"{flag} values must be finite")
    return values


def run_compose(args, tol):
    spec = read_chain(args)
    m = sl2c.compose(spec.matrices(), tol.det)
    det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
    results = {"matrix": complex_matrix(m), "det": [float(det.real), float(det.imag)]}
    if np.max(np.abs(m.imag)) <= tol.det:
        cls = sl2c.classify_real(m, tol.det, tol.cls)
        results["class"] = {"tag": cls.tag, "trace": cls.trace}
    return envelope("compose", {"chain": spec.render()}, results, tol)


def run_lift(args, tol):
    spec = read_chain(args)
    m = sl2c.compose(spec.matrices(), tol.det)
    lam = lorentz.check_lorentz(lorentz.lift(m, tol.det), tol.metric)
    return envelope("lift", {"chain": spec.render()}, {"lorentz": real_matrix(lam)}, tol)


def run_stokes(args, tol):
    spec = read_chain(args)
    s_in = polarization.check_stokes(parse_floats(args.stokes_in, "--in", 4))
    c = polarization.coherency_from_stokes(s_in)
    if args.decohere is not None:
        c = polarization.decohere(c, args.decohere)
    rows = []

    def record(label, c):
        s = polarization.check_stokes(polarization.stokes_from_coherency(c))
        rep = polarization.mixedness(s, tol.mix)
        rows.append({"step": len(rows), "element": label, "stokes": [float(v) for v in s], **rep.as_dict()})

    record("input", c)
    for element, m in zip(spec.elements, spec.matrices()):
        c = polarization.transform_coherency(sl2c.as_sl2c(m, tol.det), c)
        record(element.render(), c)
    inputs = {"chain": spec.render(), "in": s_in.tolist(), "decohere": args.decohere}
    return envelope("stokes", inputs, {"trajectory": rows}, tol)


def run_lens(args, tol):
    system = lens_mod.OneLensSystem(args.z1, args.z2, args.f)
    equal = args.z1 == args.z2
    if args.decompose and not equal:
        raise UsageError("core decomposition needs z1 == z2")
    m = lens_mod.one_lens_chain(system)
    results = {
        "matrix": real_matrix(m),
        "upper_right": float(m[0, 1]),
        "focused": lens_mod.is_focused(system, tol.focus),
    }
    if equal:
        x, scale = lens_mod.renormalize_core(args.z1, args.f)
        core = lens_mod.core_matrix(x)
        decomposition = lens_mod.decompose_core(x, tol.cls)
        results["x"] = x
        results["scale"] = scale
        results["core"] = real_matrix(core)
        results["class"] = sl2c.classify_real(core, tol.det, tol.cls).tag
        d = decomposition.as_dict()
        if args.degrees and "phi" in d:
            d["phi"] = math.degrees(d["phi"])
        results["decomposition"] = d
    inputs = {"z1": args.z1, "z2": args.z2, "f": args.f}
    return envelope("lens", inputs, results, tol)


def run_contract(args, tol):
    eps = parse_floats(args.eps, "--eps")
    rows = [r.as_dict() for r in lens_mod.contraction_sweep(eps, args.side)]
    if args.degrees and args.side == lens_mod.BELOW:
        for r in rows:
            r["angle"] = math.degrees(r["angle"])
    return envelope("contract", {"side": args.side, "eps": eps}, {"rows": rows}, tol)


RUNNERS = {
    "compose": run_compose,
    "lift": run_lift,
    "stokes": run_stokes,
    "lens": run_lens,
    "contract": run_contract,
}


def table_of(env):
    if env["command"] == "contract":
        header = ["x", "eta", "angle", "lower_left", "upper_right"]
        return header, [[r[k] for k in header] for r in env["results"]["rows"]]
    header = ["step", "element", "s0", "s1", "s2", "s3", "m_squared", "ratio", "class"]
    rows = [
        [r["step"], r["element"], *r["stokes"], r["m_squared"], r["ratio"], r["class"]]
        for r in env["results"]["trajectory"]
    ]
    return header, rows


def to_csv(env):
    header, rows = table_of(env)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([fmt(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--degrees", action="store_true", help="angles in degrees at the boundary")
    common.add_argument("--tol-det", type=float, default=Tolerances.det)
    common.add_argument("--tol-cls", type=float, default=Tolerances.cls)
    common.add_argument("--tol-focus", type=float, default=Tolerances.focus)

    parser = argparse.ArgumentParser(prog="lorentz-optics", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    for name in ("compose", "lift"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("chain", help="chain text, or - for stdin")

    p = sub.add_parser("stokes", parents=[common])
    p.add_argument("chain")
    p.add_argument("--in", dest="stokes_in", required=True, metavar="S0,S1,S2,S3")
    p.add_argument("--decohere", type=float, default=None, metavar="R")

    p = sub.add_parser("lens", parents=[common])
    p.add_argument("--z1", type=float, required=True)
    p.add_argument("--z2", type=float, required=True)
    p.add_argument("--f", type=float, required=True)
    p.add_argument("--decompose", action="store_true", help="fail unless the core can be decomposed")

    p = sub.add_parser("contract", parents=[common])
    p.add_argument("--side", choices=(lens_mod.BELOW, lens_mod.ABOVE), required=True)
    p.add_argument("--eps", required=True, metavar="E1,E2,...")
    return parser


def render(args):
    """Run one parsed invocation and return the text to print."""
    if args.format == "csv" and args.command not in TABLE_COMMANDS:
        raise UsageError(f"--format csv is only available for {', '.join(TABLE_COMMANDS)}")
    for flag in ("tol_det", "tol_cls", "tol_focus"):
        if not getattr(args, flag) > 0:
            raise UsageError(f"--{flag.replace('_', '-')} must be positive")
    tol = Tolerances(det=args.tol_det, cls=args.tol_cls, focus=args.tol_focus)
    env = RUNNERS[args.command](args, tol)
    return to_csv(env) if args.format == "csv" else to_json(env) + "\n"


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        out = render(args)
    except OpticsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
