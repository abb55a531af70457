"""Command line entry point: ``exceptional verify|dump-catalog|dump-operator|dump-algebra|rho``."""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .exactla import Mat, is_probable_prime, rat, rat_str

U64 = 2 ** 64


class UsageError(ValueError):
    pass


def _seed(text: str) -> int:
    v = int(text, 0)
    if not 0 <= v < U64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return v


def _nat(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("samples must be a natural number")
    return v


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def _short(v, width: int) -> str:
    s = v if isinstance(v, str) else json.dumps(v)
    return s if len(s) <= width else s[: width - 3] + "..."


def format_text(rep: dict) -> str:
    lines = [f"exceptional {rep['toolkit_version']}  suite={rep['suite']}  seed={rep['seed']}  samples={rep['samples']}"]
    lines.append(f"{'suite':<9} {'check':<42} {'status':<6} {'millis':>7}  actual")
    for c in rep["checks"]:
        lines.append(f"{c['suite']:<9} {c['name']:<42} {c['status']:<6} {c['millis']:>7}  {_short(c['actual'], 60)}")
        if c["status"] == "fail":
            lines.append(f"{'':<9} expected: {_short(c['expected'], 100)}")
            if "witness" in c:
                lines.append(f"{'':<9} witness:  {_short(c['witness'], 100)}")
    lines.append(f"passed {rep['passed']}  failed {rep['failed']}")
    return "\n".join(lines) + "\n"


def cmd_verify(args) -> int:
    from . import suites as S
    if args.prime is not None and (args.prime < 3 or not is_probable_prime(args.prime)):
        raise UsageError(f"invalid prime {args.prime}")
    names = list(S.SUITES) if args.suite == "all" else [args.suite]
    rep = S.report(names, args.seed, args.samples, args.prime)
    _emit(_json(rep) if args.format == "json" else format_text(rep), args.out)
    return 0 if rep["failed"] == 0 else 1


def cmd_dump_catalog(args) -> int:
    from . import liealg as L
    from . import orbits as Orb
    docs = []
    for d in Orb.orbit_catalog():
        e = d.to_doc()
        e["xi_nontrivial_on_trivial_actors"] = Orb.xi_nontrivial_on_trivial_actors(d)
        e["trivially_acting_dim"] = Orb.trivially_acting_subgroup(d).dim
        if args.with_stabilizers:
            e["lie_stabilizer_dim"] = L.lie_h().dim - L.orbit_dimension(d)
            e["orbit_dim"] = L.orbit_dimension(d)
        docs.append(e)
    _emit(_json({"orbits": docs}), args.out)
    return 0


def _numbers(text: str, count: int | None = None) -> list[Fraction]:
    vals = [rat(t) for t in text.split(",") if t.strip()]
    if count is not None and len(vals) != count:
        raise UsageError(f"expected {count} comma-separated entries, got {len(vals)}")
    return vals


def operator_from_spec(spec: str) -> Mat:
    """identity | heis:<24 entries> | sl3:<9 entries> | gl2:<4 entries> | g2root:<k>[:t] | mlevi:<lambda>:<36 entries>."""
    from . import e6ops as E
    from . import octonion as O
    kind, _, rest = spec.partition(":")
    if kind == "identity":
        return Mat.identity(27)
    if kind == "heis":
        return E.heis_operator(E.HeisenbergElement.from_params(_numbers(rest, 24)))
    if kind == "sl3":
        return E.g2_embed(O.sl3_action(Mat.from_flat(3, 3, _numbers(rest, 9))))
    if kind == "gl2":
        return E.g2_embed(O.gl2_levi(Mat.from_flat(2, 2, _numbers(rest, 4))))
    if kind == "g2root":
        k, _, t = rest.partition(":")
        roots = E.g2_root_derivations()
        i = int(k)
        if not 0 <= i < len(roots):
            raise UsageError(f"root index must be in 0..{len(roots) - 1}")
        return E.g2_embed(E.exp_nilpotent(roots[i].scale(rat(t) if t else 1)))
    if kind == "mlevi":
        lam, _, g = rest.partition(":")
        return E.m_levi(rat(lam), Mat.from_flat(6, 6, _numbers(g, 36)))
    raise UsageError(f"unknown operator kind {kind!r}")


def cmd_dump_operator(args) -> int:
    from .jordan import coordinate_names
    m = operator_from_spec(args.spec)
    _emit(_json(m.to_doc(spec=args.spec, columns=coordinate_names())), args.out)
    return 0


def cmd_dump_algebra(args) -> int:
    from . import liealg as L
    from . import orbits as Orb
    if args.kind == "stabilizer-table":
        h, n = L.lie_h(), L.algebra_basis("n_radical")
        rows = []
        for d in Orb.orbit_catalog():
            rows.append({"id": d.id, "shape": d.shape,
                         "h_stabilizer_dim": L.stabilizer_subalgebra(d.rep, h)[0],
                         "n_pointwise_dim": L.stabilizer_subalgebra(d.rep, n, pointwise=True)[0],
                         "orbit_dim": L.orbit_dimension(d)})
        _emit(_json({"ambient": "h", "ambient_dim": h.dim, "rows": rows}), args.out)
        return 0
    alg = L.algebra_basis(args.kind)
    cert = {k: v for k, v in alg.certificate.items() if not k.startswith("_")}
    if "modular_ranks" in cert:
        cert["modular_ranks"] = {str(p): r for p, r in cert["modular_ranks"].items()}
    _emit(_json({"kind": alg.kind, "ambient": alg.ambient, "dim": alg.dim, "certificate": cert,
                 "basis": [m.to_doc() for m in alg.basis]}), args.out)
    return 0


def cmd_rho(args) -> int:
    from . import rootdata as R
    with open(args.file) as fh:
        rd = R.load_document(fh.read())
    res = R.rho_data(rd)
    d = {"labels": list(rd.labels), "selected": rd.labels[rd.selected], "type": R.recognize(rd.cartan)}
    d.update(res.to_doc())
    if args.format == "text":
        txt = (f"selected {d['selected']}  c = {d['c']}  2c = {d['two_c']}\n"
               f"v_alpha = [{', '.join(d['v_alpha'])}]\n"
               "C_alpha^-1 =\n" + "\n".join("  " + " ".join(f"{rat_str(x):>6}" for x in row)
                                            for row in res.c_alpha_inverse) + "\n")
        _emit(txt, args.out)
    else:
        _emit(_json(d), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="exceptional", description="Exact verification toolkit for split octonions, J and E6.")
    p.add_argument("--version", action="version", version=f"exceptional {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", default="all",
                   choices=["octonion", "jordan", "e6", "orbits", "liealg", "rootdata", "all"])
    v.add_argument("--seed", type=_seed, default=0)
    v.add_argument("--samples", type=_nat, default=100)
    v.add_argument("--format", choices=["json", "text"], default="text")
    v.add_argument("--prime", type=int, default=None, help="extra prime for modular rank certification")
    v.add_argument("--out", default=None)
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("dump-catalog", help="the 17 orbit representatives as a document")
    c.add_argument("--with-stabilizers", action="store_true")
    c.add_argument("--out", default=None)
    c.set_defaults(func=cmd_dump_catalog)

    o = sub.add_parser("dump-operator", help="a 27x27 operator, e.g. heis:<24 entries> or g2root:3")
    o.add_argument("spec")
    o.add_argument("--out", default=None)
    o.set_defaults(func=cmd_dump_operator)

    a = sub.add_parser("dump-algebra", help="a Lie algebra basis or the stabilizer table")
    a.add_argument("kind", choices=["g2_derivations", "e6", "n_radical", "h", "stabilizer-table"])
    a.add_argument("--out", default=None)
    a.set_defaults(func=cmd_dump_algebra)

    r = sub.add_parser("rho", help="rho_P coefficient from a Cartan matrix document")
    r.add_argument("file")
    r.add_argument("--format", choices=["json", "text"], default="json")
    r.add_argument("--out", default=None)
    r.set_defaults(func=cmd_rho)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
