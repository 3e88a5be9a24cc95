"""Batch verification driver.

Every reproduced identity is exposed as a named suite; reports are
written as JSON (always) and markdown (with --md).  Exit status 0 means
every executed check passed, 1 means at least one check failed, 2 means
the command line or an input file could not be parsed.
"""

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .report import Report, fmt
from .suites import SUITES, run_suite

_FAST_SUITES = [n for n in SUITES if n != "leech"]


def _write_report(rep, outdir, md=False):
    os.makedirs(outdir, exist_ok=True)
    path = os.path.join(outdir, "report-%s.json" % rep.suite)
    with open(path, "w") as f:
        f.write(rep.to_json())
    if md:
        with open(os.path.join(outdir, "report-%s.md" % rep.suite), "w") as f:
            f.write(rep.to_markdown())
    print(rep.summary())
    for c in rep.checks:
        if c.status == "fail":
            print("  FAIL %s: %s (expected %s, computed %s)"
                  % (c.id, c.description, c.expected, c.computed))
    return rep.ok()


def _parse_kv_file(path):
    """Small structured text format: 'key: value' lines plus matrix blocks."""
    fields = {}
    rows = []
    current = None
    with open(path) as f:
        for raw in f:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if ":" in line and not line.lstrip("-").split(":")[0].strip().isdigit():
                key, _, val = line.partition(":")
                key = key.strip().lower()
                val = val.strip()
                if val:
                    fields[key] = val
                    current = None
                else:
                    current = key
                    fields[key] = rows = []
            else:
                if current is None:
                    raise ValueError("stray matrix row %r" % line)
                rows.append([int(t) for t in line.split()])
    return fields


def _load_lattice(arg):
    from .lattices import build_root_lattice, IntegralLattice
    from .gluing import niemeier_a2_12, leech
    named = {
        "leech": lambda: leech().lattice,
        "niemeier-a2-12": lambda: niemeier_a2_12().lattice,
    }
    key = arg.lower()
    if key in named:
        return named[key]()
    if os.path.exists(arg):
        fields = _parse_kv_file(arg)
        gram = fields.get("gram")
        if gram is None:
            raise ValueError("lattice file needs a gram block")
        lat = IntegralLattice(gram, name=fields.get("name"))
        if int(fields.get("rank", lat.rank)) != lat.rank:
            raise ValueError("declared rank does not match the Gram matrix")
        return lat
    # names like A2, D4, E8, sqrt2E8
    scale = 1
    if key.startswith("sqrt2"):
        scale = 2
        key = key[5:]
    kind = key[0].upper()
    n = int(key[1:])
    return build_root_lattice(kind, n, scale=scale)


def _load_code(path):
    from .codes import TernaryCode
    fields = _parse_kv_file(path)
    gens = fields.get("generators")
    if gens is None:
        raise ValueError("code file needs a generators block")
    return TernaryCode(int(fields["length"]), gens)


def cmd_lattice(args):
    from .lattices import short_vectors
    try:
        lat = _load_lattice(args.which)
    except (ValueError, KeyError, IndexError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    rep = Report("lattice-%s" % (lat.name or args.which))
    rep.add("rank", "rank", "input", lat.rank, lat.rank)
    rep.add("det", "determinant", "exact integer elimination",
            lat.det(), lat.det())
    rep.add("even", "even lattice", "Gram parity", fmt(lat.is_even()),
            fmt(lat.is_even()))
    if args.short_vectors:
        n = len(short_vectors(lat, args.short_vectors))
        rep.add("short-%d" % args.short_vectors,
                "vectors of norm %d" % args.short_vectors,
                "exact enumeration", n, n)
    return 0 if _write_report(rep, args.out, args.md) else 1


def cmd_fusion(args):
    from .minimal import fusion, central_charge, highest_weight
    try:
        result = fusion(args.m, (args.r1, args.s1), (args.r2, args.s2))
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    c = central_charge(args.m)
    terms = []
    for (r, s), k in sorted(result.items()):
        h = highest_weight(args.m, r, s)
        label = "L(%s, %s)" % (fmt(c), fmt(h))
        terms.append(label if k == 1 else "%d %s" % (k, label))
    print(" + ".join(terms))
    rep = Report("fusion")
    rep.add("fusion", "fusion of (%d,%d) and (%d,%d) at m = %d"
            % (args.r1, args.s1, args.r2, args.s2, args.m),
            "double-sum rule", " + ".join(terms), " + ".join(terms))
    _write_report(rep, args.out, args.md)
    return 0


def cmd_code(args):
    try:
        code = _load_code(args.file)
    except (ValueError, KeyError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    rep = Report("code")
    rep.add("size", "word count", "enumeration", len(code), len(code))
    rep.add("min-weight", "minimum weight", "enumeration",
            code.minimum_weight(), code.minimum_weight())
    rep.add("self-dual", "self-duality", "dual check",
            fmt(code.is_self_dual()), fmt(code.is_self_dual()))
    return 0 if _write_report(rep, args.out, args.md) else 1


def _suite_cmd(names):
    def run(args):
        ok = True
        for name in names(args) if callable(names) else names:
            kwargs = {}
            if name == "leech" and getattr(args, "skip_slow", False):
                kwargs["skip_slow"] = True
            rep = run_suite(name, **kwargs)
            if getattr(args, "export_tables", False) and name.startswith("commutant"):
                _export_tables(args.out, name)
            if name == "involutions-e8-orbit":
                _export_scan(args.out)
            ok = _write_report(rep, args.out, args.md) and ok
        return 0 if ok else 1
    return run


def _export_scan(outdir):
    from .commutants import nine_orbit_algebra
    from .involutions import transposition_scan
    from .report import scan_to_json
    fd12, _side, _chars, orbit = nine_orbit_algebra()
    orders, violations, _maps = transposition_scan(fd12, orbit, "tau_ising")
    os.makedirs(outdir, exist_ok=True)
    with open(os.path.join(outdir, "scan-e8-orbit.json"), "w") as f:
        f.write(scan_to_json(orders, violations))


def cmd_minimal(args):
    if args.export_tables:
        from .minimal import (all_labels, fusion, highest_weight,
                              w_module_classification)
        from .report import fmt
        os.makedirs(args.out, exist_ok=True)
        for m in (3, 4):
            labels = all_labels(m)
            rows = []
            lines = ["| x | " + " | ".join("h=%s" % fmt(highest_weight(m, *b))
                                           for b in labels) + " |",
                     "|" + "---|" * (len(labels) + 1)]
            for a in labels:
                cells = []
                for b in labels:
                    out = fusion(m, a, b)
                    cells.append(" + ".join(
                        ("%d " % k if k > 1 else "") + fmt(highest_weight(m, *lab))
                        for lab, k in sorted(out.items())))
                    rows.append({"a": list(a), "b": list(b),
                                 "result": [[list(lab), k]
                                            for lab, k in sorted(out.items())]})
                lines.append("| h=%s | " % fmt(highest_weight(m, *a))
                             + " | ".join(cells) + " |")
            with open(os.path.join(args.out, "fusion-m%d.md" % m), "w") as f:
                f.write("\n".join(lines) + "\n")
            with open(os.path.join(args.out, "fusion-m%d.json" % m), "w") as f:
                f.write(json.dumps(rows, indent=2, sort_keys=True) + "\n")
            untwisted, twisted = w_module_classification(m)
            data = [{"label": list(w.label), "partner": list(w.partner),
                     "delta": fmt(w.delta), "kind": w.kind,
                     "weights": [fmt(x) for x in w.weights()]}
                    for w in untwisted + twisted]
            with open(os.path.join(args.out, "wmodules-m%d.json" % m), "w") as f:
                f.write(json.dumps(data, indent=2, sort_keys=True) + "\n")
            wlines = ["| label | partner | delta | kind | weights |",
                      "|---|---|---|---|---|"]
            for w in untwisted + twisted:
                wlines.append("| %s | %s | %s | %s | %s |" % (
                    w.label, w.partner, fmt(w.delta), w.kind,
                    ", ".join(fmt(x) for x in w.weights())))
            with open(os.path.join(args.out, "wmodules-m%d.md" % m), "w") as f:
                f.write("\n".join(wlines) + "\n")
    return _suite_cmd(["minimal"])(args)


def cmd_diagram(args):
    from .report import node_diagram
    from .suites import run_suite as _rs
    values = {1: "3/7", 2: "1/49", 3: "3/196"}
    print("pairings of the distinguished vector with its character twist:")
    print(node_diagram(values))
    print()
    print("restricted involution-product orders (weight-two computation):")
    print(node_diagram({1: "1", 2: "1", 3: "3"}))
    print()
    print("node coset-character orders (the diagram marks):")
    print(node_diagram({1: "1", 2: "2", 3: "3"}))
    return 0


def _export_tables(outdir, name):
    from .commutants import node_case, tilde_v_pair
    from .report import fd_to_json, fd_to_markdown, w2_to_json
    node = name.split("-")[1]
    case = node_case(node)
    fd = case.fd
    os.makedirs(outdir, exist_ok=True)
    with open(os.path.join(outdir, "algebra-%s.json" % node), "w") as f:
        f.write(fd_to_json(fd))
    with open(os.path.join(outdir, "algebra-%s.md" % node), "w") as f:
        f.write(fd_to_markdown(fd))
    v, vp = tilde_v_pair(case)
    pair = {"v": json.loads(w2_to_json(case.alg, v))}
    if vp.is_theta_even():
        pair["v_twist"] = json.loads(w2_to_json(case.alg, vp))
    with open(os.path.join(outdir, "elements-%s.json" % node), "w") as f:
        f.write(json.dumps(pair, indent=2, sort_keys=True) + "\n")


def cmd_report_all(args):
    names = list(_FAST_SUITES) + ["leech"]
    threads = int(os.environ.get("GRIESS_FORGE_THREADS", "1") or 1)
    reports = {}
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = {name: pool.submit(run_suite, name,
                                         **({"skip_slow": args.skip_slow}
                                            if name == "leech" else {}))
                       for name in names}
            for name in names:
                reports[name] = futures[name].result()
    else:
        for name in names:
            kwargs = {"skip_slow": args.skip_slow} if name == "leech" else {}
            reports[name] = run_suite(name, **kwargs)
    ok = True
    for name in names:
        ok = _write_report(reports[name], args.out, args.md) and ok
    return 0 if ok else 1


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="griess-forge",
        description="exact verification suites for the node commutant algebras")
    parser.add_argument("--out", default="reports", help="report directory")
    parser.add_argument("--md", action="store_true",
                        help="also write markdown tables")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report-all", help="run every suite")
    p.add_argument("--skip-slow", action="store_true",
                   help="skip the large enumeration")
    p.set_defaults(func=cmd_report_all)

    p = sub.add_parser("lattice", help="inspect a lattice by name or file")
    p.add_argument("which")
    p.add_argument("--short-vectors", type=int, default=0, metavar="N")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("code", help="inspect a ternary code file")
    p.add_argument("file")
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("fusion", help="fuse two irreducibles")
    for name in ("m", "r1", "s1", "r2", "s2"):
        p.add_argument(name, type=int)
    p.set_defaults(func=cmd_fusion)

    p = sub.add_parser("commutant", help="node commutant suite")
    p.add_argument("node", choices=["1A", "2A", "3A"])
    p.add_argument("--export-tables", action="store_true")
    p.set_defaults(func=_suite_cmd(lambda a: ["commutant-%s" % a.node]))

    p = sub.add_parser("involutions", help="involution suite")
    p.add_argument("node", choices=["1A", "2A", "3A", "e8-orbit"])
    p.set_defaults(func=_suite_cmd(lambda a: ["involutions-%s" % a.node]))

    p = sub.add_parser("u3a", help="the four-dimensional dihedral algebra")
    p.add_argument("--from-orbit", action="store_true")
    p.set_defaults(func=_suite_cmd(
        lambda a: ["u3a-orbit" if a.from_orbit else "u3a"]))

    p = sub.add_parser("leech", help="the lattice chain suite")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--skip-slow", action="store_true")
    p.set_defaults(func=_suite_cmd(lambda a: ["leech"]))

    p = sub.add_parser("appendix", help="matrix identity suite")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=_suite_cmd(["appendix"]))

    p = sub.add_parser("minimal", help="fusion and module census suite")
    p.add_argument("--export-tables", action="store_true",
                   help="write fusion and module-census tables for m = 3, 4")
    p.set_defaults(func=cmd_minimal)

    p = sub.add_parser("codes", help="ternary code suite")
    p.set_defaults(func=_suite_cmd(["codes"]))

    p = sub.add_parser("charges", help="central charge table suite")
    p.set_defaults(func=_suite_cmd(["charges"]))

    p = sub.add_parser("properties", help="algebra axiom property suite")
    p.set_defaults(func=_suite_cmd(["properties"]))

    p = sub.add_parser("diagram", help="print the labeled node diagrams")
    p.set_defaults(func=cmd_diagram)

    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
