"""Command-line front end: reproducible construction pipelines.

Conventions shared by every subcommand: graphs travel as graph6 on stdout
and stdin so commands compose in shell pipelines; certificates and other
reports go to files or stderr, never stdout; generators write their outputs
plus a JSON run manifest under an --out prefix; exit code 0 means verified,
1 means a verification failed on valid input, 2 means the input or usage
was wrong.  Randomized generators require an explicit --seed.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from itertools import islice

from . import __version__
from .canon import canonical_form, count_classes
from .ddg import (construct_ddg, counting_lower_bound, cyclic_quasigroup,
                  DdgParams, identity_family, load_family, load_quasigroup,
                  random_bijection_family, random_left_quasigroup,
                  save_family, save_quasigroup, theorem1_params, verify_ddg)
from .designs import (affine_geometry_design, fano_plane, load_design,
                      projective_complement_design, verify_symmetric)
from .errors import ParseError, SrgforgeError
from .gf import as_prime_power, make_field
from .graphs import Graph, VertexPartition, graph6_decode, graph6_encode
from .spectra import (ddg_formula_spectrum, exact_spectrum, Radical,
                      srg_spectrum)
from .srg import (chang_graphs, ClassBlockMap, construct_srg2, construct_srg1,
                  hoffman_colorings, Srg2Config, SrgParams, triangular_graph,
                  verify_srg, verify_srg1_cases)
from .symplectic import delsarte_clique_census, symplectic_graph

_CANON_IN_MANIFEST = 64  # canon cost guard: larger outputs get digests only


def _threads() -> int:
    raw = os.environ.get("SRGFORGE_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()[:16]


def _file_digest(path: str) -> str:
    with open(path, "rb") as fh:
        return _digest(fh.read())


def _write_partition(partition: VertexPartition, path: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for cls in partition.classes:
            fh.write(" ".join(map(str, cls)) + "\n")


def _read_partition(path: str, n: int) -> VertexPartition:
    classes = []
    with open(path, encoding="ascii") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                classes.append([int(tok) for tok in line.split()])
            except ValueError:
                raise ParseError(f"non-integer vertex in {line!r}", line=lineno)
    return VertexPartition.from_lists(n, classes)


def _read_graph(args) -> Graph:
    if getattr(args, "infile", None):
        with open(args.infile, encoding="ascii") as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    for line in text.splitlines():
        if line.strip():
            return graph6_decode(line)
    raise ParseError("no graph6 line on input")


def _read_graphs(args):
    if getattr(args, "infile", None):
        with open(args.infile, encoding="ascii") as fh:
            lines = fh.read().splitlines()
    else:
        lines = sys.stdin.read().splitlines()
    return [graph6_decode(line) for line in lines if line.strip()]


def _manifest(args, command: str, flags: dict, seed, inputs: dict,
              outputs: dict, prefix: str) -> None:
    doc = {
        "tool": "srgforge",
        "version": __version__,
        "command": command,
        "flags": flags,
        "seed": seed,
        "threads": _threads(),
        "inputs": inputs,
        "outputs": outputs,
    }
    with open(prefix + ".manifest.json", "w", encoding="ascii") as fh:
        json.dump(doc, fh, sort_keys=True, indent=2)
        fh.write("\n")


def _graph_record(g: Graph, path: str) -> dict:
    text = graph6_encode(g)
    record = {"path": os.path.basename(path), "digest": _digest(text.encode())}
    if g.n <= _CANON_IN_MANIFEST:
        record["canonical"] = canonical_form(g).graph6
    return record


def _emit_graph(g: Graph, prefix: str) -> dict:
    path = prefix + ".g6"
    text = graph6_encode(g)
    with open(path, "w", encoding="ascii") as fh:
        fh.write(text + "\n")
    print(text)
    return _graph_record(g, path)


def _write_cert(doc: dict, prefix: str) -> str:
    path = prefix + ".cert.json"
    with open(path, "w", encoding="ascii") as fh:
        json.dump(doc, fh, sort_keys=True, indent=2)
        fh.write("\n")
    return os.path.basename(path)


# ---------------------------------------------------------------------------
# ingredient assembly for the generators


def _build_quasigroup(spec: str, m: int, seed: int, inputs: dict):
    if spec == "cyclic":
        return cyclic_quasigroup(m)
    if spec == "random":
        return random_left_quasigroup(m, 2 * seed)
    if spec.startswith("file:"):
        path = spec[5:]
        inputs["quasigroup"] = _file_digest(path)
        qg = load_quasigroup(path)
        if qg.m != m:
            raise ParseError(f"quasigroup order {qg.m}, expected {m}")
        return qg
    raise ParseError(f"unknown quasigroup source {spec!r}")


def _build_family(spec: str, m: int, q: int, quasigroup, seed: int,
                  inputs: dict):
    if spec == "identity":
        return identity_family(m, q)
    if spec == "random":
        return random_bijection_family(m, q, quasigroup, 2 * seed + 1)
    if spec.startswith("file:"):
        path = spec[5:]
        inputs["family"] = _file_digest(path)
        return load_family(path, m, q)
    raise ParseError(f"unknown family source {spec!r}")


def _build_ddg(args, inputs: dict):
    p, e = as_prime_power(args.q)
    field = make_field(p, e)
    design = affine_geometry_design(field, args.d)
    m = design.n_classes
    quasigroup = _build_quasigroup(args.quasigroup, m, args.seed, inputs)
    family = _build_family(args.family, m, args.q, quasigroup, args.seed,
                           inputs)
    g, partition = construct_ddg([design] * m, quasigroup, family)
    return g, partition, design, quasigroup, family


def _spectrum_report(g: Graph, cert) -> tuple[dict, bool]:
    """DDG spectrum check: formula candidates must annihilate exactly."""
    params = DdgParams.from_certificate(cert)
    formula = ddg_formula_spectrum(params)
    spec = exact_spectrum(g, formula.candidates())
    if formula.theta1 == 0:
        f_total = spec.multiplicity_of(0)
    else:
        f_total = (spec.multiplicity_of(formula.theta1) +
                   spec.multiplicity_of(-formula.theta1))
    ok = f_total == formula.f_sum
    return {"spectrum": spec.serialize(), "f_sum": formula.f_sum,
            "g_sum": formula.g_sum, "f_sum_ok": ok}, ok


def cmd_gen_ddg(args) -> int:
    inputs: dict = {}
    g, partition, _, quasigroup, family = _build_ddg(args, inputs)
    cert = verify_ddg(g, partition)

    prefix = args.out or f"ddg-q{args.q}-d{args.d}-s{args.seed}"
    graph_rec = _emit_graph(g, prefix)
    _write_partition(partition, prefix + ".classes")
    doc = {"ddg": json.loads(cert.to_json())}
    spectrum_ok = True
    if cert.passed:
        report, spectrum_ok = _spectrum_report(g, cert)
        doc.update(report)
    cert_path = _write_cert(doc, prefix)

    save_quasigroup(quasigroup, prefix + ".quasigroup")
    save_family(family, prefix + ".family")
    _manifest(
        args, "gen-ddg",
        {"q": args.q, "d": args.d, "quasigroup": args.quasigroup,
         "family": args.family},
        args.seed, inputs,
        {"graph": graph_rec,
         "classes": {"path": os.path.basename(prefix + ".classes")},
         "certificate": {"path": cert_path}},
        prefix)
    return 0 if cert.passed and spectrum_ok else 1


def _load_phi(spec: str | None, m: int, inputs: dict) -> ClassBlockMap:
    if not spec:
        return ClassBlockMap.identity(m)
    path = spec[5:] if spec.startswith("file:") else spec
    inputs["phi"] = _file_digest(path)
    with open(path, encoding="ascii") as fh:
        toks = fh.read().split()
    try:
        mapping = tuple(int(t) for t in toks)
    except ValueError:
        raise ParseError(f"{path}: block map must be integers")
    if len(mapping) != m:
        raise ParseError(f"{path}: block map has {len(mapping)} entries, "
                         f"expected {m}")
    return ClassBlockMap(mapping)


def cmd_gen_srg1(args) -> int:
    inputs: dict = {}
    p, e = as_prime_power(args.q)
    field = make_field(p, e)
    ddg_graph, partition, *_ = _build_ddg(args, inputs)
    design = projective_complement_design(field, args.d)
    phi = _load_phi(args.phi, len(partition.classes), inputs)

    g = construct_srg1(ddg_graph, partition, design, phi)
    cert = verify_srg(g)
    cases = verify_srg1_cases(g, partition, design)

    prefix = args.out or f"srg1-q{args.q}-d{args.d}-s{args.seed}"
    graph_rec = _emit_graph(g, prefix)
    doc = {"srg": json.loads(cert.to_json()),
           "cases": json.loads(cases.to_json())}
    spectrum_ok = True
    if cert.passed:
        spec = exact_spectrum(
            g, [e for e, _ in srg_spectrum(
                SrgParams.from_certificate(cert)).entries()])
        doc["spectrum"] = spec.serialize()
    cert_path = _write_cert(doc, prefix)
    _manifest(
        args, "gen-srg1",
        {"q": args.q, "d": args.d, "quasigroup": args.quasigroup,
         "family": args.family, "phi": args.phi or "identity"},
        args.seed, inputs,
        {"graph": graph_rec, "certificate": {"path": cert_path}},
        prefix)
    return 0 if cert.passed and cases.passed and spectrum_ok else 1


_BASES = {"t8": lambda: triangular_graph(8),
          "chang1": lambda: chang_graphs()[0],
          "chang2": lambda: chang_graphs()[1],
          "chang3": lambda: chang_graphs()[2]}


def cmd_gen_srg2(args) -> int:
    inputs: dict = {}
    if args.base in _BASES:
        base = _BASES[args.base]()
    elif args.base.startswith("g6:"):
        path = args.base[3:]
        inputs["base"] = _file_digest(path)
        with open(path, encoding="ascii") as fh:
            base = graph6_decode(fh.read())
    else:
        raise ParseError(f"unknown base {args.base!r}")

    if args.design == "fano":
        design = fano_plane()
    elif args.design.startswith("file:"):
        path = args.design[5:]
        inputs["design"] = _file_digest(path)
        design = load_design(path, "symmetric")
        dcert = verify_symmetric(design)
        if not dcert.passed:
            raise ParseError(f"{path}: design axioms fail: "
                             f"{dcert.witnesses[0]}")
    else:
        raise ParseError(f"unknown design {args.design!r}")

    coloring = next(islice(hoffman_colorings(base), args.coloring, None), None)
    if coloring is None:
        print(f"no Hoffman coloring at index {args.coloring} for this base",
              file=sys.stderr)
        return 1

    phi = _load_phi(args.phi, len(coloring.classes), inputs)
    g = construct_srg2(Srg2Config(base, coloring, design, phi))
    cert = verify_srg(g)

    prefix = args.out or f"srg2-{args.base}-c{args.coloring}"
    graph_rec = _emit_graph(g, prefix)
    cert_path = _write_cert({"srg": json.loads(cert.to_json())}, prefix)
    _manifest(
        args, "gen-srg2",
        {"base": args.base, "design": args.design,
         "coloring": args.coloring, "phi": args.phi or "identity"},
        None, inputs,
        {"graph": graph_rec, "certificate": {"path": cert_path}},
        prefix)
    return 0 if cert.passed else 1


def cmd_verify(args) -> int:
    g = _read_graph(args)
    if args.expect == "srg":
        cert = verify_srg(g)
    else:
        if not args.classes:
            raise ParseError("--expect ddg needs --classes FILE")
        partition = _read_partition(args.classes, g.n)
        cert = verify_ddg(g, partition)
    text = cert.to_json()
    if args.cert:
        with open(args.cert, "w", encoding="ascii") as fh:
            fh.write(text + "\n")
    else:
        print(text, file=sys.stderr)
    return 0 if cert.passed else 1


def _parse_candidates(text: str):
    out = []
    for tok in text.replace(",", " ").split():
        if tok.startswith("sqrt(") and tok.endswith(")"):
            out.append(Radical(int(tok[5:-1])))
        elif tok.startswith("-sqrt(") and tok.endswith(")"):
            out.append(Radical(int(tok[6:-1]), negative=True))
        else:
            try:
                out.append(int(tok))
            except ValueError:
                raise ParseError(f"bad eigenvalue token {tok!r}")
    return out


def cmd_spectrum(args) -> int:
    g = _read_graph(args)
    if args.candidates:
        candidates = _parse_candidates(args.candidates)
    elif args.ddg:
        params = DdgParams(*(int(t) for t in args.ddg.split(",")))
        candidates = ddg_formula_spectrum(params).candidates()
    elif args.srg:
        params = SrgParams(*(int(t) for t in args.srg.split(",")))
        candidates = [e for e, _ in srg_spectrum(params).entries()]
    else:
        raise ParseError("need --candidates, --ddg or --srg")
    spec = exact_spectrum(g, candidates)
    print(json.dumps({"n": g.n, "spectrum": spec.serialize()},
                     sort_keys=True))
    return 0


def cmd_canon(args) -> int:
    for g in _read_graphs(args):
        form = canonical_form(g)
        print(f"{form.graph6} {form.aut_order}")
    return 0


def cmd_count_classes(args) -> int:
    classes = count_classes(_read_graphs(args))
    doc = {key: {"count": entry.count, "first": entry.first}
           for key, entry in classes.items()}
    text = json.dumps(doc, sort_keys=True, indent=2)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_sp_graph(args) -> int:
    from .graphs import complement
    g = symplectic_graph(make_field(*as_prime_power(args.q)), args.d)
    if args.complement:
        g = complement(g)
    print(graph6_encode(g))
    return 0


def cmd_clique_census(args) -> int:
    g = _read_graph(args)
    census = delsarte_clique_census(g)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            json.dump({"size": census.size, "count": census.count,
                       "cliques": [list(c) for c in census.cliques]},
                      fh, sort_keys=True, indent=2)
            fh.write("\n")
    print(json.dumps({"size": census.size, "count": census.count},
                     sort_keys=True))
    return 0


def cmd_bound(args) -> int:
    value = counting_lower_bound(args.q, args.d)
    print(f"{value.numerator}/{value.denominator}")
    return 0


# ---------------------------------------------------------------------------


def _add_ddg_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--q", type=int, required=True, help="prime power")
    p.add_argument("--d", type=int, required=True, help="dimension, >= 2")
    p.add_argument("--seed", type=int, required=True,
                   help="PRNG seed (random sources use 2*seed and 2*seed+1)")
    p.add_argument("--quasigroup", default="cyclic",
                   help="cyclic | random | file:PATH")
    p.add_argument("--family", default="random",
                   help="identity | random | file:PATH")
    p.add_argument("--out", help="output path prefix")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="srgforge",
        description="exact construction and verification of divisible design "
                    "graphs and strongly regular graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-ddg", help="divisible design graph from glued "
                                       "affine designs")
    _add_ddg_flags(p)
    p.set_defaults(func=cmd_gen_ddg)

    p = sub.add_parser("gen-srg1", help="strongly regular graph by coclique "
                                        "attachment")
    _add_ddg_flags(p)
    p.add_argument("--phi", help="file with the class-to-block bijection")
    p.set_defaults(func=cmd_gen_srg1)

    p = sub.add_parser("gen-srg2", help="strongly regular graph by Hoffman "
                                        "coloring and clique attachment")
    p.add_argument("--base", required=True,
                   help="t8 | chang1 | chang2 | chang3 | g6:FILE")
    p.add_argument("--design", default="fano", help="fano | file:PATH")
    p.add_argument("--coloring", type=int, default=0,
                   help="index into the deterministic coloring enumeration")
    p.add_argument("--phi", help="file with the class-to-block bijection")
    p.add_argument("--out", help="output path prefix")
    p.set_defaults(func=cmd_gen_srg2)

    p = sub.add_parser("verify", help="check a graph6 graph from stdin")
    p.add_argument("--expect", choices=("srg", "ddg"), default="srg")
    p.add_argument("--classes", help="partition file for --expect ddg")
    p.add_argument("--in", dest="infile", help="read graph6 from a file")
    p.add_argument("--cert", help="write the certificate JSON here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("spectrum", help="exact spectrum given candidates")
    p.add_argument("--candidates", help="e.g. '6,2,0,-2' or 'sqrt(5)'")
    p.add_argument("--ddg", help="v,k,lambda1,lambda2,m,n")
    p.add_argument("--srg", help="v,k,lambda,mu")
    p.add_argument("--in", dest="infile")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("canon", help="canonical graph6 and group order per "
                                     "input line")
    p.add_argument("--in", dest="infile")
    p.set_defaults(func=cmd_canon)

    p = sub.add_parser("count-classes", help="group graph6 lines by "
                                             "isomorphism class")
    p.add_argument("--in", dest="infile")
    p.add_argument("--out", help="write the JSON map here")
    p.set_defaults(func=cmd_count_classes)

    p = sub.add_parser("sp-graph", help="symplectic graph over GF(q)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--complement", action="store_true")
    p.set_defaults(func=cmd_sp_graph)

    p = sub.add_parser("clique-census", help="enumerate ratio-bound cliques")
    p.add_argument("--in", dest="infile")
    p.add_argument("--out", help="write the full clique list here")
    p.set_defaults(func=cmd_clique_census)

    p = sub.add_parser("bound", help="exact counting lower bound")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_bound)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SrgforgeError as exc:
        print(f"srgforge: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"srgforge: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
