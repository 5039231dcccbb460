"""Command-line front end.

Exactly one JSON document goes to stdout per invocation; diagnostics go to
stderr.  Output is byte-stable for identical inputs: keys are sorted, values
are integers or strings, and nothing time-dependent enters the payload.

Exit codes: 0 success or all checks pass, 1 verification failure, 2 usage
error, 3 budget exceeded (including the refusal to run long 4-simplex jobs
without --allow-long).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .cache import (cache_get, cache_key, cache_put, default_cache_dir,
                    faces_to_document)
from .complexes import BudgetExceededError, f_vector
from .hasse import build_hasse
from .homology import homology, relative_homology
from .layers import enumerate_optimal
from .morse import (MaterializationLimitError, build_matching_complex,
                    embed_faces, induced_inclusion, matching_complex_f_vector)
from .specs import SpecError, build_from_spec, canonical_spec
from .verify import default_suite, CHECK_NAMES

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

# jobs that must be opted into explicitly; desk-scale runs never hit this
_LONG_JOBS = {("count-optimal", "simplex:4"),
              ("fvector", "simplex:4"),
              ("euler", "simplex:4")}


class BudgetRefused(RuntimeError):
    pass


def _emit(command: str, spec, result, out_path=None) -> None:
    doc = {"command": command, "result": result, "spec": spec,
           "tool-version": __version__}
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if out_path:
        Path(out_path).write_text(text)
    sys.stdout.write(text)


def _require_allow_long(command: str, spec: str, args) -> None:
    if (command, spec) in _LONG_JOBS and not args.allow_long:
        raise BudgetRefused(
            f"{command} on {spec} is a long-running job; pass --allow-long")


def _cached_json(args, operation: str, spec: str, variant: str, extra=None):
    cdir = Path(args.cache_dir) if args.cache_dir else default_cache_dir()
    key = cache_key(operation, spec, variant, __version__, extra)
    blob = cache_get(cdir, key)
    if blob is not None:
        return json.loads(blob.decode()), key, cdir
    return None, key, cdir


def _store_json(cdir: Path, key: str, result) -> None:
    try:
        cache_put(cdir, key, json.dumps(result, sort_keys=True).encode())
    except OSError as e:
        print(f"morsematch: cache write failed: {e}", file=sys.stderr)


def cmd_build(args) -> int:
    spec = canonical_spec(args.complex)
    K = build_from_spec(spec)
    if args.variant:
        mc = build_matching_complex(K, args.variant, max_faces=args.budget)
        cx = mc.complex
        if args.out:
            masks = [sum(1 << v for v in face) for face in cx.faces()]
            edge_count = mc.hasse.edge_count if mc.hasse else 0
            Path(args.out).write_bytes(faces_to_document(masks, edge_count))
        result = {"variant": args.variant, "f_vector": f_vector(cx),
                  "faces": cx.total_faces(), "void": cx.is_void,
                  "out": args.out}
    else:
        result = {"variant": None, "f_vector": f_vector(K),
                  "faces": K.total_faces(), "void": K.is_void,
                  "out": None}
    _emit("build", spec, result)
    return EXIT_OK


def cmd_fvector(args) -> int:
    spec = canonical_spec(args.complex)
    _require_allow_long("fvector", spec, args)
    cached, key, cdir = _cached_json(args, "fvector", spec, args.variant)
    if cached is not None:
        _emit("fvector", spec, cached, args.out)
        return EXIT_OK
    K = build_from_spec(spec)
    fv = matching_complex_f_vector(K, args.variant, threads=args.threads,
                                   max_faces=args.budget)
    chi = sum((-1) ** d * v for d, v in enumerate(fv))
    result = {"variant": args.variant, "f_vector": fv,
              "euler_characteristic": chi}
    _store_json(cdir, key, result)
    _emit("fvector", spec, result, args.out)
    return EXIT_OK


def cmd_homology(args) -> int:
    spec = canonical_spec(args.complex)
    rel_spec = canonical_spec(args.relative) if args.relative else None
    extra = {"relative": rel_spec, "reduced": not args.unreduced}
    cached, key, cdir = _cached_json(args, "homology", spec, args.variant, extra)
    if cached is not None:
        _emit("homology", spec, cached, args.out)
        return EXIT_OK
    K = build_from_spec(spec)
    reduced = not args.unreduced
    if args.variant == "none":
        if rel_spec:
            sub = build_from_spec(rel_spec)
            h = relative_homology(K, sub, reduced=reduced)
        else:
            h = homology(K, reduced=reduced)
    else:
        mc = build_matching_complex(K, args.variant, max_faces=args.budget)
        if rel_spec:
            sub = build_from_spec(rel_spec)
            msub = build_matching_complex(sub, args.variant, max_faces=args.budget)
            mapping = induced_inclusion(sub, K)
            emb = embed_faces(msub.complex, mapping, mc.hasse.edge_count)
            h = relative_homology(mc.complex, emb, reduced=reduced)
        else:
            h = homology(mc.complex, reduced=reduced)
    result = {"variant": args.variant, "relative": rel_spec,
              "reduced": reduced, "degrees": h.to_json(), "void": h.void}
    _store_json(cdir, key, result)
    _emit("homology", spec, result, args.out)
    return EXIT_OK


def cmd_count_optimal(args) -> int:
    spec = canonical_spec(args.complex)
    _require_allow_long("count-optimal", spec, args)
    cached, key, cdir = _cached_json(args, "count-optimal", spec, "M")
    if cached is not None:
        _emit("count-optimal", spec, cached, args.out)
        return EXIT_OK
    K = build_from_spec(spec)
    H = build_hasse(K)
    best, count = enumerate_optimal(H)
    result = {"max_cardinality": best, "count": count}
    _store_json(cdir, key, result)
    _emit("count-optimal", spec, result, args.out)
    return EXIT_OK


def cmd_euler(args) -> int:
    spec = canonical_spec(args.complex)
    cached, key, cdir = _cached_json(args, "fvector", spec, args.variant)
    if cached is not None:
        fv = cached["f_vector"]
    else:
        _require_allow_long("euler", spec, args)
        K = build_from_spec(spec)
        fv = matching_complex_f_vector(K, args.variant, threads=args.threads,
                                       max_faces=args.budget)
        chi0 = sum((-1) ** d * v for d, v in enumerate(fv))
        _store_json(cdir, key, {"variant": args.variant, "f_vector": fv,
                                "euler_characteristic": chi0})
    chi = sum((-1) ** d * v for d, v in enumerate(fv))
    result = {"variant": args.variant, "f_vector": fv,
              "euler_characteristic": chi,
              "reduced_euler_characteristic": chi - 1}
    _emit("euler", spec, result, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    only = None if args.check == "all" else args.check
    if only is not None and only not in CHECK_NAMES:
        print(f"morsematch: unknown check {only!r}; choose from "
              f"{', '.join(CHECK_NAMES)} or 'all'", file=sys.stderr)
        return EXIT_USAGE
    cached_fvec = None
    if args.max_n >= 4 or only == "euler-n4":
        cached, _, _ = _cached_json(args, "fvector", "simplex:4", "M")
        if cached is not None:
            cached_fvec = cached["f_vector"]
    reports = default_suite(max_n=args.max_n, budget=args.budget,
                            allow_long=args.allow_long, threads=args.threads,
                            cached_n4_fvector=cached_fvec, only=only)
    for r in reports:
        print(f"morsematch: {r.status:15s} {r.name} {r.instance} "
              f"({r.elapsed:.2f}s)", file=sys.stderr)
    result = {"checks": [r.to_json() for r in reports],
              "summary": {"pass": sum(r.status == "pass" for r in reports),
                          "fail": sum(r.status == "fail" for r in reports),
                          "skipped-budget": sum(r.status == "skipped-budget"
                                                for r in reports)}}
    _emit("verify", args.check, result, args.out)
    if result["summary"]["fail"]:
        return EXIT_VERIFY_FAIL
    if result["summary"]["skipped-budget"]:
        return EXIT_BUDGET
    return EXIT_OK


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="morsematch",
        description="complexes of discrete Morse matchings: enumeration, "
                    "homology, and verification")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, variant_default="M", variant_choices=("M", "MP", "GM")):
        sp.add_argument("--complex", required=True,
                        help="constructor spec, e.g. simplex:3, boundary:2, "
                             "skeleton:simplex:4:2, cone:boundary:2, file:PATH")
        sp.add_argument("--variant", default=variant_default,
                        choices=list(variant_choices))
        sp.add_argument("--threads", type=int, default=1)
        sp.add_argument("--budget", type=int, default=10 ** 8)
        sp.add_argument("--cache-dir", default=None)
        sp.add_argument("--allow-long", action="store_true")
        sp.add_argument("--out", default=None)

    sp = sub.add_parser("build", help="construct a complex or matching complex")
    common(sp, variant_default=None,
           variant_choices=("M", "MP", "GM"))
    sp.set_defaults(fn=cmd_build)

    sp = sub.add_parser("fvector", help="f-vector of a matching complex")
    common(sp)
    sp.set_defaults(fn=cmd_fvector)

    sp = sub.add_parser("homology", help="integral homology (reduced)")
    common(sp, variant_default="M", variant_choices=("none", "M", "MP", "GM"))
    sp.add_argument("--relative", default=None,
                    help="subcomplex spec for relative homology")
    sp.add_argument("--unreduced", action="store_true")
    sp.set_defaults(fn=cmd_homology)

    sp = sub.add_parser("count-optimal",
                        help="count maximum acyclic matchings")
    common(sp)
    sp.set_defaults(fn=cmd_count_optimal)

    sp = sub.add_parser("euler", help="Euler characteristic of a matching complex")
    common(sp)
    sp.set_defaults(fn=cmd_euler)

    sp = sub.add_parser("verify", help="run named checks or all of them")
    sp.add_argument("check", help="check name or 'all'")
    sp.add_argument("--max-n", type=int, default=3)
    sp.add_argument("--threads", type=int, default=1)
    sp.add_argument("--budget", type=int, default=10 ** 7)
    sp.add_argument("--cache-dir", default=None)
    sp.add_argument("--allow-long", action="store_true")
    sp.add_argument("--out", default=None)
    sp.set_defaults(fn=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        return args.fn(args)
    except SpecError as e:
        print(f"morsematch: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetRefused as e:
        print(f"morsematch: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (MaterializationLimitError, BudgetExceededError) as e:
        print(f"morsematch: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as e:
        print(f"morsematch: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
