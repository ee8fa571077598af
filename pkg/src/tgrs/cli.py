"""Command-line front end.

Every verb reads a code description with ``--spec FILE`` (``-`` for stdin,
``fixture:NAME`` for a bundled example). A twisted spec looks like::

    {"field": {"p": 2, "m": 4, "modulus": [1, 1, 0, 0, 1]},
     "S": ["1", "w", ...], "v": "ones", "eta": "w^6", "k": 5, "extended": true}

A plain code is ``{"field": ..., "generator": [[...], ...]}``.

Exit codes: 0 success, 2 too many errors, 3 inconclusive, 64 bad input,
65 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence

import numpy as np

from . import fixture_path
from .code import DEFAULT_CAP, LinearCode
from .deepholes import SYNDROME_CAP, DeepHoleSpec, coset_leader_weights, error_distance
from .ecp import build_ecp, decode, verify_ecp
from .equivalence import exhaustive_grs_search, monomial_equivalent, schur_certificate
from .errors import EnumerationCapExceeded, TgrsError
from .twisted import TwistedSpec, classify_twisted, dual_family, etgrs_parity_check, mds_obstruction, spec_code

EXIT_OK = 0
EXIT_DECODE_FAIL = 2
EXIT_INCONCLUSIVE = 3
EXIT_BAD_INPUT = 64
EXIT_CAP = 65


class BadInput(Exception):
    pass


# --- input ----------------------------------------------------------------


def _read_text(src: str) -> str:
    if src == "-":
        return sys.stdin.read()
    if src.startswith("fixture:"):
        src = str(fixture_path(src.split(":", 1)[1]))
    try:
        with open(src, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise BadInput(f"cannot read {src}: {exc.strerror}") from exc


def load_object(src: str) -> TwistedSpec | LinearCode:
    try:
        obj = json.loads(_read_text(src))
    except json.JSONDecodeError as exc:
        raise BadInput(f"invalid JSON in {src}: {exc}") from exc
    if not isinstance(obj, dict) or "field" not in obj:
        raise BadInput("spec must be a JSON object with a 'field' entry")
    try:
        if "generator" in obj:
            return LinearCode.from_json(obj)
        return TwistedSpec.from_json(obj)
    except KeyError as exc:
        raise BadInput(f"spec is missing {exc}") from exc


def _need_spec(obj, extended: bool | None = None) -> TwistedSpec:
    if not isinstance(obj, TwistedSpec):
        raise BadInput("this command needs a twisted spec, not a bare generator")
    if extended is True and not obj.extended:
        raise BadInput('this command needs an extended spec ("extended": true)')
    return obj


def _code(obj) -> LinearCode:
    return obj if isinstance(obj, LinearCode) else spec_code(obj)


def _parse_vector(text: str, F) -> np.ndarray:
    parts = [p for p in text.replace(";", ",").split(",") if p.strip()]
    return np.asarray([F.code(p.strip()) for p in parts], dtype=np.int64)


# --- verbs ----------------------------------------------------------------


def _label(C: LinearCode, d: int | None) -> str:
    return f"[{C.n},{C.k}{'' if d is None else f',{d}'}] over {C.field.name}"


def cmd_classify(obj, args) -> tuple[dict, str, int]:
    C = _code(obj)
    if isinstance(obj, TwistedSpec):
        cls = classify_twisted(obj, args.cap)
        blocked, wit = mds_obstruction(obj, args.cap)
        fmt = obj.field.format
        out = {
            "class": cls.to_json(),
            "n": C.n,
            "k": C.k,
            "field": C.field.name,
            "target": fmt(obj.field.neg(obj.field.inv(obj.eta))),
            "subset_sum_witness": None if wit is None else [fmt(obj.S[i]) for i in wit],
        }
    else:
        cls = C.classify_singleton(args.cap)
        out = {"class": cls.to_json(), "n": C.n, "k": C.k, "field": C.field.name}
    return out, f"{cls.tag} {_label(C, cls.d)}", EXIT_OK


def cmd_matrices(obj, args):
    C = _code(obj)
    if isinstance(obj, TwistedSpec) and obj.extended:
        H = etgrs_parity_check(obj)
    else:
        H = C.parity_check()
    out = {"G": C.gen.to_json(), "H": H.to_json()}
    return out, f"G =\n{C.gen}\n\nH =\n{H}", EXIT_OK


def cmd_decode(obj, args):
    spec = _need_spec(obj, extended=True)
    y = _parse_vector(args.received, spec.field)
    res = decode(spec, y)
    out = res.to_json(spec.field.format)
    code = EXIT_DECODE_FAIL if res.tag == "TOO_MANY_ERRORS" else EXIT_OK
    lines = [f"outcome: {res.tag} (t = {res.t})", "syndrome: " + ", ".join(out["syndrome"])]
    if res.u is not None:
        lines.append("u': " + ", ".join(out["u"]))
        lines.append("Z: {" + ",".join(str(z) for z in res.zeros) + "}")
    if res.codeword is not None:
        lines.append("error support: {" + ",".join(str(i) for i in out["error_support"]) + "}")
        lines.append("codeword: " + ", ".join(out["codeword"]))
    if res.reason:
        lines.append(f"reason: {res.reason}")
    return out, "\n".join(lines), code


def cmd_ecp(obj, args):
    spec = _need_spec(obj, extended=True)
    pair = build_ecp(spec)
    out = {"t": pair.t, "parity": pair.parity, "A": pair.A.gen.to_json(), "B": pair.B.gen.to_json()}
    text = f"t = {pair.t} (n-k {pair.parity})\n\nG_A =\n{pair.A.gen}\n\nG_B =\n{pair.B.gen}"
    code = EXIT_OK
    if args.action == "verify":
        rep = verify_ecp(pair.A, pair.B, spec_code(spec), pair.t, args.cap)
        out["conditions"] = rep.to_json()
        out["ok"] = rep.ok
        text = "\n".join(f"{k}: {v}" for k, v in rep.to_json().items()) + f"\nall: {rep.ok}"
        code = EXIT_OK if rep.ok else EXIT_INCONCLUSIVE
    return out, text, code


def cmd_schur(obj, args):
    C = _code(obj)
    if args.certificate:
        v = schur_certificate(C)
        out = {"verdict": v.tag, "evidence": v.evidence}
        text = v.tag + "\n" + "\n".join(f"{k}: {val}" for k, val in v.evidence.items())
        return out, text, EXIT_INCONCLUSIVE if v.tag == "INCONCLUSIVE" else EXIT_OK
    base = C.dual(0) if args.dual else C
    sq = base.schur_square()
    out = {"of": "dual" if args.dual else "code", "length": sq.n, "dim": sq.k}
    if args.dist:
        out["dist"] = sq.min_distance(args.cap)
    text = f"square of {'dual' if args.dual else 'code'}: " + _label(sq, out.get("dist"))
    return out, text, EXIT_OK


def cmd_equiv(obj, args):
    C = _code(obj)
    fmt = C.field.format
    if args.action == "pair":
        if not args.other:
            raise BadInput("equiv pair needs a second spec")
        D = _code(load_object(args.other))
        w = monomial_equivalent(C, D, args.cap)
        out = {"equivalent": w is not None, "witness": None if w is None else w.to_json(fmt)}
        return out, "equivalent" if w else "not equivalent", EXIT_OK

    def progress(done, total):
        if args.progress and (done % 100 == 0 or done == total):
            print(f"  {done}/{total} candidate sets", file=sys.stderr)

    v = exhaustive_grs_search(C, budget=args.budget, collect_all=args.all, progress=progress)
    out = {"verdict": v.tag, "evidence": v.evidence}
    text = v.tag
    if v.tag == "EQUIVALENT_TO_GRS":
        text += "\nfirst set: {" + ", ".join(v.evidence["S"]) + "}"
        if args.all:
            text += f"\nmatching sets: {len(v.evidence['all_sets'])}"
    return out, text, EXIT_OK


def cmd_deephole(obj, args):
    spec = _need_spec(obj)
    if spec.extended:
        spec = spec.with_extended(False)
    dh = DeepHoleSpec.create(spec, args.klass)
    F = spec.field
    u = dh.vector
    out = {"class": args.klass, "t": dh.t_choice, "s": F.format(dh.s), "u": [F.format(x) for x in u]}
    text = "u = (" + ", ".join(out["u"]) + ")"
    if args.action == "check":
        D = spec_code(spec).dual(0)
        radius = int(coset_leader_weights(D, min(args.cap, SYNDROME_CAP)).max())
        dist = error_distance(u, D, args.cap)
        out.update(radius=radius, distance=dist, is_deep_hole=dist == radius, dual_family=dual_family(spec).tag)
        rng = np.random.default_rng(args.seed)
        fam = []
        for _ in range(args.samples):
            a = int(F.random(rng, nonzero=True))
            member = F.add(F.mul(a, u), D.random_codeword(rng))
            fam.append(error_distance(member, D, args.cap) == radius)
        if args.samples:
            out["family_samples"] = args.samples
            out["family_all_deep"] = all(fam)
        text += f"\nradius = {radius}, distance = {dist}, deep hole: {dist == radius}"
        if args.samples:
            text += f"\n{sum(fam)}/{args.samples} sampled family members are deep holes"
    return out, text, EXIT_OK


def cmd_radius(obj, args):
    C = _code(obj)
    target = C if (args.primal or isinstance(obj, LinearCode)) else C.dual(0)
    radius = int(coset_leader_weights(target, min(args.cap, SYNDROME_CAP)).max())
    which = "code" if target is C else "dual"
    return {"radius": radius, "of": which, "n": target.n, "k": target.k}, f"covering radius of {which}: {radius}", EXIT_OK


VERBS = {
    "classify": cmd_classify,
    "matrices": cmd_matrices,
    "decode": cmd_decode,
    "ecp": cmd_ecp,
    "schur": cmd_schur,
    "equiv": cmd_equiv,
    "deephole": cmd_deephole,
    "radius": cmd_radius,
}


# --- parser -----------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--spec", default=argparse.SUPPRESS, help="spec file, '-' for stdin, or fixture:NAME")
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for sampled checks")
    p.add_argument("--cap", type=int, default=argparse.SUPPRESS, help="enumeration cap")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="tgrs", description=__doc__.split("\n")[0], parents=[common])
    sub = parser.add_subparsers(dest="verb", required=True)

    sub.add_parser("classify", parents=[common], help="MDS / NMDS classification")
    sub.add_parser("matrices", parents=[common], help="generator and parity-check matrices")

    p = sub.add_parser("decode", parents=[common], help="decode a received vector")
    p.add_argument("--received", required=True, help="comma-separated field elements")

    p = sub.add_parser("ecp", parents=[common], help="error-correcting pair")
    p.add_argument("action", choices=["build", "verify"])

    p = sub.add_parser("schur", parents=[common], help="Schur-square statistics")
    p.add_argument("--dual", action="store_true", help="square the Euclidean dual")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--dim", action="store_true", help="report the dimension (default)")
    g.add_argument("--dist", action="store_true", help="also compute the minimum distance")
    g.add_argument("--certificate", action="store_true", help="non-GRS certificate")

    p = sub.add_parser("equiv", parents=[common], help="monomial equivalence with GRS codes")
    p.add_argument("action", choices=["search", "pair"])
    p.add_argument("other", nargs="?", help="second spec for 'pair'")
    p.add_argument("--all", action="store_true", help="collect every matching evaluation set")
    p.add_argument("--budget", type=int, default=10**5, help="candidate-pair budget")
    p.add_argument("--progress", action="store_true", help="report progress on stderr")

    p = sub.add_parser("deephole", parents=[common], help="deep holes of the dual code")
    p.add_argument("action", choices=["vector", "check"])
    p.add_argument("--class", dest="klass", type=int, choices=[1, 2], default=1)
    p.add_argument("--samples", type=int, default=0, help="family members a*u + c to test")

    p = sub.add_parser("radius", parents=[common], help="covering radius (of the dual by default)")
    p.add_argument("--primal", action="store_true", help="use the code itself instead of its dual")
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_BAD_INPUT
    for name, default in (("spec", None), ("json", False), ("seed", 0), ("cap", DEFAULT_CAP)):
        if not hasattr(args, name):
            setattr(args, name, default)
    if args.spec is None:
        print("error: --spec is required", file=stderr)
        return EXIT_BAD_INPUT
    try:
        obj = load_object(args.spec)
        out, text, code = VERBS[args.verb](obj, args)
    except EnumerationCapExceeded as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_CAP
    except (BadInput, TgrsError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_BAD_INPUT
    if args.json:
        print(json.dumps(out, sort_keys=True), file=stdout)
    else:
        print(text, file=stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
