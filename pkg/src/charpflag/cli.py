"""Command-line front end: every decision procedure as a subcommand.

Subcommands
-----------
roots            list roots, simple roots and Weyl group order of a datum
h1               Andersen/Kempf H^1 status of one weight
bwb0             characteristic-zero cohomology oracle for one weight
grassmann-check  full non-liftability certificate for (d, N, p)
isogeny-check    validate rigidified-morphism data from a JSON file
rigidity         Frobenius rigidity verdict for a datum over a base ring

Every subcommand accepts ``--json`` for a machine-readable report
envelope; output is byte-stable for fixed inputs and version.  Exit codes:
0 for definite verdicts, 2 for mathematically inconclusive or undetermined
outcomes, 1 for usage errors.  ``--batch FILE`` evaluates one query per
line, in order.  The environment variable CHARP_FLAG_MAX_RANK overrides
the Weyl-group rank bound (default 8).
"""

from __future__ import annotations

import argparse
import json
import re
import shlex
import sys
from typing import Optional, Sequence

from . import __version__
from .errors import CharpFlagError
from .certificate import VERDICT_NO_LIFT, check_equivariant_smoothness
from .cohomology import andersen_h1, bwb_char0
from .lattice import (
    RootDatum,
    custom_datum,
    make_datum,
    make_torus,
    max_weyl_rank,
    normalize_family,
    weyl_group,
)
from .rootmorph import (
    PMorphismData,
    RingChar,
    frobenius_rigidity_verdict,
    validate_p_morphism,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INCONCLUSIVE = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # Weight vectors like -5,5,0,0 must parse as option values; every
        # option here is --long-form, so anything starting with -digit is
        # a value, not a flag.
        self._negative_number_matcher = re.compile(r"^-\d")

    def error(self, message):  # argparse would exit(2); usage errors are exit 1 here
        raise UsageError(message)


def _parse_weight_coords(text: str) -> tuple[int, ...]:
    try:
        coords = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"malformed weight vector {text!r}; expected comma-separated integers")
    if not coords:
        raise UsageError("empty weight vector")
    return coords


def _resolve_datum(family: str, n: int) -> RootDatum:
    fam = normalize_family(family)
    return make_torus(n) if fam == "Torus" else make_datum(fam, n)


def _parse_ring_spec(spec: str, p: Optional[int]) -> RingChar:
    s = spec.strip().lower()
    if s in ("0", "zero"):
        return RingChar.zero()
    if s in ("p", "prime"):
        if p is None:
            raise UsageError("--ring p requires --p")
        return RingChar.prime(p)
    m = re.fullmatch(r"p\^?(\d+)", s)
    if m:
        k = int(m.group(1))
        if p is None:
            raise UsageError(f"--ring {spec} requires --p")
        return RingChar.prime(p) if k == 1 else RingChar.prime_power(p, k)
    if s.isdigit():
        value = int(s)
        base, k = _decompose_prime_power(value)
        if p is not None and p != base:
            raise UsageError(f"--ring {spec} conflicts with --p {p}")
        return RingChar.prime(base) if k == 1 else RingChar.prime_power(base, k)
    raise UsageError(f"unrecognized ring characteristic {spec!r}; use 0, p, or p^N")


def _decompose_prime_power(value: int) -> tuple[int, int]:
    if value < 2:
        raise UsageError(f"ring characteristic {value} must be 0 or a prime power")
    f = 2
    while f * f <= value:
        if value % f == 0:
            k = 0
            v = value
            while v % f == 0:
                v //= f
                k += 1
            if v != 1:
                raise UsageError(f"ring characteristic {value} is not a prime power")
            return f, k
        f += 1
    return value, 1


# ---------------------------------------------------------------------------
# Subcommand handlers: each returns (inputs, result, text_lines, exit_code)


def _cmd_roots(args) -> tuple[dict, dict, list[str], int]:
    datum = _resolve_datum(args.type, args.n)
    order = None
    if datum.rank <= max_weyl_rank():
        order = len(weyl_group(datum))
    result = {
        "datum": datum.to_json(),
        "name": datum.name,
        "rank": datum.rank,
        "root_count": len(datum.roots),
        "roots": [r.vector.to_json() for r in datum.roots],
        "coroots": [list(r.coroot) for r in datum.roots],
        "simple_roots": [r.vector.to_json() for r in datum.simple_roots],
        "weyl_vector": None if datum.weyl_vector is None else datum.weyl_vector.to_json(),
        "weyl_group_order": order,
    }
    text = [
        f"datum: {datum.name}  (rank {datum.rank}, {len(datum.roots)} roots)",
        "simple roots: " + " ".join(str(r.vector.coords) for r in datum.simple_roots),
        f"weyl vector: {None if datum.weyl_vector is None else datum.weyl_vector.coords}",
        f"weyl group order: {order if order is not None else 'not computed (rank bound)'}",
    ]
    return {"type": args.type, "n": args.n}, result, text, EXIT_OK


def _cmd_h1(args) -> tuple[dict, dict, list[str], int]:
    coords = _parse_weight_coords(args.weight)
    n = args.N if args.N is not None else len(coords)
    if n != len(coords):
        raise UsageError(f"--N {args.N} does not match weight length {len(coords)}")
    mu = make_datum("GL", n).weight(coords)
    status = andersen_h1(mu, args.p)
    code = EXIT_INCONCLUSIVE if status.status == "undetermined" else EXIT_OK
    text = [f"weight: {mu.coords}  datum GL({n})  p = {args.p}", f"H1 status: {status.status}"]
    if status.highest_weight is not None:
        text.append(f"largest weight: {status.highest_weight.coords}")
    if status.reason:
        text.append(f"reason: {status.reason}")
    return (
        {"weight": list(coords), "N": n, "p": args.p},
        status.to_json(),
        text,
        code,
    )


def _cmd_bwb0(args) -> tuple[dict, dict, list[str], int]:
    coords = _parse_weight_coords(args.weight)
    n = args.N if args.N is not None else len(coords)
    if n != len(coords):
        raise UsageError(f"--N {args.N} does not match weight length {len(coords)}")
    lam = make_datum("GL", n).weight(coords)
    status = bwb_char0(lam)
    if status.all_zero:
        text = [f"weight: {lam.coords}  datum GL({n})", "all cohomology vanishes (singular)"]
    else:
        text = [
            f"weight: {lam.coords}  datum GL({n})",
            f"cohomology in degree {status.degree}, "
            f"highest weight {status.highest_weight.coords}",
        ]
    return {"weight": list(coords), "N": n}, status.to_json(), text, EXIT_OK


def _cmd_grassmann_check(args) -> tuple[dict, dict, list[str], int]:
    cert = check_equivariant_smoothness(args.d, args.N, args.p)
    code = EXIT_OK if cert.final_verdict == VERDICT_NO_LIFT else EXIT_INCONCLUSIVE
    counts: dict[str, int] = {}
    for row in cert.rows:
        counts[row.case_tag] = counts.get(row.case_tag, 0) + 1
    text = [
        f"P(F*S) on Gr({args.d}, {args.N}) at p = {args.p}",
        "rows: " + ", ".join(f"{tag} x{cnt}" for tag, cnt in sorted(counts.items())),
        f"condition i  (H^2(G, H^0) = 0):        {'holds' if cert.condition_i.holds else 'FAILS'}",
        f"condition ii (H^1 trivial G-module):   {'holds' if cert.condition_ii.holds else 'FAILS'}",
        f"condition iii (H^1(G, k) = 0):         {'holds' if cert.condition_iii.holds else 'FAILS'}",
        f"Frobenius rigidity: mod p^2 "
        f"{'no lift' if not cert.rigidity_mod_p_squared.lift_possible else 'lift possible'}, "
        f"char 0 {'no lift' if not cert.rigidity_char_zero.lift_possible else 'lift possible'}",
        f"verdict: {cert.final_verdict}",
    ]
    return (
        {"d": args.d, "N": args.N, "p": args.p},
        cert.to_json(),
        text,
        code,
    )


def _load_datum_spec(spec: dict, role: str) -> RootDatum:
    if "type" in spec:
        return _resolve_datum(spec["type"], int(spec["n"]))
    try:
        positive = [
            (tuple(entry["vector"]), tuple(entry["coroot"]))
            for entry in spec["positive_roots"]
        ]
        simple = [tuple(spec["positive_roots"][i]["vector"]) for i in spec["simple_indices"]]
        weyl = spec.get("weyl_vector")
        return custom_datum(
            rank=int(spec["rank"]),
            positive_pairs=positive,
            simple_coords=simple,
            weyl_vector_coords=None if weyl is None else tuple(weyl),
            pairing_denominator=int(spec.get("pairing_denominator", 1)),
            name=spec.get("name", f"custom-{role}"),
        )
    except (KeyError, TypeError) as exc:
        raise UsageError(f"malformed {role} datum description: {exc}") from None


def _cmd_isogeny_check(args) -> tuple[dict, dict, list[str], int]:
    try:
        with open(args.file, "r", encoding="utf-8") as fh:
            spec = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"{args.file} is not valid JSON: {exc}")
    try:
        source = _load_datum_spec(spec["source"], "source")
        target = _load_datum_spec(spec["target"], "target")
        h = tuple(tuple(int(x) for x in row) for row in spec["h"])
        d_spec = spec.get("d_map", "identity")
        if d_spec == "identity":
            if len(source.roots) != len(target.roots):
                raise UsageError(
                    "d_map 'identity' needs equal root counts "
                    f"({len(source.roots)} vs {len(target.roots)})"
                )
            d_map = {a: b for a, b in zip(source.roots, target.roots)}
        else:
            d_map = {source.roots[i]: target.roots[j] for i, j in enumerate(d_spec)}
        q_spec = spec.get("q", 1)
        if isinstance(q_spec, int):
            q = {a: q_spec for a in source.roots}
        else:
            q = {source.roots[i]: int(v) for i, v in enumerate(q_spec)}
        ring = spec.get("ring_char", {"kind": "zero"})
        ring_char = {
            "zero": RingChar.zero,
            "prime": lambda: RingChar.prime(int(ring["p"])),
            "prime_power": lambda: RingChar.prime_power(int(ring["p"]), int(ring["n"])),
        }[ring["kind"]]()
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        raise UsageError(f"malformed morphism description in {args.file}: {exc}") from None
    verdict = validate_p_morphism(
        PMorphismData(source=source, target=target, h=h, d_map=d_map, q=q, ring_char=ring_char)
    )
    text = [
        f"morphism {source.name} -> {target.name} over {ring_char.describe()}:"
        f" {'valid' if verdict.valid else 'INVALID'}"
    ]
    text += [
        f"  [{f.relation}] root {f.root.vector.coords}: {f.detail}" for f in verdict.failures
    ]
    return {"file": args.file}, verdict.to_json(), text, EXIT_OK


def _cmd_rigidity(args) -> tuple[dict, dict, list[str], int]:
    datum = _resolve_datum(args.type, args.n)
    ring_char = _parse_ring_spec(args.ring, args.p)
    verdict = frobenius_rigidity_verdict(datum, ring_char, p=args.p)
    text = [
        f"Frobenius of {datum.name} over {ring_char.describe()}: "
        f"{'lift possible' if verdict.lift_possible else 'no lift'}"
    ]
    if verdict.reason:
        text.append(f"reason: {verdict.reason}")
    if verdict.note:
        text.append(f"note: {verdict.note}")
    return (
        {"type": args.type, "n": args.n, "ring": args.ring, "p": args.p},
        verdict.to_json(),
        text,
        EXIT_OK,
    )


_HANDLERS = {
    "roots": _cmd_roots,
    "h1": _cmd_h1,
    "bwb0": _cmd_bwb0,
    "grassmann-check": _cmd_grassmann_check,
    "isogeny-check": _cmd_isogeny_check,
    "rigidity": _cmd_rigidity,
}


def build_parser() -> _Parser:
    parser = _Parser(prog="charpflag", description=__doc__.splitlines()[0])
    parser.add_argument("--batch", metavar="FILE", help="evaluate one query per line of FILE")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p_roots = sub.add_parser("roots", help="root datum summary")
    p_roots.add_argument("--type", required=True, help="GL | SL | Sp | SO_odd | SO_even | torus")
    p_roots.add_argument("--n", required=True, type=int, help="lattice rank")

    p_h1 = sub.add_parser("h1", help="H^1 status of a line bundle weight on GL_N/B")
    p_h1.add_argument("--weight", required=True, help="comma-separated integer coordinates")
    p_h1.add_argument("--p", required=True, type=int, help="prime characteristic")
    p_h1.add_argument("--N", type=int, help="rank of the GL datum (default: weight length)")

    p_bwb = sub.add_parser("bwb0", help="characteristic-zero cohomology oracle")
    p_bwb.add_argument("--weight", required=True, help="comma-separated integer coordinates")
    p_bwb.add_argument("--N", type=int, help="rank of the GL datum (default: weight length)")

    p_gc = sub.add_parser("grassmann-check", help="non-liftability certificate for P(F*S)")
    p_gc.add_argument("--d", required=True, type=int, help="tautological bundle rank, 2 <= d <= N-2")
    p_gc.add_argument("--N", required=True, type=int, help="ambient dimension")
    p_gc.add_argument("--p", required=True, type=int, help="prime characteristic, p >= 5")

    p_iso = sub.add_parser("isogeny-check", help="validate rigidified morphism data from JSON")
    p_iso.add_argument("--file", required=True, help="path to the morphism description")

    p_rig = sub.add_parser("rigidity", help="Frobenius rigidity verdict")
    p_rig.add_argument("--type", required=True, help="GL | SL | Sp | SO_odd | SO_even | torus")
    p_rig.add_argument("--n", required=True, type=int, help="lattice rank")
    p_rig.add_argument("--ring", required=True, help="base ring characteristic: 0, p, or p^N")
    p_rig.add_argument("--p", required=True, type=int, help="residue prime")

    for sp in (p_roots, p_h1, p_bwb, p_gc, p_iso, p_rig):
        sp.add_argument("--json", action="store_true", help="emit a JSON report envelope")
    return parser


def _run_single(parser: _Parser, argv: Sequence[str], compact_json: bool) -> int:
    args = parser.parse_args(argv)
    if args.command is None:
        raise UsageError("a subcommand is required (see --help)")
    inputs, result, text, code = _HANDLERS[args.command](args)
    if args.json:
        envelope = {
            "command": args.command,
            "inputs": inputs,
            "result": result,
            "version": __version__,
        }
        if compact_json:
            print(json.dumps(envelope, sort_keys=True, separators=(",", ":")))
        else:
            print(json.dumps(envelope, sort_keys=True, indent=2))
    else:
        for line in text:
            print(line)
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        if argv and argv[0] == "--batch":
            if len(argv) != 2:
                raise UsageError("--batch takes exactly one file argument")
            try:
                with open(argv[1], "r", encoding="utf-8") as fh:
                    lines = fh.read().splitlines()
            except OSError as exc:
                raise UsageError(f"cannot read batch file: {exc}")
            worst = EXIT_OK
            for line in lines:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                try:
                    code = _run_single(parser, shlex.split(line), compact_json=True)
                except (UsageError, CharpFlagError) as exc:
                    print(f"error: {exc}", file=sys.stderr)
                    code = EXIT_USAGE
                if code == EXIT_USAGE or worst == EXIT_USAGE:
                    worst = EXIT_USAGE
                else:
                    worst = max(worst, code)
            return worst
        return _run_single(parser, argv, compact_json=False)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CharpFlagError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
