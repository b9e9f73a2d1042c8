"""Command-line interface: ``weylcycles <subcommand> [flags]``.

Classes are given either as ``"n=4 s=8 d=3 m=2,2,2,2,2,2,2,0"`` (curves use
``delta=`` and ``mu=``) or as the JSON object printed by the tool itself.
Exit status: 0 on success, 1 when ``verify`` fails or a computation cannot
finish, 2 on malformed input or an unsupported ambient.
"""

from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from fractions import Fraction
from pathlib import Path

from . import cache, weyl
from .baselocus import (MORI_DREAM, base_locus_report, effective_cone_certificate,
                        effective_cone_membership, effectivity_necessary)
from .chow import decompose_two_cycle, intersect_strict_transforms
from .dimension import check_conjecture, h0_p3_proof_path, wdim
from .errors import NoDecompositionError, OrbitUnboundedError, WeylError
from .lattice import (CurveClass, DivisorClass, cremona_curve, cremona_divisor, cremona_reduce,
                      dm_pairing, index_set, intersect_div_curve, parse_class, parse_divisor)
from .oracle import DEFAULT_PRIMES, DEFAULT_SEEDS, oracle_h0
from .verification import run_all


class InputError(Exception):
    """Bad flags or an ambient the subcommand does not support (exit 2)."""


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in re.split(r"[,\s]+", text.strip()) if x)
    except ValueError:
        raise InputError(f"expected a comma-separated list of integers, got {text!r}") from None


def _divisor(text: str) -> DivisorClass:
    try:
        return parse_divisor(text)
    except (ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        raise InputError(str(exc)) from None


def _any_class(text: str) -> DivisorClass | CurveClass:
    try:
        return parse_class(text)
    except (ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        raise InputError(str(exc)) from None


def _require(n: int, s: int, allowed, what: str) -> None:
    if n < 2 or s < 0:
        raise InputError(f"invalid ambient n={n}, s={s}")
    if allowed is not None and (n, s) not in allowed:
        pretty = ", ".join(f"X^{a}_{b}" for a, b in sorted(allowed))
        raise InputError(f"{what} supports {pretty}, not X^{n}_{s}")


def _frac(x: Fraction) -> str:
    return str(x)


# -- subcommands: each returns (json object, table text) ----------------------

def cmd_orbit(a):
    _require(a.n, a.s, None, "orbit")
    cat = a.catalog(a.n, a.s)
    rows = [{"class": D.to_json(), "type": lab, "permutation": list(perm)}
            for D in cat.classes for lab, perm in [cat.labels[D]]]
    obj = {"n": a.n, "s": a.s, "count": len(cat), "types": {str(k): v for k, v in cat.types().items()},
           "classes": rows}
    lines = [f"X^{a.n}_{a.s}: {len(cat)} Weyl divisors, {len(cat.types())} types"]
    lines += [f"  type {k}: {v}" for k, v in cat.types().items()]
    if a.list:
        lines += [f"  [{cat.labels[D][0]}] {D.pretty()}" for D in cat.classes]
    return obj, "\n".join(lines)


def cmd_curves(a):
    _require(a.n, a.s, {(3, 7), (4, 8)}, "curves")
    cat = weyl.weyl_curve_orbit(a.n, a.s)
    obj = {"n": a.n, "s": a.s, "count": len(cat), "types": cat.types(),
           "classes": [{"class": C.to_json(), "type": cat.labels[C][0]} for C in cat.classes]}
    lines = [f"X^{a.n}_{a.s}: {len(cat)} Weyl curves " + str(cat.types())]
    lines += [f"  [{cat.labels[C][0]}] {C.pretty()}" for C in cat.classes]
    return obj, "\n".join(lines)


def cmd_surfaces(a):
    _require(a.n, a.s, {(4, 8)}, "surfaces")
    cat = weyl.weyl_surface_catalog()
    obj = {"n": 4, "s": 8, "count": len(cat), "surfaces": [S.to_json() for S in cat]}
    lines = [f"{len(cat)} Weyl surfaces"]
    lines += [f"  {S.name:<14} char {S.char_cycle.pretty()}" for S in cat]
    return obj, "\n".join(lines)


def cmd_pairing(a):
    X, Y = _any_class(a.d1), _any_class(a.d2)
    _require(X.n, X.s, None, "pairing")
    if isinstance(X, DivisorClass) and isinstance(Y, DivisorClass):
        kind, val = "dolgachev-mukai", dm_pairing(X, Y)
    elif isinstance(X, DivisorClass):
        kind, val = "divisor.curve", intersect_div_curve(X, Y)
    elif isinstance(Y, DivisorClass):
        kind, val = "divisor.curve", intersect_div_curve(Y, X)
    else:
        raise InputError("at least one argument must be a divisor class")
    return {"pairing": kind, "value": val}, str(val)


def cmd_cremona(a):
    X = _any_class(a.cls)
    _require(X.n, X.s, None, "cremona")
    I = index_set(_ints(a.set), X.s)
    Y = cremona_divisor(X, I) if isinstance(X, DivisorClass) else cremona_curve(X, I)
    return {"input": X.to_json(), "set": list(I), "image": Y.to_json()}, Y.pretty()


def cmd_reduce(a):
    D = _divisor(a.divisor)
    _require(D.n, D.s, None, "reduce")
    red = cremona_reduce(D)
    obj = {"input": D.to_json(), "reduced": red.divisor.to_json(),
           "steps": [list(I) for I in red.steps], "non_effective": red.non_effective}
    lines = [f"{D.pretty()} -> {red.divisor.pretty()}"]
    lines += [f"  Cr{list(I)}" for I in red.steps]
    if red.non_effective:
        lines.append("  reached a class with d < 0 or m_i > d: not effective")
    return obj, "\n".join(lines)


def cmd_baselocus(a):
    D = _divisor(a.divisor)
    _require(D.n, D.s, MORI_DREAM, "baselocus")
    a.catalog(D.n, D.s)
    rep = base_locus_report(D)
    return rep.to_json(), rep.table()


def cmd_effective(a):
    D = _divisor(a.divisor)
    _require(D.n, D.s, MORI_DREAM, "effective")
    a.catalog(D.n, D.s)
    member = effective_cone_membership(D)
    res = effective_cone_certificate(D)
    gens = weyl.weyl_divisor_orbit(D.n, D.s).classes
    obj = {"divisor": D.to_json(), "effective": member,
           "violations": [v.to_json() for v in effectivity_necessary(D)]}
    if res.member:
        obj["combination"] = [{"generator": gens[j].to_json(), "weight": _frac(w)}
                              for j, w in sorted(res.weights.items()) if w]
    else:
        obj["separating_functional"] = [_frac(y) for y in res.certificate]
    lines = [f"{D.pretty()}: {'effective' if member else 'not effective'}"]
    if res.member:
        lines += [f"  {_frac(w)} * ({gens[j].pretty()})" for j, w in sorted(res.weights.items()) if w]
    viol = obj["violations"]
    for v in viol[:10]:
        lines.append(f"  violates family {v['family']} at {v['indices']} by {v['excess']}")
    if len(viol) > 10:
        lines.append(f"  ... {len(viol) - 10} more violated inequalities (see --format json)")
    return obj, "\n".join(lines)


def cmd_chow(a):
    D, F = _divisor(a.d1), _divisor(a.d2)
    _require(D.n, D.s, {(4, 8)}, "chow intersect")
    Z = intersect_strict_transforms(D, F)
    obj = {"d1": D.to_json(), "d2": F.to_json(), "class": Z.to_json()}
    lines = [Z.pretty()]
    try:
        dec = decompose_two_cycle(Z, D, F)
        obj["decomposition"] = [{"surface": S.name, "coefficient": c} for S, c in dec.components]
        obj["unique"] = dec.unique
        lines.append("= " + " + ".join(S.name if c == 1 else f"{c}*{S.name}"
                                       for S, c in dec.components) if dec.components else "= 0")
    except NoDecompositionError as exc:
        obj["decomposition"] = None
        lines.append(f"no decomposition: {exc}")
    return obj, "\n".join(lines)


def cmd_wdim(a):
    D = _divisor(a.divisor)
    _require(D.n, D.s, MORI_DREAM, "wdim")
    a.catalog(D.n, D.s)
    bd = wdim(D)
    obj = bd.to_json() if a.breakdown else {"divisor": D.to_json(), "wdim": bd.total}
    lines = [str(bd.total)]
    if a.breakdown:
        lines = [f"chi = {bd.chi}"]
        for A, r, k, t in bd.contributions:
            lines.append(f"  {getattr(A, 'name', None) or A.pretty():<40} dim {r} k={k} {t:+d}")
        lines.append(f"wdim = {bd.total}")
    return obj, "\n".join(lines)


def cmd_h0(a):
    D = _divisor(a.divisor)
    _require(D.n, D.s, {(3, 7)}, "h0")
    a.catalog(3, 7)
    if not effective_cone_membership(D):
        return {"divisor": D.to_json(), "h0": 0, "effective": False}, "0"
    path = h0_p3_proof_path(D)
    if path.wdim_original != path.wdim_reduced:
        print("warning: wdim changed along the reduction", file=sys.stderr)
    obj = {"divisor": D.to_json(), "h0": path.wdim_original, "effective": True,
           "reduced": path.reduced.to_json(), "steps": [list(I) for I in path.steps],
           "wdim_reduced": path.wdim_reduced}
    return obj, str(path.wdim_original)


def cmd_conjecture(a):
    D = _divisor(a.divisor)
    _require(D.n, D.s, {(4, 8)}, "conjecture")
    a.catalog(4, 8)
    rep = check_conjecture(D, _ints(a.primes), _ints(a.seed))
    verdict = "agree" if rep.agree else "DISAGREE"
    return rep.to_json(), f"wdim={rep.wdim} oracle={rep.oracle.value} {verdict}"


def cmd_oracle(a):
    _require(a.n, max(0, len(_ints(a.mults))), None, "oracle")
    res = oracle_h0(a.n, a.d, _ints(a.mults), _ints(a.prime), _ints(a.seed))
    obj = {"n": a.n, "d": a.d, "mults": list(_ints(a.mults)), "h0": res.value, "agree": res.agree,
           "runs": [{"prime": p, "seed": s, "h0": v} for (p, s), v in res.runs.items()]}
    text = str(res.value) + ("" if res.agree else "  (runs disagree; minimum reported)")
    return obj, text


def cmd_verify(a):
    results = run_all()
    obj = {"ok": all(r.ok for r in results), "checks": [r.to_json() for r in results]}
    return obj, "\n".join(r.line() for r in results)


COMMANDS = {
    "orbit": cmd_orbit, "curves": cmd_curves, "surfaces": cmd_surfaces, "pairing": cmd_pairing,
    "cremona": cmd_cremona, "reduce": cmd_reduce, "baselocus": cmd_baselocus,
    "effective": cmd_effective, "chow": cmd_chow, "wdim": cmd_wdim, "h0": cmd_h0,
    "conjecture": cmd_conjecture, "oracle": cmd_oracle, "verify": cmd_verify,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="table")
    common.add_argument("--cache-dir", type=Path, default=None,
                        help=f"catalog cache directory (default ${cache.ENV_VAR} or ~/.cache/weylcycles)")
    common.add_argument("--no-cache", action="store_true", help="do not read or write the catalog cache")

    p = _Parser(prog="weylcycles", description="Weyl cycles on blow-ups of P^3 and P^4.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_):
        return sub.add_parser(name, help=help_, parents=[common])

    for name, help_ in (("orbit", "Weyl divisor orbit"), ("curves", "Weyl curve orbit"),
                        ("surfaces", "Weyl surfaces of X^4_8")):
        q = add(name, help_)
        q.add_argument("--n", type=int, default=4)
        q.add_argument("--s", type=int, default=8)
        if name == "orbit":
            q.add_argument("--list", action="store_true", help="list every class in table output")
    q = add("pairing", "Dolgachev-Mukai pairing or divisor.curve")
    q.add_argument("--d1", required=True)
    q.add_argument("--d2", required=True)
    q = add("cremona", "apply a standard Cremona map")
    q.add_argument("--class", dest="cls", required=True)
    q.add_argument("--set", required=True, help="n+1 indices, e.g. 1,2,3,4,5")
    for name, help_ in (("reduce", "Cremona-reduce a divisor"),
                        ("baselocus", "Weyl cycles in the base locus"),
                        ("effective", "exact effective-cone test"),
                        ("h0", "h^0 on X^3_7")):
        add(name, help_).add_argument("--divisor", required=True)
    q = add("chow", "intersection of strict transforms on the blow-up of X^4_8 along lines and quartics")
    q.add_argument("action", choices=("intersect",))
    q.add_argument("--d1", required=True)
    q.add_argument("--d2", required=True)
    q = add("wdim", "Weyl expected dimension")
    q.add_argument("--divisor", required=True)
    q.add_argument("--breakdown", action="store_true")
    q = add("conjecture", "compare wdim with the interpolation oracle on X^4_8")
    q.add_argument("--divisor", required=True)
    q.add_argument("--primes", default=",".join(map(str, DEFAULT_PRIMES)))
    q.add_argument("--seed", default=",".join(map(str, DEFAULT_SEEDS)))
    q = add("oracle", "h^0 by fat-point interpolation over F_p")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--mults", required=True)
    q.add_argument("--prime", default=",".join(map(str, DEFAULT_PRIMES)))
    q.add_argument("--seed", default=",".join(map(str, DEFAULT_SEEDS)))
    add("verify", "run the reproduction checks")
    return p


def _catalog_loader(args):
    def load(n: int, s: int):
        if args.no_cache or (n, s) not in MORI_DREAM:
            return weyl.weyl_divisor_orbit(n, s)
        return cache.load_divisor_catalog(n, s, args.cache_dir)
    return load


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        args = build_parser().parse_args(argv)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    args.catalog = _catalog_loader(args)
    try:
        obj, text = COMMANDS[args.command](args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OrbitUnboundedError, NoDecompositionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except WeylError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print(text)
    if args.command == "verify" and not obj["ok"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
