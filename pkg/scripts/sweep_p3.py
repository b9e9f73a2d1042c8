"""Compare wdim with brute-force h^0 on every effective class of a grid on X^3_7."""

import argparse
import dataclasses
import json

from weylcycles.experiments import SweepConfig, sweep_p3


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d-max", type=int, default=SweepConfig.d_max)
    ap.add_argument("--m-max", type=int, default=SweepConfig.m_max)
    ap.add_argument("--out", help="write per-divisor rows as JSON here")
    args = ap.parse_args()

    cfg = SweepConfig(d_max=args.d_max, m_max=args.m_max)
    rep = sweep_p3(cfg)
    print(rep.summary())
    for r in rep.mismatches:
        print(f"  MISMATCH {r.divisor.pretty()}: wdim={r.wdim} h0={r.oracle}")
    if args.out:
        rows = [{"d": r.divisor.d, "m": list(r.divisor.m), "wdim": r.wdim, "h0": r.oracle,
                 "runs_agree": r.runs_agree} for r in rep.rows]
        with open(args.out, "w") as fh:
            json.dump({"config": dataclasses.asdict(cfg), "rows": rows}, fh, indent=1)
    return 0 if not rep.mismatches else 1


if __name__ == "__main__":
    raise SystemExit(main())
