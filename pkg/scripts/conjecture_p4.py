"""Evidence for wdim = h^0 on X^4_8: Weyl divisor types plus a seeded random sample."""

import argparse
import dataclasses
import json

from weylcycles.experiments import SampleConfig, conjecture_sample, weyl_type_representatives


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=SampleConfig.count)
    ap.add_argument("--d-max", type=int, default=SampleConfig.d_max)
    ap.add_argument("--seed", type=int, default=SampleConfig.seed)
    ap.add_argument("--skip-types", action="store_true", help="skip the 15 Weyl divisor types")
    ap.add_argument("--out")
    args = ap.parse_args()

    out = {}
    if not args.skip_types:
        types = weyl_type_representatives()
        print("Weyl divisor types:", types.summary())
        out["types"] = [{"divisor": r.divisor.to_json(), "wdim": r.wdim, "h0": r.oracle} for r in types.rows]
    cfg = SampleConfig(count=args.count, d_max=args.d_max, seed=args.seed)
    rep = conjecture_sample(cfg)
    print("random sample:", rep.summary())
    for r in rep.mismatches:
        print(f"  MISMATCH {r.divisor.pretty()}: wdim={r.wdim} h0={r.oracle}")
    out["config"] = dataclasses.asdict(cfg)
    out["sample"] = [{"divisor": r.divisor.to_json(), "wdim": r.wdim, "h0": r.oracle,
                      "runs_agree": r.runs_agree} for r in rep.rows]
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(out, fh, indent=1)


if __name__ == "__main__":
    main()
