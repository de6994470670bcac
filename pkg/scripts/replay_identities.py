"""Replay every identity check and print the report.

    python scripts/replay_identities.py [--json] [--seed N] [--instances N] [--form FORM]
"""

import argparse
import sys

from supercontact.checks import VerifyConfig, verify_paper


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--json", action="store_true")
    parser.add_argument("--seed", type=int, default=VerifyConfig.seed)
    parser.add_argument("--instances", type=int, default=VerifyConfig.instances)
    parser.add_argument("--form", default=None, help="replace the N=2 contact form")
    args = parser.parse_args()
    report = verify_paper(VerifyConfig(seed=args.seed, instances=args.instances, form=args.form))
    print(report.to_json() if args.json else report.to_text())
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
