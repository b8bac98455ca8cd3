#!/usr/bin/env python3
"""List all critically primitive complete critical portraits of a degree.

Example:
    python scripts/enumerate_critical_portraits.py --degree 2
"""

import argparse
import json

from portraitdyn.cli import portrait_json
from portraitdyn.portraits import enumerate_primitive_critical_portraits


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--degree", type=int, default=2, choices=(2, 3))
    args = parser.parse_args()
    classes = enumerate_primitive_critical_portraits(args.degree)
    print(json.dumps({
        "degree": args.degree,
        "count": len(classes),
        "classes": [portrait_json(p) for p in classes],
    }, indent=2))


if __name__ == "__main__":
    main()
