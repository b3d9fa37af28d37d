#!/usr/bin/env python3
"""Run every verification suite and print one line per check.

    python scripts/run_all_checks.py [--seed 0] [--cases 10000] [--json out.json]
"""

import argparse
import json
import sys
from dataclasses import asdict, dataclass

from synprop import checks


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    cases: int = 10_000
    json_path: str | None = None


def run(cfg: RunConfig) -> int:
    reports = [
        checks.suite_theorem_a(),
        checks.suite_theorem_c(),
        checks.suite_scfa(),
        checks.suite_triangle(),
        checks.suite_counts(),
        checks.suite_logic(seed=cfg.seed),
        checks.suite_prop_laws(random_cases=cfg.cases, seed=cfg.seed),
        checks.suite_functoriality(random_cases=cfg.cases, seed=cfg.seed),
    ]
    for report in reports:
        for line in report.lines():
            print(line)
        print(f"-- {report.suite}: {'ok' if report.passed else 'FAILED'} in {report.seconds:.2f}s\n")
    if cfg.json_path:
        with open(cfg.json_path, "w") as fh:
            json.dump({"config": asdict(cfg), "reports": [r.to_json() for r in reports]}, fh, indent=2)
    return max(r.exit_status for r in reports)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--cases", type=int, default=10_000)
    parser.add_argument("--json", dest="json_path")
    return run(RunConfig(**vars(parser.parse_args())))


if __name__ == "__main__":
    sys.exit(main())
