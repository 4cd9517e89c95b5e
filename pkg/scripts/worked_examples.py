#!/usr/bin/env python3
"""Classify a few instructive configurations and print their reports.

Covers a fully generic collinear triple (six components, bijective
multidegree partition), a degenerate adjacent pair (a component carrying
two multidegrees), and the local model chains.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from mustafin import configuration, local_model_chain
from mustafin.cli import classification_report, render_classification_table


def show(title, config):
    echo = {"d": config.d, "points": [list(p.coords) for p in config.points]}
    print(f"== {title} ==")
    print(render_classification_table(classification_report(config, echo)))
    print()


def main():
    show(
        "collinear triple (generic)",
        configuration(3, [(0, -1, -2), (0, -2, -4), (0, -3, -6)]),
    )
    show("unit-step pair (degenerate)", configuration(3, [(0, 0, 0), (0, 1, 1)]))
    for d in (3, 4):
        show(f"local model chain d={d}", local_model_chain(d))


if __name__ == "__main__":
    main()
