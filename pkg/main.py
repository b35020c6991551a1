#!/usr/bin/env python3
"""
Hamrank - Main Entry Point

Rank, distance-sum bounds and metric density of subsets of the Hamming space E_q^n.

Usage:
    python main.py [--output table|json] [-v] <command> [args...]

Commands:
    - rank, bounds, isometric: per-set analyses of a point-set file
    - min-embed, dense-check: exact minimum-rank search
    - gen-subspace, uniform-check, faces, survey: subspaces and experiments
"""
import sys

if __name__ == "__main__":
    try:
        from ui.cli import run

        sys.exit(run())

    except KeyboardInterrupt:
        print("\nInterrupted by user", file=sys.stderr)
        sys.exit(130)
