#!/usr/bin/env python3
"""Render an HTML gallery of every interval pipe dream for one ground set.

Each comparable pair u <= v in Bruhat order contributes one SVG grid,
captioned with the interval, the elbow count, and the boundary decorated
permutation.  Output is a single self-contained index.html.

Usage:
    python3 scripts/render_gallery.py --n 3 --out build/gallery3.html
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass
from html import escape
from pathlib import Path

from flagpipes.decperm import decperm_of
from flagpipes.perm import all_permutations, bruhat_leq, length
from flagpipes.pipedream import construct_fpp, elbow_count
from flagpipes.render import svg_grid, unicode_decperm


@dataclass(frozen=True)
class Config:
    n: int = 3
    out: Path = Path("gallery.html")
    cell: int = 28


def parse_args(argv=None) -> Config:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, default=Config.n)
    parser.add_argument("--out", type=Path, default=Config.out)
    parser.add_argument("--cell", type=int, default=Config.cell,
                        help="cell size in pixels")
    args = parser.parse_args(argv)
    return Config(n=args.n, out=args.out, cell=args.cell)


def one_line(w: tuple[int, ...]) -> str:
    sep = "," if len(w) > 9 else ""
    return sep.join(str(x) for x in w)


def main(cfg: Config) -> int:
    perms = list(all_permutations(cfg.n))
    cards = []
    for u in perms:
        for v in perms:
            if not bruhat_leq(u, v):
                continue
            D = construct_fpp(u, v)
            caption = (f"[{one_line(u)}, {one_line(v)}], "
                       f"{elbow_count(D)} elbows, "
                       f"{unicode_decperm(decperm_of(D))}")
            cards.append((length(v) - length(u), u, v,
                          svg_grid(D, cell=cfg.cell), caption))
    cards.sort()
    body = "\n".join(
        f'<figure>{svg}<figcaption>{escape(caption)}</figcaption></figure>'
        for _, _, _, svg, caption in cards)
    html = (
        "<!doctype html><meta charset='utf-8'>"
        f"<title>interval dreams on [{cfg.n}]</title>"
        "<style>body{font-family:sans-serif}figure{display:inline-block;"
        "margin:8px;text-align:center}figcaption{font-size:12px}</style>"
        f"<h1>{len(cards)} interval dreams on [{cfg.n}]</h1>\n" + body + "\n")
    cfg.out.parent.mkdir(parents=True, exist_ok=True)
    cfg.out.write_text(html)
    print(f"wrote {len(cards)} grids to {cfg.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main(parse_args()))
