"""Command-line interface: homology tables, movie maps, and verifications.

Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from .complexes import hom_complex
from .frobenius import EQUIVARIANT, PLAIN
from .homology import homology_of
from .khovanov import (compare_movies, complex_of, homology, movie_class,
                       verify_movie_move)
from .movies import CATALOG_IDS, WordError, parse, parse_movie

_RINGS = {"z": PLAIN, "equivariant": EQUIVARIANT}


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as ex:
        raise InputError(f"cannot read {path}: {ex}") from ex


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode()).hexdigest()[:12]


def _group_rows(group) -> list:
    return [{"bidegree": [t, q], "free_rank": rank, "torsion": list(torsion)}
            for (t, q), (rank, torsion) in group.items()]


def _class_row(coords) -> dict:
    return {"bidegree": list(coords.bidegree) if coords.bidegree else None,
            "free": list(coords.free), "torsion": list(coords.torsion),
            "is_generator": coords.is_generator, "is_cycle": coords.is_cycle}


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2))
        return
    print(f"command\t{report['command']}")
    print(f"ring\t{report['ring']}")
    for d in report["inputs"]:
        print(f"input\t{d}")
    for line in report["text"]:
        print(line)
    print(f"seconds\t{report['seconds']:.3f}")


def _table_lines(rows) -> list:
    out = ["t\tq\tfree_rank\ttorsion"]
    for r in rows:
        tor = ",".join(str(d) for d in r["torsion"]) or "-"
        out.append(f"{r['bidegree'][0]}\t{r['bidegree'][1]}\t{r['free_rank']}\t{tor}")
    return out


def cmd_homology(args) -> int:
    text = _read(args.file)
    spec = _RINGS[args.ring]
    t0 = time.time()
    word = parse(text)
    report = {"command": "homology", "ring": args.ring,
              "inputs": [_digest(text)]}
    if args.ring == "equivariant":
        c = complex_of(word, spec)
        gens = [{"bidegree": [o.tdeg, o.qshift]} for o in c.objects]
        diff = [{"from": si, "to": ti, "entry": str(v)}
                for (ti, si), v in sorted(c.diff.items()) if v]
        report["results"] = {"generators": gens, "differential": diff}
        lines = ["index\tt\tq"]
        lines += [f"{i}\t{g['bidegree'][0]}\t{g['bidegree'][1]}"
                  for i, g in enumerate(gens)]
        lines.append("differential")
        lines += [f"{d['from']}\t->\t{d['to']}\t{d['entry']}" for d in diff] or ["(zero)"]
        report["text"] = lines
    else:
        group = homology(word, spec)
        rows = _group_rows(group)
        report["results"] = rows
        report["text"] = _table_lines(rows)
        if args.figure:
            from .plots import plot_bigraded
            plot_bigraded(group, args.figure, title="homology")
            report["figure"] = args.figure
            report["text"].append(f"figure\t{args.figure}")
    report["seconds"] = time.time() - t0
    _emit(report, args.format)
    return 0


def cmd_map(args) -> int:
    text = _read(args.file)
    spec = _RINGS[args.ring]
    t0 = time.time()
    movie = parse_movie(text)
    _, coords, _ = movie_class(movie, spec)
    row = _class_row(coords)
    report = {"command": "map", "ring": args.ring, "inputs": [_digest(text)],
              "results": row, "seconds": time.time() - t0}
    bid = row["bidegree"]
    report["text"] = [
        "bidegree\t" + (f"{bid[0]}\t{bid[1]}" if bid else "-"),
        "free\t" + (",".join(str(x) for x in row["free"]) or "-"),
        "torsion\t" + (",".join(str(x) for x in row["torsion"]) or "-"),
        f"is_generator\t{row['is_generator']}",
        f"is_cycle\t{row['is_cycle']}",
    ]
    report["seconds"] = time.time() - t0
    _emit(report, args.format)
    return 0


def cmd_verify(args) -> int:
    spec = _RINGS[args.ring]
    t0 = time.time()
    if args.right is None:
        move_id = args.left
        if move_id not in CATALOG_IDS:
            raise InputError(f"unknown move id {move_id!r}; "
                             f"known: {', '.join(CATALOG_IDS)}")
        reports = verify_movie_move(move_id, spec=spec)
        rows = [{"variant": r.variant, "verdict": r.verdict,
                 "bidegree": list(r.star), "node": r.node_kind,
                 "left_class": _class_row(r.left_class),
                 "right_class": _class_row(r.right_class)}
                for r in reports]
        ok = all(r["verdict"] in ("plus", "minus") for r in rows)
        inputs = [move_id]
        lines = ["variant\tverdict\tnode\tstar"]
        lines += [f"{r['variant']}\t{r['verdict']}\t{r['node']}\t"
                  f"({r['bidegree'][0]},{r['bidegree'][1]})" for r in rows]
    else:
        tl, tr = _read(args.left), _read(args.right)
        verdict, coords, _ = compare_movies(parse_movie(tl), parse_movie(tr), spec)
        rows = [{"variant": None, "verdict": verdict.verdict,
                 "class": _class_row(coords)}]
        ok = verdict.verdict in ("plus", "minus")
        inputs = [_digest(tl), _digest(tr)]
        lines = ["verdict\t" + verdict.verdict]
    report = {"command": "verify", "ring": args.ring, "inputs": inputs,
              "results": rows, "text": lines, "seconds": time.time() - t0}
    _emit(report, args.format)
    return 0 if ok else 1


def cmd_hom(args) -> int:
    tl, tr = _read(args.left), _read(args.right)
    spec = _RINGS[args.ring]
    if args.ring != "z":
        raise InputError("hom homology is implemented over Z only")
    t0 = time.time()
    cs = complex_of(parse(tl), spec)
    ct = complex_of(parse(tr), spec)
    group = homology_of(hom_complex(cs, ct).complex)
    rows = _group_rows(group)
    report = {"command": "hom", "ring": args.ring,
              "inputs": [_digest(tl), _digest(tr)], "results": rows,
              "text": _table_lines(rows)}
    if args.figure:
        from .plots import plot_bigraded
        plot_bigraded(group, args.figure, title="hom-complex homology")
        report["figure"] = args.figure
        report["text"].append(f"figure\t{args.figure}")
    report["seconds"] = time.time() - t0
    _emit(report, args.format)
    return 0


def _common(sub):
    sub.add_argument("--ring", choices=sorted(_RINGS), default="z")
    sub.add_argument("--format", choices=("text", "json"), default="text")


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="kh",
                                 description="Khovanov homology of diagrams "
                                             "and maps of movies")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("homology", help="bigraded homology of a diagram file")
    p.add_argument("file")
    p.add_argument("--figure", help="render the table to this image file")
    _common(p)
    p.set_defaults(fn=cmd_homology)

    p = sub.add_parser("map", help="induced map of a movie file")
    p.add_argument("file")
    _common(p)
    p.set_defaults(fn=cmd_map)

    p = sub.add_parser("verify", help="verify a movie move id or two movie files")
    p.add_argument("left")
    p.add_argument("right", nargs="?")
    _common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("hom", help="Hom-complex homology of two diagram files")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--figure", help="render the table to this image file")
    _common(p)
    p.set_defaults(fn=cmd_hom)

    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (InputError, WordError, ValueError, KeyError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
