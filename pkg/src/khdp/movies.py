"""Bookmark-coded diagrams and movies.

A diagram is a word of tokens read top to bottom.  Each token is one of
CAP (a new minimum), CUP (a maximum), X (positive-slope strand crosses over)
or XBAR (negative-slope strand over), labeled with the counts (l, r) of
strands passing to its left and right, plus orientation decorations naming
the corners where strand arrows emerge (NE, SE, SW, NW).

Width bookkeeping top to bottom: CAP needs l + r = width and adds 2; CUP
needs l + r + 2 = width and removes 2; crossings need l + r + 2 = width.
Closed diagrams run from width 0 to width 0.  Words may also describe open
tangles: a `top:` count and an `orient:` direction list (U/D per strand)
precede the tokens, defaulting to a closed top.

A movie is an initial word plus an event list; events rewrite the word
locally (Morse events, Reidemeister moves, node = crossing flip, exchanges).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

CORNERS = ("NE", "SE", "SW", "NW")  # clockwise from NE


class WordError(ValueError):
    pass


class MovieError(ValueError):
    pass


@dataclass(frozen=True)
class Token:
    kind: str  # CAP | CUP | X | XBAR
    l: int
    r: int
    decs: tuple = ()

    def __str__(self):
        inner = f"{self.l},{self.r}"
        if self.decs:
            inner += ";" + ",".join(self.decs)
        return f"{self.kind}({inner})"


@dataclass(frozen=True)
class BookmarkWord:
    top: int = 0
    orient: tuple = ()
    tokens: tuple = ()

    def __str__(self):
        return serialize_word(self)


@dataclass(frozen=True)
class MovieEvent:
    kind: str
    index: int
    args: tuple = ()  # sorted (key, value) pairs

    @staticmethod
    def make(__kind, __index, **kwargs):
        return MovieEvent(__kind, __index, tuple(sorted(kwargs.items())))

    def arg(self, key, default=None):
        for k, v in self.args:
            if k == key:
                return v
        return default

    def __str__(self):
        extra = "".join(f" {k}={v}" for k, v in self.args)
        return f"{self.kind} @ {self.index}{extra}"


@dataclass(frozen=True)
class Movie:
    initial: BookmarkWord
    events: tuple = ()

    def __str__(self):
        return serialize_movie(self)


# ---------------------------------------------------------------------------
# scanning: width, direction and sign bookkeeping


@dataclass
class ScanResult:
    widths: list  # width before each token (len = tokens + 1)
    dirs: list  # direction tuple before each token (len = tokens + 1)
    signs: dict  # crossing token index -> +1 / -1
    final_width: int = field(init=False)

    def __post_init__(self):
        self.final_width = self.widths[-1]


def _cross_dirs(tok: Token):
    """(direction of the NW-SE strand, direction of the SW-NE strand)."""
    decs = set(tok.decs)
    back = decs & {"NW", "SE"}
    slash = decs & {"NE", "SW"}
    if len(tok.decs) != 2 or len(back) != 1 or len(slash) != 1:
        raise WordError(f"crossing needs one of NW/SE and one of NE/SW, got {tok}")
    return ("U" if back == {"NW"} else "D", "U" if slash == {"NE"} else "D")


def scan(word: BookmarkWord) -> ScanResult:
    """Validate width and orientation bookkeeping; compute crossing signs."""
    if len(word.orient) != word.top:
        raise WordError(f"top count {word.top} does not match orientation list")
    dirs = list(word.orient)
    for d in dirs:
        if d not in ("U", "D"):
            raise WordError(f"bad direction {d!r}")
    w = word.top
    res = ScanResult([w], [tuple(dirs)], {})
    for idx, tok in enumerate(word.tokens):
        if tok.kind == "CAP":
            if tok.l + tok.r != w or tok.l < 0 or tok.r < 0:
                raise WordError(f"width violation at token {idx}: {tok} at width {w}")
            if tok.decs not in (("SW",), ("SE",)):
                raise WordError(f"CAP needs decoration SW or SE at token {idx}")
            pair = ("D", "U") if tok.decs == ("SW",) else ("U", "D")
            dirs[tok.l:tok.l] = pair
            w += 2
        elif tok.kind == "CUP":
            if tok.l + tok.r + 2 != w or tok.l < 0 or tok.r < 0:
                raise WordError(f"width violation at token {idx}: {tok} at width {w}")
            pair = (dirs[tok.l], dirs[tok.l + 1])
            want = ("NW",) if pair == ("U", "D") else ("NE",) if pair == ("D", "U") else None
            if want is None:
                raise WordError(f"orientation inconsistency at token {idx}: "
                                f"CUP closes parallel strands {pair}")
            if tok.decs != want:
                raise WordError(f"orientation inconsistency at token {idx}: "
                                f"expected {want[0]}, got {tok}")
            del dirs[tok.l:tok.l + 2]
            w -= 2
        elif tok.kind in ("X", "XBAR"):
            if tok.l + tok.r + 2 != w or tok.l < 0 or tok.r < 0:
                raise WordError(f"width violation at token {idx}: {tok} at width {w}")
            back, slash = _cross_dirs(tok)
            if dirs[tok.l] != back or dirs[tok.l + 1] != slash:
                raise WordError(f"orientation inconsistency at token {idx}: "
                                f"{tok} against strands {dirs[tok.l:tok.l+2]}")
            same = back == slash
            res.signs[idx] = (1 if same else -1) if tok.kind == "X" else (-1 if same else 1)
            dirs[tok.l], dirs[tok.l + 1] = slash, back
        else:
            raise WordError(f"unknown symbol {tok.kind!r} at token {idx}")
        res.widths.append(w)
        res.dirs.append(tuple(dirs))
    res.final_width = w
    return res


def make_word(top, orient, skeleton) -> BookmarkWord:
    """Build a word from (kind, l[, cap decoration]) items, deriving the
    rest of the decorations and the r labels from the running scan state."""
    dirs = list(orient)
    w = top
    tokens = []
    for item in skeleton:
        kind, l = item[0], item[1]
        if l < 0 or (kind == "CAP" and l > w) or (kind != "CAP" and l > w - 2):
            raise WordError(f"width violation: {kind} at column {l}, width {w}")
        if kind == "CAP":
            dec = item[2]
            pair = ("D", "U") if dec == "SW" else ("U", "D")
            tokens.append(Token("CAP", l, w - l, (dec,)))
            dirs[l:l] = pair
            w += 2
        elif kind == "CUP":
            pair = (dirs[l], dirs[l + 1])
            if pair == ("U", "D"):
                dec = "NW"
            elif pair == ("D", "U"):
                dec = "NE"
            else:
                raise WordError(f"cannot close parallel strands {pair} at {l}")
            tokens.append(Token("CUP", l, w - l - 2, (dec,)))
            del dirs[l:l + 2]
            w -= 2
        else:
            back, slash = dirs[l], dirs[l + 1]
            decs = tuple(d for d in CORNERS
                         if d in {"NW" if back == "U" else "SE",
                                  "NE" if slash == "U" else "SW"})
            tokens.append(Token(kind, l, w - l - 2, decs))
            dirs[l], dirs[l + 1] = slash, back
    word = BookmarkWord(top, tuple(orient), tuple(tokens))
    scan(word)
    return word


def _skeleton(word: BookmarkWord):
    s = scan(word)
    out = []
    for tok in word.tokens:
        if tok.kind == "CAP":
            out.append(("CAP", tok.l, tok.decs[0]))
        else:
            out.append((tok.kind, tok.l))
    return out, s


def is_closed(word: BookmarkWord) -> bool:
    return word.top == 0 and scan(word).final_width == 0


# ---------------------------------------------------------------------------
# parsing and serialization

_TOKEN_RE = re.compile(
    r"(CAP|CUP|XBAR|X)\(\s*(-?\d+)\s*,\s*(-?\d+)\s*(?:;\s*([A-Z,\s]+?)\s*)?\)$")


def _parse_tokens(fields):
    tokens = []
    for f in fields:
        m = _TOKEN_RE.match(f)
        if not m:
            raise WordError(f"unknown symbol or malformed token {f!r}")
        kind, l, r, decs = m.group(1), int(m.group(2)), int(m.group(3)), m.group(4)
        dlist = tuple(d.strip() for d in decs.split(",")) if decs else ()
        for d in dlist:
            if d not in CORNERS:
                raise WordError(f"unknown orientation decoration {d!r} in {f!r}")
        tokens.append(Token(kind, l, r, dlist))
    return tuple(tokens)


def parse(text: str) -> BookmarkWord:
    """Parse a diagram: optional `top:`/`orient:` header lines, then tokens."""
    top = 0
    orient = ()
    token_fields = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("top:"):
            top = int(line[4:].strip())
        elif line.startswith("orient:"):
            orient = tuple(line[7:].split())
        else:
            token_fields.extend(line.split())
    word = BookmarkWord(top, orient, _parse_tokens(token_fields))
    scan(word)
    return word


def serialize_word(word: BookmarkWord) -> str:
    lines = []
    if word.top:
        lines.append(f"top: {word.top}")
        lines.append("orient: " + " ".join(word.orient))
    lines.append(" ".join(str(t) for t in word.tokens))
    return "\n".join(lines)


_EVENT_RE = re.compile(r"^(\w+)\s*@\s*(\d+)\s*(.*)$")


def parse_event(line: str) -> MovieEvent:
    m = _EVENT_RE.match(line.strip())
    if not m:
        raise MovieError(f"malformed event line {line!r}")
    kind, idx, rest = m.group(1), int(m.group(2)), m.group(3)
    kwargs = {}
    for part in rest.split():
        if "=" not in part:
            raise MovieError(f"malformed event argument {part!r}")
        k, v = part.split("=", 1)
        kwargs[k] = int(v) if re.fullmatch(r"-?\d+", v) else v
    return MovieEvent.make(kind, idx, **kwargs)


def parse_movie(text: str) -> Movie:
    """Movie files: `initial:` introduces the diagram, `events:` the events."""
    header, diagram, events = [], [], []
    mode = "header"
    for line in text.splitlines():
        stripped = line.split("#", 1)[0].strip()
        if not stripped:
            continue
        if stripped == "events:":
            mode = "events"
            continue
        if stripped.startswith("initial:"):
            mode = "initial"
            rest = stripped[8:].strip()
            if rest:
                diagram.append(rest)
            continue
        if mode == "header":
            header.append(stripped)
        elif mode == "initial":
            diagram.append(stripped)
        else:
            events.append(parse_event(stripped))
    word = parse("\n".join(header + diagram))
    return Movie(word, tuple(events))


def serialize_movie(m: Movie) -> str:
    lines = []
    if m.initial.top:
        lines.append(f"top: {m.initial.top}")
        lines.append("orient: " + " ".join(m.initial.orient))
    lines.append("initial: " + " ".join(str(t) for t in m.initial.tokens))
    lines.append("events:")
    lines.extend(str(e) for e in m.events)
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# event rewrites

_TOP_SPAN = {"CAP": 0, "CUP": 2, "X": 2, "XBAR": 2}
_BOT_SPAN = {"CAP": 2, "CUP": 0, "X": 2, "XBAR": 2}


def _rebuild(word, skeleton_items):
    return make_word(word.top, word.orient, skeleton_items)


def apply_event(word: BookmarkWord, e: MovieEvent) -> BookmarkWord:
    """Apply one event; raises MovieError when inapplicable."""
    skel, s = _skeleton(word)
    i = e.index
    n = len(skel)

    def width_at(idx):
        return s.widths[idx]

    def dirs_at(idx):
        return s.dirs[idx]

    if e.kind == "node":
        if not (0 <= i < n) or word.tokens[i].kind not in ("X", "XBAR"):
            raise MovieError(f"node event needs a crossing at token {i}")
        kind = "XBAR" if word.tokens[i].kind == "X" else "X"
        skel[i] = (kind, skel[i][1])
        return _rebuild(word, skel)

    if e.kind == "dot":
        l = e.arg("l")
        if not (0 <= i <= n) or l is None or not (0 <= l < width_at(i)):
            raise MovieError(f"dot event out of range at height {i}")
        return word  # the word itself is unchanged

    if e.kind == "birth":
        l, dec = e.arg("l", 0), e.arg("dir", "SW")
        if not (0 <= i <= n) or not (0 <= l <= width_at(i)):
            raise MovieError(f"birth out of range at height {i}")
        new = skel[:i] + [("CAP", l, dec), ("CUP", l)] + skel[i:]
        return _rebuild(word, new)

    if e.kind == "death":
        if not (0 <= i < n - 0) or i + 1 >= n:
            raise MovieError("death needs a cap/cup pair")
        a, b = word.tokens[i], word.tokens[i + 1]
        if a.kind != "CAP" or b.kind != "CUP" or a.l != b.l:
            raise MovieError(f"death event: tokens {i},{i+1} do not bound a circle")
        return _rebuild(word, skel[:i] + skel[i + 2:])

    if e.kind == "saddle":
        l = e.arg("l")
        if not (0 <= i <= n) or l is None or not (0 <= l + 1 < width_at(i)):
            raise MovieError(f"saddle out of range at height {i}")
        d = dirs_at(i)
        if d[l] == d[l + 1]:
            raise MovieError(f"saddle needs antiparallel strands at {l}, got {d[l:l+2]}")
        capdec = "SW" if (d[l], d[l + 1]) == ("D", "U") else "SE"
        new = skel[:i] + [("CUP", l), ("CAP", l, capdec)] + skel[i:]
        return _rebuild(word, new)

    if e.kind == "r1":
        l, kind = e.arg("l"), e.arg("kind", "X")
        if not (0 <= i <= n) or l is None or not (0 <= l < width_at(i)):
            raise MovieError(f"r1 out of range at height {i}")
        d = dirs_at(i)[l]
        capdec = "SW" if d == "D" else "SE"
        new = skel[:i] + [("CAP", l + 1, capdec), (kind, l), ("CUP", l + 1)] + skel[i:]
        return _rebuild(word, new)

    if e.kind == "r1inv":
        if i + 2 > n - 1:
            raise MovieError("r1inv needs three tokens")
        a, b, c = word.tokens[i:i + 3]
        if not (a.kind == "CAP" and b.kind in ("X", "XBAR") and c.kind == "CUP"
                and a.l == c.l == b.l + 1):
            raise MovieError(f"tokens {i}..{i+2} are not a kink")
        return _rebuild(word, skel[:i] + skel[i + 3:])

    if e.kind == "r2":
        l, first = e.arg("l"), e.arg("first", "X")
        if not (0 <= i <= n) or l is None or not (0 <= l + 1 < width_at(i)):
            raise MovieError(f"r2 out of range at height {i}")
        second = "XBAR" if first == "X" else "X"
        new = skel[:i] + [(first, l), (second, l)] + skel[i:]
        return _rebuild(word, new)

    if e.kind == "r2inv":
        if i + 1 > n - 1:
            raise MovieError("r2inv needs two tokens")
        a, b = word.tokens[i:i + 2]
        if not (a.kind in ("X", "XBAR") and b.kind in ("X", "XBAR")
                and a.kind != b.kind and a.l == b.l):
            raise MovieError(f"tokens {i},{i+1} are not a cancelling pair")
        return _rebuild(word, skel[:i] + skel[i + 2:])

    if e.kind == "r3":
        if i + 2 > n - 1:
            raise MovieError("r3 needs three tokens")
        a, b, c = word.tokens[i:i + 3]
        kinds = (a.kind, b.kind, c.kind)
        if not all(k in ("X", "XBAR") for k in kinds):
            raise MovieError(f"tokens {i}..{i+2} are not three crossings")
        if a.l == c.l and b.l in (a.l + 1, a.l - 1):
            newl = (b.l, a.l, b.l)
        else:
            raise MovieError(f"tokens {i}..{i+2} are not an r3 triangle")
        if a.kind == c.kind and b.kind != a.kind:
            raise MovieError("r3 inapplicable: middle crossing sign differs "
                             "from both outer crossings")
        new = skel[:i] + [(c.kind, newl[0]), (b.kind, newl[1]), (a.kind, newl[2])] + skel[i + 3:]
        return _rebuild(word, new)

    if e.kind in ("exchange", "psi"):
        if i + 1 > n - 1:
            raise MovieError("exchange needs two tokens")
        a, b = word.tokens[i], word.tokens[i + 1]
        bs_a = _BOT_SPAN[a.kind]
        ts_b = _TOP_SPAN[b.kind]
        da = _BOT_SPAN[a.kind] - _TOP_SPAN[a.kind]
        db = _BOT_SPAN[b.kind] - _TOP_SPAN[b.kind]
        if b.l + ts_b <= a.l:  # b entirely left of a
            new_a_l, new_b_l = a.l + db, b.l
        elif b.l >= a.l + bs_a:  # b entirely right of a
            new_a_l, new_b_l = a.l, b.l - da
        else:
            raise MovieError(f"tokens {i},{i+1} are not disjoint, cannot exchange")
        item_a = ("CAP", new_a_l, a.decs[0]) if a.kind == "CAP" else (a.kind, new_a_l)
        item_b = ("CAP", new_b_l, b.decs[0]) if b.kind == "CAP" else (b.kind, new_b_l)
        new = skel[:i] + [item_b, item_a] + skel[i + 2:]
        return _rebuild(word, new)

    raise MovieError(f"unknown event kind {e.kind!r}")


def stills(m: Movie):
    """All words of the movie, initial first.  Raises on the first bad event."""
    out = [m.initial]
    scan(m.initial)
    for e in m.events:
        out.append(apply_event(out[-1], e))
    return out


def validate_movie(m: Movie):
    """Replay the movie; check every still and the node/branch prohibition."""
    words = stills(m)
    for j, e in enumerate(m.events):
        if e.kind != "node":
            continue
        prev = m.events[j - 1] if j > 0 else None
        nxt = m.events[j + 1] if j + 1 < len(m.events) else None
        if prev is not None and prev.kind == "r1" and prev.index + 1 == e.index:
            raise MovieError(
                f"event {j}: node at a crossing just created by r1 (branch point)")
        if nxt is not None and nxt.kind == "r1inv" and nxt.index + 1 == e.index:
            raise MovieError(
                f"event {j}: node at a crossing removed by r1inv (branch point)")
    return words


# ---------------------------------------------------------------------------
# the movie-move fixture catalog


@dataclass
class MoveVariant:
    move_id: str
    name: str
    left: Movie
    right: Movie
    star: tuple  # expected interesting bidegree, or None
    node_kind: str  # 'A' | 'B' | None


def _node_kind_at(word: BookmarkWord, idx: int):
    sign = scan(word).signs[idx]
    # A sits at a positive crossing (C+ -> C-), B at a negative one
    return ("A", (-2, -6)) if sign > 0 else ("B", (2, 4))


def _mm16(d1, d2):
    init = make_word(2, (d1, d2), [])
    left = Movie(init, (MovieEvent.make("r2", 0, l=0, first="XBAR"),
                        MovieEvent.make("node", 0)))
    right = Movie(init, (MovieEvent.make("r2", 0, l=0, first="X"),
                         MovieEvent.make("node", 1)))
    mid = apply_event(init, left.events[0])
    kind, star = _node_kind_at(mid, 0)
    return MoveVariant("MM16", f"MM16[{d1}{d2}]", left, right, star, kind)


def _mm17(d1, d2, d3):
    init = make_word(3, (d1, d2, d3), [("XBAR", 0), ("X", 1), ("X", 0)])
    left = Movie(init, (MovieEvent.make("node", 0), MovieEvent.make("r3", 0)))
    right = Movie(init, (MovieEvent.make("r3", 0), MovieEvent.make("node", 2)))
    kind, star = _node_kind_at(init, 0)
    return MoveVariant("MM17", f"MM17[{d1}{d2}{d3}]", init and left, right, star, kind)


def _mm18(d1, d2, capdec):
    init = make_word(2, (d1, d2), [("CAP", 2, capdec), ("X", 0)])
    left = Movie(init, (MovieEvent.make("node", 1), MovieEvent.make("exchange", 0)))
    right = Movie(init, (MovieEvent.make("exchange", 0), MovieEvent.make("node", 0)))
    kind, star = _node_kind_at(init, 1)
    return MoveVariant("MM18", f"MM18[{d1}{d2};{capdec}]", left, right, star, kind)


def _mm19(orient):
    init = make_word(4, orient, [("X", 0), ("X", 2)])
    left = Movie(init, (MovieEvent.make("node", 0), MovieEvent.make("exchange", 0)))
    right = Movie(init, (MovieEvent.make("exchange", 0), MovieEvent.make("node", 1)))
    kind, star = _node_kind_at(init, 0)
    return MoveVariant("MM19", f"MM19[{''.join(orient)}]", left, right, star, kind)


def _comm_saddle(orient):
    init = make_word(4, orient, [("X", 0)])
    left = Movie(init, (MovieEvent.make("node", 0), MovieEvent.make("saddle", 1, l=2)))
    right = Movie(init, (MovieEvent.make("saddle", 1, l=2), MovieEvent.make("node", 0)))
    kind, star = _node_kind_at(init, 0)
    return MoveVariant("COMM", f"COMM-saddle[{''.join(orient)}]", left, right, star, kind)


def _comm_birth(d1, d2):
    init = make_word(2, (d1, d2), [("X", 0)])
    left = Movie(init, (MovieEvent.make("node", 0), MovieEvent.make("birth", 1, l=2, dir="SW")))
    right = Movie(init, (MovieEvent.make("birth", 1, l=2, dir="SW"), MovieEvent.make("node", 0)))
    kind, star = _node_kind_at(init, 0)
    return MoveVariant("COMM", f"COMM-birth[{d1}{d2}]", left, right, star, kind)


def _comm_death(d1, d2):
    init = make_word(2, (d1, d2), [("X", 0), ("CAP", 2, "SW"), ("CUP", 2)])
    left = Movie(init, (MovieEvent.make("node", 0), MovieEvent.make("death", 1)))
    right = Movie(init, (MovieEvent.make("death", 1), MovieEvent.make("node", 0)))
    kind, star = _node_kind_at(init, 0)
    return MoveVariant("COMM", f"COMM-death[{d1}{d2}]", left, right, star, kind)


def catalog(move_id: str):
    """All variants of one movie move, as pairs of movies."""
    dirs = ("U", "D")
    if move_id == "MM16":
        return [_mm16(a, b) for a in dirs for b in dirs]
    if move_id == "MM17":
        return [_mm17(a, b, c) for a in dirs for b in dirs for c in dirs]
    if move_id == "MM18":
        return ([_mm18(a, b, "SW") for a in dirs for b in dirs]
                + [_mm18("U", "U", "SE")])
    if move_id == "MM19":
        return [_mm19(("U",) * 4), _mm19(("U", "D", "U", "D")),
                _mm19(("D", "U", "D", "U"))]
    if move_id == "COMM":
        return [_comm_saddle(("U", "U", "U", "D")), _comm_saddle(("U", "D", "D", "U")),
                _comm_birth("U", "U"), _comm_birth("U", "D"),
                _comm_death("U", "U"), _comm_death("D", "U")]
    raise KeyError(f"unknown move id {move_id!r}")


CATALOG_IDS = ("MM16", "MM17", "MM18", "MM19", "COMM")


# ---------------------------------------------------------------------------
# distinguished movies: the annulus bounded by the Hopf link


def seifert_hopf_movie(positive: bool, dotted: bool = False) -> Movie:
    """The Seifert-algorithm annulus of the 2-crossing Hopf diagram, as a
    movie from the empty diagram: two circle births, then two half-twisted
    bands (kink + saddle each).  `dotted` adds a dot on the surface."""
    kink = "X" if positive else "XBAR"
    events = [
        MovieEvent.make("birth", 0, l=0, dir="SW"),
        MovieEvent.make("birth", 1, l=2, dir="SW"),
        # first band between the circles
        MovieEvent.make("r1", 2, l=0, kind=kink),
        MovieEvent.make("saddle", 2, l=1),
        # second band
        MovieEvent.make("r1", 5, l=2, kind=kink),
        MovieEvent.make("saddle", 6, l=4),
    ]
    if dotted:
        events.append(MovieEvent.make("dot", 1, l=0))
    return Movie(BookmarkWord(), tuple(events))


def hopf_word(positive: bool) -> BookmarkWord:
    """A plat presentation of the Hopf link with two equal-sign crossings.

    The plat strands are antiparallel at the crossings, so the crossings
    with positive sign are the XBAR ones."""
    kind = "XBAR" if positive else "X"
    return make_word(0, (), [("CAP", 0, "SW"), ("CAP", 2, "SW"),
                             (kind, 1), (kind, 1), ("CUP", 0), ("CUP", 0)])


def unknot_word() -> BookmarkWord:
    return make_word(0, (), [("CAP", 0, "SW"), ("CUP", 0)])


def trefoil_word(positive: bool = True) -> BookmarkWord:
    kind = "X" if positive else "XBAR"
    return make_word(0, (), [("CAP", 0, "SW"), ("CAP", 2, "SE"),
                             (kind, 1), (kind, 1), (kind, 1),
                             ("CUP", 0), ("CUP", 0)])


# ---------------------------------------------------------------------------
# exhaustive enumeration of small closed diagrams (for oracle tests)


def enumerate_closed_words(max_crossings: int = 3, max_caps: int = 2):
    """All closed bookmark words with at most the given caps and crossings.

    Orientations: the first decoration choice for each cap is fixed to SW
    (the TQFT side is orientation-independent; signs only depend on relative
    orientations, which cap choices already exhaust up to global reversal).
    Cups are inserted greedily at every admissible point, so the enumeration
    is exhaustive over diagram shapes.
    """
    out = []
    seen = set()

    def rec(skel, width, caps, crossings, dirs):
        if width == 0 and skel:
            word = make_word(0, (), skel)
            key = str(word)
            if key not in seen:
                seen.add(key)
                out.append(word)
        if caps < max_caps:
            for l in range(width + 1):
                for dec in ("SW", "SE") if skel else ("SW",):
                    pair = ("D", "U") if dec == "SW" else ("U", "D")
                    rec(skel + [("CAP", l, dec)], width + 2, caps + 1,
                        crossings, dirs[:l] + list(pair) + dirs[l:])
        if crossings < max_crossings:
            for l in range(width - 1):
                for kind in ("X", "XBAR"):
                    nd = dirs[:]
                    nd[l], nd[l + 1] = nd[l + 1], nd[l]
                    rec(skel + [(kind, l)], width, caps, crossings + 1, nd)
        for l in range(width - 1):
            if dirs[l] != dirs[l + 1]:
                rec(skel + [("CUP", l)], width - 2, caps, crossings,
                    dirs[:l] + dirs[l + 2:])

    rec([], 0, 0, 0, [])
    return out
