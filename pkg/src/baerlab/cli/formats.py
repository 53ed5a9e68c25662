"""Input file formats (version 1).

Line-oriented files (groups, pairs, triples, systems, hypotheses) start with
``format: 1``; ``#`` starts a comment.  Simplicial objects and sequences are
JSON documents with ``"format": 1``.  See the README for the full schema.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Optional

from ..abelian import AbHom, FgAbGroup, IntMatrix
from ..errors import BaerLabError, LimitExceeded, ParseError, SizeCapExceeded
from ..exactseq import ExactSeqInstance, Unknown
from ..groups.finite import FiniteGroup, Subgroup, closure, is_homomorphism
from ..groups.triples import TripleInstance, triple_hom_apply
from ..groups.words import Presentation, parse_word
from ..multiplier.theorems import Hypothesis, TripleSystem
from ..simplicial.objects import TruncSimplicialAb

FORMAT_VERSION = 1


@dataclass
class Caps:
    max_order: int = 8
    trunc: int = 4
    max_cosets: int = 100_000

    @property
    def bar_cap(self) -> int:
        return self.max_order ** self.trunc


@dataclass
class _Line:
    no: int
    text: str


def _lines(text: str, path: str) -> list[_Line]:
    out = []
    for i, raw in enumerate(text.splitlines(), 1):
        s = raw.split("#", 1)[0].strip()
        if s:
            out.append(_Line(i, s))
    if not out or not re.fullmatch(r"format:\s*(\d+)", out[0].text):
        raise ParseError("missing 'format: 1' header", path, out[0].no if out else 1)
    ver = int(out[0].text.split(":")[1])
    if ver != FORMAT_VERSION:
        raise ParseError(f"unsupported format version {ver}", path, out[0].no)
    return out[1:]


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read file: {exc.strerror}", path) from None


def _split_top(text: str) -> list[str]:
    """Split on commas outside brackets and parentheses."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur).strip())
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur).strip())
    return [p for p in parts if p]


@dataclass
class GroupSource:
    group: FiniteGroup
    generators: tuple  # names usable in words
    assignment: tuple  # element index of each generator
    subgroups: dict = field(default_factory=dict)
    assigned: dict = field(default_factory=dict)  # "M"/"N" -> Subgroup


def _block_end(s: str) -> bool:
    return "=" in s or s.endswith(":") or s.startswith(("stage ", "map ", "sub:"))


def _parse_group(lines: list[_Line], i: int, path: str, caps: Caps) -> tuple[GroupSource, int]:
    head = lines[i]
    if head.text == "presentation:":
        i += 1
        if i >= len(lines):
            raise ParseError("presentation block needs a generators line", path, head.no)
        gens = tuple(lines[i].text.split())
        gen_line = lines[i].no
        i += 1
        rels = []
        while i < len(lines) and not _block_end(lines[i].text):
            rels.append(lines[i])
            i += 1
        try:
            pres = Presentation(gens, tuple(parse_word(r.text, gens) for r in rels))
        except ParseError as exc:
            bad = next((r.no for r in rels if _word_fails(r.text, gens)), gen_line)
            raise ParseError(str(exc), path, bad) from None
        try:
            g = FiniteGroup.from_presentation(pres, caps.max_cosets, caps.max_order)
        except LimitExceeded as exc:
            raise LimitExceeded(f"{path}:{head.no}: {exc}") from None
        except SizeCapExceeded as exc:
            raise SizeCapExceeded(f"{path}:{head.no}: {exc}") from None
        return GroupSource(g, gens, tuple(getattr(g, "generator_elements", ()))), i
    if head.text == "table:":
        i += 1
        if i >= len(lines):
            raise ParseError("table block needs an element names line", path, head.no)
        names = lines[i].text.split()
        n = len(names)
        if len(set(names)) != n:
            raise ParseError("duplicate element names", path, lines[i].no)
        pos = {x: k for k, x in enumerate(names)}
        i += 1
        rows = []
        for r in range(n):
            if i >= len(lines):
                raise ParseError(f"table needs {n} rows", path, lines[-1].no)
            row = lines[i].text.split()
            if len(row) != n or any(x not in pos for x in row):
                raise ParseError(f"row {r + 1} must list {n} element names", path, lines[i].no)
            rows.append([pos[x] for x in row])
            i += 1
        if n > caps.max_order:
            raise SizeCapExceeded(f"{path}:{head.no}: group of order {n} exceeds cap {caps.max_order}")
        try:
            g = FiniteGroup(names, rows)
        except (ValueError, BaerLabError) as exc:
            raise ParseError(f"table is not a group: {exc}", path, head.no) from None
        return GroupSource(g, tuple(names), tuple(range(n))), i
    raise ParseError("expected 'presentation:' or 'table:'", path, head.no)


def _word_fails(text: str, gens) -> bool:
    try:
        parse_word(text, gens)
        return False
    except ParseError:
        return True


def _element(src: GroupSource, item: str, path: str, no: int) -> set:
    g = src.group
    if item in src.subgroups:
        return set(src.subgroups[item].elements)
    if item in ("*", "G") and item not in g.names and item not in src.generators:
        return set(range(g.order))
    if item in g.names:
        return {g.names.index(item)}
    try:
        w = parse_word(item, src.generators)
    except ParseError as exc:
        raise ParseError(str(exc), path, no) from None
    return {g.evaluate(w, src.assignment)}


def _subgroup(src: GroupSource, text: str, path: str, no: int) -> Subgroup:
    elems: set = set()
    for item in _split_top(text):
        elems |= _element(src, item, path, no)
    return closure(src.group, elems)


def _parse_assignments(src: GroupSource, lines: list[_Line], i: int, path: str) -> int:
    while i < len(lines):
        s = lines[i].text
        m = re.fullmatch(r"sub:\s*([A-Za-z_]\w*)\s*=\s*(.+)", s)
        if m:
            src.subgroups[m.group(1)] = _subgroup(src, m.group(2), path, lines[i].no)
            i += 1
            continue
        m = re.fullmatch(r"([MN])\s*=\s*(.+)", s)
        if m:
            if m.group(1) in src.assigned:
                raise ParseError(f"{m.group(1)} assigned twice", path, lines[i].no)
            src.assigned[m.group(1)] = (_subgroup(src, m.group(2), path, lines[i].no), lines[i].no)
            i += 1
            continue
        break
    return i


def parse_group_file(path: str, caps: Caps, text: Optional[str] = None) -> GroupSource:
    lines = _lines(_read(path) if text is None else text, path)
    if not lines:
        raise ParseError("no group given", path, 1)
    src, i = _parse_group(lines, 0, path, caps)
    i = _parse_assignments(src, lines, i, path)
    if i < len(lines):
        raise ParseError(f"unexpected line {lines[i].text!r}", path, lines[i].no)
    return src


def _triple_from(src: GroupSource, path: str, name: str) -> tuple[TripleInstance, bool]:
    if "N" not in src.assigned:
        raise ParseError("a pair or triple file needs 'N = ...'", path)
    n, n_line = src.assigned["N"]
    m, m_line = src.assigned.get("M", (n, n_line))
    for label in sorted(src.assigned):
        s, line = src.assigned[label]
        if not s.is_normal():
            raise ParseError(f"{label} is not normal in G (code not-normal)", path, line)
    return TripleInstance(src.group, m, n, name), "M" not in src.assigned


def parse_triple_file(path: str, caps: Caps, text: Optional[str] = None) -> tuple[TripleInstance, bool]:
    """A triple, or a pair ``(G, N)`` (returned as ``(G, N, N)`` with ``is_pair`` set)."""
    return _triple_from(parse_group_file(path, caps, text), path, path)


def _extend_map(src: GroupSource, dst: GroupSource, images: dict, path: str, no: int) -> tuple:
    g, h = src.group, dst.group
    fmap = {g.identity: h.identity}
    gens = []
    for name, word in images.items():
        if name not in src.generators:
            raise ParseError(f"{name!r} is not a generator of the source", path, no)
        k = src.generators.index(name)
        gens.append((src.assignment[k], _element(dst, word, path, no).pop()))
    frontier = [g.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for a, b in gens:
                y = g.mul(x, a)
                img = h.mul(fmap[x], b)
                if y not in fmap:
                    fmap[y] = img
                    nxt.append(y)
        frontier = nxt
    if len(fmap) != g.order:
        raise ParseError("generator images do not cover the source group", path, no)
    out = tuple(fmap[x] for x in range(g.order))
    if not is_homomorphism(g, h, out):
        raise ParseError("generator images do not define a homomorphism", path, no)
    return out


def parse_system_file(path: str, caps: Caps, text: Optional[str] = None) -> TripleSystem:
    lines = _lines(_read(path) if text is None else text, path)
    stages: dict = {}
    order = []
    maps = []
    i = 0
    while i < len(lines):
        s = lines[i].text
        m = re.fullmatch(r"stage\s+(\w+)\s*:", s)
        if m:
            sid = m.group(1)
            if sid in stages:
                raise ParseError(f"stage {sid} defined twice", path, lines[i].no)
            src, i = _parse_group(lines, i + 1, path, caps)
            i = _parse_assignments(src, lines, i, path)
            stages[sid] = (src, _triple_from(src, path, f"{path}#{sid}")[0])
            order.append(sid)
            continue
        m = re.fullmatch(r"map\s+(\w+)\s*->\s*(\w+)\s*:\s*(.*)", s)
        if m:
            maps.append((m.group(1), m.group(2), m.group(3), lines[i].no))
            i += 1
            continue
        raise ParseError(f"unexpected line {s!r}", path, lines[i].no)
    if not stages:
        raise ParseError("system has no stages", path, 1)
    mors = {}
    for a, b, body, no in maps:
        if a not in stages or b not in stages:
            raise ParseError(f"map refers to unknown stage {a if a not in stages else b}", path, no)
        images = {}
        for item in _split_top(body):
            if "=" not in item:
                raise ParseError(f"expected generator=word, got {item!r}", path, no)
            k, w = item.split("=", 1)
            images[k.strip()] = w.strip()
        fmap = _extend_map(stages[a][0], stages[b][0], images, path, no)
        try:
            mors[(a, b)] = triple_hom_apply(fmap, stages[a][1], stages[b][1])
        except BaerLabError as exc:
            raise ParseError(f"{exc} (code {exc.code})", path, no) from None
    return TripleSystem(tuple(order), {k: v[1] for k, v in stages.items()}, mors)


def parse_hypothesis_file(path: str, text: Optional[str] = None) -> tuple[str, int, list]:
    lines = _lines(_read(path) if text is None else text, path)
    rule, c, hyps = "pair", None, []
    for ln in lines:
        m = re.fullmatch(r"rule:\s*(pair|triple)", ln.text)
        if m:
            rule = m.group(1)
            continue
        m = re.fullmatch(r"c:\s*(\d+)", ln.text)
        if m:
            c = int(m.group(1))
            continue
        m = re.fullmatch(r"(\S+)\s*=\s*(torsion|not-torsion)(?:\s+(computed|asserted))?", ln.text)
        if m:
            hyps.append(Hypothesis(m.group(1), m.group(2) == "torsion", m.group(3) or "computed"))
            continue
        raise ParseError(f"unexpected line {ln.text!r}", path, ln.no)
    if c is None:
        raise ParseError("missing 'c: <class>' line", path)
    return rule, c, hyps


# -- JSON formats ---------------------------------------------------------

def _load_json(path: str, text: Optional[str] = None) -> dict:
    raw = _read(path) if text is None else text
    try:
        doc = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", path, exc.lineno) from None
    if not isinstance(doc, dict) or doc.get("format") != FORMAT_VERSION:
        raise ParseError("JSON document needs \"format\": 1", path, 1)
    return doc


def _group_json(spec, path: str, where: str) -> FgAbGroup:
    if not isinstance(spec, dict):
        raise ParseError(f"{where}: group must be an object", path)
    if "ngens" in spec:
        k = spec["ngens"]
        rels = spec.get("relations", [])
        if not isinstance(k, int) or k < 0 or any(len(c) != k for c in rels):
            raise ParseError(f"{where}: relations must be columns of length ngens", path)
        return FgAbGroup(IntMatrix.from_columns([list(map(int, c)) for c in rels], k))
    if "factors" in spec or "rank" in spec:
        return FgAbGroup.from_invariants(spec.get("factors", []), spec.get("rank", 0))
    raise ParseError(f"{where}: group needs 'ngens' or 'factors'/'rank'", path)


def _matrix_json(rows, src: FgAbGroup, dst: FgAbGroup, path: str, where: str) -> AbHom:
    if not isinstance(rows, list) or len(rows) != dst.ngens or any(
            not isinstance(r, list) or len(r) != src.ngens for r in rows):
        raise ParseError(f"{where}: matrix must be {dst.ngens} x {src.ngens}", path)
    mat = IntMatrix.from_rows(rows, ncols=src.ngens) if dst.ngens else IntMatrix.zeros(0, src.ngens)
    try:
        return AbHom(src, dst, mat)
    except BaerLabError as exc:
        raise ParseError(f"{where}: {exc} (code {exc.code})", path) from None


def parse_simplicial_file(path: str, text: Optional[str] = None) -> TruncSimplicialAb:
    doc = _load_json(path, text)
    try:
        levels = [_group_json(s, path, f"levels[{n}]") for n, s in enumerate(doc["levels"])]
        T = len(levels) - 1
        faces = [[]]
        for n in range(1, T + 1):
            fs = doc["faces"][n]
            if len(fs) != n + 1:
                raise ParseError(f"faces[{n}] needs {n + 1} matrices", path)
            faces.append([_matrix_json(m, levels[n], levels[n - 1], path, f"faces[{n}][{i}]")
                          for i, m in enumerate(fs)])
        degens = []
        for n in range(T):
            ds = doc["degens"][n]
            if len(ds) != n + 1:
                raise ParseError(f"degens[{n}] needs {n + 1} matrices", path)
            degens.append([_matrix_json(m, levels[n], levels[n + 1], path, f"degens[{n}][{i}]")
                           for i, m in enumerate(ds)])
    except (KeyError, IndexError, TypeError) as exc:
        raise ParseError(f"malformed simplicial object: {exc!r}", path) from None
    return TruncSimplicialAb(levels, faces, degens)


def parse_sequence_file(path: str, text: Optional[str] = None) -> ExactSeqInstance:
    doc = _load_json(path, text)
    try:
        terms, labels = [], []
        for k, spec in enumerate(doc["terms"]):
            label = spec.get("label", f"T{k}")
            labels.append(label)
            terms.append(Unknown(label) if spec.get("unknown") else _group_json(spec, path, f"terms[{k}]"))
        maps = []
        raw = doc.get("maps", [None] * max(len(terms) - 1, 0))
        if len(raw) != max(len(terms) - 1, 0):
            raise ParseError("need one map entry between consecutive terms", path)
        for k, m in enumerate(raw):
            a, b = terms[k], terms[k + 1]
            if m is None or isinstance(a, Unknown) or isinstance(b, Unknown):
                maps.append(None)
            else:
                maps.append(_matrix_json(m, a, b, path, f"maps[{k}]"))
        obligations = doc.get("obligations")
    except (KeyError, TypeError, AttributeError) as exc:
        raise ParseError(f"malformed sequence: {exc!r}", path) from None
    return ExactSeqInstance(terms, maps, labels, obligations)
