"""Exact sequences of finitely generated abelian groups as checkable data."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Optional, Sequence, Union

from ..abelian import AbHom, FgAbGroup, IntMatrix, direct_sum, is_isomorphic, smith
from ..abelian.smith import solve_with
from ..errors import Inconsistent, InexactRow, NotIsomorphism
from .extensions import abelian_extensions


@dataclass(frozen=True)
class Unknown:
    label: str

    def __str__(self) -> str:
        return self.label


Term = Union[FgAbGroup, Unknown]


@dataclass(eq=False)
class ExactSeqInstance:
    """``terms[0] -> terms[1] -> ...`` with ``maps[i]: terms[i] -> terms[i+1]``.

    A map is ``None`` when it is not known explicitly; maps out of or into a
    trivial group are filled in as zero.  Exactness is claimed at every slot
    listed in ``obligations`` (all interior slots by default).
    """

    terms: list
    maps: list
    labels: list = field(default_factory=list)
    obligations: Optional[list] = None

    def __post_init__(self):
        if len(self.maps) != max(len(self.terms) - 1, 0):
            raise ValueError("need one map between each pair of consecutive terms")
        if not self.labels:
            self.labels = [t.label if isinstance(t, Unknown) else f"T{i}" for i, t in enumerate(self.terms)]
        if self.obligations is None:
            self.obligations = list(range(1, len(self.terms) - 1))
        maps = list(self.maps)
        for i, f in enumerate(maps):
            a, b = self.terms[i], self.terms[i + 1]
            if f is None and self.known(i) and self.known(i + 1) and (a.is_trivial or b.is_trivial):
                maps[i] = AbHom.zero(a, b)
        self.maps = maps

    def known(self, i: int) -> bool:
        return 0 <= i < len(self.terms) and isinstance(self.terms[i], FgAbGroup)

    def map_known(self, i: int) -> bool:
        return 0 <= i < len(self.maps) and self.maps[i] is not None

    def unknown_slots(self) -> list[int]:
        return [i for i, t in enumerate(self.terms) if isinstance(t, Unknown)]

    def substitute(self, label: str, value: FgAbGroup) -> "ExactSeqInstance":
        """Replace an unknown by a known group; adjacent maps stay symbolic."""
        terms = [value if isinstance(t, Unknown) and t.label == label else t for t in self.terms]
        return ExactSeqInstance(terms, list(self.maps), list(self.labels), list(self.obligations))

    def __len__(self) -> int:
        return len(self.terms)


@dataclass(frozen=True)
class SlotReport:
    slot: int
    label: str
    status: str  # "exact" | "inexact" | "undetermined"
    witness: Optional[tuple] = None
    reason: str = ""

    def to_json(self) -> dict:
        out = {"slot": self.slot, "label": self.label, "status": self.status}
        if self.witness is not None:
            out["witness"] = list(self.witness)
        if self.reason:
            out["reason"] = self.reason
        return out


@dataclass(frozen=True)
class ExactnessReport:
    slots: tuple

    @property
    def exact(self) -> bool:
        return all(s.status == "exact" for s in self.slots)

    @property
    def inexact(self) -> list:
        return [s for s in self.slots if s.status == "inexact"]

    @property
    def undetermined(self) -> list:
        return [s for s in self.slots if s.status == "undetermined"]

    def to_json(self) -> list:
        return [s.to_json() for s in self.slots]


def _in_image(f: AbHom, y: Sequence[int], dec=None) -> bool:
    dec = dec or smith(f.matrix.hstack(f.target.presentation))
    return solve_with(dec, list(y)) is not None


def check_slot(f: AbHom, g: AbHom) -> tuple[bool, Optional[tuple]]:
    """Is ``A -f-> B -g-> C`` exact at B?  Returns a witness vector in B when not."""
    comp = g @ f
    for j in range(f.source.ngens):
        if not comp.target.is_zero(comp.matrix.column(j)):
            return False, tuple(f.matrix.column(j))
    kern = g.parts.kernel_incl.matrix
    dec = smith(f.matrix.hstack(f.target.presentation))
    for j in range(kern.ncols):
        col = kern.column(j)
        if not _in_image(f, col, dec):
            return False, tuple(col)
    return True, None


def verify_exactness(s: ExactSeqInstance) -> ExactnessReport:
    out = []
    for i in s.obligations:
        label = s.labels[i]
        if not (s.known(i - 1) and s.known(i) and s.known(i + 1)):
            out.append(SlotReport(i, label, "undetermined", reason="unknown term"))
            continue
        if not (s.map_known(i - 1) and s.map_known(i)):
            out.append(SlotReport(i, label, "undetermined", reason="symbolic map"))
            continue
        ok, wit = check_slot(s.maps[i - 1], s.maps[i])
        out.append(SlotReport(i, label, "exact" if ok else "inexact", wit))
    return ExactnessReport(tuple(out))


@dataclass(frozen=True)
class TermConstraint:
    """What exactness forces on an unknown term.

    ``order_lower`` divides the order and the order divides ``order_upper``
    (``None`` means unbounded or infinite); ``rank`` is exact when known.
    ``candidates`` lists every isomorphism type still possible when it could
    be enumerated; ``forced`` is set when exactly one remains.
    """

    label: str
    order_lower: int = 1
    order_upper: Optional[int] = None
    rank: Optional[int] = None
    candidates: Optional[tuple] = None
    forced: Optional[FgAbGroup] = None
    sub: Optional[FgAbGroup] = None
    quotient: Optional[FgAbGroup] = None

    def to_json(self) -> dict:
        out = {"label": self.label, "order_lower": self.order_lower,
               "order_upper": self.order_upper, "rank": self.rank}
        if self.candidates is not None:
            out["candidates"] = [c.to_json() for c in self.candidates]
        if self.forced is not None:
            out["forced"] = self.forced.to_json()
        return out

    def admits(self, g: FgAbGroup) -> bool:
        if self.rank is not None and g.rank != self.rank:
            return False
        if g.is_finite:
            o = g.order
            if o % self.order_lower:
                return False
            if self.order_upper is not None and self.order_upper % o:
                return False
        elif self.order_upper is not None:
            return False
        if self.candidates is not None:
            return any(is_isomorphic(g, c) for c in self.candidates)
        return True


def _left_piece(s: ExactSeqInstance, i: int):
    """Image of ``terms[i-1]`` in the unknown at ``i``: ``('exact', G)`` or ``('quotient_of', G)``."""
    if not s.known(i - 1):
        return None
    a = s.terms[i - 1]
    if a.is_trivial:
        return ("exact", FgAbGroup.trivial())
    if s.map_known(i - 2) and (i - 1) in s.obligations:
        return ("exact", s.maps[i - 2].parts.cokernel)
    return ("quotient_of", a)


def _right_piece(s: ExactSeqInstance, i: int):
    """Image of the unknown in ``terms[i+1]``: ``('exact', G)`` or ``('subgroup_of', G)``."""
    if not s.known(i + 1):
        return None
    b = s.terms[i + 1]
    if b.is_trivial:
        return ("exact", FgAbGroup.trivial())
    if s.map_known(i + 1) and (i + 1) in s.obligations:
        return ("exact", s.maps[i + 1].parts.kernel)
    return ("subgroup_of", b)


def _window_constraint(s: ExactSeqInstance, i: int):
    """Alternating rank and order over the exact window between trivial terms around ``i``."""
    lo = i
    while lo > 0 and not (s.known(lo) and s.terms[lo].is_trivial):
        lo -= 1
    hi = i
    while hi < len(s.terms) - 1 and not (s.known(hi) and s.terms[hi].is_trivial):
        hi += 1
    ends_ok = s.known(lo) and s.terms[lo].is_trivial and s.known(hi) and s.terms[hi].is_trivial
    if not ends_ok or any(k not in s.obligations for k in range(lo + 1, hi)):
        return None
    others = [k for k in range(lo + 1, hi) if k != i]
    if any(not s.known(k) for k in others):
        return None
    sign_i = (-1) ** i
    rank_sum = sum((-1) ** k * s.terms[k].rank for k in others)
    rank = -sign_i * rank_sum
    if rank < 0:
        raise Inconsistent(f"alternating rank sum forces negative rank at {s.labels[i]}")
    order = None
    if rank == 0 and all(s.terms[k].is_finite for k in others):
        from fractions import Fraction
        q = Fraction(1)
        for k in others:
            o = s.terms[k].order
            q *= Fraction(o) if (-1) ** k == sign_i else Fraction(1, o)
        # |X|^{sign_i} * prod = 1 over the window
        q = 1 / q
        if q.denominator != 1:
            raise Inconsistent(f"alternating order product is not an integer at {s.labels[i]}")
        order = int(q)
    return rank, order


def _constraint_for(s: ExactSeqInstance, i: int, max_enum: int) -> TermConstraint:
    label = s.labels[i]
    lo, up, rank = 1, None, None
    left, right = _left_piece(s, i), _right_piece(s, i)
    sub = quo = None
    candidates = None
    if left and right and left[0] == "exact" and right[0] == "exact":
        sub, quo = left[1], right[1]
        rank = sub.rank + quo.rank
        if sub.is_finite and quo.is_finite:
            lo = up = sub.order * quo.order
        if sub.is_trivial:
            candidates = (quo.canonical_group(),)
        elif quo.is_trivial:
            candidates = (sub.canonical_group(),)
        elif sub.is_finite and quo.is_finite and gcd(sub.order, quo.order) == 1:
            candidates = (direct_sum(sub, quo).canonical_group(),)
        elif sub.is_finite and quo.is_finite and lo <= max_enum:
            candidates = tuple(abelian_extensions(sub, quo))
        elif quo.is_free:
            # a free quotient splits
            candidates = (direct_sum(sub, quo).canonical_group(),)
    else:
        if left:
            g = left[1]
            if left[0] == "exact" and g.is_finite:
                lo = g.order
            if left[0] == "exact":
                sub = g
        if right:
            g = right[1]
            if right[0] == "exact":
                quo = g
        # upper bound when both flanks are finite
        lg = left[1] if left else None
        rg = right[1] if right else None
        if lg is not None and rg is not None and lg.is_finite and rg.is_finite:
            up = lg.order * rg.order
            rank = 0
        if sub is not None and quo is not None:
            rank = sub.rank + quo.rank
    win = _window_constraint(s, i)
    if win is not None:
        wrank, word = win
        if rank is not None and rank != wrank:
            raise Inconsistent(f"rank of {label}: local {rank} vs window {wrank}")
        rank = wrank
        if word is not None:
            if word % lo or (up is not None and up % word):
                raise Inconsistent(f"order of {label}: window forces {word}, bounds {lo}..{up}")
            lo = up = word
    if up is not None and up % lo:
        raise Inconsistent(f"order bounds for {label} are incompatible: {lo} does not divide {up}")
    if candidates is not None:
        candidates = tuple(c for c in candidates if (rank is None or c.rank == rank)
                           and (not c.is_finite or (c.order % lo == 0 and (up is None or up % c.order == 0))))
        if not candidates:
            raise Inconsistent(f"no abelian group satisfies the constraints on {label}")
    forced = candidates[0] if candidates is not None and len(candidates) == 1 else None
    return TermConstraint(label, lo, up, rank, candidates, forced, sub, quo)


def solve_unknowns(s: ExactSeqInstance, max_enum: int = 64) -> dict[str, TermConstraint]:
    slots = s.unknown_slots()
    if not slots:
        raise ValueError("sequence has no unknown terms")
    return {s.labels[i]: _constraint_for(s, i, max_enum) for i in slots}


@dataclass(frozen=True)
class FiveLemmaVerdict:
    middle: AbHom
    inverse: AbHom

    def to_json(self) -> dict:
        return {"middle_is_iso": True, "source": self.middle.source.to_json(),
                "target": self.middle.target.to_json()}


def inverse_iso(f: AbHom) -> AbHom:
    """Inverse of an isomorphism, solved generator by generator."""
    if not f.is_isomorphism():
        raise NotIsomorphism("map is not an isomorphism")
    dec = smith(f.matrix.hstack(f.target.presentation))
    cols = []
    for j in range(f.target.ngens):
        e = [0] * f.target.ngens
        e[j] = 1
        x = solve_with(dec, e)
        cols.append(x[: f.source.ngens])
    return AbHom(f.target, f.source, IntMatrix.from_columns(cols, f.source.ngens))


def five_lemma(top: ExactSeqInstance, bottom: ExactSeqInstance, verticals: Sequence[AbHom]) -> FiveLemmaVerdict:
    """Certify the middle vertical of a map of five-term exact rows is an isomorphism.

    ``verticals`` has five maps ``top[i] -> bottom[i]``.  Both rows must be
    exact at slots 1..3, every square must commute, and the four outer
    verticals must be isomorphisms.  The middle map is then checked directly.
    """
    if len(top) != 5 or len(bottom) != 5 or len(verticals) != 5:
        raise ValueError("five lemma needs two five-term rows and five verticals")
    for name, row in (("top", top), ("bottom", bottom)):
        row = ExactSeqInstance(row.terms, row.maps, row.labels, [1, 2, 3])
        rep = verify_exactness(row)
        if not rep.exact:
            raise InexactRow(f"{name} row is not verified exact: {rep.to_json()}")
    for k in (0, 1, 3, 4):
        if not verticals[k].is_isomorphism():
            raise NotIsomorphism(f"outer vertical {k} is not an isomorphism")
    for k in range(4):
        a = bottom.maps[k] @ verticals[k]
        b = verticals[k + 1] @ top.maps[k]
        if not a.equals(b):
            raise Inconsistent(f"square {k} does not commute")
    mid = verticals[2]
    if not mid.is_isomorphism():
        raise Inconsistent("middle vertical fails to be an isomorphism despite the hypotheses")
    return FiveLemmaVerdict(mid, inverse_iso(mid))
