"""Refined polynomials p_{m,k} via the threshold recurrence.

Level m is obtained from level m-1 by a threshold transform

    g_i = z * sum_{j < t_i} f_j + a_i * f_{t_i} + sum_{j > t_i} f_j,

with 1-based thresholds ``t`` and markers ``a_i`` in {1, 1+z}.  Within a level
the transform runs on prefix sums, so each output costs O(max degree).

Also here: the 2x2 factorization identities used to show the transform keeps
interlacing, the two non-examples of interlacing-preserving matrices, and
random generators for property checks.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from eulerpoly.errors import DomainError
from eulerpoly.invseq import check_svec
from eulerpoly.polycore import ONE, ONE_PLUS_Z, ZERO, IntPoly, Z, poly_sum
from eulerpoly.realroot import is_interlacing_sequence


class Marker(enum.Enum):
    ONE = "1"
    ONE_PLUS_Z = "1+z"

    @property
    def poly(self) -> IntPoly:
        return ONE if self is Marker.ONE else ONE_PLUS_Z


@dataclass(frozen=True)
class ThresholdSpec:
    """Thresholds t_1 <= ... <= t_p and markers a_1..a_p.

    A threshold of q + 1 (one past the last input) is accepted and yields the
    all-``z`` row z * (f_1 + ... + f_q); the marker is irrelevant there.
    """

    t: tuple[int, ...]
    a: tuple[Marker, ...]

    def __post_init__(self):
        object.__setattr__(self, "t", tuple(self.t))
        object.__setattr__(self, "a", tuple(Marker(x) for x in self.a))
        if len(self.t) != len(self.a):
            raise DomainError("thresholds and markers differ in length")

    def validate(self, q: int) -> None:
        t, a = self.t, self.a
        for i, ti in enumerate(t):
            if not 1 <= ti <= q + 1:
                raise DomainError(f"threshold t_{i + 1} = {ti} outside [1, {q + 1}]")
            if i and t[i - 1] > ti:
                raise DomainError("thresholds must be nondecreasing")
        for i in range(1, len(t)):
            # equal thresholds: a 1+z marker may not precede a 1 marker
            if t[i - 1] == t[i] and a[i - 1] is Marker.ONE_PLUS_Z and a[i] is Marker.ONE:
                raise DomainError(
                    f"forbidden marker pattern (1+z then 1) at threshold {t[i]}"
                )


def threshold_transform(
    fs: Sequence[IntPoly], spec: ThresholdSpec, check: bool = True
) -> list[IntPoly]:
    """Apply the threshold matrix of ``spec`` to ``fs``.

    With ``check=False`` the formula is evaluated even for specs outside the
    interlacing-preserving class (still requiring thresholds in range).
    """
    q = len(fs)
    if check:
        spec.validate(q)
        if not all(f.nonnegative() for f in fs):
            raise DomainError("input polynomials must have nonnegative coefficients")
    elif not all(1 <= t <= q + 1 for t in spec.t):
        raise DomainError("threshold out of range")
    prefix = [ZERO]
    for f in fs:
        prefix.append(prefix[-1] + f)
    total = prefix[-1]
    out = []
    for t, a in zip(spec.t, spec.a):
        below = prefix[t - 1].shift(1)
        if t == q + 1:
            out.append(below)
            continue
        out.append(below + a.poly * fs[t - 1] + (total - prefix[t]))
    return out


def thresholds(s: Sequence[int], m: int) -> list[tuple[int, bool]]:
    """(ceil(k s_{m-1} / s_m), s_m | k s_{m-1}) for k = 0..s_m - 1; m is 1-based."""
    s = check_svec(s)
    if not 2 <= m <= len(s):
        raise DomainError(f"level m = {m} outside [2, {len(s)}]")
    prev, cur = s[m - 2], s[m - 1]
    return [(-(-k * prev // cur), k * prev % cur == 0) for k in range(cur)]


def level_spec(s: Sequence[int], m: int) -> ThresholdSpec:
    """Threshold spec taking level m-1 to level m (0-based thresholds shifted by one)."""
    ts, ms = [], []
    for t, divisible in thresholds(s, m):
        ts.append(t + 1)
        ms.append(Marker.ONE_PLUS_Z if divisible else Marker.ONE)
    return ThresholdSpec(tuple(ts), tuple(ms))


@dataclass(frozen=True)
class RefinedFamily:
    level: int
    polys: tuple[IntPoly, ...] = field(default_factory=tuple)

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def __getitem__(self, k):
        return self.polys[k]


def refined_levels(s: Sequence[int]) -> list[RefinedFamily]:
    """Families (p_{m,k})_k for every level m = 1..n."""
    s = check_svec(s)
    if not s:
        raise DomainError("refined polynomials need a nonempty s")
    polys = [ONE_PLUS_Z] + [Z] * (s[0] - 1)
    levels = [RefinedFamily(1, tuple(polys))]
    for m in range(2, len(s) + 1):
        polys = threshold_transform(polys, level_spec(s, m), check=False)
        levels.append(RefinedFamily(m, tuple(polys)))
    return levels


def refined_polys(s: Sequence[int]) -> RefinedFamily:
    return refined_levels(s)[-1]


def binomial_eulerian(s: Sequence[int]) -> IntPoly:
    """(1+z) p_{n,0} + p_{n,1} + ... + p_{n,s_n - 1}; the empty s gives 1+z."""
    s = check_svec(s)
    if not s:
        return ONE_PLUS_Z
    fam = refined_polys(s)
    return fam[0].shift(1) + poly_sum(fam.polys)


# 2x2 matrix identities

Matrix = tuple[tuple[IntPoly, IntPoly], tuple[IntPoly, IntPoly]]


def _m(a, b, c, d) -> Matrix:
    return ((IntPoly.constant(a) if isinstance(a, int) else a,
             IntPoly.constant(b) if isinstance(b, int) else b),
            (IntPoly.constant(c) if isinstance(c, int) else c,
             IntPoly.constant(d) if isinstance(d, int) else d))


def mat_mul(x: Matrix, y: Matrix) -> Matrix:
    return tuple(
        tuple(poly_sum(x[i][k] * y[k][j] for k in range(2)) for j in range(2))
        for i in range(2)
    )


def mat_vec(x: Sequence[Sequence[IntPoly]], v: Sequence[IntPoly]) -> list[IntPoly]:
    return [poly_sum(row[j] * v[j] for j in range(len(v))) for row in x]


_W = ONE_PLUS_Z

# (product, left factor, right factor)
FACTORIZATIONS: tuple[tuple[Matrix, Matrix, Matrix], ...] = (
    (_m(_W, 1, Z, 1), _m(1, 1, 0, 1), _m(1, 0, Z, 1)),
    (_m(1, 1, _W, 1), _m(1, 0, 1, 1), _m(1, 1, Z, 0)),
    (_m(_W, 1, Z, Z), _m(1, 1, Z, 0), _m(1, 1, Z, 0)),
    (_m(1, 1, Z, _W), _m(1, 0, Z, 1), _m(1, 1, 0, 1)),
    (_m(Z, _W, Z, Z), _m(1, 1, 0, 1), _m(0, 1, Z, Z)),
    (_m(Z, 1, Z, _W), _m(1, 0, 1, 1), _m(Z, 1, 0, Z)),
    (_m(Z, _W, Z, _W), _m(1, 1, 1, 1), _m(Z, 1, 0, Z)),
    (_m(_W, 1, _W, 1), _m(1, 1, 1, 1), _m(1, 0, Z, 1)),
)

DIRECT_CASE: Matrix = _m(_W, 1, Z, _W)

COUNTEREXAMPLES: tuple[tuple[Matrix, tuple[IntPoly, IntPoly], tuple[IntPoly, IntPoly]], ...] = (
    (_m(_W, 1, _W, _W), (ONE_PLUS_Z, Z), (IntPoly([1, 3, 1]), IntPoly([1, 3, 2]))),
    (_m(_W, _W, Z, _W), (ONE, Z), (IntPoly([1, 2, 1]), IntPoly([0, 2, 1]))),
)


@dataclass
class CheckReport:
    ok: bool = True
    lines: list[str] = field(default_factory=list)

    def record(self, passed: bool, message: str) -> None:
        self.ok = self.ok and passed
        self.lines.append(("PASS " if passed else "FAIL ") + message)

    def __bool__(self) -> bool:
        return self.ok


def _fmt(m: Matrix) -> str:
    return "[[" + "], [".join(", ".join(str(e) for e in row) for row in m) + "]]"


def factorization_checks(trials: int = 50, seed: int = 0, sink: Optional[list] = None) -> CheckReport:
    """Verify the eight product identities, and test the directly argued case
    [[1+z, 1], [z, 1+z]] together with every right-hand factor on random
    interlacing pairs.

    Every input and output pair is appended to ``sink`` when one is given.
    """
    report = CheckReport()
    for k, (prod, left, right) in enumerate(FACTORIZATIONS, 1):
        report.record(mat_mul(left, right) == prod, f"factorization {k}: {_fmt(prod)}")
    rng = random.Random(seed)
    pairs = [random_interlacing_sequence(rng, 2, rng.randint(0, 4)) for _ in range(trials)]
    mats = [("direct case", DIRECT_CASE)] + [
        (f"factor {name} of identity {k}", mat)
        for k, (_, left, right) in enumerate(FACTORIZATIONS, 1)
        for name, mat in (("L", left), ("R", right))
    ]
    for label, mat in mats:
        outputs = [mat_vec(mat, p) for p in pairs]
        if sink is not None:
            sink.extend(pairs)
            sink.extend(outputs)
        bad = [o for o in outputs if not is_interlacing_sequence(o)]
        report.record(not bad, f"{label} preserves interlacing on {trials} random pairs")
    return report


def counterexample_check() -> CheckReport:
    report = CheckReport()
    for k, (mat, vec, expected) in enumerate(COUNTEREXAMPLES, 1):
        report.record(bool(is_interlacing_sequence(vec)), f"counterexample {k}: input interlacing")
        got = tuple(mat_vec(mat, vec))
        report.record(got == expected, f"counterexample {k}: product = ({got[0]}, {got[1]})")
        report.record(
            not is_interlacing_sequence(got), f"counterexample {k}: product not interlacing"
        )
    return report


# random generators for property checks


def random_interlacing_sequence(
    rng: random.Random, q: int, degree: int, max_den: int = 3
) -> list[IntPoly]:
    """q polynomials with nonpositive rational roots forming an interlacing sequence.

    Roots are drawn per slot: slot k holds the k-th smallest root of every
    polynomial, slots occupy disjoint ascending ranges, and within a slot the
    roots are nondecreasing in the sequence index.  The leftmost slot may be
    missing from a prefix of the sequence, giving degree drops of one.
    """
    if degree == 0:
        return [IntPoly.constant(rng.randint(1, 3)) for _ in range(q)]
    slots = []
    for k in range(degree):
        # slot k spans [1 - 4(degree - k), 4 - 4(degree - k)]; the top slot ends at 0
        lo = 1 - 4 * (degree - k)
        slots.append(sorted(lo + Fraction(rng.randint(0, 3 * max_den), max_den)
                            for _ in range(q)))
    drop = rng.randint(0, q) if rng.random() < 0.3 else 0
    out = []
    for i in range(q):
        f = IntPoly.constant(rng.randint(1, 3))
        for k, slot in enumerate(slots):
            if k == 0 and i < drop:
                continue
            root = slot[i]
            f = f * IntPoly([-root.numerator, root.denominator])
        out.append(f)
    return out


def random_threshold_spec(rng: random.Random, q: int, p: int) -> ThresholdSpec:
    """Random valid spec with thresholds in [1, q]."""
    ts = sorted(rng.randint(1, q) for _ in range(p))
    marks = [rng.choice((Marker.ONE, Marker.ONE_PLUS_Z)) for _ in range(p)]
    # within a run of equal thresholds, place 1 markers before 1+z markers
    order = sorted(range(p), key=lambda i: (ts[i], marks[i] is Marker.ONE_PLUS_Z))
    return ThresholdSpec(tuple(ts[i] for i in order), tuple(marks[i] for i in order))


def random_transform_trials(trials: int = 200, seed: int = 0, sink: Optional[list] = None) -> CheckReport:
    """Apply random valid specs to random interlacing inputs; outputs must interlace."""
    rng = random.Random(seed)
    report = CheckReport()
    failures = 0
    for _ in range(trials):
        q = rng.randint(1, 5)
        fs = random_interlacing_sequence(rng, q, rng.randint(0, 4))
        if not is_interlacing_sequence(fs):
            raise AssertionError(f"generator produced a non-interlacing input {fs}")
        spec = random_threshold_spec(rng, q, rng.randint(1, 5))
        out = threshold_transform(fs, spec)
        if sink is not None:
            sink.extend((fs, out))
        if not is_interlacing_sequence(out):
            failures += 1
            report.record(False, f"spec {spec} on {[str(f) for f in fs]}")
    report.record(failures == 0, f"{trials} random threshold transforms preserved interlacing (seed {seed})")
    return report

