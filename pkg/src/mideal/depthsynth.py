"""Monomial ideals with prescribed depth functions n -> depth S/Q^n.

Any convergent non-negative function is a sum of step functions
0,..,0,1,1,.. (type I) and spikes 0,..,0,1,0,0,.. (type II).  Each summand
is realised by a small block ideal; blocks are combined by gluing one
variable of each ring (depths add), and a spike comes from gluing a step-up
block and a step-down block along two variables (depths add, minus one).

No claim is taken on trust: every block profile and every glued profile is
recomputed up to the verification bound before it is reported.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .decomposition import MonomialPrime, associated_primes, maximal_prime
from .homology import depth_quotient
from .linalg import as_field
from .localcoh import ResourceLimitError, maximal_ideal_is_associated
from .report import VerificationReport
from .ring import MonomialIdeal, PolyRing, contains, power, product, radical

DEFAULT_BUDGET = 14
KIND_ORDER = {"constant1": 0, "typeI": 1, "typeII": 2}


class BudgetExceededError(ResourceLimitError):
    """The synthesised ring would exceed the variable budget."""


class BlockVerificationError(RuntimeError):
    """A block's computed depth profile contradicts its claimed profile."""


class GlueHypothesisError(ValueError):
    """The hypotheses for gluing along two variables are not met."""


@dataclass(frozen=True)
class DepthFunctionSpec:
    """f(n) = prefix[n-1] for n <= len(prefix), tail afterwards (n >= 1)."""

    prefix: tuple[int, ...]
    tail: int

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(int(v) for v in self.prefix))
        if any(v < 0 for v in self.prefix) or self.tail < 0:
            raise ValueError("depth functions are non-negative")

    def __call__(self, n: int) -> int:
        if n < 1:
            raise ValueError("depth functions are indexed from n = 1")
        return self.prefix[n - 1] if n <= len(self.prefix) else self.tail

    def values(self, N: int) -> list[int]:
        return [self(n) for n in range(1, N + 1)]

    def __add__(self, other: "DepthFunctionSpec") -> "DepthFunctionSpec":
        L = max(len(self.prefix), len(other.prefix))
        return DepthFunctionSpec(tuple(self(n) + other(n) for n in range(1, L + 1)), self.tail + other.tail)

    def shifted(self, c: int) -> "DepthFunctionSpec":
        return DepthFunctionSpec(tuple(v + c for v in self.prefix), self.tail + c)

    def __str__(self):
        return ",".join(map(str, self.prefix)) + f";tail {self.tail}"


def step_profile(d: int) -> DepthFunctionSpec:
    return DepthFunctionSpec((0,) * (d - 1) + (1,), 1)


def spike_profile(d: int) -> DepthFunctionSpec:
    return DepthFunctionSpec((0,) * (d - 1) + (1,), 0)


@dataclass
class BlockIdeal:
    kind: str
    d: int
    ideal: MonomialIdeal
    claimed_profile: DepthFunctionSpec
    provenance: str = "family"
    verified_up_to: int = 0

    @property
    def label(self) -> str:
        return self.kind if self.kind == "constant1" else f"{self.kind}({self.d})"


def _ring(names, suffix: str) -> PolyRing:
    return PolyRing(tuple(v + suffix for v in names))


def _mono(ring: PolyRing, **exps) -> tuple[int, ...]:
    e = [0] * ring.nvars
    for k, v in exps.items():
        e[ring.index(k)] = v
    return tuple(e)


def block_type1(d: int, suffix: str = "") -> BlockIdeal:
    """(x^(d+2), x^(d+1) y, x y^(d+1), y^(d+2), x^d y^2 z): depth 0 below n = d, 1 from d on."""
    if d < 2:
        raise ValueError("the step-up family needs d >= 2")
    R = _ring("xyz", suffix)
    x, y, z = R.vars
    gens = [_mono(R, **{x: d + 2}), _mono(R, **{x: d + 1, y: 1}), _mono(R, **{x: 1, y: d + 1}),
            _mono(R, **{y: d + 2}), _mono(R, **{x: d, y: 2, z: 1})]
    return BlockIdeal("typeI", d, MonomialIdeal(R, gens), step_profile(d))


def block_mst(d: int, suffix: str = "") -> BlockIdeal:
    """(t^(d+1), t u^(d-1) v, u^d v): depth 1 up to n = d, then 0."""
    if d < 2:
        raise ValueError("the step-down family needs d >= 2")
    R = _ring("tuv", suffix)
    t, u, v = R.vars
    gens = [_mono(R, **{t: d + 1}), _mono(R, **{t: 1, u: d - 1, v: 1}), _mono(R, **{u: d, v: 1})]
    return BlockIdeal("mst", d, MonomialIdeal(R, gens), DepthFunctionSpec((1,) * d, 0))


def block_constant1(suffix: str = "") -> BlockIdeal:
    R = _ring("xw", suffix)
    return BlockIdeal("constant1", 0, MonomialIdeal(R, [_mono(R, **{R.vars[0]: 1})]), DepthFunctionSpec((), 1))


def _identify(I: MonomialIdeal, target: PolyRing, rename: dict[str, str]) -> MonomialIdeal:
    """Move I into ``target`` sending each variable v to rename.get(v, v)."""
    pos = [target.index(rename.get(v, v)) for v in I.ring.vars]
    gens = []
    for g in I.gens:
        e = [0] * target.nvars
        for p, a in zip(pos, g):
            e[p] += a
        gens.append(tuple(e))
    return MonomialIdeal(target, gens)


def glue_additive(I: MonomialIdeal, x: str, J: MonomialIdeal, y: str) -> tuple[PolyRing, MonomialIdeal]:
    """Identify y with x in the product IJ: depth S/Q^n = depth A/I^n + depth B/J^n.

    The glued ring keeps the variables of A (x included) followed by those of
    B other than y.
    """
    if set(I.ring.vars) & set(J.ring.vars):
        raise ValueError("gluing needs rings with disjoint variables")
    if not I.is_proper or not J.is_proper:
        raise ValueError("gluing needs proper nonzero ideals")
    I.ring.index(x)
    J.ring.index(y)
    S = PolyRing(I.ring.vars + tuple(v for v in J.ring.vars if v != y))
    return S, product(_identify(I, S, {}), _identify(J, S, {y: x}))


def glue_reduction(I: MonomialIdeal, J: MonomialIdeal, pairs: list[tuple[str, str]] | None = None
                   ) -> tuple[PolyRing, MonomialIdeal]:
    """Identify two pairs of variables (x_i ~ y_i) in IJ.

    Requires at least three variables on each side and every variable not
    being identified to lie in the radical of its ideal.  Identified
    variables take their names from the B side; the glued ring lists the
    remaining A variables first, then all B variables.
    """
    if set(I.ring.vars) & set(J.ring.vars):
        raise ValueError("gluing needs rings with disjoint variables")
    if I.ring.nvars < 3 or J.ring.nvars < 3:
        raise GlueHypothesisError("both rings need at least three variables")
    if pairs is None:
        pairs = [(I.ring.vars[1], J.ring.vars[1]), (I.ring.vars[2], J.ring.vars[2])]
    if len(pairs) != 2:
        raise GlueHypothesisError("exactly two variable pairs are identified")
    xs = [a for a, _ in pairs]
    ys = [b for _, b in pairs]
    for X, used in ((I, xs), (J, ys)):
        for v in used:
            X.ring.index(v)
        rad = radical(X)
        for v in X.ring.vars:
            if v not in used and not contains(rad, X.ring.variable(v)):
                raise GlueHypothesisError(f"{v} is not in the radical of {X}")
    S = PolyRing(tuple(v for v in I.ring.vars if v not in xs) + J.ring.vars)
    return S, product(_identify(I, S, dict(zip(xs, ys))), _identify(J, S, {}))


def depth_profile(I: MonomialIdeal, N: int, field=None) -> list[int]:
    return [depth_quotient(power(I, n), field) for n in range(1, N + 1)]


def _verify_block(b: BlockIdeal, N: int, field) -> BlockIdeal:
    got = depth_profile(b.ideal, N, field)
    want = b.claimed_profile.values(N)
    if got != want:
        raise BlockVerificationError(f"{b.label}: computed profile {got} differs from claimed {want}")
    b.verified_up_to = max(b.verified_up_to, N)
    return b


# (t^2, t v, u v): depth 1 at n = 1 and 0 afterwards.  Not a member of the
# step families, so its profile is recomputed before every use.
TYPE2_FALLBACK = ((2, 0, 0), (1, 0, 1), (0, 1, 1))


def block_type2(d: int, suffix: str = "", verify_up_to: int | None = None, field=None) -> BlockIdeal:
    """A block whose depth function is the spike at d."""
    if d < 1:
        raise ValueError("spike position must be >= 1")
    if d == 1:
        R = _ring("tuv", suffix)
        b = BlockIdeal("typeII", 1, MonomialIdeal(R, TYPE2_FALLBACK), spike_profile(1), provenance="computed")
        return _verify_block(b, verify_up_to or 4, field)
    A = block_type1(d, suffix)
    B = block_mst(d, suffix)
    x, y, z = A.ideal.ring.vars
    t, u, v = B.ideal.ring.vars
    S, Q = glue_reduction(A.ideal, B.ideal, [(y, u), (z, v)])
    b = BlockIdeal("typeII", d, Q, spike_profile(d))
    if verify_up_to:
        _verify_block(b, verify_up_to, field)
    return b


def decompose_profile(f: DepthFunctionSpec) -> list[tuple[str, int]]:
    """Split f into step and spike summands, as (kind, d) pairs sorted by (kind, d)."""
    L = len(f.prefix)
    vals = [f(n) for n in range(1, L + 2)]  # position L+1 carries the tail
    h = [min(vals[k:]) for k in range(len(vals))]
    blocks: list[tuple[str, int]] = []
    blocks += [("constant1", 0)] * h[0]
    for k in range(1, len(h)):
        blocks += [("typeI", k + 1)] * (h[k] - h[k - 1])
    for k in range(len(vals)):
        blocks += [("typeII", k + 1)] * (vals[k] - h[k])
    blocks.sort(key=lambda b: (KIND_ORDER[b[0]], b[1]))
    total = DepthFunctionSpec((), 0)
    for kind, d in blocks:
        total = total + claimed_profile(kind, d)
    assert all(total(n) == f(n) for n in range(1, L + 3)), "profile decomposition is not exact"
    return blocks


def claimed_profile(kind: str, d: int) -> DepthFunctionSpec:
    if kind == "constant1":
        return DepthFunctionSpec((), 1)
    if kind == "typeI":
        return step_profile(d)
    if kind == "typeII":
        return spike_profile(d)
    raise ValueError(f"unknown block kind {kind!r}")


def block_variable_count(kind: str, d: int) -> int:
    return {"constant1": 2, "typeI": 3}.get(kind, 3 if d == 1 else 4)


def build_block(kind: str, d: int, suffix: str, verify_up_to: int | None, field) -> BlockIdeal:
    if kind == "constant1":
        b = block_constant1(suffix)
    elif kind == "typeI":
        b = block_type1(d, suffix)
    else:
        return block_type2(d, suffix, verify_up_to, field)
    if verify_up_to:
        _verify_block(b, verify_up_to, field)
    return b


@dataclass
class SynthesisResult:
    spec: DepthFunctionSpec
    ring: PolyRing
    ideal: MonomialIdeal
    blocks: list[BlockIdeal]
    table: list[tuple[int, int, int]] = field(default_factory=list)  # (n, expected, computed)
    report: VerificationReport | None = None

    def to_obj(self) -> dict:
        from .ring import ideal_to_obj

        return {
            "ideal": ideal_to_obj(self.ideal),
            "blocks": [b.label for b in self.blocks],
            "verification": [{"n": n, "expected": e, "computed": c} for n, e, c in self.table],
            "passed": None if self.report is None else self.report.passed,
        }


def synthesize_depth_ideal(f: DepthFunctionSpec, verify_up_to: int | None = None, field=None,
                           budget: int = DEFAULT_BUDGET, check_folds: bool = True) -> SynthesisResult:
    """Build Q with depth S/Q^n = f(n), verifying n <= verify_up_to when given.

    Blocks get fresh variables with suffix 1, 2, ... and are glued left to
    right, always along the first variable of each ring.  The ring size is
    checked against ``budget`` before anything is computed.
    """
    kinds = decompose_profile(f)
    if not kinds:
        raise ValueError("the zero function is realised by no proper ideal in this construction; "
                         "use any m-primary ideal such as (x)")
    nvars = sum(block_variable_count(k, d) for k, d in kinds) - (len(kinds) - 1)
    if nvars > budget:
        raise BudgetExceededError(f"synthesis needs {nvars} variables, budget is {budget}")
    N = verify_up_to
    rep = VerificationReport("synth-depth", inputs=[str(f)], characteristic=as_field(field).p) \
        if N else None
    blocks = [build_block(k, d, str(i + 1), N, field) for i, (k, d) in enumerate(kinds)]
    if rep:
        for b in blocks:
            rep.check(f"block {b.label} profile verified for n <= {N}", b.verified_up_to >= N,
                      provenance=b.provenance)
    S, Q = blocks[0].ideal.ring, blocks[0].ideal
    acc_profile = blocks[0].claimed_profile
    acc_computed = depth_profile(Q, N, field) if (N and check_folds and len(blocks) > 1) else None
    for b in blocks[1:]:
        S, Q = glue_additive(Q, S.vars[0], b.ideal, b.ideal.ring.vars[0])
        acc_profile = acc_profile + b.claimed_profile
        if N and check_folds and b is not blocks[-1]:
            got = depth_profile(Q, N, field)
            block_prof = depth_profile(b.ideal, N, field)
            rep.check(f"fold with {b.label}: profiles add",
                      got == [a + c for a, c in zip(acc_computed, block_prof)], computed=got)
            acc_computed = got
    result = SynthesisResult(f, S, Q, blocks, report=rep)
    if N:
        got = depth_profile(Q, N, field)
        result.table = [(n, f(n), got[n - 1]) for n in range(1, N + 1)]
        if check_folds and len(blocks) > 1:
            last = depth_profile(blocks[-1].ideal, N, field)
            rep.check(f"fold with {blocks[-1].label}: profiles add",
                      got == [a + c for a, c in zip(acc_computed, last)], computed=got)
        rep.check(f"depth S/Q^n = f(n) for n <= {N}", all(e == c for _, e, c in result.table),
                  table=result.table)
        rep.finish()
    return result


def ratliff_ideal(gamma, verify: bool = True, field=None, budget: int = DEFAULT_BUDGET):
    """Q whose powers have the maximal ideal associated exactly for n in gamma."""
    gamma = sorted({int(g) for g in gamma})
    if not gamma or gamma[0] < 1:
        raise ValueError("gamma must be a nonempty set of positive integers")
    top = gamma[-1]
    f = DepthFunctionSpec(tuple(0 if n in gamma else 1 for n in range(1, top + 1)), 1)
    N = top + 2
    res = synthesize_depth_ideal(f, verify_up_to=N if verify else None, field=field, budget=budget)
    rep = VerificationReport("ratliff", inputs=[res.ideal, gamma],
                             characteristic=as_field(field).p)
    if verify:
        m = maximal_prime(res.ring)
        rows = []
        for n in range(1, N + 1):
            Qn = power(res.ideal, n)
            in_ass = m in associated_primes(Qn, method="grid")
            socle = maximal_ideal_is_associated(Qn)
            depth0 = res.table[n - 1][2] == 0
            rows.append((n, n in gamma, in_ass, socle, depth0))
            rep.check(f"n={n}: m in Ass(Q^n) <=> depth 0 <=> n in Gamma",
                      in_ass == socle == depth0 == (n in gamma),
                      in_gamma=n in gamma, m_associated=in_ass, socle_test=socle, depth_zero=depth0)
        rep.extend(res.report, prefix="synth: ")
        rep.finish()
    return res, rep


def _prime_in(ring: PolyRing, P: MonomialPrime, rename: dict[str, str]) -> MonomialPrime:
    return MonomialPrime(ring, [ring.index(rename.get(P.ring.vars[j], P.ring.vars[j])) for j in P.support])


def verify_ass_control(I: MonomialIdeal, x: str, J: MonomialIdeal, y: str, n: int = 1) -> VerificationReport:
    """Ass of the glued ideal (I^n J^n with y -> x) against its predicted description."""
    In, Jn = power(I, n), power(J, n)
    S, Q = glue_additive(In, x, Jn, y)
    rep = VerificationReport("ass-control", inputs=[I, J, x, y, n])
    computed = set(associated_primes(Q))
    ren = {y: x}
    assI, assJ = associated_primes(In), associated_primes(Jn)
    predicted = {_prime_in(S, p, {}) for p in assI} | {_prime_in(S, q, ren) for q in assJ}
    xi, yi = I.ring.index(x), J.ring.index(y)
    for p in assI:
        if xi not in p.support:
            continue
        for q in assJ:
            if yi in q.support:
                predicted.add(MonomialPrime(S, _prime_in(S, p, {}).support | _prime_in(S, q, ren).support))
    rep.check("Ass(Q) = {p} ∪ {q} ∪ {p+q : x in p, y in q}", computed == predicted,
              computed=sorted(computed), predicted=sorted(predicted))
    return rep.finish()
