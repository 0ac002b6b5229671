"""Mechanical checks of the binomial-expansion and depth/regularity identities.

Every routine returns a :class:`VerificationReport`; nothing here raises on a
failed identity.  Depth of the zero module is +inf and its regularity -inf,
so zero modules drop out of the minima and maxima.
"""

from __future__ import annotations

import math
from functools import lru_cache

from .decomposition import dim_quotient, minimal_primes, symbolic_power
from .filtrations import KINDS, BinomialSum, FiltrationSpec, successive_quotient, tensor_module
from .homology import (
    BettiTable,
    MonomialModule,
    betti_splitting_check,
    betti_table,
    dstar,
    dstar_containment,
    tor_map_is_zero,
)
from .linalg import as_field
from .report import VerificationReport
from .ring import (
    MonomialIdeal,
    extend,
    first_non_member,
    ideal_eq,
    ideal_sum,
    intersect,
    is_subset,
    join_rings,
    power,
    product,
    unit_ideal,
    variables_ideal,
)

INF = math.inf


# -- cached invariants ---------------------------------------------------------


@lru_cache(maxsize=4096)
def _table(M: MonomialModule, p: int) -> BettiTable:
    return betti_table(M, p)


def mdepth(M: MonomialModule, p: int) -> float:
    return INF if M.is_zero else M.ring.nvars - _table(M, p).pd


def mreg(M: MonomialModule, p: int) -> float:
    return -INF if M.is_zero else _table(M, p).reg


def qdepth(I: MonomialIdeal, p: int) -> float:
    return mdepth(MonomialModule.quotient(I), p)


def qreg(I: MonomialIdeal, p: int) -> float:
    return mreg(MonomialModule.quotient(I), p)


def ireg(I: MonomialIdeal, p: int) -> float:
    """Regularity of I as a module; the unit ideal has regularity 0."""
    return mreg(MonomialModule.of_ideal(I), p)


def is_cm(M: MonomialModule, p: int) -> bool:
    return M.is_zero or mdepth(M, p) == M.dim()


def _joined(I: MonomialIdeal, J: MonomialIdeal):
    R = join_rings(I.ring, J.ring)
    return R, extend(I, I.ring, R), extend(J, J.ring, R)


def _num(x):
    return x if x in (INF, -INF) else int(x)


# -- binomial expansion ----------------------------------------------------------


def verify_binomial_theorem(I: MonomialIdeal, J: MonomialIdeal, n: int, kind: str = "symbolic") -> VerificationReport:
    """(I+J)^(n) computed directly versus the binomial sum of the two filtrations.

    ``kind`` is "symbolic" (decomposition route on the left) or "ordinary"
    (plain power on the left).
    """
    if kind not in ("symbolic", "ordinary"):
        raise ValueError(f"the binomial expansion is checked for symbolic or ordinary powers, not {kind!r}")
    R, Ie, Je = _joined(I, J)
    rep = VerificationReport("binomial", inputs=[I, J, n, kind])
    K = ideal_sum(Ie, Je)
    lhs = symbolic_power(K, n) if kind == "symbolic" else power(K, n)
    rhs = BinomialSum(FiltrationSpec(I, kind), FiltrationSpec(J, kind)).member(n)
    ok = ideal_eq(lhs, rhs)
    tag = f"({n})" if kind == "symbolic" else f"{n}"
    rep.check(f"(I+J)^{tag} = sum over i+j={n} of I_i J_j", ok,
              witness_lhs_only=first_non_member(lhs, rhs), witness_rhs_only=first_non_member(rhs, lhs),
              lhs=lhs, rhs=rhs)
    return rep.finish()


# -- depth / regularity formulas ----------------------------------------------


def _first_bound_terms(dA, dB, n, plus=1):
    """Right-hand side terms of the binomial-product bound, as a list."""
    terms = []
    for i in range(1, n):
        terms.append(dA(n - i) + dB(i) + plus)
    for j in range(1, n + 1):
        terms.append(dA(n - j + 1) + dB(j))
    return terms


def _filtration_tor_vanishing(F: FiltrationSpec, n: int) -> bool:
    """Sufficient condition: ∂*(F_k) ⊆ F_{k-1} for k <= n."""
    return all(is_subset(dstar(F.member(k)), F.member(k - 1)) for k in range(1, n + 1))


def check_binomial_product_bounds(rep: VerificationReport, BS: BinomialSum, n: int, p: int, label: str):
    """Depth lower bound / reg upper bound for R/Q_n; equality when both
    filtrations satisfy the ∂* criterion, otherwise only the gap is recorded."""
    L, Rt = BS.left, BS.right
    Qn = BS.member(n)
    d = qdepth(Qn, p)
    r = qreg(Qn, p)
    dterms = _first_bound_terms(lambda k: qdepth(L.member(k), p), lambda k: qdepth(Rt.member(k), p), n)
    rterms = _first_bound_terms(lambda k: qreg(L.member(k), p), lambda k: qreg(Rt.member(k), p), n)
    dbound, rbound = min(dterms), max(rterms)
    rep.check(f"{label}: depth R/Q_{n} >= bound", d >= dbound, lhs=_num(d), bound=_num(dbound))
    rep.check(f"{label}: reg R/Q_{n} <= bound", r <= rbound, lhs=_num(r), bound=_num(rbound))
    tv = _filtration_tor_vanishing(L, n) and _filtration_tor_vanishing(Rt, n)
    if tv:
        rep.check(f"{label}: depth R/Q_{n} = bound", d == dbound, lhs=_num(d), bound=_num(dbound))
        rep.check(f"{label}: reg R/Q_{n} = bound", r == rbound, lhs=_num(r), bound=_num(rbound))
    else:
        rep.note(f"{label}: n={n} filtrations not certified Tor-vanishing; "
                 f"depth gap {_num(d - dbound)}, reg gap {_num(rbound - r)}")


def check_quotient_formula(rep: VerificationReport, BS: BinomialSum, n: int, p: int, label: str,
                           betti_sum: bool = True):
    """depth/reg of Q_n/Q_{n+1} against the tensor decomposition."""
    L, Rt = BS.left, BS.right
    M = MonomialModule(BS.member(n), BS.member(n + 1))
    parts = [(successive_quotient(L, i), successive_quotient(Rt, n - i)) for i in range(n + 1)]
    dpred = min(mdepth(a, p) + mdepth(b, p) for a, b in parts)
    rpred = max(mreg(a, p) + mreg(b, p) for a, b in parts)
    d, r = mdepth(M, p), mreg(M, p)
    rep.check(f"{label}: depth Q_{n}/Q_{n + 1} = min(depth + depth)", d == dpred, lhs=_num(d), rhs=_num(dpred))
    rep.check(f"{label}: reg Q_{n}/Q_{n + 1} = max(reg + reg)", r == rpred, lhs=_num(r), rhs=_num(rpred))
    if betti_sum:
        total: dict = {}
        for a, b in parts:
            T = tensor_module(a, b)
            if T.is_zero:
                continue
            for k, v in _table(T, p).entries.items():
                total[k] = total.get(k, 0) + v
        got = {} if M.is_zero else _table(M, p).entries
        rep.check(f"{label}: Betti table of Q_{n}/Q_{n + 1} is the sum over tensor summands", got == total)


def verify_depth_reg_formulas(I: MonomialIdeal, J: MonomialIdeal, n: int, field=None,
                              kinds=KINDS, parts=None) -> VerificationReport:
    """Depth and regularity identities for symbolic powers of I + J and for binomial sums.

    ``parts`` restricts the run to a subset of: "monomial", "main-equality",
    "qn-quotient", "equality-criterion", "cm", "linear", "consecutive-quotient".
    """
    p = as_field(field).p
    wanted = set(parts) if parts else {"monomial", "main-equality", "qn-quotient", "equality-criterion",
                                      "cm", "linear", "consecutive-quotient"}
    rep = VerificationReport("depth-reg-formulas", inputs=[I, J, n], characteristic=p)
    R, Ie, Je = _joined(I, J)
    K = ideal_sum(Ie, Je)
    FI, FJ = FiltrationSpec(I, "symbolic"), FiltrationSpec(J, "symbolic")
    sym = BinomialSum(FI, FJ)

    if "monomial" in wanted:
        check_binomial_product_bounds(rep, sym, n, p, "symbolic")
        # the two routes to (I+J)^(n) agree, so the bound really is about (I+J)^(n)
        rep.check("symbolic: Q_n = (I+J)^(n)", ideal_eq(sym.member(n), symbolic_power(K, n)))

    if "main-equality" in wanted:
        check_quotient_formula(rep, sym, n, p, "symbolic", betti_sum=False)

    if "qn-quotient" in wanted:
        for kind in kinds:
            FL, FR = FiltrationSpec(I, kind), FiltrationSpec(J, kind)
            bad = FL.axiom_violations(n + 1) + FR.axiom_violations(n + 1)
            if bad:
                rep.note(f"{kind}: not a filtration for these inputs ({'; '.join(bad)}); skipped")
                continue
            BS = BinomialSum(FL, FR)
            check_quotient_formula(rep, BS, n, p, kind)
            if kind != "symbolic":
                check_binomial_product_bounds(rep, BS, n, p, kind)

    if "equality-criterion" in wanted:
        hyp = all(not ideal_eq(power(X, t), power(X, t + 1)) for X in (I, J) for t in range(n))
        rep.check("equality criterion hypothesis I^t != I^(t+1), J^t != J^(t+1)", hyp)
        lhs = ideal_eq(symbolic_power(K, n), power(K, n))
        rhs = all(ideal_eq(symbolic_power(X, t), power(X, t)) for X in (I, J) for t in range(1, n + 1))
        rep.check("(I+J)^(n) = (I+J)^n iff I^(t) = I^t and J^(t) = J^t for t <= n",
                  lhs == rhs, lhs=lhs, rhs=rhs)

    if "cm" in wanted:
        lower = unit_ideal(R) if n == 1 else symbolic_power(K, n - 1)
        c1 = is_cm(MonomialModule(lower, symbolic_power(K, n)), p)
        c2 = all(qdepth(symbolic_power(K, i), p) == dim_quotient(symbolic_power(K, i)) for i in range(1, n + 1))
        c3 = all(qdepth(symbolic_power(X, i), p) == dim_quotient(symbolic_power(X, i))
                 for X in (I, J) for i in range(1, n + 1))
        c4 = all(is_cm(successive_quotient(F, i), p) for F in (FI, FJ) for i in range(n))
        rep.check("Cohen-Macaulay conditions (i)-(iv) agree", c1 == c2 == c3 == c4,
                  quotient_module=c1, quotient_rings=c2, factors=c3, factor_quotients=c4)

    if "linear" in wanted:
        check_linear(rep, I, J, n, p)

    if "consecutive-quotient" in wanted:
        for X in (I, J):
            check_symbolic_quotient(rep, X, n, p)
    return rep.finish()


def linear_partner(J: MonomialIdeal) -> MonomialIdeal:
    """The ideal of variables occurring in J (a linear ideal in J's ring)."""
    support = sorted({j for g in J.gens for j, e in enumerate(g) if e})
    return variables_ideal(J.ring, support)


def check_linear(rep: VerificationReport, I: MonomialIdeal, J: MonomialIdeal, n: int, p: int):
    L = linear_partner(J)
    R, Ie, Le = _joined(I, L)
    Kn = symbolic_power(ideal_sum(Ie, Le), n)
    dimB = dim_quotient(L)
    d = qdepth(Kn, p)
    dpred = min(qdepth(symbolic_power(I, i), p) for i in range(1, n + 1)) + dimB
    r = qreg(Kn, p)
    rpred = max(qreg(symbolic_power(I, i), p) - i for i in range(1, n + 1)) + n
    rep.check("linear: depth R/(I+J)^(n) = min depth A/I^(i) + dim B/J", d == dpred,
              lhs=_num(d), rhs=_num(dpred), linear=L)
    rep.check("linear: reg R/(I+J)^(n) = max(reg A/I^(i) - i) + n", r == rpred, lhs=_num(r), rhs=_num(rpred))


def check_symbolic_quotient(rep: VerificationReport, I: MonomialIdeal, n: int, p: int):
    """depth/reg of I^(n-1)/I^(n) from those of its two ends."""
    lower = unit_ideal(I.ring) if n == 1 else symbolic_power(I, n - 1)
    upper = symbolic_power(I, n)
    M = MonomialModule(lower, upper)
    d, dpred = mdepth(M, p), min(qdepth(lower, p) + 1, qdepth(upper, p))
    r, rpred = mreg(M, p), max(ireg(lower, p), ireg(upper, p) - 1)
    tag = ",".join(I.ring.vars)
    rep.check(f"[{tag}] depth I^(n-1)/I^(n) = min(depth A/I^(n-1) + 1, depth A/I^(n))", d == dpred,
              lhs=_num(d), rhs=_num(dpred))
    rep.check(f"[{tag}] reg I^(n-1)/I^(n) = max(reg I^(n-1), reg I^(n) - 1)", r == rpred,
              lhs=_num(r), rhs=_num(rpred))


def verify_tensor_depth_reg(Ma: MonomialModule, Mb: MonomialModule, field=None) -> VerificationReport:
    p = as_field(field).p
    rep = VerificationReport("tensor-depth-reg", inputs=[Ma.U, Ma.V, Mb.U, Mb.V], characteristic=p)
    T = tensor_module(Ma, Mb)
    d, dpred = mdepth(T, p), mdepth(Ma, p) + mdepth(Mb, p)
    r, rpred = mreg(T, p), mreg(Ma, p) + mreg(Mb, p)
    rep.check("depth(Ma ⊗ Mb) = depth Ma + depth Mb", d == dpred, lhs=_num(d), rhs=_num(dpred))
    rep.check("reg(Ma ⊗ Mb) = reg Ma + reg Mb", r == rpred, lhs=_num(r), rhs=_num(rpred))
    return rep.finish()


def verify_product_depth_reg(I: MonomialIdeal, J: MonomialIdeal, field=None) -> VerificationReport:
    """depth R/IJ = depth A/I + depth B/J + 1, and the same shape for reg."""
    p = as_field(field).p
    R, Ie, Je = _joined(I, J)
    IJ = product(Ie, Je)
    rep = VerificationReport("product-depth-reg", inputs=[I, J], characteristic=p)
    d, dpred = qdepth(IJ, p), qdepth(I, p) + qdepth(J, p) + 1
    r, rpred = qreg(IJ, p), qreg(I, p) + qreg(J, p) + 1
    rep.check("depth R/IJ = depth A/I + depth B/J + 1", d == dpred, lhs=_num(d), rhs=_num(dpred))
    rep.check("reg R/IJ = reg A/I + reg B/J + 1", r == rpred, lhs=_num(r), rhs=_num(rpred))
    rep.check("IJ = I ∩ J", ideal_eq(IJ, intersect(Ie, Je)))
    return rep.finish()


# -- Tor-vanishing -----------------------------------------------------------------


def verify_tor_vanishing(I: MonomialIdeal, n_max: int, field=None) -> VerificationReport:
    """∂*(I^(n)) ⊆ I^(n-1) and Tor(I^(n) -> I^(n-1)) = 0 for n <= n_max."""
    p = as_field(field).p
    rep = VerificationReport("tor-vanishing", inputs=[I, n_max], characteristic=p)
    for n in range(1, n_max + 1):
        rep.check(f"∂*(I^({n})) ⊆ I^({n - 1})", dstar_containment(I, n))
        lower = unit_ideal(I.ring) if n == 1 else symbolic_power(I, n - 1)
        res = tor_map_is_zero(symbolic_power(I, n), lower, p)
        rep.check(f"Tor(I^({n}) -> I^({n - 1})) = 0", res.zero, nonzero_at=res.nonzero_at[:5])
    return rep.finish()


def verify_staged_splittings(I: MonomialIdeal, J: MonomialIdeal, n: int, field=None,
                             kind: str = "symbolic") -> VerificationReport:
    """Each P_{n,t} = P_{n,t-1} + I_{n-t} J_t is a Betti splitting."""
    p = as_field(field).p
    BS = BinomialSum(FiltrationSpec(I, kind), FiltrationSpec(J, kind))
    rep = VerificationReport("staged-splittings", inputs=[I, J, n, kind], characteristic=p)
    for t in range(1, n + 1):
        prev = BS.staged(n, t - 1)
        term = BS.term(n - t, t)
        P = BS.staged(n, t)
        rep.check(f"P_{{n,t-1}} ∩ I_(n-t)J_t = I_(n-t+1)J_t at t={t}",
                  ideal_eq(intersect(prev, term),
                           BS.term(n - t + 1, t)))
        sub = betti_splitting_check(P, prev, term, p)
        rep.check(f"P_{{{n},{t}}} is a Betti splitting", getattr(sub, "splitting", False))
        rep.extend(sub, prefix=f"t={t}: ")
    return rep.finish()


def verify_min_primes_of_sum(I: MonomialIdeal, J: MonomialIdeal) -> VerificationReport:
    """dim R/(I+J) = dim A/I + dim B/J."""
    R, Ie, Je = _joined(I, J)
    rep = VerificationReport("dim-additivity", inputs=[I, J])
    K = ideal_sum(Ie, Je)
    rep.check("dim R/(I+J) = dim A/I + dim B/J", dim_quotient(K) == dim_quotient(I) + dim_quotient(J),
              lhs=dim_quotient(K), rhs=dim_quotient(I) + dim_quotient(J))
    rep.check("Min(I+J) count = |Min I| * |Min J|",
              len(minimal_primes(K)) == len(minimal_primes(I)) * len(minimal_primes(J)))
    return rep.finish()


__all__ = [
    "check_binomial_product_bounds",
    "check_quotient_formula",
    "linear_partner",
    "mdepth",
    "mreg",
    "qdepth",
    "qreg",
    "verify_binomial_theorem",
    "verify_depth_reg_formulas",
    "verify_min_primes_of_sum",
    "verify_product_depth_reg",
    "verify_staged_splittings",
    "verify_tensor_depth_reg",
    "verify_tor_vanishing",
]
