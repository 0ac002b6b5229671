"""The ``mi`` command.

Exit codes: 0 success or all checks passed, 2 a verification failed (the
report is printed as JSON), 3 invalid input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from . import ring
from .corpus import LEFT_VARS, RIGHT_VARS, random_ideal
from .decomposition import ImproperIdealError, ass_of_power, associated_primes, irreducible_decomposition
from .decomposition import symbolic_power, verify_ass_sum
from .depthsynth import DepthFunctionSpec, ratliff_ideal, synthesize_depth_ideal, verify_ass_control
from .filtrations import KINDS
from .homology import ContainmentError, MonomialModule, betti_table, depth_quotient, regularity, tor_map_is_zero
from .linalg import DEFAULT_CHARACTERISTIC, FieldSpec
from .localcoh import ResourceLimitError
from .verify import verify_binomial_theorem, verify_depth_reg_formulas, verify_staged_splittings
from .waldschmidt import NotSquarefreeError, waldschmidt_exact_squarefree, waldschmidt_sequence

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 2, 3

VERIFY_PARTS = {
    "depth-formula": None,
    "main-equality": ["main-equality"],
    "qn-quotient": ["qn-quotient"],
    "cm": ["cm"],
    "equality-criterion": ["equality-criterion"],
    "linear": ["linear"],
}
IDENTITIES = ["binomial", *VERIFY_PARTS, "ass-sum", "ass-control", "betti-splitting"]


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise InputError(message)


def _load(path: str) -> ring.MonomialIdeal:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return ring.from_json(text)
    except ring.IdealFormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _field(args) -> FieldSpec:
    try:
        return FieldSpec(args.char)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _emit_ideal(args, I: ring.MonomialIdeal, out=None):
    text = ring.to_m2(I) if args.m2 else ring.to_json(I)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def _emit(args, obj, text: str):
    print(json.dumps(obj, sort_keys=True) if args.json else text)


def _primes_obj(primes) -> list[list[str]]:
    return sorted(P.names() for P in primes)


# -- commands --------------------------------------------------------------------


def cmd_normalize(args):
    _emit_ideal(args, _load(args.file), args.output)
    return EXIT_OK


def cmd_op(args):
    I = _load(args.file)
    if args.operation == "power":
        if args.n is None:
            raise InputError("op power needs -n")
        res = ring.power(I, args.n)
    else:
        if args.other is None:
            raise InputError(f"op {args.operation} needs a second ideal file")
        J = _load(args.other)
        if I.ring != J.ring:
            raise InputError("both ideals must live in the same ring")
        fn = {"sum": ring.ideal_sum, "product": ring.product, "intersect": ring.intersect,
              "colon": ring.colon}[args.operation]
        res = fn(I, J)
    _emit_ideal(args, res, args.output)
    return EXIT_OK


def cmd_decompose(args):
    I = _load(args.file)
    comps = irreducible_decomposition(I)
    objs = [ring.ideal_to_obj(c.as_ideal()) for c in comps]
    text = "\n".join(ring.to_m2(c.as_ideal()) for c in comps)
    _emit(args, {"components": objs}, text)
    return EXIT_OK


def cmd_ass(args):
    I = _load(args.file)
    primes = ass_of_power(I, args.power) if args.power else associated_primes(I)
    obj = _primes_obj(primes)
    _emit(args, obj, "\n".join("(" + ",".join(p) + ")" for p in obj))
    return EXIT_OK


def cmd_symbolic(args):
    _emit_ideal(args, symbolic_power(_load(args.file), args.n), args.output)
    return EXIT_OK


def cmd_betti(args):
    I = _load(args.file)
    if args.module:
        V = _load(args.module)
        if V.ring != I.ring:
            raise InputError("module numerator and denominator must share a ring")
        M = MonomialModule(I, V)
    else:
        M = MonomialModule.quotient(I)
    T = betti_table(M, _field(args))
    _emit(args, T.to_obj(), T.pretty())
    return EXIT_OK


def cmd_depth(args):
    I = _load(args.file)
    chars = [args.char] + ([args.compare_char] if args.compare_char else [])
    vals = {}
    for p in chars:
        try:
            vals[p] = depth_quotient(I, FieldSpec(p), method=args.method)
        except ValueError as exc:
            raise InputError(str(exc)) from None
    differ = len(set(vals.values())) > 1
    obj = {"depth": {str(p): v for p, v in vals.items()}}
    lines = [f"depth S/I = {v}  (char {p})" for p, v in vals.items()]
    if len(vals) > 1:
        obj["differs"] = differ
        lines.append("DIFFERENT across characteristics" if differ else "same in both characteristics")
    _emit(args, obj, "\n".join(lines))
    return EXIT_OK


def cmd_reg(args):
    I = _load(args.file)
    M = MonomialModule.quotient(I)
    if M.is_zero:
        val = None
    else:
        val = regularity(M, _field(args))
    _emit(args, {"reg": val}, f"reg S/I = {'-inf' if val is None else val}")
    return EXIT_OK


def cmd_torzero(args):
    U, V = _load(args.u_file), _load(args.v_file)
    if U.ring != V.ring:
        raise InputError("both ideals must live in the same ring")
    try:
        res = tor_map_is_zero(V, U, _field(args))
    except ContainmentError as exc:
        raise InputError(str(exc)) from None
    obj = {"zero": res.zero, "nonzero_at": [[i, list(b)] for i, b in res.nonzero_at]}
    _emit(args, obj, "Tor map is zero" if res.zero else f"Tor map is nonzero at {res.nonzero_at[:5]}")
    return EXIT_OK


def _pair(args):
    if args.I and args.J:
        return _load(args.I), _load(args.J)
    if args.I or args.J:
        raise InputError("give both --I and --J, or neither to draw a random pair from --seed")
    rng = random.Random(args.seed)
    return random_ideal(rng, LEFT_VARS), random_ideal(rng, RIGHT_VARS)


def cmd_verify(args):
    I, J = _pair(args)
    p = _field(args)
    n = args.n
    ident = args.identity
    if n < 1:
        raise InputError("-n must be >= 1")
    if ident == "binomial":
        rep = verify_binomial_theorem(I, J, n, args.filtration or "symbolic")
    elif ident in VERIFY_PARTS:
        kinds = [args.filtration] if args.filtration else KINDS
        rep = verify_depth_reg_formulas(I, J, n, p, kinds=kinds, parts=VERIFY_PARTS[ident])
    elif ident == "ass-sum":
        rep = verify_ass_sum(I, J)
    elif ident == "ass-control":
        x = args.x or I.ring.vars[0]
        y = args.y or J.ring.vars[0]
        rep = verify_ass_control(I, x, J, y, n)
    else:
        rep = verify_staged_splittings(I, J, n, p, args.filtration or "symbolic")
    if args.json or not rep.passed:
        print(rep.to_json())
    else:
        print("\n".join(rep.summary_lines()))
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_waldschmidt(args):
    I = _load(args.file)
    seq = waldschmidt_sequence(I, args.max_m)
    obj = {"estimates": [str(q) for q in seq]}
    lines = [f"m <= {m}: {q}" for m, q in enumerate(seq, 1)]
    if args.exact_squarefree:
        val = waldschmidt_exact_squarefree(I)
        obj["exact"] = str(val)
        lines.append(f"exact: {val}")
        if any(q < val for q in seq):
            obj["consistent"] = False
            print(json.dumps(obj, sort_keys=True))
            return EXIT_FAIL
    _emit(args, obj, "\n".join(lines))
    return EXIT_OK


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise InputError(f"expected comma-separated integers, got {text!r}") from None


def _synth_output(args, res, rep):
    obj = res.to_obj()
    if rep is not None:
        obj["report"] = rep.to_obj()
    text = json.dumps(obj, sort_keys=True, indent=2)
    if args.output:
        Path(args.output).write_text(text + "\n")
    if args.json or not args.output:
        print(text)
    else:
        for n, e, c in res.table:
            print(f"n={n}: expected {e}, computed {c}")
        print(f"wrote {args.output}")
    return EXIT_OK if rep is None or rep.passed else EXIT_FAIL


def cmd_synth(args):
    try:
        f = DepthFunctionSpec(tuple(_int_list(args.seq)), args.tail)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    res = synthesize_depth_ideal(f, verify_up_to=args.verify_up_to, field=_field(args), budget=args.budget)
    return _synth_output(args, res, res.report)


def cmd_ratliff(args):
    gamma = _int_list(args.set)
    try:
        res, rep = ratliff_ideal(gamma, verify=args.verify, field=_field(args), budget=args.budget)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    return _synth_output(args, res, rep if args.verify else None)


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    # global flags are accepted before or after the command; the copy on the
    # subcommands must not reset values given before it
    def common(suppress: bool) -> argparse.ArgumentParser:
        c = _Parser(add_help=False)
        d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
        c.add_argument("--char", type=int, default=d(DEFAULT_CHARACTERISTIC), help="field characteristic")
        c.add_argument("--json", action="store_true", default=d(False), help="machine-readable output")
        c.add_argument("--seed", type=int, default=d(0), help="seed for randomly drawn inputs")
        c.add_argument("--m2", action="store_true", default=d(False), help="print ideals in Macaulay2 syntax")
        return c

    sub_common = common(True)
    ap = _Parser(prog="mi", description="Exact computations with monomial ideals.", parents=[common(False)])
    sub = ap.add_subparsers(dest="command", parser_class=_Parser, required=True)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_, parents=[sub_common])
        p.set_defaults(func=fn)
        return p

    p = add("normalize", cmd_normalize, "print the minimal generators of an ideal file")
    p.add_argument("file")
    p.add_argument("-o", "--output")

    p = add("op", cmd_op, "ideal arithmetic")
    p.add_argument("operation", choices=["sum", "product", "intersect", "colon", "power"])
    p.add_argument("file")
    p.add_argument("other", nargs="?")
    p.add_argument("-n", type=int)
    p.add_argument("-o", "--output")

    p = add("decompose", cmd_decompose, "irreducible decomposition")
    p.add_argument("file")

    p = add("ass", cmd_ass, "associated primes of S/I (or S/I^n with --power)")
    p.add_argument("file")
    p.add_argument("--power", type=int)

    p = add("symbolic", cmd_symbolic, "n-th symbolic power")
    p.add_argument("n", type=int)
    p.add_argument("file")
    p.add_argument("-o", "--output")

    p = add("betti", cmd_betti, "multigraded Betti table of S/I, or of I/V with --module")
    p.add_argument("file")
    p.add_argument("--module", metavar="V_FILE")

    p = add("depth", cmd_depth, "depth of S/I")
    p.add_argument("file")
    p.add_argument("--compare-char", type=int, help="also compute in this characteristic and compare")
    p.add_argument("--method", choices=["auto", "betti", "localcoh"], default="auto")

    p = add("reg", cmd_reg, "Castelnuovo-Mumford regularity of S/I")
    p.add_argument("file")

    p = add("torzero", cmd_torzero, "is Tor(V -> U, k) zero for V inside U")
    p.add_argument("u_file")
    p.add_argument("v_file")

    p = add("verify", cmd_verify, "check an identity on concrete ideals")
    p.add_argument("identity", choices=IDENTITIES)
    p.add_argument("--I", dest="I")
    p.add_argument("--J", dest="J")
    p.add_argument("-n", type=int, default=1)
    p.add_argument("--filtration", choices=KINDS)
    p.add_argument("--x", help="glued variable of I (ass-control)")
    p.add_argument("--y", help="glued variable of J (ass-control)")

    p = add("waldschmidt", cmd_waldschmidt, "Waldschmidt constant estimates")
    p.add_argument("file")
    p.add_argument("--exact-squarefree", action="store_true")
    p.add_argument("--max-m", type=int, default=6)

    p = add("synth-depth", cmd_synth, "build an ideal with a prescribed depth function")
    p.add_argument("--seq", required=True, help="values f(1),...,f(L)")
    p.add_argument("--tail", type=int, required=True, help="value of f(n) for n > L")
    p.add_argument("--verify-up-to", type=int)
    p.add_argument("--budget", type=int, default=14, help="maximum number of variables")
    p.add_argument("-o", "--output")

    p = add("ratliff", cmd_ratliff, "ideal whose powers have the maximal ideal associated exactly on a set")
    p.add_argument("--set", required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--budget", type=int, default=14)
    p.add_argument("-o", "--output")
    return ap


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except InputError as exc:
        print(f"mi: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, KeyError, ImproperIdealError, NotSquarefreeError, ResourceLimitError) as exc:
        print(f"mi: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SystemExit as exc:  # --help
        return int(exc.code or 0)


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
