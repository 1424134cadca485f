"""Command-line interface: ``cubix <area> <verb> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or input-format error.
Payloads go to stdout as sorted-key JSON; errors go to stderr as JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bernoulli import bernoulli, irregular_pairs, pairs_to_csv
from .caps import CapExceeded
from .cn import cn_structure
from .cubic import NotCubic, is_cubic, induce, theta_cocycle
from .ext import CnpmDataError, cnpm_check, vanishing_ext
from .groups import FiniteAbelianGroup
from .group_ring import NotAUnit
from .invariants import KTable, Mode, Undetermined, VandiverData, annihilator_bounds
from .serialize import FormatError, dumps, element_from_json
from .sym import build_phi, flat, phi_closed_form, sym_to_laurent, taylor_chain, verify_identities

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class VerificationFailure(Exception):
    def __init__(self, message: str, payload=None) -> None:
        super().__init__(message)
        self.payload = payload


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(message)


def _emit_error(kind: str, message: str) -> None:
    sys.stderr.write(json.dumps({"error": kind, "message": message}, sort_keys=True) + "\n")


def _load_json(path: str):
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path} is not valid JSON: {exc}") from None


def _load_element(path: str):
    return element_from_json(_load_json(path))


def _group(text: str) -> FiniteAbelianGroup:
    try:
        orders = tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad group {text!r}; expected e.g. 2,2") from None
    if not orders or any(n < 1 for n in orders):
        raise argparse.ArgumentTypeError(f"bad group {text!r}")
    return FiniteAbelianGroup(orders)


# ---------------------------------------------------------------- handlers

def _cubic_check(args):
    c = _load_element(args.file)
    if c.arity != args.arity:
        raise FormatError(f"element has arity {c.arity}, --arity is {args.arity}")
    if args.arity < 2:
        raise FormatError("arity must be >= 2")
    rep = is_cubic(c, args.arity)
    return rep, EXIT_OK if rep.ok else EXIT_FAIL


def _cubic_theta(args):
    u = _load_element(args.unit)
    if u.arity != 1:
        raise FormatError("the unit must have arity 1")
    if args.arity < 2:
        raise FormatError("arity must be >= 2")
    try:
        return theta_cocycle(u, args.arity), EXIT_OK
    except NotAUnit as exc:
        raise VerificationFailure(f"u is not a unit: {exc}") from None
    except ValueError as exc:
        raise VerificationFailure(str(exc)) from None


def _cubic_induce(args):
    return induce(_load_element(args.file)), EXIT_OK


def _cubic_flat(args):
    return flat(_load_element(args.file)), EXIT_OK


def _cubic_taylor(args):
    return taylor_chain(_load_element(args.file)), EXIT_OK


def _sym_phi(args):
    if args.n < 2:
        raise FormatError("--n must be >= 2")
    if args.verify:
        equal = sym_to_laurent(build_phi(args.n)) == phi_closed_form(args.n)
        return {"n": args.n, "tensor_form_matches_closed_form": equal}, EXIT_OK if equal else EXIT_FAIL
    if args.closed_form:
        return phi_closed_form(args.n), EXIT_OK
    return build_phi(args.n), EXIT_OK


def _sym_identities(args):
    if args.n < 2:
        raise FormatError("--n must be >= 2")
    rep = verify_identities(args.n)
    return {"n": rep.n, "ok": rep.ok, "results": rep.results}, EXIT_OK if rep.ok else EXIT_FAIL


def _cn_structure(args):
    if args.n < 1:
        raise FormatError("--n must be >= 1")
    s = cn_structure(args.group, args.n, keep_presentation=args.presentation)
    out = s.to_json()
    if args.presentation:
        out["presentation"] = s.presentation.to_json()
    return out, EXIT_OK


def _arith_bernoulli(args):
    if args.k < 0:
        raise FormatError("--k must be >= 0")
    return {"k": args.k, "bernoulli": str(bernoulli(args.k))}, EXIT_OK


def _arith_irregular(args):
    if args.limit < 3:
        raise FormatError("--limit must be >= 3")
    pairs = irregular_pairs(args.limit, jobs=max(1, args.jobs))
    if args.csv:
        return pairs_to_csv(pairs), EXIT_OK
    return {"limit": args.limit, "pairs": [list(p) for p in pairs]}, EXIT_OK


def _vandiver(args):
    return VandiverData.load(args.vandiver_data) if args.vandiver_data else VandiverData.load()


def _arith_annihilator(args):
    if args.mode is None:
        sys.stderr.write("notice: --mode not given, using vandiver (odd e(n) taken to be 1)\n")
        mode = Mode.VANDIVER
    else:
        mode = Mode(args.mode)
    table = KTable.from_json(_load_json(args.ktable)) if args.ktable else None
    if mode is Mode.TABLE and table is None:
        raise FormatError("--mode table needs --ktable FILE")
    if args.dim < 0:
        raise FormatError("--dim must be >= 0")
    rep = annihilator_bounds(args.group, args.dim, mode, args.genus, table, _vandiver(args))
    return rep, EXIT_OK


def _arith_ext(args):
    return vanishing_ext(args.p, args.n, _vandiver(args)), EXIT_OK


def _arith_cnpm(args):
    data = _load_json(args.file)
    rep = cnpm_check(args.p, args.n, data)
    return rep, EXIT_OK if rep.ok else EXIT_FAIL


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cubix", description="Cubic structures, symmetric powers and Bernoulli arithmetic.")
    areas = parser.add_subparsers(dest="area", required=True, parser_class=_Parser)

    cubic = areas.add_parser("cubic", help="n-cubic elements")
    cv = cubic.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    p = cv.add_parser("check")
    p.add_argument("file")
    p.add_argument("--arity", type=int, required=True)
    p.set_defaults(func=_cubic_check)
    p = cv.add_parser("theta")
    p.add_argument("--unit", required=True)
    p.add_argument("--arity", type=int, required=True)
    p.set_defaults(func=_cubic_theta)
    for name, func in (("induce", _cubic_induce), ("flat", _cubic_flat), ("taylor", _cubic_taylor)):
        p = cv.add_parser(name)
        p.add_argument("file")
        p.set_defaults(func=func)

    sym = areas.add_parser("sym", help="symmetric-power calculus")
    sv = sym.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    p = sv.add_parser("phi")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--closed-form", action="store_true")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=_sym_phi)
    p = sv.add_parser("identities")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_sym_identities)

    cn = areas.add_parser("cn", help="structure of C_n(A)")
    nv = cn.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    p = nv.add_parser("structure")
    p.add_argument("--group", type=_group, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--presentation", action="store_true")
    p.set_defaults(func=_cn_structure)

    arith = areas.add_parser("arith", help="Bernoulli numbers and annihilators")
    av = arith.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    p = av.add_parser("bernoulli")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_arith_bernoulli)
    p = av.add_parser("irregular")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--csv", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_arith_irregular)
    p = av.add_parser("annihilator")
    p.add_argument("--group", type=_group, required=True)
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--mode", choices=[m.value for m in Mode], default=None)
    p.add_argument("--genus", type=int, default=None)
    p.add_argument("--ktable", default=None, help="JSON with k_orders and hplus_primes (table mode)")
    p.add_argument("--vandiver-data", default=None)
    p.set_defaults(func=_arith_annihilator)
    p = av.add_parser("ext-vanishing")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--vandiver-data", default=None)
    p.set_defaults(func=_arith_ext)
    p = av.add_parser("cnpm-check")
    p.add_argument("file")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_arith_cnpm)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        _emit_error("usage", str(exc))
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        payload, code = args.func(args)
    except (FormatError, CnpmDataError) as exc:
        _emit_error("format", str(exc))
        return EXIT_USAGE
    except CapExceeded as exc:
        _emit_error("cap", str(exc))
        return EXIT_USAGE
    except NotCubic as exc:
        _emit_error("not_cubic", str(exc))
        return EXIT_FAIL
    except VerificationFailure as exc:
        _emit_error("verification", str(exc))
        return EXIT_FAIL
    except Undetermined as exc:
        _emit_error("undetermined", str(exc))
        return EXIT_FAIL
    except ValueError as exc:
        _emit_error("usage", str(exc))
        return EXIT_USAGE
    sys.stdout.write(payload if isinstance(payload, str) else dumps(payload) + "\n")
    return code


def main() -> None:
    sys.exit(run())
