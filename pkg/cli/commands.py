# cli/commands.py

"""
Command dispatch.

    validate     <file>
    classify     <file>
    homology     <file> [--coeffs trivial|adjoint] [--degree p|all]
    obstruction  <file> [--levi i,j,k] [--truncate N] [--scale c]
    smash-check  <file> [--levi i,j,k] [--truncate N] [--cases M]

Common flags: --json, --ledger [PATH], --log-level LEVEL.
Exit codes: 0 success, 1 validation / Levi failure, 2 check or
certificate failure, 3 input error.
"""

import argparse
import sys
from math import comb
from typing import Any, Dict, List, Optional, Sequence

from config.settings import (
    DEFAULT_TRUNCATION,
    EXIT_CHECK_FAILURE,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_VALIDATION_FAILURE,
    LOG_LEVEL,
    RANDOM_CASES,
    RUN_LEDGER_PATH,
)
from core.errors import InputError, LieAmkError, PreconditionError, TruncationOverflow
from core.exactlin import format_rational, parse_rational
from core.liealg import LieAlgebra, Subspace, classify, killing_form, validate, verify_levi
from cli.parser import AlgebraFile, parse_algebra, parse_indices
from cli.report import CommandResult, render_human, render_json
from cli.run_ledger import RunLedger
from homology.betti import betti, betti_table, check_d_squared
from homology.chains import AdjointModule, TrivialModule
from homology.obstruction import obstruction_certificate
from smash.checks import (
    CheckReport,
    check_commutation_identities,
    check_counit_tau,
    check_group_table,
    check_hopf_axioms,
    check_hopf_generation,
    check_inclusions,
    check_module_algebra,
    check_module_law,
    check_retraction,
    check_smash_associativity,
    levi_smash_iso_check,
)
from smash.module_algebra import levi_action
from utils.log import configure, get_logger

log = get_logger("cli")


class _ArgumentParser(argparse.ArgumentParser):
    """Usage errors are input errors (exit 3), not argparse's exit 2."""

    def error(self, message):
        raise InputError(message, "usage")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a machine-readable report")
    common.add_argument(
        "--ledger", nargs="?", const=RUN_LEDGER_PATH, default=None, metavar="PATH",
        help=f"append a row to the run ledger (default {RUN_LEDGER_PATH})",
    )
    common.add_argument("--log-level", default=LOG_LEVEL, help="diagnostics level on stderr")

    parser = _ArgumentParser(prog="lieamk", description="Exact Lie algebra, smash product and homology kernel")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check the Jacobi identity")
    p.add_argument("file")

    p = sub.add_parser("classify", parents=[common], help="solvable / semisimple / mixed, radical, Killing form")
    p.add_argument("file")

    p = sub.add_parser("homology", parents=[common], help="Betti numbers of the standard complex")
    p.add_argument("file")
    p.add_argument("--coeffs", choices=["trivial", "adjoint"], default="trivial")
    p.add_argument("--degree", default="all", help="p or all")

    p = sub.add_parser("obstruction", parents=[common], help="certificate for H_k(g, U(rad)) != 0")
    p.add_argument("file")
    p.add_argument("--levi", help="comma-separated basis indices of a Levi subalgebra")
    p.add_argument("--truncate", type=int, default=DEFAULT_TRUNCATION)
    p.add_argument("--scale", default="1", help="rescale eta by this rational")

    p = sub.add_parser("smash-check", parents=[common], help="smash product and Hopf identities")
    p.add_argument("file")
    p.add_argument("--levi", help="comma-separated basis indices of a Levi subalgebra")
    p.add_argument("--truncate", type=int, default=None)
    p.add_argument("--cases", type=int, default=RANDOM_CASES)

    return parser


# =========================
# Helpers
# =========================

def _rationals(values) -> Dict[str, str]:
    return {str(k): format_rational(v) for k, v in values.items()}


def _validated(loaded: AlgebraFile, command: str) -> Optional[CommandResult]:
    """A VALIDATION failure result, or None when the algebra is a Lie algebra."""
    report = validate(loaded.algebra)
    if report.ok:
        return None
    result = _validate_result(loaded.algebra, report)
    return CommandResult(command, loaded.path, report.state, EXIT_VALIDATION_FAILURE, result)


def _validate_result(L: LieAlgebra, report) -> Dict[str, Any]:
    return {
        "algebra": L.name,
        "dim": L.dim,
        "state": report.state,
        "checked_triples": report.checked_triples,
        "violation": list(report.violation) if report.violation else None,
        "residue": _rationals(report.residue),
        "reason": report.reason,
    }


def _levi_subspace(loaded: AlgebraFile, levi_flag: Optional[str]) -> Optional[Subspace]:
    if levi_flag is not None:
        indices = parse_indices(levi_flag)
        L = loaded.algebra
        if len(set(indices)) != len(indices) or not all(0 <= i < L.dim for i in indices):
            raise InputError(f"levi indices must be distinct and in 0..{L.dim - 1}", "--levi")
        return Subspace.from_indices(L, indices)
    return loaded.levi


def _resolve_levi(L: LieAlgebra, h: Optional[Subspace]) -> Subspace:
    """Default Levi factor: all of a semisimple algebra, 0 for a solvable one."""
    if h is not None:
        return h
    kind = classify(L).kind
    if kind == "semisimple":
        return Subspace.whole(L)
    if kind == "solvable":
        return Subspace.zero(L)
    raise InputError(f"{L.name} is mixed: give a Levi subalgebra with --levi or a levi field", "levi")


def _check_dict(report: CheckReport) -> Dict[str, Any]:
    return {
        "name": report.name,
        "state": report.state,
        "checked": report.checked,
        "counterexample": report.counterexample,
        "reason": report.reason,
    }


# =========================
# Commands
# =========================

def cmd_validate(args) -> CommandResult:
    loaded = parse_algebra(args.file)
    report = validate(loaded.algebra)
    code = EXIT_OK if report.ok else EXIT_VALIDATION_FAILURE
    return CommandResult("validate", loaded.path, report.state, code, _validate_result(loaded.algebra, report))


def cmd_classify(args) -> CommandResult:
    loaded = parse_algebra(args.file)
    failed = _validated(loaded, "classify")
    if failed:
        return failed

    L = loaded.algebra
    c = classify(L)
    kappa = killing_form(L)
    result = {
        "algebra": L.name,
        "dim": L.dim,
        "kind": c.kind,
        "summary": f"{c.kind}, dim radical = {c.radical_dim}",
        "radical_dim": c.radical_dim,
        "radical": c.radical.describe(),
        "killing_rank": c.killing_rank,
        "derived_length": c.derived_length,
        "killing_form": {
            "basis": list(L.basis),
            "rows": [[format_rational(v) for v in row] for row in kappa.to_lists()],
        },
    }
    return CommandResult("classify", loaded.path, c.kind.upper(), EXIT_OK, result)


def cmd_homology(args) -> CommandResult:
    loaded = parse_algebra(args.file)
    failed = _validated(loaded, "homology")
    if failed:
        return failed

    L = loaded.algebra
    module = AdjointModule(L) if args.coeffs == "adjoint" else TrivialModule(L)
    squared = check_d_squared(L, module)

    if args.degree == "all":
        table = betti_table(L, module)
        result = {
            "degrees": list(range(L.dim + 1)),
            "chain_dims": table.chain_dims,
            "betti": table.betti,
            "ranks": table.ranks,
            "euler_characteristic": table.euler_characteristic,
        }
    else:
        try:
            p = int(args.degree)
        except ValueError:
            raise InputError(f"expected an integer or 'all', got {args.degree!r}", "--degree") from None
        if not 0 <= p <= L.dim:
            raise InputError(f"degree must be in 0..{L.dim}", "--degree")
        result = {
            "degrees": [p],
            "chain_dims": [comb(L.dim, p) * len(module.basis())],
            "betti": [betti(L, module, p)],
        }

    result.update({"algebra": L.name, "coeffs": module.name, "d_squared_zero": squared.ok})
    code = EXIT_OK if squared.ok else EXIT_CHECK_FAILURE
    return CommandResult("homology", loaded.path, "COMPUTED" if squared.ok else "D_SQUARED_NONZERO", code, result)


def cmd_obstruction(args) -> CommandResult:
    loaded = parse_algebra(args.file)
    failed = _validated(loaded, "obstruction")
    if failed:
        return failed

    L = loaded.algebra
    scale = parse_rational(args.scale, "--scale")
    if not scale:
        raise InputError("scale must be nonzero", "--scale")

    if classify(L).kind != "solvable":
        h = _resolve_levi(L, _levi_subspace(loaded, args.levi))
        levi = verify_levi(L, h)
        if not levi.ok:
            result = {
                "algebra": L.name,
                "state": "LEVI_FAILED",
                "failed_condition": levi.failed_condition,
                "reason": levi.reason,
            }
            return CommandResult("obstruction", loaded.path, "LEVI_FAILED", EXIT_VALIDATION_FAILURE, result)
    else:
        h = None

    cert = obstruction_certificate(L, h, args.truncate, scale)
    result = {
        "algebra": L.name,
        "state": cert.state,
        "reason": cert.reason,
        "k": cert.k,
        "truncation": cert.truncation,
        "levi": cert.levi,
        "radical": cert.radical,
        "eta": cert.eta_text,
        "xi": {"^".join(cert.levi): format_rational(v) for v in cert.xi.values()},
        "eps_a": cert.eps_a,
        "checks": {
            name: {
                "passed": c.passed,
                "checked": c.checked,
                "statement": c.statement,
                "counterexample": c.counterexample,
            }
            for name, c in cert.checks.items()
        },
        "non_boundary": cert.non_boundary,
        "solve_agrees": cert.solve_agrees,
    }
    code = EXIT_OK if cert.ok else EXIT_CHECK_FAILURE
    return CommandResult("obstruction", loaded.path, cert.state, code, result)


def _smash_reports(act, cases: int) -> List[CheckReport]:
    return [
        check_counit_tau(act),
        check_module_algebra(act),
        check_commutation_identities(act),
        check_inclusions(act),
        check_smash_associativity(act, cases=cases),
        check_module_law(act, cases=cases),
        check_hopf_generation(act.hopf),
    ]


def cmd_smash_check(args) -> CommandResult:
    loaded = parse_algebra(args.file)
    failed = _validated(loaded, "smash-check")
    if failed:
        return failed

    L = loaded.algebra
    result: Dict[str, Any] = {"algebra": L.name}

    if loaded.group_action is not None:
        if args.levi is not None:
            raise InputError("--levi does not apply to a group-action file", "--levi")
        spec = loaded.group_action
        act = spec.build(args.truncate)
        reports = _smash_reports(act, args.cases) + [check_group_table(act)]
        retraction = check_retraction(act)
        reports.append(retraction)
        result.update({
            "action": act.name,
            "group_order": spec.group.order,
            "truncation": act.algebra.max_degree,
            "retraction": retraction.details,
        })
    else:
        truncation = DEFAULT_TRUNCATION if args.truncate is None else args.truncate
        h = _resolve_levi(L, _levi_subspace(loaded, args.levi))
        levi = verify_levi(L, h)
        if not levi.ok:
            result.update({"state": "LEVI_FAILED", "failed_condition": levi.failed_condition, "reason": levi.reason})
            return CommandResult("smash-check", loaded.path, "LEVI_FAILED", EXIT_VALIDATION_FAILURE, result)

        act = levi_action(levi.decomposition, truncation)
        reports = _smash_reports(act, args.cases)
        reports += check_hopf_axioms(L, cases=args.cases)
        iso = levi_smash_iso_check(L, h, truncation)
        reports.append(CheckReport(
            "levi_isomorphism", iso.state, iso.pairs_checked, iso.counterexample, iso.reason,
        ))
        result.update({"action": act.name, "truncation": truncation})

    result["checks"] = [_check_dict(r) for r in reports]
    ok = all(r.ok for r in reports)
    return CommandResult("smash-check", loaded.path, "PASS" if ok else "FAIL", EXIT_OK if ok else EXIT_CHECK_FAILURE, result)


COMMANDS = {
    "validate": cmd_validate,
    "classify": cmd_classify,
    "homology": cmd_homology,
    "obstruction": cmd_obstruction,
    "smash-check": cmd_smash_check,
}


# =========================
# Entry
# =========================

def run(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    configure(args.log_level)
    try:
        outcome = COMMANDS[args.command](args)
    except (InputError, PreconditionError) as exc:
        outcome = CommandResult(args.command, args.file, "INPUT_ERROR", EXIT_INPUT_ERROR, {"error": str(exc)})
    except TruncationOverflow as exc:
        outcome = CommandResult(args.command, args.file, "TRUNCATION_OVERFLOW", EXIT_CHECK_FAILURE, {"error": str(exc)})
    except LieAmkError as exc:
        log.error("%s failed: %s", args.command, exc)
        outcome = CommandResult(args.command, args.file, "INTERNAL_ERROR", EXIT_CHECK_FAILURE, {"error": str(exc)})

    if args.json:
        print(render_json(outcome))
    elif "error" in outcome.result:
        print(render_human(outcome), file=sys.stderr)
    else:
        print(render_human(outcome))

    if args.ledger:
        detail = outcome.result.get("error") or outcome.result.get("reason", "")
        RunLedger(args.ledger).log_run(args.command, outcome.file, outcome.state, outcome.exit_code, detail)

    return outcome.exit_code
