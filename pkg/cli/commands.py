"""
Command-line surface: argparse tree, Command construction and dispatch.
"""

import argparse
import json
import sys
from typing import Dict, List, Optional

from pydantic import ValidationError

from core.affine import Level
from core.audit import AuditLog
from core.config import get_settings
from core.errors import UnsupportedSystemError, WorkbenchError
from core.polyring import MonomialOrder
from core.vacuum import State
from schemas.report import ElementTerm, Report, terms_to_element
from schemas.request import Command
from tools.algebra_check import run_algebra_check
from tools.classification import admissible_list, classify_level
from tools.ideals import groebner_basis, ideal_dimension
from tools.singular_vectors import find_singular_vectors, save_state, verify_singular_state
from tools.zhu_image import xi_weights, zhu_image, zhu_p0

settings = get_settings()

# flags whose values may start with '-' (--level -1/2, --expr "-e12(-2)+...")
_SIGNED_FLAGS = ("--level", "--w1", "--w2", "--xi", "--expr")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", dest="json_output", action="store_true", help="print the JSON report")
    common.add_argument("--out", dest="out_path", help="write the state (singular find) or report JSON here")
    common.add_argument("--threads", type=int, help="bound on internal parallelism")

    level = argparse.ArgumentParser(add_help=False)
    level.add_argument("--level", required=True, help="level k as P/Q or an integer")

    parser = argparse.ArgumentParser(prog="sl21", description="Exact sl(2|1) affine and Zhu-algebra workbench")
    sub = parser.add_subparsers(dest="group", required=True)

    sub.add_parser("algebra-check", parents=[common], help="verify the structure constants")

    singular = sub.add_parser("singular", help="singular vectors of V(k, C)").add_subparsers(dest="action", required=True)
    find = singular.add_parser("find", parents=[common, level])
    find.add_argument("--degree", type=int)
    find.add_argument("--w1")
    find.add_argument("--w2")
    verify = singular.add_parser("verify", parents=[common, level])
    verify.add_argument("--in", dest="in_path")
    verify.add_argument("--expr")

    zhu = sub.add_parser("zhu", help="Zhu-algebra images and P0").add_subparsers(dest="action", required=True)
    image = zhu.add_parser("image", parents=[common, level])
    image.add_argument("--in", dest="in_path")
    image.add_argument("--expr")
    zhu.add_parser("p0", parents=[common, level])
    xi = zhu.add_parser("xi-weight", parents=[common])
    xi.add_argument("--xi", required=True)
    xi.add_argument("--expr")

    ideal = sub.add_parser("ideal", help="polynomial ideals in t1, t2").add_subparsers(dest="action", required=True)
    for action in ("groebner", "dim"):
        p = ideal.add_parser(action, parents=[common])
        p.add_argument("--gens", dest="gens_path", required=True)
        p.add_argument("--order", choices=[o.value for o in MonomialOrder], default=MonomialOrder.DEGREVLEX.value)

    sub.add_parser("classify", parents=[common, level], help="P0 zeros against the admissible weights")
    sub.add_parser("admissible", parents=[common, level], help="admissible weights at a level")
    return parser


def _join_signed_values(argv: List[str]) -> List[str]:
    out = []
    i = 0
    while i < len(argv):
        if argv[i] in _SIGNED_FLAGS and i + 1 < len(argv):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


_NAMES = {
    ("algebra-check", None): "algebra-check",
    ("singular", "find"): "singular-find",
    ("singular", "verify"): "singular-verify",
    ("zhu", "image"): "zhu-image",
    ("zhu", "p0"): "zhu-p0",
    ("zhu", "xi-weight"): "xi-weight",
    ("ideal", "groebner"): "ideal-groebner",
    ("ideal", "dim"): "ideal-dim",
    ("classify", None): "classify",
    ("admissible", None): "admissible",
}


def command_from_args(args: argparse.Namespace) -> Command:
    fields = {k: v for k, v in vars(args).items() if k not in ("group", "action") and v is not None}
    return Command(name=_NAMES[(args.group, getattr(args, "action", None))], **fields)


def _level(cmd: Command) -> Level:
    if cmd.level is None:
        raise ValueError(f"{cmd.name} needs --level")
    return Level(k=cmd.level)


def _dispatch(cmd: Command) -> Dict:
    if cmd.name == "algebra-check":
        return run_algebra_check()
    if cmd.name == "singular-find":
        return find_singular_vectors(_level(cmd), cmd.degree, cmd.w1, cmd.w2, cmd.threads)
    if cmd.name == "singular-verify":
        return verify_singular_state(_level(cmd), cmd.in_path, cmd.expr)
    if cmd.name == "zhu-image":
        return zhu_image(_level(cmd), cmd.in_path, cmd.expr, cmd.threads)
    if cmd.name == "zhu-p0":
        return zhu_p0(_level(cmd), cmd.threads)
    if cmd.name == "xi-weight":
        if cmd.xi is None:
            raise ValueError("xi-weight needs --xi")
        return xi_weights(cmd.xi, cmd.expr)
    if cmd.name == "ideal-groebner":
        return groebner_basis(cmd.gens_path, cmd.order)
    if cmd.name == "ideal-dim":
        return ideal_dimension(cmd.gens_path, cmd.order)
    if cmd.name == "classify":
        return classify_level(_level(cmd), cmd.threads)
    if cmd.name == "admissible":
        return admissible_list(_level(cmd))
    raise ValueError(f"unknown command {cmd.name}")


def _write_out(cmd: Command, report: Report):
    if cmd.name == "singular-find" and report.payload.get("basis"):
        terms = [ElementTerm.model_validate(t) for t in report.payload["basis"][0]]
        save_state(cmd.out_path, State(terms_to_element(terms), _level(cmd)))
        return
    with open(cmd.out_path, "w", encoding="utf-8") as f:
        f.write(report.model_dump_json(indent=settings.JSON_INDENT))
        f.write("\n")


def run(cmd: Command) -> Report:
    """Execute one command; every failure comes back as a Report."""
    AuditLog.log_event("COMMAND_START", {"command": cmd.name})
    try:
        payload = _dispatch(cmd)
        status = payload.pop("status", "ok")
        text = payload.pop("text", "")
        report = Report(status=status, payload=payload, text=text)
        if cmd.out_path and status == "ok":
            _write_out(cmd, report)
    except UnsupportedSystemError as e:
        report = Report(status="unsupported", payload={"error": str(e)}, text=f"unsupported: {e}")
    except (WorkbenchError, ValueError, OSError) as e:
        AuditLog.log_event("COMMAND_ERROR", {"command": cmd.name, "error": str(e)})
        report = Report(status="error", payload={"error": str(e)}, text=f"error: {e}")

    AuditLog.log_result(cmd.name, report.status, {"exit_code": report.exit_code})
    return report


def render(report: Report, json_output: bool) -> str:
    if json_output:
        return json.dumps(report.model_dump(), indent=settings.JSON_INDENT)
    return report.text


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_join_signed_values(sys.argv[1:] if argv is None else list(argv)))
    try:
        cmd = command_from_args(args)
    except ValidationError as e:
        print(f"usage error: {e.errors()[0]['loc'][0]}: {e.errors()[0]['msg']}", file=sys.stderr)
        return 2

    report = run(cmd)
    print(render(report, cmd.json_output))
    if report.status == "error":
        print(report.payload.get("error", ""), file=sys.stderr)
    return report.exit_code
