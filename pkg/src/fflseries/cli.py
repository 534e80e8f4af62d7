"""Command-line front end.

Every command prints one document to standard output: JSON (with a "field"
header), CSV (header row plus one record per parameter tuple, polynomial
cells holding the JSON of their coefficient arrays) or plain text.

Exit status: 0 on success, 1 when a verification or consistency check
fails, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Any, Sequence, TextIO

from . import errors
from .algebra import APoly, FieldSpec, field_make
from .approximation import gen_series, wagner_coeff, wagner_product
from .carlitz import check_size, factorials
from .powersums import phi_degree, twisted_power_sum
from .specialpolys import MAX_RECURSION_WEIGHT, l_value, trivial_zero_order, z_brute, z_recursive
from .verify import SUITES, run_suites

COMMANDS = ("powersum", "zpoly", "lvalue", "zeros", "wagner", "degree-table", "genseries", "verify")


class UsageError(Exception):
    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


# -- argument parsing


def _modulus(text: str) -> list[int]:
    try:
        return [int(c) for c in text.split(",") if c.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}")


def _natural(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {text!r}")
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=_natural, default=2, help="characteristic (default 2)")
    common.add_argument("--e", type=_natural, default=1, help="extension degree, q = p^e (default 1)")
    common.add_argument("--modulus", type=_modulus, default=None,
                        help="defining polynomial of F_q over F_p, low-to-high, e.g. 1,1,1")
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")

    parser = argparse.ArgumentParser(prog="fflseries", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], help=help_text)

    c = add("powersum", "twisted power sum S_d(chi_t^beta, k)")
    c.add_argument("--d", type=_natural, required=True)
    c.add_argument("--beta", type=_natural, default=0)
    c.add_argument("--k", type=_natural, required=True)

    c = add("zpoly", "special polynomial z(chi_t^beta, x, -k) in u = 1/x")
    c.add_argument("--beta", type=_natural, default=0)
    c.add_argument("--k", type=_natural, required=True)

    c = add("lvalue", "L(chi_t^beta, -k) with its trivial-zero annotation")
    c.add_argument("--beta", type=_natural, default=0)
    c.add_argument("--k", type=_natural, required=True)

    c = add("zeros", "trivial-zero table for 0 <= beta <= max-beta, 1 <= k <= max-k")
    c.add_argument("--max-beta", type=_natural, default=6)
    c.add_argument("--max-k", type=_natural, default=10)

    c = add("wagner", "Wagner coefficients b_d for d <= max-d (or the single --d)")
    c.add_argument("--d", type=_natural, default=None)
    c.add_argument("--max-d", type=_natural, default=3)

    c = add("degree-table", "exact degree of the special polynomials against phi")
    c.add_argument("--max-beta", type=_natural, default=6)
    c.add_argument("--max-k", type=_natural, default=10)

    c = add("genseries", "coefficients of M_d(chi_t^beta) / E in 1/z")
    c.add_argument("--d", type=_natural, required=True)
    c.add_argument("--beta", type=_natural, default=1)
    c.add_argument("--N", type=_natural, default=None, help="number of coefficients (default q^d + 4)")

    c = add("verify", "run the invariant suites")
    c.add_argument("--suite", choices=("all",) + SUITES, default="all")
    c.add_argument("--max-d", type=_natural, default=2)
    c.add_argument("--max-k", type=_natural, default=10)
    c.add_argument("--seed", type=_natural, default=0)
    return parser


def _field(args: argparse.Namespace) -> FieldSpec:
    try:
        return field_make(args.p, args.e, args.modulus)
    except errors.NotPrime:
        raise UsageError("--p", f"{args.p} is not prime")
    except errors.ReducibleModulus:
        raise UsageError("--modulus", f"{args.modulus} is reducible over F_{args.p}")
    except errors.DegreeMismatch as exc:
        raise UsageError("--modulus" if args.modulus is not None else "--e", str(exc))


# -- commands; each returns (payload, rows or None, ok)


def _cmd_powersum(field: FieldSpec, args) -> tuple[dict, list[dict], bool]:
    check_size(field, args.d)
    s = twisted_power_sum(field, args.d, args.beta, args.k)
    row = {"d": args.d, "beta": args.beta, "k": args.k, "result": s.to_json()}
    return {"result": s.to_json()}, [row], True


def _cmd_zpoly(field: FieldSpec, args):
    z = z_recursive(field, args.beta, args.k)
    doc = z.to_json()
    return {"result": doc}, [doc], True


def _zero_row(field: FieldSpec, beta: int, k: int, memo: dict) -> dict:
    value = l_value(field, beta, k, memo)
    zero = value.is_zero()
    return {
        "beta": beta,
        "k": k,
        "result": value.to_json(),
        "trivial_zero": zero,
        "order": trivial_zero_order(field, beta, k, memo),
        "predicted": (beta + k) % (field.q - 1) == 0,
    }


def _cmd_lvalue(field: FieldSpec, args):
    if args.k < 1:
        raise UsageError("--k", "trivial zeros are classified for k >= 1")
    row = _zero_row(field, args.beta, args.k, {})
    doc = {"result": row["result"], "trivial_zero": row["trivial_zero"], "order": row["order"]}
    return doc, [{"beta": args.beta, "k": args.k, **doc}], row["trivial_zero"] == row["predicted"]


def _check_weight(max_beta: int, max_k: int) -> None:
    if max_beta + max_k > MAX_RECURSION_WEIGHT:
        raise UsageError("--max-k", f"max-beta + max-k must not exceed {MAX_RECURSION_WEIGHT}")


def _cmd_zeros(field: FieldSpec, args):
    _check_weight(args.max_beta, args.max_k)
    memo: dict = {}
    rows = []
    for beta in range(args.max_beta + 1):
        for k in range(1, args.max_k + 1):
            row = _zero_row(field, beta, k, memo)
            row["match"] = row["trivial_zero"] == row["predicted"] and (row["order"] == 1) == row["trivial_zero"]
            rows.append(row)
    return {"rows": rows}, rows, all(r["match"] for r in rows)


def _cmd_wagner(field: FieldSpec, args):
    ds = [args.d] if args.d is not None else list(range(args.max_d + 1))
    if ds:
        check_size(field, max(ds))
    theta = APoly.theta(field)
    rows = []
    for d in ds:
        w = wagner_coeff(field, d)
        dd = factorials(field, d).D
        rows.append({
            "d": d,
            "b": w.b.to_json(),
            "m0": w.m0.to_json(),
            "product_match": w.b == wagner_product(field, d),
            "b_at_theta_qd": w.b.specialize_t(theta ** (field.q**d)).to_json(),
            "b_at_theta_d": w.b.specialize_t(theta**d).to_json(),
            "D": dd.to_json(),
        })
    ok = all(r["product_match"] and r["b_at_theta_qd"] == r["D"] for r in rows)
    return {"rows": rows}, rows, ok


def degree_table(field: FieldSpec, max_beta: int, max_k: int) -> list[dict]:
    """Rows (beta, k, phi_degree, brute degree, match) for 1 <= beta <= max_beta, 1 <= k <= max_k."""
    rows = []
    for beta in range(1, max_beta + 1):
        for k in range(1, max_k + 1):
            phi = phi_degree(field, beta, k)
            brute = z_brute(field, beta, k).degree
            rows.append({"beta": beta, "k": k, "phi_degree": phi, "brute_degree": brute, "match": phi == brute})
    return rows


def _cmd_degree_table(field: FieldSpec, args):
    _check_weight(args.max_beta, args.max_k)
    rows = degree_table(field, args.max_beta, args.max_k)
    return {"rows": rows}, rows, all(r["match"] for r in rows)


def _cmd_genseries(field: FieldSpec, args):
    check_size(field, args.d)
    n = args.N if args.N is not None else field.q**args.d + 4
    series = gen_series(field, args.d, args.beta, n)
    rows = []
    for k, c in enumerate(series):
        s = twisted_power_sum(field, args.d, args.beta, k)
        rows.append({"d": args.d, "beta": args.beta, "k": k, "coeff": c.to_json(), "match": c == s})
    return {"rows": rows}, rows, all(r["match"] for r in rows)


def _cmd_verify(field: FieldSpec, args):
    if args.max_k + 6 > MAX_RECURSION_WEIGHT:
        raise UsageError("--max-k", f"must not exceed {MAX_RECURSION_WEIGHT - 6} (the suites use beta <= 6)")
    reports = run_suites(field, args.suite, args.max_d, args.max_k, args.seed)
    docs = [r.to_json() for r in reports]
    payload = {"params": {"suite": args.suite, "max_d": args.max_d, "max_k": args.max_k, "seed": args.seed},
               "reports": docs, "status": "fail" if any(r.failures for r in reports) else "pass"}
    return payload, docs, payload["status"] == "pass"


_DISPATCH = {
    "powersum": _cmd_powersum,
    "zpoly": _cmd_zpoly,
    "lvalue": _cmd_lvalue,
    "zeros": _cmd_zeros,
    "wagner": _cmd_wagner,
    "degree-table": _cmd_degree_table,
    "genseries": _cmd_genseries,
    "verify": _cmd_verify,
}


# -- output


_HEADERS = {
    "zeros": ["beta", "k", "result", "trivial_zero", "order", "predicted", "match"],
    "degree-table": ["beta", "k", "phi_degree", "brute_degree", "match"],
    "genseries": ["d", "beta", "k", "coeff", "match"],
}


def to_csv(rows: list[dict], header: list[str] | None = None) -> str:
    """Header row, then one record per row; every cell is the JSON encoding of its value."""
    buf = io.StringIO()
    if header is None:
        if not rows:
            return ""
        header = list(rows[0])
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([json.dumps(row[h], separators=(",", ":")) for h in header])
    return buf.getvalue()


def parse_csv(text: str) -> list[dict]:
    """Inverse of :func:`to_csv`."""
    reader = csv.reader(io.StringIO(text))
    lines = list(reader)
    if not lines:
        return []
    header = lines[0]
    return [{h: json.loads(cell) for h, cell in zip(header, line)} for line in lines[1:]]


def _to_text(command: str, field: FieldSpec, payload: dict, rows: list[dict]) -> str:
    out = [f"field: {field!r}"]
    if command == "verify":
        for r in payload["reports"]:
            out.append(f"{r['suite']:<14} {r['cases']:>6} cases  {r['status']}")
            for fail in r["failures"]:
                out.append(f"  FAIL {fail['check']} {json.dumps(fail['inputs'])}  reproduce: {fail['reproducer']}")
        out.append(f"status: {payload['status']}")
        return "\n".join(out) + "\n"
    if not rows:
        out.append("(empty)")
        return "\n".join(out) + "\n"
    header = list(rows[0])
    cells = [[json.dumps(r[h], separators=(",", ":")) for h in header] for r in rows]
    widths = [max(len(h), *(len(c[i]) for c in cells)) for i, h in enumerate(header)]
    out.append("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
    for c in cells:
        out.append("  ".join(x.ljust(w) for x, w in zip(c, widths)).rstrip())
    return "\n".join(out) + "\n"


def render(command: str, field: FieldSpec, fmt: str, payload: dict, rows: list[dict]) -> str:
    if fmt == "csv":
        return to_csv(rows, _HEADERS.get(command))
    if fmt == "text":
        return _to_text(command, field, payload, rows)
    doc: dict[str, Any] = {"field": field.to_json(), "command": command}
    doc.update(payload)
    return json.dumps(doc, separators=(",", ":")) + "\n"


_SIZE_FLAGS = {"powersum": "--d", "genseries": "--d", "wagner": "--d/--max-d", "verify": "--max-d",
               "zpoly": "--k", "lvalue": "--k", "zeros": "--max-k", "degree-table": "--max-k"}


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        field = _field(args)
        payload, rows, ok = _DISPATCH[args.command](field, args)
    except UsageError as exc:
        print(f"fflseries {args.command}: error: {exc}", file=stderr)
        return 2
    except (errors.TooLarge, errors.BoundTooSmall) as exc:
        print(f"fflseries {args.command}: error: {_SIZE_FLAGS[args.command]}: {exc}", file=stderr)
        return 2
    except ValueError as exc:
        print(f"fflseries {args.command}: error: {_SIZE_FLAGS[args.command]}: {exc}", file=stderr)
        return 2
    stdout.write(render(args.command, field, args.format, payload, rows))
    if not ok:
        print(f"fflseries {args.command}: consistency check failed", file=stderr)
    return 0 if ok else 1


def main() -> None:
    sys.exit(run())
