"""Command-line front end.

Subcommands: ``series`` (build the named series), ``operator`` (build a
builtin operator), ``newton`` (polygon + summability levels), ``verify``
(one catalog identity), ``verify-all`` (default grid).  Output is JSON or
text, to stdout or ``--output``.  Exit codes: 0 success / all pass, 1 a
verification failed, 2 usage error.
"""

import argparse
import json
import sys

from .constructions import (
    build_Pn,
    build_beta,
    build_tower,
    build_tower_general,
    euler_hat_q,
    euler_hat_xq,
)
from .errors import QEulerError
from .newton import newton_polygon, summability_order
from .qdiff import QDiffOperator
from .qfield import QQ, QR_ONE
from .series import LaurentSeries
from .verify import (
    _euler_operator,
    _qeuler2a_operator,
    resolve_alpha_beta,
    resolve_base_series,
    verify_all,
    verify_catalog,
)


def _parse_rational(s):
    if "/" in s:
        a, b = s.split("/")
        return QQ(int(a), int(b))
    return QQ(int(s))


def _load_series(path):
    with open(path) as fh:
        return LaurentSeries.from_json(json.load(fh))


def _emit(obj, args):
    if args.format == "json":
        text = json.dumps(obj, indent=2)
    else:
        text = _as_text(obj)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _as_text(obj, indent=0):
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for key, value in obj.items():
            if isinstance(value, (dict, list)):
                lines.append(f"{pad}{key}:")
                lines.append(_as_text(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {value}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(
            _as_text(v, indent) if isinstance(v, (dict, list)) else f"{pad}- {v}"
            for v in obj
        )
    return f"{pad}{obj}"


def _base_series(args, prec):
    if getattr(args, "P_file", None):
        return _load_series(args.P_file)
    return resolve_base_series(getattr(args, "P", None) or "one")


def _alpha_beta(args, prec):
    if getattr(args, "alpha_file", None) or getattr(args, "beta_file", None):
        if not (args.alpha_file and args.beta_file):
            raise QEulerError("--alpha-file and --beta-file go together")
        return _load_series(args.alpha_file), _load_series(args.beta_file)
    return resolve_alpha_beta(getattr(args, "ab", None) or "eq-ab1", prec)


def cmd_series(args):
    prec = args.prec
    which = args.which.lower()
    if which == "eq":
        s = euler_hat_q(prec)
    elif which == "exq":
        s = euler_hat_xq(prec)
    elif which == "pn":
        s = build_Pn(_base_series(args, prec), args.n).truncate(prec)
    elif which == "beta":
        alpha, beta = _alpha_beta(args, prec)
        s = build_beta(alpha, beta, args.n).truncate(prec)
    else:
        raise QEulerError(f"unknown series name: {args.which}")
    if args.q_value is not None:
        s = s.specialize_q(_parse_rational(args.q_value))
    _emit(s.to_json(), args)
    return 0


def _builtin_operator(args, prec):
    name = args.builtin
    if name == "euler":
        return _euler_operator()
    if name == "e2":
        return _euler_operator().compose(
            QDiffOperator(
                {1: LaurentSeries.monomial(2), 0: LaurentSeries.constant(-QR_ONE)}
            )
        )
    if name == "qEuler2a":
        return _qeuler2a_operator(prec)
    if name in ("Lnn", "Lnk"):
        tower = build_tower(_base_series(args, prec), args.n, prec)
        k = args.k if (name == "Lnk" and args.k) else args.n
        op = tower.stage(k)
        if args.cleared:
            prod = LaurentSeries.constant(QR_ONE)
            for j in range(1, k + 1):
                prod = prod * tower.seq[j]
            op = QDiffOperator.scalar(prod).compose(op)
        return op
    if name == "Lab":
        alpha, beta = _alpha_beta(args, prec)
        tower = build_tower_general(alpha, beta, args.n, prec)
        op = tower.top()
        if args.cleared:
            prod = LaurentSeries.constant(QR_ONE)
            for j in range(1, args.n + 1):
                prod = prod * tower.seq[j]
            op = QDiffOperator.scalar(prod).compose(op)
        return op
    raise QEulerError(f"unknown builtin operator: {name}")


def cmd_operator(args):
    op = _builtin_operator(args, args.prec)
    _emit(op.to_json(), args)
    return 0


def cmd_newton(args):
    op = _builtin_operator(args, args.prec)
    polygon = newton_polygon(op)
    order = summability_order(polygon)
    obj = polygon.to_json()
    obj["order"] = order.to_json()
    _emit(obj, args)
    return 0


def cmd_verify(args):
    params = {}
    if args.n is not None:
        params["n"] = args.n
    if args.k is not None:
        params["k"] = args.k
    if args.P:
        params["P"] = args.P
    if args.ab:
        params["ab"] = args.ab
    report = verify_catalog(args.identity, params, args.prec)
    _emit(report.to_json(), args)
    return 0 if report.passed else 1


def cmd_verify_all(args):
    reports = verify_all(args.prec)
    _emit([r.to_json() for r in reports], args)
    return 0 if all(r.passed for r in reports) else 1


def _add_common(sub):
    sub.add_argument("--prec", type=int, default=32)
    sub.add_argument("--format", choices=("json", "text"), default="json")
    sub.add_argument("--output")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="qeuler",
        description="exact q-difference operator algebra and identity checks",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("series", help="build a named series")
    p.add_argument("--which", required=True, help="Eq | Exq | Pn | beta")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--P", help="base series name (one, one-plus-x, ...)")
    p.add_argument("--P-file", dest="P_file")
    p.add_argument("--ab", help="coefficient pair name (eq-ab1)")
    p.add_argument("--alpha-file", dest="alpha_file")
    p.add_argument("--beta-file", dest="beta_file")
    p.add_argument("--q-value", dest="q_value")
    _add_common(p)
    p.set_defaults(func=cmd_series)

    for cmd, func in (("operator", cmd_operator), ("newton", cmd_newton)):
        p = subs.add_parser(cmd, help=f"build a builtin operator ({cmd})")
        p.add_argument(
            "--builtin",
            required=True,
            help="euler | e2 | Lnn | Lnk | Lab | qEuler2a",
        )
        p.add_argument("--n", type=int, default=2)
        p.add_argument("--k", type=int)
        p.add_argument("--P", help="base series name")
        p.add_argument("--P-file", dest="P_file")
        p.add_argument("--ab")
        p.add_argument("--alpha-file", dest="alpha_file")
        p.add_argument("--beta-file", dest="beta_file")
        p.add_argument("--cleared", action="store_true")
        _add_common(p)
        p.set_defaults(func=func)

    p = subs.add_parser("verify", help="verify one catalog identity")
    p.add_argument("--identity", required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--P")
    p.add_argument("--ab")
    _add_common(p)
    p.set_defaults(func=cmd_verify)

    p = subs.add_parser("verify-all", help="run the whole catalog")
    _add_common(p)
    p.set_defaults(func=cmd_verify_all)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.prec < 4:
        print("error: --prec must be >= 4", file=sys.stderr)
        return 2
    if getattr(args, "n", 1) is not None and getattr(args, "n", 1) < 1:
        print("error: --n must be >= 1", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except QEulerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
