"""fock-energy command line.

Exit codes: 0 ok, 2 malformed input, 3 invalid data, 4 failed check.
"""

from __future__ import annotations

import argparse
import csv
import json
import io as _stringio
import sys
from typing import Sequence

from . import crystal, energy, symfunc
from .alphabet import AlphabetError, parse_alphabet_spec
from .io import InputError, dumps, envelope, load_json, parse_ints, read_pair, read_tuple, tuple_payload
from .psst import (
    Bound,
    PsstError,
    enumerate_fock_weight,
    enumerate_level1,
    enumerate_psst,
    kappa,
    kappa_inverse,
)
from .poly import QPoly
from .rational import RationalError, RationalTableau, enumerate_rational, gen_partition, validate_rational
from .tableau import TableauError
from .verify import SUITES, VerifyConfig, run_suite

EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_CHECK = 0, 2, 3, 4

DEFAULT_A = "primed-nonneg:0..9"
DEFAULT_B = "primed-neg:-9..-1"


def _csv(rows: Sequence[Sequence]) -> str:
    buf = _stringio.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _alphabets(args):
    return parse_alphabet_spec(args.alphabet_a), parse_alphabet_spec(args.alphabet_b)


def _emit(args, kind: str, payload: dict, text: str, rows: Sequence[Sequence] | None = None) -> None:
    if args.format == "json":
        out = dumps(envelope(kind, payload))
    elif args.format == "csv":
        out = _csv(rows if rows is not None else [[k, v] for k, v in payload.items()])
    else:
        out = text
    print(out)


# ---------------------------------------------------------------------------
# commands


def cmd_rsk(args) -> int:
    a, b = _alphabets(args)
    data = load_json(args.input)
    if args.inverse:
        p, q = read_pair(data)
        ft = kappa_inverse(p, q)
        _emit(args, "fock-tuple", tuple_payload(ft),
              "\n".join(f"T{i + 1}: + {list(e.plus)}  - {list(e.minus)}  (k={e.k})" for i, e in enumerate(ft.entries)),
              [["j", "k", "plus_row", "minus_row"]] + [[i + 1, e.k, " ".join(e.plus), " ".join(e.minus)]
                                                        for i, e in enumerate(ft.entries)])
        return EXIT_OK
    ft = read_tuple(data, a, b)
    if ft.n == 0:
        _emit(args, "rsk", {"shape": [], "P": None, "Q": None}, "(empty tuple)", [["shape"], [""]])
        return EXIT_OK
    p, q = kappa(ft)
    wab = {k: v for k, v in sorted(p.weight_AB().items(), key=lambda kv: (kv[0] not in a, kv[0]))}
    payload = {
        "shape": list(p.shape),
        "P": p.to_json(),
        "Q": q.to_json(),
        "weight_AB": wab,
        "weight_n": list(q.weight()),
    }
    text = "\n".join([
        f"shape: {tuple(p.shape)}",
        f"P: d={p.d} mu={p.mu}",
        "P+:",
        str(p.plus),
        "P-:",
        str(p.minus),
        "Q:",
        str(q),
        f"weight over A/B: {wab}",
        f"weight over [n]: {q.weight()}",
    ])
    rows = [["field", "value"], ["shape", " ".join(map(str, p.shape))],
            ["P_plus", "/".join(" ".join(r) for r in p.plus.rows)],
            ["P_minus", "/".join(" ".join(r) for r in p.minus.rows)],
            ["Q_pos", "/".join(" ".join(map(str, r)) for r in q.pos_rows)],
            ["Q_neg", "/".join(" ".join(map(str, r)) for r in q.neg_rows)]]
    _emit(args, "rsk", payload, text, rows)
    return EXIT_OK


def cmd_energy(args) -> int:
    a, b = _alphabets(args)
    ft = read_tuple(load_json(args.input), a, b)
    terms = energy.energy_terms(ft) if ft.n > 1 else []
    d_val = sum(h for _, _, h in terms)
    if ft.n:
        _, q = kappa(ft)
        ch = crystal.charge(q.word(), ft.n)
    else:
        ch = 0
    payload = {
        "D": d_val,
        "charge_Q": ch,
        "terms": [{"i": i, "j": j, "H": h} for i, j, h in terms],
        "check": (d_val == -ch) if args.check else None,
    }
    text = "\n".join(
        [f"D = {d_val}", f"charge(Q) = {ch}"]
        + [f"  (i={i}, j={j}) H = {h}" for i, j, h in terms]
        + ([f"check D = -charge(Q): {'pass' if d_val == -ch else 'FAIL'}"] if args.check else [])
    )
    rows = [["i", "j", "H"]] + [[i, j, h] for i, j, h in terms] + [["D", "", d_val], ["charge_Q", "", ch]]
    _emit(args, "energy", payload, text, rows)
    if args.check and d_val != -ch:
        return EXIT_CHECK
    return EXIT_OK


def cmd_charge(args) -> int:
    if args.input:
        t = RationalTableau.from_json(load_json(args.input))
        if not validate_rational(t):
            raise RationalError("not a rational semistandard tableau")
        word, n = t.word(), t.n
    else:
        if args.word is None or args.n is None:
            raise InputError("give a tableau file or --word with --n")
        word, n = crystal.check_word(parse_ints(args.word), args.n), args.n
    roots = crystal.charge(word, n)
    terms = crystal.root_terms(word, n)
    ls = crystal.charge_LS_general(word, n)
    payload = {
        "word": list(word),
        "n": n,
        "charge": roots,
        "charge_LS": ls,
        "root_terms": [{"s": s, "t": t, "min": v} for (s, t), v in sorted(terms.items())],
    }
    text = "\n".join([f"word: {list(word)}", f"charge (root sum) = {roots}", f"charge (LS) = {ls}"]
                     + [f"  alpha = e{s} - e{t}: {v}" for (s, t), v in sorted(terms.items())])
    rows = [["s", "t", "min"]] + [[s, t, v] for (s, t), v in sorted(terms.items())] + [["charge", "", roots]]
    _emit(args, "charge", payload, text, rows)
    if args.check and roots != ls:
        return EXIT_CHECK
    return EXIT_OK


def cmd_rmatrix(args) -> int:
    a, b = _alphabets(args)
    ft = read_tuple(load_json(args.input), a, b)
    i = args.i
    if not 1 <= i < ft.n:
        raise InputError(f"--i must lie in 1..{ft.n - 1}")
    t1, t2 = ft.entries[i - 1], ft.entries[i]
    signs = energy.sign_sequence(t1, t2, ft.a, ft.b)
    eps, phi, _ = energy.reduce(signs)
    h = energy.local_H(t1, t2, ft.a, ft.b)
    out = energy.r_matrix_at(ft, i)
    payload = {
        "i": i,
        "signs": energy.sign_string(signs),
        "eps": eps,
        "phi": phi,
        "H": h,
        "result": tuple_payload(out),
    }
    if args.check:
        s_image = energy.tuple_crystal_op(ft, "S", i)
        payload["check"] = s_image == out and energy.r_matrix_at(out, i) == ft
    text = "\n".join(
        [f"signs: {payload['signs']}", f"eps = {eps}, phi = {phi}, H = {h}"]
        + [f"T{j + 1}': + {list(e.plus)}  - {list(e.minus)}  (k={e.k})" for j, e in enumerate(out.entries)]
        + ([f"check R = S and R^2 = id: {'pass' if payload['check'] else 'FAIL'}"] if args.check else [])
    )
    rows = [["j", "k", "plus_row", "minus_row"]] + [[j + 1, e.k, " ".join(e.plus), " ".join(e.minus)]
                                                    for j, e in enumerate(out.entries)]
    _emit(args, "rmatrix", payload, text, rows)
    return EXIT_CHECK if args.check and not payload["check"] else EXIT_OK


def _weights(args, name: str) -> tuple[int, ...]:
    value = getattr(args, name)
    if value is None:
        raise InputError(f"--{name.rstrip('_')} is required")
    parts = parse_ints(value)
    n = args.n if args.n is not None else len(parts)
    if len(parts) < n:
        parts = parts + (0,) * (n - len(parts))
    if len(parts) != n:
        raise InputError(f"--{name.rstrip('_')} has {len(parts)} parts but --n is {n}")
    return parts


def cmd_kostka(args) -> int:
    lam = _weights(args, "lambda_")
    n = len(lam)
    gen_partition(lam, n)
    mus = symfunc.dominated_weights(lam, n) if args.table else [_weights(args, "mu")]
    rows = [["lambda", "mu", "K", "coefficients"]]
    entries = []
    mismatch = False
    hl_row = symfunc.kostka_row_hl(lam, n) if args.cross_check else None
    for mu in mus:
        k = symfunc.kostka_foulkes_charge(lam, mu, n)
        entry = {"lambda": list(lam), "mu": list(mu), "K": str(k), "coefficients": k.to_json()}
        if hl_row is not None:
            other = hl_row.get(tuple(mu), QPoly())
            entry["K_hall_littlewood"] = str(other)
            entry["agree"] = other == k
            mismatch |= other != k
        entries.append(entry)
        rows.append([" ".join(map(str, lam)), " ".join(map(str, mu)), str(k), " ".join(map(str, k.to_list()))])
    text = "\n".join(
        f"K_{{{lam},{tuple(e['mu'])}}}(q) = {e['K']}"
        + (f"   [Hall-Littlewood: {e['K_hall_littlewood']}]" if "agree" in e else "")
        for e in entries
    )
    _emit(args, "kostka", {"n": n, "entries": entries}, text, rows)
    return EXIT_CHECK if mismatch else EXIT_OK


def _poly_rows(p) -> list[list]:
    rows = [list(p.variables) + ["coefficient"]]
    for e, c in p.sorted_terms():
        rows.append(list(e) + [str(c)])
    return rows


def cmd_schur(args) -> int:
    lam = _weights(args, "lambda_")
    p = symfunc.schur(lam, len(lam))
    _emit(args, "schur", {"lambda": list(lam), "poly": p.to_json()}, f"s_{lam} = {p}", _poly_rows(p))
    return EXIT_OK


def cmd_hl(args) -> int:
    mu = _weights(args, "mu")
    p = symfunc.hall_littlewood(mu, len(mu))
    _emit(args, "hall-littlewood", {"mu": list(mu), "poly": p.to_json()}, f"P_{mu} = {p}", _poly_rows(p))
    return EXIT_OK


def cmd_enumerate(args) -> int:
    a, b = _alphabets(args)
    box = args.degree_box
    what = args.what
    if what == "level1":
        items = [e.to_json() for e in enumerate_level1(a, b, box)]
    elif what == "fock":
        mu = _weights(args, "mu")
        items = [[{"k": len(p) - len(m), "plus_row": [a.id_of(x) for x in p], "minus_row": [b.id_of(x) for x in m]}
                  for p, m in t] for t in enumerate_fock_weight(a, b, mu, box)]
    elif what == "psst":
        shape = _weights(args, "shape")
        bound = Bound(d_max=args.bound_d, max_boxes=box)
        items = [p.to_json() for p in enumerate_psst(a, b, len(shape), shape, bound)]
    else:
        shape = _weights(args, "shape")
        items = [t.to_json() for t in enumerate_rational(len(shape), shape)]
    payload = {"what": what, "count": len(items), "items": items if args.list else None}
    text = f"{what}: {len(items)}"
    if args.list:
        text += "\n" + "\n".join(json.dumps(x, ensure_ascii=False) for x in items)
    _emit(args, "enumerate", payload, text, [["what", "count"], [what, len(items)]])
    return EXIT_OK


def cmd_verify(args) -> int:
    a, b = _alphabets(args) if args.alphabet_a_given or args.alphabet_b_given else (None, None)
    cfg = VerifyConfig(
        ns=parse_ints(args.ns),
        max_boxes=args.degree_box,
        sample=args.sample,
        seed=args.seed,
        threads=args.threads,
        inject=args.inject,
    )
    if a is not None:
        cfg.a, cfg.b = a, b
    names = SUITES if args.suite == "all" else (args.suite,)
    results = [run_suite(n, cfg) for n in names]
    payload = {"passed": all(r.passed for r in results), "suites": []}
    lines, rows = [], [["suite", "passed", "cases", "failures"]]
    for r in results:
        j = r.to_json()
        if not args.timing:
            j.pop("seconds")
        payload["suites"].append(j)
        extra = f"  {r.seconds:.1f}s" if args.timing else ""
        lines.append(f"{r.suite}: {'PASS' if r.passed else 'FAIL'}  cases={r.cases} failures={r.failure_count}{extra}")
        for f in r.failures:
            lines.append("  counterexample: " + json.dumps(f, ensure_ascii=False))
        rows.append([r.suite, r.passed, r.cases, r.failure_count])
    _emit(args, "verify", payload, "\n".join(lines), rows)
    return EXIT_OK if payload["passed"] else EXIT_CHECK


# ---------------------------------------------------------------------------
# parser


class _Track(argparse.Action):
    def __call__(self, parser, namespace, values, option_string=None):
        setattr(namespace, self.dest, values)
        setattr(namespace, self.dest + "_given", True)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--alphabet-a", default=DEFAULT_A, action=_Track,
                        help=f"alphabet A, e.g. 'primed-nonneg:0..3', '[3]', 'a/odd,b/even' (default {DEFAULT_A})")
    common.add_argument("--alphabet-b", default=DEFAULT_B, action=_Track, help=f"alphabet B (default {DEFAULT_B})")
    common.add_argument("--n", type=int, default=None, help="rank n")
    common.add_argument("--bound-d", type=int, default=None, help="largest d in PSST enumeration")
    common.add_argument("--degree-box", type=int, default=4, help="box/degree bound")
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--check", action="store_true", help="verify the result and exit 4 on mismatch")

    parser = argparse.ArgumentParser(prog="fock-energy", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rsk", parents=[common], help="the RSK-type map on an n-tuple (or its inverse)")
    p.add_argument("input", help="JSON file ('-' for stdin)")
    p.add_argument("--inverse", action="store_true", help="input is a {P, Q} pair; output the tuple")
    p.set_defaults(func=cmd_rsk)

    p = sub.add_parser("energy", parents=[common], help="global energy D and its H terms")
    p.add_argument("input")
    p.set_defaults(func=cmd_energy)

    p = sub.add_parser("charge", parents=[common], help="charge of a word or rational tableau")
    p.add_argument("input", nargs="?", help="rational tableau JSON")
    p.add_argument("--word", help="comma-separated signed letters")
    p.set_defaults(func=cmd_charge)

    p = sub.add_parser("rmatrix", parents=[common], help="apply the R-matrix at positions i, i+1")
    p.add_argument("input")
    p.add_argument("--i", type=int, default=1)
    p.set_defaults(func=cmd_rmatrix)

    p = sub.add_parser("kostka", parents=[common], help="Kostka-Foulkes polynomial by charge")
    p.add_argument("--lambda", dest="lambda_", required=True)
    p.add_argument("--mu")
    p.add_argument("--table", action="store_true", help="all mu below lambda in dominance")
    p.add_argument("--cross-check", action="store_true", help="also solve via Hall-Littlewood polynomials")
    p.set_defaults(func=cmd_kostka)

    p = sub.add_parser("schur", parents=[common], help="Laurent Schur polynomial")
    p.add_argument("--lambda", dest="lambda_", required=True)
    p.set_defaults(func=cmd_schur)

    p = sub.add_parser("hl", parents=[common], help="Hall-Littlewood polynomial P_mu")
    p.add_argument("--mu", required=True)
    p.set_defaults(func=cmd_hl)

    p = sub.add_parser("enumerate", parents=[common], help="count (or list) bounded objects")
    p.add_argument("what", choices=("level1", "fock", "psst", "rational"))
    p.add_argument("--mu", help="charges of the tuple entries (fock)")
    p.add_argument("--shape", help="generalized partition (psst, rational)")
    p.add_argument("--list", action="store_true", help="print the objects, not just the count")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", parents=[common], help="run identity suites over a window")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--ns", default="2,3", help="ranks to cover in tuple suites (default 2,3)")
    p.add_argument("--sample", type=int, default=None, help="random tuples per rank instead of the full window")
    p.add_argument("--threads", type=int, default=None, help="worker processes (capped by FOCK_ENERGY_THREADS)")
    p.add_argument("--inject", action="store_true", help="corrupt one value to confirm failures are reported")
    p.add_argument("--timing", action="store_true", help="include wall-clock times (output no longer byte-stable)")
    p.set_defaults(func=cmd_verify, degree_box=4)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name in ("alphabet_a", "alphabet_b"):
        if not hasattr(args, name + "_given"):
            setattr(args, name + "_given", False)
    try:
        return args.func(args)
    except (InputError, AlphabetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (PsstError, TableauError, RationalError, energy.EnergyError, crystal.CrystalError) as exc:
        print(f"invalid: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
