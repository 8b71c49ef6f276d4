"""``magmalab`` command line.

Exit status: 0 for a completed run, 1 when the verdict is a property
violation (NotGroup, NotSemigroup, a failed ``check``), 2 on input or
parameter errors.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from contextlib import contextmanager

import numpy as np

from magmalab import adversary, algebra, cost, instances
from magmalab.group_test import (
    NOT_GROUP,
    GroupTestParams,
    PromiseViolation,
    default_params,
    group_test_randomized,
    naive_group_test,
)
from magmalab.oracle import CountingOracle, make_rng, spawn_seeds, write_csv
from magmalab.quantum import search, semigroup, walks
from magmalab.tableio import TableFormatError, format_matrix, format_table, load_matrix, load_table

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer list, got {text!r}") from None


def _int_or_auto(text: str):
    if text == "auto":
        return None
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'auto', got {text!r}") from None


@contextmanager
def _output(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def _writer(fh):
    return csv.writer(fh, lineterminator="\n")


def _cap(args) -> int:
    return args.cap if args.cap is not None else walks.default_cap()


# --- subcommands ------------------------------------------------------------

PROPERTIES = ("associative", "identity", "right-identity", "left-identity", "monoid", "group", "quasigroup", "loop")


def cmd_check(args) -> int:
    table = load_table(args.table)
    prop = args.property
    if prop in ("identity", "right-identity", "left-identity"):
        side = {"identity": algebra.Side.TWO_SIDED, "right-identity": algebra.Side.RIGHT, "left-identity": algebra.Side.LEFT}[prop]
        e = algebra.find_identity(table, side)
        holds, witness, note = e is not None, "" if e is None else str(e), ""
    else:
        fn = {
            "associative": algebra.is_associative,
            "monoid": algebra.is_monoid,
            "group": algebra.is_group,
            "quasigroup": algebra.is_quasigroup,
            "loop": algebra.is_loop,
        }[prop]
        rep = fn(table)
        holds = rep.holds
        witness = "" if rep.witness is None else " ".join(str(x) for x in rep.witness)
        note = rep.note
    with _output(args.csv) as fh:
        w = _writer(fh)
        w.writerow(["property", "n", "k", "holds", "witness", "note"])
        w.writerow([prop, table.n, table.k, holds, witness, note])
    return EXIT_OK if holds else EXIT_VIOLATION


def _identity_of(table: algebra.MagmaTable, verify: bool) -> int:
    if verify:
        mon = algebra.is_monoid(table)
        if not mon.holds:
            raise UsageError(f"promise violated: input is not a monoid ({mon.note})")
        (e,) = mon.witness
        if table.identity is not None and table.identity != e:
            raise UsageError(f"promise violated: declared identity {table.identity} is not the identity")
        return e
    if table.identity is not None:
        return table.identity
    e = algebra.find_identity(table, algebra.Side.TWO_SIDED)
    if e is None:
        raise UsageError("table declares no identity and has no two-sided identity")
    return e


def cmd_group_test(args) -> int:
    table = load_table(args.table)
    e = _identity_of(table, args.verify_promise)
    seed = args.seed
    oracle = CountingOracle(table)
    if args.naive:
        rec = naive_group_test(oracle, e)
        rec.seed = seed
    else:
        base = default_params(table.n, seed)
        r = base.r if args.r is None else args.r
        trials = math.ceil(table.n / r) if args.trials is None else args.trials
        try:
            params = GroupTestParams(r, trials, seed)
            rec = group_test_randomized(oracle, e, params)
        except PromiseViolation as exc:
            raise UsageError(f"promise violated: {exc}") from None
    with _output(args.csv) as fh:
        write_csv([rec], fh)
    return EXIT_VIOLATION if rec.verdict == NOT_GROUP else EXIT_OK


def cmd_grover(args) -> int:
    marked = sorted(set(args.marked))
    if any(not 0 <= x < args.n for x in marked):
        raise UsageError(f"marked indices must lie in [0, {args.n})")
    p, calls = search.grover_run(args.n, marked, args.iters)
    closed = search.grover_closed_form(args.n, len(marked), args.iters) if marked else 0.0
    with _output(args.csv) as fh:
        w = _writer(fh)
        w.writerow(["N", "k", "iterations", "success_probability", "closed_form", "oracle_calls"])
        w.writerow([args.n, len(marked), args.iters, f"{p:.12f}", f"{closed:.12f}", calls])
    return EXIT_OK


def cmd_walk_gap(args) -> int:
    chain = walks.build_johnson_chain(args.m, args.r)
    rows = [["johnson", args.m, args.r, chain.size, f"{walks.spectral_gap(chain):.12f}", f"{walks.johnson_gap(args.m, args.r):.12f}"]]
    if args.product:
        if chain.size**2 > _cap(args):
            raise UsageError(f"product chain has {chain.size**2} states, above cap {_cap(args)}")
        prod = walks.build_product_chain(chain, chain)
        rows.append(
            ["product", args.m, args.r, prod.size, f"{walks.spectral_gap(prod):.12f}", f"{walks.product_gap_from_factors(chain, chain):.12f}"]
        )
    with _output(args.csv) as fh:
        w = _writer(fh)
        w.writerow(["chain", "m", "r", "states", "gap", "reference_gap"])
        w.writerows(rows)
    return EXIT_OK


def cmd_walk_detect(args) -> int:
    chain = walks.build_johnson_chain(args.m, args.r)
    if any(not 0 <= x < chain.size for x in args.marked):
        raise UsageError(f"marked vertex indices must lie in [0, {chain.size})")
    marked = [chain.states[x] for x in sorted(set(args.marked))]
    curve = walks.detection_curve(chain, marked, args.steps, cap=_cap(args))
    with _output(args.csv) as fh:
        w = _writer(fh)
        w.writerow(["m", "r", "marked", "step", "detection_probability"])
        label = " ".join(str(x) for x in sorted(set(args.marked)))
        for t, p in enumerate(curve):
            w.writerow([args.m, args.r, label, t, f"{p:.12f}"])
    return EXIT_OK


EMULATE_EXTRA = ("charged", "classical_budget", "mnrs_prediction", "steps", "checks")


def cmd_walk_emulate(args) -> int:
    table = load_table(args.table)
    seeds = [args.seed] if args.reps == 1 else spawn_seeds(args.seed, args.reps)

    def run(seed):
        return semigroup.semigroup_walk_emulation(CountingOracle(table), table.codomain, args.r, seed)

    records = _fan_out(run, seeds, args.workers)
    with _output(args.csv) as fh:
        write_csv(records, fh, EMULATE_EXTRA)
    return EXIT_VIOLATION if any(r.verdict == semigroup.NOT_SEMIGROUP for r in records) else EXIT_OK


def cmd_epsilon(args) -> int:
    table = load_table(args.table)
    count = semigroup.count_marked_pairs(table, args.r, cap=_cap(args))
    bound = semigroup.marked_fraction_bound(table.n, table.k, args.r)
    with _output(args.csv) as fh:
        w = _writer(fh)
        w.writerow(["n", "k", "r", "marked", "total", "epsilon", "bound"])
        w.writerow([table.n, table.k, args.r, count.marked, count.total, f"{count.epsilon:.12f}", f"{bound:.12f}"])
    return EXIT_OK


def cmd_adversary_gen(args) -> int:
    if args.problem == "semigroup":
        c = 2 if args.c is None else args.c
        a, b = args.a, args.b
        if args.side == "B":
            a = 3 if a is None else a
            b = 4 if b is None else b
        table = adversary.gen_semigroup_family(args.n, c, args.side, a, b)
        text = format_table(table, comment=f"semigroup family side {args.side}, n={args.n}, c={c}")
    else:
        fam = adversary.gen_one_column_family(args.n, args.side)
        bits = np.array(fam.sample(make_rng(args.seed)), dtype=np.uint8).reshape(args.n, args.n)
        text = format_matrix(bits, comment=f"one-column family side {args.side}, n={args.n}, seed={args.seed}")
    with _output(args.out) as fh:
        fh.write(text)
    return EXIT_OK


def cmd_adversary_bound(args) -> int:
    if args.problem == "semigroup":
        if args.n < 5:
            raise UsageError("semigroup family needs n >= 5")
        fam = adversary.semigroup_adversary(args.n)
    else:
        if args.n < 2:
            raise UsageError("one-column family needs n >= 2")
        exhaustive = args.n ** args.n <= _cap(args) and args.sample is None
        fam = adversary.one_column_adversary(args.n, None if exhaustive else (args.sample or 200), args.seed)
    b = adversary.compute_adversary_bound(fam)
    with _output(args.csv) as fh:
        w = _writer(fh)
        w.writerow(["problem", "n", "m", "m_prime", "bound", "exhaustive"])
        w.writerow([args.problem, args.n, b.m, b.m_prime, f"{b.bound:.6f}", b.exhaustive])
    return EXIT_OK


def cmd_reduce(args) -> int:
    bits = load_matrix(args.matrix)
    table = adversary.reduce_identity(bits) if args.kind == "identity" else adversary.reduce_loop(bits)
    with _output(args.out) as fh:
        fh.write(format_table(table, comment=f"{args.kind} reduction of {args.matrix}"))
    return EXIT_OK


def cmd_cost(args) -> int:
    with _output(args.csv) as fh:
        w = _writer(fh)
        if args.which == "semigroup":
            if args.alpha is None:
                raise UsageError("cost semigroup needs --alpha")
            res = cost.semigroup_exponent(args.alpha)
            _, exp_num = cost.semigroup_exponent_numeric(args.alpha)
            header = ["alpha", "regime", "beta_star", "exponent", "numeric_exponent"]
            row = [args.alpha, res.regime.value, "" if res.beta_star is None else f"{res.beta_star:.10f}", f"{res.exponent:.10f}", f"{exp_num:.10f}"]
            if args.n is not None:
                k = args.k if args.k is not None else max(1, round(args.n**args.alpha))
                r, c = cost.semigroup_cost_optimum(args.n, k)
                header += ["n", "k", "r_opt", "cost"]
                row += [args.n, k, r, f"{c:.3f}"]
            w.writerow(header)
            w.writerow(row)
        elif args.which == "group":
            q = cost.group_quantum_exponent()
            header = ["beta_star", "exponent", "log_factor"]
            row = [f"{q.beta_star:.10f}", f"{q.exponent:.10f}", q.log_factor]
            if args.n is not None:
                r, c = cost.group_randomized_optimum(args.n)
                header += ["n", "r_opt", "randomized_cost", "r_int", "randomized_cost_int"]
                ri = cost.group_randomized_integer_optimum(args.n)
                row += [args.n, f"{r:.6f}", f"{c:.3f}", ri, f"{cost.group_randomized_cost(args.n, ri):.3f}"]
            w.writerow(header)
            w.writerow(row)
        else:
            w.writerow(["problem", "lower_exponent", "upper_exponent", "upper_log", "note"])
            for b in cost.misc_bounds():
                w.writerow([b.problem, "" if b.lower is None else f"{b.lower:.6f}", f"{b.upper:.6f}", b.upper_log, b.note])
    return EXIT_OK


BENCH_KINDS = {"cyclic": instances.cyclic_group, "monoid-absorber": instances.monoid_with_absorber, "nilpotent": instances.nilpotent_monoid}


def _fan_out(fn, seeds, workers):
    if workers <= 1 or len(seeds) <= 1:
        return [fn(s) for s in seeds]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, seeds))  # map preserves rep order


def cmd_bench(args) -> int:
    make = BENCH_KINDS[args.kind]
    records = []
    summary = []
    for n in args.n:
        table = make(n)
        e = table.identity
        params = default_params(n)
        seeds = spawn_seeds(args.seed * 1_000_003 + n, args.reps)

        def run(seed, table=table, e=e, params=params):
            if args.algorithm == "naive":
                rec = naive_group_test(CountingOracle(table), e)
                rec.seed = seed
                return rec
            return group_test_randomized(CountingOracle(table), e, GroupTestParams(params.r, params.trials, seed))

        recs = _fan_out(run, seeds, args.workers)
        records.extend(recs)
        q = np.array([r.queries for r in recs])
        summary.append(
            [args.algorithm, args.kind, n, args.reps, f"{q.mean():.3f}", int(q.max()), f"{2 * n**1.5:.3f}",
             sum(r.verdict == NOT_GROUP for r in recs)]
        )
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            write_csv(records, fh)
    w = _writer(sys.stdout)
    w.writerow(["algorithm", "kind", "n", "reps", "mean_queries", "max_queries", "budget_2n^1.5", "rejections"])
    w.writerows(summary)
    return EXIT_OK


GEN_KINDS = ("cyclic", "monoid-absorber", "nilpotent", "single-witness", "random-monoid", "random-bits")


def cmd_gen(args) -> int:
    rng = make_rng(args.seed)
    if args.kind == "random-bits":
        text = format_matrix(instances.random_bit_matrix(args.n, rng), comment=f"random bits n={args.n} seed={args.seed}")
    else:
        if args.kind == "random-monoid":
            table = instances.random_monoid(rng, max_size=args.n)
        else:
            table = instances.KINDS[args.kind](args.n)
        text = format_table(table, comment=f"{args.kind} n={table.n} seed={args.seed}")
    with _output(args.out) as fh:
        fh.write(text)
    return EXIT_OK


# --- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="master seed (default 0)")
    common.add_argument("--csv", metavar="PATH", help="write CSV here instead of stdout")
    common.add_argument("--cap", type=int, help="enumeration / state-space cap (default: $MAGMA_LAB_CAP or 1e6)")
    common.add_argument("--verify-promise", action="store_true", help="brute-force check the monoid promise first")

    p = argparse.ArgumentParser(prog="magmalab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", parents=[common], help="brute-force property check")
    s.add_argument("table")
    s.add_argument("--property", choices=PROPERTIES, required=True)
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("group-test", parents=[common], help="randomized (or naive) group test")
    s.add_argument("table")
    s.add_argument("--r", type=_int_or_auto, default=None, metavar="INT|auto")
    s.add_argument("--trials", type=_int_or_auto, default=None, metavar="INT|auto")
    s.add_argument("--naive", action="store_true", help="scan every row instead")
    s.set_defaults(func=cmd_group_test)

    s = sub.add_parser("grover", parents=[common], help="exact Grover simulation")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--marked", type=_int_list, required=True)
    s.add_argument("--iters", type=int, required=True)
    s.set_defaults(func=cmd_grover)

    walk = sub.add_parser("walk", help="Johnson-graph walks").add_subparsers(dest="walk_command", required=True)
    s = walk.add_parser("gap", parents=[common])
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--product", action="store_true")
    s.set_defaults(func=cmd_walk_gap)
    s = walk.add_parser("detect", parents=[common])
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--marked", type=_int_list, required=True, help="vertex indices in lexicographic subset order")
    s.add_argument("--steps", type=int, required=True)
    s.set_defaults(func=cmd_walk_detect)
    s = walk.add_parser("emulate", parents=[common])
    s.add_argument("table")
    s.add_argument("--r", type=int, required=True)
    s.add_argument("--reps", type=int, default=1)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_walk_emulate)

    s = sub.add_parser("epsilon", parents=[common], help="exact marked fraction of the associativity walk")
    s.add_argument("table")
    s.add_argument("--r", type=int, required=True)
    s.set_defaults(func=cmd_epsilon)

    adv = sub.add_parser("adversary", help="lower-bound families").add_subparsers(dest="adversary_command", required=True)
    s = adv.add_parser("gen", parents=[common])
    s.add_argument("--problem", choices=("semigroup", "one-column"), required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--side", choices=("A", "B"), default="A")
    s.add_argument("--c", type=int)
    s.add_argument("--a", type=int)
    s.add_argument("--b", type=int)
    s.add_argument("--out", metavar="PATH")
    s.set_defaults(func=cmd_adversary_gen)
    s = adv.add_parser("bound", parents=[common])
    s.add_argument("--problem", choices=("semigroup", "one-column"), required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--sample", type=int, help="sample this many instances per side instead of enumerating")
    s.set_defaults(func=cmd_adversary_bound)

    s = sub.add_parser("reduce", parents=[common], help="reduce a bit matrix to a table")
    s.add_argument("--kind", choices=("identity", "loop"), required=True)
    s.add_argument("matrix")
    s.add_argument("--out", metavar="PATH")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("cost", parents=[common], help="query-cost exponents and bounds")
    s.add_argument("which", choices=("semigroup", "group", "table"))
    s.add_argument("--alpha", type=float)
    s.add_argument("--n", type=int)
    s.add_argument("--k", type=int)
    s.set_defaults(func=cmd_cost)

    s = sub.add_parser("bench", parents=[common], help="repeated seeded group-test runs")
    s.add_argument("algorithm", choices=("group-test", "naive"))
    s.add_argument("--n", type=_int_list, required=True)
    s.add_argument("--reps", type=int, default=100)
    s.add_argument("--kind", choices=tuple(BENCH_KINDS), default="cyclic")
    s.add_argument("--workers", type=int, default=4)
    s.set_defaults(func=cmd_bench)

    s = sub.add_parser("gen", parents=[common], help="write a generated instance")
    s.add_argument("--kind", choices=GEN_KINDS, required=True)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--out", metavar="PATH")
    s.set_defaults(func=cmd_gen)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (TableFormatError, UsageError, ValueError, IndexError, walks.CombinatorialBlowup, OSError) as exc:
        print(f"magmalab: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
