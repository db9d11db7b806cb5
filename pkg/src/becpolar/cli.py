"""Command-line front end: synthesis, ranking, poset export, verification,
and histogram/plot data.

Subcommands
-----------
synth         channel polynomial coefficients and path counts
rank          channels ordered by average reliability, pointwise value, or beta score
poset         Hasse diagram of an order relation in DOT format
verify        named exact checks with one PASS/FAIL line each (exit 1 on failure)
distribution  decile histogram of average reliabilities (CSV)
avrplot       (label, average reliability) pairs for plotting (CSV)

Exact scores are printed as num/den strings; decimal columns are
presentation-only renderings.  Exit codes: 0 success, 1 verification failure,
2 usage error.
"""

from __future__ import annotations

import argparse
import decimal
import json
import sys
from decimal import Decimal
from fractions import Fraction
from math import comb

from . import construction, golden, monomials, orders, polynomials, reliability, synthesis
from .monomials import Monomial
from .orders import Relation

CLI_M_CAP = 10

_RELATIONS = {"w": Relation.WEAK, "std": Relation.STANDARD, "dom": Relation.DOMINANCE}


def _check_cap(m: int, force: bool) -> None:
    if m < 1:
        raise ValueError("m must be positive")
    if m > CLI_M_CAP and not force:
        raise ValueError(
            f"m={m} exceeds the default cap {CLI_M_CAP} "
            "(polynomial degree 2^m makes cost grow as 8^m); pass --force to override")


def _dec(value: Fraction, places: int = 6) -> str:
    return str(construction.render_avr(value, places))


def _frac(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


# ---------------------------------------------------------------------------
# synth
# ---------------------------------------------------------------------------


def _channel_entry(m: int, u: int, table: synthesis.ChannelTable) -> dict:
    poly = table[u]
    pc = polynomials.to_path_counts(poly, 1 << m)
    return {
        "u": u,
        "monomial": str(Monomial(m, u)),
        "degree": Monomial(m, u).degree,
        "coeffs": list(poly.coeffs),
        "path_counts": list(pc.counts),
    }


def cmd_synth(args: argparse.Namespace) -> int:
    _check_cap(args.m, args.force)
    m = args.m
    table = synthesis.synth_all(m, force=args.force)
    if args.u is not None:
        if not 0 <= args.u < (1 << m):
            raise ValueError(f"u={args.u} out of range for m={m}")
        labels = [args.u]
    else:
        labels = list(range(1 << m))
    entries = [_channel_entry(m, u, table) for u in labels]
    if args.format == "json":
        print(json.dumps({"m": m, "channels": entries}, indent=2))
    else:
        print("u,i,coeff,path_count")
        for entry in entries:
            coeffs = entry["coeffs"] + [0] * ((1 << m) + 1 - len(entry["coeffs"]))
            for i, (c, npc) in enumerate(zip(coeffs, entry["path_counts"])):
                print(f"{entry['u']},{i},{c},{npc}")
    return 0


# ---------------------------------------------------------------------------
# rank
# ---------------------------------------------------------------------------


def _parse_criterion(text: str) -> construction.Criterion:
    if text == "avr":
        return construction.Criterion.average()
    if text.startswith("p="):
        return construction.Criterion.pointwise_at(Fraction(text[2:]))
    if text.startswith("beta="):
        return construction.Criterion.beta_expansion(Decimal(text[5:]))
    raise ValueError(f"--by must be 'avr', 'p=<rational>', or 'beta=<decimal>', got {text!r}")


def cmd_rank(args: argparse.Namespace) -> int:
    _check_cap(args.m, args.force)
    m = args.m
    criterion = _parse_criterion(args.by)
    table = synthesis.synth_all(m, force=args.force)
    ranking = construction.rank(criterion, m, table)
    k = args.k if args.k is not None else 1 << m
    if not 0 <= k <= (1 << m):
        raise ValueError(f"--k {k} out of range for m={m}")
    tol = Fraction(1, 2**30)
    records = []
    for u in ranking.order[:k]:
        avr = table.avr(u)
        score = ranking.scores[u]
        if isinstance(score, Fraction):
            score_str, score_dec = _frac(score), _dec(score)
        else:
            score_str, score_dec = str(score), str(
                score.quantize(Decimal("0.000001"), rounding=decimal.ROUND_HALF_UP))
        threshold = synthesis.threshold_estimate(table[u], tol)
        records.append({
            "u": u,
            "monomial": str(Monomial(m, u)),
            "degree": Monomial(m, u).degree,
            "score": score_str,
            "score_decimal": score_dec,
            "avr": _frac(avr),
            "avr_decimal": _dec(avr),
            "threshold_decimal": _dec(threshold),
        })
    if args.format == "json":
        print(json.dumps({"m": m, "criterion": criterion.label(), "records": records}, indent=2))
    else:
        cols = ["u", "monomial", "degree", "score", "score_decimal",
                "avr", "avr_decimal", "threshold_decimal"]
        print(",".join(cols))
        for rec in records:
            print(",".join(str(rec[c]) for c in cols))
    return 0


# ---------------------------------------------------------------------------
# poset
# ---------------------------------------------------------------------------


def cmd_poset(args: argparse.Namespace) -> int:
    m = args.m
    relation = _RELATIONS[args.relation]
    edges = orders.hasse_edges(m, relation)
    lines = [f"digraph poset_{args.relation}_m{m} {{"]
    for u in range(1 << m):
        lines.append(f'  u{u} [label="{Monomial(m, u)} ({u})"];')
    for a, b in edges:
        lines.append(f"  u{a} -> u{b};")
    lines.append("}")
    text = "\n".join(lines) + "\n"
    if args.dot == "-":
        sys.stdout.write(text)
    else:
        with open(args.dot, "w") as fh:
            fh.write(text)
        print(f"wrote {len(edges)} edges for {1 << m} nodes to {args.dot}")
    return 0


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


class _Suite:
    """Collects named checks and prints one PASS/FAIL line per check."""

    def __init__(self) -> None:
        self.failures = 0
        self.count = 0

    def check(self, name: str, ok: bool, detail: str = "") -> None:
        self.count += 1
        if ok:
            print(f"PASS {name}")
        else:
            self.failures += 1
            print(f"FAIL {name}: {detail}" if detail else f"FAIL {name}")


def _pointwise_leq_from_counts(diff_counts: list[int], d: polynomials.IntPoly) -> bool:
    """Is d >= 0 on [0,1]?  Fast path on precomputed basis coefficients."""
    verdict = polynomials.nonneg_on_01(d, diff_counts)
    return verdict in (polynomials.SignVerdict.NONNEGATIVE,
                       polynomials.SignVerdict.IDENTICALLY_ZERO)


def _verify_orders(suite: _Suite, m: int, table: synthesis.ChannelTable) -> None:
    monos = monomials.all_monomials(m)
    n = 1 << m

    ax_m = min(m, 5)
    ax_monos = monomials.all_monomials(ax_m)
    ok = True
    detail = ""
    for rel, leq in ((Relation.WEAK, orders.leq_weak),
                     (Relation.STANDARD, orders.leq_std),
                     (Relation.DOMINANCE, orders.leq_dominance)):
        for f in ax_monos:
            if not leq(f, f):
                ok, detail = False, f"{rel.value} not reflexive at {f}"
        for f in ax_monos:
            for g in ax_monos:
                if f != g and leq(f, g) and leq(g, f):
                    ok, detail = False, f"{rel.value} not antisymmetric at {f},{g}"
        rel_pairs = [(f, g) for f in ax_monos for g in ax_monos if leq(f, g)]
        below = {}
        for f, g in rel_pairs:
            below.setdefault(g.bits, set()).add(f.bits)
        for f, g in rel_pairs:
            for h in ax_monos:
                if leq(g, h) and f.bits not in below.get(h.bits, ()):
                    ok, detail = False, f"{rel.value} not transitive at {f},{g},{h}"
    suite.check(f"orders/poset-axioms m={ax_m}", ok, detail)

    # implication chain weak => standard => dominance => pointwise
    counts = [polynomials.to_path_counts(table[u], n).counts for u in range(n)]
    chain_ok = True
    chain_detail = ""
    for u in range(n):
        for v in range(n):
            if u == v:
                continue
            f, g = monos[u], monos[v]
            w = orders.leq_weak(f, g)
            s = orders.leq_std(f, g)
            dres = orders.leq_dominance(f, g)
            if w and not s:
                chain_ok, chain_detail = False, f"weak !=> standard at {f},{g}"
            if s and not dres:
                chain_ok, chain_detail = False, f"standard !=> dominance at {f},{g}"
            if dres:
                diff = [counts[v][i] - counts[u][i] for i in range(n + 1)]
                if not _pointwise_leq_from_counts(diff, table[v] - table[u]):
                    chain_ok, chain_detail = False, f"dominance !=> pointwise at {f},{g}"
    suite.check(f"orders/implication-chain m={m}", chain_ok, chain_detail)

    # multiplication compatibility over every valid triple
    ok = True
    detail = ""
    for f in monos:
        for g in monos:
            if f.bits < g.bits and f.degree == g.degree:
                for i in range(m):
                    h = Monomial(m, 1 << i)
                    if not (h.divides(f) or h.divides(g)):
                        if not orders.mult_compatible(f, g, h):
                            ok, detail = False, f"f={f} g={g} h={h}"
    suite.check(f"orders/multiplication-compat m={m}", ok, detail)

    # closures are decreasing sets; interval and Hasse sanity
    ok = True
    detail = ""
    for u in range(n):
        if monos[u].degree <= 2:
            for rel in (Relation.STANDARD, Relation.DOMINANCE):
                cl = orders.closure(monos[u], rel)
                if not orders.is_decreasing(cl, rel):
                    ok, detail = False, f"closure({monos[u]}, {rel.value}) not decreasing"
    top = Monomial(m, 1 << (m - 1))
    iv = orders.interval(Monomial(m, 0), top, Relation.STANDARD)
    if iv != {f for f in monos if f.degree <= 1}:
        ok, detail = False, "interval(1, x_{m-1}) != degree<=1 monomials"
    for rel in (Relation.WEAK, Relation.STANDARD, Relation.DOMINANCE):
        leq = {Relation.WEAK: orders.leq_weak, Relation.STANDARD: orders.leq_std,
               Relation.DOMINANCE: orders.leq_dominance}[rel]
        for a, b in orders.hasse_edges(min(m, orders.HASSE_CAP), rel):
            mm = min(m, orders.HASSE_CAP)
            fa, fb = Monomial(mm, a), Monomial(mm, b)
            if not leq(fa, fb) or fa == fb:
                ok, detail = False, f"hasse edge {a}->{b} not a strict relation"
    suite.check(f"orders/closure-decreasing m={m}", ok, detail)


def _verify_reliability(suite: _Suite, m: int, table: synthesis.ChannelTable) -> None:
    me = min(m, 4)
    ok = True
    detail = ""
    for u in range(1 << me):
        mono = Monomial(me, u)
        got = reliability.oracle_path_counts(reliability.build_graph(mono))
        want = polynomials.to_path_counts(synthesis.synth_poly(mono), 1 << me)
        if got != want:
            ok, detail = False, f"u={u}: {got.counts} != {want.counts}"
    suite.check(f"reliability/oracle-equivalence m={me}", ok, detail)

    n = 1 << m
    ok = True
    detail = ""
    for i_ones in range(m + 1):
        u = (1 << i_ones) - 1
        want = polynomials.to_path_counts(table[u], n)
        got = reliability.ni_inclusion_exclusion(m, i_ones)
        if got != want:
            ok, detail = False, f"i_ones={i_ones}"
    suite.check(f"reliability/inclusion-exclusion m={m}", ok, detail)

    ok = True
    detail = ""
    for i_ones in range(m + 1):
        u = (1 << i_ones) - 1
        closed = reliability.avr_closed_form(m, i_ones)
        integral = table.avr(u)
        if closed != integral:
            ok, detail = False, f"i_ones={i_ones}: {closed} != {integral}"
        if closed + reliability.avr_closed_form_complement(m, i_ones) != 1:
            ok, detail = False, f"complement at i={i_ones} does not sum to 1"
    suite.check(f"reliability/closed-form-avr m={m}", ok, detail)


def _verify_identities(suite: _Suite, m: int, table: synthesis.ChannelTable) -> None:
    n = 1 << m
    total = polynomials.IntPoly()
    for u in range(n):
        total = total + table[u]
    suite.check(f"identities/erasure-conservation m={m}",
                total == polynomials.IntPoly([0, n]),
                f"sum of channels != {n}p")

    ok = True
    detail = ""
    for u in range(n):
        ubar = u ^ (n - 1)
        if u < ubar and synthesis.dual_poly(table[u]) != table[ubar]:
            ok, detail = False, f"u={u}"
    suite.check(f"identities/duality m={m}", ok, detail)

    ok = True
    detail = ""
    for u in range(n):
        if table.avr(u) + table.avr(u ^ (n - 1)) != 1:
            ok, detail = False, f"u={u}"
    suite.check(f"identities/avr-complement m={m}", ok, detail)

    ok = True
    detail = ""
    for u in range(n):
        pc = polynomials.to_path_counts(table[u], n)
        length = 1 << (m - Monomial(m, u).degree)
        if pc.counts[n] != 1:
            ok, detail = False, f"u={u}: N_n != 1"
        if any(not 0 <= pc.counts[i] <= comb(n, i) for i in range(n + 1)):
            ok, detail = False, f"u={u}: N_i outside [0, C(n,i)]"
        if any(pc.counts[i] != 0 for i in range(length)):
            ok, detail = False, f"u={u}: N_i nonzero below minimal path length"
    suite.check(f"identities/path-count-bounds m={m}", ok, detail)

    ok = True
    detail = ""
    tol = Fraction(1, 2**20)
    for i_ones in range(1, m):
        u = (1 << i_ones) - 1
        t1 = synthesis.threshold_estimate(table[u], tol)
        t2 = synthesis.threshold_estimate(synthesis.dual_poly(table[u]), tol)
        if abs(t1 + t2 - 1) > 2 * tol:
            ok, detail = False, f"u={u}: {float(t1)} + {float(t2)} != 1"
    suite.check(f"identities/threshold-symmetry m={m}", ok, detail)


def _verify_tables(suite: _Suite, m: int, table: synthesis.ChannelTable) -> None:
    if m in golden.AVR_2DP_ROWS:
        ok = True
        detail = ""
        for u, cited in golden.AVR_2DP_ROWS[m]:
            exact = table.avr(u)
            if abs(exact - Fraction(cited)) >= Fraction(1, 100):
                ok, detail = False, f"u={u}: exact {float(exact):.4f} vs cited {cited}"
            if (m, u) in golden.AVR_2DP_LOOSE:
                if exact != golden.AVR_2DP_LOOSE[(m, u)]:
                    ok, detail = False, f"u={u}: exact value drifted"
            elif str(construction.render_avr(exact, 2)) != cited:
                ok, detail = False, f"u={u}: rendered {construction.render_avr(exact, 2)} != {cited}"
        suite.check(f"tables/avr-2dp m={m}", ok, detail)

    if m <= construction.INCOMPARABLE_M_CAP:
        pairs = construction.incomparable_pairs(m, table)
        if m == 5:
            suite.check("tables/incomparable-pairs m=5",
                        pairs == golden.INCOMPARABLE_PAIRS_M5,
                        f"got {pairs}")
        elif m == 4:
            suite.check("tables/incomparable-pairs m=4", pairs == [], f"got {pairs}")
        mask = (1 << m) - 1
        closed = all(tuple(sorted((mask ^ v, mask ^ u))) in set(pairs) for u, v in pairs)
        suite.check(f"tables/incomparable-complement-closure m={m}", closed,
                    "complement of an incomparable pair is comparable")

    if m == 5:
        ranking = construction.rank(construction.Criterion.average(), m, table)
        suite.check("tables/avr-ordering-prefix m=5",
                    ranking.order[:17] == golden.ORDER_PREFIX_M5,
                    f"got {ranking.order[:17]}")
        got = construction.avr_of_pairs([p for p, _ in golden.FIRST4_PAIR_DECIMALS], table, 3)
        got4 = construction.avr_of_pairs([p for p, _ in golden.FIRST4_PAIR_DECIMALS], table, 4)
        ok = True
        detail = ""
        for k, ((pair, cited), d3, d4) in enumerate(zip(golden.FIRST4_PAIR_DECIMALS, got, got4)):
            for slot in (0, 1):
                cited_d = Decimal(cited[slot])
                rendered = d4[slot] if len(cited[slot]) > 5 else d3[slot]
                ulp = Decimal(1).scaleb(cited_d.as_tuple().exponent)
                if abs(rendered - cited_d) > ulp:
                    ok, detail = False, f"pair {pair} slot {slot}: {rendered} vs {cited_d}"
        suite.check("tables/pair-avr-decimals m=5", ok, detail)
    if m == 6:
        ranking = construction.rank(construction.Criterion.average(), m, table)
        suite.check("tables/avr-ordering-prefix m=6",
                    ranking.order[:33] == golden.ORDER_PREFIX_M6[:33],
                    f"got {ranking.order[:33]}")

    counts = construction.avr_distribution(m, table)
    ok = sum(counts) == (1 << m)
    # mirror symmetry of the histogram follows from complementation only when
    # no average sits exactly on a decile edge (at m=2, 1/5 does)
    if all((table.avr(u) * 10).denominator != 1 for u in range(1 << m)):
        ok = ok and counts == counts[::-1]
    detail = f"buckets {counts}"
    if m in golden.DISTRIBUTION_FIRST5:
        ok = ok and tuple(counts[:5]) == golden.DISTRIBUTION_FIRST5[m]
    suite.check(f"tables/avr-distribution m={m}", ok, detail)

    if m in golden.BETA_INCOMPATIBLE_AT_122:
        got = construction.beta_incompatible_count(m, Decimal("1.22"), table)
        suite.check(f"tables/beta-incompatible m={m}",
                    got == golden.BETA_INCOMPATIBLE_AT_122[m],
                    f"got {got}, want {golden.BETA_INCOMPATIBLE_AT_122[m]}")
    if m in golden.BETA_ZERO_POINTS:
        ok = all(construction.beta_incompatible_count(m, Decimal(b), table) == 0
                 for b in golden.BETA_ZERO_POINTS[m])
        suite.check(f"tables/beta-zero-range m={m}", ok)
    if m == 5:
        avr_rank = construction.rank(construction.Criterion.average(), m, table)
        beta_rank = construction.rank(
            construction.Criterion.beta_expansion(Decimal("1.22")), m)
        suite.check("tables/beta-avr-coincidence m=5",
                    avr_rank.order == beta_rank.order)


def cmd_verify(args: argparse.Namespace) -> int:
    _check_cap(args.m, args.force)
    table = synthesis.synth_all(args.m, force=args.force)
    suite = _Suite()
    run = args.suite
    if run in ("orders", "all"):
        _verify_orders(suite, args.m, table)
    if run in ("reliability", "all"):
        _verify_reliability(suite, args.m, table)
    if run in ("identities", "all"):
        _verify_identities(suite, args.m, table)
    if run in ("tables", "all"):
        _verify_tables(suite, args.m, table)
    print(f"{suite.count - suite.failures}/{suite.count} checks passed")
    return 1 if suite.failures else 0


# ---------------------------------------------------------------------------
# distribution / avrplot
# ---------------------------------------------------------------------------


def cmd_distribution(args: argparse.Namespace) -> int:
    _check_cap(args.m, args.force)
    table = synthesis.synth_all(args.m, force=args.force)
    counts = construction.avr_distribution(args.m, table)
    print("bucket_low,bucket_high,count")
    for i, c in enumerate(counts):
        print(f"0.{i},{'1.0' if i == 9 else f'0.{i + 1}'},{c}")
    return 0


def cmd_avrplot(args: argparse.Namespace) -> int:
    _check_cap(args.m, args.force)
    table = synthesis.synth_all(args.m, force=args.force)
    lines = ["u,avr"]
    for u in range(1 << args.m):
        lines.append(f"{u},{_dec(table.avr(u))}")
    text = "\n".join(lines) + "\n"
    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"wrote {1 << args.m} rows to {args.out}")
    return 0


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="becpolar",
        description="Exact erasure-channel polynomials, order relations, and "
                    "average reliabilities of polar sub-channels.")
    subs = parser.add_subparsers(dest="command", required=True)

    sp = subs.add_parser("synth", help="channel polynomial coefficients and path counts")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--u", type=int, default=None, help="single channel label (default: all)")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--force", action="store_true", help="override the m cap")
    sp.set_defaults(func=cmd_synth)

    sp = subs.add_parser("rank", help="order channels by a reliability criterion")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--by", required=True, help="avr | p=<rational> | beta=<decimal>")
    sp.add_argument("--k", type=int, default=None, help="emit only the best k channels")
    sp.add_argument("--format", choices=("json", "csv"), default="csv")
    sp.add_argument("--force", action="store_true", help="override the m cap")
    sp.set_defaults(func=cmd_rank)

    sp = subs.add_parser("poset", help="Hasse diagram in DOT format")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--relation", choices=tuple(_RELATIONS), required=True)
    sp.add_argument("--dot", required=True, help="output file ('-' for stdout)")
    sp.set_defaults(func=cmd_poset)

    sp = subs.add_parser("verify", help="run exact verification checks")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--suite", choices=("orders", "reliability", "identities", "tables", "all"),
                    default="all")
    sp.add_argument("--force", action="store_true", help="override the m cap")
    sp.set_defaults(func=cmd_verify)

    sp = subs.add_parser("distribution", help="decile histogram of average reliabilities")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--force", action="store_true", help="override the m cap")
    sp.set_defaults(func=cmd_distribution)

    sp = subs.add_parser("avrplot", help="per-channel average reliabilities as CSV")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--out", required=True, help="output file ('-' for stdout)")
    sp.add_argument("--force", action="store_true", help="override the m cap")
    sp.set_defaults(func=cmd_avrplot)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
