"""Command-line surface.

Six verbs: enumerate (list the words of a multiset), stats (statistics
of one word or tree), poly (the joint statistic polynomial), map (apply
one of the named maps), verify (check one identity or run the whole
suite), count (closed-form family size). Output is deterministic;
enumerate and map print plain lines by default, the data-shaped verbs
print JSON. Exit codes: 0 success, 1 a verified identity failed, 2
invalid input.
"""

import argparse
import json
import sys
from collections import Counter

from . import bijections, core, excedance, genfun, trees

_DEFAULT_MAX_K = 5
_DEFAULT_ORDER = 8


def _compositions(total):
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first):
            yield (first,) + rest


def _all_specs(max_K):
    out = []
    for K in range(1, max_K + 1):
        for mult in _compositions(K):
            out.append(core.MultisetSpec(mult))
    return out


def _verdict(cases, failures):
    details = {"cases": cases}
    if failures:
        details["failure_count"] = len(failures)
        details["failures"] = sorted(failures)[:5]
    return not failures, details


def _specs_for(args):
    if args.mult:
        return [core.MultisetSpec.from_text(args.mult)]
    return _all_specs(args.max_K or _DEFAULT_MAX_K)


def _mn_pairs_for(args):
    if args.mult:
        mult = core.MultisetSpec.from_text(args.mult).mult
        if len(mult) != 2:
            raise ValueError("this check takes --mult m,n (two numbers)")
        return [mult]
    cap = args.max_K or _DEFAULT_MAX_K
    return [
        (m, n)
        for m in range(1, cap + 1)
        for n in range(1, cap + 1)
        if m + n - 1 <= cap
    ]


def _check_tree_word(args):
    """phi: bijection onto the word family, carrying all five statistics."""
    cases = 0
    failures = []
    for spec in _specs_for(args):
        words = []
        for t in trees.enumerate_trees(spec):
            cases += 1
            w = bijections.phi(t)
            ts = trees.tree_stats(t)
            ws = core.stats(w)
            if (ts.cdes, ts.casc, ts.eleaf, ts.first, ts.last) != (
                ws.des,
                ws.asc,
                ws.plat,
                w[0],
                w[-1],
            ):
                failures.append(
                    "statistics mismatch at tree %s" % trees.render_tree(t)
                )
            if bijections.phi_inv(w) != t:
                failures.append("round trip failed at tree %s" % trees.render_tree(t))
            words.append(w)
        if sorted(words) != sorted(core.enumerate_qs(spec)) or len(set(words)) != len(
            words
        ):
            failures.append(
                "phi image over %s is not the whole word family" % spec.to_text()
            )
    return _verdict(cases, failures)


def _check_shift(args):
    """psi: invertible, statistic-preserving, onto the shifted family."""
    cases = 0
    failures = []
    for spec in _specs_for(args):
        source = list(trees.enumerate_trees(spec))
        for j in range(2, spec.n + 1):
            if spec.mult[j - 1] < 2:
                continue
            shifted = list(spec.mult)
            shifted[j - 2] += 1
            shifted[j - 1] -= 1
            target = core.MultisetSpec(tuple(shifted))
            images = set()
            for t in source:
                cases += 1
                tag = "%s j=%d" % (trees.render_tree(t), j)
                try:
                    t2 = bijections.psi(t, j)
                except ValueError as e:
                    failures.append("psi failed at %s: %s" % (tag, e))
                    continue
                if not trees.validate_tree(t2, target):
                    failures.append("psi image invalid at %s" % tag)
                    continue
                s1 = trees.tree_stats(t)
                s2 = trees.tree_stats(t2)
                if (s1.cdes, s1.casc, s1.eleaf) != (s2.cdes, s2.casc, s2.eleaf):
                    failures.append("psi statistics changed at %s" % tag)
                try:
                    back = bijections.psi_inv(t2, j)
                except ValueError as e:
                    failures.append("psi_inv failed at %s: %s" % (tag, e))
                    continue
                if back != t:
                    failures.append("psi round trip failed at %s" % tag)
                images.add(t2)
            if len(images) != len(source):
                failures.append(
                    "psi is not onto over %s at j=%d" % (spec.to_text(), j)
                )
    return _verdict(cases, failures)


def _check_flatten(args):
    """big_phi: bijection onto the flattened family, triple preserved."""
    cases = 0
    failures = []
    for spec in _specs_for(args):
        flat = bijections.flattened_spec(spec)
        images = set()
        for w in core.enumerate_qs(spec):
            cases += 1
            tag = core.word_to_text(w)
            try:
                w2 = bijections.big_phi(w)
            except ValueError as e:
                failures.append("big_phi failed at %s: %s" % (tag, e))
                continue
            if core.stats(w) != core.stats(w2):
                failures.append("statistic triple changed at %s" % tag)
            try:
                back = bijections.big_phi_inv(w2, spec)
            except ValueError as e:
                failures.append("big_phi_inv failed at %s: %s" % (tag, e))
                continue
            if back != w:
                failures.append("big_phi round trip failed at %s" % tag)
            images.add(w2)
        if images != set(core.enumerate_qs(flat)):
            failures.append(
                "flattened image over %s is not the whole family" % spec.to_text()
            )
    return _verdict(cases, failures)


def _check_composition_invariance(args):
    """Equal-(n, K) multisets share the joint statistic polynomial."""
    cases = 0
    failures = []
    if args.mult:
        base = core.MultisetSpec.from_text(args.mult)
        specs = [
            core.MultisetSpec(m)
            for m in _compositions(base.K)
            if len(m) == base.n
        ]
    else:
        specs = _all_specs(args.max_K or _DEFAULT_MAX_K)
    classes = {}
    for spec in specs:
        classes.setdefault((spec.n, spec.K), []).append(spec)
    for (n, K), members in sorted(classes.items()):
        ref = None
        ref_spec = None
        for spec in members:
            cases += 1
            poly = core.qs_polynomial(spec)
            if ref is None:
                ref, ref_spec = poly, spec
            elif poly != ref:
                failures.append(
                    "distribution over %s differs from %s"
                    % (spec.to_text(), ref_spec.to_text())
                )
    return _verdict(cases, failures)


def _check_descent_excedance(args):
    """Words with des = d+1 match injections with exc = d."""
    cases = 0
    failures = []
    for spec in _specs_for(args):
        cases += 1
        des_hist = Counter(core.stats(w).des for w in core.enumerate_qs(spec))
        exc_hist = Counter(
            excedance.exc(s)
            for s in excedance.enumerate_J(spec.K, spec.K - spec.n + 1)
        )
        if des_hist != Counter({d + 1: c for d, c in exc_hist.items()}):
            failures.append("histograms differ over %s" % spec.to_text())
    return _verdict(cases, failures)


def _check_max_descent(args):
    """Closed count of maximally descending words vs brute force."""
    cases = 0
    failures = []
    single = None
    for spec in _specs_for(args):
        cases += 1
        expected = genfun.max_descent_count(spec)
        got = sum(1 for w in core.enumerate_qs(spec) if core.stats(w).des == spec.n)
        single = (expected, got)
        if got != expected:
            failures.append(
                "count over %s: expected %d, got %d" % (spec.to_text(), expected, got)
            )
    ok, details = _verdict(cases, failures)
    if args.mult and single is not None:
        details["expected"] = single[0]
        details["got"] = single[1]
        details["report"] = "expected %d, got %d" % single
    return ok, details


def _check_poly_extraction(args):
    """Series coefficient extraction equals the brute-force polynomial."""
    cases = 0
    failures = []
    for spec in _specs_for(args):
        cases += 1
        if genfun.qs_polynomial_from_series(spec) != core.qs_polynomial(spec):
            failures.append("polynomials differ over %s" % spec.to_text())
    return _verdict(cases, failures)


def _check_descent_series(args):
    """Closed-form and convolved descent series coefficients agree."""
    cases = 0
    failures = []
    order = args.order or _DEFAULT_ORDER
    for spec in _specs_for(args):
        cases += 1
        lhs, rhs = genfun.descent_series_coefficients(spec, order)
        if lhs != rhs:
            failures.append("series sides differ over %s" % spec.to_text())
    return _verdict(cases, failures)


def _check_tuple_poly(args):
    """Unanchored tuple polynomial: brute force vs extraction."""
    cases = 0
    failures = []
    for m, n in _mn_pairs_for(args):
        cases += 1
        if genfun.perm_tuple_polynomial(m, n) != genfun.perm_tuple_polynomial_formula(
            m, n
        ):
            failures.append("tuple polynomial differs at m=%d, n=%d" % (m, n))
    return _verdict(cases, failures)


def _check_anchored_tuple_poly(args):
    """Anchored tuple polynomial: brute force, extraction, and the word
    polynomial of the flattened multiset all agree."""
    cases = 0
    failures = []
    for m, n in _mn_pairs_for(args):
        cases += 1
        brute = genfun.perm_tuple_polynomial(m, n, anchor=1)
        formula = genfun.perm_tuple_polynomial_formula(m, n, anchored=True)
        words = core.qs_polynomial(core.MultisetSpec((m,) + (1,) * (n - 1)))
        if brute != formula or brute != words:
            failures.append("anchored polynomial differs at m=%d, n=%d" % (m, n))
    return _verdict(cases, failures)


def _check_tuple_fold(args):
    """zeta: bijection with the three additive statistic identities."""
    cases = 0
    failures = []
    cap = args.max_K or _DEFAULT_MAX_K
    for m, n in _mn_pairs_for(argparse.Namespace(mult=None, max_K=cap)):
        spec = core.MultisetSpec((m,) + (1,) * (n - 1))
        seen = set()
        for a in bijections.enumerate_perm_tuples(m, n, anchor=1):
            cases += 1
            tag = bijections.perm_tuple_to_text(a)
            w = bijections.zeta(a)
            if bijections.zeta_inv(w) != a:
                failures.append("zeta round trip failed at %s" % tag)
            st = core.stats(w)
            asc = des = 0
            empties = 0
            for part in a:
                if part:
                    ps = core.stats(part)
                    asc += ps.asc
                    des += ps.des
                else:
                    empties += 1
            if (st.asc, st.des, st.plat) != (asc, des, empties):
                failures.append("zeta statistics differ at %s" % tag)
            seen.add(w)
        if seen != set(core.enumerate_qs(spec)):
            failures.append("zeta image misses words at m=%d, n=%d" % (m, n))
    return _verdict(cases, failures)


def _check_path_ascents(args):
    """Normal form round trip plus the excedance-from-ascents identity."""
    cases = 0
    failures = []
    cap = args.max_K or _DEFAULT_MAX_K
    for n in range(1, cap + 1):
        for r in range(1, n + 1):
            for s in excedance.enumerate_J(n, r):
                cases += 1
                rep = excedance.to_path_cycle(s)
                total = 0
                for seq in rep.paths + rep.cycles:
                    total += sum(
                        1 for i in range(len(seq) - 1) if seq[i] < seq[i + 1]
                    )
                if total != excedance.exc(s):
                    failures.append("ascent identity fails at %s" % s.to_text())
                if excedance.from_path_cycle(rep) != s:
                    failures.append("normal form round trip fails at %s" % s.to_text())
    return _verdict(cases, failures)


_CHECKS = {
    "thm22": _check_tree_word,
    "thm23": _check_shift,
    "thm11": _check_flatten,
    "thm12": _check_composition_invariance,
    "thm13": _check_descent_excedance,
    "coro14": _check_max_descent,
    "coro15": _check_poly_extraction,
    "eq2": _check_descent_series,
    "eq5": _check_tuple_poly,
    "eq7": _check_anchored_tuple_poly,
}

_SUITE_EXTRAS = {
    "zeta": _check_tuple_fold,
    "eq4": _check_path_ascents,
}


def verify_suite(max_K):
    """Run every identity family over all multisets with K <= max_K."""
    if max_K < 1:
        raise ValueError("max_K must be at least 1")
    args = argparse.Namespace(mult=None, max_K=max_K, order=_DEFAULT_ORDER)
    checks = []
    all_ok = True
    for name, fn in list(_CHECKS.items()) + list(_SUITE_EXTRAS.items()):
        try:
            ok, details = fn(args)
        except Exception as e:  # a crash counts as a failed family
            ok, details = False, {"cases": 0, "error": "%s: %s" % (type(e).__name__, e)}
        all_ok = all_ok and ok
        entry = {"name": name, "pass": ok}
        entry.update(details)
        checks.append(entry)
    return all_ok, {"max_K": max_K, "pass": all_ok, "checks": checks}


# ---------------------------------------------------------------------------
# verbs


def _require(value, flag):
    if value is None:
        raise ValueError("%s is required here" % flag)
    return value


def _parse_inj(text):
    if text.startswith("<") or text.startswith("("):
        return excedance.from_path_cycle(excedance.parse_path_cycle(text))
    return excedance.PartialInj.from_text(text)


def _emit_json(obj):
    print(json.dumps(obj, sort_keys=True))


def _cmd_enumerate(args):
    spec = core.MultisetSpec.from_text(_require(args.mult, "--mult"))
    words = [core.word_to_text(w) for w in core.enumerate_qs(spec)]
    if (args.format or "lines") == "json":
        _emit_json(words)
    else:
        for line in words:
            print(line)
    return 0


def _cmd_stats(args):
    if (args.perm is None) == (args.tree is None):
        raise ValueError("exactly one of --perm or --tree is required")
    if args.perm is not None:
        word = core.word_from_text(args.perm)
        st = core.stats(word)
        payload = {"asc": st.asc, "des": st.des, "plat": st.plat}
        line = "asc=%d des=%d plat=%d" % (st.asc, st.des, st.plat)
    else:
        t = trees.parse_tree(args.tree)
        spec = trees.infer_spec(t)
        bad = trees.tree_violation(t, spec)
        if bad is not None:
            raise ValueError(bad)
        ts = trees.tree_stats(t)
        payload = {
            "cdes": ts.cdes,
            "casc": ts.casc,
            "eleaf": ts.eleaf,
            "first": ts.first,
            "last": ts.last,
        }
        line = "cdes=%d casc=%d eleaf=%d first=%d last=%d" % ts
    if (args.format or "json") == "json":
        _emit_json(payload)
    else:
        print(line)
    return 0


def _cmd_poly(args):
    spec = core.MultisetSpec.from_text(_require(args.mult, "--mult"))
    poly = core.qs_polynomial(spec)
    if (args.format or "json") == "json":
        _emit_json(poly.to_json_obj())
    else:
        print(poly.pretty())
    return 0


def _cmd_count(args):
    spec = core.MultisetSpec.from_text(_require(args.mult, "--mult"))
    from math import factorial

    count = factorial(spec.K) // factorial(spec.K - spec.n + 1)
    if (args.format or "json") == "json":
        _emit_json(
            {"mult": spec.to_text(), "n": spec.n, "K": spec.K, "count": count}
        )
    else:
        print(count)
    return 0


def _cmd_map(args):
    which = _require(args.which, "--which")
    if which == "phi":
        t = trees.parse_tree(_require(args.tree, "--tree"))
        out = core.word_to_text(bijections.phi(t))
    elif which == "phi-inv":
        w = core.word_from_text(_require(args.perm, "--perm"))
        out = trees.render_tree(bijections.phi_inv(w))
    elif which.startswith("psi:") or which.startswith("psi-inv:"):
        token, _, jtext = which.partition(":")
        j = int(jtext)
        t = trees.parse_tree(_require(args.tree, "--tree"))
        fn = bijections.psi if token == "psi" else bijections.psi_inv
        out = trees.render_tree(fn(t, j))
    elif which == "Psi":
        t = trees.parse_tree(_require(args.tree, "--tree"))
        out = trees.render_tree(bijections.big_psi(t))
    elif which == "Phi":
        w = core.word_from_text(_require(args.perm, "--perm"))
        out = core.word_to_text(bijections.big_phi(w))
    elif which == "Phi-inv":
        w = core.word_from_text(_require(args.perm, "--perm"))
        target = core.MultisetSpec.from_text(_require(args.mult, "--mult"))
        out = core.word_to_text(bijections.big_phi_inv(w, target))
    elif which in ("chi", "delta"):
        w = core.word_from_text(_require(args.perm, "--perm"))
        fn = excedance.chi if which == "chi" else excedance.delta
        out = excedance.render_path_cycle(excedance.to_path_cycle(fn(w)))
    elif which in ("chi-inv", "delta-inv"):
        s = _parse_inj(_require(args.perm, "--perm"))
        fn = excedance.chi_inv if which == "chi-inv" else excedance.delta_inv
        out = core.word_to_text(fn(s))
    elif which == "zeta":
        a = bijections.perm_tuple_from_text(_require(args.perm, "--perm"))
        out = core.word_to_text(bijections.zeta(a))
    elif which == "zeta-inv":
        w = core.word_from_text(_require(args.perm, "--perm"))
        out = bijections.perm_tuple_to_text(bijections.zeta_inv(w))
    elif which.startswith("transport:"):
        target = core.MultisetSpec.from_text(which.partition(":")[2])
        w = core.word_from_text(_require(args.perm, "--perm"))
        out = core.word_to_text(bijections.transport(w, target))
    else:
        raise ValueError("unknown map %r" % which)
    if (args.format or "lines") == "json":
        _emit_json({"result": out})
    else:
        print(out)
    return 0


def _cmd_verify(args):
    if args.suite:
        ok, report = verify_suite(args.max_K or _DEFAULT_MAX_K)
        if (args.format or "json") == "json":
            _emit_json(report)
        else:
            for entry in report["checks"]:
                print(
                    "%s %s (cases=%d)"
                    % ("PASS" if entry["pass"] else "FAIL", entry["name"], entry["cases"])
                )
            print("PASS" if ok else "FAIL")
        return 0 if ok else 1
    check = _require(args.check, "--check (or --suite)")
    fn = _CHECKS.get(check)
    if fn is None:
        raise ValueError(
            "unknown check %r; choose one of %s" % (check, ", ".join(sorted(_CHECKS)))
        )
    ok, details = fn(args)
    payload = {"check": check, "pass": ok}
    payload.update(details)
    if (args.format or "json") == "json":
        _emit_json(payload)
    else:
        tail = " " + details["report"] if "report" in details else ""
        print("%s %s (cases=%d)%s" % ("PASS" if ok else "FAIL", check, details["cases"], tail))
    return 0 if ok else 1


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="qstirling",
        description=(
            "Quasi-Stirling words over multisets: enumeration, statistics, "
            "the tree correspondence, and identity verification."
        ),
    )
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")

    def common(p, *, mult=False, perm=False, tree=False, default_fmt="json"):
        if mult:
            p.add_argument("--mult", help="multiplicities, e.g. 2,2,1")
        if perm:
            p.add_argument("--perm", help="word or map operand in its wire format")
        if tree:
            p.add_argument("--tree", help="tree in the label(child,...) grammar")
        p.add_argument(
            "--format",
            choices=("lines", "json"),
            help="output format (default %s)" % default_fmt,
        )

    p = sub.add_parser("enumerate", help="list every word of a multiset")
    common(p, mult=True, default_fmt="lines")
    p.set_defaults(fn=_cmd_enumerate)

    p = sub.add_parser("stats", help="statistics of one word or tree")
    common(p, perm=True, tree=True)
    p.set_defaults(fn=_cmd_stats)

    p = sub.add_parser("poly", help="joint (des, asc, plat) polynomial")
    common(p, mult=True)
    p.set_defaults(fn=_cmd_poly)

    p = sub.add_parser("map", help="apply a named map to one object")
    p.add_argument(
        "--which",
        help=(
            "phi|phi-inv|psi:<j>|psi-inv:<j>|Psi|Phi|Phi-inv|chi|chi-inv|"
            "delta|delta-inv|zeta|zeta-inv|transport:<mult>"
        ),
    )
    common(p, mult=True, perm=True, tree=True, default_fmt="lines")
    p.set_defaults(fn=_cmd_map)

    p = sub.add_parser("verify", help="check one identity or the whole suite")
    p.add_argument("--check", help="|".join(sorted(_CHECKS)))
    p.add_argument("--suite", action="store_true", help="run every identity family")
    p.add_argument("--order", type=int, help="series truncation order (default 8)")
    p.add_argument(
        "--max-K",
        dest="max_K",
        type=int,
        help="sweep bound on the total size K (default %d)" % _DEFAULT_MAX_K,
    )
    common(p, mult=True)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("count", help="closed-form family size K!/(K-n+1)!")
    common(p, mult=True)
    p.set_defaults(fn=_cmd_count)

    return parser


def run(argv):
    """Parse argv (without the program name) and execute; returns the
    exit code instead of exiting, so it can be driven in-process."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2
    try:
        return args.fn(args)
    except ValueError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
