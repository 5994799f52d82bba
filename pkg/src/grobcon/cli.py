"""Command-line interface.

Exit codes: 0 all verdicts pass or NotApplicable, 1 any verification
failure, 2 usage/parse errors.  Single-entry subcommands read one entry
JSON file; ``verify`` runs a corpus directory with a bounded worker pool
and writes one report envelope per entry plus a summary.
"""

import argparse
import concurrent.futures
import json
import os
import sys
import tempfile

from . import __version__
from .deformation import ring_prime_family, theorem_check
from .errors import (
    ContractViolation,
    EntryValidationError,
    GrobconError,
    ParseError,
    UnsupportedComputation,
)
from .gamma import (
    build_gamma,
    component_count,
    component_partition,
    connectedness_dimension_graphwise,
)
from .groebner import Counters, IdealPresentation, buchberger, initial_ideal, krull_dimension
from .ioformats import (
    dump_json,
    gamma_to_dot,
    load_entry,
    order_from_spec,
    poly_to_string,
)
from .lyubeznik import lyubeznik_triple
from .monomials import (
    MonomialIdealValue,
    is_squarefree,
    minimal_primes_squarefree,
)
from .polyring import Polynomial


def _color(text, code):
    if os.environ.get("NO_COLOR") or not sys.stdout.isatty():
        return text
    return "\x1b[%sm%s\x1b[0m" % (code, text)


def _status_line(entry_id, status):
    paint = {"pass": "32", "not_applicable": "36"}.get(status, "31")
    return "%s: %s" % (entry_id, _color(status, paint))


def _atomic_write(path, text):
    directory = os.path.dirname(path) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def build_envelope(entry, report, counters):
    return {
        "tool": {"name": "grobcon", "version": __version__},
        "entry": entry.id,
        "timings": counters.as_dict(),
        "report": report.as_dict(),
        "lyubeznik": report.lyubeznik,
        "diagnostics": report.diagnostics,
    }


def _load(args):
    entry = load_entry(args.entry)
    if getattr(args, "order", None):
        spec = args.order
        if spec.strip().startswith("{"):
            spec = json.loads(spec)
        entry.order = order_from_spec(spec)
        ar = entry.order.arity()
        if ar is not None and ar != entry.ring.n:
            raise EntryValidationError(
                "order weight length %d does not match %d variables" % (ar, entry.ring.n)
            )
    if getattr(args, "max_steps", None):
        entry.limits["max_steps"] = args.max_steps
    return entry


def _entry_gb(entry):
    I = IdealPresentation(entry.ring, entry.ideal)
    return buchberger(I, entry.order,
                      max_steps=entry.limits.get("max_steps"))


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def _cmd_gb(args):
    entry = _load(args)
    for g in _entry_gb(entry).basis:
        print(poly_to_string(g))
    return 0


def _cmd_initial(args):
    entry = _load(args)
    M = initial_ideal(_entry_gb(entry))
    for e in M.gens:
        print(poly_to_string(Polynomial.monomial(entry.ring, e)))
    return 0


def _cmd_dim(args):
    entry = _load(args)
    I = IdealPresentation(entry.ring, entry.ideal)
    print(krull_dimension(I, entry.order, max_steps=entry.limits.get("max_steps")))
    return 0


def _cmd_minprimes(args):
    entry = _load(args)
    if not entry.is_monomial:
        raise EntryValidationError("minprimes needs a monomial ideal")
    M = MonomialIdealValue(entry.ring, [g.terms[0][0] for g in entry.ideal])
    if not is_squarefree(M):
        raise EntryValidationError("minprimes needs a square-free monomial ideal")
    for p in minimal_primes_squarefree(M):
        print("(%s)" % ", ".join(p.names(entry.ring)))
    return 0


def _cmd_gamma(args):
    entry = _load(args)
    family = ring_prime_family(entry)
    graph = build_gamma(family, args.t)
    parts = component_partition(graph)
    print("vertices: %d" % len(graph.vertices))
    for i, label in enumerate(family.labels()):
        print("  %d: %s" % (i, label))
    print("edges: %s" % (sorted(graph.edges) or "none"))
    print("components: %d" % len(parts))
    for part in parts:
        print("  %s" % part)
    return 0


def _cmd_cdim(args):
    entry = _load(args)
    family = ring_prime_family(entry)
    print(connectedness_dimension_graphwise(family))
    return 0


def _cmd_lyubeznik(args):
    entry = _load(args)
    family = ring_prime_family(entry)
    triple = lyubeznik_triple(family)
    sys.stdout.write(dump_json(triple.as_dict()))
    return 0


def _cmd_dot(args):
    entry = _load(args)
    family = ring_prime_family(entry)
    graph = build_gamma(family, args.t)
    text = gamma_to_dot(graph, family.labels(), name="%s_t%d" % (entry.id, args.t))
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        path = os.path.join(args.out, "%s-t%d.dot" % (entry.id, args.t))
        _atomic_write(path, text)
        print(path)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_deform_check(args):
    entry = _load(args)
    counters = Counters()
    report = theorem_check(entry, counters=counters)
    envelope = build_envelope(entry, report, counters)
    text = dump_json(envelope)
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        path = os.path.join(args.out, "%s.json" % entry.id)
        _atomic_write(path, text)
        print(_status_line(entry.id, report.status))
    else:
        sys.stdout.write(text)
    return 0 if report.status in ("pass", "not_applicable") else 1


def _verify_one(job):
    path, max_steps = job
    entry = load_entry(path)
    if max_steps:
        entry.limits["max_steps"] = max_steps
    counters = Counters()
    report = theorem_check(entry, counters=counters)
    return entry.id, report.status, build_envelope(entry, report, counters)


def _cmd_verify(args):
    paths = sorted(
        os.path.join(args.corpus, name)
        for name in os.listdir(args.corpus)
        if name.endswith(".json")
    )
    if not paths:
        raise EntryValidationError("no entry files in %s" % args.corpus)
    jobs = [(p, args.max_steps) for p in paths]
    workers = args.jobs or os.cpu_count() or 1
    results = []
    if workers <= 1 or len(jobs) == 1:
        results = [_verify_one(j) for j in jobs]
    else:
        with concurrent.futures.ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_verify_one, jobs))
    results.sort(key=lambda r: r[0])
    out_dir = args.out or "reports"
    os.makedirs(out_dir, exist_ok=True)
    statuses = {}
    for entry_id, status, envelope in results:
        statuses[entry_id] = status
        _atomic_write(os.path.join(out_dir, "%s.json" % entry_id), dump_json(envelope))
        print(_status_line(entry_id, status))
    summary = {
        "tool": {"name": "grobcon", "version": __version__},
        "entries": statuses,
        "failed": sorted(
            e for e, s in statuses.items() if s not in ("pass", "not_applicable")
        ),
    }
    _atomic_write(os.path.join(out_dir, "summary.json"), dump_json(summary))
    failed = summary["failed"]
    print("%d entries, %d failed" % (len(statuses), len(failed)))
    return 1 if failed else 0


# ---------------------------------------------------------------------------

def _build_parser():
    top = argparse.ArgumentParser(
        prog="grobcon",
        description="Connectedness invariants of quotient rings across "
                    "square-free initial-ideal degenerations.",
    )
    top.add_argument("--version", action="version", version="grobcon %s" % __version__)
    sub = top.add_subparsers(dest="command", required=True)

    def add_entry_cmd(name, fn, help_text, with_order=True, with_t=False, with_out=False):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("entry", help="entry JSON file")
        if with_order:
            p.add_argument("--order", help="override the entry's order: "
                                           "lex, grevlex, or a JSON weight spec")
        p.add_argument("--max-steps", type=int, help="pair-reduction budget")
        if with_t:
            p.add_argument("--t", type=int, required=True, help="graph level")
        if with_out:
            p.add_argument("--out", help="output directory")
        p.set_defaults(fn=fn)
        return p

    add_entry_cmd("gb", _cmd_gb, "reduced Groebner basis of the entry ideal")
    add_entry_cmd("initial", _cmd_initial, "minimal generators of the initial ideal")
    add_entry_cmd("dim", _cmd_dim, "Krull dimension of the quotient (-1 for the unit ideal)")
    add_entry_cmd("minprimes", _cmd_minprimes,
                  "minimal primes of a square-free monomial entry", with_order=False)
    add_entry_cmd("gamma", _cmd_gamma, "connectedness graph at level t",
                  with_order=False, with_t=True)
    add_entry_cmd("cdim", _cmd_cdim, "graph-derived connectedness dimension",
                  with_order=False)
    add_entry_cmd("lyubeznik", _cmd_lyubeznik,
                  "graph-expressible projective invariants", with_order=False)
    add_entry_cmd("dot", _cmd_dot, "DOT rendering of the level-t graph",
                  with_order=False, with_t=True, with_out=True)
    add_entry_cmd("deform-check", _cmd_deform_check,
                  "full deformation verification of one entry", with_out=True)

    v = sub.add_parser("verify", help="run a corpus directory and write reports")
    v.add_argument("corpus", help="directory of entry JSON files")
    v.add_argument("--jobs", type=int, help="worker processes (default: logical cores)")
    v.add_argument("--max-steps", type=int, help="pair-reduction budget")
    v.add_argument("--out", help="report directory (default: reports)")
    v.set_defaults(fn=_cmd_verify)
    return top


def main(argv=None):
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (ParseError, EntryValidationError, UnsupportedComputation) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except FileNotFoundError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except ContractViolation as e:
        print("verification error: %s" % e, file=sys.stderr)
        return 1
    except GrobconError as e:
        print("error: %s" % e, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
