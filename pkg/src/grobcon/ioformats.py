"""Polynomial grammar (parser + canonical printer), corpus entries, report
serialization, and DOT export.

Grammar::

    expr        := '-'? term (('+'|'-') term)*
    term        := factor ('*' factor)*
    factor      := coefficient | variable ('^' natural)? | '(' expr ')'
    coefficient := integer ('/' positive-integer)?

Whitespace is insignificant; implicit multiplication is rejected.
"""

import json
import re
from fractions import Fraction

from .errors import EntryValidationError, ParseError
from .polyring import MonomialOrder, Polynomial, RingDescriptor

_ID_RE = re.compile(r"[A-Za-z0-9._-]+\Z")


# ---------------------------------------------------------------------------
# tokenizer / parser
# ---------------------------------------------------------------------------

class _Tokens:
    SYMBOLS = "+-*/^()"

    def __init__(self, src):
        self.toks = []
        line, col = 1, 1
        i = 0
        n = len(src)
        while i < n:
            ch = src[i]
            if ch == "\n":
                line += 1
                col = 1
                i += 1
                continue
            if ch.isspace():
                col += 1
                i += 1
                continue
            if ch.isdigit():
                j = i
                while j < n and src[j].isdigit():
                    j += 1
                self.toks.append(("num", src[i:j], line, col))
                col += j - i
                i = j
                continue
            if ch.isalpha() or ch == "_":
                j = i
                while j < n and (src[j].isalnum() or src[j] == "_"):
                    j += 1
                self.toks.append(("name", src[i:j], line, col))
                col += j - i
                i = j
                continue
            if ch in self.SYMBOLS:
                self.toks.append(("sym", ch, line, col))
                col += 1
                i += 1
                continue
            raise ParseError("unexpected character %r" % ch, line, col)
        self.toks.append(("end", "", line, col))
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def next(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect_sym(self, ch):
        kind, val, line, col = self.next()
        if kind != "sym" or val != ch:
            raise ParseError("expected %r" % ch, line, col)


class _Parser:
    def __init__(self, src, ring):
        if not src or not src.strip():
            raise ParseError("empty polynomial expression", 1, 1)
        self.ts = _Tokens(src)
        self.ring = ring

    def parse(self):
        p = self._expr()
        kind, val, line, col = self.ts.peek()
        if kind != "end":
            raise ParseError("trailing input %r" % val, line, col)
        return p

    def _expr(self):
        kind, val, line, col = self.ts.peek()
        negate = kind == "sym" and val == "-"
        if negate:
            self.ts.next()
        p = self._term()
        if negate:
            p = -p
        while True:
            kind, val, line, col = self.ts.peek()
            if kind == "sym" and val in "+-":
                self.ts.next()
                q = self._term()
                p = p + q if val == "+" else p - q
            else:
                return p

    def _term(self):
        p = self._factor()
        while True:
            kind, val, line, col = self.ts.peek()
            if kind == "sym" and val == "*":
                self.ts.next()
                p = p * self._factor()
            else:
                return p

    def _factor(self):
        kind, val, line, col = self.ts.next()
        if kind == "num":
            num = int(val)
            k2, v2, l2, c2 = self.ts.peek()
            if k2 == "sym" and v2 == "/":
                self.ts.next()
                k3, v3, l3, c3 = self.ts.next()
                if k3 != "num":
                    raise ParseError("expected a denominator", l3, c3)
                den = int(v3)
                if den == 0:
                    raise ParseError("zero denominator", l3, c3)
                return Polynomial.constant(self.ring, Fraction(num, den))
            return Polynomial.constant(self.ring, num)
        if kind == "name":
            if val not in self.ring.names:
                raise ParseError("unknown variable %r" % val, line, col)
            i = self.ring.index(val)
            k2, v2, l2, c2 = self.ts.peek()
            exp = 1
            if k2 == "sym" and v2 == "^":
                self.ts.next()
                k3, v3, l3, c3 = self.ts.next()
                if k3 != "num":
                    raise ParseError("malformed exponent", l3, c3)
                exp = int(v3)
            e = [0] * self.ring.n
            e[i] = exp
            return Polynomial.monomial(self.ring, e)
        if kind == "sym" and val == "(":
            p = self._expr()
            self.ts.expect_sym(")")
            return p
        raise ParseError("expected a coefficient, variable, or '('", line, col)


def parse_polynomial(src, ring):
    """Parse one polynomial expression in the variables of ``ring``."""
    return _Parser(src, ring).parse()


# ---------------------------------------------------------------------------
# canonical printer
# ---------------------------------------------------------------------------

def _monomial_str(ring, exps):
    parts = []
    for name, e in zip(ring.names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append("%s^%d" % (name, e))
    return "*".join(parts)


def poly_to_string(f):
    """Canonical rendering; parse(poly_to_string(f)) == f."""
    if f.is_zero:
        return "0"
    chunks = []
    for i, (e, c) in enumerate(f.terms):
        mono = _monomial_str(f.ring, e)
        mag = abs(c)
        if mono and mag == 1:
            body = mono
        elif mono:
            body = "%s*%s" % (mag, mono)
        else:
            body = str(mag)
        if i == 0:
            chunks.append(body if c > 0 else "-" + body)
        else:
            chunks.append(("+ " if c > 0 else "- ") + body)
    return " ".join(chunks)


def order_from_spec(spec):
    """Build a MonomialOrder from its JSON form."""
    if spec is None:
        return MonomialOrder.grevlex()
    if isinstance(spec, str):
        spec = {"type": spec}
    kind = spec.get("type")
    if kind == "lex":
        return MonomialOrder.lex()
    if kind == "grevlex":
        return MonomialOrder.grevlex()
    if kind == "weight":
        tie = spec.get("tie", "grevlex")
        if tie not in ("lex", "grevlex"):
            raise EntryValidationError("weight tie must be lex or grevlex")
        return MonomialOrder.weight(spec["w"], MonomialOrder(tie))
    raise EntryValidationError("unknown order type %r" % (kind,))


def order_to_spec(order):
    if order.kind == "weight":
        return {"type": "weight", "w": list(order.w), "tie": order.tie.kind}
    return {"type": order.kind}


# ---------------------------------------------------------------------------
# corpus entries
# ---------------------------------------------------------------------------

class CorpusEntry:
    """One verification problem: an ideal, an order, declared minimal primes."""

    def __init__(self, entry_id, ring, ideal, order, declared_min_primes=None,
                 assume_absolutely_prime=True, limits=None):
        self.id = entry_id
        self.ring = ring
        self.ideal = ideal  # list of Polynomial
        self.order = order
        self.declared_min_primes = declared_min_primes  # list[list[Polynomial]] | None
        self.assume_absolutely_prime = assume_absolutely_prime
        self.limits = dict(limits or {})

    @property
    def is_monomial(self):
        return all(f.is_term for f in self.ideal)


def entry_from_dict(data, source="<entry>"):
    """Validate and parse a corpus entry given as a decoded JSON object."""

    def bail(msg):
        raise EntryValidationError("%s: %s" % (source, msg))

    if not isinstance(data, dict):
        bail("entry must be a JSON object")
    entry_id = data.get("id")
    if not isinstance(entry_id, str) or not _ID_RE.match(entry_id):
        bail("missing or unusable 'id' (letters, digits, . _ - only)")
    ring_spec = data.get("ring")
    if not isinstance(ring_spec, dict) or "names" not in ring_spec:
        bail("missing ring.names")
    try:
        ring = RingDescriptor(ring_spec["names"])
    except ValueError as e:
        bail(str(e))
    raw_ideal = data.get("ideal")
    if not isinstance(raw_ideal, list) or not raw_ideal:
        bail("'ideal' must be a nonempty list of polynomial strings")
    try:
        ideal = [parse_polynomial(s, ring) for s in raw_ideal]
        order = order_from_spec(data.get("order"))
        primes = None
        if data.get("declared_min_primes") is not None:
            primes = [
                [parse_polynomial(s, ring) for s in gens]
                for gens in data["declared_min_primes"]
            ]
    except ParseError as e:
        bail("parse error: %s" % e)
    if any(f.is_zero for f in ideal):
        bail("zero polynomial among the ideal generators")
    ar = order.arity()
    if ar is not None and ar != ring.n:
        bail("order weight length %d does not match %d variables" % (ar, ring.n))
    entry = CorpusEntry(
        entry_id,
        ring,
        ideal,
        order,
        declared_min_primes=primes,
        assume_absolutely_prime=bool(data.get("assume_absolutely_prime", True)),
        limits=data.get("limits"),
    )
    if not entry.is_monomial and primes is None:
        bail("non-monomial ideal requires declared_min_primes")
    if primes is not None and any(not gens or any(g.is_zero for g in gens) for gens in primes):
        bail("each declared prime needs nonzero generators")
    return entry


def load_entry(path):
    with open(path, "r", encoding="utf-8") as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as e:
            raise EntryValidationError("%s: invalid JSON (%s)" % (path, e))
    return entry_from_dict(data, source=str(path))


# ---------------------------------------------------------------------------
# reports and DOT
# ---------------------------------------------------------------------------

def dump_json(obj):
    """Canonical JSON text: sorted keys, fixed layout, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def gamma_to_dot(graph, labels, name=None):
    """Render a connectedness graph in DOT; vertices in canonical order."""
    title = name or ("gamma_t%d" % graph.t)
    lines = ["graph \"%s\" {" % title]
    for v in graph.vertices:
        lines.append("  %d [label=\"%s\"];" % (v, labels[v]))
    for i, j in sorted(graph.edges):
        lines.append("  %d -- %d;" % (i, j))
    lines.append("}")
    return "\n".join(lines) + "\n"
