"""ASCII surface syntax: tokenizer, recursive-descent parser, canonical printer.

Expressions::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := '-' unary | '+' unary | power
    power  := atom ('^' INT)?
    atom   := INT | 'i' | NAME | NAME "'"* '(t)' | '@' NAME | '(' expr ')'

A source text may start with declarations, each ending in ``;``::

    fn even q, b;  fn odd psi, psib;  const odd eta;  const even beta;

File formats::

    chart r1n2 { even t; odd th, thb; }
    algebra n2 { even P; odd Q, Qb; bracket [Q,Qb] = 2*i*P;
                 exponent i*(t*P + th*Q + thb*Qb); stabilizer P; }
    map susy { t -> t + i*(eps*thb - th*epsb); th -> th + eps; thb -> thb + epsb; }
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .calculus import EPS, EPSB, Chart, CoordinateMap, VectorField, chart_from_declaration
from .kernel import (
    FUNC,
    Coefficient,
    Generator,
    KernelError,
    Neg,
    Parity,
    Power,
    Product,
    Quotient,
    SuperExpr,
    Sum,
    canonicalize,
    function,
    invert,
    mul,
    odd_constant,
    parameter,
    split_left,
)


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None, token: str | None = None):
        self.line, self.col, self.token = line, col, token
        where = f" at line {line}, column {col}" if line is not None else ""
        near = f" near {token!r}" if token else ""
        super().__init__(f"{message}{where}{near}")


# --------------------------------------------------------------------------
# Tokens
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Token:
    kind: str  # INT NAME PARTIAL OP EOF
    text: str
    line: int
    col: int


_TOKEN_RE = re.compile(
    r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<comment>\#[^\n]*)
  | (?P<INT>\d+)
  | (?P<PARTIAL>@[A-Za-z_][A-Za-z0-9_]*)
  | (?P<NAME>[A-Za-z_][A-Za-z0-9_]*'*)
  | (?P<OP>->|[-+*/^()\[\]{};,=])
    """,
    re.VERBOSE,
)


def tokenize(text: str) -> list[Token]:
    if not text.isascii():
        raise ParseError("only ASCII input is supported")
    tokens = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ParseError("unexpected character", line, pos - line_start + 1, text[pos])
        kind = m.lastgroup
        if kind not in ("ws", "comment"):
            tokens.append(Token(kind, m.group(), line, pos - line_start + 1))
        chunk = m.group()
        if "\n" in chunk:
            line += chunk.count("\n")
            line_start = pos + chunk.rindex("\n") + 1
        pos = m.end()
    tokens.append(Token("EOF", "", line, pos - line_start + 1))
    return tokens


# --------------------------------------------------------------------------
# Symbol context
# --------------------------------------------------------------------------

LAM = parameter("lam")


@dataclass
class Context:
    """Names visible to the parser: chart, function parities, constants."""

    chart: Chart
    functions: dict[str, Parity] = field(default_factory=dict)
    constants: dict[str, Generator] = field(default_factory=lambda: {"eps": EPS, "epsb": EPSB, "lam": LAM})

    def copy(self) -> "Context":
        return Context(self.chart, dict(self.functions), dict(self.constants))

    def declare_functions(self, names, parity: Parity):
        for n in names:
            self.functions[n] = Parity(parity)

    def declare_constant(self, name: str, parity: Parity):
        self.constants[name] = odd_constant(name) if parity else parameter(name)

    def resolve(self, name: str) -> Generator | None:
        for c in self.chart.coordinates:
            if c.name == name:
                return c
        for dc in self.chart.differentials:
            if dc.name == name:
                return dc
        return self.constants.get(name)


@dataclass(frozen=True)
class PartialLeaf:
    coordinate: Generator


# --------------------------------------------------------------------------
# Parser
# --------------------------------------------------------------------------


class Parser:
    def __init__(self, text: str, context: Context, extra_names: dict | None = None):
        self.tokens = tokenize(text)
        self.pos = 0
        self.ctx = context
        self.extra = extra_names or {}

    # token helpers -------------------------------------------------------

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def at(self, *texts) -> bool:
        t = self.tok
        return t.kind in ("OP", "NAME") and t.text in texts

    def expect(self, text: str) -> Token:
        if self.tok.text != text or self.tok.kind not in ("OP", "NAME"):
            self.fail(f"expected {text!r}")
        return self.advance()

    def expect_name(self) -> str:
        if self.tok.kind != "NAME":
            self.fail("expected a name")
        return self.advance().text

    def fail(self, message: str, tok: Token | None = None):
        tok = tok or self.tok
        raise ParseError(message, tok.line, tok.col, tok.text or "<end of input>")

    def expr_skip(self):
        """Advance past an expression without evaluating it."""
        depth = 0
        while self.tok.kind != "EOF":
            if self.tok.text in ("(", "["):
                depth += 1
            elif self.tok.text in (")", "]"):
                depth -= 1
            elif depth == 0 and self.tok.text in (";", "}"):
                return
            self.advance()

    def expect_end(self):
        if self.tok.kind != "EOF":
            self.fail("unexpected trailing input")

    # declarations --------------------------------------------------------

    def preamble(self):
        while self.at("fn", "const"):
            kw = self.advance().text
            parity_tok = self.tok
            word = self.expect_name()
            if word not in ("even", "odd"):
                self.fail("expected 'even' or 'odd'", parity_tok)
            parity = Parity.ODD if word == "odd" else Parity.EVEN
            names = self.name_list()
            self.expect(";")
            if kw == "fn":
                self.ctx.declare_functions(names, parity)
            else:
                for n in names:
                    self.ctx.declare_constant(n, parity)

    def name_list(self) -> list[str]:
        names = [self.expect_name()]
        while self.at(","):
            self.advance()
            names.append(self.expect_name())
        return names

    # expressions ---------------------------------------------------------

    def expr(self):
        terms = [self.term()]
        while self.at("+", "-"):
            op = self.advance().text
            t = self.term()
            terms.append(Neg(t) if op == "-" else t)
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def term(self):
        factors = [self.unary()]
        while self.at("*", "/"):
            op = self.advance().text
            f = self.unary()
            if op == "/":
                factors = [Quotient(_product(factors), f)]
            else:
                factors.append(f)
        return _product(factors)

    def unary(self):
        if self.at("-"):
            self.advance()
            return Neg(self.unary())
        if self.at("+"):
            self.advance()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.at("^"):
            self.advance()
            if self.tok.kind != "INT":
                self.fail("exponent must be a nonnegative integer")
            return Power(base, int(self.advance().text))
        return base

    def atom(self):
        tok = self.tok
        if tok.kind == "INT":
            self.advance()
            return Fraction(int(tok.text))
        if tok.kind == "PARTIAL":
            self.advance()
            name = tok.text[1:]
            c = next((c for c in self.ctx.chart.coordinates if c.name == name), None)
            if c is None:
                self.fail(f"unknown coordinate in partial {tok.text}", tok)
            return PartialLeaf(c)
        if tok.kind == "OP" and tok.text == "(":
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        if tok.kind == "NAME":
            self.advance()
            return self.resolve_name(tok)
        self.fail("expected an expression")

    def resolve_name(self, tok: Token):
        text = tok.text
        name = text.rstrip("'")
        order = len(text) - len(name)
        ahead = [t.text for t in self.tokens[self.pos : self.pos + 3]]
        if ahead == ["(", "t", ")"]:
            self.pos += 3
            if name not in self.ctx.functions:
                self.fail(f"parity-inference failure: function {name!r} has no declared parity", tok)
            return function(name, self.ctx.functions[name], order)
        if order:
            self.fail("derivative marks need a function application '(t)'", tok)
        if name == "i":
            return Coefficient(0, 1)
        if name in self.extra:
            return self.extra[name]
        g = self.ctx.resolve(name)
        if g is None:
            self.fail(f"unknown identifier {name!r}", tok)
        return g


def _product(factors):
    return factors[0] if len(factors) == 1 else Product(tuple(factors))


# --------------------------------------------------------------------------
# Evaluation with vector-field leaves
# --------------------------------------------------------------------------


def _contains_partial(node) -> bool:
    if isinstance(node, PartialLeaf):
        return True
    if isinstance(node, Sum):
        return any(_contains_partial(t) for t in node.terms)
    if isinstance(node, Product):
        return any(_contains_partial(f) for f in node.factors)
    if isinstance(node, Neg):
        return _contains_partial(node.arg)
    if isinstance(node, Power):
        return _contains_partial(node.base)
    if isinstance(node, Quotient):
        return _contains_partial(node.num) or _contains_partial(node.den)
    return False


def _eval_vf(node, chart: Chart) -> VectorField:
    if isinstance(node, PartialLeaf):
        return VectorField(chart, {node.coordinate: SuperExpr.const(1)})
    if isinstance(node, Sum):
        out = VectorField(chart)
        for t in node.terms:
            out = out + _eval_vf_or_fail(t, chart)
        return out
    if isinstance(node, Neg):
        return -_eval_vf(node.arg, chart)
    if isinstance(node, Product):
        flags = [_contains_partial(f) for f in node.factors]
        if sum(flags) != 1 or not flags[-1]:
            raise ParseError("a vector-field term needs exactly one partial as its last factor")
        coeff = canonicalize(Product(node.factors[:-1])) if len(node.factors) > 1 else SuperExpr.const(1)
        return coeff * _eval_vf(node.factors[-1], chart)
    if isinstance(node, Quotient) and not _contains_partial(node.den):
        num = _eval_vf(node.num, chart)
        return VectorField(chart, {c: mul(comp, invert(canonicalize(node.den))) for c, comp in num.items()})
    raise ParseError("partial derivatives cannot appear here")


def _eval_vf_or_fail(node, chart):
    if not _contains_partial(node):
        value = canonicalize(node)
        if value:
            raise ParseError("cannot add a function to a vector field")
        return VectorField(chart)
    return _eval_vf(node, chart)


# --------------------------------------------------------------------------
# Public parsing API
# --------------------------------------------------------------------------


def _run(text: str, context: Context, build):
    p = Parser(text, context.copy())
    p.preamble()
    tree = p.expr()
    p.expect_end()
    try:
        return build(tree, p.ctx)
    except KernelError as exc:
        raise ParseError(str(exc)) from None


def parse_expr(text: str, context: Context) -> SuperExpr:
    def build(tree, ctx):
        if _contains_partial(tree):
            raise ParseError("expected an expression, found a vector field")
        return canonicalize(tree)

    return _run(text, context, build)


def parse_vf(text: str, context: Context) -> VectorField:
    def build(tree, ctx):
        if not _contains_partial(tree):
            if canonicalize(tree):
                raise ParseError("expected a vector field (use @t, @th, ...)")
            return VectorField(ctx.chart)
        return _eval_vf(tree, ctx.chart)

    return _run(text, context, build)


def parse_chart(text: str) -> Chart:
    """``chart NAME { even t; odd th, thb; }``"""
    from .calculus import R1N2

    p = Parser(text, Context(R1N2))
    p.expect("chart")
    name = p.expect_name()
    p.expect("{")
    even, odd = [], []
    while not p.at("}"):
        kw_tok = p.tok
        kw = p.expect_name()
        if kw not in ("even", "odd"):
            p.fail("expected 'even' or 'odd'", kw_tok)
        (even if kw == "even" else odd).extend(p.name_list())
        p.expect(";")
    p.expect("}")
    p.expect_end()
    return chart_from_declaration(name, even, odd)


def parse_map(text: str, context: Context) -> CoordinateMap:
    """``map NAME { c -> expr; ... }`` preceded by optional declarations."""
    p = Parser(text, context.copy())
    p.preamble()
    p.expect("map")
    p.expect_name()
    p.expect("{")
    images = {}
    while not p.at("}"):
        tok = p.tok
        name = p.expect_name()
        try:
            c = p.ctx.chart.coordinate(name)
        except ValueError:
            p.fail(f"unknown coordinate {name!r}", tok)
        p.expect("->")
        tree = p.expr()
        p.expect(";")
        if _contains_partial(tree):
            p.fail("map images cannot contain partials", tok)
        images[c] = canonicalize(tree)
    p.expect("}")
    p.expect_end()
    try:
        return CoordinateMap(p.ctx.chart, images)
    except KernelError as exc:
        raise ParseError(str(exc)) from None


def parse_context_preamble(text: str, context: Context) -> Context:
    p = Parser(text, context.copy())
    p.preamble()
    p.expect_end()
    return p.ctx


# --------------------------------------------------------------------------
# Printer
# --------------------------------------------------------------------------


def _frac(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _coefficient_prefix(c: Coefficient, has_factors: bool) -> tuple[str, str]:
    """Sign and coefficient text (without trailing '*')."""
    re_, im = c.re, c.im
    if im == 0:
        sign, mag = ("-" if re_ < 0 else "+"), abs(re_)
        if mag == 1 and has_factors:
            return sign, ""
        return sign, _frac(mag)
    if re_ == 0:
        sign, mag = ("-" if im < 0 else "+"), abs(im)
        return sign, "i" if mag == 1 else f"{_frac(mag)}*i"
    im_sign = "-" if im < 0 else "+"
    im_mag = abs(im)
    im_text = "i" if im_mag == 1 else f"{_frac(im_mag)}*i"
    return "+", f"({_frac(re_)} {im_sign} {im_text})"


def _factor_text(g: Generator, k: int = 1) -> str:
    s = str(g)
    return s if k == 1 else f"{s}^{k}"


def _monomial_body(key) -> list[str]:
    evens, odds = key
    # odd factors in canonical order first, then the commuting even ones
    return [_factor_text(g) for g in odds] + [_factor_text(g, k) for g, k in evens]


def term_sort_key(key):
    evens, odds = key
    return (tuple(g.key for g in odds), tuple((g.key, k) for g, k in evens))


def _render_terms(items) -> str:
    """``items``: list of (coefficient, factor strings)."""
    if not items:
        return "0"
    parts = []
    for n, (c, factors) in enumerate(items):
        sign, ctext = _coefficient_prefix(c, bool(factors))
        body_ = "*".join(([ctext] if ctext else []) + factors)
        if n == 0:
            parts.append(("-" if sign == "-" else "") + body_)
        else:
            parts.append(f" {sign} {body_}")
    return "".join(parts)


def print_canonical(e: SuperExpr) -> str:
    keys = sorted(e.terms, key=term_sort_key)
    return _render_terms([(e.terms[k], _monomial_body(k)) for k in keys])


def print_vector_field(X: VectorField) -> str:
    items = []
    for c, comp in X.items():
        for k in sorted(comp.terms, key=term_sort_key):
            items.append((comp.terms[k], _monomial_body(k) + ["@" + c.name]))
    return _render_terms(items)


def function_generators(e: SuperExpr) -> dict[str, Parity]:
    return {g.name: g.parity for g in e.generators() if g.kind == FUNC}


def preamble_for(*values) -> str:
    """Declarations needed to reparse printed output containing functions."""
    funcs: dict[str, Parity] = {}
    for v in values:
        comps = v.components if isinstance(v, VectorField) else (v,)
        for comp in comps:
            funcs.update(function_generators(comp))
    chunks = []
    for parity, word in ((Parity.EVEN, "even"), (Parity.ODD, "odd")):
        names = sorted(n for n, p in funcs.items() if p == parity)
        if names:
            chunks.append(f"fn {word} {', '.join(names)};")
    return " ".join(chunks)


# --------------------------------------------------------------------------
# Lie algebra declarations
# --------------------------------------------------------------------------


def _placeholders(basis) -> dict[str, Generator]:
    return {s: (odd_constant if p else parameter)(f"%{s}") for s, p in basis}


def _linear_in_basis(value: SuperExpr, holders: dict[str, Generator], tok, p: Parser) -> dict[str, SuperExpr]:
    """Read ``sum f_a e_a`` (coefficient on the left) off an expression in placeholders."""
    by_gen = {g: s for s, g in holders.items()}
    parts = split_left(value, lambda g: g in by_gen)
    out: dict[str, SuperExpr] = {}
    for (evens, odds), rest in parts.items():
        if not evens and not odds:
            p.fail("every term must contain exactly one basis element", tok)
        if evens and not odds and len(evens) == 1 and evens[0][1] == 1:
            g = evens[0][0]
        elif odds and not evens and len(odds) == 1:
            g = odds[0]
        else:
            p.fail("expression is not linear in the basis elements", tok)
        coeff = SuperExpr()
        # split_left put e_a on the left; move it back to the right
        for key, c in rest.terms.items():
            sign = -1 if (g.is_odd and len(key[1]) & 1) else 1
            coeff = coeff + SuperExpr({key: c if sign > 0 else -c})
        out[by_gen[g]] = out.get(by_gen[g], SuperExpr()) + coeff
    return out


def parse_algebra(text: str, context: Context):
    """``algebra NAME { even P; odd Q, Qb; bracket [Q,Qb] = 2*i*P; ... }``.

    Optional ``exponent EXPR;`` (linear in the basis, coefficients on the
    left) and ``stabilizer P, ...;`` statements complete a coset declaration.
    """
    from .lie import LieError, presentation

    p = Parser(text, context.copy())
    p.preamble()
    p.expect("algebra")
    name = p.expect_name()
    p.expect("{")
    basis: list[tuple[str, Parity]] = []
    pending: list[tuple] = []
    stabilizer: list[str] = []
    while not p.at("}"):
        tok = p.tok
        kw = p.expect_name()
        if kw in ("even", "odd"):
            for n in p.name_list():
                basis.append((n, Parity.ODD if kw == "odd" else Parity.EVEN))
        elif kw == "bracket":
            p.expect("[")
            a = p.expect_name()
            p.expect(",")
            b = p.expect_name()
            p.expect("]")
            p.expect("=")
            pending.append(("bracket", tok, (a, b), p.tokens, p.pos))
            p.expr_skip()
        elif kw == "exponent":
            pending.append(("exponent", tok, None, p.tokens, p.pos))
            p.expr_skip()
        elif kw == "stabilizer":
            stabilizer.extend(p.name_list())
        else:
            p.fail(f"unknown statement {kw!r}", tok)
        p.expect(";")
    p.expect("}")
    p.expect_end()

    holders = _placeholders(basis)
    brackets, exponent = {}, None
    for kind, tok, pair, tokens, pos in pending:
        sub = Parser("", p.ctx, extra_names=holders)
        sub.tokens, sub.pos = tokens, pos
        tree = sub.expr()
        value = canonicalize(tree)
        lin = _linear_in_basis(value, holders, tok, sub)
        if kind == "bracket":
            coeffs = {}
            for sym, c in lin.items():
                if not c.is_constant():
                    sub.fail("structure constants must be numbers", tok)
                coeffs[sym] = c.constant_term()
            brackets[pair] = coeffs
        else:
            exponent = lin
    try:
        return presentation(name, basis, brackets, exponent, stabilizer)
    except LieError as exc:
        raise ParseError(str(exc)) from None
