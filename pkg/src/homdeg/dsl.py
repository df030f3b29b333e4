"""Input language for describing rings, ideals, modules, and checks.

Grammar (statements end with ';'):

    ring NAME = FIELD[var, var, ...];        FIELD: QQ | FP(prime)
    ideal NAME = iexpr;
    algebra NAME = RINGNAME / IDEALNAME;
    module NAME = coker [[poly, ...], ...];  rows = ambient components
    params NAME = (poly, poly, ...);
    example ex39 l=INT m=INT;                built-in families
    example ex46 l=INT;
    check thm1 | thm2 | invariants | audit;

    iexpr := '(' poly, ..., poly ')'
           | intersect(iexpr, iexpr)
           | product(iexpr, iexpr)
           | power(iexpr, INT)

Polynomials use integer or INT/INT coefficients, identifiers declared in
the ring, and the operators + - * ^ with parentheses.  All declared
generators must be homogeneous.  Errors carry line and column.
"""

from dataclasses import dataclass, field

from .errors import DslError, InhomogeneousError
from .fields import QQ, PrimeField
from .freemod import FreeElement, FreeModule
from .modules import Algebra, Presentation, intersect_submodules
from .ring import PolyRing, Polynomial

_KEYWORDS = {
    "ring",
    "ideal",
    "algebra",
    "module",
    "params",
    "check",
    "example",
    "coker",
    "intersect",
    "product",
    "power",
    "QQ",
    "FP",
}

_CHECKS = ("thm1", "thm2", "invariants", "audit")


@dataclass(frozen=True)
class Token:
    kind: str  # name | int | punct
    text: str
    line: int
    col: int


def _tokenize(text):
    toks = []
    line, col = 1, 1
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        start_col = col
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(Token("name", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(Token("int", text[i:j], line, start_col))
            col += j - i
            i = j
            continue
        if ch in "=[](),;/^*+-":
            toks.append(Token("punct", ch, line, start_col))
            i += 1
            col += 1
            continue
        raise DslError(f"unexpected character {ch!r}", line, col)
    toks.append(Token("eof", "", line, col))
    return toks


@dataclass
class RingDecl:
    name: str
    ring: PolyRing

    def unparse(self):
        f = self.ring.field
        tag = "QQ" if f == QQ else f"FP({f.p})"
        return f"ring {self.name} = {tag}[{', '.join(self.ring.names)}];"


@dataclass
class IdealDecl:
    name: str
    gens: tuple  # Polynomial

    def unparse(self):
        return f"ideal {self.name} = ({', '.join(map(repr, self.gens))});"


@dataclass
class AlgebraDecl:
    name: str
    algebra: Algebra
    ring_name: str
    ideal_name: str

    def unparse(self):
        return f"algebra {self.name} = {self.ring_name} / {self.ideal_name};"


@dataclass(eq=False)
class ModuleDecl:
    name: str
    pres: Presentation

    def __eq__(self, other):
        return (
            isinstance(other, ModuleDecl)
            and self.name == other.name
            and self.pres.algebra == other.pres.algebra
            and self.pres.rank == other.pres.rank
            and self.pres.twists == other.pres.twists
            and self.pres.columns == other.pres.columns
        )

    def unparse(self):
        rows = []
        cols = self.pres.columns
        for i in range(self.pres.rank):
            rows.append("[" + ", ".join(repr(c.component(i)) for c in cols) + "]")
        return f"module {self.name} = coker [{', '.join(rows)}];"


@dataclass
class ParamsDecl:
    name: str
    gens: tuple

    def unparse(self):
        return f"params {self.name} = ({', '.join(map(repr, self.gens))});"


@dataclass
class ExampleCmd:
    family: str
    args: tuple  # sorted (key, int) pairs

    def unparse(self):
        tail = " ".join(f"{k}={v}" for k, v in self.args)
        return f"example {self.family} {tail};"


@dataclass
class CheckCmd:
    kind: str

    def unparse(self):
        return f"check {self.kind};"


@dataclass
class InputScript:
    statements: list = field(default_factory=list)

    def unparse(self):
        return "\n".join(s.unparse() for s in self.statements) + "\n"

    def __eq__(self, other):
        return (
            isinstance(other, InputScript) and self.statements == other.statements
        )


def _dedupe(polys):
    """Drop repeated generators, preserving first-seen order."""
    seen = set()
    out = []
    for p in polys:
        if p not in seen:
            seen.add(p)
            out.append(p)
    return out


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.pos = 0
        self.rings = {}
        self.ideals = {}
        self.algebras = {}
        self.modules = {}
        self.params = {}
        self.current_ring = None

    # ---- token plumbing ----------------------------------------------

    def peek(self):
        return self.toks[self.pos]

    def next(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect(self, text):
        t = self.next()
        if t.text != text:
            raise DslError(f"expected {text!r}, found {t.text!r}", t.line, t.col)
        return t

    def expect_name(self):
        t = self.next()
        if t.kind != "name":
            raise DslError(f"expected a name, found {t.text!r}", t.line, t.col)
        return t

    def expect_int(self):
        t = self.next()
        if t.kind != "int":
            raise DslError(f"expected an integer, found {t.text!r}", t.line, t.col)
        return int(t.text)

    # ---- statements --------------------------------------------------

    def parse(self):
        script = InputScript()
        while self.peek().kind != "eof":
            t = self.peek()
            handler = {
                "ring": self._ring,
                "ideal": self._ideal,
                "algebra": self._algebra,
                "module": self._module,
                "params": self._params,
                "example": self._example,
                "check": self._check,
            }.get(t.text)
            if handler is None:
                raise DslError(f"unknown statement {t.text!r}", t.line, t.col)
            script.statements.append(handler())
            self.expect(";")
        return script

    def _fresh(self, tok):
        name = tok.text
        if name in _KEYWORDS:
            raise DslError(f"{name!r} is a reserved word", tok.line, tok.col)
        for space in (self.rings, self.ideals, self.algebras, self.modules, self.params):
            if name in space:
                raise DslError(f"{name!r} is already declared", tok.line, tok.col)
        return name

    def _ring(self):
        self.expect("ring")
        ntok = self.expect_name()
        name = self._fresh(ntok)
        self.expect("=")
        ftok = self.next()
        if ftok.text == "QQ":
            fld = QQ
        elif ftok.text == "FP":
            self.expect("(")
            p = self.expect_int()
            try:
                fld = PrimeField(p)
            except ValueError as exc:
                raise DslError(str(exc), ftok.line, ftok.col)
            self.expect(")")
        else:
            raise DslError(
                f"expected QQ or FP(p), found {ftok.text!r}", ftok.line, ftok.col
            )
        self.expect("[")
        names = [self.expect_name().text]
        while self.peek().text == ",":
            self.next()
            names.append(self.expect_name().text)
        self.expect("]")
        if len(set(names)) != len(names):
            raise DslError("duplicate variable name", ntok.line, ntok.col)
        ring = PolyRing(names, field=fld)
        self.rings[name] = ring
        self.current_ring = ring
        return RingDecl(name, ring)

    def _require_ring(self, tok):
        if self.current_ring is None:
            raise DslError("no ring declared yet", tok.line, tok.col)
        return self.current_ring

    def _ideal(self):
        t = self.expect("ideal")
        ntok = self.expect_name()
        name = self._fresh(ntok)
        self.expect("=")
        self._require_ring(t)
        gens = self._ideal_expr()
        for g in gens:
            if g and not g.is_homogeneous():
                raise DslError(
                    f"inhomogeneous generator {g!r}", ntok.line, ntok.col
                )
        gens = tuple(g for g in gens if g)
        self.ideals[name] = gens
        return IdealDecl(name, gens)

    def _ideal_expr(self):
        t = self.peek()
        if t.text == "(":
            self.next()
            gens = list(self._ideal_item())
            while self.peek().text == ",":
                self.next()
                gens.extend(self._ideal_item())
            self.expect(")")
            return gens
        if t.text == "intersect":
            self.next()
            self.expect("(")
            a = self._ideal_expr()
            self.expect(",")
            b = self._ideal_expr()
            self.expect(")")
            return self._intersect(a, b)
        if t.text == "product":
            self.next()
            self.expect("(")
            a = self._ideal_expr()
            self.expect(",")
            b = self._ideal_expr()
            self.expect(")")
            return _dedupe(f * g for f in a for g in b)
        if t.text == "power":
            self.next()
            self.expect("(")
            a = self._ideal_expr()
            self.expect(",")
            k = self.expect_int()
            self.expect(")")
            out = a
            for _ in range(k - 1):
                out = _dedupe(f * g for f in out for g in a)
            return out if k >= 1 else [self.current_ring.one]
        if t.kind == "name" and t.text in self.ideals:
            self.next()
            return list(self.ideals[t.text])
        raise DslError(
            f"expected an ideal expression, found {t.text!r}", t.line, t.col
        )

    def _ideal_item(self):
        """One entry of a generator list: a polynomial, or a nested ideal
        expression whose generators are spliced in."""
        t = self.peek()
        if t.text in ("intersect", "product", "power"):
            return self._ideal_expr()
        if (
            t.kind == "name"
            and t.text in self.ideals
            and t.text not in (self.current_ring.names if self.current_ring else ())
        ):
            return self._ideal_expr()
        return [self._poly()]

    def _intersect(self, a, b):
        ring = self.current_ring
        one_mod = FreeModule(ring, 1)
        a = [g for g in a if g]
        b = [g for g in b if g]
        inter = intersect_submodules(
            [one_mod.inject(g) for g in a], [one_mod.inject(g) for g in b], one_mod
        )
        return [el.component(0) for el in inter]

    def _algebra(self):
        self.expect("algebra")
        ntok = self.expect_name()
        name = self._fresh(ntok)
        self.expect("=")
        rtok = self.expect_name()
        if rtok.text not in self.rings:
            raise DslError(f"undeclared ring {rtok.text!r}", rtok.line, rtok.col)
        self.expect("/")
        itok = self.expect_name()
        if itok.text not in self.ideals:
            raise DslError(f"undeclared ideal {itok.text!r}", itok.line, itok.col)
        alg = Algebra(self.rings[rtok.text], self.ideals[itok.text])
        self.algebras[name] = alg
        return AlgebraDecl(name, alg, rtok.text, itok.text)

    def _module(self):
        t = self.expect("module")
        ntok = self.expect_name()
        name = self._fresh(ntok)
        self.expect("=")
        self.expect("coker")
        ring = self._require_ring(t)
        self.expect("[")
        rows = [self._poly_row()]
        while self.peek().text == ",":
            self.next()
            rows.append(self._poly_row())
        self.expect("]")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DslError("ragged presentation matrix", ntok.line, ntok.col)
        alg = self._latest_algebra() or Algebra(ring, ())
        rank = len(rows)
        ambient = FreeModule(ring, rank)
        cols = []
        for j in range(width):
            terms = {}
            for i in range(rank):
                for m, c in rows[i][j].terms.items():
                    terms[(i, m)] = c
            el = FreeElement(ambient, terms)
            if el and not el.is_homogeneous():
                raise DslError(
                    f"inhomogeneous matrix column {j}", ntok.line, ntok.col
                )
            cols.append(el)
        try:
            pres = Presentation(alg, rank, (0,) * rank, cols)
        except InhomogeneousError as exc:
            raise DslError(str(exc), ntok.line, ntok.col)
        self.modules[name] = pres
        return ModuleDecl(name, pres)

    def _latest_algebra(self):
        if not self.algebras:
            return None
        return next(reversed(self.algebras.values()))

    def _poly_row(self):
        self.expect("[")
        row = [self._poly()]
        while self.peek().text == ",":
            self.next()
            row.append(self._poly())
        self.expect("]")
        return row

    def _params(self):
        t = self.expect("params")
        ntok = self.expect_name()
        name = self._fresh(ntok)
        self.expect("=")
        self._require_ring(t)
        self.expect("(")
        gens = [self._poly()]
        while self.peek().text == ",":
            self.next()
            gens.append(self._poly())
        self.expect(")")
        for g in gens:
            if g and not g.is_homogeneous():
                raise DslError(f"inhomogeneous parameter {g!r}", ntok.line, ntok.col)
        gens = tuple(g for g in gens if g)
        if not gens:
            raise DslError("empty parameter list", ntok.line, ntok.col)
        self.params[name] = gens
        return ParamsDecl(name, gens)

    def _example(self):
        self.expect("example")
        ftok = self.expect_name()
        if ftok.text not in ("ex39", "ex46"):
            raise DslError(
                f"unknown example family {ftok.text!r}", ftok.line, ftok.col
            )
        args = {}
        while self.peek().kind == "name":
            k = self.expect_name()
            self.expect("=")
            args[k.text] = self.expect_int()
        wanted = {"ex39": {"l", "m"}, "ex46": {"l"}}[ftok.text]
        if set(args) != wanted:
            raise DslError(
                f"{ftok.text} needs arguments {sorted(wanted)}", ftok.line, ftok.col
            )
        return ExampleCmd(ftok.text, tuple(sorted(args.items())))

    def _check(self):
        self.expect("check")
        t = self.next()
        if t.text not in _CHECKS:
            raise DslError(
                f"unknown check {t.text!r}; expected one of {', '.join(_CHECKS)}",
                t.line,
                t.col,
            )
        return CheckCmd(t.text)

    # ---- polynomial expressions --------------------------------------

    def _poly(self):
        return self._sum()

    def _sum(self):
        t = self.peek()
        if t.text == "-":
            self.next()
            out = -self._term()
        else:
            out = self._term()
        while self.peek().text in ("+", "-"):
            op = self.next().text
            rhs = self._term()
            out = out + rhs if op == "+" else out - rhs
        return out

    def _term(self):
        out = self._factor()
        while self.peek().text == "*":
            self.next()
            out = out * self._factor()
        return out

    def _factor(self):
        base = self._atom()
        while self.peek().text == "^":
            self.next()
            k = self.expect_int()
            base = base**k
        return base

    def _atom(self):
        t = self.next()
        ring = self.current_ring
        if t.text == "-":
            return -self._factor()
        if t.kind == "int":
            num = int(t.text)
            if self.peek().text == "/":
                self.next()
                den = self.expect_int()
                if den == 0:
                    raise DslError("zero denominator", t.line, t.col)
                c = ring.field.from_int(num) / ring.field.from_int(den)
                return Polynomial(ring, {ring.zero_mono: c} if c else {})
            return ring.const(num)
        if t.kind == "name":
            if ring is None:
                raise DslError("no ring declared yet", t.line, t.col)
            if t.text in ring.names:
                return ring.var(ring.names.index(t.text))
            raise DslError(f"unknown variable {t.text!r}", t.line, t.col)
        if t.text == "(":
            inner = self._sum()
            self.expect(")")
            return inner
        raise DslError(f"expected a polynomial, found {t.text!r}", t.line, t.col)


def parse_input(text):
    """Parse a script; raises DslError with line/column on any problem."""
    return _Parser(text).parse()
