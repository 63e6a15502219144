"""Text forms of fields, elements, polynomials and matrices, and JSON reports.

Field descriptors::

    GF(5)                      prime field
    GF(4)                      GF(p^e) with the canonical (lexicographically first) modulus
    GF(2)[X]/(X^2+X+1)         explicit extension of a prime field
    QQ                         rationals
    GF(2)(t)                   rational functions over a finite field

Elements are arithmetic expressions in the field's variables with +, -, *,
/, ^ and parentheses.  A bracket ``[c0,c1,...]`` denotes an element of a
finite extension by its coefficients, as printed by the field itself.
"""

from fractions import Fraction
import json
import re

from .errors import ShapeError, UniserialError
from .fields import ExtensionField, FieldElement, PrimeField, Rationals, RationalFunctionField
from .linalg import Mat
from .poly import GF, Poly

SCHEMA_VERSION = 1


class ParseError(UniserialError, ValueError):
    """Malformed input; ``where`` locates it (e.g. a JSON path) and ``column`` is 1-based."""

    def __init__(self, msg, text=None, column=None, where=None):
        loc = []
        if where:
            loc.append(where)
        if column is not None:
            loc.append(f"column {column}")
        prefix = f"{', '.join(loc)}: " if loc else ""
        super().__init__(prefix + msg + (f" in {text!r}" if text is not None else ""))
        self.msg = msg
        self.text = text
        self.column = column
        self.where = where


# ---------------------------------------------------------------------------
# expressions

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\[[^\]]*\])|(.))")


def _tokenize(text):
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        num, name, bracket, op = m.groups()
        col = m.start(m.lastindex) + 1
        if num is not None:
            out.append(("num", int(num), col))
        elif name is not None:
            out.append(("name", name, col))
        elif bracket is not None:
            out.append(("bracket", bracket, col))
        elif op in "+-*/^()":
            out.append(("op", op, col))
        else:
            raise ParseError(f"unexpected character {op!r}", text, col)
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text, const, names, bracket):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.const = const
        self.names = names
        self.bracket = bracket

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self):
        t = self.peek()
        if t is None:
            raise ParseError("unexpected end of input", self.text, len(self.text) + 1)
        self.i += 1
        return t

    def error(self, msg, tok):
        raise ParseError(msg, self.text, tok[2] if tok else len(self.text) + 1)

    def parse(self):
        if not self.toks:
            raise ParseError("empty expression", self.text)
        v = self.expr()
        t = self.peek()
        if t is not None:
            self.error(f"unexpected {t[1]!r}", t)
        return v

    def expr(self):
        t = self.peek()
        if t and t[0] == "op" and t[1] in "+-":
            self.take()
            v = self.term()
            if t[1] == "-":
                v = -v
        else:
            v = self.term()
        while True:
            t = self.peek()
            if t and t[0] == "op" and t[1] in "+-":
                self.take()
                w = self.term()
                v = v + w if t[1] == "+" else v - w
            else:
                return v

    def term(self):
        v = self.power()
        while True:
            t = self.peek()
            if t and t[0] == "op" and t[1] in "*/":
                self.take()
                w = self.power()
                if t[1] == "*":
                    v = v * w
                else:
                    try:
                        v = v / w
                    except ZeroDivisionError:
                        self.error("division by zero", t)
                    except TypeError:
                        self.error("division is not available here", t)
            elif t and (t[0] in ("name", "bracket", "num") or t[1] == "("):
                v = v * self.power()
            else:
                return v

    def power(self):
        v = self.atom()
        t = self.peek()
        if t and t[0] == "op" and t[1] == "^":
            self.take()
            neg = False
            e = self.take()
            if e[0] == "op" and e[1] == "-":
                neg, e = True, self.take()
            if e[0] != "num":
                self.error("exponent must be an integer", e)
            if neg:
                try:
                    v = v ** (-e[1])
                except (ZeroDivisionError, ValueError, TypeError):
                    self.error("negative power not available here", e)
            else:
                v = v ** e[1]
        return v

    def atom(self):
        t = self.take()
        kind, val, col = t
        if kind == "num":
            return self.const(val)
        if kind == "name":
            if val not in self.names:
                self.error(f"unknown name {val!r}", t)
            return self.names[val]
        if kind == "bracket":
            try:
                coeffs = [int(c) for c in val[1:-1].split(",") if c.strip()]
            except ValueError:
                self.error("bracket literals hold integer coefficients", t)
            if self.bracket is None:
                self.error("bracket literal not valid here", t)
            return self.bracket(coeffs)
        if val == "(":
            v = self.expr()
            c = self.take()
            if c[1] != ")":
                self.error("expected ')'", c)
            return v
        self.error(f"unexpected {val!r}", t)


def _field_names(F):
    """Variable names usable in element expressions of F."""
    names = {}
    if isinstance(F, ExtensionField):
        names[F.var] = F.gen
    if isinstance(F, RationalFunctionField):
        B = F.base
        if isinstance(B, ExtensionField):
            names[B.var] = F.element(F.coerce(B.gen))
        names[F.var] = F.gen
    return names


def _bracket(F):
    if isinstance(F, ExtensionField):
        return lambda cs: F.element(F.coerce(cs))
    if isinstance(F, RationalFunctionField) and isinstance(F.base, ExtensionField):
        B = F.base
        return lambda cs: F.element(F.coerce(B.element(B.coerce(cs))))
    return None


def parse_element(text, F, where=None):
    """Parse an element of F from a string (ints and Fractions are accepted as is)."""
    if isinstance(text, FieldElement):
        return F(text)
    if isinstance(text, bool):
        raise ParseError("booleans are not field elements", where=where)
    if isinstance(text, (int, Fraction)):
        return F(text)
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}", where=where)
    try:
        v = _Parser(text, lambda n: F(n), _field_names(F), _bracket(F)).parse()
    except ParseError as e:
        raise ParseError(e.msg, e.text, e.column, where) from None
    if not isinstance(v, FieldElement):
        v = F(v)
    return v


def parse_poly(text, F, var="X"):
    """Polynomial over F from an expression in ``var`` or a coefficient list (constant term first)."""
    if isinstance(text, (list, tuple)):
        return Poly([parse_element(c, F) for c in text], F)
    text = text.strip()
    if text.startswith("[") and text.endswith("]") and not isinstance(F, ExtensionField):
        try:
            return Poly([parse_element(c.strip(), F) for c in text[1:-1].split(",") if c.strip()], F)
        except ParseError:
            pass
    names = {var: Poly.x(F)}
    for k, v in _field_names(F).items():
        if k != var:
            names[k] = Poly.constant(v, F)
    br = _bracket(F)
    bracket = (lambda cs: Poly.constant(br(cs), F)) if br else None
    v = _Parser(text, lambda n: Poly.constant(F(n), F), names, bracket).parse()
    return v


# ---------------------------------------------------------------------------
# fields

_GF = re.compile(r"^GF\((\d+)\)$")
_EXT = re.compile(r"^GF\((\d+)\)\[([A-Za-z]\w*)\]/\((.+)\)$")
_RAT = re.compile(r"^(.+)\(([A-Za-z]\w*)\)$")


def parse_field(text):
    if not isinstance(text, str):
        raise ParseError("field descriptor must be a string")
    s = text.replace(" ", "")
    if s in ("QQ", "Q"):
        return Rationals()
    m = _GF.match(s)
    if m:
        return _gf(int(m.group(1)), text)
    m = _RAT.match(s)
    if m:
        try:
            base = parse_field(m.group(1))
        except ParseError:
            base = None
        if base is not None:
            if not base.is_finite:
                raise ParseError("rational function fields need a finite base", text)
            return RationalFunctionField(base, var=m.group(2))
    m = _EXT.match(s)
    if m:
        p = int(m.group(1))
        base = _gf(p, text)
        if not isinstance(base, PrimeField):
            raise ParseError("extensions must be written over a prime field", text)
        var = m.group(2)
        f = parse_poly(m.group(3), base, var)
        try:
            return ExtensionField(p, [int(c) for c in f.coeffs], var=var)
        except ValueError as e:
            raise ParseError(str(e), text) from None
    raise ParseError("unrecognized field descriptor", text)


def _gf(q, text):
    from . import _gfp

    try:
        _gfp.prime_power(q)
    except ValueError:
        raise ParseError(f"{q} is not a prime power", text) from None
    return GF(q)


# ---------------------------------------------------------------------------
# matrices


def parse_matrix(rows, F, where="matrix"):
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ParseError("a matrix is a nonempty list of rows", where=where)
    n = len(rows[0])
    out = []
    for i, r in enumerate(rows):
        if len(r) != n:
            raise ShapeError(f"{where}: row {i} has {len(r)} entries, expected {n}")
        out.append([parse_element(c, F, where=f"{where}[{i}][{j}]").value for j, c in enumerate(r)])
    return Mat._raw(F, out, n)


def format_matrix(M):
    return M.to_strings()


# ---------------------------------------------------------------------------
# input documents


def load_json(path_or_text, is_text=False):
    try:
        if is_text:
            return json.loads(path_or_text)
        with open(path_or_text) as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, column=e.colno, where=f"line {e.lineno}") from None
    except OSError as e:
        raise ParseError(str(e)) from None


def parse_input_document(doc):
    """(field, generators, mode, options) from a decoded input document."""
    if not isinstance(doc, dict):
        raise ParseError("input document must be a JSON object")
    if "field" not in doc:
        raise ParseError("missing 'field'")
    F = parse_field(doc["field"])
    if "generators" in doc:
        gens = doc["generators"]
    elif "matrix" in doc:
        gens = [doc["matrix"]]
    else:
        raise ParseError("missing 'generators'")
    if not isinstance(gens, list):
        raise ParseError("'generators' must be a list of matrices")
    mats = [parse_matrix(g, F, where=f"generators[{k}]") for k, g in enumerate(gens)]
    for k, M in enumerate(mats):
        if not M.is_square():
            raise ShapeError(f"generators[{k}] is {M.nrows}x{M.ncols}, not square")
        if M.nrows != mats[0].nrows:
            raise ShapeError(f"generators[{k}] has size {M.nrows}, expected {mats[0].nrows}")
    mode = doc.get("mode", "associative")
    if mode not in ("associative", "lie"):
        raise ParseError(f"unknown mode {mode!r}")
    n = mats[0].nrows if mats else doc.get("dim")
    return F, mats, mode, dict(doc.get("options", {}), dim=n)


# ---------------------------------------------------------------------------
# reports


def _vecs(F, vs):
    return [[F.format(a) for a in v] for v in vs]


def report_to_dict(report, F):
    """JSON-ready rendering of a cyclicgen.UniserialReport."""
    cert = report.certificate
    chain = cert.chain
    out = {
        "schema_version": SCHEMA_VERSION,
        "field": F.name,
        "mode": report.mode,
        "uniserial": report.uniserial,
        "socle_chain": {"layer_dims": chain.layer_dims, "bases": [_vecs(F, W) for W in chain.chain[1:]]},
        "layers": [],
    }
    for lc in cert.layers:
        if lc.irreducible:
            out["layers"].append({"irreducible": True, "generator": format_matrix(lc.generator),
                                  "min_poly": lc.min_poly.format() if lc.min_poly is not None else None})
        else:
            out["layers"].append({"irreducible": False, "proper_subspace": _vecs(F, lc.subspace)})
    if cert.first_reducible_layer is not None:
        out["first_reducible_layer"] = cert.first_reducible_layer
    if report.uniserial:
        p, ell = report.shape
        out.update(
            length=report.length,
            generator=format_matrix(report.generator),
            min_poly=report.min_poly.format(),
            shape={"p": p.format(), "l": ell},
            companion_basis=format_matrix(report.companion_basis),
            expressions={str(k): h.format() for k, h in report.expressions.items()},
            residue_degree=report.residue_degree,
            N=report.N,
            combination=None if report.combination is None else [F.format(c.value) for c in report.combination],
        )
    out["notes"] = list(report.notes)
    return out


def report_to_text(d):
    lines = [f"field: {d['field']}", f"mode: {d['mode']}", f"uniserial: {str(d['uniserial']).lower()}",
             f"layer dims: {d['socle_chain']['layer_dims']}"]
    if d["uniserial"]:
        lines += [
            f"length: {d['length']}",
            f"generator min poly: {d['min_poly']} = ({d['shape']['p']})^{d['shape']['l']}",
            f"residue degree: {d['residue_degree']} (N = {d['N']})",
            "generator u:",
        ]
        lines += ["  " + " ".join(r) for r in d["generator"]]
        lines.append("companion basis P (P^-1 u P = companion):")
        lines += ["  " + " ".join(r) for r in d["companion_basis"]]
        for k, h in d["expressions"].items():
            lines.append(f"generator {k} = {h.replace('X', 'u')}")
        comb = d["combination"]
        lines.append("linear combination: " + ("none" if comb is None else ", ".join(comb)))
    else:
        k = d.get("first_reducible_layer")
        lines.append(f"reducible layer: {k}")
        sub = d["layers"][-1].get("proper_subspace")
        if sub:
            lines.append("proper invariant subspace of that layer:")
            lines += ["  " + " ".join(v) for v in sub]
    lines += [f"note: {n}" for n in d.get("notes", [])]
    return "\n".join(lines)
