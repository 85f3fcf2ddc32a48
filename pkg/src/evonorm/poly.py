"""Sparse multivariate polynomials over Q with exact elimination tools.

A MultiPoly is a dict {exponent tuple: Fraction} over an ordered variable
tuple. The canonical form clears denominators, divides by the integer
content, and signs the graded-lex leading coefficient positive; two
polynomials agree up to a nonzero rational scalar iff their canonical
forms are equal.

Term order everywhere: graded-lex, ties broken with the first variable of
the tuple most significant.
"""

from fractions import Fraction
from math import gcd as _igcd

from . import kernels as K
from .errors import UnknownVariable, ZeroPolynomial

Rat = Fraction


def _lcm(a, b):
    return a // _igcd(a, b) * b


class MultiPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms):
        self.vars = tuple(vars)
        clean = {}
        for e, c in terms.items():
            if c:
                clean[tuple(e)] = c if isinstance(c, Fraction) else Fraction(c)
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, vars):
        return cls(vars, {})

    @classmethod
    def const(cls, vars, c):
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): Fraction(c)})

    @classmethod
    def var(cls, vars, name):
        vars = tuple(vars)
        if name not in vars:
            raise UnknownVariable(name)
        e = [0] * len(vars)
        e[vars.index(name)] = 1
        return cls(vars, {tuple(e): Fraction(1)})

    # -- basic queries ------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(sum(e) == 0 for e in self.terms)

    def constant_value(self):
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise ValueError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name):
        if not self.terms:
            return -1
        i = self.vars.index(name)
        return max(e[i] for e in self.terms)

    def _order_key(self, e):
        return (sum(e),) + tuple(e)

    def leading_term(self):
        """(exponent, coefficient) of the graded-lex leading term."""
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no leading term")
        e = max(self.terms, key=self._order_key)
        return e, self.terms[e]

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            if isinstance(other, (int, Fraction)):
                if other == 0:
                    return not self.terms
                return self.is_constant() and self.constant_value() == other
            return NotImplemented
        if self.vars == other.vars:
            return self.terms == other.terms
        return self._aligned_terms() == other._aligned_terms()

    def _aligned_terms(self):
        """Terms keyed by variable name, independent of tuple order or
        padding variables: the normal form behind cross-tuple equality."""
        out = {}
        for e, c in self.terms.items():
            key = tuple(sorted((v, k) for v, k in zip(self.vars, e) if k))
            out[key] = c
        return out

    def __hash__(self):
        return hash(frozenset(self._aligned_terms().items()))

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, MultiPoly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")
            return other
        return MultiPoly.const(self.vars, other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return MultiPoly(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return MultiPoly.zero(self.vars)
            return MultiPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return MultiPoly(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = MultiPoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def derivative(self, name):
        i = self.vars.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                out[tuple(ne)] = out.get(tuple(ne), Fraction(0)) + c * e[i]
        return MultiPoly(self.vars, out)

    # -- evaluation / substitution ------------------------------------

    def eval_at(self, assignment):
        """Full evaluation; assignment maps every variable to a Fraction."""
        total = Fraction(0)
        vals = [Fraction(assignment[v]) for v in self.vars]
        for e, c in self.terms.items():
            t = c
            for x, k in zip(vals, e):
                if k:
                    t *= x**k
            total += t
        return total

    def partial_eval(self, name, value):
        """Substitute one variable by a rational, keeping the var slot."""
        i = self.vars.index(name)
        value = Fraction(value)
        out = {}
        for e, c in self.terms.items():
            t = c * value ** e[i]
            if t:
                ne = list(e)
                ne[i] = 0
                ne = tuple(ne)
                out[ne] = out.get(ne, Fraction(0)) + t
        return MultiPoly(self.vars, out)

    def subs_poly(self, name, repl):
        """Substitute a variable by a polynomial over the same tuple."""
        repl = self._coerce(repl)
        i = self.vars.index(name)
        by_k = {}
        for e, c in self.terms.items():
            ne = list(e)
            k = ne[i]
            ne[i] = 0
            by_k.setdefault(k, {})[tuple(ne)] = c
        result = MultiPoly.zero(self.vars)
        pw = MultiPoly.const(self.vars, 1)
        for k in range(max(by_k) + 1 if by_k else 0):
            if k in by_k:
                result = result + MultiPoly(self.vars, by_k[k]) * pw
            pw = pw * repl
        return result

    def rename(self, mapping):
        """Rename variables: mapping old name -> new name, order kept."""
        newvars = tuple(mapping.get(v, v) for v in self.vars)
        return MultiPoly(newvars, dict(self.terms))

    def reorder(self, newvars):
        """Same polynomial over a permuted/extended variable tuple."""
        newvars = tuple(newvars)
        idx = []
        for v in self.vars:
            if v not in newvars:
                raise UnknownVariable(v)
            idx.append(newvars.index(v))
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(newvars)
            for pos, k in zip(idx, e):
                ne[pos] += k
            out[tuple(ne)] = out.get(tuple(ne), Fraction(0)) + c
        return MultiPoly(newvars, out)

    def drop_vars(self, names):
        """Remove variables that do not occur."""
        keep = [i for i, v in enumerate(self.vars) if v not in names]
        for e in self.terms:
            for i, v in enumerate(self.vars):
                if v in names and e[i]:
                    raise ValueError(f"variable {v} still occurs")
        newvars = tuple(self.vars[i] for i in keep)
        return MultiPoly(newvars, {tuple(e[i] for i in keep): c for e, c in self.terms.items()})

    # -- univariate views ---------------------------------------------

    def coeffs_in(self, name):
        """List of coefficient polynomials in ascending powers of `name`
        (each with the name's slot zeroed, same variable tuple)."""
        i = self.vars.index(name)
        d = self.degree_in(name)
        if d < 0:
            return []
        buckets = [dict() for _ in range(d + 1)]
        for e, c in self.terms.items():
            ne = list(e)
            k = ne[i]
            ne[i] = 0
            buckets[k][tuple(ne)] = c
        return [MultiPoly(self.vars, b) for b in buckets]

    def lead_coeff_in(self, name):
        return self.coeffs_in(name)[-1]

    @classmethod
    def from_coeffs(cls, vars, name, coeffs):
        vars = tuple(vars)
        i = vars.index(name)
        out = {}
        for k, p in enumerate(coeffs):
            for e, c in p.terms.items():
                ne = list(e)
                ne[i] += k
                ne = tuple(ne)
                out[ne] = out.get(ne, Fraction(0)) + c
        return cls(vars, out)

    def to_int_list(self, name):
        """Dense integer coefficient list for a univariate polynomial.

        Returns (scale, coeffs) with scale * self having the integer
        coefficients `coeffs` (ascending).
        """
        i = self.vars.index(name)
        for e in self.terms:
            if any(k and j != i for j, k in enumerate(e)):
                raise ValueError("not univariate in " + name)
        d = self.degree_in(name)
        dens = 1
        for c in self.terms.values():
            dens = _lcm(dens, c.denominator)
        out = [0] * (d + 1)
        for e, c in self.terms.items():
            out[e[i]] = int(c * dens)
        return Fraction(dens), out

    @classmethod
    def from_int_list(cls, vars, name, coeffs):
        vars = tuple(vars)
        i = vars.index(name)
        out = {}
        for k, c in enumerate(coeffs):
            if c:
                e = [0] * len(vars)
                e[i] = k
                out[tuple(e)] = Fraction(c)
        return cls(vars, out)

    # -- canonical form -----------------------------------------------

    def canonical_scale(self):
        """The positive-den rational s with (self * s) canonical."""
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no canonical scale")
        den = 1
        for c in self.terms.values():
            den = _lcm(den, c.denominator)
        num = 0
        for c in self.terms.values():
            num = _igcd(num, int(c * den))
        s = Fraction(den, num)
        _, lead = self.leading_term()
        if lead < 0:
            s = -s
        return s

    def canonical(self):
        if not self.terms:
            return self
        return self * self.canonical_scale()

    def same_up_to_scalar(self, other):
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        a = self.canonical()
        b = other.reorder(self.vars).canonical()
        return a.terms == b.terms

    # -- rendering ----------------------------------------------------

    def _sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: self._order_key(t[0]), reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self._sorted_terms():
            mono = "*".join(
                v if k == 1 else f"{v}^{k}"
                for v, k in zip(self.vars, e)
                if k
            )
            ac = abs(c)
            if not mono:
                body = str(ac)
            elif ac == 1:
                body = mono
            else:
                body = f"{ac}*{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __repr__(self):
        return f"MultiPoly({self.vars}, {self})"


# ---------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------


def _err(text, pos, expected):
    e = SyntaxError(f"unexpected {text[pos]!r} at offset {pos}, expected {expected}"
                    if pos < len(text)
                    else f"unexpected end of input, expected {expected}")
    e.offset = pos
    e.text = text
    return e


def _tokenize(text):
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(("INT", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            toks.append(("NAME", text[i:j], i))
            i = j
            continue
        if ch in "+-*^()/":
            toks.append((ch, ch, i))
            i += 1
            continue
        raise _err(text, i, "a term, operator, or parenthesis")
    toks.append(("END", "", n))
    return toks


class _Parser:
    def __init__(self, text, vars):
        self.text = text
        self.toks = _tokenize(text)
        self.pos = 0
        self.fixed_vars = vars is not None
        self.vars = list(vars) if vars else []

    def peek(self):
        return self.toks[self.pos]

    def take(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect(self, kind, what):
        t = self.take()
        if t[0] != kind:
            raise _err(self.text, t[2], what)
        return t

    # Every node is a dict {exponent-over-self.vars: Fraction}; exponents
    # are re-padded at the end once the variable set is final.

    def parse(self):
        node = self.expr()
        t = self.take()
        if t[0] != "END":
            raise _err(self.text, t[2], "end of input or an operator")
        vars = tuple(self.vars)
        width = len(vars)
        terms = {}
        for e, c in node.items():
            e = tuple(list(e) + [0] * (width - len(e)))
            terms[e] = terms.get(e, Fraction(0)) + c
        return MultiPoly(vars, terms)

    def expr(self):
        sign = 1
        if self.peek()[0] in ("+", "-"):
            if self.take()[0] == "-":
                sign = -1
        node = self._scale(self.term(), sign)
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            if op == "-":
                rhs = self._scale(rhs, -1)
            node = self._add(node, rhs)
        return node

    def term(self):
        node = self.factor()
        while self.peek()[0] == "*":
            self.take()
            node = self._mul(node, self.factor())
        return node

    def factor(self):
        node = self.primary()
        if self.peek()[0] == "^":
            self.take()
            t = self.expect("INT", "a nonnegative integer exponent")
            k = int(t[1])
            node = self._pow(node, k)
            if self.peek()[0] == "^":
                raise _err(self.text, self.peek()[2], "an operator ('^' does not chain)")
        return node

    def primary(self):
        t = self.take()
        if t[0] == "INT":
            val = Fraction(int(t[1]))
            if self.peek()[0] == "/":
                self.take()
                d = self.expect("INT", "an integer denominator")
                if int(d[1]) == 0:
                    raise _err(self.text, d[2], "a nonzero denominator")
                val = Fraction(int(t[1]), int(d[1]))
            return {(): val} if val else {}
        if t[0] == "NAME":
            name = t[1]
            if name not in self.vars:
                if self.fixed_vars:
                    raise UnknownVariable(
                        f"unknown variable {name!r} at offset {t[2]} "
                        f"(declared: {', '.join(self.vars)})"
                    )
                self.vars.append(name)
            i = self.vars.index(name)
            e = [0] * (i + 1)
            e[i] = 1
            return {tuple(e): Fraction(1)}
        if t[0] == "(":
            node = self.expr()
            self.expect(")", "a closing parenthesis")
            return node
        raise _err(self.text, t[2], "a number, variable, or parenthesized expression")

    # raw-dict helpers (exponents may have ragged width while parsing)

    @staticmethod
    def _pad(e, w):
        return tuple(list(e) + [0] * (w - len(e)))

    def _add(self, a, b):
        w = max([len(e) for e in a] + [len(e) for e in b] + [0])
        out = {}
        for src in (a, b):
            for e, c in src.items():
                e = self._pad(e, w)
                out[e] = out.get(e, Fraction(0)) + c
        return {e: c for e, c in out.items() if c}

    def _mul(self, a, b):
        w = max([len(e) for e in a] + [len(e) for e in b] + [0])
        out = {}
        for e1, c1 in a.items():
            e1 = self._pad(e1, w)
            for e2, c2 in b.items():
                e2 = self._pad(e2, w)
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return {e: c for e, c in out.items() if c}

    def _pow(self, a, k):
        out = {(): Fraction(1)}
        for _ in range(k):
            out = self._mul(out, a)
        return out

    @staticmethod
    def _scale(a, s):
        return {e: c * s for e, c in a.items()}


def parse_poly(text, vars=None):
    """Parse +, -, *, ^ with integer and p/q coefficients.

    With vars=None the variable tuple is inferred in order of first
    appearance; otherwise names outside `vars` raise UnknownVariable.
    """
    return _Parser(text, vars).parse()


# ---------------------------------------------------------------------
# gcd / exact division / content
# ---------------------------------------------------------------------


def mp_divexact(a, b):
    """Exact division a / b; raises ArithmeticError if not divisible."""
    if isinstance(b, MultiPoly) and b.vars != a.vars:
        b = b.reorder(a.vars)
    if b.is_zero():
        raise ZeroPolynomial("division by zero polynomial")
    if a.is_zero():
        return a
    if b.is_constant():
        return a * (1 / b.constant_value())
    name = next(v for v in b.vars if b.degree_in(v) > 0)
    bc = b.coeffs_in(name)
    db = len(bc) - 1
    rem = a
    quo = []
    while not rem.is_zero() and rem.degree_in(name) >= db:
        rc = rem.coeffs_in(name)
        t = mp_divexact(rc[-1], bc[-1])
        k = len(rc) - 1 - db
        quo.append((k, t))
        sub = MultiPoly.from_coeffs(a.vars, name, [MultiPoly.zero(a.vars)] * k + [t * c for c in bc])
        rem = rem - sub
    if not rem.is_zero():
        raise ArithmeticError("inexact polynomial division")
    out = MultiPoly.zero(a.vars)
    for k, t in quo:
        e = [0] * len(a.vars)
        e[a.vars.index(name)] = k
        out = out + t * MultiPoly(a.vars, {tuple(e): Fraction(1)})
    return out


def mp_prem(a, b, name):
    """Pseudo-remainder of a by b with respect to `name`."""
    if b.vars != a.vars:
        b = b.reorder(a.vars)
    da, db = a.degree_in(name), b.degree_in(name)
    if db < 0:
        raise ZeroPolynomial("pseudo-division by zero polynomial")
    if da < db:
        return a
    bc = b.coeffs_in(name)
    lb = bc[-1]
    zero = MultiPoly.zero(a.vars)
    r = a.coeffs_in(name)
    for k in range(da - db, -1, -1):
        coef = r[db + k]
        for i in range(db + k):
            r[i] = r[i] * lb
        if not coef.is_zero():
            for i in range(db):
                r[i + k] = r[i + k] - coef * bc[i]
        r[db + k] = zero
    return MultiPoly.from_coeffs(a.vars, name, r[:db]) if db else zero


def mp_content_in(f, name):
    """Canonical gcd of the coefficients of f as a poly in `name`."""
    cs = [c for c in f.coeffs_in(name) if not c.is_zero()]
    if not cs:
        return MultiPoly.zero(f.vars)
    g = cs[0]
    for c in cs[1:]:
        g = mp_gcd(g, c)
        if g.is_constant():
            break
    return g.canonical() if not g.is_constant() else MultiPoly.const(f.vars, 1)


def mp_gcd(a, b):
    """Canonical gcd over Q (primitive, positive graded-lex lead)."""
    if a.is_zero() and b.is_zero():
        raise ZeroPolynomial("gcd of two zero polynomials")
    if b.vars != a.vars:
        b = b.reorder(a.vars)
    if a.is_zero():
        return b.canonical()
    if b.is_zero():
        return a.canonical()
    if a.is_constant() or b.is_constant():
        return MultiPoly.const(a.vars, 1)
    name = None
    for v in a.vars:
        if a.degree_in(v) > 0 and b.degree_in(v) > 0:
            name = v
            break
    if name is None:
        # no shared variable: gcd is the gcd of contents in any var of a
        for v in a.vars:
            if a.degree_in(v) > 0:
                return mp_gcd(mp_content_in(a, v), b)
        return MultiPoly.const(a.vars, 1)
    # univariate fast path
    others_a = [v for v in a.vars if v != name and a.degree_in(v) > 0]
    others_b = [v for v in b.vars if v != name and b.degree_in(v) > 0]
    if not others_a and not others_b:
        _, la = a.to_int_list(name)
        _, lb = b.to_int_list(name)
        g = K.zx_gcd(la, lb)
        return MultiPoly.from_int_list(a.vars, name, g).canonical()
    ca = mp_content_in(a, name)
    cb = mp_content_in(b, name)
    pa = mp_divexact(a, ca)
    pb = mp_divexact(b, cb)
    occ = {v for v in a.vars
           if pa.degree_in(v) > 0 or pb.degree_in(v) > 0}
    if len(occ) == 2:
        other = next(v for v in occ if v != name)
        g = _gcd_bivar_modular(pa, pb, name, other)
        if g is not None:
            return (mp_gcd(ca, cb) * g).canonical()
    if pa.degree_in(name) < pb.degree_in(name):
        pa, pb = pb, pa
    while not pb.is_zero():
        r = mp_prem(pa, pb, name)
        if not r.is_zero():
            r = mp_divexact(r, mp_content_in(r, name)).canonical()
        pa, pb = pb, r
    pp = mp_divexact(pa, mp_content_in(pa, name))
    return (mp_gcd(ca, cb) * pp).canonical()


def _fr_horner(coeffs, x):
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _fr_univar(p, name):
    d = max(p.degree_in(name), 0)
    out = [Fraction(0)] * (d + 1)
    i = p.vars.index(name)
    for e, c in p.terms.items():
        out[e[i]] = c
    return out


def _newton_dense(nodes, values):
    """Dense coefficients of the interpolating polynomial, exact over Q."""
    n = len(nodes)
    dd = list(values)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - j])
    out = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        carry = dd[i]
        new = [Fraction(0)] * n
        new[0] = carry
        for k in range(n - 1):
            new[k] += out[k] * (-nodes[i])
            new[k + 1] += out[k]
        out = new
    return out


def _gcd_bivar_modular(pa, pb, name, other):
    """Primitive gcd of two primitive bivariate polys by evaluation.

    Specializes `other` at rational nodes, takes fast univariate gcds,
    scales them to the gcd of the leading coefficients, and interpolates
    back; the candidate is certified by exact trial division.  Returns
    None when no certified answer emerges (caller falls back to the
    pseudo-remainder route).
    """
    la = _fr_univar(pa.lead_coeff_in(name), other)
    lb = _fr_univar(pb.lead_coeff_in(name), other)
    ga = K.zx_gcd(_int_clear(la), _int_clear(lb))
    gamma = [Fraction(c) for c in ga]
    bound = min(pa.degree_in(other), pb.degree_in(other)) + len(gamma)
    arows = [_fr_univar(c, other) for c in pa.coeffs_in(name)]
    brows = [_fr_univar(c, other) for c in pb.coeffs_in(name)]
    for extra in (0, bound // 2 + 1, 2 * bound + 2):
        need = bound + extra
        nodes, rows, dmin = [], [], None
        v = Fraction(0)
        tried = 0
        while len(nodes) < need:
            tried += 1
            if tried > 6 * need + 48:
                return None
            val = v
            v = -v + 1 if v <= 0 else -v
            if _fr_horner(la, val) == 0 or _fr_horner(lb, val) == 0:
                continue
            av = _int_clear([_fr_horner(r, val) for r in arows])
            bv = _int_clear([_fr_horner(r, val) for r in brows])
            gv = K.zx_gcd(av, bv)
            dv = len(gv) - 1
            if dmin is None or dv < dmin:
                dmin, nodes, rows = dv, [], []
            elif dv > dmin:
                continue
            if dmin == 0:
                return MultiPoly.const(pa.vars, 1)
            scale = _fr_horner(gamma, val) / Fraction(gv[-1])
            nodes.append(val)
            rows.append([Fraction(c) * scale for c in gv])
        cols = []
        for k in range(dmin + 1):
            cols.append(_newton_dense(nodes, [r[k] for r in rows]))
        io, inm = pa.vars.index(other), pa.vars.index(name)
        terms = {}
        for k, col in enumerate(cols):
            for j, c in enumerate(col):
                if c:
                    e = [0] * len(pa.vars)
                    e[inm] = k
                    e[io] = j
                    terms[tuple(e)] = c
        cand = MultiPoly(pa.vars, terms)
        if cand.is_zero():
            continue
        cand = mp_divexact(cand, mp_content_in(cand, name)).canonical()
        try:
            mp_divexact(pa, cand)
            mp_divexact(pb, cand)
        except ArithmeticError:
            continue
        return cand
    return None


def _int_clear(fr):
    """Integer list with the same signs as the Fraction list."""
    fr = list(fr)
    while fr and not fr[-1]:
        fr.pop()
    if not fr:
        return []
    lcm = 1
    for c in fr:
        lcm = _lcm(lcm, c.denominator)
    ints = [int(c * lcm) for c in fr]
    g = 0
    for c in ints:
        g = _igcd(g, c)
    if g > 1:
        ints = [c // g for c in ints]
    return ints


# ---------------------------------------------------------------------
# resultants
# ---------------------------------------------------------------------


def _res_prs(a, b, name):
    """Exact resultant w.r.t. `name` by primitive PRS with multiplier
    tracking; valid over any number of remaining variables."""
    da, db = a.degree_in(name), b.degree_in(name)
    if da < 0 or db < 0:
        return MultiPoly.zero(a.vars)
    if da < db:
        s = -1 if (da & 1) and (db & 1) else 1
        return _res_prs(b, a, name) * s
    if db == 0:
        return b**da if da else MultiPoly.const(a.vars, 1)
    r = mp_prem(a, b, name)
    if r.is_zero():
        return MultiPoly.zero(a.vars)
    c = mp_content_in(r, name)
    if r.lead_coeff_in(name).leading_term()[1] < 0:
        c = -c
    rt = mp_divexact(r, c)
    dr = rt.degree_in(name)
    sub = _res_prs(b, rt, name)
    if sub.is_zero():
        return MultiPoly.zero(a.vars)
    sgn = -1 if (da & 1) and (db & 1) else 1
    lq = b.lead_coeff_in(name)
    e = da - dr - (da - db + 1) * db
    num = (c**db) * sub * sgn
    if e >= 0:
        return num * lq**e
    return mp_divexact(num, lq ** (-e))


def _good_nodes(lc_polys, name, count, bound_each):
    """Integer nodes where none of the given polynomials vanish after
    substituting `name`; nodes ordered 0, 1, -1, 2, -2, ..."""
    nodes = []
    k = 0
    tried = 0
    while len(nodes) < count and tried < 8 * (count + bound_each + 4):
        cand = (k + 1) // 2 if k % 2 else -(k // 2)
        if k == 0:
            cand = 0
        k += 1
        tried += 1
        ok = True
        for p in lc_polys:
            if p.partial_eval(name, cand).is_zero():
                ok = False
                break
        if ok:
            nodes.append(cand)
    if len(nodes) < count:
        raise ArithmeticError("could not find enough interpolation nodes")
    return nodes


def _newton_interp(vars, name, nodes, values):
    """Exact polynomial through (nodes[i], values[i]); values are
    MultiPolys over `vars` free of `name`."""
    n = len(nodes)
    coef = list(values)  # divided differences, in place
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            denom = Fraction(nodes[i] - nodes[i - level])
            coef[i] = (coef[i] - coef[i - 1]) * (1 / denom)
    # Horner assembly: p = c0 + (x-x0)(c1 + (x-x1)(...))
    x = MultiPoly.var(vars, name)
    out = coef[-1]
    for i in range(n - 2, -1, -1):
        out = out * (x - Fraction(nodes[i])) + coef[i]
    return out


def _res_interp(a, b, name, active):
    """Resultant w.r.t. `name` by evaluation/interpolation over the
    variables in `active` (those with positive degree), innermost last."""
    if not active:
        _, la = a.to_int_list(name)
        _, lb = b.to_int_list(name)
        v = K.zx_resultant(la, lb)
        return MultiPoly.const(a.vars, v)
    t = active[-1]
    rest = active[:-1]
    da, db = a.degree_in(name), b.degree_in(name)
    bound = da * b.degree_in(t) + db * a.degree_in(t)
    lca = a.lead_coeff_in(name)
    lcb = b.lead_coeff_in(name)
    bound_each = max(lca.degree_in(t), 0) + max(lcb.degree_in(t), 0)
    nodes = _good_nodes([lca, lcb], t, bound + 1, bound_each)
    values = []
    for nd in nodes:
        av = a.partial_eval(t, nd)
        bv = b.partial_eval(t, nd)
        values.append(_res_interp(av, bv, name, rest))
    return _newton_interp(a.vars, t, nodes, values)


def resultant(a, b, name, method="auto"):
    """Resultant of a and b with respect to `name`, exact including sign
    (Sylvester-determinant convention, a's rows first)."""
    if a.is_zero() or b.is_zero():
        raise ZeroPolynomial("resultant of the zero polynomial")
    if a.vars != b.vars:
        b = b.reorder(a.vars)
    da, db = a.degree_in(name), b.degree_in(name)
    if da <= 0 and db <= 0:
        return MultiPoly.const(a.vars, 1)
    active = [v for v in a.vars
              if v != name and (a.degree_in(v) > 0 or b.degree_in(v) > 0)]
    if method == "prs":
        return _res_prs(a, b, name)
    if not active:
        sa = a.canonical_scale()
        sb = b.canonical_scale()
        _, la = (a * sa).to_int_list(name)
        _, lb = (b * sb).to_int_list(name)
        v = K.zx_resultant(la, lb)
        return MultiPoly.const(a.vars, Fraction(v) * sa**-db * sb**-da)
    if method == "interp" or (method == "auto" and da + db >= 5):
        # integer-coefficient primitives; restore the scalar afterwards
        sa = a.canonical_scale()
        sb = b.canonical_scale()
        ra = _res_interp(a * sa, b * sb, name, active)
        return ra * (sa**-db * sb**-da)
    return _res_prs(a, b, name)


def discriminant(f, name):
    """(-1)^(n(n-1)/2) Res(f, f') / lc with n = deg in `name`."""
    n = f.degree_in(name)
    if n <= 0:
        raise ZeroPolynomial("discriminant needs positive degree")
    r = resultant(f, f.derivative(name), name)
    s = -1 if (n * (n - 1) // 2) & 1 else 1
    return mp_divexact(r * s, f.lead_coeff_in(name))


# ---------------------------------------------------------------------
# squarefree machinery
# ---------------------------------------------------------------------


class FactorList:
    """Squarefree decomposition: unit * prod(base^mult)."""

    __slots__ = ("unit", "factors")

    def __init__(self, unit, factors):
        self.unit = Fraction(unit)
        self.factors = list(factors)

    def expand(self, vars):
        out = MultiPoly.const(vars, self.unit)
        for base, mult in self.factors:
            out = out * base**mult
        return out

    def __repr__(self):
        inner = " * ".join(f"({b})^{m}" for b, m in self.factors)
        return f"FactorList({self.unit} * {inner})"


def squarefree_part(f):
    """Product of the distinct irreducible factors, canonical form."""
    if f.is_zero():
        raise ZeroPolynomial("squarefree part of zero")
    if f.is_constant():
        return MultiPoly.const(f.vars, 1)
    g = f
    for v in f.vars:
        if f.degree_in(v) > 0:
            g = mp_gcd(g, f.derivative(v))
            if g.is_constant():
                break
    return mp_divexact(f, g).canonical()


def _yun(pp, name):
    """Yun decomposition of a primitive-in-name polynomial."""
    out = []
    dp = pp.derivative(name)
    g = mp_gcd(pp, dp)
    c = mp_divexact(pp, g)
    d = mp_divexact(dp, g) - c.derivative(name)
    i = 1
    while not c.is_constant():
        a = mp_gcd(c, d)
        if not a.is_constant():
            out.append((a.canonical(), i))
        c = mp_divexact(c, a)
        d = mp_divexact(d, a) - c.derivative(name)
        i += 1
    return out


def squarefree_factor(f):
    """FactorList with canonical squarefree bases and multiplicities."""
    if f.is_zero():
        raise ZeroPolynomial("factorization of zero")
    factors = []
    work = f
    while not work.is_constant():
        name = next(v for v in work.vars if work.degree_in(v) > 0)
        cont = mp_content_in(work, name)
        pp = mp_divexact(work, cont)
        factors.extend(_yun(pp, name))
        work = cont
    rebuilt = MultiPoly.const(f.vars, 1)
    for b, m in factors:
        rebuilt = rebuilt * b**m
    unit = mp_divexact(f, rebuilt)
    return FactorList(unit.constant_value(), factors)


# ---------------------------------------------------------------------
# homogenization
# ---------------------------------------------------------------------


def homogenize(f, zname):
    if zname in f.vars:
        raise ValueError(f"{zname} already a variable")
    d = f.total_degree()
    newvars = f.vars + (zname,)
    out = {}
    for e, c in f.terms.items():
        out[tuple(list(e) + [d - sum(e)])] = c
    return MultiPoly(newvars, out)


def dehomogenize(f, name):
    """Substitute name := 1 (chart), keeping the remaining variables."""
    g = f.partial_eval(name, 1)
    return g.drop_vars({name})
