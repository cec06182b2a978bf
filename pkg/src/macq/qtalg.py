"""Exact arithmetic in the parameters q and t.

Three layers, all exact and float-free:

  * ``QTPoly``: sparse polynomials in q, t with arbitrary-precision integer
    coefficients, stored as ``{(q_exp, t_exp): coeff}`` with no zero entries.
  * ``QTRational``: quotients ``numerator / prod (1 - q^a t^b)``.  Every
    denominator that shows up in the queue formulas is a product of such
    binomial factors, so normalization is plain trial division and no general
    multivariate gcd is ever needed.
  * ``XExpansion``: the monomial expansion of a polynomial in x_1..x_n whose
    coefficients are ``QTRational`` values, keyed by exponent vectors.

Values are immutable after construction; all operations return new objects.
"""

from __future__ import annotations

from fractions import Fraction


class PoleError(ArithmeticError):
    """A denominator factor vanishes at the requested point."""


class LengthMismatch(ValueError):
    """Exponent vector length differs from the expansion's variable count."""


class NotSymmetric(ValueError):
    """Expansion is not invariant under permutations of the x variables."""


def _grlex(key):
    # graded lex on (q_exp, t_exp); any monomial order works for division
    a, b = key
    return (a + b, a, b)


class QTPoly:
    """Sparse integer-coefficient polynomial in q and t.

    Two polynomials are equal iff their term dicts are equal, so the stored
    form is canonical.  Exponents are nonnegative.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (a, b), c in terms.items():
                if a < 0 or b < 0:
                    raise ValueError("negative exponent in QTPoly")
                if c:
                    clean[(a, b)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("QTPoly is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "QTPoly":
        return cls()

    @classmethod
    def one(cls) -> "QTPoly":
        return cls({(0, 0): 1})

    @classmethod
    def term(cls, coeff: int, q_exp: int = 0, t_exp: int = 0) -> "QTPoly":
        return cls({(q_exp, t_exp): coeff})

    @classmethod
    def binomial_factor(cls, a: int, b: int) -> "QTPoly":
        """The factor 1 - q^a t^b."""
        if (a, b) == (0, 0):
            raise ValueError("factor (1 - q^0 t^0) is zero")
        return cls({(0, 0): 1, (a, b): -1})

    # -- ring operations ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, QTPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __neg__(self):
        return QTPoly({k: -c for k, c in self.terms.items()})

    def __add__(self, other):
        if not isinstance(other, QTPoly):
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return QTPoly(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = QTPoly.term(other)
        if not isinstance(other, QTPoly):
            return NotImplemented
        out = {}
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                else:
                    del out[k]
        return QTPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of QTPoly")
        result = QTPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def exact_div(self, divisor: "QTPoly"):
        """Exact quotient self / divisor, or None when division leaves a
        remainder.  Multivariate long division by leading term in graded
        lex order; exactness requires every intermediate leading coefficient
        to be divisible by the divisor's."""
        if divisor.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return QTPoly.zero()
        lead_key = max(divisor.terms, key=_grlex)
        lead_c = divisor.terms[lead_key]
        rem = dict(self.terms)
        quot = {}
        while rem:
            key = max(rem, key=_grlex)
            c = rem[key]
            qa = key[0] - lead_key[0]
            qb = key[1] - lead_key[1]
            if qa < 0 or qb < 0 or c % lead_c:
                return None
            qc = c // lead_c
            quot[(qa, qb)] = quot.get((qa, qb), 0) + qc
            for (a2, b2), c2 in divisor.terms.items():
                k = (qa + a2, qb + b2)
                s = rem.get(k, 0) - qc * c2
                if s:
                    rem[k] = s
                else:
                    rem.pop(k, None)
        return QTPoly(quot)

    # -- evaluation and display -------------------------------------------

    def evaluate(self, q: Fraction, t: Fraction) -> Fraction:
        total = Fraction(0)
        for (a, b), c in self.terms.items():
            total += c * q**a * t**b
        return total

    def substitute_q(self, q: Fraction) -> dict:
        """Collapse to a polynomial in t: map t_exp -> Fraction coefficient."""
        out = {}
        for (a, b), c in self.terms.items():
            s = out.get(b, Fraction(0)) + c * q**a
            if s:
                out[b] = s
            else:
                out.pop(b, None)
        return out

    def total_degree(self) -> int:
        if self.is_zero():
            return -1
        return max(a + b for a, b in self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: _grlex(kv[0]))

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for (a, b), c in self.sorted_terms():
            mono = ""
            if a == 1:
                mono += "q"
            elif a > 1:
                mono += "q^%d" % a
            if b == 1:
                mono += "t"
            elif b > 1:
                mono += "t^%d" % b
            if not mono:
                chunk = str(abs(c))
            elif abs(c) == 1:
                chunk = mono
            else:
                chunk = "%d%s" % (abs(c), mono)
            if not parts:
                parts.append(chunk if c > 0 else "-" + chunk)
            else:
                parts.append(("+ " if c > 0 else "- ") + chunk)
        return " ".join(parts)

    __repr__ = __str__


def t_integer(k: int) -> QTPoly:
    """[k]_t = 1 + t + ... + t^(k-1)."""
    return QTPoly({(0, i): 1 for i in range(k)})


def t_factorial(k: int) -> QTPoly:
    """[k]_t! = [k]_t [k-1]_t ... [2]_t."""
    p = QTPoly.one()
    for i in range(2, k + 1):
        p = p * t_integer(i)
    return p


class QTRational:
    """Exact rational function numerator / prod (1 - q^a t^b)^mult.

    The denominator is kept as a sorted multiset of (a, b) factor pairs with
    (a, b) != (0, 0).  Construction trial-divides the numerator by every
    factor until none divides, so no stored factor divides the numerator.
    Equality is decided by cross multiplication, never structurally.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: QTPoly, den=()):
        if not isinstance(num, QTPoly):
            raise TypeError("numerator must be QTPoly")
        counts = {}
        for item in den:
            if len(item) == 2 and isinstance(item[0], int):
                pair, mult = (item[0], item[1]), 1
            else:
                pair, mult = (item[0][0], item[0][1]), item[1]
            if pair == (0, 0):
                raise ValueError("denominator factor (0, 0) is zero")
            if pair[0] < 0 or pair[1] < 0 or mult < 0:
                raise ValueError("bad denominator factor")
            if mult:
                counts[pair] = counts.get(pair, 0) + mult
        if num.is_zero():
            counts = {}
        else:
            changed = True
            while changed and counts:
                changed = False
                for pair in list(counts):
                    factor = QTPoly.binomial_factor(*pair)
                    while counts.get(pair, 0):
                        q = num.exact_div(factor)
                        if q is None:
                            break
                        num = q
                        counts[pair] -= 1
                        changed = True
                    if counts.get(pair) == 0:
                        del counts[pair]
        object.__setattr__(self, "num", num)
        object.__setattr__(
            self, "den", tuple(sorted(counts.items()))
        )

    def __setattr__(self, name, value):
        raise AttributeError("QTRational is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "QTRational":
        return cls(QTPoly.zero())

    @classmethod
    def one(cls) -> "QTRational":
        return cls(QTPoly.one())

    @classmethod
    def from_int(cls, c: int) -> "QTRational":
        return cls(QTPoly.term(c))

    @classmethod
    def from_poly(cls, p: QTPoly) -> "QTRational":
        return cls(p)

    # -- helpers -----------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def den_poly(self) -> QTPoly:
        p = QTPoly.one()
        for pair, mult in self.den:
            p = p * QTPoly.binomial_factor(*pair) ** mult
        return p

    def is_polynomial(self) -> bool:
        return not self.den

    # -- field operations --------------------------------------------------

    def __add__(self, other):
        if isinstance(other, QTPoly):
            other = QTRational(other)
        if not isinstance(other, QTRational):
            return NotImplemented
        da = dict(self.den)
        db = dict(other.den)
        common = {p: max(da.get(p, 0), db.get(p, 0)) for p in set(da) | set(db)}
        na = self.num
        nb = other.num
        for pair, mult in common.items():
            fa = mult - da.get(pair, 0)
            fb = mult - db.get(pair, 0)
            if fa:
                na = na * QTPoly.binomial_factor(*pair) ** fa
            if fb:
                nb = nb * QTPoly.binomial_factor(*pair) ** fb
        return QTRational(na + nb, common.items())

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return QTRational(-self.num, self.den)

    def __mul__(self, other):
        if isinstance(other, int):
            other = QTRational.from_int(other)
        elif isinstance(other, QTPoly):
            other = QTRational(other)
        if not isinstance(other, QTRational):
            return NotImplemented
        den = {}
        for pair, mult in list(self.den) + list(other.den):
            den[pair] = den.get(pair, 0) + mult
        return QTRational(self.num * other.num, den.items())

    __rmul__ = __mul__

    def div_factor(self, a: int, b: int) -> "QTRational":
        """Divide by the binomial factor 1 - q^a t^b."""
        den = dict(self.den)
        den[(a, b)] = den.get((a, b), 0) + 1
        return QTRational(self.num, den.items())

    def __eq__(self, other):
        if isinstance(other, (int, QTPoly)):
            other = (
                QTRational.from_int(other)
                if isinstance(other, int)
                else QTRational(other)
            )
        if not isinstance(other, QTRational):
            return NotImplemented
        return self.num * other.den_poly() == other.num * self.den_poly()

    __hash__ = None

    # -- evaluation ---------------------------------------------------------

    def evaluate(self, q: Fraction, t: Fraction) -> Fraction:
        """Substitute exact rationals for q and t.

        Raises PoleError as soon as any denominator factor vanishes at the
        point, even when the singularity would be removable."""
        q = Fraction(q)
        t = Fraction(t)
        denom = Fraction(1)
        for (a, b), mult in self.den:
            v = 1 - q**a * t**b
            if v == 0:
                raise PoleError(
                    "factor (1 - q^%d t^%d) vanishes at q=%s, t=%s" % (a, b, q, t)
                )
            denom *= v**mult
        return self.num.evaluate(q, t) / denom

    def evaluate_q_then_t(self, q: Fraction, t: Fraction) -> Fraction:
        """Substitute q first, then t, cancelling removable singularities.

        This matches specializations of the form "set q = 1, then read off a
        rational function of t": factors such as (1 - t^k) occurring against
        numerator powers of (1 - t) are cancelled exactly before the final
        substitution.  A genuine pole still raises PoleError."""
        q = Fraction(q)
        t = Fraction(t)
        num = self.num
        scalar = Fraction(1)
        vanishing = []
        for (a, b), mult in self.den:
            if b == 0:
                # pure-q factor: cancel in the q direction before substituting
                v = 1 - q**a
                if v == 0:
                    factor = QTPoly.binomial_factor(a, 0)
                    for _ in range(mult):
                        quotient = num.exact_div(factor)
                        if quotient is None:
                            raise PoleError(
                                "factor (1 - q^%d) vanishes at q=%s" % (a, q)
                            )
                        num = quotient
                else:
                    scalar *= v**mult
            else:
                v = 1 - q**a * t**b
                if v == 0:
                    vanishing.extend([(a, b)] * mult)
                else:
                    scalar *= v**mult
        coeffs = num.substitute_q(q)  # t_exp -> Fraction
        if not vanishing:
            value = sum(c * t**e for e, c in coeffs.items())
            return Fraction(value) / scalar
        if not coeffs:
            return Fraction(0)
        # each vanishing factor 1 - q^a t^b has a simple root at t (t != 0),
        # with (d/dt)(1 - c t^b) = -c b t^(b-1)
        deg = max(coeffs)
        dense = [coeffs.get(e, Fraction(0)) for e in range(deg + 1)]
        for _ in vanishing:
            dense = _synthetic_div(dense, t)
            if dense is None:
                raise PoleError("pole of order exceeding numerator vanishing")
        for a, b in vanishing:
            scalar *= -(q**a) * b * t ** (b - 1)
        value = sum(c * t**e for e, c in enumerate(dense))
        return Fraction(value) / scalar

    # -- display and serialization ------------------------------------------

    def __str__(self):
        num = str(self.num)
        if not self.den:
            return num
        fac = []
        for (a, b), mult in self.den:
            qpart = "" if a == 0 else ("q" if a == 1 else "q^%d" % a)
            tpart = "" if b == 0 else ("t" if b == 1 else "t^%d" % b)
            s = "(1-%s%s)" % (qpart, tpart)
            if mult > 1:
                s += "^%d" % mult
            fac.append(s)
        if len(self.num.terms) > 1:
            num = "(%s)" % num
        return "%s/%s" % (num, "".join(fac))

    __repr__ = __str__

    def to_json_obj(self):
        num = [
            [a, b, str(c)]
            for (a, b), c in sorted(self.num.terms.items())
        ]
        den = [[a, b, mult] for (a, b), mult in self.den]
        return {"num": num, "den": den}

    @classmethod
    def from_json_obj(cls, obj) -> "QTRational":
        num = QTPoly({(a, b): int(c) for a, b, c in obj["num"]})
        den = [((a, b), mult) for a, b, mult in obj["den"]]
        return cls(num, den)


def _synthetic_div(dense, root):
    """Divide the dense-coefficient polynomial (index = t exponent) by
    (t - root); returns the quotient or None when the remainder is nonzero."""
    out = [Fraction(0)] * (len(dense) - 1)
    carry = Fraction(0)
    for e in range(len(dense) - 1, 0, -1):
        carry = dense[e] + carry
        out[e - 1] = carry
        carry = carry * root
    if dense[0] + carry != 0:
        return None
    return out


def _distinct_permutations(vec):
    """All distinct orderings of a tuple, generated without repetition."""
    items = sorted(vec)
    n = len(items)
    result = []

    def backtrack(prefix, remaining):
        if not remaining:
            result.append(tuple(prefix))
            return
        prev = None
        for i, v in enumerate(remaining):
            if v == prev:
                continue
            prev = v
            backtrack(prefix + [v], remaining[:i] + remaining[i + 1 :])

    backtrack([], items)
    return result


class XExpansion:
    """Monomial expansion in x_1..x_n with QTRational coefficients.

    Keyed by exponent vectors (length-n tuples of nonnegative ints); zero
    coefficients are never stored.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        clean = {}
        if terms:
            for vec, coeff in terms.items():
                if len(vec) != n:
                    raise LengthMismatch(
                        "exponent vector %r has length %d, expected %d"
                        % (vec, len(vec), n)
                    )
                if isinstance(coeff, QTPoly):
                    coeff = QTRational(coeff)
                if not coeff.is_zero():
                    clean[tuple(vec)] = coeff
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("XExpansion is immutable")

    def coefficient(self, vec) -> QTRational:
        vec = tuple(vec)
        if len(vec) != self.n:
            raise LengthMismatch(
                "exponent vector %r has length %d, expected %d"
                % (vec, len(vec), self.n)
            )
        return self.terms.get(vec, QTRational.zero())

    def term_count(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, XExpansion):
            return NotImplemented
        if self.n != other.n:
            return False
        return self.first_difference(other) is None

    __hash__ = None

    def first_difference(self, other):
        """First exponent vector (in sorted order) whose coefficients differ,
        as (vec, self_coeff, other_coeff); None when equal."""
        if self.n != other.n:
            raise LengthMismatch("expansions over different variable counts")
        for vec in sorted(set(self.terms) | set(other.terms)):
            a = self.coefficient(vec)
            b = other.coefficient(vec)
            if not a == b:
                return (vec, a, b)
        return None

    def __add__(self, other):
        if not isinstance(other, XExpansion):
            return NotImplemented
        if self.n != other.n:
            raise LengthMismatch("expansions over different variable counts")
        out = dict(self.terms)
        for vec, coeff in other.terms.items():
            s = out.get(vec, QTRational.zero()) + coeff
            if s.is_zero():
                out.pop(vec, None)
            else:
                out[vec] = s
        return XExpansion(self.n, out)

    def scale(self, coeff: QTRational) -> "XExpansion":
        return XExpansion(
            self.n, {vec: c * coeff for vec, c in self.terms.items()}
        )

    def sum_coefficients(self) -> QTRational:
        """Value at x_1 = ... = x_n = 1 as a rational function of q, t."""
        total = QTRational.zero()
        for vec in sorted(self.terms):
            total = total + self.terms[vec]
        return total

    # -- symmetric-function views -------------------------------------------

    def monomial_basis(self):
        """Coefficients on monomial symmetric functions m_mu.

        Requires the expansion to be symmetric under permutation of the x
        variables; raises NotSymmetric otherwise.  Keys are partitions (the
        nonzero parts of the sorted exponent vector)."""
        groups = {}
        for vec in self.terms:
            groups.setdefault(tuple(sorted(vec, reverse=True)), []).append(vec)
        out = {}
        for rep, vecs in sorted(groups.items()):
            expected = _distinct_permutations(rep)
            if len(vecs) != len(expected):
                raise NotSymmetric(
                    "orbit of %r has %d of %d permutations present"
                    % (rep, len(vecs), len(expected))
                )
            base = self.terms[vecs[0]]
            for vec in vecs[1:]:
                if not self.terms[vec] == base:
                    raise NotSymmetric(
                        "coefficient of %r differs from %r" % (vec, vecs[0])
                    )
            mu = tuple(p for p in rep if p)
            out[mu] = base
        return out

    def is_symmetric(self) -> bool:
        try:
            self.monomial_basis()
        except NotSymmetric:
            return False
        return True

    @classmethod
    def from_m_basis(cls, n: int, coeffs) -> "XExpansion":
        """Rebuild an expansion from monomial-symmetric coefficients."""
        terms = {}
        for mu, coeff in coeffs.items():
            if len(mu) > n:
                raise LengthMismatch("partition %r longer than n=%d" % (mu, n))
            padded = tuple(mu) + (0,) * (n - len(mu))
            for vec in _distinct_permutations(padded):
                terms[vec] = coeff
        return cls(n, terms)

    # -- display and serialization ------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for vec in sorted(self.terms, reverse=True):
            coeff = self.terms[vec]
            mono = " ".join(
                "x%d" % (i + 1) if e == 1 else "x%d^%d" % (i + 1, e)
                for i, e in enumerate(vec)
                if e
            )
            c = str(coeff)
            if c == "1" and mono:
                parts.append(mono)
            elif mono:
                if len(coeff.num.terms) > 1 and not coeff.den:
                    c = "(%s)" % c
                parts.append("%s %s" % (c, mono))
            else:
                parts.append(c)
        return " + ".join(parts)

    __repr__ = __str__

    def to_json_obj(self):
        return {
            "n": self.n,
            "terms": [
                [list(vec), self.terms[vec].to_json_obj()]
                for vec in sorted(self.terms)
            ],
        }

    @classmethod
    def from_json_obj(cls, obj) -> "XExpansion":
        terms = {
            tuple(vec): QTRational.from_json_obj(coeff)
            for vec, coeff in obj["terms"]
        }
        return cls(obj["n"], terms)
