#include "downup/scalar.hpp"

#include "downup/errors.hpp"

#include <cstdlib>
#include <sstream>

namespace downup {

Scalar Scalar::reduce(Poly num, Poly den)
{
    if (den.is_zero())
        throw DivisionByZero();
    if (num.is_zero())
        return Scalar{};
    if (!den.is_one()) {
        const Poly g = gcd(num, den);
        if (!g.is_one()) {
            num = divexact(num, g);
            den = divexact(den, g);
        }
        if (sgn(den.leading().coef) < 0) {
            num = -num;
            den = -den;
        }
    }
    return Scalar(std::move(num), std::move(den), Trusted{});
}

Scalar Scalar::fraction(const Poly& num, const Poly& den)
{
    return reduce(num, den);
}

Scalar Scalar::rational(const Integer& num, const Integer& den)
{
    return reduce(Poly(num), Poly(den));
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw DivisionByZero();
    Poly n = den_;
    Poly d = num_;
    if (sgn(d.leading().coef) < 0) {
        n = -n;
        d = -d;
    }
    return Scalar(std::move(n), std::move(d), Trusted{});
}

Scalar Scalar::pow(long n) const
{
    if (n < 0)
        return inverse().pow(-n);
    Scalar result(1);
    Scalar base = *this;
    while (n > 0) {
        if (n & 1)
            result *= base;
        n >>= 1;
        if (n > 0)
            base *= base;
    }
    return result;
}

Scalar Scalar::operator-() const
{
    return Scalar(-num_, den_, Trusted{});
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    if (den_.is_one() && o.den_.is_one()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        *this = reduce(num_ + o.num_, den_);
        return *this;
    }
    // a/b + c/d with g = gcd(b, d): (a d' + c b') / (b' d' g), then cancel
    // against g only.
    const Poly g = gcd(den_, o.den_);
    if (g.is_one()) {
        Poly n = num_ * o.den_ + o.num_ * den_;
        if (n.is_zero())
            return *this = Scalar{};
        Poly d = den_ * o.den_;
        *this = Scalar(std::move(n), std::move(d), Trusted{});
        return *this;
    }
    const Poly b1 = divexact(den_, g);
    const Poly d1 = divexact(o.den_, g);
    Poly n = num_ * d1 + o.num_ * b1;
    if (n.is_zero())
        return *this = Scalar{};
    const Poly h = gcd(n, g);
    if (!h.is_one()) {
        n = divexact(n, h);
        *this = Scalar(std::move(n), b1 * d1 * divexact(g, h), Trusted{});
    } else {
        *this = Scalar(std::move(n), b1 * d1 * g, Trusted{});
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    return *this += -o;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    if (is_zero() || o.is_zero())
        return *this = Scalar{};
    if (den_.is_one() && o.den_.is_one()) {
        num_ = num_ * o.num_;
        return *this;
    }
    // cross-cancel: (a/b)(c/d) = (a/g1)(c/g2) / ((b/g2)(d/g1))
    const Poly g1 = gcd(num_, o.den_);
    const Poly g2 = gcd(o.num_, den_);
    const Poly a = g1.is_one() ? num_ : divexact(num_, g1);
    const Poly d = g1.is_one() ? o.den_ : divexact(o.den_, g1);
    const Poly c = g2.is_one() ? o.num_ : divexact(o.num_, g2);
    const Poly b = g2.is_one() ? den_ : divexact(den_, g2);
    Poly n = a * c;
    Poly m = b * d;
    if (sgn(m.leading().coef) < 0) {
        n = -n;
        m = -m;
    }
    *this = Scalar(std::move(n), std::move(m), Trusted{});
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    return *this *= o.inverse();
}

Scalar CaseConfig::r() const
{
    return Scalar(Poly::monomial(1, 1, 0));
}

Scalar CaseConfig::s() const
{
    if (case_ == Case::two)
        return Scalar::fraction(Poly(1), Poly::monomial(1, 1, 0));
    return Scalar(Poly::monomial(1, 0, 1));
}

Scalar CaseConfig::q() const
{
    if (case_ != Case::two)
        throw InputError("UnknownParameter", "q is only defined in case 2");
    return Scalar(Poly::monomial(1, 1, 0));
}

Scalar CaseConfig::param_power(long m, long n) const
{
    if (case_ == Case::two) {
        const long e = m - n;
        if (e >= 0)
            return Scalar(Poly::monomial(1, static_cast<int>(e), 0));
        return Scalar::fraction(Poly(1), Poly::monomial(1, static_cast<int>(-e), 0));
    }
    const int nr = static_cast<int>(m > 0 ? m : 0);
    const int ns = static_cast<int>(n > 0 ? n : 0);
    const int dr = static_cast<int>(m < 0 ? -m : 0);
    const int ds = static_cast<int>(n < 0 ? -n : 0);
    if (dr == 0 && ds == 0)
        return Scalar(Poly::monomial(1, nr, ns));
    return Scalar::fraction(Poly::monomial(1, nr, ns), Poly::monomial(1, dr, ds));
}

namespace {

void append_power(std::ostringstream& os, const char* name, int e, bool& first_factor)
{
    if (e == 0)
        return;
    if (!first_factor)
        os << '*';
    os << name;
    if (e != 1)
        os << '^' << e;
    first_factor = false;
}

bool is_bare_atom(const Poly& p)
{
    // A single positive term with at most one factor needs no parentheses
    // as a divisor: "s", "r^2", "3".
    if (!p.is_monomial())
        return false;
    const PolyTerm& t = p.leading();
    if (sgn(t.coef) < 0)
        return false;
    const int factors = (t.coef != 1 ? 1 : 0) + (t.er != 0 ? 1 : 0) + (t.es != 0 ? 1 : 0);
    return factors <= 1;
}

} // namespace

std::string to_string(const Poly& p, const CaseConfig& cfg)
{
    if (p.is_zero())
        return "0";
    const bool two = cfg.kind() == Case::two;
    std::ostringstream os;
    bool first_term = true;
    for (const auto& t : p.terms()) {
        Integer c = t.coef;
        if (first_term) {
            if (sgn(c) < 0) {
                os << '-';
                c = -c;
            }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
            c = abs(c);
        }
        first_term = false;
        bool first_factor = true;
        const bool has_vars = t.er != 0 || t.es != 0;
        if (c != 1 || !has_vars) {
            os << c.get_str();
            first_factor = false;
        }
        append_power(os, two ? "q" : "r", t.er, first_factor);
        append_power(os, "s", t.es, first_factor);
    }
    return os.str();
}

std::string to_string(const Scalar& x, const CaseConfig& cfg)
{
    if (x.is_polynomial())
        return to_string(x.numerator(), cfg);
    std::string num = to_string(x.numerator(), cfg);
    std::string den = to_string(x.denominator(), cfg);
    if (x.numerator().size() > 1)
        num = "(" + num + ")";
    if (!is_bare_atom(x.denominator()))
        den = "(" + den + ")";
    return num + "/" + den;
}

} // namespace downup
