#pragma once

#include "downup/poly.hpp"

#include <string>

namespace downup {

/*
  An element of the coefficient field: Q(r, s) in case 1, Q(q) in case 2.

  Stored as numerator/denominator in Z[r, s] with the gcd (content included)
  divided out and the denominator's graded-lex leading coefficient positive.
  Equal field elements therefore have identical representations and
  equality is term comparison. In case 2 only the first parameter slot is
  used and holds q; s = 1/q is an ordinary fraction.
*/
class Scalar {
public:
    Scalar() : den_(1) {}
    Scalar(long v) : num_(v), den_(1) {}
    Scalar(const Integer& v) : num_(v), den_(1) {}
    explicit Scalar(const Poly& p) : num_(p), den_(1) {}

    // Throws DivisionByZero when den is zero.
    static Scalar fraction(const Poly& num, const Poly& den);
    static Scalar rational(const Integer& num, const Integer& den);

    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    Scalar inverse() const;
    Scalar pow(long n) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    struct Trusted {};
    Scalar(Poly num, Poly den, Trusted) : num_(std::move(num)), den_(std::move(den)) {}

    static Scalar reduce(Poly num, Poly den);

    Poly num_;
    Poly den_;
};

enum class Case { one = 1, two = 2 };

// Selects the coefficient field and the meaning of the parameters r, s, q.
class CaseConfig {
public:
    explicit CaseConfig(Case c = Case::one) : case_(c) {}

    Case kind() const { return case_; }

    Scalar r() const;
    Scalar s() const;
    // Only meaningful in case 2; throws InputError in case 1.
    Scalar q() const;
    Scalar alpha() const { return r() + s(); }
    Scalar beta() const { return -(r() * s()); }

    // r^m s^n in canonical form.
    Scalar param_power(long m, long n) const;

    friend bool operator==(const CaseConfig&, const CaseConfig&) = default;

private:
    Case case_;
};

// Parseable text: "r^2*s - 3", "(r - s)/(r*s)", "q/(q^2 + 1)".
std::string to_string(const Poly& p, const CaseConfig& cfg);
std::string to_string(const Scalar& x, const CaseConfig& cfg);

} // namespace downup
