#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace downup {

using Integer = mpz_class;

struct PolyTerm {
    int er = 0; // exponent of the first parameter (r, or q in case 2)
    int es = 0; // exponent of the second parameter (s)
    Integer coef;

    friend bool operator==(const PolyTerm& a, const PolyTerm& b)
    {
        return a.er == b.er && a.es == b.es && a.coef == b.coef;
    }
};

// Sparse polynomial in Z[r, s] with nonnegative exponents. Terms are kept in
// descending graded-lexicographic order (total degree first, then r > s),
// without zero coefficients, so equal polynomials compare equal term by term.
class Poly {
public:
    Poly() = default;
    Poly(long c);
    Poly(const Integer& c);

    static Poly monomial(const Integer& c, int er, int es);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t size() const { return terms_.size(); }
    const std::vector<PolyTerm>& terms() const { return terms_; }

    // Graded-lex leading term. Undefined on zero.
    const PolyTerm& leading() const { return terms_.front(); }

    int min_er() const;
    int min_es() const;
    int max_er() const;
    int max_es() const;

    // Positive gcd of the coefficients; 0 for the zero polynomial.
    Integer content() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);

    Poly scaled(const Integer& c) const;
    Poly divexact(const Integer& c) const;
    // Multiplies by r^dr s^ds; negative shifts must keep exponents >= 0.
    Poly shifted(int dr, int ds) const;

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    static Poly from_terms(std::vector<PolyTerm> terms); // sorts and combines

private:
    std::vector<PolyTerm> terms_;
};

// Greatest common divisor in Z[r, s], normalized so the graded-lex leading
// coefficient is positive. gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

// a / b where b is known to divide a exactly; throws InternalError otherwise.
Poly divexact(const Poly& a, const Poly& b);

} // namespace downup
