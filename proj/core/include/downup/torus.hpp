#pragma once

#include "downup/algebra.hpp"

#include <compare>
#include <map>
#include <string>

namespace downup {

// T2^b T3^c T1^a, with T1 = d, T2 = x, T3 = y.
struct TorusMono {
    int a = 0;
    int b = 0;
    int c = 0;

    friend auto operator<=>(const TorusMono&, const TorusMono&) = default;
};

class TorusElement {
public:
    using Terms = std::map<TorusMono, Scalar>;

    TorusElement() = default;
    TorusElement(const TorusMono& m, const Scalar& c = Scalar(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const TorusMono& m) const;

    void add_term(const TorusMono& m, const Scalar& c);

    TorusElement operator-() const;
    TorusElement& operator+=(const TorusElement& o);
    TorusElement& operator-=(const TorusElement& o);
    friend TorusElement operator+(TorusElement a, const TorusElement& b) { return a += b; }
    friend TorusElement operator-(TorusElement a, const TorusElement& b) { return a -= b; }
    friend TorusElement operator*(const Scalar& k, const TorusElement& t);

    friend bool operator==(const TorusElement&, const TorusElement&) = default;

private:
    Terms terms_;
};

/*
  The quantum torus K[T1^{+-1}, T2^{+-1}, T3^{+-1}] with
  T1 T2 = s T2 T1, T1 T3 = r T3 T1, T2 T3 = T3 T2, obtained from A_S by
  inverting d. embed() is the localization map; preimage() inverts it on its
  image.
*/
class QuantumTorus {
public:
    explicit QuantumTorus(const Algebra& algebra) : alg_(algebra) {}

    const Algebra& algebra() const { return alg_; }

    static TorusElement monomial(int a, int b, int c, const Scalar& k = Scalar(1))
    {
        return TorusElement(TorusMono{a, b, c}, k);
    }

    TorusElement mul(const TorusElement& p, const TorusElement& q) const;

    // Scalars chi_g(alpha) with T_g m T_g^{-1} = chi_g(alpha) m, g = 1, 2, 3.
    Scalar conjugation_scalar(int g, const TorusMono& m) const;

    bool is_central_monomial(const TorusMono& m) const;
    bool is_central(const TorusElement& t) const;

    TorusElement embed(const Element& e) const;

    // Throws NotInSubalgebra when t is not the image of an element of A_S.
    Element preimage(const TorusElement& t) const;

private:
    Algebra alg_;
};

// "(<scalar>) T2^b T3^c T1^a" terms ascending by (a, b, c).
std::string to_string(const TorusElement& t, const CaseConfig& cfg);

} // namespace downup
