#pragma once

#include "downup/algebra.hpp"

#include <map>
#include <string>
#include <utility>

namespace downup {

// A derivation of A_S, determined by its values on d and u.
struct DerivSpec {
    Element dd;
    Element du;

    friend bool operator==(const DerivSpec&, const DerivSpec&) = default;
};

DerivSpec operator+(const DerivSpec& a, const DerivSpec& b);
DerivSpec operator-(const DerivSpec& a, const DerivSpec& b);

// A Laurent polynomial in z = xy, stored as exponent -> coefficient. In case 1
// only the constant term may be nonzero.
class CenterElement {
public:
    CenterElement() = default;
    CenterElement(const Scalar& c) { add(0, c); }

    static CenterElement z_power(int n, const Scalar& c = Scalar(1));

    // Reads e as a Laurent polynomial in z; empty when e has any other word.
    static std::optional<CenterElement> from_element(const Element& e);

    const std::map<int, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(int n, const Scalar& c);

    Element to_element() const;

    CenterElement operator-() const;
    friend CenterElement operator+(CenterElement a, const CenterElement& b);
    friend CenterElement operator-(CenterElement a, const CenterElement& b);
    friend CenterElement operator*(const Scalar& k, const CenterElement& a);

    friend bool operator==(const CenterElement&, const CenterElement&) = default;

private:
    std::map<int, Scalar> terms_;
};

// A constant prints as its scalar; otherwise "(c) z^n" terms ascending in n.
std::string to_string(const CenterElement& c, const CaseConfig& cfg);

// ad_t: d -> t d - d t, u -> t u - u t
DerivSpec inner(const Algebra& alg, const Element& t);

enum class BaseDerivation { D1, D2 };

// D1: d -> d, u -> 0.  D2: d -> 0, u -> u.
DerivSpec base_derivation(BaseDerivation which);

// The derivation c D for a central multiplier c.
DerivSpec scaled(const Algebra& alg, const CenterElement& c, const DerivSpec& s);

// D(x) and D(y) from x = du - r ud, y = du - s ud.
Element value_on_x(const Algebra& alg, const DerivSpec& s);
Element value_on_y(const Algebra& alg, const DerivSpec& s);

// Leibniz images of both defining relations vanish, and the forced values on
// x^-1, y^-1 respect their commutation with d and u.
bool check_deriv(const Algebra& alg, const DerivSpec& s);

// Leibniz extension over PBW words, with D(x^-1) = -x^-1 D(x) x^-1.
Element apply_deriv(const Algebra& alg, const DerivSpec& s, const Element& e);

// D = ad_t + mu1 D1 + mu2 D2, with t free of central components.
struct Decomposition {
    Element t;
    CenterElement mu1;
    CenterElement mu2;
};

DerivSpec reconstruct(const Algebra& alg, const Decomposition& dec);

// Throws NotADerivation when the torus equations are inconsistent or the
// reconstruction does not reproduce s; InternalError if the inner witness
// falls outside A_S.
Decomposition decompose(const Algebra& alg, const DerivSpec& s);

// (mu1, mu2): coordinates of the class of s in HH^1 over the center.
std::pair<CenterElement, CenterElement> hh1_coords(const Algebra& alg, const DerivSpec& s);

} // namespace downup
