#pragma once

#include "downup/element.hpp"

#include <optional>
#include <vector>

namespace downup {

/*
  The localized down-up algebra A_S(r+s, -rs) for a fixed case.

  Multiplication uses the generalized Weyl algebra presentation over
  R = K[x^{+-1}, y^{+-1}] with sigma(x) = s x, sigma(y) = r y and
  a = (x - y)/(s - r):

      u d = a,   d u = sigma(a),   d t = sigma(t) d,   u t = sigma^{-1}(t) u.

  The object is immutable after construction and safe to share between
  threads.
*/
class Algebra {
public:
    explicit Algebra(CaseConfig cfg = CaseConfig{});

    const CaseConfig& config() const { return cfg_; }
    Case kind() const { return cfg_.kind(); }

    Element one() const { return Element(Scalar(1)); }
    Element d() const { return Element::word(0, 0, 1); }
    Element u() const { return Element::word(0, 0, -1); }
    Element x() const { return Element::word(1, 0, 0); }
    Element y() const { return Element::word(0, 1, 0); }
    Element z() const { return Element::word(1, 1, 0); }

    // s^{m i} r^{m j}: the factor picked up when d^m (or u^{-m}) moves past
    // x^i y^j to its right.
    Scalar sigma_scale(int i, int j, int m) const;

    // sigma^m(a) = (s^m x - r^m y)/(s - r).
    Element gwa_a(int m) const;

    Element mul(const Element& a, const Element& b) const;

    // n >= 0 always; n < 0 requires an invertible base (InputError otherwise).
    Element pow(const Element& a, int n) const;

    // a b - b a
    Element commutator(const Element& a, const Element& b) const;

    // The inverse when e = lambda x^k y^l with lambda != 0, otherwise empty.
    std::optional<Element> is_invertible(const Element& e) const;

    // Matches the classified normal forms: lambda x^k y^l in case 1,
    // f x^k or f y^l with f in K[z^{+-1}] in case 2.
    bool is_normal(const Element& e) const;

    // True when every word has nonnegative x and y exponents, i.e. e lies
    // in the unlocalized down-up algebra.
    static bool in_unlocalized(const Element& e);

    // Coefficients of prod_t sigma^{shift_t}(a), a homogeneous polynomial of
    // degree n in x, y: entry p is the coefficient of x^p y^{n-p}.
    std::vector<Scalar> sigma_product(const std::vector<int>& shifts) const;

private:
    CaseConfig cfg_;
    Scalar inv_s_minus_r_;
};

} // namespace downup
