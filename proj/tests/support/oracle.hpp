#pragma once

#include "downup/algebra.hpp"
#include "downup/torus.hpp"

#include <map>
#include <string>

namespace downup::support {

// Naive normal forms by string rewriting over the letters
//   x, X = x^-1, y, Y = y^-1, d, u
// using only the definitions x = du - r ud, y = du - s ud (solved for du and
// ud) and the commutation rules of d and u with x, y. No sigma-products.
class RewriteOracle {
public:
    using Words = std::map<std::string, Scalar>;

    explicit RewriteOracle(CaseConfig cfg);

    static std::string spell(const BasisWord& w);
    Words spell(const Element& e) const;

    Element normalize(Words words) const;
    Element mul(const Element& a, const Element& b) const;

private:
    CaseConfig cfg_;
    Scalar inv_s_minus_r_;
};

// True when 1 lies in the span of { e w : w = x^i y^j d^m, |i|,|j|,|m| <= box }
// (right inverse search).
bool has_inverse_in_box(const Algebra& alg, const Element& e, int box);

// True when target lies in the span of { e w : w in the box }.
bool in_right_ideal_box(const Algebra& alg, const Element& e, const Element& target, int box);

// Central torus monomial by direct commutation with T1, T2, T3 and their inverses.
bool brute_force_central(const QuantumTorus& torus, const TorusMono& m);

} // namespace downup::support
