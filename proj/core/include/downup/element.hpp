#pragma once

#include "downup/scalar.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace downup {

// x^i y^j d^m for m >= 0, x^i y^j u^(-m) for m < 0. (0, 0, 0) is the unit.
struct BasisWord {
    int i = 0;
    int j = 0;
    int m = 0;

    // Canonical order: by (m, i, j).
    friend auto operator<=>(const BasisWord& a, const BasisWord& b)
    {
        if (auto c = a.m <=> b.m; c != 0)
            return c;
        if (auto c = a.i <=> b.i; c != 0)
            return c;
        return a.j <=> b.j;
    }
    friend bool operator==(const BasisWord&, const BasisWord&) = default;
};

// A finite linear combination of PBW words. No zero coefficients are stored,
// so equality of elements is equality of the maps.
class Element {
public:
    using Terms = std::map<BasisWord, Scalar>;

    Element() = default;
    Element(const Scalar& c);
    Element(const BasisWord& w, const Scalar& c = Scalar(1));

    static Element word(int i, int j, int m, const Scalar& c = Scalar(1))
    {
        return Element(BasisWord{i, j, m}, c);
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Scalar coefficient(const BasisWord& w) const;

    // The single term of a one-term element.
    std::optional<std::pair<BasisWord, Scalar>> single_term() const;

    // Scalar value if the element lies in the ground field.
    std::optional<Scalar> as_scalar() const;

    void add_term(const BasisWord& w, const Scalar& c);

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }

    // Left scalar multiplication; scalars are central.
    friend Element operator*(const Scalar& c, const Element& e);

    friend bool operator==(const Element&, const Element&) = default;

private:
    Terms terms_;
};

// Canonical text: terms ascending by (m, i, j), "(<scalar>) x^i y^j d^k"
// or "... u^l", unit factors and exponent 1 omitted, joined by " + ".
std::string to_string(const Element& e, const CaseConfig& cfg);

} // namespace downup
