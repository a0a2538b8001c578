#include "downup/algebra.hpp"

#include "downup/errors.hpp"

#include <algorithm>
#include <map>

namespace downup {

Algebra::Algebra(CaseConfig cfg)
    : cfg_(cfg), inv_s_minus_r_((cfg_.s() - cfg_.r()).inverse())
{
}

Scalar Algebra::sigma_scale(int i, int j, int m) const
{
    if (m == 0 || (i == 0 && j == 0))
        return Scalar(1);
    return cfg_.param_power(static_cast<long>(m) * j, static_cast<long>(m) * i);
}

Element Algebra::gwa_a(int m) const
{
    Element e = Element::word(1, 0, 0, cfg_.param_power(0, m) * inv_s_minus_r_);
    e.add_term(BasisWord{0, 1, 0}, -(cfg_.param_power(m, 0) * inv_s_minus_r_));
    return e;
}

std::vector<Scalar> Algebra::sigma_product(const std::vector<int>& shifts) const
{
    // Multiply out prod (s^e x - r^e y), then divide by (s - r)^n once.
    std::vector<Scalar> poly{Scalar(1)};
    for (int e : shifts) {
        const Scalar cx = cfg_.param_power(0, e);
        const Scalar cy = -cfg_.param_power(e, 0);
        std::vector<Scalar> next(poly.size() + 1);
        for (std::size_t p = 0; p < poly.size(); ++p) {
            next[p + 1] += cx * poly[p];
            next[p] += cy * poly[p];
        }
        poly = std::move(next);
    }
    const Scalar denom = inv_s_minus_r_.pow(static_cast<long>(shifts.size()));
    for (auto& c : poly)
        c *= denom;
    return poly;
}

namespace {

// The sigma shifts of the a-factors produced by X^{m1} X^{m2} when the two
// exponents have opposite signs.
std::vector<int> reduction_shifts(int m1, int m2)
{
    std::vector<int> shifts;
    if (m1 > 0 && m2 < 0) {
        // d^k u^l = sigma^k(a) sigma^{k-1}(a) ... d^{k-n} u^{l-n}
        const int k = m1;
        const int n = std::min(m1, -m2);
        for (int t = 0; t < n; ++t)
            shifts.push_back(k - t);
    } else if (m1 < 0 && m2 > 0) {
        // u^l d^k = sigma^{-(l-1)}(a) ... sigma^{-(l-n)}(a) u^{l-n} d^{k-n}
        const int l = -m1;
        const int n = std::min(-m1, m2);
        for (int t = 0; t < n; ++t)
            shifts.push_back(1 - l + t);
    }
    return shifts;
}

} // namespace

Element Algebra::mul(const Element& a, const Element& b) const
{
    Element out;
    if (a.is_zero() || b.is_zero())
        return out;
    std::map<std::pair<int, int>, std::vector<Scalar>> expansions;
    for (const auto& [w1, c1] : a.terms()) {
        for (const auto& [w2, c2] : b.terms()) {
            const Scalar c = c1 * c2 * sigma_scale(w2.i, w2.j, w1.m);
            const int i = w1.i + w2.i;
            const int j = w1.j + w2.j;
            const int m = w1.m + w2.m;
            if ((w1.m >= 0 && w2.m >= 0) || (w1.m <= 0 && w2.m <= 0)) {
                out.add_term(BasisWord{i, j, m}, c);
                continue;
            }
            auto key = std::make_pair(w1.m, w2.m);
            auto it = expansions.find(key);
            if (it == expansions.end())
                it = expansions.emplace(key, sigma_product(reduction_shifts(w1.m, w2.m))).first;
            const auto& poly = it->second;
            const int n = static_cast<int>(poly.size()) - 1;
            for (int p = 0; p <= n; ++p)
                if (!poly[p].is_zero())
                    out.add_term(BasisWord{i + p, j + n - p, m}, c * poly[p]);
        }
    }
    return out;
}

Element Algebra::pow(const Element& a, int n) const
{
    if (n < 0) {
        auto inv = is_invertible(a);
        if (!inv)
            throw InputError("NotInvertible", "negative power of a non-invertible element");
        return pow(*inv, -n);
    }
    Element result = one();
    Element base = a;
    while (n > 0) {
        if (n & 1)
            result = mul(result, base);
        n >>= 1;
        if (n > 0)
            base = mul(base, base);
    }
    return result;
}

Element Algebra::commutator(const Element& a, const Element& b) const
{
    return mul(a, b) - mul(b, a);
}

std::optional<Element> Algebra::is_invertible(const Element& e) const
{
    auto t = e.single_term();
    if (!t || t->first.m != 0)
        return std::nullopt;
    return Element::word(-t->first.i, -t->first.j, 0, t->second.inverse());
}

bool Algebra::is_normal(const Element& e) const
{
    if (e.is_zero())
        return true;
    if (kind() == Case::one) {
        auto t = e.single_term();
        return t && t->first.m == 0;
    }
    const int offset = e.terms().begin()->first.i - e.terms().begin()->first.j;
    return std::all_of(e.terms().begin(), e.terms().end(), [offset](const auto& kv) {
        return kv.first.m == 0 && kv.first.i - kv.first.j == offset;
    });
}

bool Algebra::in_unlocalized(const Element& e)
{
    return std::all_of(e.terms().begin(), e.terms().end(),
                       [](const auto& kv) { return kv.first.i >= 0 && kv.first.j >= 0; });
}

} // namespace downup
