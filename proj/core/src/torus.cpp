#include "downup/torus.hpp"

#include "downup/errors.hpp"

#include <sstream>
#include <vector>

namespace downup {

TorusElement::TorusElement(const TorusMono& m, const Scalar& c)
{
    if (!c.is_zero())
        terms_.emplace(m, c);
}

Scalar TorusElement::coefficient(const TorusMono& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar{} : it->second;
}

void TorusElement::add_term(const TorusMono& m, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

TorusElement TorusElement::operator-() const
{
    TorusElement t = *this;
    for (auto& [m, c] : t.terms_)
        c = -c;
    return t;
}

TorusElement& TorusElement::operator+=(const TorusElement& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o)
{
    for (const auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

TorusElement operator*(const Scalar& k, const TorusElement& t)
{
    TorusElement out;
    if (k.is_zero())
        return out;
    for (const auto& [m, c] : t.terms_)
        out.terms_.emplace_hint(out.terms_.end(), m, k * c);
    return out;
}

TorusElement QuantumTorus::mul(const TorusElement& p, const TorusElement& q) const
{
    const CaseConfig& cfg = alg_.config();
    TorusElement out;
    for (const auto& [m1, c1] : p.terms()) {
        for (const auto& [m2, c2] : q.terms()) {
            // T1^{a1} T2^{b2} T3^{c2} = s^{a1 b2} r^{a1 c2} T2^{b2} T3^{c2} T1^{a1}
            const Scalar k = cfg.param_power(static_cast<long>(m1.a) * m2.c,
                                             static_cast<long>(m1.a) * m2.b);
            out.add_term(TorusMono{m1.a + m2.a, m1.b + m2.b, m1.c + m2.c}, c1 * c2 * k);
        }
    }
    return out;
}

Scalar QuantumTorus::conjugation_scalar(int g, const TorusMono& m) const
{
    const CaseConfig& cfg = alg_.config();
    switch (g) {
    case 1:
        return cfg.param_power(m.c, m.b);
    case 2:
        return cfg.param_power(0, -m.a);
    case 3:
        return cfg.param_power(-m.a, 0);
    default:
        throw InternalError("torus generator index out of range");
    }
}

bool QuantumTorus::is_central_monomial(const TorusMono& m) const
{
    for (int g = 1; g <= 3; ++g)
        if (!conjugation_scalar(g, m).is_one())
            return false;
    return true;
}

bool QuantumTorus::is_central(const TorusElement& t) const
{
    for (const auto& [m, c] : t.terms())
        if (!is_central_monomial(m))
            return false;
    return true;
}

namespace {

// prod_{k=0}^{l-1} sigma^{-k}(a): the Laurent factor of u^l d^l.
std::vector<Scalar> u_power_factor(const Algebra& alg, int l)
{
    std::vector<int> shifts;
    for (int k = 0; k < l; ++k)
        shifts.push_back(-k);
    return alg.sigma_product(shifts);
}

} // namespace

TorusElement QuantumTorus::embed(const Element& e) const
{
    TorusElement out;
    std::map<int, std::vector<Scalar>> factors;
    for (const auto& [w, c] : e.terms()) {
        if (w.m >= 0) {
            out.add_term(TorusMono{w.m, w.i, w.j}, c);
            continue;
        }
        // x^i y^j u^l = x^i y^j prod_k sigma^{-k}(a) T1^{-l}
        const int l = -w.m;
        auto it = factors.find(l);
        if (it == factors.end())
            it = factors.emplace(l, u_power_factor(alg_, l)).first;
        const auto& poly = it->second;
        for (int p = 0; p <= l; ++p)
            out.add_term(TorusMono{-l, w.i + p, w.j + l - p}, c * poly[p]);
    }
    return out;
}

Element QuantumTorus::preimage(const TorusElement& t) const
{
    Element out;
    // T1-exponent -> total degree in T2, T3 -> (T2 exponent -> coefficient)
    std::map<int, std::map<int, std::map<int, Scalar>>> negative;
    for (const auto& [m, c] : t.terms()) {
        if (m.a >= 0)
            out.add_term(BasisWord{m.b, m.c, m.a}, c);
        else
            negative[-m.a][m.b + m.c][m.b] = c;
    }

    for (const auto& [l, by_degree] : negative) {
        // Divide each homogeneous component by the degree-l form
        // p(T2, T3) = prod_k sigma^{-k}(a), working in t = T2/T3.
        const std::vector<Scalar> divisor = u_power_factor(alg_, l);
        for (const auto& [total, coeffs] : by_degree) {
            const int bmin = coeffs.begin()->first;
            const int bmax = coeffs.rbegin()->first;
            std::vector<Scalar> rem(bmax - bmin + 1);
            for (const auto& [b, c] : coeffs)
                rem[b - bmin] = c;
            if (static_cast<int>(rem.size()) - 1 < l)
                throw NotInSubalgebra("T1^-" + std::to_string(l) +
                                      " part is not divisible by the image of u^" + std::to_string(l));
            std::vector<Scalar> quot(rem.size() - l);
            const Scalar lead_inv = divisor[l].inverse();
            for (int k = static_cast<int>(quot.size()) - 1; k >= 0; --k) {
                const Scalar q = rem[k + l] * lead_inv;
                if (q.is_zero())
                    continue;
                for (int p = 0; p <= l; ++p)
                    rem[k + p] -= q * divisor[p];
                quot[k] = q;
            }
            for (const auto& r : rem)
                if (!r.is_zero())
                    throw NotInSubalgebra("T1^-" + std::to_string(l) +
                                          " part is not divisible by the image of u^" +
                                          std::to_string(l));
            for (std::size_t k = 0; k < quot.size(); ++k) {
                const int b = bmin + static_cast<int>(k);
                out.add_term(BasisWord{b, total - l - b, -l}, quot[k]);
            }
        }
    }
    return out;
}

std::string to_string(const TorusElement& t, const CaseConfig& cfg)
{
    if (t.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : t.terms()) {
        if (!first)
            os << " + ";
        first = false;
        os << '(' << to_string(c, cfg) << ')';
        const std::pair<const char*, int> factors[] = {{"T2", m.b}, {"T3", m.c}, {"T1", m.a}};
        for (const auto& [name, e] : factors) {
            if (e == 0)
                continue;
            os << ' ' << name;
            if (e != 1)
                os << '^' << e;
        }
    }
    return os.str();
}

} // namespace downup
