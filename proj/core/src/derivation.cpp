#include "downup/derivation.hpp"

#include "downup/errors.hpp"
#include "downup/torus.hpp"

#include <set>
#include <sstream>

namespace downup {

DerivSpec operator+(const DerivSpec& a, const DerivSpec& b)
{
    return DerivSpec{a.dd + b.dd, a.du + b.du};
}

DerivSpec operator-(const DerivSpec& a, const DerivSpec& b)
{
    return DerivSpec{a.dd - b.dd, a.du - b.du};
}

CenterElement CenterElement::z_power(int n, const Scalar& c)
{
    CenterElement out;
    out.add(n, c);
    return out;
}

std::optional<CenterElement> CenterElement::from_element(const Element& e)
{
    CenterElement out;
    for (const auto& [w, c] : e.terms()) {
        if (w.m != 0 || w.i != w.j)
            return std::nullopt;
        out.add(w.i, c);
    }
    return out;
}

void CenterElement::add(int n, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(n, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Element CenterElement::to_element() const
{
    Element out;
    for (const auto& [n, c] : terms_)
        out.add_term(BasisWord{n, n, 0}, c);
    return out;
}

CenterElement CenterElement::operator-() const
{
    CenterElement out = *this;
    for (auto& [n, c] : out.terms_)
        c = -c;
    return out;
}

CenterElement operator+(CenterElement a, const CenterElement& b)
{
    for (const auto& [n, c] : b.terms_)
        a.add(n, c);
    return a;
}

CenterElement operator-(CenterElement a, const CenterElement& b)
{
    for (const auto& [n, c] : b.terms_)
        a.add(n, -c);
    return a;
}

CenterElement operator*(const Scalar& k, const CenterElement& a)
{
    CenterElement out;
    for (const auto& [n, c] : a.terms_)
        out.add(n, k * c);
    return out;
}

std::string to_string(const CenterElement& c, const CaseConfig& cfg)
{
    if (c.is_zero())
        return "0";
    if (c.terms().size() == 1 && c.terms().begin()->first == 0)
        return to_string(c.terms().begin()->second, cfg);
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, k] : c.terms()) {
        if (!first)
            os << " + ";
        first = false;
        os << '(' << to_string(k, cfg) << ')';
        if (n != 0) {
            os << " z";
            if (n != 1)
                os << '^' << n;
        }
    }
    return os.str();
}

DerivSpec inner(const Algebra& alg, const Element& t)
{
    return DerivSpec{alg.commutator(t, alg.d()), alg.commutator(t, alg.u())};
}

DerivSpec base_derivation(BaseDerivation which)
{
    if (which == BaseDerivation::D1)
        return DerivSpec{Element::word(0, 0, 1), Element{}};
    return DerivSpec{Element{}, Element::word(0, 0, -1)};
}

DerivSpec scaled(const Algebra& alg, const CenterElement& c, const DerivSpec& s)
{
    const Element ce = c.to_element();
    return DerivSpec{alg.mul(ce, s.dd), alg.mul(ce, s.du)};
}

namespace {

// D(d u) - k D(u d)
Element value_on_combination(const Algebra& alg, const DerivSpec& s, const Scalar& k)
{
    const Element d = alg.d();
    const Element u = alg.u();
    const Element dud = alg.mul(s.dd, u) + alg.mul(d, s.du);
    const Element ddu = alg.mul(s.du, d) + alg.mul(u, s.dd);
    return dud - k * ddu;
}

// D(g^n) for n >= 0 by the product rule.
Element power_derivative(const Algebra& alg, const Element& g, const Element& dg, int n)
{
    Element out;
    if (n <= 0)
        return out;
    std::vector<Element> powers{alg.one()};
    for (int a = 1; a < n; ++a)
        powers.push_back(alg.mul(powers.back(), g));
    for (int a = 0; a < n; ++a)
        out += alg.mul(alg.mul(powers[a], dg), powers[n - 1 - a]);
    return out;
}

// D(g1 g2 ... gn) for a product of elements with known derivatives.
Element product_derivative(const Algebra& alg, const std::vector<Element>& f,
                           const std::vector<Element>& df)
{
    Element out;
    for (std::size_t pos = 0; pos < f.size(); ++pos) {
        Element term = alg.one();
        for (std::size_t q = 0; q < f.size(); ++q)
            term = alg.mul(term, q == pos ? df[q] : f[q]);
        out += term;
    }
    return out;
}

class LeibnizExtension {
public:
    LeibnizExtension(const Algebra& alg, const DerivSpec& s)
        : alg_(alg), s_(s), dx_(value_on_x(alg, s)), dy_(value_on_y(alg, s))
    {
    }

    // D(g^n) for g in {x, y} (n any integer) or g in {d, u} (n >= 0).
    const Element& power(char g, int n)
    {
        auto key = std::make_pair(g, n);
        auto it = cache_.find(key);
        if (it != cache_.end())
            return it->second;
        Element base;
        Element dbase;
        int e = n;
        switch (g) {
        case 'x':
            base = alg_.x();
            dbase = dx_;
            break;
        case 'y':
            base = alg_.y();
            dbase = dy_;
            break;
        case 'd':
            base = alg_.d();
            dbase = s_.dd;
            break;
        default:
            base = alg_.u();
            dbase = s_.du;
            break;
        }
        if (n < 0) {
            // D(g^-1) = -g^-1 D(g) g^-1
            const Element inv = *alg_.is_invertible(base);
            dbase = -alg_.mul(alg_.mul(inv, dbase), inv);
            base = inv;
            e = -n;
        }
        return cache_.emplace(key, power_derivative(alg_, base, dbase, e)).first->second;
    }

    Element word(const BasisWord& w)
    {
        const Element xi = Element::word(w.i, 0, 0);
        const Element yj = Element::word(0, w.j, 0);
        const Element g = Element::word(0, 0, w.m);
        const Element& dxi = power('x', w.i);
        const Element& dyj = power('y', w.j);
        const Element& dg = w.m >= 0 ? power('d', w.m) : power('u', -w.m);
        return product_derivative(alg_, {xi, yj, g}, {dxi, dyj, dg});
    }

private:
    const Algebra& alg_;
    const DerivSpec& s_;
    Element dx_;
    Element dy_;
    std::map<std::pair<char, int>, Element> cache_;
};

} // namespace

Element value_on_x(const Algebra& alg, const DerivSpec& s)
{
    return value_on_combination(alg, s, alg.config().r());
}

Element value_on_y(const Algebra& alg, const DerivSpec& s)
{
    return value_on_combination(alg, s, alg.config().s());
}

bool check_deriv(const Algebra& alg, const DerivSpec& s)
{
    const CaseConfig& cfg = alg.config();
    const Element d = alg.d();
    const Element u = alg.u();
    const Scalar alpha = cfg.alpha();
    const Scalar rs = cfg.r() * cfg.s();

    auto leib = [&](const std::vector<Element>& f) {
        std::vector<Element> df;
        for (const auto& g : f)
            df.push_back(g == d ? s.dd : s.du);
        return product_derivative(alg, f, df);
    };
    // d^2 u - (r+s) d u d + rs u d^2
    const Element rel1 = leib({d, d, u}) - alpha * leib({d, u, d}) + rs * leib({u, d, d});
    if (!rel1.is_zero())
        return false;
    // d u^2 - (r+s) u d u + rs u^2 d
    const Element rel2 = leib({d, u, u}) - alpha * leib({u, d, u}) + rs * leib({u, u, d});
    if (!rel2.is_zero())
        return false;

    // g v = k v g for g in {d, u} and v in {x^-1, y^-1}
    LeibnizExtension ext(alg, s);
    const Element xinv = Element::word(-1, 0, 0);
    const Element yinv = Element::word(0, -1, 0);
    const struct {
        const Element& g;
        const Element& dg;
        const Element& v;
        const Element& dv;
        Scalar k;
    } checks[] = {
        {d, s.dd, xinv, ext.power('x', -1), cfg.s().inverse()},
        {d, s.dd, yinv, ext.power('y', -1), cfg.r().inverse()},
        {u, s.du, xinv, ext.power('x', -1), cfg.s()},
        {u, s.du, yinv, ext.power('y', -1), cfg.r()},
    };
    for (const auto& c : checks) {
        const Element lhs = alg.mul(c.dg, c.v) + alg.mul(c.g, c.dv);
        const Element rhs = c.k * (alg.mul(c.dv, c.g) + alg.mul(c.v, c.dg));
        if (lhs != rhs)
            return false;
    }
    return true;
}

Element apply_deriv(const Algebra& alg, const DerivSpec& s, const Element& e)
{
    LeibnizExtension ext(alg, s);
    Element out;
    for (const auto& [w, c] : e.terms())
        out += c * ext.word(w);
    return out;
}

DerivSpec reconstruct(const Algebra& alg, const Decomposition& dec)
{
    return inner(alg, dec.t) + scaled(alg, dec.mu1, base_derivation(BaseDerivation::D1)) +
           scaled(alg, dec.mu2, base_derivation(BaseDerivation::D2));
}

Decomposition decompose(const Algebra& alg, const DerivSpec& s)
{
    const QuantumTorus torus(alg);
    const TorusElement values[3] = {
        torus.embed(s.dd),
        torus.embed(value_on_x(alg, s)),
        torus.embed(value_on_y(alg, s)),
    };
    const TorusMono inverses[3] = {{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}};

    // W_g = D(T_g) T_g^-1 = t - T_g t T_g^-1 + f_g
    std::vector<TorusElement> w;
    std::set<TorusMono> support;
    for (int g = 0; g < 3; ++g) {
        w.push_back(torus.mul(values[g], QuantumTorus::monomial(inverses[g].a, inverses[g].b,
                                                                inverses[g].c)));
        for (const auto& [m, c] : w.back().terms())
            support.insert(m);
    }

    TorusElement t;
    TorusElement f[3];
    for (const auto& m : support) {
        Scalar chi[3];
        for (int g = 0; g < 3; ++g)
            chi[g] = torus.conjugation_scalar(g + 1, m);
        if (torus.is_central_monomial(m)) {
            for (int g = 0; g < 3; ++g)
                f[g].add_term(m, w[g].coefficient(m));
            continue;
        }
        int pivot = 0;
        while (chi[pivot].is_one())
            ++pivot;
        const Scalar ta = w[pivot].coefficient(m) / (Scalar(1) - chi[pivot]);
        for (int g = 0; g < 3; ++g)
            if (w[g].coefficient(m) != ta * (Scalar(1) - chi[g]))
                throw NotADerivation("inner part is inconsistent across generators");
        t.add_term(m, ta);
    }
    if (f[1] != f[2])
        throw NotADerivation("central multipliers of x and y differ");

    auto to_center = [](const TorusElement& e) {
        CenterElement out;
        for (const auto& [m, c] : e.terms())
            out.add(m.b, c);
        return out;
    };

    Decomposition dec;
    try {
        dec.t = torus.preimage(t);
    } catch (const NotInSubalgebra& ex) {
        throw InternalError(std::string("inner witness outside the localized algebra: ") +
                            ex.what());
    }
    dec.mu1 = to_center(f[0]);
    dec.mu2 = to_center(f[1]) - dec.mu1;

    if (reconstruct(alg, dec) != s)
        throw NotADerivation("reconstruction does not reproduce the values on d and u");
    return dec;
}

std::pair<CenterElement, CenterElement> hh1_coords(const Algebra& alg, const DerivSpec& s)
{
    Decomposition dec = decompose(alg, s);
    return {std::move(dec.mu1), std::move(dec.mu2)};
}

} // namespace downup
