#include "downup/poly.hpp"

#include "downup/errors.hpp"

#include <algorithm>
#include <utility>

namespace downup {

namespace {

bool glex_greater(const PolyTerm& a, const PolyTerm& b)
{
    const int da = a.er + a.es;
    const int db = b.er + b.es;
    if (da != db)
        return da > db;
    return a.er > b.er;
}

bool same_exponents(const PolyTerm& a, const PolyTerm& b)
{
    return a.er == b.er && a.es == b.es;
}

/*
  Recursive dense representation Z[s][r], used only by gcd and exact
  division. Dense<R> is a univariate polynomial over the integral domain R
  (coefficient of v^k at index k, no trailing zeros). The base ring helpers
  for Integer are declared first so the templates below see them.
*/

bool ring_zero(const Integer& a) { return sgn(a) == 0; }
int ring_sign(const Integer& a) { return sgn(a); }

Integer ring_gcd(const Integer& a, const Integer& b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

bool ring_divexact(const Integer& a, const Integer& b, Integer& q)
{
    if (sgn(b) == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        return false;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return true;
}

template <class R>
struct Dense {
    std::vector<R> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool zero() const { return c.empty(); }
    const R& lead() const { return c.back(); }

    void trim()
    {
        while (!c.empty() && ring_zero(c.back()))
            c.pop_back();
    }
};

template <class R>
bool ring_zero(const Dense<R>& p) { return p.zero(); }

template <class R>
int ring_sign(const Dense<R>& p) { return p.zero() ? 0 : ring_sign(p.lead()); }

template <class R>
Dense<R> operator-(Dense<R> p)
{
    for (auto& x : p.c)
        x = -x;
    return p;
}

template <class R>
Dense<R>& operator+=(Dense<R>& a, const Dense<R>& b)
{
    if (a.c.size() < b.c.size())
        a.c.resize(b.c.size());
    for (std::size_t k = 0; k < b.c.size(); ++k)
        a.c[k] += b.c[k];
    a.trim();
    return a;
}

template <class R>
Dense<R>& operator-=(Dense<R>& a, const Dense<R>& b)
{
    if (a.c.size() < b.c.size())
        a.c.resize(b.c.size());
    for (std::size_t k = 0; k < b.c.size(); ++k)
        a.c[k] -= b.c[k];
    a.trim();
    return a;
}

template <class R>
Dense<R> operator*(const Dense<R>& a, const Dense<R>& b)
{
    Dense<R> out;
    if (a.zero() || b.zero())
        return out;
    out.c.assign(a.c.size() + b.c.size() - 1, R{});
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (ring_zero(a.c[i]))
            continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            out.c[i + j] += a.c[i] * b.c[j];
    }
    out.trim();
    return out;
}

template <class R>
Dense<R> scale(Dense<R> p, const R& k)
{
    for (auto& x : p.c)
        x = k * x;
    p.trim();
    return p;
}

template <class R>
Dense<R> normalize_sign(Dense<R> p)
{
    return ring_sign(p) < 0 ? -std::move(p) : p;
}

template <class R>
bool ring_divexact(const Dense<R>& a, const Dense<R>& b, Dense<R>& q)
{
    q = Dense<R>{};
    if (b.zero())
        return false;
    if (a.zero())
        return true;
    if (a.degree() < b.degree())
        return false;
    q.c.assign(a.degree() - b.degree() + 1, R{});
    Dense<R> rem = a;
    while (!rem.zero()) {
        if (rem.degree() < b.degree())
            return false;
        R t;
        if (!ring_divexact(rem.lead(), b.lead(), t))
            return false;
        const int shift = rem.degree() - b.degree();
        for (int k = 0; k <= b.degree(); ++k)
            rem.c[k + shift] -= t * b.c[k];
        q.c[shift] = std::move(t);
        rem.trim();
    }
    q.trim();
    return true;
}

template <class R>
Dense<R> divide_coefficients(Dense<R> p, const R& k)
{
    for (auto& x : p.c) {
        R t;
        ring_divexact(x, k, t);
        x = std::move(t);
    }
    return p;
}

template <class R>
R content(const Dense<R>& p)
{
    R g{};
    for (const auto& x : p.c)
        g = ring_gcd(g, x);
    return g;
}

// Pseudo-remainder: some lc(b)^k * a reduced modulo b.
template <class R>
Dense<R> prem(Dense<R> a, const Dense<R>& b)
{
    const R& lb = b.lead();
    const int db = b.degree();
    while (!a.zero() && a.degree() >= db) {
        const R la = a.lead();
        const int shift = a.degree() - db;
        for (auto& x : a.c)
            x = lb * x;
        for (int k = 0; k <= db; ++k)
            a.c[k + shift] -= la * b.c[k];
        a.trim();
    }
    return a;
}

Integer ring_norm(const Integer& a) { return abs(a); }

Integer times(const Integer& a, const Integer& k) { return a * k; }

// Symmetric residue of a modulo m and the exact quotient (a - residue) / m.
Integer split_symmetric(const Integer& a, const Integer& m, Integer& rest)
{
    Integer res;
    mpz_fdiv_r(res.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    if (2 * res > m)
        res -= m;
    rest = a - res;
    mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), m.get_mpz_t());
    return res;
}

template <class R>
Integer ring_norm(const Dense<R>& p)
{
    Integer n = 0;
    for (const auto& x : p.c) {
        Integer t = ring_norm(x);
        if (t > n)
            n = std::move(t);
    }
    return n;
}

template <class R>
Dense<R> times(Dense<R> p, const Integer& k)
{
    for (auto& x : p.c)
        x = times(x, k);
    p.trim();
    return p;
}

template <class R>
Dense<R> split_symmetric(const Dense<R>& a, const Integer& m, Dense<R>& rest)
{
    Dense<R> res;
    rest.c.assign(a.c.size(), R{});
    res.c.reserve(a.c.size());
    for (std::size_t k = 0; k < a.c.size(); ++k)
        res.c.push_back(split_symmetric(a.c[k], m, rest.c[k]));
    res.trim();
    rest.trim();
    return res;
}

template <class R>
R evaluate(const Dense<R>& p, const Integer& v)
{
    R acc{};
    for (auto it = p.c.rbegin(); it != p.c.rend(); ++it) {
        acc = times(acc, v);
        acc += *it;
    }
    return acc;
}

template <class R>
Dense<R> ring_gcd(Dense<R> a, Dense<R> b);

// Heuristic gcd of two primitive polynomials of positive degree: evaluate at
// a large integer, take the gcd there and read the answer back from its
// balanced base-v digits. A primitive candidate dividing both inputs is the
// gcd. Returns false when no evaluation point worked.
template <class R>
bool heuristic_gcd(const Dense<R>& a, const Dense<R>& b, Dense<R>& out)
{
    Integer v = 2 * std::min(ring_norm(a), ring_norm(b)) + 29;
    for (int attempt = 0; attempt < 6; ++attempt) {
        const R ea = evaluate(a, v);
        const R eb = evaluate(b, v);
        if (!ring_zero(ea) && !ring_zero(eb)) {
            R h = ring_gcd(ea, eb);
            Dense<R> g;
            while (!ring_zero(h)) {
                R rest;
                g.c.push_back(split_symmetric(h, v, rest));
                h = std::move(rest);
            }
            g.trim();
            if (!g.zero()) {
                g = normalize_sign(divide_coefficients(std::move(g), content(g)));
                Dense<R> q;
                if (ring_divexact(a, g, q) && ring_divexact(b, g, q)) {
                    out = std::move(g);
                    return true;
                }
            }
        }
        v = v * 73794 / 27011 + 1;
    }
    return false;
}

template <class R>
Dense<R> ring_gcd(Dense<R> a, Dense<R> b)
{
    if (a.zero())
        return normalize_sign(std::move(b));
    if (b.zero())
        return normalize_sign(std::move(a));
    const R ca = content(a);
    const R cb = content(b);
    const R g = ring_gcd(ca, cb);
    a = divide_coefficients(std::move(a), ca);
    b = divide_coefficients(std::move(b), cb);
    if (a.degree() == 0 || b.degree() == 0)
        return normalize_sign(Dense<R>{{g}});
    Dense<R> h;
    if (heuristic_gcd(a, b, h))
        return normalize_sign(scale(std::move(h), g));
    if (a.degree() < b.degree())
        std::swap(a, b);
    // primitive polynomial remainder sequence
    while (!b.zero()) {
        Dense<R> rem = prem(a, b);
        a = std::move(b);
        if (rem.zero())
            b = Dense<R>{};
        else
            b = divide_coefficients(rem, content(rem));
    }
    a = divide_coefficients(a, content(a));
    return normalize_sign(scale(std::move(a), g));
}

using Univariate = Dense<Integer>;
using Bivariate = Dense<Univariate>; // outer variable r, inner s

Bivariate to_dense(const Poly& p)
{
    Bivariate out;
    out.c.resize(p.max_er() + 1);
    for (const auto& t : p.terms()) {
        auto& inner = out.c[t.er].c;
        if (static_cast<int>(inner.size()) <= t.es)
            inner.resize(t.es + 1);
        inner[t.es] = t.coef;
    }
    return out;
}

Poly from_dense(const Bivariate& d)
{
    std::vector<PolyTerm> terms;
    for (std::size_t er = 0; er < d.c.size(); ++er)
        for (std::size_t es = 0; es < d.c[er].c.size(); ++es)
            if (sgn(d.c[er].c[es]) != 0)
                terms.push_back({static_cast<int>(er), static_cast<int>(es), d.c[er].c[es]});
    return Poly::from_terms(std::move(terms));
}

Poly normalized_sign(Poly p)
{
    if (!p.is_zero() && sgn(p.leading().coef) < 0)
        return -p;
    return p;
}

} // namespace

Poly::Poly(long c)
{
    if (c != 0)
        terms_.push_back({0, 0, Integer(c)});
}

Poly::Poly(const Integer& c)
{
    if (sgn(c) != 0)
        terms_.push_back({0, 0, c});
}

Poly Poly::monomial(const Integer& c, int er, int es)
{
    Poly p;
    if (sgn(c) != 0)
        p.terms_.push_back({er, es, c});
    return p;
}

bool Poly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_[0].er == 0 && terms_[0].es == 0);
}

bool Poly::is_one() const
{
    return terms_.size() == 1 && terms_[0].er == 0 && terms_[0].es == 0 && terms_[0].coef == 1;
}

int Poly::min_er() const
{
    if (terms_.empty())
        return 0;
    int m = terms_[0].er;
    for (const auto& t : terms_)
        m = std::min(m, t.er);
    return m;
}

int Poly::min_es() const
{
    if (terms_.empty())
        return 0;
    int m = terms_[0].es;
    for (const auto& t : terms_)
        m = std::min(m, t.es);
    return m;
}

int Poly::max_er() const
{
    int m = 0;
    for (const auto& t : terms_)
        m = std::max(m, t.er);
    return m;
}

int Poly::max_es() const
{
    int m = 0;
    for (const auto& t : terms_)
        m = std::max(m, t.es);
    return m;
}

Integer Poly::content() const
{
    Integer g = 0;
    for (const auto& t : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

Poly Poly::operator-() const
{
    Poly p = *this;
    for (auto& t : p.terms_)
        t.coef = -t.coef;
    return p;
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.terms_.empty())
        return *this;
    if (terms_.empty())
        return *this = o;
    std::vector<PolyTerm> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() && b != o.terms_.end()) {
        if (same_exponents(*a, *b)) {
            Integer c = a->coef + b->coef;
            if (sgn(c) != 0)
                out.push_back({a->er, a->es, std::move(c)});
            ++a;
            ++b;
        } else if (glex_greater(*a, *b)) {
            out.push_back(*a++);
        } else {
            out.push_back(*b++);
        }
    }
    out.insert(out.end(), a, terms_.end());
    out.insert(out.end(), b, o.terms_.end());
    terms_ = std::move(out);
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    return *this += -o;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return Poly{};
    if (a.is_monomial() || b.is_monomial()) {
        const Poly& m = a.is_monomial() ? a : b;
        const Poly& p = a.is_monomial() ? b : a;
        const PolyTerm& mt = m.terms_[0];
        Poly out;
        out.terms_.reserve(p.terms_.size());
        for (const auto& t : p.terms_)
            out.terms_.push_back({t.er + mt.er, t.es + mt.es, t.coef * mt.coef});
        return out;
    }
    std::vector<PolyTerm> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_)
            prod.push_back({x.er + y.er, x.es + y.es, x.coef * y.coef});
    return Poly::from_terms(std::move(prod));
}

Poly Poly::scaled(const Integer& c) const
{
    if (sgn(c) == 0)
        return Poly{};
    Poly p = *this;
    for (auto& t : p.terms_)
        t.coef *= c;
    return p;
}

Poly Poly::divexact(const Integer& c) const
{
    Poly p = *this;
    for (auto& t : p.terms_)
        mpz_divexact(t.coef.get_mpz_t(), t.coef.get_mpz_t(), c.get_mpz_t());
    return p;
}

Poly Poly::shifted(int dr, int ds) const
{
    Poly p = *this;
    for (auto& t : p.terms_) {
        t.er += dr;
        t.es += ds;
    }
    return p;
}

Poly Poly::from_terms(std::vector<PolyTerm> terms)
{
    std::sort(terms.begin(), terms.end(), glex_greater);
    Poly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && same_exponents(p.terms_.back(), t)) {
            p.terms_.back().coef += t.coef;
            if (sgn(p.terms_.back().coef) == 0)
                p.terms_.pop_back();
        } else if (sgn(t.coef) != 0) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

Poly gcd(const Poly& a, const Poly& b)
{
    if (a.is_zero())
        return normalized_sign(b);
    if (b.is_zero())
        return normalized_sign(a);
    if (a == b)
        return normalized_sign(a);

    Integer cg = ring_gcd(a.content(), b.content());
    const int mr = std::min(a.min_er(), b.min_er());
    const int ms = std::min(a.min_es(), b.min_es());
    if (a.is_monomial() || b.is_monomial())
        return Poly::monomial(cg, mr, ms);

    const Poly a1 = a.shifted(-a.min_er(), -a.min_es()).divexact(a.content());
    const Poly b1 = b.shifted(-b.min_er(), -b.min_es()).divexact(b.content());
    if (a1.is_constant() || b1.is_constant())
        return Poly::monomial(cg, mr, ms);
    if (a1 == b1 || a1 == -b1)
        return normalized_sign(a1).scaled(cg).shifted(mr, ms);

    const Poly g = normalized_sign(from_dense(ring_gcd(to_dense(a1), to_dense(b1))));
    return g.scaled(cg).shifted(mr, ms);
}

Poly divexact(const Poly& a, const Poly& b)
{
    if (b.is_zero())
        throw InternalError("exact division by the zero polynomial");
    if (a.is_zero())
        return a;
    const int dr = b.min_er();
    const int ds = b.min_es();
    if (a.min_er() < dr || a.min_es() < ds)
        throw InternalError("polynomial division is not exact");
    if (b.is_monomial()) {
        const Integer& c = b.leading().coef;
        for (const auto& t : a.terms())
            if (!mpz_divisible_p(t.coef.get_mpz_t(), c.get_mpz_t()))
                throw InternalError("polynomial division is not exact");
        return a.shifted(-dr, -ds).divexact(c);
    }
    Bivariate q;
    if (!ring_divexact(to_dense(a.shifted(-dr, -ds)), to_dense(b.shifted(-dr, -ds)), q))
        throw InternalError("polynomial division is not exact");
    return from_dense(q);
}

} // namespace downup
