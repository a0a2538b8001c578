#include "downup/morphism.hpp"

#include "downup/errors.hpp"
#include "downup/span.hpp"

#include <cstdlib>
#include <map>
#include <vector>

namespace downup {

Element image_of_x(const Algebra& alg, const GenImages& g)
{
    return alg.mul(g.d_img, g.u_img) - alg.config().r() * alg.mul(g.u_img, g.d_img);
}

Element image_of_y(const Algebra& alg, const GenImages& g)
{
    return alg.mul(g.d_img, g.u_img) - alg.config().s() * alg.mul(g.u_img, g.d_img);
}

bool check_endo(const Algebra& alg, const GenImages& g, bool localized)
{
    const CaseConfig& cfg = alg.config();
    const Element& d = g.d_img;
    const Element& u = g.u_img;
    const Scalar alpha = cfg.alpha();
    const Scalar rs = cfg.r() * cfg.s();

    const Element du = alg.mul(d, u);
    const Element ud = alg.mul(u, d);

    // d^2 u = (r+s) d u d - rs u d^2
    const Element rel1 = alg.mul(d, du) - alpha * alg.mul(du, d) + rs * alg.mul(ud, d);
    if (!rel1.is_zero())
        return false;
    // d u^2 = (r+s) u d u - rs u^2 d
    const Element rel2 = alg.mul(du, u) - alpha * alg.mul(ud, u) + rs * alg.mul(u, ud);
    if (!rel2.is_zero())
        return false;

    if (!localized)
        return Algebra::in_unlocalized(d) && Algebra::in_unlocalized(u);
    const Element x_img = du - cfg.r() * ud;
    const Element y_img = du - cfg.s() * ud;
    return alg.is_invertible(x_img).has_value() && alg.is_invertible(y_img).has_value();
}

GenImages images(const ClassifiedEndo& m)
{
    const int to_d = m.kind == EndoKind::straight ? 1 : -1;
    return GenImages{Element::word(m.i, m.j, to_d, m.gamma1),
                     Element::word(m.k, m.l, -to_d, m.gamma2)};
}

ClassifiedEndo classify(const Algebra& alg, const GenImages& g)
{
    auto dt = g.d_img.single_term();
    auto ut = g.u_img.single_term();
    if (!dt || !ut)
        throw NotClassifiable("generator images are not single monomials");
    const BasisWord& dw = dt->first;
    const BasisWord& uw = ut->first;

    ClassifiedEndo m;
    if (dw.m == 1 && uw.m == -1)
        m.kind = EndoKind::straight;
    else if (dw.m == -1 && uw.m == 1)
        m.kind = EndoKind::swap;
    else
        throw NotClassifiable("images are not monomial multiples of (d, u) or (u, d)");
    m.gamma1 = dt->second;
    m.gamma2 = ut->second;
    m.i = dw.i;
    m.j = dw.j;
    m.k = uw.i;
    m.l = uw.j;

    const int ex = m.i + m.k;
    const int ey = m.j + m.l;
    bool ok = false;
    if (alg.kind() == Case::one)
        ok = m.kind == EndoKind::straight ? (ex == 0 && ey == 0) : (ex == -1 && ey == -1);
    else
        ok = ex == ey;
    if (!ok)
        throw NotClassifiable("exponents violate i+k = j+l constraint (i+k = " + std::to_string(ex) +
                              ", j+l = " + std::to_string(ey) + ")");
    return m;
}

Element apply(const Algebra& alg, const GenImages& g, const Element& e)
{
    Element out;
    if (e.is_zero())
        return out;

    // Powers are memoized per call; the generator key is 'x', 'y', 'd', 'u'.
    std::map<std::pair<char, int>, Element> powers;
    std::map<char, Element> base;
    auto base_of = [&](char gen) -> const Element& {
        auto it = base.find(gen);
        if (it != base.end())
            return it->second;
        Element b;
        switch (gen) {
        case 'x': b = image_of_x(alg, g); break;
        case 'y': b = image_of_y(alg, g); break;
        case 'd': b = g.d_img; break;
        default: b = g.u_img; break;
        }
        return base.emplace(gen, std::move(b)).first->second;
    };
    auto power = [&](char gen, int n) -> Element {
        if (n == 0)
            return alg.one();
        auto key = std::make_pair(gen, n);
        auto it = powers.find(key);
        if (it != powers.end())
            return it->second;
        Element p = alg.pow(base_of(gen), n);
        return powers.emplace(key, std::move(p)).first->second;
    };

    for (const auto& [w, c] : e.terms()) {
        Element img = alg.mul(power('x', w.i), power('y', w.j));
        if (w.m > 0)
            img = alg.mul(img, power('d', w.m));
        else if (w.m < 0)
            img = alg.mul(img, power('u', -w.m));
        out += c * img;
    }
    return out;
}

Element apply(const Algebra& alg, const ClassifiedEndo& m, const Element& e)
{
    return apply(alg, images(m), e);
}

LaurentImages laurent_images(const Algebra& alg, const ClassifiedEndo& m)
{
    const CaseConfig& cfg = alg.config();
    const int ex = m.i + m.k;
    const int ey = m.j + m.l;
    const Scalar g12 = m.gamma1 * m.gamma2;
    if (m.kind == EndoKind::straight) {
        // lambda = gamma1 gamma2 s^{-i} r^{-j}; x -> lambda x^{ex+1} y^{ey}, y -> lambda x^{ex} y^{ey+1}
        const Scalar lambda = g12 * cfg.param_power(-m.j, -m.i);
        return LaurentImages{LaurentMonomial{lambda, ex + 1, ey},
                             LaurentMonomial{lambda, ex, ey + 1}};
    }
    // x -> -gamma1 gamma2 s^i r^{j+1} x^{ex} y^{ey+1},
    // y -> -gamma1 gamma2 s^{i+1} r^j x^{ex+1} y^{ey}
    return LaurentImages{LaurentMonomial{-(g12 * cfg.param_power(m.j + 1, m.i)), ex, ey + 1},
                         LaurentMonomial{-(g12 * cfg.param_power(m.j, m.i + 1)), ex + 1, ey}};
}

int center_exponent(const Algebra& alg, const ClassifiedEndo& m)
{
    const LaurentImages li = laurent_images(alg, m);
    return li.x.px + li.y.px;
}

namespace {

// theta(x^a y^b) for the Laurent images li.
LaurentMonomial monomial_image(const LaurentImages& li, int a, int b)
{
    return LaurentMonomial{li.x.coef.pow(a) * li.y.coef.pow(b), a * li.x.px + b * li.y.px,
                           a * li.x.py + b * li.y.py};
}

struct GeneratorImage {
    Scalar coef;
    int i = 0;
    int j = 0;
    bool is_d = true;
};

GeneratorImage image_of_generator(const ClassifiedEndo& m, bool of_d)
{
    const bool straight = m.kind == EndoKind::straight;
    if (of_d)
        return GeneratorImage{m.gamma1, m.i, m.j, straight};
    return GeneratorImage{m.gamma2, m.k, m.l, !straight};
}

ClassifiedEndo from_generator_images(const GeneratorImage& d_img, const GeneratorImage& u_img)
{
    ClassifiedEndo out;
    out.kind = d_img.is_d ? EndoKind::straight : EndoKind::swap;
    out.gamma1 = d_img.coef;
    out.i = d_img.i;
    out.j = d_img.j;
    out.gamma2 = u_img.coef;
    out.k = u_img.i;
    out.l = u_img.j;
    return out;
}

} // namespace

ClassifiedEndo compose(const Algebra& alg, const ClassifiedEndo& f, const ClassifiedEndo& g)
{
    const LaurentImages fl = laurent_images(alg, f);
    auto push = [&](const GeneratorImage& gi) {
        // f(c x^i y^j G) = c f(x)^i f(y)^j f(G)
        const LaurentMonomial mono = monomial_image(fl, gi.i, gi.j);
        const GeneratorImage fg = image_of_generator(f, gi.is_d);
        return GeneratorImage{gi.coef * mono.coef * fg.coef, mono.px + fg.i, mono.py + fg.j,
                              fg.is_d};
    };
    return from_generator_images(push(image_of_generator(g, true)),
                                 push(image_of_generator(g, false)));
}

ClassifiedEndo compose_on_generators(const Algebra& alg, const ClassifiedEndo& f,
                                     const ClassifiedEndo& g)
{
    const GenImages fi = images(f);
    const GenImages gi = images(g);
    return classify(alg, GenImages{apply(alg, fi, gi.d_img), apply(alg, fi, gi.u_img)});
}

ClassifiedEndo invert(const Algebra& alg, const ClassifiedEndo& m)
{
    const LaurentImages li = laurent_images(alg, m);
    // Columns of the exponent matrix are the exponent vectors of m(x), m(y).
    const int det = li.x.px * li.y.py - li.y.px * li.x.py;
    if (std::abs(det) != 1)
        throw NotAutomorphism(li.x.px + li.y.px);

    // Laurent monomial x^a y^b whose image under m is x^-ti y^-tj.
    auto solve = [&](int ti, int tj) {
        const int a = -(li.y.py * ti - li.y.px * tj) * det;
        const int b = -(-li.x.py * ti + li.x.px * tj) * det;
        return std::make_pair(a, b);
    };

    // phi(d) = c x^a y^b G with m(phi(d)) = d: the image m(G) must be
    // proportional to d, so G = d for straight maps and G = u for swaps.
    const GeneratorImage to_d = image_of_generator(m, m.kind == EndoKind::straight);
    const GeneratorImage to_u = image_of_generator(m, m.kind != EndoKind::straight);

    auto [a1, b1] = solve(to_d.i, to_d.j);
    auto [a2, b2] = solve(to_u.i, to_u.j);
    ClassifiedEndo phi;
    phi.kind = m.kind;
    phi.i = a1;
    phi.j = b1;
    phi.gamma1 = (monomial_image(li, a1, b1).coef * to_d.coef).inverse();
    phi.k = a2;
    phi.l = b2;
    phi.gamma2 = (monomial_image(li, a2, b2).coef * to_u.coef).inverse();
    return phi;
}

ClassifiedEndo formula_inverse(const Algebra& alg, const ClassifiedEndo& m)
{
    if (alg.kind() != Case::one)
        throw InputError("UnsupportedCase", "the closed-form inverse formulas are stated for case 1");
    const CaseConfig& cfg = alg.config();
    const Scalar& g1 = m.gamma1;
    const Scalar& g2 = m.gamma2;
    const long i = m.i, j = m.j, k = m.k, l = m.l;
    ClassifiedEndo phi;
    phi.kind = m.kind;
    if (m.kind == EndoKind::straight) {
        phi.gamma1 = g1.pow(i + j - 1) * g2.pow(i + j) * cfg.param_power(-j * (i + j), -i * (i + j));
        phi.i = -m.i;
        phi.j = -m.j;
        phi.gamma2 = g1.pow(k + l) * g2.pow(k + l - 1) * cfg.param_power(l * (k + l), k * (k + l));
        phi.k = -m.k;
        phi.l = -m.l;
        return phi;
    }
    const Scalar sign_d = (k + l) % 2 == 0 ? Scalar(1) : Scalar(-1);
    const Scalar sign_u = (i + j) % 2 == 0 ? Scalar(1) : Scalar(-1);
    phi.gamma1 = sign_d * g1.pow(-k - l) * g2.pow(-k - l - 1) * cfg.param_power(j * (k - l), k * (l - k));
    phi.i = m.k;
    phi.j = m.l;
    phi.gamma2 = sign_u * g1.pow(-i - j - 1) * g2.pow(-i - j) * cfg.param_power(j * (i - j), k * (j - i));
    phi.k = m.i;
    phi.l = m.j;
    return phi;
}

SurjectivityVerdict check_surjective_unlocalized(const Algebra& alg, const GenImages& g,
                                                 int degree_bound)
{
    if (!check_endo(alg, g, false))
        throw NotAnEndomorphism("images do not define an endomorphism of the unlocalized algebra");
    auto is_multiple_of = [](const Element& e, int m) {
        auto t = e.single_term();
        return t && t->first == BasisWord{0, 0, m};
    };
    if ((is_multiple_of(g.d_img, 1) && is_multiple_of(g.u_img, -1)) ||
        (is_multiple_of(g.d_img, -1) && is_multiple_of(g.u_img, 1)))
        return SurjectivityVerdict::automorphism;

    LinearSpan<BasisWord> span;
    std::vector<Element> level{alg.one()};
    span.insert(alg.one().terms());
    for (int len = 1; len <= degree_bound; ++len) {
        std::vector<Element> next;
        next.reserve(level.size() * 2);
        for (const auto& p : level) {
            for (const Element* gen : {&g.d_img, &g.u_img}) {
                Element q = alg.mul(p, *gen);
                if (q.is_zero())
                    continue;
                // Products that add nothing new still seed longer words.
                span.insert(q.terms());
                next.push_back(std::move(q));
            }
        }
        level = std::move(next);
    }
    if (!span.contains(alg.d().terms()) || !span.contains(alg.u().terms()))
        return SurjectivityVerdict::not_surjective_at_bound;
    return SurjectivityVerdict::inconclusive;
}

std::string to_string(EndoKind kind)
{
    return kind == EndoKind::straight ? "straight" : "swap";
}

std::string to_string(SurjectivityVerdict v)
{
    switch (v) {
    case SurjectivityVerdict::automorphism: return "automorphism";
    case SurjectivityVerdict::not_surjective_at_bound: return "not_surjective_at_bound";
    case SurjectivityVerdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

} // namespace downup
