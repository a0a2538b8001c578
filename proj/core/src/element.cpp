#include "downup/element.hpp"

#include <sstream>

namespace downup {

Element::Element(const Scalar& c)
{
    if (!c.is_zero())
        terms_.emplace(BasisWord{}, c);
}

Element::Element(const BasisWord& w, const Scalar& c)
{
    if (!c.is_zero())
        terms_.emplace(w, c);
}

Scalar Element::coefficient(const BasisWord& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar{} : it->second;
}

std::optional<std::pair<BasisWord, Scalar>> Element::single_term() const
{
    if (terms_.size() != 1)
        return std::nullopt;
    return *terms_.begin();
}

std::optional<Scalar> Element::as_scalar() const
{
    if (terms_.empty())
        return Scalar{};
    if (terms_.size() == 1 && terms_.begin()->first == BasisWord{})
        return terms_.begin()->second;
    return std::nullopt;
}

void Element::add_term(const BasisWord& w, const Scalar& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Element Element::operator-() const
{
    Element e = *this;
    for (auto& [w, c] : e.terms_)
        c = -c;
    return e;
}

Element& Element::operator+=(const Element& o)
{
    for (const auto& [w, c] : o.terms_)
        add_term(w, c);
    return *this;
}

Element& Element::operator-=(const Element& o)
{
    for (const auto& [w, c] : o.terms_)
        add_term(w, -c);
    return *this;
}

Element operator*(const Scalar& c, const Element& e)
{
    Element out;
    if (c.is_zero())
        return out;
    for (const auto& [w, x] : e.terms_)
        out.terms_.emplace_hint(out.terms_.end(), w, c * x);
    return out;
}

namespace {

void append_factor(std::ostringstream& os, const char* name, int e)
{
    if (e == 0)
        return;
    os << ' ' << name;
    if (e != 1)
        os << '^' << e;
}

} // namespace

std::string to_string(const Element& e, const CaseConfig& cfg)
{
    if (e.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : e.terms()) {
        if (!first)
            os << " + ";
        first = false;
        os << '(' << to_string(c, cfg) << ')';
        append_factor(os, "x", w.i);
        append_factor(os, "y", w.j);
        if (w.m > 0)
            append_factor(os, "d", w.m);
        else if (w.m < 0)
            append_factor(os, "u", -w.m);
    }
    return os.str();
}

} // namespace downup
