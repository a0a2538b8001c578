#include "downup/expression.hpp"

#include "downup/errors.hpp"

#include <cctype>
#include <sstream>

namespace downup {

namespace {

struct Token {
    enum class Kind { Integer, Decimal, Name, Symbol, End };
    Kind kind = Kind::End;
    std::string text;
    std::size_t pos = 0;
};

std::vector<Token> tokenize(std::string_view src)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const unsigned char c = src[i];
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(c)) {
            while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i])))
                ++i;
            Token::Kind kind = Token::Kind::Integer;
            if (i < src.size() && src[i] == '.') {
                kind = Token::Kind::Decimal;
                ++i;
                while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i])))
                    ++i;
            }
            out.push_back({kind, std::string(src.substr(start, i - start)), start + 1});
            continue;
        }
        if (std::isalpha(c) || c == '_') {
            while (i < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
                ++i;
            out.push_back({Token::Kind::Name, std::string(src.substr(start, i - start)), start + 1});
            continue;
        }
        if (std::string_view("+-*/^()").find(static_cast<char>(c)) != std::string_view::npos) {
            out.push_back({Token::Kind::Symbol, std::string(1, static_cast<char>(c)), start + 1});
            ++i;
            continue;
        }
        throw SyntaxError(std::string("unexpected character '") + static_cast<char>(c) + "'",
                          start + 1);
    }
    out.push_back({Token::Kind::End, "", src.size() + 1});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

    ExprPtr parse_all()
    {
        ExprPtr e = expr();
        if (peek().kind != Token::Kind::End)
            throw SyntaxError("unexpected '" + peek().text + "'", peek().pos);
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    bool at_symbol(char c) const
    {
        return peek().kind == Token::Kind::Symbol && peek().text[0] == c;
    }

    bool starts_atom() const
    {
        const Token& t = peek();
        return t.kind == Token::Kind::Integer || t.kind == Token::Kind::Decimal ||
               t.kind == Token::Kind::Name || (t.kind == Token::Kind::Symbol && t.text == "(");
    }

    static ExprPtr node(Expr::Op op, std::size_t pos)
    {
        auto e = std::make_unique<Expr>();
        e->op = op;
        e->pos = pos;
        return e;
    }

    static ExprPtr binary(Expr::Op op, ExprPtr lhs, ExprPtr rhs)
    {
        auto e = node(op, lhs->pos);
        e->args.push_back(std::move(lhs));
        e->args.push_back(std::move(rhs));
        return e;
    }

    ExprPtr expr()
    {
        ExprPtr lhs;
        if (at_symbol('+') || at_symbol('-')) {
            const Token& sign = next();
            ExprPtr t = term();
            if (sign.text == "-") {
                lhs = node(Expr::Op::Neg, sign.pos);
                lhs->args.push_back(std::move(t));
            } else {
                lhs = std::move(t);
            }
        } else {
            lhs = term();
        }
        while (at_symbol('+') || at_symbol('-')) {
            const Expr::Op op = next().text == "+" ? Expr::Op::Add : Expr::Op::Sub;
            lhs = binary(op, std::move(lhs), term());
        }
        return lhs;
    }

    ExprPtr term()
    {
        ExprPtr lhs = factor();
        for (;;) {
            if (at_symbol('*')) {
                next();
                lhs = binary(Expr::Op::Mul, std::move(lhs), factor());
            } else if (at_symbol('/')) {
                next();
                lhs = binary(Expr::Op::Div, std::move(lhs), factor());
            } else if (starts_atom()) {
                lhs = binary(Expr::Op::Mul, std::move(lhs), factor());
            } else {
                return lhs;
            }
        }
    }

    ExprPtr factor()
    {
        ExprPtr base = atom();
        if (!at_symbol('^'))
            return base;
        const std::size_t caret = next().pos;
        bool negative = false;
        if (at_symbol('+') || at_symbol('-'))
            negative = next().text == "-";
        const Token& t = peek();
        if (t.kind != Token::Kind::Integer) {
            if (t.kind == Token::Kind::End)
                throw SyntaxError("missing exponent", t.pos);
            throw NonIntegerExponent(t.pos);
        }
        next();
        long n = 0;
        try {
            n = std::stol(t.text);
        } catch (const std::out_of_range&) {
            throw SyntaxError("exponent out of range", t.pos);
        }
        if (negative)
            n = -n;
        if (n < 0 && base->op == Expr::Op::Name && (base->name == "d" || base->name == "u"))
            throw NegativePowerOfDU(base->name[0], caret);
        auto e = node(Expr::Op::Pow, base->pos);
        e->exponent = n;
        e->args.push_back(std::move(base));
        return e;
    }

    ExprPtr atom()
    {
        const Token& t = peek();
        switch (t.kind) {
        case Token::Kind::Integer: {
            next();
            auto e = node(Expr::Op::Integer, t.pos);
            e->value = Integer(t.text);
            return e;
        }
        case Token::Kind::Decimal:
            throw SyntaxError("decimal literals are not supported, write a fraction", t.pos);
        case Token::Kind::Name: {
            next();
            auto e = node(Expr::Op::Name, t.pos);
            e->name = t.text;
            return e;
        }
        case Token::Kind::Symbol:
            if (t.text == "(") {
                next();
                ExprPtr inside = expr();
                if (!at_symbol(')'))
                    throw SyntaxError("expected ')'", peek().pos);
                next();
                inside->pos = t.pos;
                return inside;
            }
            throw SyntaxError("unexpected '" + t.text + "'", t.pos);
        case Token::Kind::End:
            break;
        }
        throw SyntaxError("unexpected end of input", t.pos);
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

constexpr std::string_view reserved[] = {"d", "u", "x", "y", "z", "r", "s", "q"};

} // namespace

ExprPtr parse(std::string_view text)
{
    return Parser(text).parse_all();
}

bool is_reserved_name(std::string_view name)
{
    for (auto r : reserved)
        if (r == name)
            return true;
    return false;
}

void Session::bind(const std::string& name, Element value)
{
    if (is_reserved_name(name))
        throw InputError("ReservedName", "'" + name + "' is a generator or parameter name");
    bindings_[name] = std::move(value);
}

Element Session::eval(const Expr& e) const
{
    switch (e.op) {
    case Expr::Op::Integer:
        return Element(Scalar(e.value));
    case Expr::Op::Name: {
        const std::string& n = e.name;
        if (n == "d")
            return alg_.d();
        if (n == "u")
            return alg_.u();
        if (n == "x")
            return alg_.x();
        if (n == "y")
            return alg_.y();
        if (n == "z")
            return alg_.z();
        if (n == "r")
            return Element(config().r());
        if (n == "s")
            return Element(config().s());
        if (n == "q") {
            if (config().kind() != Case::two)
                throw InputError("UnknownParameter", "q is only defined in case 2", e.pos);
            return Element(config().q());
        }
        auto it = bindings_.find(n);
        if (it == bindings_.end())
            throw SyntaxError("unknown name '" + n + "'", e.pos);
        return it->second;
    }
    case Expr::Op::Neg:
        return -eval(*e.args[0]);
    case Expr::Op::Add:
        return eval(*e.args[0]) + eval(*e.args[1]);
    case Expr::Op::Sub:
        return eval(*e.args[0]) - eval(*e.args[1]);
    case Expr::Op::Mul:
        return alg_.mul(eval(*e.args[0]), eval(*e.args[1]));
    case Expr::Op::Div: {
        const Element lhs = eval(*e.args[0]);
        const Element rhs = eval(*e.args[1]);
        auto c = rhs.as_scalar();
        if (!c)
            throw InputError("DivisionByNonScalar", "divisor must be a scalar", e.args[1]->pos);
        if (c->is_zero())
            throw DivisionByZero();
        return c->inverse() * lhs;
    }
    case Expr::Op::Pow: {
        const Element base = eval(*e.args[0]);
        if (e.exponent < 0 && base.is_zero())
            throw DivisionByZero();
        if (e.exponent < 0 && !alg_.is_invertible(base))
            throw InputError("NotInvertible", "negative power of a non-invertible element",
                             e.args[0]->pos);
        return alg_.pow(base, static_cast<int>(e.exponent));
    }
    }
    throw InternalError("unknown expression node");
}

namespace {

struct Assignment {
    std::string lhs;
    std::string rhs;
    std::size_t line;
};

std::string trim(std::string_view s)
{
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

std::vector<Assignment> read_assignments(std::string_view text)
{
    std::vector<Assignment> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        const std::string t = trim(line);
        if (t.empty())
            continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw InputError("MalformedFile", "line " + std::to_string(no) + ": expected '='");
        std::string lhs = trim(std::string_view(t).substr(0, eq));
        std::string compact;
        for (char c : lhs)
            if (!std::isspace(static_cast<unsigned char>(c)))
                compact += c;
        out.push_back({compact, t.substr(eq + 1), no});
    }
    return out;
}

template <class Fn>
void fill_pair(const Session& session, std::string_view text, const std::string& first,
               const std::string& second, Element& a, Element& b, Fn&& on_missing)
{
    bool have_a = false;
    bool have_b = false;
    for (const auto& as : read_assignments(text)) {
        bool* have = nullptr;
        Element* target = nullptr;
        if (as.lhs == first) {
            have = &have_a;
            target = &a;
        } else if (as.lhs == second) {
            have = &have_b;
            target = &b;
        } else {
            throw InputError("MalformedFile", "line " + std::to_string(as.line) +
                                                  ": unexpected left-hand side '" + as.lhs + "'");
        }
        if (*have)
            throw InputError("MalformedFile", "line " + std::to_string(as.line) + ": duplicate '" +
                                                  as.lhs + "'");
        try {
            *target = session.eval(as.rhs);
        } catch (InputError& ex) {
            throw InputError(ex.kind(), "line " + std::to_string(as.line) + ": " + ex.what(),
                             ex.position);
        }
        *have = true;
    }
    if (!have_a)
        on_missing(first);
    if (!have_b)
        on_missing(second);
}

} // namespace

GenImages parse_morphism_file(const Session& session, std::string_view text)
{
    GenImages g;
    fill_pair(session, text, "d", "u", g.d_img, g.u_img, [](const std::string& name) {
        throw InputError("MalformedFile", "missing line '" + name + " = ...'");
    });
    return g;
}

DerivSpec parse_derivation_file(const Session& session, std::string_view text)
{
    DerivSpec s;
    fill_pair(session, text, "D(d)", "D(u)", s.dd, s.du, [](const std::string& name) {
        throw InputError("MalformedFile", "missing line '" + name + " = ...'");
    });
    return s;
}

std::string format_morphism(const Session& session, const GenImages& g)
{
    return "d = " + session.format(g.d_img) + "\nu = " + session.format(g.u_img) + "\n";
}

std::string format_derivation(const Session& session, const DerivSpec& s)
{
    return "D(d) = " + session.format(s.dd) + "\nD(u) = " + session.format(s.du) + "\n";
}

} // namespace downup
