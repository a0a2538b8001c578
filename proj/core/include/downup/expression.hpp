#pragma once

#include "downup/derivation.hpp"
#include "downup/morphism.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace downup {

/*
  Expression language:

    expr   := ["+" | "-"] term (("+" | "-") term)*
    term   := factor (("*" | "/" | <juxtaposition>) factor)*
    factor := atom ["^" ["+" | "-"] integer]
    atom   := integer | name | "(" expr ")"

  Names are the generators d, u, x, y, z (z = x y), the parameters r, s, q
  and session bindings. Products are left-associative and noncommutative.
  The right operand of "/" must evaluate to a nonzero scalar. Negative powers
  of d and u are rejected while parsing.
*/
struct Expr {
    enum class Op { Integer, Name, Neg, Add, Sub, Mul, Div, Pow };

    Op op = Op::Integer;
    Integer value;        // Integer
    std::string name;     // Name
    long exponent = 0;    // Pow
    std::size_t pos = 0;  // 1-based column of the node's first token
    std::vector<std::unique_ptr<Expr>> args;
};

using ExprPtr = std::unique_ptr<Expr>;

// Throws SyntaxError, NonIntegerExponent or NegativePowerOfDU.
ExprPtr parse(std::string_view text);

// Evaluation context: the algebra of the active case plus named bindings.
class Session {
public:
    explicit Session(Case c = Case::one) : alg_(CaseConfig(c)) {}

    const Algebra& algebra() const { return alg_; }
    const CaseConfig& config() const { return alg_.config(); }

    Element eval(const Expr& e) const;
    Element eval(std::string_view text) const { return eval(*parse(text)); }

    // Throws InputError("ReservedName") for generator and parameter names.
    void bind(const std::string& name, Element value);
    const std::map<std::string, Element>& bindings() const { return bindings_; }

    std::string format(const Element& e) const { return to_string(e, config()); }
    std::string format(const Scalar& c) const { return to_string(c, config()); }

private:
    Algebra alg_;
    std::map<std::string, Element> bindings_;
};

bool is_reserved_name(std::string_view name);

// "d = <expr>" and "u = <expr>" lines; blank lines and '#' comments allowed.
GenImages parse_morphism_file(const Session& session, std::string_view text);

// "D(d) = <expr>" and "D(u) = <expr>" lines.
DerivSpec parse_derivation_file(const Session& session, std::string_view text);

std::string format_morphism(const Session& session, const GenImages& g);
std::string format_derivation(const Session& session, const DerivSpec& s);

} // namespace downup
