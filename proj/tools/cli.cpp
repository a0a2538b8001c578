#include "cli.hpp"

#include "downup/errors.hpp"
#include "downup/expression.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

namespace downup::cli {

namespace {

// A mathematical negative: printed on stdout, exit code 1.
struct Negative {
    std::string line;
};

std::string read_file(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw InputError("FileNotFound", "cannot open '" + path + "'");
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

void report_input_error(std::ostream& err, const Error& e)
{
    err << "error: " << e.kind() << ": " << e.what();
    if (auto* ie = dynamic_cast<const InputError*>(&e); ie && ie->position > 0)
        err << " (column " << ie->position << ")";
    err << '\n';
}

std::string format_classified(const Session& session, const ClassifiedEndo& m)
{
    std::ostringstream os;
    os << "kind = " << to_string(m.kind) << '\n'
       << "gamma1 = " << session.format(m.gamma1) << '\n'
       << "gamma2 = " << session.format(m.gamma2) << '\n'
       << "(i, j, k, l) = (" << m.i << ", " << m.j << ", " << m.k << ", " << m.l << ")\n";
    return os.str();
}

ClassifiedEndo classify_checked(const Session& session, const GenImages& g)
{
    if (!check_endo(session.algebra(), g, true))
        throw Negative{"NotClassifiable: images do not define an endomorphism of the localized "
                       "algebra"};
    return classify(session.algebra(), g);
}

DerivSpec load_derivation(const Session& session, const std::string& path, bool require_valid)
{
    DerivSpec s = parse_derivation_file(session, read_file(path));
    if (require_valid && !check_deriv(session.algebra(), s))
        throw Negative{"NotADerivation: the values on d and u violate the defining relations"};
    return s;
}

bool is_central(const Algebra& alg, const Element& e)
{
    for (const Element& g : {alg.d(), alg.u(), alg.x(), alg.y()})
        if (!alg.commutator(e, g).is_zero())
            return false;
    return true;
}

void repl(Session& session, Streams io)
{
    std::string line;
    for (;;) {
        if (io.interactive)
            io.out << "> " << std::flush;
        if (!std::getline(io.in, line))
            break;
        std::string_view text(line);
        while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
            text.remove_prefix(1);
        if (text.empty() || text.front() == '#')
            continue;
        if (text == "quit" || text == "exit")
            break;
        try {
            if (text.substr(0, 4) == "let ") {
                const auto eq = text.find('=');
                if (eq == std::string_view::npos)
                    throw SyntaxError("expected '=' in let", text.size() + 1);
                std::string name(text.substr(4, eq - 4));
                name.erase(0, name.find_first_not_of(" \t"));
                name.erase(name.find_last_not_of(" \t") + 1);
                if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
                    throw SyntaxError("invalid binding name", 5);
                for (char c : name)
                    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
                        throw SyntaxError("invalid binding name", 5);
                Element value = session.eval(text.substr(eq + 1));
                const std::string shown = session.format(value);
                session.bind(name, std::move(value));
                io.out << name << " = " << shown << '\n';
            } else {
                io.out << session.format(session.eval(text)) << '\n';
            }
        } catch (const Error& e) {
            report_input_error(io.err, e);
        }
    }
}

} // namespace

int run(const std::vector<std::string>& args, Streams io)
{
    CLI::App app{"Exact arithmetic, endomorphisms and derivations of the localized down-up "
                 "algebra A(r+s, -rs)"};
    app.require_subcommand(1);
    int case_no = 1;
    app.add_option("--case", case_no, "1: r, s independent; 2: r = q, s = 1/q")
        ->check(CLI::IsMember({1, 2}));

    std::string expr_text;
    std::string file;
    std::string other_file;
    bool unlocalized = false;
    int bound = 6;

    auto* eval_cmd = app.add_subcommand("eval", "Normalize an expression");
    eval_cmd->add_option("expr", expr_text)->required();

    auto* center_cmd = app.add_subcommand("center", "Test whether an element is central");
    center_cmd->add_option("expr", expr_text)->required();

    auto* endo = app.add_subcommand("endo", "Endomorphisms given by a morphism file");
    endo->require_subcommand(1);
    auto* endo_check = endo->add_subcommand("check", "Verify the defining relations");
    auto* endo_classify = endo->add_subcommand("classify", "Read off the parameter tuple");
    auto* endo_apply = endo->add_subcommand("apply", "Apply to an expression");
    auto* endo_compose = endo->add_subcommand("compose", "F after G");
    auto* endo_invert = endo->add_subcommand("invert", "Inverse automorphism");
    for (auto* c : {endo_check, endo_classify, endo_apply, endo_compose, endo_invert})
        c->add_option("--file", file, "morphism file")->required();
    endo_check->add_flag("--unlocalized", unlocalized,
                         "require images in the unlocalized algebra instead of invertible x, y");
    endo_apply->add_option("--expr", expr_text)->required();
    endo_compose->add_option("--with", other_file, "morphism file applied first")->required();

    auto* deriv = app.add_subcommand("deriv", "Derivations given by a derivation file");
    deriv->require_subcommand(1);
    auto* deriv_check = deriv->add_subcommand("check", "Verify the Leibniz conditions");
    auto* deriv_apply = deriv->add_subcommand("apply", "Apply to an expression");
    auto* deriv_decompose = deriv->add_subcommand("decompose", "Split as ad_t + mu1 D1 + mu2 D2");
    auto* deriv_hh1 = deriv->add_subcommand("hh1", "Coordinates of the cohomology class");
    for (auto* c : {deriv_check, deriv_apply, deriv_decompose, deriv_hh1})
        c->add_option("--file", file, "derivation file")->required();
    deriv_apply->add_option("--expr", expr_text)->required();

    auto* surj = app.add_subcommand("surjective",
                                    "Bounded surjectivity test on the unlocalized algebra");
    surj->add_option("--file", file, "morphism file")->required();
    surj->add_option("--bound", bound, "maximal word length")->check(CLI::NonNegativeNumber);

    app.add_subcommand("repl", "Read expressions and 'let name = expr' bindings from stdin");

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        io.out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        io.out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        io.err << "error: Usage: " << e.what() << '\n';
        return input_error;
    }

    Session session(case_no == 2 ? Case::two : Case::one);
    const Algebra& alg = session.algebra();
    std::ostream& out = io.out;

    try {
        if (eval_cmd->parsed()) {
            out << session.format(session.eval(expr_text)) << '\n';
            return ok;
        }
        if (center_cmd->parsed()) {
            const Element e = session.eval(expr_text);
            if (!is_central(alg, e)) {
                out << "central: false\n";
                return negative;
            }
            out << "central: true\n"
                << "z-form: " << to_string(*CenterElement::from_element(e), session.config())
                << '\n';
            return ok;
        }
        if (endo->parsed()) {
            const GenImages g = parse_morphism_file(session, read_file(file));
            if (endo_check->parsed()) {
                const bool good = check_endo(alg, g, !unlocalized);
                out << "check: " << (good ? "true" : "false") << '\n';
                return good ? ok : negative;
            }
            const ClassifiedEndo m = classify_checked(session, g);
            if (endo_classify->parsed()) {
                out << format_classified(session, m);
            } else if (endo_apply->parsed()) {
                out << session.format(apply(alg, m, session.eval(expr_text))) << '\n';
            } else if (endo_compose->parsed()) {
                const GenImages g2 = parse_morphism_file(session, read_file(other_file));
                const ClassifiedEndo m2 = classify_checked(session, g2);
                out << format_morphism(session, images(compose(alg, m, m2)));
            } else if (endo_invert->parsed()) {
                out << format_morphism(session, images(invert(alg, m)));
            }
            return ok;
        }
        if (deriv->parsed()) {
            if (deriv_check->parsed()) {
                const DerivSpec s = load_derivation(session, file, false);
                const bool good = check_deriv(alg, s);
                out << "check: " << (good ? "true" : "false") << '\n';
                return good ? ok : negative;
            }
            const DerivSpec s = load_derivation(session, file, true);
            if (deriv_apply->parsed()) {
                out << session.format(apply_deriv(alg, s, session.eval(expr_text))) << '\n';
            } else if (deriv_decompose->parsed()) {
                const Decomposition dec = decompose(alg, s);
                out << "t = " << session.format(dec.t) << '\n'
                    << "mu1 = " << to_string(dec.mu1, session.config()) << '\n'
                    << "mu2 = " << to_string(dec.mu2, session.config()) << '\n';
            } else if (deriv_hh1->parsed()) {
                const auto [mu1, mu2] = hh1_coords(alg, s);
                out << "mu1 = " << to_string(mu1, session.config())
                    << ", mu2 = " << to_string(mu2, session.config()) << '\n';
            }
            return ok;
        }
        if (surj->parsed()) {
            const GenImages g = parse_morphism_file(session, read_file(file));
            const SurjectivityVerdict v = check_surjective_unlocalized(alg, g, bound);
            out << to_string(v) << '\n';
            return v == SurjectivityVerdict::not_surjective_at_bound ? negative : ok;
        }
        repl(session, io);
        return ok;
    } catch (const Negative& n) {
        out << n.line << '\n';
        return negative;
    } catch (const NotAutomorphism& e) {
        out << e.kind() << ": " << e.what() << '\n';
        return negative;
    } catch (const NotClassifiable& e) {
        out << e.kind() << ": " << e.what() << '\n';
        return negative;
    } catch (const NotAnEndomorphism& e) {
        out << e.kind() << ": " << e.what() << '\n';
        return negative;
    } catch (const NotADerivation& e) {
        out << e.kind() << ": " << e.what() << '\n';
        return negative;
    } catch (const Error& e) {
        report_input_error(io.err, e);
        return input_error;
    }
}

} // namespace downup::cli
