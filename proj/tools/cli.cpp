#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>

#include "padicq/congruence.hpp"
#include "padicq/errors.hpp"
#include "padicq/multinomial.hpp"
#include "padicq/padic.hpp"
#include "padicq/representation.hpp"
#include "padicq/roots.hpp"

namespace padicq::cli {

using nlohmann::ordered_json;

namespace {

constexpr int kDefaultPrecision = 16;
constexpr int kMaxPrecision = 10000;

struct Options {
    std::string format = "plain";
    std::uint32_t p = 0;
    std::uint64_t q = 0;
    std::string value;
    int precision = kDefaultPrecision;
    std::uint32_t p_max = 41;
    bool with_epsilon = false;
    // congr
    std::int64_t m = 0, n = 0, a = 0, b = 0, r = 0;
    // expand
    std::vector<std::uint32_t> digits;
    unsigned k = 1;
};

void render(std::ostringstream& out, const std::string& key, const ordered_json& v) {
    if (v.is_object()) {
        for (const auto& [name, child] : v.items())
            render(out, key.empty() ? name : key + "." + name, child);
    } else if (v.is_array()) {
        const bool numeric = std::all_of(v.begin(), v.end(), [](const auto& e) {
            return e.is_number();
        });
        if (numeric) {
            out << key << ":";
            for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : " ") << v[i].dump();
            out << '\n';
        } else {
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (v[i].is_object() || v[i].is_array())
                    render(out, key + "[" + std::to_string(i) + "]", v[i]);
                else
                    render(out, key, v[i]);
            }
        }
    } else if (v.is_null()) {
        out << key << ": none\n";
    } else if (v.is_string()) {
        out << key << ": " << v.get<std::string>() << '\n';
    } else {
        out << key << ": " << v.dump() << '\n';
    }
}

ordered_json verdict_json(const Verdict& v) {
    ordered_json j;
    j["solvable"] = v.solvable;
    j["case"] = std::string(to_string(v.case_used));
    j["failed"] = v.failed ? ordered_json(std::string(to_string(v.failed->condition)))
                           : ordered_json(nullptr);
    j["chain_step"] = v.failed && v.failed->condition == FailedCondition::chain_step
                          ? ordered_json(v.failed->chain_step)
                          : ordered_json(nullptr);
    j["details"] = v.details;
    return j;
}

PAdic read_value(const Options& o, int precision) {
    return parse_value(o.value, o.p, precision);
}

void require_p_q(const Options& o) {
    if (!is_prime(o.p)) throw InputError("--p must be prime, got " + std::to_string(o.p));
    if (o.q < 2) throw InputError("--q must be at least 2");
}

ordered_json header(const char* command, const Options& o) {
    ordered_json j;
    j["command"] = command;
    j["p"] = o.p;
    j["q"] = o.q;
    return j;
}

ordered_json cmd_check(const Options& o) {
    require_p_q(o);
    const PAdic a = read_value(o, std::max(o.precision, digits_needed(o.p, o.q)));
    ordered_json j = header("check", o);
    j["value"] = to_string(a);
    j["verdict"] = verdict_json(decide(a, o.q));
    return j;
}

ordered_json cmd_root(const Options& o) {
    require_p_q(o);
    const int slack = int(valuation(o.q, o.p));
    const PAdic a = read_value(o, std::max(o.precision + slack, digits_needed(o.p, o.q)));
    const Solution sol = solve(a, o.q, o.precision);

    ordered_json j = header("root", o);
    j["value"] = to_string(a);
    j["precision"] = o.precision;
    j["verdict"] = verdict_json(sol.verdict);
    if (!sol.roots) {
        ordered_json empty;
        empty["expected_count"] = nullptr;
        empty["count"] = 0;
        empty["precision"] = o.precision;
        empty["roots"] = ordered_json::array();
        j["root_set"] = empty;
        return j;
    }
    const RootSet& rs = *sol.roots;
    const std::int64_t check_to = a.valuation() + rs.precision;
    for (const auto& r : rs.roots) {
        if (!eq_mod(pow_nat(r, o.q), a, check_to))
            throw InternalError("root " + to_string(r) + " fails r^q = a mod p^" +
                                std::to_string(check_to));
    }
    ordered_json set;
    set["expected_count"] =
        rs.expected_count ? ordered_json(*rs.expected_count) : ordered_json(nullptr);
    set["count"] = rs.roots.size();
    set["precision"] = rs.precision;
    set["roots"] = ordered_json::array();
    for (const auto& r : rs.roots) set["roots"].push_back(to_string(r));
    j["root_set"] = set;
    j["self_check"] = "ok: r^q = a mod p^" + std::to_string(check_to) + " for every root";
    return j;
}

ordered_json cmd_classify(const Options& o) {
    require_p_q(o);
    const PAdic x = read_value(o, o.precision);
    Decomposition d = [&] {
        if (o.q == o.p) return classify_p(x);
        if (o.q > 0 && o.q < o.p && is_prime(o.q)) return classify_coprime(x, std::uint32_t(o.q));
        throw InputError("classify needs q = p or a prime q < p");
    }();
    const PAdic back = d.recompose();
    const std::int64_t check_to = std::min(back.absolute_precision(), x.absolute_precision());
    if (!eq_mod(back, x, check_to))
        throw InternalError("recomposition differs from the input mod p^" +
                            std::to_string(check_to));

    ordered_json j = header("classify", o);
    j["value"] = to_string(x);
    ordered_json dec;
    dec["form"] = std::string(to_string(d.form));
    dec["epsilon"] = to_string(d.epsilon);
    dec["delta_exponent"] = d.delta_exponent;
    dec["delta"] = std::to_string(o.p) + "^" + std::to_string(d.delta_exponent);
    dec["y"] = to_string(d.y);
    dec["eta"] = d.eta ? ordered_json(to_string(*d.eta)) : ordered_json(nullptr);
    dec["eta_power"] = d.eta ? ordered_json(d.eta_power) : ordered_json(nullptr);
    j["decomposition"] = dec;
    j["recomposition_check"] = "ok: epsilon * delta * y^q = x mod p^" + std::to_string(check_to);
    return j;
}

ordered_json cmd_table(const Options& o) {
    ordered_json j;
    j["command"] = "table";
    j["p_max"] = o.p_max;
    j["rows"] = ordered_json::array();
    for (const auto& row : j_no_solution_table(o.p_max)) {
        ordered_json r;
        r["p"] = row.p;
        r["j"] = row.j_values;
        r["restricted_epsilon"] = restricted_epsilon_set(row.p);
        j["rows"].push_back(r);
    }
    return j;
}

std::string table_plain(const ordered_json& doc, bool with_epsilon) {
    std::vector<JTableRow> rows;
    for (const auto& r : doc["rows"])
        rows.push_back({r["p"].get<std::uint32_t>(), r["j"].get<std::vector<std::uint32_t>>()});
    if (!with_epsilon) return format_j_table(rows);
    std::ostringstream out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out << format_j_table({rows[i]});
        out << "  eps:";
        const auto eps = doc["rows"][i]["restricted_epsilon"];
        for (std::size_t k = 0; k < eps.size(); ++k) out << (k ? ", " : " ") << eps[k].dump();
        out << '\n';
    }
    return out.str();
}

ordered_json solution_json(const char* command, const CongruenceSolution& s) {
    ordered_json j;
    j["command"] = command;
    j["modulus"] = s.modulus;
    j["count"] = s.count();
    j["solutions"] = s.representatives;
    return j;
}

std::uint64_t positive(std::int64_t v, const char* flag) {
    if (v < 1) throw InputError(std::string(flag) + " must be positive");
    return std::uint64_t(v);
}

ordered_json cmd_expand(const Options& o) {
    if (o.q < 1) throw InputError("--q must be positive");
    if (o.k < 1) throw InputError("--k must be at least 1");
    const unsigned q = unsigned(o.q);
    const auto terms = nk_terms(q, o.k);
    ordered_json j;
    j["command"] = "expand";
    j["q"] = q;
    j["k"] = o.k;
    j["digits"] = o.digits;
    j["terms"] = ordered_json::array();
    for (const auto& t : terms) {
        ordered_json tj;
        tj["exponents"] = t.exponents;
        tj["coefficient"] = t.coefficient.get_str();
        std::string mono = t.coefficient.get_str();
        for (std::size_t i = 0; i < t.exponents.size(); ++i) {
            if (t.exponents[i] == 0) continue;
            mono += "*x" + std::to_string(i);
            if (t.exponents[i] > 1) mono += "^" + std::to_string(t.exponents[i]);
        }
        tj["monomial"] = mono;
        tj["value"] = evaluate_nk(std::span(&t, 1), o.digits).get_str();
        j["terms"].push_back(tj);
    }
    const mpz_class nk = evaluate_nk(terms, o.digits);
    // x_k reads as 0 past the supplied digits
    const unsigned long xk = o.k < o.digits.size() ? o.digits[o.k] : 0;
    mpz_class linear;
    mpz_ui_pow_ui(linear.get_mpz_t(), o.digits.empty() ? 0 : o.digits[0], q - 1);
    linear *= q;
    linear *= xk;
    j["nk"] = nk.get_str();
    j["linear_term"] = linear.get_str();
    j["coefficient_of_p_k"] = mpz_class(linear + nk).get_str();
    if (o.p != 0) {
        if (!is_prime(o.p)) throw InputError("--p must be prime");
        j["p"] = o.p;
        j["p_divides_nk"] = mpz_divisible_ui_p(nk.get_mpz_t(), o.p) != 0;
        j["p_divides_k"] = o.k % o.p == 0;
    } else {
        j["p"] = nullptr;
    }
    return j;
}

}  // namespace

std::string render_plain(const ordered_json& doc) {
    std::ostringstream out;
    render(out, "", doc);
    return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Solvability and roots of x^q = a over the p-adic numbers", "padicq"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"plain", "structured"}));

    auto add_value_options = [&](CLI::App* sub, bool needs_q) {
        sub->add_option("--p", o.p, "Prime")->required();
        auto* q = sub->add_option("--q", o.q, "Exponent");
        if (needs_q) q->required();
        sub->add_option("--val", o.value, "Value: n/d, n, or g;d0,d1,...")->required();
        sub->add_option("--precision", o.precision, "Digits of precision")
            ->check(CLI::Range(1, kMaxPrecision));
    };

    auto* check = app.add_subcommand("check", "Decide solvability of x^q = a");
    add_value_options(check, true);
    auto* root = app.add_subcommand("root", "Compute every root of x^q = a");
    add_value_options(root, true);
    auto* classify = app.add_subcommand("classify", "Decompose x = eps * delta * y^q");
    add_value_options(classify, true);

    auto* table = app.add_subcommand("table", "j with no solution of i^p = i + jp mod p^2");
    table->add_option("--p-max", o.p_max, "Largest prime")
        ->check(CLI::Range(3u, kMaxTablePrime));
    table->add_flag("--epsilon", o.with_epsilon, "Also print the derived epsilon sets");

    auto* congr = app.add_subcommand("congr", "Congruence tools");
    congr->require_subcommand(1);
    auto* pow_residue = congr->add_subcommand("pow-residue", "Solve x^n = a mod m");
    pow_residue->add_option("--m", o.m)->required();
    pow_residue->add_option("--n", o.n)->required();
    pow_residue->add_option("--a", o.a)->required();
    auto* linear = congr->add_subcommand("linear", "Solve a x = b mod n");
    linear->add_option("--a", o.a)->required();
    linear->add_option("--b", o.b)->required();
    linear->add_option("--n", o.n)->required();
    auto* index_cmd = congr->add_subcommand("index", "Discrete logarithm of a to base r mod m");
    index_cmd->add_option("--r", o.r)->required();
    index_cmd->add_option("--a", o.a)->required();
    index_cmd->add_option("--m", o.m)->required();
    auto* primroot = congr->add_subcommand("primroot", "Smallest primitive root mod m");
    primroot->add_option("--m", o.m)->required();
    auto* phi = congr->add_subcommand("phi", "Euler's totient");
    phi->add_option("--n", o.n)->required();

    auto* expand = app.add_subcommand("expand", "Terms of N_k in (sum x_i p^i)^q");
    expand->add_option("--p", o.p, "Prime used for the divisibility report");
    expand->add_option("--q", o.q)->required();
    expand->add_option("--digits", o.digits)->required()->delimiter(',');
    expand->add_option("--k", o.k)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    try {
        ordered_json doc;
        if (check->parsed()) {
            doc = cmd_check(o);
        } else if (root->parsed()) {
            doc = cmd_root(o);
        } else if (classify->parsed()) {
            doc = cmd_classify(o);
        } else if (table->parsed()) {
            doc = cmd_table(o);
            if (o.format == "plain") {
                out << table_plain(doc, o.with_epsilon);
                return kOk;
            }
        } else if (pow_residue->parsed()) {
            doc = solution_json("congr pow-residue",
                                power_residue_solve(positive(o.n, "--n"), o.a, positive(o.m, "--m")));
        } else if (linear->parsed()) {
            doc = solution_json("congr linear", solve_linear(o.a, o.b, o.n));
        } else if (index_cmd->parsed()) {
            const IndexValue v = index(o.r, o.a, positive(o.m, "--m"));
            doc["command"] = "congr index";
            doc["base_r"] = v.base_r;
            doc["value"] = v.value;
            doc["modulus_phi"] = v.modulus_phi;
        } else if (primroot->parsed()) {
            const std::uint64_t m = positive(o.m, "--m");
            if (m < 2) throw InputError("--m must be at least 2");
            const auto g = find_primitive_root(m);
            doc["command"] = "congr primroot";
            doc["m"] = m;
            doc["primitive_root"] = g ? ordered_json(*g) : ordered_json(nullptr);
        } else if (phi->parsed()) {
            const std::uint64_t n = positive(o.n, "--n");
            doc["command"] = "congr phi";
            doc["n"] = n;
            doc["phi"] = euler_phi(n);
        } else if (expand->parsed()) {
            doc = cmd_expand(o);
        }
        out << (o.format == "structured" ? doc.dump(2) + "\n" : render_plain(doc));
        return kOk;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    } catch (const NotSolvableError& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternalError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

}  // namespace padicq::cli
