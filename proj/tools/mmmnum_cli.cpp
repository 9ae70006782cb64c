// mmmnum command-line tool: exact Newton polynomials, MMM characteristic
// number expansions over Pontryagin/Chern numbers, identity verification,
// and Atiyah-Kodaira branched-cover reports. All output is deterministic
// and byte-stable; diagnostics go to stderr.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <mmmnum/mmmnum.hpp>

namespace {

using namespace mmmnum;

enum class Format { text, json, csv };

const std::map<std::string, Format> kFormatNames{
    {"text", Format::text}, {"json", Format::json}, {"csv", Format::csv}};

std::string partition_monomial(const Partition& j, char stem) {
    std::string s;
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (j[i] == 0) continue;
        if (!s.empty()) s += '*';
        s += stem;
        s += std::to_string(i + 1);
        if (j[i] > 1) s += '^' + std::to_string(j[i]);
    }
    return s.empty() ? "1" : s;
}

// Coefficient table over partitions(degree), emitted in canonical
// partition order in every format.
void print_coefficients(std::ostream& out, unsigned degree,
                        const std::map<Partition, Int>& terms, char stem,
                        Format format) {
    const std::vector<Partition> order = partitions(degree);
    switch (format) {
        case Format::text:
            for (const Partition& j : order)
                out << partition_monomial(j, stem) << ": " << terms.at(j) << "\n";
            break;
        case Format::json: {
            out << '{';
            bool first = true;
            for (const Partition& j : order) {
                if (!first) out << ',';
                first = false;
                out << '"' << partition_key(j) << "\":" << terms.at(j);
            }
            out << "}\n";
            break;
        }
        case Format::csv:
            out << "partition,coefficient\n";
            for (const Partition& j : order)
                out << '"' << partition_key(j) << "\"," << terms.at(j) << "\n";
            break;
    }
}

Int json_integer(const nlohmann::json& v, const std::string& key) {
    if (v.is_number_integer()) return Int(v.get<std::int64_t>());
    if (v.is_number_unsigned()) return Int(v.get<std::uint64_t>());
    if (v.is_string()) {
        const std::string& s = v.get_ref<const std::string&>();
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (s.size() == start ||
            s.find_first_not_of("0123456789", start) != std::string::npos)
            throw std::invalid_argument("value for " + key + " is not an integer: " + s);
        return Int(s);
    }
    throw std::invalid_argument(
        "value for " + key +
        " must be a JSON integer (or an integer string beyond native range)");
}

// Strict reader for the evaluate input: a JSON object whose keys are exactly
// the partition keys of `degree` and whose values are integers.
std::map<Partition, Int> read_number_vector(std::istream& in, unsigned degree) {
    nlohmann::json doc = nlohmann::json::parse(in);
    if (!doc.is_object())
        throw std::invalid_argument("numbers file must be a JSON object");
    std::map<Partition, Int> values;
    for (const auto& [key, val] : doc.items()) {
        Partition j = parse_partition_key(key);
        if (!values.emplace(j, json_integer(val, key)).second)
            throw std::invalid_argument("duplicate partition key " + key);
    }
    for (const Partition& j : partitions(degree)) {
        if (!values.count(j))
            throw std::invalid_argument("missing partition key " + partition_key(j));
    }
    if (values.size() != partitions(degree).size()) {
        for (const auto& [j, v] : values)
            if (partition_weight(j) != degree || j.size() != degree)
                throw std::invalid_argument("unexpected partition key " +
                                            partition_key(j));
    }
    return values;
}

int run_newton(unsigned n, Format format) {
    const NewtonPoly& f = newton_poly(n);
    if (format == Format::text) {
        std::cout << to_string(f.poly) << "\n";
    } else {
        print_coefficients(std::cout, n, newton_coefficients(n), 'x', format);
    }
    return 0;
}

int run_expand(Flavor flavor, unsigned n, Format format, bool self_check) {
    CharNumberExpansion exp = (flavor == Flavor::pontryagin)
                                  ? expand_odd_mmm(n)
                                  : expand_complex_mmm(n);
    if (exp.degree > 30)
        std::cerr << "warning: expansion degree " << exp.degree
                  << " exceeds 30; this may take a while and produce large output\n";
    if (self_check) {
        std::ostringstream buf;
        print_coefficients(buf, exp.degree, exp.terms, flavor_stem(flavor),
                           Format::json);
        nlohmann::json doc = nlohmann::json::parse(buf.str());
        std::map<Partition, Int> parsed;
        for (const auto& [key, val] : doc.items())
            parsed.emplace(parse_partition_key(key), json_integer(val, key));
        if (parsed != newton_coefficients(exp.degree)) {
            std::cerr << "self-check FAILED: serialized coefficients disagree "
                         "with a fresh derivation\n";
            return 1;
        }
        std::cerr << "self-check ok\n";
    }
    print_coefficients(std::cout, exp.degree, exp.terms, flavor_stem(flavor),
                       format);
    return 0;
}

int run_evaluate(Flavor flavor, unsigned n, const std::string& path,
                 Format format) {
    CharNumberExpansion exp = (flavor == Flavor::pontryagin)
                                  ? expand_odd_mmm(n)
                                  : expand_complex_mmm(n);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open numbers file: " + path);
    CharNumberVector v{flavor, exp.degree, read_number_vector(in, exp.degree)};
    Int value = evaluate(exp, v);

    // The genus obstruction applies to the odd classes e_{2n-1}; only the
    // pontryagin flavor carries a bound here.
    std::optional<Int> bound;
    if (flavor == Flavor::pontryagin) bound = min_genus_bound(n, value);

    switch (format) {
        case Format::text:
            std::cout << value << "\n";
            if (bound) std::cout << "min fiber genus > " << 2 * n << "\n";
            break;
        case Format::json:
            std::cout << "{\"value\":" << value << ",\"min_fiber_genus\":"
                      << (bound ? bound->str() : "null") << "}\n";
            break;
        case Format::csv:
            std::cout << "value," << value << "\n";
            if (bound) std::cout << "min_fiber_genus," << *bound << "\n";
            break;
    }
    return 0;
}

int run_ak(unsigned genus, unsigned sheets, Format format, bool check) {
    AKParams params{genus, sheets};
    AKReport r = ak_report(params);
    const std::vector<std::pair<const char*, const Int*>> fields{
        {"cover_degree", &r.cover_degree},
        {"genus_hat", &r.genus_hat},
        {"branch_points_on_S", &r.branch_points_on_S},
        {"branch_points_on_hat", &r.branch_points_on_hat},
        {"fiber_genus_over_hat", &r.fiber_genus_over_hat},
        {"fiber_genus_over_S", &r.fiber_genus_over_S},
        {"delta_self_intersection", &r.delta_self_intersection},
        {"signature", &r.signature},
        {"e1_number", &r.e1_number}};
    switch (format) {
        case Format::text:
            for (const auto& [name, value] : fields)
                std::cout << name << ": " << *value << "\n";
            std::cout << "genus_bound: "
                      << (r.genus_bound ? r.genus_bound->str() : "none") << "\n";
            std::cout << "# signature from the cyclic branched-cover formula "
                         "sigma = -((k^2-1)/(3k)) * [Delta]^2\n";
            break;
        case Format::json:
            std::cout << to_json(r) << "\n";
            break;
        case Format::csv:
            std::cout << "field,value\n";
            for (const auto& [name, value] : fields)
                std::cout << name << ',' << *value << "\n";
            std::cout << "genus_bound,"
                      << (r.genus_bound ? r.genus_bound->str() : "") << "\n";
            break;
    }
    if (check) {
        bool ok = ak_consistency_check(params);
        if (format == Format::text)
            std::cout << "consistency: " << (ok ? "PASS" : "FAIL") << "\n";
        if (!ok) return 1;
    }
    return 0;
}

int run_verify(unsigned max_n, const std::string& which) {
    struct Check {
        std::string label;
        std::function<bool(unsigned)> run;
    };
    std::vector<Check> checks;
    auto want = [&](const std::string& name) {
        return which == "all" || which == name;
    };
    if (want("shift"))
        checks.push_back({"shift", [](unsigned n) { return check_shift_property(n); }});
    if (want("homog"))
        checks.push_back(
            {"homog", [](unsigned n) { return check_homogenized_identity(n); }});
    if (want("symmetric"))
        checks.push_back(
            {"symmetric", [](unsigned n) { return verify_newton_identity(n, n); }});
    if (want("fiber")) {
        checks.push_back({"fiber[pontryagin]", [](unsigned n) {
                              return verify_fiber_substitution(
                                  make_fiber_model(Flavor::pontryagin, n));
                          }});
        checks.push_back({"fiber[chern]", [](unsigned n) {
                              return verify_fiber_substitution(
                                  make_fiber_model(Flavor::chern, n));
                          }});
    }
    if (want("unique"))
        checks.push_back(
            {"unique", [](unsigned n) { return uniqueness_kernel_check(n); }});
    if (checks.empty()) {
        std::cerr << "error: unknown check selection '" << which << "'\n";
        return 2;
    }
    bool all_ok = true;
    for (const Check& check : checks) {
        for (unsigned n = 1; n <= max_n; ++n) {
            bool ok = check.run(n);
            all_ok = all_ok && ok;
            std::cout << check.label << " n=" << n << ": "
                      << (ok ? "PASS" : "FAIL") << "\n";
        }
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact characteristic-number calculator for surface bundles"};
    app.require_subcommand(1);

    auto add_format = [](CLI::App* cmd, Format& fmt) {
        cmd->add_option("--format", fmt, "output format")
            ->transform(CLI::CheckedTransformer(kFormatNames, CLI::ignore_case))
            ->default_val("text");
    };

    // newton
    unsigned newton_n = 0;
    Format newton_fmt = Format::text;
    CLI::App* newton_cmd = app.add_subcommand("newton", "print the Newton polynomial f_n");
    newton_cmd->add_option("n", newton_n, "index n >= 1")
        ->required()
        ->check(CLI::PositiveNumber);
    add_format(newton_cmd, newton_fmt);

    // verify
    unsigned verify_max_n = 6;
    std::string verify_which = "all";
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "verify polynomial identities for 1 <= n <= max-n");
    verify_cmd->add_option("--max-n", verify_max_n, "largest n to check")
        ->check(CLI::PositiveNumber);
    verify_cmd->add_option("--which", verify_which,
                           "shift|homog|symmetric|fiber|unique|all")
        ->check(CLI::IsMember({"shift", "homog", "symmetric", "fiber", "unique", "all"}));

    // expand
    std::string expand_flavor;
    unsigned expand_n = 0;
    Format expand_fmt = Format::text;
    bool expand_self_check = false;
    CLI::App* expand_cmd = app.add_subcommand(
        "expand", "expand an MMM characteristic number over Pontryagin/Chern numbers");
    expand_cmd->add_option("flavor", expand_flavor, "pontryagin|chern")
        ->required()
        ->check(CLI::IsMember({"pontryagin", "chern"}));
    expand_cmd->add_option("n", expand_n, "index n >= 1 (expands e_{2n-1} or e_n)")
        ->required()
        ->check(CLI::PositiveNumber);
    add_format(expand_cmd, expand_fmt);
    expand_cmd->add_flag("--self-check", expand_self_check,
                         "re-parse the JSON serialization and compare against a "
                         "fresh derivation before printing");

    // evaluate
    std::string eval_flavor;
    unsigned eval_n = 0;
    std::string eval_file;
    Format eval_fmt = Format::text;
    CLI::App* eval_cmd = app.add_subcommand(
        "evaluate", "evaluate an expansion on a JSON vector of characteristic numbers");
    eval_cmd->add_option("flavor", eval_flavor, "pontryagin|chern")
        ->required()
        ->check(CLI::IsMember({"pontryagin", "chern"}));
    eval_cmd->add_option("n", eval_n, "index n >= 1")
        ->required()
        ->check(CLI::PositiveNumber);
    eval_cmd->add_option("numbers-file", eval_file,
                         "JSON object: partition key -> integer")
        ->required();
    add_format(eval_cmd, eval_fmt);

    // ak
    unsigned ak_genus = 0;
    unsigned ak_sheets = 0;
    Format ak_fmt = Format::text;
    bool ak_check = false;
    CLI::App* ak_cmd =
        app.add_subcommand("ak", "Atiyah-Kodaira branched-cover report");
    ak_cmd->add_option("--genus", ak_genus, "genus of S (>= 2)")->required();
    ak_cmd->add_option("--sheets", ak_sheets, "cover sheets k (>= 2)")->required();
    add_format(ak_cmd, ak_fmt);
    ak_cmd->add_flag("--check", ak_check, "run the consistency cross-check");

    CLI11_PARSE(app, argc, argv);

    try {
        if (newton_cmd->parsed()) return run_newton(newton_n, newton_fmt);
        if (verify_cmd->parsed()) return run_verify(verify_max_n, verify_which);
        if (expand_cmd->parsed())
            return run_expand(parse_flavor(expand_flavor), expand_n, expand_fmt,
                              expand_self_check);
        if (eval_cmd->parsed())
            return run_evaluate(parse_flavor(eval_flavor), eval_n, eval_file, eval_fmt);
        if (ak_cmd->parsed()) return run_ak(ak_genus, ak_sheets, ak_fmt, ak_check);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
