#include "genbell/catalog.hpp"
#include "genbell/io.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace genbell;
using genbell::io::ordered_json;

enum Exit { Ok = 0, IoError = 1, Usage = 2, VerifyFailed = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string alpha, beta, alpha2, beta2, lambda = "0", x, width = "1/64";
    std::string format, output, identity, kind;
    std::string epsilon = "1e-12";
    long m = 1;
    unsigned r = 1, n = 0, nmax = 10;
    std::optional<unsigned> order;
    bool all = false, newton = false;
};

Rational rational_option(const std::string& name, const std::string& text)
{
    try {
        return parse_rational(text);
    } catch (const std::invalid_argument&) {
        throw UsageError("--" + name + ": expected an integer or p/q, got '" + text + "'");
    }
}

FamilyParams family_option(const std::string& a, const std::string& b, const char* an = "alpha", const char* bn = "beta")
{
    if (a.empty() || b.empty()) throw UsageError(std::string("--") + an + " and --" + bn + " are required");
    const Rational beta = rational_option(bn, b);
    if (beta == 0) throw UsageError(std::string("--") + bn + " must be nonzero");
    return FamilyParams(rational_option(an, a), beta);
}

std::string format_or(const Config& c, const char* fallback)
{
    const std::string f = c.format.empty() ? fallback : c.format;
    if (f != "csv" && f != "json" && f != "pretty") throw UsageError("--format must be csv, json or pretty");
    return f;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

std::string polynomial_text(const QPolynomial& p, const std::string& format, const std::string& note = {})
{
    if (format == "json") {
        ordered_json j;
        j["coefficients"] = io::coefficients_json(p);
        j["pretty"] = pretty(p);
        if (!note.empty()) j["note"] = note;
        return dump(j);
    }
    std::ostringstream out;
    if (format == "csv") {
        out << "k,value\n";
        for (long k = 0; k <= std::max(p.degree(), 0L); ++k) out << k << ',' << to_string(p[k]) << '\n';
        return out.str();
    }
    out << coefficient_list(p) << '\n' << pretty(p) << '\n';
    if (!note.empty()) out << "note: " << note << '\n';
    return out.str();
}

int run_table(const Config& c, std::string& out)
{
    const auto p = family_option(c.alpha, c.beta);
    const auto t = gstirling_table(p.alpha(), p.beta(), c.nmax);
    const auto f = format_or(c, "csv");
    out = f == "csv" ? io::table_csv(t) : f == "json" ? dump(io::table_json(t)) : io::table_pretty(t);
    return Ok;
}

int run_poly(const Config& c, std::string& out)
{
    const auto p = family_option(c.alpha, c.beta);
    out = polynomial_text(poly(p, c.n), format_or(c, "pretty"));
    return Ok;
}

int run_eval(const Config& c, std::string& out)
{
    const auto p = family_option(c.alpha, c.beta);
    if (c.x.empty()) throw UsageError("--x is required");
    const Rational x = rational_option("x", c.x);
    double eps = 0;
    try {
        std::size_t used = 0;
        eps = std::stod(c.epsilon, &used);
        if (used != c.epsilon.size() || !(eps > 0)) throw std::invalid_argument("epsilon");
    } catch (const std::exception&) {
        throw UsageError("--epsilon must be a positive decimal");
    }
    const double approx = eval_dobinski(p, c.n, x, eps);
    const Rational exact = poly(p, c.n)(x);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", approx);
    const auto f = format_or(c, "pretty");
    if (f == "json") {
        ordered_json j;
        j["alpha"] = to_string(p.alpha());
        j["beta"] = to_string(p.beta());
        j["n"] = c.n;
        j["x"] = to_string(x);
        j["epsilon"] = c.epsilon;
        j["dobinski"] = buf;
        j["exact"] = to_string(exact);
        out = dump(j);
    } else if (f == "csv") {
        out = "n,x,dobinski,exact\n" + std::to_string(c.n) + "," + to_string(x) + "," + buf + "," + to_string(exact) + "\n";
    } else {
        out = std::string("dobinski ") + buf + "\nexact " + to_string(exact) + "\n";
    }
    return Ok;
}

int run_zeros(const Config& c, std::string& out)
{
    const auto p = family_option(c.alpha, c.beta);
    const Rational width = rational_option("width", c.width);
    if (width <= 0) throw UsageError("--width must be positive");
    const auto report = check_theorem3(p, c.nmax, width);
    bool ok = report.holds();

    std::map<unsigned, bool> newton;
    if (c.newton) {
        if (!(p.alpha() <= 0 && p.beta() < 0)) throw UsageError("--newton needs alpha <= 0 and beta < 0");
        for (unsigned n = 2; n <= c.nmax; ++n) ok = (newton[n] = check_newton_logconcave(p, n)) && ok;
    }

    const auto f = format_or(c, "pretty");
    if (f == "json") {
        auto j = io::region_report_json(report);
        if (c.newton)
            for (auto& row : j["results"])
                if (auto it = newton.find(row["n"].get<unsigned>()); it != newton.end()) row["newton_logconcave"] = it->second;
        out = dump(j);
        return ok ? Ok : VerifyFailed;
    }
    std::ostringstream s;
    if (f == "csv") s << "n,all_real,asserted,roots" << (c.newton ? ",newton_logconcave" : "") << '\n';
    else s << "alpha=" << to_string(p.alpha()) << " beta=" << to_string(p.beta()) << " region=" << to_string(report.region) << '\n';
    for (const auto& d : report.results) {
        std::string roots;
        for (const auto& iv : d.roots) roots += (roots.empty() ? "" : ";") + std::string("[") + to_string(iv.lo) + "," + to_string(iv.hi) + "]";
        const auto it = newton.find(d.n);
        if (f == "csv") {
            s << d.n << ',' << (d.all_real ? "true" : "false") << ',' << (d.asserted ? "true" : "false") << ',' << roots;
            if (c.newton) s << ',' << (it == newton.end() ? "" : it->second ? "true" : "false");
        } else {
            s << "n=" << d.n << " all_real=" << (d.all_real ? "yes" : "no") << (d.asserted ? " (asserted)" : "");
            if (it != newton.end()) s << " newton=" << (it->second ? "yes" : "no");
            if (!roots.empty()) s << ' ' << roots;
        }
        s << '\n';
    }
    out = s.str();
    return ok ? Ok : VerifyFailed;
}

int run_family(const Config& c, std::string& out)
{
    const auto f = format_or(c, "pretty");
    if (c.kind == "U") out = polynomial_text(family_U(c.n), f);
    else if (c.kind == "V") out = polynomial_text(family_V(c.n), f);
    else if (c.kind == "laguerre")
        out = polynomial_text(family_laguerre(rational_option("lambda", c.lambda), c.n), f, laguerre_convention_note);
    else if (c.kind == "assoc-lah") {
        if (c.m < 1) throw UsageError("--m must be at least 1");
        out = polynomial_text(family_assoc_lah(c.m, c.n), f);
    } else
        throw UsageError("family must be one of U, V, laguerre, assoc-lah");
    return Ok;
}

// --- verify ---------------------------------------------------------------

using ParamCheck = std::function<void(catalog::Report&, const FamilyParams&)>;

/// The given (alpha, beta), or the whole acceptance grid when neither is given.
std::vector<FamilyParams> params_or_grid(const Config& c)
{
    if (c.alpha.empty() && c.beta.empty()) return catalog::acceptance_grid();
    return {family_option(c.alpha, c.beta)};
}

std::optional<FamilyParams> second_params(const Config& c)
{
    if (c.alpha2.empty() && c.beta2.empty()) return std::nullopt;
    return family_option(c.alpha2, c.beta2, "alpha2", "beta2");
}

void run_identity(const Config& c, catalog::Report& r)
{
    namespace k = catalog;
    const unsigned nmax = c.nmax;
    const unsigned order = c.order.value_or(nmax + 2);
    const auto each = [&](const ParamCheck& f) {
        for (const auto& p : params_or_grid(c)) f(r, p);
    };
    const std::string& id = c.identity;
    if (id == "routes") each([&](auto& rep, auto& p) { k::check_routes(rep, p, nmax); });
    else if (id == "first-values") each([&](auto& rep, auto& p) { k::check_first_values(rep, p); });
    else if (id == "l1") each([&](auto& rep, auto& p) { k::check_lemma1(rep, p, nmax); });
    else if (id == "p5") each([&](auto& rep, auto& p) { k::check_p5(rep, p, nmax); });
    else if (id == "p2") each([&](auto& rep, auto& p) { k::check_p2(rep, p, nmax); });
    else if (id == "p3") each([&](auto& rep, auto& p) { k::check_p3(rep, p, c.r, nmax); });
    else if (id == "c3") each([&](auto& rep, auto& p) { k::check_c3(rep, p, nmax); });
    else if (id == "t2") {
        if (c.m < 0 || static_cast<unsigned long>(c.m) > order) throw UsageError("--m must lie in 0..order");
        each([&](auto& rep, auto& p) { k::check_t2(rep, p, static_cast<unsigned>(c.m), order); });
    } else if (id == "t4") each([&](auto& rep, auto& p) { k::check_t4(rep, p, nmax); });
    else if (id == "bell-op") {
        const Rational lambda = rational_option("lambda", c.lambda);
        each([&](auto& rep, auto& p) { k::check_bell_operator(rep, p, lambda, nmax); });
    } else if (id == "p4" || id == "composition") {
        const auto q = second_params(c);
        if (!q) throw UsageError("--alpha2 and --beta2 are required for " + id);
        each([&](auto& rep, auto& p) {
            if (id == "p4") k::check_rebase(rep, p, *q, nmax);
            else k::check_composition(rep, p, *q, nmax);
        });
    } else if (id == "p4-lah") each([&](auto& rep, auto& p) { k::check_p4_lah(rep, p, nmax); });
    else if (id == "c4") each([&](auto& rep, auto& p) { k::check_c4(rep, p, nmax); });
    else if (id == "t3") each([&](auto& rep, auto& p) { k::check_t3(rep, p, nmax); });
    else if (id == "c1") {
        each([&](auto& rep, auto& p) {
            if (p.alpha() <= 0 && p.beta() < 0) k::check_c1(rep, p, nmax);
            else if (!c.alpha.empty()) throw UsageError("c1 needs alpha <= 0 and beta < 0");
        });
    } else if (id == "special") {
        k::check_special_uv(r, nmax);
        k::check_special_laguerre(r, rational_option("lambda", c.lambda), nmax);
        if (c.m < 1) throw UsageError("--m must be at least 1");
        k::check_special_assoc_lah(r, c.m, nmax);
        k::check_rlah_remark(r, c.r, nmax);
    } else
        throw UsageError("unknown identity '" + id + "'");
}

int run_verify(const Config& c, std::string& out)
{
    if (c.all == !c.identity.empty()) throw UsageError("give exactly one of --identity NAME or --all");
    std::ostringstream s;
    bool ok = true;
    if (c.all) {
        std::size_t failed_criteria = 0;
        const auto criteria = catalog::acceptance_criteria();
        for (const auto& crit : criteria) {
            catalog::Report r;
            crit.run(r);
            s << "# criterion " << crit.id << ": " << crit.title << '\n';
            for (const auto& chk : r.checks()) s << chk.line() << '\n';
            s << "# criterion " << crit.id << (r.ok() ? " PASS " : " FAIL ") << r.checks().size() - r.failures() << '/'
              << r.checks().size() << '\n';
            failed_criteria += r.ok() ? 0 : 1;
        }
        s << "# summary " << criteria.size() - failed_criteria << '/' << criteria.size() << " criteria pass\n";
        ok = failed_criteria == 0;
    } else {
        catalog::Report r;
        run_identity(c, r);
        for (const auto& chk : r.checks()) s << chk.line() << '\n';
        s << "# " << r.checks().size() - r.failures() << '/' << r.checks().size() << " checks pass\n";
        ok = r.ok();
    }
    out = s.str();
    return ok ? Ok : VerifyFailed;
}

void add_family_options(CLI::App* sub, Config& c)
{
    sub->add_option("--alpha", c.alpha, "alpha as an integer or p/q");
    sub->add_option("--beta", c.beta, "beta as an integer or p/q, nonzero");
}

void add_common(CLI::App* sub, Config& c)
{
    sub->add_option("--format", c.format, "csv, json or pretty");
    sub->add_option("--output", c.output, "write to this file instead of standard output");
}

} // namespace

int main(int argc, char** argv)
{
    Config c;
    CLI::App app{"Generalized Stirling numbers and the P_n^(alpha,beta) polynomial family"};
    app.require_subcommand(1);

    auto* table = app.add_subcommand("table", "coefficient triangle S_{alpha,beta}(n,k)");
    add_family_options(table, c);
    table->add_option("--nmax", c.nmax, "last row")->capture_default_str();

    auto* poly_cmd = app.add_subcommand("poly", "coefficients of P_n^(alpha,beta)");
    add_family_options(poly_cmd, c);
    poly_cmd->add_option("--n", c.n, "degree")->required();

    auto* eval = app.add_subcommand("eval", "Dobinski-series evaluation of P_n^(alpha,beta)(x)");
    add_family_options(eval, c);
    eval->add_option("--n", c.n, "degree")->required();
    eval->add_option("--x", c.x, "point, integer or p/q");
    eval->add_option("--epsilon", c.epsilon, "absolute tolerance")->capture_default_str();

    auto* zeros = app.add_subcommand("zeros", "real-rootedness report");
    add_family_options(zeros, c);
    zeros->add_option("--nmax", c.nmax, "largest degree")->capture_default_str();
    zeros->add_option("--width", c.width, "isolating interval width")->capture_default_str();
    zeros->add_flag("--newton", c.newton, "also check Newton's inequalities on the coefficients");

    auto* verify = app.add_subcommand("verify", "check identities, one PASS/FAIL line per case");
    add_family_options(verify, c);
    verify->add_option("--identity", c.identity,
                       "routes, first-values, l1, p5, p2, p3, c3, t2, t4, bell-op, p4, composition, p4-lah, c4, t3, c1, special");
    verify->add_flag("--all", c.all, "run the full acceptance suite");
    verify->add_option("--alpha2", c.alpha2, "second alpha for p4 / composition");
    verify->add_option("--beta2", c.beta2, "second beta for p4 / composition");
    verify->add_option("--r", c.r, "r for p3 and the r-Lah check")->capture_default_str();
    verify->add_option("--lambda", c.lambda, "lambda for bell-op and special")->capture_default_str();
    verify->add_option("--m", c.m, "derivative order for t2, associated Lah index for special")->capture_default_str();
    verify->add_option("--order", c.order, "series truncation order for t2 (default nmax + 2)");
    verify->add_option("--nmax", c.nmax, "largest degree")->capture_default_str();

    auto* family = app.add_subcommand("family", "named specializations");
    family->add_option("kind", c.kind, "U, V, laguerre or assoc-lah")->required();
    family->add_option("--lambda", c.lambda, "Laguerre parameter")->capture_default_str();
    family->add_option("--m", c.m, "associated Lah index")->capture_default_str();
    family->add_option("--n", c.n, "degree")->required();

    for (auto* sub : {table, poly_cmd, eval, zeros, verify, family}) add_common(sub, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return Usage;
    }

    std::string out;
    int code = Ok;
    try {
        if (table->parsed()) code = run_table(c, out);
        else if (poly_cmd->parsed()) code = run_poly(c, out);
        else if (eval->parsed()) code = run_eval(c, out);
        else if (zeros->parsed()) code = run_zeros(c, out);
        else if (verify->parsed()) code = run_verify(c, out);
        else code = run_family(c, out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Usage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Usage;
    }

    if (c.output.empty()) {
        std::cout << out << std::flush;
        if (!std::cout) return IoError;
    } else {
        std::ofstream file(c.output, std::ios::binary);
        if (!file || !(file << out) || !(file.flush())) {
            std::cerr << "error: cannot write " << c.output << '\n';
            return IoError;
        }
    }
    return code;
}
