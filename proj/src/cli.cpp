#include <algorithm>
#include <thetaid/cli.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <thetaid/arith.hpp>
#include <thetaid/dsl.hpp>
#include <thetaid/identities.hpp>
#include <thetaid/report.hpp>
#include <thetaid/thetaforms.hpp>

namespace thetaid::cli
{

namespace
{

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

std::string trim(const std::string &s)
{
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

Characteristic parse_characteristic(const std::string &text, std::int64_t scale)
{
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        throw ConfigError("--theta expects E,E' (for example 1/2,0), got '" + text + "'");
    }
    try {
        return {parse_rational(trim(text.substr(0, comma))), parse_rational(trim(text.substr(comma + 1))), scale};
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
}

std::string decimal(std::complex<double> z)
{
    // drop rounding noise relative to the larger part
    const double tiny = 1e-12 * std::max(1.0, std::abs(z));
    const double re = std::abs(z.real()) < tiny ? 0.0 : z.real();
    const double im = std::abs(z.imag()) < tiny ? 0.0 : z.imag();
    char buf[64];
    if (im == 0.0) {
        std::snprintf(buf, sizeof buf, "%.10g", re);
    } else {
        std::snprintf(buf, sizeof buf, "%.10g%+.10gi", re, im);
    }
    return buf;
}

json coords_json(const CycloNumber &c)
{
    json a = json::array();
    for (const auto &r : c.coords()) {
        a.push_back(rational_to_string(r));
    }
    return a;
}

std::string coords_text(const CycloNumber &c)
{
    std::string s = "[";
    const auto cs = c.coords();
    for (std::size_t i = 0; i < cs.size(); ++i) {
        s += (i ? ", " : "") + rational_to_string(cs[i]);
    }
    return s + "]";
}

struct Output {
    std::ostream &out;
    std::ostream &err;
};

int cmd_expand(Output io, const std::string &theta, std::int64_t scale, bool deriv, std::int64_t x_cutoff, bool as_json)
{
    if (scale < 1) {
        throw ConfigError("--scale must be positive");
    }
    if (x_cutoff < 0) {
        throw ConfigError("--order must be nonnegative");
    }
    const Characteristic c = parse_characteristic(theta, scale);
    const std::int64_t D = required_grading(c);
    const int N = required_order(c);
    const QSeries s = deriv ? theta_deriv_normalized(c, D, x_cutoff * D, N) : theta_constant(c, D, x_cutoff * D, N);

    const std::string label = std::string(deriv ? "dtheta" : "theta") + "[" + rational_to_string(c.eps) + ","
                              + rational_to_string(c.epsp) + "](" + std::to_string(scale) + ")";
    if (as_json) {
        json terms = json::array();
        for (const auto &t : s.terms()) {
            const auto z = t.coeff.to_complex();
            terms.push_back({{"exponent", rational_to_string(Rational(t.exponent, D))},
                             {"coords", coords_json(t.coeff.embed(N))},
                             {"approx", {z.real(), z.imag()}}});
        }
        json j{{"series", label}, {"variable", "x"}, {"grading", D}, {"order", N}, {"cutoff", x_cutoff},
               {"terms", terms}};
        io.out << j.dump(2) << "\n";
        return kOk;
    }
    io.out << label << " in x = exp(pi i tau), through x^" << x_cutoff << "\n";
    for (const auto &t : s.terms()) {
        const CycloNumber m = t.coeff.with_minimal_order();
        io.out << "  x^" << rational_to_string(Rational(t.exponent, D)) << ": Q(zeta_" << m.order() << ") "
               << coords_text(m) << "  ~ " << decimal(t.coeff.to_complex()) << "\n";
    }
    if (s.is_zero()) {
        io.out << "  (identically zero)\n";
    }
    return kOk;
}

int emit_reports(Output io, const std::vector<VerificationReport> &reports, bool as_json, bool single)
{
    bool all = true;
    for (const auto &r : reports) {
        all = all && r.pass;
    }
    if (as_json) {
        io.out << (single && reports.size() == 1 ? to_json(reports.front()) : suite_json(reports)).dump(2) << "\n";
    } else {
        io.out << (single && reports.size() == 1 ? format_human(reports.front()) : format_human(reports));
    }
    return all ? kOk : kFailed;
}

const IdentityRecord &lookup(const std::string &id)
{
    const IdentityRecord *r = find_record(id);
    if (!r) {
        throw ConfigError("unknown identity '" + id + "' (see theta-cli list)");
    }
    return *r;
}

int cmd_verify_file(Output io, const std::string &path, const VerifyOptions &opts, bool as_json)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    std::vector<dsl::FileEntry> entries;
    try {
        entries = dsl::parse_file(buf.str());
    } catch (const dsl::ParseError &e) {
        throw ConfigError(path + ": " + e.what());
    }
    if (entries.empty()) {
        throw ConfigError(path + ": no identities found");
    }
    std::vector<IdentityRecord> records;
    dsl::ElaborateDefaults defaults;
    if (opts.x_cutoff) {
        defaults.x_cutoff = *opts.x_cutoff;
    }
    for (const auto &e : entries) {
        records.push_back(dsl::elaborate(e.ast, path + ":" + std::to_string(e.line), defaults));
    }
    return emit_reports(io, verify_records(records, opts), as_json, false);
}

int cmd_sumsq(Output io, std::int64_t max, bool as_json)
{
    if (max < 0) {
        throw ConfigError("--max must be nonnegative");
    }
    bool all = true;
    json rows = json::array();
    std::ostringstream table;
    table << "     n   S2  S2(lattice)  S12  S12(lattice)  agree\n";
    for (std::int64_t n = 0; n <= max; ++n) {
        const auto a = arith::s2_formula(n), al = arith::s2_lattice(n);
        const auto b = arith::s12_formula(n), bl = arith::s12_lattice(n);
        const bool ok = a == al && b == bl;
        all = all && ok;
        if (as_json) {
            rows.push_back({{"n", n}, {"s2", a}, {"s2_lattice", al}, {"s12", b}, {"s12_lattice", bl}, {"agree", ok}});
        } else {
            char line[128];
            std::snprintf(line, sizeof line, "%6lld %4lld %12lld %4lld %13lld  %s\n", static_cast<long long>(n),
                          static_cast<long long>(a), static_cast<long long>(al), static_cast<long long>(b),
                          static_cast<long long>(bl), ok ? "yes" : "NO");
            table << line;
        }
    }
    if (as_json) {
        io.out << json{{"max", max}, {"all_agree", all}, {"rows", rows}}.dump(2) << "\n";
    } else {
        io.out << table.str();
    }
    return all ? kOk : kFailed;
}

int cmd_list(Output io, bool as_json, bool thid)
{
    if (as_json) {
        json a = json::array();
        for (const auto &r : registry()) {
            json readings = json::array();
            for (const auto &rd : r.readings) {
                readings.push_back({{"label", rd.label}, {"text", dsl::print(rd.ast)}});
            }
            a.push_back({{"name", r.name}, {"mode", std::string(to_string(r.mode))}, {"summary", r.summary},
                         {"normalization", r.normalization}, {"grading", r.grading}, {"order", r.order},
                         {"cutoff", r.readings.empty() ? json(nullptr) : json(r.x_cutoff)}, {"readings", readings}});
        }
        io.out << a.dump(2) << "\n";
        return kOk;
    }
    for (const auto &r : registry()) {
        if (!thid) {
            io.out << r.name << "  [" << to_string(r.mode) << "]  " << r.summary << "\n";
            continue;
        }
        if (r.readings.empty()) {
            continue;
        }
        io.out << "# " << r.name << "\n";
        for (const auto &rd : r.readings) {
            io.out << dsl::print(rd.ast) << "\n";
        }
        io.out << "\n";
    }
    return kOk;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact and numeric verification of theta-constant identities", "theta-cli"};
    app.require_subcommand(1);

    bool as_json = false;
    std::optional<std::int64_t> x_cutoff;
    std::optional<double> tol;
    std::uint64_t seed = 1;
    int samples = 20;

    std::string theta;
    std::int64_t scale = 1;
    bool deriv = false;
    std::int64_t expand_cutoff = 20;
    auto *expand = app.add_subcommand("expand", "print the series of a theta constant or normalized derivative");
    expand->add_option("--theta", theta, "characteristic E,E'")->required();
    expand->add_option("--scale", scale, "theta(0, K tau)");
    expand->add_flag("--deriv", deriv, "normalized derivative theta'/(2 pi i)");
    expand->add_option("--order", expand_cutoff, "x-exponent cutoff");
    expand->add_flag("--json", as_json);

    std::string id;
    auto *verify_cmd = app.add_subcommand("verify", "verify one registered identity");
    verify_cmd->add_option("--id", id, "record name")->required();
    verify_cmd->add_option("--order", x_cutoff, "x-exponent cutoff");
    verify_cmd->add_option("--tol", tol, "numeric tolerance");
    verify_cmd->add_flag("--json", as_json);

    std::string filter;
    auto *all_cmd = app.add_subcommand("verify-all", "verify every registered identity");
    all_cmd->add_option("--filter", filter, "glob over record names");
    all_cmd->add_option("--order", x_cutoff, "x-exponent cutoff");
    all_cmd->add_flag("--json", as_json);

    std::string path;
    auto *file_cmd = app.add_subcommand("verify-file", "parse a .thid file and verify each identity");
    file_cmd->add_option("path", path, "identity file")->required();
    file_cmd->add_option("--order", x_cutoff, "x-exponent cutoff");
    file_cmd->add_option("--tol", tol, "numeric tolerance");
    file_cmd->add_flag("--json", as_json);

    std::int64_t max = 0;
    auto *sumsq = app.add_subcommand("sumsq", "representation numbers against lattice counts");
    sumsq->add_option("--max", max, "largest n")->required();
    sumsq->add_flag("--json", as_json);

    auto *numeric_cmd = app.add_subcommand("numeric-check", "numeric mode for one record");
    numeric_cmd->add_option("--id", id, "record name")->required();
    numeric_cmd->add_option("--samples", samples, "sample count");
    numeric_cmd->add_option("--seed", seed, "sampler seed");
    numeric_cmd->add_option("--tol", tol, "tolerance");
    numeric_cmd->add_flag("--json", as_json);

    bool thid = false;
    auto *list = app.add_subcommand("list", "list registered identities");
    list->add_flag("--thid", thid, "print the registry as an identity file");
    list->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        std::ostringstream o, r;
        const int code = app.exit(e, o, r);
        out << o.str();
        err << r.str();
        return code == 0 ? kOk : kUsage;
    }

    Output io{out, err};
    VerifyOptions opts;
    if (x_cutoff && *x_cutoff < 1) {
        err << "error: --order must be positive\n";
        return kUsage;
    }
    if (tol && !(*tol > 0.0)) {
        err << "error: --tol must be positive\n";
        return kUsage;
    }
    opts.x_cutoff = x_cutoff;
    opts.tol = tol;

    try {
        if (*expand) {
            return cmd_expand(io, theta, scale, deriv, expand_cutoff, as_json);
        }
        if (*verify_cmd) {
            return emit_reports(io, {verify(lookup(id), opts)}, as_json, true);
        }
        if (*all_cmd) {
            return emit_reports(io, verify_all(filter, opts), as_json, false);
        }
        if (*file_cmd) {
            return cmd_verify_file(io, path, opts, as_json);
        }
        if (*sumsq) {
            return cmd_sumsq(io, max, as_json);
        }
        if (*numeric_cmd) {
            opts.plan.seed = seed;
            opts.plan.count = samples;
            return emit_reports(io, {verify_numeric(lookup(id), opts)}, as_json, true);
        }
        if (*list) {
            return cmd_list(io, as_json, thid);
        }
    } catch (const ConfigError &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const dsl::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

int run(int argc, const char *const *argv)
{
    return run(argc, argv, std::cout, std::cerr);
}

} // namespace thetaid::cli
