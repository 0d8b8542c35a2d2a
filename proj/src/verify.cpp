#include <thetaid/identities.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fnmatch.h>
#include <thread>

#include <thetaid/dsl.hpp>
#include <thetaid/evaluate.hpp>

namespace thetaid
{

namespace
{

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// lhs - rhs known through exponent target; widens the atom window when
// negative leading exponents ate into the cutoff.
QSeries difference(ExactEvaluator &ev, const IdentityAst &ast, std::int64_t target)
{
    QSeries d = ev.eval(ast.lhs) - ev.eval(ast.rhs);
    std::int64_t window = ev.context().cutoff;
    for (int attempt = 0; d.cutoff() < target && attempt < 4; ++attempt) {
        window += target - d.cutoff();
        EvalContext wider = ev.context();
        wider.cutoff = window;
        ExactEvaluator fresh(wider);
        d = fresh.eval(ast.lhs) - fresh.eval(ast.rhs);
    }
    if (d.cutoff() < target) {
        throw ConfigError("could not reach the requested cutoff");
    }
    return d.truncate(target);
}

std::vector<std::complex<double>> numeric_taus(const VerifyOptions &opts)
{
    std::vector<std::complex<double>> taus{{0.0, 1.3}};
    for (const auto &s : numeric::draw_samples(opts.plan, 2)) {
        taus.push_back(s.tau);
    }
    return taus;
}

double residual(const IdentityAst &ast, std::complex<double> tau)
{
    NumericEvaluator ev(tau);
    const NumericValue l = ev.eval(ast.lhs);
    const NumericValue r = ev.eval(ast.rhs);
    const double scale = l.magnitude + r.magnitude;
    return scale == 0.0 ? 0.0 : std::abs(l.value - r.value) / scale;
}

std::string exponent_text(const Rational &e)
{
    return "x^" + rational_to_string(e);
}

void note_errata(VerificationReport &rep, bool exact)
{
    if (rep.readings.size() < 2 || !rep.pass) {
        return;
    }
    for (const auto &o : rep.readings) {
        if (o.pass) {
            continue;
        }
        std::string where;
        if (exact && o.first_bad_exponent) {
            where = " (first nonzero coefficient at " + exponent_text(*o.first_bad_exponent) + ")";
        } else if (!exact && o.worst_residual) {
            where = " (residual " + std::to_string(*o.worst_residual) + ")";
        }
        rep.notes.push_back("erratum: reading '" + o.label + "' does not hold" + where);
    }
}

unsigned worker_count(std::size_t jobs)
{
    unsigned n = std::max(1u, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("THETA_CLI_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap >= 1) {
            n = std::min(n, static_cast<unsigned>(cap));
        }
    }
    return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

} // namespace

VerificationReport verify_exact(const IdentityRecord &r, const VerifyOptions &opts)
{
    const auto start = Clock::now();
    VerificationReport rep;
    rep.name = r.name;
    rep.mode = Mode::exact;
    if (r.readings.empty()) {
        throw ConfigError("record '" + r.name + "' has no exact form");
    }
    const std::int64_t x_cutoff = opts.x_cutoff.value_or(r.x_cutoff);
    if (x_cutoff < 1) {
        throw ConfigError("cutoff must be positive");
    }
    rep.cutoff = x_cutoff;
    const std::int64_t target = x_cutoff * r.grading;
    ExactEvaluator ev(EvalContext{r.grading, target, r.order});

    for (const auto &rd : r.readings) {
        ReadingOutcome o;
        o.label = rd.label;
        const QSeries d = difference(ev, rd.ast, target);
        o.pass = d.is_zero();
        if (!o.pass) {
            o.first_bad_exponent = Rational(*d.lead(), r.grading);
        }
        rep.readings.push_back(std::move(o));
    }
    bool guards_ok = true;
    for (const auto &g : r.nonvanishing) {
        if (ev.eval(g).truncate(target).is_zero()) {
            guards_ok = false;
            rep.notes.push_back("nonvanishing check failed: " + dsl::print(g) + " is zero through the cutoff");
        }
    }
    const bool any = std::any_of(rep.readings.begin(), rep.readings.end(), [](const auto &o) { return o.pass; });
    rep.pass = any && guards_ok;
    if (!any) {
        rep.first_bad_exponent = rep.readings.front().first_bad_exponent;
    }
    note_errata(rep, true);
    rep.elapsed_ms = ms_since(start);
    return rep;
}

VerificationReport verify_numeric(const IdentityRecord &r, const VerifyOptions &opts)
{
    const auto start = Clock::now();
    VerificationReport rep;
    rep.name = r.name;
    rep.mode = Mode::numeric;
    const double tol = opts.tol.value_or(r.tol);
    if (!(tol > 0.0)) {
        throw ConfigError("tolerance must be positive");
    }
    try {
        numeric::validate(opts.plan);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    double worst = 0.0;
    switch (r.numeric) {
        case NumericCheck::elliptic_quarter:
        case NumericCheck::elliptic_three_quarter: {
            const auto v = r.numeric == NumericCheck::elliptic_quarter ? numeric::EllipticVariant::quarter
                                                                       : numeric::EllipticVariant::three_quarter;
            numeric::EllipticResult res;
            try {
                res = numeric::check_elliptic_constancy(v, opts.plan, tol, {r.mutated});
            } catch (const std::runtime_error &e) {
                throw ConfigError(e.what());
            }
            worst = res.worst();
            if (res.resamples > 0) {
                rep.notes.push_back(std::to_string(res.resamples) + " samples redrawn near theta zeros");
            }
            break;
        }
        case NumericCheck::det_a:
            for (const auto tau : {std::complex<double>(0.0, 1.0), std::complex<double>(0.3, 1.2)}) {
                worst = std::max(worst, numeric::det_A(tau, r.mutated).relative);
            }
            break;
        case NumericCheck::none: {
            const auto taus = numeric_taus(opts);
            bool any = false;
            double best = 0.0;
            for (const auto &rd : r.readings) {
                ReadingOutcome o;
                o.label = rd.label;
                double w = 0.0;
                for (const auto &tau : taus) {
                    w = std::max(w, residual(rd.ast, tau));
                }
                o.worst_residual = w;
                o.pass = w < tol;
                if (o.pass && (!any || w < best)) {
                    best = w;
                }
                any = any || o.pass;
                rep.readings.push_back(std::move(o));
            }
            worst = any ? best : rep.readings.front().worst_residual.value_or(0.0);
            break;
        }
    }
    rep.worst_residual = worst;
    rep.pass = worst < tol;
    note_errata(rep, false);
    rep.elapsed_ms = ms_since(start);
    return rep;
}

VerificationReport verify(const IdentityRecord &r, const VerifyOptions &opts)
{
    if (r.mode == Mode::exact) {
        return verify_exact(r, opts);
    }
    if (r.mode == Mode::numeric) {
        return verify_numeric(r, opts);
    }
    const auto start = Clock::now();
    VerificationReport rep = verify_exact(r, opts);
    rep.mode = Mode::both;
    if (opts.numeric_for_exact) {
        const VerificationReport num = verify_numeric(r, opts);
        if (rep.pass && !num.pass) {
            rep.pass = false;
            rep.notes.push_back("numeric residual exceeds tolerance");
        }
        if (rep.first_bad_exponent) {
            // a failed exact check carries only its exponent
        } else {
            rep.worst_residual = num.worst_residual;
        }
        for (std::size_t i = 0; i < rep.readings.size() && i < num.readings.size(); ++i) {
            rep.readings[i].worst_residual = num.readings[i].worst_residual;
        }
    }
    rep.elapsed_ms = ms_since(start);
    return rep;
}

bool name_matches(std::string_view pattern, std::string_view name)
{
    if (pattern.empty()) {
        return true;
    }
    return fnmatch(std::string(pattern).c_str(), std::string(name).c_str(), 0) == 0;
}

std::vector<VerificationReport> verify_records(const std::vector<IdentityRecord> &records, const VerifyOptions &opts)
{
    std::vector<VerificationReport> out(records.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < records.size(); i = next++) {
            try {
                out[i] = verify(records[i], opts);
            } catch (const std::exception &e) {
                out[i].name = records[i].name;
                out[i].mode = records[i].mode;
                out[i].pass = false;
                out[i].notes.push_back(std::string("error: ") + e.what());
            }
        }
    };
    const unsigned n = worker_count(records.size());
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < n; ++k) {
        pool.emplace_back(work);
    }
    work();
    for (auto &t : pool) {
        t.join();
    }
    std::stable_sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.name < b.name; });
    return out;
}

std::vector<VerificationReport> verify_all(std::string_view filter, const VerifyOptions &opts)
{
    std::vector<IdentityRecord> picked;
    for (const auto &r : registry()) {
        if (name_matches(filter, r.name)) {
            picked.push_back(r);
        }
    }
    return verify_records(picked, opts);
}

} // namespace thetaid
