#include <thetaid/report.hpp>

#include <cstdio>
#include <sstream>

namespace thetaid
{

nlohmann::json to_json(const VerificationReport &r)
{
    nlohmann::json j;
    j["name"] = r.name;
    j["mode"] = std::string(to_string(r.mode));
    j["pass"] = r.pass;
    j["first_bad_exponent"] = r.first_bad_exponent ? nlohmann::json(rational_to_string(*r.first_bad_exponent))
                                                   : nlohmann::json(nullptr);
    j["worst_residual"] = r.worst_residual ? nlohmann::json(*r.worst_residual) : nlohmann::json(nullptr);
    j["elapsed_ms"] = r.elapsed_ms;
    j["cutoff"] = r.cutoff ? nlohmann::json(*r.cutoff) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json suite_json(const std::vector<VerificationReport> &reports)
{
    nlohmann::json records = nlohmann::json::array();
    std::size_t passed = 0;
    for (const auto &r : reports) {
        records.push_back(to_json(r));
        passed += r.pass ? 1 : 0;
    }
    nlohmann::json j;
    j["total"] = reports.size();
    j["passed"] = passed;
    j["failed"] = reports.size() - passed;
    j["records"] = std::move(records);
    return j;
}

std::string format_human(const VerificationReport &r)
{
    std::ostringstream os;
    os << (r.pass ? "PASS " : "FAIL ") << r.name << "  [" << to_string(r.mode) << "]";
    if (r.cutoff) {
        os << "  cutoff x^" << *r.cutoff;
    }
    if (r.first_bad_exponent) {
        os << "  first nonzero at x^" << rational_to_string(*r.first_bad_exponent);
    }
    if (r.worst_residual) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3e", *r.worst_residual);
        os << "  residual " << buf;
    }
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f", r.elapsed_ms);
    os << "  " << ms << " ms\n";
    for (const auto &n : r.notes) {
        os << "    " << n << "\n";
    }
    return os.str();
}

std::string format_human(const std::vector<VerificationReport> &reports)
{
    std::string out;
    std::size_t passed = 0;
    for (const auto &r : reports) {
        out += format_human(r);
        passed += r.pass ? 1 : 0;
    }
    out += std::to_string(passed) + "/" + std::to_string(reports.size()) + " passed\n";
    return out;
}

} // namespace thetaid
