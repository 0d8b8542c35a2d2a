#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include <thetaid/identities.hpp>

namespace thetaid
{

// {name, mode, pass, first_bad_exponent, worst_residual, elapsed_ms, cutoff};
// absent optionals serialize as null.
nlohmann::json to_json(const VerificationReport &r);

// {total, passed, failed, records}
nlohmann::json suite_json(const std::vector<VerificationReport> &reports);

std::string format_human(const VerificationReport &r);
std::string format_human(const std::vector<VerificationReport> &reports);

} // namespace thetaid
