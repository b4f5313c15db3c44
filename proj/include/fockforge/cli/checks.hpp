#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace fockforge::cli {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Measured };
const char* to_string(Status s);

struct CheckParams {
    std::optional<int> max_degree;  // check default when unset
    std::uint64_t seed = 0;
    std::optional<std::string> type;
    std::optional<int> rank;
};

struct CheckReport {
    std::string check;
    Json params = Json::object();
    Status status = Status::Pass;
    std::vector<std::string> witnesses;
    Json data = Json::object();
    std::uint64_t seed = 0;
    double seconds = 0;

    bool ok() const { return status != Status::Fail; }
};

/// Timing is left out unless asked for, so reports are byte-stable.
Json to_json(const CheckReport& r, bool timing = false);

enum class Profile { Quick, Full };
const char* to_string(Profile p);
Profile parse_profile(const std::string& s);

struct CheckInfo {
    std::string name;
    std::string module;
    std::string summary;
    std::vector<std::string> flags;
    int quick_degree;
    int full_degree;
};

const std::vector<CheckInfo>& registry();
/// Throws std::invalid_argument for an unknown name.
const CheckInfo& find_check(const std::string& name);

CheckReport run_check(const std::string& name, const CheckParams& params);

/// One seeded Yang-Baxter run at the given degree (uniform convention).
CheckReport run_ybe(int degree, std::uint64_t seed);

struct SuiteReport {
    Profile profile;
    std::vector<CheckReport> checks;
    bool ok() const;
};

/// Every registered check at the profile's degree; `jobs` > 1 runs checks
/// concurrently, results stay in registry order.
SuiteReport run_suite(Profile profile, std::uint64_t seed = 0, int jobs = 1);
Json to_json(const SuiteReport& s, bool timing = false);

}  // namespace fockforge::cli
