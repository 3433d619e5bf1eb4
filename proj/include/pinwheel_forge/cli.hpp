#pragma once

#include "json.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pwf::cli {

inline constexpr const char* kSchemaVersion = "pinwheel-forge/1";

enum class Status { Pass, Fail, Inconclusive, Incomplete };

std::string to_string(Status s);

struct CheckResult {
    std::string check_id;
    nlohmann::ordered_json inputs;
    Status status = Status::Fail;
    nlohmann::ordered_json witness;
    std::string detail;  // one line for the text report
};

// Every reproduced numeric claim, in fixed declaration order.
std::vector<CheckResult> run_all_checks();

nlohmann::ordered_json report_json(const std::vector<CheckResult>& checks);
std::string report_text(const std::vector<CheckResult>& checks);
// True iff no check has status fail or inconclusive.
bool report_passed(const std::vector<CheckResult>& checks);

// JSON schema for the report document.
std::string report_schema();

// "a..b" (inclusive) or a single integer. Throws ParseError.
std::pair<long, long> parse_range(std::string_view text);
// "1,-2,3". Throws ParseError.
std::vector<long> parse_int_list(std::string_view text);

// Exit codes: 0 pass, 1 check failure, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pwf::cli
