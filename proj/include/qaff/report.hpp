#pragma once

#include "qaff/classify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qaff {

inline constexpr const char* tool_version = "0.1.0";

using Json = nlohmann::ordered_json;

struct Report {
    std::string command;
    Json inputs = Json::object();
    Json results = Json::object();
    std::vector<std::string> diagnostics;
    std::string verdict = "pass";  // pass, fail, ambiguous
    std::vector<std::string> text;  // human table, not part of the JSON tree
};

Json to_json(const Report& r);
std::string render_text(const Report& r);
std::string render_json(const Report& r);

// 0 unless the verdict is fail.
int exit_code(const Report& r);

Report cmd_datum(const TypeLabel& t);
Report cmd_subsystem(const TypeLabel& t, int divisor, int level);
Report cmd_classify(const TypeLabel& t, int ell, int level);
Report cmd_braiding(const TypeLabel& t, int ell, const std::vector<Vec>& degrees);

struct VerifyOptions {
    int level = 4;
    int workers = 1;
    bool corrupt_fixture = false;  // negative control
};

Report cmd_verify_all(const VerifyOptions& opt);

// "1,0 0,1" -> {(1,0), (0,1)}; throws std::invalid_argument.
std::vector<Vec> parse_degrees(const std::string& s, int size);

}  // namespace qaff
