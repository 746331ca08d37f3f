#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qtoric/cli/json_io.hpp"

namespace qtoric {

enum class CheckStatus { Pass, Fail, Discrepancy };
const char* check_status_name(CheckStatus s);

// One expectation. `source` is "printed" (value stated in the literature) or "derived"
// (recomputed by an independent route). A discrepancy is a printed value that is known not
// to hold; it passes only when the computed counter-value is exactly the recorded one.
struct ExampleCheck {
    std::string name;
    std::string source;
    io::json expected;
    io::json computed;
    CheckStatus status = CheckStatus::Fail;
    std::string note;
};

struct ExampleEntry {
    std::string name;
    std::string summary;
    std::function<std::vector<ExampleCheck>()> run;
};

struct ExampleResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;  // worst check: Fail > Discrepancy > Pass
    std::vector<ExampleCheck> checks;
    std::string error;                       // set when the run threw
};

const std::vector<ExampleEntry>& examples_registry();
const ExampleEntry* find_example(const std::string& name);
ExampleResult run_example(const ExampleEntry& e);
io::json to_json(const ExampleResult& r);

}  // namespace qtoric
