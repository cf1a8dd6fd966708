#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "novcoh/io.hpp"

namespace novcoh::cli {

enum class Verb { Validate, Cohomology, Cone, Torus, Novikov, Ranicki, Contract, Fuzz, Identify };

std::string to_string(Verb v);

struct Command {
    Verb verb = Verb::Validate;
    std::string path;         // complex, map or bicomplex, by verb
    std::string second_path;  // map for torus/identify, cocycle for contract
    SeriesDir dir = SeriesDir::Lt;
    TorusVar var = TorusVar::Z;
    std::optional<std::pair<int, int>> window;
    std::uint64_t seed = 1;
    std::size_t samples = 10;
    std::string ring = "F5";
    std::size_t max_rank = 3;
    bool expect_acyclic = false;
    bool timing = false;
};

enum ExitCode : int { kOk = 0, kViolation = 1, kInputError = 2 };

struct Report {
    io::Json body;
    int exit_code = kOk;
};

/// "a:b" with a <= b.
std::pair<int, int> parse_window(std::string_view text);

/// Dispatches one command.  Input errors come back as a report with exit code 2.
Report run(const Command& cmd);

/// Full command line: parse, run, print (or write --out), return the exit code.
int main(int argc, char** argv);

}  // namespace novcoh::cli
