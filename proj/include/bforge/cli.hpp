/*
   Copyright 2026 The boundary-forge Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Subcommand dispatch for the boundary-forge command line.

#ifndef BFORGE_CLI_HPP
#define BFORGE_CLI_HPP

#include <bforge/problem.hpp>
#include <bforge/report.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bforge {

enum class Subcommand { check, boundary, split, realize, verify, report };
enum class OutputFormat { text, structured };

const char* to_string(Subcommand command) noexcept;
std::optional<Subcommand> subcommand_from_string(const std::string& name);

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

/// Flags given on the command line take precedence over the problem file's settings.
struct Options {
    Subcommand command = Subcommand::report;
    std::filesystem::path problem;
    std::optional<std::pair<Rational, Rational>> interval;
    std::optional<Index> trials;
    std::optional<Index> degree;
    std::optional<std::uint64_t> seed;
    std::optional<std::vector<Index>> swap;
    bool two_point = false;
    std::optional<double> tolerance;
    OutputFormat format = OutputFormat::text;
};

/// Runs one subcommand; `exit_status` of the result is 0, 1 or 2.
Report run(const Options& options, const ProblemFile& problem);

/// Parses arguments (program name first), reads the problem, writes the report; returns the exit status.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bforge

#endif
