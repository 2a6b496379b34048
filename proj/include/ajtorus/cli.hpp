#pragma once

/**
 * @file cli.hpp
 * @brief The commands behind the ajtorus executable.
 *
 * Each command returns its rendered output together with the process exit
 * code, so the front end only parses arguments and prints:
 *     0  success
 *     1  verification mismatch (or a failed check)
 *     2  usage or parse error
 *     3  input outside the scope of the constructions (opposite signs)
 *
 * Jones values can be memoized on disk by pointing AJTORUS_JONES_CACHE at a
 * directory. Each knot gets one file whose first line is "<knot>;<count>",
 * followed by J(1), ..., J(count), one polynomial in t per line.
 */

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "ajtorus/report.hpp"

namespace ajt {

enum ExitCode { kExitOk = 0, kExitMismatch = 1, kExitUsage = 2, kExitOutOfScope = 3 };

enum class Format { Text, Json };

struct CommandResult {
    int exit_code = kExitOk;
    std::string out;
    std::string err;
};

// Runs a command, mapping exceptions to exit codes: OppositeSigns -> 3,
// ParseError / InvalidParams -> 2, any other library error -> 1.
CommandResult run_command(const std::function<CommandResult()>& cmd);

// "lo:hi" with lo <= hi; ParseError otherwise.
std::pair<int, int> parse_window(const std::string& text);

CommandResult cmd_jones(const std::string& knot, long n_max, Format fmt);
CommandResult cmd_apoly(const std::string& knot, Format fmt);
CommandResult cmd_verify(const std::string& knot, const VerifyOptions& opt, Format fmt);
CommandResult cmd_scan(const std::string& knot, int degree, std::optional<std::pair<int, int>> m_window,
                       Format fmt);
// Runs the selected acceptance criteria (all when empty) and compares the
// verify reports stored as <dir>/*.json, if a golden directory is given.
CommandResult cmd_selftest(const std::set<int>& criteria, const std::optional<std::string>& golden_dir);

// Disk cache for Jones values; both are no-ops when the variable is unset.
void load_jones_cache(JonesSequence& seq);
void save_jones_cache(const JonesSequence& seq);

}  // namespace ajt
