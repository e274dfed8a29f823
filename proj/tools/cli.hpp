// Copyright 2026 The tkmotive Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TKMOTIVE_TOOLS_CLI_HPP
#define TKMOTIVE_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tkmotive::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Runs the tool on args (args[0] is the program name). Exit codes: 0 on
/// success, 1 on any verification mismatch, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tkmotive::cli

#endif  // TKMOTIVE_TOOLS_CLI_HPP
