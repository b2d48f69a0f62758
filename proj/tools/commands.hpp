#pragma once

#include <CLI11.hpp>

namespace sgb::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitThreshold = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

/// Registers every subcommand on `app`. The returned callback runs whichever
/// subcommand was selected after parsing and yields its exit code.
std::function<int()> register_commands(CLI::App& app);

}  // namespace sgb::cli
