#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mixcay/chartable.hpp"

namespace mixcay::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDisagreement = 2;

/// Character-table options with the seed taken from CAYLEY_HSPEC_SEED when set.
CharacterTableOptions table_options_from_env();

/// Runs the command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mixcay::cli
