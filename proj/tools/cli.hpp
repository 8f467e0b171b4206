#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "schubert/partitions.hpp"

namespace schubert::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kDomain = 3;
inline constexpr int kMismatch = 4;

enum class Format { plain, csv, json };

/// Parses "2,1;3" into {(2,1), (3)}. Throws std::invalid_argument on bad syntax.
std::vector<Partition> parse_partition_list(const std::string& text);

/// Entry point shared by the executable and the tests. Results go to `out`,
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schubert::cli
