#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace footsort::cli {

enum class Format { kText, kJson };
enum class OracleMode { kOrders, kSimulate, kBoth };

// Exit statuses shared by every subcommand.
inline constexpr int kExitSortable = 0;
inline constexpr int kExitNotSortable = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDisagree = 3;

// Longest NOT-SORTABLE input for which `decide` searches a minimal witness.
inline constexpr std::size_t kWitnessLengthLimit = 200;

struct BenchConfig {
  std::vector<std::size_t> sizes = {1000, 10000, 100000, 1000000};
  std::uint64_t seed = 1;
};

int cmd_decide(const std::string& input, Format format, std::ostream& out);
int cmd_oracle(const std::string& input, OracleMode mode, Format format, std::ostream& out);
int cmd_verify(std::size_t max_length, unsigned shards, Format format, std::ostream& out);
int cmd_enumerate(std::size_t length, bool two_bounded, std::size_t limit, Format format, std::ostream& out);
int cmd_bench(const BenchConfig& config, Format format, std::ostream& out);

// Full command line: parses `args` (args[0] is the program name), reads
// standard input from `in` when no ordering is given, and dispatches.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace footsort::cli
