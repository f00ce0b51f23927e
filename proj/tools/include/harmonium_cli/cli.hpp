#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "harmonium/budget.hpp"
#include "harmonium/graph.hpp"

namespace harmonium::cli {

enum class Command { count, fit, reciprocity, regions };
enum class OutputFormat { text, json };

struct MRange {
  std::int64_t first = 1;
  std::int64_t last = 1;
};

/// Parses "5" or "2..7".
MRange parse_m_range(std::string_view text);

struct RunConfig {
  Command command = Command::count;
  std::optional<Family> family;
  std::optional<int> n;
  std::optional<std::string> file;
  std::optional<MRange> m;
  std::optional<std::int64_t> period_cap;
  Budget budget = Budget::from_environment();
  unsigned workers = 1;
  OutputFormat format = OutputFormat::text;
  std::optional<std::string> out;
  std::optional<std::int64_t> t_max;
  bool stanley = false;
  bool count_nonempty = false;
  bool orbit_identity = false;
  bool verify_vertices = false;
};

/// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kResourceLimit = 3;

int cmd_count(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_fit(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_reciprocity(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_regions(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Validates the config, opens --out if given, dispatches, and maps library
/// exceptions to exit statuses.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line, argv[0] included.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace harmonium::cli
