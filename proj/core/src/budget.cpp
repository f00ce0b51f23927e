#include "harmonium/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "harmonium/error.hpp"

namespace harmonium {

Budget Budget::from_environment() {
  Budget b;
  if (const char* raw = std::getenv(std::string(kEnvironmentVariable).c_str())) {
    const std::string_view s(raw);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc() && ptr == s.data() + s.size() && value > 0) b.limit = value;
  }
  return b;
}

void Budget::require(const BigInt& work, std::string_view what) const {
  if (work <= BigInt(std::to_string(limit))) return;
  throw ResourceLimitError("instance too large for brute force: " + std::string(what) + " needs " +
                           work.get_str() + " steps, budget is " + std::to_string(limit) +
                           " (raise it with --budget or " + std::string(kEnvironmentVariable) + ")");
}

}  // namespace harmonium
