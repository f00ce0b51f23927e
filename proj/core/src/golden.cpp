#include "harmonium/golden.hpp"

#include <nlohmann/json.hpp>

#include "harmonium/error.hpp"

namespace harmonium {

namespace detail {
extern const std::string_view kGoldenTablesJson;
}

namespace {

using nlohmann::json;

// {"scale": s, "shift": k, "coefficients": [c0, c1, ...]} = s z^k sum c_i z^i
Polynomial parse_numerator(const json& j) {
  const BigInt scale = j.at("scale").get<long>();
  const auto shift = j.at("shift").get<std::size_t>();
  std::vector<Rational> c(shift);
  for (const auto& x : j.at("coefficients")) c.emplace_back(BigInt(x.get<long>()) * scale);
  return Polynomial(std::move(c));
}

std::vector<DenominatorFactor> parse_denominator(const json& j) {
  std::vector<DenominatorFactor> factors;
  for (const auto& f : j) factors.push_back({f.at(0).get<std::int64_t>(), f.at(1).get<int>()});
  return factors;
}

}  // namespace

GoldenTable parse_golden_tables(std::string_view json_text) {
  GoldenTable table;
  try {
    const json root = json::parse(json_text);
    for (const auto& [name, entry] : root.items()) {
      GoldenEntry g;
      g.name = name;
      const auto& red = entry.at("reduced");
      g.reduced = RationalGeneratingFunction(parse_numerator(red.at("numerator")),
                                             parse_denominator(red.at("denominator")));
      const auto& unred = entry.at("unreduced");
      const auto factors = parse_denominator(unred.at("denominator"));
      if (factors.size() != 1) throw DomainError(name + ": unreduced denominator must be a single (1 - z^p)^e");
      g.unreduced_denominator = factors.front();
      if (unred.contains("numerator")) {
        g.unreduced = RationalGeneratingFunction(parse_numerator(unred.at("numerator")), factors);
      }
      table.emplace(name, std::move(g));
    }
  } catch (const json::exception& e) {
    throw DomainError(std::string("malformed golden table: ") + e.what());
  }
  return table;
}

const GoldenTable& golden_tables() {
  static const GoldenTable table = parse_golden_tables(detail::kGoldenTablesJson);
  return table;
}

std::string golden_key(Family f, int n) { return std::string(to_string(f)) + "_" + std::to_string(n); }

const GoldenEntry* find_golden(Family f, int n) {
  const auto& table = golden_tables();
  const auto it = table.find(golden_key(f, n));
  return it == table.end() ? nullptr : &it->second;
}

}  // namespace harmonium
