#include "harmonium/fit.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "harmonium/error.hpp"
#include "harmonium/parallel.hpp"
#include "harmonium/starfast.hpp"

namespace harmonium {

CountOracle brute_force_oracle(const Graph& g, const EnumerationOptions& opts) {
  CountOracle oracle;
  oracle.count = [g, opts](std::int64_t m) {
    EnumerationOptions serial = opts;
    serial.workers = 1;
    return count_nowhere_harmonic(g, m, serial);
  };
  oracle.degree = g.vertex_count();
  oracle.vertex_count = g.vertex_count();
  oracle.connected = g.is_connected();
  oracle.name = "graph";
  return oracle;
}

CountOracle star_oracle(int n) {
  if (n < 2) throw DomainError("star graph needs n >= 2");
  CountOracle oracle;
  oracle.count = [n](std::int64_t m) { return count_star(n, m); };
  oracle.degree = n;
  oracle.vertex_count = n;
  oracle.connected = true;
  oracle.name = "star_" + std::to_string(n);
  return oracle;
}

std::vector<std::int64_t> default_period_candidates(int n, std::optional<std::int64_t> cap) {
  if (n < 2) throw DomainError("period candidates need n >= 2");
  std::int64_t l = 1;
  for (std::int64_t k = 2; k <= n - 1; ++k) l = std::lcm(l, k);
  const std::int64_t limit = cap.value_or(4 * l);
  std::vector<std::int64_t> candidates;
  for (std::int64_t d = 1; d <= std::min(l, limit); ++d) {
    if (l % d == 0) candidates.push_back(d);
  }
  for (std::int64_t k = 2; k * l <= limit; ++k) candidates.push_back(k * l);
  return candidates;
}

namespace {

/// Determinant by fraction-free elimination; entries stay integral.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a) {
  const std::size_t k = a.size();
  BigInt previous = 1;
  int sign = 1;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (a[i][i] == 0) {
      std::size_t swap = i + 1;
      while (swap < k && a[swap][i] == 0) ++swap;
      if (swap == k) return 0;
      std::swap(a[i], a[swap]);
      sign = -sign;
    }
    for (std::size_t r = i + 1; r < k; ++r) {
      for (std::size_t c = i + 1; c < k; ++c) {
        a[r][c] = (a[r][c] * a[i][i] - a[r][i] * a[i][c]) / previous;
      }
    }
    previous = a[i][i];
  }
  return sign * a[k - 1][k - 1];
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    out.push_back(pick);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return out;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

std::int64_t laplacian_minor_lcm(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  if (n < 1 || n > 12) throw DomainError("minor enumeration needs 1 <= n <= 12");
  const IntegerMatrix l = laplacian(g);
  BigInt result = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    const auto choices = subsets(n, k);
    for (const auto& rows : choices) {
      for (const auto& cols : choices) {
        std::vector<std::vector<BigInt>> a(k, std::vector<BigInt>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) a[i][j] = l(rows[i], cols[j]);
        const BigInt d = abs(bareiss_determinant(std::move(a)));
        if (d != 0) mpz_lcm(result.get_mpz_t(), result.get_mpz_t(), d.get_mpz_t());
      }
    }
  }
  if (!result.fits_slong_p()) throw DomainError("minor lcm exceeds 64 bits");
  return result.get_si();
}

std::vector<std::int64_t> minor_period_candidates(const Graph& g, std::optional<std::int64_t> cap) {
  const std::int64_t bound = laplacian_minor_lcm(g);
  std::vector<std::int64_t> candidates;
  for (std::int64_t d = 1; d <= bound; ++d) {
    if (bound % d == 0 && (!cap || d <= *cap)) candidates.push_back(d);
  }
  return candidates;
}

namespace {

class SampleCache {
 public:
  SampleCache(const CountOracle& oracle, unsigned workers) : oracle_(oracle), workers_(workers) {}

  void ensure(std::int64_t count) {
    const auto have = static_cast<std::int64_t>(samples_.size());
    if (count <= have) return;
    auto fresh = parallel_map<BigInt>(static_cast<std::size_t>(count - have), workers_,
                                      [&](std::size_t i) { return oracle_.count(have + 1 + static_cast<std::int64_t>(i)); });
    for (auto& v : fresh) samples_.push_back(std::move(v));
  }

  const BigInt& at(std::int64_t m) const { return samples_[static_cast<std::size_t>(m - 1)]; }
  const std::vector<BigInt>& all() const noexcept { return samples_; }

 private:
  const CountOracle& oracle_;
  unsigned workers_;
  std::vector<BigInt> samples_;
};

}  // namespace

FitReport fit_quasipolynomial(const CountOracle& oracle, int degree,
                              std::span<const std::int64_t> period_candidates,
                              const FitOptions& options) {
  if (period_candidates.empty()) throw DomainError("period candidate list is empty");
  if (degree < 0) throw DomainError("degree must be nonnegative");
  SampleCache cache(oracle, options.workers);
  std::vector<std::int64_t> rejected;
  Rational largest_residual = 0;
  const std::int64_t per_class = degree + 3;

  for (std::int64_t p : period_candidates) {
    if (p < 1) throw DomainError("period candidates must be positive");
    cache.ensure(p * per_class);

    std::vector<Polynomial> constituents;
    constituents.reserve(static_cast<std::size_t>(p));
    bool accepted = true;
    for (std::int64_t r = 0; r < p && accepted; ++r) {
      const std::int64_t first = r == 0 ? p : r;
      std::vector<InterpolationNode> nodes;
      for (int j = 0; j <= degree; ++j) {
        const std::int64_t m = first + j * p;
        nodes.push_back({m, Rational(cache.at(m))});
      }
      Polynomial poly = interpolate(nodes);
      for (int j = degree + 1; j < per_class; ++j) {
        const std::int64_t m = first + j * p;
        const Rational residual = abs(poly(m) - Rational(cache.at(m)));
        if (residual != 0) {
          largest_residual = std::max(largest_residual, residual);
          accepted = false;
        }
      }
      constituents.push_back(std::move(poly));
    }
    if (accepted) {
      Quasipolynomial q(std::move(constituents), degree);
      const auto& samples = cache.all();
      for (std::size_t i = 0; i < samples.size() && accepted; ++i) {
        if (q(static_cast<std::int64_t>(i) + 1) != Rational(samples[i])) accepted = false;
      }
      if (accepted) {
        FitReport report{std::move(q), rejected, static_cast<std::int64_t>(samples.size()), true, true,
                         samples, oracle.vertex_count, oracle.connected, oracle.name};
        for (std::int64_t d = 1; d < p; ++d) {
          if (p % d == 0 && std::find(rejected.begin(), rejected.end(), d) == rejected.end()) {
            report.period_minimal_certified = false;
          }
        }
        if (oracle.connected) {
          for (const auto& c : report.quasipolynomial.constituents()) {
            if (c.degree() != degree || c.leading_coefficient() != 1) {
              throw FitError("fitted constituent " + to_string(c) +
                             " is not of degree n with leading coefficient 1");
            }
          }
        }
        return report;
      }
    }
    rejected.push_back(p);
  }

  std::ostringstream os;
  os << "period not found within candidate set {";
  for (std::size_t i = 0; i < period_candidates.size(); ++i) os << (i ? ", " : "") << period_candidates[i];
  os << "}; largest holdout residual " << to_string(largest_residual);
  throw FitError(os.str());
}

Rational evaluate_negative(const FitReport& report, std::int64_t m) {
  if (!report.holdout_verified) throw FitError("fit was not holdout-verified");
  if (m < 1) throw DomainError("evaluate_negative expects a positive m");
  Rational v = report.quasipolynomial(-m);
  if (report.quasipolynomial.degree() % 2 != 0) v = -v;
  if (!is_integer(v)) throw FitError("fit inconsistent with reciprocity integrality");
  return v;
}

RationalGeneratingFunction unreduced_generating_function(const FitReport& report) {
  const auto& q = report.quasipolynomial;
  const std::int64_t terms = q.period() * (q.degree() + 3);
  std::vector<BigInt> counts;
  counts.reserve(static_cast<std::size_t>(terms));
  for (std::int64_t m = 1; m <= terms; ++m) {
    const Rational v = q(m);
    if (!is_integer(v)) throw FitError("fitted quasipolynomial is not integral at m = " + std::to_string(m));
    counts.push_back(v.get_num());
  }
  return gf_from_counts(counts, q.period(), q.degree());
}

StructureCheck check_structure(const FitReport& report) {
  StructureCheck check;
  const auto& q = report.quasipolynomial;
  const int n = q.degree();
  check.degree_exact = std::all_of(q.constituents().begin(), q.constituents().end(),
                                   [n](const Polynomial& c) { return c.degree() == n; });
  check.leading_one = check.degree_exact &&
                      std::all_of(q.constituents().begin(), q.constituents().end(),
                                  [](const Polynomial& c) { return c.leading_coefficient() == 1; });
  check.value_at_minus_one = q(-1);
  if (n % 2 != 0) check.value_at_minus_one = -check.value_at_minus_one;
  check.region_count = power(2, static_cast<unsigned long>(n)) - 2;
  check.regions_match = check.value_at_minus_one == Rational(check.region_count);
  return check;
}

bool divisible_by_two_z_squared(const Polynomial& numerator) {
  const auto& c = numerator.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < 2 && c[i] != 0) return false;
    if (!is_integer(c[i]) || mpz_even_p(c[i].get_num_mpz_t()) == 0) return false;
  }
  return true;
}

}  // namespace harmonium
