#include "harmonium/regions.hpp"

#include <algorithm>
#include <map>

#include "coloring_walk.hpp"
#include "harmonium/error.hpp"
#include "harmonium/starfast.hpp"

namespace harmonium {

namespace {

// The region matrices are integer; keep an int64 copy for enumeration.
std::vector<std::vector<std::int64_t>> integer_rows(const RegionSystem& sys) {
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& row : sys.matrix()) {
    auto& out = rows.emplace_back();
    for (const auto& q : row) {
      if (!is_integer(q) || !q.get_num().fits_slong_p()) throw DomainError("region matrix is not a small integer matrix");
      out.push_back(q.get_num().get_si());
    }
  }
  return rows;
}

// Maintains A*y for a square integer matrix and the number of rows whose
// value is not strictly negative.
class RowTracker {
 public:
  explicit RowTracker(std::vector<std::vector<std::int64_t>> rows)
      : rows_(std::move(rows)), value_(rows_.size(), 0) {}

  void reset(const std::vector<int>& y) {
    violations_ = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::int64_t v = 0;
      for (std::size_t c = 0; c < y.size(); ++c) v += rows_[r][c] * y[c];
      value_[r] = v;
      violations_ += v >= 0;
    }
  }

  void shift(std::size_t c, int delta) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const std::int64_t a = rows_[r][c];
      if (a == 0) continue;
      violations_ -= value_[r] >= 0;
      value_[r] += a * delta;
      violations_ += value_[r] >= 0;
    }
  }

  bool inside() const noexcept { return violations_ == 0; }

 private:
  std::vector<std::vector<std::int64_t>> rows_;
  std::vector<std::int64_t> value_;
  int violations_ = 0;
};

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

std::vector<RationalRow> RegionSystem::constraint_rows() const {
  const std::size_t n = dimension();
  std::vector<RationalRow> rows = matrix_;
  for (int sign : {1, -1}) {
    for (std::size_t i = 0; i < n; ++i) {
      RationalRow r(n);
      r[i] = sign;
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

std::vector<Rational> RegionSystem::constraint_bounds() const {
  const std::size_t n = dimension();
  std::vector<Rational> b(3 * n);
  std::fill(b.begin() + static_cast<std::ptrdiff_t>(n), b.begin() + static_cast<std::ptrdiff_t>(2 * n), Rational(1));
  return b;
}

RegionSystem region_system(const Graph& g, const VertexOrientation& eps) {
  if (eps.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw DomainError("orientation length differs from vertex count");
  }
  if (!eps.is_nonconstant()) {
    throw DomainError("empty region: constant orientations select the positive or negative orthant");
  }
  const IntegerMatrix l = laplacian(g);
  std::vector<RationalRow> rows(l.rows(), RationalRow(l.cols()));
  for (std::size_t r = 0; r < l.rows(); ++r) {
    for (std::size_t c = 0; c < l.cols(); ++c) rows[r][c] = Rational(l(r, c) * eps.signs[r]);
  }
  return RegionSystem(eps, std::move(rows));
}

BigInt count_region_points(const RegionSystem& sys, std::int64_t t, const Budget& budget) {
  if (t < 1) throw DomainError("dilation must be at least 1");
  if (t > 1'000'000) throw DomainError("dilation too large for enumeration");
  const std::size_t n = sys.dimension();
  if (t == 1) return 0;
  budget.require(power(t - 1, static_cast<unsigned long>(n)), "region lattice points");
  const auto rows = integer_rows(sys);
  RowTracker tracker(rows);
  std::uint64_t count = 0;
  const int hi = static_cast<int>(t - 1);
  detail::walk_box(n, 1, hi, 1, hi, tracker,
                   [&](const std::vector<int>&, const RowTracker& tr) { count += tr.inside(); });
  return BigInt(static_cast<unsigned long>(count));
}

NonemptyRegionReport count_nonempty_regions(const Graph& g, std::int64_t max_dilation, const Budget& budget) {
  if (!g.is_connected()) throw DomainError("region search needs a connected graph");
  const int n = g.vertex_count();
  const auto orientations = nonconstant_vertex_orientations(n);
  std::map<VertexOrientation, RegionWitness> found;

  // One pass per dilation classifies every interior point by the sign
  // pattern of L y, which names the unique region containing it.
  for (std::int64_t t = 2; t <= max_dilation && found.size() < orientations.size(); ++t) {
    budget.require(power(t - 1, static_cast<unsigned long>(n)), "region witness search");
    detail::DefectTracker tracker(g);
    const int hi = static_cast<int>(t - 1);
    VertexOrientation eps;
    eps.signs.resize(static_cast<std::size_t>(n));
    detail::walk_box(static_cast<std::size_t>(n), 1, hi, 1, hi, tracker,
                     [&](const std::vector<int>& y, const detail::DefectTracker& tr) {
                       if (tr.zeros() != 0) return;
                       for (std::size_t v = 0; v < y.size(); ++v) eps.signs[v] = tr.defect()[v] < 0 ? 1 : -1;
                       if (found.count(eps)) return;
                       RationalPoint p;
                       for (int yi : y) p.push_back(make_rational(yi, BigInt(static_cast<long>(t))));
                       found.emplace(eps, RegionWitness{eps, std::move(p), t});
                     });
  }

  NonemptyRegionReport report;
  for (const auto& eps : orientations) {
    auto it = found.find(eps);
    if (it == found.end()) {
      report.unresolved.push_back(eps);
    } else {
      report.witnesses.push_back(it->second);
    }
  }
  report.found = report.witnesses.size();
  return report;
}

VertexOrientation star_region_orientation(int n, int j) {
  if (n < 3 || j < 1 || j > n - 1) throw DomainError("star region P_n^j needs n >= 3 and 1 <= j <= n-1");
  VertexOrientation eps;
  eps.signs.assign(static_cast<std::size_t>(n), 1);
  for (int v = 0; v < j; ++v) eps.signs[static_cast<std::size_t>(v)] = -1;
  return eps;
}

OrbitIdentityReport star_orbit_identity(int n, std::int64_t t_max, const Budget& budget) {
  if (n < 3) throw DomainError("orbit identity needs n >= 3");
  if (t_max < 1) throw DomainError("t_max must be at least 1");
  const Graph star = family(Family::star, n);
  OrbitIdentityReport report;
  report.n = n;
  report.t_max = t_max;

  std::vector<RegionSystem> representatives;
  for (int j = 1; j <= n - 1; ++j) representatives.push_back(region_system(star, star_region_orientation(n, j)));
  for (std::int64_t t = 1; t <= t_max; ++t) {
    BigInt a = 0;
    for (int j = 1; j <= n - 1; ++j) {
      a += binomial(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(j - 1)) *
           count_region_points(representatives[static_cast<std::size_t>(j - 1)], t, budget);
    }
    report.region_side.push_back(2 * a);
  }
  report.star_counts.push_back(0);  // no colorings with an empty palette
  for (std::int64_t m = 1; m <= t_max; ++m) report.star_counts.push_back(count_star(n, m));

  for (int offset : {0, 1}) {
    bool holds = true;
    for (std::int64_t t = 1; t <= t_max && holds; ++t) {
      const std::int64_t m = t - 1 + offset;
      if (m > t_max) break;
      holds = report.region_side[static_cast<std::size_t>(t - 1)] == report.star_counts[static_cast<std::size_t>(m)];
    }
    if (holds) report.consistent_offsets.push_back(offset);
  }
  if (report.consistent_offsets.empty()) throw Error("orbit identity violated");
  return report;
}

VertexCheck verify_vertex(const RegionSystem& sys, const RationalPoint& p) {
  const std::size_t n = sys.dimension();
  if (p.size() != n) throw DomainError("point dimension differs from the region");
  const auto rows = sys.constraint_rows();
  const auto bounds = sys.constraint_bounds();
  std::vector<RationalRow> active;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Rational lhs = 0;
    for (std::size_t c = 0; c < n; ++c) lhs += rows[r][c] * p[c];
    if (lhs > bounds[r]) return {VertexVerdict::infeasible, 0};
    if (lhs == bounds[r]) active.push_back(rows[r]);
  }
  const std::size_t rank = exact_rank(std::move(active));
  return {rank == n ? VertexVerdict::vertex : VertexVerdict::feasible_not_vertex, rank};
}

std::vector<RationalPoint> star_listed_vertices(int n) {
  if (n < 3) throw DomainError("the listed vertices need n >= 3");
  std::vector<RationalPoint> points;
  for (int i = 0; i <= n - 2; ++i) {
    const Rational q = make_rational(1, n - 1 - i);
    RationalPoint v(static_cast<std::size_t>(n), Rational(0));
    v[0] = q;
    v[1] = 1;
    for (int k = 0; k < i; ++k) v[static_cast<std::size_t>(2 + k)] = q;
    points.push_back(std::move(v));
  }
  return points;
}

std::string_view to_string(VertexVerdict v) {
  switch (v) {
    case VertexVerdict::vertex: return "vertex";
    case VertexVerdict::feasible_not_vertex: return "feasible-not-vertex";
    case VertexVerdict::infeasible: return "infeasible";
  }
  return "?";
}

}  // namespace harmonium
