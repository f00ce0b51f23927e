#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "harmonium/budget.hpp"
#include "harmonium/graph.hpp"
#include "harmonium/matrix.hpp"

namespace harmonium {

using RationalPoint = std::vector<Rational>;

/// One region of the Laplacian arrangement inside the unit cube:
///   D(eps) L x < 0,  0 < x < 1.
class RegionSystem {
 public:
  const VertexOrientation& orientation() const noexcept { return orientation_; }
  std::size_t dimension() const noexcept { return matrix_.size(); }
  /// D(eps) L, one row per vertex.
  const std::vector<RationalRow>& matrix() const noexcept { return matrix_; }

  /// Full system A x < b in the layout D(eps)L / I / -I, with right-hand
  /// side 0 / 1 / 0 (3n rows).
  std::vector<RationalRow> constraint_rows() const;
  std::vector<Rational> constraint_bounds() const;

 private:
  friend RegionSystem region_system(const Graph& g, const VertexOrientation& eps);
  RegionSystem(VertexOrientation eps, std::vector<RationalRow> matrix)
      : orientation_(std::move(eps)), matrix_(std::move(matrix)) {}

  VertexOrientation orientation_;
  std::vector<RationalRow> matrix_;
};

/// Throws DomainError for a constant orientation: the positive and negative
/// orthants never meet the image of L, so those regions are empty.
RegionSystem region_system(const Graph& g, const VertexOrientation& eps);

/// Points of t^-1 Z^n strictly inside the cube and the region, i.e. integer
/// y in {1..t-1}^n with eps_v (L y)_v < 0 for every v. Requires t >= 1.
BigInt count_region_points(const RegionSystem& sys, std::int64_t t, const Budget& budget = Budget::from_environment());

struct RegionWitness {
  VertexOrientation orientation;
  RationalPoint point;
  std::int64_t dilation;
};

struct NonemptyRegionReport {
  std::size_t found = 0;
  std::vector<RegionWitness> witnesses;
  /// No interior point seen up to the search bound; not a proof of emptiness.
  std::vector<VertexOrientation> unresolved;
};

/// Searches dilations t = 2..max_dilation for an interior witness of every
/// nonconstant orientation. Requires a connected graph.
NonemptyRegionReport count_nonempty_regions(const Graph& g, std::int64_t max_dilation,
                                            const Budget& budget = Budget::from_environment());

/// Orientation of the region P_n^j of the star: -1 on the centre and on
/// the first j - 1 leaves, +1 elsewhere. Requires 1 <= j <= n - 1.
VertexOrientation star_region_orientation(int n, int j);

struct OrbitIdentityReport {
  int n = 0;
  std::int64_t t_max = 0;
  /// region_side[t - 1] = 2 * sum_j C(n-1, j-1) * #points(P_n^j, t).
  std::vector<BigInt> region_side;
  /// star_counts[m] = hbar(m) for m = 0..t_max.
  std::vector<BigInt> star_counts;
  /// Offsets d in {0, 1} with region_side(t) == hbar(t - 1 + d) for all tested t.
  std::vector<int> consistent_offsets;
};

/// Checks the weighted-orbit decomposition of the star count against
/// count_star. Throws Error("orbit identity violated") if neither offset
/// holds.
OrbitIdentityReport star_orbit_identity(int n, std::int64_t t_max,
                                        const Budget& budget = Budget::from_environment());

enum class VertexVerdict { vertex, feasible_not_vertex, infeasible };

struct VertexCheck {
  VertexVerdict verdict = VertexVerdict::infeasible;
  /// Rank of the tight rows of the closed system (0 when infeasible).
  std::size_t active_rank = 0;
};

/// A point is a vertex of the closed region iff it satisfies every weak
/// inequality and the tight rows have full rank n.
VertexCheck verify_vertex(const RegionSystem& sys, const RationalPoint& p);

/// v_i = (1/(n-1-i), 1, 1/(n-1-i) x i, 0, ..., 0) for i = 0..n-2; the last
/// one is the all-ones vector. Claimed vertices of P_n^2. Requires n >= 3.
std::vector<RationalPoint> star_listed_vertices(int n);

std::string_view to_string(VertexVerdict v);

}  // namespace harmonium
