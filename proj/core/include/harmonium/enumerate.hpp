#pragma once

#include <cstdint>
#include <vector>

#include "harmonium/budget.hpp"
#include "harmonium/graph.hpp"
#include "harmonium/polynomial.hpp"

namespace harmonium {

/// Labels in 1..palette, one per vertex (index i is vertex i + 1).
class Coloring {
 public:
  /// Throws DomainError if palette < 1 or a label falls outside 1..palette.
  Coloring(std::vector<int> values, int palette);

  const std::vector<int>& values() const noexcept { return values_; }
  int palette() const noexcept { return palette_; }
  std::size_t size() const noexcept { return values_.size(); }
  int operator[](std::size_t i) const { return values_[i]; }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<int> values_;
  int palette_;
};

struct EnumerationOptions {
  Budget budget = Budget::from_environment();
  unsigned workers = 1;
};

/// L*c. Entry v is zero iff c is harmonic at v, i.e. deg(v)*c(v) equals the
/// sum over neighbours; negative means strictly subharmonic.
std::vector<std::int64_t> harmonic_defect(const Graph& g, const Coloring& c);

bool is_nowhere_harmonic(const Graph& g, const Coloring& c);

/// Number of nowhere-harmonic colorings with labels 1..m, by exhaustive
/// enumeration. Requires m >= 1; refuses when m^n exceeds the budget.
BigInt count_nowhere_harmonic(const Graph& g, std::int64_t m, const EnumerationOptions& opts = {});

/// Number of nonconstant vertex orientations compatible with c (weak sub-
/// and superharmonicity): prod_v (harmonic at v ? 2 : 1) minus one for each
/// constant orientation that happens to be compatible. Throws DomainError
/// ("compatibility undefined") if g has an isolated vertex.
BigInt beta(const Graph& g, const Coloring& c);

/// Sum of beta(c) over all colorings with labels 1..m. Requires a connected g.
BigInt reciprocity_rhs(const Graph& g, std::int64_t m, const EnumerationOptions& opts = {});

/// Proper m-colorings by exhaustive enumeration (m >= 0).
BigInt chromatic_count(const Graph& g, std::int64_t m, const EnumerationOptions& opts = {});

/// Chromatic polynomial interpolated through m = 0..n.
Polynomial chromatic_polynomial(const Graph& g, const EnumerationOptions& opts = {});

bool is_acyclic(const Graph& g, const EdgeOrientation& eps);

/// Brute force over all 2^|E| edge orientations.
BigInt count_acyclic_orientations(const Graph& g, const EnumerationOptions& opts = {});

/// Acyclic orientations eps such that every edge {i < j} with c(j) != c(i)
/// is oriented by the sign of c(j) - c(i).
BigInt alpha(const Graph& g, const Coloring& c, const EnumerationOptions& opts = {});

/// Sum of alpha(c) over all colorings with labels 1..m.
BigInt acyclic_reciprocity_rhs(const Graph& g, std::int64_t m, const EnumerationOptions& opts = {});

/// Breadth-first 2-coloring: in each component the smallest vertex gets 1
/// and labels alternate with tree depth. Throws DomainError ("no
/// nowhere-harmonic coloring exists") if some component is a single vertex.
Coloring construct_two_coloring(const Graph& g);

/// c -> (m + 1) - c, the palette form of x -> -x + E.
Coloring involute(const Coloring& c);

}  // namespace harmonium
