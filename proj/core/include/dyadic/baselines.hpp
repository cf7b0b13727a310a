#pragma once

#include <cstddef>
#include <utility>
#include <vector>

// Reference algorithms the dyadic functions are compared against. These are
// deliberately kept out of the table-free core.

namespace dyadic::baselines {

/// Maclaurin series of cos with `terms` terms, by Horner's rule in x^2.
/// Intended for x in [0, pi/2]; terms in [1, 20].
double taylor_cos(double x, int terms);

/// Elementary angles atan(2^-i) and the cumulative gain correction
/// prod 1/sqrt(1 + 2^-2i) for each prefix length.
class CordicTable {
 public:
  static constexpr int kMaxIterations = 60;

  explicit CordicTable(int iterations = kMaxIterations);

  int size() const noexcept { return static_cast<int>(angles_.size()); }
  const std::vector<double>& angles() const noexcept { return angles_; }
  /// Gain correction for the first `iterations` entries.
  double gain(int iterations) const;
  /// Storage held by the table, in bytes.
  std::size_t bytes() const noexcept {
    return (angles_.size() + gains_.size()) * sizeof(double);
  }

 private:
  std::vector<double> angles_;
  std::vector<double> gains_;
};

/// Process-wide table with kMaxIterations entries, built on first use.
const CordicTable& default_cordic_table();

/// Rotation-mode CORDIC: (cos theta, sin theta) for theta in [0, pi/2].
/// iterations in [1, 60].
std::pair<double, double> cordic_rotate(double theta, int iterations,
                                        const CordicTable& table = default_cordic_table());

/// Vectoring-mode CORDIC: atan(v) in radians for v >= 0.
double cordic_atan(double v, int iterations,
                   const CordicTable& table = default_cordic_table());

}  // namespace dyadic::baselines
