#ifndef SDOM_KERNELS_HPP
#define SDOM_KERNELS_HPP

#include <vector>

#include "sdom/scenario.hpp"

namespace sdom {

// Batch kernels for the grid-heavy paths (dense-grid verification, gap-curve
// export). The omp variants parallelize across grid points; outputs are
// elementwise, so parallel and serial results are bitwise identical.

std::vector<double> linspace(double lo, double hi, std::size_t count);

namespace serial {
// g_q(t_i) = E(t_i − base)_+^q − E(t_i − benchmark)_+^q per grid point.
// q = ∞ compares the sup-norm tails max(0, t − essinf ·).
std::vector<double> gap_grid(const ScenarioVector& base, const ScenarioVector& benchmark,
                             double q, const std::vector<double>& ts);
std::vector<double> upm_grid(const ScenarioVector& v, double q,
                             const std::vector<double>& ts);
}  // namespace serial

std::vector<double> gap_grid(const ScenarioVector& base, const ScenarioVector& benchmark,
                             double q, const std::vector<double>& ts);
std::vector<double> upm_grid(const ScenarioVector& v, double q,
                             const std::vector<double>& ts);

}  // namespace sdom

#endif
