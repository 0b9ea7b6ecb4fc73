#ifndef SDOM_DOMINANCE_HPP
#define SDOM_DOMINANCE_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sdom/scenario.hpp"

namespace sdom {

// How a verdict was reached.
enum class VerifyMethod { DerivativeIntersection, JumpPoints, EssInf, DenseGrid, RiskLevels };

std::string to_string(VerifyMethod m);

struct TestPoint {
    double t;    // threshold t (norm paths) or risk level beta (risk path)
    double gap;  // violation value at that point; <= tolerance means fine
};

struct VerificationReport {
    bool dominates = false;
    VerifyMethod method = VerifyMethod::DenseGrid;
    double tolerance = 0.0;
    std::vector<TestPoint> test_points;
    double worst_violation = 0.0;  // max over test points of the gap, clipped at 0
    bool degenerate = false;       // coincident-derivative plateau was encountered

    nlohmann::json to_json() const;
};

// g(t) = E(t−base)_+^q − E(t−benchmark)_+^q with q = order.norm_exponent().
// g <= 0 everywhere is exactly "benchmark ≼^(order) base".
class GapFunction {
public:
    GapFunction(ScenarioVector base, ScenarioVector benchmark, Order order);

    double evaluate(double t) const;
    // d/dt of evaluate: q * (gap at exponent q−1). Finite q >= 1 only.
    double evaluate_dt(double t) const;

    const ScenarioVector& base() const { return base_; }
    const ScenarioVector& benchmark() const { return benchmark_; }
    const Order& order() const { return order_; }

private:
    ScenarioVector base_;
    ScenarioVector benchmark_;
    Order order_;
};

// Raw gap at one threshold, E(t−base)_+^q − E(t−benchmark)_+^q.
double gap(double t, const ScenarioVector& base, const ScenarioVector& benchmark, double q);

// Thresholds where d/dt‖(t−base)_+‖_{p−1} and d/dt‖(t−benchmark)_+‖_{p−1}
// intersect, located by scanning grid_size points and refining each bracket
// by bisection. Requires 2 < order.p < ∞ (norm exponent > 1); the interval is
// [essinf−margin, esssup+margin] of the benchmark. Tangential touches and
// coincidence plateaus are kept (endpoints + midpoint).
std::vector<double> critical_test_points(const ScenarioVector& base,
                                         const ScenarioVector& benchmark,
                                         const Order& order, int grid_size = 4096);

// Sorted distinct benchmark outcomes — the complete SSD test set.
std::vector<double> jump_test_points(const ScenarioVector& benchmark);

// Decides benchmark ≼^(order) base via the finite test-point reduction:
// p = ∞ -> essinf comparison; p = 2 (SSD) -> jump points; p > 2 -> derivative
// intersections; p = 1 (FSD) -> jump points on the q=0 gap; p in (1,2) has no
// finite reduction and falls back to the dense grid.
VerificationReport verify_dominance(const ScenarioVector& base,
                                    const ScenarioVector& benchmark, const Order& order,
                                    double tolerance = 1e-9);

// Brute-force oracle: checks the gap on a uniform grid over the benchmark's
// support extended by one step on each side.
VerificationReport verify_dense_grid(const ScenarioVector& base,
                                     const ScenarioVector& benchmark, const Order& order,
                                     int grid_size = 100000, double tolerance = 1e-9);

// Two-column CSV (t, g(t)) over a dense grid, for plotting the gap curve.
void export_gap_curve(std::ostream& os, const ScenarioVector& base,
                      const ScenarioVector& benchmark, const Order& order,
                      int grid_size = 2001);

}  // namespace sdom

#endif
