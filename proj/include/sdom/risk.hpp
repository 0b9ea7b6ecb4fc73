#ifndef SDOM_RISK_HPP
#define SDOM_RISK_HPP

#include <iosfwd>
#include <vector>

#include "sdom/dominance.hpp"
#include "sdom/scenario.hpp"

namespace sdom {

// One evaluation of R_beta(Y) = inf_t t + (1/(1−beta))·‖(Y−t)_+‖_q.
struct RiskEvaluation {
    double beta = 0.0;
    double value = 0.0;
    double minimizer_t = 0.0;  // t_Y(beta), in [essinf Y, esssup Y]
    double order_q = 1.0;      // norm exponent used inside the tail norm
};

// Crossing levels of the minimizer curves t_{−X}(·), t_{−Y}(·).
// betas: crossings where t_{−X} passes t_{−Y} from above; gammas: from below.
struct CriticalLevels {
    std::vector<double> betas;
    std::vector<double> gammas;
    bool degenerate = false;  // curves coincide over the whole scan range
};

// q >= 1 or q = ∞. q = 1 uses the closed-form AVaR (sorted tail average);
// q > 1 minimizes the convex objective by bisection on its derivative.
RiskEvaluation risk_measure(const ScenarioVector& Y, double beta, double q);

// dR_beta/dbeta = (R_beta(Y) − t_Y(beta)) / (1 − beta).
double risk_derivative(const ScenarioVector& Y, double beta, double q);

// t_Y(beta) per beta; betas must be sorted ascending, each in (0,1).
std::vector<double> minimizer_curve(const ScenarioVector& Y, double q,
                                    const std::vector<double>& betas);
namespace serial {
std::vector<double> minimizer_curve(const ScenarioVector& Y, double q,
                                    const std::vector<double>& betas);
}

// Scans beta over (delta, 1−delta), log-dense near 1, brackets the sign
// changes of t_{−X}(beta) − t_{−Y}(beta) and classifies each crossing.
// Zero plateaus collapse to a single crossing at the plateau's left edge.
CriticalLevels critical_risk_levels(const ScenarioVector& X, const ScenarioVector& Y,
                                    double q, int scan_size = 512);

// Dual verification path: benchmark ≼^(order) base iff
// R_beta(−benchmark) >= R_beta(−base) for all beta; checked at the critical
// levels plus the scan endpoints. Requires finite order.p >= 2 (q >= 1).
VerificationReport verify_dominance_risk(const ScenarioVector& base,
                                         const ScenarioVector& benchmark,
                                         const Order& order, double tolerance = 1e-9,
                                         int scan_size = 512);

// CSV (beta, R_beta, t_of_beta) over the given betas.
void export_risk_curve(std::ostream& os, const ScenarioVector& Y, double q,
                       const std::vector<double>& betas);

}  // namespace sdom

#endif
