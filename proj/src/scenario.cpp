#include "sdom/scenario.hpp"

#include <algorithm>
#include <numeric>

namespace sdom {

namespace {

void check_finite(const std::vector<double>& xs, const char* what) {
    for (double x : xs) {
        if (!std::isfinite(x)) throw invalid_input(std::string(what) + " must be finite");
    }
}

}  // namespace

ScenarioVector::ScenarioVector(std::vector<double> outcomes,
                               std::vector<double> probabilities)
    : outcomes_(std::move(outcomes)), probabilities_(std::move(probabilities)) {
    if (outcomes_.empty() || outcomes_.size() != probabilities_.size())
        throw invalid_input("ScenarioVector: outcomes/probabilities must have equal length >= 1");
    check_finite(outcomes_, "outcomes");
    double sum = 0.0;
    for (double p : probabilities_) {
        if (!(p >= 0.0)) throw invalid_input("ScenarioVector: probabilities must be >= 0");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw invalid_input("ScenarioVector: probabilities must sum to 1");
    // Renormalize the residual roundoff so downstream sums treat it as exact.
    if (std::abs(sum - 1.0) > kProbSumTol) {
        for (double& p : probabilities_) p /= sum;
    }
}

ScenarioVector ScenarioVector::equiprobable(std::vector<double> outcomes) {
    std::size_t n = outcomes.size();
    if (n == 0) throw invalid_input("ScenarioVector: empty outcomes");
    return ScenarioVector(std::move(outcomes), std::vector<double>(n, 1.0 / double(n)));
}

ScenarioMatrix::ScenarioMatrix(std::vector<double> returns, std::size_t n, std::size_t d,
                               std::vector<std::string> asset_names,
                               std::vector<double> probabilities)
    : returns_(std::move(returns)), n_(n), d_(d), names_(std::move(asset_names)),
      probabilities_(std::move(probabilities)) {
    if (n_ < 1 || d_ < 1 || returns_.size() != n_ * d_)
        throw invalid_input("ScenarioMatrix: size mismatch");
    if (names_.size() != d_) throw invalid_input("ScenarioMatrix: need one name per asset");
    check_finite(returns_, "returns");
    // Column validity (incl. probability checks) is delegated to ScenarioVector.
    ScenarioVector check(std::vector<double>(n_, 0.0), probabilities_);
    probabilities_ = check.probabilities();
}

ScenarioMatrix ScenarioMatrix::equiprobable(std::vector<double> returns, std::size_t n,
                                            std::size_t d,
                                            std::vector<std::string> asset_names) {
    return ScenarioMatrix(std::move(returns), n, d, std::move(asset_names),
                          std::vector<double>(n, 1.0 / double(n)));
}

ScenarioVector ScenarioMatrix::column(std::size_t j) const {
    if (j >= d_) throw invalid_input("ScenarioMatrix::column: index out of range");
    std::vector<double> out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = at(i, j);
    return ScenarioVector(std::move(out), probabilities_);
}

PortfolioWeights::PortfolioWeights(std::vector<double> weights)
    : weights_(std::move(weights)) {
    if (weights_.empty()) throw invalid_input("PortfolioWeights: empty");
    check_finite(weights_, "weights");
    double sum = std::accumulate(weights_.begin(), weights_.end(), 0.0);
    if (std::abs(sum - 1.0) > 1e-9)
        throw invalid_input("PortfolioWeights: weights must sum to 1");
    for (double w : weights_) {
        if (w < -1e-9) throw invalid_input("PortfolioWeights: weights must be >= 0");
    }
}

PortfolioWeights PortfolioWeights::uniform(std::size_t d) {
    if (d == 0) throw invalid_input("PortfolioWeights: d must be >= 1");
    return PortfolioWeights(std::vector<double>(d, 1.0 / double(d)));
}

Order::Order(double p) : p_(p) {
    if (std::isnan(p) || p < 1.0) throw invalid_order("Order: p must be >= 1 or infinity");
}

Order Order::infinite() { return Order(std::numeric_limits<double>::infinity()); }

double upper_partial_moment(const ScenarioVector& v, double t, double q) {
    if (!std::isfinite(t)) throw invalid_input("upper_partial_moment: t must be finite");
    if (!(q >= 0.0)) throw invalid_input("upper_partial_moment: q must be >= 0");
    const auto& xs = v.outcomes();
    const auto& ps = v.probabilities();
    double acc = 0.0;
    if (q == 0.0) {
        // 0^0 = 0 convention: counts strictly-below mass, P(X < t).
        for (std::size_t i = 0; i < xs.size(); ++i)
            if (xs[i] < t) acc += ps[i];
        return acc;
    }
    if (q == 1.0) {
        for (std::size_t i = 0; i < xs.size(); ++i) {
            double z = t - xs[i];
            if (z > 0.0) acc += ps[i] * z;
        }
        return acc;
    }
    if (q == 2.0) {
        for (std::size_t i = 0; i < xs.size(); ++i) {
            double z = t - xs[i];
            if (z > 0.0) acc += ps[i] * z * z;
        }
        return acc;
    }
    if (q == std::floor(q) && q <= 32.0) {
        const int k = int(q);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            double z = t - xs[i];
            if (z > 0.0) {
                double zp = z;
                for (int e = 1; e < k; ++e) zp *= z;
                acc += ps[i] * zp;
            }
        }
        return acc;
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double z = t - xs[i];
        if (z > 0.0) acc += ps[i] * std::pow(z, q);
    }
    return acc;
}

double partial_moment_norm(const ScenarioVector& v, double t, double q) {
    if (std::isinf(q) && q > 0) return std::max(0.0, t - essinf(v));
    if (!(q >= 1.0)) throw invalid_order("partial_moment_norm: q must be >= 1 or infinity");
    if (q == 1.0) return upper_partial_moment(v, t, 1.0);
    double m = upper_partial_moment(v, t, q);
    return m > 0.0 ? std::pow(m, 1.0 / q) : 0.0;
}

double essinf(const ScenarioVector& v) {
    const auto& xs = v.outcomes();
    const auto& ps = v.probabilities();
    double m = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (ps[i] > 0.0) m = std::min(m, xs[i]);
    if (std::isinf(m)) throw invalid_input("essinf: no outcome has positive probability");
    return m;
}

double esssup(const ScenarioVector& v) {
    const auto& xs = v.outcomes();
    const auto& ps = v.probabilities();
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (ps[i] > 0.0) m = std::max(m, xs[i]);
    if (std::isinf(m)) throw invalid_input("esssup: no outcome has positive probability");
    return m;
}

ScenarioVector portfolio_returns(const ScenarioMatrix& m, const PortfolioWeights& x) {
    if (x.size() != m.assets())
        throw invalid_input("portfolio_returns: weight dimension mismatch");
    std::vector<double> out(m.scenarios());
    for (std::size_t i = 0; i < m.scenarios(); ++i) {
        auto row = m.row(i);
        double acc = 0.0;
        for (std::size_t j = 0; j < row.size(); ++j) acc += row[j] * x[j];
        out[i] = acc;
    }
    return ScenarioVector(std::move(out), m.probabilities());
}

ScenarioVector equal_weight_benchmark(const ScenarioMatrix& m) {
    return portfolio_returns(m, PortfolioWeights::uniform(m.assets()));
}

}  // namespace sdom
