#ifndef SDOM_SCENARIO_HPP
#define SDOM_SCENARIO_HPP

#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdom {

struct invalid_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct invalid_order : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct unsupported_order : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline constexpr double kProbSumTol = 1e-12;

// Discrete random variable: n outcomes with probabilities.
// Immutable after construction; all operations on it are pure.
class ScenarioVector {
public:
    ScenarioVector(std::vector<double> outcomes, std::vector<double> probabilities);

    // Equiprobable outcomes.
    static ScenarioVector equiprobable(std::vector<double> outcomes);

    const std::vector<double>& outcomes() const { return outcomes_; }
    const std::vector<double>& probabilities() const { return probabilities_; }
    std::size_t size() const { return outcomes_.size(); }

private:
    std::vector<double> outcomes_;
    std::vector<double> probabilities_;
};

// n x d return matrix; columns are assets, rows are scenarios sharing one
// probability vector. Row-major storage.
class ScenarioMatrix {
public:
    ScenarioMatrix(std::vector<double> returns, std::size_t n, std::size_t d,
                   std::vector<std::string> asset_names,
                   std::vector<double> probabilities);

    static ScenarioMatrix equiprobable(std::vector<double> returns, std::size_t n,
                                       std::size_t d,
                                       std::vector<std::string> asset_names);

    std::size_t scenarios() const { return n_; }
    std::size_t assets() const { return d_; }
    const std::vector<std::string>& asset_names() const { return names_; }
    const std::vector<double>& probabilities() const { return probabilities_; }
    const std::vector<double>& data() const { return returns_; }

    double at(std::size_t i, std::size_t j) const { return returns_[i * d_ + j]; }
    std::span<const double> row(std::size_t i) const {
        return {returns_.data() + i * d_, d_};
    }
    ScenarioVector column(std::size_t j) const;

private:
    std::vector<double> returns_;
    std::size_t n_, d_;
    std::vector<std::string> names_;
    std::vector<double> probabilities_;
};

// Long-only fully-invested weights (simplex point).
class PortfolioWeights {
public:
    explicit PortfolioWeights(std::vector<double> weights);
    static PortfolioWeights uniform(std::size_t d);

    const std::vector<double>& values() const { return weights_; }
    std::size_t size() const { return weights_.size(); }
    double operator[](std::size_t j) const { return weights_[j]; }

private:
    std::vector<double> weights_;
};

// Stochastic dominance order p on the ≼^(p) scale, p ∈ [1, ∞].
// The partial-moment/norm machinery works with the exponent p−1; the
// correspondence is stored here once so call sites never re-derive it.
class Order {
public:
    explicit Order(double p);
    static Order infinite();

    bool is_infinite() const { return !std::isfinite(p_); }
    double p() const { return p_; }
    // Exponent of the norm/gap pairing: ≼^(p) <=> the (p−1)-norm inequality.
    double norm_exponent() const {
        return is_infinite() ? std::numeric_limits<double>::infinity() : p_ - 1.0;
    }

private:
    double p_;
};

// E(t−X)_+^q with the 0^0 = 0 convention, so q = 0 yields P(X < t).
double upper_partial_moment(const ScenarioVector& v, double t, double q);

// (E(t−X)_+^q)^{1/q} for finite q ≥ 1; for q = ∞, max(0, t − essinf X).
double partial_moment_norm(const ScenarioVector& v, double t, double q);

double essinf(const ScenarioVector& v);
double esssup(const ScenarioVector& v);

ScenarioVector portfolio_returns(const ScenarioMatrix& m, const PortfolioWeights& x);
ScenarioVector equal_weight_benchmark(const ScenarioMatrix& m);

}  // namespace sdom

#endif
