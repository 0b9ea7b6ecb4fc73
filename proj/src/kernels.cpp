#include "sdom/kernels.hpp"

#include <cmath>

namespace sdom {

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    if (count < 2) throw invalid_input("linspace: count must be >= 2");
    std::vector<double> ts(count);
    const double h = (hi - lo) / double(count - 1);
    for (std::size_t i = 0; i < count; ++i) ts[i] = lo + h * double(i);
    ts.back() = hi;
    return ts;
}

namespace {

inline double gap_at(const ScenarioVector& base, const ScenarioVector& bench,
                     double q, double t, double ei_base, double ei_bench) {
    if (std::isinf(q)) {
        return std::max(0.0, t - ei_base) - std::max(0.0, t - ei_bench);
    }
    return upper_partial_moment(base, t, q) - upper_partial_moment(bench, t, q);
}

}  // namespace

namespace serial {

std::vector<double> gap_grid(const ScenarioVector& base, const ScenarioVector& benchmark,
                             double q, const std::vector<double>& ts) {
    const double ei_base = essinf(base), ei_bench = essinf(benchmark);
    std::vector<double> out(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i)
        out[i] = gap_at(base, benchmark, q, ts[i], ei_base, ei_bench);
    return out;
}

std::vector<double> upm_grid(const ScenarioVector& v, double q,
                             const std::vector<double>& ts) {
    std::vector<double> out(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i)
        out[i] = upper_partial_moment(v, ts[i], q);
    return out;
}

}  // namespace serial

std::vector<double> gap_grid(const ScenarioVector& base, const ScenarioVector& benchmark,
                             double q, const std::vector<double>& ts) {
    const double ei_base = essinf(base), ei_bench = essinf(benchmark);
    std::vector<double> out(ts.size());
    const std::ptrdiff_t m = std::ptrdiff_t(ts.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < m; ++i)
        out[i] = gap_at(base, benchmark, q, ts[i], ei_base, ei_bench);
    return out;
}

std::vector<double> upm_grid(const ScenarioVector& v, double q,
                             const std::vector<double>& ts) {
    std::vector<double> out(ts.size());
    const std::ptrdiff_t m = std::ptrdiff_t(ts.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < m; ++i)
        out[i] = upper_partial_moment(v, ts[i], q);
    return out;
}

}  // namespace sdom
