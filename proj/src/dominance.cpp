#include "sdom/dominance.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <nlohmann/json.hpp>

#include "sdom/kernels.hpp"
#include "rootscan.hpp"

namespace sdom {

namespace {

// Interval the dominance condition has to be checked on: the benchmark's
// support, padded by 1% of its width (margin guards the endpoints).
struct TestInterval {
    double lo, hi, width;
};

TestInterval test_interval(const ScenarioVector& benchmark, double rel_margin) {
    double a = essinf(benchmark), b = esssup(benchmark);
    double w = b - a;
    if (w <= 0.0) w = std::max({1.0, std::abs(a)});
    double m = rel_margin * w;
    return {a - m, b + m, w};
}

// d/dt (E(t−v)_+^q)^{1/q} = m^{1/q−1} · E(t−v)_+^{q−1}, zero below essinf.
double norm_derivative(const ScenarioVector& v, double t, double q) {
    double m = upper_partial_moment(v, t, q);
    if (m <= 0.0) return 0.0;
    return std::pow(m, 1.0 / q - 1.0) * upper_partial_moment(v, t, q - 1.0);
}

VerificationReport make_report(VerifyMethod method, double tolerance,
                               std::vector<TestPoint> pts, bool degenerate = false) {
    VerificationReport r;
    r.method = method;
    r.tolerance = tolerance;
    r.test_points = std::move(pts);
    r.degenerate = degenerate;
    double worst = 0.0;
    for (const auto& p : r.test_points) worst = std::max(worst, p.gap);
    r.worst_violation = worst;
    r.dominates = worst <= tolerance;
    return r;
}

}  // namespace

std::string to_string(VerifyMethod m) {
    switch (m) {
        case VerifyMethod::DerivativeIntersection: return "derivative-intersection";
        case VerifyMethod::JumpPoints: return "jump-points";
        case VerifyMethod::EssInf: return "essinf";
        case VerifyMethod::DenseGrid: return "dense-grid";
        case VerifyMethod::RiskLevels: return "risk-levels";
    }
    return "unknown";
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : test_points) pts.push_back({{"t", p.t}, {"gap", p.gap}});
    nlohmann::json j{{"dominates", dominates},
                     {"method", to_string(method)},
                     {"tolerance", tolerance},
                     {"test_points", std::move(pts)},
                     {"worst_violation", worst_violation}};
    if (degenerate) j["degenerate"] = true;
    return j;
}

GapFunction::GapFunction(ScenarioVector base, ScenarioVector benchmark, Order order)
    : base_(std::move(base)), benchmark_(std::move(benchmark)), order_(order) {}

double GapFunction::evaluate(double t) const {
    return gap(t, base_, benchmark_, order_.norm_exponent());
}

double GapFunction::evaluate_dt(double t) const {
    double q = order_.norm_exponent();
    if (!(q >= 1.0) || std::isinf(q))
        throw invalid_order("GapFunction::evaluate_dt: needs finite norm exponent >= 1");
    return q * gap(t, base_, benchmark_, q - 1.0);
}

double gap(double t, const ScenarioVector& base, const ScenarioVector& benchmark,
           double q) {
    if (std::isinf(q)) {
        return std::max(0.0, t - essinf(base)) - std::max(0.0, t - essinf(benchmark));
    }
    return upper_partial_moment(base, t, q) - upper_partial_moment(benchmark, t, q);
}

std::vector<double> jump_test_points(const ScenarioVector& benchmark) {
    std::vector<double> ts;
    const auto& xs = benchmark.outcomes();
    const auto& ps = benchmark.probabilities();
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (ps[i] > 0.0) ts.push_back(xs[i]);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    return ts;
}

std::vector<double> critical_test_points(const ScenarioVector& base,
                                         const ScenarioVector& benchmark,
                                         const Order& order, int grid_size) {
    if (grid_size < 2) throw invalid_input("critical_test_points: grid_size < 2");
    double q = order.norm_exponent();
    if (order.is_infinite() || !(q > 1.0))
        throw invalid_order(
            "critical_test_points: requires 2 < p < inf (use jump_test_points for p=2, "
            "essinf comparison for p=inf)");

    auto iv = test_interval(benchmark, 0.01);
    auto diff = [&](double t) {
        return norm_derivative(base, t, q) - norm_derivative(benchmark, t, q);
    };
    // Zero tolerance for the scan: the derivatives are O(1) quantities.
    auto hits = detail::scan_sign_changes(diff, iv.lo, iv.hi, grid_size,
                                          1e-10 * iv.width, 1e-14);
    std::vector<double> ts;
    ts.reserve(hits.size() + 2);
    ts.push_back(iv.lo);  // boundary checks
    for (const auto& h : hits) ts.push_back(h.t);
    ts.push_back(iv.hi);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    return ts;
}

VerificationReport verify_dominance(const ScenarioVector& base,
                                    const ScenarioVector& benchmark, const Order& order,
                                    double tolerance) {
    if (!(tolerance >= 0.0)) throw invalid_input("verify_dominance: tolerance < 0");
    const double q = order.norm_exponent();

    if (order.is_infinite()) {
        VerificationReport r;
        r.method = VerifyMethod::EssInf;
        r.tolerance = tolerance;
        double viol = essinf(benchmark) - essinf(base);
        r.worst_violation = std::max(0.0, viol);
        r.dominates = viol <= tolerance;
        return r;
    }

    if (q == 0.0) {
        // q = 0 gap is piecewise constant and left-continuous; its sup is
        // attained between consecutive outcomes of either variable.
        std::vector<double> pts;
        for (double v : base.outcomes()) pts.push_back(v);
        for (double v : benchmark.outcomes()) pts.push_back(v);
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        std::vector<TestPoint> tps;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            double mid = 0.5 * (pts[i] + pts[i + 1]);
            tps.push_back({mid, gap(mid, base, benchmark, 0.0)});
        }
        double beyond = pts.back() + 1.0;
        tps.push_back({beyond, gap(beyond, base, benchmark, 0.0)});
        return make_report(VerifyMethod::JumpPoints, tolerance, std::move(tps));
    }

    if (q == 1.0) {
        std::vector<TestPoint> tps;
        for (double t : jump_test_points(benchmark))
            tps.push_back({t, gap(t, base, benchmark, 1.0)});
        return make_report(VerifyMethod::JumpPoints, tolerance, std::move(tps));
    }

    if (q < 1.0) {
        // Orders in (1,2): no finite test-point reduction applies.
        return verify_dense_grid(base, benchmark, order, 100000, tolerance);
    }

    bool degenerate = false;
    auto iv = test_interval(benchmark, 0.01);
    auto diff = [&](double t) {
        return norm_derivative(base, t, q) - norm_derivative(benchmark, t, q);
    };
    auto hits = detail::scan_sign_changes(diff, iv.lo, iv.hi, 4096,
                                          1e-10 * iv.width, 1e-14);
    std::vector<TestPoint> tps;
    tps.push_back({iv.lo, gap(iv.lo, base, benchmark, q)});
    for (const auto& h : hits) {
        // Plateaus below both essinfs are trivial (both norms vanish).
        if (h.plateau && upper_partial_moment(base, h.t, q) == 0.0 &&
            upper_partial_moment(benchmark, h.t, q) == 0.0) {
            continue;
        }
        if (h.plateau) degenerate = true;
        tps.push_back({h.t, gap(h.t, base, benchmark, q)});
    }
    tps.push_back({iv.hi, gap(iv.hi, base, benchmark, q)});
    return make_report(VerifyMethod::DerivativeIntersection, tolerance, std::move(tps),
                       degenerate);
}

VerificationReport verify_dense_grid(const ScenarioVector& base,
                                     const ScenarioVector& benchmark, const Order& order,
                                     int grid_size, double tolerance) {
    if (grid_size < 100) throw invalid_input("verify_dense_grid: grid_size < 100");
    double a = essinf(benchmark), b = esssup(benchmark);
    double h = (b - a) / double(grid_size - 1);
    if (h <= 0.0) h = std::max({1.0, std::abs(a)}) * 0.01;
    auto ts = linspace(a - h, b + h, std::size_t(grid_size) + 2);
    auto gs = gap_grid(base, benchmark, order.norm_exponent(), ts);

    std::size_t worst = 0;
    for (std::size_t i = 1; i < gs.size(); ++i)
        if (gs[i] > gs[worst]) worst = i;

    // Keep the report small: the worst point plus the two interval endpoints.
    std::vector<TestPoint> tps{{ts.front(), gs.front()},
                               {ts[worst], gs[worst]},
                               {ts.back(), gs.back()}};
    return make_report(VerifyMethod::DenseGrid, tolerance, std::move(tps));
}

void export_gap_curve(std::ostream& os, const ScenarioVector& base,
                      const ScenarioVector& benchmark, const Order& order,
                      int grid_size) {
    if (grid_size < 2) throw invalid_input("export_gap_curve: grid_size < 2");
    auto iv = test_interval(benchmark, 0.01);
    auto ts = linspace(iv.lo, iv.hi, std::size_t(grid_size));
    auto gs = gap_grid(base, benchmark, order.norm_exponent(), ts);
    os << "t,gap\n";
    os.precision(17);
    for (std::size_t i = 0; i < ts.size(); ++i) os << ts[i] << ',' << gs[i] << '\n';
}

}  // namespace sdom
