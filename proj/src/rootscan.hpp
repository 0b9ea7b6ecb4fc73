#ifndef SDOM_ROOTSCAN_HPP
#define SDOM_ROOTSCAN_HPP

#include <cmath>
#include <functional>
#include <vector>

namespace sdom::detail {

// Sign with a dead zone: values in [-eps, eps] count as zero.
inline int sgn(double v, double eps) { return v > eps ? 1 : (v < -eps ? -1 : 0); }

// Bisection refinement of a sign change of f over [a, b] (f(a), f(b) of
// opposite nonzero sign) down to width tol. Works on discontinuous f too,
// converging to the jump location.
inline double bisect(const std::function<double(double)>& f, double a, double b,
                     double fa, double tol, int max_iter = 200) {
    for (int k = 0; k < max_iter && (b - a) > tol; ++k) {
        double m = 0.5 * (a + b);
        double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm > 0) == (fa > 0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

struct ScanHit {
    double t;
    bool plateau;  // part of a run of (near-)zero values rather than a crossing
};

// Scans f on grid_size uniform points over [lo, hi], brackets every sign
// change and refines by bisection; maximal runs of zeros are reported as
// plateau hits at their endpoints and midpoint. zero_eps decides what counts
// as zero during the scan.
std::vector<ScanHit> scan_sign_changes(const std::function<double(double)>& f,
                                       double lo, double hi, int grid_size,
                                       double refine_tol, double zero_eps);

}  // namespace sdom::detail

#endif
