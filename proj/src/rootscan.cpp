#include "rootscan.hpp"

#include <stdexcept>

namespace sdom::detail {

std::vector<ScanHit> scan_sign_changes(const std::function<double(double)>& f,
                                       double lo, double hi, int grid_size,
                                       double refine_tol, double zero_eps) {
    if (grid_size < 2) throw std::invalid_argument("scan_sign_changes: grid_size < 2");
    const double h = (hi - lo) / double(grid_size - 1);
    std::vector<double> ts(grid_size), fs(grid_size);
    for (int i = 0; i < grid_size; ++i) {
        ts[i] = (i == grid_size - 1) ? hi : lo + h * i;
        fs[i] = f(ts[i]);
    }

    std::vector<ScanHit> hits;
    int i = 0;
    while (i < grid_size) {
        int si = sgn(fs[i], zero_eps);
        if (si == 0) {
            int j = i;
            while (j + 1 < grid_size && sgn(fs[j + 1], zero_eps) == 0) ++j;
            if (j == i) {
                hits.push_back({ts[i], false});
            } else {
                // Zero run: keep endpoints and midpoint (conservative: covers
                // tangential touches and genuine coincidence intervals).
                hits.push_back({ts[i], true});
                hits.push_back({0.5 * (ts[i] + ts[j]), true});
                hits.push_back({ts[j], true});
            }
            i = j + 1;
            continue;
        }
        if (i + 1 < grid_size) {
            int sj = sgn(fs[i + 1], zero_eps);
            if (sj != 0 && sj != si) {
                double r = bisect(f, ts[i], ts[i + 1], fs[i], refine_tol);
                hits.push_back({r, false});
            }
        }
        ++i;
    }
    return hits;
}

}  // namespace sdom::detail
