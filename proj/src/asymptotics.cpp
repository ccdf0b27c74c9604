#include "paralat/asymptotics.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>

#include "paralat/parallel.hpp"

namespace paralat::asymptotics {

ErrorScan error_scan(const lattice::ParaboloidSpec& spec, const std::vector<long long>& R_list,
                     int jobs) {
    ErrorScan scan;
    scan.records.resize(R_list.size());
    scan.ambiguous.assign(R_list.size(), 0);
    scan.ambiguous_fibers = 0;
    parallel_for(jobs, (long long)R_list.size(), [&](long long i) {
        scan.records[(size_t)i] =
            lattice::error_record(spec, R_list[(size_t)i], &scan.ambiguous[(size_t)i]);
    });
    for (long long a : scan.ambiguous) scan.ambiguous_fibers += a;
    return scan;
}

ExponentFit fit_exponent(const std::vector<lattice::ErrorRecord>& records) {
    std::vector<const lattice::ErrorRecord*> used;
    used.reserve(records.size());
    for (const auto& r : records) {
        if (std::fabs(r.error) >= 1e-9) used.push_back(&r);
    }
    if (used.size() < 3)
        throw std::invalid_argument("fit_exponent: need at least 3 records with |error| >= 1e-9");

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto* r : used) {
        double lx = std::log((double)r->R);
        double ly = std::log(std::fabs(r->error));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double n = (double)used.size();
    double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    double intercept = (sy - slope * sx) / n;

    std::vector<double> norm;
    norm.reserve(used.size());
    for (const auto* r : used) norm.push_back(std::fabs(r->error) / std::pow((double)r->R, slope));
    std::sort(norm.begin(), norm.end());
    size_t idx95 = (size_t)std::ceil(0.95 * (double)norm.size());
    if (idx95 > 0) --idx95;
    if (idx95 >= norm.size()) idx95 = norm.size() - 1;

    ExponentFit fit;
    fit.slope = slope;
    fit.intercept = intercept;
    fit.max_normalized = norm.back();
    fit.p95_normalized = norm[idx95];
    fit.used = (int)used.size();
    fit.dropped = (int)(records.size() - used.size());
    return fit;
}

}  // namespace paralat::asymptotics
