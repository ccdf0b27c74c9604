#pragma once

// Error-term scans over radius lists and log-log exponent fits.

#include <vector>

#include "paralat/lattice.hpp"

namespace paralat::asymptotics {

struct ErrorScan {
    std::vector<lattice::ErrorRecord> records;  // in R_list order
    std::vector<long long> ambiguous;           // per record (float-shift path only)
    long long ambiguous_fibers;                 // total over all radii
};

ErrorScan error_scan(const lattice::ParaboloidSpec& spec, const std::vector<long long>& R_list,
                     int jobs = 1);

struct ExponentFit {
    double slope;           // OLS exponent in log|error| ~ slope * log R + intercept
    double intercept;
    double max_normalized;  // max |error| / R^slope over used records
    double p95_normalized;  // nearest-rank 95th percentile of |error| / R^slope
    int used;               // records with |error| >= 1e-9
    int dropped;            // records excluded by that floor (log of a sign flip is noise)
};

// throws std::invalid_argument when fewer than 3 usable records remain
ExponentFit fit_exponent(const std::vector<lattice::ErrorRecord>& records);

}  // namespace paralat::asymptotics
