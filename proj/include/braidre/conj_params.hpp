#pragma once

#include <stdexcept>

namespace braidre {

// Point configuration parameters: N points total, k conjugate pairs off the
// real axis (so N - 2k real points).
struct ConjParams {
    int strands = 0;  // N
    int pairs = 0;    // k

    ConjParams(int n, int k) : strands(n), pairs(k) {
        if (n < 1) throw std::invalid_argument("strand count must be >= 1");
        if (k < 0 || 2 * k > n) throw std::invalid_argument("pair count must satisfy 0 <= 2k <= N");
    }
    int real_points() const { return strands - 2 * pairs; }
};

} // namespace braidre
