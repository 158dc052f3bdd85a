#pragma once

#include "fsymbols.hpp"

namespace ufc {

struct GaugeSearchResult {
    Gauge gauge;            // best gauge found
    double residual;        // unitarity residual of apply_gauge(F, gauge)
    int iterations;         // iterations actually run
    bool converged;         // residual below the stop threshold
};

// Heuristic search for a gauge that makes an associator unitary: polar-split
// every block, absorb the positive parts into damped per-vertex corrections,
// re-gauge, repeat. Success is not guaranteed; a high final residual is a
// report, not an error.
GaugeSearchResult search_unitary_gauge(const FSymbolSet& f, int max_iters,
                                       std::uint64_t seed,
                                       double stop_tol = 1e-12);

} // namespace ufc
