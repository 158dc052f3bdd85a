#pragma once

#include <functional>
#include <map>

#include "fusion_ring.hpp"
#include "rng.hpp"

namespace ufc {

// Vertex key (a, b; c): the multiplicity space Hom(c, a (x) b).
struct VertexKey {
    int a, b, c;
    auto operator<=>(const VertexKey&) const = default;
};

// Family of invertible matrices g^{ab}_c on multiplicity spaces, one block
// per channel N_ab^c > 0. Unit-touching blocks are pinned to the identity.
class Gauge {
public:
    Gauge(RingPtr ring, std::map<VertexKey, Mat> blocks);

    static Gauge identity(RingPtr ring);

    const RingPtr& ring() const { return ring_; }
    const std::map<VertexKey, Mat>& blocks() const { return blocks_; }
    const Mat& block(int a, int b, int c) const;

    Gauge map_blocks(const std::function<Mat(const Mat&)>& f) const;

private:
    RingPtr ring_;
    std::map<VertexKey, Mat> blocks_;
};

// Scalar-per-simple natural isomorphism of the identity equivalence.
struct NatIso {
    RingPtr ring;
    std::vector<Cplx> components; // one nonzero scalar per simple index
};

// Blockwise matrix product (g1 then g2 read right-to-left: result = g1 * g2).
Gauge compose_gauges(const Gauge& g1, const Gauge& g2);
Gauge invert_gauge(const Gauge& g);
Gauge adjoint_gauge(const Gauge& g);

// The gauge with blocks (mu_a mu_b / mu_c) * I. Acts trivially on every
// F-symbol set; this is the skeletal coboundary of a natural isomorphism.
Gauge coboundary_gauge(const NatIso& iso);

double max_block_distance(const Gauge& g1, const Gauge& g2);
bool is_identity_gauge(const Gauge& g, double tol);

// Worst blockwise condition number.
double gauge_condition(const Gauge& g);

// --- seeded generators (shared by tests, the acceptance suite and the CLI) --

// Haar-ish random unitary: QR of a complex Gaussian with phase-fixed R.
Mat random_unitary(int n, Rng& rng);

// Random invertible block with singular values spread so that the condition
// number is at most cond_cap.
Mat random_invertible(int n, Rng& rng, double cond_cap);

Mat random_positive(int n, Rng& rng, double cond_cap);

Gauge random_gauge(RingPtr ring, Rng& rng, double cond_cap);
Gauge random_positive_gauge(RingPtr ring, Rng& rng, double cond_cap);

// Random scalars with |mu| in [1/sqrt(cap), sqrt(cap)]; unit component 1.
NatIso random_nat_iso(RingPtr ring, Rng& rng, double cond_cap,
                      bool positive = false);

} // namespace ufc
