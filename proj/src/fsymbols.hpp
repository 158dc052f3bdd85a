#pragma once

#include <map>
#include <optional>

#include "gauge.hpp"

namespace ufc {

// Admissible quadruple (a, b, c; d): some fusion channel connects d to the
// triple product. Blocks on non-admissible quadruples are not stored.
struct BlockKey {
    int a, b, c, d;
    auto operator<=>(const BlockKey&) const = default;
};

// Enumeration of a fusion-tree basis: groups (label; i < dim1, j < dim2) in
// ascending label order, flattened lexicographically in (label, i, j).
struct TreeBasis {
    std::vector<int> labels;
    std::vector<int> dim1, dim2;
    std::vector<int> offsets;
    int total = 0;

    int position(int label) const; // -1 when the label does not occur
    int index(int pos, int i, int j) const {
        return offsets[static_cast<size_t>(pos)] +
               i * dim2[static_cast<size_t>(pos)] + j;
    }
};

// Row basis of block (a,b,c;d): (e, i < N_ab^e, j < N_ec^d).
TreeBasis row_basis(const FusionRing& ring, int a, int b, int c, int d);
// Column basis: (f, i < N_bc^f, j < N_af^d).
TreeBasis col_basis(const FusionRing& ring, int a, int b, int c, int d);

// Block-diagonal vertex action on the row basis: sum over e of
// g^{ab}_e (x) g^{ec}_d.
Mat lambda_left(const Gauge& g, int a, int b, int c, int d);
// On the column basis: sum over f of g^{bc}_f (x) g^{af}_d.
Mat lambda_right(const Gauge& g, int a, int b, int c, int d);

// Skeletal associator of a fusion category: one matrix per admissible
// quadruple between the two fusion-tree bases.
class FSymbolSet {
public:
    FSymbolSet(RingPtr ring, std::map<BlockKey, Mat> blocks,
               double tol = kDefaultTol);

    const RingPtr& ring() const { return ring_; }
    double tol() const { return tol_; }
    const std::map<BlockKey, Mat>& blocks() const { return blocks_; }
    const Mat& block(int a, int b, int c, int d) const;
    bool admissible(int a, int b, int c, int d) const;

    double max_block_condition() const;

private:
    RingPtr ring_;
    double tol_;
    std::map<BlockKey, Mat> blocks_;
};

struct ResidualReport {
    bool pass;
    double max_residual;
    std::string worst; // human-readable locus of the worst instance
};

// Max relative deviation between the two reassociation paths over all
// pentagon instances.
ResidualReport verify_pentagon(const FSymbolSet& f);

// Max blockwise deviation from unitarity ||B^dagger B - I|| / sqrt(dim).
ResidualReport verify_unitary(const FSymbolSet& f);

// Gauge action on the associator. The identity-functor equivalence with
// tensorator g is coherent from F to apply_gauge(F, g); pentagon residual is
// preserved up to conditioning. Satisfies
//   apply_gauge(apply_gauge(F, g1), g2) = apply_gauge(F, compose_gauges(g2, g1)).
FSymbolSet apply_gauge(const FSymbolSet& f, const Gauge& g);

// Small dense Kronecker product (row-major pair ordering).
Mat kron(const Mat& a, const Mat& b);

} // namespace ufc
