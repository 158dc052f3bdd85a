#pragma once

#include "equivalence.hpp"

namespace ufc {

// Skeletal braiding: one invertible matrix per channel, representing the
// braiding of a and b restricted to c (a map between the (a,b) and (b,a)
// multiplicity spaces, which have equal dimension). Unit-touching blocks are
// the identity.
class RSymbolSet {
public:
    RSymbolSet(RingPtr ring, std::map<VertexKey, Mat> blocks);

    const RingPtr& ring() const { return ring_; }
    const std::map<VertexKey, Mat>& blocks() const { return blocks_; }
    const Mat& block(int a, int b, int c) const;

private:
    RingPtr ring_;
    std::map<VertexKey, Mat> blocks_;
};

// Both hexagon families (braiding and inverse braiding); the inverse family
// is derived from the same blocks. Max relative residual over all instances.
ResidualReport verify_hexagon(const FSymbolSet& f, const RSymbolSet& r);

// For a unitary pentagon-valid associator with a hexagon-valid braiding,
// every braiding block is unitary; a failure flags inconsistent input.
ResidualReport verify_braiding_unitary(const FSymbolSet& f,
                                       const RSymbolSet& r);

struct BraidedFactorization {
    Factorization base;
    double compatibility;       // braided-compatibility residual of the input
    double commutation;         // positive part vs. target braiding
    double unitary_compatibility; // braided compatibility of the unitary factor
};

// Braided-compatibility residual of a tensorator against the two braidings,
// per source channel.
double braided_compatibility(const EquivalenceData& e, const RSymbolSet& r_src,
                             const RSymbolSet& r_tgt);

// factorize_equivalence plus the certificate that the positive part commutes
// with the target braiding and that the unitary factor is braided-coherent.
BraidedFactorization factorize_braided_equivalence(const EquivalenceData& e,
                                                   const RSymbolSet& r_src,
                                                   const RSymbolSet& r_tgt);

} // namespace ufc
