#pragma once

#include <memory>
#include <string>
#include <vector>

#include "linalg.hpp"

namespace ufc {

// Skeletal fusion ring: simple objects 0..rank-1, unit fixed at index 0,
// dual an involution, N[a][b][c] = dim Hom(c, a (x) b). Immutable after
// construction; shared by every structure built on top of it.
class FusionRing {
public:
    FusionRing(int rank, std::vector<int> dual, std::vector<int> n_tensor);

    int rank() const { return rank_; }
    int dual(int a) const { return dual_[static_cast<size_t>(a)]; }
    int n(int a, int b, int c) const {
        return n_[(static_cast<size_t>(a) * rank_ + b) * rank_ + c];
    }
    const std::vector<int>& n_tensor() const { return n_; }
    const std::vector<int>& duals() const { return dual_; }

    // Channels c with N_ab^c > 0, ascending.
    std::vector<int> channels(int a, int b) const;

    bool operator==(const FusionRing& other) const {
        return rank_ == other.rank_ && dual_ == other.dual_ && n_ == other.n_;
    }

private:
    int rank_;
    std::vector<int> dual_;
    std::vector<int> n_; // rank^3, lex (a, b, c)
};

using RingPtr = std::shared_ptr<const FusionRing>;

struct RingReport {
    bool pass;
    std::string first_violation; // empty when pass
};

// Exact integer verification of the ring axioms: associativity, unit laws,
// rigidity, Frobenius reciprocity, dual involution fixing the unit.
RingReport verify_ring_axioms(const FusionRing& ring);

struct CharacterSpace {
    int dimension;
    // Basis of the real solution space of  x_a + x_b = x_c  over all channels
    // with x_unit = 0; one inner vector (length rank) per basis element.
    std::vector<std::vector<double>> basis;
};

// Log-linear solution space of the positive characters of the ring. For the
// fusion ring of a fusion category this is 0-dimensional.
CharacterSpace positive_character_space(const FusionRing& ring,
                                        double tol = 1e-9);

// Frobenius-Perron dimensions: d_a = spectral radius of the fusion matrix
// (N_a)_{bc} = N_ab^c.
std::vector<double> fp_dimensions(const FusionRing& ring);

} // namespace ufc
