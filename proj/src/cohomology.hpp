#pragma once

#include <memory>

#include "fsymbols.hpp"

namespace ufc {

// Finite group given by its Cayley table; identity at index 0.
class FiniteGroup {
public:
    FiniteGroup(int order, std::vector<int> table);

    int order() const { return order_; }
    int mul(int a, int b) const {
        return table_[static_cast<size_t>(a) * order_ + b];
    }
    int inverse(int a) const { return inverse_[static_cast<size_t>(a)]; }
    const std::vector<int>& table() const { return table_; }

    bool operator==(const FiniteGroup& other) const {
        return order_ == other.order_ && table_ == other.table_;
    }

private:
    int order_;
    std::vector<int> table_;
    std::vector<int> inverse_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// C^x-valued n-cochain on a finite group, stored densely with lexicographic
// tuple indexing. Degree 0 is a single value.
struct Cochain {
    GroupPtr group;
    int degree = 1;           // 0..3
    std::vector<Cplx> values; // order^degree entries
    bool normalized = false;  // value 1 whenever any argument is the identity

    size_t tuple_index(const std::vector<int>& tuple) const;
    Cplx at(const std::vector<int>& tuple) const;
};

Cochain make_cochain(GroupPtr group, int degree, std::vector<Cplx> values);
Cochain trivial_cochain(GroupPtr group, int degree);

// Multiplicative bar-resolution coboundary with alternating inverse
// exponents. Public degrees 0..2 (output degree at most 3); higher degrees
// raise InputError ("degree overflow").
Cochain coboundary(const Cochain& c);

struct CocycleReport {
    bool pass;
    double max_deviation;        // max |delta omega - 1| over tuples
    std::string first_violation; // empty when pass
};

// delta omega = 1 pointwise within tol. Works for degrees 1..3; the degree-4
// coboundary values needed for a 3-cochain are computed internally.
CocycleReport verify_cocycle(const Cochain& omega, double tol = 1e-9);

struct CocycleSplit {
    Cochain unitary;  // omega / |omega|
    Cochain positive; // |omega|
};

// Pointwise polar split; both factors are cocycles whenever the input is.
CocycleSplit polar_split_cocycle(const Cochain& omega, double tol = 1e-9);

struct CocycleTrivialization {
    Cochain eta;         // positive (n-1)-cochain with delta eta = r
    double lsq_residual; // max-norm residual of the log-linear solve
    double reproduction; // max |delta eta - r| pointwise
};

// Solves delta eta = r for a positive cocycle r by a minimum-norm
// least-squares solve of the log-linearized system. Guaranteed consistent
// because positive cohomology of a finite group vanishes.
CocycleTrivialization trivialize_positive_cocycle(const Cochain& r,
                                                  double tol = 1e-9);

struct CocycleUnitarization {
    Cochain unitary;     // the U(1) representative
    Cochain eta;         // trivializer of the positive part
    double certificate;  // max |omega / u - delta eta| pointwise
};

// Full mirror pipeline: split off the phase cocycle and certify that the
// positive remainder is a coboundary.
CocycleUnitarization unitarize_cocycle(const Cochain& omega,
                                       double tol = 1e-9);

struct VecGData {
    RingPtr ring;
    FSymbolSet f_symbols;
};

// Pointed fusion data from a normalized 3-cochain: group ring with
// F^{g,h,k} = omega(g,h,k). The pentagon is exactly the cocycle condition.
VecGData build_vecg_category(GroupPtr group, const Cochain& omega,
                             double tol = 1e-9);

// Group ring N_{gh}^{gh} = 1 without associator data.
RingPtr group_ring(const FiniteGroup& g);

} // namespace ufc
