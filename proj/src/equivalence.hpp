#pragma once

#include "fsymbols.hpp"

namespace ufc {

// Skeletal monoidal equivalence between two fusion categories: a fusion-ring
// isomorphism together with a tensorator, stored over target labels.
struct EquivalenceData {
    FSymbolSet source;
    FSymbolSet target;
    std::vector<int> simple_map; // source simple -> target simple
    Gauge tensorator;            // over the target ring
};

// Exact integer check that simple_map is a fusion-ring isomorphism
// (bijective, maps unit to unit, preserves duals and multiplicities).
void check_simple_map(const FusionRing& src, const FusionRing& tgt,
                      const std::vector<int>& simple_map);

// Source block permuted into target tree bases along the simple map.
Mat relabel_block(const EquivalenceData& e, const BlockKey& source_key);

// Coherence of the equivalence: per source quadruple, the target associator
// conjugated through the tensorator must match the relabeled source
// associator. Returns the max relative residual.
ResidualReport verify_equivalence(const EquivalenceData& e);

struct FactorizationCertificates {
    double recomposition;      // || p * u - tensorator || blockwise
    double unitary_coherence;  // coherence residual of the unitary factor
    double positive_coherence; // coherence residual of (id, p) on the target
};

struct Factorization {
    EquivalenceData unitary_equivalence; // tensorator u, blockwise unitary
    Gauge positive_part;                 // p = sqrt(t t^dagger) blockwise
    FactorizationCertificates certificates;
};

// Blockwise polar split of the tensorator into a unitary equivalence followed
// by a positive auto-equivalence of the target. Certificates above
// 100 * tol raise DecompositionError (the split is guaranteed for coherent
// input between unitary presentations).
Factorization factorize_equivalence(const EquivalenceData& e);

struct Trivialization {
    NatIso mu;            // positive scalars, unit component 1
    double lsq_residual;  // max-norm residual of the log-linear solve
    double reproduction;  // || coboundary(mu) - p || blockwise
};

// Writes a positive coherent monoidal structure on the identity functor as
// the coboundary of a positive scalar family: extracts the per-block scalars
// and solves x_a + x_b - x_c = log(lambda) with x_0 = 0 by least squares.
// The finite-group detour of the existence proof is bypassed: the solve is
// guaranteed consistent and, with the trivial positive-character space,
// unique.
Trivialization trivialize_positive_monoidal(const Gauge& p,
                                            const FSymbolSet& f);

struct UnitarizeResult {
    EquivalenceData equivalence; // unitary tensorator
    NatIso mu;                   // monoidal natural isomorphism to the input
    double unitarity;            // worst tensorator block deviation
    double coherence;            // coherence residual of the output
    double nat_iso_residual;     // || t - coboundary(mu) * u || blockwise
    double lsq_residual;
};

// Full pipeline: factorize, trivialize the positive part, fold the scalar
// family back as the explicit natural isomorphism. Requires unitary
// presentations on both sides.
UnitarizeResult unitarize_equivalence(const EquivalenceData& e);

struct NatIsoUnitarization {
    NatIso unitary;              // unit-modulus components
    double certificate;          // max |rho_a - 1|
    double monoidality_residual; // precondition residual
    double character_residual;   // max channel deviation of rho
};

// Every monoidal natural isomorphism between unitary monoidal equivalences
// is unitary: split eta_a = u_a * rho_a, check rho is a positive character,
// and certify rho = 1.
NatIsoUnitarization unitarize_nat_iso(const NatIso& eta,
                                      const EquivalenceData& e1,
                                      const EquivalenceData& e2);

// 0, 1, ..., rank-1.
std::vector<int> identity_map(const FSymbolSet& f);

// Identity equivalence on a skeleton: id map, identity tensorator.
EquivalenceData identity_equivalence(const FSymbolSet& f);

// Coherent test equivalences: coboundary tensorators are coherent between
// identical presentations for every scalar family.
EquivalenceData coboundary_equivalence(const FSymbolSet& f, const NatIso& nu);

} // namespace ufc
