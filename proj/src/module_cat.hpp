#pragma once

#include "equivalence.hpp"

namespace ufc {

// Action vertex (a; m -> m'): the multiplicity space of a acting on module
// simple m with image component m'.
struct ActionKey {
    int a, m, mp;
    auto operator<=>(const ActionKey&) const = default;
};

// L-block key (a, b, m; m').
struct ModuleBlockKey {
    int a, b, m, mp;
    auto operator<=>(const ModuleBlockKey&) const = default;
};

// Family of invertible matrices on action multiplicity spaces; the module
// analog of a Gauge. Unit-action blocks are pinned to the identity.
class ModuleGauge {
public:
    ModuleGauge(RingPtr ring, int module_rank,
                const std::vector<int>& action_tensor,
                std::map<ActionKey, Mat> blocks);

    const std::map<ActionKey, Mat>& blocks() const { return blocks_; }
    const Mat& block(int a, int m, int mp) const;

private:
    std::map<ActionKey, Mat> blocks_;
};

// Skeletal module category over a fusion ring: action multiplicities
// n_{a m}^{m'} and the module associator L, one block per admissible
// (a, b, m; m').
class ModuleData {
public:
    ModuleData(RingPtr ring, int module_rank, std::vector<int> action_tensor,
               std::map<ModuleBlockKey, Mat> l_blocks,
               double tol = kDefaultTol);

    const RingPtr& ring() const { return ring_; }
    int module_rank() const { return module_rank_; }
    double tol() const { return tol_; }
    int action(int a, int m, int mp) const {
        return action_[(static_cast<size_t>(a) * module_rank_ + m) *
                           module_rank_ +
                       mp];
    }
    const std::vector<int>& action_tensor() const { return action_; }
    const std::map<ModuleBlockKey, Mat>& l_blocks() const { return l_blocks_; }
    const Mat& l_block(int a, int b, int m, int mp) const;
    bool admissible(int a, int b, int m, int mp) const;

    // Row basis of (a,b,m;m'): (c, i < N_ab^c, j < n_cm^m').
    TreeBasis row_basis_of(int a, int b, int m, int mp) const;
    // Column basis: (m1, i < n_bm^m1, j < n_am1^m').
    TreeBasis col_basis_of(int a, int b, int m, int mp) const;

private:
    RingPtr ring_;
    int module_rank_;
    double tol_;
    std::vector<int> action_; // rank x module_rank x module_rank
    std::map<ModuleBlockKey, Mat> l_blocks_;
};

// Mixed coherence of the module associator against the fusion associator.
ResidualReport verify_module_pentagon(const ModuleData& m, const FSymbolSet& f);

// Module equivalence between two modules over the same ring: a bijection of
// module simples compatible with the action, plus a tensorator over target
// module labels.
struct ModuleEquivalenceData {
    ModuleData source;
    ModuleData target;
    std::vector<int> module_map; // source module simple -> target
    ModuleGauge tensorator;
};

void check_module_map(const ModuleData& src, const ModuleData& tgt,
                      const std::vector<int>& module_map);

ResidualReport verify_module_equivalence(const ModuleEquivalenceData& e);

struct ModuleFactorization {
    ModuleEquivalenceData unitary_equivalence;
    ModuleGauge positive_part;
    FactorizationCertificates certificates;
};

ModuleFactorization factorize_module_equivalence(const ModuleEquivalenceData& e);

struct ModuleTrivialization {
    std::vector<Cplx> mu; // positive scalar per module simple, first of each
                          // connected component normalized to 1
    double lsq_residual;
    double reproduction;
};

// Positive coherent module gauge as the coboundary of per-simple scalars:
// blocks must be (mu_m / mu_m') * I; solved log-linearly per connected
// component of the action graph.
ModuleTrivialization trivialize_positive_module(const ModuleGauge& p,
                                                const ModuleData& m);

struct ModuleUnitarizeResult {
    ModuleEquivalenceData equivalence;
    std::vector<Cplx> mu;
    double unitarity;
    double coherence;
    double nat_iso_residual;
    double lsq_residual;
};

ModuleUnitarizeResult unitarize_module_equivalence(
    const ModuleEquivalenceData& e);

ModuleGauge identity_module_gauge(const ModuleData& m);
ModuleGauge module_coboundary(const ModuleData& m,
                              const std::vector<Cplx>& mu);
ModuleEquivalenceData identity_module_equivalence(const ModuleData& m);

// Regular module: the ring acting on itself, L = F.
ModuleData regular_module(const FSymbolSet& f);

} // namespace ufc
