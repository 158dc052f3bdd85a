#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "builtins.hpp"
#include "errors.hpp"
#include "module_cat.hpp"

using namespace ufc;

namespace {

// Rank-one module over vec-z2: every group element acts trivially, the
// module associator is a scalar family solving the 2-cocycle condition.
ModuleData z2_rank_one_module(Cplx l_gg) {
    const FSymbolSet f = vec_z2_trivial().f_symbols;
    std::vector<int> action(2 * 1 * 1, 1); // n_{a 0}^{0} = 1 for a = 0, 1
    std::map<ModuleBlockKey, Mat> blocks;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            Mat m = Mat::Identity(1, 1);
            if (a == 1 && b == 1) m *= l_gg;
            blocks[{a, b, 0, 0}] = m;
        }
    return ModuleData(f.ring(), 1, std::move(action), std::move(blocks));
}

// Rank-two module over vec-z2 with the group acting trivially on both
// simples (two orbits).
ModuleData z2_two_point_module() {
    const FSymbolSet f = vec_z2_trivial().f_symbols;
    std::vector<int> action(2 * 2 * 2, 0);
    for (int a = 0; a < 2; ++a)
        for (int m = 0; m < 2; ++m)
            action[(static_cast<size_t>(a) * 2 + m) * 2 + m] = 1;
    std::map<ModuleBlockKey, Mat> blocks;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int m = 0; m < 2; ++m) blocks[{a, b, m, m}] = Mat::Identity(1, 1);
    return ModuleData(f.ring(), 2, std::move(action), std::move(blocks));
}

} // namespace

TEST_CASE("module data validation") {
    const FSymbolSet f = vec_z2_trivial().f_symbols;

    // Unit must act as the identity permutation.
    std::vector<int> action(2 * 2 * 2, 0);
    action[(0 * 2 + 0) * 2 + 1] = 1; // 0 acts by swapping
    action[(0 * 2 + 1) * 2 + 0] = 1;
    action[(1 * 2 + 0) * 2 + 0] = 1;
    action[(1 * 2 + 1) * 2 + 1] = 1;
    CHECK_THROWS_AS(ModuleData(f.ring(), 2, action, {}), InputError);
}

TEST_CASE("regular modules reproduce the pentagon") {
    for (const auto& fs : {fibonacci_fsymbols(), ising_fsymbols(),
                           vec_z2_trivial().f_symbols, vec_z3().f_symbols}) {
        const ModuleData reg = regular_module(fs);
        const ResidualReport rep = verify_module_pentagon(reg, fs);
        CHECK(rep.pass);
        CHECK(rep.max_residual <= 1e-10);
    }
}

TEST_CASE("rank-one module associators are 2-cocycles") {
    const FSymbolSet f = vec_z2_trivial().f_symbols;
    CHECK(verify_module_pentagon(z2_rank_one_module(Cplx(1, 0)), f).pass);
    // Every normalized scalar family on Z/2 satisfies the mixed coherence
    // here, including the sign choice.
    CHECK(verify_module_pentagon(z2_rank_one_module(Cplx(-1, 0)), f).pass);
}

TEST_CASE("corrupted module associator entry fails") {
    const FSymbolSet f = vec_z2_trivial().f_symbols;
    ModuleData reg = regular_module(f);
    std::map<ModuleBlockKey, Mat> blocks = reg.l_blocks();
    blocks[{1, 1, 1, 0}] *= 2.0;
    const ModuleData bad(f.ring(), reg.module_rank(), reg.action_tensor(),
                         std::move(blocks));
    const ResidualReport rep = verify_module_pentagon(bad, f);
    CHECK_FALSE(rep.pass);
    CHECK(rep.max_residual > 0.1);
}

TEST_CASE("module equivalence coherence") {
    const ModuleData reg = regular_module(vec_z2_trivial().f_symbols);

    SUBCASE("identity module equivalence") {
        const ResidualReport rep =
            verify_module_equivalence(identity_module_equivalence(reg));
        CHECK(rep.pass);
        CHECK(rep.max_residual <= 1e-15);
    }

    SUBCASE("module coboundaries are coherent") {
        const ModuleGauge t =
            module_coboundary(reg, {Cplx(1, 0), Cplx(3, 0)});
        ModuleEquivalenceData e{reg, reg, {0, 1}, t};
        CHECK(verify_module_equivalence(e).pass);
    }

    SUBCASE("translation relabelings of the regular module are coherent") {
        ModuleEquivalenceData e = identity_module_equivalence(reg);
        e.module_map = {1, 0}; // right translation by g
        CHECK(verify_module_equivalence(e).pass);
    }

    SUBCASE("module relabelings must preserve the action") {
        const ModuleData reg3 = regular_module(vec_z3().f_symbols);
        ModuleEquivalenceData e = identity_module_equivalence(reg3);
        e.module_map = {0, 2, 1}; // inversion is not compatible with the action
        CHECK_THROWS_AS(verify_module_equivalence(e), InputError);
    }
}

TEST_CASE("factorize and trivialize module equivalences") {
    const ModuleData reg = regular_module(vec_z2_trivial().f_symbols);

    SUBCASE("identity splits trivially") {
        const ModuleFactorization fact =
            factorize_module_equivalence(identity_module_equivalence(reg));
        CHECK(fact.certificates.recomposition <= 1e-15);
        CHECK(fact.certificates.unitary_coherence <= 1e-15);
        CHECK(fact.certificates.positive_coherence <= 1e-15);
    }

    SUBCASE("positive coherent tensorator is its own positive part") {
        const ModuleGauge p = module_coboundary(reg, {Cplx(1, 0), Cplx(3, 0)});
        ModuleEquivalenceData e{reg, reg, {0, 1}, p};
        const ModuleFactorization fact = factorize_module_equivalence(e);
        for (const auto& [k, m] : p.blocks())
            CHECK(rel_diff(fact.positive_part.block(k.a, k.m, k.mp), m) <=
                  1e-12);
    }

    SUBCASE("trivialize recovers (1, 3) from its coboundary") {
        const ModuleGauge p = module_coboundary(reg, {Cplx(1, 0), Cplx(3, 0)});
        const ModuleTrivialization triv = trivialize_positive_module(p, reg);
        CHECK(std::abs(triv.mu[0] - Cplx(1, 0)) < 1e-12);
        CHECK(std::abs(triv.mu[1] - Cplx(3, 0)) < 1e-12);
        CHECK(triv.reproduction <= 1e-12);
    }

    SUBCASE("inconsistent scalar data is an inconsistency error") {
        // lambda(g; 0->1) and lambda(g; 1->0) must be reciprocal; violating
        // that breaks the log-linear system.
        std::map<ActionKey, Mat> blocks;
        for (int m = 0; m < 2; ++m) blocks[{0, m, m}] = Mat::Identity(1, 1);
        blocks[{1, 0, 1}] = 2.0 * Mat::Identity(1, 1);
        blocks[{1, 1, 0}] = 5.0 * Mat::Identity(1, 1);
        const ModuleGauge p(reg.ring(), 2, reg.action_tensor(),
                            std::move(blocks));
        CHECK_THROWS_AS(trivialize_positive_module(p, reg),
                        InconsistencyError);
    }

    SUBCASE("identity positive part gives the all-ones family") {
        const ModuleTrivialization triv =
            trivialize_positive_module(identity_module_gauge(reg), reg);
        for (const Cplx& v : triv.mu) CHECK(std::abs(v - Cplx(1, 0)) < 1e-14);
    }
}

TEST_CASE("unitarize module equivalences") {
    const ModuleData reg = regular_module(vec_z2_trivial().f_symbols);

    SUBCASE("identity is unchanged") {
        const ModuleUnitarizeResult res =
            unitarize_module_equivalence(identity_module_equivalence(reg));
        CHECK(res.unitarity <= 1e-12);
        CHECK(res.coherence <= 1e-12);
    }

    SUBCASE("positive coboundary perturbations vanish") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            Rng rng(seed);
            std::vector<Cplx> mu = {Cplx(1, 0),
                                    std::exp(Cplx(rng.gaussian(), 0))};
            ModuleEquivalenceData e{reg, reg, {0, 1},
                                    module_coboundary(reg, mu)};
            const ModuleUnitarizeResult res = unitarize_module_equivalence(e);
            CHECK(res.unitarity <= 1e-8);
            CHECK(res.coherence <= 1e-8);
            CHECK(res.nat_iso_residual <= 1e-8);
            for (const auto& [k, m] : res.equivalence.tensorator.blocks())
                CHECK(rel_diff(m, Mat::Identity(m.rows(), m.cols())) <= 1e-8);
        }
    }

    SUBCASE("random phase-and-magnitude tensorators become unitary") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            Rng rng(seed);
            std::vector<Cplx> mu = {
                Cplx(1, 0),
                std::exp(Cplx(rng.gaussian() * 0.5, rng.gaussian()))};
            ModuleEquivalenceData e{reg, reg, {0, 1},
                                    module_coboundary(reg, mu)};
            const ModuleUnitarizeResult res = unitarize_module_equivalence(e);
            CHECK(res.unitarity <= 1e-8);
            CHECK(res.coherence <= 1e-8);
        }
    }

    SUBCASE("non-unitary module associators are refused") {
        ModuleData reg2 = regular_module(vec_z2_trivial().f_symbols);
        std::map<ModuleBlockKey, Mat> blocks = reg2.l_blocks();
        blocks[{1, 1, 1, 0}] *= 3.0;
        const ModuleData bad(reg2.ring(), reg2.module_rank(),
                             reg2.action_tensor(), std::move(blocks));
        CHECK_THROWS_AS(
            unitarize_module_equivalence(identity_module_equivalence(bad)),
            PreconditionError);
    }
}

TEST_CASE("decomposable modules trivialize per connected component") {
    const ModuleData two = z2_two_point_module();
    // Action graph has two components; each gets its own normalization.
    std::map<ActionKey, Mat> blocks;
    for (int a = 0; a < 2; ++a)
        for (int m = 0; m < 2; ++m) blocks[{a, m, m}] = Mat::Identity(1, 1);
    const ModuleGauge p(two.ring(), 2, two.action_tensor(), std::move(blocks));
    const ModuleTrivialization triv = trivialize_positive_module(p, two);
    CHECK(std::abs(triv.mu[0] - Cplx(1, 0)) < 1e-14);
    CHECK(std::abs(triv.mu[1] - Cplx(1, 0)) < 1e-14);
}

TEST_CASE("documented caveat: positive module natural isomorphisms") {
    // On a decomposable module the identity module functor has non-trivial
    // positive natural automorphisms: any positive scalar per component.
    // They are natural (the action fixes each simple) and nowhere near the
    // identity, yet they induce the identity coherence gauge
    //   p_{c,m} = eta_{c|>m}^{-1} (c |> eta_m) = 1,
    // so the trivializer never sees them and nothing claims to trivialize
    // them. This pins the scope: the tool trivializes positive module
    // *structure* gauges, never module natural isomorphisms.
    const ModuleData two = z2_two_point_module();
    const std::vector<Cplx> eta = {Cplx(1, 0), Cplx(3, 0)};

    // Naturality against the (identity) module functor structure: the
    // component at c |> m equals the component at m.
    for (int a = 0; a < 2; ++a)
        for (int m = 0; m < 2; ++m)
            for (int mp = 0; mp < 2; ++mp)
                if (two.action(a, m, mp) > 0)
                    CHECK(eta[static_cast<size_t>(mp)] ==
                          eta[static_cast<size_t>(m)]);

    // It is genuinely non-trivial, and positive.
    CHECK(std::abs(eta[1] - eta[0]) > 1.0);

    // Its induced module-structure gauge is exactly the identity; the
    // trivializer consequently returns the all-ones family and leaves eta
    // alone.
    const ModuleGauge induced = module_coboundary(two, eta);
    for (const auto& [k, m] : induced.blocks())
        CHECK(rel_diff(m, Mat::Identity(m.rows(), m.cols())) <= 1e-15);
    const ModuleTrivialization triv = trivialize_positive_module(induced, two);
    for (const Cplx& v : triv.mu) CHECK(std::abs(v - Cplx(1, 0)) < 1e-14);
}
