#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "builtins.hpp"
#include "equivalence.hpp"
#include "errors.hpp"
#include "oracles.hpp"

using namespace ufc;

namespace {

RingPtr fibonacci_with(int n_tt_t) {
    std::vector<int> n(8, 0);
    auto set = [&](int a, int b, int c, int v) { n[(a * 2 + b) * 2 + c] = v; };
    set(0, 0, 0, 1);
    set(0, 1, 1, 1);
    set(1, 0, 1, 1);
    set(1, 1, 0, 1);
    set(1, 1, 1, n_tt_t);
    return std::make_shared<const FusionRing>(2, std::vector<int>{0, 1},
                                              std::move(n));
}

// Rank-2 ring with a multiplicity-2 channel (tau tau -> 2 tau).
RingPtr multiplicity_two_ring() {
    std::vector<int> n(8, 0);
    auto set = [&](int a, int b, int c, int v) { n[(a * 2 + b) * 2 + c] = v; };
    set(0, 0, 0, 1);
    set(0, 1, 1, 1);
    set(1, 0, 1, 1);
    set(1, 1, 0, 1);
    set(1, 1, 1, 2);
    return std::make_shared<const FusionRing>(2, std::vector<int>{0, 1},
                                              std::move(n));
}

} // namespace

TEST_CASE("ring axioms") {
    CHECK(verify_ring_axioms(*trivial_ring()).pass);
    CHECK(verify_ring_axioms(*fibonacci_ring()).pass);
    CHECK(verify_ring_axioms(*ising_ring()).pass);
    CHECK(verify_ring_axioms(*group_ring(*symmetric_group_s3())).pass);
    CHECK(verify_ring_axioms(*multiplicity_two_ring()).pass);

    const RingReport bad = verify_ring_axioms(*fibonacci_with(2));
    CHECK_FALSE(bad.pass);
    CHECK(bad.first_violation.find("associativity") != std::string::npos);

    CHECK_THROWS_AS(FusionRing(2, {0}, std::vector<int>(8, 0)), InputError);
    CHECK_THROWS_AS(FusionRing(2, {0, 1}, std::vector<int>(7, 0)), InputError);
}

TEST_CASE("pentagon verification on the example library") {
    for (const auto& fs :
         {fibonacci_fsymbols(), yang_lee_fsymbols(), ising_fsymbols(),
          vec_z2_trivial().f_symbols, vec_z2_semion().f_symbols,
          vec_z3().f_symbols}) {
        const ResidualReport rep = verify_pentagon(fs);
        CHECK(rep.pass);
        CHECK(rep.max_residual <= 1e-10);
        // Independent scalar-substitution oracle agrees.
        CHECK(oracle::pentagon_residual(oracle::scalar_f_from(fs)) < 1e-12);
    }
}

TEST_CASE("pentagon catches a corrupted entry") {
    FSymbolSet fib = fibonacci_fsymbols();
    std::map<BlockKey, Mat> blocks = fib.blocks();
    Mat& block = blocks[{1, 1, 1, 1}];
    block(0, 1) = -block(0, 1); // sign flip
    const FSymbolSet bad(fib.ring(), std::move(blocks), fib.tol());
    const ResidualReport rep = verify_pentagon(bad);
    CHECK_FALSE(rep.pass);
    CHECK(rep.max_residual > 0.1);
}

TEST_CASE("unitarity verification") {
    CHECK(verify_unitary(vec_z2_semion().f_symbols).pass);
    CHECK(verify_unitary(fibonacci_fsymbols()).pass);

    const ResidualReport yl = verify_unitary(yang_lee_fsymbols());
    CHECK_FALSE(yl.pass);
    CHECK(yl.max_residual > 0.1);
}

TEST_CASE("missing block lookups are input errors") {
    const FSymbolSet fib = fibonacci_fsymbols();
    CHECK_THROWS_AS(fib.block(1, 1, 1, 2), InputError); // inadmissible
    // A block map missing an admissible quadruple is rejected on construction.
    std::map<BlockKey, Mat> blocks = fib.blocks();
    blocks.erase({1, 1, 1, 1});
    CHECK_THROWS_AS(FSymbolSet(fib.ring(), std::move(blocks)), InputError);
}

TEST_CASE("gauge action: identity, unit coboundary, pentagon transport") {
    const FSymbolSet fib = fibonacci_fsymbols();

    SUBCASE("identity gauge is exactly neutral") {
        const FSymbolSet same = apply_gauge(fib, Gauge::identity(fib.ring()));
        for (const auto& [k, m] : same.blocks())
            CHECK((m - fib.block(k.a, k.b, k.c, k.d)).norm() == 0.0);
    }

    SUBCASE("scaling one vertex of vec-z2 leaves the associator invariant") {
        const FSymbolSet z2 = vec_z2_trivial().f_symbols;
        std::map<VertexKey, Mat> blocks;
        for (const auto& [k, m] : Gauge::identity(z2.ring()).blocks())
            blocks[k] = m;
        blocks[{1, 1, 0}] = 2.0 * Mat::Identity(1, 1);
        const Gauge g(z2.ring(), std::move(blocks));
        const FSymbolSet gauged = apply_gauge(z2, g);
        // The coboundary combination at (g,g,g;g) is 1 for this vertex.
        CHECK(rel_diff(gauged.block(1, 1, 1, 1), z2.block(1, 1, 1, 1)) < 1e-15);
        CHECK(verify_pentagon(gauged).pass);
    }

    SUBCASE("random gauge keeps the pentagon, breaks unitarity") {
        Rng rng(101);
        const Gauge g = random_gauge(fib.ring(), rng, 10.0);
        const FSymbolSet gauged = apply_gauge(fib, g);
        CHECK(verify_pentagon(gauged).max_residual <= 100 * fib.tol());
        CHECK_FALSE(verify_unitary(gauged).pass);
    }

    SUBCASE("ring mismatch is rejected") {
        Rng rng(5);
        const Gauge g = random_gauge(ising_ring(), rng, 4.0);
        CHECK_THROWS_AS(apply_gauge(fib, g), InputError);
    }
}

TEST_CASE("gauge group operations") {
    const RingPtr ring = ising_ring();
    Rng rng(77);
    const Gauge g = random_gauge(ring, rng, 10.0);

    CHECK(is_identity_gauge(invert_gauge(Gauge::identity(ring)), 1e-15));
    CHECK(max_block_distance(adjoint_gauge(adjoint_gauge(g)), g) == 0.0);
    CHECK(is_identity_gauge(compose_gauges(g, invert_gauge(g)), 1e-10));

    // Group action property, composed in application order.
    const Gauge g2 = random_gauge(ring, rng, 10.0);
    const FSymbolSet f = ising_fsymbols();
    const FSymbolSet twice = apply_gauge(apply_gauge(f, g), g2);
    const FSymbolSet once = apply_gauge(f, compose_gauges(g2, g));
    double dist = 0.0;
    for (const auto& [k, m] : twice.blocks())
        dist = std::max(dist, rel_diff(m, once.block(k.a, k.b, k.c, k.d)));
    CHECK(dist <= 10 * f.tol());
}

TEST_CASE("pentagon residual is gauge-invariant up to conditioning") {
    // Condition <= 10 gauges keep a valid pentagon within 100 * tol.
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Rng rng(seed);
        for (const auto& fs : {fibonacci_fsymbols(), ising_fsymbols()}) {
            const Gauge g = random_gauge(fs.ring(), rng, 10.0);
            REQUIRE(gauge_condition(g) <= 10.0 + 1e-9);
            CHECK(verify_pentagon(apply_gauge(fs, g)).max_residual <=
                  100 * fs.tol());
        }
    }
}

TEST_CASE("positive character space vanishes on the example library") {
    CHECK(positive_character_space(*trivial_ring()).dimension == 0);
    CHECK(positive_character_space(*fibonacci_ring()).dimension == 0);
    CHECK(positive_character_space(*ising_ring()).dimension == 0);
    CHECK(positive_character_space(*group_ring(*cyclic_group(3))).dimension == 0);
    CHECK(positive_character_space(*group_ring(*symmetric_group_s3())).dimension ==
          0);
    CHECK(positive_character_space(*multiplicity_two_ring()).dimension == 0);
    CHECK(positive_character_space(*fibonacci_ring()).basis.empty());
}

TEST_CASE("Frobenius-Perron dimensions") {
    const std::vector<double> triv = fp_dimensions(*trivial_ring());
    CHECK(triv.size() == 1);
    CHECK(triv[0] == doctest::Approx(1.0));

    const std::vector<double> fib = fp_dimensions(*fibonacci_ring());
    CHECK(fib[0] == doctest::Approx(1.0));
    CHECK(fib[1] == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0));

    const std::vector<double> z2 = fp_dimensions(*group_ring(*cyclic_group(2)));
    CHECK(z2[0] == doctest::Approx(1.0));
    CHECK(z2[1] == doctest::Approx(1.0));

    // Multiplicativity d_a d_b = sum_c N_ab^c d_c on every built-in ring.
    for (const RingPtr& ring :
         {trivial_ring(), fibonacci_ring(), ising_ring(),
          group_ring(*cyclic_group(2)), group_ring(*cyclic_group(3)),
          group_ring(*symmetric_group_s3()), multiplicity_two_ring()}) {
        const std::vector<double> d = fp_dimensions(*ring);
        for (int a = 0; a < ring->rank(); ++a)
            for (int b = 0; b < ring->rank(); ++b) {
                double sum = 0.0;
                for (int c = 0; c < ring->rank(); ++c)
                    sum += ring->n(a, b, c) * d[static_cast<size_t>(c)];
                CHECK(std::abs(d[static_cast<size_t>(a)] *
                                   d[static_cast<size_t>(b)] -
                               sum) <= 1e-10 * std::max(1.0, sum));
            }
    }
}

TEST_CASE("brute-force pentagon solve classifies both golden roots") {
    //  Unknowns: the (tau,tau,tau;0) scalar and the 2x2 (tau,tau,tau;tau)
    //  block; the symmetric gauge is pinned by an off-diagonal-equality
    //  equation. Solutions split into two classes by the top-left entry,
    //  1/phi and -phi, matching the shipped fibonacci and yang-lee data.
    const RingPtr ring = fibonacci_ring();
    Rng rng(2024);
    auto gauge_fix = [](const oracle::ScalarF& f) {
        std::vector<Cplx> out;
        out.push_back(f.get(1, 1, 1, 1, 0, 1) - f.get(1, 1, 1, 1, 1, 0));
        return out;
    };
    const auto result =
        oracle::solve_pentagon_bruteforce(*ring, 24, rng, gauge_fix);
    REQUIRE(result.solutions.size() >= 2);

    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    bool found_golden = false, found_other = false;
    for (const auto& sol : result.solutions) {
        const Cplx z0 = sol.get(1, 1, 1, 0, 1, 1);
        const Cplx f00 = sol.get(1, 1, 1, 1, 0, 0);
        const Cplx f11 = sol.get(1, 1, 1, 1, 1, 1);
        const Cplx offprod =
            sol.get(1, 1, 1, 1, 0, 1) * sol.get(1, 1, 1, 1, 1, 0);
        CHECK(std::abs(z0 - Cplx(1, 0)) < 1e-8); // forced by the pentagon
        if (std::abs(f00 - Cplx(1.0 / phi, 0)) < 1e-8) {
            found_golden = true;
            CHECK(std::abs(f11 + Cplx(1.0 / phi, 0)) < 1e-8);
            CHECK(std::abs(offprod - Cplx(1.0 / phi, 0)) < 1e-8);
        }
        if (std::abs(f00 - Cplx(1.0 / (1.0 - phi), 0)) < 1e-8) {
            found_other = true;
            CHECK(std::abs(offprod - Cplx(1.0 / (1.0 - phi), 0)) < 1e-8);
        }
    }
    CHECK(found_golden);
    CHECK(found_other);

    // The shipped data carries exactly these gauge invariants.
    const auto fib = oracle::scalar_f_from(fibonacci_fsymbols());
    CHECK(std::abs(fib.get(1, 1, 1, 1, 0, 0) - Cplx(1.0 / phi, 0)) < 1e-14);
    const auto yl = oracle::scalar_f_from(yang_lee_fsymbols());
    CHECK(std::abs(yl.get(1, 1, 1, 1, 0, 0) - Cplx(1.0 / (1.0 - phi), 0)) <
          1e-14);
}

TEST_CASE("brute-force pentagon solve reaches the ising class") {
    const RingPtr ring = ising_ring();
    Rng rng(9);
    auto gauge_fix = [](const oracle::ScalarF& f) {
        // Pin the five-parameter diagonal gauge: symmetric sigma-block
        // off-diagonals and real-positive convention for three scalars.
        std::vector<Cplx> out;
        out.push_back(f.get(1, 1, 1, 1, 0, 2) - f.get(1, 1, 1, 1, 2, 0));
        out.push_back(f.get(1, 1, 2, 0, 2, 1) - Cplx(1, 0));
        out.push_back(f.get(1, 2, 2, 1, 1, 0) - Cplx(1, 0));
        out.push_back(f.get(2, 2, 1, 1, 0, 1) - Cplx(1, 0));
        return out;
    };
    const auto result =
        oracle::solve_pentagon_bruteforce(*ring, 40, rng, gauge_fix);
    REQUIRE(!result.solutions.empty());

    const double is = 1.0 / std::sqrt(2.0);
    bool found_ising = false;
    for (const auto& sol : result.solutions) {
        // |top-left of the sigma block| is gauge invariant.
        CHECK(std::abs(std::abs(sol.get(1, 1, 1, 1, 0, 0)) - is) < 1e-8);
        if (std::abs(sol.get(1, 1, 1, 1, 0, 0) - Cplx(is, 0)) < 1e-8 &&
            std::abs(sol.get(1, 2, 1, 2, 1, 1) + Cplx(1, 0)) < 1e-8 &&
            std::abs(sol.get(2, 1, 2, 1, 1, 1) + Cplx(1, 0)) < 1e-8)
            found_ising = true;
    }
    CHECK(found_ising);
}

TEST_CASE("multiplicity-two blocks are shaped and indexed correctly") {
    const RingPtr ring = multiplicity_two_ring();
    const TreeBasis rows = row_basis(*ring, 1, 1, 1, 1);
    // e = 0 contributes 1x1, e = 1 contributes 2x2 = 4 pairs.
    CHECK(rows.total == 5);
    CHECK(rows.labels == std::vector<int>{0, 1});
    CHECK(rows.dim1 == std::vector<int>{1, 2});
    CHECK(rows.dim2 == std::vector<int>{1, 2});
    CHECK(rows.index(1, 1, 0) == 3);

    // An identity associator on this ring is structurally valid.
    std::map<BlockKey, Mat> blocks;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) {
                    const TreeBasis rb = row_basis(*ring, a, b, c, d);
                    if (rb.total > 0)
                        blocks[{a, b, c, d}] = Mat::Identity(rb.total, rb.total);
                }
    CHECK_NOTHROW(FSymbolSet(ring, std::move(blocks)));
}
