#include "builtins.hpp"

#include <algorithm>
#include <array>

#include "errors.hpp"

namespace ufc {

namespace {

constexpr double kSqrt5 = 2.23606797749978969640917366873;
constexpr double kGolden = (1.0 + kSqrt5) / 2.0;

std::vector<int> self_dual(int rank) {
    std::vector<int> d(static_cast<size_t>(rank));
    for (int i = 0; i < rank; ++i) d[static_cast<size_t>(i)] = i;
    return d;
}

// Fills every unit-touching admissible quadruple with the identity block.
void fill_unit_blocks(const FusionRing& ring, std::map<BlockKey, Mat>& blocks) {
    const int r = ring.rank();
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                for (int d = 0; d < r; ++d) {
                    if (a != 0 && b != 0 && c != 0) continue;
                    const TreeBasis rows = row_basis(ring, a, b, c, d);
                    if (rows.total > 0)
                        blocks[{a, b, c, d}] =
                            Mat::Identity(rows.total, rows.total);
                }
}

// Fibonacci-type associator: all scalar blocks 1, the (tau,tau,tau;tau)
// block determined by a root d of d^2 = d + 1. The off-diagonal entries are
// the principal square root of 1/d, which is imaginary for the negative
// root.
FSymbolSet golden_fsymbols(double root, double tol) {
    RingPtr ring = fibonacci_ring();
    std::map<BlockKey, Mat> blocks;
    fill_unit_blocks(*ring, blocks);

    Mat one(1, 1);
    one(0, 0) = 1.0;
    blocks[{1, 1, 1, 0}] = one;

    const Cplx off = std::sqrt(Cplx(1.0 / root, 0.0));
    Mat f(2, 2);
    f(0, 0) = 1.0 / root;
    f(0, 1) = off;
    f(1, 0) = off;
    f(1, 1) = -1.0 / root;
    blocks[{1, 1, 1, 1}] = f;
    return FSymbolSet(ring, std::move(blocks), tol);
}

} // namespace

RingPtr trivial_ring() {
    return std::make_shared<const FusionRing>(1, std::vector<int>{0},
                                              std::vector<int>{1});
}

RingPtr fibonacci_ring() {
    const int r = 2;
    std::vector<int> n(8, 0);
    auto set = [&](int a, int b, int c, int v) {
        n[(static_cast<size_t>(a) * r + b) * r + c] = v;
    };
    set(0, 0, 0, 1);
    set(0, 1, 1, 1);
    set(1, 0, 1, 1);
    set(1, 1, 0, 1);
    set(1, 1, 1, 1);
    return std::make_shared<const FusionRing>(r, self_dual(r), std::move(n));
}

RingPtr ising_ring() {
    // 0 = unit, 1 = sigma, 2 = psi.
    const int r = 3;
    std::vector<int> n(27, 0);
    auto set = [&](int a, int b, int c) {
        n[(static_cast<size_t>(a) * r + b) * r + c] = 1;
    };
    for (int a = 0; a < r; ++a) {
        set(0, a, a);
        if (a != 0) set(a, 0, a);
    }
    set(1, 1, 0);
    set(1, 1, 2);
    set(1, 2, 1);
    set(2, 1, 1);
    set(2, 2, 0);
    return std::make_shared<const FusionRing>(r, self_dual(r), std::move(n));
}

FSymbolSet fibonacci_fsymbols(double tol) { return golden_fsymbols(kGolden, tol); }

FSymbolSet yang_lee_fsymbols(double tol) {
    return golden_fsymbols(1.0 - kGolden, tol);
}

FSymbolSet ising_fsymbols(double tol) {
    RingPtr ring = ising_ring();
    std::map<BlockKey, Mat> blocks;
    fill_unit_blocks(*ring, blocks);

    auto scalar = [](Cplx v) {
        Mat m(1, 1);
        m(0, 0) = v;
        return m;
    };

    blocks[{1, 1, 2, 0}] = scalar(1.0);
    blocks[{1, 1, 2, 2}] = scalar(1.0);
    blocks[{1, 2, 1, 0}] = scalar(1.0);
    blocks[{1, 2, 1, 2}] = scalar(-1.0);
    blocks[{1, 2, 2, 1}] = scalar(1.0);
    blocks[{2, 1, 1, 0}] = scalar(1.0);
    blocks[{2, 1, 1, 2}] = scalar(1.0);
    blocks[{2, 1, 2, 1}] = scalar(-1.0);
    blocks[{2, 2, 1, 1}] = scalar(1.0);
    blocks[{2, 2, 2, 2}] = scalar(1.0);

    const double is = 1.0 / std::sqrt(2.0);
    Mat h(2, 2);
    h(0, 0) = is;
    h(0, 1) = is;
    h(1, 0) = is;
    h(1, 1) = -is;
    blocks[{1, 1, 1, 1}] = h;
    return FSymbolSet(ring, std::move(blocks), tol);
}

namespace {

RSymbolSet scalar_rsymbols(RingPtr ring,
                           const std::map<VertexKey, Cplx>& nontrivial) {
    std::map<VertexKey, Mat> blocks;
    const int r = ring->rank();
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                if (int n = ring->n(a, b, c); n > 0) {
                    Mat m = Mat::Identity(n, n);
                    auto it = nontrivial.find({a, b, c});
                    if (it != nontrivial.end()) m *= it->second;
                    blocks[{a, b, c}] = m;
                }
    return RSymbolSet(std::move(ring), std::move(blocks));
}

} // namespace

RSymbolSet fibonacci_rsymbols() {
    // Hexagon solution paired with the golden associator; the conjugate
    // family is the other solution.
    const double pi = 3.14159265358979323846264338328;
    const Cplx r0 = std::polar(1.0, -4.0 * pi / 5.0);
    const Cplx r1 = std::polar(1.0, 3.0 * pi / 5.0);
    return scalar_rsymbols(fibonacci_ring(),
                           {{{1, 1, 0}, r0}, {{1, 1, 1}, r1}});
}

RSymbolSet semion_rsymbols() {
    return scalar_rsymbols(group_ring(*cyclic_group(2)),
                           {{{1, 1, 0}, Cplx(0, 1)}});
}

GroupPtr cyclic_group(int n) {
    if (n <= 0) throw InputError("cyclic_group: order must be positive");
    std::vector<int> table(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[static_cast<size_t>(a) * n + b] = (a + b) % n;
    return std::make_shared<const FiniteGroup>(n, std::move(table));
}

GroupPtr klein_group() {
    // Z/2 x Z/2 with bitwise indexing.
    std::vector<int> table(16);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) table[static_cast<size_t>(a) * 4 + b] = a ^ b;
    return std::make_shared<const FiniteGroup>(4, std::move(table));
}

GroupPtr symmetric_group_s3() {
    // Permutations of three letters in lexicographic order; index 0 is the
    // identity.
    std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                             {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto find = [&](const std::array<int, 3>& p) {
        for (size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p) return static_cast<int>(i);
        return -1;
    };
    std::vector<int> table(36);
    for (size_t a = 0; a < perms.size(); ++a)
        for (size_t b = 0; b < perms.size(); ++b) {
            std::array<int, 3> comp;
            for (int i = 0; i < 3; ++i) comp[static_cast<size_t>(i)] =
                perms[a][static_cast<size_t>(perms[b][static_cast<size_t>(i)])];
            table[a * 6 + b] = find(comp);
        }
    return std::make_shared<const FiniteGroup>(6, std::move(table));
}

Cochain semion_cocycle() {
    GroupPtr z2 = cyclic_group(2);
    std::vector<Cplx> values(8, Cplx(1, 0));
    values[7] = Cplx(-1, 0); // (g, g, g)
    return make_cochain(std::move(z2), 3, std::move(values));
}

VecGData vec_z2_trivial(double tol) {
    GroupPtr z2 = cyclic_group(2);
    return build_vecg_category(z2, trivial_cochain(z2, 3), tol);
}

VecGData vec_z2_semion(double tol) {
    GroupPtr z2 = cyclic_group(2);
    return build_vecg_category(z2, semion_cocycle(), tol);
}

VecGData vec_z3(double tol) {
    GroupPtr z3 = cyclic_group(3);
    return build_vecg_category(z3, trivial_cochain(z3, 3), tol);
}

} // namespace ufc
