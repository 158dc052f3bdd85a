#include "braided.hpp"

#include <sstream>

#include "errors.hpp"
#include "polar.hpp"

namespace ufc {

RSymbolSet::RSymbolSet(RingPtr ring, std::map<VertexKey, Mat> blocks)
    : ring_(std::move(ring)), blocks_(std::move(blocks)) {
    if (!ring_) throw InputError("r-symbols: null ring");
    const int r = ring_->rank();
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c) {
                const int n = ring_->n(a, b, c);
                if (n > 0 && ring_->n(b, a, c) != n)
                    throw InputError(
                        "r-symbols: fusion ring is not commutative at channel (" +
                        std::to_string(a) + ", " + std::to_string(b) + "; " +
                        std::to_string(c) + ")");
                auto it = blocks_.find({a, b, c});
                if (n == 0) {
                    if (it != blocks_.end())
                        throw InputError("r-symbols: block on empty channel");
                    continue;
                }
                if (it == blocks_.end())
                    throw InputError("r-symbols: missing block (" +
                                     std::to_string(a) + ", " + std::to_string(b) +
                                     "; " + std::to_string(c) + ")");
                if (it->second.rows() != n || it->second.cols() != n)
                    throw InputError("r-symbols: wrong block shape");
                if ((a == 0 || b == 0) &&
                    (it->second - Mat::Identity(n, n)).norm() > 1e-12)
                    throw InputError(
                        "r-symbols: unit-touching block must be the identity");
            }
}

const Mat& RSymbolSet::block(int a, int b, int c) const {
    auto it = blocks_.find({a, b, c});
    if (it == blocks_.end())
        throw InputError("r-symbols: missing block (" + std::to_string(a) +
                         ", " + std::to_string(b) + "; " + std::to_string(c) +
                         ")");
    return it->second;
}

namespace {

// Middle factor of the first path: per column group g of (c,a,b;d),
// I_{N_ab^g} (x) R^{cg}_d  (or its inverse-family counterpart).
Mat middle_braid(const FusionRing& ring, const RSymbolSet& r, int c, int a,
                 int b, int d, bool inverse) {
    const TreeBasis cols = col_basis(ring, c, a, b, d);
    Mat out = Mat::Zero(cols.total, cols.total);
    for (size_t pos = 0; pos < cols.labels.size(); ++pos) {
        const int g = cols.labels[pos];
        const int n1 = cols.dim1[pos], n2 = cols.dim2[pos];
        const Mat braid = inverse
                              ? Mat(r.block(g, c, d).partialPivLu().inverse())
                              : r.block(c, g, d);
        out.block(cols.offsets[pos], cols.offsets[pos], n1 * n2, n1 * n2) =
            kron(Mat::Identity(n1, n1), braid);
    }
    return out;
}

// Left factor of the second path: per row group e of (c,a,b;d),
// R^{ca}_e (x) I_{N_eb^d}.
Mat left_braid(const FusionRing& ring, const RSymbolSet& r, int c, int a, int b,
               int d, bool inverse) {
    const TreeBasis rows = row_basis(ring, c, a, b, d);
    Mat out = Mat::Zero(rows.total, rows.total);
    for (size_t pos = 0; pos < rows.labels.size(); ++pos) {
        const int e = rows.labels[pos];
        const int n1 = rows.dim1[pos], n2 = rows.dim2[pos];
        const Mat braid = inverse
                              ? Mat(r.block(a, c, e).partialPivLu().inverse())
                              : r.block(c, a, e);
        out.block(rows.offsets[pos], rows.offsets[pos], n1 * n2, n1 * n2) =
            kron(braid, Mat::Identity(n2, n2));
    }
    return out;
}

// Right factor of the second path: per column group f of (a,b,c;d)
// (final tree), R^{cb}_f (x) I_{N_af^d}.
Mat right_braid(const FusionRing& ring, const RSymbolSet& r, int c, int a,
                int b, int d, bool inverse) {
    const TreeBasis cols = col_basis(ring, a, b, c, d);
    Mat out = Mat::Zero(cols.total, cols.total);
    for (size_t pos = 0; pos < cols.labels.size(); ++pos) {
        const int fch = cols.labels[pos];
        const int n1 = cols.dim1[pos], n2 = cols.dim2[pos];
        const Mat braid = inverse
                              ? Mat(r.block(b, c, fch).partialPivLu().inverse())
                              : r.block(c, b, fch);
        out.block(cols.offsets[pos], cols.offsets[pos], n1 * n2, n1 * n2) =
            kron(braid, Mat::Identity(n2, n2));
    }
    return out;
}

} // namespace

ResidualReport verify_hexagon(const FSymbolSet& f, const RSymbolSet& r) {
    if (!(*f.ring() == *r.ring()))
        throw InputError("verify_hexagon: ring mismatch");
    const FusionRing& ring = *f.ring();
    const int n = ring.rank();
    double worst = 0.0;
    std::string worst_at = "none";

    for (int c = 0; c < n; ++c)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int d = 0; d < n; ++d) {
                    if (!f.admissible(c, a, b, d)) continue;
                    for (int family = 0; family < 2; ++family) {
                        const bool inv = family == 1;
                        const Mat path1 = f.block(c, a, b, d) *
                                          middle_braid(ring, r, c, a, b, d, inv) *
                                          f.block(a, b, c, d);
                        const Mat path2 = left_braid(ring, r, c, a, b, d, inv) *
                                          f.block(a, c, b, d) *
                                          right_braid(ring, r, c, a, b, d, inv);
                        const double res = rel_diff(path1, path2);
                        if (res > worst) {
                            worst = res;
                            std::ostringstream os;
                            os << (inv ? "inverse " : "") << "hexagon at (c,a,b; d) = ("
                               << c << ", " << a << ", " << b << "; " << d << ")";
                            worst_at = os.str();
                        }
                    }
                }
    return {worst <= f.tol(), worst, worst_at};
}

ResidualReport verify_braiding_unitary(const FSymbolSet& f,
                                       const RSymbolSet& r) {
    const ResidualReport pent = verify_pentagon(f);
    if (!pent.pass)
        throw PreconditionError(
            "verify_braiding_unitary: associator fails the pentagon (residual " +
            std::to_string(pent.max_residual) + ")");
    const ResidualReport uni = verify_unitary(f);
    if (!uni.pass)
        throw PreconditionError(
            "verify_braiding_unitary: associator is not unitary");
    const ResidualReport hex = verify_hexagon(f, r);
    if (!hex.pass)
        throw PreconditionError(
            "verify_braiding_unitary: hexagon fails (residual " +
            std::to_string(hex.max_residual) + "); inconsistent input");

    double worst = 0.0;
    std::string worst_at = "none";
    for (const auto& [k, m] : r.blocks()) {
        const double dev = unitary_deviation(m);
        if (dev > worst) {
            worst = dev;
            worst_at = "braiding block (" + std::to_string(k.a) + ", " +
                       std::to_string(k.b) + "; " + std::to_string(k.c) + ")";
        }
    }
    return {worst <= f.tol(), worst, worst_at};
}

double braided_compatibility(const EquivalenceData& e, const RSymbolSet& r_src,
                             const RSymbolSet& r_tgt) {
    const FusionRing& src = *e.source.ring();
    const auto& phi = e.simple_map;
    double worst = 0.0;
    for (int a = 0; a < src.rank(); ++a)
        for (int b = 0; b < src.rank(); ++b)
            for (int c = 0; c < src.rank(); ++c) {
                if (src.n(a, b, c) == 0) continue;
                const int a2 = phi[static_cast<size_t>(a)];
                const int b2 = phi[static_cast<size_t>(b)];
                const int c2 = phi[static_cast<size_t>(c)];
                const Mat lhs =
                    r_tgt.block(a2, b2, c2) * e.tensorator.block(b2, a2, c2);
                const Mat rhs = e.tensorator.block(a2, b2, c2) * r_src.block(a, b, c);
                worst = std::max(worst, rel_diff(lhs, rhs));
            }
    return worst;
}

BraidedFactorization factorize_braided_equivalence(const EquivalenceData& e,
                                                   const RSymbolSet& r_src,
                                                   const RSymbolSet& r_tgt) {
    const double tol = e.source.tol();
    if (!(*r_src.ring() == *e.source.ring()) ||
        !(*r_tgt.ring() == *e.target.ring()))
        throw InputError("factorize_braided_equivalence: ring mismatch");

    BraidedFactorization out{factorize_equivalence(e), 0.0, 0.0, 0.0};
    out.compatibility = braided_compatibility(e, r_src, r_tgt);
    if (out.compatibility > tol) {
        std::ostringstream os;
        os << "factorize_braided_equivalence: tensorator is not "
              "braided-compatible (residual "
           << out.compatibility << " > tol " << tol << ")";
        throw PreconditionError(os.str());
    }

    const Gauge& p = out.base.positive_part;
    const FusionRing& tgt = *e.target.ring();
    for (int a = 0; a < tgt.rank(); ++a)
        for (int b = 0; b < tgt.rank(); ++b)
            for (int c = 0; c < tgt.rank(); ++c) {
                if (tgt.n(a, b, c) == 0) continue;
                const Mat lhs = p.block(a, b, c) * r_tgt.block(a, b, c);
                const Mat rhs = r_tgt.block(a, b, c) * p.block(b, a, c);
                out.commutation = std::max(out.commutation, rel_diff(lhs, rhs));
            }
    out.unitary_compatibility =
        braided_compatibility(out.base.unitary_equivalence, r_src, r_tgt);
    return out;
}

} // namespace ufc
