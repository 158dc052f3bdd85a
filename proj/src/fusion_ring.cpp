#include "fusion_ring.hpp"

#include <Eigen/Eigenvalues>
#include <sstream>

#include "errors.hpp"

namespace ufc {

FusionRing::FusionRing(int rank, std::vector<int> dual,
                       std::vector<int> n_tensor)
    : rank_(rank), dual_(std::move(dual)), n_(std::move(n_tensor)) {
    if (rank_ <= 0)
        throw InputError("fusion ring: rank must be positive");
    if (dual_.size() != static_cast<size_t>(rank_))
        throw InputError("fusion ring: dual table has wrong length");
    if (n_.size() != static_cast<size_t>(rank_) * rank_ * rank_)
        throw InputError("fusion ring: multiplicity tensor has wrong shape");
    for (int a = 0; a < rank_; ++a)
        if (dual_[static_cast<size_t>(a)] < 0 ||
            dual_[static_cast<size_t>(a)] >= rank_)
            throw InputError("fusion ring: dual index out of range");
    for (int v : n_)
        if (v < 0)
            throw InputError("fusion ring: negative fusion multiplicity");
}

std::vector<int> FusionRing::channels(int a, int b) const {
    std::vector<int> out;
    for (int c = 0; c < rank_; ++c)
        if (n(a, b, c) > 0) out.push_back(c);
    return out;
}

namespace {

std::string id3(const char* what, int a, int b, int c) {
    std::ostringstream os;
    os << what << " at (" << a << ", " << b << ", " << c << ")";
    return os.str();
}

} // namespace

RingReport verify_ring_axioms(const FusionRing& ring) {
    const int r = ring.rank();

    for (int a = 0; a < r; ++a) {
        if (ring.dual(ring.dual(a)) != a)
            return {false, "dual is not an involution at " + std::to_string(a)};
    }
    if (ring.dual(0) != 0) return {false, "dual does not fix the unit"};

    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
            if (ring.n(0, a, b) != (a == b ? 1 : 0))
                return {false, id3("unit law N_0a^b != delta", 0, a, b)};
            if (ring.n(a, 0, b) != (a == b ? 1 : 0))
                return {false, id3("unit law N_a0^b != delta", a, 0, b)};
            if (ring.n(a, b, 0) != (b == ring.dual(a) ? 1 : 0))
                return {false, id3("rigidity N_ab^0 != delta_{b,dual a}", a, b, 0)};
        }

    // Frobenius reciprocity: N_ab^c = N_{a* c}^b = N_{c b*}^a.
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c) {
                const int nabc = ring.n(a, b, c);
                if (ring.n(ring.dual(a), c, b) != nabc)
                    return {false, id3("Frobenius reciprocity (a*,c;b)", a, b, c)};
                if (ring.n(c, ring.dual(b), a) != nabc)
                    return {false, id3("Frobenius reciprocity (c,b*;a)", a, b, c)};
            }

    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                for (int d = 0; d < r; ++d) {
                    long lhs = 0, rhs = 0;
                    for (int e = 0; e < r; ++e)
                        lhs += static_cast<long>(ring.n(a, b, e)) * ring.n(e, c, d);
                    for (int f = 0; f < r; ++f)
                        rhs += static_cast<long>(ring.n(b, c, f)) * ring.n(a, f, d);
                    if (lhs != rhs) {
                        std::ostringstream os;
                        os << "associativity fails at (a,b,c,d) = (" << a << ", "
                           << b << ", " << c << ", " << d << "): " << lhs
                           << " != " << rhs;
                        return {false, os.str()};
                    }
                }

    return {true, ""};
}

CharacterSpace positive_character_space(const FusionRing& ring, double tol) {
    const int r = ring.rank();
    // Unknowns x_1..x_{r-1} (x_0 eliminated as 0). One row per channel.
    std::vector<Eigen::RowVectorXd> rows;
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                if (ring.n(a, b, c) > 0) {
                    Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(r - 1);
                    if (a > 0) row[a - 1] += 1.0;
                    if (b > 0) row[b - 1] += 1.0;
                    if (c > 0) row[c - 1] -= 1.0;
                    if (row.norm() > 0) rows.push_back(row);
                }

    CharacterSpace out;
    if (r == 1 || rows.empty()) {
        out.dimension = r - 1;
        for (int i = 0; i < r - 1; ++i) {
            std::vector<double> v(static_cast<size_t>(r), 0.0);
            v[static_cast<size_t>(i + 1)] = 1.0;
            out.basis.push_back(std::move(v));
        }
        return out;
    }

    RealMat a(static_cast<Eigen::Index>(rows.size()), r - 1);
    for (size_t i = 0; i < rows.size(); ++i)
        a.row(static_cast<Eigen::Index>(i)) = rows[i];

    Eigen::JacobiSVD<RealMat> svd(a, Eigen::ComputeFullV);
    const double smax = svd.singularValues().size()
                            ? svd.singularValues().maxCoeff()
                            : 0.0;
    int rank_a = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
        if (svd.singularValues()[i] > tol * std::max(smax, 1.0)) ++rank_a;

    out.dimension = (r - 1) - rank_a;
    for (int k = 0; k < out.dimension; ++k) {
        std::vector<double> v(static_cast<size_t>(r), 0.0);
        for (int i = 0; i < r - 1; ++i)
            v[static_cast<size_t>(i + 1)] = svd.matrixV()(i, rank_a + k);
        out.basis.push_back(std::move(v));
    }
    return out;
}

std::vector<double> fp_dimensions(const FusionRing& ring) {
    const int r = ring.rank();
    std::vector<double> dims(static_cast<size_t>(r), 1.0);
    for (int a = 0; a < r; ++a) {
        RealMat na(r, r);
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c) na(b, c) = ring.n(a, b, c);
        Eigen::EigenSolver<RealMat> es(na);
        double radius = 0.0;
        for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
            radius = std::max(radius, std::abs(es.eigenvalues()[i]));
        dims[static_cast<size_t>(a)] = radius;
    }
    return dims;
}

} // namespace ufc
