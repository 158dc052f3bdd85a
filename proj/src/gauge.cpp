#include "gauge.hpp"

#include <functional>
#include <sstream>

#include "errors.hpp"

namespace ufc {

namespace {

std::string vertex_name(const VertexKey& k) {
    std::ostringstream os;
    os << "(" << k.a << ", " << k.b << "; " << k.c << ")";
    return os.str();
}

} // namespace

Gauge::Gauge(RingPtr ring, std::map<VertexKey, Mat> blocks)
    : ring_(std::move(ring)), blocks_(std::move(blocks)) {
    if (!ring_) throw InputError("gauge: null ring");
    const int r = ring_->rank();
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c) {
                const int n = ring_->n(a, b, c);
                auto it = blocks_.find({a, b, c});
                if (n == 0) {
                    if (it != blocks_.end())
                        throw InputError("gauge: block on empty channel " +
                                         vertex_name({a, b, c}));
                    continue;
                }
                if (it == blocks_.end())
                    throw InputError("gauge: missing block " +
                                     vertex_name({a, b, c}));
                if (it->second.rows() != n || it->second.cols() != n)
                    throw InputError("gauge: wrong block shape at " +
                                     vertex_name({a, b, c}));
                if ((a == 0 || b == 0) &&
                    (it->second - Mat::Identity(n, n)).norm() > 1e-12)
                    throw InputError(
                        "gauge: unit-touching block must be the identity at " +
                        vertex_name({a, b, c}));
            }
}

Gauge Gauge::identity(RingPtr ring) {
    std::map<VertexKey, Mat> blocks;
    const int r = ring->rank();
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                if (int n = ring->n(a, b, c); n > 0)
                    blocks[{a, b, c}] = Mat::Identity(n, n);
    return Gauge(std::move(ring), std::move(blocks));
}

const Mat& Gauge::block(int a, int b, int c) const {
    auto it = blocks_.find({a, b, c});
    if (it == blocks_.end())
        throw InputError("gauge: no block " + vertex_name({a, b, c}));
    return it->second;
}

Gauge Gauge::map_blocks(const std::function<Mat(const Mat&)>& f) const {
    std::map<VertexKey, Mat> out;
    for (const auto& [k, m] : blocks_) out[k] = f(m);
    return Gauge(ring_, std::move(out));
}

Gauge compose_gauges(const Gauge& g1, const Gauge& g2) {
    if (!(*g1.ring() == *g2.ring()))
        throw InputError("compose_gauges: ring mismatch");
    std::map<VertexKey, Mat> out;
    for (const auto& [k, m] : g1.blocks())
        out[k] = m * g2.block(k.a, k.b, k.c);
    return Gauge(g1.ring(), std::move(out));
}

Gauge invert_gauge(const Gauge& g) {
    std::map<VertexKey, Mat> out;
    for (const auto& [k, m] : g.blocks()) {
        Eigen::FullPivLU<Mat> lu(m);
        if (!lu.isInvertible())
            throw NumericError("invert_gauge: singular block " +
                               vertex_name(k));
        out[k] = lu.inverse();
    }
    return Gauge(g.ring(), std::move(out));
}

Gauge adjoint_gauge(const Gauge& g) {
    return g.map_blocks([](const Mat& m) { return Mat(m.adjoint()); });
}

Gauge coboundary_gauge(const NatIso& iso) {
    if (!iso.ring) throw InputError("coboundary_gauge: null ring");
    if (iso.components.size() != static_cast<size_t>(iso.ring->rank()))
        throw InputError("coboundary_gauge: wrong number of components");
    for (const Cplx& c : iso.components)
        if (std::abs(c) == 0.0)
            throw InputError("coboundary_gauge: zero component");
    std::map<VertexKey, Mat> blocks;
    const int r = iso.ring->rank();
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                if (int n = iso.ring->n(a, b, c); n > 0) {
                    const Cplx lam = iso.components[static_cast<size_t>(a)] *
                                     iso.components[static_cast<size_t>(b)] /
                                     iso.components[static_cast<size_t>(c)];
                    blocks[{a, b, c}] = lam * Mat::Identity(n, n);
                }
    return Gauge(iso.ring, std::move(blocks));
}

double max_block_distance(const Gauge& g1, const Gauge& g2) {
    double worst = 0.0;
    for (const auto& [k, m] : g1.blocks())
        worst = std::max(worst, rel_diff(m, g2.block(k.a, k.b, k.c)));
    return worst;
}

bool is_identity_gauge(const Gauge& g, double tol) {
    for (const auto& [k, m] : g.blocks()) {
        if ((m - Mat::Identity(m.rows(), m.cols())).norm() >
            tol * std::sqrt(static_cast<double>(m.rows())))
            return false;
    }
    return true;
}

double gauge_condition(const Gauge& g) {
    double worst = 1.0;
    for (const auto& [k, m] : g.blocks()) {
        Eigen::JacobiSVD<Mat> svd(m);
        const double smin = svd.singularValues().minCoeff();
        const double smax = svd.singularValues().maxCoeff();
        worst = std::max(worst, smin > 0
                                    ? smax / smin
                                    : std::numeric_limits<double>::infinity());
    }
    return worst;
}

Mat random_unitary(int n, Rng& rng) {
    Mat g(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = rng.gaussian_complex();
    Eigen::HouseholderQR<Mat> qr(g);
    Mat q = qr.householderQ();
    Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i) {
        const Cplx d = r(i, i);
        q.col(i) *= (std::abs(d) > 0 ? d / std::abs(d) : Cplx(1, 0));
    }
    return q;
}

namespace {

Eigen::VectorXd random_spectrum(int n, Rng& rng, double cond_cap) {
    // Singular values log-uniform in [1/sqrt(cap), sqrt(cap)].
    const double half = 0.5 * std::log(cond_cap);
    Eigen::VectorXd s(n);
    for (int i = 0; i < n; ++i) s[i] = std::exp(rng.uniform(-half, half));
    return s;
}

} // namespace

Mat random_invertible(int n, Rng& rng, double cond_cap) {
    Mat u = random_unitary(n, rng);
    Mat v = random_unitary(n, rng);
    return u * random_spectrum(n, rng, cond_cap).asDiagonal() * v.adjoint();
}

Mat random_positive(int n, Rng& rng, double cond_cap) {
    Mat u = random_unitary(n, rng);
    return u * random_spectrum(n, rng, cond_cap).asDiagonal() * u.adjoint();
}

namespace {

Gauge random_gauge_impl(RingPtr ring, Rng& rng, double cond_cap,
                        bool positive) {
    std::map<VertexKey, Mat> blocks;
    const int r = ring->rank();
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                if (int n = ring->n(a, b, c); n > 0) {
                    if (a == 0 || b == 0)
                        blocks[{a, b, c}] = Mat::Identity(n, n);
                    else
                        blocks[{a, b, c}] = positive
                                                ? random_positive(n, rng, cond_cap)
                                                : random_invertible(n, rng, cond_cap);
                }
    return Gauge(std::move(ring), std::move(blocks));
}

} // namespace

Gauge random_gauge(RingPtr ring, Rng& rng, double cond_cap) {
    return random_gauge_impl(std::move(ring), rng, cond_cap, false);
}

Gauge random_positive_gauge(RingPtr ring, Rng& rng, double cond_cap) {
    return random_gauge_impl(std::move(ring), rng, cond_cap, true);
}

NatIso random_nat_iso(RingPtr ring, Rng& rng, double cond_cap, bool positive) {
    NatIso iso;
    iso.ring = std::move(ring);
    iso.components.assign(static_cast<size_t>(iso.ring->rank()), Cplx(1, 0));
    const double half = 0.5 * std::log(cond_cap);
    for (int a = 1; a < iso.ring->rank(); ++a) {
        const double mag = std::exp(rng.uniform(-half, half));
        const double phase =
            positive ? 0.0 : rng.uniform(0.0, 6.283185307179586);
        iso.components[static_cast<size_t>(a)] =
            mag * Cplx(std::cos(phase), std::sin(phase));
    }
    return iso;
}

} // namespace ufc
