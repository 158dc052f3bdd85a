#include "gauge_search.hpp"

#include "errors.hpp"
#include "polar.hpp"
#include "rng.hpp"

namespace ufc {

namespace {

Mat hermitian_log(const Mat& p) {
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (p + p.adjoint()));
    Eigen::VectorXd vals = es.eigenvalues();
    for (Eigen::Index i = 0; i < vals.size(); ++i)
        vals[i] = std::log(std::max(vals[i], 1e-300));
    return es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint();
}

Mat hermitian_exp(const Mat& h) {
    Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (h + h.adjoint()));
    Eigen::VectorXd vals = es.eigenvalues();
    for (Eigen::Index i = 0; i < vals.size(); ++i) vals[i] = std::exp(vals[i]);
    return es.eigenvectors() * vals.asDiagonal() * es.eigenvectors().adjoint();
}

Mat partial_trace_second(const Mat& x, int n1, int n2) {
    Mat out = Mat::Zero(n1, n1);
    for (int i = 0; i < n1; ++i)
        for (int k = 0; k < n1; ++k)
            for (int j = 0; j < n2; ++j) out(i, k) += x(i * n2 + j, k * n2 + j);
    return out;
}

Mat partial_trace_first(const Mat& x, int n1, int n2) {
    Mat out = Mat::Zero(n2, n2);
    for (int j = 0; j < n2; ++j)
        for (int l = 0; l < n2; ++l)
            for (int i = 0; i < n1; ++i) out(j, l) += x(i * n2 + j, i * n2 + l);
    return out;
}

double unitarity_residual(const FSymbolSet& f) {
    double worst = 0.0;
    for (const auto& [k, m] : f.blocks())
        worst = std::max(worst, unitary_deviation(m));
    return worst;
}

struct Accumulator {
    std::map<VertexKey, Mat> sums;
    std::map<VertexKey, int> counts;

    void add(const FusionRing& ring, const VertexKey& k, const Mat& m) {
        if (k.a == 0 || k.b == 0) return; // unit vertices stay pinned
        auto it = sums.find(k);
        if (it == sums.end()) {
            sums[k] = m;
            counts[k] = 1;
        } else {
            it->second += m;
            ++counts[k];
        }
        (void)ring;
    }
};

// Kronecker-sum split of a Hermitian target on V1 (x) V2, trace shared
// evenly between the factors.
std::pair<Mat, Mat> split_kron_sum(const Mat& t, int n1, int n2) {
    const Cplx tr = t.trace();
    Mat a1 = partial_trace_second(t, n1, n2) / static_cast<double>(n2);
    Mat a2 = partial_trace_first(t, n1, n2) / static_cast<double>(n1);
    const Cplx shift = tr / static_cast<double>(2 * n1 * n2);
    a1 -= shift * Mat::Identity(n1, n1);
    a2 -= shift * Mat::Identity(n2, n2);
    return {a1, a2};
}

} // namespace

GaugeSearchResult search_unitary_gauge(const FSymbolSet& f, int max_iters,
                                       std::uint64_t seed, double stop_tol) {
    if (max_iters < 0)
        throw InputError("search_unitary_gauge: max_iters must be >= 0");
    const FusionRing& ring = *f.ring();
    Rng rng(seed);

    Gauge current = Gauge::identity(f.ring());
    Gauge best = current;
    double best_res = unitarity_residual(f);
    int best_iter = 0;
    const double damping = 0.5;

    if (best_res <= stop_tol)
        return {best, best_res, 0, true};

    FSymbolSet gauged = f;
    int stall = 0;
    int it = 0;
    for (it = 1; it <= max_iters; ++it) {
        Accumulator acc;
        for (const auto& [q, block] : gauged.blocks()) {
            if (unitary_deviation(block) <= 0.1 * stop_tol) continue;
            const TreeBasis rows = row_basis(ring, q.a, q.b, q.c, q.d);
            const TreeBasis cols = col_basis(ring, q.a, q.b, q.c, q.d);

            // Want lambda_left ~ (B B^dagger)^{-1/4} and
            // lambda_right ~ (B^dagger B)^{+1/4}; attribute the e/f-diagonal
            // parts of the logs to the participating vertices.
            const Mat log_left = -0.25 * hermitian_log(block * block.adjoint());
            const Mat log_right = 0.25 * hermitian_log(block.adjoint() * block);

            for (size_t pos = 0; pos < rows.labels.size(); ++pos) {
                const int e = rows.labels[pos];
                const int n1 = rows.dim1[pos], n2 = rows.dim2[pos];
                const int off = rows.offsets[pos];
                auto [a1, a2] =
                    split_kron_sum(log_left.block(off, off, n1 * n2, n1 * n2),
                                   n1, n2);
                acc.add(ring, {q.a, q.b, e}, a1);
                acc.add(ring, {e, q.c, q.d}, a2);
            }
            for (size_t pos = 0; pos < cols.labels.size(); ++pos) {
                const int fch = cols.labels[pos];
                const int n1 = cols.dim1[pos], n2 = cols.dim2[pos];
                const int off = cols.offsets[pos];
                auto [a1, a2] =
                    split_kron_sum(log_right.block(off, off, n1 * n2, n1 * n2),
                                   n1, n2);
                acc.add(ring, {q.b, q.c, fch}, a1);
                acc.add(ring, {q.a, fch, q.d}, a2);
            }
        }

        std::map<VertexKey, Mat> step;
        for (int a = 0; a < ring.rank(); ++a)
            for (int b = 0; b < ring.rank(); ++b)
                for (int c = 0; c < ring.rank(); ++c) {
                    const int n = ring.n(a, b, c);
                    if (n == 0) continue;
                    auto it2 = acc.sums.find({a, b, c});
                    if (it2 == acc.sums.end()) {
                        step[{a, b, c}] = Mat::Identity(n, n);
                    } else {
                        Mat avg = it2->second / double(acc.counts[{a, b, c}]);
                        step[{a, b, c}] = hermitian_exp(damping * avg);
                    }
                }
        Gauge h(f.ring(), std::move(step));

        current = compose_gauges(h, current);
        gauged = apply_gauge(f, current);
        const double res = unitarity_residual(gauged);
        if (res < best_res) {
            best_res = res;
            best = current;
            best_iter = it;
            stall = 0;
        } else {
            ++stall;
        }
        if (best_res <= stop_tol) break;

        // Stalled: kick with a small seeded positive jitter.
        if (stall >= 25) {
            std::map<VertexKey, Mat> jitter;
            for (const auto& [k, m] : current.blocks()) {
                const int n = static_cast<int>(m.rows());
                if (k.a == 0 || k.b == 0) {
                    jitter[k] = Mat::Identity(n, n);
                    continue;
                }
                Mat g(n, n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) g(i, j) = rng.gaussian_complex();
                jitter[k] = hermitian_exp(0.05 * (g + Mat(g.adjoint())));
            }
            current = compose_gauges(Gauge(f.ring(), std::move(jitter)), current);
            gauged = apply_gauge(f, current);
            stall = 0;
        }
    }

    (void)best_iter;
    return {best, best_res, std::min(it, max_iters), best_res <= stop_tol};
}

} // namespace ufc
