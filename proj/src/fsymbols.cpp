#include "fsymbols.hpp"

#include <sstream>

#include "errors.hpp"

namespace ufc {

namespace {

std::string quad_name(const BlockKey& k) {
    std::ostringstream os;
    os << "(" << k.a << ", " << k.b << ", " << k.c << "; " << k.d << ")";
    return os.str();
}

} // namespace

int TreeBasis::position(int label) const {
    for (size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return static_cast<int>(i);
    return -1;
}

TreeBasis row_basis(const FusionRing& ring, int a, int b, int c, int d) {
    TreeBasis t;
    for (int e = 0; e < ring.rank(); ++e) {
        const int n1 = ring.n(a, b, e);
        const int n2 = ring.n(e, c, d);
        if (n1 > 0 && n2 > 0) {
            t.labels.push_back(e);
            t.dim1.push_back(n1);
            t.dim2.push_back(n2);
            t.offsets.push_back(t.total);
            t.total += n1 * n2;
        }
    }
    return t;
}

TreeBasis col_basis(const FusionRing& ring, int a, int b, int c, int d) {
    TreeBasis t;
    for (int f = 0; f < ring.rank(); ++f) {
        const int n1 = ring.n(b, c, f);
        const int n2 = ring.n(a, f, d);
        if (n1 > 0 && n2 > 0) {
            t.labels.push_back(f);
            t.dim1.push_back(n1);
            t.dim2.push_back(n2);
            t.offsets.push_back(t.total);
            t.total += n1 * n2;
        }
    }
    return t;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
    return out;
}

namespace {

Mat assemble_lambda(const TreeBasis& basis,
                    const std::function<std::pair<Mat, Mat>(int)>& vertex_pair) {
    Mat out = Mat::Zero(basis.total, basis.total);
    for (size_t pos = 0; pos < basis.labels.size(); ++pos) {
        auto [m1, m2] = vertex_pair(basis.labels[pos]);
        const int off = basis.offsets[pos];
        const int dim = basis.dim1[pos] * basis.dim2[pos];
        out.block(off, off, dim, dim) = kron(m1, m2);
    }
    return out;
}

} // namespace

Mat lambda_left(const Gauge& g, int a, int b, int c, int d) {
    const TreeBasis basis = row_basis(*g.ring(), a, b, c, d);
    return assemble_lambda(basis, [&](int e) {
        return std::make_pair(g.block(a, b, e), g.block(e, c, d));
    });
}

Mat lambda_right(const Gauge& g, int a, int b, int c, int d) {
    const TreeBasis basis = col_basis(*g.ring(), a, b, c, d);
    return assemble_lambda(basis, [&](int f) {
        return std::make_pair(g.block(b, c, f), g.block(a, f, d));
    });
}

FSymbolSet::FSymbolSet(RingPtr ring, std::map<BlockKey, Mat> blocks, double tol)
    : ring_(std::move(ring)), tol_(tol), blocks_(std::move(blocks)) {
    if (!ring_) throw InputError("f-symbols: null ring");
    if (tol_ <= 0) throw InputError("f-symbols: tolerance must be positive");
    const int r = ring_->rank();
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                for (int d = 0; d < r; ++d) {
                    const TreeBasis rows = row_basis(*ring_, a, b, c, d);
                    const TreeBasis cols = col_basis(*ring_, a, b, c, d);
                    auto it = blocks_.find({a, b, c, d});
                    if (rows.total == 0) {
                        if (it != blocks_.end())
                            throw InputError(
                                "f-symbols: block on non-admissible quadruple " +
                                quad_name({a, b, c, d}));
                        continue;
                    }
                    if (it == blocks_.end())
                        throw InputError("f-symbols: missing block for " +
                                         quad_name({a, b, c, d}));
                    if (it->second.rows() != rows.total ||
                        it->second.cols() != cols.total)
                        throw InputError("f-symbols: wrong block shape at " +
                                         quad_name({a, b, c, d}));
                    if (a == 0 || b == 0 || c == 0) {
                        if ((it->second - Mat::Identity(rows.total, cols.total))
                                .norm() > 1e-12 * std::sqrt(double(rows.total)))
                            throw InputError(
                                "f-symbols: unit-touching block must be the "
                                "identity at " +
                                quad_name({a, b, c, d}));
                    }
                }
}

const Mat& FSymbolSet::block(int a, int b, int c, int d) const {
    auto it = blocks_.find({a, b, c, d});
    if (it == blocks_.end())
        throw InputError("f-symbols: missing block for admissible quadruple " +
                         quad_name({a, b, c, d}));
    return it->second;
}

bool FSymbolSet::admissible(int a, int b, int c, int d) const {
    return blocks_.count({a, b, c, d}) > 0;
}

double FSymbolSet::max_block_condition() const {
    double worst = 1.0;
    for (const auto& [k, m] : blocks_) {
        Eigen::JacobiSVD<Mat> svd(m);
        const double smin = svd.singularValues().minCoeff();
        const double smax = svd.singularValues().maxCoeff();
        worst = std::max(worst, smin > 0
                                    ? smax / smin
                                    : std::numeric_limits<double>::infinity());
    }
    return worst;
}

ResidualReport verify_pentagon(const FSymbolSet& fs) {
    const FusionRing& ring = *fs.ring();
    const int r = ring.rank();
    double worst = 0.0;
    std::string worst_at = "none";

    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                for (int d = 0; d < r; ++d)
                    for (int e = 0; e < r; ++e) {
                        // Rows: (f, g; alpha, beta, gamma), lex.
                        struct Row {
                            int f, g, al, be, ga;
                        };
                        std::vector<Row> rows;
                        for (int f = 0; f < r; ++f) {
                            if (ring.n(a, b, f) == 0) continue;
                            for (int g = 0; g < r; ++g) {
                                if (ring.n(f, c, g) == 0 || ring.n(g, d, e) == 0)
                                    continue;
                                for (int al = 0; al < ring.n(a, b, f); ++al)
                                    for (int be = 0; be < ring.n(f, c, g); ++be)
                                        for (int ga = 0; ga < ring.n(g, d, e); ++ga)
                                            rows.push_back({f, g, al, be, ga});
                            }
                        }
                        if (rows.empty()) continue;

                        struct Col {
                            int l, k, mu, la, ka;
                        };
                        std::vector<Col> cols;
                        for (int l = 0; l < r; ++l) {
                            if (ring.n(c, d, l) == 0) continue;
                            for (int k = 0; k < r; ++k) {
                                if (ring.n(b, l, k) == 0 || ring.n(a, k, e) == 0)
                                    continue;
                                for (int mu = 0; mu < ring.n(c, d, l); ++mu)
                                    for (int la = 0; la < ring.n(b, l, k); ++la)
                                        for (int ka = 0; ka < ring.n(a, k, e); ++ka)
                                            cols.push_back({l, k, mu, la, ka});
                            }
                        }

                        Mat lhs = Mat::Zero(static_cast<Eigen::Index>(rows.size()),
                                            static_cast<Eigen::Index>(cols.size()));
                        Mat rhs = lhs;

                        for (size_t ri = 0; ri < rows.size(); ++ri) {
                            const Row& rw = rows[ri];
                            // Left path: reassociate (f c) d, then a b (cd).
                            const Mat& f1 = fs.block(rw.f, c, d, e);
                            const TreeBasis f1r = row_basis(ring, rw.f, c, d, e);
                            const TreeBasis f1c = col_basis(ring, rw.f, c, d, e);
                            const int f1rp = f1r.position(rw.g);

                            // Right path blocks independent of column.
                            const Mat& f3 = fs.block(a, b, c, rw.g);
                            const TreeBasis f3r = row_basis(ring, a, b, c, rw.g);
                            const TreeBasis f3c = col_basis(ring, a, b, c, rw.g);
                            const int f3rp = f3r.position(rw.f);

                            for (size_t ci = 0; ci < cols.size(); ++ci) {
                                const Col& cl = cols[ci];

                                // LHS: sum over delta < N_{f l}^e.
                                const Mat& g2 = fs.block(a, b, cl.l, e);
                                const TreeBasis g2r = row_basis(ring, a, b, cl.l, e);
                                const TreeBasis g2c = col_basis(ring, a, b, cl.l, e);
                                const int f1cp = f1c.position(cl.l);
                                const int g2rp = g2r.position(rw.f);
                                const int g2cp = g2c.position(cl.k);
                                Cplx acc(0, 0);
                                if (f1cp >= 0 && g2rp >= 0 && g2cp >= 0) {
                                    const int ndelta = ring.n(rw.f, cl.l, e);
                                    for (int de = 0; de < ndelta; ++de) {
                                        acc += f1(f1r.index(f1rp, rw.be, rw.ga),
                                                  f1c.index(f1cp, cl.mu, de)) *
                                               g2(g2r.index(g2rp, rw.al, de),
                                                  g2c.index(g2cp, cl.la, cl.ka));
                                    }
                                }
                                lhs(static_cast<Eigen::Index>(ri),
                                    static_cast<Eigen::Index>(ci)) = acc;

                                // RHS: sum over h, sigma, psi, tau.
                                Cplx acc2(0, 0);
                                for (size_t hp = 0; hp < f3c.labels.size(); ++hp) {
                                    const int h = f3c.labels[static_cast<size_t>(hp)];
                                    if (ring.n(h, d, cl.k) == 0) continue;
                                    if (!fs.admissible(a, h, d, e) ||
                                        !fs.admissible(b, c, d, cl.k))
                                        continue;
                                    const Mat& f4 = fs.block(a, h, d, e);
                                    const TreeBasis f4r = row_basis(ring, a, h, d, e);
                                    const TreeBasis f4c = col_basis(ring, a, h, d, e);
                                    const Mat& f5 = fs.block(b, c, d, cl.k);
                                    const TreeBasis f5r = row_basis(ring, b, c, d, cl.k);
                                    const TreeBasis f5c = col_basis(ring, b, c, d, cl.k);
                                    const int f4rp = f4r.position(rw.g);
                                    const int f4cp = f4c.position(cl.k);
                                    const int f5rp = f5r.position(h);
                                    const int f5cp = f5c.position(cl.l);
                                    if (f4rp < 0 || f4cp < 0 || f5rp < 0 || f5cp < 0)
                                        continue;
                                    const int nsig = ring.n(b, c, h);
                                    const int npsi = ring.n(a, h, rw.g);
                                    const int ntau = ring.n(h, d, cl.k);
                                    for (int si = 0; si < nsig; ++si)
                                        for (int ps = 0; ps < npsi; ++ps)
                                            for (int ta = 0; ta < ntau; ++ta) {
                                                acc2 +=
                                                    f3(f3r.index(f3rp, rw.al, rw.be),
                                                       f3c.index(static_cast<int>(hp),
                                                                 si, ps)) *
                                                    f4(f4r.index(f4rp, ps, rw.ga),
                                                       f4c.index(f4cp, ta, cl.ka)) *
                                                    f5(f5r.index(f5rp, si, ta),
                                                       f5c.index(f5cp, cl.mu, cl.la));
                                            }
                                }
                                rhs(static_cast<Eigen::Index>(ri),
                                    static_cast<Eigen::Index>(ci)) = acc2;
                            }
                        }

                        const double res = rel_diff(lhs, rhs);
                        if (res > worst) {
                            worst = res;
                            std::ostringstream os;
                            os << "pentagon instance (a,b,c,d; e) = (" << a << ", "
                               << b << ", " << c << ", " << d << "; " << e << ")";
                            worst_at = os.str();
                        }
                    }

    return {worst <= fs.tol(), worst, worst_at};
}

ResidualReport verify_unitary(const FSymbolSet& fs) {
    double worst = 0.0;
    std::string worst_at = "none";
    for (const auto& [k, m] : fs.blocks()) {
        const double dev = unitary_deviation(m);
        if (dev > worst) {
            worst = dev;
            worst_at = "block " + quad_name(k);
        }
    }
    return {worst <= fs.tol(), worst, worst_at};
}

FSymbolSet apply_gauge(const FSymbolSet& fs, const Gauge& g) {
    if (!(*fs.ring() == *g.ring()))
        throw InputError("apply_gauge: ring mismatch");
    std::map<BlockKey, Mat> out;
    for (const auto& [k, m] : fs.blocks()) {
        const Mat left = lambda_left(g, k.a, k.b, k.c, k.d);
        const Mat right = lambda_right(g, k.a, k.b, k.c, k.d);
        out[k] = left * m * right.partialPivLu().inverse();
    }
    return FSymbolSet(fs.ring(), std::move(out), fs.tol());
}

} // namespace ufc
