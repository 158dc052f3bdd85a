#include "module_cat.hpp"

#include <numeric>
#include <sstream>

#include "errors.hpp"
#include "polar.hpp"

namespace ufc {

namespace {

std::string action_name(const ActionKey& k) {
    std::ostringstream os;
    os << "(" << k.a << "; " << k.m << " -> " << k.mp << ")";
    return os.str();
}

std::string mblock_name(const ModuleBlockKey& k) {
    std::ostringstream os;
    os << "(" << k.a << ", " << k.b << ", " << k.m << "; " << k.mp << ")";
    return os.str();
}

int action_of(const std::vector<int>& t, int mrank, int a, int m, int mp) {
    return t[(static_cast<size_t>(a) * mrank + m) * mrank + mp];
}

} // namespace

ModuleGauge::ModuleGauge(RingPtr ring, int module_rank,
                         const std::vector<int>& action_tensor,
                         std::map<ActionKey, Mat> blocks)
    : blocks_(std::move(blocks)) {
    const int r = ring->rank();
    for (int a = 0; a < r; ++a)
        for (int m = 0; m < module_rank; ++m)
            for (int mp = 0; mp < module_rank; ++mp) {
                const int n = action_of(action_tensor, module_rank, a, m, mp);
                auto it = blocks_.find({a, m, mp});
                if (n == 0) {
                    if (it != blocks_.end())
                        throw InputError("module gauge: block on empty vertex " +
                                         action_name({a, m, mp}));
                    continue;
                }
                if (it == blocks_.end())
                    throw InputError("module gauge: missing block " +
                                     action_name({a, m, mp}));
                if (it->second.rows() != n || it->second.cols() != n)
                    throw InputError("module gauge: wrong block shape at " +
                                     action_name({a, m, mp}));
                if (a == 0 && (it->second - Mat::Identity(n, n)).norm() > 1e-12)
                    throw InputError(
                        "module gauge: unit-action block must be the identity");
            }
}

const Mat& ModuleGauge::block(int a, int m, int mp) const {
    auto it = blocks_.find({a, m, mp});
    if (it == blocks_.end())
        throw InputError("module gauge: no block " + action_name({a, m, mp}));
    return it->second;
}

ModuleData::ModuleData(RingPtr ring, int module_rank,
                       std::vector<int> action_tensor,
                       std::map<ModuleBlockKey, Mat> l_blocks, double tol)
    : ring_(std::move(ring)),
      module_rank_(module_rank),
      tol_(tol),
      action_(std::move(action_tensor)),
      l_blocks_(std::move(l_blocks)) {
    if (!ring_) throw InputError("module data: null ring");
    if (module_rank_ <= 0)
        throw InputError("module data: module rank must be positive");
    const int r = ring_->rank();
    if (action_.size() !=
        static_cast<size_t>(r) * module_rank_ * module_rank_)
        throw InputError("module data: action tensor has wrong shape");
    for (int v : action_)
        if (v < 0) throw InputError("module data: negative action multiplicity");

    for (int m = 0; m < module_rank_; ++m)
        for (int mp = 0; mp < module_rank_; ++mp)
            if (action(0, m, mp) != (m == mp ? 1 : 0))
                throw InputError("module data: unit must act as the identity");

    // Action associativity: sum_m1 n_bm^m1 n_am1^mp = sum_c N_ab^c n_cm^mp.
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int m = 0; m < module_rank_; ++m)
                for (int mp = 0; mp < module_rank_; ++mp) {
                    long lhs = 0, rhs = 0;
                    for (int m1 = 0; m1 < module_rank_; ++m1)
                        lhs += static_cast<long>(action(b, m, m1)) *
                               action(a, m1, mp);
                    for (int c = 0; c < r; ++c)
                        rhs += static_cast<long>(ring_->n(a, b, c)) *
                               action(c, m, mp);
                    if (lhs != rhs) {
                        std::ostringstream os;
                        os << "module data: action associativity fails at (a,b,m,m')"
                           << " = (" << a << ", " << b << ", " << m << ", " << mp
                           << ")";
                        throw InputError(os.str());
                    }
                }

    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int m = 0; m < module_rank_; ++m)
                for (int mp = 0; mp < module_rank_; ++mp) {
                    const TreeBasis rows = row_basis_of(a, b, m, mp);
                    const TreeBasis cols = col_basis_of(a, b, m, mp);
                    auto it = l_blocks_.find({a, b, m, mp});
                    if (rows.total == 0) {
                        if (it != l_blocks_.end())
                            throw InputError(
                                "module data: block on non-admissible quadruple " +
                                mblock_name({a, b, m, mp}));
                        continue;
                    }
                    if (it == l_blocks_.end())
                        throw InputError("module data: missing block " +
                                         mblock_name({a, b, m, mp}));
                    if (it->second.rows() != rows.total ||
                        it->second.cols() != cols.total)
                        throw InputError("module data: wrong block shape at " +
                                         mblock_name({a, b, m, mp}));
                    if (a == 0 || b == 0) {
                        if ((it->second - Mat::Identity(rows.total, cols.total))
                                .norm() > 1e-12 * std::sqrt(double(rows.total)))
                            throw InputError(
                                "module data: unit-touching block must be the "
                                "identity at " +
                                mblock_name({a, b, m, mp}));
                    }
                }
}

const Mat& ModuleData::l_block(int a, int b, int m, int mp) const {
    auto it = l_blocks_.find({a, b, m, mp});
    if (it == l_blocks_.end())
        throw InputError("module data: missing block " +
                         mblock_name({a, b, m, mp}));
    return it->second;
}

bool ModuleData::admissible(int a, int b, int m, int mp) const {
    return l_blocks_.count({a, b, m, mp}) > 0;
}

TreeBasis ModuleData::row_basis_of(int a, int b, int m, int mp) const {
    TreeBasis t;
    for (int c = 0; c < ring_->rank(); ++c) {
        const int n1 = ring_->n(a, b, c);
        const int n2 = action(c, m, mp);
        if (n1 > 0 && n2 > 0) {
            t.labels.push_back(c);
            t.dim1.push_back(n1);
            t.dim2.push_back(n2);
            t.offsets.push_back(t.total);
            t.total += n1 * n2;
        }
    }
    return t;
}

TreeBasis ModuleData::col_basis_of(int a, int b, int m, int mp) const {
    TreeBasis t;
    for (int m1 = 0; m1 < module_rank_; ++m1) {
        const int n1 = action(b, m, m1);
        const int n2 = action(a, m1, mp);
        if (n1 > 0 && n2 > 0) {
            t.labels.push_back(m1);
            t.dim1.push_back(n1);
            t.dim2.push_back(n2);
            t.offsets.push_back(t.total);
            t.total += n1 * n2;
        }
    }
    return t;
}

ResidualReport verify_module_pentagon(const ModuleData& md,
                                      const FSymbolSet& f) {
    if (!(*md.ring() == *f.ring()))
        throw InputError("verify_module_pentagon: ring mismatch");
    const FusionRing& ring = *md.ring();
    const int r = ring.rank();
    const int mr = md.module_rank();
    double worst = 0.0;
    std::string worst_at = "none";

    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                for (int m = 0; m < mr; ++m)
                    for (int x = 0; x < mr; ++x) {
                        struct Row {
                            int e, g, al, be, ga;
                        };
                        std::vector<Row> rows;
                        for (int e = 0; e < r; ++e) {
                            if (ring.n(a, b, e) == 0) continue;
                            for (int g = 0; g < r; ++g) {
                                if (ring.n(e, c, g) == 0 || md.action(g, m, x) == 0)
                                    continue;
                                for (int al = 0; al < ring.n(a, b, e); ++al)
                                    for (int be = 0; be < ring.n(e, c, g); ++be)
                                        for (int ga = 0; ga < md.action(g, m, x); ++ga)
                                            rows.push_back({e, g, al, be, ga});
                            }
                        }
                        if (rows.empty()) continue;

                        struct Col {
                            int m1, m2, mu, la, ka;
                        };
                        std::vector<Col> cols;
                        for (int m1 = 0; m1 < mr; ++m1) {
                            if (md.action(c, m, m1) == 0) continue;
                            for (int m2 = 0; m2 < mr; ++m2) {
                                if (md.action(b, m1, m2) == 0 ||
                                    md.action(a, m2, x) == 0)
                                    continue;
                                for (int mu = 0; mu < md.action(c, m, m1); ++mu)
                                    for (int la = 0; la < md.action(b, m1, m2); ++la)
                                        for (int ka = 0; ka < md.action(a, m2, x); ++ka)
                                            cols.push_back({m1, m2, mu, la, ka});
                            }
                        }

                        Mat lhs = Mat::Zero(static_cast<Eigen::Index>(rows.size()),
                                            static_cast<Eigen::Index>(cols.size()));
                        Mat rhs = lhs;

                        for (size_t ri = 0; ri < rows.size(); ++ri) {
                            const Row& rw = rows[ri];
                            const Mat& l1 = md.l_block(rw.e, c, m, x);
                            const TreeBasis l1r = md.row_basis_of(rw.e, c, m, x);
                            const TreeBasis l1c = md.col_basis_of(rw.e, c, m, x);
                            const int l1rp = l1r.position(rw.g);

                            const Mat& f3 = f.block(a, b, c, rw.g);
                            const TreeBasis f3r = row_basis(ring, a, b, c, rw.g);
                            const TreeBasis f3c = col_basis(ring, a, b, c, rw.g);
                            const int f3rp = f3r.position(rw.e);

                            for (size_t ci = 0; ci < cols.size(); ++ci) {
                                const Col& cl = cols[ci];

                                const Mat& l2 = md.l_block(a, b, cl.m1, x);
                                const TreeBasis l2r = md.row_basis_of(a, b, cl.m1, x);
                                const TreeBasis l2c = md.col_basis_of(a, b, cl.m1, x);
                                const int l1cp = l1c.position(cl.m1);
                                const int l2rp = l2r.position(rw.e);
                                const int l2cp = l2c.position(cl.m2);
                                Cplx acc(0, 0);
                                if (l1cp >= 0 && l2rp >= 0 && l2cp >= 0) {
                                    const int ndelta = md.action(rw.e, cl.m1, x);
                                    for (int de = 0; de < ndelta; ++de)
                                        acc += l1(l1r.index(l1rp, rw.be, rw.ga),
                                                  l1c.index(l1cp, cl.mu, de)) *
                                               l2(l2r.index(l2rp, rw.al, de),
                                                  l2c.index(l2cp, cl.la, cl.ka));
                                }
                                lhs(static_cast<Eigen::Index>(ri),
                                    static_cast<Eigen::Index>(ci)) = acc;

                                Cplx acc2(0, 0);
                                for (size_t hp = 0; hp < f3c.labels.size(); ++hp) {
                                    const int h = f3c.labels[hp];
                                    if (md.action(h, m, cl.m2) == 0) continue;
                                    if (!md.admissible(a, h, m, x) ||
                                        !md.admissible(b, c, m, cl.m2))
                                        continue;
                                    const Mat& l4 = md.l_block(a, h, m, x);
                                    const TreeBasis l4r = md.row_basis_of(a, h, m, x);
                                    const TreeBasis l4c = md.col_basis_of(a, h, m, x);
                                    const Mat& l5 = md.l_block(b, c, m, cl.m2);
                                    const TreeBasis l5r =
                                        md.row_basis_of(b, c, m, cl.m2);
                                    const TreeBasis l5c =
                                        md.col_basis_of(b, c, m, cl.m2);
                                    const int l4rp = l4r.position(rw.g);
                                    const int l4cp = l4c.position(cl.m2);
                                    const int l5rp = l5r.position(h);
                                    const int l5cp = l5c.position(cl.m1);
                                    if (l4rp < 0 || l4cp < 0 || l5rp < 0 || l5cp < 0)
                                        continue;
                                    const int nsig = ring.n(b, c, h);
                                    const int npsi = ring.n(a, h, rw.g);
                                    const int ntau = md.action(h, m, cl.m2);
                                    for (int si = 0; si < nsig; ++si)
                                        for (int ps = 0; ps < npsi; ++ps)
                                            for (int ta = 0; ta < ntau; ++ta)
                                                acc2 +=
                                                    f3(f3r.index(f3rp, rw.al, rw.be),
                                                       f3c.index(static_cast<int>(hp),
                                                                 si, ps)) *
                                                    l4(l4r.index(l4rp, ps, rw.ga),
                                                       l4c.index(l4cp, ta, cl.ka)) *
                                                    l5(l5r.index(l5rp, si, ta),
                                                       l5c.index(l5cp, cl.mu, cl.la));
                                }
                                rhs(static_cast<Eigen::Index>(ri),
                                    static_cast<Eigen::Index>(ci)) = acc2;
                            }
                        }

                        const double res = rel_diff(lhs, rhs);
                        if (res > worst) {
                            worst = res;
                            std::ostringstream os;
                            os << "module pentagon at (a,b,c,m; x) = (" << a << ", "
                               << b << ", " << c << ", " << m << "; " << x << ")";
                            worst_at = os.str();
                        }
                    }

    return {worst <= md.tol(), worst, worst_at};
}

void check_module_map(const ModuleData& src, const ModuleData& tgt,
                      const std::vector<int>& module_map) {
    if (!(*src.ring() == *tgt.ring()))
        throw InputError("module_map: modules live over different rings");
    const int mr = src.module_rank();
    if (tgt.module_rank() != mr)
        throw InputError("module_map: module ranks differ");
    if (module_map.size() != static_cast<size_t>(mr))
        throw InputError("module_map: wrong length");
    std::vector<bool> hit(static_cast<size_t>(mr), false);
    for (int m = 0; m < mr; ++m) {
        const int im = module_map[static_cast<size_t>(m)];
        if (im < 0 || im >= mr)
            throw InputError("module_map: index out of range");
        if (hit[static_cast<size_t>(im)])
            throw InputError("module_map: not a bijection");
        hit[static_cast<size_t>(im)] = true;
    }
    for (int a = 0; a < src.ring()->rank(); ++a)
        for (int m = 0; m < mr; ++m)
            for (int mp = 0; mp < mr; ++mp)
                if (src.action(a, m, mp) !=
                    tgt.action(a, module_map[static_cast<size_t>(m)],
                               module_map[static_cast<size_t>(mp)]))
                    throw InputError(
                        "module_map: does not preserve the action multiplicities");
}

namespace {

Mat module_lambda_left(const ModuleGauge& t, const ModuleData& tgt, int a,
                       int b, int m, int mp) {
    const TreeBasis rows = tgt.row_basis_of(a, b, m, mp);
    Mat out = Mat::Zero(rows.total, rows.total);
    for (size_t pos = 0; pos < rows.labels.size(); ++pos) {
        const int c = rows.labels[pos];
        const int n1 = rows.dim1[pos], n2 = rows.dim2[pos];
        out.block(rows.offsets[pos], rows.offsets[pos], n1 * n2, n1 * n2) =
            kron(Mat::Identity(n1, n1), t.block(c, m, mp));
    }
    return out;
}

Mat module_lambda_right(const ModuleGauge& t, const ModuleData& tgt, int a,
                        int b, int m, int mp) {
    const TreeBasis cols = tgt.col_basis_of(a, b, m, mp);
    Mat out = Mat::Zero(cols.total, cols.total);
    for (size_t pos = 0; pos < cols.labels.size(); ++pos) {
        const int m1 = cols.labels[pos];
        out.block(cols.offsets[pos], cols.offsets[pos],
                  cols.dim1[pos] * cols.dim2[pos],
                  cols.dim1[pos] * cols.dim2[pos]) =
            kron(t.block(b, m, m1), t.block(a, m1, mp));
    }
    return out;
}

// Source L-block moved to target bases along the module map. Row groups are
// ring labels and stay put; column groups are module labels and permute.
Mat relabel_module_block(const ModuleEquivalenceData& e,
                         const ModuleBlockKey& q) {
    const auto& psi = e.module_map;
    const Mat& m = e.source.l_block(q.a, q.b, q.m, q.mp);
    const int tm = psi[static_cast<size_t>(q.m)];
    const int tmp = psi[static_cast<size_t>(q.mp)];

    const TreeBasis sc = e.source.col_basis_of(q.a, q.b, q.m, q.mp);
    const TreeBasis tc = e.target.col_basis_of(q.a, q.b, tm, tmp);

    Mat out = Mat::Zero(m.rows(), tc.total);
    for (size_t fp = 0; fp < sc.labels.size(); ++fp) {
        const int tm1 = psi[static_cast<size_t>(sc.labels[fp])];
        const int tcp = tc.position(tm1);
        for (int i = 0; i < sc.dim1[fp]; ++i)
            for (int j = 0; j < sc.dim2[fp]; ++j)
                out.col(tc.index(tcp, i, j)) =
                    m.col(sc.index(static_cast<int>(fp), i, j));
    }
    return out;
}

std::vector<int> identity_module_map(const ModuleData& m) {
    std::vector<int> psi(static_cast<size_t>(m.module_rank()));
    std::iota(psi.begin(), psi.end(), 0);
    return psi;
}

} // namespace

ResidualReport verify_module_equivalence(const ModuleEquivalenceData& e) {
    check_module_map(e.source, e.target, e.module_map);
    const auto& psi = e.module_map;
    double worst = 0.0;
    std::string worst_at = "none";
    for (const auto& [q, block] : e.source.l_blocks()) {
        (void)block;
        const int tm = psi[static_cast<size_t>(q.m)];
        const int tmp = psi[static_cast<size_t>(q.mp)];
        const Mat lhs =
            e.target.l_block(q.a, q.b, tm, tmp) *
            module_lambda_right(e.tensorator, e.target, q.a, q.b, tm, tmp);
        const Mat rhs =
            module_lambda_left(e.tensorator, e.target, q.a, q.b, tm, tmp) *
            relabel_module_block(e, q);
        const double res = rel_diff(lhs, rhs);
        if (res > worst) {
            worst = res;
            worst_at = "module coherence at " + mblock_name(q);
        }
    }
    return {worst <= e.source.tol(), worst, worst_at};
}

ModuleFactorization factorize_module_equivalence(
    const ModuleEquivalenceData& e) {
    const double tol = e.source.tol();
    const ResidualReport pre = verify_module_equivalence(e);
    if (!pre.pass) {
        std::ostringstream os;
        os << "factorize_module_equivalence: input not coherent (residual "
           << pre.max_residual << ")";
        throw PreconditionError(os.str());
    }

    std::map<ActionKey, Mat> positive, unitary;
    for (const auto& [k, t] : e.tensorator.blocks()) {
        const Mat p = hermitian_sqrt(t * t.adjoint(), tol);
        positive[k] = p;
        unitary[k] = p.fullPivLu().solve(t);
    }
    ModuleGauge pg(e.target.ring(), e.target.module_rank(),
                   e.target.action_tensor(), std::move(positive));
    ModuleGauge ug(e.target.ring(), e.target.module_rank(),
                   e.target.action_tensor(), std::move(unitary));

    ModuleFactorization out{
        ModuleEquivalenceData{e.source, e.target, e.module_map, ug}, pg, {}};

    double recomp = 0.0;
    for (const auto& [k, t] : e.tensorator.blocks())
        recomp = std::max(recomp,
                          rel_diff(pg.block(k.a, k.m, k.mp) *
                                       ug.block(k.a, k.m, k.mp),
                                   t));
    out.certificates.recomposition = recomp;
    out.certificates.unitary_coherence =
        verify_module_equivalence(out.unitary_equivalence).max_residual;
    ModuleEquivalenceData id_p{e.target, e.target,
                               identity_module_map(e.target), pg};
    out.certificates.positive_coherence =
        verify_module_equivalence(id_p).max_residual;

    const double worst = std::max({out.certificates.recomposition,
                                   out.certificates.unitary_coherence,
                                   out.certificates.positive_coherence});
    if (worst > 100 * tol) {
        std::ostringstream os;
        os << "factorize_module_equivalence: certificate " << worst
           << " exceeds " << 100 * tol << "; invalid input";
        throw DecompositionError(os.str());
    }
    return out;
}

ModuleTrivialization trivialize_positive_module(const ModuleGauge& p,
                                                const ModuleData& md) {
    const double tol = md.tol();
    const int mr = md.module_rank();

    struct Equation {
        int m, mp;
        double rhs;
    };
    std::vector<Equation> eqs;
    for (const auto& [k, block] : p.blocks()) {
        const int n = static_cast<int>(block.rows());
        const Cplx lam = block.trace() / static_cast<double>(n);
        const double dev = (block - lam * Mat::Identity(n, n)).norm() /
                           std::max(std::abs(lam), 1.0);
        if (dev > 100 * tol ||
            std::abs(lam.imag()) > tol * std::max(1.0, std::abs(lam)) ||
            lam.real() <= 0)
            throw InconsistencyError(
                "trivialize_positive_module: block " + action_name(k) +
                " is not a positive scalar multiple of the identity");
        eqs.push_back({k.m, k.mp, std::log(lam.real())});
    }

    // Connected components of the action graph.
    std::vector<int> comp(static_cast<size_t>(mr));
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int v) {
        while (comp[static_cast<size_t>(v)] != v) v = comp[static_cast<size_t>(v)];
        return v;
    };
    for (const auto& eq : eqs) {
        const int a = find(eq.m), b = find(eq.mp);
        if (a != b) comp[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    }

    RealMat a = RealMat::Zero(static_cast<Eigen::Index>(eqs.size()),
                              std::max(mr, 1));
    RealVec b(static_cast<Eigen::Index>(eqs.size()));
    for (size_t i = 0; i < eqs.size(); ++i) {
        a(static_cast<Eigen::Index>(i), eqs[i].m) += 1.0;
        a(static_cast<Eigen::Index>(i), eqs[i].mp) -= 1.0;
        b[static_cast<Eigen::Index>(i)] = eqs[i].rhs;
    }
    Eigen::CompleteOrthogonalDecomposition<RealMat> cod(a);
    RealVec x = cod.solve(b);
    const double lsq_residual =
        eqs.empty() ? 0.0 : (a * x - b).cwiseAbs().maxCoeff();
    if (lsq_residual > tol) {
        std::ostringstream os;
        os << "trivialize_positive_module: least-squares residual "
           << lsq_residual << " exceeds tol " << tol
           << "; inconsistent positive part";
        throw InconsistencyError(os.str());
    }

    // Normalize the first simple of every component to 1.
    for (int m = 0; m < mr; ++m) {
        const int root = find(m);
        if (root != m) continue;
        const double shift = x[m];
        for (int k = 0; k < mr; ++k)
            if (find(k) == root) x[k] -= shift;
    }

    ModuleTrivialization out;
    out.mu.resize(static_cast<size_t>(mr));
    for (int m = 0; m < mr; ++m) out.mu[static_cast<size_t>(m)] = std::exp(x[m]);
    out.lsq_residual = lsq_residual;
    double repro = 0.0;
    for (const auto& [k, block] : p.blocks()) {
        const Cplx lam = out.mu[static_cast<size_t>(k.m)] /
                         out.mu[static_cast<size_t>(k.mp)];
        repro = std::max(repro,
                         rel_diff(block, lam * Mat::Identity(block.rows(),
                                                             block.cols())));
    }
    out.reproduction = repro;
    return out;
}

ModuleUnitarizeResult unitarize_module_equivalence(
    const ModuleEquivalenceData& e) {
    const double tol = e.source.tol();
    for (const auto& [k, m] : e.source.l_blocks())
        if (unitary_deviation(m) > tol)
            throw PreconditionError(
                "unitarize_module_equivalence: source module associator is "
                "not unitary at " +
                mblock_name(k));
    for (const auto& [k, m] : e.target.l_blocks())
        if (unitary_deviation(m) > tol)
            throw PreconditionError(
                "unitarize_module_equivalence: target module associator is "
                "not unitary at " +
                mblock_name(k));

    ModuleFactorization fact = factorize_module_equivalence(e);
    ModuleTrivialization triv =
        trivialize_positive_module(fact.positive_part, e.target);

    ModuleUnitarizeResult out{fact.unitary_equivalence, triv.mu, 0.0, 0.0, 0.0,
                              triv.lsq_residual};
    for (const auto& [k, m] : out.equivalence.tensorator.blocks())
        out.unitarity = std::max(out.unitarity, unitary_deviation(m));
    out.coherence = verify_module_equivalence(out.equivalence).max_residual;
    for (const auto& [k, t] : e.tensorator.blocks()) {
        const Cplx lam = triv.mu[static_cast<size_t>(k.m)] /
                         triv.mu[static_cast<size_t>(k.mp)];
        out.nat_iso_residual = std::max(
            out.nat_iso_residual,
            rel_diff(lam * out.equivalence.tensorator.block(k.a, k.m, k.mp), t));
    }

    if (out.unitarity > 10 * tol || out.coherence > 100 * tol) {
        std::ostringstream os;
        os << "unitarize_module_equivalence: certificates out of budget "
              "(unitarity "
           << out.unitarity << ", coherence " << out.coherence << ")";
        throw DecompositionError(os.str());
    }
    return out;
}

ModuleGauge identity_module_gauge(const ModuleData& m) {
    std::map<ActionKey, Mat> blocks;
    for (int a = 0; a < m.ring()->rank(); ++a)
        for (int mm = 0; mm < m.module_rank(); ++mm)
            for (int mp = 0; mp < m.module_rank(); ++mp)
                if (int n = m.action(a, mm, mp); n > 0)
                    blocks[{a, mm, mp}] = Mat::Identity(n, n);
    return ModuleGauge(m.ring(), m.module_rank(), m.action_tensor(),
                       std::move(blocks));
}

ModuleGauge module_coboundary(const ModuleData& m,
                              const std::vector<Cplx>& mu) {
    if (mu.size() != static_cast<size_t>(m.module_rank()))
        throw InputError("module_coboundary: wrong number of scalars");
    std::map<ActionKey, Mat> blocks;
    for (int a = 0; a < m.ring()->rank(); ++a)
        for (int mm = 0; mm < m.module_rank(); ++mm)
            for (int mp = 0; mp < m.module_rank(); ++mp)
                if (int n = m.action(a, mm, mp); n > 0) {
                    // Unit action forces m = m', so unit blocks come out as 1.
                    const Cplx lam = mu[static_cast<size_t>(mm)] /
                                     mu[static_cast<size_t>(mp)];
                    blocks[{a, mm, mp}] = lam * Mat::Identity(n, n);
                }
    return ModuleGauge(m.ring(), m.module_rank(), m.action_tensor(),
                       std::move(blocks));
}

ModuleEquivalenceData identity_module_equivalence(const ModuleData& m) {
    std::vector<int> psi(static_cast<size_t>(m.module_rank()));
    std::iota(psi.begin(), psi.end(), 0);
    return ModuleEquivalenceData{m, m, psi, identity_module_gauge(m)};
}

ModuleData regular_module(const FSymbolSet& f) {
    const FusionRing& ring = *f.ring();
    const int r = ring.rank();
    std::vector<int> action(static_cast<size_t>(r) * r * r);
    for (int a = 0; a < r; ++a)
        for (int m = 0; m < r; ++m)
            for (int mp = 0; mp < r; ++mp)
                action[(static_cast<size_t>(a) * r + m) * r + mp] =
                    ring.n(a, m, mp);
    std::map<ModuleBlockKey, Mat> l;
    for (const auto& [k, block] : f.blocks())
        l[{k.a, k.b, k.c, k.d}] = block;
    return ModuleData(f.ring(), r, std::move(action), std::move(l), f.tol());
}

} // namespace ufc
