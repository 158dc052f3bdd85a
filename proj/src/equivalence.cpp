#include "equivalence.hpp"

#include <sstream>

#include "errors.hpp"
#include "polar.hpp"

namespace ufc {

void check_simple_map(const FusionRing& src, const FusionRing& tgt,
                      const std::vector<int>& simple_map) {
    const int r = src.rank();
    if (tgt.rank() != r)
        throw InputError("simple_map: source and target rank differ");
    if (simple_map.size() != static_cast<size_t>(r))
        throw InputError("simple_map: wrong length");
    std::vector<bool> hit(static_cast<size_t>(r), false);
    for (int a = 0; a < r; ++a) {
        const int m = simple_map[static_cast<size_t>(a)];
        if (m < 0 || m >= r) throw InputError("simple_map: index out of range");
        if (hit[static_cast<size_t>(m)])
            throw InputError("simple_map: not a bijection");
        hit[static_cast<size_t>(m)] = true;
    }
    if (simple_map[0] != 0)
        throw InputError("simple_map: does not fix the unit");
    for (int a = 0; a < r; ++a)
        if (simple_map[static_cast<size_t>(src.dual(a))] !=
            tgt.dual(simple_map[static_cast<size_t>(a)]))
            throw InputError("simple_map: does not preserve duals");
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                if (src.n(a, b, c) !=
                    tgt.n(simple_map[static_cast<size_t>(a)],
                          simple_map[static_cast<size_t>(b)],
                          simple_map[static_cast<size_t>(c)]))
                    throw InputError(
                        "simple_map: does not preserve fusion multiplicities");
}

Mat relabel_block(const EquivalenceData& e, const BlockKey& q) {
    const auto& phi = e.simple_map;
    const FusionRing& src = *e.source.ring();
    const FusionRing& tgt = *e.target.ring();
    const Mat& m = e.source.block(q.a, q.b, q.c, q.d);
    const int a2 = phi[static_cast<size_t>(q.a)];
    const int b2 = phi[static_cast<size_t>(q.b)];
    const int c2 = phi[static_cast<size_t>(q.c)];
    const int d2 = phi[static_cast<size_t>(q.d)];

    const TreeBasis sr = row_basis(src, q.a, q.b, q.c, q.d);
    const TreeBasis sc = col_basis(src, q.a, q.b, q.c, q.d);
    const TreeBasis tr = row_basis(tgt, a2, b2, c2, d2);
    const TreeBasis tc = col_basis(tgt, a2, b2, c2, d2);

    Mat out = Mat::Zero(tr.total, tc.total);
    for (size_t ep = 0; ep < sr.labels.size(); ++ep) {
        const int e2 = phi[static_cast<size_t>(sr.labels[ep])];
        const int trp = tr.position(e2);
        for (size_t fp = 0; fp < sc.labels.size(); ++fp) {
            const int f2 = phi[static_cast<size_t>(sc.labels[fp])];
            const int tcp = tc.position(f2);
            for (int i = 0; i < sr.dim1[ep]; ++i)
                for (int j = 0; j < sr.dim2[ep]; ++j)
                    for (int k = 0; k < sc.dim1[fp]; ++k)
                        for (int l = 0; l < sc.dim2[fp]; ++l)
                            out(tr.index(trp, i, j), tc.index(tcp, k, l)) =
                                m(sr.index(static_cast<int>(ep), i, j),
                                  sc.index(static_cast<int>(fp), k, l));
        }
    }
    return out;
}

ResidualReport verify_equivalence(const EquivalenceData& e) {
    check_simple_map(*e.source.ring(), *e.target.ring(), e.simple_map);
    if (!(*e.tensorator.ring() == *e.target.ring()))
        throw InputError("equivalence: tensorator must live on the target ring");

    const auto& phi = e.simple_map;
    double worst = 0.0;
    std::string worst_at = "none";
    for (const auto& [q, block] : e.source.blocks()) {
        (void)block;
        const int a2 = phi[static_cast<size_t>(q.a)];
        const int b2 = phi[static_cast<size_t>(q.b)];
        const int c2 = phi[static_cast<size_t>(q.c)];
        const int d2 = phi[static_cast<size_t>(q.d)];
        const Mat lhs = e.target.block(a2, b2, c2, d2) *
                        lambda_right(e.tensorator, a2, b2, c2, d2);
        const Mat rhs =
            lambda_left(e.tensorator, a2, b2, c2, d2) * relabel_block(e, q);
        const double res = rel_diff(lhs, rhs);
        if (res > worst) {
            worst = res;
            std::ostringstream os;
            os << "coherence at source quadruple (" << q.a << ", " << q.b
               << ", " << q.c << "; " << q.d << ")";
            worst_at = os.str();
        }
    }
    return {worst <= e.source.tol(), worst, worst_at};
}

Factorization factorize_equivalence(const EquivalenceData& e) {
    const double tol = e.source.tol();
    const ResidualReport pre = verify_equivalence(e);
    if (!pre.pass) {
        std::ostringstream os;
        os << "factorize_equivalence: input is not coherent (residual "
           << pre.max_residual << " > tol " << tol << ")";
        throw PreconditionError(os.str());
    }

    std::map<VertexKey, Mat> positive, unitary;
    for (const auto& [k, t] : e.tensorator.blocks()) {
        const Mat p = hermitian_sqrt(t * t.adjoint(), tol);
        positive[k] = p;
        unitary[k] = p.fullPivLu().solve(t);
    }
    Gauge pg(e.tensorator.ring(), std::move(positive));
    Gauge ug(e.tensorator.ring(), std::move(unitary));

    Factorization out{
        EquivalenceData{e.source, e.target, e.simple_map, ug}, pg, {}};
    out.certificates.recomposition =
        max_block_distance(compose_gauges(pg, ug), e.tensorator);
    out.certificates.unitary_coherence =
        verify_equivalence(out.unitary_equivalence).max_residual;
    EquivalenceData id_p{e.target, e.target, identity_map(e.target), pg};
    out.certificates.positive_coherence =
        verify_equivalence(id_p).max_residual;

    const double worst = std::max({out.certificates.recomposition,
                                   out.certificates.unitary_coherence,
                                   out.certificates.positive_coherence});
    if (worst > 100 * tol) {
        std::ostringstream os;
        os << "factorize_equivalence: certificate " << worst << " exceeds "
           << 100 * tol
           << "; the input does not describe a monoidal equivalence between "
              "unitary presentations";
        throw DecompositionError(os.str());
    }
    return out;
}

Trivialization trivialize_positive_monoidal(const Gauge& p,
                                            const FSymbolSet& f) {
    const double tol = f.tol();
    if (!(*p.ring() == *f.ring()))
        throw InputError("trivialize_positive_monoidal: ring mismatch");

    // Coherence of (id, p) is the caller's precondition; the two failure
    // modes below are how incoherent input manifests here.
    const int r = f.ring()->rank();

    struct Equation {
        int a, b, c;
        double rhs;
    };
    std::vector<Equation> eqs;
    for (const auto& [k, block] : p.blocks()) {
        const int n = static_cast<int>(block.rows());
        const Cplx lam = block.trace() / static_cast<double>(n);
        const double dev =
            (block - lam * Mat::Identity(n, n)).norm() / std::max(std::abs(lam), 1.0);
        if (dev > 100 * tol || std::abs(lam.imag()) > tol * std::max(1.0, std::abs(lam)) ||
            lam.real() <= 0) {
            std::ostringstream os;
            os << "trivialize_positive_monoidal: block (" << k.a << ", " << k.b
               << "; " << k.c
               << ") is not a positive scalar multiple of the identity "
                  "(deviation "
               << dev << "); not coherent / not trivializable";
            throw InconsistencyError(os.str());
        }
        eqs.push_back({k.a, k.b, k.c, std::log(lam.real())});
    }

    // Unknowns x_1 .. x_{r-1}; x_0 eliminated as 0.
    RealMat a = RealMat::Zero(static_cast<Eigen::Index>(eqs.size()),
                              std::max(r - 1, 1));
    RealVec b(static_cast<Eigen::Index>(eqs.size()));
    for (size_t i = 0; i < eqs.size(); ++i) {
        const auto& eq = eqs[i];
        if (eq.a > 0) a(static_cast<Eigen::Index>(i), eq.a - 1) += 1.0;
        if (eq.b > 0) a(static_cast<Eigen::Index>(i), eq.b - 1) += 1.0;
        if (eq.c > 0) a(static_cast<Eigen::Index>(i), eq.c - 1) -= 1.0;
        b[static_cast<Eigen::Index>(i)] = eq.rhs;
    }

    RealVec x = RealVec::Zero(std::max(r - 1, 1));
    if (r > 1) {
        Eigen::CompleteOrthogonalDecomposition<RealMat> cod(a);
        x = cod.solve(b);
    }
    const double lsq_residual =
        eqs.empty() ? 0.0 : (a * x - b).cwiseAbs().maxCoeff();
    if (lsq_residual > tol) {
        std::ostringstream os;
        os << "trivialize_positive_monoidal: least-squares residual "
           << lsq_residual << " exceeds tol " << tol
           << "; the positive part is not a coboundary";
        throw InconsistencyError(os.str());
    }

    Trivialization out;
    out.mu.ring = f.ring();
    out.mu.components.assign(static_cast<size_t>(r), Cplx(1, 0));
    for (int i = 1; i < r; ++i)
        out.mu.components[static_cast<size_t>(i)] = std::exp(x[i - 1]);
    out.lsq_residual = lsq_residual;
    out.reproduction = max_block_distance(coboundary_gauge(out.mu), p);
    return out;
}

UnitarizeResult unitarize_equivalence(const EquivalenceData& e) {
    const double tol = e.source.tol();
    const ResidualReport src_u = verify_unitary(e.source);
    const ResidualReport tgt_u = verify_unitary(e.target);
    if (!src_u.pass || !tgt_u.pass) {
        std::ostringstream os;
        os << "unitarize_equivalence: both presentations must be unitary "
              "(source deviation "
           << src_u.max_residual << ", target deviation " << tgt_u.max_residual
           << ")";
        throw PreconditionError(os.str());
    }

    Factorization fact = factorize_equivalence(e);
    Trivialization triv =
        trivialize_positive_monoidal(fact.positive_part, e.target);

    UnitarizeResult out{fact.unitary_equivalence, triv.mu, 0.0, 0.0, 0.0,
                        triv.lsq_residual};
    for (const auto& [k, m] : out.equivalence.tensorator.blocks())
        out.unitarity = std::max(out.unitarity, unitary_deviation(m));
    out.coherence = verify_equivalence(out.equivalence).max_residual;
    out.nat_iso_residual = max_block_distance(
        compose_gauges(coboundary_gauge(triv.mu),
                       out.equivalence.tensorator),
        e.tensorator);

    if (out.unitarity > 10 * tol || out.coherence > 100 * tol) {
        std::ostringstream os;
        os << "unitarize_equivalence: output certificates out of budget "
              "(unitarity "
           << out.unitarity << ", coherence " << out.coherence << ")";
        throw DecompositionError(os.str());
    }
    return out;
}

NatIsoUnitarization unitarize_nat_iso(const NatIso& eta,
                                      const EquivalenceData& e1,
                                      const EquivalenceData& e2) {
    const double tol = e1.source.tol();
    if (e1.simple_map != e2.simple_map)
        throw PreconditionError(
            "unitarize_nat_iso: the equivalences have different underlying "
            "functors");
    if (!(*e1.source.ring() == *e2.source.ring()) ||
        !(*e1.target.ring() == *e2.target.ring()))
        throw PreconditionError("unitarize_nat_iso: ring mismatch");
    if (!(*eta.ring == *e1.source.ring()))
        throw InputError("unitarize_nat_iso: eta lives on the wrong ring");
    for (const auto& [k, m] : e1.tensorator.blocks())
        if (unitary_deviation(m) > tol ||
            unitary_deviation(e2.tensorator.block(k.a, k.b, k.c)) > tol)
            throw PreconditionError(
                "unitarize_nat_iso: tensorators must be unitary");

    const FusionRing& src = *e1.source.ring();
    const auto& phi = e1.simple_map;
    const int r = src.rank();

    auto comp = [&](int a) { return eta.components[static_cast<size_t>(a)]; };

    // Monoidality: g * eta_c = (eta_a eta_b) * f per source channel.
    double monoidality = 0.0;
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c) {
                if (src.n(a, b, c) == 0) continue;
                const int a2 = phi[static_cast<size_t>(a)];
                const int b2 = phi[static_cast<size_t>(b)];
                const int c2 = phi[static_cast<size_t>(c)];
                const Mat lhs = e2.tensorator.block(a2, b2, c2) * comp(c);
                const Mat rhs =
                    comp(a) * comp(b) * e1.tensorator.block(a2, b2, c2);
                monoidality = std::max(monoidality, rel_diff(lhs, rhs));
            }
    if (monoidality > tol) {
        std::ostringstream os;
        os << "unitarize_nat_iso: eta is not monoidal (residual " << monoidality
           << " > tol " << tol << ")";
        throw PreconditionError(os.str());
    }

    std::vector<double> rho(static_cast<size_t>(r));
    for (int a = 0; a < r; ++a) {
        rho[static_cast<size_t>(a)] = std::abs(comp(a));
        if (rho[static_cast<size_t>(a)] == 0.0)
            throw InputError("unitarize_nat_iso: zero component");
    }

    double character = 0.0;
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                if (src.n(a, b, c) > 0)
                    character = std::max(
                        character, std::abs(rho[static_cast<size_t>(a)] *
                                                    rho[static_cast<size_t>(b)] /
                                                    rho[static_cast<size_t>(c)] -
                                                1.0));
    if (character > 100 * tol)
        throw InconsistencyError(
            "unitarize_nat_iso: |eta| is not a positive character of the ring");

    NatIsoUnitarization out;
    out.monoidality_residual = monoidality;
    out.character_residual = character;
    out.certificate = 0.0;
    out.unitary.ring = eta.ring;
    out.unitary.components.resize(static_cast<size_t>(r));
    for (int a = 0; a < r; ++a) {
        out.certificate =
            std::max(out.certificate, std::abs(rho[static_cast<size_t>(a)] - 1.0));
        out.unitary.components[static_cast<size_t>(a)] =
            comp(a) / rho[static_cast<size_t>(a)];
    }
    return out;
}

std::vector<int> identity_map(const FSymbolSet& f) {
    std::vector<int> phi(static_cast<size_t>(f.ring()->rank()));
    for (size_t i = 0; i < phi.size(); ++i) phi[i] = static_cast<int>(i);
    return phi;
}

EquivalenceData identity_equivalence(const FSymbolSet& f) {
    return EquivalenceData{f, f, identity_map(f), Gauge::identity(f.ring())};
}

EquivalenceData coboundary_equivalence(const FSymbolSet& f, const NatIso& nu) {
    return EquivalenceData{f, f, identity_map(f), coboundary_gauge(nu)};
}

} // namespace ufc
