#include "cohomology.hpp"

#include <cmath>
#include <sstream>

#include "errors.hpp"

namespace ufc {

FiniteGroup::FiniteGroup(int order, std::vector<int> table)
    : order_(order), table_(std::move(table)) {
    if (order_ <= 0) throw InputError("group: order must be positive");
    if (table_.size() != static_cast<size_t>(order_) * order_)
        throw InputError("group: Cayley table has wrong shape");
    for (int v : table_)
        if (v < 0 || v >= order_)
            throw InputError("group: table entry out of range");
    for (int a = 0; a < order_; ++a) {
        if (mul(0, a) != a || mul(a, 0) != a)
            throw InputError("group: index 0 is not an identity");
    }
    for (int a = 0; a < order_; ++a)
        for (int b = 0; b < order_; ++b)
            for (int c = 0; c < order_; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw InputError("group: Cayley table is not associative");
    inverse_.assign(static_cast<size_t>(order_), -1);
    for (int a = 0; a < order_; ++a) {
        for (int b = 0; b < order_; ++b)
            if (mul(a, b) == 0 && mul(b, a) == 0) {
                inverse_[static_cast<size_t>(a)] = b;
                break;
            }
        if (inverse_[static_cast<size_t>(a)] < 0)
            throw InputError("group: element " + std::to_string(a) +
                             " has no inverse");
    }
}

namespace {

size_t pow_order(int order, int degree) {
    size_t p = 1;
    for (int i = 0; i < degree; ++i) p *= static_cast<size_t>(order);
    return p;
}

void index_to_tuple(size_t idx, int order, int degree, std::vector<int>& out) {
    out.assign(static_cast<size_t>(degree), 0);
    for (int i = degree - 1; i >= 0; --i) {
        out[static_cast<size_t>(i)] = static_cast<int>(idx % order);
        idx /= static_cast<size_t>(order);
    }
}

bool touches_identity(const std::vector<int>& tuple) {
    for (int g : tuple)
        if (g == 0) return true;
    return false;
}

// Faces of the bar-resolution coboundary of an (n-1)-cochain evaluated on an
// n-tuple: pairs of (face tuple, exponent +-1).
std::vector<std::pair<std::vector<int>, int>> faces(const FiniteGroup& g,
                                                    const std::vector<int>& t) {
    const int n = static_cast<int>(t.size());
    std::vector<std::pair<std::vector<int>, int>> out;
    // Drop the first argument.
    out.emplace_back(std::vector<int>(t.begin() + 1, t.end()), +1);
    // Merge arguments i and i+1.
    int sign = -1;
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> face;
        face.reserve(static_cast<size_t>(n - 1));
        for (int j = 0; j < i; ++j) face.push_back(t[static_cast<size_t>(j)]);
        face.push_back(g.mul(t[static_cast<size_t>(i)], t[static_cast<size_t>(i + 1)]));
        for (int j = i + 2; j < n; ++j) face.push_back(t[static_cast<size_t>(j)]);
        out.emplace_back(std::move(face), sign);
        sign = -sign;
    }
    // Drop the last argument.
    out.emplace_back(std::vector<int>(t.begin(), t.end() - 1), sign);
    return out;
}

std::vector<Cplx> coboundary_values(const Cochain& c) {
    const FiniteGroup& g = *c.group;
    const int out_degree = c.degree + 1;
    const size_t count = pow_order(g.order(), out_degree);
    std::vector<Cplx> values(count);
    std::vector<int> tuple;
    for (size_t idx = 0; idx < count; ++idx) {
        index_to_tuple(idx, g.order(), out_degree, tuple);
        Cplx v(1, 0);
        for (const auto& [face, sign] : faces(g, tuple)) {
            const Cplx fv = c.at(face);
            v *= (sign > 0) ? fv : Cplx(1, 0) / fv;
        }
        values[idx] = v;
    }
    return values;
}

std::string tuple_name(const std::vector<int>& t) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < t.size(); ++i) os << (i ? ", " : "") << t[i];
    os << ")";
    return os.str();
}

} // namespace

size_t Cochain::tuple_index(const std::vector<int>& tuple) const {
    size_t idx = 0;
    for (int g : tuple) idx = idx * static_cast<size_t>(group->order()) +
                              static_cast<size_t>(g);
    return idx;
}

Cplx Cochain::at(const std::vector<int>& tuple) const {
    return values[tuple_index(tuple)];
}

Cochain make_cochain(GroupPtr group, int degree, std::vector<Cplx> values) {
    if (!group) throw InputError("cochain: null group");
    if (degree < 0 || degree > 3)
        throw InputError("cochain: degree must be between 0 and 3");
    Cochain c;
    c.group = std::move(group);
    c.degree = degree;
    c.values = std::move(values);
    if (c.values.size() != pow_order(c.group->order(), degree))
        throw InputError("cochain: wrong number of values");
    for (const Cplx& v : c.values)
        if (std::abs(v) == 0.0) throw InputError("cochain: zero value");
    c.normalized = true;
    std::vector<int> tuple;
    for (size_t idx = 0; idx < c.values.size(); ++idx) {
        index_to_tuple(idx, c.group->order(), degree, tuple);
        if (touches_identity(tuple) &&
            std::abs(c.values[idx] - Cplx(1, 0)) > 1e-12) {
            c.normalized = false;
            break;
        }
    }
    return c;
}

Cochain trivial_cochain(GroupPtr group, int degree) {
    if (!group) throw InputError("cochain: null group");
    const size_t count = pow_order(group->order(), degree);
    return make_cochain(std::move(group), degree,
                        std::vector<Cplx>(count, Cplx(1, 0)));
}

Cochain coboundary(const Cochain& c) {
    if (c.degree > 2)
        throw InputError("coboundary: degree overflow (input degree " +
                         std::to_string(c.degree) + ")");
    return make_cochain(c.group, c.degree + 1, coboundary_values(c));
}

CocycleReport verify_cocycle(const Cochain& omega, double tol) {
    const std::vector<Cplx> delta = coboundary_values(omega);
    double worst = 0.0;
    std::string first;
    std::vector<int> tuple;
    for (size_t idx = 0; idx < delta.size(); ++idx) {
        const double dev = std::abs(delta[idx] - Cplx(1, 0));
        if (dev > tol && first.empty()) {
            index_to_tuple(idx, omega.group->order(), omega.degree + 1, tuple);
            first = "cocycle equation violated at " + tuple_name(tuple);
        }
        worst = std::max(worst, dev);
    }
    return {worst <= tol, worst, first};
}

CocycleSplit polar_split_cocycle(const Cochain& omega, double tol) {
    const CocycleReport rep = verify_cocycle(omega, tol);
    if (!rep.pass)
        throw PreconditionError("polar_split_cocycle: input is not a cocycle (" +
                                rep.first_violation + ")");
    std::vector<Cplx> unit(omega.values.size()), pos(omega.values.size());
    for (size_t i = 0; i < omega.values.size(); ++i) {
        const double mag = std::abs(omega.values[i]);
        pos[i] = mag;
        unit[i] = omega.values[i] / mag;
    }
    return {make_cochain(omega.group, omega.degree, std::move(unit)),
            make_cochain(omega.group, omega.degree, std::move(pos))};
}

CocycleTrivialization trivialize_positive_cocycle(const Cochain& r,
                                                  double tol) {
    if (r.degree < 1 || r.degree > 3)
        throw InputError(
            "trivialize_positive_cocycle: degree must be 1, 2 or 3");
    for (const Cplx& v : r.values)
        if (std::abs(v.imag()) > tol * std::max(1.0, std::abs(v)) ||
            v.real() <= 0)
            throw InputError(
                "trivialize_positive_cocycle: input is not positive");
    const CocycleReport rep = verify_cocycle(r, 10 * tol);
    if (!rep.pass)
        throw InconsistencyError(
            "trivialize_positive_cocycle: input is not a cocycle (" +
            rep.first_violation + ")");

    const FiniteGroup& g = *r.group;
    const size_t n_rows = r.values.size();
    const size_t n_cols = pow_order(g.order(), r.degree - 1);

    RealMat d = RealMat::Zero(static_cast<Eigen::Index>(n_rows),
                              static_cast<Eigen::Index>(n_cols));
    RealVec b(static_cast<Eigen::Index>(n_rows));
    Cochain probe = trivial_cochain(r.group, r.degree - 1);
    std::vector<int> tuple;
    for (size_t idx = 0; idx < n_rows; ++idx) {
        index_to_tuple(idx, g.order(), r.degree, tuple);
        for (const auto& [face, sign] : faces(g, tuple))
            d(static_cast<Eigen::Index>(idx),
              static_cast<Eigen::Index>(probe.tuple_index(face))) += sign;
        b[static_cast<Eigen::Index>(idx)] = std::log(r.values[idx].real());
    }

    Eigen::CompleteOrthogonalDecomposition<RealMat> cod(d);
    RealVec x = cod.solve(b);
    const double lsq_residual =
        n_rows == 0 ? 0.0 : (d * x - b).cwiseAbs().maxCoeff();
    if (lsq_residual > tol) {
        std::ostringstream os;
        os << "trivialize_positive_cocycle: residual " << lsq_residual
           << " exceeds tol " << tol << "; input was not a positive cocycle";
        throw InconsistencyError(os.str());
    }

    std::vector<Cplx> eta(n_cols);
    for (size_t i = 0; i < n_cols; ++i)
        eta[i] = std::exp(x[static_cast<Eigen::Index>(i)]);

    CocycleTrivialization out;
    out.eta = make_cochain(r.group, r.degree - 1, std::move(eta));
    out.lsq_residual = lsq_residual;
    const std::vector<Cplx> check = coboundary_values(out.eta);
    double repro = 0.0;
    for (size_t i = 0; i < n_rows; ++i)
        repro = std::max(repro, std::abs(check[i] - r.values[i]));
    out.reproduction = repro;
    return out;
}

CocycleUnitarization unitarize_cocycle(const Cochain& omega, double tol) {
    CocycleSplit split = polar_split_cocycle(omega, tol);
    CocycleTrivialization triv =
        trivialize_positive_cocycle(split.positive, tol);
    CocycleUnitarization out{std::move(split.unitary), std::move(triv.eta),
                             0.0};
    const std::vector<Cplx> delta = coboundary_values(out.eta);
    for (size_t i = 0; i < omega.values.size(); ++i) {
        const Cplx quotient = omega.values[i] / out.unitary.values[i];
        out.certificate = std::max(out.certificate,
                                   std::abs(quotient - delta[i]));
    }
    return out;
}

RingPtr group_ring(const FiniteGroup& g) {
    const int n = g.order();
    std::vector<int> dual(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) dual[static_cast<size_t>(a)] = g.inverse(a);
    std::vector<int> tensor(static_cast<size_t>(n) * n * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            tensor[(static_cast<size_t>(a) * n + b) * n + g.mul(a, b)] = 1;
    return std::make_shared<const FusionRing>(n, std::move(dual),
                                              std::move(tensor));
}

VecGData build_vecg_category(GroupPtr group, const Cochain& omega,
                             double tol) {
    if (!group) throw InputError("build_vecg_category: null group");
    if (!(*omega.group == *group))
        throw InputError("build_vecg_category: cochain lives on another group");
    if (omega.degree != 3)
        throw InputError("build_vecg_category: need a 3-cochain");
    if (!omega.normalized)
        throw InputError("build_vecg_category: cochain must be normalized");
    const CocycleReport rep = verify_cocycle(omega, tol);
    if (!rep.pass)
        throw PreconditionError("build_vecg_category: not a cocycle (" +
                                rep.first_violation + ")");

    RingPtr ring = group_ring(*group);
    const FiniteGroup& g = *group;
    std::map<BlockKey, Mat> blocks;
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b)
            for (int c = 0; c < g.order(); ++c) {
                Mat m(1, 1);
                m(0, 0) = omega.at({a, b, c});
                blocks[{a, b, c, g.mul(g.mul(a, b), c)}] = m;
            }
    return VecGData{ring, FSymbolSet(ring, std::move(blocks), tol)};
}

} // namespace ufc
