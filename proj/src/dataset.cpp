#include "dataset.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "builtins.hpp"
#include "errors.hpp"

namespace ufc {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw InputError(where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
    return *it;
}

int int_field(const json& j, const char* key, const std::string& where) {
    const json& v = field(j, key, where);
    if (!v.is_number_integer())
        fail(where, std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

Cplx parse_complex(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() ||
        !j[1].is_number())
        fail(where, "complex numbers are [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

json emit_complex(const Cplx& z) {
    return json::array({z.real(), z.imag()});
}

Mat parse_matrix(const json& j, const std::string& where) {
    if (!j.is_array() || j.empty()) fail(where, "matrix must be a non-empty array");
    const size_t rows = j.size();
    if (!j[0].is_array() || j[0].empty())
        fail(where, "matrix rows must be non-empty arrays");
    const size_t cols = j[0].size();
    Mat m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            fail(where, "ragged matrix");
        for (size_t k = 0; k < cols; ++k)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
                parse_complex(j[i][k], where);
    }
    return m;
}

json emit_matrix(const Mat& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index k = 0; k < m.cols(); ++k)
            row.push_back(emit_complex(m(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

RingPtr parse_ring(const json& j) {
    const std::string where = "fusion_ring";
    const int rank = int_field(j, "rank", where);
    const json& jd = field(j, "dual", where);
    if (!jd.is_array()) fail(where, "'dual' must be an array");
    std::vector<int> dual;
    for (const auto& v : jd) dual.push_back(v.get<int>());

    const json& jn = field(j, "multiplicities", where);
    if (!jn.is_array() || jn.size() != static_cast<size_t>(rank))
        fail(where, "'multiplicities' must be a rank x rank x rank array");
    std::vector<int> n;
    n.reserve(static_cast<size_t>(rank) * rank * rank);
    for (const auto& plane : jn) {
        if (!plane.is_array() || plane.size() != static_cast<size_t>(rank))
            fail(where, "'multiplicities' must be a rank x rank x rank array");
        for (const auto& row : plane) {
            if (!row.is_array() || row.size() != static_cast<size_t>(rank))
                fail(where, "'multiplicities' must be a rank x rank x rank array");
            for (const auto& v : row) {
                if (!v.is_number_integer())
                    fail(where, "multiplicities must be integers");
                n.push_back(v.get<int>());
            }
        }
    }
    return std::make_shared<const FusionRing>(rank, std::move(dual),
                                              std::move(n));
}

json emit_ring(const FusionRing& ring) {
    json out;
    out["rank"] = ring.rank();
    out["dual"] = ring.duals();
    json planes = json::array();
    for (int a = 0; a < ring.rank(); ++a) {
        json plane = json::array();
        for (int b = 0; b < ring.rank(); ++b) {
            json row = json::array();
            for (int c = 0; c < ring.rank(); ++c) row.push_back(ring.n(a, b, c));
            plane.push_back(std::move(row));
        }
        planes.push_back(std::move(plane));
    }
    out["multiplicities"] = std::move(planes);
    return out;
}

// F-symbol style blocks: unit-touching identity blocks may be omitted in
// files; they are reconstructed on load.
FSymbolSet parse_fsymbols(const json& j, RingPtr ring, double tol,
                          const std::string& where) {
    if (!ring) fail(where, "requires a fusion_ring section");
    const json& jb = field(j, "blocks", where);
    if (!jb.is_array()) fail(where, "'blocks' must be an array");
    std::map<BlockKey, Mat> blocks;
    for (const auto& e : jb) {
        BlockKey k{int_field(e, "a", where), int_field(e, "b", where),
                   int_field(e, "c", where), int_field(e, "d", where)};
        if (blocks.count(k)) fail(where, "duplicate block");
        blocks[k] = parse_matrix(field(e, "matrix", where), where);
    }
    const int r = ring->rank();
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int c = 0; c < r; ++c)
                for (int d = 0; d < r; ++d) {
                    if (a != 0 && b != 0 && c != 0) continue;
                    const TreeBasis rows = row_basis(*ring, a, b, c, d);
                    if (rows.total > 0 && !blocks.count({a, b, c, d}))
                        blocks[{a, b, c, d}] =
                            Mat::Identity(rows.total, rows.total);
                }
    return FSymbolSet(std::move(ring), std::move(blocks), tol);
}

json emit_fsymbols(const FSymbolSet& f) {
    json out;
    json arr = json::array();
    for (const auto& [k, m] : f.blocks()) {
        json e;
        e["a"] = k.a;
        e["b"] = k.b;
        e["c"] = k.c;
        e["d"] = k.d;
        e["matrix"] = emit_matrix(m);
        arr.push_back(std::move(e));
    }
    out["blocks"] = std::move(arr);
    return out;
}

std::map<VertexKey, Mat> parse_vertex_blocks(const json& j, const FusionRing& ring,
                                             const std::string& where) {
    const json& jb = field(j, "blocks", where);
    if (!jb.is_array()) fail(where, "'blocks' must be an array");
    std::map<VertexKey, Mat> blocks;
    for (const auto& e : jb) {
        VertexKey k{int_field(e, "a", where), int_field(e, "b", where),
                    int_field(e, "c", where)};
        if (blocks.count(k)) fail(where, "duplicate block");
        blocks[k] = parse_matrix(field(e, "matrix", where), where);
    }
    // Missing unit blocks are identities.
    for (int a = 0; a < ring.rank(); ++a)
        for (int b = 0; b < ring.rank(); ++b)
            for (int c = 0; c < ring.rank(); ++c) {
                const int n = ring.n(a, b, c);
                if (n > 0 && (a == 0 || b == 0) && !blocks.count({a, b, c}))
                    blocks[{a, b, c}] = Mat::Identity(n, n);
            }
    return blocks;
}

json emit_vertex_blocks(const std::map<VertexKey, Mat>& blocks) {
    json out;
    json arr = json::array();
    for (const auto& [k, m] : blocks) {
        json e;
        e["a"] = k.a;
        e["b"] = k.b;
        e["c"] = k.c;
        e["matrix"] = emit_matrix(m);
        arr.push_back(std::move(e));
    }
    out["blocks"] = std::move(arr);
    return out;
}

GroupPtr parse_group(const json& j) {
    const std::string where = "group";
    const int order = int_field(j, "order", where);
    const json& jt = field(j, "table", where);
    if (!jt.is_array() || jt.size() != static_cast<size_t>(order))
        fail(where, "'table' must be an order x order array");
    std::vector<int> table;
    for (const auto& row : jt) {
        if (!row.is_array() || row.size() != static_cast<size_t>(order))
            fail(where, "'table' must be an order x order array");
        for (const auto& v : row) table.push_back(v.get<int>());
    }
    return std::make_shared<const FiniteGroup>(order, std::move(table));
}

json emit_group(const FiniteGroup& g) {
    json out;
    out["order"] = g.order();
    json rows = json::array();
    for (int a = 0; a < g.order(); ++a) {
        json row = json::array();
        for (int b = 0; b < g.order(); ++b) row.push_back(g.mul(a, b));
        rows.push_back(std::move(row));
    }
    out["table"] = std::move(rows);
    return out;
}

Cochain parse_cochain(const json& j, GroupPtr group, const std::string& where) {
    if (!group) fail(where, "requires a group section");
    const int degree = int_field(j, "degree", where);
    const json& jv = field(j, "values", where);
    if (!jv.is_array()) fail(where, "'values' must be an array");
    std::vector<Cplx> values;
    values.reserve(jv.size());
    for (const auto& v : jv) values.push_back(parse_complex(v, where));
    return make_cochain(std::move(group), degree, std::move(values));
}

json emit_cochain(const Cochain& c) {
    json out;
    out["degree"] = c.degree;
    out["normalized"] = c.normalized;
    json arr = json::array();
    for (const Cplx& v : c.values) arr.push_back(emit_complex(v));
    out["values"] = std::move(arr);
    return out;
}

ModuleData parse_module_data(const json& j, RingPtr ring, double tol) {
    const std::string where = "module_data";
    if (!ring) fail(where, "requires a fusion_ring section");
    const int mrank = int_field(j, "module_rank", where);
    const json& ja = field(j, "action", where);
    const int r = ring->rank();
    if (!ja.is_array() || ja.size() != static_cast<size_t>(r))
        fail(where, "'action' must be a rank x module_rank x module_rank array");
    std::vector<int> action;
    for (const auto& plane : ja) {
        if (!plane.is_array() || plane.size() != static_cast<size_t>(mrank))
            fail(where, "'action' has wrong shape");
        for (const auto& row : plane) {
            if (!row.is_array() || row.size() != static_cast<size_t>(mrank))
                fail(where, "'action' has wrong shape");
            for (const auto& v : row) action.push_back(v.get<int>());
        }
    }
    const json& jb = field(j, "blocks", where);
    std::map<ModuleBlockKey, Mat> blocks;
    for (const auto& e : jb) {
        ModuleBlockKey k{int_field(e, "a", where), int_field(e, "b", where),
                         int_field(e, "m", where), int_field(e, "mp", where)};
        if (blocks.count(k)) fail(where, "duplicate block");
        blocks[k] = parse_matrix(field(e, "matrix", where), where);
    }
    // Missing unit-touching blocks are identities.
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
            for (int m = 0; m < mrank; ++m)
                for (int mp = 0; mp < mrank; ++mp) {
                    if (a != 0 && b != 0) continue;
                    int total = 0;
                    for (int c = 0; c < r; ++c)
                        total += ring->n(a, b, c) *
                                 action[(static_cast<size_t>(c) * mrank + m) *
                                            mrank +
                                        mp];
                    if (total > 0 && !blocks.count({a, b, m, mp}))
                        blocks[{a, b, m, mp}] = Mat::Identity(total, total);
                }
    return ModuleData(std::move(ring), mrank, std::move(action),
                      std::move(blocks), tol);
}

json emit_module_data(const ModuleData& m) {
    json out;
    out["module_rank"] = m.module_rank();
    json planes = json::array();
    for (int a = 0; a < m.ring()->rank(); ++a) {
        json plane = json::array();
        for (int mm = 0; mm < m.module_rank(); ++mm) {
            json row = json::array();
            for (int mp = 0; mp < m.module_rank(); ++mp)
                row.push_back(m.action(a, mm, mp));
            plane.push_back(std::move(row));
        }
        planes.push_back(std::move(plane));
    }
    out["action"] = std::move(planes);
    json arr = json::array();
    for (const auto& [k, mat] : m.l_blocks()) {
        json e;
        e["a"] = k.a;
        e["b"] = k.b;
        e["m"] = k.m;
        e["mp"] = k.mp;
        e["matrix"] = emit_matrix(mat);
        arr.push_back(std::move(e));
    }
    out["blocks"] = std::move(arr);
    return out;
}

std::map<ActionKey, Mat> parse_action_blocks(const json& j,
                                             const ModuleData& md,
                                             const std::string& where) {
    const json& jb = field(j, "blocks", where);
    std::map<ActionKey, Mat> blocks;
    for (const auto& e : jb) {
        ActionKey k{int_field(e, "a", where), int_field(e, "m", where),
                    int_field(e, "mp", where)};
        if (blocks.count(k)) fail(where, "duplicate block");
        blocks[k] = parse_matrix(field(e, "matrix", where), where);
    }
    // Unit action has multiplicity exactly 1.
    for (int m = 0; m < md.module_rank(); ++m)
        if (!blocks.count({0, m, m})) blocks[{0, m, m}] = Mat::Identity(1, 1);
    return blocks;
}

json emit_action_blocks(const std::map<ActionKey, Mat>& blocks) {
    json out;
    json arr = json::array();
    for (const auto& [k, m] : blocks) {
        json e;
        e["a"] = k.a;
        e["m"] = k.m;
        e["mp"] = k.mp;
        e["matrix"] = emit_matrix(m);
        arr.push_back(std::move(e));
    }
    out["blocks"] = std::move(arr);
    return out;
}

} // namespace

double Dataset::tol() const { return tolerance.value_or(env_default_tol()); }

EquivalenceData Dataset::equivalence_data() const {
    if (!f_symbols || !equivalence)
        throw InputError(
            "dataset: equivalence requires f_symbols and equivalence sections");
    const FSymbolSet& target =
        equivalence->target_f_symbols ? *equivalence->target_f_symbols
                                      : *f_symbols;
    return EquivalenceData{*f_symbols, target, equivalence->simple_map,
                           equivalence->tensorator};
}

ModuleEquivalenceData Dataset::module_equivalence_data() const {
    if (!module_data || !module_equivalence)
        throw InputError(
            "dataset: module equivalence requires module_data and "
            "module_equivalence sections");
    const ModuleData& target = module_equivalence->target_module_data
                                   ? *module_equivalence->target_module_data
                                   : *module_data;
    return ModuleEquivalenceData{*module_data, target,
                                 module_equivalence->module_map,
                                 module_equivalence->tensorator};
}

Dataset parse_dataset(const std::string& text, const ParseOptions& opts) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        std::ostringstream os;
        os << "syntax error at byte " << e.byte << ": " << e.what();
        throw InputError(os.str());
    }
    if (!j.is_object()) throw InputError("dataset: top level must be an object");

    Dataset ds;
    if (j.contains("format_version")) {
        ds.format_version = j["format_version"].get<std::string>();
        if (ds.format_version != "1")
            throw InputError("dataset: unsupported format_version '" +
                             ds.format_version + "'");
    }
    if (j.contains("name")) ds.name = j["name"].get<std::string>();
    if (j.contains("tolerance")) ds.tolerance = j["tolerance"].get<double>();
    if (opts.tolerance_override) ds.tolerance = *opts.tolerance_override;
    if (j.contains("declared_checks"))
        for (const auto& v : j["declared_checks"])
            ds.declared_checks.push_back(v.get<std::string>());

    const double tol = ds.tol();

    if (j.contains("fusion_ring")) {
        ds.ring = parse_ring(j["fusion_ring"]);
        if (opts.strict) {
            const RingReport rep = verify_ring_axioms(*ds.ring);
            if (!rep.pass)
                throw InputError("fusion_ring: " + rep.first_violation);
        }
    }
    if (j.contains("group")) ds.group = parse_group(j["group"]);

    if (j.contains("f_symbols"))
        ds.f_symbols = parse_fsymbols(j["f_symbols"], ds.ring, tol, "f_symbols");

    auto parse_gauge_section = [&](const char* key) -> std::optional<Gauge> {
        if (!j.contains(key)) return std::nullopt;
        if (!ds.ring) fail(key, "requires a fusion_ring section");
        return Gauge(ds.ring, parse_vertex_blocks(j[key], *ds.ring, key));
    };
    auto parse_r_section = [&](const char* key) -> std::optional<RSymbolSet> {
        if (!j.contains(key)) return std::nullopt;
        if (!ds.ring) fail(key, "requires a fusion_ring section");
        return RSymbolSet(ds.ring, parse_vertex_blocks(j[key], *ds.ring, key));
    };

    ds.r_symbols = parse_r_section("r_symbols");
    ds.gauge = parse_gauge_section("gauge");
    ds.gauge_unitary = parse_gauge_section("gauge_unitary");
    ds.gauge_positive = parse_gauge_section("gauge_positive");

    if (j.contains("nat_iso")) {
        if (!ds.ring) fail("nat_iso", "requires a fusion_ring section");
        const json& jc = field(j["nat_iso"], "components", "nat_iso");
        NatIso iso;
        iso.ring = ds.ring;
        for (const auto& v : jc)
            iso.components.push_back(parse_complex(v, "nat_iso"));
        if (iso.components.size() != static_cast<size_t>(ds.ring->rank()))
            fail("nat_iso", "wrong number of components");
        for (const Cplx& c : iso.components)
            if (std::abs(c) == 0.0) fail("nat_iso", "zero component");
        ds.nat_iso = std::move(iso);
    }

    if (j.contains("equivalence")) {
        const std::string where = "equivalence";
        if (!ds.ring || !ds.f_symbols)
            fail(where, "requires fusion_ring and f_symbols sections");
        const json& je = j[where];
        EquivalenceSection sec{
            {},
            std::nullopt,
            Gauge(ds.ring,
                  parse_vertex_blocks(field(je, "tensorator", where), *ds.ring,
                                      where))};
        const json& jm = field(je, "simple_map", where);
        for (const auto& v : jm) sec.simple_map.push_back(v.get<int>());
        if (je.contains("target_f_symbols"))
            sec.target_f_symbols = parse_fsymbols(je["target_f_symbols"],
                                                  ds.ring, tol, where);
        check_simple_map(*ds.ring, *ds.ring, sec.simple_map);
        ds.equivalence = std::move(sec);
    }

    auto parse_cochain_section = [&](const char* key) -> std::optional<Cochain> {
        if (!j.contains(key)) return std::nullopt;
        if (!ds.group) fail(key, "requires a group section");
        return parse_cochain(j[key], ds.group, key);
    };
    ds.cochain = parse_cochain_section("cochain");
    ds.cochain_unitary = parse_cochain_section("cochain_unitary");
    ds.cochain_positive = parse_cochain_section("cochain_positive");

    if (j.contains("module_data"))
        ds.module_data = parse_module_data(j["module_data"], ds.ring, tol);

    if (j.contains("module_equivalence")) {
        const std::string where = "module_equivalence";
        if (!ds.module_data) fail(where, "requires a module_data section");
        const json& je = j[where];
        ModuleEquivalenceSection sec{
            {},
            std::nullopt,
            ModuleGauge(ds.ring, ds.module_data->module_rank(),
                        ds.module_data->action_tensor(),
                        parse_action_blocks(field(je, "tensorator", where),
                                            *ds.module_data, where))};
        for (const auto& v : field(je, "module_map", where))
            sec.module_map.push_back(v.get<int>());
        if (je.contains("target_module_data"))
            sec.target_module_data =
                parse_module_data(je["target_module_data"], ds.ring, tol);
        ds.module_equivalence = std::move(sec);
    }

    return ds;
}

Dataset read_dataset_file(const std::string& path, const ParseOptions& opts) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_dataset(buf.str(), opts);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    }
}

std::string emit_dataset(const Dataset& ds) {
    json j;
    j["format_version"] = ds.format_version;
    if (ds.name) j["name"] = *ds.name;
    if (ds.tolerance) j["tolerance"] = *ds.tolerance;
    if (!ds.declared_checks.empty()) j["declared_checks"] = ds.declared_checks;
    if (ds.ring) j["fusion_ring"] = emit_ring(*ds.ring);
    if (ds.f_symbols) j["f_symbols"] = emit_fsymbols(*ds.f_symbols);
    if (ds.r_symbols) j["r_symbols"] = emit_vertex_blocks(ds.r_symbols->blocks());
    if (ds.gauge) j["gauge"] = emit_vertex_blocks(ds.gauge->blocks());
    if (ds.gauge_unitary)
        j["gauge_unitary"] = emit_vertex_blocks(ds.gauge_unitary->blocks());
    if (ds.gauge_positive)
        j["gauge_positive"] = emit_vertex_blocks(ds.gauge_positive->blocks());
    if (ds.nat_iso) {
        json arr = json::array();
        for (const Cplx& c : ds.nat_iso->components)
            arr.push_back(emit_complex(c));
        j["nat_iso"]["components"] = std::move(arr);
    }
    if (ds.equivalence) {
        json je;
        je["simple_map"] = ds.equivalence->simple_map;
        if (ds.equivalence->target_f_symbols)
            je["target_f_symbols"] =
                emit_fsymbols(*ds.equivalence->target_f_symbols);
        je["tensorator"] =
            emit_vertex_blocks(ds.equivalence->tensorator.blocks());
        j["equivalence"] = std::move(je);
    }
    if (ds.group) j["group"] = emit_group(*ds.group);
    if (ds.cochain) j["cochain"] = emit_cochain(*ds.cochain);
    if (ds.cochain_unitary)
        j["cochain_unitary"] = emit_cochain(*ds.cochain_unitary);
    if (ds.cochain_positive)
        j["cochain_positive"] = emit_cochain(*ds.cochain_positive);
    if (ds.module_data) j["module_data"] = emit_module_data(*ds.module_data);
    if (ds.module_equivalence) {
        json je;
        je["module_map"] = ds.module_equivalence->module_map;
        if (ds.module_equivalence->target_module_data)
            je["target_module_data"] =
                emit_module_data(*ds.module_equivalence->target_module_data);
        je["tensorator"] =
            emit_action_blocks(ds.module_equivalence->tensorator.blocks());
        j["module_equivalence"] = std::move(je);
    }
    return j.dump(2) + "\n";
}

void write_dataset_file(const Dataset& ds, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open '" + path + "' for writing");
    out << emit_dataset(ds);
    if (!out) throw InputError("failed writing '" + path + "'");
}

double env_default_tol() {
    if (const char* env = std::getenv("UFC_TOL")) {
        try {
            const double v = std::stod(env);
            if (v > 0) return v;
        } catch (...) {
        }
    }
    return kDefaultTol;
}

namespace {

Dataset fusion_builtin(const std::string& name, const FSymbolSet& f,
                       std::vector<std::string> checks) {
    Dataset ds;
    ds.name = name;
    ds.ring = f.ring();
    ds.f_symbols = f;
    ds.declared_checks = std::move(checks);
    return ds;
}

} // namespace

std::vector<std::string> builtin_names() {
    return {"trivial",        "fibonacci",
            "yang-lee",       "ising",
            "vec-z2-trivial", "vec-z2-semion",
            "vec-z3",         "fib-braided",
            "semion",         "group-z2",
            "group-z3",       "group-z2z2",
            "group-s3",       "semion-cochain",
            "z2-positive-coboundary", "module-z2-regular",
            "module-z3-regular",      "fib-equivalence"};
}

Dataset builtin_dataset(const std::string& name) {
    if (name == "trivial") {
        Dataset ds;
        ds.name = name;
        ds.ring = trivial_ring();
        ds.declared_checks = {"ring"};
        return ds;
    }
    if (name == "fibonacci")
        return fusion_builtin(name, fibonacci_fsymbols(),
                              {"ring", "pentagon", "unitary"});
    if (name == "yang-lee")
        return fusion_builtin(name, yang_lee_fsymbols(), {"ring", "pentagon"});
    if (name == "ising")
        return fusion_builtin(name, ising_fsymbols(),
                              {"ring", "pentagon", "unitary"});
    if (name == "vec-z2-trivial")
        return fusion_builtin(name, vec_z2_trivial().f_symbols,
                              {"ring", "pentagon", "unitary"});
    if (name == "vec-z2-semion")
        return fusion_builtin(name, vec_z2_semion().f_symbols,
                              {"ring", "pentagon", "unitary"});
    if (name == "vec-z3")
        return fusion_builtin(name, vec_z3().f_symbols,
                              {"ring", "pentagon", "unitary"});
    if (name == "fib-braided") {
        Dataset ds = fusion_builtin(
            name, fibonacci_fsymbols(),
            {"ring", "pentagon", "unitary", "hexagon", "braiding-unitary"});
        ds.r_symbols = fibonacci_rsymbols();
        return ds;
    }
    if (name == "semion") {
        Dataset ds = fusion_builtin(
            name, vec_z2_semion().f_symbols,
            {"ring", "pentagon", "unitary", "hexagon", "braiding-unitary"});
        ds.r_symbols = semion_rsymbols();
        return ds;
    }
    if (name == "group-z2" || name == "group-z3" || name == "group-z2z2" ||
        name == "group-s3") {
        Dataset ds;
        ds.name = name;
        if (name == "group-z2") ds.group = cyclic_group(2);
        if (name == "group-z3") ds.group = cyclic_group(3);
        if (name == "group-z2z2") ds.group = klein_group();
        if (name == "group-s3") ds.group = symmetric_group_s3();
        ds.declared_checks = {"group"};
        return ds;
    }
    if (name == "semion-cochain") {
        Dataset ds;
        ds.name = name;
        ds.group = cyclic_group(2);
        ds.cochain = semion_cocycle();
        ds.declared_checks = {"group", "cocycle"};
        return ds;
    }
    if (name == "z2-positive-coboundary") {
        Dataset ds;
        ds.name = name;
        ds.group = cyclic_group(2);
        // delta of the positive 1-cochain eta(g) = 7.
        std::vector<Cplx> eta = {Cplx(1, 0), Cplx(7, 0)};
        ds.cochain = coboundary(make_cochain(ds.group, 1, std::move(eta)));
        ds.declared_checks = {"group", "cocycle"};
        return ds;
    }
    if (name == "module-z2-regular" || name == "module-z3-regular") {
        const FSymbolSet f = name == "module-z2-regular"
                                 ? vec_z2_trivial().f_symbols
                                 : vec_z3().f_symbols;
        Dataset ds = fusion_builtin(name, f, {"ring", "pentagon", "unitary",
                                              "module-pentagon"});
        ds.name = name;
        ds.module_data = regular_module(f);
        return ds;
    }
    if (name == "fib-equivalence") {
        Dataset ds = fusion_builtin("fib-equivalence", fibonacci_fsymbols(),
                                    {"ring", "pentagon", "unitary",
                                     "equivalence"});
        NatIso mu;
        mu.ring = ds.ring;
        mu.components = {Cplx(1, 0), Cplx(2, 0)};
        EquivalenceSection sec{{0, 1}, std::nullopt, coboundary_gauge(mu)};
        ds.equivalence = std::move(sec);
        return ds;
    }
    throw InputError("unknown builtin dataset '" + name +
                     "'; see `examples list`");
}

} // namespace ufc
