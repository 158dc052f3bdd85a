#pragma once

#include <optional>

#include "braided.hpp"
#include "cohomology.hpp"
#include "module_cat.hpp"

namespace ufc {

// Equivalence section of a dataset. The source presentation is the dataset's
// f_symbols; the target defaults to the same presentation. Both live over
// the dataset's single ring.
struct EquivalenceSection {
    std::vector<int> simple_map;
    std::optional<FSymbolSet> target_f_symbols;
    Gauge tensorator;
};

struct ModuleEquivalenceSection {
    std::vector<int> module_map;
    std::optional<ModuleData> target_module_data;
    ModuleGauge tensorator;
};

// One JSON document: any subset of sections over at most one fusion ring and
// one group. Parsing validates structural invariants; ring/group axioms are
// validated unless lenient mode is chosen.
struct Dataset {
    std::string format_version = "1";
    std::optional<std::string> name;
    std::optional<double> tolerance;
    std::vector<std::string> declared_checks;

    RingPtr ring;
    std::optional<FSymbolSet> f_symbols;
    std::optional<RSymbolSet> r_symbols;
    std::optional<Gauge> gauge;
    std::optional<Gauge> gauge_unitary;
    std::optional<Gauge> gauge_positive;
    std::optional<NatIso> nat_iso;
    std::optional<EquivalenceSection> equivalence;

    GroupPtr group;
    std::optional<Cochain> cochain;
    std::optional<Cochain> cochain_unitary;
    std::optional<Cochain> cochain_positive;

    std::optional<ModuleData> module_data;
    std::optional<ModuleEquivalenceSection> module_equivalence;

    // Dataset tolerance, else UFC_TOL from the environment, else the default.
    double tol() const;

    // Materialized equivalence (requires f_symbols + equivalence section).
    EquivalenceData equivalence_data() const;
    ModuleEquivalenceData module_equivalence_data() const;
};

struct ParseOptions {
    bool strict = true;          // validate ring/group axioms on load
    std::optional<double> tolerance_override;
};

// Throws InputError with a line/column prefix for syntax errors and a
// section-qualified message for semantic errors.
Dataset parse_dataset(const std::string& text, const ParseOptions& opts = {});
Dataset read_dataset_file(const std::string& path,
                          const ParseOptions& opts = {});

// Deterministic emission: fixed key order, lossless decimal doubles,
// all blocks explicit, sorted by key.
std::string emit_dataset(const Dataset& ds);
void write_dataset_file(const Dataset& ds, const std::string& path);

// Built-in example library.
std::vector<std::string> builtin_names();
Dataset builtin_dataset(const std::string& name);

// Default tolerance from the environment (UFC_TOL), else kDefaultTol.
double env_default_tol();

} // namespace ufc
