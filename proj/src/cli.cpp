/**
 * cli.cpp - Command-line front end over the polder library.
 *
 * Every subcommand builds a ResultTable: '#'-prefixed metadata (artifact
 * version, command, config hash, display units, validity notes), a header
 * row, and 17-significant-digit cells. Identical configurations produce
 * byte-identical output; the config hash covers exactly the semantic fields
 * (inputs, geometry, tolerances, units) and ignores presentation ones
 * (format, output path).
 */

#include "polder/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "polder/boundary.hpp"
#include "polder/core.hpp"
#include "polder/field_kernels.hpp"
#include "polder/noninertial.hpp"
#include "polder/polarizability.hpp"
#include "polder/quadrature.hpp"
#include "polder/resonance.hpp"
#include "polder/three_body.hpp"
#include "polder/two_body.hpp"
#include "polder/vacuum_density.hpp"

namespace polder {

// ============================================================================
// Tables, formatting, hashing
// ============================================================================

void ResultTable::add_row(std::vector<std::string> cells) {
    if (cells.size() != columns.size())
        throw Error("result table row width does not match the header");
    rows.push_back(std::move(cells));
}

void emit_csv(const ResultTable& table, std::ostream& out) {
    for (const auto& [key, value] : table.metadata)
        out << "# " << key << ": " << value << "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i)
        out << table.columns[i] << (i + 1 < table.columns.size() ? "," : "");
    out << "\n";
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << row[i] << (i + 1 < row.size() ? "," : "");
        out << "\n";
    }
}

void emit_json(const ResultTable& table, std::ostream& out) {
    nlohmann::ordered_json doc;
    auto& meta = doc["metadata"] = nlohmann::ordered_json::object();
    for (const auto& [key, value] : table.metadata) {
        if (meta.contains(key))
            meta[key] = meta[key].get<std::string>() + "; " + value;
        else
            meta[key] = value;
    }
    doc["columns"] = table.columns;
    doc["rows"] = table.rows;
    out << doc.dump(2) << "\n";
}

std::string format_number(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (unsigned char c : text) {
        hash ^= static_cast<std::uint64_t>(c);
        hash *= 1099511628211ULL;
    }
    return hash;
}

// ============================================================================
// CLI plumbing
// ============================================================================

namespace {

enum class ColumnKind {
    Plain,
    Length,
    Energy,
    EnergyDensity,
    Force,
    Temperature,
};

UnitSystem unit_system_from(const std::string& name) {
    if (name == "natural") return natural_units();
    if (name == "atomic") return atomic_units();
    if (name == "si") return si_units();
    throw DomainError("unknown unit system '" + name +
                      "' (expected natural, atomic, or si)");
}

// Factor taking a natural-units value to the display system; composed from
// the base to-natural factors, so derived kinds (densities, forces) stay
// consistent with the base conversions.
double display_factor(ColumnKind kind, const UnitSystem& us) {
    switch (kind) {
        case ColumnKind::Plain:
            return 1.0;
        case ColumnKind::Length:
            return 1.0 / us.factor(QuantityKind::Length);
        case ColumnKind::Energy:
            return 1.0 / us.factor(QuantityKind::Energy);
        case ColumnKind::EnergyDensity: {
            const double fl = us.factor(QuantityKind::Length);
            return fl * fl * fl / us.factor(QuantityKind::Energy);
        }
        case ColumnKind::Force:
            return us.factor(QuantityKind::Length) /
                   us.factor(QuantityKind::Energy);
        case ColumnKind::Temperature:
            return 1.0 / us.factor(QuantityKind::Temperature);
    }
    throw DomainError("unknown column kind");
}

class Formatter {
  public:
    explicit Formatter(const UnitSystem& us) : us_(us) {}
    std::string num(double natural_value, ColumnKind kind) const {
        return format_number(natural_value * display_factor(kind, us_));
    }

  private:
    UnitSystem us_;
};

// Canonical semantic-config string; its FNV-1a digest lands in the metadata.
class ConfigHash {
  public:
    void add(const std::string& key, const std::string& value) {
        canon_ += key;
        canon_ += '=';
        canon_ += value;
        canon_ += '\n';
    }
    void add_number(const std::string& key, double value) {
        add(key, format_number(value));
    }
    std::string digest() const {
        char buffer[20];
        std::snprintf(buffer, sizeof(buffer), "%016llx",
                      static_cast<unsigned long long>(fnv1a64(canon_)));
        return buffer;
    }

  private:
    std::string canon_;
};

struct CommonOpts {
    std::string units = "natural";
    std::string format = "csv";
    std::string output_path;
    QuadratureSpec quad;
    DiffSpec diff;
};

void attach_common(CLI::App* sub, CommonOpts& c) {
    sub->add_option("--units", c.units,
                    "Display unit system: natural, atomic, si");
    sub->add_option("--format", c.format, "Output format: csv or json");
    sub->add_option("--output", c.output_path,
                    "Write the table to this file instead of stdout");
    sub->add_option("--rel-tol", c.quad.rel_tol,
                    "Relative quadrature tolerance");
    sub->add_option("--abs-tol", c.quad.abs_tol,
                    "Absolute quadrature tolerance");
    sub->add_option("--max-subdivisions", c.quad.max_subdivisions,
                    "Adaptive quadrature subdivision budget");
    sub->add_option("--base-step", c.diff.base_step,
                    "Finest relative step of the differentiation engine");
    sub->add_option("--richardson-levels", c.diff.richardson_levels,
                    "Richardson extrapolation levels");
}

void add_common_hash(ConfigHash& h, const CommonOpts& c) {
    h.add("units", c.units);
    h.add_number("rel_tol", c.quad.rel_tol);
    h.add_number("abs_tol", c.quad.abs_tol);
    h.add_number("max_subdivisions",
                 static_cast<double>(c.quad.max_subdivisions));
    h.add_number("base_step", c.diff.base_step);
    h.add_number("richardson_levels",
                 static_cast<double>(c.diff.richardson_levels));
}

void stamp_metadata(ResultTable& table, const std::string& command,
                    const ConfigHash& hash, const CommonOpts& common) {
    table.metadata.emplace_back("artifact",
                                std::string("polder ") + kVersion);
    table.metadata.emplace_back("command", command);
    table.metadata.emplace_back("config-hash", hash.digest());
    table.metadata.emplace_back("units", common.units);
}

void deliver(const ResultTable& table, const CommonOpts& common,
             std::ostream& out) {
    std::ofstream file;
    std::ostream* target = &out;
    if (!common.output_path.empty()) {
        file.open(common.output_path);
        if (!file)
            throw DomainError("cannot open output file: " +
                              common.output_path);
        target = &file;
    }
    if (common.format == "csv")
        emit_csv(table, *target);
    else if (common.format == "json")
        emit_json(table, *target);
    else
        throw DomainError("unknown output format '" + common.format +
                          "' (expected csv or json)");
}

Vec3 parse_vec3(const std::string& text, const char* what) {
    std::stringstream stream(text);
    double components[3];
    char sep = ',';
    for (int i = 0; i < 3; ++i) {
        if (i > 0) {
            stream >> sep;
            if (sep != ',') sep = '?';
        }
        if (!(stream >> components[i]) || sep == '?')
            throw DomainError(std::string(what) +
                              ": expected a comma-separated triple x,y,z, "
                              "got '" +
                              text + "'");
    }
    return Vec3{components[0], components[1], components[2]};
}

// Atom references are either a path to a JSON file or an inline JSON object
// (detected by a leading '{').
AtomDescription load_atom(const std::string& ref) {
    const std::size_t first = ref.find_first_not_of(" \t\r\n");
    std::string text;
    if (first != std::string::npos && ref[first] == '{') {
        text = ref;
    } else {
        std::ifstream in(ref);
        if (!in) throw DomainError("atom file not found: " + ref);
        std::stringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    return atom_from_json_text(text);
}

Parity parse_parity(const std::string& text) {
    if (text == "symmetric") return Parity::Symmetric;
    if (text == "antisymmetric") return Parity::Antisymmetric;
    throw DomainError("unknown parity '" + text +
                      "' (expected symmetric or antisymmetric)");
}

// ============================================================================
// Subcommand option bags
// ============================================================================

struct TwoBodyOpts {
    std::string atom_a, atom_b;
    double r = 0.0;
    CommonOpts common;
};

struct ThreeBodyOpts {
    std::string atom_a, atom_b, atom_c;
    std::string pos_a, pos_b, pos_c;
    bool far_mode = false;
    bool excited = false;
    double k0 = 0.0;
    std::string dipole_a;
    CommonOpts common;
};

struct AtomWallOpts {
    double alpha = 0.0;
    double z = 0.0;
    CommonOpts common;
};

struct PlateOpts {
    double alpha_a = 0.0, alpha_b = 0.0;
    std::string pos_a, pos_b;
    CommonOpts common;
};

struct DensityOpts {
    std::string atom;
    double r = 0.0;
    bool plate = false;
    double z = 0.0;
    std::string representation = "rotated";
    CommonOpts common;
};

struct CorrelationOpts {
    std::string atom_a, atom_b;
    double r = 0.0;
    CommonOpts common;
};

struct ResonanceOpts {
    double k0 = 0.0;
    std::string dipole_a, dipole_b, r_vec;
    std::string parity = "symmetric";
    CommonOpts common;
};

struct AcceleratedOpts {
    double a = 0.0, z = 0.0;
    bool scalar = false;
    double lambda = 1.0, omega0 = 0.0;
    double k0 = 0.0;
    std::string dipole_a, dipole_b;
    std::string parity = "symmetric";
    CommonOpts common;
};

struct ScanOpts {
    std::string computation;
    double start = 0.0, stop = 0.0;
    int points = 0;
    std::string spacing = "log";
    std::string atom_a, atom_b, atom_c;
    double alpha = 1.0;
    std::string field = "electric";
    CommonOpts common;
};

struct CrossoverOpts {
    std::string atom_a, atom_b;
    double threshold = 0.1;
    double r_min = 0.0, r_max = 0.0;  // 0 = derive from lambda_min
    CommonOpts common;
};

// ============================================================================
// Handlers
// ============================================================================

int handle_two_body(const TwoBodyOpts& o, std::ostream& out) {
    const AtomDescription a = load_atom(o.atom_a);
    const AtomDescription b = load_atom(o.atom_b);

    ConfigHash hash;
    hash.add("command", "two-body");
    hash.add("atom_a", atom_to_json_text(a));
    hash.add("atom_b", atom_to_json_text(b));
    hash.add_number("r", o.r);
    add_common_hash(hash, o.common);

    const Formatter fmt(unit_system_from(o.common.units));
    ResultTable table;
    table.columns = {"r", "energy", "abs_error", "regime", "scaling"};
    stamp_metadata(table, "two-body", hash, o.common);

    if (a.kind == FieldKind::Electric && b.kind == FieldKind::Electric) {
        PairSpec pair{a.model, b.model, a.kind, b.kind, o.r};
        const EnergyResult e = cp_full(pair, o.common.quad);
        table.add_row({fmt.num(o.r, ColumnKind::Length),
                       fmt.num(e.value, ColumnKind::Energy),
                       fmt.num(e.abs_error_estimate, ColumnKind::Energy),
                       regime_name(e.regime), e.notes});
    } else {
        // One magnetic partner: only the far-zone closed form is available.
        const double alpha_e =
            (a.kind == FieldKind::Electric ? a.model : b.model).alpha_static();
        const double alpha_m =
            (a.kind == FieldKind::Magnetic ? a.model : b.model).alpha_static();
        const double value = cp_far_electric_magnetic(alpha_e, alpha_m, o.r);
        table.add_row({fmt.num(o.r, ColumnKind::Length),
                       fmt.num(value, ColumnKind::Energy),
                       fmt.num(0.0, ColumnKind::Energy), "far", "r^-7"});
        table.metadata.emplace_back(
            "note", "electric-magnetic pair: far-zone closed form, repulsive");
    }
    deliver(table, o.common, out);
    return 0;
}

int handle_three_body(const ThreeBodyOpts& o, std::ostream& out) {
    const Vec3 pa = parse_vec3(o.pos_a, "--pos-a");
    const Vec3 pb = parse_vec3(o.pos_b, "--pos-b");
    const Vec3 pc = parse_vec3(o.pos_c, "--pos-c");
    const TriangleGeometry geometry = make_triangle(pa, pb, pc);
    if (o.far_mode && o.excited)
        throw DomainError("three-body: --far and --excited are exclusive");

    const AtomDescription b = load_atom(o.atom_b);
    const AtomDescription c = load_atom(o.atom_c);

    ConfigHash hash;
    hash.add("command", "three-body");
    hash.add("pos_a", o.pos_a);
    hash.add("pos_b", o.pos_b);
    hash.add("pos_c", o.pos_c);
    hash.add("atom_b", atom_to_json_text(b));
    hash.add("atom_c", atom_to_json_text(c));
    add_common_hash(hash, o.common);

    const Formatter fmt(unit_system_from(o.common.units));
    ResultTable table;

    if (o.excited) {
        if (!(o.k0 > 0.0) || o.dipole_a.empty())
            throw DomainError(
                "three-body --excited requires --k0 and --dipole-a");
        hash.add("mode", "excited");
        hash.add_number("k0", o.k0);
        hash.add("dipole_a", o.dipole_a);
        TwoLevelAtom atom_a{o.k0, parse_vec3(o.dipole_a, "--dipole-a"), pa};
        const ExcitedThreeBodyResult r = three_body_excited(
            atom_a, b.model, c.model, geometry, o.common.quad, o.common.diff);
        table.columns = {"side_alpha", "side_beta", "side_gamma",
                         "resonant",   "dispersive", "total",
                         "regime"};
        stamp_metadata(table, "three-body", hash, o.common);
        table.add_row({fmt.num(geometry.alpha, ColumnKind::Length),
                       fmt.num(geometry.beta, ColumnKind::Length),
                       fmt.num(geometry.gamma, ColumnKind::Length),
                       fmt.num(r.resonant, ColumnKind::Energy),
                       fmt.num(r.dispersive, ColumnKind::Energy),
                       fmt.num(r.total.value, ColumnKind::Energy),
                       regime_name(r.total.regime)});
        table.metadata.emplace_back("note", r.total.notes);
        deliver(table, o.common, out);
        return 0;
    }

    if (o.atom_a.empty())
        throw DomainError("three-body: --atom-a is required");
    const AtomDescription a = load_atom(o.atom_a);
    hash.add("atom_a", atom_to_json_text(a));
    hash.add("mode", o.far_mode ? "far" : "full");

    EnergyResult e;
    if (o.far_mode) {
        e = three_body_far(a.model.alpha_static(), b.model.alpha_static(),
                           c.model.alpha_static(), geometry, o.common.diff);
    } else {
        TripleSpec spec{a.model, b.model, c.model, geometry};
        e = three_body_full(spec, o.common.quad, o.common.diff);
    }
    table.columns = {"side_alpha", "side_beta", "side_gamma",
                     "energy",     "abs_error", "regime"};
    stamp_metadata(table, "three-body", hash, o.common);
    table.add_row({fmt.num(geometry.alpha, ColumnKind::Length),
                   fmt.num(geometry.beta, ColumnKind::Length),
                   fmt.num(geometry.gamma, ColumnKind::Length),
                   fmt.num(e.value, ColumnKind::Energy),
                   fmt.num(e.abs_error_estimate, ColumnKind::Energy),
                   regime_name(e.regime)});
    if (!e.notes.empty()) table.metadata.emplace_back("note", e.notes);
    deliver(table, o.common, out);
    return 0;
}

int handle_atom_wall(const AtomWallOpts& o, std::ostream& out) {
    ConfigHash hash;
    hash.add("command", "atom-wall");
    hash.add_number("alpha", o.alpha);
    hash.add_number("z", o.z);
    add_common_hash(hash, o.common);

    const AtomWallResult r = atom_wall(o.alpha, o.z);
    const char* character =
        r.force < 0.0 ? "attractive" : (r.force > 0.0 ? "repulsive" : "none");

    const Formatter fmt(unit_system_from(o.common.units));
    ResultTable table;
    table.columns = {"z", "energy", "force", "character"};
    stamp_metadata(table, "atom-wall", hash, o.common);
    table.add_row({fmt.num(o.z, ColumnKind::Length),
                   fmt.num(r.energy, ColumnKind::Energy),
                   fmt.num(r.force, ColumnKind::Force), character});
    table.metadata.emplace_back("note", r.notes);
    deliver(table, o.common, out);
    return 0;
}

int handle_pair_near_plate(const PlateOpts& o, std::ostream& out) {
    const Vec3 pa = parse_vec3(o.pos_a, "--pos-a");
    const Vec3 pb = parse_vec3(o.pos_b, "--pos-b");

    ConfigHash hash;
    hash.add("command", "pair-near-plate");
    hash.add_number("alpha_a", o.alpha_a);
    hash.add_number("alpha_b", o.alpha_b);
    hash.add("pos_a", o.pos_a);
    hash.add("pos_b", o.pos_b);
    add_common_hash(hash, o.common);

    const PlatePairResult r = pair_near_plate(o.alpha_a, o.alpha_b, pa, pb);

    const Formatter fmt(unit_system_from(o.common.units));
    ResultTable table;
    table.columns = {"r",      "r_bar", "sin2_theta", "sin2_theta_bar",
                     "direct", "image", "cross",      "total"};
    stamp_metadata(table, "pair-near-plate", hash, o.common);
    table.add_row({fmt.num(r.geometry.r, ColumnKind::Length),
                   fmt.num(r.geometry.r_bar, ColumnKind::Length),
                   fmt.num(r.geometry.sin2_theta, ColumnKind::Plain),
                   fmt.num(r.geometry.sin2_theta_bar, ColumnKind::Plain),
                   fmt.num(r.direct, ColumnKind::Energy),
                   fmt.num(r.image, ColumnKind::Energy),
                   fmt.num(r.cross, ColumnKind::Energy),
                   fmt.num(r.total.value, ColumnKind::Energy)});
    table.metadata.emplace_back("note", r.total.notes);
    deliver(table, o.common, out);
    return 0;
}

int handle_energy_density(const DensityOpts& o, std::ostream& out) {
    ConfigHash hash;
    hash.add("command", "energy-density");
    add_common_hash(hash, o.common);

    const Formatter fmt(unit_system_from(o.common.units));
    ResultTable table;

    if (o.plate) {
        if (!(o.z > 0.0))
            throw DomainError("energy-density --plate requires --z > 0");
        hash.add("mode", "plate");
        hash.add_number("z", o.z);
        table.columns = {"z", "electric_density", "magnetic_density"};
        stamp_metadata(table, "energy-density", hash, o.common);
        table.add_row(
            {fmt.num(o.z, ColumnKind::Length),
             fmt.num(plate_density(o.z, FieldKind::Electric),
                     ColumnKind::EnergyDensity),
             fmt.num(plate_density(o.z, FieldKind::Magnetic),
                     ColumnKind::EnergyDensity)});
        deliver(table, o.common, out);
        return 0;
    }

    if (o.atom.empty())
        throw DomainError("energy-density requires --atom (or --plate)");
    const AtomDescription atom = load_atom(o.atom);
    DensityRepresentation rep;
    if (o.representation == "rotated")
        rep = DensityRepresentation::RotatedSingleIntegral;
    else if (o.representation == "far")
        rep = DensityRepresentation::FarClosedForm;
    else
        throw DomainError("unknown representation '" + o.representation +
                          "' (expected rotated or far)");
    hash.add("mode", "atom");
    hash.add("atom", atom_to_json_text(atom));
    hash.add_number("r", o.r);
    hash.add("representation", o.representation);

    const DensityProfile profile =
        density_profile(atom.model, {o.r}, rep, o.common.quad);
    table.columns = {"r", "electric_density", "magnetic_density",
                     "representation"};
    stamp_metadata(table, "energy-density", hash, o.common);
    table.add_row({fmt.num(o.r, ColumnKind::Length),
                   fmt.num(profile.electric[0], ColumnKind::EnergyDensity),
                   fmt.num(profile.magnetic[0], ColumnKind::EnergyDensity),
                   density_representation_name(rep)});
    deliver(table, o.common, out);
    return 0;
}

int handle_correlation(const CorrelationOpts& o, std::ostream& out) {
    const AtomDescription a = load_atom(o.atom_a);
    const AtomDescription b = load_atom(o.atom_b);

    ConfigHash hash;
    hash.add("command", "correlation");
    hash.add("atom_a", atom_to_json_text(a));
    hash.add("atom_b", atom_to_json_text(b));
    hash.add_number("r", o.r);
    add_common_hash(hash, o.common);

    PairSpec pair{a.model, b.model, a.kind, b.kind, o.r};
    const CorrelationCheck check = cp_via_correlation(pair, o.common.quad);

    const Formatter fmt(unit_system_from(o.common.units));
    ResultTable table;
    table.columns = {"r", "energy", "deviation", "regime"};
    stamp_metadata(table, "correlation", hash, o.common);
    table.add_row({fmt.num(o.r, ColumnKind::Length),
                   fmt.num(check.energy.value, ColumnKind::Energy),
                   fmt.num(check.deviation, ColumnKind::Plain),
                   regime_name(check.energy.regime)});
    table.metadata.emplace_back(
        "note", "independent kernel-contraction route; deviation is relative "
                "to the direct integral");
    deliver(table, o.common, out);
    return 0;
}

int handle_resonance(const ResonanceOpts& o, std::ostream& out) {
    ConfigHash hash;
    hash.add("command", "resonance");
    hash.add_number("k0", o.k0);
    hash.add("dipole_a", o.dipole_a);
    hash.add("dipole_b", o.dipole_b);
    hash.add("r_vec", o.r_vec);
    hash.add("parity", o.parity);
    add_common_hash(hash, o.common);

    const Vec3 r_vec = parse_vec3(o.r_vec, "--r-vec");
    BellPairSpec spec;
    spec.atom_a = TwoLevelAtom{o.k0, parse_vec3(o.dipole_a, "--dipole-a"),
                               Vec3{0.0, 0.0, 0.0}};
    spec.atom_b = TwoLevelAtom{o.k0, parse_vec3(o.dipole_b, "--dipole-b"),
                               r_vec};
    spec.parity = parse_parity(o.parity);
    spec.r_vec = r_vec;
    const EnergyResult e = resonance_energy(spec);

    const Formatter fmt(unit_system_from(o.common.units));
    ResultTable table;
    table.columns = {"r", "energy", "parity", "regime"};
    stamp_metadata(table, "resonance", hash, o.common);
    table.add_row({fmt.num(r_vec.norm(), ColumnKind::Length),
                   fmt.num(e.value, ColumnKind::Energy), o.parity,
                   regime_name(e.regime)});
    table.metadata.emplace_back("note", e.notes);
    deliver(table, o.common, out);
    return 0;
}

int handle_accelerated(const AcceleratedOpts& o, std::ostream& out) {
    ConfigHash hash;
    hash.add("command", "accelerated");
    hash.add_number("a", o.a);
    hash.add_number("z", o.z);
    add_common_hash(hash, o.common);

    const AcceleratedPair acc = make_accelerated_pair(o.a, o.z);
    const Formatter fmt(unit_system_from(o.common.units));
    ResultTable table;

    if (o.scalar) {
        if (!(o.omega0 > 0.0))
            throw DomainError("accelerated --scalar requires --omega0 > 0");
        hash.add("mode", "scalar");
        hash.add_number("lambda", o.lambda);
        hash.add_number("omega0", o.omega0);
        const ScalarCpReport report =
            scalar_cp_accelerated(ScalarAtomPair{o.omega0, o.lambda}, acc);
        table.columns = {"z", "z_a", "t_unruh", "regime", "value"};
        stamp_metadata(table, "accelerated", hash, o.common);
        table.add_row(
            {fmt.num(o.z, ColumnKind::Length),
             fmt.num(acc.z_a, ColumnKind::Length),
             fmt.num(acc.t_u, ColumnKind::Temperature),
             regime_name(report.regime),
             report.value ? fmt.num(*report.value, ColumnKind::Energy)
                          : std::string()});
        table.metadata.emplace_back("note", report.notes);
        for (const std::string& law : report.scaling_laws)
            table.metadata.emplace_back("scaling", law);
        deliver(table, o.common, out);
        return 0;
    }

    if (!(o.k0 > 0.0) || o.dipole_a.empty() || o.dipole_b.empty())
        throw DomainError(
            "accelerated (electromagnetic mode) requires --k0, --dipole-a "
            "and --dipole-b");
    hash.add("mode", "resonance");
    hash.add_number("k0", o.k0);
    hash.add("dipole_a", o.dipole_a);
    hash.add("dipole_b", o.dipole_b);
    hash.add("parity", o.parity);

    BellPairSpec spec;
    spec.atom_a = TwoLevelAtom{o.k0, parse_vec3(o.dipole_a, "--dipole-a"),
                               Vec3{0.0, 0.0, 0.0}};
    spec.atom_b = TwoLevelAtom{o.k0, parse_vec3(o.dipole_b, "--dipole-b"),
                               Vec3{0.0, 0.0, o.z}};
    spec.parity = parse_parity(o.parity);
    spec.r_vec = Vec3{0.0, 0.0, o.z};
    const EnergyResult e = resonance_accelerated(spec, acc);

    table.columns = {"z", "z_a", "t_unruh", "phase", "energy", "parity"};
    stamp_metadata(table, "accelerated", hash, o.common);
    table.add_row({fmt.num(o.z, ColumnKind::Length),
                   fmt.num(acc.z_a, ColumnKind::Length),
                   fmt.num(acc.t_u, ColumnKind::Temperature),
                   fmt.num(accelerated_phase(o.a, o.k0, o.z),
                           ColumnKind::Plain),
                   fmt.num(e.value, ColumnKind::Energy), o.parity});
    table.metadata.emplace_back("note", e.notes);
    deliver(table, o.common, out);
    return 0;
}

int handle_scan(const ScanOpts& o, std::ostream& out) {
    if (!(o.start < o.stop))
        throw DomainError("scan: --start must be below --stop");
    if (o.points < 2) throw DomainError("scan: --points must be at least 2");
    if (o.spacing != "linear" && o.spacing != "log")
        throw DomainError("scan: --spacing must be linear or log");
    if (o.spacing == "log" && !(o.start > 0.0))
        throw DomainError("scan: log spacing requires --start > 0");
    // A malformed numerical spec would fail identically at every grid point;
    // reject it up front as a configuration error rather than emitting a
    // table of uniformly failed rows.
    validate(o.common.quad);
    validate(o.common.diff);

    ConfigHash hash;
    hash.add("command", "scan");
    hash.add("computation", o.computation);
    hash.add_number("start", o.start);
    hash.add_number("stop", o.stop);
    hash.add_number("points", static_cast<double>(o.points));
    hash.add("spacing", o.spacing);
    add_common_hash(hash, o.common);

    // Per-point evaluator: value in natural units plus a regime tag.
    std::function<std::pair<double, Regime>(double)> evaluate;
    ColumnKind value_kind = ColumnKind::Energy;
    std::string grid_name = "r";

    if (o.computation == "two-body") {
        const AtomDescription a = load_atom(o.atom_a);
        const AtomDescription b = load_atom(o.atom_b);
        hash.add("atom_a", atom_to_json_text(a));
        hash.add("atom_b", atom_to_json_text(b));
        evaluate = [a, b, quad = o.common.quad](double r) {
            PairSpec pair{a.model, b.model, a.kind, b.kind, r};
            const EnergyResult e = cp_full(pair, quad);
            return std::make_pair(e.value, e.regime);
        };
    } else if (o.computation == "three-body-equilateral") {
        const AtomDescription a = load_atom(o.atom_a);
        const AtomDescription b = load_atom(o.atom_b);
        const AtomDescription c = load_atom(o.atom_c);
        hash.add("atom_a", atom_to_json_text(a));
        hash.add("atom_b", atom_to_json_text(b));
        hash.add("atom_c", atom_to_json_text(c));
        evaluate = [a, b, c, quad = o.common.quad,
                    diff = o.common.diff](double r) {
            const TriangleGeometry geometry = make_triangle(
                Vec3{0.0, 0.0, 0.0}, Vec3{r, 0.0, 0.0},
                Vec3{0.5 * r, 0.5 * std::sqrt(3.0) * r, 0.0});
            TripleSpec spec{a.model, b.model, c.model, geometry};
            const EnergyResult e = three_body_full(spec, quad, diff);
            return std::make_pair(e.value, e.regime);
        };
    } else if (o.computation == "atom-wall") {
        grid_name = "z";
        hash.add_number("alpha", o.alpha);
        evaluate = [alpha = o.alpha](double z) {
            return std::make_pair(atom_wall(alpha, z).energy, Regime::Far);
        };
    } else if (o.computation == "energy-density") {
        const AtomDescription atom = load_atom(o.atom_a);
        hash.add("atom", atom_to_json_text(atom));
        hash.add("field", o.field);
        value_kind = ColumnKind::EnergyDensity;
        FieldKind field;
        if (o.field == "electric")
            field = FieldKind::Electric;
        else if (o.field == "magnetic")
            field = FieldKind::Magnetic;
        else
            throw DomainError("scan: --field must be electric or magnetic");
        evaluate = [atom, field, quad = o.common.quad](double r) {
            const double value =
                density_around_atom(atom.model, r, field, quad);
            const Regime regime =
                classify_regime(atom.model, atom.model, r).regime;
            return std::make_pair(value, regime);
        };
    } else {
        throw DomainError(
            "scan: unknown --computation '" + o.computation +
            "' (expected two-body, three-body-equilateral, atom-wall, "
            "energy-density)");
    }

    // Grid, values, failure marks.
    std::vector<double> grid(o.points);
    for (int i = 0; i < o.points; ++i) {
        const double t = static_cast<double>(i) / (o.points - 1);
        grid[i] = (o.spacing == "log")
                      ? std::exp(std::log(o.start) +
                                 t * (std::log(o.stop) - std::log(o.start)))
                      : o.start + t * (o.stop - o.start);
    }
    std::vector<double> values(o.points,
                               std::numeric_limits<double>::quiet_NaN());
    std::vector<std::string> regimes(o.points, "-");
    std::vector<bool> failed(o.points, false);
    bool any_failed = false;
    for (int i = 0; i < o.points; ++i) {
        try {
            const auto [value, regime] = evaluate(grid[i]);
            values[i] = value;
            regimes[i] = regime_name(regime);
        } catch (const Error&) {
            failed[i] = true;
            any_failed = true;
        }
    }

    const Formatter fmt(unit_system_from(o.common.units));
    ResultTable table;
    table.columns = {grid_name, "value", "log_slope", "regime", "status"};
    stamp_metadata(table, "scan", hash, o.common);
    table.metadata.emplace_back("computation", o.computation);
    for (int i = 0; i < o.points; ++i) {
        // Centered log-log slope; undefined at the ends and next to failed
        // or zero-valued neighbors.
        std::string slope_cell;
        if (i > 0 && i + 1 < o.points && !failed[i - 1] && !failed[i + 1] &&
            values[i - 1] != 0.0 && values[i + 1] != 0.0) {
            const double slope =
                (std::log(std::abs(values[i + 1])) -
                 std::log(std::abs(values[i - 1]))) /
                (std::log(grid[i + 1]) - std::log(grid[i - 1]));
            if (std::isfinite(slope)) slope_cell = format_number(slope);
        }
        table.add_row({fmt.num(grid[i], ColumnKind::Length),
                       failed[i] ? std::string()
                                 : fmt.num(values[i], value_kind),
                       slope_cell, regimes[i],
                       failed[i] ? "failed" : "ok"});
    }
    deliver(table, o.common, out);
    return any_failed ? 3 : 0;
}

int handle_crossover(const CrossoverOpts& o, std::ostream& out) {
    if (!(o.threshold > 0.0))
        throw DomainError(
            "crossover: threshold must be strictly positive (a zero "
            "threshold is degenerate: the deviation is positive at every r)");

    const AtomDescription a = load_atom(o.atom_a);
    const AtomDescription b = load_atom(o.atom_b);
    if (!a.model.has_transitions() || !b.model.has_transitions())
        throw DomainError("crossover: transition-based models are required");

    ConfigHash hash;
    hash.add("command", "crossover");
    hash.add("atom_a", atom_to_json_text(a));
    hash.add("atom_b", atom_to_json_text(b));
    hash.add_number("threshold", o.threshold);
    hash.add_number("r_min", o.r_min);
    hash.add_number("r_max", o.r_max);
    add_common_hash(hash, o.common);

    const double k_max = std::max(a.model.max_transition_wavenumber(),
                                  b.model.max_transition_wavenumber());
    const double lambda_min = 2.0 * kPi / k_max;
    const double lo_default = 1e-3 * lambda_min;
    const double hi_default = 10.0 * lambda_min;
    double lo = (o.r_min > 0.0) ? o.r_min : lo_default;
    double hi = (o.r_max > 0.0) ? o.r_max : hi_default;
    if (!(lo < hi)) throw DomainError("crossover: need r_min < r_max");

    // The departure of the full integral from the London form grows
    // monotonically with r, so the smallest r exceeding the threshold is a
    // plain bisection target.
    QuadratureSpec tight = o.common.quad;
    tight.rel_tol = std::min(tight.rel_tol, 1e-12);
    auto deviation = [&](double r) {
        PairSpec pair{a.model, b.model, a.kind, b.kind, r};
        const double full = cp_full(pair, tight).value;
        const double london = london_near(a.model, b.model, r);
        return std::abs(full - london) / std::abs(london);
    };

    if (deviation(lo) >= o.threshold)
        throw DomainError(
            "crossover: deviation already exceeds the threshold at the "
            "bracket start; shrink --r-min");
    if (deviation(hi) < o.threshold)
        throw DomainError(
            "crossover: threshold never crossed within the bracket; raise "
            "--r-max or lower the threshold");

    for (int iteration = 0; iteration < 200 && (hi - lo) > 1e-12 * lo;
         ++iteration) {
        const double mid = 0.5 * (lo + hi);
        if (deviation(mid) >= o.threshold)
            hi = mid;
        else
            lo = mid;
    }
    const double crossover_r = 0.5 * (lo + hi);

    const Formatter fmt(unit_system_from(o.common.units));
    ResultTable table;
    table.columns = {"threshold", "crossover_r", "lambda_min",
                     "r_over_lambda"};
    stamp_metadata(table, "crossover", hash, o.common);
    table.add_row({fmt.num(o.threshold, ColumnKind::Plain),
                   fmt.num(crossover_r, ColumnKind::Length),
                   fmt.num(lambda_min, ColumnKind::Length),
                   fmt.num(crossover_r / lambda_min, ColumnKind::Plain)});
    table.metadata.emplace_back(
        "note", "smallest separation where |full - london|/|london| exceeds "
                "the threshold");
    deliver(table, o.common, out);
    return 0;
}

}  // namespace

// ============================================================================
// Entry point
// ============================================================================

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{
        "polder - dispersion, resonance, and vacuum-field quantities for "
        "neutral atoms"};
    app.name("polder");
    app.require_subcommand(1);

    TwoBodyOpts two;
    auto* two_sub = app.add_subcommand(
        "two-body", "Two-atom dispersion energy at any separation");
    two_sub->add_option("--atom-a", two.atom_a, "Atom A (JSON file or inline)")
        ->required();
    two_sub->add_option("--atom-b", two.atom_b, "Atom B (JSON file or inline)")
        ->required();
    two_sub->add_option("--r", two.r, "Separation (natural units)")
        ->required();
    attach_common(two_sub, two.common);

    ThreeBodyOpts three;
    auto* three_sub = app.add_subcommand(
        "three-body", "Non-additive three-atom dispersion energy");
    three_sub->add_option("--atom-a", three.atom_a, "Atom A (JSON)");
    three_sub->add_option("--atom-b", three.atom_b, "Atom B (JSON)")
        ->required();
    three_sub->add_option("--atom-c", three.atom_c, "Atom C (JSON)")
        ->required();
    three_sub->add_option("--pos-a", three.pos_a, "Position of A: x,y,z")
        ->required();
    three_sub->add_option("--pos-b", three.pos_b, "Position of B: x,y,z")
        ->required();
    three_sub->add_option("--pos-c", three.pos_c, "Position of C: x,y,z")
        ->required();
    three_sub->add_flag("--far", three.far_mode,
                        "Static far-zone form instead of the full integral");
    three_sub->add_flag("--excited", three.excited,
                        "Atom A excited (two-level); needs --k0, --dipole-a");
    three_sub->add_option("--k0", three.k0,
                          "Excited-atom transition wavenumber");
    three_sub->add_option("--dipole-a", three.dipole_a,
                          "Excited-atom dipole: x,y,z");
    attach_common(three_sub, three.common);

    AtomWallOpts wall;
    auto* wall_sub = app.add_subcommand(
        "atom-wall", "Atom facing a perfectly conducting wall");
    wall_sub->add_option("--alpha", wall.alpha, "Static polarizability")
        ->required();
    wall_sub->add_option("--z", wall.z, "Distance from the wall")->required();
    attach_common(wall_sub, wall.common);

    PlateOpts plate;
    auto* plate_sub = app.add_subcommand(
        "pair-near-plate", "Two atoms above a perfectly conducting plate");
    plate_sub->add_option("--alpha-a", plate.alpha_a, "Static polarizability A")
        ->required();
    plate_sub->add_option("--alpha-b", plate.alpha_b, "Static polarizability B")
        ->required();
    plate_sub->add_option("--pos-a", plate.pos_a, "Position of A: x,y,z")
        ->required();
    plate_sub->add_option("--pos-b", plate.pos_b, "Position of B: x,y,z")
        ->required();
    attach_common(plate_sub, plate.common);

    DensityOpts density;
    auto* density_sub = app.add_subcommand(
        "energy-density", "Vacuum energy densities (around atom or plate)");
    density_sub->add_option("--atom", density.atom, "Source atom (JSON)");
    density_sub->add_option("--r", density.r, "Distance from the atom");
    density_sub->add_flag("--plate", density.plate,
                          "Plate densities instead of atom densities");
    density_sub->add_option("--z", density.z, "Distance from the plate");
    density_sub->add_option("--representation", density.representation,
                            "rotated (integral) or far (closed form)");
    attach_common(density_sub, density.common);

    CorrelationOpts correlation;
    auto* correlation_sub = app.add_subcommand(
        "correlation",
        "Two-atom energy via the field-correlation route (cross-check)");
    correlation_sub
        ->add_option("--atom-a", correlation.atom_a, "Atom A (JSON)")
        ->required();
    correlation_sub
        ->add_option("--atom-b", correlation.atom_b, "Atom B (JSON)")
        ->required();
    correlation_sub->add_option("--r", correlation.r, "Separation")
        ->required();
    attach_common(correlation_sub, correlation.common);

    ResonanceOpts resonance;
    auto* resonance_sub = app.add_subcommand(
        "resonance", "Resonance interaction of an entangled identical pair");
    resonance_sub->add_option("--k0", resonance.k0, "Transition wavenumber")
        ->required();
    resonance_sub
        ->add_option("--dipole-a", resonance.dipole_a, "Dipole A: x,y,z")
        ->required();
    resonance_sub
        ->add_option("--dipole-b", resonance.dipole_b, "Dipole B: x,y,z")
        ->required();
    resonance_sub->add_option("--r-vec", resonance.r_vec, "Separation: x,y,z")
        ->required();
    resonance_sub->add_option("--parity", resonance.parity,
                              "symmetric or antisymmetric");
    attach_common(resonance_sub, resonance.common);

    AcceleratedOpts accelerated;
    auto* accelerated_sub = app.add_subcommand(
        "accelerated", "Uniformly accelerated pair (scalar CP or resonance)");
    accelerated_sub
        ->add_option("--a", accelerated.a, "Proper acceleration (natural)")
        ->required();
    accelerated_sub->add_option("--z", accelerated.z, "Separation along z")
        ->required();
    accelerated_sub->add_flag("--scalar", accelerated.scalar,
                              "Scalar-field interaction regimes");
    accelerated_sub->add_option("--lambda", accelerated.lambda,
                                "Scalar coupling");
    accelerated_sub->add_option("--omega0", accelerated.omega0,
                                "Scalar transition frequency");
    accelerated_sub->add_option("--k0", accelerated.k0,
                                "Transition wavenumber (EM mode)");
    accelerated_sub->add_option("--dipole-a", accelerated.dipole_a,
                                "Dipole A: x,y,z (EM mode)");
    accelerated_sub->add_option("--dipole-b", accelerated.dipole_b,
                                "Dipole B: x,y,z (EM mode)");
    accelerated_sub->add_option("--parity", accelerated.parity,
                                "symmetric or antisymmetric");
    attach_common(accelerated_sub, accelerated.common);

    ScanOpts scan;
    auto* scan_sub = app.add_subcommand(
        "scan", "Sweep a computation over a distance grid");
    scan_sub
        ->add_option("--computation", scan.computation,
                     "two-body | three-body-equilateral | atom-wall | "
                     "energy-density")
        ->required();
    scan_sub->add_option("--start", scan.start, "Grid start")->required();
    scan_sub->add_option("--stop", scan.stop, "Grid stop")->required();
    scan_sub->add_option("--points", scan.points, "Grid points (>= 2)")
        ->required();
    scan_sub->add_option("--spacing", scan.spacing, "linear or log");
    scan_sub->add_option("--atom-a", scan.atom_a, "Atom A (JSON)");
    scan_sub->add_option("--atom-b", scan.atom_b, "Atom B (JSON)");
    scan_sub->add_option("--atom-c", scan.atom_c, "Atom C (JSON)");
    scan_sub->add_option("--alpha", scan.alpha,
                         "Static polarizability (atom-wall)");
    scan_sub->add_option("--field", scan.field,
                         "electric or magnetic (energy-density)");
    attach_common(scan_sub, scan.common);

    CrossoverOpts crossover;
    auto* crossover_sub = app.add_subcommand(
        "crossover",
        "Find the separation where retardation departs from the London form");
    crossover_sub
        ->add_option("--atom-a", crossover.atom_a, "Atom A (JSON)")
        ->required();
    crossover_sub
        ->add_option("--atom-b", crossover.atom_b, "Atom B (JSON)")
        ->required();
    crossover_sub->add_option("--threshold", crossover.threshold,
                              "Relative deviation threshold");
    crossover_sub->add_option("--r-min", crossover.r_min, "Bracket start");
    crossover_sub->add_option("--r-max", crossover.r_max, "Bracket end");
    attach_common(crossover_sub, crossover.common);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        if (two_sub->parsed()) return handle_two_body(two, out);
        if (three_sub->parsed()) return handle_three_body(three, out);
        if (wall_sub->parsed()) return handle_atom_wall(wall, out);
        if (plate_sub->parsed()) return handle_pair_near_plate(plate, out);
        if (density_sub->parsed()) return handle_energy_density(density, out);
        if (correlation_sub->parsed())
            return handle_correlation(correlation, out);
        if (resonance_sub->parsed()) return handle_resonance(resonance, out);
        if (accelerated_sub->parsed())
            return handle_accelerated(accelerated, out);
        if (scan_sub->parsed()) return handle_scan(scan, out);
        if (crossover_sub->parsed()) return handle_crossover(crossover, out);
        err << app.help();
        return 2;
    } catch (const DomainError& e) {
        err << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const PoleError& e) {
        err << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace polder
