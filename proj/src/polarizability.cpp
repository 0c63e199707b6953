/**
 * polarizability.cpp - Discrete-transition polarizability models and the
 *                      JSON atom-description parser.
 */

#include "polder/polarizability.hpp"

#include <cmath>
#include <utility>

#include "json.hpp"

namespace polder {

// ============================================================================
// PolarizabilityModel
// ============================================================================

PolarizabilityModel PolarizabilityModel::from_transitions(
    std::vector<Transition> transitions) {
    if (transitions.empty()) {
        throw DomainError(
            "PolarizabilityModel: transition list must not be empty");
    }
    for (const Transition& t : transitions) {
        if (!(t.k > 0.0) || !std::isfinite(t.k)) {
            throw DomainError(
                "PolarizabilityModel: transition wavenumber must be > 0");
        }
        if (t.mu2 < 0.0 || !std::isfinite(t.mu2)) {
            throw DomainError(
                "PolarizabilityModel: squared dipole element must be >= 0");
        }
    }
    PolarizabilityModel m;
    m.transitions_ = std::move(transitions);
    return m;
}

PolarizabilityModel PolarizabilityModel::from_static(double alpha_static) {
    if (!std::isfinite(alpha_static)) {
        throw DomainError("PolarizabilityModel: static value must be finite");
    }
    PolarizabilityModel m;
    m.static_override_ = alpha_static;
    return m;
}

double PolarizabilityModel::alpha_imag(double u) const {
    if (u < 0.0 || !std::isfinite(u)) {
        throw DomainError("alpha_imag: u must be >= 0");
    }
    if (static_override_) return *static_override_;
    double sum = 0.0;
    for (const Transition& t : transitions_) {
        sum += t.k * t.mu2 / (t.k * t.k + u * u);
    }
    return (2.0 / 3.0) * sum;
}

double PolarizabilityModel::alpha_real(double k) const {
    if (!std::isfinite(k)) throw DomainError("alpha_real: k must be finite");
    if (static_override_) return *static_override_;
    double sum = 0.0;
    for (const Transition& t : transitions_) {
        if (std::abs(std::abs(k) - t.k) <= 1e-6 * t.k) {
            throw PoleError(
                "alpha_real: wavenumber inside the pole-exclusion width of a "
                "transition");
        }
        sum += t.k * t.mu2 / (t.k * t.k - k * k);
    }
    return (2.0 / 3.0) * sum;
}

double PolarizabilityModel::alpha_static() const {
    if (static_override_) return *static_override_;
    double sum = 0.0;
    for (const Transition& t : transitions_) sum += t.mu2 / t.k;
    return (2.0 / 3.0) * sum;
}

double PolarizabilityModel::max_transition_wavenumber() const {
    double k_max = 0.0;
    for (const Transition& t : transitions_) k_max = std::fmax(k_max, t.k);
    return k_max;
}

double alpha_excited_two_level(const TwoLevelAtom& atom, double u) {
    if (u < 0.0 || !std::isfinite(u)) {
        throw DomainError("alpha_excited_two_level: u must be >= 0");
    }
    if (!(atom.k0 > 0.0)) {
        throw DomainError("alpha_excited_two_level: k0 must be > 0");
    }
    // Same arithmetic shape as the ground-state single-transition sum, so
    // the energy flip k0 -> -k0 is an exact negation numerically.
    const double mu2 = atom.dipole.dot(atom.dipole);
    const double sum = atom.k0 * mu2 / (atom.k0 * atom.k0 + u * u);
    return -((2.0 / 3.0) * sum);
}

// ============================================================================
// JSON atom descriptions
// ============================================================================

namespace {

using nlohmann::json;

double require_number(const json& j, const std::string& path) {
    if (!j.is_number()) {
        throw DomainError("atom JSON: " + path + " must be a number");
    }
    return j.get<double>();
}

}  // namespace

AtomDescription atom_from_json_text(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("atom JSON: parse error: ") + e.what());
    }
    if (!j.is_object()) {
        throw DomainError("atom JSON: top level must be an object");
    }

    AtomDescription atom;
    if (j.contains("name")) {
        if (!j["name"].is_string()) {
            throw DomainError("atom JSON: name must be a string");
        }
        atom.name = j["name"].get<std::string>();
    }

    if (j.contains("kind")) {
        if (!j["kind"].is_string()) {
            throw DomainError(
                "atom JSON: kind must be \"electric\" or \"magnetic\"");
        }
        const std::string kind = j["kind"].get<std::string>();
        if (kind == "electric") {
            atom.kind = FieldKind::Electric;
        } else if (kind == "magnetic") {
            atom.kind = FieldKind::Magnetic;
        } else {
            throw DomainError(
                "atom JSON: kind must be \"electric\" or \"magnetic\", got \"" +
                kind + "\"");
        }
    }

    const bool has_transitions =
        j.contains("transitions") && !j["transitions"].empty();
    const bool has_static = j.contains("static");
    if (has_transitions && has_static) {
        throw DomainError(
            "atom JSON: give either transitions or static, not both");
    }
    if (!has_transitions && !has_static) {
        throw DomainError(
            "atom JSON: one of transitions (non-empty) or static is required");
    }

    if (has_transitions) {
        if (!j["transitions"].is_array()) {
            throw DomainError("atom JSON: transitions must be an array");
        }
        std::vector<Transition> transitions;
        for (size_t i = 0; i < j["transitions"].size(); ++i) {
            const json& t = j["transitions"][i];
            const std::string path = "transitions[" + std::to_string(i) + "]";
            if (!t.is_object()) {
                throw DomainError("atom JSON: " + path + " must be an object");
            }
            if (!t.contains("k") || !t.contains("mu2")) {
                throw DomainError("atom JSON: " + path +
                                  " requires fields k and mu2");
            }
            transitions.push_back(Transition{
                require_number(t["k"], path + ".k"),
                require_number(t["mu2"], path + ".mu2"),
            });
        }
        try {
            atom.model = PolarizabilityModel::from_transitions(
                std::move(transitions));
        } catch (const DomainError& e) {
            throw DomainError(std::string("atom JSON: transitions: ") +
                              e.what());
        }
    } else {
        atom.model = PolarizabilityModel::from_static(
            require_number(j["static"], "static"));
    }
    return atom;
}

std::string atom_to_json_text(const AtomDescription& atom) {
    json j;
    j["name"] = atom.name;
    j["kind"] = field_kind_name(atom.kind);
    if (atom.model.has_transitions()) {
        json list = json::array();
        for (const Transition& t : atom.model.transitions()) {
            list.push_back(json{{"k", t.k}, {"mu2", t.mu2}});
        }
        j["transitions"] = list;
    } else {
        j["static"] = *atom.model.static_override();
    }
    return j.dump();  // nlohmann object keys are sorted: canonical
}

const char* field_kind_name(FieldKind kind) {
    return kind == FieldKind::Electric ? "electric" : "magnetic";
}

}  // namespace polder
