#ifndef TOUPIE_CLASSIFY_HPP
#define TOUPIE_CLASSIFY_HPP

#include "toupie/ideal.hpp"
#include "toupie/quiver.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace toupie {

enum class ClassLabel {
    Hereditary,
    TiltedNotHereditary,
    QuasitiltedNotTilted,
    WeaklyShodNotQuasitilted,
    LauraNotWeaklyShod,
    NotLaura,
    LinearTilted,     // single-branch quiver, exactly one minimal zero relation
    LinearNotTilted,  // single-branch quiver, otherwise
};

std::string label_string(ClassLabel label);

// Order used by the truncation-monotonicity checks:
// hereditary < tilted < quasitilted < weakly shod < laura < not laura.
// The single-branch labels rank as tilted resp. weakly shod.
int hierarchy_rank(ClassLabel label);

struct WitnessSpecInfo {
    std::string family;
    std::vector<std::pair<std::string, std::string>> params;  // ordered
};

struct Evidence {
    int t = 0;
    int m = 0;
    std::vector<int> lengths;
    bool simply_connected = false;
    std::vector<std::pair<int, int>> linkage_edges;
    std::vector<int> branches_in_ideal;
    std::vector<int> relations_per_branch;  // per branch 1..t
    std::optional<CanonicalParameters> canonical;
    int long_branch_count = 0;  // branches of length >= 3
    std::string fired_case;
    std::vector<std::string> warnings;
    std::vector<WitnessSpecInfo> witnesses;
};

struct Classification {
    ClassLabel label = ClassLabel::Hereditary;
    Evidence evidence;
};

// The decision procedure. Throws FieldError when the decision needs the
// minimal-relation catalog over a prime field, CapacityError past the
// branch cap.
Classification classify(const ToupiePresentation& p);

// Canonical JSON for the classification evidence (schema 1, stable key
// order, canonical scalar strings).
std::string evidence_json(const Classification& c);

// Same fields without label / fired case / witnesses, for the invariants
// command.
std::string invariants_json(const Evidence& e);

struct VerificationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<VerificationCheck> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    std::string to_string() const;
};

// Runs the witness checks appropriate to the fired case: witness-family
// contracts (relations, pd/id bounds, pairwise non-isomorphism), the tau
// identities of the tilted cases, and the source/sink vanishing property on
// seeded random modules for the m = 0 cases.
VerificationReport verify(const ToupiePresentation& p, const Classification& c,
                          std::uint64_t seed = 0);

}  // namespace toupie

#endif
