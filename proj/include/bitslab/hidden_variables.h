#ifndef BITSLAB_HIDDEN_VARIABLES_H
#define BITSLAB_HIDDEN_VARIABLES_H

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bitslab/peres_mermin.h"
#include "bitslab/quantum_core.h"

namespace bitslab {

class MissingLabelError : public std::out_of_range {
   public:
    using std::out_of_range::out_of_range;
};

/// Which commuting pair Alice eventually measures.
///   XXYY: sigma_1x sigma_2x and sigma_1y sigma_2y (column 3 of the square)
///   XYYX: sigma_1x sigma_2y and sigma_1y sigma_2x (row 3 of the square)
enum class ContextChoice : std::uint8_t { XXYY, XYYX };

std::string_view context_name(ContextChoice context);
std::optional<ContextChoice> parse_context(std::string_view name);  // case-insensitive
ContextChoice other_context(ContextChoice context);

/// The two joint observables measured in the context.
std::array<PMLabel, 2> context_labels(ContextChoice context);
/// Single-spin factors of each joint observable: {{X1, X2}, {Y1, Y2}} for XXYY.
std::array<std::array<PMLabel, 2>, 2> context_factors(ContextChoice context);
/// The square line holding both context observables and Z1Z2.
const Line& context_line(ContextChoice context);
OrthonormalBasis4 context_basis(ContextChoice context);

/// The five labels read in step 1 of the protocol.
inline constexpr std::array<PMLabel, 5> kStepOneLabels = {PMLabel::X1, PMLabel::X2, PMLabel::Y1, PMLabel::Y2,
                                                         PMLabel::Z1Z2};

enum class Provenance : std::uint8_t { sampled, derived, free_bit };
std::string_view provenance_name(Provenance provenance);

struct HiddenValue {
    int value = 1;
    Provenance provenance = Provenance::free_bit;
    bool operator==(const HiddenValue&) const = default;
};

/// Partial map from square labels to hidden ±1 values.
class HiddenValueTable {
   public:
    HiddenValueTable(ContextChoice context, std::uint64_t seed) : context_(context), seed_(seed) {}

    ContextChoice context() const { return context_; }
    std::uint64_t seed() const { return seed_; }

    bool has(PMLabel label) const { return entries_[index_of(label)].has_value(); }
    /// Throws MissingLabelError if absent.
    const HiddenValue& entry(PMLabel label) const;
    int value(PMLabel label) const { return entry(label).value; }
    void set(PMLabel label, int value, Provenance provenance);
    void erase(PMLabel label) { entries_[index_of(label)].reset(); }

    /// The context's two joint values (m1, m2).
    EigenPair joint_values() const;

    bool operator==(const HiddenValueTable&) const = default;

   private:
    ContextChoice context_;
    std::uint64_t seed_;
    std::array<std::optional<HiddenValue>, kNumLabels> entries_{};
};

/// Ontology oracle: draws the context's joint values from the Born rule,
/// derives Z1Z2 from the containing line's parity, then picks the four
/// single-spin values uniformly among the completions that factorize.
///
/// Off-context joint observables are left absent.
HiddenValueTable sample_contextual_table(const TwoQubitState& state, ContextChoice context, RandomStream& rng);

/// value(AB) == value(A) * value(B) for both joint observables of the table's
/// context. Throws MissingLabelError if a needed label is absent.
bool check_factorization(const HiddenValueTable& table);

/// Product of the context line's three values equals its target parity.
bool check_line_parity(const HiddenValueTable& table);

/// Result of filling the off-context joint observables by factorization.
/// Some line of the square is always violated afterwards.
struct StrictCompletion {
    Assignment assignment;
    std::vector<std::string> violated_lines;
};

StrictCompletion strict_completion(const HiddenValueTable& table);

struct NoncontextualFailure {
    bool all_six_satisfiable = false;
    int max_satisfied = 0;
    std::size_t max_achievers = 0;
    Assignment witness;
    int witness_rescore = 0;
    std::vector<std::string> violated_lines;
    std::string reason;
    std::uint64_t seed = 0;
};

/// Tries to build a non-contextual total assignment. Always fails; the
/// witness is drawn with `rng` from the assignments achieving the maximum.
NoncontextualFailure attempt_noncontextual_table(RandomStream& rng);

}  // namespace bitslab

#endif
