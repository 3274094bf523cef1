#ifndef BITSLAB_BITS_PROTOCOL_H
#define BITSLAB_BITS_PROTOCOL_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bitslab/hidden_variables.h"
#include "bitslab/quantum_core.h"

namespace bitslab {

/// Step 2: product of the five step-1 hidden values; +1 gives 0, -1 gives 1.
int compute_bit(const HiddenValueTable& table);

/// The bit the context choice forces: 1 for XXYY, 0 for XYYX.
int context_implied_bit(ContextChoice context);

struct ProtocolEvent {
    int step;
    std::string name;
    std::string detail;
};

struct ProtocolTranscript {
    TwoQubitState state;
    HiddenValueTable table{ContextChoice::XXYY, 0};
    int bit = 0;
    ContextChoice context = ContextChoice::XXYY;
    std::size_t outcome_index = 0;
    EigenPair outcome;
    double outcome_probability = 0.0;
    /// Measured eigenvalues equal the table's sampled joint values and the
    /// outcome has nonzero Born probability.
    bool consistent = false;
    std::uint64_t seed = 0;
    std::vector<ProtocolEvent> events;
};

/// One run: read hidden values, compute the bit, then measure the context.
///
/// The measurement reproduces the table's joint values; the Born rule was
/// already applied when the table was sampled.
ProtocolTranscript run_protocol(const TwoQubitState& state, ContextChoice context, RandomStream& rng);

/// Per (state, context) statistics gathered by `sweep`.
struct ContextStatistics {
    std::size_t state_index = 0;
    ContextChoice context = ContextChoice::XXYY;
    std::size_t trials = 0;
    std::array<double, 4> born{};
    /// Outcome counts from the protocol (table-defined outcomes).
    std::array<std::size_t, 4> protocol_counts{};
    /// Outcome counts from independent measure_in_basis draws.
    std::array<std::size_t, 4> direct_counts{};
    /// max_k |f_k - p_k| / sqrt(p_k (1 - p_k) / N); infinite if an outcome
    /// with p_k in {0, 1} deviates at all.
    double protocol_max_z = 0.0;
    double direct_max_z = 0.0;
};

struct SweepReport {
    std::size_t states = 0;
    std::size_t trials_per_state = 0;
    std::size_t runs = 0;
    std::size_t bit_matches = 0;
    std::size_t consistent_runs = 0;
    std::vector<ContextStatistics> statistics;

    /// Empty when no runs were made.
    std::optional<double> match_fraction() const;
    std::optional<double> consistency_fraction() const;
    double max_born_z() const;
};

/// Binomial z-score of an observed count against probability p.
double binomial_z(std::size_t count, std::size_t trials, double p);

/// Runs the protocol for both contexts, `trials_per_state` times each, over
/// every state. Each run uses a substream seeded from (rng seed, state,
/// context, trial), so results do not depend on evaluation order.
SweepReport sweep(const std::vector<TwoQubitState>& states, std::size_t trials_per_state, RandomStream& rng);

/// Exhausts the 2^7 value combinations of X1, X2, Y1, Y2, Z1Z2, X1X2, Y1Y2
/// (X1Y2 and Y1X2 pinned by factorization) and counts tables valid for both
/// contexts at once. The count is always 0.
struct PreassignmentCheck {
    std::size_t candidates = 0;
    std::size_t valid_for_both = 0;
    std::size_t valid_for_xxyy = 0;
    std::size_t valid_for_xyyx = 0;
};

PreassignmentCheck check_no_preassignment();

}  // namespace bitslab

#endif
