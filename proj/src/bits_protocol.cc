#include "bitslab/bits_protocol.h"

#include <algorithm>
#include <cmath>
#include <limits>

namespace bitslab {

int compute_bit(const HiddenValueTable& table) {
    int product = 1;
    for (const auto label : kStepOneLabels) product *= table.value(label);
    return product == 1 ? 0 : 1;
}

int context_implied_bit(ContextChoice context) { return context == ContextChoice::XXYY ? 1 : 0; }

namespace {

std::string describe_values(const HiddenValueTable& table) {
    std::string out;
    for (const auto label : kStepOneLabels) {
        if (!out.empty()) out += ' ';
        out += std::string(label_name(label)) + "=" + (table.value(label) > 0 ? "+1" : "-1");
    }
    return out;
}

std::string describe_pair(const EigenPair& pair) {
    auto sign = [](int v) { return v > 0 ? std::string("+1") : std::string("-1"); };
    return "(" + sign(pair.first) + "," + sign(pair.second) + ")";
}

}  // namespace

ProtocolTranscript run_protocol(const TwoQubitState& state, ContextChoice context, RandomStream& rng) {
    ProtocolTranscript t;
    t.state = state;
    t.context = context;
    t.seed = rng.seed();

    t.table = sample_contextual_table(state, context, rng);
    t.events.push_back({1, "read_hidden_values", describe_values(t.table)});

    t.bit = compute_bit(t.table);
    t.events.push_back({2, "compute_bit", "b=" + std::to_string(t.bit)});

    const auto basis = context_basis(context);
    t.events.push_back({3, "choose_context", std::string(context_name(context))});

    const auto wanted = t.table.joint_values();
    t.outcome_index = basis.index_of(wanted);
    t.outcome = basis.labels[t.outcome_index];
    t.outcome_probability = born_probabilities(state, basis)[t.outcome_index];
    t.consistent = t.outcome == wanted && t.outcome_probability > 0.0;
    t.events.push_back({3, "measure",
                        basis.observable_names[0] + "," + basis.observable_names[1] + "=" + describe_pair(t.outcome)});
    return t;
}

std::optional<double> SweepReport::match_fraction() const {
    if (runs == 0) return std::nullopt;
    return static_cast<double>(bit_matches) / static_cast<double>(runs);
}

std::optional<double> SweepReport::consistency_fraction() const {
    if (runs == 0) return std::nullopt;
    return static_cast<double>(consistent_runs) / static_cast<double>(runs);
}

double SweepReport::max_born_z() const {
    double z = 0.0;
    for (const auto& s : statistics) z = std::max({z, s.protocol_max_z, s.direct_max_z});
    return z;
}

double binomial_z(std::size_t count, std::size_t trials, double p) {
    const double n = static_cast<double>(trials);
    const double f = static_cast<double>(count) / n;
    const double sd = std::sqrt(p * (1.0 - p) / n);
    const double dev = std::abs(f - p);
    if (sd < 1e-15) return dev < 1e-12 ? 0.0 : std::numeric_limits<double>::infinity();
    return dev / sd;
}

namespace {

double max_z(const std::array<std::size_t, 4>& counts, std::size_t trials, const std::array<double, 4>& p) {
    double z = 0.0;
    for (std::size_t k = 0; k < 4; ++k) z = std::max(z, binomial_z(counts[k], trials, p[k]));
    return z;
}

}  // namespace

SweepReport sweep(const std::vector<TwoQubitState>& states, std::size_t trials_per_state, RandomStream& rng) {
    if (trials_per_state == 0) throw std::invalid_argument("trials_per_state must be at least 1");
    SweepReport report;
    report.states = states.size();
    report.trials_per_state = trials_per_state;
    const auto base = rng.seed();

    for (std::size_t si = 0; si < states.size(); ++si) {
        for (const auto context : {ContextChoice::XXYY, ContextChoice::XYYX}) {
            ContextStatistics stats;
            stats.state_index = si;
            stats.context = context;
            stats.trials = trials_per_state;
            const auto basis = context_basis(context);
            stats.born = born_probabilities(states[si], basis);
            const auto context_seed =
                RandomStream::derive_seed(RandomStream::derive_seed(base, si), static_cast<std::uint64_t>(context));

            for (std::size_t trial = 0; trial < trials_per_state; ++trial) {
                const auto run_seed = RandomStream::derive_seed(context_seed, trial);
                RandomStream run_rng(run_seed);
                const auto transcript = run_protocol(states[si], context, run_rng);
                ++report.runs;
                if (transcript.bit == context_implied_bit(context)) ++report.bit_matches;
                if (transcript.consistent) ++report.consistent_runs;
                ++stats.protocol_counts[transcript.outcome_index];

                RandomStream direct_rng(RandomStream::derive_seed(run_seed, 0xd1ec7));
                ++stats.direct_counts[measure_in_basis(states[si], basis, direct_rng).index];
            }
            stats.protocol_max_z = max_z(stats.protocol_counts, trials_per_state, stats.born);
            stats.direct_max_z = max_z(stats.direct_counts, trials_per_state, stats.born);
            report.statistics.push_back(stats);
        }
    }
    return report;
}

PreassignmentCheck check_no_preassignment() {
    PreassignmentCheck out;
    constexpr std::array<PMLabel, 7> kFree = {PMLabel::X1,   PMLabel::X2,   PMLabel::Y1,  PMLabel::Y2,
                                              PMLabel::Z1Z2, PMLabel::X1X2, PMLabel::Y1Y2};
    for (std::uint32_t bits = 0; bits < (1U << kFree.size()); ++bits) {
        Assignment a;
        for (std::size_t k = 0; k < kFree.size(); ++k) a.set(kFree[k], (bits >> k) & 1U ? -1 : 1);
        a.set(PMLabel::X1Y2, a[PMLabel::X1] * a[PMLabel::Y2]);
        a.set(PMLabel::Y1X2, a[PMLabel::Y1] * a[PMLabel::X2]);
        ++out.candidates;

        const bool xxyy_factorizes = a[PMLabel::X1X2] == a[PMLabel::X1] * a[PMLabel::X2] &&
                                     a[PMLabel::Y1Y2] == a[PMLabel::Y1] * a[PMLabel::Y2];
        const bool xxyy = xxyy_factorizes && line_satisfied(context_line(ContextChoice::XXYY), a);
        const bool xyyx = line_satisfied(context_line(ContextChoice::XYYX), a);
        if (xxyy) ++out.valid_for_xxyy;
        if (xyyx) ++out.valid_for_xyyx;
        if (xxyy && xyyx) ++out.valid_for_both;
    }
    return out;
}

}  // namespace bitslab
