#include "bitslab/hidden_variables.h"

#include <cctype>

namespace bitslab {

std::string_view context_name(ContextChoice context) {
    return context == ContextChoice::XXYY ? "XXYY" : "XYYX";
}

std::optional<ContextChoice> parse_context(std::string_view name) {
    std::string upper(name);
    for (auto& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (upper == "XXYY") return ContextChoice::XXYY;
    if (upper == "XYYX") return ContextChoice::XYYX;
    return std::nullopt;
}

ContextChoice other_context(ContextChoice context) {
    return context == ContextChoice::XXYY ? ContextChoice::XYYX : ContextChoice::XXYY;
}

std::array<PMLabel, 2> context_labels(ContextChoice context) {
    if (context == ContextChoice::XXYY) return {PMLabel::X1X2, PMLabel::Y1Y2};
    return {PMLabel::X1Y2, PMLabel::Y1X2};
}

std::array<std::array<PMLabel, 2>, 2> context_factors(ContextChoice context) {
    if (context == ContextChoice::XXYY) return {{{PMLabel::X1, PMLabel::X2}, {PMLabel::Y1, PMLabel::Y2}}};
    return {{{PMLabel::X1, PMLabel::Y2}, {PMLabel::Y1, PMLabel::X2}}};
}

const Line& context_line(ContextChoice context) {
    return square_lines()[line_index(context == ContextChoice::XXYY ? "col3" : "row3")];
}

OrthonormalBasis4 context_basis(ContextChoice context) {
    return context == ContextChoice::XXYY ? bell_basis_xxyy() : bell_basis_xyyx();
}

std::string_view provenance_name(Provenance provenance) {
    switch (provenance) {
        case Provenance::sampled:
            return "sampled";
        case Provenance::derived:
            return "derived";
        case Provenance::free_bit:
            return "free-bit";
    }
    return "?";
}

const HiddenValue& HiddenValueTable::entry(PMLabel label) const {
    const auto& slot = entries_[index_of(label)];
    if (!slot) throw MissingLabelError("hidden value for " + std::string(label_name(label)) + " is absent");
    return *slot;
}

void HiddenValueTable::set(PMLabel label, int value, Provenance provenance) {
    if (value != 1 && value != -1) throw std::invalid_argument("hidden values must be ±1");
    entries_[index_of(label)] = HiddenValue{value, provenance};
}

EigenPair HiddenValueTable::joint_values() const {
    const auto labels = context_labels(context_);
    return {value(labels[0]), value(labels[1])};
}

HiddenValueTable sample_contextual_table(const TwoQubitState& state, ContextChoice context, RandomStream& rng) {
    const auto joint = measure_in_basis(state, context_basis(context), rng).labels;
    const auto labels = context_labels(context);
    const auto factors = context_factors(context);

    HiddenValueTable table(context, rng.seed());
    table.set(labels[0], joint.first, Provenance::sampled);
    table.set(labels[1], joint.second, Provenance::sampled);
    table.set(PMLabel::Z1Z2, context_line(context).target_parity * joint.first * joint.second,
              Provenance::derived);

    // Two free bits: the first factor of each joint observable; the second
    // factor is then forced by factorization.
    const auto bits = rng.uniform_index(4);
    const int s = (bits & 1U) ? -1 : 1;
    const int t = (bits & 2U) ? -1 : 1;
    table.set(factors[0][0], s, Provenance::free_bit);
    table.set(factors[0][1], s * joint.first, Provenance::free_bit);
    table.set(factors[1][0], t, Provenance::free_bit);
    table.set(factors[1][1], t * joint.second, Provenance::free_bit);
    return table;
}

bool check_factorization(const HiddenValueTable& table) {
    const auto labels = context_labels(table.context());
    const auto factors = context_factors(table.context());
    for (std::size_t i = 0; i < 2; ++i) {
        if (table.value(labels[i]) != table.value(factors[i][0]) * table.value(factors[i][1])) return false;
    }
    return true;
}

bool check_line_parity(const HiddenValueTable& table) {
    const auto& line = context_line(table.context());
    int product = 1;
    for (const auto label : line.members) product *= table.value(label);
    return product == line.target_parity;
}

StrictCompletion strict_completion(const HiddenValueTable& table) {
    StrictCompletion out;
    for (const auto label : kAllLabels)
        if (table.has(label)) out.assignment.set(label, table.value(label));
    const auto other = other_context(table.context());
    const auto labels = context_labels(other);
    const auto factors = context_factors(other);
    for (std::size_t i = 0; i < 2; ++i) {
        out.assignment.set(labels[i], table.value(factors[i][0]) * table.value(factors[i][1]));
    }
    for (const auto& line : square_lines())
        if (!line_satisfied(line, out.assignment)) out.violated_lines.push_back(line.name);
    return out;
}

NoncontextualFailure attempt_noncontextual_table(RandomStream& rng) {
    const auto square = build_square();
    const auto search = exhaustive_assignment_search(square);

    NoncontextualFailure out;
    out.seed = rng.seed();
    out.all_six_satisfiable = search.all_six_satisfiable > 0;
    out.max_satisfied = search.max_satisfied;
    out.max_achievers = search.max_achievers;

    const auto pick = rng.uniform_index(search.max_achievers);
    std::size_t seen = 0;
    for (std::uint32_t bits = 0; bits < (1U << kNumLabels); ++bits) {
        const auto candidate = Assignment::from_bits(bits);
        if (count_satisfied(square, candidate) != search.max_satisfied) continue;
        if (seen++ == pick) {
            out.witness = candidate;
            break;
        }
    }
    out.witness_rescore = count_satisfied(square, out.witness);
    for (const auto& line : square.lines)
        if (!line_satisfied(line, out.witness)) out.violated_lines.push_back(line.name);
    out.reason =
        "parity obstruction: every value appears in exactly one row and one column, so the product of all six "
        "line products is +1 while the product of the six targets is -1; at most " +
        std::to_string(search.max_satisfied) + " of 6 lines can hold";
    return out;
}

}  // namespace bitslab
