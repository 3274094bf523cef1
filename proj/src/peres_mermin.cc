#include "bitslab/peres_mermin.h"

#include <stdexcept>

namespace bitslab {

namespace {

constexpr std::array<std::string_view, kNumLabels> kLabelNames = {"X1",   "X2",   "X1X2", "Y2",  "Y1",
                                                                  "Y1Y2", "X1Y2", "Y1X2", "Z1Z2"};

Operator4 sx1() { return pauli(Particle::first, Axis::x); }
Operator4 sy1() { return pauli(Particle::first, Axis::y); }
Operator4 sz1() { return pauli(Particle::first, Axis::z); }
Operator4 sx2() { return pauli(Particle::second, Axis::x); }
Operator4 sy2() { return pauli(Particle::second, Axis::y); }
Operator4 sz2() { return pauli(Particle::second, Axis::z); }

}  // namespace

PMLabel label_at(GridPos pos) {
    if (pos.row < 1 || pos.row > 3 || pos.col < 1 || pos.col > 3) {
        throw std::out_of_range("grid position out of range");
    }
    return static_cast<PMLabel>((pos.row - 1) * 3 + (pos.col - 1));
}

std::string_view label_name(PMLabel label) { return kLabelNames[index_of(label)]; }

std::optional<PMLabel> parse_label(std::string_view name) {
    for (std::size_t i = 0; i < kNumLabels; ++i)
        if (kLabelNames[i] == name) return static_cast<PMLabel>(i);
    return std::nullopt;
}

const std::array<Line, kNumLines>& square_lines() {
    static const std::array<Line, kNumLines> lines = [] {
        std::array<Line, kNumLines> out;
        for (int r = 1; r <= 3; ++r) {
            out[r - 1] = Line{"row" + std::to_string(r),
                              {label_at({r, 1}), label_at({r, 2}), label_at({r, 3})},
                              +1};
        }
        for (int c = 1; c <= 3; ++c) {
            out[2 + c] = Line{"col" + std::to_string(c),
                              {label_at({1, c}), label_at({2, c}), label_at({3, c})},
                              c == 3 ? -1 : +1};
        }
        return out;
    }();
    return lines;
}

std::size_t line_index(std::string_view name) {
    const auto& lines = square_lines();
    for (std::size_t i = 0; i < kNumLines; ++i)
        if (lines[i].name == name) return i;
    throw std::out_of_range("unknown line name");
}

PMSquare build_square() {
    PMSquare sq;
    sq.at(PMLabel::X1) = sx1();
    sq.at(PMLabel::X2) = sx2();
    sq.at(PMLabel::X1X2) = sx1() * sx2();
    sq.at(PMLabel::Y2) = sy2();
    sq.at(PMLabel::Y1) = sy1();
    sq.at(PMLabel::Y1Y2) = sy1() * sy2();
    sq.at(PMLabel::X1Y2) = sx1() * sy2();
    sq.at(PMLabel::Y1X2) = sy1() * sx2();
    sq.at(PMLabel::Z1Z2) = sz1() * sz2();
    sq.lines = square_lines();
    return sq;
}

StructureReport verify_structure(const PMSquare& square) {
    StructureReport report;
    report.all_hermitian = true;
    report.all_square_to_identity = true;
    report.all_unit_entries = true;
    for (const auto label : kAllLabels) {
        const auto& op = square.at(label);
        const std::string name(label_name(label));
        if (!op.is_hermitian()) {
            report.all_hermitian = false;
            report.failures.push_back(name + ": not Hermitian");
        }
        if (op * op != Operator4::identity()) {
            report.all_square_to_identity = false;
            report.failures.push_back(name + ": does not square to identity");
        }
        if (!op.has_unit_entries()) {
            report.all_unit_entries = false;
            report.failures.push_back(name + ": entries outside {0, ±1, ±i}");
        }
    }

    for (std::size_t i = 0; i < kNumLines; ++i) {
        const auto& line = square.lines[i];
        const auto& a = square.at(line.members[0]);
        const auto& b = square.at(line.members[1]);
        const auto& c = square.at(line.members[2]);
        LineCheck& check = report.lines[i];
        check.name = line.name;
        check.target_parity = line.target_parity;
        check.pair_commutes = {commutes(a, b), commutes(a, c), commutes(b, c)};
        check.product_sign = (a * b * c).identity_sign();
        if (!check.all_commute()) report.failures.push_back(line.name + ": operators do not commute");
        if (check.product_sign != check.target_parity) {
            report.failures.push_back(line.name + ": product is not " +
                                      (check.target_parity > 0 ? "+I" : "-I"));
        }
    }
    return report;
}

Assignment Assignment::from_bits(std::uint32_t bits) {
    Assignment out;
    for (std::size_t k = 0; k < kNumLabels; ++k) out.values_[k] = (bits >> k) & 1U ? -1 : 1;
    return out;
}

void Assignment::set(PMLabel label, int value) {
    if (value != 1 && value != -1) throw std::invalid_argument("assignment values must be ±1");
    values_[index_of(label)] = value;
}

int line_product(const Line& line, const Assignment& assignment) {
    return assignment[line.members[0]] * assignment[line.members[1]] * assignment[line.members[2]];
}

bool line_satisfied(const Line& line, const Assignment& assignment) {
    return line_product(line, assignment) == line.target_parity;
}

int count_satisfied(const PMSquare& square, const Assignment& assignment) {
    int n = 0;
    for (const auto& line : square.lines) n += line_satisfied(line, assignment) ? 1 : 0;
    return n;
}

NoGoReport exhaustive_assignment_search(const PMSquare& square) {
    NoGoReport report;
    report.parity_obstruction_holds = true;
    report.max_satisfied = -1;
    for (std::uint32_t bits = 0; bits < (1U << kNumLabels); ++bits) {
        const auto assignment = Assignment::from_bits(bits);
        int satisfied = 0;
        int mismatch = 1;
        for (const auto& line : square.lines) {
            const int p = line_product(line, assignment);
            satisfied += p == line.target_parity ? 1 : 0;
            mismatch *= p * line.target_parity;
        }
        ++report.assignments_checked;
        ++report.histogram[static_cast<std::size_t>(satisfied)];
        if (satisfied == static_cast<int>(kNumLines)) ++report.all_six_satisfiable;
        if (mismatch != -1) report.parity_obstruction_holds = false;
        if (satisfied > report.max_satisfied) {
            report.max_satisfied = satisfied;
            report.max_achievers = 0;
            report.witness = assignment;
        }
        if (satisfied == report.max_satisfied) ++report.max_achievers;
    }
    return report;
}

}  // namespace bitslab
