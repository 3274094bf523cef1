#include "bitslab/peres_mermin.h"

#include <gtest/gtest.h>

#include <functional>

using namespace bitslab;

namespace {

// Independent oracle: the square's lines written out by grid index, scored
// by a recursive enumeration that shares nothing with the library search.
struct OracleResult {
    int all_six = 0;
    int max_satisfied = 0;
    int total = 0;
};

OracleResult oracle_search() {
    const int lines[6][3] = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {0, 3, 6}, {1, 4, 7}, {2, 5, 8}};
    const int targets[6] = {1, 1, 1, 1, 1, -1};
    OracleResult r;
    int v[9];
    std::function<void(int)> rec = [&](int depth) {
        if (depth == 9) {
            int ok = 0;
            for (int l = 0; l < 6; ++l) ok += v[lines[l][0]] * v[lines[l][1]] * v[lines[l][2]] == targets[l];
            ++r.total;
            r.all_six += ok == 6;
            r.max_satisfied = std::max(r.max_satisfied, ok);
            return;
        }
        for (int s : {1, -1}) {
            v[depth] = s;
            rec(depth + 1);
        }
    };
    rec(0);
    return r;
}

}  // namespace

TEST(peres_mermin, labels_form_grid) {
    EXPECT_EQ(position(PMLabel::X1), (GridPos{1, 1}));
    EXPECT_EQ(position(PMLabel::Y1Y2), (GridPos{2, 3}));
    EXPECT_EQ(position(PMLabel::Z1Z2), (GridPos{3, 3}));
    for (const auto label : kAllLabels) EXPECT_EQ(label_at(position(label)), label);
    EXPECT_EQ(parse_label("Y1X2"), PMLabel::Y1X2);
    EXPECT_FALSE(parse_label("Z1").has_value());
    EXPECT_THROW(label_at({4, 1}), std::out_of_range);
}

TEST(peres_mermin, build_square_entries) {
    const auto sq = build_square();
    EXPECT_EQ(sq.at(label_at({3, 3})), pauli(Particle::first, Axis::z) * pauli(Particle::second, Axis::z));
    EXPECT_EQ(sq.at(label_at({1, 1})), pauli(Particle::first, Axis::x));
    EXPECT_EQ(sq.at(label_at({2, 1})), pauli(Particle::second, Axis::y));
    for (const auto& op : sq.entries) {
        EXPECT_TRUE(op.is_hermitian());
        EXPECT_TRUE(op.has_unit_entries());
        EXPECT_EQ(op * op, Operator4::identity());
    }
}

TEST(peres_mermin, lines_and_targets) {
    const auto& lines = square_lines();
    for (const auto& line : lines) EXPECT_EQ(line.target_parity, line.name == "col3" ? -1 : 1);
    EXPECT_EQ(lines[line_index("col3")].members[2], PMLabel::Z1Z2);
    EXPECT_EQ(lines[line_index("row2")].members[0], PMLabel::Y2);
}

TEST(peres_mermin, row1_product_is_identity_by_multiplication) {
    const auto x1 = pauli(Particle::first, Axis::x);
    const auto x2 = pauli(Particle::second, Axis::x);
    EXPECT_EQ(x1 * x2 * (x1 * x2), Operator4::identity());
}

TEST(peres_mermin, verify_structure_passes_exactly) {
    const auto report = verify_structure(build_square());
    EXPECT_TRUE(report.passed());
    int commuting_pairs = 0;
    for (const auto& line : report.lines) {
        for (const bool c : line.pair_commutes) commuting_pairs += c;
        EXPECT_EQ(line.product_sign, line.name == "col3" ? -1 : 1) << line.name;
    }
    EXPECT_EQ(commuting_pairs, 18);
}

TEST(peres_mermin, tampered_square_fails_structure) {
    auto sq = build_square();
    sq.at(PMLabel::X1X2) = -sq.at(PMLabel::X1X2);
    const auto report = verify_structure(sq);
    EXPECT_FALSE(report.passed());
    EXPECT_FALSE(report.lines[line_index("row1")].passed());
    EXPECT_FALSE(report.lines[line_index("col3")].passed());
    EXPECT_TRUE(report.lines[line_index("row2")].passed());
}

TEST(peres_mermin, exhaustive_search_matches_oracle) {
    const auto oracle = oracle_search();
    ASSERT_EQ(oracle.total, 512);
    ASSERT_EQ(oracle.all_six, 0);
    ASSERT_EQ(oracle.max_satisfied, 5);

    const auto sq = build_square();
    const auto report = exhaustive_assignment_search(sq);
    EXPECT_EQ(report.assignments_checked, 512u);
    EXPECT_EQ(report.all_six_satisfiable, 0u);
    EXPECT_EQ(report.max_satisfied, 5);
    EXPECT_EQ(count_satisfied(sq, report.witness), 5);
    EXPECT_TRUE(report.parity_obstruction_holds);
    std::size_t total = 0;
    for (const auto n : report.histogram) total += n;
    EXPECT_EQ(total, 512u);
    EXPECT_EQ(report.histogram[6], 0u);
    EXPECT_EQ(report.histogram[5], report.max_achievers);
}

TEST(peres_mermin, all_plus_fails_only_column_three) {
    const auto sq = build_square();
    const Assignment all_plus;
    EXPECT_EQ(count_satisfied(sq, all_plus), 5);
    for (const auto& line : sq.lines) EXPECT_EQ(line_satisfied(line, all_plus), line.name != "col3");
}

TEST(peres_mermin, parity_obstruction_every_assignment) {
    const auto sq = build_square();
    for (std::uint32_t bits = 0; bits < 512; ++bits) {
        const auto a = Assignment::from_bits(bits);
        int mismatch = 1;
        for (const auto& line : sq.lines) mismatch *= line_product(line, a) * line.target_parity;
        ASSERT_EQ(mismatch, -1) << bits;
        ASSERT_LE(count_satisfied(sq, a), 5);
    }
}

TEST(peres_mermin, assignment_rejects_non_sign) {
    Assignment a;
    EXPECT_THROW(a.set(PMLabel::X1, 0), std::invalid_argument);
}
