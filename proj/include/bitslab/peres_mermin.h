#ifndef BITSLAB_PERES_MERMIN_H
#define BITSLAB_PERES_MERMIN_H

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bitslab/quantum_core.h"

namespace bitslab {

/// The nine observables of the Peres-Mermin square, in row-major order:
///
///     X1    X2    X1X2
///     Y2    Y1    Y1Y2
///     X1Y2  Y1X2  Z1Z2
enum class PMLabel : std::uint8_t { X1, X2, X1X2, Y2, Y1, Y1Y2, X1Y2, Y1X2, Z1Z2 };

inline constexpr std::size_t kNumLabels = 9;
inline constexpr std::size_t kNumLines = 6;

inline constexpr std::array<PMLabel, kNumLabels> kAllLabels = {
    PMLabel::X1, PMLabel::X2, PMLabel::X1X2, PMLabel::Y2, PMLabel::Y1,
    PMLabel::Y1Y2, PMLabel::X1Y2, PMLabel::Y1X2, PMLabel::Z1Z2};

constexpr std::size_t index_of(PMLabel label) { return static_cast<std::size_t>(label); }

struct GridPos {
    int row;  // 1-based
    int col;  // 1-based
    bool operator==(const GridPos&) const = default;
};

constexpr GridPos position(PMLabel label) {
    const auto i = static_cast<int>(label);
    return {i / 3 + 1, i % 3 + 1};
}

PMLabel label_at(GridPos pos);
std::string_view label_name(PMLabel label);
std::optional<PMLabel> parse_label(std::string_view name);

/// A row or column of the square with its required product.
struct Line {
    std::string name;  // "row1".."row3", "col1".."col3"
    std::array<PMLabel, 3> members;
    int target_parity;
};

/// Rows first, then columns. Only col3 has target parity -1.
const std::array<Line, kNumLines>& square_lines();
std::size_t line_index(std::string_view name);

struct PMSquare {
    std::array<Operator4, kNumLabels> entries;
    std::array<Line, kNumLines> lines;

    const Operator4& at(PMLabel label) const { return entries[index_of(label)]; }
    Operator4& at(PMLabel label) { return entries[index_of(label)]; }
};

PMSquare build_square();

struct LineCheck {
    std::string name;
    std::array<bool, 3> pair_commutes{};  // (0,1), (0,2), (1,2)
    int product_sign = 0;                 // +1 for +I, -1 for -I, 0 otherwise
    int target_parity = 1;

    bool all_commute() const { return pair_commutes[0] && pair_commutes[1] && pair_commutes[2]; }
    bool passed() const { return all_commute() && product_sign == target_parity; }
};

struct StructureReport {
    std::array<LineCheck, kNumLines> lines;
    bool all_hermitian = false;
    bool all_square_to_identity = false;
    bool all_unit_entries = false;
    std::vector<std::string> failures;

    bool passed() const { return failures.empty(); }
};

/// Exact check of commutation and line products (left-to-right order).
StructureReport verify_structure(const PMSquare& square);

/// Total ±1 assignment to the nine labels.
class Assignment {
   public:
    Assignment() { values_.fill(1); }

    /// Bit k set means label k gets -1.
    static Assignment from_bits(std::uint32_t bits);

    int operator[](PMLabel label) const { return values_[index_of(label)]; }
    void set(PMLabel label, int value);
    const std::array<int, kNumLabels>& values() const { return values_; }
    bool operator==(const Assignment&) const = default;

   private:
    std::array<int, kNumLabels> values_;
};

int line_product(const Line& line, const Assignment& assignment);
bool line_satisfied(const Line& line, const Assignment& assignment);
int count_satisfied(const PMSquare& square, const Assignment& assignment);

struct NoGoReport {
    std::size_t assignments_checked = 0;
    std::size_t all_six_satisfiable = 0;
    int max_satisfied = 0;
    std::size_t max_achievers = 0;
    Assignment witness;
    /// histogram[k] = number of assignments satisfying exactly k lines.
    std::array<std::size_t, kNumLines + 1> histogram{};
    /// Product over lines of (achieved / target) was -1 for every assignment.
    bool parity_obstruction_holds = false;
};

/// Plain loop over all 2^9 assignments.
NoGoReport exhaustive_assignment_search(const PMSquare& square);

}  // namespace bitslab

#endif
