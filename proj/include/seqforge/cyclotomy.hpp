#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "seqforge/seqcore.hpp"

namespace seqforge {

/// Cyclotomic numbers of order 4: entry (i, j) = |(C_i + 1) ∩ C_j|.
struct CyclotomicNumberTable {
    std::array<std::array<std::int64_t, 4>, 4> entries{};

    std::int64_t operator()(int i, int j) const { return entries[i & 3][j & 3]; }
    friend bool operator==(const CyclotomicNumberTable&, const CyclotomicNumberTable&) = default;
};

/// Quartic cyclotomy over Z_n for a prime n = 4f + 1 and a chosen generator.
///
/// C_i = { generator^(4j + i) : 0 <= j < f }. The pair (x, y) with n = x^2 + 4y^2 is recovered
/// from the counted cyclotomic numbers, so its signs follow the generator choice.
struct QuarticSystem {
    std::int64_t n = 0;
    std::int64_t f = 0;
    std::int64_t generator = 0;
    std::int64_t x = 0;
    std::int64_t y = 0;
    /// class_index[v] is the class of v, or -1 for v = 0.
    std::vector<int> class_index;
    std::array<std::vector<std::int64_t>, 4> classes;
    /// Counted directly from the classes.
    CyclotomicNumberTable counted;

    bool f_odd() const { return f % 2 != 0; }
    int class_of(std::int64_t v) const;
};

std::int64_t find_generator(std::int64_t n);

QuarticSystem build_system(std::int64_t n, std::int64_t generator);

/// Counts |(C_i + 1) ∩ C_j| for every (i, j) straight from a class assignment.
CyclotomicNumberTable count_cyclotomic_numbers(const std::vector<int>& class_index);

/// The sixteen cyclotomic numbers from their closed forms in (n, x, y) for the system's f parity.
CyclotomicNumberTable cyclotomic_numbers_closed_form(const QuarticSystem& system);

enum class SignTarget {
    y_minus_one,   ///< f odd and y = -1
    x_plus_minus_one,  ///< f even and x = +-1
};

/// Tries generators in ascending order until the recovered (x, y) meet the target.
/// Throws ConventionError listing the (x, y) pairs that are reachable when none does.
QuarticSystem select_system_for_convention(std::int64_t n, SignTarget target);

/// Support classes of s_1..s_6: C0∪C1, C0∪C2, C0∪C3, C1∪C2, C1∪C3, C2∪C3.
std::pair<int, int> support_classes(int index);

/// s_1..s_6 (array slot k holds s_{k+1}).
std::array<BinarySequence, 6> six_sequences(const QuarticSystem& system);

/// The sixteen-term signed cyclotomic-number sum that counts the agreements minus disagreements
/// of s_i(t) and s_j(t + tau) over t with t != 0 and t + tau != 0. tau must be nonzero.
std::int64_t delta(const QuarticSystem& system, int i, int j, std::int64_t tau);

/// R_{s_i, s_j}(tau) from the closed-form correlation tables.
///
/// Zero shift gives n for i = j, 2 - n for complementary supports (i + j = 7), 1 otherwise.
/// Entries with i > j come from the (j, i) row: with f odd the class of tau is advanced by two,
/// with f even the table is symmetric.
std::int64_t predicted_correlation(const QuarticSystem& system, int i, int j, std::int64_t tau);

}  // namespace seqforge
