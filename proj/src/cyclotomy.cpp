#include "seqforge/cyclotomy.hpp"

#include <algorithm>
#include <set>
#include <span>
#include <sstream>

#include "seqforge/numtheory.hpp"

namespace seqforge {

namespace {

// c + a*x + b*y
struct Linear {
    int c, a, b;
    std::int64_t at(std::int64_t x, std::int64_t y) const { return c + a * x + b * y; }
};

using TableRow = std::array<Linear, 4>;

struct PairRow {
    int i, j;
    TableRow by_class;
};

// Off-phase correlation of s_i against s_j (i <= j) by the class of the shift, f odd.
constexpr PairRow kOddRows[] = {
    {1, 1, {{{-1, 0, -2}, {-1, 0, 2}, {-1, 0, -2}, {-1, 0, 2}}}},
    {2, 2, {{{-3, 0, 0}, {1, 0, 0}, {-3, 0, 0}, {1, 0, 0}}}},
    {3, 3, {{{-1, 0, 2}, {-1, 0, -2}, {-1, 0, 2}, {-1, 0, -2}}}},
    {4, 4, {{{-1, 0, 2}, {-1, 0, -2}, {-1, 0, 2}, {-1, 0, -2}}}},
    {5, 5, {{{1, 0, 0}, {-3, 0, 0}, {1, 0, 0}, {-3, 0, 0}}}},
    {6, 6, {{{-1, 0, -2}, {-1, 0, 2}, {-1, 0, -2}, {-1, 0, 2}}}},
    {1, 2, {{{0, -1, 2}, {2, 1, 2}, {-2, 1, -2}, {0, -1, -2}}}},
    {1, 3, {{{0, 1, 0}, {2, -1, 0}, {0, 1, 0}, {-2, -1, 0}}}},
    {1, 4, {{{2, -1, 0}, {0, 1, 0}, {-2, -1, 0}, {0, 1, 0}}}},
    {1, 5, {{{2, 1, -2}, {0, -1, -2}, {0, -1, 2}, {-2, 1, 2}}}},
    {1, 6, {{{3, 0, 2}, {3, 0, -2}, {-1, 0, 2}, {-1, 0, -2}}}},
    {2, 3, {{{-2, 1, 2}, {2, 1, -2}, {0, -1, -2}, {0, -1, 2}}}},
    {2, 4, {{{0, -1, -2}, {0, -1, 2}, {-2, 1, 2}, {2, 1, -2}}}},
    {2, 5, {{{1, 0, 0}, {1, 0, 0}, {1, 0, 0}, {1, 0, 0}}}},
    {2, 6, {{{0, -1, 2}, {2, 1, 2}, {-2, 1, -2}, {0, -1, -2}}}},
    {3, 4, {{{3, 0, -2}, {-1, 0, 2}, {-1, 0, -2}, {3, 0, 2}}}},
    {3, 5, {{{2, 1, 2}, {-2, 1, -2}, {0, -1, -2}, {0, -1, 2}}}},
    {3, 6, {{{2, -1, 0}, {0, 1, 0}, {-2, -1, 0}, {0, 1, 0}}}},
    {4, 5, {{{0, -1, -2}, {0, -1, 2}, {2, 1, 2}, {-2, 1, -2}}}},
    {4, 6, {{{0, 1, 0}, {2, -1, 0}, {0, 1, 0}, {-2, -1, 0}}}},
    {5, 6, {{{2, 1, -2}, {0, -1, -2}, {0, -1, 2}, {-2, 1, 2}}}},
};

// Same, f even.
constexpr PairRow kEvenRows[] = {
    {1, 1, {{{-3, 0, 2}, {-3, 0, -2}, {1, 0, 2}, {1, 0, -2}}}},
    {2, 2, {{{-3, 0, 0}, {1, 0, 0}, {-3, 0, 0}, {1, 0, 0}}}},
    {3, 3, {{{-3, 0, -2}, {1, 0, 2}, {1, 0, -2}, {-3, 0, 2}}}},
    {4, 4, {{{1, 0, -2}, {-3, 0, 2}, {-3, 0, -2}, {1, 0, 2}}}},
    {5, 5, {{{1, 0, 0}, {-3, 0, 0}, {1, 0, 0}, {-3, 0, 0}}}},
    {6, 6, {{{1, 0, 2}, {1, 0, -2}, {-3, 0, 2}, {-3, 0, -2}}}},
    {1, 2, {{{-2, -1, 2}, {0, 1, 2}, {0, 1, -2}, {2, -1, -2}}}},
    {1, 3, {{{-2, -1, 0}, {0, 1, 0}, {2, -1, 0}, {0, 1, 0}}}},
    {1, 4, {{{0, 1, 0}, {-2, -1, 0}, {0, 1, 0}, {2, -1, 0}}}},
    {1, 5, {{{0, 1, -2}, {-2, -1, -2}, {2, -1, 2}, {0, 1, 2}}}},
    {1, 6, {{{1, 0, -2}, {1, 0, 2}, {1, 0, -2}, {1, 0, 2}}}},
    {2, 3, {{{-2, -1, -2}, {2, -1, 2}, {0, 1, 2}, {0, 1, -2}}}},
    {2, 4, {{{0, 1, 2}, {0, 1, -2}, {-2, -1, -2}, {2, -1, 2}}}},
    {2, 5, {{{1, 0, 0}, {1, 0, 0}, {1, 0, 0}, {1, 0, 0}}}},
    {2, 6, {{{0, 1, -2}, {2, -1, -2}, {-2, -1, 2}, {0, 1, 2}}}},
    {3, 4, {{{1, 0, 2}, {1, 0, -2}, {1, 0, 2}, {1, 0, -2}}}},
    {3, 5, {{{0, 1, 2}, {0, 1, -2}, {2, -1, -2}, {-2, -1, 2}}}},
    {3, 6, {{{0, 1, 0}, {2, -1, 0}, {0, 1, 0}, {-2, -1, 0}}}},
    {4, 5, {{{2, -1, -2}, {-2, -1, 2}, {0, 1, 2}, {0, 1, -2}}}},
    {4, 6, {{{2, -1, 0}, {0, 1, 0}, {-2, -1, 0}, {0, 1, 0}}}},
    {5, 6, {{{2, -1, 2}, {0, 1, 2}, {0, 1, -2}, {-2, -1, -2}}}},
};

const TableRow& table_row(bool f_odd, int i, int j) {
    for (const auto& row : f_odd ? std::span<const PairRow>(kOddRows) : std::span<const PairRow>(kEvenRows)) {
        if (row.i == i && row.j == j) return row.by_class;
    }
    throw DomainError("no correlation table row for (" + std::to_string(i) + ", " + std::to_string(j) + ")");
}

void require_sequence_index(int i) {
    if (i < 1 || i > 6) {
        throw DomainError("sequence index " + std::to_string(i) + " outside 1..6");
    }
}

std::int64_t exact_sixteenth(std::int64_t numerator, char letter) {
    if (numerator % 16 != 0 || numerator < 0) {
        throw InvariantViolation(std::string("cyclotomic number ") + letter + " = " +
                                 std::to_string(numerator) + "/16 is not a nonnegative integer");
    }
    return numerator / 16;
}

// Recovers (x, y) from the counted (0,2) and (0,1) entries.
std::pair<std::int64_t, std::int64_t> recover_xy(std::int64_t n, bool f_odd,
                                                 const CyclotomicNumberTable& t) {
    std::int64_t x_num, x_den, y_num;
    if (f_odd) {
        // (0,2) = (n + 1 - 6x)/16, (0,1) = (n + 1 + 2x - 8y)/16
        x_num = n + 1 - 16 * t(0, 2);
        x_den = 6;
    } else {
        // (0,2) = (n - 3 + 2x)/16, (0,1) = (n - 3 + 2x + 8y)/16
        x_num = 16 * t(0, 2) - n + 3;
        x_den = 2;
    }
    if (x_num % x_den != 0) {
        throw InvariantViolation("cannot recover x from cyclotomic number (0,2)");
    }
    const auto x = x_num / x_den;
    y_num = f_odd ? n + 1 + 2 * x - 16 * t(0, 1) : 16 * t(0, 1) - n + 3 - 2 * x;
    if (y_num % 8 != 0) {
        throw InvariantViolation("cannot recover y from cyclotomic number (0,1)");
    }
    const auto y = y_num / 8;
    if (x * x + 4 * y * y != n) {
        throw InvariantViolation("recovered (x, y) = (" + std::to_string(x) + ", " + std::to_string(y) +
                                 ") does not satisfy n = x^2 + 4y^2");
    }
    return {x, y};
}

}  // namespace

int QuarticSystem::class_of(std::int64_t v) const {
    return class_index[static_cast<std::size_t>(nt::mod(v, n))];
}

std::int64_t find_generator(std::int64_t n) {
    if (n < 3 || !nt::is_prime(n)) {
        throw DomainError("find_generator: " + std::to_string(n) + " is not an odd prime");
    }
    for (std::int64_t g = 2; g < n; ++g) {
        if (nt::is_primitive_root(g, n)) return g;
    }
    throw InvariantViolation("no generator found for prime " + std::to_string(n));
}

CyclotomicNumberTable count_cyclotomic_numbers(const std::vector<int>& class_index) {
    const auto n = class_index.size();
    CyclotomicNumberTable table;
    for (std::size_t v = 1; v < n; ++v) {
        const auto next = (v + 1) % n;
        if (next == 0) continue;
        ++table.entries[class_index[v]][class_index[next]];
    }
    return table;
}

QuarticSystem build_system(std::int64_t n, std::int64_t generator) {
    if (n < 5 || !nt::is_prime(n)) {
        throw DomainError("build_system: " + std::to_string(n) + " is not a prime >= 5");
    }
    if (n % 4 != 1) {
        throw DomainError("build_system: " + std::to_string(n) + " is not 1 mod 4");
    }
    if (!nt::is_primitive_root(generator, n)) {
        throw DomainError("build_system: " + std::to_string(generator) + " does not generate Z_" +
                          std::to_string(n) + "^*");
    }
    QuarticSystem s;
    s.n = n;
    s.f = (n - 1) / 4;
    s.generator = generator;
    s.class_index.assign(static_cast<std::size_t>(n), -1);
    std::int64_t power = 1;
    for (std::int64_t e = 0; e < n - 1; ++e) {
        s.class_index[static_cast<std::size_t>(power)] = static_cast<int>(e % 4);
        s.classes[e % 4].push_back(power);
        power = power * generator % n;
    }
    for (auto& c : s.classes) std::sort(c.begin(), c.end());
    s.counted = count_cyclotomic_numbers(s.class_index);
    std::tie(s.x, s.y) = recover_xy(n, s.f_odd(), s.counted);
    return s;
}

CyclotomicNumberTable cyclotomic_numbers_closed_form(const QuarticSystem& s) {
    const auto n = s.n, x = s.x, y = s.y;
    CyclotomicNumberTable t;
    if (s.f_odd()) {
        const auto A = exact_sixteenth(n - 7 + 2 * x, 'A');
        const auto B = exact_sixteenth(n + 1 + 2 * x - 8 * y, 'B');
        const auto C = exact_sixteenth(n + 1 - 6 * x, 'C');
        const auto D = exact_sixteenth(n + 1 + 2 * x + 8 * y, 'D');
        const auto E = exact_sixteenth(n - 3 - 2 * x, 'E');
        t.entries = {{{A, B, C, D}, {E, E, D, B}, {A, E, A, E}, {E, D, B, E}}};
    } else {
        const auto A = exact_sixteenth(n - 11 - 6 * x, 'A');
        const auto B = exact_sixteenth(n - 3 + 2 * x + 8 * y, 'B');
        const auto C = exact_sixteenth(n - 3 + 2 * x, 'C');
        const auto D = exact_sixteenth(n - 3 + 2 * x - 8 * y, 'D');
        const auto E = exact_sixteenth(n + 1 - 2 * x, 'E');
        t.entries = {{{A, B, C, D}, {B, D, E, E}, {C, E, C, E}, {D, E, E, B}}};
    }
    return t;
}

QuarticSystem select_system_for_convention(std::int64_t n, SignTarget target) {
    if (n < 5 || !nt::is_prime(n) || n % 4 != 1) {
        throw DomainError("select_system_for_convention: " + std::to_string(n) +
                          " is not a prime congruent to 1 mod 4");
    }
    const bool f_odd = ((n - 1) / 4) % 2 != 0;
    if (target == SignTarget::y_minus_one && !f_odd) {
        throw DomainError("target y = -1 requires f odd, but n = " + std::to_string(n) + " has f even");
    }
    if (target == SignTarget::x_plus_minus_one && f_odd) {
        throw DomainError("target x = +-1 requires f even, but n = " + std::to_string(n) + " has f odd");
    }
    std::set<std::pair<std::int64_t, std::int64_t>> reachable;
    for (std::int64_t g = 2; g < n; ++g) {
        if (!nt::is_primitive_root(g, n)) continue;
        auto system = build_system(n, g);
        const bool hit = target == SignTarget::y_minus_one ? system.y == -1
                                                           : (system.x == 1 || system.x == -1);
        if (hit) return system;
        reachable.emplace(system.x, system.y);
    }
    std::ostringstream msg;
    msg << "convention unreachable for n = " << n << " (wanted "
        << (target == SignTarget::y_minus_one ? "y = -1" : "x = +-1") << "); reachable (x, y):";
    for (const auto& [x, y] : reachable) msg << " (" << x << ", " << y << ")";
    throw ConventionError(msg.str());
}

std::pair<int, int> support_classes(int index) {
    static constexpr std::pair<int, int> kSupports[6] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    require_sequence_index(index);
    return kSupports[index - 1];
}

std::array<BinarySequence, 6> six_sequences(const QuarticSystem& system) {
    std::array<BinarySequence, 6> out;
    for (int k = 1; k <= 6; ++k) {
        const auto [c0, c1] = support_classes(k);
        std::vector<std::uint8_t> bits(static_cast<std::size_t>(system.n), 0);
        for (std::size_t v = 1; v < bits.size(); ++v) {
            const int c = system.class_index[v];
            bits[v] = (c == c0 || c == c1) ? 1 : 0;
        }
        out[k - 1] = BinarySequence(std::move(bits));
    }
    return out;
}

std::int64_t delta(const QuarticSystem& system, int i, int j, std::int64_t tau) {
    require_sequence_index(i);
    require_sequence_index(j);
    if (nt::mod(tau, system.n) == 0) {
        throw DomainError("delta: shift must be nonzero mod n");
    }
    const int k = system.class_of(tau);
    const auto [i0, i1] = support_classes(i);
    const auto [j0, j1] = support_classes(j);
    auto sign = [](int cls, int a, int b) { return (cls == a || cls == b) ? 1 : -1; };
    // Summing over t in C_a with t + tau in C_b: t = tau * w, w in C_{a-k}, w + 1 in C_{b-k}.
    const auto numbers = cyclotomic_numbers_closed_form(system);
    std::int64_t total = 0;
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            total += sign(a, i0, i1) * sign(b, j0, j1) * numbers(a - k + 4, b - k + 4);
        }
    }
    return total;
}

std::int64_t predicted_correlation(const QuarticSystem& system, int i, int j, std::int64_t tau) {
    require_sequence_index(i);
    require_sequence_index(j);
    const auto t = nt::mod(tau, system.n);
    if (t == 0) {
        if (i == j) return system.n;
        if (i + j == 7) return 2 - system.n;
        return 1;
    }
    int k = system.class_of(t);
    if (i > j) {
        std::swap(i, j);
        if (system.f_odd()) k = (k + 2) % 4;
    }
    return table_row(system.f_odd(), i, j)[k].at(system.x, system.y);
}

}  // namespace seqforge
