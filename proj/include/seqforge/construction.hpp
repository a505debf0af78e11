#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seqforge/seqcore.hpp"

namespace seqforge {

/// Complement flags (e0, e1, e2) applied to the second column of c and to both columns of d.
struct ETriple {
    int e0 = 0;
    int e1 = 0;
    int e2 = 0;

    int parity() const { return (e0 + e1 + e2) & 1; }
    friend bool operator==(const ETriple&, const ETriple&) = default;
};

std::string to_string(const ETriple& e);
/// Parses "0,0,1" or "001".
ETriple parse_e_triple(const std::string& text);
/// The four triples with the given parity, in ascending binary order.
std::vector<ETriple> e_triples_with_parity(int parity);
std::array<ETriple, 8> all_e_triples();

/// Four binary sequences of a common odd length n and the complement flags.
class ConstructionInput {
public:
    ConstructionInput(std::array<BinarySequence, 4> a, ETriple e);
    ConstructionInput(BinarySequence a0, BinarySequence a1, BinarySequence a2, BinarySequence a3, ETriple e);

    const BinarySequence& a(int i) const { return a_[static_cast<std::size_t>(i)]; }
    const ETriple& e() const { return e_; }
    std::size_t n() const { return a_[0].size(); }
    /// (n + 1) / 2; the shift applied to a1 and a3 before interleaving.
    std::int64_t lambda() const { return static_cast<std::int64_t>((n() + 1) / 2); }

private:
    std::array<BinarySequence, 4> a_;
    ETriple e_;
};

/// c = I(a0, e0 + L^lambda(a1)),  d = I(e1 + a2, e2 + L^lambda(a3)).
std::pair<BinarySequence, BinarySequence> build_components(const ConstructionInput& input);

/// Inverse-Gray fusion of the two components; length 2n.
QuaternarySequence construct(const ConstructionInput& input);

/// R_u(tau) from the correlations of a0..a3 alone, without building u.
GaussianInt predicted_autocorrelation(const ConstructionInput& input, std::size_t tau);

struct Corollary1Verdict {
    bool holds = true;
    /// 1..4 when a condition fails, 0 otherwise.
    int failed_condition = 0;
    std::int64_t witness_shift = 0;
    std::int64_t witness_value = 0;
};

/// Sufficient conditions for R_max(u) = 2, evaluated on the column sequences. Conditions 1-2
/// range over 1 <= t < n, conditions 3-4 over 0 <= t < n. Reports the first failure.
Corollary1Verdict corollary1_check(const ConstructionInput& input);

/// Expected off-phase autocorrelation of a constructed sequence.
struct SpectrumPattern {
    enum class Kind {
        ideal,    ///< -2 at even shifts, 0 at odd shifts
        modulus,  ///< at even tau = 2t: -2 if t = 0 mod M, +2 otherwise; 0 at odd shifts
        pm2,      ///< +-2 at every out-of-phase shift
    };

    Kind kind = Kind::ideal;
    std::optional<std::int64_t> modulus;

    static SpectrumPattern ideal() { return {Kind::ideal, std::nullopt}; }
    static SpectrumPattern with_modulus(std::int64_t m);
    static SpectrumPattern plus_minus_two() { return {Kind::pm2, std::nullopt}; }
};

std::string to_string(const SpectrumPattern& pattern);

struct PatternMismatch {
    std::size_t tau = 0;
    GaussianInt actual;
    std::string expected;
};

struct PatternVerdict {
    bool matches = true;
    std::int64_t r_max_squared = 0;
    std::vector<PatternMismatch> mismatches;
};

/// Compares every out-of-phase value of the measured autocorrelation against the pattern.
PatternVerdict verify_pattern(const QuaternarySequence& u, const SpectrumPattern& pattern);
PatternVerdict verify_pattern(const CorrelationSpectrum& spectrum, const SpectrumPattern& pattern);

}  // namespace seqforge
