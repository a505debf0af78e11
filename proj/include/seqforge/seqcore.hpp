#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace seqforge {

/// Thrown for inputs outside an operation's domain (bad lengths, shifts, alphabets).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Thrown when no convention variant satisfies a required property: an unreachable (x, y)
/// sign target, or a sequence pair whose spectrum check fails under every variant tried.
class ConventionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when an internal arithmetic invariant is violated. Never caused by user input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Exact complex integer.
struct GaussianInt {
    std::int64_t re = 0;
    std::int64_t im = 0;

    constexpr std::int64_t norm() const { return re * re + im * im; }
    constexpr GaussianInt conj() const { return {re, -im}; }

    constexpr GaussianInt& operator+=(const GaussianInt& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    friend constexpr GaussianInt operator+(GaussianInt a, const GaussianInt& b) { return a += b; }
    friend constexpr GaussianInt operator-(const GaussianInt& a, const GaussianInt& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend constexpr GaussianInt operator*(const GaussianInt& a, const GaussianInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend constexpr bool operator==(const GaussianInt&, const GaussianInt&) = default;
};

std::ostream& operator<<(std::ostream& os, const GaussianInt& g);
std::string to_string(const GaussianInt& g);

/// Finite periodic sequence over Z_H. Immutable value type.
template <int H>
class Sequence {
    static_assert(H == 2 || H == 4, "only binary and quaternary alphabets are supported");

public:
    static constexpr int alphabet = H;

    Sequence() = default;
    explicit Sequence(std::vector<std::uint8_t> symbols);
    Sequence(std::initializer_list<int> symbols);

    std::size_t size() const { return symbols_.size(); }
    int operator[](std::size_t i) const { return symbols_[i]; }
    /// Element at i reduced mod the length; negative indices wrap.
    int at_periodic(std::int64_t i) const;
    const std::vector<std::uint8_t>& symbols() const { return symbols_; }

    friend bool operator==(const Sequence&, const Sequence&) = default;

private:
    std::vector<std::uint8_t> symbols_;
};

using BinarySequence = Sequence<2>;
using QuaternarySequence = Sequence<4>;

extern template class Sequence<2>;
extern template class Sequence<4>;

/// Autocorrelation (or cross-correlation) values indexed by shift 0..N-1.
struct CorrelationSpectrum {
    std::vector<GaussianInt> values;

    std::size_t length() const { return values.size(); }
    const GaussianInt& operator[](std::size_t tau) const { return values[tau]; }
};

/// R_{s,t}(tau) = sum_i xi^{s(i) - t(i+tau)}, xi the primitive H-th root of unity.
template <int H>
GaussianInt cross_correlation(const Sequence<H>& s, const Sequence<H>& t, std::size_t tau);

/// Cross-correlation at an arbitrary integer shift, reduced mod the length.
template <int H>
GaussianInt cross_correlation_mod(const Sequence<H>& s, const Sequence<H>& t, std::int64_t tau);

template <int H>
CorrelationSpectrum auto_spectrum(const Sequence<H>& s);

template <int H>
CorrelationSpectrum cross_spectrum(const Sequence<H>& s, const Sequence<H>& t);

/// Largest squared magnitude over the out-of-phase shifts 1..N-1.
std::int64_t r_max_squared(const CorrelationSpectrum& spectrum);

struct OptimalityReport {
    bool optimal = false;
    std::int64_t r_max_squared = 0;
    CorrelationSpectrum spectrum;
};

/// Optimal means the out-of-phase maximum |R|^2 is exactly 4. Odd lengths are rejected.
OptimalityReport is_optimal_even_length(const QuaternarySequence& u);

template <int H>
Sequence<H> shift(const Sequence<H>& s, std::int64_t tau);

BinarySequence complement(const BinarySequence& s);
/// Complements s when flag is 1, otherwise returns it unchanged.
BinarySequence add_constant(const BinarySequence& s, int flag);

BinarySequence from_support(std::size_t n, const std::set<std::size_t>& support);
std::set<std::size_t> support(const BinarySequence& s);
std::size_t weight(const BinarySequence& s);

/// Parses "0,1,2,3" or "[0, 1, 2, 3]" into raw symbols. Throws DomainError on malformed text.
std::vector<std::uint8_t> parse_symbols(std::string_view text);

template <int H>
Sequence<H> parse_sequence(std::string_view text) {
    return Sequence<H>(parse_symbols(text));
}

/// Comma-separated symbols without brackets or spaces.
template <int H>
std::string format_sequence(const Sequence<H>& s);

}  // namespace seqforge
