#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "seqforge/seqcore.hpp"

namespace seqforge {

/// GF(2^m) presented as GF(2)[x] / (p(x)). Bit k of `polynomial` is the coefficient of x^k;
/// bit m must be set.
struct BinaryFieldSpec {
    int m = 0;
    std::uint32_t polynomial = 0;

    friend bool operator==(const BinaryFieldSpec&, const BinaryFieldSpec&) = default;
};

/// Built-in primitive polynomial for 2 <= m <= 16 (x^6 + x + 1 for m = 6).
BinaryFieldSpec default_field(int m);

/// Parses a coefficient string, highest degree first: "1000011" is x^6 + x + 1.
BinaryFieldSpec parse_field_polynomial(const std::string& bits);
std::string format_field_polynomial(const BinaryFieldSpec& field);

/// Product of two field elements reduced by the field polynomial.
std::uint32_t gf2m_multiply(std::uint32_t a, std::uint32_t b, const BinaryFieldSpec& field);

/// Multiplicative order of x modulo the polynomial; 0 if x is not invertible.
std::uint64_t order_of_x(const BinaryFieldSpec& field);

/// True when the polynomial has degree m and x has order 2^m - 1.
bool is_primitive(const BinaryFieldSpec& field);

/// s(i) = Tr(alpha^i) for alpha a root of the primitive polynomial; length 2^m - 1.
BinarySequence m_sequence(const BinaryFieldSpec& field);

/// R_s(tau) = -1 for every 1 <= tau < n. Requires odd length.
bool is_ideal(const BinarySequence& s);

enum class PairFamily { legendre, twin_prime, gmw, fixture };

std::string to_string(PairFamily family);
PairFamily parse_pair_family(const std::string& tag);

/// Two equal-length odd binary sequences with their provenance.
struct SequencePair {
    BinarySequence first;
    BinarySequence second;
    PairFamily family = PairFamily::fixture;
    /// Family parameters and the resolved convention, e.g. "p=7;zero=0,1".
    std::string params;
    /// For loaded pairs: the family tag written in the file header.
    std::string origin;

    std::size_t length() const { return first.size(); }
};

/// First member supported on the quadratic residues mod p, second on the non-residues.
/// The values at index 0 are searched in the order (0,0), (0,1), (1,0), (1,1) until every
/// tuple of the Legendre theorem yields the -2 / 0 spectrum; the choice lands in `params`.
SequencePair legendre_pair(std::int64_t p);

/// Twin-prime sequence of length p(p+2) and its companion. The default convention is the
/// classical Jacobi-symbol sequence (0 at 0 and at multiples of p+2, 1 at other multiples of p),
/// with the companion complemented at every multiple of p+2. Other variants are tried only if
/// the default fails the spectrum check; ConventionError names every variant tried.
SequencePair twin_prime_pair(std::int64_t p);

/// m-sequence over GF(2^{2k}) and its companion, complemented at every index divisible by 2^k+1.
/// Throws ConventionError carrying the failing shifts if the spectrum check fails.
SequencePair gmw_pair(int k, const BinaryFieldSpec& field);
SequencePair gmw_pair(int k);

/// Thrown for malformed fixture text. `line()` is 1-based.
class ParseError : public DomainError {
public:
    ParseError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Three-line fixture text: "n=<len> family=<tag> params=<...>", then both members.
std::string format_pair(const SequencePair& pair);
SequencePair parse_pair(const std::string& text);

SequencePair load_pair(const std::filesystem::path& path);
void save_pair(const SequencePair& pair, const std::filesystem::path& path);

}  // namespace seqforge
