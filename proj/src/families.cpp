#include "seqforge/families.hpp"

#include <array>
#include <bit>
#include <fstream>
#include <sstream>

#include "seqforge/construction.hpp"
#include "seqforge/numtheory.hpp"

namespace seqforge {

namespace {

// Primitive polynomials over GF(2), bit k = coefficient of x^k.
constexpr std::uint32_t kPrimitivePolynomials[17] = {
    0,       0,
    0x7,      // x^2 + x + 1
    0xB,      // x^3 + x + 1
    0x13,     // x^4 + x + 1
    0x25,     // x^5 + x^2 + 1
    0x43,     // x^6 + x + 1
    0x83,     // x^7 + x + 1
    0x11D,    // x^8 + x^4 + x^3 + x^2 + 1
    0x211,    // x^9 + x^4 + 1
    0x409,    // x^10 + x^3 + 1
    0x805,    // x^11 + x^2 + 1
    0x1053,   // x^12 + x^6 + x^4 + x + 1
    0x201B,   // x^13 + x^4 + x^3 + x + 1
    0x4443,   // x^14 + x^10 + x^6 + x + 1
    0x8003,   // x^15 + x + 1
    0x1100B,  // x^16 + x^12 + x^3 + x + 1
};

constexpr int kMaxDegree = 16;

void require_field(const BinaryFieldSpec& field) {
    if (field.m < 2 || field.m > kMaxDegree) {
        throw DomainError("field degree " + std::to_string(field.m) + " outside 2.." + std::to_string(kMaxDegree));
    }
    if ((field.polynomial >> field.m) != 1u) {
        throw DomainError("polynomial " + format_field_polynomial(field) + " does not have degree " +
                          std::to_string(field.m));
    }
}

// (s,t,s,t), (s,t,t,s), (t,s,t,s), (t,s,s,t)
constexpr std::array<std::array<int, 4>, 4> kPairTuples = {{{0, 1, 0, 1}, {0, 1, 1, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}}};

// Runs every pair tuple through the construction with e and returns the first failing verdict.
PatternVerdict check_pair_spectrum(const BinarySequence& s, const BinarySequence& t, const ETriple& e,
                                   const SpectrumPattern& pattern) {
    const BinarySequence* members[2] = {&s, &t};
    for (const auto& tuple : kPairTuples) {
        ConstructionInput input(*members[tuple[0]], *members[tuple[1]], *members[tuple[2]], *members[tuple[3]], e);
        auto verdict = verify_pattern(construct(input), pattern);
        if (!verdict.matches) return verdict;
    }
    return {};
}

std::string describe_mismatches(const PatternVerdict& verdict, std::size_t limit = 8) {
    std::ostringstream os;
    os << verdict.mismatches.size() << " mismatching shift(s):";
    for (std::size_t i = 0; i < verdict.mismatches.size() && i < limit; ++i) {
        const auto& m = verdict.mismatches[i];
        os << " tau=" << m.tau << " got " << m.actual << " want " << m.expected << ";";
    }
    return os.str();
}

}  // namespace

BinaryFieldSpec default_field(int m) {
    if (m < 2 || m > kMaxDegree) {
        throw DomainError("no built-in primitive polynomial for degree " + std::to_string(m));
    }
    return {m, kPrimitivePolynomials[m]};
}

BinaryFieldSpec parse_field_polynomial(const std::string& bits) {
    if (bits.empty() || bits.size() > kMaxDegree + 1) {
        throw DomainError("polynomial '" + bits + "' must have 2.." + std::to_string(kMaxDegree + 1) + " coefficients");
    }
    std::uint32_t poly = 0;
    for (char ch : bits) {
        if (ch != '0' && ch != '1') {
            throw DomainError("polynomial '" + bits + "' contains a non-binary coefficient");
        }
        poly = (poly << 1) | static_cast<std::uint32_t>(ch - '0');
    }
    if (poly == 0) throw DomainError("polynomial '" + bits + "' is zero");
    const BinaryFieldSpec field{static_cast<int>(std::bit_width(poly)) - 1, poly};
    require_field(field);
    return field;
}

std::string format_field_polynomial(const BinaryFieldSpec& field) {
    if (field.polynomial == 0) return "0";
    std::string out;
    for (int k = static_cast<int>(std::bit_width(field.polynomial)) - 1; k >= 0; --k) {
        out.push_back((field.polynomial >> k) & 1u ? '1' : '0');
    }
    return out;
}

std::uint32_t gf2m_multiply(std::uint32_t a, std::uint32_t b, const BinaryFieldSpec& field) {
    const std::uint32_t top = 1u << field.m;
    std::uint32_t result = 0;
    while (b) {
        if (b & 1u) result ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top) a ^= field.polynomial;
    }
    return result;
}

std::uint64_t order_of_x(const BinaryFieldSpec& field) {
    require_field(field);
    if ((field.polynomial & 1u) == 0) return 0;  // x divides p(x)
    const std::uint64_t bound = (std::uint64_t{1} << field.m) - 1;
    std::uint32_t power = 2;  // x
    for (std::uint64_t k = 1; k <= bound; ++k) {
        if (power == 1) return k;
        power = gf2m_multiply(power, 2, field);
    }
    return 0;
}

bool is_primitive(const BinaryFieldSpec& field) {
    return order_of_x(field) == (std::uint64_t{1} << field.m) - 1;
}

BinarySequence m_sequence(const BinaryFieldSpec& field) {
    if (!is_primitive(field)) {
        throw DomainError("polynomial " + format_field_polynomial(field) + " is not primitive of degree " +
                          std::to_string(field.m));
    }
    // The trace is GF(2)-linear, so Tr(v) is the parity of v masked by the traces of the basis x^j.
    std::uint32_t trace_mask = 0;
    for (int j = 0; j < field.m; ++j) {
        std::uint32_t conj = 1u << j;
        std::uint32_t sum = 0;
        for (int t = 0; t < field.m; ++t) {
            sum ^= conj;
            conj = gf2m_multiply(conj, conj, field);
        }
        if (sum > 1) throw InvariantViolation("trace of a basis element left GF(2)");
        trace_mask |= sum << j;
    }
    const std::size_t n = (std::size_t{1} << field.m) - 1;
    std::vector<std::uint8_t> out(n);
    std::uint32_t power = 1;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = static_cast<std::uint8_t>(std::popcount(power & trace_mask) & 1);
        power = gf2m_multiply(power, 2, field);
    }
    return BinarySequence(std::move(out));
}

bool is_ideal(const BinarySequence& s) {
    if (s.size() % 2 == 0) {
        throw DomainError("is_ideal: length " + std::to_string(s.size()) + " is even");
    }
    for (std::size_t tau = 1; tau < s.size(); ++tau) {
        if (cross_correlation(s, s, tau).re != -1) return false;
    }
    return true;
}

std::string to_string(PairFamily family) {
    switch (family) {
        case PairFamily::legendre:
            return "legendre";
        case PairFamily::twin_prime:
            return "twin_prime";
        case PairFamily::gmw:
            return "gmw";
        case PairFamily::fixture:
            return "fixture";
    }
    return "fixture";
}

PairFamily parse_pair_family(const std::string& tag) {
    if (tag == "legendre") return PairFamily::legendre;
    if (tag == "twin_prime") return PairFamily::twin_prime;
    if (tag == "gmw") return PairFamily::gmw;
    if (tag == "fixture") return PairFamily::fixture;
    throw DomainError("unknown pair family '" + tag + "'");
}

SequencePair legendre_pair(std::int64_t p) {
    if (p < 3 || !nt::is_prime(p)) {
        throw DomainError("legendre_pair: " + std::to_string(p) + " is not an odd prime");
    }
    std::vector<std::uint8_t> residues(static_cast<std::size_t>(p)), non_residues(residues.size());
    for (std::int64_t i = 1; i < p; ++i) {
        const bool qr = nt::legendre_symbol(i, p) == 1;
        residues[i] = qr ? 1 : 0;
        non_residues[i] = qr ? 0 : 1;
    }
    static constexpr std::array<std::array<std::uint8_t, 2>, 4> kZeroValues = {{{0, 0}, {0, 1}, {1, 0}, {1, 1}}};
    std::string tried;
    for (const auto& zero : kZeroValues) {
        residues[0] = zero[0];
        non_residues[0] = zero[1];
        BinarySequence s(residues), t(non_residues);
        const auto verdict = check_pair_spectrum(s, t, {0, 0, 1}, SpectrumPattern::ideal());
        const std::string label = std::to_string(zero[0]) + "," + std::to_string(zero[1]);
        if (verdict.matches) {
            return {std::move(s), std::move(t), PairFamily::legendre,
                    "p=" + std::to_string(p) + ";zero=" + label, ""};
        }
        tried += " zero=" + label + " (" + describe_mismatches(verdict, 2) + ")";
    }
    throw ConventionError("legendre_pair: pair convention mismatch for p = " + std::to_string(p) + "; tried" + tried);
}

SequencePair twin_prime_pair(std::int64_t p) {
    if (!nt::is_prime(p) || !nt::is_prime(p + 2)) {
        throw DomainError("twin_prime_pair: " + std::to_string(p) + " and " + std::to_string(p + 2) +
                          " are not both prime");
    }
    const std::int64_t q = p + 2;
    const std::int64_t n = p * q;
    struct Variant {
        std::uint8_t at_zero, at_multiples_of_q, at_multiples_of_p;
    };
    // Classical convention first, then the remaining assignments of the three special values.
    std::vector<Variant> variants = {{0, 0, 1}};
    for (std::uint8_t v = 0; v < 8; ++v) {
        Variant candidate{static_cast<std::uint8_t>(v >> 2 & 1), static_cast<std::uint8_t>(v >> 1 & 1),
                          static_cast<std::uint8_t>(v & 1)};
        if (!(candidate.at_zero == 0 && candidate.at_multiples_of_q == 0 && candidate.at_multiples_of_p == 1)) {
            variants.push_back(candidate);
        }
    }
    const auto M = SpectrumPattern::with_modulus(q);
    std::string tried;
    for (const auto& v : variants) {
        std::vector<std::uint8_t> first(static_cast<std::size_t>(n)), second(first.size());
        for (std::int64_t i = 0; i < n; ++i) {
            std::uint8_t bit;
            if (i == 0) {
                bit = v.at_zero;
            } else if (i % q == 0) {
                bit = v.at_multiples_of_q;
            } else if (i % p == 0) {
                bit = v.at_multiples_of_p;
            } else {
                bit = nt::legendre_symbol(i, p) * nt::legendre_symbol(i, q) == -1 ? 1 : 0;
            }
            first[i] = bit;
            second[i] = (i % q == 0) ? static_cast<std::uint8_t>(bit ^ 1) : bit;
        }
        BinarySequence s(std::move(first)), t(std::move(second));
        const auto verdict = check_pair_spectrum(s, t, {0, 0, 1}, M);
        const std::string label = "zero=" + std::to_string(v.at_zero) + ";mult_q=" +
                                  std::to_string(v.at_multiples_of_q) + ";mult_p=" +
                                  std::to_string(v.at_multiples_of_p);
        if (verdict.matches) {
            return {std::move(s), std::move(t), PairFamily::twin_prime, "p=" + std::to_string(p) + ";" + label, ""};
        }
        tried += " [" + label + ": " + describe_mismatches(verdict, 2) + "]";
    }
    throw ConventionError("twin_prime_pair: pair construction unresolved for p = " + std::to_string(p) + "; tried" +
                          tried);
}

SequencePair gmw_pair(int k, const BinaryFieldSpec& field) {
    if (k < 2) throw DomainError("gmw_pair: k must be at least 2");
    if (field.m != 2 * k) {
        throw DomainError("gmw_pair: field degree " + std::to_string(field.m) + " is not 2k = " +
                          std::to_string(2 * k));
    }
    auto s = m_sequence(field);
    const std::size_t modulus = (std::size_t{1} << k) + 1;
    auto bits = s.symbols();
    for (std::size_t i = 0; i < bits.size(); i += modulus) bits[i] ^= 1;
    BinarySequence t(std::move(bits));
    const auto verdict =
        check_pair_spectrum(s, t, {0, 0, 1}, SpectrumPattern::with_modulus(static_cast<std::int64_t>(modulus)));
    if (!verdict.matches) {
        throw ConventionError("gmw_pair: pair construction unresolved for k = " + std::to_string(k) + "; " +
                              describe_mismatches(verdict));
    }
    return {std::move(s), std::move(t), PairFamily::gmw,
            "k=" + std::to_string(k) + ";poly=" + format_field_polynomial(field), ""};
}

SequencePair gmw_pair(int k) {
    if (k < 2 || 2 * k > kMaxDegree) {
        throw DomainError("gmw_pair: k = " + std::to_string(k) + " outside 2.." + std::to_string(kMaxDegree / 2));
    }
    return gmw_pair(k, default_field(2 * k));
}

ParseError::ParseError(std::size_t line, const std::string& what)
    : DomainError("line " + std::to_string(line) + ": " + what), line_(line) {}

std::string format_pair(const SequencePair& pair) {
    const std::string tag =
        pair.family == PairFamily::fixture && !pair.origin.empty() ? pair.origin : to_string(pair.family);
    std::ostringstream os;
    os << "n=" << pair.length() << " family=" << tag << " params=" << pair.params << "\n"
       << format_sequence(pair.first) << "\n"
       << format_sequence(pair.second) << "\n";
    return os.str();
}

SequencePair parse_pair(const std::string& text) {
    std::istringstream in(text);
    std::string header, first_line, second_line;
    if (!std::getline(in, header)) throw ParseError(1, "missing header");
    if (!std::getline(in, first_line)) throw ParseError(2, "missing first sequence");
    if (!std::getline(in, second_line)) throw ParseError(3, "missing second sequence");
    std::string extra;
    std::size_t line_no = 3;
    while (std::getline(in, extra)) {
        ++line_no;
        if (extra.find_first_not_of(" \t\r") != std::string::npos) {
            throw ParseError(line_no, "unexpected content after the second sequence");
        }
    }

    std::istringstream fields(header);
    std::string token, n_text, tag, params;
    bool have_n = false, have_family = false, have_params = false;
    while (fields >> token) {
        if (token.rfind("n=", 0) == 0) {
            n_text = token.substr(2);
            have_n = true;
        } else if (token.rfind("family=", 0) == 0) {
            tag = token.substr(7);
            have_family = true;
        } else if (token.rfind("params=", 0) == 0) {
            params = token.substr(7);
            have_params = true;
        } else {
            throw ParseError(1, "unknown header field '" + token + "'");
        }
    }
    if (!have_n || !have_family || !have_params) {
        throw ParseError(1, "header must contain n=, family= and params=");
    }
    std::size_t n = 0;
    try {
        std::size_t used = 0;
        n = std::stoul(n_text, &used);
        if (used != n_text.size()) throw std::invalid_argument(n_text);
    } catch (const std::exception&) {
        throw ParseError(1, "bad length '" + n_text + "'");
    }
    try {
        parse_pair_family(tag);
    } catch (const DomainError& err) {
        throw ParseError(1, err.what());
    }

    auto parse_member = [](const std::string& line, std::size_t line_number) {
        try {
            return parse_sequence<2>(line);
        } catch (const DomainError& err) {
            throw ParseError(line_number, err.what());
        }
    };
    auto first = parse_member(first_line, 2);
    auto second = parse_member(second_line, 3);
    if (first.size() != second.size()) {
        throw DomainError("pair members have different lengths (" + std::to_string(first.size()) + " vs " +
                          std::to_string(second.size()) + ")");
    }
    if (first.size() != n) {
        throw DomainError("header length " + std::to_string(n) + " does not match sequence length " +
                          std::to_string(first.size()));
    }
    return {std::move(first), std::move(second), PairFamily::fixture, std::move(params), std::move(tag)};
}

SequencePair load_pair(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open pair file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_pair(buffer.str());
}

void save_pair(const SequencePair& pair, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw DomainError("cannot write pair file " + path.string());
    out << format_pair(pair);
}

}  // namespace seqforge
