#include "seqforge/seqcore.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace seqforge {

namespace {

// xi^k for k in Z_4; xi = i.
constexpr GaussianInt kQuarticUnits[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

std::size_t reduce(std::int64_t value, std::size_t n) {
    const auto m = static_cast<std::int64_t>(n);
    auto r = value % m;
    return static_cast<std::size_t>(r < 0 ? r + m : r);
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const GaussianInt& g) {
    return os << to_string(g);
}

std::string to_string(const GaussianInt& g) {
    std::ostringstream os;
    os << g.re;
    if (g.im != 0) {
        os << (g.im < 0 ? "-" : "+") << (g.im < 0 ? -g.im : g.im) << "i";
    }
    return os.str();
}

template <int H>
Sequence<H>::Sequence(std::vector<std::uint8_t> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) {
        throw DomainError("sequence must have length >= 1");
    }
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (symbols_[i] >= H) {
            throw DomainError("symbol " + std::to_string(symbols_[i]) + " at index " +
                              std::to_string(i) + " is outside Z_" + std::to_string(H));
        }
    }
}

template <int H>
Sequence<H>::Sequence(std::initializer_list<int> symbols) {
    std::vector<std::uint8_t> raw;
    raw.reserve(symbols.size());
    for (int v : symbols) {
        if (v < 0 || v >= H) {
            throw DomainError("symbol " + std::to_string(v) + " is outside Z_" + std::to_string(H));
        }
        raw.push_back(static_cast<std::uint8_t>(v));
    }
    *this = Sequence(std::move(raw));
}

template <int H>
int Sequence<H>::at_periodic(std::int64_t i) const {
    return symbols_[reduce(i, symbols_.size())];
}

template class Sequence<2>;
template class Sequence<4>;

template <int H>
GaussianInt cross_correlation(const Sequence<H>& s, const Sequence<H>& t, std::size_t tau) {
    const std::size_t n = s.size();
    if (t.size() != n) {
        throw DomainError("cross_correlation: length mismatch (" + std::to_string(n) + " vs " +
                          std::to_string(t.size()) + ")");
    }
    if (tau >= n) {
        throw DomainError("cross_correlation: shift " + std::to_string(tau) + " out of range [0, " +
                          std::to_string(n) + ")");
    }
    const auto& a = s.symbols();
    const auto& b = t.symbols();
    if constexpr (H == 2) {
        std::int64_t disagreements = 0;
        std::size_t j = tau;
        for (std::size_t i = 0; i < n; ++i) {
            disagreements += a[i] ^ b[j];
            if (++j == n) j = 0;
        }
        return {static_cast<std::int64_t>(n) - 2 * disagreements, 0};
    } else {
        std::int64_t counts[4] = {0, 0, 0, 0};
        std::size_t j = tau;
        for (std::size_t i = 0; i < n; ++i) {
            ++counts[(a[i] - b[j]) & 3];
            if (++j == n) j = 0;
        }
        return {counts[0] - counts[2], counts[1] - counts[3]};
    }
}

template <int H>
GaussianInt cross_correlation_mod(const Sequence<H>& s, const Sequence<H>& t, std::int64_t tau) {
    return cross_correlation(s, t, reduce(tau, s.size()));
}

template <int H>
CorrelationSpectrum cross_spectrum(const Sequence<H>& s, const Sequence<H>& t) {
    CorrelationSpectrum out;
    out.values.reserve(s.size());
    for (std::size_t tau = 0; tau < s.size(); ++tau) {
        out.values.push_back(cross_correlation(s, t, tau));
    }
    return out;
}

template <int H>
CorrelationSpectrum auto_spectrum(const Sequence<H>& s) {
    return cross_spectrum(s, s);
}

template GaussianInt cross_correlation(const Sequence<2>&, const Sequence<2>&, std::size_t);
template GaussianInt cross_correlation(const Sequence<4>&, const Sequence<4>&, std::size_t);
template GaussianInt cross_correlation_mod(const Sequence<2>&, const Sequence<2>&, std::int64_t);
template GaussianInt cross_correlation_mod(const Sequence<4>&, const Sequence<4>&, std::int64_t);
template CorrelationSpectrum cross_spectrum(const Sequence<2>&, const Sequence<2>&);
template CorrelationSpectrum cross_spectrum(const Sequence<4>&, const Sequence<4>&);
template CorrelationSpectrum auto_spectrum(const Sequence<2>&);
template CorrelationSpectrum auto_spectrum(const Sequence<4>&);

std::int64_t r_max_squared(const CorrelationSpectrum& spectrum) {
    if (spectrum.length() < 2) {
        throw DomainError("r_max_squared: spectrum has no out-of-phase shifts");
    }
    std::int64_t best = 0;
    for (std::size_t tau = 1; tau < spectrum.length(); ++tau) {
        best = std::max(best, spectrum[tau].norm());
    }
    return best;
}

OptimalityReport is_optimal_even_length(const QuaternarySequence& u) {
    if (u.size() % 2 != 0) {
        throw DomainError("is_optimal_even_length: length " + std::to_string(u.size()) + " is odd");
    }
    OptimalityReport report;
    report.spectrum = auto_spectrum(u);
    report.r_max_squared = r_max_squared(report.spectrum);
    report.optimal = report.r_max_squared == 4;
    return report;
}

template <int H>
Sequence<H> shift(const Sequence<H>& s, std::int64_t tau) {
    const std::size_t n = s.size();
    const std::size_t k = reduce(tau, n);
    std::vector<std::uint8_t> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = s.symbols()[(i + k) % n];
    }
    return Sequence<H>(std::move(out));
}

template Sequence<2> shift(const Sequence<2>&, std::int64_t);
template Sequence<4> shift(const Sequence<4>&, std::int64_t);

BinarySequence complement(const BinarySequence& s) {
    std::vector<std::uint8_t> out(s.symbols());
    for (auto& b : out) b ^= 1;
    return BinarySequence(std::move(out));
}

BinarySequence add_constant(const BinarySequence& s, int flag) {
    return (flag & 1) ? complement(s) : s;
}

BinarySequence from_support(std::size_t n, const std::set<std::size_t>& indices) {
    std::vector<std::uint8_t> out(n, 0);
    for (auto i : indices) {
        if (i >= n) {
            throw DomainError("from_support: index " + std::to_string(i) + " outside [0, " +
                              std::to_string(n) + ")");
        }
        out[i] = 1;
    }
    return BinarySequence(std::move(out));
}

std::set<std::size_t> support(const BinarySequence& s) {
    std::set<std::size_t> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i]) out.insert(i);
    }
    return out;
}

std::size_t weight(const BinarySequence& s) {
    return static_cast<std::size_t>(std::count(s.symbols().begin(), s.symbols().end(), 1));
}

std::vector<std::uint8_t> parse_symbols(std::string_view text) {
    auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
    while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
    while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
    if (!text.empty() && (text.front() == '[' || text.front() == '(')) {
        const char close = text.front() == '[' ? ']' : ')';
        if (text.back() != close) {
            throw DomainError("sequence literal: unbalanced bracket");
        }
        text = text.substr(1, text.size() - 2);
    }

    std::vector<std::uint8_t> out;
    std::size_t pos = 0;
    while (true) {
        const auto comma = text.find(',', pos);
        auto token = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        while (!token.empty() && is_space(token.front())) token.remove_prefix(1);
        while (!token.empty() && is_space(token.back())) token.remove_suffix(1);
        if (token.size() != 1 || token[0] < '0' || token[0] > '3') {
            throw DomainError("sequence literal: bad symbol '" + std::string(token) +
                              "' at element " + std::to_string(out.size()));
        }
        out.push_back(static_cast<std::uint8_t>(token[0] - '0'));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

template <int H>
std::string format_sequence(const Sequence<H>& s) {
    std::string out;
    out.reserve(2 * s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out.push_back(',');
        out.push_back(static_cast<char>('0' + s[i]));
    }
    return out;
}

template std::string format_sequence(const Sequence<2>&);
template std::string format_sequence(const Sequence<4>&);

}  // namespace seqforge
