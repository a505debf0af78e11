#include "seqforge/catalog.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <span>

#include "seqforge/numtheory.hpp"

namespace seqforge {

namespace {

using Tuple = std::array<int, 4>;

// Pair tuples: 0 = s, 1 = t.
constexpr std::array<Tuple, 4> kPairTuples = {{{0, 1, 0, 1}, {0, 1, 1, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}}};

// Cyclotomic tuples, 1-based indices of s_1..s_6, in printed order.
constexpr std::array<Tuple, 8> kT7Tuples = {{{2, 1, 2, 1},
                                             {1, 2, 1, 2},
                                             {6, 2, 6, 2},
                                             {2, 6, 2, 6},
                                             {5, 4, 5, 4},
                                             {4, 5, 4, 5},
                                             {3, 5, 3, 5},
                                             {5, 3, 5, 3}}};

constexpr std::array<Tuple, 8> kT8Tuples = {{{1, 2, 2, 1},
                                             {2, 1, 1, 2},
                                             {2, 6, 6, 2},
                                             {6, 2, 2, 6},
                                             {4, 5, 5, 4},
                                             {5, 4, 4, 5},
                                             {5, 3, 3, 5},
                                             {3, 5, 5, 3}}};

constexpr std::array<Tuple, 8> kT9Tuples = {{{2, 1, 6, 2},
                                             {2, 6, 1, 2},
                                             {5, 3, 4, 5},
                                             {5, 4, 3, 5},
                                             {6, 2, 2, 1},
                                             {1, 2, 2, 6},
                                             {3, 5, 5, 4},
                                             {4, 5, 5, 3}}};

constexpr std::array<Tuple, 16> kT10Tuples = {{{6, 3, 4, 1},
                                               {6, 4, 3, 1},
                                               {4, 6, 3, 1},
                                               {3, 6, 4, 1},
                                               {4, 1, 6, 3},
                                               {6, 4, 1, 3},
                                               {1, 4, 6, 3},
                                               {4, 6, 1, 3},
                                               {3, 1, 6, 4},
                                               {6, 3, 1, 4},
                                               {1, 3, 6, 4},
                                               {3, 6, 1, 4},
                                               {4, 1, 3, 6},
                                               {3, 1, 4, 6},
                                               {1, 3, 4, 6},
                                               {1, 4, 3, 6}}};

bool is_perfect_square(std::int64_t v) {
    if (v < 0) return false;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r * r == v;
}

std::vector<ETriple> resolve_e(const CatalogRequest& request) {
    const auto id = request.theorem;
    if (id == TheoremId::T2 || id == TheoremId::T3 || id == TheoremId::T4) {
        const ETriple fixed{0, 0, 1};
        if (request.e && !(*request.e == fixed)) {
            throw DomainError(to_string(id) + " requires e = (0,0,1), got (" + to_string(*request.e) + ")");
        }
        return {fixed};
    }
    const int parity = required_e_parity(id);
    if (request.e) {
        if (request.e->parity() != parity) {
            throw DomainError(to_string(id) + " requires e0+e1+e2 = " + std::to_string(parity) + " mod 2, got (" +
                              to_string(*request.e) + ")");
        }
        if (!request.sweep_e) return {*request.e};
    }
    if (request.sweep_e) return e_triples_with_parity(parity);
    return {parity == 0 ? ETriple{0, 0, 0} : ETriple{0, 0, 1}};
}

BinaryFieldSpec resolve_field(const CatalogRequest& request, int degree) {
    if (!request.field) return default_field(degree);
    if (request.field->m != degree) {
        throw DomainError("field polynomial " + format_field_polynomial(*request.field) + " has degree " +
                          std::to_string(request.field->m) + ", expected " + std::to_string(degree));
    }
    return *request.field;
}

int require_degree(std::int64_t value, std::int64_t lo, std::int64_t hi, const std::string& what) {
    if (value < lo || value > hi) {
        throw DomainError(what + " = " + std::to_string(value) + " outside " + std::to_string(lo) + ".." +
                          std::to_string(hi));
    }
    return static_cast<int>(value);
}

std::string pair_label(const Tuple& t) {
    static constexpr const char* kNames[2] = {"s", "t"};
    return std::string("(") + kNames[t[0]] + "," + kNames[t[1]] + "," + kNames[t[2]] + "," + kNames[t[3]] + ")";
}

std::string cyclotomic_label(const Tuple& t) {
    return "(s" + std::to_string(t[0]) + ",s" + std::to_string(t[1]) + ",s" + std::to_string(t[2]) + ",s" +
           std::to_string(t[3]) + ")";
}

QuarticSystem resolve_system(const CatalogRequest& request) {
    const auto id = request.theorem;
    const auto n = request.parameter;
    const bool wants_f_odd = id != TheoremId::T10;
    if (n < 5 || !nt::is_prime(n) || n % 4 != 1) {
        throw DomainError(to_string(id) + " needs a prime n = 4f+1, got " + std::to_string(n));
    }
    const std::int64_t f = (n - 1) / 4;
    if (wants_f_odd && f % 2 == 0) {
        throw DomainError(to_string(id) + " hypothesis 'f odd' fails: n = " + std::to_string(n) + " has f = " +
                          std::to_string(f));
    }
    if (!wants_f_odd && f % 2 != 0) {
        throw DomainError(to_string(id) + " hypothesis 'f even' fails: n = " + std::to_string(n) + " has f = " +
                          std::to_string(f));
    }
    if (wants_f_odd && !is_perfect_square(n - 4)) {
        throw DomainError(to_string(id) + " hypothesis 'y = -1' fails: n = " + std::to_string(n) +
                          " is not of the form x^2 + 4");
    }
    if (!wants_f_odd && !is_perfect_square((n - 1) / 4)) {
        throw DomainError(to_string(id) + " hypothesis 'x = +-1' fails: n = " + std::to_string(n) +
                          " is not of the form 1 + 4y^2");
    }
    if (!request.generator) {
        return select_system_for_convention(n, wants_f_odd ? SignTarget::y_minus_one : SignTarget::x_plus_minus_one);
    }
    auto system = build_system(n, *request.generator);
    if (wants_f_odd && system.y != -1) {
        throw DomainError(to_string(id) + " hypothesis 'y = -1' fails for generator " +
                          std::to_string(*request.generator) + " (recovered y = " + std::to_string(system.y) + ")");
    }
    if (!wants_f_odd && system.x != 1 && system.x != -1) {
        throw DomainError(to_string(id) + " hypothesis 'x = +-1' fails for generator " +
                          std::to_string(*request.generator) + " (recovered x = " + std::to_string(system.x) + ")");
    }
    return system;
}

void add_pair_entries(Catalog& catalog, const SequencePair& pair, const std::vector<ETriple>& es,
                      const SpectrumPattern& pattern) {
    const BinarySequence* members[2] = {&pair.first, &pair.second};
    for (const auto& e : es) {
        for (std::size_t k = 0; k < kPairTuples.size(); ++k) {
            const auto& t = kPairTuples[k];
            catalog.entries.push_back({catalog.theorem, k, pair_label(t),
                                       ConstructionInput(*members[t[0]], *members[t[1]], *members[t[2]],
                                                         *members[t[3]], e),
                                       pattern});
        }
    }
}

std::span<const Tuple> cyclotomic_tuples(TheoremId id) {
    switch (id) {
        case TheoremId::T7:
            return kT7Tuples;
        case TheoremId::T8:
            return kT8Tuples;
        case TheoremId::T9:
            return kT9Tuples;
        default:
            return kT10Tuples;
    }
}

}  // namespace

std::string to_string(TheoremId id) { return "T" + std::to_string(static_cast<int>(id) + 2); }

TheoremId parse_theorem_id(const std::string& text) {
    if (text.size() >= 2 && (text[0] == 'T' || text[0] == 't')) {
        const auto digits = text.substr(1);
        bool numeric = !digits.empty() && digits.size() <= 2;
        for (char ch : digits) numeric = numeric && std::isdigit(static_cast<unsigned char>(ch));
        if (numeric) {
            const int v = std::stoi(digits);
            if (v >= 2 && v <= 10) return static_cast<TheoremId>(v - 2);
        }
    }
    throw DomainError("unknown theorem id '" + text + "' (expected T2..T10)");
}

std::string parameter_name(TheoremId id) {
    switch (id) {
        case TheoremId::T2:
        case TheoremId::T3:
            return "m";
        case TheoremId::T4:
        case TheoremId::T5:
            return "p";
        case TheoremId::T6:
            return "k";
        default:
            return "n";
    }
}

int required_e_parity(TheoremId id) {
    switch (id) {
        case TheoremId::T7:
        case TheoremId::T8:
        case TheoremId::T10:
            return 0;
        default:
            return 1;
    }
}

Catalog build_catalog(const CatalogRequest& request) {
    Catalog catalog;
    catalog.theorem = request.theorem;
    const auto es = resolve_e(request);
    const auto id = request.theorem;

    switch (id) {
        case TheoremId::T2:
        case TheoremId::T3: {
            const int m = require_degree(request.parameter, 2, 16, "m");
            const auto field = resolve_field(request, m);
            const auto a = m_sequence(field);
            catalog.source = "m=" + std::to_string(m) + ";poly=" + format_field_polynomial(field);
            if (id == TheoremId::T2) {
                for (const auto& e : es) {
                    catalog.entries.push_back({id, 0, "(a,a,a,a)", ConstructionInput(a, a, a, a, e),
                                               SpectrumPattern::ideal()});
                }
            } else {
                // A second ideal sequence of the same length: the reversal of a.
                auto bits = a.symbols();
                std::reverse(bits.begin(), bits.end());
                const BinarySequence b(std::move(bits));
                catalog.source += ";b=reversed";
                for (const auto& e : es) {
                    catalog.entries.push_back({id, 0, "(a,a,b,b)", ConstructionInput(a, a, b, b, e),
                                               SpectrumPattern::ideal()});
                }
            }
            break;
        }
        case TheoremId::T4: {
            const auto pair = legendre_pair(request.parameter);
            catalog.source = pair.params;
            add_pair_entries(catalog, pair, es, SpectrumPattern::ideal());
            break;
        }
        case TheoremId::T5: {
            const auto pair = twin_prime_pair(request.parameter);
            catalog.source = pair.params;
            add_pair_entries(catalog, pair, es, SpectrumPattern::with_modulus(request.parameter + 2));
            break;
        }
        case TheoremId::T6: {
            const int k = require_degree(request.parameter, 2, 8, "k");
            const auto pair = gmw_pair(k, resolve_field(request, 2 * k));
            catalog.source = pair.params;
            add_pair_entries(catalog, pair, es, SpectrumPattern::with_modulus((std::int64_t{1} << k) + 1));
            break;
        }
        default: {
            const auto system = resolve_system(request);
            const auto s = six_sequences(system);
            catalog.source = "n=" + std::to_string(system.n) + ";alpha=" + std::to_string(system.generator) +
                             ";x=" + std::to_string(system.x) + ";y=" + std::to_string(system.y);
            const auto tuples = cyclotomic_tuples(id);
            for (const auto& e : es) {
                for (std::size_t k = 0; k < tuples.size(); ++k) {
                    const auto& t = tuples[k];
                    catalog.entries.push_back(
                        {id, k, cyclotomic_label(t),
                         ConstructionInput(s[t[0] - 1], s[t[1] - 1], s[t[2] - 1], s[t[3] - 1], e),
                         SpectrumPattern::plus_minus_two()});
                }
            }
            break;
        }
    }
    return catalog;
}

EntryReport verify_entry(const CatalogEntry& entry) {
    EntryReport report;
    const auto u = construct(entry.input);
    const auto spectrum = auto_spectrum(u);
    report.pattern = verify_pattern(spectrum, entry.pattern);
    report.optimal = report.pattern.r_max_squared == 4;
    report.corollary = corollary1_check(entry.input);
    return report;
}

}  // namespace seqforge
