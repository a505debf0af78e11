#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqforge/construction.hpp"
#include "seqforge/cyclotomy.hpp"
#include "seqforge/families.hpp"

namespace seqforge {

enum class TheoremId { T2, T3, T4, T5, T6, T7, T8, T9, T10 };

std::string to_string(TheoremId id);
/// Accepts "T7" or "t7".
TheoremId parse_theorem_id(const std::string& text);

/// What the theorem's parameter means: m for T2/T3, p for T4/T5, k for T6, n for T7..T10.
std::string parameter_name(TheoremId id);

struct CatalogRequest {
    TheoremId theorem = TheoremId::T2;
    std::int64_t parameter = 0;
    /// Defaults to (0,0,1) for T2..T4 and to the canonical triple of the required parity otherwise.
    std::optional<ETriple> e;
    /// Emit every triple of the required parity instead of one representative.
    bool sweep_e = false;
    /// T7..T10 only: use this generator instead of searching for one meeting the sign convention.
    std::optional<std::int64_t> generator;
    /// T2/T3/T6 only: field polynomial; the built-in one for the degree otherwise.
    std::optional<BinaryFieldSpec> field;
};

struct CatalogEntry {
    TheoremId theorem = TheoremId::T2;
    std::size_t tuple_index = 0;
    /// The ordering as printed in the theorem, e.g. "(s6,s3,s4,s1)".
    std::string tuple;
    ConstructionInput input;
    SpectrumPattern pattern;
};

struct Catalog {
    TheoremId theorem = TheoremId::T2;
    /// Resolved sources, e.g. "n=13;alpha=2;x=-3;y=-1" or "p=7;zero=0,1".
    std::string source;
    std::vector<CatalogEntry> entries;
};

/// Required e-parity of a theorem; T2..T4 fix e = (0,0,1) and report parity 1.
int required_e_parity(TheoremId id);

/// Every admissible input the theorem lists, ordered by e-triple and then by tuple.
/// Hypothesis violations (wrong f parity, n not of the required quadratic form, e of the wrong
/// parity, a generator missing the sign convention) throw DomainError. A family pair that cannot
/// be resolved throws ConventionError.
Catalog build_catalog(const CatalogRequest& request);

struct EntryReport {
    PatternVerdict pattern;
    bool optimal = false;
    Corollary1Verdict corollary;
};

EntryReport verify_entry(const CatalogEntry& entry);

}  // namespace seqforge
