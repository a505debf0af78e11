#include "seqforge/interleave_gray.hpp"

#include "seqforge/detail/exact.hpp"

namespace seqforge {

namespace {

void require_same_length(const BinarySequence& a, const BinarySequence& b, const char* where) {
    if (a.size() != b.size()) {
        throw DomainError(std::string(where) + ": length mismatch (" + std::to_string(a.size()) +
                          " vs " + std::to_string(b.size()) + ")");
    }
}

std::int64_t binary_corr(const BinarySequence& a, const BinarySequence& b, std::int64_t tau) {
    return cross_correlation_mod(a, b, tau).re;
}

}  // namespace

BinarySequence interleave(const InterleaveSpec& spec) {
    require_same_length(spec.column0, spec.column1, "interleave");
    const std::size_t n = spec.column_length();
    std::vector<std::uint8_t> out(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto row = static_cast<std::int64_t>(i);
        out[2 * i] = static_cast<std::uint8_t>(spec.column0.at_periodic(spec.shift0 + row));
        out[2 * i + 1] = static_cast<std::uint8_t>(spec.column1.at_periodic(spec.shift1 + row));
    }
    return BinarySequence(std::move(out));
}

BinarySequence interleave(const BinarySequence& column0, const BinarySequence& column1) {
    return interleave(InterleaveSpec{column0, column1, 0, 0});
}

std::pair<BinarySequence, BinarySequence> deinterleave(const BinarySequence& u) {
    if (u.size() % 2 != 0) {
        throw DomainError("deinterleave: length " + std::to_string(u.size()) + " is odd");
    }
    const std::size_t n = u.size() / 2;
    std::vector<std::uint8_t> c0(n), c1(n);
    for (std::size_t i = 0; i < n; ++i) {
        c0[i] = static_cast<std::uint8_t>(u[2 * i]);
        c1[i] = static_cast<std::uint8_t>(u[2 * i + 1]);
    }
    return {BinarySequence(std::move(c0)), BinarySequence(std::move(c1))};
}

GaussianInt shifted_interleave_correlation(const InterleaveSpec& u_spec, const InterleaveSpec& v_spec,
                                           std::size_t tau) {
    require_same_length(u_spec.column0, u_spec.column1, "shifted_interleave_correlation");
    require_same_length(v_spec.column0, v_spec.column1, "shifted_interleave_correlation");
    require_same_length(u_spec.column0, v_spec.column0, "shifted_interleave_correlation");
    const std::size_t n = u_spec.column_length();
    if (tau >= 2 * n) {
        throw DomainError("shifted_interleave_correlation: shift out of range");
    }
    const auto t = static_cast<std::int64_t>(tau / 2);
    const auto& a0 = u_spec.column0;
    const auto& a1 = u_spec.column1;
    const auto& b0 = v_spec.column0;
    const auto& b1 = v_spec.column1;
    const auto g0 = u_spec.shift0, g1 = u_spec.shift1;
    const auto f0 = v_spec.shift0, f1 = v_spec.shift1;
    if (tau % 2 == 0) {
        return {binary_corr(a0, b0, t + f0 - g0) + binary_corr(a1, b1, t + f1 - g1), 0};
    }
    return {binary_corr(a0, b1, t + f1 - g0) + binary_corr(a1, b0, t + 1 + f0 - g1), 0};
}

int gray_inverse(int c, int d) {
    static constexpr int kTable[2][2] = {{0, 1}, {3, 2}};
    return kTable[c & 1][d & 1];
}

QuaternarySequence gray_compose(const BinarySequence& c, const BinarySequence& d) {
    require_same_length(c, d, "gray_compose");
    std::vector<std::uint8_t> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        out[i] = static_cast<std::uint8_t>(gray_inverse(c[i], d[i]));
    }
    return QuaternarySequence(std::move(out));
}

std::pair<BinarySequence, BinarySequence> gray_decompose(const QuaternarySequence& u) {
    // Gray map: 0->(0,0), 1->(0,1), 2->(1,1), 3->(1,0).
    static constexpr std::uint8_t kC[4] = {0, 0, 1, 1};
    static constexpr std::uint8_t kD[4] = {0, 1, 1, 0};
    std::vector<std::uint8_t> c(u.size()), d(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        c[i] = kC[u[i]];
        d[i] = kD[u[i]];
    }
    return {BinarySequence(std::move(c)), BinarySequence(std::move(d))};
}

GaussianInt krone_sarwate_autocorrelation(const BinarySequence& c, const BinarySequence& d,
                                          std::size_t tau) {
    require_same_length(c, d, "krone_sarwate_autocorrelation");
    const auto rc = cross_correlation(c, c, tau).re;
    const auto rd = cross_correlation(d, d, tau).re;
    const auto rcd = cross_correlation(c, d, tau).re;
    const auto rdc = cross_correlation(d, c, tau).re;
    return {detail::exact_half(rc + rd, "R_c + R_d"), detail::exact_half(rcd - rdc, "R_{c,d} - R_{d,c}")};
}

}  // namespace seqforge
