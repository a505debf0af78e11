#pragma once

#include <cstdint>
#include <utility>

#include "seqforge/seqcore.hpp"

namespace seqforge {

/// Two column sequences of equal length n, each read from its own starting shift.
/// The interleaved sequence is u(2i + j) = column_j(shift_j + i mod n).
struct InterleaveSpec {
    BinarySequence column0;
    BinarySequence column1;
    std::int64_t shift0 = 0;
    std::int64_t shift1 = 0;

    std::size_t column_length() const { return column0.size(); }
};

BinarySequence interleave(const InterleaveSpec& spec);
BinarySequence interleave(const BinarySequence& column0, const BinarySequence& column1);

/// Inverse of interleave with zero shifts: column_j(i) = u(2i + j).
std::pair<BinarySequence, BinarySequence> deinterleave(const BinarySequence& u);

/// Correlation of interleave(u_spec) against interleave(v_spec) at tau, evaluated from
/// column correlations only. For tau = 2t:     R_{a0,b0}(t+f0-g0) + R_{a1,b1}(t+f1-g1);
/// for tau = 2t+1: R_{a0,b1}(t+f1-g0) + R_{a1,b0}(t+1+f0-g1), with g from u_spec, f from v_spec.
GaussianInt shifted_interleave_correlation(const InterleaveSpec& u_spec, const InterleaveSpec& v_spec,
                                           std::size_t tau);

/// Inverse Gray map Z_2 x Z_2 -> Z_4: (0,0)->0, (0,1)->1, (1,1)->2, (1,0)->3.
int gray_inverse(int c, int d);

QuaternarySequence gray_compose(const BinarySequence& c, const BinarySequence& d);
std::pair<BinarySequence, BinarySequence> gray_decompose(const QuaternarySequence& u);

/// R_u(tau) for u = gray_compose(c, d), evaluated from the binary correlations of c and d:
/// (R_c + R_d)/2 + i (R_{c,d} - R_{d,c})/2. Both halvings are exact.
GaussianInt krone_sarwate_autocorrelation(const BinarySequence& c, const BinarySequence& d,
                                          std::size_t tau);

}  // namespace seqforge
