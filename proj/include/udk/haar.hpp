#ifndef UDK_HAAR_HPP_
#define UDK_HAAR_HPP_

#include <cstdint>
#include <vector>

namespace udk {

// weakly decreasing positive parts
using Partition = std::vector<uint32_t>;

// all partitions of t, optionally with at most max_rows rows (0 = no bound)
std::vector<Partition> partitions_of(uint32_t t, uint32_t max_rows = 0);

// number of standard Young tableaux of the given shape (hook length formula)
uint64_t hook_dimension(const Partition& shape);

// Exact 2t-th moment of |tr X| over Haar measure on U_d: the sum of squared
// hook dimensions over partitions of t with at most d rows, equivalently the
// number of permutations of t letters with longest increasing subsequence <= d.
// Equals t! once d >= t. Values cached per (d, t).
uint64_t haar_moment(uint32_t d, uint32_t t);

// Independent dimension-2 oracle: tracks multiplicities of the symmetric
// powers Sym^a in V^{(x)t} for dim V = 2 via Sym^a (x) V = Sym^{a+1} + Sym^{a-1},
// and returns the sum of squared multiplicities. Valid for 1 <= t <= 12.
uint64_t haar_moment_dim2_oracle(uint32_t t);

struct McEstimate {
  double mean;
  double std_error;
  uint64_t samples;
};

// Seeded Monte-Carlo estimate of the Haar moment: |tr X|^{2t} averaged over
// samples drawn by orthonormalizing a complex-Gaussian matrix against a
// positive-diagonal R (the phase convention that makes the factor Haar).
// Deterministic for a fixed seed; shards use derived sub-seeds and are
// reduced in a fixed order regardless of hardware.
McEstimate mc_haar_estimate(uint32_t d, uint32_t t, uint64_t samples, uint64_t seed);

// one pass over the samples, estimating every listed t
std::vector<McEstimate> mc_haar_estimate_multi(uint32_t d, const std::vector<uint32_t>& ts,
                                               uint64_t samples, uint64_t seed);

}  // namespace udk

#endif
