#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "udk/errors.hpp"
#include "udk/haar.hpp"

using namespace udk;

namespace {

// independent oracle: count standard Young tableaux by brute-force fill
uint64_t syt_br(const Partition& shape, std::vector<std::vector<int>>& grid, int next) {
  int t = 0;
  for (auto p : shape) t += p;
  if (next > t) return 1;
  uint64_t acc = 0;
  for (size_t r = 0; r < shape.size(); ++r) {
    size_t c = 0;
    while (c < shape[r] && grid[r][c]) ++c;
    if (c == shape[r]) continue;
    if (r > 0 && !grid[r - 1][c]) continue;  // cell above must be filled
    grid[r][c] = next;
    acc += syt_br(shape, grid, next + 1);
    grid[r][c] = 0;
  }
  return acc;
}

uint64_t syt_count(const Partition& shape) {
  std::vector<std::vector<int>> grid;
  for (auto p : shape) grid.push_back(std::vector<int>(p, 0));
  return syt_br(shape, grid, 1);
}

// independent oracle: permutations of t letters with LIS <= d
uint64_t lis_count(uint32_t t, uint32_t d) {
  std::vector<uint32_t> perm(t);
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t acc = 0;
  do {
    std::vector<uint32_t> tails;
    for (uint32_t x : perm) {
      auto it = std::lower_bound(tails.begin(), tails.end(), x);
      if (it == tails.end())
        tails.push_back(x);
      else
        *it = x;
    }
    if (tails.size() <= d) ++acc;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

}  // namespace

TEST_CASE("hook dimensions against tableau enumeration") {
  CHECK(hook_dimension({5}) == 1);
  CHECK(hook_dimension({2, 1}) == 2);
  CHECK(hook_dimension({2, 2}) == 2);
  for (uint32_t t = 1; t <= 8; ++t)
    for (const auto& lam : partitions_of(t)) CHECK(hook_dimension(lam) == syt_count(lam));
  CHECK_THROWS_AS(hook_dimension({}), FormatError);
  CHECK_THROWS_AS(hook_dimension({1, 2}), FormatError);
}

TEST_CASE("sum of squared hook dimensions is a factorial") {
  uint64_t fact = 1;
  for (uint32_t t = 1; t <= 12; ++t) {
    fact *= t;
    uint64_t acc = 0;
    for (const auto& lam : partitions_of(t)) acc += hook_dimension(lam) * hook_dimension(lam);
    CHECK(acc == fact);
  }
}

TEST_CASE("haar moments") {
  // paper anchors for d = 2
  CHECK(haar_moment(2, 3) == 5);
  CHECK(haar_moment(2, 4) == 14);
  CHECK(haar_moment(2, 5) == 42);
  CHECK(haar_moment(4, 4) == 24);
  // catalan numbers for d = 2
  uint64_t cat[11] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  for (uint32_t t = 1; t <= 10; ++t) CHECK(haar_moment(2, t) == cat[t]);
  // t! once d >= t
  uint64_t fact = 1;
  for (uint32_t t = 1; t <= 10; ++t) {
    fact *= t;
    CHECK(haar_moment(t, t) == fact);
    CHECK(haar_moment(t + 3, t) == fact);
  }
  CHECK(haar_moment(5, 1) == 1);
  CHECK_THROWS_AS(haar_moment(0, 1), FormatError);
  CHECK_THROWS_AS(haar_moment(2, 0), FormatError);
}

TEST_CASE("haar moment equals the LIS permutation count") {
  for (uint32_t t = 1; t <= 7; ++t)
    for (uint32_t d = 1; d <= t + 1; ++d) CHECK(haar_moment(d, t) == lis_count(t, d));
}

TEST_CASE("monotone in d, bounded by t!") {
  uint64_t fact = 1;
  for (uint32_t t = 1; t <= 9; ++t) {
    fact *= t;
    for (uint32_t d = 1; d <= t + 1; ++d) {
      CHECK(haar_moment(d, t) <= haar_moment(d + 1, t));
      CHECK(haar_moment(d, t) <= fact);
    }
  }
}

TEST_CASE("dim-2 oracle agrees") {
  CHECK(haar_moment_dim2_oracle(1) == 1);
  CHECK(haar_moment_dim2_oracle(3) == 5);
  CHECK(haar_moment_dim2_oracle(4) == 14);
  for (uint32_t t = 1; t <= 12; ++t) CHECK(haar_moment_dim2_oracle(t) == haar_moment(2, t));
}

TEST_CASE("monte carlo estimator is seeded and sane") {
  auto a = mc_haar_estimate(2, 1, 20000, 42);
  auto b = mc_haar_estimate(2, 1, 20000, 42);
  CHECK(a.mean == b.mean);  // bit-identical for equal seeds
  auto c = mc_haar_estimate(2, 1, 20000, 43);
  CHECK(a.mean != c.mean);
  CHECK(std::abs(a.mean - 1.0) < 6 * a.std_error);
  CHECK_THROWS_AS(mc_haar_estimate(2, 1, 10, 1), FormatError);
}
