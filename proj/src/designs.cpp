#include "udk/designs.hpp"

#include "udk/errors.hpp"
#include "udk/haar.hpp"

namespace udk {

namespace {

uint64_t moment_from_profile(const FiniteMatrixGroup& g, uint32_t t) {
  Cyc acc(Rat(0));
  for (const auto& pair : g.trace_profile()) {
    Cyc base = pair.tr * pair.tr_inv;
    acc += base.pow(t) * Cyc(Rat((long long)pair.count));
  }
  Rat v;
  try {
    v = acc.as_rational();
  } catch (const NotRational&) {
    throw IntegralityViolation("moment of " + g.name() + " at t=" + std::to_string(t) +
                               " is not rational");
  }
  v /= Rat((long long)g.order());
  if (!v.is_integer() || v.sign() < 0)
    throw IntegralityViolation("moment of " + g.name() + " at t=" + std::to_string(t) +
                               " is not a nonnegative integer: " + v.to_string());
  return (uint64_t)v.to_int64();
}

}  // namespace

uint64_t moment(const FiniteMatrixGroup& g, uint32_t t) {
  if (t < 1) throw FormatError("moment requires t >= 1");
  return moment_from_profile(g, t);
}

bool is_unitary_t_group(const FiniteMatrixGroup& g, uint32_t t) {
  return moment(g, t) == haar_moment(g.dim(), t);
}

MomentReport max_t_report(const FiniteMatrixGroup& g, uint32_t t_cap) {
  MomentReport rep;
  rep.group = g.name();
  rep.dim = g.dim();
  rep.order = g.order();
  bool still_equal = true;
  for (uint32_t t = 1; t <= t_cap; ++t) {
    uint64_t m = moment(g, t);
    uint64_t h = haar_moment(g.dim(), t);
    bool eq = (m == h);
    rep.rows.push_back({t, m, h, eq});
    if (eq) {
      if (!still_equal) rep.monotonic_ok = false;  // equality after a gap
      rep.max_t = t;
    } else {
      still_equal = false;
    }
  }
  return rep;
}

SymAltMultiplicities sym_alt_multiplicities(const FiniteMatrixGroup& g) {
  const auto& sq = g.squares();
  Cyc ss(Rat(0)), sa(Rat(0)), aa(Rat(0));
  for (uint32_t i = 0; i < g.order(); ++i) {
    uint32_t iinv = g.inverse_index(i);
    const Cyc& x = g.trace(i);
    const Cyc& x2 = g.trace(sq[i]);
    const Cyc& y = g.trace(iinv);
    const Cyc& y2 = g.trace(g.inverse_index(sq[i]));
    Cyc sym = x * x + x2;   // 2 * Sym^2 chi(g)
    Cyc alt = x * x - x2;   // 2 * Alt^2 chi(g)
    Cyc symc = y * y + y2;  // conjugates, via g^-1
    Cyc altc = y * y - y2;
    ss += sym * symc;
    sa += sym * altc;
    aa += alt * altc;
  }
  Rat denom = Rat(4) * Rat((long long)g.order());
  auto finish = [&](Cyc& v, const char* which) -> uint64_t {
    Rat r;
    try {
      r = v.as_rational();
    } catch (const NotRational&) {
      throw IntegralityViolation(std::string(which) + " inner product is not rational");
    }
    r /= denom;
    if (!r.is_integer() || r.sign() < 0)
      throw IntegralityViolation(std::string(which) + " inner product is not a nonnegative integer");
    return (uint64_t)r.to_int64();
  };
  return {finish(ss, "[Sym^2,Sym^2]"), finish(sa, "[Sym^2,Alt^2]"), finish(aa, "[Alt^2,Alt^2]")};
}

MomentReport certify(const FiniteMatrixGroup& g, uint32_t t_cap) {
  MomentReport rep = max_t_report(g, t_cap);
  if (t_cap >= 2) {
    auto m = sym_alt_multiplicities(g);
    uint64_t m4 = 0;
    for (auto& row : rep.rows)
      if (row.t == 2) m4 = row.group_moment;
    if (m.mss + 2 * m.msa + m.maa != m4)
      throw IntegralityViolation("Sym/Alt decomposition does not add up to the 4th moment for " +
                                 g.name());
  }
  return rep;
}

}  // namespace udk
