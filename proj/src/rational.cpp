#include "udk/rational.hpp"

#include <cstdlib>
#include <ostream>
#include <stdexcept>

#include "udk/errors.hpp"

namespace udk {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

u128 abs128(i128 x) { return x < 0 ? u128(-x) : u128(x); }

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// anything with |num|, den below this stays on the small path
constexpr long long kSmallLimit = (1LL << 62);

mpz_class mpz_from_i128(i128 v) {
  bool neg = v < 0;
  u128 a = abs128(v);
  mpz_class hi(static_cast<unsigned long>(a >> 64));
  mpz_class lo(static_cast<unsigned long>(a & 0xffffffffffffffffULL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rat::Rat(long long n, long long d) : n_(n), d_(d) {
  if (d_ == 0) throw ZeroDenominator("rational with zero denominator");
  if (d_ < 0) { n_ = -n_; d_ = -d_; }
  if (n_ == 0) { d_ = 1; return; }
  u128 g = gcd128(abs128(n_), abs128(d_));
  if (g > 1) { n_ = (long long)(n_ / (long long)g); d_ = (long long)(d_ / (long long)g); }
}

void Rat::assign_big(const mpq_class& q) {
  mpq_class c(q);
  c.canonicalize();
  if (c.get_num().fits_slong_p() && c.get_den().fits_slong_p()) {
    long long n = c.get_num().get_si();
    long long d = c.get_den().get_si();
    if (std::llabs(n) < kSmallLimit && d < kSmallLimit) {
      n_ = n; d_ = d; big_.reset();
      return;
    }
  }
  big_ = std::make_shared<const mpq_class>(std::move(c));
  n_ = 0; d_ = 1;
}

void Rat::shrink() {
  if (big_) assign_big(*big_);
}

Rat Rat::from_string(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    mpq_class q(s, 10);
    q.canonicalize();
    Rat r; r.assign_big(q); return r;
  }
  mpz_class num(s.substr(0, slash), 10);
  mpz_class den(s.substr(slash + 1), 10);
  if (den == 0) throw ZeroDenominator("rational literal with zero denominator");
  Rat r; r.assign_big(mpq_class(num, den)); return r;
}

bool Rat::is_integer() const {
  if (big_) return big_->get_den() == 1;
  return d_ == 1;
}

int Rat::sign() const {
  if (big_) return sgn(*big_);
  return n_ > 0 ? 1 : (n_ < 0 ? -1 : 0);
}

mpq_class Rat::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class((long)0), 1);
  q = mpq_class(mpz_from_i128(n_), mpz_from_i128(d_));
  q.canonicalize();
  return q;
}

double Rat::to_double() const {
  if (big_) return big_->get_d();
  return double(n_) / double(d_);
}

long long Rat::to_int64() const {
  if (big_) {
    if (big_->get_den() != 1 || !big_->get_num().fits_slong_p())
      throw NotRational("value does not fit a 64-bit integer");
    return big_->get_num().get_si();
  }
  if (d_ != 1) throw NotRational("value is not an integer");
  return n_;
}

Rat Rat::operator-() const {
  if (big_) { Rat r; r.assign_big(mpq_class(-*big_)); return r; }
  Rat r; r.n_ = -n_; r.d_ = d_; return r;
}

Rat& Rat::operator+=(const Rat& o) {
  if (!big_ && !o.big_) {
    i128 num = i128(n_) * o.d_ + i128(o.n_) * d_;
    i128 den = i128(d_) * o.d_;
    if (num == 0) { n_ = 0; d_ = 1; return *this; }
    u128 g = gcd128(abs128(num), abs128(den));
    num /= (i128)g; den /= (i128)g;
    if (abs128(num) < (u128)kSmallLimit && abs128(den) < (u128)kSmallLimit) {
      n_ = (long long)num; d_ = (long long)den;
      return *this;
    }
    assign_big(mpq_class(mpz_from_i128(num), mpz_from_i128(den)));
    return *this;
  }
  assign_big(to_mpq() + o.to_mpq());
  return *this;
}

Rat& Rat::operator-=(const Rat& o) { return *this += -o; }

Rat& Rat::operator*=(const Rat& o) {
  if (!big_ && !o.big_) {
    // cross-reduce before multiplying
    u128 g1 = gcd128(abs128(n_), abs128(o.d_));
    u128 g2 = gcd128(abs128(o.n_), abs128(d_));
    i128 num = i128(n_ / (long long)(g1 ? g1 : 1)) * (o.n_ / (long long)(g2 ? g2 : 1));
    i128 den = i128(d_ / (long long)(g2 ? g2 : 1)) * (o.d_ / (long long)(g1 ? g1 : 1));
    if (num == 0) { n_ = 0; d_ = 1; return *this; }
    if (abs128(num) < (u128)kSmallLimit && abs128(den) < (u128)kSmallLimit) {
      n_ = (long long)num; d_ = (long long)den;
      return *this;
    }
    assign_big(mpq_class(mpz_from_i128(num), mpz_from_i128(den)));
    return *this;
  }
  assign_big(to_mpq() * o.to_mpq());
  return *this;
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw ZeroDenominator("division by zero rational");
  return *this *= o.inverse();
}

bool operator==(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
  return a.to_mpq() == b.to_mpq();
}

bool operator<(const Rat& a, const Rat& b) {
  if (!a.big_ && !b.big_) return i128(a.n_) * b.d_ < i128(b.n_) * a.d_;
  return a.to_mpq() < b.to_mpq();
}

Rat Rat::inverse() const {
  if (is_zero()) throw ZeroDenominator("inverse of zero");
  if (!big_) {
    Rat r;
    if (n_ > 0) { r.n_ = d_; r.d_ = n_; }
    else { r.n_ = -d_; r.d_ = -n_; }
    return r;
  }
  Rat r; r.assign_big(mpq_class(1) / *big_); return r;
}

Rat Rat::pow(unsigned e) const {
  Rat acc(1), base(*this);
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::string Rat::to_string() const {
  if (big_) {
    std::string s = big_->get_num().get_str();
    if (big_->get_den() != 1) s += "/" + big_->get_den().get_str();
    return s;
  }
  std::string s = std::to_string(n_);
  if (d_ != 1) s += "/" + std::to_string(d_);
  return s;
}

namespace {

void put_varint(std::string& out, unsigned long long v) {
  while (v >= 0x80) { out.push_back(char(0x80 | (v & 0x7f))); v >>= 7; }
  out.push_back(char(v));
}

unsigned long long get_varint(const std::string& in, size_t& pos) {
  unsigned long long v = 0;
  int shift = 0;
  for (;;) {
    if (pos >= in.size()) throw std::runtime_error("truncated varint");
    unsigned char b = (unsigned char)in[pos++];
    v |= (unsigned long long)(b & 0x7f) << shift;
    if (!(b & 0x80)) return v;
    shift += 7;
  }
}

}  // namespace

// First varint's low bit selects the path: 0 = small (zigzag numerator in the
// upper bits, then denominator varint), 1 = big (decimal string, length-prefixed).
void Rat::serialize(std::string& out) const {
  if (!big_) {
    unsigned long long zz = (static_cast<unsigned long long>(n_) << 1) ^
                            static_cast<unsigned long long>(n_ >> 63);
    put_varint(out, zz << 1);
    put_varint(out, (unsigned long long)d_);
  } else {
    put_varint(out, 1);
    std::string s = to_string();
    put_varint(out, s.size());
    out += s;
  }
}

Rat Rat::deserialize(const std::string& in, size_t& pos) {
  unsigned long long head = get_varint(in, pos);
  if ((head & 1) == 0) {
    unsigned long long zz = head >> 1;
    long long n = (long long)(zz >> 1) ^ -(long long)(zz & 1);
    long long d = (long long)get_varint(in, pos);
    Rat r;
    r.n_ = n;
    r.d_ = d;
    return r;
  }
  size_t len = (size_t)get_varint(in, pos);
  if (pos + len > in.size()) throw std::runtime_error("truncated rational");
  Rat r = Rat::from_string(in.substr(pos, len));
  pos += len;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

}  // namespace udk
