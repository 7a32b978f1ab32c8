#ifndef UDK_RATIONAL_HPP_
#define UDK_RATIONAL_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <iosfwd>
#include <gmpxx.h>

namespace udk {

// Exact rational scalar. Values that fit are kept as a reduced int64
// numerator/denominator pair; anything larger spills into an immutable
// GMP rational shared between copies. The representation is canonical:
// a value fits the small path iff it is stored there, so byte-level
// serialization of equal values is identical.
class Rat {
 public:
  Rat() : n_(0), d_(1) {}
  Rat(long long n) : n_(n), d_(1) {}
  Rat(long long n, long long d);
  explicit Rat(const mpq_class& q) { assign_big(q); }

  static Rat from_string(const std::string& s);  // "p" or "p/q", base 10

  bool is_big() const { return big_ != nullptr; }
  bool is_zero() const { return !big_ && n_ == 0; }
  bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
  bool is_integer() const;
  // sign: -1, 0, +1
  int sign() const;

  // small-path accessors; only valid when !is_big()
  long long num_small() const { return n_; }
  long long den_small() const { return d_; }
  mpq_class to_mpq() const;
  double to_double() const;
  // integer value; requires is_integer()
  long long to_int64() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
  friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
  friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
  friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

  friend bool operator==(const Rat& a, const Rat& b);
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b);

  Rat inverse() const;
  Rat pow(unsigned e) const;

  std::string to_string() const;  // "p" or "p/q"
  // canonical bytes, appended to out; equal values produce equal bytes
  void serialize(std::string& out) const;
  static Rat deserialize(const std::string& in, size_t& pos);

 private:
  void assign_big(const mpq_class& q);   // canonicalizes and shrinks if it fits
  void shrink();                         // big -> small when possible

  long long n_, d_;                      // reduced, d_ > 0
  std::shared_ptr<const mpq_class> big_; // canonical mpq when set
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace udk

#endif
