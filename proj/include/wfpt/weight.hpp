#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <ostream>
#include <string>
#include <string_view>

namespace wfpt {

// Exact rational weight. Input weights are positive; residual weights created
// by weight-rewriting reductions may drop to zero or below.
class Weight {
 public:
  Weight() = default;
  template <std::integral T>
  Weight(T v) : value_(static_cast<long>(v)) {}  // NOLINT(implicit)
  Weight(long num, long den);
  explicit Weight(const mpq_class& v) : value_(v) { value_.canonicalize(); }

  // Accepts "p/q" or a bare integer "p". Throws std::invalid_argument.
  static Weight parse(std::string_view text);

  // Canonical "p/q" form, denominator always present.
  std::string str() const;
  double to_double() const { return value_.get_d(); }
  // Largest integer not exceeding the value.
  long floor() const;
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  const mpq_class& raw() const { return value_; }

  Weight& operator+=(const Weight& o) {
    value_ += o.value_;
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    value_ -= o.value_;
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Weight& a, const Weight& b) {
    return Weight(mpq_class(a.value_ * b.value_));
  }
  friend Weight operator-(const Weight& a) { return Weight(mpq_class(-a.value_)); }

  friend bool operator==(const Weight& a, const Weight& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

 private:
  mpq_class value_{0};
};

}  // namespace wfpt
