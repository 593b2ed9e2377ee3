#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace mt {

// Exact height value: a nonnegative-by-convention rational, or +infinity.
// All arithmetic is exact; inf - inf is rejected.
class height {
 public:
  height() : inf_(false), v_(0) {}
  height(long n) : inf_(false), v_(n) {}
  explicit height(mpq_class v) : inf_(false), v_(std::move(v)) { v_.canonicalize(); }

  static height infinity() {
    height h;
    h.inf_ = true;
    return h;
  }

  // Accepts "inf", "n", "-n", "n/d" and exact decimals like "3.25".
  static height parse(const std::string& s);

  bool is_infinite() const { return inf_; }
  bool is_finite() const { return !inf_; }

  const mpq_class& value() const {
    if (inf_) throw std::domain_error("height: value() on +inf");
    return v_;
  }

  std::string str() const;

  height half() const {
    if (inf_) throw std::domain_error("height: half() on +inf");
    return height(v_ / 2);
  }

  friend height operator+(const height& a, const height& b) {
    if (a.inf_ || b.inf_) return infinity();
    return height(a.v_ + b.v_);
  }

  // inf - finite = inf; inf - inf is an error; finite - inf is an error.
  friend height operator-(const height& a, const height& b) {
    if (b.inf_) throw std::domain_error("height: subtraction of +inf");
    if (a.inf_) return infinity();
    return height(a.v_ - b.v_);
  }

  friend bool operator==(const height& a, const height& b) {
    if (a.inf_ != b.inf_) return false;
    return a.inf_ || a.v_ == b.v_;
  }

  friend std::strong_ordering operator<=>(const height& a, const height& b) {
    if (a.inf_ && b.inf_) return std::strong_ordering::equal;
    if (a.inf_) return std::strong_ordering::greater;
    if (b.inf_) return std::strong_ordering::less;
    int c = cmp(a.v_, b.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  bool is_negative() const { return !inf_ && sgn(v_) < 0; }
  bool is_zero() const { return !inf_ && sgn(v_) == 0; }

 private:
  bool inf_;
  mpq_class v_;
};

inline height abs_diff(const height& a, const height& b) {
  return a >= b ? a - b : b - a;
}

}  // namespace mt
