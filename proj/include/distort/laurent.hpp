#pragma once

// Integer Laurent polynomials in x localized at (1+x): a finite-support
// numerator over Z together with a power of (1+x) to divide by.  Canonical
// form keeps the numerator free of zero coefficients and, whenever the
// denominator power is positive, not divisible by (1+x); equality of
// canonical forms is then ring equality.

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "distort/bigint.hpp"

namespace distort::baumslag {

class LaurentLocalized {
 public:
  LaurentLocalized() = default;
  explicit LaurentLocalized(const Int& constant) {
    if (constant != 0) num_.emplace(0, constant);
  }

  static LaurentLocalized monomial(const Int& exponent, const Int& coeff = 1) {
    LaurentLocalized p;
    if (coeff != 0) p.num_.emplace(exponent, coeff);
    return p;
  }

  bool is_zero() const { return num_.empty(); }
  bool is_polynomial() const { return den_pow_ == 0; }
  const std::map<Int, Int>& numerator() const { return num_; }
  const Int& denominator_power() const { return den_pow_; }

  friend bool operator==(const LaurentLocalized&, const LaurentLocalized&) = default;

  friend LaurentLocalized operator+(const LaurentLocalized& a, const LaurentLocalized& b) {
    // Common denominator max(d_a, d_b); the deficient side is scaled up.
    const Int d = a.den_pow_ > b.den_pow_ ? a.den_pow_ : b.den_pow_;
    LaurentLocalized r = a.scaled_to(d);
    for (const auto& [e, c] : b.scaled_to(d).num_) r.add_term(e, c);
    r.den_pow_ = d;
    r.canonicalize();
    return r;
  }

  friend LaurentLocalized operator-(const LaurentLocalized& a) {
    LaurentLocalized r = a;
    for (auto& [e, c] : r.num_) c = -c;
    return r;
  }

  friend LaurentLocalized operator-(const LaurentLocalized& a, const LaurentLocalized& b) {
    return a + (-b);
  }

  // Multiplication by x^k: exponent shift.
  LaurentLocalized shifted(const Int& k) const {
    LaurentLocalized r;
    r.den_pow_ = den_pow_;
    for (const auto& [e, c] : num_) r.num_.emplace(e + k, c);
    return r;
  }

  // Multiplication by (1+x)^k, k of either sign; negative powers go into the
  // denominator symbolically and are cancelled where possible.
  LaurentLocalized one_plus_x_times(const Int& k) const {
    LaurentLocalized r = *this;
    if (k >= 0) {
      Int cancel = k < r.den_pow_ ? k : r.den_pow_;
      r.den_pow_ -= cancel;
      r.expand_by_one_plus_x(k - cancel);
    } else {
      r.den_pow_ += -k;
      r.canonicalize();
    }
    return r;
  }

  std::string str() const {
    if (num_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : num_) {
      if (!out.empty() && c > 0) out += "+";
      if (e == 0) {
        out += c.str();
      } else {
        if (c == -1) out += "-";
        else if (c != 1) out += c.str();
        out += "x";
        if (e != 1) out += "^" + e.str();
      }
    }
    if (den_pow_ != 0) out = "(" + out + ")/(1+x)^" + den_pow_.str();
    return out;
  }

 private:
  std::map<Int, Int> num_;
  Int den_pow_{0};

  void add_term(const Int& e, const Int& c) {
    auto it = num_.find(e);
    if (it == num_.end()) {
      if (c != 0) num_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second == 0) num_.erase(it);
    }
  }

  // Value representation with denominator power exactly d >= den_pow_.
  LaurentLocalized scaled_to(const Int& d) const {
    LaurentLocalized r = *this;
    r.expand_by_one_plus_x(d - den_pow_);
    r.den_pow_ = d;
    return r;
  }

  void expand_by_one_plus_x(Int times) {
    if (times > 1000000) throw std::length_error("(1+x)-power expansion too large");
    for (; times > 0; --times) {
      std::map<Int, Int> next = num_;
      for (const auto& [e, c] : num_) {
        auto it = next.find(e + 1);
        if (it == next.end()) {
          next.emplace(e + 1, c);
        } else {
          it->second += c;
          if (it->second == 0) next.erase(it);
        }
      }
      num_ = std::move(next);
    }
  }

  // A Laurent polynomial is divisible by (1+x) iff it vanishes at x = -1.
  bool divisible_by_one_plus_x() const {
    Int value = 0;
    for (const auto& [e, c] : num_) value += (e % 2 == 0) ? c : -c;
    return value == 0;
  }

  void divide_by_one_plus_x() {
    if (num_.empty()) return;
    const Int lo = num_.begin()->first;
    const Int hi = num_.rbegin()->first;
    if (hi - lo > 1000000) throw std::length_error("(1+x)-division span too large");
    // Ascending synthetic division: q_e = c_e - q_{e-1}.
    std::map<Int, Int> quotient;
    Int carry = 0;
    for (Int e = lo; e < hi; ++e) {
      auto it = num_.find(e);
      Int c = it == num_.end() ? Int(0) : it->second;
      Int q = c - carry;
      if (q != 0) quotient.emplace(e, q);
      carry = q;
    }
    num_ = std::move(quotient);
  }

  void canonicalize() {
    while (den_pow_ > 0 && divisible_by_one_plus_x()) {
      if (num_.empty()) {
        den_pow_ = 0;
        break;
      }
      divide_by_one_plus_x();
      den_pow_ -= 1;
    }
  }
};

}  // namespace distort::baumslag
