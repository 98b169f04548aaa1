#pragma once

// Baumslag's finitely presented metabelian group G = <a,s,t | [s,t], [a^t,a],
// a^s = a a^t> realized by affine maps p -> x^i (1+x)^j p + q over the ring
// of integer Laurent polynomials localized at (1+x).  The subgroup of
// elements with j = 0 and polynomial translation part is the wreath product
// Z wr Z; conjugation by s convolves its counters with (1, 1).

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "distort/bigint.hpp"
#include "distort/laurent.hpp"
#include "distort/words.hpp"
#include "distort/wreath.hpp"

namespace distort::baumslag {

struct GElement {
  LaurentLocalized q;  // translation part
  Int t_exp{0};        // i
  Int s_exp{0};        // j

  friend bool operator==(const GElement&, const GElement&) = default;
  bool is_identity() const { return q.is_zero() && t_exp == 0 && s_exp == 0; }
};

inline GElement gen_a() { return {LaurentLocalized(1), 0, 0}; }
inline GElement gen_t() { return {LaurentLocalized(), 1, 0}; }
inline GElement gen_s() { return {LaurentLocalized(), 0, 1}; }

inline GElement multiply(const GElement& g, const GElement& h) {
  return {h.q + g.q.shifted(h.t_exp).one_plus_x_times(h.s_exp), g.t_exp + h.t_exp,
          g.s_exp + h.s_exp};
}

inline GElement inverse(const GElement& g) {
  return {-(g.q.shifted(-g.t_exp).one_plus_x_times(-g.s_exp)), -g.t_exp, -g.s_exp};
}

inline GElement power(const GElement& g, const Int& k) {
  // a^k, t^k, s^k and mixtures: repeated squaring keeps word evaluation
  // cheap for large exponents of the pure generators.
  GElement base = k < 0 ? inverse(g) : g;
  GElement acc;
  for (Int n = abs_int(k); n > 0; n >>= 1) {
    if ((n & 1) != 0) acc = multiply(acc, base);
    base = multiply(base, base);
    if (n == 1) break;
  }
  return acc;
}

inline GElement evaluate_word(std::string_view text) {
  GElement acc;
  for (const auto& [base, exp] : words::parse(text, "ast")) {
    GElement g = base == 'a' ? gen_a() : (base == 's' ? gen_s() : gen_t());
    acc = multiply(acc, power(g, exp));
  }
  return acc;
}

class NotInSubgroupH : public std::domain_error {
 public:
  explicit NotInSubgroupH(const std::string& what) : std::domain_error(what) {}
};

class NegativePower : public std::domain_error {
 public:
  NegativePower() : std::domain_error("s-conjugation is only defined for nonnegative powers") {}
};

// Counters {n: c_n}, cursor m  ->  (sum c_n x^n, m, 0).  Note this pairs the
// two multiplications contravariantly: it carries products to reversed
// products (see to_wreath round trip and the s-conjugation coherence tests).
inline GElement from_wreath(const wreath::Element& w) {
  LaurentLocalized q;
  for (const auto& [pos, c] : w.counters) q = q + LaurentLocalized::monomial(pos, c);
  return {std::move(q), w.cursor, 0};
}

inline wreath::Element to_wreath(const GElement& g) {
  if (g.s_exp != 0)
    throw NotInSubgroupH("element has nonzero s-exponent");
  if (!g.q.is_polynomial())
    throw NotInSubgroupH("translation part keeps a (1+x) denominator");
  wreath::Element w;
  w.cursor = g.t_exp;
  for (const auto& [e, c] : g.q.numerator()) w.counters.emplace(e, c);
  return w;
}

// Conjugation by s^k on the wreath side: counters convolved k times with
// (1, 1), i.e. multiplied by (1+x)^k; the cursor is untouched.
inline wreath::Element s_conjugate(const wreath::Element& w, const Int& k) {
  if (k < 0) throw NegativePower();
  LaurentLocalized counters;
  for (const auto& [pos, c] : w.counters)
    counters = counters + LaurentLocalized::monomial(pos, c);
  counters = counters.one_plus_x_times(k);
  wreath::Element r;
  r.cursor = w.cursor;
  for (const auto& [e, c] : counters.numerator()) r.counters.emplace(e, c);
  return r;
}

struct DistortionRow {
  Int n;
  Int len_g_witness;  // 2n + 1, realized by the word s^-n a s^n
  Int len_h;          // 2n + 2^n, the intrinsic length of a^{s^n} in Z wr Z
};

// Exponential distortion table.  Each row is certified twice: the witness
// word evaluates to the same model element as the conjugated counters, and
// the intrinsic length comes from the closed-form word metric.
inline std::vector<DistortionRow> distortion_table(int max_n) {
  std::vector<DistortionRow> rows;
  wreath::Element a;
  a.counters.emplace(0, 1);
  for (int n = 0; n <= max_n; ++n) {
    wreath::Element conj = s_conjugate(a, n);
    GElement witness = multiply(multiply(power(gen_s(), -n), gen_a()), power(gen_s(), n));
    if (witness != from_wreath(conj))
      throw std::logic_error("s-conjugation witness mismatch at n=" + std::to_string(n));
    rows.push_back({n, 2 * Int(n) + 1, wreath::word_length(conj)});
  }
  return rows;
}

// JSON serialization {"num": {"e": c, ...}, "den_pow": d, "t": i, "s": j}.
inline std::string to_json(const GElement& g) {
  std::string out = "{\"num\":{";
  bool first = true;
  for (const auto& [e, c] : g.q.numerator()) {
    if (!first) out += ',';
    first = false;
    out += '"' + e.str() + "\":" + c.str();
  }
  out += "},\"den_pow\":" + g.q.denominator_power().str() + ",\"t\":" + g.t_exp.str() +
         ",\"s\":" + g.s_exp.str() + "}";
  return out;
}

inline std::string canonical_key(const GElement& g) {
  std::string out = "{";
  bool first = true;
  for (const auto& [e, c] : g.q.numerator()) {
    if (!first) out += ',';
    first = false;
    out += e.str() + ":" + c.str();
  }
  return out + "}/" + g.q.denominator_power().str() + ";" + g.t_exp.str() + ";" + g.s_exp.str();
}

}  // namespace distort::baumslag
