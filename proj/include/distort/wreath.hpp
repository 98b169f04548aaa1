#pragma once

// Exact arithmetic and the word metric for the wreath product Z wr Z with
// generating set {a, t}: an element is a finite-support family of integer
// counters indexed by Z together with a cursor position.  Reading a word
// left to right as instructions, `a` bumps the counter under the cursor and
// `t` moves the cursor one step to the right; a_n denotes t^n a t^-n, the
// counter bump at position n.

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "distort/bigint.hpp"
#include "distort/words.hpp"

namespace distort::wreath {

struct Element {
  std::map<Int, Int> counters;  // position -> counter, zero entries never stored
  Int cursor{0};

  bool operator==(const Element&) const = default;
  bool is_identity() const { return counters.empty() && cursor == 0; }
};

enum class Gen { A, AInv, T, TInv };

inline constexpr std::array<Gen, 4> kGenerators{Gen::A, Gen::AInv, Gen::T, Gen::TInv};

inline void add_counter(std::map<Int, Int>& counters, const Int& pos, const Int& delta) {
  if (delta == 0) return;
  auto it = counters.find(pos);
  if (it == counters.end()) {
    counters.emplace(pos, delta);
  } else {
    it->second += delta;
    if (it->second == 0) counters.erase(it);
  }
}

inline Element apply_generator(Element w, Gen g) {
  switch (g) {
    case Gen::A: add_counter(w.counters, w.cursor, 1); break;
    case Gen::AInv: add_counter(w.counters, w.cursor, -1); break;
    case Gen::T: w.cursor += 1; break;
    case Gen::TInv: w.cursor -= 1; break;
  }
  return w;
}

// Group law of the semidirect product: v's counters land shifted by u's
// cursor, so evaluating concatenated instruction words agrees with multiply.
inline Element multiply(const Element& u, const Element& v) {
  Element r = u;
  r.cursor = u.cursor + v.cursor;
  for (const auto& [pos, c] : v.counters) add_counter(r.counters, pos + u.cursor, c);
  return r;
}

inline Element inverse(const Element& w) {
  Element r;
  r.cursor = -w.cursor;
  for (const auto& [pos, c] : w.counters) r.counters.emplace(pos - w.cursor, -c);
  return r;
}

inline Element evaluate_word(std::string_view text) {
  Element w;
  for (const auto& [base, exp] : words::parse(text, "at")) {
    if (base == 'a') {
      add_counter(w.counters, w.cursor, exp);
    } else {
      w.cursor += exp;
    }
  }
  return w;
}

// Normal forms: both variants list each side's terms in order of increasing
// distance from the origin; `rf` visits the nonnegative side first when read
// as instructions, `lf` the negative side.
struct NormalForm {
  enum class Variant { rf, lf };
  Variant variant{Variant::rf};
  std::vector<std::pair<Int, Int>> positive;  // (index i >= 0, exponent != 0), ascending i
  std::vector<std::pair<Int, Int>> negative;  // (j >= 1, exponent != 0), ascending j; term a_{-j}
  Int cursor{0};

  bool operator==(const NormalForm&) const = default;
};

inline NormalForm normal_form(const Element& w, NormalForm::Variant variant = NormalForm::Variant::rf) {
  NormalForm nf;
  nf.variant = variant;
  nf.cursor = w.cursor;
  for (const auto& [pos, c] : w.counters) {
    if (pos >= 0)
      nf.positive.emplace_back(pos, c);
    else
      nf.negative.emplace_back(-pos, c);
  }
  std::sort(nf.negative.begin(), nf.negative.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return nf;
}

inline Element evaluate(const NormalForm& nf) {
  Element w;
  w.cursor = nf.cursor;
  for (const auto& [i, e] : nf.positive) w.counters.emplace(i, e);
  for (const auto& [j, f] : nf.negative) w.counters.emplace(-j, f);
  return w;
}

// Rightmost nonnegative / leftmost negative support indices with the
// degenerate convention i_k = 0 (resp. j_l = 0) for an empty side.
inline Int rightmost_index(const Element& w) {
  if (w.counters.empty()) return 0;
  Int top = w.counters.rbegin()->first;
  return top > 0 ? top : Int(0);
}

inline Int leftmost_depth(const Element& w) {
  if (w.counters.empty()) return 0;
  Int bottom = w.counters.begin()->first;
  return bottom < 0 ? Int(-bottom) : Int(0);
}

// Word length with respect to {a, t}: counter work plus the cheaper of the
// two cursor tours (left excursion first or right excursion first).
inline Int word_length(const Element& w) {
  Int sum = 0;
  for (const auto& [pos, c] : w.counters) sum += abs_int(c);
  Int ik = rightmost_index(w);
  Int jl = leftmost_depth(w);
  const Int& m = w.cursor;
  Int left_first = 2 * jl + ik + abs_int(m - ik);
  Int right_first = 2 * ik + jl + abs_int(m + jl);
  return sum + std::min(left_first, right_first);
}

namespace detail {

inline void emit_token(std::string& out, char letter, const Int& exp) {
  if (exp == 0) return;
  if (!out.empty()) out += ' ';
  out += letter;
  if (exp != 1) {
    out += '^';
    out += exp.str();
  }
}

}  // namespace detail

// A minimal-length instruction word for w, built from the right-first form
// when the cursor ends at or left of the origin and left-first otherwise.
// Ties at cursor 0 deterministically use right-first.
inline std::string geodesic_word(const Element& w) {
  NormalForm nf = normal_form(w, w.cursor > 0 ? NormalForm::Variant::lf : NormalForm::Variant::rf);
  std::string out;
  Int at = 0;
  auto visit = [&](const Int& pos, const Int& exp) {
    detail::emit_token(out, 't', pos - at);
    at = pos;
    detail::emit_token(out, 'a', exp);
  };
  if (nf.variant == NormalForm::Variant::rf) {
    for (const auto& [i, e] : nf.positive) visit(i, e);
    for (const auto& [j, f] : nf.negative) visit(-j, f);
  } else {
    for (const auto& [j, f] : nf.negative) visit(-j, f);
    for (const auto& [i, e] : nf.positive) visit(i, e);
  }
  detail::emit_token(out, 't', w.cursor - at);
  return out;
}

// Display form in the letters a_n, e.g. "a_2^3 a_3^-2 a_4 a_-3^2 t^-2".
inline std::string to_string(const NormalForm& nf) {
  std::string out;
  auto term = [&](const Int& pos, const Int& exp) {
    if (!out.empty()) out += ' ';
    out += "a_" + pos.str();
    if (exp != 1) out += "^" + exp.str();
  };
  auto positive = [&] {
    for (const auto& [i, e] : nf.positive) term(i, e);
  };
  auto negative = [&] {
    for (const auto& [j, f] : nf.negative) term(-j, f);
  };
  if (nf.variant == NormalForm::Variant::rf) {
    positive();
    negative();
  } else {
    negative();
    positive();
  }
  if (nf.cursor != 0) {
    if (!out.empty()) out += ' ';
    out += "t";
    if (nf.cursor != 1) out += "^" + nf.cursor.str();
  }
  return out;
}

// JSON serialization, {"counters": {"n": c_n, ...}, "cursor": m}.
inline std::string to_json(const Element& w) {
  std::string out = "{\"counters\":{";
  bool first = true;
  for (const auto& [pos, c] : w.counters) {
    if (!first) out += ',';
    first = false;
    out += '"' + pos.str() + "\":" + c.str();
  }
  out += "},\"cursor\":" + w.cursor.str() + "}";
  return out;
}

// Compact injective key for hashing and ball exports.
inline std::string canonical_key(const Element& w) {
  std::string out = "{";
  bool first = true;
  for (const auto& [pos, c] : w.counters) {
    if (!first) out += ',';
    first = false;
    out += pos.str() + ":" + c.str();
  }
  out += "};" + w.cursor.str();
  return out;
}

}  // namespace distort::wreath
