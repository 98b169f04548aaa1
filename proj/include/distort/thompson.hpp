#pragma once

// Thompson's group F as reduced tree pair diagrams (S, T) with S the
// negative and T the positive tree.  Multiplication composes diagrams by
// refining p's negative tree against q's positive tree and reducing, words
// fold left to right, and a^b means b^-1 a b throughout.  Normal forms over
// the infinite generating set {x_i} are read off via leaf exponents.

#include <array>
#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "distort/bigint.hpp"
#include "distort/tree.hpp"
#include "distort/words.hpp"

namespace distort::thompson {

struct TreePair {
  BinaryTree neg;  // S
  BinaryTree pos;  // T

  friend bool operator==(const TreePair&, const TreePair&) = default;
  friend auto operator<=>(const TreePair&, const TreePair&) = default;
  bool is_identity() const { return neg.str() == "." && pos.str() == "."; }
};

inline TreePair identity_pair() { return {}; }

inline TreePair inverse(const TreePair& p) { return {p.pos, p.neg}; }

// Cancel caret pairs covering matching adjacent leaves until none remain.
// The removable "(..)" spans found in one scan are pairwise disjoint, so all
// common matches cancel in a single pass.
inline TreePair reduce(const BinaryTree& neg, const BinaryTree& pos) {
  if (neg.leaves() != pos.leaves())
    throw std::invalid_argument("tree pair with mismatched leaf counts: " + neg.str() + " vs " +
                                pos.str());
  std::string s = neg.str();
  std::string t = pos.str();
  for (;;) {
    auto sn = detail::leaf_pair_carets(s);
    auto tn = detail::leaf_pair_carets(t);
    std::vector<std::size_t> s_remove, t_remove;
    std::size_t si = 0, ti = 0;
    while (si < sn.size() && ti < tn.size()) {
      if (sn[si].first == tn[ti].first) {
        s_remove.push_back(sn[si++].second);
        t_remove.push_back(tn[ti++].second);
      } else if (sn[si].first < tn[ti].first) {
        ++si;
      } else {
        ++ti;
      }
    }
    if (s_remove.empty()) break;
    s = detail::remove_carets(s, s_remove);
    t = detail::remove_carets(t, t_remove);
  }
  return {BinaryTree(BinaryTree::Trusted{}, std::move(s)), BinaryTree(BinaryTree::Trusted{}, std::move(t))};
}

inline TreePair reduce(const TreePair& p) { return reduce(p.neg, p.pos); }

// Diagram composition: the right factor acts first.
inline TreePair multiply(const TreePair& p, const TreePair& q) {
  const std::string& meet_a = p.neg.str();
  const std::string& meet_b = q.pos.str();
  std::string w = detail::sup(meet_a, meet_b);

  std::vector<std::string_view> grow_p;
  detail::growth_at_leaves(w, meet_a, grow_p);
  std::string pos2 = detail::graft(p.pos.str(), grow_p);

  std::vector<std::string_view> grow_q;
  grow_q.clear();
  detail::growth_at_leaves(w, meet_b, grow_q);
  std::string neg2 = detail::graft(q.neg.str(), grow_q);

  return reduce(BinaryTree(BinaryTree::Trusted{}, std::move(neg2)),
                BinaryTree(BinaryTree::Trusted{}, std::move(pos2)));
}

enum class FGen { X0, X0Inv, X1, X1Inv };

inline constexpr std::array<FGen, 4> kFGenerators{FGen::X0, FGen::X0Inv, FGen::X1, FGen::X1Inv};

inline TreePair generator_pair(FGen g) {
  static const TreePair x0{BinaryTree::parse("(.(..))"), BinaryTree::parse("((..).)")};
  static const TreePair x1{BinaryTree::parse("(.(.(..)))"), BinaryTree::parse("(.((..).))")};
  switch (g) {
    case FGen::X0: return x0;
    case FGen::X0Inv: return inverse(x0);
    case FGen::X1: return x1;
    case FGen::X1Inv: return inverse(x1);
  }
  throw std::logic_error("unreachable");
}

// x_n for the infinite generating set, built by x_{n+1} = x_n^{x_0}.
inline TreePair xgen(std::size_t n) {
  static const std::size_t kMaxIndex = 100000;
  if (n > kMaxIndex) throw std::invalid_argument("generator index too large");
  if (n == 0) return generator_pair(FGen::X0);
  if (n == 1) return generator_pair(FGen::X1);
  TreePair x0 = generator_pair(FGen::X0);
  TreePair x0i = inverse(x0);
  TreePair cur = generator_pair(FGen::X1);
  for (std::size_t i = 1; i < n; ++i) cur = multiply(multiply(x0i, cur), x0);
  return cur;
}

inline std::size_t caret_count(const TreePair& p) { return p.pos.carets(); }

// --- leaf exponents and normal forms -------------------------------------

// Exponent of each leaf: length of its maximal ascending chain of left
// edges, shortened by one when the chain tops out on the right side of the
// tree (nodes reached from the root by right edges only, root included).
inline std::vector<int> leaf_exponents(const BinaryTree& tree) {
  std::string_view s = tree.str();
  std::vector<int> exps;
  std::vector<char> phase;  // per open caret: 0 inside left child, 1 inside right
  auto child_done = [&] {
    if (!phase.empty() && phase.back() == 0) phase.back() = 1;
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(') {
      phase.push_back(0);
    } else if (c == '.') {
      int h = 0;
      for (auto it = phase.rbegin(); it != phase.rend() && *it == 0; ++it) ++h;
      int exp = h;
      if (h > 0) {
        bool top_on_right_side = true;
        for (std::size_t k = 0; k + h < phase.size(); ++k)
          if (phase[k] == 0) top_on_right_side = false;
        if (top_on_right_side) --exp;
      }
      exps.push_back(exp);
      child_done();
    } else {  // ')'
      phase.pop_back();
      child_done();
    }
  }
  return exps;
}

struct FNormalForm {
  // Positive part x_{i1}^{r1} x_{i2}^{r2} ... with i1 < i2 < ..., r > 0;
  // the negative part is applied inverted in descending index order.
  std::vector<std::pair<std::size_t, Int>> positive;
  std::vector<std::pair<std::size_t, Int>> negative;

  friend bool operator==(const FNormalForm&, const FNormalForm&) = default;
  bool empty() const { return positive.empty() && negative.empty(); }
};

inline std::vector<std::pair<std::size_t, Int>> exponent_terms(const BinaryTree& tree) {
  std::vector<std::pair<std::size_t, Int>> terms;
  auto exps = leaf_exponents(tree);
  for (std::size_t leaf = 0; leaf < exps.size(); ++leaf)
    if (exps[leaf] > 0) terms.emplace_back(leaf, exps[leaf]);
  return terms;
}

inline FNormalForm tree_pair_to_normal_form(const TreePair& p) {
  return {exponent_terms(p.pos), exponent_terms(p.neg)};
}

inline void validate(const FNormalForm& nf) {
  auto check = [](const std::vector<std::pair<std::size_t, Int>>& part) {
    for (std::size_t k = 0; k < part.size(); ++k) {
      if (part[k].second <= 0) throw std::invalid_argument("normal form exponent must be positive");
      if (k > 0 && part[k - 1].first >= part[k].first)
        throw std::invalid_argument("normal form indices must be strictly increasing");
    }
  };
  check(nf.positive);
  check(nf.negative);
}

inline TreePair power(const TreePair& base, const Int& exp) {
  TreePair factor = exp < 0 ? inverse(base) : base;
  TreePair acc = identity_pair();
  for (Int k = abs_int(exp); k > 0; --k) acc = multiply(acc, factor);
  return acc;
}

inline TreePair normal_form_to_tree_pair(const FNormalForm& nf) {
  validate(nf);
  TreePair acc = identity_pair();
  for (const auto& [index, exp] : nf.positive) acc = multiply(acc, power(xgen(index), exp));
  for (auto it = nf.negative.rbegin(); it != nf.negative.rend(); ++it)
    acc = multiply(acc, power(xgen(it->first), -it->second));
  return acc;
}

// --- word syntax: tokens x<i> or x<i>^<k>, uppercase X for inverses -------

inline std::string to_string(const FNormalForm& nf) {
  std::string out;
  auto term = [&](std::size_t index, const Int& exp) {
    if (!out.empty()) out += ' ';
    out += "x" + std::to_string(index);
    if (exp != 1) out += "^" + exp.str();
  };
  for (const auto& [index, exp] : nf.positive) term(index, exp);
  for (auto it = nf.negative.rbegin(); it != nf.negative.rend(); ++it)
    term(it->first, -it->second);
  return out;
}

inline TreePair evaluate_x_word(std::string_view text) {
  TreePair acc = identity_pair();
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string tok(text.substr(pos, end - pos));
    pos = end;

    if (tok[0] != 'x' && tok[0] != 'X')
      throw std::invalid_argument("unknown generator in token '" + tok + "'");
    bool inverted = tok[0] == 'X';
    std::size_t caret = tok.find('^');
    std::string index_part = tok.substr(1, caret == std::string::npos ? caret : caret - 1);
    if (index_part.empty() || index_part.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed generator index in token '" + tok + "'");
    std::size_t index = std::stoul(index_part);
    Int exp = 1;
    if (caret != std::string::npos) {
      std::string exp_part = tok.substr(caret + 1);
      if (!words::is_integer_literal(exp_part))
        throw std::invalid_argument("malformed exponent in token '" + tok + "'");
      exp = Int(exp_part);
    }
    if (inverted) exp = -exp;
    if (Int limit = 1000000; abs_int(exp) > limit)
      throw std::invalid_argument("exponent too large in token '" + tok + "'");
    acc = multiply(acc, power(xgen(index), exp));
  }
  return acc;
}

// --- caret classification and pairing weights -----------------------------

enum class CaretType { L0, LL, I0, IR, R0, RStar };

inline std::string_view to_string(CaretType t) {
  switch (t) {
    case CaretType::L0: return "L0";
    case CaretType::LL: return "LL";
    case CaretType::I0: return "I0";
    case CaretType::IR: return "IR";
    case CaretType::R0: return "R0";
    case CaretType::RStar: return "R*";
  }
  return "?";
}

namespace detail {

struct CaretFacts {
  bool on_left_spine = false;   // path to root all left edges (root included)
  bool on_right_spine = false;  // non-root, path all right edges
  bool right_child_is_caret = false;
};

inline void classify_rec(std::string_view node, bool all_left, bool all_right, bool is_root,
                         std::size_t& next_infix, std::vector<CaretFacts>& out) {
  if (node == ".") return;
  auto [l, r] = children(node);
  classify_rec(l, all_left, false, false, next_infix, out);
  CaretFacts facts;
  facts.on_left_spine = all_left;
  facts.on_right_spine = all_right && !is_root;
  facts.right_child_is_caret = r[0] == '(';
  out[next_infix++] = facts;
  classify_rec(r, false, all_right, false, next_infix, out);
}

}  // namespace detail

// Types of the carets of one tree, in infix order.
inline std::vector<CaretType> caret_types(const BinaryTree& tree) {
  std::size_t n = tree.carets();
  std::vector<detail::CaretFacts> facts(n);
  std::size_t next_infix = 0;
  detail::classify_rec(tree.str(), true, true, true, next_infix, facts);
  std::vector<CaretType> types(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (k == 0)
      types[k] = CaretType::L0;
    else if (k == n - 1)
      types[k] = CaretType::R0;
    else if (facts[k].on_left_spine)
      types[k] = CaretType::LL;
    else if (facts[k].on_right_spine)
      types[k] = CaretType::RStar;
    else
      types[k] = facts[k].right_child_is_caret ? CaretType::IR : CaretType::I0;
  }
  return types;
}

// Caret k of the negative tree is paired with caret k of the positive tree.
inline std::vector<std::pair<CaretType, CaretType>> classify_carets(const TreePair& p) {
  auto neg = caret_types(p.neg);
  auto pos = caret_types(p.pos);
  std::vector<std::pair<CaretType, CaretType>> pairs(neg.size());
  for (std::size_t k = 0; k < neg.size(); ++k) pairs[k] = {neg[k], pos[k]};
  return pairs;
}

class UnsupportedPairing : public std::domain_error {
 public:
  UnsupportedPairing(CaretType neg, CaretType pos)
      : std::domain_error("caret pairing (" + std::string(to_string(neg)) + "," +
                          std::string(to_string(pos)) + ") has no tabulated weight") {}
};

// Weight table for the pairing types arising on the embedded wreath family.
inline Int pairing_weight(CaretType neg, CaretType pos) {
  using enum CaretType;
  if (neg == L0 && pos == L0) return 0;
  if (neg == LL && pos == LL) return 2;
  if (neg == R0 && pos == R0) return 0;
  if (neg == RStar && pos == RStar) return 2;
  if (neg == I0 && pos == I0) return 2;
  if (neg == I0 && pos == IR) return 4;
  if (neg == IR && pos == I0) return 4;
  throw UnsupportedPairing(neg, pos);
}

inline Int fordham_weight(const TreePair& p) {
  Int total = 0;
  for (const auto& [neg, pos] : classify_carets(p)) total += pairing_weight(neg, pos);
  return total;
}

// Tree pair JSON, {"neg": "<paren>", "pos": "<paren>"}.
inline std::string to_json(const TreePair& p) {
  return "{\"neg\":\"" + p.neg.str() + "\",\"pos\":\"" + p.pos.str() + "\"}";
}

inline std::string canonical_key(const TreePair& p) { return p.neg.str() + "|" + p.pos.str(); }

}  // namespace distort::thompson
