#pragma once

// Full rooted binary trees in a canonical parenthesized encoding: "." is a
// leaf and "(LR)" a caret with subtrees L and R, e.g. "((..).)".  The string
// is the value: equality, hashing and ordering all read it directly, and the
// tree algorithms below work on balanced substring views.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace distort::thompson {

namespace detail {

// Grammar: T := "." | "(" T T ")".  Returns the position one past the node
// starting at pos, or npos on a syntax error.
inline std::size_t scan_node(std::string_view s, std::size_t pos) {
  constexpr auto npos = std::string_view::npos;
  if (pos >= s.size()) return npos;
  if (s[pos] == '.') return pos + 1;
  if (s[pos] != '(') return npos;
  pos = scan_node(s, pos + 1);
  if (pos == npos) return npos;
  pos = scan_node(s, pos);
  if (pos == npos || pos >= s.size() || s[pos] != ')') return npos;
  return pos + 1;
}

inline bool valid_tree(std::string_view s) { return !s.empty() && scan_node(s, 0) == s.size(); }

}  // namespace detail

class BinaryTree {
 public:
  BinaryTree() : repr_(".") {}
  explicit BinaryTree(std::string repr) : repr_(std::move(repr)) {
    if (!detail::valid_tree(repr_))
      throw std::invalid_argument("malformed tree encoding '" + repr_ + "'");
  }

  static BinaryTree parse(std::string_view s) { return BinaryTree(std::string(s)); }

  const std::string& str() const { return repr_; }
  std::size_t carets() const {
    std::size_t n = 0;
    for (char c : repr_)
      if (c == '(') ++n;
    return n;
  }
  std::size_t leaves() const { return carets() + 1; }

  friend bool operator==(const BinaryTree&, const BinaryTree&) = default;
  friend auto operator<=>(const BinaryTree&, const BinaryTree&) = default;

  // Trusted internal constructor: `s` must already be a valid encoding.
  struct Trusted {};
  BinaryTree(Trusted, std::string s) : repr_(std::move(s)) {}

 private:
  std::string repr_;
};

namespace detail {

inline std::size_t subtree_end(std::string_view s, std::size_t pos) {
  if (s[pos] == '.') return pos + 1;
  std::size_t depth = 0;
  for (std::size_t i = pos; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    else if (s[i] == ')' && --depth == 0) return i + 1;
  }
  throw std::logic_error("unbalanced tree encoding");
}

// Children views of a caret "(LR)".
inline std::pair<std::string_view, std::string_view> children(std::string_view caret) {
  std::size_t mid = subtree_end(caret, 1);
  return {caret.substr(1, mid - 1), caret.substr(mid, caret.size() - 1 - mid)};
}

// Least common refinement of two trees.
inline void sup_into(std::string_view a, std::string_view b, std::string& out) {
  if (a == ".") { out += b; return; }
  if (b == ".") { out += a; return; }
  auto [al, ar] = children(a);
  auto [bl, br] = children(b);
  out += '(';
  sup_into(al, bl, out);
  sup_into(ar, br, out);
  out += ')';
}

inline std::string sup(std::string_view a, std::string_view b) {
  std::string out;
  out.reserve(a.size() + b.size());
  sup_into(a, b, out);
  return out;
}

// For refinement W of X, the subtree of W sitting at each leaf of X, in leaf
// order.  A "." entry means W did not refine that leaf.
inline void growth_at_leaves(std::string_view w, std::string_view x,
                             std::vector<std::string_view>& out) {
  if (x == ".") { out.push_back(w); return; }
  auto [wl, wr] = children(w);
  auto [xl, xr] = children(x);
  growth_at_leaves(wl, xl, out);
  growth_at_leaves(wr, xr, out);
}

// Replace leaf i of `target` by grafts[i].
inline void graft_into(std::string_view target, const std::vector<std::string_view>& grafts,
                       std::size_t& next_leaf, std::string& out) {
  if (target == ".") { out += grafts[next_leaf++]; return; }
  auto [l, r] = children(target);
  out += '(';
  graft_into(l, grafts, next_leaf, out);
  graft_into(r, grafts, next_leaf, out);
  out += ')';
}

inline std::string graft(std::string_view target, const std::vector<std::string_view>& grafts) {
  std::string out;
  std::size_t next_leaf = 0;
  graft_into(target, grafts, next_leaf, out);
  return out;
}

// Carets whose children are both leaves, as (leaf index of left child,
// character position of the caret).  These are exactly the "(..)" substrings.
inline std::vector<std::pair<std::size_t, std::size_t>> leaf_pair_carets(std::string_view s) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t dots = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '.') ++dots;
    if (s[i] == '(' && s.substr(i, 4) == "(..)") out.emplace_back(dots, i);
  }
  return out;
}

inline std::string remove_carets(std::string_view s, const std::vector<std::size_t>& char_positions) {
  std::string out;
  out.reserve(s.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < s.size();) {
    if (k < char_positions.size() && i == char_positions[k]) {
      out += '.';
      i += 4;
      ++k;
    } else {
      out += s[i++];
    }
  }
  return out;
}

}  // namespace detail

}  // namespace distort::thompson
