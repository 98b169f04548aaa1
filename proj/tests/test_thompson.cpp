#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "distort/thompson.hpp"

using namespace distort;
using namespace distort::thompson;

namespace {

TreePair conj(const TreePair& g, const TreePair& by) {
  return multiply(multiply(inverse(by), g), by);
}

// All tree encodings with the given caret count.
std::vector<std::string> all_trees(int carets) {
  if (carets == 0) return {"."};
  std::vector<std::string> out;
  for (int left = 0; left < carets; ++left)
    for (const auto& l : all_trees(left))
      for (const auto& r : all_trees(carets - 1 - left)) out.push_back("(" + l + r + ")");
  return out;
}

// Every way of cancelling one removable caret pair, for the confluence check.
std::vector<std::pair<BinaryTree, BinaryTree>> single_cancellations(const BinaryTree& neg,
                                                                    const BinaryTree& pos) {
  std::vector<std::pair<BinaryTree, BinaryTree>> out;
  auto sn = detail::leaf_pair_carets(neg.str());
  auto tn = detail::leaf_pair_carets(pos.str());
  for (const auto& [leaf_s, pos_s] : sn)
    for (const auto& [leaf_t, pos_t] : tn)
      if (leaf_s == leaf_t)
        out.emplace_back(BinaryTree(detail::remove_carets(neg.str(), {pos_s})),
                         BinaryTree(detail::remove_carets(pos.str(), {pos_t})));
  return out;
}

void all_reduction_orders(const BinaryTree& neg, const BinaryTree& pos,
                          std::set<std::string>& results) {
  auto steps = single_cancellations(neg, pos);
  if (steps.empty()) {
    results.insert(neg.str() + "|" + pos.str());
    return;
  }
  for (const auto& [n, p] : steps) all_reduction_orders(n, p, results);
}

std::mt19937 rng(20250810);

TreePair random_element(int letters) {
  std::uniform_int_distribution<int> pick(0, 3);
  TreePair acc = identity_pair();
  for (int i = 0; i < letters; ++i)
    acc = multiply(acc, generator_pair(kFGenerators[pick(rng)]));
  return acc;
}

}  // namespace

TEST_CASE("generator diagrams") {
  TreePair x0 = generator_pair(FGen::X0);
  CHECK(x0.neg.str() == "(.(..))");
  CHECK(x0.pos.str() == "((..).)");
  CHECK(caret_count(x0) == 2);

  TreePair x1 = generator_pair(FGen::X1);
  CHECK(caret_count(x1) == 3);
  CHECK(generator_pair(FGen::X0Inv) == inverse(x0));
  CHECK(multiply(x0, generator_pair(FGen::X0Inv)).is_identity());
  CHECK(multiply(x1, generator_pair(FGen::X1Inv)).is_identity());
}

TEST_CASE("finite presentation relators") {
  TreePair x0 = xgen(0), x1 = xgen(1);
  TreePair x2 = conj(x1, x0);
  TreePair x3 = conj(x2, x0);
  TreePair x4 = conj(x3, x0);
  CHECK(conj(x2, x1) == x3);
  CHECK(conj(x3, x1) == x4);
}

TEST_CASE("infinite presentation relators up to index 7") {
  for (int n = 1; n <= 6; ++n)
    for (int i = 0; i < n; ++i) CHECK(conj(xgen(n), xgen(i)) == xgen(n + 1));
}

TEST_CASE("multiplication basics") {
  for (int trial = 0; trial < 50; ++trial) {
    TreePair p = random_element(8), q = random_element(8), r = random_element(8);
    CHECK(multiply(p, identity_pair()) == p);
    CHECK(multiply(identity_pair(), p) == p);
    CHECK(multiply(p, inverse(p)).is_identity());
    CHECK(multiply(multiply(p, q), r) == multiply(p, multiply(q, r)));
  }
}

TEST_CASE("reduce undoes shared expansion") {
  for (int trial = 0; trial < 40; ++trial) {
    TreePair p = random_element(6);
    // Attach one caret at the same leaf of both trees: same element, unreduced.
    std::uniform_int_distribution<int> leaf_pick(0, static_cast<int>(p.neg.leaves()) - 1);
    std::size_t leaf = leaf_pick(rng);
    std::vector<std::string_view> grafts(p.neg.leaves(), ".");
    grafts[leaf] = "(..)";
    BinaryTree neg(detail::graft(p.neg.str(), grafts));
    BinaryTree pos(detail::graft(p.pos.str(), grafts));
    CHECK(reduce(neg, pos) == p);
  }
}

TEST_CASE("reduce collapses identity expansions") {
  for (const auto& t : all_trees(4)) {
    BinaryTree tree(t);
    CHECK(reduce(tree, tree).is_identity());
  }
}

TEST_CASE("reduce rejects mismatched leaf counts") {
  CHECK_THROWS_AS(reduce(BinaryTree::parse("(..)"), BinaryTree::parse(".")),
                  std::invalid_argument);
}

TEST_CASE("reduction is confluent on small pairs") {
  // Exhaustive: every removal order of every pair with up to 3 carets per
  // tree ends at the same reduced diagram.
  for (int carets = 1; carets <= 3; ++carets) {
    auto trees = all_trees(carets);
    for (const auto& s : trees)
      for (const auto& t : trees) {
        std::set<std::string> ends;
        all_reduction_orders(BinaryTree(s), BinaryTree(t), ends);
        CHECK(ends.size() == 1);
        TreePair reduced = reduce(BinaryTree(s), BinaryTree(t));
        CHECK(*ends.begin() == canonical_key(reduced));
      }
  }
  // Spot-check bigger random unreduced pairs against two random orders.
  for (int trial = 0; trial < 10; ++trial) {
    TreePair p = random_element(5);
    std::vector<std::string_view> grafts(p.neg.leaves(), ".");
    grafts[0] = "((..).)";
    grafts[grafts.size() - 1] = "(..)";
    BinaryTree neg(detail::graft(p.neg.str(), grafts));
    BinaryTree pos(detail::graft(p.pos.str(), grafts));
    std::set<std::string> ends;
    all_reduction_orders(neg, pos, ends);
    CHECK(ends.size() == 1);
    CHECK(*ends.begin() == canonical_key(reduce(neg, pos)));
  }
}

TEST_CASE("leaf exponents") {
  CHECK(leaf_exponents(BinaryTree::parse("(..)")) == std::vector<int>{0, 0});
  CHECK(leaf_exponents(BinaryTree::parse("((..).)")) == std::vector<int>{1, 0, 0});
  CHECK(leaf_exponents(BinaryTree::parse("(.(.(..)))")) == std::vector<int>{0, 0, 0, 0});
  CHECK(leaf_exponents(BinaryTree::parse("(.((..).))")) == std::vector<int>{0, 1, 0, 0});
}

TEST_CASE("normal forms of the standard generators") {
  for (int n = 0; n <= 6; ++n) {
    FNormalForm nf = tree_pair_to_normal_form(xgen(n));
    REQUIRE(nf.positive.size() == 1);
    CHECK(nf.negative.empty());
    CHECK(nf.positive[0] == std::pair<std::size_t, Int>{n, 1});
    CHECK(to_string(nf) == "x" + std::to_string(n));
  }
}

TEST_CASE("normal form round trip on a long mixed word") {
  const char* word = "x0^2 x1 x2 x4 x5 x7 x8 x9^-1 x7^-1 x3^-1 x2^-1 x0^-2";
  TreePair p = evaluate_x_word(word);
  FNormalForm nf = tree_pair_to_normal_form(p);
  CHECK(to_string(nf) == word);
  CHECK(normal_form_to_tree_pair(nf) == p);
}

TEST_CASE("identity has the empty normal form") {
  CHECK(tree_pair_to_normal_form(identity_pair()).empty());
  CHECK(normal_form_to_tree_pair(FNormalForm{}).is_identity());
  CHECK(to_string(FNormalForm{}).empty());
}

TEST_CASE("normal form round trip on random elements") {
  for (int trial = 0; trial < 60; ++trial) {
    TreePair p = random_element(10);
    CHECK(normal_form_to_tree_pair(tree_pair_to_normal_form(p)) == p);
  }
}

TEST_CASE("malformed normal forms are rejected") {
  FNormalForm bad;
  bad.positive = {{2, 1}, {1, 1}};
  CHECK_THROWS_AS(normal_form_to_tree_pair(bad), std::invalid_argument);
  bad.positive = {{1, -2}};
  CHECK_THROWS_AS(normal_form_to_tree_pair(bad), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_x_word("x"), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_x_word("y0"), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_x_word("x0^"), std::invalid_argument);
}

TEST_CASE("caret counts") {
  CHECK(caret_count(identity_pair()) == 0);
  CHECK(caret_count(generator_pair(FGen::X0)) == 2);
  CHECK(caret_count(generator_pair(FGen::X1)) == 3);
}

TEST_CASE("caret classification") {
  auto pairs = classify_carets(generator_pair(FGen::X0));
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0] == std::pair{CaretType::L0, CaretType::L0});
  CHECK(pairs[1] == std::pair{CaretType::R0, CaretType::R0});

  // Exactly one type per caret; L0 and R0 occur exactly once in any tree
  // with at least two carets, and the leftmost caret is always L0.
  for (int trial = 0; trial < 40; ++trial) {
    TreePair p = random_element(9);
    if (caret_count(p) < 2) continue;
    for (const BinaryTree* tree : {&p.neg, &p.pos}) {
      auto types = caret_types(*tree);
      CHECK(std::count(types.begin(), types.end(), CaretType::L0) == 1);
      CHECK(std::count(types.begin(), types.end(), CaretType::R0) == 1);
      CHECK(types.front() == CaretType::L0);
      CHECK(types.back() == CaretType::R0);
    }
  }
}

TEST_CASE("pairing weights") {
  CHECK(pairing_weight(CaretType::L0, CaretType::L0) == 0);
  CHECK(pairing_weight(CaretType::R0, CaretType::R0) == 0);
  CHECK(pairing_weight(CaretType::LL, CaretType::LL) == 2);
  CHECK(pairing_weight(CaretType::RStar, CaretType::RStar) == 2);
  CHECK(pairing_weight(CaretType::I0, CaretType::I0) == 2);
  CHECK(pairing_weight(CaretType::I0, CaretType::IR) == 4);
  CHECK(pairing_weight(CaretType::IR, CaretType::I0) == 4);
  CHECK_THROWS_AS(pairing_weight(CaretType::L0, CaretType::R0), UnsupportedPairing);
  CHECK(fordham_weight(identity_pair()) == 0);
  CHECK(fordham_weight(generator_pair(FGen::X0)) == 0);
}

TEST_CASE("tree parsing and serialization") {
  CHECK(BinaryTree::parse("((..).)").str() == "((..).)");
  CHECK_THROWS_AS(BinaryTree::parse("(.)"), std::invalid_argument);
  CHECK_THROWS_AS(BinaryTree::parse("((..)"), std::invalid_argument);
  CHECK_THROWS_AS(BinaryTree::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(BinaryTree::parse("(..)x"), std::invalid_argument);
  CHECK(to_json(generator_pair(FGen::X0)) == "{\"neg\":\"(.(..))\",\"pos\":\"((..).)\"}");
}
