#pragma once

// Oracle adapters: each group exposes its identity, its inversion-closed
// generator list, right multiplication by a generator, and an injective
// canonical serialization.

#include <array>
#include <cstddef>
#include <string>

#include "distort/baumslag.hpp"
#include "distort/oracle.hpp"
#include "distort/thompson.hpp"
#include "distort/wreath.hpp"

namespace distort::models {

struct WreathGroup {
  using Element = wreath::Element;

  Element identity() const { return {}; }
  std::size_t generator_count() const { return 4; }
  std::string generator_label(std::size_t gi) const {
    static const std::array<const char*, 4> labels{"a", "A", "t", "T"};
    return labels.at(gi);
  }
  Element apply(const Element& e, std::size_t gi) const {
    return wreath::apply_generator(e, wreath::kGenerators.at(gi));
  }
  std::string serialize(const Element& e) const { return wreath::canonical_key(e); }
};

struct ThompsonGroup {
  using Element = thompson::TreePair;

  Element identity() const { return thompson::identity_pair(); }
  std::size_t generator_count() const { return 4; }
  std::string generator_label(std::size_t gi) const {
    static const std::array<const char*, 4> labels{"x0", "X0", "x1", "X1"};
    return labels.at(gi);
  }
  Element apply(const Element& e, std::size_t gi) const {
    return thompson::multiply(e, thompson::generator_pair(thompson::kFGenerators.at(gi)));
  }
  std::string serialize(const Element& e) const { return thompson::canonical_key(e); }
};

struct BaumslagGroup {
  using Element = baumslag::GElement;

  Element identity() const { return {}; }
  std::size_t generator_count() const { return 6; }
  std::string generator_label(std::size_t gi) const {
    static const std::array<const char*, 6> labels{"a", "A", "s", "S", "t", "T"};
    return labels.at(gi);
  }
  Element apply(const Element& e, std::size_t gi) const {
    using baumslag::gen_a;
    using baumslag::gen_s;
    using baumslag::gen_t;
    static const std::array<Element, 6> gens{gen_a(),           baumslag::inverse(gen_a()),
                                             gen_s(),           baumslag::inverse(gen_s()),
                                             gen_t(),           baumslag::inverse(gen_t())};
    return baumslag::multiply(e, gens.at(gi));
  }
  std::string serialize(const Element& e) const { return baumslag::canonical_key(e); }
};

}  // namespace distort::models
