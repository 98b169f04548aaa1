#pragma once

// Command-line front end.  Subcommands map one-to-one onto library
// operations; every output is deterministic for identical inputs, integers
// are exact, and tables stream row by row in csv or json form.
//
//   zz {len|nf|geodesic|mult}     f {mult|nf|carets|weight|len}
//   embed {phi|report}            bg {conj-s|table|eval}
//   oracle {ball|distance|verify}

#include <algorithm>
#include <cstddef>
#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "distort/baumslag.hpp"
#include "distort/bigint.hpp"
#include "distort/embedding.hpp"
#include "distort/models.hpp"
#include "distort/oracle.hpp"
#include "distort/thompson.hpp"
#include "distort/wreath.hpp"

namespace distort::cli {

struct Options {
  std::string format = "csv";
  int radius = 12;
  int max_len = 3;
  int max_n = 20;
  std::size_t limit = oracle::kDefaultLimit;
  unsigned threads = 1;
  unsigned seed = 20240101;
};

namespace detail {

inline std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

inline std::string fraction(const Int& num, const Int& den) {
  Int g = boost::multiprecision::gcd(num, den);
  Int n = num / g, d = den / g;
  return d == 1 ? n.str() : n.str() + "/" + d.str();
}

// Scalar results print bare in csv mode and wrapped in json mode.
inline void emit_scalar(std::ostream& out, const Options& opt, const std::string& value,
                        bool quoted) {
  if (opt.format == "json") {
    out << "{\"result\":" << (quoted ? "\"" + json_escape(value) + "\"" : value) << "}\n";
  } else {
    out << value << "\n";
  }
}

inline void emit_unknown(std::ostream& out, const Options& opt, int radius) {
  if (opt.format == "json")
    out << "{\"result\":null,\"max_radius\":" << radius << "}\n";
  else
    out << "unknown(" << radius << ")\n";
}

// Level-synchronous walk that keeps elements next to their distances, for
// the verify checks that need to recompute invariants per element.
template <oracle::GroupModel M>
std::vector<std::pair<typename M::Element, int>> walk_ball(const M& model, int radius) {
  std::vector<std::pair<typename M::Element, int>> out{{model.identity(), 0}};
  std::unordered_map<std::string, int> seen{{model.serialize(model.identity()), 0}};
  std::size_t level_begin = 0;
  for (int d = 1; d <= radius; ++d) {
    std::size_t level_end = out.size();
    for (std::size_t idx = level_begin; idx < level_end; ++idx)
      for (std::size_t gi = 0; gi < model.generator_count(); ++gi) {
        auto next = model.apply(out[idx].first, gi);
        if (seen.emplace(model.serialize(next), d).second) out.emplace_back(std::move(next), d);
      }
    level_begin = level_end;
  }
  return out;
}

template <oracle::GroupModel M>
void emit_ball(const M& model, std::ostream& out, const Options& opt) {
  oracle::Ball ball = oracle::ball(model, opt.radius, opt.limit, opt.threads);
  std::vector<const std::pair<const std::string, int>*> rows;
  rows.reserve(ball.size());
  for (const auto& kv : ball.distances) rows.push_back(&kv);
  std::sort(rows.begin(), rows.end(), [](const auto* a, const auto* b) {
    if (a->second != b->second) return a->second < b->second;
    return a->first < b->first;
  });
  if (opt.format == "json") {
    out << "{\"radius\":" << ball.radius << ",\"sphere_sizes\":[";
    for (std::size_t r = 0; r < ball.sphere_sizes.size(); ++r)
      out << (r ? "," : "") << ball.sphere_sizes[r];
    out << "],\"elements\":[";
    for (std::size_t i = 0; i < rows.size(); ++i)
      out << (i ? "," : "") << "\n  [\"" << json_escape(rows[i]->first) << "\","
          << rows[i]->second << "]";
    out << "\n]}\n";
  } else {
    out << "serialization,distance\n";
    for (const auto* row : rows) out << csv_quote(row->first) << ',' << row->second << '\n';
    for (std::size_t r = 0; r < ball.sphere_sizes.size(); ++r)
      out << "# sphere " << r << ": " << ball.sphere_sizes[r] << "\n";
  }
}

inline std::string nf_json(const wreath::NormalForm& nf) {
  std::string out = "{\"variant\":\"";
  out += nf.variant == wreath::NormalForm::Variant::rf ? "rf" : "lf";
  out += "\",\"positive\":[";
  bool first = true;
  for (const auto& [i, e] : nf.positive) {
    out += std::string(first ? "" : ",") + "[" + i.str() + "," + e.str() + "]";
    first = false;
  }
  out += "],\"negative\":[";
  first = true;
  for (const auto& [j, f] : nf.negative) {
    out += std::string(first ? "" : ",") + "[" + j.str() + "," + f.str() + "]";
    first = false;
  }
  return out + "],\"cursor\":" + nf.cursor.str() + "}";
}

}  // namespace detail

// Runs one invocation.  Returns 0 on success, 1 for domain errors
// (diagnostic on err), 2 for usage errors.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  Options opt;
  std::string word, word2, group, variant = "rf";
  std::string conj_power = "0";

  CLI::App app{"exact word metrics for Z wr Z, Thompson's group F, and Baumslag's group"};
  app.fallthrough();
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--radius", opt.radius, "breadth-first search radius");
  app.add_option("--max-len", opt.max_len, "maximum wreath length to enumerate");
  app.add_option("--max-n", opt.max_n, "last row of the distortion table");
  app.add_option("--limit", opt.limit, "element cap for breadth-first search");
  app.add_option("--threads", opt.threads, "worker threads for frontier expansion");
  app.add_option("--seed", opt.seed, "seed for sampled verification checks");
  app.require_subcommand(1);

  std::function<int()> action;

  // --- zz ------------------------------------------------------------
  auto* zz = app.add_subcommand("zz", "the wreath product Z wr Z over {a, t}");
  zz->require_subcommand(1);
  auto* zz_len = zz->add_subcommand("len", "word length of an element");
  zz_len->add_option("word", word)->required();
  zz_len->callback([&] {
    action = [&] {
      detail::emit_scalar(out, opt, wreath::word_length(wreath::evaluate_word(word)).str(), false);
      return 0;
    };
  });
  auto* zz_nf = zz->add_subcommand("nf", "normal form of an element");
  zz_nf->add_option("word", word)->required();
  zz_nf->add_option("--variant", variant)->check(CLI::IsMember({"rf", "lf"}));
  zz_nf->callback([&] {
    action = [&] {
      auto nf = wreath::normal_form(wreath::evaluate_word(word),
                                    variant == "lf" ? wreath::NormalForm::Variant::lf
                                                    : wreath::NormalForm::Variant::rf);
      if (opt.format == "json")
        out << detail::nf_json(nf) << "\n";
      else
        out << wreath::to_string(nf) << "\n";
      return 0;
    };
  });
  auto* zz_geo = zz->add_subcommand("geodesic", "minimal generator word for an element");
  zz_geo->add_option("word", word)->required();
  zz_geo->callback([&] {
    action = [&] {
      detail::emit_scalar(out, opt, wreath::geodesic_word(wreath::evaluate_word(word)), true);
      return 0;
    };
  });
  auto* zz_mult = zz->add_subcommand("mult", "product of two elements");
  zz_mult->add_option("left", word)->required();
  zz_mult->add_option("right", word2)->required();
  zz_mult->callback([&] {
    action = [&] {
      out << wreath::to_json(
                 wreath::multiply(wreath::evaluate_word(word), wreath::evaluate_word(word2)))
          << "\n";
      return 0;
    };
  });

  // --- f ---------------------------------------------------------------
  auto* f = app.add_subcommand("f", "Thompson's group F over {x0, x1}");
  f->require_subcommand(1);
  auto* f_mult = f->add_subcommand("mult", "product, as a normal form");
  f_mult->add_option("left", word)->required();
  f_mult->add_option("right", word2)->required();
  f_mult->callback([&] {
    action = [&] {
      auto p = thompson::multiply(thompson::evaluate_x_word(word),
                                  thompson::evaluate_x_word(word2));
      detail::emit_scalar(out, opt, thompson::to_string(thompson::tree_pair_to_normal_form(p)),
                          true);
      return 0;
    };
  });
  auto* f_nf = f->add_subcommand("nf", "normal form of a word in the x_i");
  f_nf->add_option("word", word)->required();
  f_nf->callback([&] {
    action = [&] {
      auto p = thompson::evaluate_x_word(word);
      detail::emit_scalar(out, opt, thompson::to_string(thompson::tree_pair_to_normal_form(p)),
                          true);
      return 0;
    };
  });
  auto* f_carets = f->add_subcommand("carets", "caret count of the reduced diagram");
  f_carets->add_option("word", word)->required();
  f_carets->callback([&] {
    action = [&] {
      detail::emit_scalar(out, opt,
                          std::to_string(thompson::caret_count(thompson::evaluate_x_word(word))),
                          false);
      return 0;
    };
  });
  auto* f_weight = f->add_subcommand("weight", "total caret pairing weight");
  f_weight->add_option("word", word)->required();
  f_weight->callback([&] {
    action = [&] {
      detail::emit_scalar(out, opt,
                          thompson::fordham_weight(thompson::evaluate_x_word(word)).str(), false);
      return 0;
    };
  });
  auto* f_len = f->add_subcommand("len", "exact word length via breadth-first search");
  f_len->add_option("word", word)->required();
  f_len->callback([&] {
    action = [&] {
      auto d = oracle::distance(models::ThompsonGroup{}, thompson::evaluate_x_word(word),
                                opt.radius, opt.limit, opt.threads);
      if (d)
        detail::emit_scalar(out, opt, std::to_string(*d), false);
      else
        detail::emit_unknown(out, opt, opt.radius);
      return 0;
    };
  });

  // --- embed -----------------------------------------------------------
  auto* embed_cmd = app.add_subcommand("embed", "the embedding of Z wr Z into F");
  embed_cmd->require_subcommand(1);
  auto* embed_phi = embed_cmd->add_subcommand("phi", "image tree pair of a wreath element");
  embed_phi->add_option("word", word)->required();
  embed_phi->callback([&] {
    action = [&] {
      out << thompson::to_json(embedding::phi(wreath::evaluate_word(word))) << "\n";
      return 0;
    };
  });
  auto* embed_report = embed_cmd->add_subcommand("report", "distortion records for a wreath ball");
  embed_report->callback([&] {
    action = [&] {
      auto records = embedding::distortion_report(opt.max_len, opt.radius, opt.limit, opt.threads);
      if (opt.format == "json")
        embedding::write_json(records, out);
      else
        embedding::write_csv(records, out);
      return 0;
    };
  });

  // --- bg ----------------------------------------------------------------
  auto* bg = app.add_subcommand("bg", "Baumslag's metabelian group over {a, s, t}");
  bg->require_subcommand(1);
  auto* bg_conj = bg->add_subcommand("conj-s", "conjugate a wreath element by s^k");
  bg_conj->add_option("word", word)->required();
  bg_conj->add_option("power", conj_power)->required();
  bg_conj->callback([&] {
    action = [&] {
      if (!words::is_integer_literal(conj_power))
        throw std::invalid_argument("conjugation power must be an integer");
      out << wreath::to_json(baumslag::s_conjugate(wreath::evaluate_word(word), Int(conj_power)))
          << "\n";
      return 0;
    };
  });
  auto* bg_eval = bg->add_subcommand("eval", "evaluate a word in the affine model");
  bg_eval->add_option("word", word)->required();
  bg_eval->callback([&] {
    action = [&] {
      out << baumslag::to_json(baumslag::evaluate_word(word)) << "\n";
      return 0;
    };
  });
  auto* bg_table = bg->add_subcommand("table", "exponential distortion table");
  bg_table->callback([&] {
    action = [&] {
      auto rows = baumslag::distortion_table(opt.max_n);
      if (opt.format == "json") {
        out << "[";
        for (std::size_t i = 0; i < rows.size(); ++i)
          out << (i ? "," : "") << "\n  {\"n\":" << rows[i].n.str() << ",\"len_G_witness\":"
              << rows[i].len_g_witness.str() << ",\"len_H\":" << rows[i].len_h.str()
              << ",\"ratio\":\"" << detail::fraction(rows[i].len_h, rows[i].len_g_witness)
              << "\"}";
        out << "\n]\n";
      } else {
        out << "n,len_G_witness,len_H,ratio\n";
        for (const auto& r : rows)
          out << r.n.str() << ',' << r.len_g_witness.str() << ',' << r.len_h.str() << ','
              << detail::fraction(r.len_h, r.len_g_witness) << '\n';
      }
      return 0;
    };
  });

  // --- oracle -------------------------------------------------------------
  auto* orc = app.add_subcommand("oracle", "breadth-first Cayley-ball computations");
  orc->require_subcommand(1);
  auto* orc_ball = orc->add_subcommand("ball", "full ball with distances and sphere sizes");
  orc_ball->add_option("group", group)->required()->check(CLI::IsMember({"zz", "f", "bg"}));
  orc_ball->callback([&] {
    action = [&] {
      if (group == "zz")
        detail::emit_ball(models::WreathGroup{}, out, opt);
      else if (group == "f")
        detail::emit_ball(models::ThompsonGroup{}, out, opt);
      else
        detail::emit_ball(models::BaumslagGroup{}, out, opt);
      return 0;
    };
  });
  auto* orc_dist = orc->add_subcommand("distance", "distance from the identity to a word's value");
  orc_dist->add_option("group", group)->required()->check(CLI::IsMember({"zz", "f", "bg"}));
  orc_dist->add_option("word", word)->required();
  orc_dist->callback([&] {
    action = [&] {
      std::optional<int> d;
      if (group == "zz")
        d = oracle::distance(models::WreathGroup{}, wreath::evaluate_word(word), opt.radius,
                             opt.limit, opt.threads);
      else if (group == "f")
        d = oracle::distance(models::ThompsonGroup{}, thompson::evaluate_x_word(word), opt.radius,
                             opt.limit, opt.threads);
      else
        d = oracle::distance(models::BaumslagGroup{}, baumslag::evaluate_word(word), opt.radius,
                             opt.limit, opt.threads);
      if (d)
        detail::emit_scalar(out, opt, std::to_string(*d), false);
      else
        detail::emit_unknown(out, opt, opt.radius);
      return 0;
    };
  });
  auto* orc_verify = orc->add_subcommand("verify", "audit formulas and invariants against BFS");
  orc_verify->add_option("group", group)->required()->check(CLI::IsMember({"zz", "f", "bg"}));
  orc_verify->callback([&] {
    action = [&] {
      std::mt19937 rng(opt.seed);
      if (group == "zz") {
        auto ball = detail::walk_ball(models::WreathGroup{}, opt.radius);
        for (const auto& [e, d] : ball)
          if (wreath::word_length(e) != d) {
            err << "MISMATCH: formula " << wreath::word_length(e).str() << " != BFS " << d
                << " for " << wreath::canonical_key(e) << "\n";
            return 1;
          }
        std::uniform_int_distribution<std::size_t> pick(0, ball.size() - 1);
        for (int trial = 0; trial < 200; ++trial) {
          const auto& u = ball[pick(rng)].first;
          const auto& v = ball[pick(rng)].first;
          if (wreath::word_length(wreath::multiply(u, v)) >
              wreath::word_length(u) + wreath::word_length(v)) {
            err << "MISMATCH: triangle inequality failed\n";
            return 1;
          }
        }
        out << "OK: formula = BFS on " << ball.size() << " elements\n";
      } else if (group == "f") {
        auto ball = detail::walk_ball(models::ThompsonGroup{}, opt.radius);
        for (const auto& [e, d] : ball) {
          if (thompson::normal_form_to_tree_pair(thompson::tree_pair_to_normal_form(e)) != e) {
            err << "MISMATCH: normal form round trip failed for " << thompson::canonical_key(e)
                << "\n";
            return 1;
          }
        }
        out << "OK: normal-form round trip on " << ball.size() << " elements\n";
      } else {
        auto ball = detail::walk_ball(models::BaumslagGroup{}, opt.radius);
        std::unordered_map<std::string, int> dist;
        for (const auto& [e, d] : ball) dist.emplace(baumslag::canonical_key(e), d);
        for (const auto& [e, d] : ball) {
          auto it = dist.find(baumslag::canonical_key(baumslag::inverse(e)));
          if (it == dist.end() || it->second != d) {
            err << "MISMATCH: inversion symmetry failed for " << baumslag::canonical_key(e)
                << "\n";
            return 1;
          }
        }
        out << "OK: inversion symmetry on " << ball.size() << " elements\n";
      }
      return 0;
    };
  });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }
  try {
    return action();
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return 1;
  }
}

}  // namespace distort::cli
