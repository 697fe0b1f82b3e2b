#ifndef ALLIANCE_TOOLS_CLI_HPP
#define ALLIANCE_TOOLS_CLI_HPP

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "alliance/alliance.hpp"

namespace alliance::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2, kResourceCap = 3 };

enum class Format { json, text, csv };

struct RunConfig {
  std::string family;
  int n = -1;
  std::string g6_path;
  std::string edges_path;
  int cap = kDefaultBruteForceCap;
  unsigned threads = 0;
  Format format = Format::json;
};

namespace detail {

using nlohmann::json;

inline std::optional<Family> parse_family(const std::string& s) {
  for (Family f : {Family::empty, Family::path, Family::cycle, Family::complete, Family::complete_minus_edge,
                   Family::star, Family::wheel})
    if (family_name(f) == s) return f;
  if (s == "e1") return Family::empty;
  return std::nullopt;
}

inline std::string slurp(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline Graph load_graph(const RunConfig& cfg, std::istream& in) {
  const int sources = !cfg.family.empty() + !cfg.g6_path.empty() + !cfg.edges_path.empty();
  if (sources != 1) throw ParseError("exactly one of --family, --g6, --edges is required");
  if (!cfg.family.empty()) {
    const auto f = parse_family(cfg.family);
    if (!f) throw ParseError("unknown family '" + cfg.family + "'");
    if (cfg.n < 0) throw ParseError("--family requires --n");
    if (cfg.family == "e1" && cfg.n != 1) throw ParseError("family e1 has order 1");
    try {
      return generate({*f, cfg.n});
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  if (!cfg.edges_path.empty()) return parse_edge_list(slurp(cfg.edges_path, in));
  const auto graphs = parse_graph6_corpus(slurp(cfg.g6_path, in));
  if (graphs.size() != 1) throw ParseError("--g6 for compute must hold exactly one graph");
  return graphs.front();
}

inline json poly_json(const AlliancePolynomial& p) {
  json j;
  j["order"] = p.order();
  if (p.is_zero()) {
    j["max_degree"] = nullptr;
    j["min_degree"] = nullptr;
  } else {
    const Degrees d = degrees(p);
    j["max_degree"] = d.max;
    j["min_degree"] = d.min;
  }
  j["coeffs"] = json::array();
  for (const auto& [e, c] : p.terms()) j["coeffs"].push_back(json::array({e, to_string(c)}));
  j["eval_at_one"] = to_string(eval_at_one(p));
  j["polynomial"] = to_text(p);
  return j;
}

inline void print_poly(std::ostream& out, const AlliancePolynomial& p, Format fmt, const json& extra = json::object()) {
  switch (fmt) {
    case Format::json: {
      json j = poly_json(p);
      for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
      out << j.dump(2) << '\n';
      break;
    }
    case Format::text:
      out << "order " << p.order() << '\n' << "A(x) = " << to_text(p) << '\n' << "A(1) = " << to_string(eval_at_one(p)) << '\n';
      break;
    case Format::csv:
      out << "exponent,alliance_index,coefficient\n";
      for (const auto& [e, c] : p.terms()) out << e << ',' << e - p.order() << ',' << to_string(c) << '\n';
      break;
  }
}

inline json report_json(const CheckReport& r) {
  json j;
  j["check"] = r.name;
  j["passed"] = r.passed();
  j["failures"] = r.failures();
  j["entries"] = json::array();
  for (const auto& e : r.entries) j["entries"].push_back({{"name", e.name}, {"passed", e.passed}, {"detail", e.detail}});
  return j;
}

inline int emit_report(std::ostream& out, const json& j) {
  out << j.dump(2) << '\n';
  return j.at("passed").get<bool>() ? kOk : kCheckFailed;
}

}  // namespace detail

/// Runs the command line. `env_cap` is the value of ALLIANCE_CAP, if set.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
               const char* env_cap = nullptr) {
  using detail::json;
  CLI::App app{"Alliance polynomials of simple graphs", "alliance"};
  app.require_subcommand(1);

  RunConfig cfg;
  if (env_cap) {
    try {
      cfg.cap = std::stoi(env_cap);
    } catch (const std::exception&) {
      err << "ALLIANCE_CAP is not an integer\n";
      return kInputError;
    }
  }

  auto add_common = [&](CLI::App* sub, bool with_input) {
    if (with_input) {
      sub->add_option("--family", cfg.family, "empty|path|cycle|complete|complete-minus-edge|star|wheel|e1");
      sub->add_option("--n", cfg.n, "Order of the family graph");
      sub->add_option("--g6", cfg.g6_path, "graph6 file ('-' for stdin)");
      sub->add_option("--edges", cfg.edges_path, "Edge-list file ('-' for stdin)");
    }
    sub->add_option("--cap", cfg.cap, "Brute-force order cap (default 24 or ALLIANCE_CAP)");
    sub->add_option("--threads", cfg.threads, "Worker threads, 0 = auto");
    sub->add_option("--format", cfg.format, "json|text|csv")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, Format>{{"json", Format::json}, {"text", Format::text}, {"csv", Format::csv}}));
  };

  auto* compute = app.add_subcommand("compute", "Alliance polynomial by exhaustive enumeration");
  add_common(compute, true);

  auto* closed = app.add_subcommand("closed-form", "Closed-form polynomial for wheel, cycle, complete or e1");
  add_common(closed, false);
  closed->add_option("--family", cfg.family)->required();
  closed->add_option("--n", cfg.n);

  auto* verify = app.add_subcommand("verify", "Verification harnesses");
  verify->require_subcommand(1);

  std::uint64_t seed = 20160101;
  int max_order = 10, family_max = 12, max_n = 16, order = 6, target_n = -1;
  bool allow_large = false;

  auto* v_join = verify->add_subcommand("join", "Join decomposition on random pairs and E_1 + C_{n-1}");
  add_common(v_join, false);
  int join_pairs = 100, max_total = 12, wheel_max = 12;
  v_join->add_option("--seed", seed);
  v_join->add_option("--pairs", join_pairs, "Random pairs");
  v_join->add_option("--max-total", max_total, "Bound on n1 + n2");
  v_join->add_option("--wheel-max", wheel_max, "Largest wheel order for E_1 + C_{n-1}");

  auto* v_lemma = verify->add_subcommand("lemma", "General coefficient properties on random graphs and families");
  add_common(v_lemma, false);
  int lemma_count = 500;
  v_lemma->add_option("--seed", seed);
  v_lemma->add_option("--count", lemma_count, "Random graphs");
  v_lemma->add_option("--max-order", max_order, "Largest random order");
  v_lemma->add_option("--family-max", family_max, "Largest family order");

  auto* v_char = verify->add_subcommand("characterize", "Wheel characterization over labeled graphs or a corpus");
  add_common(v_char, false);
  v_char->add_option("--order", order, "Sweep all labeled graphs of order 1..N");
  v_char->add_option("--g6", cfg.g6_path, "graph6 corpus file instead of the sweep");
  v_char->add_option("--target-n", target_n, "Wheel order to look for in a corpus file");
  v_char->add_flag("--allow-order-7", allow_large, "Permit the 2^21-graph sweep at order 7");

  auto* v_uni = verify->add_subcommand("unimodal", "Unimodality of even-order wheels");
  add_common(v_uni, false);
  int uni_max = 24;
  v_uni->add_option("--max", uni_max, "Largest even wheel order");

  auto* v_b = verify->add_subcommand("bcoeff", "b(n,k) formula against the string oracle and case split");
  add_common(v_b, false);
  v_b->add_option("--max-n", max_n);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kInputError;
  }

  if (cfg.cap < 0 || cfg.cap > kMaxOrder) {
    err << "cap must lie in [0, " << kMaxOrder << "]\n";
    return kInputError;
  }
  const EngineOptions opts{cfg.cap, cfg.threads};

  try {
    if (compute->parsed()) {
      const Graph g = detail::load_graph(cfg, in);
      detail::print_poly(out, alliance_polynomial(g, opts), cfg.format);
      return kOk;
    }

    if (closed->parsed()) {
      const auto fam = detail::parse_family(cfg.family);
      if (cfg.family == "e1") {
        detail::print_poly(out, e1_polynomial(), cfg.format);
        return kOk;
      }
      if (cfg.n < 0) throw ParseError("--n is required");
      if (fam == Family::cycle) {
        detail::print_poly(out, cycle_polynomial(cfg.n), cfg.format);
      } else if (fam == Family::complete) {
        detail::print_poly(out, complete_polynomial(cfg.n), cfg.format);
      } else if (fam == Family::wheel) {
        const AlliancePolynomial p = wheel_polynomial(cfg.n);
        const WheelCoefficientTable t = wheel_coefficients(cfg.n);
        json table = {{"xi", t.xi}, {"rows", json::array()}};
        for (const auto& [k, b] : t.b)
          table["rows"].push_back({{"k", k}, {"a", to_string(t.a.at(k))}, {"b", to_string(b)}});
        detail::print_poly(out, p, cfg.format, {{"wheel_table", table}});
        if (cfg.format == Format::text) {
          out << "xi = " << t.xi << '\n' << "k a b\n";
          for (const auto& [k, b] : t.b) out << k << ' ' << to_string(t.a.at(k)) << ' ' << to_string(b) << '\n';
        }
      } else {
        throw ParseError("closed forms exist for wheel, cycle, complete and e1 only");
      }
      return kOk;
    }

    if (v_join->parsed()) {
      if (max_total < 2 || max_total > cfg.cap) throw ParseError("--max-total must lie in [2, cap]");
      return detail::emit_report(out, detail::report_json(check_join_suite(join_pairs, max_total, wheel_max, seed, opts)));
    }
    if (v_lemma->parsed()) {
      if (max_order < 1) throw ParseError("--max-order must be positive");
      return detail::emit_report(out,
                                 detail::report_json(check_lemma_suite(lemma_count, max_order, family_max, seed, opts)));
    }
    if (v_uni->parsed()) {
      CheckReport rep{"unimodal", {}};
      rep.merge(check_wheel_unimodality(uni_max));
      rep.merge(check_a_dominates_b(uni_max, /*even_only=*/true));
      rep.merge(check_path_unimodality(10, opts));
      return detail::emit_report(out, detail::report_json(rep));
    }
    if (v_b->parsed()) {
      if (max_n > kStringOracleMaxOrder) throw ParseError("--max-n above string-oracle cap");
      return detail::emit_report(out, detail::report_json(check_bcoeff_identity(max_n)));
    }
    if (v_char->parsed()) {
      if (!cfg.g6_path.empty()) {
        if (target_n < 4) throw ParseError("--target-n >= 4 is required with --g6");
        const auto corpus = parse_graph6_corpus(detail::slurp(cfg.g6_path, in));
        const AlliancePolynomial target = wheel_polynomial(target_n);
        const CollisionReport rep = characterize(corpus, target, opts);
        json j;
        j["check"] = "characterize";
        j["target"] = to_text(target);
        j["groups"] = json::object();
        for (const auto& [terms, ids] : rep.groups) j["groups"][to_text(AlliancePolynomial(0, terms))] = ids;
        j["target_matches"] = rep.target_matches;
        j["skipped"] = json::array();
        for (const auto& [id, why] : rep.skipped) j["skipped"].push_back({{"id", id}, {"reason", why}});
        bool ok = true;
        for (auto id : rep.target_matches) ok = ok && corpus[id].order() == target_n && is_wheel_labeling(corpus[id]);
        j["passed"] = ok;
        return detail::emit_report(out, j);
      }
      if (order > kMaxSweepOrder) throw ParseError("--order above 7 needs a --g6 corpus");
      if (order == 7 && !allow_large) throw ParseError("--order 7 requires --allow-order-7");
      if (order < 4) throw ParseError("--order must be at least 4");
      return detail::emit_report(out, detail::report_json(check_wheel_characterization(1, order, opts)));
    }
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return kResourceCap;
  } catch (const ParseError& e) {
    err << "input: " << e.what() << '\n';
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << "input: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace alliance::cli

#endif  // ALLIANCE_TOOLS_CLI_HPP
