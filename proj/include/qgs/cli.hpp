#pragma once

// Command-line front end: `qgs <subcommand> ... [--json]`.
//
// Exit codes: 0 success, 1 a checked identity failed, 2 invalid input or usage.
// JSON reports carry "schema_version" and keep a fixed key order so the same
// invocation always produces the same bytes (see docs/json_schema.md).

#include <qgs/cfrac.hpp>
#include <qgs/kkalg.hpp>
#include <qgs/ktheory_p2.hpp>
#include <qgs/markov.hpp>
#include <qgs/ncdef.hpp>
#include <qgs/singularity.hpp>
#include <qgs/smoothing.hpp>
#include <qgs/verify.hpp>
#include <qgs/wpp.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace qgs::cli {

inline constexpr int schema_version = 1;

using Json = nlohmann::ordered_json;

enum ExitCode : int { ok = 0, invariant_failed = 1, invalid_input = 2 };

inline Json to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

inline Json to_json(const std::vector<Integer>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_json(x));
  return out;
}

inline Json to_json(const Rational& q) { return Json(to_string(q)); }

inline Json to_json(const ClassTData& t) { return Json{{"r", to_json(t.r)}, {"a", to_json(t.a)}, {"s", to_json(t.s)}}; }

inline Integer parse_integer(const std::string& text, const char* what) {
  bool valid = !text.empty();
  for (std::size_t i = 0; i < text.size(); ++i)
    valid = valid && (std::isdigit(static_cast<unsigned char>(text[i])) || (i == 0 && text[i] == '-' && text.size() > 1));
  if (!valid) throw InvalidInput(std::string(what) + ": not an integer: '" + text + "'");
  return Integer(text);
}

inline Json hj_report(const Integer& num, const Integer& den) {
  auto e = hj_expand(num, den);
  std::span<const Integer> terms(e.terms);
  Json out;
  out["terms"] = to_json(e.terms);
  out["value"] = to_json(hj_evaluate(terms));
  out["continuant"] = to_json(continuant(terms));
  out["tail_continuant"] = to_json(continuant(terms.subspan(1)));
  out["rank_sequence"] = to_json(rank_sequence(terms).values);
  return out;
}

inline Json kk_report(const Integer& r, const Integer& a) {
  auto c = kk_exponents_for_singularity(r, a);
  auto p = kk_relations(c);
  auto basis = kk_basis(p);
  Json out;
  out["singularity"] = to_string(CyclicQuotient{r, 1, a});
  out["expansion"] = r.str() + "/" + Integer(r - a).str();
  out["exponents"] = c;
  Json forbidden = Json::array();
  for (const auto& w : p.forbidden) forbidden.push_back(to_string(w));
  out["forbidden"] = forbidden;
  Json words = Json::array();
  for (const auto& w : basis.words) words.push_back(to_string(w));
  out["basis"] = words;
  out["dimension"] = to_json(basis.dimension);
  out["hilbert"] = to_json(basis.hilbert);
  out["dimension_equals_r"] = basis.dimension == r;
  return out;
}

inline Json ncdef_report(const Integer& r, const Integer& a) {
  auto d = hj_expand(r, a).terms;
  auto deg = deg_matrix(d);
  auto ladder = extension_ladder(d);
  Json out;
  out["singularity"] = to_string(CyclicQuotient{r, 1, a});
  out["terms"] = to_json(d);
  Json rows = Json::array();
  for (const auto& row : deg.rows) rows.push_back(to_json(row));
  out["deg_matrix"] = rows;
  out["ranks"] = to_json(ladder.ranks.values);
  out["ext_dims"] = to_json(ladder.ext_dims);
  std::vector<Integer> from_splitting;
  for (std::size_t i = 0; i < ladder.ext_dims.size(); ++i)
    from_splitting.push_back(ext_dim_from_splitting(d, ladder.ranks, i));
  out["ext_dims_from_splitting"] = to_json(from_splitting);
  out["multiplicities"] = to_json(ladder.multiplicities);
  Json splitting = Json::array();
  for (std::size_t i = 0; i + 1 <= d.size(); ++i) {
    Json parts = Json::array();
    for (const auto& [degree, mult] : splitting_type(d, i, i + 1))
      parts.push_back(Json{{"degree", to_json(degree)}, {"multiplicity", to_json(mult)}});
    splitting.push_back(Json{{"i", i}, {"j", i + 1}, {"parts", parts}});
  }
  out["splitting_next"] = splitting;
  auto descent = verify_descent(d);
  out["descent"] = Json{{"column_sums", to_json(descent.column_sums)}, {"total_rank", to_json(descent.total_rank)}};
  out["versal_rank"] = to_json(versal_rank(CyclicQuotient{r, 1, a}));
  return out;
}

inline Json markov_report(const Integer& max_entry) {
  auto tree = enumerate_tree(max_entry);
  Json out;
  out["max_entry"] = to_json(max_entry);
  Json triples = Json::array();
  std::set<Integer> numbers;
  for (const auto& t : tree) {
    for (const auto& x : t.entries()) numbers.insert(x);
    Json path = Json::array();
    for (const auto& step : markov_descent(t)) path.push_back(step.to_string());
    triples.push_back(Json{{"triple", to_json(std::vector<Integer>(t.entries().begin(), t.entries().end()))},
                           {"descent", path}});
  }
  out["count"] = tree.size();
  out["markov_numbers"] = to_json(std::vector<Integer>(numbers.begin(), numbers.end()));
  out["triples"] = triples;
  return out;
}

inline Json collection_json(const NumericalCollection& c) {
  Json members = Json::array();
  for (const auto& m : c.members) members.push_back(to_string(m));
  return members;
}

/// Word over L (left mutation of the last pair), R (right mutation of the
/// first pair), T (cyclic twist) and D (dual), applied to (O(-2), O(-1), O).
inline Json mutate_report(const std::string& word, bool& all_passed) {
  auto c = initial_triple();
  Json steps = Json::array();
  auto record = [&](const std::string& op) {
    auto report = collection_checks(c);
    all_passed = all_passed && report.passed();
    std::vector<Integer> ranks;
    for (const auto& m : c.members) ranks.push_back(m.rank);
    Json gram = Json::array();
    for (const auto& row : report.gram) {
      Json jr = Json::array();
      for (const auto& x : row) jr.push_back(to_json(x));
      gram.push_back(jr);
    }
    steps.push_back(Json{{"op", op},
                         {"members", collection_json(c)},
                         {"ranks", to_json(ranks)},
                         {"gram", gram},
                         {"numerically_exceptional", report.exceptional},
                         {"numerically_semi_orthogonal", report.semi_orthogonal},
                         {"markov_ranks", report.markov_ranks}});
  };
  all_passed = true;
  record("start");
  for (char op : word) {
    switch (op) {
      case 'L': c = mutate_left(c, 1); break;
      case 'R': c = mutate_right(c, 0); break;
      case 'T': c = cyclic_twist(c); break;
      case 'D': c = dualize(c); break;
      default: throw InvalidInput(std::string("mutate: unknown operation '") + op + "' (use L, R, T, D)");
    }
    record(std::string(1, op));
  }
  Json out;
  out["word"] = word;
  out["steps"] = steps;
  out["passed"] = all_passed;
  return out;
}

inline std::string random_word(std::uint64_t seed, int length) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, 3);
  std::string word;
  for (int i = 0; i < length; ++i) word.push_back("LRTD"[pick(rng)]);
  return word;
}

inline Json wpp_report(const WeightedPlane& p, bool& class_t_failed, std::string& failure) {
  Json out;
  out["weights"] = to_json(std::vector<Integer>(p.weights.begin(), p.weights.end()));
  out["canonical_degree"] = to_json(p.canonical_degree());
  Json locus = Json::array();
  for (const auto& pt : singular_locus(p)) locus.push_back(Json{{"vertex", pt.vertex}, {"type", to_string(pt.type)}});
  out["singular_locus"] = locus;
  const Integer sum = p.weight_sum();
  Json values = Json::array();
  HilbertFunction h(p);
  for (Integer n = -sum; n <= sum; ++n)
    values.push_back(Json{{"n", to_json(n)}, {"h0", to_json(h(n))}, {"chi", to_json(chi_divisorial(h, n))}});
  out["divisorial"] = values;
  class_t_failed = false;
  try {
    auto report = kks_rank_report(p);
    Json vertices = Json::array();
    for (const auto& v : report.vertices) {
      Json jv{{"vertex", v.vertex}, {"weight", to_json(v.weight)}, {"smooth", v.smooth}};
      jv["type"] = v.smooth ? Json(nullptr) : Json(to_string(v.type));
      jv["class_t"] = v.smooth ? Json(nullptr) : to_json(v.class_t);
      jv["decompositions"] = v.decompositions;
      jv["rank"] = to_json(v.rank);
      jv["block"] = Json{{"bundles", to_json(v.bundle_count)},
                         {"bundle_rank", to_json(v.bundle_rank)},
                         {"multiplicity", to_json(v.bundle_multiplicity)}};
      vertices.push_back(jv);
    }
    out["kks_rank_report"] = vertices;
  } catch (const NotClassT& e) {
    class_t_failed = true;
    failure = e.what();
    out["kks_rank_report"] = Json{{"error", "NotClassT"}, {"message", e.what()}};
  }
  return out;
}

inline Json smooth_report(const ClassTData& t) {
  auto chain = build_chain(t);
  const std::size_t s = chain.s();
  const std::size_t n = chain.curve_count();
  Json out;
  out["class_t"] = to_json(t);
  out["singularity"] = to_string(t.singularity());
  auto eq = qg_deformation_data(t);
  out["deformation"] = Json{{"cover", format_equation(eq.cover_equation)},
                            {"versal", format_equation(eq.versal_equation)},
                            {"milnor_number", to_json(eq.milnor_number)}};
  Json points = Json::array();
  for (const auto& p : chain.points) points.push_back(to_string(p));
  out["points"] = points;
  Json curves = Json::array();
  for (std::size_t i = 0; i < n; ++i) curves.push_back("C_" + std::to_string(i));
  out["curves"] = curves;
  Json form = Json::array();
  for (const auto& row : chain.form) {
    Json jr = Json::array();
    for (const auto& x : row) jr.push_back(to_string(x));
    form.push_back(jr);
  }
  out["form"] = form;

  auto k = canonical_class(chain);
  Json k_dot = Json::array();
  for (std::size_t i = 1; i < s; ++i) k_dot.push_back(to_string(intersect(chain, k, DivisorClass::curve(n, i))));
  out["k_dot_interior"] = k_dot;

  Json flops = Json::array();
  bool all_flops = true;
  for (std::size_t i = 1; i < s; ++i) {
    bool involution = true, isometry = true;
    for (std::size_t x = 0; x < n; ++x) {
      auto cx = DivisorClass::curve(n, x);
      involution = involution && flop(chain, i, flop(chain, i, cx)) == cx;
      for (std::size_t y = 0; y < n; ++y) {
        auto cy = DivisorClass::curve(n, y);
        isometry = isometry && intersect(chain, flop(chain, i, cx), flop(chain, i, cy)) == intersect(chain, cx, cy);
      }
    }
    auto before = DivisorClass::partial_sum(n, i - 1), after = DivisorClass::partial_sum(n, i);
    bool interchange = flop(chain, i, before) == after && flop(chain, i, after) == before;
    auto ci = DivisorClass::curve(n, i);
    auto d_dot = intersect(chain, before, ci), flopped_dot = intersect(chain, flop(chain, i, before), ci);
    bool sign_switch = flopped_dot == Rational(-1) * d_dot;
    all_flops = all_flops && involution && isometry && interchange && sign_switch;
    flops.push_back(Json{{"i", i},
                         {"involution", involution},
                         {"isometry", isometry},
                         {"interchange", interchange},
                         {"d_dot_c", to_string(d_dot)},
                         {"flopped_d_dot_c", to_string(flopped_dot)},
                         {"sign_switch", sign_switch}});
  }
  out["flops"] = flops;

  auto closure = orthogonality_closure(s);
  Json pairs = Json::array();
  for (const auto& [i, j] : closure.pairs) pairs.push_back(Json::array({i, j}));
  out["closure"] = Json{{"initial", closure.initial},
                        {"closure", closure.closure},
                        {"rounds", closure.rounds},
                        {"complete", closure.complete},
                        {"pairs", pairs}};
  Json chi = Json::array();
  for (std::size_t i = 1; i <= s; ++i)
    for (std::size_t j = i + 1; j <= s; ++j)
      chi.push_back(Json{{"from", i}, {"to", j}, {"chi", to_json(chain_chi(i, j))}});
  out["chain_chi"] = chi;

  auto dims = dimension_conservation(t);
  out["dimension_conservation"] = Json{{"exponents", dims.exponents},
                                       {"dim_R", to_json(dims.algebra_dimension)},
                                       {"r2s", to_json(dims.order)},
                                       {"mat_dimension", to_json(dims.matrix_dimension)},
                                       {"versal_rank", to_json(dims.versal_rank)},
                                       {"holds", true}};
  out["hacking_bundle"] = Json{{"rank", to_json(t.r)}, {"restriction_degree", -1}};
  if (!all_flops) throw InvariantViolation("smooth: a flop check failed for " + to_string(t));
  return out;
}

inline Json verify_report(const std::string& suite, const VerifyOptions& opt, bool& all_passed) {
  Json out;
  out["options"] = Json{{"suite", suite},
                        {"max_r", opt.max_r},
                        {"max_s", opt.max_s},
                        {"max_entry", opt.max_entry},
                        {"seed", opt.seed}};
  Json results = Json::array();
  all_passed = true;
  bool matched = false;
  for (const auto& [name, run] : suites()) {
    if (suite != "all" && suite != name) continue;
    matched = true;
    auto res = run(opt);
    all_passed = all_passed && res.passed();
    results.push_back(Json{{"name", res.name},
                           {"cases", res.cases},
                           {"failures", res.failure_count},
                           {"messages", res.failures},
                           {"passed", res.passed()}});
  }
  if (!matched) throw InvalidInput("verify: unknown suite '" + suite + "'");
  out["suites"] = results;
  out["passed"] = all_passed;
  return out;
}

namespace detail {

inline void write_text(std::ostream& out, const Json& j, const std::string& prefix) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) write_text(out, value, prefix.empty() ? key : prefix + "." + key);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); })) {
    std::size_t i = 0;
    for (const auto& value : j) write_text(out, value, prefix + "[" + std::to_string(i++) + "]");
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace detail

/// Runs one invocation; `args` excludes the program name.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"qgs: exact checks for cyclic quotient singularities and Q-Gorenstein smoothings", "qgs"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit a JSON report")->configurable(false);
  app.fallthrough();

  std::vector<std::string> pos;
  auto* hj = app.add_subcommand("hj", "Hirzebruch-Jung expansion of NUM/DEN");
  hj->add_option("values", pos, "NUM DEN")->expected(2)->required();
  auto* kk = app.add_subcommand("kk", "Kalck-Karmazyn algebra of 1/r(1,a)");
  kk->add_option("values", pos, "R A")->expected(2)->required();
  auto* nc = app.add_subcommand("ncdef", "Universal extension ladder on the resolution of 1/r(1,a)");
  nc->add_option("values", pos, "R A")->expected(2)->required();
  std::int64_t max_entry = 1000;
  auto* mk = app.add_subcommand("markov", "Markov triples up to --max-entry");
  mk->add_option("--max-entry", max_entry, "Largest entry")->check(CLI::PositiveNumber);
  std::string word;
  std::uint64_t seed = 1;
  auto* mu = app.add_subcommand("mutate", "Mutate (O(-2),O(-1),O) along a word in L,R,T,D");
  mu->add_option("word", word, "Operations; random word of length 20 from --seed when omitted");
  mu->add_option("--seed", seed, "Seed for the random word");
  auto* wp = app.add_subcommand("wpp", "Weighted projective plane P(w1,w2,w3)");
  wp->add_option("values", pos, "W1 W2 W3")->expected(3)->required();
  auto* sm = app.add_subcommand("smooth", "Crepant chain of the class T point (r,a,s)");
  sm->add_option("values", pos, "R A S")->expected(3)->required();
  std::string suite = "all";
  VerifyOptions opt;
  auto* vf = app.add_subcommand("verify", "Run invariant suites");
  vf->add_option("--suite", suite, "Suite name or 'all'");
  vf->add_option("--max-r", opt.max_r, "Largest r in sweeps")->check(CLI::Range(2, 100000));
  vf->add_option("--max-s", opt.max_s, "Largest s in sweeps")->check(CLI::Range(1, 1000));
  vf->add_option("--max-entry", opt.max_entry, "Largest Markov entry")->check(CLI::PositiveNumber);
  vf->add_option("--seed", opt.seed, "Seed for randomised suites");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return invalid_input;
  }

  auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  Json report{{"schema_version", schema_version}, {"command", name}};
  int code = ok;
  std::string failure;
  try {
    if (sub == hj) {
      report.update(hj_report(parse_integer(pos[0], "NUM"), parse_integer(pos[1], "DEN")));
    } else if (sub == kk) {
      report.update(kk_report(parse_integer(pos[0], "R"), parse_integer(pos[1], "A")));
    } else if (sub == nc) {
      report.update(ncdef_report(parse_integer(pos[0], "R"), parse_integer(pos[1], "A")));
    } else if (sub == mk) {
      report.update(markov_report(max_entry));
    } else if (sub == mu) {
      bool passed = true;
      if (word.empty()) word = random_word(seed, 20);
      report.update(mutate_report(word, passed));
      if (!passed) {
        code = invariant_failed;
        failure = "mutate: a collection check failed";
      }
    } else if (sub == wp) {
      bool not_class_t = false;
      auto plane = WeightedPlane::make(parse_integer(pos[0], "W1"), parse_integer(pos[1], "W2"),
                                       parse_integer(pos[2], "W3"));
      report.update(wpp_report(plane, not_class_t, failure));
      if (not_class_t) code = invalid_input;
    } else if (sub == sm) {
      report.update(
          smooth_report({parse_integer(pos[0], "R"), parse_integer(pos[1], "A"), parse_integer(pos[2], "S")}));
    } else if (sub == vf) {
      bool passed = true;
      report.update(verify_report(suite, opt, passed));
      if (!passed) {
        code = invariant_failed;
        failure = "verify: at least one suite failed";
      }
    }
  } catch (const InvariantViolation& e) {
    report["error"] = Json{{"kind", "InvariantViolation"}, {"message", e.what()}};
    code = invariant_failed;
    failure = e.what();
  } catch (const Error& e) {
    report["error"] = Json{{"kind", "InvalidInput"}, {"message", e.what()}};
    code = invalid_input;
    failure = e.what();
  }

  if (json)
    out << report.dump(2) << "\n";
  else
    detail::write_text(out, report, "");
  if (code != ok) err << "error: " << failure << "\n";
  return code;
}

}  // namespace qgs::cli
