#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "boalch/families.hpp"
#include "boalch/parser.hpp"
#include "boalch/repscheme.hpp"
#include "json.hpp"

using namespace boalch;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotEqual = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitInput = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ColoredQuiver load_quiver(const std::string& spec) {
  if (spec.empty()) throw InputError("--quiver is required for this command");
  if (spec == "builtin:interval") return ColoredQuiver::complete(2);
  if (spec == "builtin:triangle") return ColoredQuiver::complete(3);
  return ColoredQuiver::from_json(slurp(spec));
}

// builtin:interval / builtin:triangle / builtin:table1 or a JSON file with
// {"entries": [{"x": "...", "y": "...", "value": "..."}]}.
BracketTable load_table(const std::string& spec, const ColoredQuiver& q) {
  if (spec.empty()) throw InputError("--table is required for this command");
  if (spec == "builtin:interval") return interval_fixture().table;
  if (spec == "builtin:triangle") return triangle_fixture().table;
  if (spec == "builtin:table1") return family_bracket_table(3, table1_family());
  json j = json::parse(slurp(spec));
  BracketTable table;
  for (const auto& e : j.at("entries")) {
    AlgElem x = parse_expr(e.at("x").get<std::string>(), q);
    AlgElem y = parse_expr(e.at("y").get<std::string>(), q);
    if (x.size() != 1 || y.size() != 1)
      throw InputError("table keys must be single generator symbols");
    const Word& wx = x.terms().begin()->first;
    const Word& wy = y.terms().begin()->first;
    if (wx.length() != 1 || wy.length() != 1)
      throw InputError("table keys must be single generator symbols");
    std::string warn =
        table.set(wx.syms[0], wy.syms[0], parse_tensor2(e.at("value").get<std::string>(), q));
    if (!warn.empty()) std::cerr << "warning: " << warn << "\n";
  }
  return table;
}

CoefficientFamily load_family(const std::string& spec) {
  if (spec.empty()) throw InputError("--family is required for this command");
  if (spec == "builtin:table1") return table1_family();
  return CoefficientFamily::from_json(slurp(spec));
}

std::vector<Rational> parse_rationals(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(parse_rational(item));
  }
  return out;
}

std::vector<int> parse_dims(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

int report_exit(const CheckReport& rep) {
  if (rep.count(Verdict::NotEqual) > 0) return kExitNotEqual;
  if (rep.count(Verdict::Undecided) > 0) return kExitUndecided;
  return kExitOk;
}

void print_report(const CheckReport& rep, const std::string& format) {
  if (format == "json") {
    json out = json::array();
    for (const auto& it : rep.items) {
      json e = {{"label", it.label},
                {"verdict", verdict_str(it.verdict)},
                {"strategy", it.strategy}};
      if (!it.witness.empty()) e["witness"] = it.witness;
      out.push_back(std::move(e));
    }
    json top = {{"items", std::move(out)},
                {"equal", rep.count(Verdict::Equal)},
                {"not_equal", rep.count(Verdict::NotEqual)},
                {"undecided", rep.count(Verdict::Undecided)}};
    std::cout << top.dump(2) << "\n";
  } else {
    for (const auto& it : rep.items) {
      std::cout << verdict_str(it.verdict) << " [" << it.strategy << "] " << it.label;
      if (!it.witness.empty()) std::cout << "  witness: " << it.witness;
      std::cout << "\n";
    }
    std::cout << rep.count(Verdict::Equal) << " EQUAL, " << rep.count(Verdict::NotEqual)
              << " NOT_EQUAL, " << rep.count(Verdict::Undecided) << " UNDECIDED\n";
  }
}

// Strategy chain control: "structural", "expanded", "oracle" (comma list).
// The chain is always tried fastest-first; excluding a stage disables it.
struct Strategy {
  bool expanded = true;
  bool oracle = true;
};

Strategy parse_strategy(const std::string& csv) {
  if (csv.empty()) return {};
  Strategy s{false, false};
  bool structural = false;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "structural")
      structural = true;
    else if (item == "expanded")
      s.expanded = true;
    else if (item == "oracle")
      s.oracle = true;
    else
      throw InputError("unknown strategy: " + item);
  }
  (void)structural;  // STRUCTURAL is always the first rung
  return s;
}

BracketContext make_context(const ColoredQuiver& q, BracketTable table,
                            const Strategy& strat) {
  BracketContext ctx = BracketContext::for_quiver(q, std::move(table));
  if (!strat.expanded) ctx.expanded = ctx.cancel;
  return ctx;
}

TensorOracle make_oracle(const ColoredQuiver& q, const Strategy& strat) {
  if (!strat.oracle) return nullptr;
  return make_tensor_oracle(default_rep_suite(q));
}

std::vector<GenSymbol> gamma_components(const ColoredQuiver& q) {
  std::vector<GenSymbol> out;
  for (size_t ci = 0; ci < q.colors.size(); ++ci)
    for (int s : q.colors[ci].vertices)
      out.push_back(GenSymbol::gamma(s, static_cast<int>(ci)));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic-numeric verification engine for quasi-Poisson structures "
               "on quiver path algebras"};
  app.require_subcommand(1);

  std::string quiver_spec, table_spec, family_spec, dims_csv, range_csv = "-3,3";
  std::string strategy_csv, format = "text";
  uint64_t seed = 1;
  int jobs = 1;
  app.add_option("--quiver", quiver_spec, "Quiver JSON file or builtin:interval|triangle");
  app.add_option("--table", table_spec, "Bracket table: builtin:NAME or JSON file");
  app.add_option("--family", family_spec, "Coefficient family JSON file or builtin:table1");
  app.add_option("--dims", dims_csv, "Dimension vector d1,d2,...");
  app.add_option("--seed", seed, "Random seed");
  app.add_option("--range", range_csv, "Entry range LO,HI for random representations");
  app.add_option("--strategy", strategy_csv,
                 "Equality strategy chain subset: structural,expanded,oracle");
  app.add_option("--jobs", jobs, "Upper bound on internal parallelism");
  app.add_option("--format", format, "Output format: text|json")
      ->check(CLI::IsMember({"text", "json"}));

  auto* cmd_validate = app.add_subcommand("validate-quiver", "Validate a quiver file");
  auto* cmd_build = app.add_subcommand("build-boalch",
                                       "Show generators, relations and derived symbols");
  bool dump = false;
  cmd_build->add_flag("--dump", dump, "Dump the quiver back as JSON");
  auto* cmd_bracket =
      app.add_subcommand("bracket", "Double bracket of two expressions");
  std::vector<std::string> exprs;
  cmd_bracket->add_option("expr", exprs, "Two expressions")->expected(2);
  auto* cmd_triple = app.add_subcommand("triple", "Triple bracket of three expressions");
  std::vector<std::string> exprs3;
  cmd_triple->add_option("expr", exprs3, "Three expressions")->expected(3);
  auto* cmd_qp = app.add_subcommand("check-qp", "Quasi-Poisson property on all triples");
  auto* cmd_moment = app.add_subcommand("check-moment", "Moment-map identity per gamma");
  auto* cmd_cond = app.add_subcommand("check-conditions", "Coefficient-family conditions");
  auto* cmd_fix = app.add_subcommand("verify-fixtures", "Recompute the builtin fixtures");
  auto* cmd_search = app.add_subcommand("search", "Enumerate admissible families");
  int search_n = 3;
  size_t search_limit = 10;
  std::string ga = "0", gb = "0", gm = "0", gn = "0", gk = "0";
  cmd_search->add_option("--n", search_n, "Vertex count");
  cmd_search->add_option("--limit", search_limit, "Maximum families to return");
  cmd_search->add_option("--grid-alpha", ga, "Comma-separated alpha values");
  cmd_search->add_option("--grid-beta", gb, "Comma-separated beta values");
  cmd_search->add_option("--grid-mu", gm, "Comma-separated mu values");
  cmd_search->add_option("--grid-nu", gn, "Comma-separated nu values");
  cmd_search->add_option("--grid-kappa", gk, "Comma-separated kappa values");
  auto* cmd_rep = app.add_subcommand("rep-verify",
                                     "Build a random representation and verify relations");
  for (CLI::App* sc : app.get_subcommands(nullptr)) sc->fallthrough();

  CLI11_PARSE(app, argc, argv);

  try {
    Strategy strat = parse_strategy(strategy_csv);

    if (cmd_validate->parsed()) {
      ColoredQuiver q = load_quiver(quiver_spec);
      auto issues = validate(q);
      if (format == "json") {
        std::cout << json({{"valid", issues.empty()}, {"issues", issues}}).dump(2) << "\n";
      } else {
        for (const auto& s : issues) std::cout << "invalid: " << s << "\n";
        if (issues.empty()) std::cout << "valid\n";
      }
      return issues.empty() ? kExitOk : kExitNotEqual;
    }

    if (cmd_build->parsed()) {
      ColoredQuiver q = load_quiver(quiver_spec);
      auto issues = validate(q);
      if (!issues.empty()) throw InputError("invalid quiver: " + issues.front());
      if (dump) {
        std::cout << q.to_json() << "\n";
        return kExitOk;
      }
      if (format == "json") {
        json gens = json::array(), defs = json::array(), rels = json::array();
        for (const auto& g : extended_double(q)) gens.push_back(g.str());
        for (const auto& d : derived_generators(q))
          defs.push_back({{"symbol", d.sym.str()}, {"expr", d.expr.str()}});
        for (const auto& r : boalch_relations(q).relations)
          rels.push_back({{"label", r.label}, {"lhs", r.lhs.str()}, {"rhs", r.rhs.str()}});
        std::cout << json({{"generators", gens}, {"derived", defs}, {"relations", rels}})
                         .dump(2)
                  << "\n";
      } else {
        std::cout << "generators:";
        for (const auto& g : extended_double(q)) std::cout << " " << g.str();
        std::cout << "\nderived:\n";
        for (const auto& d : derived_generators(q))
          std::cout << "  " << d.sym.str() << " = " << d.expr.str() << "\n";
        std::cout << "relations:\n";
        for (const auto& r : boalch_relations(q).relations)
          std::cout << "  [" << r.label << "] " << r.lhs.str() << " = " << r.rhs.str()
                    << "\n";
      }
      return kExitOk;
    }

    if (cmd_bracket->parsed() || cmd_triple->parsed()) {
      ColoredQuiver q = load_quiver(quiver_spec);
      BracketContext ctx = make_context(q, load_table(table_spec, q), strat);
      std::string rendered;
      if (cmd_bracket->parsed()) {
        AlgElem a = parse_expr(exprs[0], q), b = parse_expr(exprs[1], q);
        rendered = dbl(a, b, ctx).str();
      } else {
        AlgElem a = parse_expr(exprs3[0], q), b = parse_expr(exprs3[1], q),
                c = parse_expr(exprs3[2], q);
        rendered = triple(a, b, c, ctx).str();
      }
      if (format == "json")
        std::cout << json({{"result", rendered}}).dump(2) << "\n";
      else
        std::cout << rendered << "\n";
      return kExitOk;
    }

    if (cmd_qp->parsed()) {
      ColoredQuiver q = load_quiver(quiver_spec);
      BracketContext ctx = make_context(q, load_table(table_spec, q), strat);
      CheckReport rep = check_quasi_poisson(ctx, double_quiver(q));
      print_report(rep, format);
      return report_exit(rep);
    }

    if (cmd_moment->parsed()) {
      ColoredQuiver q = load_quiver(quiver_spec);
      BracketContext ctx = make_context(q, load_table(table_spec, q), strat);
      CheckReport rep = check_moment_map(gamma_components(q), ctx, double_quiver(q),
                                         make_oracle(q, strat));
      print_report(rep, format);
      return report_exit(rep);
    }

    if (cmd_cond->parsed()) {
      CoefficientFamily cf = load_family(family_spec);
      ConditionReport rep = check_conditions(cf);
      if (format == "json") {
        json items = json::array();
        for (const auto& e : rep.entries)
          items.push_back({{"lemma", e.lemma},
                           {"indices", e.indices},
                           {"condition", e.condition},
                           {"lhs", rational_str(e.lhs)},
                           {"rhs", rational_str(e.rhs)},
                           {"satisfied", e.satisfied}});
        std::cout << json({{"items", std::move(items)},
                           {"total", rep.entries.size()},
                           {"failed", rep.failed()}})
                         .dump(2)
                  << "\n";
      } else {
        for (const auto& e : rep.entries)
          if (!e.satisfied)
            std::cout << "VIOLATED " << e.lemma << " (" << e.indices
                      << "): " << e.condition << "  [lhs = " << rational_str(e.lhs)
                      << ", rhs = " << rational_str(e.rhs) << "]\n";
        std::cout << rep.entries.size() << " conditions, " << rep.failed()
                  << " violated\n";
      }
      return rep.all_satisfied() ? kExitOk : kExitNotEqual;
    }

    if (cmd_fix->parsed()) {
      int worst = kExitOk;
      for (const Fixture& fx : {interval_fixture(), triangle_fixture()}) {
        TensorOracle oracle =
            strat.oracle ? make_tensor_oracle(default_rep_suite(fx.quiver)) : nullptr;
        CheckReport rep = verify_fixture(fx, oracle);
        if (format == "text") std::cout << "fixture " << fx.name << ":\n";
        print_report(rep, format);
        worst = std::max(worst, report_exit(rep));
      }
      return worst;
    }

    if (cmd_search->parsed()) {
      ValueGrid grid{parse_rationals(ga), parse_rationals(gb), parse_rationals(gm),
                     parse_rationals(gn), parse_rationals(gk)};
      auto found = search_admissible(search_n, grid, search_limit);
      if (format == "json") {
        json out = json::array();
        for (const auto& cf : found) out.push_back(json::parse(cf.to_json()));
        std::cout << json({{"families", std::move(out)}}).dump(2) << "\n";
      } else {
        std::cout << found.size() << " admissible families\n";
        for (const auto& cf : found) std::cout << cf.to_json() << "\n";
      }
      return kExitOk;
    }

    if (cmd_rep->parsed()) {
      ColoredQuiver q = load_quiver(quiver_spec);
      if (dims_csv.empty()) throw InputError("--dims is required for rep-verify");
      DimVector d = parse_dims(dims_csv);
      auto range_ends = parse_rationals(range_csv);
      if (range_ends.size() != 2) throw InputError("--range expects LO,HI");
      std::vector<Rational> range;
      for (Rational v = range_ends[0]; v <= range_ends[1]; v += 1) range.push_back(v);
      MatrixRep r = random_rep(q, d, seed, range);
      CheckReport rep;
      for (const auto& rel : boalch_relations(q).relations) {
        bool ok = mats_equal(eval(rel.lhs, r), eval(rel.rhs, r));
        rep.items.push_back({rel.label, ok ? Verdict::Equal : Verdict::NotEqual,
                             "oracle", ""});
      }
      for (size_t ci = 0; ci < q.colors.size(); ++ci)
        for (int s : q.colors[ci].vertices) {
          int c = static_cast<int>(ci);
          AlgElem prod = AlgElem::from_sym(GenSymbol::gamma(s, c)) *
                         AlgElem::from_sym(GenSymbol::gamma_inv(s, c));
          bool ok = mats_equal(eval(prod, r), eval(AlgElem::unit(s), r));
          rep.items.push_back({"g" + std::to_string(s) + "*g" + std::to_string(s) +
                                   "inv = e" + std::to_string(s),
                               ok ? Verdict::Equal : Verdict::NotEqual, "oracle", ""});
        }
      if (format == "text")
        std::cout << "N = " << r.N << ", sampled parameters = " << r.sampled_params
                  << ", dimension count = " << dimension_count(q, d) << "\n";
      print_report(rep, format);
      return report_exit(rep);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
