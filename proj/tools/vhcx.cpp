// vhcx: command-line front end.
//
// Exit codes: 0 pass, 1 mathematical failure, 2 resources exhausted
// (verdict unknown), 64 usage or input error, 70 internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vhcx/certificates.hpp"
#include "vhcx/complex.hpp"
#include "vhcx/error.hpp"
#include "vhcx/fpgroup.hpp"
#include "vhcx/local_actions.hpp"
#include "vhcx/perm_group.hpp"
#include "vhcx/reidemeister_schreier.hpp"
#include "vhcx/todd_coxeter.hpp"

using namespace vhcx;

namespace {

  constexpr int exit_pass      = 0;
  constexpr int exit_fail      = 1;
  constexpr int exit_exhausted = 2;
  constexpr int exit_usage     = 64;

  struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  struct Config {
    std::string   path;
    std::string   word;
    std::string   side = "v";
    std::size_t   depth = 1;
    std::size_t   cap   = default_coset_cap;
    std::size_t   bound = default_simplicity_bound;
    std::size_t   max_length = TietzeLimits{}.max_total_length;
    std::size_t   max_order  = 4096;
    std::string   strategy   = "hlt";
    std::string   table_path;
    std::uint64_t m = 0;
    std::uint64_t n = 0;
    bool          json_out   = false;
    bool          assume_nrf = false;
    bool          labels     = false;
    bool          print      = false;
    std::vector<std::uint32_t> delta_h{1, 2, 3, 4};
    std::vector<std::uint32_t> delta_v{1, 2, 3};
  };

  struct Report {
    json        body;
    int         code = exit_pass;
    std::string text;
  };

  SquareComplex load(Config const& cfg) {
    try {
      return read_complex_file(cfg.path);
    } catch (Error const& e) {
      throw UsageError(cfg.path + ": " + e.what());
    }
  }

  Word word_of(Config const& cfg, Presentation const& p) {
    if (cfg.word.empty()) {
      throw UsageError("--word is required");
    }
    try {
      return parse_word(cfg.word, p.generators());
    } catch (Error const& e) {
      throw UsageError(std::string("--word: ") + e.what());
    }
  }

  Side side_of(Config const& cfg) {
    if (cfg.side == "h" || cfg.side == "horizontal") {
      return Side::horizontal;
    }
    return Side::vertical;
  }

  EnumerationOptions enum_opts(Config const& cfg) {
    return {cfg.strategy == "felsch" ? Strategy::felsch : Strategy::hlt, cfg.cap};
  }

  json corner_json(SquareComplex const& c, Corner const& k) {
    return json::array({c.letter_name(k.first), c.letter_name(k.second)});
  }

  std::string verdict_line(std::string const& what, json const& v) {
    return what + ": " + v.get<std::string>();
  }

  ////////////////////////////////////////////////////////////////////////

  Report cmd_check_link(Config const& cfg) {
    auto c    = load(cfg);
    auto link = check_link(c);
    Report r;
    r.body = json{{"complex", c.name()},
                  {"ok", link.ok},
                  {"corners_covered", link.corners_covered},
                  {"corners_total", link.corners_total},
                  {"missing", json::array()},
                  {"duplicates", json::array()}};
    for (auto const& k : link.missing_corners) {
      r.body["missing"].push_back(corner_json(c, k));
    }
    for (auto const& d : link.duplicate_corners) {
      r.body["duplicates"].push_back(corner_json(c, d.corner));
    }
    r.code = link.ok ? exit_pass : exit_fail;
    std::ostringstream t;
    t << c.name() << ": link " << (link.ok ? "ok" : "FAILS") << ", "
      << link.corners_covered << "/" << link.corners_total << " corners\n";
    for (auto const& k : r.body["missing"]) {
      t << "  missing corner (" << k[0].get<std::string>() << ", "
        << k[1].get<std::string>() << ")\n";
    }
    for (auto const& k : r.body["duplicates"]) {
      t << "  repeated corner (" << k[0].get<std::string>() << ", "
        << k[1].get<std::string>() << ")\n";
    }
    r.text = t.str();
    return r;
  }

  Report cmd_euler(Config const& cfg) {
    auto   c = load(cfg);
    Report r;
    r.body = json{{"complex", c.name()},
                  {"m", c.m()},
                  {"n", c.n()},
                  {"squares", c.squares().size()},
                  {"euler_characteristic", euler_characteristic(c)}};
    r.text = c.name() + ": chi = 1 - (m+n) + mn = "
             + std::to_string(euler_characteristic(c)) + "\n";
    return r;
  }

  Report cmd_local(Config const& cfg) {
    auto c    = load(cfg);
    auto side = side_of(cfg);
    if (cfg.depth == 0 || cfg.depth > default_max_sphere_depth) {
      throw UsageError("--depth must be between 1 and "
                       + std::to_string(default_max_sphere_depth));
    }
    if (!check_link(c).ok) {
      Report r{json{{"complex", c.name()}, {"error", "link condition fails"}},
               exit_fail, c.name() + ": link condition fails\n"};
      return r;
    }
    auto g   = local_group(c, side, cfg.depth);
    auto rec = recognize(g);
    Report r;
    r.body = json{{"complex", c.name()},
                  {"side", side == Side::horizontal ? "horizontal" : "vertical"},
                  {"depth", cfg.depth},
                  {"degree", g.degree()},
                  {"order", g.order().str()},
                  {"recognition", rec.name()},
                  {"generators", json::array()}};
    for (auto const& p : g.generators()) {
      r.body["generators"].push_back(p.to_cycles());
    }
    if (cfg.depth == 1) {
      std::size_t k = 0;
      while (k < g.degree() && k < 6 && is_k_transitive(g, k + 1)) {
        ++k;
      }
      r.body["transitivity"] = k;
    }
    if (cfg.labels) {
      r.body["labels"] = sphere_labels(c, side, cfg.depth);
    }
    std::ostringstream t;
    t << c.name() << ": P_" << (side == Side::horizontal ? "h" : "v") << "^(" << cfg.depth
      << ") on " << g.degree() << " points, order " << g.order().str() << ", "
      << rec.name() << "\n";
    if (r.body.contains("transitivity")) {
      t << "  " << r.body["transitivity"].get<std::size_t>() << "-transitive\n";
    }
    for (auto const& s : r.body["generators"]) {
      t << "  " << s.get<std::string>() << "\n";
    }
    if (cfg.labels) {
      std::size_t i = 1;
      for (auto const& s : r.body["labels"]) {
        t << "  " << i++ << " = " << s.get<std::string>() << "\n";
      }
    }
    r.text = t.str();
    return r;
  }

  int code_of(Verdict v) {
    switch (v) {
      case Verdict::pass:
        return exit_pass;
      case Verdict::exhausted:
        return exit_exhausted;
      default:
        return exit_fail;
    }
  }

  Report cmd_irreducible(Config const& cfg) {
    auto   c   = load(cfg);
    auto   irr = irreducibility_check(c);
    Report r;
    r.body = json{{"complex", c.name()}};
    r.body.update(irr.to_json());
    r.code = code_of(irr.verdict);
    r.text = c.name() + ": irreducible " + to_string(irr.verdict)
             + (irr.reason.empty() ? "" : " (" + irr.reason + ")") + "\n";
    if (irr.order != 0) {
      r.text += "  |P_v^(2)| = " + irr.order.str() + "\n  target    = "
                + irr.target.str() + "\n";
    }
    return r;
  }

  Report cmd_nst(Config const& cfg) {
    auto   c   = load(cfg);
    auto   nst = nst_check(c, cfg.bound);
    Report r;
    r.body = json{{"complex", c.name()}};
    r.body.update(nst.to_json());
    if (nst.verdict == Verdict::pass) {
      r.body["conclusion"] = conclusion_nst;
    }
    r.code = code_of(nst.verdict);
    std::ostringstream t;
    t << c.name() << ": normal subgroup theorem hypotheses " << to_string(nst.verdict);
    if (!nst.reason.empty()) {
      t << " (" << nst.reason << ")";
    }
    t << "\n";
    for (auto const& s : r.body["sides"]) {
      t << "  " << s["side"].get<std::string>() << ": "
        << s["group"]["name"].get<std::string>()
        << (s["two_transitive"].get<bool>() ? ", 2-transitive" : ", not 2-transitive");
      if (s.contains("stabilizer")) {
        t << ", stabilizer " << s["stabilizer"]["name"].get<std::string>() << " "
          << s["stabilizer_simple"].get<std::string>();
      }
      t << "\n";
    }
    t << "  " << verdict_line("irreducibility", r.body["irreducibility"]["verdict"]) << "\n";
    if (nst.verdict == Verdict::pass) {
      t << "  " << conclusion_nst << "\n";
    }
    r.text = t.str();
    return r;
  }

  Report cmd_closure_index(Config const& cfg) {
    auto   c   = load(cfg);
    auto   p   = presentation_from_complex(c);
    auto   w   = word_of(cfg, p);
    auto   ncr = normal_closure_index(p, w, enum_opts(cfg));
    Report r;
    r.body = json{{"complex", c.name()},
                  {"word", format_word(w, p.generators())},
                  {"strategy", to_string(ncr.enumeration.stats.strategy)},
                  {"cap", ncr.enumeration.cap},
                  {"max_live", ncr.enumeration.stats.max_live},
                  {"total_defined", ncr.enumeration.stats.total_defined}};
    if (ncr.index()) {
      r.body["index"] = *ncr.index();
      r.text = c.name() + ": [G : <<" + format_word(w, p.generators())
               + ">>] = " + std::to_string(*ncr.index()) + "\n";
    } else {
      r.body["index"] = nullptr;
      r.code          = exit_exhausted;
      r.text = c.name() + ": enumeration exhausted at " + std::to_string(cfg.cap)
               + " cosets; index unknown\n";
    }
    return r;
  }

  Report cmd_quotient(Config const& cfg) {
    auto   c   = load(cfg);
    auto   p   = presentation_from_complex(c);
    auto   w   = word_of(cfg, p);
    auto   ncr = normal_closure_index(p, w, enum_opts(cfg));
    Report r;
    r.body = json{{"complex", c.name()}, {"word", format_word(w, p.generators())}};
    if (!ncr.index()) {
      r.body["order"] = nullptr;
      r.code          = exit_exhausted;
      r.text          = c.name() + ": enumeration exhausted; quotient unknown\n";
      return r;
    }
    auto const& t = *ncr.enumeration.table;
    r.body["strategy"]      = to_string(ncr.enumeration.stats.strategy);
    r.body["max_live"]      = ncr.enumeration.stats.max_live;
    r.body["total_defined"] = ncr.enumeration.stats.total_defined;
    if (!cfg.table_path.empty()) {
      std::ofstream out(cfg.table_path);
      if (!out) {
        throw UsageError("cannot write " + cfg.table_path);
      }
      out << t.to_tsv(p.generators());
      r.body["table"] = cfg.table_path;
    }
    r.body["order"] = t.index();
    if (t.index() > cfg.max_order) {
      r.code = exit_exhausted;
      r.text = c.name() + ": quotient of order " + std::to_string(t.index())
               + " exceeds --max-order; structure not computed\n";
      return r;
    }
    auto q                 = quotient_structure(t, ncr.quotient);
    r.body["abelian"]      = q.abelian;
    r.body["invariants"]   = q.invariants ? json(q.invariants->to_string()) : json(nullptr);
    r.body["representatives"] = json::array();
    for (auto const& rep : q.representatives) {
      r.body["representatives"].push_back(format_word(rep, p.generators()));
    }
    r.text = c.name() + ": G/<<w>> has order " + std::to_string(q.order)
             + (q.abelian ? ", abelian " + q.invariants->to_string() : ", non-abelian")
             + "\n";
    return r;
  }

  Report cmd_abelianize(Config const& cfg) {
    auto   c   = load(cfg);
    auto   p   = presentation_from_complex(c);
    auto   inv = abelianization(p);
    Report r;
    json   torsion = json::array();
    for (auto const& d : inv.torsion) {
      torsion.push_back(d.str());
    }
    r.body = json{{"complex", c.name()},
                  {"free_rank", inv.free_rank},
                  {"torsion", torsion},
                  {"group", inv.to_string()}};
    r.text = c.name() + ": abelianization " + inv.to_string() + "\n";
    return r;
  }

  // Coset table of the subgroup the rs/simplify commands work on: the
  // normal closure of --word if given, else the parity kernel.
  struct Subgroup {
    std::string               label;
    std::optional<CosetTable> table;
  };

  Subgroup subgroup_of(Config const& cfg, Presentation const& p) {
    if (cfg.word.empty()) {
      try {
        return {"parity kernel", parity_coset_table(p)};
      } catch (StructureError const& e) {
        throw UsageError(std::string("parity kernel: ") + e.what());
      }
    }
    auto w   = word_of(cfg, p);
    auto ncr = normal_closure_index(p, w, enum_opts(cfg));
    return {"<<" + format_word(w, p.generators()) + ">>", ncr.enumeration.table};
  }

  json presentation_json(Presentation const& p) {
    return json{{"generators", p.num_generators()},
                {"relators", p.num_relators()},
                {"total_length", p.total_length()},
                {"r_minus_g", static_cast<long long>(p.num_relators())
                                  - static_cast<long long>(p.num_generators())}};
  }

  Report cmd_rs(Config const& cfg) {
    auto   c  = load(cfg);
    auto   p  = presentation_from_complex(c);
    auto   sg = subgroup_of(cfg, p);
    Report r;
    r.body = json{{"complex", c.name()}, {"subgroup", sg.label}};
    if (!sg.table) {
      r.body["index"] = nullptr;
      r.code          = exit_exhausted;
      r.text          = c.name() + ": enumeration exhausted; no subgroup table\n";
      return r;
    }
    auto k  = sg.table->index();
    auto sp = subgroup_presentation(p, *sg.table);
    r.body["index"]        = k;
    r.body["presentation"] = presentation_json(sp.presentation);
    r.body["expected_generators"] = k * p.num_generators() - (k - 1);
    r.body["expected_relators"]   = k * p.num_relators();
    if (cfg.print) {
      r.body["text"] = format_presentation(sp.presentation);
    }
    r.text = c.name() + ": " + sg.label + " of index " + std::to_string(k) + ", "
             + std::to_string(sp.presentation.num_generators()) + " generators, "
             + std::to_string(sp.presentation.num_relators()) + " relators, length "
             + std::to_string(sp.presentation.total_length()) + "\n";
    if (cfg.print) {
      r.text += format_presentation(sp.presentation) + "\n";
    }
    return r;
  }

  Report cmd_simplify(Config const& cfg) {
    auto   c  = load(cfg);
    auto   p  = presentation_from_complex(c);
    auto   sg = subgroup_of(cfg, p);
    Report r;
    r.body = json{{"complex", c.name()}, {"subgroup", sg.label}};
    if (!sg.table) {
      r.body["index"] = nullptr;
      r.code          = exit_exhausted;
      r.text          = c.name() + ": enumeration exhausted; no subgroup table\n";
      return r;
    }
    auto sp = subgroup_presentation(p, *sg.table);
    auto tz = tietze_simplify(sp.presentation, {cfg.max_length, TietzeLimits{}.max_moves});
    auto ab = abelianization(tz.presentation);
    r.body["index"]  = sg.table->index();
    r.body["before"] = presentation_json(sp.presentation);
    r.body["after"]  = presentation_json(tz.presentation);
    r.body["moves"]  = json{{"eliminations", tz.stats.eliminations},
                            {"redundant_removed", tz.stats.redundant_removed},
                            {"rejected_by_budget", tz.stats.rejected_by_budget}};
    r.body["abelianization"] = ab.to_string();
    r.body["perfect"]        = ab.is_trivial();
    if (cfg.print) {
      r.body["text"] = format_presentation(tz.presentation);
    }
    std::ostringstream t;
    t << c.name() << ": " << sg.label << " simplified from "
      << sp.presentation.num_generators() << " generators / "
      << sp.presentation.num_relators() << " relators to "
      << tz.presentation.num_generators() << " / " << tz.presentation.num_relators()
      << " (length " << tz.presentation.total_length() << ", r - g = "
      << r.body["after"]["r_minus_g"].get<long long>() << ")\n"
      << "  abelianization " << ab.to_string() << (ab.is_trivial() ? ", perfect" : "")
      << "\n";
    if (cfg.print) {
      t << format_presentation(tz.presentation) << "\n";
    }
    r.text = t.str();
    return r;
  }

  Report cmd_amalgam(Config const& cfg) {
    auto m = cfg.m;
    auto n = cfg.n;
    std::string name;
    if (!cfg.path.empty()) {
      auto c = load(cfg);
      m      = c.m();
      n      = c.n();
      name   = c.name();
    }
    if (m == 0 || n == 0) {
      throw UsageError("amalgam needs a complex file or --m and --n (both >= 1)");
    }
    auto [d1, d2] = amalgam_ranks(m, n);
    auto dj       = [](AmalgamDecomposition const& d) {
      return json{{"vertex_rank", d.vertex_rank},
                  {"edge_rank", d.edge_rank},
                  {"edge_index", d.edge_index}};
    };
    Report r;
    r.body = json::object();
    if (!name.empty()) {
      r.body["complex"] = name;
    }
    r.body["m"]              = m;
    r.body["n"]              = n;
    r.body["decompositions"] = json::array({dj(d1), dj(d2)});
    r.body["euler_consistent"] = true;
    std::ostringstream t;
    for (auto const& d : {d1, d2}) {
      t << "F_" << d.vertex_rank << " *_{F_" << d.edge_rank << "} F_" << d.vertex_rank
        << "  (edge group of index " << d.edge_index << ")\n";
    }
    r.text = t.str();
    return r;
  }

  Report cmd_simple_cert(Config const& cfg) {
    auto c = load(cfg);
    auto p = presentation_from_complex(c);
    auto w = word_of(cfg, p);
    CertificateOptions opts;
    opts.enumeration      = enum_opts(cfg);
    opts.simplicity_bound = cfg.bound;
    opts.delta_horizontal = cfg.delta_h;
    opts.delta_vertical   = cfg.delta_v;
    auto   cert = simplicity_certificate(c, w, cfg.assume_nrf, opts);
    Report r;
    r.body = cert.to_json();
    if (auto f = cert.failing_step()) {
      r.code = code_of(f->verdict);
    }
    std::ostringstream t;
    t << "certificate for " << c.name() << ", w = " << format_word(w, p.generators())
      << "\n";
    for (auto const& s : r.body["steps"]) {
      t << "  " << s["name"].get<std::string>() << ": " << s["verdict"].get<std::string>()
        << "\n";
    }
    for (auto const& a : r.body["assumptions"]) {
      t << "assumption: " << a.get<std::string>() << "\n";
    }
    if (!cfg.assume_nrf) {
      t << "no simplicity conclusion without --assume-nrf\n";
    }
    t << "conclusion: " << r.body["conclusion"].get<std::string>() << "\n";
    r.text = t.str();
    return r;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Square complexes, their local groups and fundamental groups"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Print help for every subcommand");

  Config cfg;
  std::map<CLI::App*, Report (*)(Config const&)> handlers;

  auto add = [&](std::string const& name, std::string const& about,
                 Report (*fn)(Config const&), bool needs_file = true) {
    auto* sub = app.add_subcommand(name, about);
    if (needs_file) {
      sub->add_option("complex", cfg.path, "complex file")->required()->check(CLI::ExistingFile);
    }
    sub->add_flag("--json", cfg.json_out, "write the JSON report to stdout");
    handlers[sub] = fn;
    return sub;
  };
  auto word_opt = [&](CLI::App* s, bool required) {
    auto* o = s->add_option("--word,-w", cfg.word, "word such as a2*a1^-1*a3*a4^-1");
    if (required) {
      o->required();
    }
  };
  auto enum_flags = [&](CLI::App* s) {
    s->add_option("--cap", cfg.cap, "maximum coset table rows")
        ->check(CLI::PositiveNumber);
    s->add_option("--strategy", cfg.strategy, "hlt or felsch")
        ->check(CLI::IsMember({"hlt", "felsch"}));
  };

  add("check-link", "exact-cover link condition", cmd_check_link);
  add("euler", "Euler characteristic of the complex", cmd_euler);

  auto* local = add("local", "local permutation group on a sphere", cmd_local);
  local->add_option("--side", cfg.side, "h or v")
      ->check(CLI::IsMember({"h", "v", "horizontal", "vertical"}));
  local->add_option("--depth,-k", cfg.depth, "sphere radius");
  local->add_flag("--labels", cfg.labels, "list the sphere words");

  add("irreducible", "irreducibility via |P_v^(2)|", cmd_irreducible);

  auto* nst = add("nst", "normal subgroup theorem hypotheses", cmd_nst);
  nst->add_option("--bound", cfg.bound, "largest group checked by brute force")
      ->check(CLI::PositiveNumber);

  auto* ci = add("closure-index", "index of the normal closure of a word", cmd_closure_index);
  word_opt(ci, true);
  enum_flags(ci);

  auto* qu = add("quotient", "structure of G / <<w>>", cmd_quotient);
  word_opt(qu, true);
  enum_flags(qu);
  qu->add_option("--table", cfg.table_path, "write the coset table as TSV");
  qu->add_option("--max-order", cfg.max_order, "largest quotient analysed")
      ->check(CLI::PositiveNumber);

  add("abelianize", "abelian invariants of the fundamental group", cmd_abelianize);

  auto* rs = add("rs", "Reidemeister-Schreier presentation of a subgroup", cmd_rs);
  word_opt(rs, false);
  enum_flags(rs);
  rs->add_flag("--print", cfg.print, "print the presentation");

  auto* simp = add("simplify", "Tietze-simplified subgroup presentation", cmd_simplify);
  word_opt(simp, false);
  enum_flags(simp);
  simp->add_flag("--print", cfg.print, "print the presentation");
  simp->add_option("--max-length", cfg.max_length, "total relator length budget")
      ->check(CLI::PositiveNumber);

  auto* am = add("amalgam", "ranks of the two amalgam decompositions", cmd_amalgam, false);
  am->add_option("complex", cfg.path, "complex file (or give --m and --n)")
      ->check(CLI::ExistingFile);
  am->add_option("--m", cfg.m, "number of horizontal generators");
  am->add_option("--n", cfg.n, "number of vertical generators");

  auto* sc = add("simple-cert", "simplicity certificate for <<w>>", cmd_simple_cert);
  word_opt(sc, true);
  enum_flags(sc);
  sc->add_option("--bound", cfg.bound, "largest group checked by brute force")
      ->check(CLI::PositiveNumber);
  sc->add_flag("--assume-nrf", cfg.assume_nrf,
               "acknowledge that w lies in the residual-finiteness obstruction of the "
               "embedded subcomplex");
  sc->add_option("--delta-h", cfg.delta_h, "horizontal generators of the embedded subcomplex")
      ->delimiter(',');
  sc->add_option("--delta-v", cfg.delta_v, "vertical generators of the embedded subcomplex")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    auto rc = app.exit(e);
    return rc == 0 ? 0 : exit_usage;
  }

  try {
    for (auto [sub, fn] : handlers) {
      if (!sub->parsed()) {
        continue;
      }
      auto r = fn(cfg);
      if (cfg.json_out) {
        std::cout << r.body.dump(2) << "\n";
      } else {
        std::cout << r.text;
      }
      return r.code;
    }
  } catch (UsageError const& e) {
    std::cerr << "vhcx: " << e.what() << "\n";
    return exit_usage;
  } catch (std::exception const& e) {
    std::cerr << "vhcx: internal error: " << e.what() << "\n";
    return 70;
  }
  return exit_usage;
}
