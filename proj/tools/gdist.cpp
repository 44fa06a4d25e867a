// gdist: genus and Euler-genus distributions from the command line.
#include "gdist/asympt.hpp"
#include "gdist/distributions.hpp"
#include "gdist/embedding.hpp"
#include "gdist/emit.hpp"
#include "gdist/graph.hpp"
#include "gdist/series.hpp"
#include "gdist/transfer.hpp"
#include "gdist/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace gdist;
using nlohmann::json;

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Common {
  std::string mode = "genus";
  std::uint64_t budget = 100000000ULL;
  int workers = 0;
  std::string format = "text";
  std::uint64_t seed = 20240611;
  int guard = 3;
  int pmax = 12, qmax = 12;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// A file path, or name:params for a built-in graph (e.g. doubled_cycle:3, grid:3,4).
Graph graph_arg(const std::string& arg) {
  try {
    if (std::filesystem::exists(arg)) return load_graph(arg);
    const auto colon = arg.find(':');
    if (colon == std::string::npos) throw UsageError("no such graph file: " + arg);
    std::vector<int> params;
    std::stringstream ss(arg.substr(colon + 1));
    for (std::string tok; std::getline(ss, tok, ',');) params.push_back(std::stoi(tok));
    return build_named(arg.substr(0, colon), params);
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad graph ") + arg + ": " + e.what());
  }
}

FaceMode face_mode(const std::string& m) {
  if (m == "genus") return FaceMode::orientable;
  if (m == "euler") return FaceMode::euler;
  throw UsageError("--mode must be genus or euler");
}

PartialMode partial_mode(const std::string& m) {
  return face_mode(m) == FaceMode::euler ? PartialMode::euler : PartialMode::genus;
}

FamilySpec family_arg(const std::string& arg, const Common& c, bool mode_given) {
  try {
    if (std::filesystem::exists(arg)) {
      json j = json::parse(slurp(arg));
      if (mode_given) j["mode"] = c.mode;
      return parse_family_json(j.dump());
    }
    return named_family(arg, face_mode(c.mode));
  } catch (const UsageError&) {
    throw;
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad family ") + arg + ": " + e.what());
  }
}

RationalGF gf_arg(const std::string& arg) {
  try {
    if (arg == "-" || std::filesystem::exists(arg)) {
      const std::string s = arg == "-" ? std::string(std::istreambuf_iterator<char>(std::cin), {}) : slurp(arg);
      const auto first = s.find_first_not_of(" \t\r\n");
      if (first != std::string::npos && s[first] == '{') return gf_from_json(json::parse(s));
      return parse_gf(s);
    }
    return parse_gf(arg);
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad generating function ") + arg + ": " + e.what());
  }
}

OracleOptions oracle(const Common& c) {
  OracleOptions o;
  o.budget = c.budget;
  o.workers = c.workers;
  return o;
}

void print_poly(const LaurentPoly& p, Format f) { std::cout << emit_poly(p, f); }

void print_series(const SeriesPrefix& s, int first, Format f) {
  if (f == Format::json) {
    std::cout << series_json(s, first).dump() << "\n";
  } else if (f == Format::tsv) {
    std::cout << "n\texp\tcoeff\n";
    for (std::size_t i = 0; i < s.size(); ++i)
      for (const auto& [e, c] : s[i].terms()) std::cout << first + static_cast<int>(i) << '\t' << e << '\t' << to_string(c) << '\n';
  } else {
    for (std::size_t i = 0; i < s.size(); ++i) std::cout << first + static_cast<int>(i) << ": " << s[i].str() << "\n";
  }
}

int cmd_verify(const Common& c, const std::string& only, const std::string& report_dir, bool skip_c3_euler) {
  VerifyOptions vo;
  vo.seed = c.seed;
  vo.workers = c.workers;
  vo.report_dir = report_dir;
  vo.c3_euler_oracle = !skip_c3_euler;
  std::vector<int> ids;
  if (only.empty()) {
    for (int i = 1; i <= kCriteria; ++i) ids.push_back(i);
  } else {
    std::stringstream ss(only);
    for (std::string tok; std::getline(ss, tok, ',');) ids.push_back(std::stoi(tok));
  }
  const Format f = parse_format(c.format);
  json rows = json::array();
  int failed = 0;
  if (f == Format::tsv) std::cout << "id\tpass\tseconds\tsummary\n";
  for (int id : ids) {
    const auto r = run_criterion(id, vo);
    failed += !r.pass;
    if (f == Format::json) {
      rows.push_back({{"id", r.id}, {"pass", r.pass}, {"title", r.title}, {"summary", r.summary},
                      {"details", r.details}, {"seconds", r.seconds}});
    } else if (f == Format::tsv) {
      std::cout << r.id << '\t' << (r.pass ? "pass" : "fail") << '\t' << r.seconds << '\t' << r.summary << "\n";
    } else {
      std::cout << format_result_line(r) << "\n";
      for (const auto& d : r.details) std::cout << "    " << d << "\n";
    }
    std::cout.flush();
  }
  if (f == Format::json) std::cout << rows.dump(1) << "\n";
  if (f == Format::text) std::cout << (ids.size() - static_cast<std::size_t>(failed)) << "/" << ids.size() << " passed\n";
  return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genus and Euler-genus distributions of graphs and graph families"};
  app.require_subcommand(1, 1);
  Common c;

  auto add_common = [&](CLI::App* s) {
    s->add_option("--mode", c.mode, "genus or euler")->envname("GDIST_MODE")->check(CLI::IsMember({"genus", "euler"}));
    s->add_option("--budget", c.budget, "maximum number of embeddings to enumerate")->envname("GDIST_BUDGET");
    s->add_option("--workers", c.workers, "worker threads (0 = all cores)")->envname("GDIST_WORKERS");
    s->add_option("--format", c.format, "text, json or tsv")->envname("GDIST_FORMAT")->check(CLI::IsMember({"text", "json", "tsv"}));
    s->add_option("--seed", c.seed, "seed for randomized checks")->envname("GDIST_SEED");
  };

  std::string graph_path, fam, gf_src, source;
  int u = 0, v = 0, series_n = 0;
  bool want_gf = false, derive = false, diff = false, printed = false, skip_c3 = false;
  std::string at = "1", ns = "75,300", only, report_dir = ".";
  double mu = -1, sigma2 = -1;

  auto* genus = app.add_subcommand("genus", "genus polynomial by face tracing");
  genus->add_option("graph", graph_path, "graph file or name:params")->required();
  add_common(genus);

  auto* euler = app.add_subcommand("euler", "Euler-genus polynomial by face tracing");
  euler->add_option("graph", graph_path)->required();
  add_common(euler);

  auto* family = app.add_subcommand("family", "transfer engine for a graph family");
  family->add_option("spec", fam, "family JSON file or a built-in name")->required();
  auto* series_opt = family->add_option("--series", series_n, "number of terms");
  auto* gf_opt = family->add_flag("--gf", want_gf, "reconstruct the rational generating function");
  series_opt->excludes(gf_opt);
  family->add_option("--guard", c.guard)->envname("GDIST_GUARD");
  family->add_option("--pmax", c.pmax)->envname("GDIST_PMAX");
  family->add_option("--qmax", c.qmax)->envname("GDIST_QMAX");
  add_common(family);

  auto* partials = app.add_subcommand("partials", "partial distributions for two pendant marks");
  partials->add_option("graph", graph_path)->required();
  partials->add_option("u", u)->required();
  partials->add_option("v", v)->required();
  add_common(partials);

  auto* ped = app.add_subcommand("ped", "ten-type partial Euler-genus vector for two degree-2 vertices");
  ped->add_option("graph", graph_path)->required();
  ped->add_option("s", u)->required();
  ped->add_option("t", v)->required();
  add_common(ped);

  auto* tables = app.add_subcommand("tables", "transition tables for the ten partial types");
  tables->add_flag("--derive", derive, "regenerate the tables by face tracing");
  tables->add_flag("--diff", diff, "report differences against the printed tables");
  tables->add_flag("--printed", printed, "show the printed tables");
  add_common(tables);

  auto* asym = app.add_subcommand("asympt", "dominant singularity, mean and variance");
  asym->add_option("gf", gf_src, "GF text \"(num)/(den)\" or file")->required();
  asym->add_option("--at", at, "x value (rational)");
  add_common(asym);

  auto* norm = app.add_subcommand("normality", "KS distance of normalized terms to a normal law");
  norm->add_option("source", source, "cn2-genus, cn2-euler, or a GF text/file")->required();
  norm->add_option("--ns", ns, "comma-separated n values");
  norm->add_option("--mu", mu, "mean per unit n (default: from the GF at x=1)");
  norm->add_option("--sigma2", sigma2, "variance per unit n (default: from the GF at x=1)");
  add_common(norm);

  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  verify->add_option("--only", only, "comma-separated criterion ids");
  verify->add_option("--report-dir", report_dir, "where tables_diff.txt is written");
  verify->add_flag("--skip-c3-euler", skip_c3, "skip the C_3^3 Euler oracle (about 2e8 embeddings)");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Format f = parse_format(c.format);
    if (genus->parsed()) {
      print_poly(genus_distribution_oracle(graph_arg(graph_path), oracle(c)).poly(), f);
    } else if (euler->parsed()) {
      const auto r = euler_distribution_oracle(graph_arg(graph_path), oracle(c));
      if (f == Format::json)
        std::cout << json{{"euler", poly_json(r.euler.poly())}, {"orientable", poly_json(r.orientable.poly(), true)},
                          {"crosscap", poly_json(r.crosscap.poly(), true)}}.dump() << "\n";
      else
        print_poly(r.euler.poly(), f);
    } else if (family->parsed()) {
      const auto spec = family_arg(fam, c, family->get_option("--mode")->count() > 0 || std::getenv("GDIST_MODE"));
      if (want_gf) {
        const auto fg = family_rational_gf(spec, c.pmax, c.qmax, c.guard);
        if (f == Format::json) {
          json j = gf_json(fg.pade.gf);
          j["p"] = fg.pade.p;
          j["q"] = fg.pade.q;
          j["index"] = fg.index_note;
          std::cout << j.dump() << "\n";
        } else {
          std::cout << gf_text(fg.pade.gf) << "\n";
          if (f == Format::text) std::cerr << fg.index_note << "\n";
        }
      } else {
        if (series_n <= 0) throw UsageError("family: give --series N (N >= 1) or --gf");
        print_series(family_series(spec, series_n), 1, f);
        if (f == Format::text) std::cerr << family_index_note(spec) << "\n";
      }
    } else if (partials->parsed()) {
      const auto p = partial_pair_oracle(graph_arg(graph_path), u, v, partial_mode(c.mode), oracle(c));
      if (f == Format::json)
        std::cout << json{{"D", poly_json(p.d, true)}, {"S", poly_json(p.s, true)}}.dump() << "\n";
      else if (f == Format::tsv)
        std::cout << "part\texp\tcoeff\n" << [&] {
          std::ostringstream os;
          for (const auto& [e, k] : p.d.terms()) os << "D\t" << e << '\t' << to_string(k) << '\n';
          for (const auto& [e, k] : p.s.terms()) os << "S\t" << e << '\t' << to_string(k) << '\n';
          return os.str();
        }();
      else
        std::cout << "D = " << p.d.str() << "\nS = " << p.s.str() << "\n";
    } else if (ped->parsed()) {
      const auto pv = ped_vector_oracle(graph_arg(graph_path), u, v, oracle(c));
      if (f == Format::json) {
        json j;
        for (int k = 0; k < kPedTypes; ++k) j[ped_type_name(k)] = poly_json(pv[static_cast<std::size_t>(k)], true);
        std::cout << j.dump() << "\n";
      } else {
        for (int k = 0; k < kPedTypes; ++k)
          std::cout << ped_type_name(k) << (f == Format::tsv ? "\t" : " = ") << pv[static_cast<std::size_t>(k)].str() << "\n";
      }
    } else if (tables->parsed()) {
      if (!derive && !diff && !printed) throw UsageError("tables: give --derive, --diff and/or --printed");
      const auto pt = printed_transition_tables();
      if (printed) std::cout << pt.to_json() << "\n";
      if (derive || diff) {
        const auto dt = derive_transition_tables();
        if (derive) std::cout << dt.to_json() << "\n";
        if (diff) std::cout << diff_tables(pt, dt);
      }
    } else if (asym->parsed()) {
      const auto gf = gf_arg(gf_src);
      Rational x0;
      try {
        x0 = parse_rational(at);
      } catch (const std::exception&) {
        throw UsageError("--at must be a rational number");
      }
      const auto rep = mean_variance_at(gf.den(), x0);
      if (f == Format::json) {
        json j{{"x", to_string(x0)}, {"r", float_str(rep.r.real())}, {"simple", rep.simple}, {"unique", rep.unique},
               {"mu", rep.mu_exact ? to_string(*rep.mu_exact) : float_str(rep.mu)},
               {"sigma2", rep.sigma2_exact ? to_string(*rep.sigma2_exact) : float_str(rep.sigma2)},
               {"fd_rel_error", float_str(rep.fd_rel_error, 6)}};
        if (rep.r_exact) j["r_exact"] = to_string(*rep.r_exact);
        std::cout << j.dump() << "\n";
      } else {
        std::cout << rep.str();
      }
    } else if (norm->parsed()) {
      std::vector<int> nlist;
      {
        std::stringstream ss(ns);
        for (std::string tok; std::getline(ss, tok, ',');) nlist.push_back(std::stoi(tok));
      }
      if (nlist.empty()) throw UsageError("--ns is empty");
      const int nmax = *std::max_element(nlist.begin(), nlist.end());
      SeriesPrefix s;
      double m = mu, s2 = sigma2;
      if (source == "cn2-genus") {
        s = cn2_recurrences(CnRecurrence::genus6, nmax);
        if (m < 0) m = 0.25;
        if (s2 < 0) s2 = 3.0 / 32;
      } else if (source == "cn2-euler") {
        const auto eng = family_series(named_family("doubled_cycle", FaceMode::euler), 6);
        s = cn2_recurrences(CnRecurrence::euler6, nmax, eng);
        if (m < 0) m = 5.0 / 7;
        if (s2 < 0) s2 = 78.0 / 343;
      } else {
        const auto gf = gf_arg(source);
        s = gf.series(nmax);
        if (m < 0 || s2 < 0) {
          const auto rep = mean_variance_at(gf.den(), 1);
          if (m < 0) m = rep.mu.convert_to<double>();
          if (s2 < 0) s2 = rep.sigma2.convert_to<double>();
        }
      }
      const auto rows = normality_report(s, nlist, m, s2);
      if (f == Format::json) {
        json out = json::array();
        for (const auto& r : rows)
          out.push_back({{"n", r.n}, {"mean", r.mean}, {"variance", r.variance}, {"target_mean", r.target_mean},
                         {"target_variance", r.target_variance}, {"ks", r.ks}});
        std::cout << out.dump() << "\n";
      } else {
        std::cout << "n\tmean\tvariance\ttarget_mean\ttarget_variance\tks\n";
        for (const auto& r : rows)
          std::cout << r.n << '\t' << r.mean << '\t' << r.variance << '\t' << r.target_mean << '\t' << r.target_variance
                    << '\t' << r.ks << "\n";
      }
    } else if (verify->parsed()) {
      return cmd_verify(c, only, report_dir, skip_c3);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const EmitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const BudgetExceeded& e) {
    std::cerr << e.what() << "\nneeded: " << e.required.get_str() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
