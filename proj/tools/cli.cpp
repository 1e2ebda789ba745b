#include "cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "msolve/gpform.hpp"
#include "msolve/petkovsek.hpp"
#include "msolve/riccati_hp.hpp"
#include "msolve/series.hpp"

namespace msolve::cli {

using nlohmann::json;

namespace {

json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

std::string series_to_string(const TruncatedSeries& f) {
  std::string s;
  for (int i = 0; i < f.order(); ++i) {
    const Rational& c = f.c[i];
    if (c == 0) continue;
    Poly term = Poly::monomial(c, i);
    std::string t = term.to_string();
    if (s.empty()) {
      s = t;
    } else if (t[0] == '-') {
      s += " - " + t.substr(1);
    } else {
      s += " + " + t;
    }
  }
  if (s.empty()) s = "0";
  return s + " + O(x^" + std::to_string(f.order()) + ")";
}

std::string form_string(const std::vector<Poly>& f, int q) {
  if (f.size() == 1) return f[0].to_string("x", q);
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "g" + std::to_string(i + 1) + "*(" + f[i].to_string("x", q) + ")";
  }
  return s.empty() ? "0" : s;
}

json petkovsek_stats_json(const PetkovsekStats& s) {
  return {{"pairs", s.pairs}, {"triples", s.triples}, {"candidates", s.candidates}, {"blocks", s.blocks}};
}

json hp_stats_json(const HPStats& s) {
  json j = {{"iterations", s.iterations}, {"candidates", s.candidates}, {"rejected", s.rejected},
            {"retries", s.retries}};
  j["final_sigma"] = s.trace.empty() ? 0 : s.trace.back().sigma;
  return j;
}

json trace_json(const HPStats& s) {
  json t = json::array();
  for (const auto& e : s.trace)
    t.push_back({{"lambda", rational_json(e.lambda)}, {"sigma", e.sigma}, {"N", e.N}, {"rho", e.rho},
                 {"outcome", e.outcome}});
  return t;
}

json blocks_json(const std::vector<SolutionBlock>& blocks) {
  json a = json::array();
  for (const auto& b : blocks) a.push_back(block_json(b));
  return a;
}

json polys_json(const std::vector<Poly>& ps, const std::string& var) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.to_string(var));
  return a;
}

std::string rational_text(const json& q) {
  auto s = [](const json& v) { return v.is_string() ? v.get<std::string>() : std::to_string(v.get<long>()); };
  std::string n = s(q["num"]), d = s(q["den"]);
  return d == "1" ? n : n + "/" + d;
}

ProblemFile load(const std::string& path) { return read_problem(path); }

// Converts library exceptions into exit codes for every subcommand.
template <class F>
int guarded(std::ostream& err, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return InputError;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return ResourceCap;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return InputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return Failure;
  }
}

std::string newton_text(const MahlerOperator& L) {
  std::ostringstream os;
  for (Side side : {Side::Lower, Side::Upper}) {
    NewtonPolygon np = newton_polygon(L, side);
    os << (side == Side::Lower ? "lower" : "upper") << " polygon\n";
    for (const auto& v : np.vertices)
      os << "  vertex k=" << v.k << " (" << v.abscissa.get_str() << ", " << v.ordinate << ")\n";
    for (const auto& e : np.edges)
      os << "  edge " << e.left.k << "-" << e.right.k << " slope " << e.slope.get_str() << " charpoly "
         << e.charpoly.to_string("X") << "\n";
  }
  AdmissibleData ad = admissible_data(L);
  os << "Lambda:";
  if (ad.lambdas.empty()) os << " (none)";
  os << "\n";
  for (const auto& ld : ad.lambdas)
    os << "  lambda=" << ld.lambda.get_str() << " q=" << ld.q << " p=" << ld.p << " nu_lambda=" << ld.nu_lambda.get_str()
       << (ld.viable ? "" : " (not viable)") << "\n";
  os << "Z:";
  for (const auto& z : ad.zeros) os << " " << z.get_str();
  os << "\n";
  for (const auto& p : ad.unsupported) os << "unsupported lambda: " << p.to_string("lambda") << " = 0\n";
  return os.str();
}

json newton_json(const MahlerOperator& L) {
  json j;
  for (Side side : {Side::Lower, Side::Upper}) {
    NewtonPolygon np = newton_polygon(L, side);
    json poly = {{"vertices", json::array()}, {"edges", json::array()}};
    for (const auto& v : np.vertices)
      poly["vertices"].push_back({{"k", v.k}, {"abscissa", integer_json(v.abscissa)}, {"ordinate", v.ordinate}});
    for (const auto& e : np.edges)
      poly["edges"].push_back({{"left", e.left.k}, {"right", e.right.k}, {"slope", rational_json(e.slope)},
                               {"charpoly", e.charpoly.to_string("X")}});
    j[side == Side::Lower ? "lower" : "upper"] = poly;
  }
  AdmissibleData ad = admissible_data(L);
  j["lambda"] = json::array();
  for (const auto& ld : ad.lambdas)
    j["lambda"].push_back({{"lambda", rational_json(ld.lambda)}, {"q", ld.q}, {"p", ld.p},
                           {"nu_lambda", rational_json(ld.nu_lambda)}, {"viable", ld.viable}});
  j["Z"] = json::array();
  for (const auto& z : ad.zeros) j["Z"].push_back(rational_json(z));
  j["unsupported_lambda"] = polys_json(ad.unsupported, "lambda");
  return j;
}

std::string verdict_text(const json& v) {
  std::ostringstream os;
  os << "status: " << v["status"].get<std::string>() << "\n";
  os << "(r2) operator: radix " << v["r2"]["radix"] << ", degree " << v["r2"]["degree"] << "\n";
  for (const char* eq : {"r1", "r2"})
    for (const auto& b : v[eq]["blocks"])
      os << "(" << eq << ") solution: (" << b["numerator"].get<std::string>() << ")/("
         << b["denominator"].get<std::string>() << ")\n";
  os << v["report"].get<std::string>() << "\n";
  return os.str();
}

struct BenchRow {
  std::string name, method;
  double seconds = 0;
  std::size_t blocks = 0;
  json counters, trace;
  std::string error;
};

BenchRow bench_one(const CorpusEntry& e, const std::string& method, int sigma_cap) {
  BenchRow row;
  row.name = e.name;
  row.method = method;
  auto t0 = std::chrono::steady_clock::now();
  try {
    if (method == "hp") {
      HPOptions o;
      o.sigma_cap = sigma_cap;
      HPResult r = riccati_hp_run(e.op, o);
      row.blocks = r.blocks.size();
      row.counters = hp_stats_json(r.stats);
      row.trace = json::array();
      for (const auto& t : r.stats.trace) row.trace.push_back({t.lambda.get_str(), t.sigma, t.N, t.rho});
    } else {
      PetkovsekStats s;
      auto blocks = riccati_ramified(e.op, method == "bp" ? PetkovsekMethod::Basic : PetkovsekMethod::Improved, &s);
      row.blocks = blocks.size();
      row.counters = petkovsek_stats_json(s);
    }
  } catch (const std::exception& ex) {
    row.error = ex.what();
  }
  row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

}  // namespace

json rational_json(const Rational& q) { return {{"num", integer_json(q.get_num())}, {"den", integer_json(q.get_den())}}; }

json block_json(const SolutionBlock& blk) {
  json params = json::array();
  if (blk.s() > 1)
    for (int i = 1; i <= blk.s(); ++i) params.push_back("g" + std::to_string(i));
  return {{"lambda", rational_json(blk.lambda)},
          {"ramification", blk.q},
          {"params", params},
          {"numerator", form_string(blk.u.num, blk.q)},
          {"denominator", form_string(blk.u.den, blk.q)},
          {"projective_dimension", blk.s() - 1}};
}

json verdict_json(const TranscendenceVerdict& v) {
  json j;
  j["status"] = v.status == TranscendenceStatus::Independent ? "independent" : "inconclusive";
  j["r2"] = {{"radix", v.r2.radix()}, {"degree", v.r2.degree()}, {"operator", v.r2.to_string()}};
  j["r1"] = {{"blocks", blocks_json(v.r1_solutions)},
             {"unsupported_lambda", polys_json(v.r1_unsupported, "lambda")},
             {"stats", hp_stats_json(v.r1_stats)}};
  j["r2"]["blocks"] = blocks_json(v.r2_solutions);
  j["r2"]["unsupported_lambda"] = polys_json(v.r2_unsupported, "lambda");
  j["r2"]["stats"] = hp_stats_json(v.r2_stats);
  j["report"] = v.report;
  return j;
}

SolveResult solve(const ProblemFile& p, const SolveOptions& opts) {
  const MahlerOperator& L = p.op;
  SolveResult res;
  json& doc = res.doc;
  if (!p.name.empty()) doc["name"] = p.name;
  doc["radix"] = L.radix();
  doc["order"] = L.order();
  doc["degree"] = L.degree();
  doc["method"] = opts.method;
  doc["stats"] = json::object();

  const bool all = opts.method == "all";
  if (!all && opts.method != "bp" && opts.method != "ip" && opts.method != "hp")
    throw std::invalid_argument("unknown method " + opts.method);
  std::vector<std::pair<std::string, std::vector<SolutionBlock>>> runs;
  std::vector<Poly> unsupported = admissible_data(L).unsupported;
  for (const char* m : {"bp", "ip"}) {
    if (!all && opts.method != m) continue;
    PetkovsekStats s;
    auto blocks = riccati_ramified(L, m == std::string("bp") ? PetkovsekMethod::Basic : PetkovsekMethod::Improved, &s);
    doc["stats"][m] = petkovsek_stats_json(s);
    runs.emplace_back(m, std::move(blocks));
  }
  if (all || opts.method == "hp") {
    HPOptions o;
    o.sigma_cap = opts.sigma_cap;
    HPResult r = riccati_hp_run(L, o);
    doc["stats"]["hp"] = hp_stats_json(r.stats);
    if (opts.trace) doc["trace"] = trace_json(r.stats);
    runs.emplace_back("hp", std::move(r.blocks));
  }
  bool agree = true;
  for (std::size_t i = 1; i < runs.size(); ++i) agree = agree && same_blocks(runs[0].second, runs[i].second);
  if (all) doc["methods_agree"] = agree;
  doc["blocks"] = blocks_json(runs.back().second);
  doc["unsupported_lambda"] = polys_json(unsupported, "lambda");
  if (!agree) res.exit_code = Failure;
  else if (opts.strict && !unsupported.empty()) res.exit_code = UnsupportedOnly;
  return res;
}

std::string solve_text(const json& doc) {
  std::ostringstream os;
  if (doc.contains("name")) os << doc["name"].get<std::string>() << "\n";
  os << "radix " << doc["radix"] << ", order " << doc["order"] << ", degree " << doc["degree"] << "\n";
  int i = 0;
  for (const auto& b : doc["blocks"]) {
    os << "block " << ++i << ": lambda=" << rational_text(b["lambda"]) << " q=" << b["ramification"]
       << " projective_dimension=" << b["projective_dimension"] << "\n";
    os << "  u = (" << b["numerator"].get<std::string>() << ")/(" << b["denominator"].get<std::string>() << ")\n";
  }
  if (doc["blocks"].empty()) os << "no ramified rational solution\n";
  for (const auto& u : doc["unsupported_lambda"]) os << "unsupported lambda: " << u.get<std::string>() << " = 0\n";
  for (const auto& [m, s] : doc["stats"].items()) {
    os << "stats " << m << ":";
    for (const auto& [k, v] : s.items()) os << " " << k << "=" << v;
    os << "\n";
  }
  if (doc.contains("methods_agree")) os << "methods agree: " << (doc["methods_agree"].get<bool>() ? "yes" : "NO") << "\n";
  if (doc.contains("trace"))
    for (const auto& t : doc["trace"])
      os << "trace lambda=" << rational_text(t["lambda"]) << " sigma=" << t["sigma"] << " N=" << t["N"]
         << " rho=" << t["rho"] << " " << t["outcome"].get<std::string>() << "\n";
  return os.str();
}

std::vector<CorpusEntry> corpus_entries() {
  std::vector<CorpusEntry> out;
  for (auto& e : corpus::small_entries()) out.push_back({e.name, e.op, true});
  out.push_back({"cube_root", corpus::cube_root(), true});
  out.push_back({"Adamczewski_Faverjon", corpus::adamczewski_faverjon(), false});
  out.push_back({"no_solution_b4", corpus::no_solution_b4(), false});
  for (auto& e : corpus::order_two_entries()) out.push_back({"dft_" + e.name, riccati_r2_operator(e.op), false});
  for (auto [b, q] : {std::pair{3, 2}, {7, 3}, {5, 3}})
    out.push_back({"lclm_" + std::to_string(q) + "pow_b" + std::to_string(b), corpus::lclm_pow(b, q), false});
  for (auto [b, d] : {std::pair{2, 1}, {3, 1}, {3, 2}})
    out.push_back({"rmo_" + std::to_string(b) + "_" + std::to_string(d), corpus::rmo(b, d, 1).op, false});
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ramified rational solutions of Riccati Mahler equations", "msolve"};
  app.require_subcommand(1);

  std::string file;
  SolveOptions sopt;
  bool text = false, json_out = false;
  auto* solve_cmd = app.add_subcommand("solve", "Solve the Riccati equation of an operator");
  solve_cmd->add_option("file", file, "Problem file")->required();
  solve_cmd->add_option("--method", sopt.method, "bp, ip, hp or all")->check(CLI::IsMember({"bp", "ip", "hp", "all"}));
  solve_cmd->add_option("--sigma-cap", sopt.sigma_cap, "Largest truncation order for hp");
  auto* jflag = solve_cmd->add_flag("--json", json_out, "JSON output (default)");
  solve_cmd->add_flag("--text", text, "Text output")->excludes(jflag);
  solve_cmd->add_flag("--trace", sopt.trace, "Report (N, rho) for every sigma visited by hp");
  solve_cmd->add_flag("--strict", sopt.strict, "Exit 3 when an irrational leading coefficient is skipped");

  bool newton_json_out = false;
  auto* newton_cmd = app.add_subcommand("newton", "Newton polygons, admissible lambdas and Z(L)");
  newton_cmd->add_option("file", file, "Problem file")->required();
  newton_cmd->add_flag("--json", newton_json_out, "JSON output");

  int order = 0;
  auto* series_cmd = app.add_subcommand("series", "Basis of power-series solutions");
  series_cmd->add_option("file", file, "Problem file")->required();
  series_cmd->add_option("--order", order, "Truncation order")->required()->check(CLI::PositiveNumber);

  std::string P, Q;
  int r = 2, radix = 2;
  auto* bgpf_cmd = app.add_subcommand("bgpf", "Bounded Gosper-Petkovsek form of P/Q");
  bgpf_cmd->add_option("P", P, "Numerator in x")->required();
  bgpf_cmd->add_option("Q", Q, "Denominator in x")->required();
  bgpf_cmd->add_option("r", r, "Order")->required()->check(CLI::PositiveNumber);
  bgpf_cmd->add_option("--radix", radix, "Radix")->check(CLI::Range(2, 1000));

  bool dtrans_json = false;
  auto* dtrans_cmd = app.add_subcommand("dtrans", "Differential transcendence criterion for order 2");
  dtrans_cmd->add_option("file", file, "Problem file")->required();
  dtrans_cmd->add_flag("--json", dtrans_json, "JSON output");

  std::vector<std::string> only, methods{"hp"};
  int jobs = 1, bench_cap = 20000;
  bool bench_json = false;
  auto* bench_cmd = app.add_subcommand("bench", "Run the corpus and report counters");
  bench_cmd->add_option("--only", only, "Entry names");
  bench_cmd->add_option("--methods", methods, "Methods to run (bp and ip only on small entries)")
      ->delimiter(',')
      ->check(CLI::IsMember({"bp", "ip", "hp"}));
  bench_cmd->add_option("--jobs", jobs, "Entries run concurrently")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--sigma-cap", bench_cap, "Largest truncation order for hp");
  bench_cmd->add_flag("--json", bench_json, "JSON output");

  std::string outdir;
  auto* corpus_cmd = app.add_subcommand("corpus", "Write the corpus as problem files");
  corpus_cmd->add_option("--out", outdir, "Output directory")->required();
  corpus_cmd->add_option("--only", only, "Entry names");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? Ok : InputError;
  }

  if (*solve_cmd) {
    return guarded(err, [&] {
      SolveResult res = solve(load(file), sopt);
      if (text) out << solve_text(res.doc);
      else out << res.doc.dump(2) << "\n";
      if (res.exit_code == Failure) err << "methods disagree\n";
      if (res.exit_code == UnsupportedOnly) err << "irrational leading coefficients were not examined\n";
      return res.exit_code;
    });
  }
  if (*newton_cmd) {
    return guarded(err, [&] {
      ProblemFile p = load(file);
      if (newton_json_out) out << newton_json(p.op).dump(2) << "\n";
      else out << newton_text(p.op);
      return int(Ok);
    });
  }
  if (*series_cmd) {
    return guarded(err, [&] {
      SeriesBasis B = series_basis(load(file).op, order);
      out << "dimension " << B.dim() << "\n";
      for (const auto& z : B.elements) out << series_to_string(z) << "\n";
      return int(Ok);
    });
  }
  if (*bgpf_cmd) {
    return guarded(err, [&] {
      Poly p = parse_polynomial(P), q = parse_polynomial(Q);
      if (p.is_zero() || q.is_zero()) throw std::invalid_argument("P and Q must be nonzero");
      GPForm f = bgpf_from_rational(p, q, r, radix);
      out << "zeta: " << f.zeta.get_str() << "\nA: " << f.A.to_string() << "\nB: " << f.B.to_string()
          << "\nC: " << f.C.to_string() << "\nconditions: " << (check_bgpf(f, RatFun(p, q)) ? "ok" : "FAILED") << "\n";
      return int(Ok);
    });
  }
  if (*dtrans_cmd) {
    return guarded(err, [&] {
      json v = verdict_json(independence_check(load(file).op));
      if (dtrans_json) out << v.dump(2) << "\n";
      else out << verdict_text(v);
      return int(Ok);
    });
  }
  if (*bench_cmd) {
    return guarded(err, [&] {
      std::vector<std::pair<CorpusEntry, std::string>> work;
      for (auto& e : corpus_entries()) {
        if (!only.empty() && std::find(only.begin(), only.end(), e.name) == only.end()) continue;
        for (const auto& m : methods)
          if (m == "hp" || e.small) work.emplace_back(e, m);
      }
      std::vector<BenchRow> rows(work.size());
      std::size_t next = 0;
      while (next < work.size()) {
        std::vector<std::future<BenchRow>> batch;
        for (int j = 0; j < jobs && next < work.size(); ++j, ++next)
          batch.push_back(std::async(std::launch::async, bench_one, work[next].first, work[next].second, bench_cap));
        std::size_t base = next - batch.size();
        for (std::size_t j = 0; j < batch.size(); ++j) rows[base + j] = batch[j].get();
      }
      json all = json::array();
      for (const auto& row : rows) {
        if (bench_json) {
          all.push_back({{"name", row.name}, {"method", row.method}, {"seconds", row.seconds}, {"blocks", row.blocks},
                         {"counters", row.counters}, {"sigma_trace", row.trace}, {"error", row.error}});
          continue;
        }
        out << row.name << " " << row.method << " " << row.seconds << "s blocks=" << row.blocks;
        if (!row.error.empty()) out << " error: " << row.error;
        for (const auto& [k, v] : row.counters.items())
          if (k != "blocks") out << " " << k << "=" << v;
        if (!row.trace.is_null()) {
          std::string lambda;
          for (const auto& t : row.trace) {
            if (t[0].get<std::string>() != lambda) {
              lambda = t[0].get<std::string>();
              out << " | lambda=" << lambda << " sigma(N,rho):";
            }
            out << " " << t[1] << "(" << t[2] << "," << t[3] << ")";
          }
        }
        out << "\n";
      }
      if (bench_json) out << all.dump(2) << "\n";
      return int(Ok);
    });
  }
  if (*corpus_cmd) {
    return guarded(err, [&] {
      std::filesystem::create_directories(outdir);
      for (auto& e : corpus_entries()) {
        if (!only.empty() && std::find(only.begin(), only.end(), e.name) == only.end()) continue;
        ProblemFile p{e.name, e.op.radix(), e.op, e.name + ".expected.json"};
        std::ofstream f(outdir + "/" + e.name + ".problem");
        f << format_problem(p);
      }
      return int(Ok);
    });
  }
  return Failure;
}

}  // namespace msolve::cli
