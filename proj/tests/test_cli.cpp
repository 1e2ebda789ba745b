#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "msolve/corpus.hpp"

using namespace msolve;
using nlohmann::json;

namespace {

Poly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Poly(v);
}

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  auto dir = std::filesystem::temp_directory_path() / "msolve_cli_test";
  std::filesystem::create_directories(dir);
  auto path = (dir / name).string();
  std::ofstream(path) << text;
  return path;
}

std::vector<int> projective_dims(const json& doc) {
  std::vector<int> d;
  for (const auto& b : doc["blocks"]) d.push_back(b["projective_dimension"]);
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

TEST(ParseOperator, SternBrocot) {
  auto p = parse_problem("radix: 2\noperator: (1+x^2+x^4)*M^2 \xE2\x88\x92 (1+x+2*x^2)*M + x\n");
  EXPECT_EQ(p.op, corpus::stern_brocot_b2());
}

TEST(ParseOperator, Trivial) {
  EXPECT_EQ(parse_operator("M - 1", 3), MahlerOperator(3, {Poly(-1), Poly(1)}));
  EXPECT_EQ(parse_operator("M^1 - 1", 3), parse_operator("M-1", 3));
  EXPECT_EQ(parse_operator("M*M - x", 2), corpus::cube_root());
}

TEST(ParseOperator, RationalCoefficients) {
  auto L = parse_operator("(1/3 + x/2)*M - (x + 1)^2/6", 2);
  EXPECT_EQ(L, MahlerOperator(2, {-P({1, 2, 1}), P({2, 3})}));
  EXPECT_EQ(parse_polynomial("(x-1)*(x+1) - x^2"), Poly(-1));
}

TEST(ParseOperator, CoefficientRightOfMIsRejected) {
  try {
    parse_problem("operator: M*x \xE2\x88\x92 1\n");
    FAIL() << "accepted M*x";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 13);
    EXPECT_NE(std::string(e.what()).find("right of M"), std::string::npos);
  }
}

TEST(ParseOperator, Errors) {
  EXPECT_THROW(parse_operator("x*M^2 + x*M", 2), ParseError);  // l0 = 0
  EXPECT_THROW(parse_operator("x + 1", 2), ParseError);        // order 0
  EXPECT_THROW(parse_operator("M - 1", 1), ParseError);
  EXPECT_THROW(parse_operator("(M + 1)^2", 2), ParseError);
  EXPECT_THROW(parse_operator("M - 1/x", 2), ParseError);
  EXPECT_THROW(parse_operator("M - y", 2), ParseError);
  EXPECT_THROW(parse_operator("2x*M - 1", 2), ParseError);
  try {
    parse_problem("# header\nradix: 2\noperator: x*M - (1 + x\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 17);
  }
  EXPECT_THROW(parse_problem("operator: M - 1\n"), ParseError);
  EXPECT_THROW(parse_problem("radix: 2\n"), ParseError);
  EXPECT_THROW(parse_problem("radix: two\noperator: M - 1\n"), ParseError);
  EXPECT_THROW(parse_problem("radix: 2\nop: M - 1\n"), ParseError);
}

TEST(ParseOperator, RoundTrip) {
  std::vector<MahlerOperator> ops;
  for (const auto& e : cli::corpus_entries()) ops.push_back(e.op);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(-7, 7), d(0, 4), r(1, 3), b(2, 5);
  for (int t = 0; t < 100; ++t) {
    std::vector<Poly> coeffs(r(rng) + 1);
    for (auto& p : coeffs) {
      std::vector<Rational> v(d(rng) + 1);
      for (auto& x : v) x = Rational(c(rng), 1 + d(rng));
      p = Poly(v);
    }
    if (coeffs.front().is_zero()) coeffs.front() = Poly(1);
    if (coeffs.back().is_zero()) coeffs.back() = Poly::x();
    ops.emplace_back(b(rng), coeffs);
  }
  for (const auto& L : ops) {
    ProblemFile p{"t", L.radix(), L, std::nullopt};
    EXPECT_EQ(parse_problem(format_problem(p)).op, L) << L.to_string();
  }
}

TEST(Cli, SternBrocotAllMethods) {
  auto path = write_temp("sb.problem", "radix: 2\noperator: (1+x^2+x^4)*M^2 - (1+x+2*x^2)*M + x\n");
  CliRun r = run({"solve", path, "--method", "all"});
  ASSERT_EQ(r.code, 0) << r.err;
  json doc = json::parse(r.out);
  EXPECT_TRUE(doc["methods_agree"].get<bool>());
  ASSERT_EQ(doc["blocks"].size(), 1u);
  EXPECT_EQ(doc["blocks"][0]["projective_dimension"], 0);
  EXPECT_EQ(doc["blocks"][0]["numerator"], "x");
  EXPECT_EQ(doc["blocks"][0]["denominator"], "x^2 + x + 1");
  EXPECT_EQ(doc["blocks"][0]["lambda"], json({{"num", 1}, {"den", 1}}));
  for (const char* m : {"bp", "ip", "hp"}) EXPECT_TRUE(doc["stats"].contains(m));
  // Stable across runs.
  EXPECT_EQ(run({"solve", path, "--method", "all"}).out, r.out);
}

TEST(Cli, AdamczewskiFaverjon) {
  CliRun r = run({"solve", std::string(MSOLVE_BINARY_DIR) + "/corpus/Adamczewski_Faverjon.problem", "--method", "hp"});
  ASSERT_EQ(r.code, 0) << r.err;
  json doc = json::parse(r.out);
  EXPECT_EQ(doc["order"], 4);
  EXPECT_EQ(doc["degree"], 258);
  EXPECT_EQ(projective_dims(doc), (std::vector<int>{0, 0, 1}));
  for (const auto& b : doc["blocks"])
    if (b["projective_dimension"] == 1) EXPECT_EQ(b["params"], json({"g1", "g2"}));
}

TEST(Cli, SigmaCapExitCode) {
  auto path = write_temp("ns.problem", "radix: 4\noperator: M^4 - M + x^10\n");
  CliRun r = run({"solve", path, "--sigma-cap", "100"});
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.err.find("cap"), std::string::npos);
  CliRun ok = run({"solve", path, "--text"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_NE(ok.out.find("no ramified rational solution"), std::string::npos);
}

TEST(Cli, ParseErrorExitCode) {
  auto path = write_temp("bad.problem", "operator: M*x - 1\n");
  CliRun r = run({"solve", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 1, column 13"), std::string::npos);
  EXPECT_EQ(run({"solve", "/nonexistent/x.problem"}).code, 2);
  EXPECT_EQ(run({"solve", path, "--method", "xyz"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, StrictUnsupported) {
  auto path = write_temp("sqrt2.problem", "radix: 2\noperator: M^2 - 2\n");
  CliRun r = run({"solve", path, "--strict"});
  EXPECT_EQ(r.code, 3);
  json doc = json::parse(r.out);
  EXPECT_TRUE(doc["blocks"].empty());
  EXPECT_EQ(doc["unsupported_lambda"], json({"lambda^2 - 2"}));
  EXPECT_EQ(run({"solve", path}).code, 0);
}

TEST(Cli, Trace) {
  auto path = write_temp("sb2.problem", "radix: 2\noperator: (1+x^2+x^4)*M^2 - (1+x+2*x^2)*M + x\n");
  json doc = json::parse(run({"solve", path, "--trace"}).out);
  ASSERT_FALSE(doc["trace"].empty());
  int prev = 0;
  for (const auto& t : doc["trace"]) {
    EXPECT_GT(t["sigma"].get<int>(), prev);
    prev = t["sigma"];
  }
  EXPECT_EQ(doc["trace"].back()["rho"], 1);
}

TEST(Cli, OtherSubcommands) {
  auto path = write_temp("sb3.problem", "radix: 2\noperator: (1+x^2+x^4)*M^2 - (1+x+2*x^2)*M + x\n");
  CliRun n = run({"newton", path, "--json"});
  ASSERT_EQ(n.code, 0);
  json nj = json::parse(n.out);
  EXPECT_EQ(nj["lambda"].size(), 1u);
  EXPECT_EQ(nj["Z"], json::array({json({{"num", 1}, {"den", 1}})}));
  CliRun s = run({"series", path, "--order", "8"});
  EXPECT_EQ(s.out, "dimension 1\nx + x^2 + 2*x^3 + x^4 + 3*x^5 + 2*x^6 + 3*x^7 + O(x^8)\n");
  CliRun g = run({"bgpf", "x", "1+x+x^2", "2"});
  EXPECT_NE(g.out.find("conditions: ok"), std::string::npos);
  CliRun dt = run({"dtrans", path, "--json"});
  json dj = json::parse(dt.out);
  EXPECT_EQ(dj["status"], "inconclusive");
  EXPECT_EQ(dj["r1"]["blocks"][0]["denominator"], "x^2 + x + 1");
  auto ds = write_temp("ds.problem", "radix: 4\noperator: x^4*M^2 - (1 + x + x^2)*M + 1\n");
  json dsj = json::parse(run({"dtrans", ds, "--json"}).out);
  EXPECT_EQ(dsj["status"], "independent");
  EXPECT_EQ(dsj["r2"]["radix"], 16);
  EXPECT_EQ(dsj["r2"]["degree"], 50);
  CliRun b = run({"bench", "--only", "Thue_Morse", "--methods", "hp,ip,bp", "--json"});
  json bj = json::parse(b.out);
  EXPECT_EQ(bj.size(), 3u);
  for (const auto& row : bj) EXPECT_EQ(row["blocks"], 1);
}

TEST(Corpus, GoldenOutputs) {
  const std::filesystem::path dir = std::string(MSOLVE_SOURCE_DIR) + "/corpus";
  int checked = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".problem") continue;
    ProblemFile p = read_problem(entry.path().string());
    ASSERT_TRUE(p.expected) << entry.path();
    std::ifstream f(dir / *p.expected);
    ASSERT_TRUE(f) << *p.expected;
    json golden = json::parse(f);
    cli::SolveOptions opts;
    opts.method = golden["method"];
    json doc = cli::solve(p, opts).doc;
    EXPECT_EQ(doc, golden) << p.name;
    if (golden.contains("methods_agree")) EXPECT_TRUE(golden["methods_agree"].get<bool>()) << p.name;
    ++checked;
  }
  EXPECT_GE(checked, 20);
}

TEST(Corpus, FilesMatchGenerators) {
  const std::string dir = std::string(MSOLVE_SOURCE_DIR) + "/corpus/";
  for (const auto& e : cli::corpus_entries()) {
    if (e.name == "Adamczewski_Faverjon") continue;
    EXPECT_EQ(read_problem(dir + e.name + ".problem").op, e.op) << e.name;
  }
}
