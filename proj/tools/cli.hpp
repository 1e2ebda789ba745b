#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "msolve/block.hpp"
#include "msolve/corpus.hpp"
#include "msolve/dtrans.hpp"
#include "msolve/problem.hpp"

namespace msolve::cli {

enum ExitCode { Ok = 0, Failure = 1, InputError = 2, UnsupportedOnly = 3, ResourceCap = 4 };

struct SolveOptions {
  std::string method = "hp";  // bp, ip, hp or all
  int sigma_cap = 20000;
  bool trace = false;
  bool strict = false;  // exit 3 when some leading coefficient could not be handled
};

struct SolveResult {
  nlohmann::json doc;
  int exit_code = Ok;
};

nlohmann::json rational_json(const Rational& q);
nlohmann::json block_json(const SolutionBlock& blk);
nlohmann::json verdict_json(const TranscendenceVerdict& v);

// Throws ResourceLimit when HP exceeds the sigma cap.
SolveResult solve(const ProblemFile& p, const SolveOptions& opts);
std::string solve_text(const nlohmann::json& doc);

// Problems shipped with the tool, in a fixed order. Expensive entries are flagged.
struct CorpusEntry {
  std::string name;
  MahlerOperator op;
  bool small = true;  // run by bp and ip as well in bench
};
std::vector<CorpusEntry> corpus_entries();

// Full command line; output goes to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace msolve::cli
