#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "modloc/cli.hpp"
#include "modloc/errors.hpp"

namespace modloc::cli {

// Bad command-line input detected after option parsing.
class UsageError : public Error {
 public:
  using Error::Error;
};

struct FormulaSource {
  std::string path;                // formula file, "-" for stdin
  std::string named;               // named construction
  std::vector<int> params;
};

struct GenOptions {
  std::string kind;
  std::vector<int> lengths;
  int h = 3, w = 4, k = 0;
  int ell = 1, t = 3, m = 10;
  int nodes = 0;
  std::string word;
  std::string alphabet;
  std::string family;
  std::vector<std::string> edges;
  std::vector<std::string> fixed;
  std::string formula;
  std::vector<int> params;
};

struct EvalOptions {
  std::string structure;
  FormulaSource formula;
  std::vector<std::string> assign;
  std::string embedding = "identity";
};

struct InvarianceOptions {
  std::string structure;
  FormulaSource formula;
  std::vector<std::string> assign;
  std::string mode = "exhaustive";
  std::size_t samples = 1000;
};

struct LocalityOptions {
  std::string notion;
  std::vector<std::string> structures;
  FormulaSource formula;
  std::string graph_query;
  std::vector<std::string> free_order;
  int radius = 1;
  int t = 0;
  int k = 0;
  std::size_t cap = 16;
  std::size_t assert_invariant = 0;
};

struct CompileOptions {
  FormulaSource formula;
  std::string signature;
  std::string structure;  // signature taken from this file when given
  int n = 2;
  std::vector<std::string> free_order;
  std::string emit;
};

struct TransformOptions {
  std::string lemma;
  std::string circuit;
  std::string structure;
  std::vector<std::string> anchors;
  int m = 0;
  int t = 0;
  int counter_m = 0;
  int spot_checks = 8;
  std::string emit;
};

struct SwapOptions {
  std::string word;
  std::string cuts;
  int radius = 1;
  bool closure = false;
  std::string alphabet = "01";
  int n = 0;
  std::string language;
  FormulaSource formula;
};

int cmd_gen(const RunConfig& cfg, const GenOptions& o, std::ostream& out);
int cmd_eval(const RunConfig& cfg, const EvalOptions& o, std::ostream& out);
int cmd_invariance(const RunConfig& cfg, const InvarianceOptions& o, std::ostream& out);
int cmd_locality(const RunConfig& cfg, const LocalityOptions& o, std::ostream& out);
int cmd_compile(const RunConfig& cfg, const CompileOptions& o, std::ostream& out);
int cmd_transform(const RunConfig& cfg, const TransformOptions& o, std::ostream& out);
int cmd_swap_check(const RunConfig& cfg, const SwapOptions& o, std::ostream& out);

}  // namespace modloc::cli
