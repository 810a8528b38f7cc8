#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bocsp/colgen.hpp"
#include "bocsp/front.hpp"
#include "bocsp/instance.hpp"
#include "bocsp/pattern.hpp"

namespace bocsp {

enum class Method { kLec, kFpa, kAwt };

const char* to_string(Method method);
Method parse_method(const std::string& text);

struct MethodConfig {
  Method method = Method::kLec;
  ColgenConfig colgen;
  // FPA: objective cut first by the branching inequality, then the other.
  std::array<int, 2> permutation{2, 1};
  double gamma = 1.0;
  double zeta = 0.3;
  double epsilon = 1.0;
  // AWT augmentation weight.
  double rho = 1e-4;

  void validate() const;
};

struct FrontResult {
  Method method = Method::kLec;
  Front front;                       // nondominated, sorted by f1
  std::vector<FrontPoint> sequence;  // points in the order they were found
  std::optional<std::pair<long, long>> lex1, lex2;
  long subproblems = 0;
  int initial_columns = 0;
  int total_columns = 0;
  int iterations = 0;  // method iterations (LEC t, FPA k, AWT w steps)
  double seconds = 0.0;
  bool aborted = false;  // a subproblem hit a limit without an incumbent
  std::string abort_reason;
  std::vector<SubproblemRecord> trace;
  ColgenTrace colgen;
};

// The initial pattern set defaults to initial_columns(); pass one to share
// it between methods or to run on a fixed (e.g. enumerated) set.
FrontResult solve_lec(const Instance& instance, const MethodConfig& config,
                      const PatternSet* initial = nullptr);
FrontResult solve_fpa(const Instance& instance, const MethodConfig& config,
                      const PatternSet* initial = nullptr);
FrontResult solve_awt(const Instance& instance, const MethodConfig& config,
                      const PatternSet* initial = nullptr);
FrontResult solve_method(const Instance& instance, const MethodConfig& config,
                         const PatternSet* initial = nullptr);

// Custom weighted-sum weights (w1, w2). Throws invalid-input when the two
// lexicographic points coincide in the branching objective.
std::pair<double, double> cws_weights(std::pair<long, long> lex1, std::pair<long, long> lex2,
                                      double gamma, double zeta, std::array<int, 2> permutation);

struct AwtParameters {
  double beta1 = 0.0;
  double beta2 = 0.0;
  double delta = 0.0;
};

// beta_i = 1/|f_i(lex2) - f_i(lex1)|, delta = 1/(f2(lex1) - f2(lex2)).
// Throws invalid-input on a zero denominator.
AwtParameters awt_parameters(std::pair<long, long> lex1, std::pair<long, long> lex2);

// Weights 1 - delta, 1 - 2 delta, ... that stay above 1e-12.
std::vector<double> awt_weights(double delta);

}  // namespace bocsp
