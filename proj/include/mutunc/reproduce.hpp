#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mutunc {

// How `computed` is compared with `reference`.
enum class Check {
  within,    // |computed - reference| <= tolerance
  beyond,    // |computed - reference| > tolerance
  above,     // computed > reference + tolerance
  below,     // computed < reference - tolerance
  at_least,  // computed >= reference - tolerance
  none       // informational only
};

struct ReproductionRow {
  std::string target;
  std::string quantity;
  double reference = 0.0;  // published value, or the exact value it rounds; NaN when there is none
  double computed = 0.0;
  double tolerance = 0.0;
  Check check = Check::within;
  bool pass = true;

  double diff() const;
};

struct ReproductionReport {
  std::vector<ReproductionRow> rows;
  bool all_pass() const;
};

std::string to_string(Check c);

// Targets: example1, example2, werner, figure1, propositions, all.
ReproductionReport reproduce(const std::string& target, std::uint64_t seed = 2024);
const std::vector<std::string>& reproduction_targets();

enum class Example1Criterion { condF, dsep, ppt };

// α at which the criterion starts flagging the canonical example state,
// bisected on [0.2, 0.6] down to 1e-10.
double example1_threshold(Example1Criterion c);

// p above which the Werner state has a negative partial transpose.
double werner_ppt_threshold();
// p at which the matrix-level M_inf of the Werner state changes sign.
double werner_steering_threshold();

}  // namespace mutunc
