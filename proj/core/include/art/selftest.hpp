// The built-in acceptance corpus, criteria 1 to 8. Criterion 9 (determinism of the whole run) is
// checked from outside by running the tool twice.
#pragma once

#include <functional>
#include <string>
#include <vector>

namespace art {

struct AcceptanceCase {
  std::string name;
  // Returns pass/fail; appends human-readable evidence to `detail`.
  std::function<bool(std::string& detail)> run;
};

struct AcceptanceCriterion {
  int id = 0;
  std::string title;
  std::vector<AcceptanceCase> cases;
};

std::vector<AcceptanceCriterion> acceptance_corpus();

struct AcceptanceLine {
  int id = 0;
  std::string title;
  bool pass = false;
  std::vector<std::string> details;  // one per case: "name: pass|FAIL (evidence)"
};

// Runs every case; exceptions count as failures. Output carries no timings.
AcceptanceLine run_criterion(const AcceptanceCriterion& c);
std::vector<AcceptanceLine> run_acceptance();

}  // namespace art
