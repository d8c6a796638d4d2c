// Command-line front end: run session scripts and the built-in acceptance corpus.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "art/selftest.hpp"
#include "art/session.hpp"
#include "json.hpp"

namespace {

int run_session(const std::string& path, bool json, const art::SessionOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "tool: cannot read " << path << "\n";
    return 2;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  art::Session session(opts);
  std::vector<art::Report> reports = session.run(buf.str());
  for (auto& r : reports) std::cout << (json ? r.json() + "\n" : r.text());
  return art::all_passed(reports) ? 0 : 1;
}

int selftest(bool json) {
  bool all = true;
  if (!json) std::cout << "criterion  result  title\n";
  for (auto& line : art::run_acceptance()) {
    all = all && line.pass;
    if (json) {
      nlohmann::json j;
      j["criterion"] = line.id;
      j["title"] = line.title;
      j["pass"] = line.pass;
      j["cases"] = line.details;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "  " << line.id << "        " << (line.pass ? "pass" : "FAIL") << "    " << line.title << "\n";
      for (auto& d : line.details) std::cout << "             " << d << "\n";
    }
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dualizing complexes, Frobenius pushforwards and shriek products over F_p"};
  app.require_subcommand(1);

  std::string path;
  bool json = false;
  art::SessionOptions opts;
  auto* run = app.add_subcommand("run", "Execute a session script");
  run->add_option("file", path, "Session script")->required();
  run->add_flag("--json", json, "One JSON object per report line");
  run->add_option("--budget-degree", opts.budget_degree, "Degree budget")->check(CLI::Range(1, 255));
  run->add_option("--size-cap", opts.size_cap, "Size cap for pushforward bases")->check(CLI::PositiveNumber);
  run->add_option("--seed", opts.seed, "Seed for randomized self-checks");

  bool st_json = false;
  auto* st = app.add_subcommand("selftest", "Run the built-in acceptance corpus");
  st->add_flag("--json", st_json, "One JSON object per criterion");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*run) return run_session(path, json, opts);
    return selftest(st_json);
  } catch (const std::exception& e) {
    std::cerr << "tool: " << e.what() << "\n";
    return 2;
  }
}
