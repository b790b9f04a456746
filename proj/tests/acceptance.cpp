// One line per acceptance criterion; exit status 1 when any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "brute_lattices.hpp"
#include "epilat/enumerate.hpp"
#include "epilat/suites.hpp"

using namespace epilat;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

Outcome from_suite(const std::string& name, SuiteParams p = {}) {
  auto r = run_suite(name, p);
  std::string d = name + ": " + std::to_string(r.checks) + " checks, " + std::to_string(r.failures.size()) + " failures";
  if (!r.failures.empty()) d += "; first: " + r.failures.front();
  return {r.ok(), d};
}

} // namespace

int main() {
  SuiteParams p;
  p.lattice_max = 6;
  p.n_max = 8;
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"abstract lattice lemmas on all lattices with at most 6 elements",
       [&] {
         auto o = from_suite("lattice-lemmas", p);
         for (int n = 1; n <= 6; ++n) {
           auto a = enumerate_lattices(n).size(), b = brute::lattices(n).size();
           if (a != b) {
             o.ok = false;
             o.detail += "; n=" + std::to_string(n) + " enumerated " + std::to_string(a) + ", brute force " +
                         std::to_string(b);
           }
         }
         return o;
       }},
      {"word problems agree with generating models", [&] { return from_suite("word-problems", p); }},
      {"zero words of Q", [&] { return from_suite("q-ideal", p); }},
      {"L/K/J/I lattice for n_max = 8", [&] { return from_suite("figure2", p); }},
      {"degree of meets, witnesses and deg(P) = 2", [&] { return from_suite("degree-calculus", p); }},
      {"neutral elements in the constructed sublattices", [&] { return from_suite("theorem-necessary-conditions", p); }},
      {"epigroup identities on builtin models and products", [&] { return from_suite("epigroup-lemmas", p); }},
      {"deduction replay and bounded search", [&] { return from_suite("deduction-replay", p); }},
      {"first-order definitions agree with direct checks", [&] { return from_suite("fo-crossval", p); }},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %zu: %s  %s (%s, %.1fs)\n", i + 1, o.ok ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str(), s);
    std::fflush(stdout);
    all = all && o.ok;
  }
  return all ? 0 : 1;
}
