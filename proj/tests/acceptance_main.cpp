// Runs every acceptance criterion and prints one line per criterion.
#include <cstdlib>
#include <iostream>
#include <string>

#include "edalg/acceptance.hpp"
#include "edalg/relation.hpp"

int main(int argc, char** argv) {
  edalg::AcceptanceOptions opt;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      opt.seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      opt.only.push_back(arg);
    }
  }
  try {
    const edalg::AcceptanceReport report = edalg::run_acceptance_suite(opt);
    int failed = 0;
    for (const auto& r : report.results) {
      std::cout << r.id << " " << r.name << ": " << (r.passed ? "PASS" : "FAIL") << " - " << r.detail << "\n";
      failed += !r.passed;
    }
    std::cout << (report.results.size() - static_cast<std::size_t>(failed)) << "/" << report.results.size()
              << " criteria passed\n";
    return failed ? 1 : 0;
  } catch (const edalg::InvariantBreach& e) {
    std::cerr << "invariant breach: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
