#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <string>

#include "reproduce.hpp"

int main(int argc, char** argv) {
  ncrainbow::reproduce::Options options;
  options.fixtures_dir = NCRAINBOW_FIXTURES_DIR;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--quick") options.quick = true;
    else if (arg.rfind("--workers=", 0) == 0) options.workers = std::stoul(arg.substr(10));
    else {
      std::cerr << "usage: acceptance [--quick] [--workers=N]\n";
      return 2;
    }
  }
  const auto results = ncrainbow::reproduce::run_all(options, &std::cout);
  const auto passed =
      std::count_if(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  std::cout << passed << "/" << results.size() << " criteria passed\n";
  return passed == static_cast<std::ptrdiff_t>(results.size()) ? EXIT_SUCCESS : EXIT_FAILURE;
}
