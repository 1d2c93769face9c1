#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdlib>
#include <string>

// Offset mixed into every randomized test's seed; --seed=N selects a
// different deterministic run, default 0.
unsigned viz_test_seed_offset = 0;

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg.rfind("--seed=", 0) == 0)
      viz_test_seed_offset = static_cast<unsigned>(std::strtoul(arg.c_str() + 7, nullptr, 10));
  }
  doctest::Context ctx;
  ctx.applyCommandLine(argc, argv);
  return ctx.run();
}
