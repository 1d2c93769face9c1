#ifndef VIZING_TESTS_TEST_SEED_HPP
#define VIZING_TESTS_TEST_SEED_HPP

// Set by the shared test main from --seed=N (default 0); randomized tests
// combine it with a per-site base so runs stay reproducible.
extern unsigned viz_test_seed_offset;

inline unsigned test_seed(unsigned base) { return base + viz_test_seed_offset; }

#endif  // VIZING_TESTS_TEST_SEED_HPP
