#pragma once

#include "wordmap/word.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace wordmap {

/// Random freely reduced word with at most max_len letters.
Word random_word(std::mt19937_64 &rng, int max_len);

/// Random element of the commutator subgroup (product of commutators of
/// short random words), at most max_len letters.
Word random_derived_word(std::mt19937_64 &rng, int max_len);

struct SuiteResult
{
	int passed = 0;
	int failed = 0;
	std::vector<std::string> failures;

	bool ok() const { return failed == 0; }
	void check(bool cond, const std::string &label);
	void merge(const SuiteResult &other);
};

/// Commutator and base-change identities, verified by free reduction
/// with c = ab over the stated exponent ranges.
SuiteResult run_symbolic_suite();

/// Agreement of the three p-computation routes and the second-derived
/// membership oracles on seeded random words.
SuiteResult run_oracle_suite(uint64_t seed, int count, int max_len);

/// Certify-then-witness sweep over the reference words, n in 2..8,
/// targets_per_n Haar-random targets each.
SuiteResult run_witness_sweep(uint64_t seed, int targets_per_n, double tol);

/// The reference words used by the witness sweep.
std::vector<std::pair<std::string, Word>> reference_words();

} // namespace wordmap
