#include "wordmap/selftest.hpp"

#include "wordmap/certify.hpp"
#include "wordmap/metabelian.hpp"
#include "wordmap/witness.hpp"

#include <sstream>

namespace wordmap {

Word random_word(std::mt19937_64 &rng, int max_len)
{
	std::uniform_int_distribution<int> len_dist(1, max_len);
	std::uniform_int_distribution<int> letter(0, 3);
	int len = len_dist(rng);
	Word w;
	for (int i = 0; i < len; ++i) {
		int l = letter(rng);
		w = w * Word::generator(l < 2 ? Gen::A : Gen::B, l % 2 == 0 ? 1 : -1);
	}
	return w;
}

Word random_derived_word(std::mt19937_64 &rng, int max_len)
{
	Word w;
	while (true) {
		Word u = random_word(rng, 4);
		Word v = random_word(rng, 4);
		Word next = w * commutator(u, v);
		if (next.length() > max_len)
			break;
		w = next;
		if (w.length() >= max_len - 16 && !w.is_identity())
			break;
	}
	return w;
}

void SuiteResult::check(bool cond, const std::string &label)
{
	if (cond) {
		++passed;
	} else {
		++failed;
		failures.push_back(label);
	}
}

void SuiteResult::merge(const SuiteResult &other)
{
	passed += other.passed;
	failed += other.failed;
	failures.insert(failures.end(), other.failures.begin(),
	                other.failures.end());
}

namespace {

Word gen_pow(Gen g, long e) { return Word::generator(g, e); }

std::string range_label(const char *name, long n, long m)
{
	std::ostringstream os;
	os << name << " n=" << n << " m=" << m;
	return os.str();
}

} // namespace

SuiteResult run_symbolic_suite()
{
	SuiteResult r;
	const Word a = Word::generator(Gen::A);
	const Word b = Word::generator(Gen::B);
	const Word c = a * b;
	auto cp = [&](long e) { return c.pow(e); };
	auto bp = [&](long e) { return gen_pow(Gen::B, e); };

	// conjugation expansion identities for random words
	{
		std::mt19937_64 rng(12);
		for (int i = 0; i < 64; ++i) {
			Word x = random_word(rng, 12);
			Word y = random_word(rng, 12);
			Word z = random_word(rng, 12);
			r.check(commutator(x, y * z) ==
			            commutator(x, y) * conjugate(y, commutator(x, z)),
			        "deriv [x,yz]");
			r.check(commutator(x * y, z) ==
			            conjugate(x, commutator(y, z)) * commutator(x, z),
			        "deriv [xy,z]");
		}
	}

	for (long n = -8; n <= 8; ++n) {
		for (long m = -8; m <= 8; ++m) {
			if (n == 0 || m == 0)
				continue;
			// (1): a [c^n, b^m] a^-1
			r.check(conjugate(a, commutator(cp(n), bp(m))) ==
			            commutator(c, bp(-1)) * commutator(bp(-1), cp(n + 1)) *
			                commutator(cp(n + 1), bp(m - 1)) *
			                commutator(bp(m - 1), c),
			        range_label("eq1", n, m));
			// (1b): a^-1 [c^n, b^m] a
			r.check(conjugate(a.inverse(), commutator(cp(n), bp(m))) ==
			            commutator(b, cp(n - 1)) *
			                commutator(cp(n - 1), bp(m + 1)) *
			                commutator(bp(m + 1), cp(-1)) * commutator(cp(-1), b),
			        range_label("eq1b", n, m));
			// (2): a [b^m, c^n] a^-1
			r.check(conjugate(a, commutator(bp(m), cp(n))) ==
			            commutator(c, bp(m - 1)) *
			                commutator(bp(m - 1), cp(n + 1)) *
			                commutator(cp(n + 1), bp(-1)) * commutator(bp(-1), c),
			        range_label("eq2", n, m));
			// (2b): a^-1 [b^m, c^n] a
			r.check(conjugate(a.inverse(), commutator(bp(m), cp(n))) ==
			            commutator(b, cp(-1)) * commutator(cp(-1), bp(m + 1)) *
			                commutator(bp(m + 1), cp(n - 1)) *
			                commutator(cp(n - 1), b),
			        range_label("eq2b", n, m));
		}
	}

	// (4), (5): base-change rewrites recover [a^{+-n}, b^m] under c = ab
	const BasisMap c_is_ab{c, b};
	for (long n = 1; n <= 8; ++n) {
		for (long m = -8; m <= 8; ++m) {
			r.check(substitute(goto_rewrite_pos(n, m), c_is_ab) ==
			            commutator(gen_pow(Gen::A, n), bp(m)),
			        range_label("eq4", n, m));
			r.check(substitute(goto_rewrite_neg(n, m), c_is_ab) ==
			            commutator(gen_pow(Gen::A, -n), bp(m)),
			        range_label("eq5", n, m));
		}
	}
	return r;
}

SuiteResult run_oracle_suite(uint64_t seed, int count, int max_len)
{
	SuiteResult r;
	std::mt19937_64 rng(seed);
	const BasisMap id = BasisMap::identity();
	for (int i = 0; i < count; ++i) {
		Word w = random_derived_word(rng, max_len);
		std::string label = "oracle #" + std::to_string(i);
		LaurentPoly via_class = p_from_class(derived_class(w));
		LaurentPoly via_affine = p_affine(w);
		auto [da, db] = fox_derivatives(w);
		r.check(via_class == via_affine, label + " class==affine");
		r.check(via_class == db.at_y_one(), label + " class==fox");
		r.check((derived_class(w).is_zero()) == (da.is_zero() && db.is_zero()),
		        label + " class0<=>fox0");
		r.check(p_poly(w, id) == via_class, label + " p_poly consistency");
	}
	return r;
}

std::vector<std::pair<std::string, Word>> reference_words()
{
	std::vector<std::pair<std::string, Word>> words;
	words.emplace_back("[a,b]", Word::parse("[a,b]"));
	words.emplace_back("[a,b]^2", Word::parse("[a,b]^2"));
	words.emplace_back("a^2 b a^-1 b a^-1 b^-2",
	                   Word::parse("a^2 b a^-1 b a^-1 b^-2"));
	words.emplace_back("[a,b][a,b^-1][a^-1,b][a^-1,b^-1]",
	                   Word::parse("[a,b][a,b^-1][a^-1,b][a^-1,b^-1]"));
	for (long k = 1; k <= 4; ++k)
		words.emplace_back("e_" + std::to_string(k), engel(k));
	return words;
}

SuiteResult run_witness_sweep(uint64_t seed, int targets_per_n, double tol)
{
	SuiteResult r;
	for (auto &[name, w] : reference_words()) {
		Certificate cert = search_basis(w);
		r.check(cert.status != CertStatus::Inapplicable, name + " certifiable");
		for (int n = 2; n <= 8; ++n) {
			if (!cert.covers(n))
				continue;
			for (int t = 0; t < targets_per_n; ++t) {
				Matrix g = haar_random_su(
				    n, seed + 1000003u * (uint64_t)n + (uint64_t)t);
				WitnessResult res = witness_derived(cert, n, g);
				std::ostringstream os;
				os << name << " n=" << n << " target=" << t
				   << " residual=" << res.residual;
				r.check(res.residual <= tol, os.str());
			}
		}
	}
	return r;
}

} // namespace wordmap
