#include "wordmap/metabelian.hpp"
#include "wordmap/selftest.hpp"

#include <doctest.h>

using namespace wordmap;

namespace {

LaurentPoly poly(std::initializer_list<std::pair<long, long>> terms)
{
	LaurentPoly p;
	for (auto &[e, c] : terms)
		p.add_term(e, c);
	return p;
}

DerivedClass cls(std::initializer_list<std::tuple<long, long, long>> terms)
{
	DerivedClass d;
	for (auto &[n, m, c] : terms)
		d.add_term(n, m, c);
	return d;
}

} // namespace

TEST_CASE("module action of the generators")
{
	CHECK(act_generator(Gen::A, 1, DerivedClass::xi(1, 1)) ==
	      cls({{2, 1, 1}, {1, 1, -1}}));
	CHECK(act_generator(Gen::A, -1, DerivedClass::xi(1, 5)) ==
	      cls({{-1, 5, -1}}));
	CHECK(act_generator(Gen::B, 1, DerivedClass{}) == DerivedClass{});
	CHECK(act_generator(Gen::B, 1, DerivedClass::xi(2, 3)) ==
	      cls({{2, 4, 1}, {2, 1, -1}}));

	// the derived formulas match actual conjugation in the free group
	const Word a = Word::generator(Gen::A);
	const Word b = Word::generator(Gen::B);
	for (long n = -4; n <= 4; ++n) {
		for (long m = -4; m <= 4; ++m) {
			if (n == 0 || m == 0)
				continue;
			Word base = commutator(Word::generator(Gen::A, n),
			                       Word::generator(Gen::B, m));
			DerivedClass xi = DerivedClass::xi(n, m);
			CHECK(derived_class(conjugate(a, base)) ==
			      act_generator(Gen::A, 1, xi));
			CHECK(derived_class(conjugate(a.inverse(), base)) ==
			      act_generator(Gen::A, -1, xi));
			CHECK(derived_class(conjugate(b, base)) ==
			      act_generator(Gen::B, 1, xi));
			CHECK(derived_class(conjugate(b.inverse(), base)) ==
			      act_generator(Gen::B, -1, xi));
		}
	}
}

TEST_CASE("derived class")
{
	CHECK(derived_class(Word::parse("[a,b]")) == DerivedClass::xi(1, 1));
	for (long n = -3; n <= 3; ++n)
		for (long m = -3; m <= 3; ++m) {
			if (n == 0 || m == 0)
				continue;
			Word w = commutator(Word::generator(Gen::A, n),
			                    Word::generator(Gen::B, m));
			CHECK(derived_class(w) == DerivedClass::xi(n, m));
			CHECK(derived_class(w.inverse()) == -DerivedClass::xi(n, m));
		}
	CHECK(derived_class(Word::parse("[a,b][a,b^-1][a^-1,b][a^-1,b^-1]")) ==
	      cls({{1, 1, 1}, {1, -1, 1}, {-1, 1, 1}, {-1, -1, 1}}));
	CHECK_THROWS_AS(derived_class(Word::parse("a b")), NotInDerivedSubgroup);

	// homomorphism on random derived words
	std::mt19937_64 rng(21);
	for (int i = 0; i < 100; ++i) {
		Word u = random_derived_word(rng, 24);
		Word v = random_derived_word(rng, 24);
		CHECK(derived_class(u * v) == derived_class(u) + derived_class(v));
	}
}

TEST_CASE("fox derivatives")
{
	auto [da, db] = fox_derivatives(Word::parse("[a,b]"));
	CHECK(da == BivariatePoly::monomial(1, 0, 0) +
	                BivariatePoly::monomial(-1, 0, 1));
	CHECK(db == BivariatePoly::monomial(1, 1, 0) +
	                BivariatePoly::monomial(-1, 0, 0));

	auto [ea, eb] = fox_derivatives(Word());
	CHECK(ea.is_zero());
	CHECK(eb.is_zero());

	auto [ca, cb] = fox_derivatives(Word::parse("a^3"));
	CHECK(ca == BivariatePoly::monomial(1, 0, 0) +
	                BivariatePoly::monomial(1, 1, 0) +
	                BivariatePoly::monomial(1, 2, 0));
	CHECK(cb.is_zero());

	// product rule on random words
	std::mt19937_64 rng(22);
	for (int i = 0; i < 100; ++i) {
		Word u = random_word(rng, 12);
		Word v = random_word(rng, 12);
		auto [ua, ub] = fox_derivatives(u);
		auto [va, vb] = fox_derivatives(v);
		auto [pa, pb] = fox_derivatives(u * v);
		auto [su, tu] = exponent_sums(u);
		BivariatePoly ubar = BivariatePoly::monomial(1, su, tu);
		CHECK(pa == ua + ubar * va);
		CHECK(pb == ub + ubar * vb);
	}
}

TEST_CASE("second derived membership")
{
	CHECK(!in_derived(Word::parse("[a,b]"), 2));
	CHECK(in_derived(Word::parse("[[a,b],[a^2,b^2]]"), 2));
	CHECK(!in_derived(Word::parse("a b"), 1));
	CHECK(in_derived(Word::parse("[a^3,b^-2]"), 1));

	// commutators of derived words lie in the second derived subgroup
	std::mt19937_64 rng(23);
	for (int i = 0; i < 50; ++i) {
		Word u = random_derived_word(rng, 20);
		Word v = random_derived_word(rng, 20);
		Word w = commutator(u, v);
		CHECK(in_derived(w, 2));
		CHECK(derived_class(w).is_zero());
		CHECK(p_poly(w, BasisMap::identity()).is_zero());
	}

	// Magnus-embedding consistency on a corpus of derived words
	for (int i = 0; i < 1000; ++i) {
		Word w = random_derived_word(rng, 30);
		CHECK(derived_class(w).is_zero() == in_derived(w, 2));
	}
}

TEST_CASE("p polynomial")
{
	CHECK(p_poly(Word::parse("[a,b]^2"), BasisMap::identity()) ==
	      poly({{1, 2}, {0, -2}}));
	CHECK(p_poly(Word::parse("a^2 b a^-1 b a^-1 b^-2"), BasisMap::identity()) ==
	      poly({{2, 1}, {1, 1}, {0, -2}}));
	// basis (b, ab): a = y x^-1, b = x over the ordered pair (x, y)
	BasisMap b_then_c{Word::parse("b a^-1"), Word::parse("a")};
	CHECK(p_poly(Word::parse("[a,b][a,b^-1][a^-1,b][a^-1,b^-1]"), b_then_c) ==
	      poly({{2, 1}, {1, -3}, {0, 3}, {-1, -1}}));

	CHECK_THROWS_AS(p_poly(Word::parse("a"), BasisMap::identity()),
	                NotInDerivedSubgroup);
}

TEST_CASE("module homomorphism to polynomials")
{
	std::mt19937_64 rng(24);
	for (int i = 0; i < 100; ++i) {
		Word w = random_derived_word(rng, 24);
		DerivedClass xi = derived_class(w);
		// p(a.xi) = t p(xi), p(b.xi) = p(xi)
		CHECK(p_from_class(act_generator(Gen::A, 1, xi)) ==
		      p_from_class(xi).shifted(1));
		CHECK(p_from_class(act_generator(Gen::B, 1, xi)) == p_from_class(xi));
		CHECK(p_from_class(act_generator(Gen::A, -1, xi)) ==
		      p_from_class(xi).shifted(-1));
	}
}

TEST_CASE("oracle equivalence suite")
{
	SuiteResult r = run_oracle_suite(99, 300, 40);
	if (!r.failures.empty())
		FAIL(r.failures.front());
	CHECK(r.failed == 0);
}
