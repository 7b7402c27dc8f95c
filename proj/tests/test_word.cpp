#include "wordmap/selftest.hpp"
#include "wordmap/word.hpp"

#include <doctest.h>

using namespace wordmap;

namespace {
const Word a = Word::generator(Gen::A);
const Word b = Word::generator(Gen::B);
} // namespace

TEST_CASE("parse")
{
	CHECK(Word::parse("[a,b]").syllable_count() == 4);
	CHECK(Word::parse("[a,b]") == commutator(a, b));

	Word ex35 = Word::parse("a^2 b a^-1 b a^-1 b^-2");
	REQUIRE(ex35.syllable_count() == 6);
	std::vector<long> exps;
	for (auto &s : ex35.syllables())
		exps.push_back((long)s.exp.convert_to<long>());
	CHECK(exps == std::vector<long>{2, 1, -1, 1, -1, -2});

	CHECK(Word::parse("a a^-1").is_identity());
	CHECK(Word::parse("  ").is_identity());
	CHECK(Word::parse("A") == a.inverse());
	CHECK(Word::parse("aB") == a * b.inverse());
	CHECK(Word::parse("([a,b])^2") == commutator(a, b) * commutator(a, b));
	CHECK(Word::parse("[a,[a,b]]") == commutator(a, commutator(a, b)));
	CHECK(Word::parse("a b b^-1 a") == Word::parse("a^2"));

	CHECK_THROWS_AS(Word::parse("a^0"), ParseError);
	CHECK_THROWS_AS(Word::parse("a^"), ParseError);
	CHECK_THROWS_AS(Word::parse("[a b]"), ParseError);
	CHECK_THROWS_AS(Word::parse("(a"), ParseError);
	CHECK_THROWS_AS(Word::parse("c"), ParseError);
}

TEST_CASE("rendering round-trips")
{
	CHECK(Word().str() == "e");
	CHECK(Word::parse("a^2 b a^-1").str() == "a^2 b a^-1");
	std::mt19937_64 rng(3);
	for (int i = 0; i < 100; ++i) {
		Word w = random_word(rng, 20);
		CHECK(Word::parse(w.str()) == w);
	}
}

TEST_CASE("group operations")
{
	CHECK(Word::parse("a b") * Word::parse("b^-1 a") == Word::parse("a^2"));
	CHECK(Word() * a == a);
	CHECK(Word::parse("[a,b]") * Word::parse("[b,a]") == Word());

	CHECK((a * b).inverse() == Word::parse("b^-1 a^-1"));
	CHECK(Word().inverse() == Word());
	CHECK(Word::parse("a^2 b^-3").inverse() == Word::parse("b^3 a^-2"));

	CHECK(conjugate(a, b) == Word::parse("a b a^-1"));
	CHECK(conjugate(Word(), b) == b);
	CHECK(conjugate(a, Word::parse("a^2")) == Word::parse("a^2"));

	std::mt19937_64 rng(4);
	for (int i = 0; i < 100; ++i) {
		Word u = random_word(rng, 15);
		Word v = random_word(rng, 15);
		CHECK(u * u.inverse() == Word());
		auto [ua, ub] = exponent_sums(u);
		auto [va, vb] = exponent_sums(v);
		auto [pa, pb] = exponent_sums(u * v);
		CHECK(pa == ua + va);
		CHECK(pb == ub + vb);
	}
}

TEST_CASE("exponent sums")
{
	CHECK(exponent_sums(Word::parse("[a,b]")) == std::pair<Int, Int>{0, 0});
	CHECK(exponent_sums(Word::parse("a^2 b a^-1 b a^-1 b^-2")) ==
	      std::pair<Int, Int>{0, 0});
	CHECK(exponent_sums(Word::parse("a^3 b^-1")) == std::pair<Int, Int>{3, -1});
}

TEST_CASE("substitution")
{
	// a -> ab leaves [a,b] fixed after reduction
	BasisMap m{a * b, b};
	CHECK(substitute(Word::parse("[a,b]"), m) == Word::parse("[a,b]"));
	CHECK(substitute(a, BasisMap::swap_ab()) == b);
	CHECK(substitute(Word::parse("[a^2,b]"), BasisMap::identity()) ==
	      Word::parse("[a^2,b]"));

	// substitute is a homomorphism
	std::mt19937_64 rng(5);
	for (int i = 0; i < 50; ++i) {
		Word u = random_word(rng, 12);
		Word v = random_word(rng, 12);
		CHECK(substitute(u * v, m) == substitute(u, m) * substitute(v, m));
		CHECK(substitute(u.inverse(), m) == substitute(u, m).inverse());
	}

	// composition of elementary maps
	BasisMap inner = BasisMap::swap_ab();
	BasisMap outer{a * b.pow(2), b};
	for (int i = 0; i < 50; ++i) {
		Word u = random_word(rng, 12);
		CHECK(substitute(substitute(u, inner), outer) ==
		      substitute(u, compose(inner, outer)));
	}
}

TEST_CASE("base-change rewrites")
{
	const Word c = a * b;
	const BasisMap c_is_ab{c, b};

	CHECK(goto_rewrite_pos(1, 5) ==
	      commutator(Word::generator(Gen::A), Word::generator(Gen::B, 5)));
	CHECK(goto_rewrite_neg(1, 3) ==
	      commutator(b, Word::generator(Gen::A, -1)) *
	          commutator(Word::generator(Gen::A, -1),
	                     Word::generator(Gen::B, 4)));

	CHECK(substitute(goto_rewrite_pos(2, 1), c_is_ab) ==
	      commutator(Word::parse("a^2"), b));
	CHECK(substitute(goto_rewrite_pos(3, -2), c_is_ab) ==
	      commutator(Word::parse("a^3"), Word::parse("b^-2")));
	CHECK(substitute(goto_rewrite_neg(2, 1), c_is_ab) ==
	      commutator(Word::parse("a^-2"), b));
	CHECK(substitute(goto_rewrite_neg(2, -3), c_is_ab) ==
	      commutator(Word::parse("a^-2"), Word::parse("b^-3")));

	CHECK_THROWS(goto_rewrite_pos(0, 1));
	CHECK_THROWS(goto_rewrite_neg(0, 1));
}

TEST_CASE("symbolic identity suite")
{
	SuiteResult r = run_symbolic_suite();
	if (!r.failures.empty())
		FAIL(r.failures.front());
	CHECK(r.failed == 0);
}
