#pragma once

#include "wordmap/laurent.hpp"
#include "wordmap/word.hpp"

#include <map>
#include <utility>

namespace wordmap {

/// Class of a commutator-subgroup element modulo the second derived
/// subgroup, written in the basis xi_{n,m} = class of [a^n, b^m], nm != 0.
struct DerivedClass
{
	std::map<std::pair<Int, Int>, Int> coeffs; // no zero values stored

	bool is_zero() const { return coeffs.empty(); }
	void add_term(const Int &n, const Int &m, const Int &c);

	DerivedClass operator-() const;
	friend DerivedClass operator+(const DerivedClass &x, const DerivedClass &y);
	friend DerivedClass operator-(const DerivedClass &x, const DerivedClass &y);

	static DerivedClass xi(Int n, Int m);

	/// Formatted as `Σ c·ξ(n,m)` for diagnostics.
	std::string str() const;

	bool operator==(const DerivedClass &) const = default;
};

/// Conjugation action of a generator (or its inverse, sign = -1) on the
/// quotient module: a.xi_{n,m} = xi_{n+1,m} - xi_{1,m}, etc.
DerivedClass act_generator(Gen g, int sign, const DerivedClass &cls);

struct NotInDerivedSubgroup : std::invalid_argument
{
	using std::invalid_argument::invalid_argument;
};

/// Class of w (which must lie in the commutator subgroup) modulo the
/// second derived subgroup. Schreier-style scan, linear in the number of
/// syllables regardless of exponent size.
DerivedClass derived_class(const Word &w);

/// Integer Laurent polynomial in two variables x, y.
struct BivariatePoly
{
	std::map<std::pair<Int, Int>, Int> coeffs;

	bool is_zero() const { return coeffs.empty(); }
	void add_term(const Int &i, const Int &j, const Int &c);
	friend BivariatePoly operator*(const BivariatePoly &p,
	                               const BivariatePoly &q);
	friend BivariatePoly operator+(const BivariatePoly &p,
	                               const BivariatePoly &q);

	static BivariatePoly monomial(Int c, Int i, Int j);

	/// Specialize y = 1, x = t.
	LaurentPoly at_y_one() const;

	bool operator==(const BivariatePoly &) const = default;
};

/// Abelianized left Fox derivatives (D_a(w), D_b(w)).
std::pair<BivariatePoly, BivariatePoly> fox_derivatives(const Word &w);

/// level 1: commutator subgroup membership (exponent sums vanish).
/// level 2: second derived subgroup membership (both Fox derivatives
/// vanish as well).
bool in_derived(const Word &w, int level);

/// p of a class in the standard ordered basis: xi_{n,m} -> m(t^n - 1).
LaurentPoly p_from_class(const DerivedClass &cls);

/// Affine-evaluation route: a -> (f -> t f), b -> (f -> f + 1); the
/// translation part of the image of w is p_w. Defined for any word.
LaurentPoly p_affine(const Word &w);

/// p of w in the ordered basis described by the back-substitution map:
/// `basis` expresses the original generators as words over the new
/// ordered pair, with the first new generator (the one carrying t)
/// rendered as letter a and the second as letter b. Computed by two
/// independent routes; disagreement is a hard internal error.
LaurentPoly p_poly(const Word &w, const BasisMap &basis);

} // namespace wordmap
