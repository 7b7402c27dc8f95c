#pragma once

#include "wordmap/bigint.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wordmap {

enum class Gen { A, B };

inline Gen other(Gen g) { return g == Gen::A ? Gen::B : Gen::A; }

struct Syllable
{
	Gen gen;
	Int exp; // nonzero

	bool operator==(const Syllable &) const = default;
};

struct ParseError : std::runtime_error
{
	size_t position;
	ParseError(const std::string &msg, size_t pos)
	    : std::runtime_error(msg + " (at position " + std::to_string(pos) +
	                         ")"),
	      position(pos)
	{}
};

/// Freely reduced word in the free group on two generators a, b.
/// Immutable value type; the syllable list is reduced at all times.
class Word
{
	std::vector<Syllable> syllables_;

  public:
	Word() = default;

	static Word generator(Gen g, Int exp = 1);

	// accepts an arbitrary syllable list, reduces it
	static Word from_syllables(std::vector<Syllable> syls);

	/// Grammar: letters a,b; inverses A,B or ^-1; integer powers a^3;
	/// commutators [x,y]; parenthesized groups with powers ([a,b])^2.
	static Word parse(const std::string &text);

	const std::vector<Syllable> &syllables() const { return syllables_; }
	bool is_identity() const { return syllables_.empty(); }
	size_t syllable_count() const { return syllables_.size(); }

	/// Total letter count sum |e_i|.
	Int length() const;

	Word inverse() const;
	Word pow(const Int &k) const;

	/// Canonical rendering: `a^2 b a^-1`, identity as `e`.
	std::string str() const;

	bool operator==(const Word &) const = default;

	friend Word operator*(const Word &u, const Word &v);
};

/// x u x^-1, reduced.
Word conjugate(const Word &x, const Word &u);

/// [x,y] = x y x^-1 y^-1, reduced.
Word commutator(const Word &x, const Word &y);

/// Total exponents of a and b; kernel is the commutator subgroup.
std::pair<Int, Int> exponent_sums(const Word &w);

/// Endomorphism of the free group given by images of the generators.
struct BasisMap
{
	Word image_a;
	Word image_b;

	static BasisMap identity();
	static BasisMap swap_ab();
	static BasisMap invert_a();
	static BasisMap invert_b();

	bool operator==(const BasisMap &) const = default;
};

/// Homomorphic image of w under m, reduced.
Word substitute(const Word &w, const BasisMap &m);

/// Composition: apply `outer` to the images of `inner`, so that
/// substitute(w, compose(inner, outer)) == substitute(substitute(w, inner), outer).
BasisMap compose(const BasisMap &inner, const BasisMap &outer);

/// Rewrites of [a^n, b^m] over the basis c = ab, b, with c rendered as
/// generator A and b as generator B. Substituting c = ab recovers the
/// original commutator.
Word goto_rewrite_pos(const Int &n, const Int &m);
Word goto_rewrite_neg(const Int &n, const Int &m);

} // namespace wordmap
