#pragma once

#include "wordmap/laurent.hpp"
#include "wordmap/metabelian.hpp"
#include "wordmap/word.hpp"

#include <string>
#include <vector>

namespace wordmap {

/// Elementary Nielsen move on the basis {a, b}. RightMultA(q) sends
/// a -> a b^q, b -> b.
struct NielsenMove
{
	enum class Kind { SwapAB, InvertA, InvertB, RightMultA };

	Kind kind;
	long q = 0; // nonzero, RightMultA only

	static NielsenMove swap() { return {Kind::SwapAB, 0}; }
	static NielsenMove invert_a() { return {Kind::InvertA, 0}; }
	static NielsenMove invert_b() { return {Kind::InvertB, 0}; }
	static NielsenMove right_mult_a(long q) { return {Kind::RightMultA, q}; }

	bool operator==(const NielsenMove &) const = default;
};

enum class Classification { NotInF1, InF1NotF2, InF2 };
enum class OrderedBasis { FirstSecond, SecondFirst };
enum class CertStatus { AllN, BadSet, Inapplicable };

std::string to_string(Classification c);
std::string to_string(CertStatus s);

/// Surjectivity certificate: a basis change under which the word's
/// polynomial is nonzero, plus its cyclotomic analysis.
struct Certificate
{
	Word word;
	Classification classification = Classification::InF1NotF2;
	std::vector<NielsenMove> moves;
	OrderedBasis ordered_basis = OrderedBasis::FirstSecond;
	BasisMap back_substitution; // a, b over the ordered new basis (x, y)
	LaurentPoly polynomial;
	RootAnalysis analysis;
	CertStatus status = CertStatus::AllN;

	/// True iff the word map on SU(n) is certified surjective.
	bool covers(long n) const;
};

inline constexpr const char *kToolVersion = "wordmap 1.0.0";

struct SearchConfig
{
	long max_q = 16;
	long max_depth = 3;
	long hard_cap_q = 512;
};

struct ResourceCapError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

Classification classify(const Word &w);

/// Cumulative back-substitution of a move sequence: expresses the
/// original generators over the final basis, the t-carrier rendered as
/// letter a. Substituting the result into a word rewrites it over the
/// new ordered basis.
BasisMap back_map_of(const std::vector<NielsenMove> &moves, OrderedBasis ord);

/// Sign normalization from the basis search: inverts a and/or b so that
/// the maximal |n| in the derived class is attained at negative n, and
/// among those the maximal m is positive.
std::pair<Word, std::vector<NielsenMove>> normalize_signs(const Word &w);

/// Basis search: staged over sign/order variants, bounded Nielsen-move
/// sequences, and the guaranteed a -> a b^q fallback. Throws
/// ResourceCapError when the fallback exceeds hard_cap_q.
Certificate search_basis(const Word &w, const SearchConfig &cfg = {});

/// k-th Engel word: e_0 = a, e_k = [e_{k-1}, b].
Word engel(long k);

/// Closed-form certificate for the k-th Engel word, k >= 1: basis (b, a),
/// polynomial (1-t)^k, cross-checked by recomputation.
Certificate engel_certificate(long k);

// JSON serialization; round-trips bit-exactly.
std::string to_json(const Certificate &cert);
Certificate certificate_from_json(const std::string &json_text);

/// Render/parse words over the symbols x, y used in certificates.
std::string render_xy(const Word &w);
Word parse_xy(const std::string &text);

} // namespace wordmap
