#include "wordmap/word.hpp"

#include <cctype>
#include <sstream>

namespace wordmap {

namespace {

void push_reduced(std::vector<Syllable> &out, Gen g, const Int &e)
{
	if (e == 0)
		return;
	if (!out.empty() && out.back().gen == g) {
		out.back().exp += e;
		if (out.back().exp == 0)
			out.pop_back();
		return;
	}
	out.push_back({g, e});
}

} // namespace

Word Word::generator(Gen g, Int exp)
{
	Word w;
	if (exp != 0)
		w.syllables_.push_back({g, std::move(exp)});
	return w;
}

Word Word::from_syllables(std::vector<Syllable> syls)
{
	Word w;
	for (auto &s : syls)
		push_reduced(w.syllables_, s.gen, s.exp);
	return w;
}

Int Word::length() const
{
	Int n = 0;
	for (auto &s : syllables_)
		n += abs(s.exp);
	return n;
}

Word operator*(const Word &u, const Word &v)
{
	Word w = u;
	for (auto &s : v.syllables_)
		push_reduced(w.syllables_, s.gen, s.exp);
	return w;
}

Word Word::inverse() const
{
	Word w;
	w.syllables_.reserve(syllables_.size());
	for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
		w.syllables_.push_back({it->gen, -it->exp});
	return w;
}

Word Word::pow(const Int &k) const
{
	if (k == 0 || is_identity())
		return {};
	if (syllables_.size() == 1)
		return generator(syllables_[0].gen, syllables_[0].exp * k);
	Word base = k > 0 ? *this : inverse();
	long long reps = to_ll(abs(k));
	Word r;
	for (long long i = 0; i < reps; ++i)
		r = r * base;
	return r;
}

std::string Word::str() const
{
	if (syllables_.empty())
		return "e";
	std::ostringstream os;
	bool first = true;
	for (auto &s : syllables_) {
		if (!first)
			os << ' ';
		first = false;
		os << (s.gen == Gen::A ? 'a' : 'b');
		if (s.exp != 1)
			os << '^' << s.exp;
	}
	return os.str();
}

Word conjugate(const Word &x, const Word &u) { return x * u * x.inverse(); }

Word commutator(const Word &x, const Word &y)
{
	return x * y * x.inverse() * y.inverse();
}

std::pair<Int, Int> exponent_sums(const Word &w)
{
	Int sa = 0, sb = 0;
	for (auto &s : w.syllables())
		(s.gen == Gen::A ? sa : sb) += s.exp;
	return {sa, sb};
}

BasisMap BasisMap::identity()
{
	return {Word::generator(Gen::A), Word::generator(Gen::B)};
}

BasisMap BasisMap::swap_ab()
{
	return {Word::generator(Gen::B), Word::generator(Gen::A)};
}

BasisMap BasisMap::invert_a()
{
	return {Word::generator(Gen::A, -1), Word::generator(Gen::B)};
}

BasisMap BasisMap::invert_b()
{
	return {Word::generator(Gen::A), Word::generator(Gen::B, -1)};
}

Word substitute(const Word &w, const BasisMap &m)
{
	Word r;
	for (auto &s : w.syllables()) {
		const Word &img = s.gen == Gen::A ? m.image_a : m.image_b;
		r = r * img.pow(s.exp);
	}
	return r;
}

BasisMap compose(const BasisMap &inner, const BasisMap &outer)
{
	return {substitute(inner.image_a, outer), substitute(inner.image_b, outer)};
}

// ---------------------------------------------------------------------------
// Parser

namespace {

struct Parser
{
	const std::string &text;
	size_t pos = 0;

	explicit Parser(const std::string &t) : text(t) {}

	void skip_ws()
	{
		while (pos < text.size() && std::isspace((unsigned char)text[pos]))
			++pos;
	}

	bool at_end()
	{
		skip_ws();
		return pos >= text.size();
	}

	char peek()
	{
		skip_ws();
		return pos < text.size() ? text[pos] : '\0';
	}

	[[noreturn]] void fail(const std::string &msg) { throw ParseError(msg, pos); }

	Int integer()
	{
		skip_ws();
		size_t start = pos;
		bool neg = false;
		if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
			neg = text[pos] == '-';
			++pos;
		}
		if (pos >= text.size() || !std::isdigit((unsigned char)text[pos]))
			fail("expected integer");
		std::string digits;
		while (pos < text.size() && std::isdigit((unsigned char)text[pos]))
			digits += text[pos++];
		Int v(digits);
		if (v == 0) {
			pos = start;
			fail("zero exponent not allowed");
		}
		return neg ? -v : v;
	}

	Word primary()
	{
		char c = peek();
		switch (c) {
		case 'a':
			++pos;
			return Word::generator(Gen::A);
		case 'b':
			++pos;
			return Word::generator(Gen::B);
		case 'A':
			++pos;
			return Word::generator(Gen::A, -1);
		case 'B':
			++pos;
			return Word::generator(Gen::B, -1);
		case 'e': // identity
			++pos;
			return Word();
		case '(': {
			++pos;
			Word w = expr();
			if (peek() != ')')
				fail("expected ')'");
			++pos;
			return w;
		}
		case '[': {
			++pos;
			Word x = expr();
			if (peek() != ',')
				fail("expected ',' in commutator");
			++pos;
			Word y = expr();
			if (peek() != ']')
				fail("expected ']'");
			++pos;
			return commutator(x, y);
		}
		default:
			fail("unexpected character");
		}
	}

	Word factor()
	{
		Word w = primary();
		if (peek() == '^') {
			++pos;
			w = w.pow(integer());
		}
		return w;
	}

	bool starts_factor()
	{
		char c = peek();
		return c == 'a' || c == 'b' || c == 'A' || c == 'B' || c == 'e' ||
		       c == '(' || c == '[';
	}

	Word expr()
	{
		Word w;
		while (starts_factor())
			w = w * factor();
		return w;
	}
};

} // namespace

Word Word::parse(const std::string &text)
{
	Parser p(text);
	Word w = p.expr();
	if (!p.at_end())
		p.fail("trailing input");
	return w;
}

// ---------------------------------------------------------------------------
// Base-change rewrites of [a^{+-n}, b^m] over the basis {c, b}, c = ab.
// Generator A stands for c, generator B for b.

namespace {

Word cpow(const Int &e) { return Word::generator(Gen::A, e); }
Word bpow(const Int &e) { return Word::generator(Gen::B, e); }

} // namespace

Word goto_rewrite_pos(const Int &n, const Int &m)
{
	if (n < 1)
		throw std::invalid_argument("goto_rewrite_pos: n must be >= 1");
	long long nn = to_ll(n);
	Word w;
	for (long long i = 1; i <= nn - 1; ++i) {
		w = w * commutator(cpow(i), bpow(-i));
		w = w * commutator(bpow(-i), cpow(i + 1));
	}
	for (long long i = 1; i <= nn; ++i) {
		w = w * commutator(cpow(n + 1 - i), bpow(m - n + i));
		w = w * commutator(bpow(m - n + i), cpow(n - i));
	}
	return w;
}

Word goto_rewrite_neg(const Int &n, const Int &m)
{
	if (n < 1)
		throw std::invalid_argument("goto_rewrite_neg: n must be >= 1");
	long long nn = to_ll(n);
	Word w;
	for (long long i = 1; i <= nn; ++i) {
		w = w * commutator(cpow(1 - i), bpow(i));
		w = w * commutator(bpow(i), cpow(-i));
	}
	for (long long i = 1; i <= nn; ++i) {
		w = w * commutator(cpow(-(n + 1) + i), bpow(n + m + 1 - i));
		w = w * commutator(bpow(n + m + 1 - i), cpow(-n + i));
	}
	return w;
}

} // namespace wordmap
