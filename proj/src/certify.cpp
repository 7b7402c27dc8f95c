#include "wordmap/certify.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <optional>

namespace wordmap {

std::string to_string(Classification c)
{
	switch (c) {
	case Classification::NotInF1:
		return "NotInF1";
	case Classification::InF1NotF2:
		return "InF1NotF2";
	case Classification::InF2:
		return "InF2";
	}
	return "?";
}

std::string to_string(CertStatus s)
{
	switch (s) {
	case CertStatus::AllN:
		return "AllN";
	case CertStatus::BadSet:
		return "BadSet";
	case CertStatus::Inapplicable:
		return "Inapplicable";
	}
	return "?";
}

bool Certificate::covers(long n) const
{
	if (status == CertStatus::Inapplicable)
		return false;
	if (classification == Classification::NotInF1)
		return true;
	return certified_n(analysis, n);
}

Classification classify(const Word &w)
{
	if (!in_derived(w, 1))
		return Classification::NotInF1;
	return in_derived(w, 2) ? Classification::InF2 : Classification::InF1NotF2;
}

namespace {

// Substitution expressing the old generators in the new basis produced
// by a single move (the inverse automorphism).
BasisMap move_back_map(const NielsenMove &m)
{
	switch (m.kind) {
	case NielsenMove::Kind::SwapAB:
		return BasisMap::swap_ab();
	case NielsenMove::Kind::InvertA:
		return BasisMap::invert_a();
	case NielsenMove::Kind::InvertB:
		return BasisMap::invert_b();
	case NielsenMove::Kind::RightMultA:
		// new x = a b^q, so a = x y^-q
		return {Word::generator(Gen::A) * Word::generator(Gen::B, -m.q),
		        Word::generator(Gen::B)};
	}
	throw std::logic_error("bad move kind");
}

} // namespace

BasisMap back_map_of(const std::vector<NielsenMove> &moves, OrderedBasis ord)
{
	BasisMap m = BasisMap::identity();
	for (auto &mv : moves)
		m = compose(m, move_back_map(mv));
	if (ord == OrderedBasis::SecondFirst)
		m = compose(m, BasisMap::swap_ab());
	return m;
}

std::pair<Word, std::vector<NielsenMove>> normalize_signs(const Word &w)
{
	if (classify(w) != Classification::InF1NotF2)
		throw std::invalid_argument(
		    "normalize_signs: word must be in F(1) but not F(2)");
	Word cur = w;
	std::vector<NielsenMove> moves;

	auto max_abs_n = [](const DerivedClass &cls) {
		Int best = 0;
		for (auto &[k, c] : cls.coeffs)
			best = std::max(best, Int(abs(k.first)));
		return best;
	};

	DerivedClass cls = derived_class(cur);
	Int big = max_abs_n(cls);
	bool neg_attained = false;
	for (auto &[k, c] : cls.coeffs)
		if (k.first == -big)
			neg_attained = true;
	if (!neg_attained) {
		moves.push_back(NielsenMove::invert_a());
		cur = substitute(cur, BasisMap::invert_a());
		cls = derived_class(cur);
		big = max_abs_n(cls);
	}

	bool have_m = false;
	Int max_m = 0;
	for (auto &[k, c] : cls.coeffs) {
		if (k.first != -big)
			continue;
		if (!have_m || k.second > max_m) {
			max_m = k.second;
			have_m = true;
		}
	}
	if (have_m && max_m < 0) {
		moves.push_back(NielsenMove::invert_b());
		cur = substitute(cur, BasisMap::invert_b());
	}
	return {cur, moves};
}

namespace {

struct Candidate
{
	std::vector<NielsenMove> moves;
	OrderedBasis ordering;
	LaurentPoly polynomial;
	RootAnalysis analysis;
	size_t order; // discovery index, deterministic tie break
};

// Smaller is better: empty bad set first, then fewer bad divisors,
// smaller span, shorter move sequence, discovery order.
bool better(const Candidate &x, const Candidate &y)
{
	auto key = [](const Candidate &c) {
		return std::make_tuple(c.analysis.bad_set.empty() ? 0 : 1,
		                       c.analysis.bad_set.size(), c.analysis.span,
		                       c.moves.size(), c.order);
	};
	return key(x) < key(y);
}

Certificate make_certificate(const Word &w, std::vector<NielsenMove> moves,
                             OrderedBasis ord, LaurentPoly poly,
                             RootAnalysis analysis)
{
	Certificate cert;
	cert.word = w;
	cert.classification = Classification::InF1NotF2;
	cert.moves = std::move(moves);
	cert.ordered_basis = ord;
	cert.back_substitution = back_map_of(cert.moves, ord);
	cert.polynomial = std::move(poly);
	cert.analysis = std::move(analysis);
	cert.status =
	    cert.analysis.bad_set.empty() ? CertStatus::AllN : CertStatus::BadSet;
	return cert;
}

} // namespace

Certificate search_basis(const Word &w, const SearchConfig &cfg)
{
	Classification cl = classify(w);
	if (cl == Classification::NotInF1) {
		Certificate cert;
		cert.word = w;
		cert.classification = Classification::NotInF1;
		cert.back_substitution = BasisMap::identity();
		cert.status = CertStatus::AllN;
		return cert;
	}
	if (cl == Classification::InF2) {
		Certificate cert;
		cert.word = w;
		cert.classification = Classification::InF2;
		cert.back_substitution = BasisMap::identity();
		cert.status = CertStatus::Inapplicable;
		return cert;
	}

	size_t counter = 0;
	auto try_basis = [&](const std::vector<NielsenMove> &moves,
	                     OrderedBasis ord) -> std::optional<Candidate> {
		LaurentPoly p = p_poly(w, back_map_of(moves, ord));
		if (p.is_zero())
			return std::nullopt;
		return Candidate{moves, ord, p, analyze_roots(p), counter++};
	};

	// Stage 0: sign/order variants of the identity basis.
	{
		const std::vector<std::vector<NielsenMove>> variant_moves = {
		    {}, {}, {NielsenMove::invert_a()}, {NielsenMove::invert_a()}};
		const OrderedBasis variant_ord[] = {
		    OrderedBasis::FirstSecond, OrderedBasis::SecondFirst,
		    OrderedBasis::FirstSecond, OrderedBasis::SecondFirst};
		std::optional<Candidate> best;
		for (size_t i = 0; i < variant_moves.size(); ++i) {
			auto c = try_basis(variant_moves[i], variant_ord[i]);
			if (c && (!best || better(*c, *best)))
				best = std::move(c);
		}
		if (best)
			return make_certificate(w, best->moves, best->ordering,
			                        best->polynomial, best->analysis);
	}

	// Stage 1: breadth-first over bounded Nielsen-move sequences.
	{
		std::vector<NielsenMove> alphabet = {NielsenMove::swap(),
		                                     NielsenMove::invert_a(),
		                                     NielsenMove::invert_b()};
		for (long q = 1; q <= cfg.max_q; ++q) {
			alphabet.push_back(NielsenMove::right_mult_a(q));
			alphabet.push_back(NielsenMove::right_mult_a(-q));
		}

		auto redundant = [](const NielsenMove &prev, const NielsenMove &next) {
			if (prev.kind != next.kind)
				return false;
			if (prev.kind == NielsenMove::Kind::RightMultA)
				return prev.q == -next.q;
			return true; // swap/invert are involutions
		};

		std::optional<Candidate> best;
		std::vector<std::vector<NielsenMove>> frontier = {{}};
		for (long depth = 1; depth <= cfg.max_depth; ++depth) {
			std::vector<std::vector<NielsenMove>> next;
			for (auto &seq : frontier) {
				for (auto &mv : alphabet) {
					if (!seq.empty() && redundant(seq.back(), mv))
						continue;
					auto ext = seq;
					ext.push_back(mv);
					for (auto ord : {OrderedBasis::FirstSecond,
					                 OrderedBasis::SecondFirst}) {
						auto c = try_basis(ext, ord);
						if (c && (!best || better(*c, *best)))
							best = std::move(c);
					}
					next.push_back(std::move(ext));
				}
			}
			if (best && best->analysis.bad_set.empty())
				break;
			frontier = std::move(next);
		}
		if (best)
			return make_certificate(w, best->moves, best->ordering,
			                        best->polynomial, best->analysis);
	}

	// Stage 2: guaranteed fallback via a -> a b^q with basis (b, c_q).
	{
		auto [normalized, norm_moves] = normalize_signs(w);
		(void)normalized;
		for (long q = 1; q <= cfg.hard_cap_q; ++q) {
			auto moves = norm_moves;
			moves.push_back(NielsenMove::right_mult_a(q));
			auto c = try_basis(moves, OrderedBasis::SecondFirst);
			if (c)
				return make_certificate(w, c->moves, c->ordering, c->polynomial,
				                        c->analysis);
		}
	}
	throw ResourceCapError("search_basis: fallback exceeded hard cap on q");
}

Word engel(long k)
{
	if (k < 0)
		throw std::invalid_argument("engel: k must be >= 0");
	Word e = Word::generator(Gen::A);
	Word b = Word::generator(Gen::B);
	for (long i = 1; i <= k; ++i)
		e = commutator(e, b);
	return e;
}

Certificate engel_certificate(long k)
{
	if (k < 1)
		throw std::invalid_argument("engel_certificate: k must be >= 1");
	Word w = engel(k);
	// closed form (1-t)^k in the swapped basis
	LaurentPoly one_minus_t =
	    LaurentPoly::constant(1) - LaurentPoly::t();
	LaurentPoly closed = LaurentPoly::constant(1);
	for (long i = 0; i < k; ++i)
		closed = closed * one_minus_t;
	std::vector<NielsenMove> moves = {NielsenMove::swap()};
	LaurentPoly recomputed = p_poly(w, back_map_of(moves, OrderedBasis::FirstSecond));
	if (recomputed != closed)
		throw std::logic_error("engel_certificate: closed form mismatch");
	return make_certificate(w, moves, OrderedBasis::FirstSecond, closed,
	                        analyze_roots(closed));
}

// ---------------------------------------------------------------------------
// JSON serialization

namespace {

using ordered_json = nlohmann::ordered_json;

std::string move_kind_name(NielsenMove::Kind k)
{
	switch (k) {
	case NielsenMove::Kind::SwapAB:
		return "SwapAB";
	case NielsenMove::Kind::InvertA:
		return "InvertA";
	case NielsenMove::Kind::InvertB:
		return "InvertB";
	case NielsenMove::Kind::RightMultA:
		return "RightMultA";
	}
	throw std::logic_error("bad move kind");
}

NielsenMove move_from_json(const ordered_json &j)
{
	std::string kind = j.at("kind").get<std::string>();
	if (kind == "SwapAB")
		return NielsenMove::swap();
	if (kind == "InvertA")
		return NielsenMove::invert_a();
	if (kind == "InvertB")
		return NielsenMove::invert_b();
	if (kind == "RightMultA")
		return NielsenMove::right_mult_a(j.at("q").get<long>());
	throw std::invalid_argument("unknown move kind: " + kind);
}

Classification classification_from_string(const std::string &s)
{
	if (s == "NotInF1")
		return Classification::NotInF1;
	if (s == "InF1NotF2")
		return Classification::InF1NotF2;
	if (s == "InF2")
		return Classification::InF2;
	throw std::invalid_argument("unknown classification: " + s);
}

CertStatus status_from_string(const std::string &s)
{
	if (s == "AllN")
		return CertStatus::AllN;
	if (s == "BadSet")
		return CertStatus::BadSet;
	if (s == "Inapplicable")
		return CertStatus::Inapplicable;
	throw std::invalid_argument("unknown status: " + s);
}

} // namespace

std::string render_xy(const Word &w)
{
	std::string s = w.str();
	for (char &c : s) {
		if (c == 'a')
			c = 'x';
		else if (c == 'b')
			c = 'y';
	}
	return s;
}

Word parse_xy(const std::string &text)
{
	std::string s = text;
	for (char &c : s) {
		if (c == 'x')
			c = 'a';
		else if (c == 'y')
			c = 'b';
	}
	return Word::parse(s);
}

std::string to_json(const Certificate &cert)
{
	ordered_json j;
	j["word"] = cert.word.str();
	j["classification"] = to_string(cert.classification);
	j["moves"] = ordered_json::array();
	for (auto &m : cert.moves) {
		ordered_json jm;
		jm["kind"] = move_kind_name(m.kind);
		if (m.kind == NielsenMove::Kind::RightMultA)
			jm["q"] = m.q;
		j["moves"].push_back(jm);
	}
	j["ordered_basis"] = cert.ordered_basis == OrderedBasis::FirstSecond
	                         ? "FirstSecond"
	                         : "SecondFirst";
	j["back_substitution"] = {render_xy(cert.back_substitution.image_a),
	                          render_xy(cert.back_substitution.image_b)};
	ordered_json poly = ordered_json::object();
	for (auto &[e, c] : cert.polynomial.coeffs())
		poly[e.str()] = c.str();
	j["polynomial"] = poly;
	j["bad_set"] = cert.analysis.bad_set;
	j["span"] = cert.analysis.span;
	j["lpf_bound"] = cert.analysis.lpf_bound;
	j["status"] = to_string(cert.status);
	j["tool_version"] = kToolVersion;
	return j.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string &json_text)
{
	ordered_json j = ordered_json::parse(json_text);
	Certificate cert;
	cert.word = Word::parse(j.at("word").get<std::string>());
	cert.classification =
	    classification_from_string(j.at("classification").get<std::string>());
	for (auto &jm : j.at("moves"))
		cert.moves.push_back(move_from_json(jm));
	std::string ord = j.at("ordered_basis").get<std::string>();
	if (ord != "FirstSecond" && ord != "SecondFirst")
		throw std::invalid_argument("unknown ordered_basis: " + ord);
	cert.ordered_basis = ord == "FirstSecond" ? OrderedBasis::FirstSecond
	                                          : OrderedBasis::SecondFirst;
	auto &bs = j.at("back_substitution");
	cert.back_substitution = {parse_xy(bs.at(0).get<std::string>()),
	                          parse_xy(bs.at(1).get<std::string>())};
	for (auto &[key, val] : j.at("polynomial").items())
		cert.polynomial.add_term(Int(key), Int(val.get<std::string>()));
	for (auto &m : j.at("bad_set"))
		cert.analysis.bad_set.insert(m.get<long>());
	cert.analysis.span = j.at("span").get<long>();
	cert.analysis.lpf_bound = j.at("lpf_bound").get<long>();
	cert.analysis.vanishes_at_one =
	    !cert.polynomial.is_zero() && cert.polynomial.eval_at_one() == 0;
	cert.status = status_from_string(j.at("status").get<std::string>());
	return cert;
}

} // namespace wordmap
