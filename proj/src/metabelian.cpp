#include "wordmap/metabelian.hpp"

#include <sstream>

namespace wordmap {

void DerivedClass::add_term(const Int &n, const Int &m, const Int &c)
{
	if (c == 0 || n == 0 || m == 0)
		return;
	auto key = std::make_pair(n, m);
	auto [it, inserted] = coeffs.emplace(key, c);
	if (!inserted) {
		it->second += c;
		if (it->second == 0)
			coeffs.erase(it);
	}
}

DerivedClass DerivedClass::operator-() const
{
	DerivedClass r;
	for (auto &[k, c] : coeffs)
		r.coeffs.emplace(k, -c);
	return r;
}

DerivedClass operator+(const DerivedClass &x, const DerivedClass &y)
{
	DerivedClass r = x;
	for (auto &[k, c] : y.coeffs)
		r.add_term(k.first, k.second, c);
	return r;
}

DerivedClass operator-(const DerivedClass &x, const DerivedClass &y)
{
	DerivedClass r = x;
	for (auto &[k, c] : y.coeffs)
		r.add_term(k.first, k.second, -c);
	return r;
}

DerivedClass DerivedClass::xi(Int n, Int m)
{
	DerivedClass r;
	r.add_term(n, m, 1);
	return r;
}

std::string DerivedClass::str() const
{
	if (coeffs.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (auto &[k, c] : coeffs) {
		Int v = c;
		if (first) {
			if (v < 0) {
				os << '-';
				v = -v;
			}
		} else {
			os << (v < 0 ? " - " : " + ");
			v = abs(v);
		}
		first = false;
		if (v != 1)
			os << v << "·";
		os << "ξ(" << k.first << "," << k.second << ")";
	}
	return os.str();
}

DerivedClass act_generator(Gen g, int sign, const DerivedClass &cls)
{
	if (sign != 1 && sign != -1)
		throw std::invalid_argument("act_generator: sign must be +-1");
	DerivedClass r;
	for (auto &[k, c] : cls.coeffs) {
		const Int &n = k.first;
		const Int &m = k.second;
		if (g == Gen::A) {
			if (sign > 0) {
				r.add_term(n + 1, m, c);
				r.add_term(1, m, -c);
			} else {
				r.add_term(n - 1, m, c);
				r.add_term(-1, m, -c);
			}
		} else {
			if (sign > 0) {
				r.add_term(n, m + 1, c);
				r.add_term(n, 1, -c);
			} else {
				r.add_term(n, m - 1, c);
				r.add_term(n, -1, -c);
			}
		}
	}
	return r;
}

DerivedClass derived_class(const Word &w)
{
	auto [sa, sb] = exponent_sums(w);
	if (sa != 0 || sb != 0)
		throw NotInDerivedSubgroup(
		    "derived_class: word not in the commutator subgroup");
	// Schreier scan over the transversal {a^i b^j}: an a-syllable with
	// exponent e read at prefix state (i, j) contributes xi_{i,j} -
	// xi_{i+e,j} (the per-letter contributions telescope); b-syllables
	// contribute nothing.
	DerivedClass cls;
	Int i = 0, j = 0;
	for (auto &s : w.syllables()) {
		if (s.gen == Gen::A) {
			cls.add_term(i, j, 1);
			cls.add_term(i + s.exp, j, -1);
			i += s.exp;
		} else {
			j += s.exp;
		}
	}
	return cls;
}

void BivariatePoly::add_term(const Int &i, const Int &j, const Int &c)
{
	if (c == 0)
		return;
	auto key = std::make_pair(i, j);
	auto [it, inserted] = coeffs.emplace(key, c);
	if (!inserted) {
		it->second += c;
		if (it->second == 0)
			coeffs.erase(it);
	}
}

BivariatePoly BivariatePoly::monomial(Int c, Int i, Int j)
{
	BivariatePoly p;
	p.add_term(i, j, c);
	return p;
}

BivariatePoly operator*(const BivariatePoly &p, const BivariatePoly &q)
{
	BivariatePoly r;
	for (auto &[kp, cp] : p.coeffs)
		for (auto &[kq, cq] : q.coeffs)
			r.add_term(kp.first + kq.first, kp.second + kq.second, cp * cq);
	return r;
}

BivariatePoly operator+(const BivariatePoly &p, const BivariatePoly &q)
{
	BivariatePoly r = p;
	for (auto &[k, c] : q.coeffs)
		r.add_term(k.first, k.second, c);
	return r;
}

LaurentPoly BivariatePoly::at_y_one() const
{
	LaurentPoly p;
	for (auto &[k, c] : coeffs)
		p.add_term(k.first, c);
	return p;
}

namespace {

// Fox derivative of a single syllable g^e with respect to its own
// generator: 1 + x + ... + x^{e-1} for e > 0, -(x^-1 + ... + x^e) for
// e < 0, where x is the abelianized image of g.
BivariatePoly syllable_fox(Gen g, const Int &e)
{
	BivariatePoly d;
	long long ee = to_ll(e);
	if (ee > 0) {
		for (long long t = 0; t < ee; ++t)
			d.add_term(g == Gen::A ? Int(t) : Int(0),
			           g == Gen::B ? Int(t) : Int(0), 1);
	} else {
		for (long long t = -1; t >= ee; --t)
			d.add_term(g == Gen::A ? Int(t) : Int(0),
			           g == Gen::B ? Int(t) : Int(0), -1);
	}
	return d;
}

} // namespace

std::pair<BivariatePoly, BivariatePoly> fox_derivatives(const Word &w)
{
	BivariatePoly da, db;
	Int alpha = 0, beta = 0; // abelianized prefix image x^alpha y^beta
	for (auto &s : w.syllables()) {
		BivariatePoly d = syllable_fox(s.gen, s.exp);
		BivariatePoly shifted;
		for (auto &[k, c] : d.coeffs)
			shifted.add_term(k.first + alpha, k.second + beta, c);
		if (s.gen == Gen::A) {
			da = da + shifted;
			alpha += s.exp;
		} else {
			db = db + shifted;
			beta += s.exp;
		}
	}
	return {da, db};
}

bool in_derived(const Word &w, int level)
{
	auto [sa, sb] = exponent_sums(w);
	bool f1 = sa == 0 && sb == 0;
	if (level == 1)
		return f1;
	if (level != 2)
		throw std::invalid_argument("in_derived: level must be 1 or 2");
	if (!f1)
		return false;
	auto [da, db] = fox_derivatives(w);
	return da.is_zero() && db.is_zero();
}

LaurentPoly p_from_class(const DerivedClass &cls)
{
	LaurentPoly p;
	for (auto &[k, c] : cls.coeffs) {
		// xi_{n,m} -> m(t^n - 1)
		p.add_term(k.first, c * k.second);
		p.add_term(0, -c * k.second);
	}
	return p;
}

LaurentPoly p_affine(const Word &w)
{
	// Affine maps f -> t^k f + p under composition (k1,p1)*(k2,p2) =
	// (k1+k2, p1 + t^k1 p2), folded left to right over the word.
	Int k = 0;
	LaurentPoly trans;
	for (auto &s : w.syllables()) {
		if (s.gen == Gen::A) {
			k += s.exp;
		} else {
			trans.add_term(k, s.exp);
		}
	}
	return trans;
}

LaurentPoly p_poly(const Word &w, const BasisMap &basis)
{
	auto [sa, sb] = exponent_sums(w);
	if (sa != 0 || sb != 0)
		throw NotInDerivedSubgroup("p_poly: word not in the commutator subgroup");
	Word rewritten = substitute(w, basis);
	LaurentPoly via_class = p_from_class(derived_class(rewritten));
	LaurentPoly via_affine = p_affine(rewritten);
	if (via_class != via_affine)
		throw std::logic_error("p_poly: class route and affine route disagree");
	return via_class;
}

} // namespace wordmap
