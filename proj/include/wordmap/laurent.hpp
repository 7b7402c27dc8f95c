#pragma once

#include "wordmap/bigint.hpp"

#include <complex>
#include <map>
#include <set>
#include <string>

namespace wordmap {

/// Exact integer-coefficient Laurent polynomial in t. Sparse map from
/// exponent to coefficient; zero coefficients are never stored.
class LaurentPoly
{
	std::map<Int, Int> coeffs_;

  public:
	LaurentPoly() = default;

	static LaurentPoly monomial(Int coeff, Int exp = 0);
	static LaurentPoly constant(Int c) { return monomial(std::move(c)); }
	static LaurentPoly t() { return monomial(1, 1); }

	const std::map<Int, Int> &coeffs() const { return coeffs_; }
	bool is_zero() const { return coeffs_.empty(); }
	Int coeff(const Int &exp) const;
	Int min_exp() const; // throws on zero polynomial
	Int max_exp() const;

	void add_term(const Int &exp, const Int &coeff);

	LaurentPoly operator-() const;
	friend LaurentPoly operator+(const LaurentPoly &p, const LaurentPoly &q);
	friend LaurentPoly operator-(const LaurentPoly &p, const LaurentPoly &q);
	friend LaurentPoly operator*(const LaurentPoly &p, const LaurentPoly &q);

	/// Multiply by t^k.
	LaurentPoly shifted(const Int &k) const;

	Int eval_at_one() const;

	/// Sum of |coefficients|.
	Int one_norm() const;

	/// Floating evaluation at exp(2*pi*i*l/m); diagnostics only.
	std::complex<double> eval_unit_circle(long m, long l) const;

	std::string str() const;

	bool operator==(const LaurentPoly &) const = default;
};

long euler_phi(long m);

/// Cyclotomic polynomial Phi_m, degree euler_phi(m).
LaurentPoly cyclotomic(long m);

/// True iff q divides p exactly in Z[t, t^-1]. q must be nonzero with
/// invertible (unit +-1) leading coefficient or exact division semantics:
/// here q is expected monic up to shift (cyclotomics are).
bool divides_exactly(const LaurentPoly &q, const LaurentPoly &p);

struct RootAnalysis
{
	std::set<long> bad_set;  // m >= 2 with Phi_m | p
	bool vanishes_at_one = false;
	long span = 0;           // max exponent - min exponent
	long lpf_bound = 2;      // lpf(n) >= lpf_bound certifies n

	bool operator==(const RootAnalysis &) const = default;
};

/// Cyclotomic divisor analysis of a nonzero polynomial. Exact: membership
/// in bad_set is decided by polynomial division, never numerically.
RootAnalysis analyze_roots(const LaurentPoly &p);

/// True iff no divisor m >= 2 of n lies in the bad set.
bool certified_n(const RootAnalysis &analysis, long n);

} // namespace wordmap
