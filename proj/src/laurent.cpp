#include "wordmap/laurent.hpp"

#include <cmath>
#include <sstream>
#include <vector>

namespace wordmap {

LaurentPoly LaurentPoly::monomial(Int coeff, Int exp)
{
	LaurentPoly p;
	if (coeff != 0)
		p.coeffs_.emplace(std::move(exp), std::move(coeff));
	return p;
}

Int LaurentPoly::coeff(const Int &exp) const
{
	auto it = coeffs_.find(exp);
	return it == coeffs_.end() ? Int(0) : it->second;
}

Int LaurentPoly::min_exp() const
{
	if (coeffs_.empty())
		throw std::domain_error("zero polynomial has no support");
	return coeffs_.begin()->first;
}

Int LaurentPoly::max_exp() const
{
	if (coeffs_.empty())
		throw std::domain_error("zero polynomial has no support");
	return coeffs_.rbegin()->first;
}

void LaurentPoly::add_term(const Int &exp, const Int &coeff)
{
	if (coeff == 0)
		return;
	auto [it, inserted] = coeffs_.emplace(exp, coeff);
	if (!inserted) {
		it->second += coeff;
		if (it->second == 0)
			coeffs_.erase(it);
	}
}

LaurentPoly LaurentPoly::operator-() const
{
	LaurentPoly r;
	for (auto &[e, c] : coeffs_)
		r.coeffs_.emplace(e, -c);
	return r;
}

LaurentPoly operator+(const LaurentPoly &p, const LaurentPoly &q)
{
	LaurentPoly r = p;
	for (auto &[e, c] : q.coeffs_)
		r.add_term(e, c);
	return r;
}

LaurentPoly operator-(const LaurentPoly &p, const LaurentPoly &q)
{
	LaurentPoly r = p;
	for (auto &[e, c] : q.coeffs_)
		r.add_term(e, -c);
	return r;
}

LaurentPoly operator*(const LaurentPoly &p, const LaurentPoly &q)
{
	LaurentPoly r;
	for (auto &[ep, cp] : p.coeffs_)
		for (auto &[eq, cq] : q.coeffs_)
			r.add_term(ep + eq, cp * cq);
	return r;
}

LaurentPoly LaurentPoly::shifted(const Int &k) const
{
	LaurentPoly r;
	for (auto &[e, c] : coeffs_)
		r.coeffs_.emplace(e + k, c);
	return r;
}

Int LaurentPoly::eval_at_one() const
{
	Int s = 0;
	for (auto &[e, c] : coeffs_)
		s += c;
	return s;
}

Int LaurentPoly::one_norm() const
{
	Int s = 0;
	for (auto &[e, c] : coeffs_)
		s += abs(c);
	return s;
}

std::complex<double> LaurentPoly::eval_unit_circle(long m, long l) const
{
	std::complex<double> s = 0;
	for (auto &[e, c] : coeffs_) {
		long r = (long)((e % m).convert_to<long>());
		if (r < 0)
			r += m;
		double angle = 2.0 * M_PI * (double)l * (double)r / (double)m;
		s += c.convert_to<double>() *
		     std::complex<double>(std::cos(angle), std::sin(angle));
	}
	return s;
}

std::string LaurentPoly::str() const
{
	if (coeffs_.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
		const Int &e = it->first;
		Int c = it->second;
		if (first) {
			if (c < 0) {
				os << '-';
				c = -c;
			}
		} else {
			os << (c < 0 ? " - " : " + ");
			c = abs(c);
		}
		first = false;
		if (c != 1 || e == 0)
			os << c;
		if (e != 0) {
			if (c != 1)
				os << '*';
			os << 't';
			if (e != 1)
				os << '^' << e;
		}
	}
	return os.str();
}

long euler_phi(long m)
{
	long result = m;
	for (long p = 2; p * p <= m; ++p) {
		if (m % p == 0) {
			result -= result / p;
			while (m % p == 0)
				m /= p;
		}
	}
	if (m > 1)
		result -= result / m;
	return result;
}

namespace {

// Dense ascending coefficient vector of an ordinary polynomial.
using Dense = std::vector<Int>;

Dense to_dense(const LaurentPoly &p)
{
	Int lo = p.min_exp();
	long deg = to_ll(p.max_exp() - lo);
	Dense d(deg + 1, Int(0));
	for (auto &[e, c] : p.coeffs())
		d[to_ll(e - lo)] = c;
	return d;
}

LaurentPoly from_dense(const Dense &d)
{
	LaurentPoly p;
	for (size_t i = 0; i < d.size(); ++i)
		p.add_term(Int(i), d[i]);
	return p;
}

// Remainder of a by monic b. Returns true iff remainder is zero.
bool monic_divides(const Dense &b, Dense a)
{
	long db = (long)b.size() - 1;
	for (long i = (long)a.size() - 1; i >= db; --i) {
		Int q = a[i];
		if (q == 0)
			continue;
		for (long j = 0; j <= db; ++j)
			a[i - db + j] -= q * b[j];
	}
	for (auto &c : a)
		if (c != 0)
			return false;
	return true;
}

// Exact quotient a / b, b monic; throws if division is not exact.
Dense monic_quotient(const Dense &b, Dense a)
{
	long db = (long)b.size() - 1;
	Dense q(a.size() - db, Int(0));
	for (long i = (long)a.size() - 1; i >= db; --i) {
		Int qi = a[i];
		if (qi == 0)
			continue;
		q[i - db] = qi;
		for (long j = 0; j <= db; ++j)
			a[i - db + j] -= qi * b[j];
	}
	for (auto &c : a)
		if (c != 0)
			throw std::logic_error("cyclotomic division not exact");
	return q;
}

} // namespace

LaurentPoly cyclotomic(long m)
{
	if (m < 1)
		throw std::invalid_argument("cyclotomic: m must be >= 1");
	thread_local std::map<long, LaurentPoly> cache;
	if (auto it = cache.find(m); it != cache.end())
		return it->second;
	// Phi_m = (t^m - 1) / prod_{d | m, d < m} Phi_d
	Dense num(m + 1, Int(0));
	num[0] = -1;
	num[m] = 1;
	for (long d = 1; d < m; ++d) {
		if (m % d != 0)
			continue;
		num = monic_quotient(to_dense(cyclotomic(d)), std::move(num));
	}
	LaurentPoly phi = from_dense(num);
	cache.emplace(m, phi);
	return phi;
}

bool divides_exactly(const LaurentPoly &q, const LaurentPoly &p)
{
	if (q.is_zero())
		throw std::invalid_argument("division by zero polynomial");
	if (p.is_zero())
		return true;
	Dense dq = to_dense(q);
	if (abs(dq.back()) != 1)
		throw std::invalid_argument("divisor must have unit leading coefficient");
	if (dq.back() == -1)
		for (auto &c : dq)
			c = -c;
	Dense dp = to_dense(p);
	if (dp.size() < dq.size())
		return false;
	return monic_divides(dq, std::move(dp));
}

RootAnalysis analyze_roots(const LaurentPoly &p)
{
	if (p.is_zero())
		throw std::invalid_argument("analyze_roots: zero polynomial");
	RootAnalysis r;
	r.span = to_ll(p.max_exp() - p.min_exp());
	r.vanishes_at_one = p.eval_at_one() == 0;
	r.lpf_bound = r.span + 2;
	// phi(m) >= sqrt(m/2), so phi(m) <= span forces m <= 2*span^2.
	long bound = 2 * r.span * r.span;
	std::vector<long> phi(bound + 1);
	for (long i = 0; i <= bound; ++i)
		phi[i] = i;
	for (long i = 2; i <= bound; ++i)
		if (phi[i] == i) // i prime
			for (long j = i; j <= bound; j += i)
				phi[j] -= phi[j] / i;
	for (long m = 2; m <= bound; ++m) {
		if (phi[m] > r.span)
			continue;
		if (divides_exactly(cyclotomic(m), p))
			r.bad_set.insert(m);
	}
	return r;
}

bool certified_n(const RootAnalysis &analysis, long n)
{
	if (n < 2)
		throw std::invalid_argument("certified_n: n must be >= 2");
	for (long m : analysis.bad_set)
		if (m <= n && n % m == 0)
			return false;
	return true;
}

} // namespace wordmap
