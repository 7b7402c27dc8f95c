#include "wordmap/witness.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <cstdio>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace wordmap {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

std::complex<double> unit_phase(double angle)
{
	return {std::cos(angle), std::sin(angle)};
}

// p evaluated at exp(2*pi*i*l/n), exact exponent reduction mod n.
std::complex<double> eval_at_root(const LaurentPoly &p, long n, long l)
{
	std::complex<double> s = 0;
	for (auto &[e, c] : p.coeffs()) {
		long r = (long)((e % n).convert_to<long>());
		if (r < 0)
			r += n;
		s += c.convert_to<double>() * unit_phase(kTwoPi * (double)l * (double)r / (double)n);
	}
	return s;
}

// Action of the n-cycle on the Cartan subalgebra: (P theta)_i = theta_{i-1}.
Eigen::VectorXd shift_forward(const Eigen::VectorXd &theta, long power)
{
	long n = theta.size();
	long s = ((power % n) + n) % n;
	Eigen::VectorXd r(n);
	for (long i = 0; i < n; ++i)
		r[(i + s) % n] = theta[i];
	return r;
}

} // namespace

void validate_su(const Matrix &u)
{
	if (u.rows() != u.cols() || u.rows() < 1)
		throw std::invalid_argument("matrix must be square");
	int n = (int)u.rows();
	double unitary_err =
	    (u.adjoint() * u - Matrix::Identity(n, n)).norm();
	if (unitary_err > 1e-10)
		throw std::invalid_argument("matrix is not unitary within tolerance");
	std::complex<double> det = u.determinant();
	if (std::abs(det - 1.0) > 1e-10)
		throw std::invalid_argument("matrix determinant is not 1 within tolerance");
}

Matrix build_sigma(int n)
{
	if (n < 2)
		throw std::invalid_argument("build_sigma: n must be >= 2");
	std::complex<double> phase =
	    n % 2 == 0 ? unit_phase(M_PI / n) : std::complex<double>(1.0);
	Matrix s = Matrix::Zero(n, n);
	for (int i = 0; i < n; ++i)
		s((i + 1) % n, i) = phase;
	return s;
}

CartanVector torus_log(const Eigen::VectorXcd &diag)
{
	long n = diag.size();
	std::complex<double> det = 1;
	for (long i = 0; i < n; ++i) {
		if (std::abs(std::abs(diag[i]) - 1.0) > 1e-8)
			throw std::invalid_argument("torus_log: entry not of unit modulus");
		det *= diag[i];
	}
	if (std::abs(det - 1.0) > 1e-8)
		throw std::invalid_argument("torus_log: determinant not 1");

	Eigen::VectorXd theta(n);
	for (long i = 0; i < n; ++i) {
		double t = std::atan2(diag[i].imag(), diag[i].real()); // (-pi, pi]
		if (t <= -M_PI)
			t = M_PI;
		theta[i] = t;
	}
	double sum = theta.sum();
	long k = std::lround(sum / kTwoPi);
	// Push |k| angles of extremal value to the other branch so the sum
	// is exactly 2*pi*k less; ties broken by lowest index.
	int sgn = k > 0 ? 1 : -1;
	for (long step = 0; step < std::labs(k); ++step) {
		long best = -1;
		for (long i = 0; i < n; ++i) {
			if (best < 0 || sgn * theta[i] > sgn * theta[best])
				best = i;
		}
		theta[best] -= kTwoPi * sgn;
	}
	// remove rounding residue from the smallest entries' sum
	theta[0] -= theta.sum();
	return {theta};
}

CartanVector solve_cartan(const LaurentPoly &p, const CartanVector &gbar)
{
	long n = gbar.n();
	if (n < 2)
		throw std::invalid_argument("solve_cartan: n must be >= 2");

	// forward DFT of g
	Eigen::VectorXcd ghat(n);
	for (long l = 0; l < n; ++l) {
		std::complex<double> s = 0;
		for (long i = 0; i < n; ++i)
			s += gbar.theta[i] * unit_phase(-kTwoPi * (double)l * (double)i / (double)n);
		ghat[l] = s;
	}

	// P has eigenvalue zeta^-l on the l-th Fourier mode
	Eigen::VectorXcd hhat(n);
	hhat[0] = 0;
	for (long l = 1; l < n; ++l) {
		std::complex<double> pv = eval_at_root(p, n, -l);
		if (std::abs(pv) < 1e-12)
			throw std::invalid_argument(
			    "solve_cartan: polynomial vanishes at a required root of unity "
			    "(certificate does not cover this n)");
		hhat[l] = ghat[l] / pv;
	}

	Eigen::VectorXd h(n);
	for (long i = 0; i < n; ++i) {
		std::complex<double> s = 0;
		for (long l = 0; l < n; ++l)
			s += hhat[l] * unit_phase(kTwoPi * (double)l * (double)i / (double)n);
		h[i] = s.real() / (double)n;
	}

	// verify the linear system directly
	Eigen::VectorXd applied = Eigen::VectorXd::Zero(n);
	for (auto &[e, c] : p.coeffs())
		applied += c.convert_to<double>() * shift_forward(h, to_ll(e));
	double ref = std::max(1.0, gbar.theta.norm());
	if ((applied - gbar.theta).norm() > 1e-10 * ref)
		throw std::runtime_error("solve_cartan: residual check failed");
	return {h};
}

Matrix exp_diag(const CartanVector &h)
{
	long n = h.n();
	Matrix m = Matrix::Zero(n, n);
	for (long i = 0; i < n; ++i)
		m(i, i) = unit_phase(h.theta[i]);
	return m;
}

Matrix evaluate_word(const Word &w, const Matrix &u, const Matrix &v)
{
	if (u.rows() != v.rows() || u.cols() != v.cols() || u.rows() != u.cols())
		throw std::invalid_argument("evaluate_word: dimension mismatch");
	long n = u.rows();
	Matrix r = Matrix::Identity(n, n);
	for (auto &s : w.syllables()) {
		const Matrix &m = s.gen == Gen::A ? u : v;
		Matrix base = s.exp > 0 ? m : Matrix(m.adjoint());
		long long e = to_ll(abs(s.exp));
		// square-and-multiply
		Matrix acc = Matrix::Identity(n, n);
		Matrix sq = base;
		while (e > 0) {
			if (e & 1)
				acc = acc * sq;
			e >>= 1;
			if (e > 0)
				sq = sq * sq;
		}
		r = r * acc;
	}
	return r;
}

std::pair<Matrix, Eigen::VectorXcd> diagonalize_unitary(const Matrix &g)
{
	long n = g.rows();
	Eigen::ComplexSchur<Matrix> schur(g);
	Matrix z = schur.matrixU();
	Eigen::VectorXcd d = schur.matrixT().diagonal();

	// descending principal argument, stable for ties
	std::vector<long> order(n);
	std::iota(order.begin(), order.end(), 0);
	std::stable_sort(order.begin(), order.end(), [&](long i, long j) {
		return std::arg(d[i]) > std::arg(d[j]);
	});
	Matrix zs(n, n);
	Eigen::VectorXcd ds(n);
	for (long i = 0; i < n; ++i) {
		zs.col(i) = z.col(order[i]);
		ds[i] = d[order[i]];
	}
	return {zs, ds};
}

WitnessResult witness_derived(const Certificate &cert, int n, const Matrix &g)
{
	if (cert.classification != Classification::InF1NotF2)
		throw std::invalid_argument(
		    "witness_derived: certificate is not for a derived-subgroup word");
	if (n == 1)
		return {Matrix::Identity(1, 1), Matrix::Identity(1, 1), 0.0};
	if (!cert.covers(n))
		throw std::invalid_argument("witness_derived: n is not certified");
	validate_su(g);
	if (g.rows() != n)
		throw std::invalid_argument("witness_derived: dimension mismatch");

	auto [z, d] = diagonalize_unitary(g);
	CartanVector gbar = torus_log(d);
	CartanVector hbar = solve_cartan(cert.polynomial, gbar);
	Matrix sigma = build_sigma(n);
	Matrix h = exp_diag(hbar);

	// first ordered basis element (the t-carrier) evaluates to sigma
	Matrix u0 = evaluate_word(cert.back_substitution.image_a, sigma, h);
	Matrix v0 = evaluate_word(cert.back_substitution.image_b, sigma, h);
	Matrix u = z * u0 * z.adjoint();
	Matrix v = z * v0 * z.adjoint();
	double residual = (evaluate_word(cert.word, u, v) - g).norm();
	return {u, v, residual};
}

WitnessResult witness_nonderived(const Word &w, int n, const Matrix &g)
{
	auto [ka, kb] = exponent_sums(w);
	if (ka == 0 && kb == 0)
		throw std::invalid_argument(
		    "witness_nonderived: word lies in the commutator subgroup");
	if (n == 1)
		return {Matrix::Identity(1, 1), Matrix::Identity(1, 1), 0.0};
	validate_su(g);
	if (g.rows() != n)
		throw std::invalid_argument("witness_nonderived: dimension mismatch");

	bool use_a = ka != 0;
	Int k = use_a ? ka : kb;
	auto [z, d] = diagonalize_unitary(g);
	CartanVector gbar = torus_log(d);
	CartanVector scaled{gbar.theta / (double)to_ll(k)};
	Matrix h = z * exp_diag(scaled) * z.adjoint();
	Matrix id = Matrix::Identity(n, n);
	Matrix u = use_a ? h : id;
	Matrix v = use_a ? id : h;
	double residual = (evaluate_word(w, u, v) - g).norm();
	return {u, v, residual};
}

Matrix haar_random_su(int n, uint64_t seed)
{
	if (n < 1)
		throw std::invalid_argument("haar_random_su: n must be >= 1");
	if (n == 1)
		return Matrix::Identity(1, 1);
	std::mt19937_64 rng(seed);
	std::normal_distribution<double> gauss(0.0, 1.0);
	Matrix ginibre(n, n);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			ginibre(i, j) = std::complex<double>(gauss(rng), gauss(rng));
	Eigen::HouseholderQR<Matrix> qr(ginibre);
	Matrix q = qr.householderQ();
	Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
	// fix the phase ambiguity of QR so the distribution is Haar
	for (int j = 0; j < n; ++j) {
		std::complex<double> rj = r(j, j);
		q.col(j) *= rj / std::abs(rj);
	}
	// divide by an n-th root of the determinant to land in SU(n)
	std::complex<double> det = q.determinant();
	q *= unit_phase(-std::arg(det) / n);
	return q;
}

void write_matrix(std::ostream &os, const Matrix &m)
{
	long n = m.rows();
	os << n << '\n';
	char buf[128];
	for (long i = 0; i < n; ++i) {
		for (long j = 0; j < n; ++j) {
			std::snprintf(buf, sizeof buf, "%.17g%+.17gj", m(i, j).real(),
			              m(i, j).imag());
			os << buf << (j + 1 < n ? " " : "");
		}
		os << '\n';
	}
}

namespace {

std::complex<double> parse_complex(const std::string &tok)
{
	if (tok.empty() || tok.back() != 'j')
		throw std::invalid_argument("malformed complex entry: " + tok);
	// split at the sign that starts the imaginary part
	size_t split = std::string::npos;
	for (size_t i = 1; i + 1 < tok.size(); ++i) {
		if ((tok[i] == '+' || tok[i] == '-') &&
		    tok[i - 1] != 'e' && tok[i - 1] != 'E')
			split = i; // last such sign wins (exponent signs are skipped)
	}
	if (split == std::string::npos)
		throw std::invalid_argument("malformed complex entry: " + tok);
	double re = std::stod(tok.substr(0, split));
	double im = std::stod(tok.substr(split, tok.size() - 1 - split));
	return {re, im};
}

} // namespace

Matrix read_matrix(std::istream &is)
{
	long n = 0;
	if (!(is >> n) || n < 1)
		throw std::invalid_argument("matrix file: bad dimension line");
	Matrix m(n, n);
	for (long i = 0; i < n; ++i) {
		for (long j = 0; j < n; ++j) {
			std::string tok;
			if (!(is >> tok))
				throw std::invalid_argument("matrix file: truncated");
			m(i, j) = parse_complex(tok);
		}
	}
	validate_su(m);
	return m;
}

} // namespace wordmap
