#pragma once

#include "wordmap/certify.hpp"
#include "wordmap/laurent.hpp"
#include "wordmap/word.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>

namespace wordmap {

using Matrix = Eigen::MatrixXcd;

/// Element of the Cartan subalgebra: real angles with zero sum,
/// representing diag(i*theta_1, ..., i*theta_n).
struct CartanVector
{
	Eigen::VectorXd theta;

	int n() const { return (int)theta.size(); }
};

struct WitnessResult
{
	Matrix u;
	Matrix v;
	double residual = 0; // Frobenius norm of omega(u,v) - g
};

/// Throws std::invalid_argument unless U is special unitary within
/// tolerance (||U*U - I||_F <= 1e-10, |det U - 1| <= 1e-10).
void validate_su(const Matrix &u);

/// The n-cycle permutation matrix, scaled by exp(i*pi/n) when n is even
/// so the determinant is 1.
Matrix build_sigma(int n);

/// Principal-branch logarithm of a diagonal of a special unitary matrix,
/// adjusted to have exactly zero angle sum.
CartanVector torus_log(const Eigen::VectorXcd &diag);

/// Solves sum_j a_j P^j h = g on the zero-sum subspace, where P is the
/// coordinate permutation induced by conjugation with the n-cycle.
/// Solved in the discrete Fourier eigenbasis of the cyclic shift.
/// Refuses when |p| < 1e-12 at a required root of unity.
CartanVector solve_cartan(const LaurentPoly &p, const CartanVector &gbar);

/// diag(exp(i*theta)).
Matrix exp_diag(const CartanVector &h);

/// Left-to-right product of matrix powers per syllable.
Matrix evaluate_word(const Word &w, const Matrix &u, const Matrix &v);

/// Unitary diagonalization g = z d z* of a (normal) unitary matrix,
/// eigenvalues ordered by descending principal argument.
std::pair<Matrix, Eigen::VectorXcd> diagonalize_unitary(const Matrix &g);

/// Witness for a certified derived word: (u, v) with omega(u,v) ~= g.
WitnessResult witness_derived(const Certificate &cert, int n, const Matrix &g);

/// Witness for a word with nonzero exponent sums: a k-th root of g in
/// one slot, identity in the other.
WitnessResult witness_nonderived(const Word &w, int n, const Matrix &g);

/// Haar-distributed special unitary matrix; deterministic per seed.
Matrix haar_random_su(int n, uint64_t seed);

/// Text format: first line n, then n rows of complex entries RE+IMj.
void write_matrix(std::ostream &os, const Matrix &m);
Matrix read_matrix(std::istream &is); // validates SU membership

} // namespace wordmap
