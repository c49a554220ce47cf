#pragma once

// Exact arithmetic in the real field Q(c), c = 2cos(pi/N).
//
// A scalar is a coefficient vector over Q in the power basis 1, c, ...,
// c^{d-1}, where d is the degree of the minimal polynomial of c.  The
// representation is canonical, so equality is coefficient equality.  Signs
// are certified by evaluating at an MPFR interval enclosure of c with
// increasing precision.

#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "coxcomm/error.hpp"

namespace coxcomm {

class Scalar;
class ScalarField;
using ScalarContext = std::shared_ptr<const ScalarField>;

/// Integer polynomial, coefficients from the constant term up.
using IntPoly = std::vector<mpz_class>;

/// The n-th cyclotomic polynomial, by dividing x^n - 1 by every
/// cyclotomic factor of smaller order.
IntPoly cyclotomic_polynomial(unsigned n);

/// Minimal polynomial of 2cos(pi/N): the fold z -> z + 1/z of the
/// cyclotomic polynomial of order 2N.
IntPoly two_cos_minpoly(unsigned N);

/// The field Q(2cos(pi/N)).
class ScalarField : public std::enable_shared_from_this<ScalarField> {
public:
	/// Use make_context; public only for make_shared.
	explicit ScalarField(unsigned N);

	unsigned conductor() const { return n_; }
	std::size_t degree() const { return minpoly_.size() - 1; }
	/// Monic, constant term first.
	const IntPoly& minpoly() const { return minpoly_; }
	/// Floating-point approximation of the generator c.
	double generator_value() const { return c_approx_; }

	Scalar zero() const;
	Scalar one() const;
	Scalar from_rational(const mpq_class& q) const;
	/// The generator c = 2cos(pi/N).
	Scalar generator() const;
	/// 2cos(pi/m).  m == 0 encodes infinity (value 2).  Requires m in
	/// {1, 2, 3} or m dividing N.
	Scalar two_cos_pi_over(unsigned m) const;
	/// Parses a coefficient vector of "p/q" strings.
	Scalar from_coeffs(const std::vector<mpq_class>& coeffs) const;

private:
	unsigned n_;
	IntPoly minpoly_;
	double c_approx_;
};

/// Context for the field generated by 2cos(pi/m) over all given orders.
/// N is the lcm of the orders (1 for the empty set).  Throws InvalidInput
/// for an order below 2.
ScalarContext make_context(const std::set<unsigned>& finite_orders);

class Scalar {
public:
	const ScalarContext& context() const { return ctx_; }
	const std::vector<mpq_class>& coeffs() const { return coeffs_; }

	bool is_zero() const;
	/// Exact sign in {-1, 0, 1}.
	int sign() const;
	double to_double() const;
	/// Human-readable form such as "1/2 + 3*c".
	std::string to_string() const;
	std::size_t hash() const;

	friend Scalar operator+(const Scalar& a, const Scalar& b);
	friend Scalar operator-(const Scalar& a, const Scalar& b);
	friend Scalar operator*(const Scalar& a, const Scalar& b);
	Scalar operator-() const;
	Scalar& operator+=(const Scalar& b);
	Scalar& operator-=(const Scalar& b);

	/// Coefficient-vector equality.  Throws ContextMismatch across fields.
	friend bool operator==(const Scalar& a, const Scalar& b);

	/// Total order on representations (not the numeric order); used to key
	/// roots in ordered containers.
	friend bool repr_less(const Scalar& a, const Scalar& b);

private:
	friend class ScalarField;
	Scalar(ScalarContext ctx, std::vector<mpq_class> coeffs) : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {}

	void check_same(const Scalar& b) const;

	ScalarContext ctx_;
	std::vector<mpq_class> coeffs_;
};

std::size_t hash_value(const mpq_class& q);

} // namespace coxcomm
