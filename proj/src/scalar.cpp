#include "coxcomm/scalar.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include <mpfr.h>

namespace coxcomm {

namespace {

IntPoly poly_trim(IntPoly p) {
	while (p.size() > 1 && p.back() == 0) p.pop_back();
	return p;
}

// Exact division by a monic divisor; the remainder must vanish.
IntPoly poly_div_exact(IntPoly num, const IntPoly& den) {
	const std::size_t dn = den.size() - 1;
	if (num.size() - 1 < dn) throw InvariantViolation("polynomial division: divisor degree too large");
	IntPoly quot(num.size() - dn, 0);
	for (std::size_t i = num.size(); i-- > dn;) {
		mpz_class t = num[i];
		quot[i - dn] = t;
		if (t == 0) continue;
		for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= t * den[j];
	}
	for (std::size_t i = 0; i < dn; ++i)
		if (num[i] != 0) throw InvariantViolation("polynomial division left a remainder");
	return quot;
}

mpz_class binomial(unsigned n, unsigned k) {
	mpz_class r;
	mpz_bin_uiui(r.get_mpz_t(), n, k);
	return r;
}

// RAII wrapper over mpfr_t.
class Mpfr {
public:
	explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
	~Mpfr() { mpfr_clear(v_); }
	Mpfr(const Mpfr&) = delete;
	Mpfr& operator=(const Mpfr&) = delete;
	mpfr_ptr get() { return v_; }
	mpfr_srcptr get() const { return v_; }

private:
	mpfr_t v_;
};

// Sign of sum coeffs[k] c^k for c in (0, 2), evaluated in interval
// arithmetic at the given precision.  Returns 0 when the enclosure
// straddles zero.
int interval_sign(const std::vector<mpq_class>& coeffs, unsigned N, mpfr_prec_t prec) {
	Mpfr pi_lo(prec), pi_hi(prec), a_lo(prec), a_hi(prec), c_lo(prec), c_hi(prec);
	mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
	mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
	mpfr_div_ui(a_lo.get(), pi_lo.get(), N, MPFR_RNDD);
	mpfr_div_ui(a_hi.get(), pi_hi.get(), N, MPFR_RNDU);
	// cos is decreasing on (0, pi/2], which contains pi/N for N >= 2.
	mpfr_cos(c_lo.get(), a_hi.get(), MPFR_RNDD);
	mpfr_cos(c_hi.get(), a_lo.get(), MPFR_RNDU);
	mpfr_mul_2ui(c_lo.get(), c_lo.get(), 1, MPFR_RNDD);
	mpfr_mul_2ui(c_hi.get(), c_hi.get(), 1, MPFR_RNDU);

	Mpfr lo(prec), hi(prec), t1(prec), t2(prec), q(prec);
	mpfr_set_zero(lo.get(), 1);
	mpfr_set_zero(hi.get(), 1);
	for (std::size_t k = coeffs.size(); k-- > 0;) {
		// [lo, hi] *= [c_lo, c_hi], with 0 < c_lo <= c_hi.
		if (mpfr_sgn(lo.get()) >= 0)
			mpfr_mul(t1.get(), lo.get(), c_lo.get(), MPFR_RNDD);
		else
			mpfr_mul(t1.get(), lo.get(), c_hi.get(), MPFR_RNDD);
		if (mpfr_sgn(hi.get()) >= 0)
			mpfr_mul(t2.get(), hi.get(), c_hi.get(), MPFR_RNDU);
		else
			mpfr_mul(t2.get(), hi.get(), c_lo.get(), MPFR_RNDU);
		mpfr_set_q(q.get(), coeffs[k].get_mpq_t(), MPFR_RNDD);
		mpfr_add(lo.get(), t1.get(), q.get(), MPFR_RNDD);
		mpfr_set_q(q.get(), coeffs[k].get_mpq_t(), MPFR_RNDU);
		mpfr_add(hi.get(), t2.get(), q.get(), MPFR_RNDU);
	}
	if (mpfr_sgn(lo.get()) > 0) return 1;
	if (mpfr_sgn(hi.get()) < 0) return -1;
	return 0;
}

constexpr mpfr_prec_t kStartPrecision = 128;
constexpr mpfr_prec_t kMaxPrecision = 16384;

} // namespace

// ---------------------------------------------------------------------------
// Polynomials

IntPoly cyclotomic_polynomial(unsigned n) {
	if (n == 0) throw InvalidInput("cyclotomic polynomial of order 0");
	IntPoly p(n + 1, 0);
	p[0] = -1;
	p[n] = 1;
	for (unsigned d = 1; d < n; ++d)
		if (n % d == 0) p = poly_div_exact(std::move(p), cyclotomic_polynomial(d));
	return poly_trim(std::move(p));
}

IntPoly two_cos_minpoly(unsigned N) {
	if (N == 0) throw InvalidInput("2cos(pi/N) needs N >= 1");
	if (N == 1) return {2, 1}; // c = -2
	IntPoly cyc = cyclotomic_polynomial(2 * N);
	const std::size_t deg = cyc.size() - 1;
	if (deg % 2 != 0) throw InvariantViolation("cyclotomic polynomial of odd degree");
	const std::size_t d = deg / 2;
	// cyc(z) = z^d g(z + 1/z); peel off the top power of (z + 1/z) at a time.
	// laurent[j] holds the coefficient of z^(j - d).
	IntPoly laurent = cyc;
	IntPoly g(d + 1, 0);
	for (std::size_t k = d + 1; k-- > 0;) {
		mpz_class t = laurent[d + k];
		g[k] = t;
		if (t == 0) continue;
		for (unsigned i = 0; i <= k; ++i) laurent[d + k - 2 * i] -= t * binomial(static_cast<unsigned>(k), i);
	}
	for (const auto& x : laurent)
		if (x != 0) throw InvariantViolation("cyclotomic polynomial is not palindromic");
	return g;
}

// ---------------------------------------------------------------------------
// ScalarField

ScalarField::ScalarField(unsigned N)
    : n_(N), minpoly_(two_cos_minpoly(N)), c_approx_(2.0 * std::cos(std::numbers::pi / N)) {}

ScalarContext make_context(const std::set<unsigned>& finite_orders) {
	unsigned N = 1;
	for (auto m : finite_orders) {
		if (m < 2) throw InvalidInput("finite Coxeter order must be at least 2");
		N = std::lcm(N, m);
	}
	return std::make_shared<const ScalarField>(N);
}

Scalar ScalarField::zero() const { return Scalar(shared_from_this(), std::vector<mpq_class>(degree(), 0)); }

Scalar ScalarField::one() const { return from_rational(1); }

Scalar ScalarField::from_rational(const mpq_class& q) const {
	std::vector<mpq_class> c(degree(), 0);
	c[0] = q;
	return Scalar(shared_from_this(), std::move(c));
}

Scalar ScalarField::generator() const {
	if (degree() == 1) {
		// c is rational: the root of the linear minimal polynomial.
		return from_rational(mpq_class(-minpoly_[0]));
	}
	std::vector<mpq_class> c(degree(), 0);
	c[1] = 1;
	return Scalar(shared_from_this(), std::move(c));
}

Scalar ScalarField::two_cos_pi_over(unsigned m) const {
	switch (m) {
	case 0: return from_rational(2);
	case 1: return from_rational(-2);
	case 2: return zero();
	case 3: return from_rational(1);
	default: break;
	}
	if (n_ % m != 0)
		throw InvalidInput("2cos(pi/" + std::to_string(m) + ") is not in the field of conductor " + std::to_string(n_));
	// With z = exp(i pi / N): D_k = z^k + z^-k satisfies D_{k+1} = c D_k - D_{k-1}.
	const unsigned steps = n_ / m;
	Scalar prev = from_rational(2);
	Scalar cur = generator();
	Scalar c = generator();
	for (unsigned k = 1; k < steps; ++k) {
		Scalar nxt = c * cur - prev;
		prev = std::move(cur);
		cur = std::move(nxt);
	}
	return cur;
}

Scalar ScalarField::from_coeffs(const std::vector<mpq_class>& coeffs) const {
	if (coeffs.size() != degree())
		throw InvalidInput("scalar needs " + std::to_string(degree()) + " coefficients, got " +
		                   std::to_string(coeffs.size()));
	std::vector<mpq_class> c = coeffs;
	for (auto& q : c) q.canonicalize();
	return Scalar(shared_from_this(), std::move(c));
}

// ---------------------------------------------------------------------------
// Scalar

void Scalar::check_same(const Scalar& b) const {
	if (ctx_->conductor() != b.ctx_->conductor())
		throw ContextMismatch("scalars from fields of conductor " + std::to_string(ctx_->conductor()) + " and " +
		                      std::to_string(b.ctx_->conductor()));
}

bool Scalar::is_zero() const {
	for (const auto& q : coeffs_)
		if (q != 0) return false;
	return true;
}

int Scalar::sign() const {
	if (coeffs_.size() == 1) return sgn(coeffs_[0]);
	if (is_zero()) return 0;
	for (mpfr_prec_t prec = kStartPrecision; prec <= kMaxPrecision; prec *= 2) {
		int s = interval_sign(coeffs_, ctx_->conductor(), prec);
		if (s != 0) return s;
	}
	throw InvariantViolation("sign of nonzero scalar " + to_string() + " not resolved at " +
	                         std::to_string(kMaxPrecision) + " bits");
}

double Scalar::to_double() const {
	const double c = ctx_->generator_value();
	double acc = 0;
	for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * c + coeffs_[k].get_d();
	return acc;
}

std::string Scalar::to_string() const {
	std::string out;
	for (std::size_t k = 0; k < coeffs_.size(); ++k) {
		if (coeffs_[k] == 0) continue;
		if (!out.empty()) out += " + ";
		out += coeffs_[k].get_str();
		if (k == 1) out += "*c";
		if (k > 1) out += "*c^" + std::to_string(k);
	}
	return out.empty() ? "0" : out;
}

std::size_t hash_value(const mpq_class& q) {
	std::size_t h = std::hash<long>{}(mpz_get_si(q.get_num_mpz_t()));
	h ^= std::hash<long>{}(mpz_get_si(q.get_den_mpz_t())) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
	h ^= static_cast<std::size_t>(mpz_size(q.get_num_mpz_t()) * 31 + sgn(q));
	return h;
}

std::size_t Scalar::hash() const {
	std::size_t h = coeffs_.size();
	for (const auto& q : coeffs_) h ^= hash_value(q) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
	return h;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
	Scalar r = a;
	r += b;
	return r;
}

Scalar operator-(const Scalar& a, const Scalar& b) {
	Scalar r = a;
	r -= b;
	return r;
}

Scalar& Scalar::operator+=(const Scalar& b) {
	check_same(b);
	for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += b.coeffs_[k];
	return *this;
}

Scalar& Scalar::operator-=(const Scalar& b) {
	check_same(b);
	for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= b.coeffs_[k];
	return *this;
}

Scalar Scalar::operator-() const {
	Scalar r = *this;
	for (auto& q : r.coeffs_) q = -q;
	return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
	a.check_same(b);
	const std::size_t d = a.coeffs_.size();
	if (d == 1) return Scalar(a.ctx_, {a.coeffs_[0] * b.coeffs_[0]});
	std::vector<mpq_class> prod(2 * d - 1, 0);
	for (std::size_t i = 0; i < d; ++i) {
		if (a.coeffs_[i] == 0) continue;
		for (std::size_t j = 0; j < d; ++j)
			if (b.coeffs_[j] != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
	}
	// Reduce modulo the monic minimal polynomial, top degree first.
	const IntPoly& mp = a.ctx_->minpoly();
	for (std::size_t k = prod.size(); k-- > d;) {
		if (prod[k] == 0) continue;
		mpq_class t = prod[k];
		for (std::size_t j = 0; j <= d; ++j) prod[k - d + j] -= t * mp[j];
	}
	prod.resize(d);
	return Scalar(a.ctx_, std::move(prod));
}

bool operator==(const Scalar& a, const Scalar& b) {
	a.check_same(b);
	return a.coeffs_ == b.coeffs_;
}

bool repr_less(const Scalar& a, const Scalar& b) {
	a.check_same(b);
	return std::lexicographical_compare(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin(), b.coeffs_.end());
}

} // namespace coxcomm
