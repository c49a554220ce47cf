#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "coxcomm/scalar.hpp"

using namespace coxcomm;

namespace {

unsigned totient(unsigned n) {
	unsigned t = 0;
	for (unsigned k = 1; k <= n; ++k)
		if (std::gcd(k, n) == 1) ++t;
	return t;
}

Scalar random_scalar(const ScalarContext& ctx, std::mt19937& rng) {
	std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
	std::vector<mpq_class> c;
	for (std::size_t k = 0; k < ctx->degree(); ++k) c.emplace_back(num(rng), den(rng));
	return ctx->from_coeffs(c);
}

} // namespace

TEST_CASE("cyclotomic polynomials") {
	CHECK(cyclotomic_polynomial(1) == IntPoly{-1, 1});
	CHECK(cyclotomic_polynomial(2) == IntPoly{1, 1});
	CHECK(cyclotomic_polynomial(12) == IntPoly{1, 0, -1, 0, 1});
	// The first cyclotomic polynomial with a coefficient outside {-1, 0, 1}.
	IntPoly p105 = cyclotomic_polynomial(105);
	CHECK(p105.size() == 49);
	CHECK(p105[7] == -2);
	CHECK(p105[41] == -2);
}

TEST_CASE("make_context examples") {
	auto c6 = make_context({2, 3});
	CHECK(c6->conductor() == 6);
	CHECK(c6->minpoly() == IntPoly{-3, 0, 1});
	Scalar c = c6->generator();
	CHECK(c * c == c6->from_rational(3));

	auto c1 = make_context({});
	CHECK(c1->conductor() == 1);
	CHECK(c1->degree() == 1);
	CHECK(c1->generator() == c1->from_rational(-2));

	auto c2 = make_context({2});
	CHECK(c2->conductor() == 2);
	CHECK(c2->degree() == 1);
	CHECK(c2->generator().is_zero());

	CHECK(make_context({4, 6})->conductor() == 12);
	CHECK_THROWS_AS(make_context({1}), InvalidInput);
}

TEST_CASE("minimal polynomial degree and numeric root for N <= 60") {
	for (unsigned N = 1; N <= 60; ++N) {
		IntPoly mp = two_cos_minpoly(N);
		std::size_t d = mp.size() - 1;
		if (N <= 2)
			CHECK(d == 1);
		else
			CHECK(d == totient(2 * N) / 2);
		CHECK(mp.back() == 1);
		// Exact evaluation at the double; Horner in doubles cancels badly
		// for N near 60.
		mpq_class c(2 * std::cos(std::numbers::pi / N));
		mpq_class acc = 0;
		for (std::size_t k = mp.size(); k-- > 0;) acc = acc * c + mp[k];
		INFO("N = " << N);
		CHECK(std::abs(acc.get_d()) < 1e-6);
	}
}

TEST_CASE("known minimal polynomials of 2cos(pi/N)") {
	CHECK(two_cos_minpoly(3) == IntPoly{-1, 1});
	CHECK(two_cos_minpoly(4) == IntPoly{-2, 0, 1});
	CHECK(two_cos_minpoly(5) == IntPoly{-1, -1, 1});
	CHECK(two_cos_minpoly(7) == IntPoly{1, -2, -1, 1});
	CHECK(two_cos_minpoly(8) == IntPoly{2, 0, -4, 0, 1});
}

TEST_CASE("two_cos_pi_over embeds subfield values") {
	auto ctx = make_context({4, 6, 12});
	Scalar r2 = ctx->two_cos_pi_over(4);
	CHECK(r2 * r2 == ctx->from_rational(2));
	CHECK(r2.sign() == 1);
	Scalar r3 = ctx->two_cos_pi_over(6);
	CHECK(r3 * r3 == ctx->from_rational(3));
	CHECK(ctx->two_cos_pi_over(12) == ctx->generator());
	CHECK(ctx->two_cos_pi_over(3) == ctx->one());
	CHECK(ctx->two_cos_pi_over(2).is_zero());
	CHECK(ctx->two_cos_pi_over(0) == ctx->from_rational(2));
	CHECK_THROWS_AS(ctx->two_cos_pi_over(5), InvalidInput);
	for (unsigned m : {4u, 6u, 12u}) CHECK(ctx->two_cos_pi_over(m).to_double() == doctest::Approx(2 * std::cos(std::numbers::pi / m)));
}

TEST_CASE("arithmetic identities") {
	auto ctx = make_context({6});
	Scalar x = ctx->generator();
	CHECK((x + (-x)).is_zero());
	CHECK(ctx->one() * x == x);
	CHECK(x - x == ctx->zero());
	auto other = make_context({5});
	CHECK_THROWS_AS(x + other->generator(), ContextMismatch);
	CHECK_THROWS_AS((void)(x == other->generator()), ContextMismatch);
}

TEST_CASE("sign examples") {
	auto ctx = make_context({6});
	CHECK(ctx->zero().sign() == 0);
	CHECK(ctx->from_rational(mpq_class(-1, 2)).sign() == -1);
	CHECK((ctx->generator() - ctx->one()).sign() == 1);       // sqrt(3) - 1
	CHECK((ctx->generator() - ctx->from_rational(2)).sign() == -1);

	// Golden ratio against close rational bounds.
	auto c5 = make_context({5});
	Scalar phi = c5->generator();
	CHECK((phi - c5->from_rational(mpq_class("16180339887/10000000000"))).sign() == 1);
	CHECK((phi - c5->from_rational(mpq_class("16180339888/10000000000"))).sign() == -1);
	// Agrees with a 40-digit expansion of the golden ratio.
	CHECK((phi - c5->from_rational(mpq_class("16180339887498948482045868343656381177203/10000000000000000000000000000000000000000")))
	          .sign() == 1);
	CHECK((phi - c5->from_rational(mpq_class("16180339887498948482045868343656381177204/10000000000000000000000000000000000000000")))
	          .sign() == -1);
}

TEST_CASE("property: field axioms and sign multiplicativity") {
	std::mt19937 rng(7);
	for (unsigned N : {1u, 4u, 5u, 7u, 12u, 15u}) {
		auto ctx = make_context(N == 1 ? std::set<unsigned>{} : std::set<unsigned>{N});
		for (int trial = 0; trial < 60; ++trial) {
			Scalar a = random_scalar(ctx, rng), b = random_scalar(ctx, rng), c = random_scalar(ctx, rng);
			REQUIRE((a + b) + c == a + (b + c));
			REQUIRE((a * b) * c == a * (b * c));
			REQUIRE(a * (b + c) == a * b + a * c);
			REQUIRE(a * b == b * a);
			REQUIRE(a + ctx->zero() == a);
			REQUIRE(a * ctx->one() == a);
			REQUIRE((a * b).sign() == a.sign() * b.sign());
			REQUIRE((a.sign() == 0) == a.is_zero());
			double approx = a.to_double();
			if (std::abs(approx) > 1e-9) REQUIRE(a.sign() == (approx > 0 ? 1 : -1));
			REQUIRE((a * b).to_double() == doctest::Approx(a.to_double() * b.to_double()).epsilon(1e-9));
		}
	}
}
