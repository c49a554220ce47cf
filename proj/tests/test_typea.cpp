#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "coxcomm/typea.hpp"

using namespace coxcomm;

TEST_CASE("permutation basics") {
	Permutation p = Permutation::parse("4231");
	CHECK(p.size() == 4);
	CHECK(p.at(1) == 4);
	CHECK(p.inversions() == 5);
	CHECK(p.descents() == std::vector<std::size_t>{1, 3});
	CHECK(p.to_string() == "4231");
	CHECK(p.swap_positions(1) == Permutation::parse("2431"));
	CHECK(Permutation::parse("10,1,2,3,4,5,6,7,8,9").to_string() == "10,1,2,3,4,5,6,7,8,9");
	CHECK(Permutation::identity(3) == Permutation::parse("123"));
	CHECK_THROWS_AS(Permutation::parse("1224"), InvalidInput);
	CHECK_THROWS_AS(Permutation::parse("12a"), InvalidInput);
	CHECK_THROWS_AS(Permutation::parse(""), InvalidInput);
	CHECK_THROWS_AS(Permutation::parse("1,,2"), InvalidInput);
}

TEST_CASE("generators act by swapping positions") {
	auto a3 = CoxeterSystem::named("A3");
	CHECK(is_type_a(a3));
	CHECK_FALSE(is_type_a(CoxeterSystem::named("B3")));
	CHECK(element_to_perm(a3, a3.generator(0)) == Permutation::parse("2134"));
	CHECK(element_to_perm(a3, a3.generator(1)) == Permutation::parse("1324"));
	CHECK(element_to_perm(a3, a3.element(a3.parse_word("s1 s2"))) == Permutation::parse("2314"));
	CHECK(element_to_perm(a3, a3.identity()) == Permutation::identity(4));

	GroupElement g = perm_to_element(a3, Permutation::parse("4231"));
	CHECK(length(a3, g) == 5);
	CHECK(right_descents(g) == std::vector<Symbol>{0, 2});

	CHECK_THROWS_AS(perm_to_element(a3, Permutation::parse("12345")), InvalidInput);
	CHECK_THROWS_AS(perm_to_element(CoxeterSystem::named("B3"), Permutation::parse("1234")), InvalidInput);
}

TEST_CASE("perm_reduced_word") {
	Word w = perm_reduced_word(Permutation::parse("4231"));
	CHECK(w.size() == 5);
	auto a3 = CoxeterSystem::named("A3");
	CHECK(is_reduced(a3, w));
	CHECK(perm_reduced_word(Permutation::identity(4)).empty());
}

TEST_CASE("property: permutations and elements round trip") {
	auto check = [](const CoxeterSystem& sys, const Permutation& p) {
		GroupElement g = perm_to_element(sys, p);
		REQUIRE(element_to_perm(sys, g) == p);
		REQUIRE(length(sys, g) == p.inversions());
		std::vector<Symbol> expected;
		for (auto i : p.descents()) expected.push_back(static_cast<Symbol>(i - 1));
		REQUIRE(right_descents(g) == expected);
		// Left descents are the descents of the inverse permutation.
		std::vector<unsigned> inv(p.size());
		for (std::size_t i = 1; i <= p.size(); ++i) inv[p.at(i) - 1] = static_cast<unsigned>(i);
		REQUIRE(element_to_perm(sys, g.inverse()) == Permutation(inv));
		for (Symbol s = 0; s + 1 < p.size(); ++s)
			REQUIRE(element_to_perm(sys, sys.right_multiply(g, s)) == p.swap_positions(s + 1));
	};

	auto a3 = CoxeterSystem::named("A3");
	std::vector<unsigned> images{1, 2, 3, 4};
	do check(a3, Permutation(images));
	while (std::next_permutation(images.begin(), images.end()));

	auto a5 = CoxeterSystem::named("A5");
	std::mt19937 rng(31);
	std::vector<unsigned> six(6);
	for (int trial = 0; trial < 100; ++trial) {
		std::iota(six.begin(), six.end(), 1u);
		std::shuffle(six.begin(), six.end(), rng);
		check(a5, Permutation(six));
	}
}
