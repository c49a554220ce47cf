#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "coxcomm/commclass.hpp"
#include "coxcomm/typea.hpp"
#include "oracles.hpp"

using namespace coxcomm;

namespace {

RootVec sum(const RootVec& a, const RootVec& b) {
	RootVec out = a;
	for (std::size_t i = 0; i < out.size(); ++i) out.coords[i] = out.coords[i] + b.coords[i];
	return out;
}

// Number of commutation classes among all reduced words of g, found by
// brute-force products and commutation BFS.
std::size_t oracle_class_count(const CoxeterSystem& sys, const GroupElement& g, std::size_t len) {
	auto words = oracle::words_of_length_for(sys, g, len);
	return oracle::partition_by_commutation({words.begin(), words.end()}, sys.alphabet()).size();
}

std::set<LambdaFunction> lambdas_from_classes(const CoxeterSystem& sys, const GroupElement& g) {
	std::set<LambdaFunction> out;
	for (const auto& c : enumerate_commutation_classes(sys, g)) out.insert(lambda_of_poset(sys, c.poset));
	return out;
}

Word random_word(std::size_t rank, std::size_t len, std::mt19937& rng) {
	std::uniform_int_distribution<Symbol> letter(0, static_cast<Symbol>(rank - 1));
	Word w;
	for (std::size_t i = 0; i < len; ++i) w.push_back(letter(rng));
	return w;
}

} // namespace

TEST_CASE("phi and lambda on a chain poset") {
	auto a2 = CoxeterSystem::named("A2");
	RootVec r1 = a2.simple_root(0), r2 = a2.simple_root(1);
	WordPoset p = build_poset(a2.parse_word("s1 s2 s1"), a2.alphabet());
	CHECK(phi_bijection(a2, p) == std::vector<RootVec>{r1, sum(r1, r2), r2});
	LambdaFunction lambda = lambda_of_poset(a2, p);
	CHECK(lambda.size() == 3);
	CHECK(lambda.at(r1) == 1);
	CHECK(lambda.at(sum(r1, r2)) == 2);
	CHECK(lambda.at(r2) == 3);

	CHECK_THROWS_AS(phi_bijection(a2, build_poset(a2.parse_word("s1 s1"), a2.alphabet())), NotReduced);
	CHECK(lambda_of_poset(a2, build_poset({}, a2.alphabet())).size() == 0);
}

TEST_CASE("lambda of a poset with commuting letters") {
	auto a3 = CoxeterSystem::named("A3");
	WordPoset p = build_poset(a3.parse_word("s1 s3 s2"), a3.alphabet());
	LambdaFunction lambda = lambda_of_poset(a3, p);
	CHECK(lambda.at(a3.simple_root(0)) == 1);
	CHECK(lambda.at(a3.simple_root(2)) == 1);
	RootVec top = sum(sum(a3.simple_root(0), a3.simple_root(1)), a3.simple_root(2));
	CHECK(lambda.at(top) == 2);
}

TEST_CASE("extend_lambda") {
	auto a3 = CoxeterSystem::named("A3");
	RootVec r1 = a3.simple_root(0), r2 = a3.simple_root(1), r3 = a3.simple_root(2);
	LambdaFunction empty;
	LambdaFunction l1 = extend_lambda(a3, empty, a3.identity(), 0);
	CHECK(l1.size() == 1);
	CHECK(l1.at(r1) == 1);

	GroupElement s1 = a3.generator(0);
	LambdaFunction l13 = extend_lambda(a3, l1, s1, 2);
	CHECK(l13.at(r3) == 1);

	LambdaFunction l12 = extend_lambda(a3, l1, s1, 1);
	CHECK(l12.at(sum(r1, r2)) == 2);

	CHECK_THROWS_AS(extend_lambda(a3, l1, s1, 0), DescentError);

	// s2 s3 s2: the last root is r3, simple but above r2 + r3.
	GroupElement s2s3 = a3.element(a3.parse_word("s2 s3"));
	LambdaFunction l23 = extend_lambda(a3, extend_lambda(a3, empty, a3.identity(), 1), a3.generator(1), 2);
	CHECK(l23.at(sum(r2, r3)) == 2);
	LambdaFunction l232 = extend_lambda(a3, l23, s2s3, 1);
	CHECK(l232.at(r3) == 3);
	CHECK(l232 == lambda_of_poset(a3, build_poset(a3.parse_word("s2 s3 s2"), a3.alphabet())));
}

TEST_CASE("c_set of small elements") {
	auto a3 = CoxeterSystem::named("A3");
	CSet e = c_set(a3, a3.identity());
	CHECK(e.lambdas.size() == 1);
	CHECK(e.lambdas.begin()->size() == 0);

	GroupElement g = a3.element(a3.parse_word("s1 s3"));
	CSet c = c_set(a3, g);
	CHECK(c.lambdas.size() == 1);
	CHECK(c.element == g);

	Budget tiny;
	tiny.max_memo = 2;
	CHECK_THROWS_AS(c_set(a3, a3.element(a3.parse_word("s1 s2 s3 s1")), tiny), ResourceLimit);
	CHECK_THROWS_AS(c_count_recurrence(a3, a3.element(a3.parse_word("s1 s2 s3 s1")), tiny), ResourceLimit);
}

TEST_CASE("C[4231] = 3 through the recurrence") {
	auto a3 = CoxeterSystem::named("A3");
	GroupElement g = perm_to_element(a3, Permutation::parse("4231"));
	CHECK(oracle_class_count(a3, g, 5) == 3);

	RecurrenceExpansion ex = expand_recurrence(a3, g);
	CHECK(ex.value == 3);
	REQUIRE(ex.terms.size() == 3);
	CHECK(ex.terms[0].subset == std::vector<Symbol>{0});
	CHECK(element_to_perm(a3, ex.terms[0].element) == Permutation::parse("2431"));
	CHECK(ex.terms[0].value == 2);
	CHECK(ex.terms[0].sign == 1);
	CHECK(ex.terms[1].subset == std::vector<Symbol>{2});
	CHECK(element_to_perm(a3, ex.terms[1].element) == Permutation::parse("4213"));
	CHECK(ex.terms[1].value == 2);
	CHECK(ex.terms[2].subset == std::vector<Symbol>{0, 2});
	CHECK(element_to_perm(a3, ex.terms[2].element) == Permutation::parse("2413"));
	CHECK(ex.terms[2].value == 1);
	CHECK(ex.terms[2].sign == -1);

	CHECK(c_set(a3, g).lambdas.size() == 3);
	CHECK(enumerate_commutation_classes(a3, g).size() == 3);

	GroupElement h = perm_to_element(a3, Permutation::parse("2413"));
	CHECK(oracle_class_count(a3, h, 3) == 1);
	CHECK(c_count_recurrence(a3, h) == 1);
	CHECK(expand_recurrence(a3, a3.identity()).value == 1);
}

TEST_CASE("independent_subsets") {
	auto a3 = CoxeterSystem::named("A3");
	using Subsets = std::vector<std::vector<Symbol>>;
	CHECK(independent_subsets(a3, {0, 2}) == Subsets{{0}, {2}, {0, 2}});
	CHECK(independent_subsets(a3, {0, 1, 2}) == Subsets{{0}, {1}, {2}, {0, 2}});
	CHECK(independent_subsets(a3, {}).empty());
}

TEST_CASE("321-avoidance") {
	CHECK(is_321_avoiding({1, 2, 3}));
	CHECK_FALSE(is_321_avoiding({3, 2, 1}));
	CHECK(is_321_avoiding({2, 4, 1, 3}));
	CHECK_FALSE(is_321_avoiding({4, 2, 3, 1}));
	CHECK(is_321_avoiding({}));
}

TEST_CASE("commutation classes of the A2 and A3 longest elements") {
	auto a2 = CoxeterSystem::named("A2");
	auto classes = enumerate_commutation_classes(a2, a2.element(a2.parse_word("s1 s2 s1")));
	CHECK(classes.size() == 2);

	auto a3 = CoxeterSystem::named("A3");
	GroupElement w0 = a3.element(a3.parse_word("s1 s2 s1 s3 s2 s1"));
	CHECK(oracle_class_count(a3, w0, 6) == 8);
	auto c3 = enumerate_commutation_classes(a3, w0);
	CHECK(c3.size() == 8);
	std::size_t total = 0;
	for (const auto& c : c3) {
		total += c.words;
		CHECK(count_linear_extensions(c.poset) == c.words);
	}
	CHECK(total == 16);
	CHECK(c_count_recurrence(a3, w0) == 8);
}

TEST_CASE("property: all of S4 agrees across the three routes") {
	auto a3 = CoxeterSystem::named("A3");
	std::vector<unsigned> images{1, 2, 3, 4};
	std::size_t seen = 0;
	do {
		Permutation p(images);
		GroupElement g = perm_to_element(a3, p);
		std::size_t l = p.inversions();
		std::size_t expected = oracle_class_count(a3, g, l);
		auto from_classes = lambdas_from_classes(a3, g);
		REQUIRE(from_classes.size() == expected);
		REQUIRE(c_set(a3, g).lambdas == from_classes);
		REQUIRE(c_count_recurrence(a3, g) == expected);
		REQUIRE(c_count_recurrence(a3, g.inverse()) == expected);
		if (is_321_avoiding(images)) REQUIRE(expected == 1);
		++seen;
	} while (std::next_permutation(images.begin(), images.end()));
	CHECK(seen == 24);
}

TEST_CASE("property: 321-avoiding permutations have one commutation class") {
	std::mt19937 rng(23);
	for (std::size_t n : {5u, 6u}) {
		auto sys = CoxeterSystem::named("A" + std::to_string(n - 1));
		int tested = 0;
		for (int trial = 0; trial < 400 && tested < 30; ++trial) {
			std::vector<unsigned> images(n);
			std::iota(images.begin(), images.end(), 1u);
			std::shuffle(images.begin(), images.end(), rng);
			if (!is_321_avoiding(images)) continue;
			++tested;
			GroupElement g = perm_to_element(sys, Permutation(images));
			REQUIRE(c_count_recurrence(sys, g) == 1);
			REQUIRE(c_set(sys, g).lambdas.size() == 1);
			auto words = enumerate_reduced_words(sys, g);
			REQUIRE(oracle::partition_by_commutation(words, sys.alphabet()).size() == 1);
		}
		CHECK(tested > 5);
	}
}

TEST_CASE("property: C(g) matches the classes in other types") {
	std::mt19937 rng(29);
	for (const char* name : {"B3", "H3", "I2:5", "I2:inf", "D4"}) {
		auto sys = CoxeterSystem::named(name);
		for (int trial = 0; trial < 20; ++trial) {
			GroupElement g = sys.element(random_word(sys.rank(), rng() % 8, rng));
			auto words = enumerate_reduced_words(sys, g);
			std::size_t expected = oracle::partition_by_commutation(words, sys.alphabet()).size();
			auto from_classes = lambdas_from_classes(sys, g);
			REQUIRE(from_classes.size() == expected);
			REQUIRE(c_set(sys, g).lambdas == from_classes);
			REQUIRE(c_count_recurrence(sys, g) == expected);
			REQUIRE(c_count_recurrence(sys, g.inverse()) == expected);
		}
	}
}
