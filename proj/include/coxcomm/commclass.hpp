#pragma once

// Commutation classes of reduced words through depth functions on roots.
//
// For a reduced word poset P of w, the map phi sends position i to
// w_1 ... w_{i-1} r_{w_i}, a bijection onto R(w), the inversion set of
// w^{-1}.  Pulling the poset depth back along phi gives a function
// lambda_P : R(w) -> N+.  The set C(w) of such functions is built
// recursively by extend_lambda, and its size, the number of commutation
// classes of reduced words of w, also satisfies an alternating recurrence
// over independent subsets of right descents.

#include <cstddef>
#include <map>
#include <set>
#include <vector>

#include "coxcomm/coxeter.hpp"
#include "coxcomm/trace.hpp"

namespace coxcomm {

/// A map R(w) -> N+, keyed by exact root coordinates.
struct LambdaFunction {
	std::map<RootVec, std::size_t> values;

	std::size_t size() const { return values.size(); }
	bool contains(const RootVec& r) const { return values.count(r) != 0; }
	std::size_t at(const RootVec& r) const { return values.at(r); }

	friend bool operator==(const LambdaFunction&, const LambdaFunction&) = default;
	friend bool operator<(const LambdaFunction& a, const LambdaFunction& b) { return a.values < b.values; }
};

/// C(w) for one element.
struct CSet {
	GroupElement element;
	std::set<LambdaFunction> lambdas;
};

/// phi for a poset of a reduced word, indexed by element.  Reads the
/// labels along the first linear extension.  Throws NotReduced.
std::vector<RootVec> phi_bijection(const CoxeterSystem& sys, const WordPoset& p);

/// lambda_P: the depth of phi^{-1}(r).  Also checks that every depth layer
/// carries pairwise commuting labels.
LambdaFunction lambda_of_poset(const CoxeterSystem& sys, const WordPoset& p);

/// Extends lambda from R(w) to R(ws) = R(w) + {w r_s}.  The new root r
/// gets one more than the largest lambda(r') over r' in R(w) with
/// (r, r') > 0, or 1 when there is no such r' and r is simple.
///
/// Throws DescentError if s is a right descent of w, and
/// UndefinedExtension if no r' pairs positively with a non-simple r.
LambdaFunction extend_lambda(const CoxeterSystem& sys, const LambdaFunction& lambda, const GroupElement& w,
                             Symbol s);

/// C(w) by memoized recursion over right descents.  Throws ResourceLimit
/// once more than budget.max_memo elements are memoized.
CSet c_set(const CoxeterSystem& sys, const GroupElement& g, const Budget& budget = {});

/// Nonempty subsets of gens whose members pairwise commute, in increasing
/// bitmask order over the positions in gens.
std::vector<std::vector<Symbol>> independent_subsets(const CoxeterSystem& sys, const std::vector<Symbol>& gens);

struct RecurrenceTerm {
	std::vector<Symbol> subset;
	int sign;
	GroupElement element; // g times the product of subset
	BigNat value;         // |C(element)|
};

struct RecurrenceExpansion {
	BigNat value;
	std::vector<RecurrenceTerm> terms; // top level only
};

/// |C(g)| as the alternating sum over nonempty independent T in D_R(g) of
/// (-1)^{|T|+1} |C(gT)|, with |C(e)| = 1.
RecurrenceExpansion expand_recurrence(const CoxeterSystem& sys, const GroupElement& g, const Budget& budget = {});
BigNat c_count_recurrence(const CoxeterSystem& sys, const GroupElement& g, const Budget& budget = {});

struct CommutationClass {
	Word canonical;
	WordPoset poset;
	std::size_t words; // class size
};

/// Reduced words of g partitioned by canonical word, sorted by canonical
/// word.
std::vector<CommutationClass> enumerate_commutation_classes(const CoxeterSystem& sys, const GroupElement& g,
                                                            const Budget& budget = {});

/// One-line notation (values 1..n).  True when no i < j < k has
/// p(i) > p(j) > p(k).
bool is_321_avoiding(const std::vector<unsigned>& perm);

} // namespace coxcomm
