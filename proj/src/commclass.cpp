#include "coxcomm/commclass.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

namespace coxcomm {

std::vector<RootVec> phi_bijection(const CoxeterSystem& sys, const WordPoset& p) {
	LinearExtensionStream stream(p);
	auto order = stream.next_order();
	std::vector<RootVec> phi(p.size());
	GroupElement g = sys.identity();
	for (auto u : *order) {
		Symbol s = p.label(u);
		if (s >= sys.rank()) throw InvalidInput("poset label outside the generator set");
		if (is_right_descent(g, s))
			throw NotReduced("poset does not come from a reduced word (element " + std::to_string(u + 1) + ")");
		phi[u] = g.image_of_simple(s);
		g = sys.right_multiply(g, s);
	}
	std::set<RootVec> distinct(phi.begin(), phi.end());
	if (distinct.size() != phi.size()) throw InvariantViolation("phi is not injective");
	return phi;
}

LambdaFunction lambda_of_poset(const CoxeterSystem& sys, const WordPoset& p) {
	auto phi = phi_bijection(sys, p);
	depth_layers(p, sys.alphabet()); // layer independence
	auto depth = depth_function(p);
	LambdaFunction out;
	for (std::size_t u = 0; u < p.size(); ++u) out.values.emplace(std::move(phi[u]), depth[u]);
	return out;
}

namespace {

bool is_simple_root(const RootVec& r) {
	std::size_t nonzero = 0;
	bool unit = true;
	for (const auto& x : r.coords) {
		if (x.is_zero()) continue;
		++nonzero;
		unit = unit && x == x.context()->one();
	}
	return nonzero == 1 && unit;
}

} // namespace

LambdaFunction extend_lambda(const CoxeterSystem& sys, const LambdaFunction& lambda, const GroupElement& w, Symbol s) {
	if (is_right_descent(w, s))
		throw DescentError("generator " + sys.name(s) + " is a right descent; cannot extend");
	RootVec fresh = w.image_of_simple(s);
	std::size_t best = 0;
	for (const auto& [root, v] : lambda.values)
		if (v > best && sys.pairing(fresh, root).sign() > 0) best = v;
	// A simple new root may still lie above earlier roots, as in s2 s3 s2.
	if (best == 0 && !is_simple_root(fresh))
		throw UndefinedExtension("no root of R(w) pairs positively with the new root " + fresh.to_string());
	std::size_t value = best + 1;
	LambdaFunction out = lambda;
	out.values.emplace(std::move(fresh), value);
	return out;
}

CSet c_set(const CoxeterSystem& sys, const GroupElement& g, const Budget& budget) {
	std::unordered_map<GroupElement, std::set<LambdaFunction>, GroupElementHash> memo;
	std::function<const std::set<LambdaFunction>&(const GroupElement&)> build =
	    [&](const GroupElement& x) -> const std::set<LambdaFunction>& {
		if (auto it = memo.find(x); it != memo.end()) return it->second;
		std::set<LambdaFunction> result;
		auto desc = right_descents(x);
		if (desc.empty()) {
			result.insert(LambdaFunction{});
		} else {
			for (auto s : desc) {
				GroupElement shorter = sys.right_multiply(x, s);
				const auto& below = build(shorter);
				for (const auto& lambda : below) result.insert(extend_lambda(sys, lambda, shorter, s));
			}
		}
		if (memo.size() >= budget.max_memo)
			throw ResourceLimit("C(w) memo exceeded " + std::to_string(budget.max_memo) + " elements");
		return memo.emplace(x, std::move(result)).first->second;
	};
	return CSet{g, build(g)};
}

std::vector<std::vector<Symbol>> independent_subsets(const CoxeterSystem& sys, const std::vector<Symbol>& gens) {
	if (gens.size() >= 32) throw InvalidInput("too many generators for subset enumeration");
	std::vector<std::vector<Symbol>> out;
	const std::uint32_t limit = std::uint32_t{1} << gens.size();
	for (std::uint32_t mask = 1; mask < limit; ++mask) {
		std::vector<Symbol> subset;
		bool ok = true;
		for (std::size_t i = 0; i < gens.size() && ok; ++i) {
			if (!(mask >> i & 1u)) continue;
			for (auto t : subset) ok = ok && sys.commute(t, gens[i]);
			subset.push_back(gens[i]);
		}
		if (ok) out.push_back(std::move(subset));
	}
	return out;
}

namespace {

class RecurrenceEvaluator {
public:
	RecurrenceEvaluator(const CoxeterSystem& sys, const Budget& budget) : sys_(sys), budget_(budget) {}

	// Terms of the alternating sum for x; empty for the identity.
	std::vector<RecurrenceTerm> terms(const GroupElement& x) {
		std::vector<RecurrenceTerm> out;
		for (auto& subset : independent_subsets(sys_, right_descents(x))) {
			GroupElement y = x;
			for (auto s : subset) y = sys_.right_multiply(y, s);
			BigNat v = value(y);
			int sign = subset.size() % 2 == 1 ? 1 : -1;
			out.push_back(RecurrenceTerm{std::move(subset), sign, std::move(y), std::move(v)});
		}
		return out;
	}

	BigNat value(const GroupElement& x) {
		if (auto it = memo_.find(x); it != memo_.end()) return it->second;
		auto ts = terms(x);
		BigNat total = ts.empty() ? BigNat(1) : BigNat(0);
		for (const auto& t : ts) total += t.sign * t.value;
		if (total < 0) throw InvariantViolation("recurrence produced a negative count");
		if (memo_.size() >= budget_.max_memo)
			throw ResourceLimit("recurrence memo exceeded " + std::to_string(budget_.max_memo) + " elements");
		memo_.emplace(x, total);
		return total;
	}

private:
	const CoxeterSystem& sys_;
	const Budget& budget_;
	std::unordered_map<GroupElement, BigNat, GroupElementHash> memo_;
};

} // namespace

RecurrenceExpansion expand_recurrence(const CoxeterSystem& sys, const GroupElement& g, const Budget& budget) {
	RecurrenceEvaluator eval(sys, budget);
	RecurrenceExpansion out{BigNat(0), eval.terms(g)};
	if (out.terms.empty()) out.value = 1;
	for (const auto& t : out.terms) out.value += t.sign * t.value;
	return out;
}

BigNat c_count_recurrence(const CoxeterSystem& sys, const GroupElement& g, const Budget& budget) {
	RecurrenceEvaluator eval(sys, budget);
	return eval.value(g);
}

std::vector<CommutationClass> enumerate_commutation_classes(const CoxeterSystem& sys, const GroupElement& g,
                                                            const Budget& budget) {
	std::map<Word, CommutationClass> classes;
	for (auto& w : enumerate_reduced_words(sys, g, budget)) {
		WordPoset p = build_poset(w, sys.alphabet());
		Word canon = canonical_labels(p);
		auto it = classes.find(canon);
		if (it == classes.end())
			classes.emplace(canon, CommutationClass{canon, std::move(p), 1});
		else
			++it->second.words;
	}
	std::vector<CommutationClass> out;
	out.reserve(classes.size());
	for (auto& [_, c] : classes) out.push_back(std::move(c));
	return out;
}

bool is_321_avoiding(const std::vector<unsigned>& perm) {
	const std::size_t n = perm.size();
	for (std::size_t j = 1; j + 1 < n; ++j) {
		bool larger_before = false, smaller_after = false;
		for (std::size_t i = 0; i < j && !larger_before; ++i) larger_before = perm[i] > perm[j];
		for (std::size_t k = j + 1; k < n && !smaller_after; ++k) smaller_after = perm[k] < perm[j];
		if (larger_before && smaller_after) return false;
	}
	return true;
}

} // namespace coxcomm
