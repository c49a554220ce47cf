#pragma once

// Brute-force references used by the unit and acceptance suites.  None of
// these call the routine they are used to check.

#include <deque>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>
#include <vector>

#include "coxcomm/coxeter.hpp"
#include "coxcomm/trace.hpp"

namespace coxcomm::oracle {

/// Longest chain ending at each element, by exhaustive DFS over all strict
/// chains of the order relation (not the covers).
inline std::vector<std::size_t> longest_chain_depths(const WordPoset& p) {
	const std::size_t k = p.size();
	std::vector<std::size_t> best(k, 0);
	std::function<void(std::size_t, std::size_t)> walk = [&](std::size_t u, std::size_t len) {
		best[u] = std::max(best[u], len);
		for (std::size_t v = 0; v < k; ++v)
			if (p.less(u, v)) walk(v, len + 1);
	};
	for (std::size_t u = 0; u < k; ++u) walk(u, 1);
	return best;
}

/// Word lengths of all elements reachable within max_len letters, by BFS
/// over the Cayley graph.  Uses only exact matrix equality.
inline std::unordered_map<GroupElement, std::size_t, GroupElementHash> cayley_lengths(const CoxeterSystem& sys,
                                                                                     std::size_t max_len) {
	std::unordered_map<GroupElement, std::size_t, GroupElementHash> dist;
	std::deque<GroupElement> queue;
	dist.emplace(sys.identity(), 0);
	queue.push_back(sys.identity());
	while (!queue.empty()) {
		GroupElement g = queue.front();
		queue.pop_front();
		std::size_t d = dist.at(g);
		if (d == max_len) continue;
		for (Symbol s = 0; s < sys.rank(); ++s) {
			GroupElement h = g * sys.generator(s);
			if (dist.emplace(h, d + 1).second) queue.push_back(h);
		}
	}
	return dist;
}

/// All words of the given length over the generators.
inline std::vector<Word> all_words(std::size_t alphabet, std::size_t len) {
	std::vector<Word> out{Word{}};
	for (std::size_t i = 0; i < len; ++i) {
		std::vector<Word> next;
		for (const auto& w : out)
			for (Symbol s = 0; s < alphabet; ++s) {
				Word x = w;
				x.push_back(s);
				next.push_back(std::move(x));
			}
		out = std::move(next);
	}
	return out;
}

/// Words of length len whose product is g (full product of generator
/// matrices, no descent tests).
inline std::set<Word> words_of_length_for(const CoxeterSystem& sys, const GroupElement& g, std::size_t len) {
	std::set<Word> out;
	for (auto& w : all_words(sys.rank(), len)) {
		GroupElement h = sys.identity();
		for (auto s : w) h = h * sys.generator(s);
		if (h == g) out.insert(w);
	}
	return out;
}

/// Closure of a word under braid moves s t s ... = t s t ... (m letters)
/// for finite m, which includes commutations (m = 2).
inline std::set<Word> braid_class(const CoxeterSystem& sys, const Word& w) {
	std::set<Word> seen{w};
	std::deque<Word> queue{w};
	while (!queue.empty()) {
		Word cur = queue.front();
		queue.pop_front();
		for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
			Symbol s = cur[i], t = cur[i + 1];
			if (s == t) continue;
			unsigned m = sys.order(s, t);
			if (m == kInfiniteOrder || i + m > cur.size()) continue;
			bool alternating = true;
			for (std::size_t k = 0; k < m && alternating; ++k) alternating = cur[i + k] == (k % 2 == 0 ? s : t);
			if (!alternating) continue;
			Word nxt = cur;
			for (std::size_t k = 0; k < m; ++k) nxt[i + k] = k % 2 == 0 ? t : s;
			if (seen.insert(nxt).second) queue.push_back(nxt);
		}
	}
	return seen;
}

/// Partition of a set of words into commutation classes by repeated BFS.
inline std::vector<std::set<Word>> partition_by_commutation(const std::vector<Word>& words, const Alphabet& a) {
	std::vector<std::set<Word>> parts;
	std::set<Word> done;
	for (const auto& w : words) {
		if (done.count(w)) continue;
		auto cls = commutation_class_bfs(w, a);
		done.insert(cls.begin(), cls.end());
		parts.push_back(std::move(cls));
	}
	return parts;
}

} // namespace coxcomm::oracle
