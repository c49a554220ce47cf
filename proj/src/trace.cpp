#include "coxcomm/trace.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <unordered_map>

namespace coxcomm {

// ---------------------------------------------------------------------------
// Alphabet

Alphabet::Alphabet(std::vector<std::string> names,
                   const std::vector<std::pair<Symbol, Symbol>>& commuting_pairs)
    : names_(std::move(names)), commutes_(names_.size() * names_.size(), false) {
	for (std::size_t i = 0; i < names_.size(); ++i) {
		if (names_[i].empty()) throw InvalidInput("empty symbol name");
		for (std::size_t j = 0; j < i; ++j)
			if (names_[i] == names_[j]) throw InvalidInput("duplicate symbol name '" + names_[i] + "'");
	}
	const std::size_t n = names_.size();
	for (auto [a, b] : commuting_pairs) {
		if (a >= n || b >= n) throw InvalidInput("commuting pair references unknown symbol");
		if (a == b) throw InvalidInput("symbol '" + names_[a] + "' cannot commute with itself");
		commutes_[a * n + b] = true;
		commutes_[b * n + a] = true;
	}
}

Alphabet Alphabet::from_names(std::vector<std::string> names,
                              const std::vector<std::pair<std::string, std::string>>& commuting_pairs) {
	auto index = [&](const std::string& s) -> Symbol {
		auto it = std::find(names.begin(), names.end(), s);
		if (it == names.end()) throw InvalidInput("commuting pair references unknown symbol '" + s + "'");
		return static_cast<Symbol>(it - names.begin());
	};
	std::vector<std::pair<Symbol, Symbol>> pairs;
	for (const auto& [a, b] : commuting_pairs) pairs.emplace_back(index(a), index(b));
	return Alphabet(std::move(names), pairs);
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
	for (std::size_t i = 0; i < names_.size(); ++i)
		if (names_[i] == name) return static_cast<Symbol>(i);
	return std::nullopt;
}

std::vector<std::pair<Symbol, Symbol>> Alphabet::commuting_pairs() const {
	std::vector<std::pair<Symbol, Symbol>> out;
	for (Symbol a = 0; a < size(); ++a)
		for (Symbol b = a + 1; b < size(); ++b)
			if (commute(a, b)) out.emplace_back(a, b);
	return out;
}

Word Alphabet::parse_word(std::string_view text) const {
	Word w;
	std::size_t i = 0;
	auto is_sep = [](char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); };
	while (i < text.size()) {
		while (i < text.size() && is_sep(text[i])) ++i;
		std::size_t j = i;
		while (j < text.size() && !is_sep(text[j])) ++j;
		if (j > i) {
			auto tok = text.substr(i, j - i);
			auto s = find(tok);
			if (!s) throw InvalidInput("unknown symbol '" + std::string(tok) + "'");
			w.push_back(*s);
		}
		i = j;
	}
	return w;
}

std::string Alphabet::format(const Word& w, std::string_view sep) const {
	std::string out;
	for (std::size_t i = 0; i < w.size(); ++i) {
		if (i) out += sep;
		out += name(w[i]);
	}
	return out;
}

void Alphabet::check_word(const Word& w) const {
	for (auto s : w)
		if (s >= size()) throw InvalidInput("letter id " + std::to_string(s) + " outside alphabet of size " + std::to_string(size()));
}

// ---------------------------------------------------------------------------
// WordPoset

void WordPoset::finish() {
	const std::size_t k = labels_.size();
	down_.assign(k, BitSet(k));
	for (std::size_t u = 0; u < k; ++u)
		up_[u].for_each([&](std::size_t v) { down_[v].set(u); });

	covers_.clear();
	lower_.assign(k, {});
	upper_.assign(k, {});
	for (std::size_t u = 0; u < k; ++u) {
		up_[u].for_each([&](std::size_t v) {
			if (v == u) return;
			if ((up_[u] & down_[v]).count() == 2) {
				covers_.emplace_back(u, v);
				upper_[u].push_back(v);
				lower_[v].push_back(u);
			}
		});
	}
}

WordPoset WordPoset::from_relations(std::vector<Symbol> labels,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& relations) {
	WordPoset p;
	const std::size_t k = labels.size();
	p.labels_ = std::move(labels);
	p.up_.assign(k, BitSet(k));
	for (std::size_t u = 0; u < k; ++u) p.up_[u].set(u);
	for (auto [u, v] : relations) {
		if (u >= k || v >= k) throw InvalidInput("relation endpoint out of range");
		p.up_[u].set(v);
	}
	// Warshall closure on bit rows.
	for (std::size_t m = 0; m < k; ++m)
		for (std::size_t u = 0; u < k; ++u)
			if (p.up_[u].test(m)) p.up_[u] |= p.up_[m];
	for (std::size_t u = 0; u < k; ++u)
		for (std::size_t v = u + 1; v < k; ++v)
			if (p.up_[u].test(v) && p.up_[v].test(u)) throw InvalidInput("relations contain a cycle");
	p.finish();
	return p;
}

WordPoset build_poset(const Word& w, const Alphabet& a) {
	a.check_word(w);
	const std::size_t k = w.size();
	WordPoset p;
	p.labels_ = w;
	// Relations only point forward, so the closure is one pass over rows
	// from the top: up(i) = {i} | union of up(j) for dependent j > i.
	p.up_.assign(k, BitSet(k));
	for (std::size_t i = k; i-- > 0;) {
		p.up_[i].set(i);
		for (std::size_t j = i + 1; j < k; ++j)
			if (!p.up_[i].test(j) && a.dependent(w[i], w[j])) p.up_[i] |= p.up_[j];
	}
	p.finish();
	return p;
}

bool verify_word_poset(const WordPoset& p, const Alphabet& a) {
	for (auto s : p.labels())
		if (s >= a.size()) return false;
	for (std::size_t u = 0; u < p.size(); ++u)
		for (std::size_t v = u + 1; v < p.size(); ++v)
			if (a.dependent(p.label(u), p.label(v)) && !p.comparable(u, v)) return false;
	for (auto [u, v] : p.covers())
		if (!a.dependent(p.label(u), p.label(v))) return false;
	return true;
}

// ---------------------------------------------------------------------------
// Linear extensions

LinearExtensionStream::LinearExtensionStream(const WordPoset& p)
    : poset_(p), placed_(p.size(), false), missing_(p.size(), 0) {
	for (std::size_t v = 0; v < p.size(); ++v) missing_[v] = p.lower_covers(v).size();
	chosen_.reserve(p.size());
}

void LinearExtensionStream::place(std::size_t u) {
	placed_[u] = true;
	chosen_.push_back(u);
	for (auto v : poset_.upper_covers(u)) --missing_[v];
}

void LinearExtensionStream::unplace(std::size_t u) {
	placed_[u] = false;
	chosen_.pop_back();
	for (auto v : poset_.upper_covers(u)) ++missing_[v];
}

void LinearExtensionStream::fill_from(std::size_t start) {
	while (chosen_.size() < poset_.size()) {
		std::size_t u = start;
		while (!available(u)) ++u;
		place(u);
		start = 0;
	}
}

std::optional<std::vector<std::size_t>> LinearExtensionStream::next_order() {
	if (done_) return std::nullopt;
	if (!started_) {
		started_ = true;
		fill_from(0);
		return chosen_;
	}
	while (!chosen_.empty()) {
		std::size_t x = chosen_.back();
		unplace(x);
		for (std::size_t y = x + 1; y < poset_.size(); ++y) {
			if (available(y)) {
				place(y);
				fill_from(0);
				return chosen_;
			}
		}
	}
	done_ = true;
	return std::nullopt;
}

std::optional<Word> LinearExtensionStream::next() {
	auto order = next_order();
	if (!order) return std::nullopt;
	Word w;
	w.reserve(order->size());
	for (auto u : *order) w.push_back(poset_.label(u));
	return w;
}

std::vector<Word> linear_extensions(const WordPoset& p, const Budget& budget) {
	std::vector<Word> out;
	LinearExtensionStream stream(p);
	while (auto w = stream.next()) {
		if (out.size() >= budget.max_words)
			throw ResourceLimit("linear extension enumeration exceeded " + std::to_string(budget.max_words) + " words");
		out.push_back(std::move(*w));
	}
	return out;
}

BigNat count_linear_extensions(const WordPoset& p, const Budget& budget) {
	const std::size_t k = p.size();
	// Forward DP by down-set size: each layer maps a down-set to the number
	// of ways to have placed exactly its elements.
	std::unordered_map<BitSet, BigNat, BitSetHash> layer;
	layer.emplace(BitSet(k), BigNat(1));
	std::size_t seen = 1;
	for (std::size_t step = 0; step < k; ++step) {
		std::unordered_map<BitSet, BigNat, BitSetHash> next;
		for (const auto& [ideal, ways] : layer) {
			for (std::size_t u = 0; u < k; ++u) {
				if (ideal.test(u)) continue;
				const auto& lower = p.lower_covers(u);
				if (!std::all_of(lower.begin(), lower.end(), [&](std::size_t v) { return ideal.test(v); }))
					continue;
				BitSet grown = ideal;
				grown.set(u);
				next[grown] += ways;
			}
		}
		seen += next.size();
		if (seen > budget.max_memo)
			throw ResourceLimit("down-set lattice exceeded " + std::to_string(budget.max_memo) + " nodes");
		layer = std::move(next);
	}
	return layer.begin()->second;
}

std::set<Word> commutation_class_bfs(const Word& w, const Alphabet& a, const Budget& budget) {
	a.check_word(w);
	std::set<Word> seen{w};
	std::deque<Word> queue{w};
	while (!queue.empty()) {
		Word cur = std::move(queue.front());
		queue.pop_front();
		for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
			if (!a.commute(cur[i], cur[i + 1])) continue;
			std::swap(cur[i], cur[i + 1]);
			if (seen.insert(cur).second) {
				if (seen.size() > budget.max_words)
					throw ResourceLimit("commutation class exceeded " + std::to_string(budget.max_words) + " words");
				queue.push_back(cur);
			}
			std::swap(cur[i], cur[i + 1]);
		}
	}
	return seen;
}

// ---------------------------------------------------------------------------
// Canonical forms

Word canonical_labels(const WordPoset& p) {
	const std::size_t k = p.size();
	std::vector<std::size_t> missing(k);
	for (std::size_t v = 0; v < k; ++v) missing[v] = p.lower_covers(v).size();
	std::vector<bool> placed(k, false);
	Word out;
	out.reserve(k);
	for (std::size_t step = 0; step < k; ++step) {
		std::size_t best = k;
		for (std::size_t u = 0; u < k; ++u)
			if (!placed[u] && missing[u] == 0 && (best == k || p.label(u) < p.label(best))) best = u;
		placed[best] = true;
		out.push_back(p.label(best));
		for (auto v : p.upper_covers(best)) --missing[v];
	}
	return out;
}

Word canonical_word(const Word& w, const Alphabet& a) { return canonical_labels(build_poset(w, a)); }

bool posets_isomorphic(const WordPoset& p, const WordPoset& q) {
	return p.size() == q.size() && canonical_labels(p) == canonical_labels(q);
}

// ---------------------------------------------------------------------------
// Depth

std::vector<std::size_t> depth_function(const WordPoset& p) {
	const std::size_t k = p.size();
	std::vector<std::size_t> depth(k, 0);
	std::vector<std::size_t> missing(k);
	std::deque<std::size_t> ready;
	for (std::size_t v = 0; v < k; ++v) {
		missing[v] = p.lower_covers(v).size();
		if (missing[v] == 0) ready.push_back(v);
	}
	while (!ready.empty()) {
		auto u = ready.front();
		ready.pop_front();
		std::size_t d = 0;
		for (auto v : p.lower_covers(u)) d = std::max(d, depth[v]);
		depth[u] = d + 1;
		for (auto v : p.upper_covers(u))
			if (--missing[v] == 0) ready.push_back(v);
	}
	return depth;
}

std::vector<std::vector<std::size_t>> depth_layers(const WordPoset& p, const Alphabet& a) {
	auto depth = depth_function(p);
	std::size_t top = 0;
	for (auto d : depth) top = std::max(top, d);
	std::vector<std::vector<std::size_t>> layers(top);
	for (std::size_t u = 0; u < p.size(); ++u) layers[depth[u] - 1].push_back(u);
	for (const auto& layer : layers) {
		for (std::size_t i = 0; i < layer.size(); ++i) {
			for (std::size_t j = i + 1; j < layer.size(); ++j) {
				auto u = layer[i], v = layer[j];
				if (p.comparable(u, v))
					throw InvariantViolation("depth layer contains comparable elements " + std::to_string(u + 1) +
					                         " and " + std::to_string(v + 1));
				if (!a.commute(p.label(u), p.label(v)))
					throw InvariantViolation("depth layer labels are equal or do not commute");
			}
		}
	}
	return layers;
}

} // namespace coxcomm
