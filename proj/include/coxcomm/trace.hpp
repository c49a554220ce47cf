#pragma once

// Commutation alphabets, word posets and commutation classes.
//
// A word poset P(w) has the positions of a word as elements.  Position i
// lies below position j when i <= j and the letters at i and j are equal
// or do not commute, closed under transitivity.  The linear extensions of
// P(w) are in bijection with the words of the commutation class of w, and
// isomorphism classes of word posets are in bijection with commutation
// classes.
//
// Elements are 0-based internally; every rendered form (DOT, JSON, text)
// uses 1-based positions.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "coxcomm/bitset.hpp"
#include "coxcomm/error.hpp"

namespace coxcomm {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;
using BigNat = mpz_class;

/// A finite symbol set with a symmetric commutation relation.
class Alphabet {
public:
	Alphabet() = default;

	/// Throws InvalidInput on duplicate or empty names, out-of-range pair
	/// members, or a symbol paired with itself.
	Alphabet(std::vector<std::string> names,
	         const std::vector<std::pair<Symbol, Symbol>>& commuting_pairs);

	/// Builds an alphabet from display names and pairs of names.
	static Alphabet from_names(std::vector<std::string> names,
	                           const std::vector<std::pair<std::string, std::string>>& commuting_pairs);

	std::size_t size() const { return names_.size(); }
	const std::string& name(Symbol s) const { return names_.at(s); }
	const std::vector<std::string>& names() const { return names_; }
	std::optional<Symbol> find(std::string_view name) const;

	/// Always false for equal symbols.
	bool commute(Symbol a, Symbol b) const { return commutes_[a * names_.size() + b]; }
	/// Equal or non-commuting: the letters cannot be swapped.
	bool dependent(Symbol a, Symbol b) const { return a == b || !commute(a, b); }

	std::vector<std::pair<Symbol, Symbol>> commuting_pairs() const;

	/// Parses symbol names separated by whitespace and/or commas.
	Word parse_word(std::string_view text) const;
	std::string format(const Word& w, std::string_view sep = " ") const;

	/// Throws InvalidInput if any letter is out of range.
	void check_word(const Word& w) const;

private:
	std::vector<std::string> names_;
	std::vector<bool> commutes_;
};

/// A finite labeled poset.  The order is stored as dense bit rows in both
/// directions; covers are the transitive reduction.
class WordPoset {
public:
	WordPoset() = default;

	/// Poset generated by the given strict relations (reflexive-transitive
	/// closure).  Throws InvalidInput if the closure is not antisymmetric
	/// or an endpoint is out of range.
	static WordPoset from_relations(std::vector<Symbol> labels,
	                                const std::vector<std::pair<std::size_t, std::size_t>>& relations);

	std::size_t size() const { return labels_.size(); }
	Symbol label(std::size_t u) const { return labels_[u]; }
	const std::vector<Symbol>& labels() const { return labels_; }

	bool leq(std::size_t u, std::size_t v) const { return up_[u].test(v); }
	bool less(std::size_t u, std::size_t v) const { return u != v && leq(u, v); }
	bool comparable(std::size_t u, std::size_t v) const { return leq(u, v) || leq(v, u); }

	/// Elements >= u (including u).
	const BitSet& up_set(std::size_t u) const { return up_[u]; }
	/// Elements <= v (including v).
	const BitSet& down_set(std::size_t v) const { return down_[v]; }

	/// Pairs (u, v) with v covering u, sorted.
	const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }
	const std::vector<std::size_t>& lower_covers(std::size_t v) const { return lower_[v]; }
	const std::vector<std::size_t>& upper_covers(std::size_t u) const { return upper_[u]; }

private:
	friend WordPoset build_poset(const Word& w, const Alphabet& a);
	void finish();

	std::vector<Symbol> labels_;
	std::vector<BitSet> up_;
	std::vector<BitSet> down_;
	std::vector<std::pair<std::size_t, std::size_t>> covers_;
	std::vector<std::vector<std::size_t>> lower_;
	std::vector<std::vector<std::size_t>> upper_;
};

/// P(w).  Element i is position i of w.
WordPoset build_poset(const Word& w, const Alphabet& a);

/// Checks both word-poset axioms: equal or non-commuting labels are
/// comparable, and every cover joins equal or non-commuting labels.
bool verify_word_poset(const WordPoset& p, const Alphabet& a);

/// Single-consumer stream over the linear extensions of a poset.  Order is
/// lexicographic in the sequence of chosen element ids.
class LinearExtensionStream {
public:
	explicit LinearExtensionStream(const WordPoset& p);

	/// Next extension as the sequence of elements e^{-1}(1), e^{-1}(2), ...
	std::optional<std::vector<std::size_t>> next_order();
	/// Next extension rendered as the word it spells.
	std::optional<Word> next();

private:
	bool available(std::size_t u) const { return !placed_[u] && missing_[u] == 0; }
	void place(std::size_t u);
	void unplace(std::size_t u);
	void fill_from(std::size_t start);

	WordPoset poset_;
	std::vector<std::size_t> chosen_;
	std::vector<bool> placed_;
	std::vector<std::size_t> missing_;
	bool started_ = false;
	bool done_ = false;
};

/// All words of the class of the poset, in stream order.  Throws
/// ResourceLimit past budget.max_words.
std::vector<Word> linear_extensions(const WordPoset& p, const Budget& budget = {});

/// Number of linear extensions by dynamic programming over down-sets.
/// Throws ResourceLimit once more than budget.max_memo down-sets are seen.
BigNat count_linear_extensions(const WordPoset& p, const Budget& budget = {});

/// Closure of {w} under swaps of adjacent commuting letters.
std::set<Word> commutation_class_bfs(const Word& w, const Alphabet& a, const Budget& budget = {});

/// Lexicographically least label sequence among the linear extensions of
/// p, built greedily.  For a word poset this is the least word of its
/// class.
Word canonical_labels(const WordPoset& p);

/// Lexicographically least word of the class of w.
Word canonical_word(const Word& w, const Alphabet& a);

/// Label-preserving isomorphism test for two word posets over the same
/// alphabet.
bool posets_isomorphic(const WordPoset& p, const WordPoset& q);

/// Length of the longest chain ending at each element (minimal elements
/// have depth 1).
std::vector<std::size_t> depth_function(const WordPoset& p);

/// Elements grouped by depth.  Throws InvariantViolation if a layer is not
/// an antichain of distinct, pairwise commuting labels.
std::vector<std::vector<std::size_t>> depth_layers(const WordPoset& p, const Alphabet& a);

} // namespace coxcomm
