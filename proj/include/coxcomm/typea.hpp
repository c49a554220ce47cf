#pragma once

// Permutations in one-line notation as elements of type A systems.
//
// Generator s_i (0-based Symbol i) is the adjacent transposition of
// positions i+1 and i+2.  Right multiplication by s_i swaps those two
// positions of the one-line notation, so a right descent of an element is
// a position where the one-line notation decreases.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "coxcomm/coxeter.hpp"

namespace coxcomm {

class Permutation {
public:
	/// Throws InvalidInput unless images is a permutation of 1..n.
	explicit Permutation(std::vector<unsigned> images);
	static Permutation identity(std::size_t n);
	/// "4231" (one digit per entry) or "10,3,2,...".
	static Permutation parse(std::string_view text);

	std::size_t size() const { return images_.size(); }
	/// Value at 1-based position i.
	unsigned at(std::size_t i) const { return images_.at(i - 1); }
	const std::vector<unsigned>& images() const { return images_; }

	std::size_t inversions() const;
	/// 1-based positions i with p(i) > p(i+1).
	std::vector<std::size_t> descents() const;
	/// p s_i: swaps positions i and i+1 (1-based).
	Permutation swap_positions(std::size_t i) const;
	/// Digit string when every entry is below 10, comma list otherwise.
	std::string to_string() const;

	friend bool operator==(const Permutation&, const Permutation&) = default;

private:
	std::vector<unsigned> images_;
};

/// True if sys is A_n with the path numbering used by CoxeterSystem::named.
bool is_type_a(const CoxeterSystem& sys);

/// A reduced word for p, found by sorting adjacent descents away.
Word perm_reduced_word(const Permutation& p);

/// Throws InvalidInput if sys is not type A or its rank is not p.size()-1.
GroupElement perm_to_element(const CoxeterSystem& sys, const Permutation& p);
Permutation element_to_perm(const CoxeterSystem& sys, const GroupElement& g);

} // namespace coxcomm
