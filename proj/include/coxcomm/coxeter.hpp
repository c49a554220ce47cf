#pragma once

// Coxeter systems in their reflection representation.
//
// V has the simple roots r_s as basis and carries the symmetric form
// (r_s, r_t) = -cos(pi/m_st), or -1 when m_st is infinite.  Each generator
// acts by s(v) = v - 2(r_s, v) r_s.  Group elements are exact action
// matrices over the scalar field; the length and descents of an element
// are read off from the signs of the images of simple roots.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "coxcomm/scalar.hpp"
#include "coxcomm/trace.hpp"

namespace coxcomm {

/// Coordinates of a vector of V in the simple-root basis.
struct RootVec {
	std::vector<Scalar> coords;

	std::size_t size() const { return coords.size(); }
	const Scalar& operator[](std::size_t i) const { return coords[i]; }

	RootVec operator-() const;
	std::size_t hash() const;
	/// "(1, 1/2*c, 0)"
	std::string to_string() const;

	friend bool operator==(const RootVec& a, const RootVec& b) { return a.coords == b.coords; }
	/// Representation order, for ordered containers.
	friend bool operator<(const RootVec& a, const RootVec& b);
};

struct RootVecHash {
	std::size_t operator()(const RootVec& r) const { return r.hash(); }
};

enum class RootSign { Positive, Negative };

/// Classifies a root by its coordinate signs.  Throws MixedSigns if the
/// vector has both positive and negative coordinates (so it is not a
/// root), InvalidInput for the zero vector.
RootSign root_sign(const RootVec& r);

/// Square matrix of scalars, row-major.
class ScalarMatrix {
public:
	ScalarMatrix(std::size_t n, const Scalar& fill) : n_(n), a_(n * n, fill) {}

	std::size_t size() const { return n_; }
	const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
	Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

	friend bool operator==(const ScalarMatrix&, const ScalarMatrix&) = default;
	friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);

private:
	std::size_t n_;
	std::vector<Scalar> a_;
};

/// An element of W as its action on V.  The inverse action is kept
/// alongside and updated on every product.
class GroupElement {
public:
	std::size_t rank() const { return act_.size(); }
	const ScalarMatrix& action() const { return act_; }
	const ScalarMatrix& inverse_action() const { return inv_; }

	RootVec apply(const RootVec& r) const;
	/// w r_s, the column s of the action matrix.
	RootVec image_of_simple(Symbol s) const;
	/// w^{-1} r_s.
	RootVec inverse_image_of_simple(Symbol s) const;

	GroupElement inverse() const { return GroupElement(inv_, act_); }
	bool is_identity() const;
	std::size_t hash() const;

	friend GroupElement operator*(const GroupElement& g, const GroupElement& h);
	friend bool operator==(const GroupElement& g, const GroupElement& h) { return g.act_ == h.act_; }

private:
	friend class CoxeterSystem;
	GroupElement(ScalarMatrix act, ScalarMatrix inv) : act_(std::move(act)), inv_(std::move(inv)) {}

	ScalarMatrix act_;
	ScalarMatrix inv_;
};

struct GroupElementHash {
	std::size_t operator()(const GroupElement& g) const { return g.hash(); }
};

/// Encodes an infinite order in a Coxeter matrix.
inline constexpr unsigned kInfiniteOrder = 0;

class CoxeterSystem {
public:
	/// orders[s][t] is m_st, with kInfiniteOrder for infinity.  Names
	/// default to s1..sn.  Throws InvalidInput for an asymmetric matrix, a
	/// diagonal entry other than 1, or an off-diagonal entry of 1.
	explicit CoxeterSystem(std::vector<std::vector<unsigned>> orders, std::vector<std::string> names = {});

	/// Named types: "A3", "B4", "D5", "E6".."E8", "F4", "H3", "H4",
	/// "I2:7", "I2:inf".
	static CoxeterSystem named(std::string_view spec);

	std::size_t rank() const { return orders_.size(); }
	unsigned order(Symbol s, Symbol t) const { return orders_[s][t]; }
	const std::vector<std::vector<unsigned>>& orders() const { return orders_; }
	const Scalar& form(Symbol s, Symbol t) const { return form_[s * rank() + t]; }
	const ScalarContext& context() const { return ctx_; }
	/// Generators commute exactly when m_st = 2.
	const Alphabet& alphabet() const { return alphabet_; }
	bool commute(Symbol s, Symbol t) const { return alphabet_.commute(s, t); }
	const std::string& name(Symbol s) const { return alphabet_.name(s); }

	RootVec simple_root(Symbol s) const;
	/// The bilinear form on arbitrary vectors.
	Scalar pairing(const RootVec& a, const RootVec& b) const;
	/// Simple reflection s applied to r.
	RootVec reflect(Symbol s, const RootVec& r) const;

	GroupElement identity() const;
	GroupElement generator(Symbol s) const;
	/// Product of the letters of w, left to right.
	GroupElement element(const Word& w) const;
	/// g s and s g, without a full matrix product.
	GroupElement right_multiply(const GroupElement& g, Symbol s) const;
	GroupElement left_multiply(Symbol s, const GroupElement& g) const;

	/// Parses generator names separated by commas or whitespace.
	Word parse_word(std::string_view text) const { return alphabet_.parse_word(text); }
	std::string format(const Word& w, std::string_view sep = " ") const { return alphabet_.format(w, sep); }

private:
	void check_generator(Symbol s) const;

	std::vector<std::vector<unsigned>> orders_;
	ScalarContext ctx_;
	std::vector<Scalar> form_;
	Alphabet alphabet_;
};

/// True if w r_s is a negative root.
bool is_right_descent(const GroupElement& g, Symbol s);

/// Generators s with l(gs) < l(g), ascending.
std::vector<Symbol> right_descents(const GroupElement& g);
/// Generators s with l(sg) < l(g), ascending.
std::vector<Symbol> left_descents(const GroupElement& g);

/// Scans left to right, rejecting at the first letter s whose prefix
/// element sends r_s to a negative root.
bool is_reduced(const CoxeterSystem& sys, const Word& w);

/// Reduced word obtained by repeatedly stripping the smallest right
/// descent from the right.
Word canonical_reduced_word(const CoxeterSystem& sys, GroupElement g);
std::size_t length(const CoxeterSystem& sys, const GroupElement& g);

/// The roots w_1 ... w_{i-1} r_{w_i} for i = 1..k.  As a set this is the
/// inversion set of the element's inverse.  Throws NotReduced.
std::vector<RootVec> inversion_set(const CoxeterSystem& sys, const Word& w);

/// Number of reduced words, memoized on elements.  Throws ResourceLimit
/// past budget.max_memo elements.
BigNat count_reduced_words(const CoxeterSystem& sys, const GroupElement& g, const Budget& budget = {});

/// All reduced words of g, grouped by last letter in ascending order.
/// Throws ResourceLimit past budget.max_words words.
std::vector<Word> enumerate_reduced_words(const CoxeterSystem& sys, const GroupElement& g,
                                          const Budget& budget = {});

} // namespace coxcomm
