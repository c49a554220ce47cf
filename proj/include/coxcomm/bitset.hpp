#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace coxcomm {

/// Fixed-capacity dynamic bit set, used for order-relation rows and as
/// the key of down-set memo tables.
class BitSet {
public:
	BitSet() = default;
	explicit BitSet(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

	std::size_t size() const { return bits_; }

	bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
	void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
	void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

	std::size_t count() const {
		std::size_t n = 0;
		for (auto w : words_) n += std::popcount(w);
		return n;
	}
	bool none() const {
		for (auto w : words_)
			if (w) return false;
		return true;
	}

	BitSet& operator|=(const BitSet& o) {
		for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
		return *this;
	}
	BitSet& operator&=(const BitSet& o) {
		for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
		return *this;
	}
	friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }
	friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }

	/// True if every bit of *this is also set in o.
	bool subset_of(const BitSet& o) const {
		for (std::size_t i = 0; i < words_.size(); ++i)
			if (words_[i] & ~o.words_[i]) return false;
		return true;
	}

	template <typename F>
	void for_each(F&& f) const {
		for (std::size_t wi = 0; wi < words_.size(); ++wi) {
			std::uint64_t w = words_[wi];
			while (w) {
				f(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
				w &= w - 1;
			}
		}
	}

	std::size_t hash() const {
		std::size_t h = bits_;
		for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
		return h;
	}

	friend bool operator==(const BitSet&, const BitSet&) = default;

private:
	std::size_t bits_ = 0;
	std::vector<std::uint64_t> words_;
};

struct BitSetHash {
	std::size_t operator()(const BitSet& b) const { return b.hash(); }
};

} // namespace coxcomm
