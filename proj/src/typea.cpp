#include "coxcomm/typea.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace coxcomm {

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
	std::vector<bool> seen(images_.size() + 1, false);
	for (auto v : images_) {
		if (v < 1 || v > images_.size() || seen[v]) throw InvalidInput("not a permutation of 1.." + std::to_string(images_.size()));
		seen[v] = true;
	}
}

Permutation Permutation::identity(std::size_t n) {
	std::vector<unsigned> images(n);
	for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<unsigned>(i + 1);
	return Permutation(std::move(images));
}

Permutation Permutation::parse(std::string_view text) {
	std::vector<unsigned> images;
	if (text.find(',') == std::string_view::npos) {
		for (char c : text) {
			if (!std::isdigit(static_cast<unsigned char>(c))) throw InvalidInput("bad permutation '" + std::string(text) + "'");
			images.push_back(static_cast<unsigned>(c - '0'));
		}
	} else {
		std::size_t i = 0;
		while (i <= text.size()) {
			std::size_t j = text.find(',', i);
			if (j == std::string_view::npos) j = text.size();
			auto tok = text.substr(i, j - i);
			while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
			while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
			unsigned v = 0;
			auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
			if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
				throw InvalidInput("bad permutation '" + std::string(text) + "'");
			images.push_back(v);
			i = j + 1;
		}
	}
	if (images.empty()) throw InvalidInput("empty permutation");
	return Permutation(std::move(images));
}

std::size_t Permutation::inversions() const {
	std::size_t n = 0;
	for (std::size_t i = 0; i < size(); ++i)
		for (std::size_t j = i + 1; j < size(); ++j)
			if (images_[i] > images_[j]) ++n;
	return n;
}

std::vector<std::size_t> Permutation::descents() const {
	std::vector<std::size_t> out;
	for (std::size_t i = 0; i + 1 < size(); ++i)
		if (images_[i] > images_[i + 1]) out.push_back(i + 1);
	return out;
}

Permutation Permutation::swap_positions(std::size_t i) const {
	if (i < 1 || i >= size()) throw InvalidInput("transposition position out of range");
	Permutation p = *this;
	std::swap(p.images_[i - 1], p.images_[i]);
	return p;
}

std::string Permutation::to_string() const {
	const bool digits = std::all_of(images_.begin(), images_.end(), [](unsigned v) { return v < 10; });
	std::string out;
	for (std::size_t i = 0; i < size(); ++i) {
		if (!digits && i) out += ',';
		out += std::to_string(images_[i]);
	}
	return out;
}

bool is_type_a(const CoxeterSystem& sys) {
	const std::size_t n = sys.rank();
	for (Symbol s = 0; s < n; ++s)
		for (Symbol t = 0; t < n; ++t) {
			unsigned expected = s == t ? 1 : (s + 1 == t || t + 1 == s) ? 3 : 2;
			if (sys.order(s, t) != expected) return false;
		}
	return true;
}

Word perm_reduced_word(const Permutation& p) {
	// Bubble sort: p s_{a1} s_{a2} ... s_{ak} = id, so p = s_{ak} ... s_{a1}.
	Word rev;
	Permutation cur = p;
	for (bool changed = true; changed;) {
		changed = false;
		for (std::size_t i = 1; i < cur.size(); ++i) {
			if (cur.at(i) > cur.at(i + 1)) {
				cur = cur.swap_positions(i);
				rev.push_back(static_cast<Symbol>(i - 1));
				changed = true;
			}
		}
	}
	return Word(rev.rbegin(), rev.rend());
}

namespace {

void require_type_a(const CoxeterSystem& sys) {
	if (!is_type_a(sys)) throw InvalidInput("permutations require a type A system");
}

} // namespace

GroupElement perm_to_element(const CoxeterSystem& sys, const Permutation& p) {
	require_type_a(sys);
	if (p.size() != sys.rank() + 1)
		throw InvalidInput("permutation of " + std::to_string(p.size()) + " letters does not match rank " +
		                   std::to_string(sys.rank()));
	return sys.element(perm_reduced_word(p));
}

Permutation element_to_perm(const CoxeterSystem& sys, const GroupElement& g) {
	require_type_a(sys);
	if (g.rank() != sys.rank()) throw InvalidInput("element rank does not match the system");
	Permutation p = Permutation::identity(sys.rank() + 1);
	for (auto s : canonical_reduced_word(sys, g)) p = p.swap_positions(s + 1);
	return p;
}

} // namespace coxcomm
