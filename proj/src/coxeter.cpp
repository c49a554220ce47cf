#include "coxcomm/coxeter.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <unordered_map>

namespace coxcomm {

// ---------------------------------------------------------------------------
// RootVec

RootVec RootVec::operator-() const {
	RootVec r;
	r.coords.reserve(coords.size());
	for (const auto& x : coords) r.coords.push_back(-x);
	return r;
}

std::size_t RootVec::hash() const {
	std::size_t h = coords.size();
	for (const auto& x : coords) h ^= x.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
	return h;
}

std::string RootVec::to_string() const {
	std::string out = "(";
	for (std::size_t i = 0; i < coords.size(); ++i) {
		if (i) out += ", ";
		out += coords[i].to_string();
	}
	return out + ")";
}

bool operator<(const RootVec& a, const RootVec& b) {
	return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(), b.coords.end(),
	                                    [](const Scalar& x, const Scalar& y) { return repr_less(x, y); });
}

RootSign root_sign(const RootVec& r) {
	bool pos = false, neg = false;
	for (const auto& x : r.coords) {
		int s = x.sign();
		pos |= s > 0;
		neg |= s < 0;
	}
	if (pos && neg) throw MixedSigns("vector " + r.to_string() + " has coordinates of both signs");
	if (!pos && !neg) throw InvalidInput("zero vector is not a root");
	return pos ? RootSign::Positive : RootSign::Negative;
}

// ---------------------------------------------------------------------------
// Matrices and elements

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
	const std::size_t n = a.size();
	ScalarMatrix c(n, a(0, 0).context()->zero());
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t k = 0; k < n; ++k) {
			if (a(i, k).is_zero()) continue;
			for (std::size_t j = 0; j < n; ++j)
				if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
		}
	return c;
}

RootVec GroupElement::apply(const RootVec& r) const {
	const std::size_t n = rank();
	if (r.size() != n) throw InvalidInput("vector dimension does not match the group rank");
	RootVec out;
	out.coords.assign(n, r[0].context()->zero());
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < n; ++j)
			if (!r[j].is_zero() && !act_(i, j).is_zero()) out.coords[i] += act_(i, j) * r[j];
	return out;
}

RootVec GroupElement::image_of_simple(Symbol s) const {
	RootVec out;
	out.coords.reserve(rank());
	for (std::size_t i = 0; i < rank(); ++i) out.coords.push_back(act_(i, s));
	return out;
}

RootVec GroupElement::inverse_image_of_simple(Symbol s) const {
	RootVec out;
	out.coords.reserve(rank());
	for (std::size_t i = 0; i < rank(); ++i) out.coords.push_back(inv_(i, s));
	return out;
}

bool GroupElement::is_identity() const {
	const Scalar one = act_(0, 0).context()->one();
	for (std::size_t i = 0; i < rank(); ++i)
		for (std::size_t j = 0; j < rank(); ++j)
			if (i == j ? !(act_(i, j) == one) : !act_(i, j).is_zero()) return false;
	return true;
}

std::size_t GroupElement::hash() const {
	std::size_t h = rank();
	for (std::size_t i = 0; i < rank(); ++i)
		for (std::size_t j = 0; j < rank(); ++j)
			h ^= act_(i, j).hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
	return h;
}

GroupElement operator*(const GroupElement& g, const GroupElement& h) {
	if (g.rank() != h.rank()) throw InvalidInput("composing elements of different ranks");
	return GroupElement(g.act_ * h.act_, h.inv_ * g.inv_);
}

// ---------------------------------------------------------------------------
// CoxeterSystem

CoxeterSystem::CoxeterSystem(std::vector<std::vector<unsigned>> orders, std::vector<std::string> names)
    : orders_(std::move(orders)) {
	const std::size_t n = orders_.size();
	if (n == 0) throw InvalidInput("Coxeter matrix must have at least one generator");
	std::set<unsigned> irrational;
	for (std::size_t s = 0; s < n; ++s) {
		if (orders_[s].size() != n) throw InvalidInput("Coxeter matrix is not square");
		if (orders_[s][s] != 1) throw InvalidInput("Coxeter matrix diagonal entries must be 1");
		for (std::size_t t = 0; t < n; ++t) {
			if (t == s) continue;
			unsigned m = orders_[s][t];
			if (m != orders_[t][s]) throw InvalidInput("Coxeter matrix is not symmetric");
			if (m == 1) throw InvalidInput("off-diagonal Coxeter matrix entries must be at least 2 or infinite");
			// cos(pi/2) and cos(pi/3) are rational; only larger orders extend the field.
			if (m >= 4) irrational.insert(m);
		}
	}
	ctx_ = make_context(irrational);

	form_.assign(n * n, ctx_->zero());
	const mpq_class minus_half(-1, 2);
	for (std::size_t s = 0; s < n; ++s)
		for (std::size_t t = 0; t < n; ++t)
			form_[s * n + t] = s == t ? ctx_->one() : ctx_->from_rational(minus_half) * ctx_->two_cos_pi_over(orders_[s][t]);

	if (names.empty())
		for (std::size_t s = 0; s < n; ++s) names.push_back("s" + std::to_string(s + 1));
	if (names.size() != n) throw InvalidInput("generator name count does not match the Coxeter matrix");
	std::vector<std::pair<Symbol, Symbol>> pairs;
	for (Symbol s = 0; s < n; ++s)
		for (Symbol t = s + 1; t < n; ++t)
			if (orders_[s][t] == 2) pairs.emplace_back(s, t);
	alphabet_ = Alphabet(std::move(names), pairs);
}

namespace {

std::vector<std::vector<unsigned>> path_matrix(std::size_t n) {
	std::vector<std::vector<unsigned>> m(n, std::vector<unsigned>(n, 2));
	for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
	for (std::size_t i = 0; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = 3;
	return m;
}

void set_edge(std::vector<std::vector<unsigned>>& m, std::size_t a, std::size_t b, unsigned order) {
	m[a][b] = m[b][a] = order;
}

} // namespace

CoxeterSystem CoxeterSystem::named(std::string_view spec) {
	auto bad = [&]() { return InvalidInput("unknown Coxeter type '" + std::string(spec) + "'"); };
	if (spec.size() < 2) throw bad();
	const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(spec[0])));
	auto rest = spec.substr(1);
	std::string_view order_part;
	if (auto colon = rest.find(':'); colon != std::string_view::npos) {
		order_part = rest.substr(colon + 1);
		rest = rest.substr(0, colon);
	}
	std::size_t n = 0;
	auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
	if (ec != std::errc{} || ptr != rest.data() + rest.size() || n == 0) throw bad();

	std::vector<std::vector<unsigned>> m;
	switch (family) {
	case 'A': m = path_matrix(n); break;
	case 'B':
		if (n < 2) throw bad();
		m = path_matrix(n);
		set_edge(m, n - 2, n - 1, 4);
		break;
	case 'D':
		if (n < 4) throw bad();
		m = path_matrix(n);
		set_edge(m, n - 2, n - 1, 2);
		set_edge(m, n - 3, n - 1, 3);
		break;
	case 'E': {
		if (n < 6 || n > 8) throw bad();
		m = std::vector<std::vector<unsigned>>(n, std::vector<unsigned>(n, 2));
		for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
		set_edge(m, 0, 2, 3);
		set_edge(m, 1, 3, 3);
		for (std::size_t i = 2; i + 1 < n; ++i) set_edge(m, i, i + 1, 3);
		break;
	}
	case 'F':
		if (n != 4) throw bad();
		m = path_matrix(4);
		set_edge(m, 1, 2, 4);
		break;
	case 'H':
		if (n != 3 && n != 4) throw bad();
		m = path_matrix(n);
		set_edge(m, 0, 1, 5);
		break;
	case 'I': {
		if (n != 2 || order_part.empty()) throw bad();
		unsigned order = 0;
		if (order_part == "inf" || order_part == "oo") {
			order = kInfiniteOrder;
		} else {
			auto [p2, ec2] = std::from_chars(order_part.data(), order_part.data() + order_part.size(), order);
			if (ec2 != std::errc{} || p2 != order_part.data() + order_part.size() || order < 2) throw bad();
		}
		m = {{1, order}, {order, 1}};
		break;
	}
	default: throw bad();
	}
	if (family != 'I' && !order_part.empty()) throw bad();
	return CoxeterSystem(std::move(m));
}

void CoxeterSystem::check_generator(Symbol s) const {
	if (s >= rank()) throw InvalidInput("generator index " + std::to_string(s) + " out of range");
}

RootVec CoxeterSystem::simple_root(Symbol s) const {
	check_generator(s);
	RootVec r;
	r.coords.assign(rank(), ctx_->zero());
	r.coords[s] = ctx_->one();
	return r;
}

Scalar CoxeterSystem::pairing(const RootVec& a, const RootVec& b) const {
	Scalar acc = ctx_->zero();
	for (std::size_t s = 0; s < rank(); ++s) {
		if (a[s].is_zero()) continue;
		for (std::size_t t = 0; t < rank(); ++t)
			if (!b[t].is_zero() && !form(s, t).is_zero()) acc += a[s] * form(s, t) * b[t];
	}
	return acc;
}

RootVec CoxeterSystem::reflect(Symbol s, const RootVec& r) const {
	check_generator(s);
	if (r.size() != rank()) throw InvalidInput("vector dimension does not match the group rank");
	// s(v) = v - 2 (r_s, v) r_s
	Scalar bs = ctx_->zero();
	for (std::size_t t = 0; t < rank(); ++t)
		if (!r[t].is_zero() && !form(s, t).is_zero()) bs += form(s, t) * r[t];
	RootVec out = r;
	out.coords[s] -= ctx_->from_rational(2) * bs;
	return out;
}

GroupElement CoxeterSystem::identity() const {
	ScalarMatrix id(rank(), ctx_->zero());
	for (std::size_t i = 0; i < rank(); ++i) id(i, i) = ctx_->one();
	return GroupElement(id, id);
}

GroupElement CoxeterSystem::generator(Symbol s) const { return right_multiply(identity(), s); }

GroupElement CoxeterSystem::element(const Word& w) const {
	GroupElement g = identity();
	for (auto s : w) g = right_multiply(g, s);
	return g;
}

GroupElement CoxeterSystem::right_multiply(const GroupElement& g, Symbol s) const {
	check_generator(s);
	const std::size_t n = rank();
	const Scalar two = ctx_->from_rational(2);
	// Action: g S with S = I - 2 e_s b_s^T, so column j loses 2 B[s][j] times column s.
	ScalarMatrix act = g.act_;
	for (std::size_t j = 0; j < n; ++j) {
		if (form(s, j).is_zero()) continue;
		Scalar f = two * form(s, j);
		for (std::size_t i = 0; i < n; ++i)
			if (!g.act_(i, s).is_zero()) act(i, j) -= f * g.act_(i, s);
	}
	// Inverse: S g^{-1}, only row s changes.
	ScalarMatrix inv = g.inv_;
	for (std::size_t j = 0; j < n; ++j) {
		if (form(s, j).is_zero()) continue;
		Scalar f = two * form(s, j);
		for (std::size_t c = 0; c < n; ++c)
			if (!g.inv_(j, c).is_zero()) inv(s, c) -= f * g.inv_(j, c);
	}
	return GroupElement(std::move(act), std::move(inv));
}

GroupElement CoxeterSystem::left_multiply(Symbol s, const GroupElement& g) const {
	return right_multiply(g.inverse(), s).inverse();
}

// ---------------------------------------------------------------------------
// Descents, lengths, reduced words

namespace {

// Roots are all-nonnegative or all-nonpositive, so the first nonzero
// coordinate decides.
bool column_negative(const ScalarMatrix& m, Symbol s) {
	for (std::size_t i = 0; i < m.size(); ++i)
		if (!m(i, s).is_zero()) return m(i, s).sign() < 0;
	throw InvariantViolation("image of a simple root vanished");
}

} // namespace

bool is_right_descent(const GroupElement& g, Symbol s) { return column_negative(g.action(), s); }

std::vector<Symbol> right_descents(const GroupElement& g) {
	std::vector<Symbol> out;
	for (Symbol s = 0; s < g.rank(); ++s)
		if (column_negative(g.action(), s)) out.push_back(s);
	return out;
}

std::vector<Symbol> left_descents(const GroupElement& g) {
	std::vector<Symbol> out;
	for (Symbol s = 0; s < g.rank(); ++s)
		if (column_negative(g.inverse_action(), s)) out.push_back(s);
	return out;
}

bool is_reduced(const CoxeterSystem& sys, const Word& w) {
	sys.alphabet().check_word(w);
	GroupElement g = sys.identity();
	for (auto s : w) {
		if (is_right_descent(g, s)) return false;
		g = sys.right_multiply(g, s);
	}
	return true;
}

Word canonical_reduced_word(const CoxeterSystem& sys, GroupElement g) {
	Word rev;
	for (;;) {
		std::optional<Symbol> first;
		for (Symbol s = 0; s < g.rank() && !first; ++s)
			if (is_right_descent(g, s)) first = s;
		if (!first) break;
		rev.push_back(*first);
		g = sys.right_multiply(g, *first);
	}
	return Word(rev.rbegin(), rev.rend());
}

std::size_t length(const CoxeterSystem& sys, const GroupElement& g) { return canonical_reduced_word(sys, g).size(); }

std::vector<RootVec> inversion_set(const CoxeterSystem& sys, const Word& w) {
	sys.alphabet().check_word(w);
	std::vector<RootVec> out;
	out.reserve(w.size());
	GroupElement g = sys.identity();
	for (std::size_t i = 0; i < w.size(); ++i) {
		if (is_right_descent(g, w[i]))
			throw NotReduced("word '" + sys.format(w) + "' is not reduced at position " + std::to_string(i + 1));
		out.push_back(g.image_of_simple(w[i]));
		g = sys.right_multiply(g, w[i]);
	}
	return out;
}

BigNat count_reduced_words(const CoxeterSystem& sys, const GroupElement& g, const Budget& budget) {
	std::unordered_map<GroupElement, BigNat, GroupElementHash> memo;
	std::function<BigNat(const GroupElement&)> count = [&](const GroupElement& x) -> BigNat {
		if (auto it = memo.find(x); it != memo.end()) return it->second;
		BigNat total = 0;
		bool any = false;
		for (auto s : right_descents(x)) {
			any = true;
			total += count(sys.right_multiply(x, s));
		}
		if (!any) total = 1;
		if (memo.size() >= budget.max_memo)
			throw ResourceLimit("reduced-word memo exceeded " + std::to_string(budget.max_memo) + " elements");
		memo.emplace(x, total);
		return total;
	};
	return count(g);
}

std::vector<Word> enumerate_reduced_words(const CoxeterSystem& sys, const GroupElement& g, const Budget& budget) {
	std::vector<Word> out;
	Word suffix; // built right to left
	std::function<void(const GroupElement&)> dfs = [&](const GroupElement& x) {
		auto desc = right_descents(x);
		if (desc.empty()) {
			if (out.size() >= budget.max_words)
				throw ResourceLimit("reduced-word enumeration exceeded " + std::to_string(budget.max_words) + " words");
			out.emplace_back(suffix.rbegin(), suffix.rend());
			return;
		}
		for (auto s : desc) {
			suffix.push_back(s);
			dfs(sys.right_multiply(x, s));
			suffix.pop_back();
		}
	};
	dfs(g);
	return out;
}

} // namespace coxcomm
