#include "coxcomm/io.hpp"

#include <fstream>
#include <sstream>

namespace coxcomm {

namespace {

template <typename F>
auto wrap_json(F&& f) -> decltype(f()) {
	try {
		return f();
	} catch (const json::exception& e) {
		throw InvalidInput(std::string("malformed JSON: ") + e.what());
	}
}

} // namespace

json read_json_file(const std::string& path) {
	std::ifstream in(path);
	if (!in) throw InvalidInput("cannot open '" + path + "'");
	return wrap_json([&] { return json::parse(in); });
}

json read_json_arg(const std::string& arg) {
	auto first = arg.find_first_not_of(" \t\r\n");
	if (first != std::string::npos && arg[first] == '{') return wrap_json([&] { return json::parse(arg); });
	return read_json_file(arg);
}

Alphabet alphabet_from_json(const json& j) {
	return wrap_json([&] {
		auto names = j.at("symbols").get<std::vector<std::string>>();
		std::vector<std::pair<std::string, std::string>> pairs;
		if (j.contains("commuting_pairs"))
			for (const auto& p : j.at("commuting_pairs")) {
				if (!p.is_array() || p.size() != 2) throw InvalidInput("commuting pair must have two symbols");
				pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
			}
		return Alphabet::from_names(std::move(names), pairs);
	});
}

json to_json(const Alphabet& a) {
	json pairs = json::array();
	for (auto [x, y] : a.commuting_pairs()) pairs.push_back({a.name(x), a.name(y)});
	return {{"symbols", a.names()}, {"commuting_pairs", pairs}};
}

CoxeterSystem coxeter_from_json(const json& j) {
	return wrap_json([&] {
		auto rows = j.at("matrix").get<std::vector<std::vector<long long>>>();
		std::vector<std::vector<unsigned>> m;
		for (const auto& row : rows) {
			std::vector<unsigned> r;
			for (auto v : row) {
				if (v < 0) throw InvalidInput("Coxeter matrix entries must be nonnegative");
				r.push_back(static_cast<unsigned>(v));
			}
			m.push_back(std::move(r));
		}
		std::vector<std::string> names;
		if (j.contains("generators")) names = j.at("generators").get<std::vector<std::string>>();
		return CoxeterSystem(std::move(m), std::move(names));
	});
}

json to_json(const CoxeterSystem& sys) {
	return {{"generators", sys.alphabet().names()}, {"matrix", sys.orders()}};
}

json to_json(const Scalar& x) {
	json coeffs = json::array();
	for (const auto& q : x.coeffs()) coeffs.push_back(q.get_str());
	return {{"coeffs", coeffs}};
}

Scalar scalar_from_json(const ScalarContext& ctx, const json& j) {
	return wrap_json([&] {
		std::vector<mpq_class> coeffs;
		for (const auto& s : j.at("coeffs")) {
			mpq_class q;
			if (q.set_str(s.get<std::string>(), 10) != 0 || q.get_den() == 0)
				throw InvalidInput("bad rational '" + s.get<std::string>() + "'");
			coeffs.push_back(q);
		}
		return ctx->from_coeffs(coeffs);
	});
}

json to_json(const RootVec& r) {
	json out = json::array();
	for (const auto& x : r.coords) out.push_back(to_json(x));
	return out;
}

RootVec root_from_json(const ScalarContext& ctx, const json& j) {
	RootVec r;
	for (const auto& x : j) r.coords.push_back(scalar_from_json(ctx, x));
	return r;
}

json to_json(const LambdaFunction& lambda) {
	json out = json::array();
	for (const auto& [root, value] : lambda.values) out.push_back({{"root", to_json(root)}, {"value", value}});
	return out;
}

LambdaFunction lambda_from_json(const CoxeterSystem& sys, const json& j) {
	return wrap_json([&] {
		LambdaFunction out;
		for (const auto& e : j) {
			RootVec r = root_from_json(sys.context(), e.at("root"));
			if (r.size() != sys.rank()) throw InvalidInput("root dimension does not match the system rank");
			auto v = e.at("value").get<long long>();
			if (v < 1) throw InvalidInput("lambda values must be positive");
			if (!out.values.emplace(std::move(r), static_cast<std::size_t>(v)).second)
				throw InvalidInput("duplicate root in lambda function");
		}
		return out;
	});
}

json poset_to_json(const WordPoset& p, const Alphabet& a) {
	json labels = json::array();
	for (auto s : p.labels()) labels.push_back(a.name(s));
	json covers = json::array();
	for (auto [u, v] : p.covers()) covers.push_back({u + 1, v + 1});
	return {{"size", p.size()}, {"labels", labels}, {"covers", covers}};
}

namespace {

std::string dot_escape(const std::string& s) {
	std::string out;
	for (char c : s) {
		if (c == '"' || c == '\\') out += '\\';
		out += c;
	}
	return out;
}

} // namespace

std::string poset_to_dot(const WordPoset& p, const Alphabet& a) {
	std::ostringstream out;
	out << "digraph P {\n  rankdir=BT;\n";
	for (std::size_t u = 0; u < p.size(); ++u)
		out << "  " << u + 1 << " [label=\"" << u + 1 << ':' << dot_escape(a.name(p.label(u))) << "\"];\n";
	for (auto [u, v] : p.covers()) out << "  " << u + 1 << " -> " << v + 1 << ";\n";
	out << "}\n";
	return out.str();
}

} // namespace coxcomm
