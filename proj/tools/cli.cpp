#include "cli.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <random>

#include <CLI11.hpp>

#include "coxcomm/commclass.hpp"
#include "coxcomm/coxeter.hpp"
#include "coxcomm/io.hpp"
#include "coxcomm/trace.hpp"
#include "coxcomm/typea.hpp"

namespace coxcomm::cli {

namespace {

struct RunConfig {
	std::string alphabet;
	std::string word;
	std::string perm;
	std::string type;
	std::string matrix;
	std::string format = "text";
	std::optional<std::size_t> budget_class;
	std::optional<std::size_t> budget_memo;
	bool tree = false;
	std::size_t tree_depth = 1;
	std::uint64_t seed = 0;
	std::size_t samples = 20;
	std::size_t max_length = 8;
};

Budget make_budget(const RunConfig& cfg) {
	Budget b;
	if (const char* env = std::getenv("COXCOMM_BUDGET_MEMO")) {
		try {
			b.max_memo = std::stoull(env);
		} catch (const std::exception&) {
			throw InvalidInput("COXCOMM_BUDGET_MEMO is not a number");
		}
	}
	if (cfg.budget_memo) b.max_memo = *cfg.budget_memo;
	if (cfg.budget_class) b.max_words = *cfg.budget_class;
	if (b.max_memo == 0 || b.max_words == 0) throw InvalidInput("budgets must be positive");
	return b;
}

json word_json(const Alphabet& a, const Word& w) {
	json out = json::array();
	for (auto s : w) out.push_back(a.name(s));
	return out;
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
	for (auto f : allowed)
		if (cfg.format == f) return;
	throw InvalidInput("format '" + cfg.format + "' is not available for this command");
}

// ---------------------------------------------------------------------------
// poset / class

int cmd_poset(const RunConfig& cfg, std::ostream& out) {
	Alphabet a = alphabet_from_json(read_json_arg(cfg.alphabet));
	Word w = a.parse_word(cfg.word);
	WordPoset p = build_poset(w, a);
	if (cfg.format == "dot") {
		out << poset_to_dot(p, a);
	} else if (cfg.format == "json") {
		json j = poset_to_json(p, a);
		j["word"] = word_json(a, w);
		out << j.dump(2) << '\n';
	} else {
		out << "word: " << a.format(w) << '\n' << "elements:";
		for (std::size_t u = 0; u < p.size(); ++u) out << ' ' << u + 1 << ':' << a.name(p.label(u));
		out << '\n' << "covers:";
		for (auto [u, v] : p.covers()) out << ' ' << u + 1 << '<' << v + 1;
		out << '\n';
	}
	return kOk;
}

int cmd_class(const RunConfig& cfg, std::ostream& out) {
	require_format(cfg, {"text", "json"});
	Budget budget = make_budget(cfg);
	Alphabet a = alphabet_from_json(read_json_arg(cfg.alphabet));
	Word w = a.parse_word(cfg.word);
	WordPoset p = build_poset(w, a);
	auto words = linear_extensions(p, budget);
	BigNat count = count_linear_extensions(p, budget);
	if (count != words.size()) throw InvariantViolation("linear extension count disagrees with enumeration");
	if (cfg.format == "json") {
		json list = json::array();
		for (const auto& x : words) list.push_back(word_json(a, x));
		out << json{{"word", word_json(a, w)},
		            {"canonical", word_json(a, canonical_labels(p))},
		            {"count", count.get_str()},
		            {"words", list}}
		           .dump(2)
		    << '\n';
	} else {
		for (const auto& x : words) out << a.format(x) << '\n';
		out << "count: " << count.get_str() << '\n';
	}
	return kOk;
}

// ---------------------------------------------------------------------------
// coxeter

struct ElementInput {
	CoxeterSystem sys;
	Word word;                         // as given (or a reduced word of the permutation)
	std::optional<Permutation> perm;   // set for --perm input
	GroupElement element;
};

ElementInput load_element(const RunConfig& cfg) {
	if (cfg.type.empty() == cfg.matrix.empty()) throw InvalidInput("give exactly one of --type and --matrix");
	CoxeterSystem sys = cfg.type.empty() ? coxeter_from_json(read_json_arg(cfg.matrix)) : CoxeterSystem::named(cfg.type);
	const bool has_perm = !cfg.perm.empty();
	if (has_perm) {
		Permutation p = Permutation::parse(cfg.perm);
		GroupElement g = perm_to_element(sys, p);
		Word w = perm_reduced_word(p);
		return ElementInput{std::move(sys), std::move(w), std::move(p), std::move(g)};
	}
	Word w = sys.parse_word(cfg.word);
	GroupElement g = sys.element(w);
	return ElementInput{std::move(sys), std::move(w), std::nullopt, std::move(g)};
}

std::string element_label(const CoxeterSystem& sys, const GroupElement& g, bool as_perm) {
	if (as_perm) return "[" + element_to_perm(sys, g).to_string() + "]";
	auto w = canonical_reduced_word(sys, g);
	return w.empty() ? "e" : sys.format(w);
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
	require_format(cfg, {"text", "json"});
	auto in = load_element(cfg);
	bool reduced = is_reduced(in.sys, in.word);
	if (cfg.format == "json")
		out << json{{"word", word_json(in.sys.alphabet(), in.word)}, {"reduced", reduced}}.dump(2) << '\n';
	else
		out << "reduced: " << (reduced ? "true" : "false") << '\n';
	return kOk;
}

int cmd_count_reduced(const RunConfig& cfg, std::ostream& out) {
	require_format(cfg, {"text", "json"});
	Budget budget = make_budget(cfg);
	auto in = load_element(cfg);
	BigNat count = count_reduced_words(in.sys, in.element, budget);
	std::size_t len = length(in.sys, in.element);
	if (cfg.format == "json")
		out << json{{"element", word_json(in.sys.alphabet(), canonical_reduced_word(in.sys, in.element))},
		            {"length", len},
		            {"count", count.get_str()}}
		           .dump(2)
		    << '\n';
	else
		out << count.get_str() << '\n';
	return kOk;
}

int cmd_classes(const RunConfig& cfg, std::ostream& out) {
	require_format(cfg, {"text", "json"});
	Budget budget = make_budget(cfg);
	auto in = load_element(cfg);
	auto classes = enumerate_commutation_classes(in.sys, in.element, budget);
	const Alphabet& a = in.sys.alphabet();
	if (cfg.format == "json") {
		json list = json::array();
		for (const auto& c : classes)
			list.push_back({{"canonical", word_json(a, c.canonical)},
			                {"words", c.words},
			                {"covers", poset_to_json(c.poset, a)["covers"]}});
		out << json{{"element", word_json(a, canonical_reduced_word(in.sys, in.element))},
		            {"classes", list},
		            {"total", classes.size()}}
		           .dump(2)
		    << '\n';
	} else {
		for (const auto& c : classes)
			out << (c.canonical.empty() ? std::string("e") : a.format(c.canonical)) << "  (" << c.words << (c.words == 1 ? " word)\n" : " words)\n");
		out << "classes: " << classes.size() << '\n';
	}
	return kOk;
}

int cmd_cset(const RunConfig& cfg, std::ostream& out) {
	require_format(cfg, {"text", "json"});
	Budget budget = make_budget(cfg);
	auto in = load_element(cfg);
	CSet cs = c_set(in.sys, in.element, budget);
	if (cfg.format == "json") {
		json list = json::array();
		for (const auto& lambda : cs.lambdas) list.push_back(to_json(lambda));
		out << json{{"element", word_json(in.sys.alphabet(), canonical_reduced_word(in.sys, in.element))},
		            {"cset", list}}
		           .dump(2)
		    << '\n';
	} else {
		std::size_t i = 0;
		for (const auto& lambda : cs.lambdas) {
			out << "lambda " << ++i << ":\n";
			for (const auto& [root, value] : lambda.values) out << "  " << root.to_string() << " -> " << value << '\n';
		}
		out << "|C| = " << cs.lambdas.size() << '\n';
	}
	return kOk;
}

void print_tree(const CoxeterSystem& sys, const RecurrenceExpansion& ex, bool as_perm, std::size_t depth,
                std::size_t max_depth, const Budget& budget, std::ostream& out) {
	for (const auto& t : ex.terms) {
		out << std::string(2 * depth, ' ') << (t.sign > 0 ? "+ " : "- ") << "C" << element_label(sys, t.element, as_perm)
		    << " = " << t.value.get_str() << '\n';
		if (depth < max_depth) print_tree(sys, expand_recurrence(sys, t.element, budget), as_perm, depth + 1, max_depth, budget, out);
	}
}

json tree_json(const CoxeterSystem& sys, const RecurrenceExpansion& ex, bool as_perm, std::size_t depth,
               std::size_t max_depth, const Budget& budget) {
	json terms = json::array();
	for (const auto& t : ex.terms) {
		json term{{"subset", word_json(sys.alphabet(), t.subset)},
		          {"sign", t.sign},
		          {"element", word_json(sys.alphabet(), canonical_reduced_word(sys, t.element))},
		          {"value", t.value.get_str()}};
		if (as_perm) term["perm"] = element_to_perm(sys, t.element).to_string();
		if (depth < max_depth)
			term["terms"] = tree_json(sys, expand_recurrence(sys, t.element, budget), as_perm, depth + 1, max_depth, budget);
		terms.push_back(std::move(term));
	}
	return terms;
}

int cmd_recurrence(const RunConfig& cfg, std::ostream& out) {
	require_format(cfg, {"text", "json"});
	Budget budget = make_budget(cfg);
	auto in = load_element(cfg);
	const bool as_perm = in.perm.has_value();
	auto ex = expand_recurrence(in.sys, in.element, budget);
	const std::size_t max_depth = cfg.tree ? cfg.tree_depth : 0;
	if (cfg.format == "json") {
		json j{{"element", word_json(in.sys.alphabet(), canonical_reduced_word(in.sys, in.element))},
		       {"value", ex.value.get_str()}};
		if (as_perm) j["perm"] = in.perm->to_string();
		j["terms"] = tree_json(in.sys, ex, as_perm, 1, std::max<std::size_t>(max_depth, 1), budget);
		out << j.dump(2) << '\n';
	} else {
		if (cfg.tree) out << "C" << element_label(in.sys, in.element, as_perm) << " = ";
		out << ex.value.get_str() << '\n';
		if (cfg.tree) print_tree(in.sys, ex, as_perm, 1, max_depth, budget, out);
	}
	return kOk;
}

// ---------------------------------------------------------------------------
// verify: seeded sampling of the three |C(w)| routes

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
	require_format(cfg, {"text", "json"});
	Budget budget = make_budget(cfg);
	if (cfg.type.empty() == cfg.matrix.empty()) throw InvalidInput("give exactly one of --type and --matrix");
	CoxeterSystem sys = cfg.type.empty() ? coxeter_from_json(read_json_arg(cfg.matrix)) : CoxeterSystem::named(cfg.type);
	std::mt19937_64 rng(cfg.seed);
	std::size_t mismatches = 0;
	json rows = json::array();
	for (std::size_t i = 0; i < cfg.samples; ++i) {
		std::size_t len = std::uniform_int_distribution<std::size_t>(0, cfg.max_length)(rng);
		Word w;
		for (std::size_t k = 0; k < len; ++k)
			w.push_back(static_cast<Symbol>(std::uniform_int_distribution<std::size_t>(0, sys.rank() - 1)(rng)));
		GroupElement g = sys.element(w);
		auto classes = enumerate_commutation_classes(sys, g, budget);
		CSet cs = c_set(sys, g, budget);
		BigNat rec = c_count_recurrence(sys, g, budget);
		std::set<LambdaFunction> from_posets;
		for (const auto& c : classes) from_posets.insert(lambda_of_poset(sys, c.poset));
		const bool ok = from_posets == cs.lambdas && rec == cs.lambdas.size() && classes.size() == cs.lambdas.size();
		if (!ok) ++mismatches;
		Word canon = canonical_reduced_word(sys, g);
		if (cfg.format == "json") {
			rows.push_back({{"element", word_json(sys.alphabet(), canon)},
			                {"classes", classes.size()},
			                {"cset", cs.lambdas.size()},
			                {"recurrence", rec.get_str()},
			                {"ok", ok}});
		} else {
			out << (canon.empty() ? std::string("e") : sys.format(canon)) << ": classes=" << classes.size()
			    << " cset=" << cs.lambdas.size() << " recurrence=" << rec.get_str() << (ok ? " ok" : " MISMATCH") << '\n';
		}
	}
	if (cfg.format == "json")
		out << json{{"seed", cfg.seed}, {"samples", rows}, {"mismatches", mismatches}}.dump(2) << '\n';
	else
		out << "mismatches: " << mismatches << '\n';
	return mismatches == 0 ? kOk : kInternalError;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
	RunConfig cfg;
	CLI::App app{"Commutation classes, word posets and reduced words in Coxeter groups", "coxcomm"};
	app.require_subcommand(1);

	auto add_budgets = [&](CLI::App* cmd) {
		cmd->add_option("--budget-class", cfg.budget_class, "Maximum number of enumerated words");
		cmd->add_option("--budget-memo", cfg.budget_memo, "Maximum number of memo entries");
	};
	auto add_format = [&](CLI::App* cmd, std::vector<std::string> formats) {
		cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(formats));
	};

	auto* poset = app.add_subcommand("poset", "Word poset P(w) of a word");
	poset->add_option("--alphabet", cfg.alphabet, "Alphabet JSON file or inline JSON")->required();
	poset->add_option("--word", cfg.word, "Whitespace-separated symbol names")->required();
	add_format(poset, {"text", "json", "dot"});

	auto* cls = app.add_subcommand("class", "Words of the commutation class of a word");
	cls->add_option("--alphabet", cfg.alphabet, "Alphabet JSON file or inline JSON")->required();
	cls->add_option("--word", cfg.word, "Whitespace-separated symbol names")->required();
	add_format(cls, {"text", "json"});
	add_budgets(cls);

	auto* cox = app.add_subcommand("coxeter", "Coxeter group computations");
	cox->require_subcommand(1);
	auto add_element = [&](CLI::App* cmd) {
		auto* type = cmd->add_option("--type", cfg.type, "Named type: A3, B4, D4, E6, F4, H3, I2:7, I2:inf");
		auto* matrix = cmd->add_option("--matrix", cfg.matrix, "Coxeter matrix JSON file or inline JSON");
		type->excludes(matrix);
		auto* word = cmd->add_option("--word", cfg.word, "Generator names separated by commas or spaces");
		auto* perm = cmd->add_option("--perm", cfg.perm, "Permutation in one-line notation (type A)");
		word->excludes(perm);
		add_format(cmd, {"text", "json"});
		add_budgets(cmd);
	};
	std::map<std::string, std::function<int(const RunConfig&, std::ostream&)>> cox_cmds{
	    {"check", cmd_check},   {"count-reduced", cmd_count_reduced}, {"classes", cmd_classes},
	    {"cset", cmd_cset},     {"recurrence", cmd_recurrence},
	};
	std::map<std::string, std::string> descriptions{
	    {"check", "Is the word reduced?"},
	    {"count-reduced", "Number of reduced words of the element"},
	    {"classes", "Commutation classes of reduced words"},
	    {"cset", "The depth functions C(w)"},
	    {"recurrence", "|C(w)| by the alternating recurrence"},
	};
	for (const auto& [name, _] : cox_cmds) {
		auto* sub = cox->add_subcommand(name, descriptions[name]);
		add_element(sub);
		if (name == "recurrence") {
			sub->add_flag("--tree", cfg.tree, "Print the expansion");
			sub->add_option("--tree-depth", cfg.tree_depth, "Levels of the expansion to print")->check(CLI::PositiveNumber);
		}
	}

	auto* verify = app.add_subcommand("verify", "Cross-check |C(w)| three ways on seeded random elements");
	auto* vtype = verify->add_option("--type", cfg.type, "Named type");
	vtype->excludes(verify->add_option("--matrix", cfg.matrix, "Coxeter matrix JSON"));
	verify->add_option("--seed", cfg.seed, "Random seed")->required();
	verify->add_option("--samples", cfg.samples, "Number of random elements");
	verify->add_option("--max-length", cfg.max_length, "Maximum random word length");
	add_format(verify, {"text", "json"});
	add_budgets(verify);

	std::vector<std::string> argv_store{"coxcomm"};
	argv_store.insert(argv_store.end(), args.begin(), args.end());
	std::vector<char*> argv;
	for (auto& s : argv_store) argv.push_back(s.data());

	try {
		app.parse(static_cast<int>(argv.size()), argv.data());
	} catch (const CLI::CallForHelp&) {
		out << app.help();
		return kOk;
	} catch (const CLI::CallForAllHelp&) {
		out << app.help("", CLI::AppFormatMode::All);
		return kOk;
	} catch (const CLI::ParseError& e) {
		err << "error: " << e.what() << '\n';
		return kInvalidInput;
	}

	try {
		if (poset->parsed()) return cmd_poset(cfg, out);
		if (cls->parsed()) return cmd_class(cfg, out);
		if (verify->parsed()) return cmd_verify(cfg, out);
		for (auto* sub : cox->get_subcommands()) {
			if (cfg.word.empty() && cfg.perm.empty() && sub->count("--word") == 0)
				throw InvalidInput("give one of --word and --perm");
			return cox_cmds.at(sub->get_name())(cfg, out);
		}
	} catch (const InvalidInput& e) {
		err << "error: " << e.what() << '\n';
		return kInvalidInput;
	} catch (const ResourceLimit& e) {
		err << "budget exceeded: " << e.what() << '\n';
		return kBudgetExceeded;
	} catch (const std::exception& e) {
		err << "internal error: " << e.what() << '\n';
		return kInternalError;
	}
	return kInvalidInput;
}

} // namespace coxcomm::cli
