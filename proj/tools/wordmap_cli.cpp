#include "wordmap/certify.hpp"
#include "wordmap/metabelian.hpp"
#include "wordmap/selftest.hpp"
#include "wordmap/witness.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

// stable exit codes
constexpr int kExitSelftestFail = 1;
constexpr int kExitParseError = 2;
constexpr int kExitInapplicable = 3;
constexpr int kExitResourceCap = 4;
constexpr int kExitUncertified = 5;

using namespace wordmap;

std::string bivariate_str(const BivariatePoly &p)
{
	if (p.is_zero())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (auto &[k, c] : p.coeffs) {
		Int v = c;
		if (first) {
			if (v < 0) {
				os << '-';
				v = -v;
			}
		} else {
			os << (v < 0 ? " - " : " + ");
			v = abs(v);
		}
		first = false;
		bool has_var = k.first != 0 || k.second != 0;
		if (v != 1 || !has_var)
			os << v;
		if (k.first != 0) {
			os << 'x';
			if (k.first != 1)
				os << '^' << k.first;
		}
		if (k.second != 0) {
			os << 'y';
			if (k.second != 1)
				os << '^' << k.second;
		}
	}
	return os.str();
}

std::string certified_n_description(const Certificate &cert)
{
	if (cert.status == CertStatus::Inapplicable)
		return "none (method inapplicable)";
	if (cert.classification == Classification::NotInF1 ||
	    cert.analysis.bad_set.empty())
		return "all n >= 2";
	std::ostringstream os;
	os << "all n >= 2 with no divisor in {";
	bool first = true;
	for (long m : cert.analysis.bad_set) {
		if (!first)
			os << ", ";
		first = false;
		os << m;
	}
	os << "}";
	return os.str();
}

void print_certificate_summary(const Certificate &cert)
{
	std::cout << "word:           " << cert.word.str() << "\n";
	std::cout << "classification: " << to_string(cert.classification) << "\n";
	std::cout << "status:         " << to_string(cert.status) << "\n";
	if (cert.classification == Classification::InF1NotF2) {
		std::cout << "polynomial:     " << cert.polynomial.str() << "\n";
		std::cout << "basis:          a = "
		          << render_xy(cert.back_substitution.image_a) << ", b = "
		          << render_xy(cert.back_substitution.image_b)
		          << "  (x carries t)\n";
		std::cout << "span:           " << cert.analysis.span << "\n";
		std::cout << "lpf_bound:      " << cert.analysis.lpf_bound << "\n";
		std::cout << "bad_set:        {";
		bool first = true;
		for (long m : cert.analysis.bad_set) {
			std::cout << (first ? "" : ", ") << m;
			first = false;
		}
		std::cout << "}\n";
	}
	std::cout << "certified n:    " << certified_n_description(cert) << "\n";
}

void emit_certificate(const Certificate &cert, const std::string &out_path)
{
	print_certificate_summary(cert);
	std::string json = to_json(cert);
	if (out_path.empty()) {
		std::cout << json;
	} else {
		std::ofstream os(out_path);
		os << json;
		std::cout << "certificate written to " << out_path << "\n";
	}
}

int cert_exit_code(const Certificate &cert)
{
	return cert.status == CertStatus::Inapplicable ? kExitInapplicable : 0;
}

int cmd_classify(const std::string &text)
{
	Word w = Word::parse(text);
	Classification cl = classify(w);
	auto [sa, sb] = exponent_sums(w);
	auto [da, db] = fox_derivatives(w);
	std::cout << "word:            " << w.str() << "\n";
	std::cout << "classification:  " << to_string(cl) << "\n";
	std::cout << "exponent sums:   (" << sa << ", " << sb << ")\n";
	std::cout << "fox derivative a: " << bivariate_str(da) << "\n";
	std::cout << "fox derivative b: " << bivariate_str(db) << "\n";
	if (cl != Classification::NotInF1)
		std::cout << "derived class:   " << derived_class(w).str() << "\n";
	if (cl == Classification::InF2)
		std::cout << "note: method inapplicable for words in the second "
		             "derived subgroup (open question)\n";
	return 0;
}

struct WitnessOptions
{
	std::string input;
	int n = 0;
	std::string target_path;
	bool random_target = false;
	uint64_t seed = 0;
	double tol = 1e-8;
	std::string out_dir = ".";
	SearchConfig search;
};

int cmd_witness(const WitnessOptions &opt)
{
	// input is either a certificate file or a word expression
	Certificate cert;
	bool have_cert = false;
	if (std::filesystem::exists(opt.input)) {
		std::ifstream is(opt.input);
		std::stringstream buf;
		buf << is.rdbuf();
		cert = certificate_from_json(buf.str());
		have_cert = true;
	} else {
		Word w = Word::parse(opt.input);
		if (classify(w) == Classification::NotInF1) {
			cert.word = w;
			cert.classification = Classification::NotInF1;
			cert.status = CertStatus::AllN;
		} else {
			cert = search_basis(w, opt.search);
		}
		have_cert = true;
	}
	(void)have_cert;

	if (cert.status == CertStatus::Inapplicable) {
		std::cerr << "error: method inapplicable for this word\n";
		return kExitInapplicable;
	}
	if (!cert.covers(opt.n)) {
		long bad = 0;
		for (long m : cert.analysis.bad_set)
			if (opt.n % m == 0) {
				bad = m;
				break;
			}
		std::cerr << "error: n = " << opt.n
		          << " is not certified (bad divisor " << bad << ")\n";
		return kExitUncertified;
	}

	Matrix g;
	if (opt.random_target) {
		g = haar_random_su(opt.n, opt.seed);
	} else {
		std::ifstream is(opt.target_path);
		if (!is)
			throw std::invalid_argument("cannot open target file: " +
			                            opt.target_path);
		g = read_matrix(is);
		if (g.rows() != opt.n)
			throw std::invalid_argument("target dimension does not match --n");
	}

	WitnessResult res =
	    cert.classification == Classification::NotInF1
	        ? witness_nonderived(cert.word, opt.n, g)
	        : witness_derived(cert, opt.n, g);

	std::filesystem::path dir(opt.out_dir);
	std::filesystem::create_directories(dir);
	{
		std::ofstream os(dir / "u.mat");
		write_matrix(os, res.u);
	}
	{
		std::ofstream os(dir / "v.mat");
		write_matrix(os, res.v);
	}
	std::cout << "word:     " << cert.word.str() << "\n";
	std::cout << "n:        " << opt.n << "\n";
	std::cout << "residual: " << res.residual << "\n";
	std::cout << "witness matrices written to " << (dir / "u.mat").string()
	          << " and " << (dir / "v.mat").string() << "\n";
	return res.residual <= opt.tol ? 0 : 1;
}

int cmd_selftest(bool quick, uint64_t seed, double tol)
{
	using clock = std::chrono::steady_clock;
	auto t0 = clock::now();
	SuiteResult total;

	auto report = [&](const char *name, const SuiteResult &r) {
		std::cout << name << ": " << r.passed << " passed, " << r.failed
		          << " failed\n";
		if (!r.failures.empty())
			std::cout << "  first failure: " << r.failures.front() << "\n";
		total.merge(r);
	};

	report("symbolic identities", run_symbolic_suite());
	if (!quick) {
		report("oracle equivalence", run_oracle_suite(seed, 1000, 40));
		report("witness sweep", run_witness_sweep(seed, 10, tol));
	}
	auto dt = std::chrono::duration<double>(clock::now() - t0).count();
	std::cout << (total.ok() ? "selftest PASSED" : "selftest FAILED") << " in "
	          << dt << " s\n";
	return total.ok() ? 0 : kExitSelftestFail;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"word map surjectivity certificates and witnesses on SU(n)"};
	app.require_subcommand(1);

	SearchConfig search;
	uint64_t seed = 0;
	double tol = 1e-8;
	std::string out_path;

	auto add_search_flags = [&](CLI::App *sub) {
		sub->add_option("--max-q", search.max_q, "stage-1 q bound");
		sub->add_option("--max-depth", search.max_depth,
		                "stage-1 move sequence depth");
		sub->add_option("--hard-cap-q", search.hard_cap_q,
		                "stage-2 hard cap on q");
	};

	std::string word_text;

	auto *classify_cmd = app.add_subcommand("classify", "derived-series classification");
	classify_cmd->add_option("word", word_text, "word expression")->required();

	auto *certify_cmd =
	    app.add_subcommand("certify", "search a basis with nonzero polynomial");
	long engel_k = -1;
	certify_cmd->add_option("word", word_text, "word expression");
	certify_cmd->add_option("--engel", engel_k, "certify the k-th Engel word");
	certify_cmd->add_option("--out", out_path, "certificate output path");
	add_search_flags(certify_cmd);

	auto *witness_cmd =
	    app.add_subcommand("witness", "construct a witness pair for a target");
	WitnessOptions wopt;
	witness_cmd->add_option("input", wopt.input, "word expression or certificate JSON path")
	    ->required();
	witness_cmd->add_option("--n", wopt.n, "dimension")->required();
	witness_cmd->add_option("--target", wopt.target_path, "target matrix file");
	witness_cmd->add_flag("--random", wopt.random_target, "Haar-random target");
	witness_cmd->add_option("--seed", wopt.seed, "random seed");
	witness_cmd->add_option("--tol", wopt.tol, "residual tolerance");
	witness_cmd->add_option("--out", wopt.out_dir, "output directory");
	add_search_flags(witness_cmd);

	auto *engel_cmd = app.add_subcommand("engel", "closed-form Engel certificate");
	long engel_pos_k = 1;
	engel_cmd->add_option("k", engel_pos_k, "Engel index, k >= 1")->required();
	engel_cmd->add_option("--out", out_path, "certificate output path");

	auto *selftest_cmd = app.add_subcommand("selftest", "run the built-in suites");
	bool quick = false;
	selftest_cmd->add_flag("--quick", quick, "symbolic suites only");
	selftest_cmd->add_option("--seed", seed, "random seed");
	selftest_cmd->add_option("--tol", tol, "witness residual tolerance");

	CLI11_PARSE(app, argc, argv);

	try {
		if (classify_cmd->parsed())
			return cmd_classify(word_text);
		if (certify_cmd->parsed()) {
			Certificate cert;
			if (engel_k >= 1) {
				cert = engel_certificate(engel_k);
			} else if (!word_text.empty()) {
				cert = search_basis(Word::parse(word_text), search);
			} else {
				std::cerr << "error: certify needs a word or --engel k\n";
				return kExitParseError;
			}
			emit_certificate(cert, out_path);
			return cert_exit_code(cert);
		}
		if (witness_cmd->parsed()) {
			if (!wopt.random_target && wopt.target_path.empty()) {
				std::cerr << "error: witness needs --target or --random\n";
				return kExitParseError;
			}
			wopt.search = search;
			return cmd_witness(wopt);
		}
		if (engel_cmd->parsed()) {
			Certificate cert = engel_certificate(engel_pos_k);
			emit_certificate(cert, out_path);
			return cert_exit_code(cert);
		}
		if (selftest_cmd->parsed())
			return cmd_selftest(quick, seed, tol);
	} catch (const ParseError &e) {
		std::cerr << "parse error: " << e.what() << "\n";
		return kExitParseError;
	} catch (const ResourceCapError &e) {
		std::cerr << "resource cap: " << e.what() << "\n";
		return kExitResourceCap;
	} catch (const std::invalid_argument &e) {
		std::cerr << "error: " << e.what() << "\n";
		return kExitParseError;
	} catch (const std::exception &e) {
		std::cerr << "error: " << e.what() << "\n";
		return kExitParseError;
	}
	return 0;
}
