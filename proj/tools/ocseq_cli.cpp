// ocseq: open/closed prefix analysis for finite words and the standard
// Sturmian word machinery built on top of it.
//
// Exit codes: 0 success, 1 selftest/invariant failure, 2 usage or parse
// error, 3 semantic refusal (the input is no Sturmian oc-sequence).

#include <cctype>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ocseq/oracle.hpp"
#include "ocseq/reconstruct.hpp"
#include "ocseq/sturmian.hpp"
#include "ocseq/word_core.hpp"

namespace {

using ocseq::OcSequence;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRefused = 3;

void fail_usage(const std::string& message) {
    throw CLI::ValidationError(message);
}

std::string chomp(std::string line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.pop_back();
    return line;
}

void require_token(const std::string& token) {
    for (const char c : token) {
        if (std::isspace(static_cast<unsigned char>(c)) ||
            !std::isprint(static_cast<unsigned char>(c)))
            throw std::invalid_argument("word tokens must be printable and space-free");
    }
}

// resolves the word/--empty/--stdin triple into the list of inputs
std::vector<std::string> gather_inputs(const std::string& positional, bool empty_flag,
                                       bool stdin_flag) {
    if (stdin_flag) {
        if (!positional.empty() || empty_flag)
            fail_usage("--stdin excludes a positional argument and --empty");
        std::vector<std::string> lines;
        std::string line;
        while (std::getline(std::cin, line))
            lines.push_back(chomp(std::move(line)));
        return lines;
    }
    if (empty_flag) {
        if (!positional.empty())
            fail_usage("--empty excludes a positional argument");
        return {std::string()};
    }
    if (positional.empty())
        fail_usage("expected a word argument, --empty, or --stdin");
    return {positional};
}

struct OcCommand {
    std::string word;
    bool empty = false;
    bool use_stdin = false;
    bool show_runs = false;
    bool show_border = false;
};

int run_oc(const OcCommand& cmd) {
    if (cmd.use_stdin && (cmd.show_runs || cmd.show_border))
        fail_usage("--runs/--border are single-word diagnostics, not batch flags");
    for (const std::string& word : gather_inputs(cmd.word, cmd.empty, cmd.use_stdin)) {
        require_token(word);
        const OcSequence oc = ocseq::compute_oc_sequence(word);
        std::cout << oc.str() << '\n';
        if (cmd.show_runs)
            std::cout << ocseq::runs_to_string(ocseq::runs(oc)) << '\n';
        if (cmd.show_border)
            std::cout << ocseq::border_array_to_string(ocseq::compute_border_array(word))
                      << '\n';
    }
    return kExitOk;
}

struct ReconstructCommand {
    std::string bits;
    bool use_stdin = false;
    bool mirror = false;
    bool no_validate = false;
    bool show_border = false;
};

int run_reconstruct(const ReconstructCommand& cmd) {
    if (cmd.use_stdin && cmd.show_border)
        fail_usage("--border is a single-word diagnostic, not a batch flag");
    std::vector<std::string> inputs;
    if (cmd.use_stdin) {
        if (!cmd.bits.empty())
            fail_usage("--stdin excludes a positional argument");
        std::string line;
        while (std::getline(std::cin, line))
            inputs.push_back(chomp(std::move(line)));
    } else {
        inputs.push_back(cmd.bits);
    }
    for (const std::string& bits : inputs) {
        const OcSequence oc = OcSequence::parse(bits);
        const ocseq::ReconstructionResult result =
            ocseq::reconstruct_with_border(oc, !cmd.no_validate);
        std::cout << (cmd.mirror ? ocseq::swap_ab(result.word) : result.word) << '\n';
        if (cmd.show_border)
            std::cout << ocseq::border_array_to_string(result.border) << '\n';
    }
    return kExitOk;
}

struct GenerateCommand {
    std::string directive;
    std::uint64_t length = 0;
    bool has_length = false;
    bool show_oc = false;
    bool show_boundaries = false;
    std::uint64_t factorize_terms = 0;
    bool has_factorize = false;
    bool machine = false;
};

int run_generate(const GenerateCommand& cmd) {
    const ocseq::DirectiveSequence d = ocseq::DirectiveSequence::parse(cmd.directive);
    if (!cmd.has_length && !cmd.has_factorize)
        fail_usage("expected --length and/or --factorize");
    if ((cmd.show_oc || cmd.show_boundaries) && !cmd.has_length)
        fail_usage("--oc/--boundaries need --length");
    if (cmd.has_length) {
        if (cmd.length == 0)
            fail_usage("--length must be at least 1");
        std::cout << ocseq::standard_prefix(d, cmd.length) << '\n';
        if (cmd.show_oc)
            std::cout << ocseq::oc_closed_form(d, cmd.length).str() << '\n';
        if (cmd.show_boundaries) {
            for (const auto& flip : ocseq::run_boundaries(d, cmd.length)) {
                std::cout << flip.position << ' '
                          << (flip.kind == ocseq::FlipKind::closed_to_open
                                  ? "closed->open"
                                  : "open->closed")
                          << '\n';
            }
        }
    }
    if (cmd.has_factorize) {
        if (cmd.factorize_terms == 0)
            fail_usage("--factorize must be at least 1");
        const auto f = ocseq::square_factorization(
            d, static_cast<std::size_t>(cmd.factorize_terms));
        std::cout << f.head << '\n';
        for (const auto& half : f.half_factors) {
            if (cmd.machine)
                std::cout << half << half << '\n';
            else
                std::cout << half << "·" << half << '\n';
        }
    }
    return kExitOk;
}

struct AnalyzeCommand {
    std::string word;
    bool empty = false;
    bool use_stdin = false;
    bool as_json = false;
};

const char* tri(const std::optional<bool>& flag) {
    if (!flag.has_value())
        return "null";
    return *flag ? "yes" : "no";
}

void print_classification_line(const ocseq::Classification& c) {
    std::cout << "balanced:" << tri(c.balanced) << " central:" << tri(c.central)
              << " semicentral:" << tri(c.semicentral)
              << " left_special:" << tri(c.left_special)
              << " right_special:" << tri(c.right_special)
              << " strictly_bispecial:" << tri(c.strictly_bispecial)
              << " closed:" << (c.closed ? "yes" : "no") << " period:" << c.period
              << " exponent:" << (c.exponent ? c.exponent->str() : "null")
              << " oc:" << c.oc << '\n';
}

void print_classification_json(const ocseq::Classification& c) {
    nlohmann::ordered_json j;
    j["word"] = c.word;
    const auto put = [&](const char* key, const std::optional<bool>& flag) {
        if (flag.has_value())
            j[key] = *flag;
        else
            j[key] = nullptr;
    };
    put("balanced", c.balanced);
    put("central", c.central);
    put("semicentral", c.semicentral);
    put("left_special", c.left_special);
    put("right_special", c.right_special);
    put("strictly_bispecial", c.strictly_bispecial);
    j["closed"] = c.closed;
    j["period"] = c.period;
    if (c.exponent.has_value())
        j["exponent"] = c.exponent->str();
    else
        j["exponent"] = nullptr;
    j["oc"] = c.oc;
    std::cout << j.dump() << '\n';
}

int run_analyze(const AnalyzeCommand& cmd) {
    for (const std::string& word : gather_inputs(cmd.word, cmd.empty, cmd.use_stdin)) {
        require_token(word);
        const ocseq::Classification c = ocseq::classify(word);
        if (cmd.as_json)
            print_classification_json(c);
        else
            print_classification_line(c);
    }
    return kExitOk;
}

int run_selftest(std::uint64_t max_n) {
    if (max_n > 16)
        fail_usage("--max-n is capped at 16");
    bool all_passed = true;
    for (const auto& suite : ocseq::oracle::run_selftest(static_cast<std::size_t>(max_n))) {
        std::cout << (suite.passed ? "[ok]   " : "[FAIL] ") << suite.name << " ("
                  << suite.detail << ")\n";
        all_passed = all_passed && suite.passed;
    }
    std::cout << (all_passed ? "all suites passed\n" : "suite failures detected\n");
    return all_passed ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"open/closed prefix sequences of words and Sturmian word machinery"};
    app.set_version_flag("--version", "0.1.0");
    app.require_subcommand(1);

    OcCommand oc_cmd;
    CLI::App* oc_app = app.add_subcommand("oc", "print the oc-sequence of a word");
    oc_app->add_option("word", oc_cmd.word, "input word (contiguous symbols)");
    oc_app->add_flag("--empty", oc_cmd.empty, "analyze the empty word");
    oc_app->add_flag("--stdin", oc_cmd.use_stdin, "read words from stdin, one per line");
    oc_app->add_flag("--runs", oc_cmd.show_runs, "also print the run-length pairs");
    oc_app->add_flag("--border", oc_cmd.show_border, "also print the border array");

    ReconstructCommand rec_cmd;
    CLI::App* rec_app =
        app.add_subcommand("reconstruct", "rebuild a Sturmian word from its oc-sequence");
    rec_app->add_option("oc", rec_cmd.bits, "oc-sequence as a 0/1 token");
    rec_app->add_flag("--stdin", rec_cmd.use_stdin, "read sequences from stdin");
    rec_app->add_flag("--mirror", rec_cmd.mirror, "print the b-initial isomorph");
    rec_app->add_flag("--no-validate", rec_cmd.no_validate,
                      "skip the round-trip validation");
    rec_app->add_flag("--border", rec_cmd.show_border,
                      "also print the border array built by the scan");

    GenerateCommand gen_cmd;
    CLI::App* gen_app =
        app.add_subcommand("generate", "generate a standard Sturmian word prefix");
    gen_app->add_option("directive", gen_cmd.directive,
                        "continued-fraction digits, e.g. 2,2,1")
        ->required();
    CLI::Option* len_opt =
        gen_app->add_option("--length", gen_cmd.length, "prefix length to generate");
    gen_app->add_flag("--oc", gen_cmd.show_oc,
                      "also print the oc-sequence from the closed form");
    gen_app->add_flag("--boundaries", gen_cmd.show_boundaries,
                      "also print the oc run boundaries");
    CLI::Option* fact_opt = gen_app->add_option(
        "--factorize", gen_cmd.factorize_terms, "print the square factorization");
    gen_app->add_flag("--machine", gen_cmd.machine,
                      "duplicate factor halves instead of the middle-dot form");

    AnalyzeCommand ana_cmd;
    CLI::App* ana_app = app.add_subcommand("analyze", "classify a word");
    ana_app->add_option("word", ana_cmd.word, "input word");
    ana_app->add_flag("--empty", ana_cmd.empty, "analyze the empty word");
    ana_app->add_flag("--stdin", ana_cmd.use_stdin, "read words from stdin");
    ana_app->add_flag("--json", ana_cmd.as_json, "machine-readable output");

    std::uint64_t max_n = 12;
    CLI::App* self_app =
        app.add_subcommand("selftest", "run the exhaustive cross-check suites");
    self_app->add_option("--max-n", max_n, "enumerate words up to this length (<= 16)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        gen_cmd.has_length = len_opt->count() > 0;
        gen_cmd.has_factorize = fact_opt->count() > 0;
        if (oc_app->parsed())
            return run_oc(oc_cmd);
        if (rec_app->parsed())
            return run_reconstruct(rec_cmd);
        if (gen_app->parsed())
            return run_generate(gen_cmd);
        if (ana_app->parsed())
            return run_analyze(ana_cmd);
        if (self_app->parsed())
            return run_selftest(max_n);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "ocseq: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ocseq::InvalidOcStart& e) {
        std::cerr << "ocseq: " << e.what() << '\n';
        return kExitRefused;
    } catch (const ocseq::NotSturmianOc& e) {
        std::cerr << "ocseq: " << e.what() << '\n';
        return kExitRefused;
    } catch (const std::invalid_argument& e) {
        std::cerr << "ocseq: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::length_error& e) {
        std::cerr << "ocseq: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "ocseq: unexpected error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
