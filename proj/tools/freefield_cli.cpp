// Command-line surface for the rational-series toolkit: word problem in the
// free skew field, normalization to simplification-free form, Magnus
// comparisons, support minima, and Connes/Hankel rank analysis.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "freefield/compile.hpp"
#include "freefield/connes.hpp"
#include "freefield/errors.hpp"
#include "freefield/identities.hpp"
#include "freefield/io.hpp"
#include "freefield/magnus.hpp"
#include "freefield/pipeline.hpp"
#include "freefield/support.hpp"

using namespace freefield;

namespace {

struct CliConfig {
    std::string alphabet_csv;
    std::optional<std::size_t> bound;
    std::size_t work_limit = 1'000'000;
    std::size_t truncate = 3;
    bool json = false;
    bool literal_stars = false;
    std::string dot_path;
};

PipelineOptions pipeline_options(const CliConfig& cfg) {
    PipelineOptions opt;
    opt.bound_override = cfg.bound;
    opt.work_limit = cfg.work_limit;
    opt.literal_stars = cfg.literal_stars;
    return opt;
}

Alphabet require_alphabet(const CliConfig& cfg) {
    if (cfg.alphabet_csv.empty())
        throw DomainError("--alphabet is required for this command");
    return Alphabet::from_csv(cfg.alphabet_csv);
}

void add_common_flags(CLI::App* cmd, CliConfig& cfg, bool with_alphabet = true) {
    if (with_alphabet)
        cmd->add_option("--alphabet", cfg.alphabet_csv,
                        "ordered, comma-separated generator names");
    cmd->add_option("--bound", cfg.bound, "override the support search bound");
    cmd->add_option("--work-limit", cfg.work_limit,
                    "coefficient evaluations allowed per support scan");
    cmd->add_option("--truncate", cfg.truncate, "truncation depth for rank diagnostics");
    cmd->add_flag("--json", cfg.json, "machine-readable output");
    cmd->add_flag("--literal-stars", cfg.literal_stars,
                  "keep non-well-ordered stars as literal series over the group");
    cmd->add_option("--dot", cfg.dot_path, "write the normalized automaton as GraphViz");
}

void emit_warnings(const std::vector<std::string>& warnings) {
    for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
}

void maybe_write_dot(const CliConfig& cfg, const ExprPtr& star_rational, const Alphabet& alphabet) {
    if (cfg.dot_path.empty()) return;
    WeightedAutomaton a = expression_to_automaton(star_rational, alphabet.size());
    WeightedAutomaton product = reduced_word_product_automaton(a);
    std::ofstream out(cfg.dot_path);
    if (!out) throw DomainError("cannot write DOT file: " + cfg.dot_path);
    out << automaton_to_dot(product, alphabet);
}

int report_zero_test(const CliConfig& cfg, const Alphabet& alphabet, const Normalized& normalized,
                     const char* zero_text, const char* nonzero_text) {
    emit_warnings(normalized.warnings);
    auto witness = nonzero_witness(normalized.series);
    if (cfg.json) {
        nlohmann::json j;
        j["schema"] = "1";
        j["result"] = witness ? nonzero_text : zero_text;
        if (witness) {
            j["witness"] = {{"word", alphabet.word_to_string(witness->first)},
                            {"coefficient", rational_to_string(witness->second)}};
        }
        j["warnings"] = normalized.warnings;
        std::cout << j.dump() << "\n";
    } else if (witness) {
        std::cout << nonzero_text << "  witness: " << alphabet.word_to_string(witness->first)
                  << "  coefficient: " << rational_to_string(witness->second) << "\n";
    } else {
        std::cout << zero_text << "\n";
    }
    return witness ? 1 : 0;
}

int run(int argc, char** argv) {
    CLI::App app{"rational series over the free group and the free skew field"};
    app.require_subcommand(1);
    CliConfig cfg;

    std::string expr_text, expr_text2, word_text, word_text2;
    std::size_t lyndon_n = 0, lyndon_len = 0;
    bool corpus = false;

    auto* cmd_is_zero = app.add_subcommand("is-zero", "decide whether an expression is zero");
    cmd_is_zero->add_option("expr", expr_text)->required();
    add_common_flags(cmd_is_zero, cfg);

    auto* cmd_equal = app.add_subcommand("equal", "decide equality of two expressions");
    cmd_equal->add_option("expr1", expr_text)->required();
    cmd_equal->add_option("expr2", expr_text2)->required();
    add_common_flags(cmd_equal, cfg);

    auto* cmd_normalize =
        app.add_subcommand("normalize", "print an equivalent simplification-free expression");
    cmd_normalize->add_option("expr", expr_text)->required();
    add_common_flags(cmd_normalize, cfg);

    auto* cmd_coeff = app.add_subcommand("coeff", "group coefficient of a word");
    cmd_coeff->add_option("expr", expr_text)->required();
    cmd_coeff->add_option("word", word_text)->required();
    add_common_flags(cmd_coeff, cfg);

    auto* cmd_min_supp = app.add_subcommand("min-supp", "minimum of the support");
    cmd_min_supp->add_option("expr", expr_text)->required();
    add_common_flags(cmd_min_supp, cfg);

    auto* cmd_compare = app.add_subcommand("compare", "Magnus comparison of two group words");
    cmd_compare->add_option("word1", word_text)->required();
    cmd_compare->add_option("word2", word_text2)->required();
    add_common_flags(cmd_compare, cfg);

    auto* cmd_connes = app.add_subcommand("connes-rank", "rank of the Connes operator");
    cmd_connes->add_option("expr", expr_text)->required();
    add_common_flags(cmd_connes, cfg);

    auto* cmd_hankel = app.add_subcommand("hankel-rank", "rank of the group Hankel operator");
    cmd_hankel->add_option("expr", expr_text)->required();
    add_common_flags(cmd_hankel, cfg);

    auto* cmd_lyndon = app.add_subcommand("lyndon", "Lyndon words in military order");
    cmd_lyndon->add_option("n", lyndon_n, "alphabet size")->required();
    cmd_lyndon->add_option("len", lyndon_len, "maximum length")->required();
    add_common_flags(cmd_lyndon, cfg);

    auto* cmd_subword = app.add_subcommand("subword-count", "count v as a subword of omega");
    cmd_subword->add_option("omega", word_text)->required();
    cmd_subword->add_option("v", word_text2)->required();
    add_common_flags(cmd_subword, cfg);

    auto* cmd_verify = app.add_subcommand("verify", "run the built-in identity corpus");
    cmd_verify->add_flag("--corpus", corpus, "verify every corpus identity");
    add_common_flags(cmd_verify, cfg, /*with_alphabet=*/false);

    CLI11_PARSE(app, argc, argv);

    if (cmd_is_zero->parsed()) {
        Alphabet alphabet = require_alphabet(cfg);
        ExprPtr e = parse_expression(expr_text, alphabet);
        Normalized n = normalize_expression(e, alphabet.size(), pipeline_options(cfg));
        maybe_write_dot(cfg, n.star_rational, alphabet);
        return report_zero_test(cfg, alphabet, n, "ZERO", "NONZERO");
    }
    if (cmd_equal->parsed()) {
        Alphabet alphabet = require_alphabet(cfg);
        ExprPtr a = parse_expression(expr_text, alphabet);
        ExprPtr b = parse_expression(expr_text2, alphabet);
        ExprPtr diff = simplified_sum({a, RatExpr::neg(b)});
        Normalized n = normalize_expression(diff, alphabet.size(), pipeline_options(cfg));
        maybe_write_dot(cfg, n.star_rational, alphabet);
        return report_zero_test(cfg, alphabet, n, "EQUAL", "NOT_EQUAL");
    }
    if (cmd_normalize->parsed()) {
        Alphabet alphabet = require_alphabet(cfg);
        ExprPtr e = parse_expression(expr_text, alphabet);
        std::vector<std::string> warnings;
        ExprPtr star_rational =
            eliminate_inverses(e, alphabet.size(), pipeline_options(cfg), &warnings);
        WeightedAutomaton a = expression_to_automaton(star_rational, alphabet.size());
        WeightedAutomaton product = reduced_word_product_automaton(a);
        ExprPtr simplification_free = automaton_to_expression(product);
        emit_warnings(warnings);
        maybe_write_dot(cfg, star_rational, alphabet);
        if (cfg.json) {
            nlohmann::json j;
            j["schema"] = "1";
            j["expression"] = format_expression(simplification_free, alphabet);
            j["automaton"] = automaton_to_json(product, alphabet);
            j["warnings"] = warnings;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << format_expression(simplification_free, alphabet) << "\n";
        }
        return 0;
    }
    if (cmd_coeff->parsed()) {
        Alphabet alphabet = require_alphabet(cfg);
        ExprPtr e = parse_expression(expr_text, alphabet);
        GroupElement g = GroupElement::reduce(alphabet.parse_word(word_text));
        Normalized n = normalize_expression(e, alphabet.size(), pipeline_options(cfg));
        emit_warnings(n.warnings);
        Rational c = coefficient(n.series, g.word());
        if (cfg.json) {
            nlohmann::json j;
            j["schema"] = "1";
            j["word"] = alphabet.word_to_string(g);
            j["coefficient"] = rational_to_string(c);
            std::cout << j.dump() << "\n";
        } else {
            std::cout << rational_to_string(c) << "\n";
        }
        return 0;
    }
    if (cmd_min_supp->parsed()) {
        Alphabet alphabet = require_alphabet(cfg);
        ExprPtr e = parse_expression(expr_text, alphabet);
        Normalized n = normalize_expression(e, alphabet.size(), pipeline_options(cfg));
        emit_warnings(n.warnings);
        SupportQuery q;
        q.rep = n.series;
        q.rank = n.series.dim;
        q.bound_override = cfg.bound;
        q.work_limit = cfg.work_limit;
        MinSupp m = min_supp(q);
        if (cfg.json) {
            nlohmann::json j;
            j["schema"] = "1";
            j["element"] = alphabet.word_to_string(m.element);
            j["coefficient"] = rational_to_string(m.coefficient);
            std::cout << j.dump() << "\n";
        } else {
            std::cout << alphabet.word_to_string(m.element) << "  coefficient: "
                      << rational_to_string(m.coefficient) << "\n";
        }
        return 0;
    }
    if (cmd_compare->parsed()) {
        Alphabet alphabet = require_alphabet(cfg);
        GroupElement a = GroupElement::reduce(alphabet.parse_word(word_text));
        GroupElement b = GroupElement::reduce(alphabet.parse_word(word_text2));
        MagnusWitness witness;
        Order o = magnus_compare(a, b, {}, &witness);
        const char* text = o == Order::Less ? "LESS" : (o == Order::Equal ? "EQUAL" : "GREATER");
        if (cfg.json) {
            nlohmann::json j;
            j["schema"] = "1";
            j["result"] = text;
            if (o != Order::Equal) {
                j["lyndon"] = alphabet.word_to_string(witness.lyndon);
                j["count1"] = witness.count_a.get_str();
                j["count2"] = witness.count_b.get_str();
            }
            std::cout << j.dump() << "\n";
        } else {
            std::cout << text;
            if (o != Order::Equal)
                std::cout << "  lyndon: " << alphabet.word_to_string(witness.lyndon)
                          << "  counts: " << witness.count_a.get_str() << " vs "
                          << witness.count_b.get_str();
            std::cout << "\n";
        }
        return 0;
    }
    if (cmd_connes->parsed() || cmd_hankel->parsed()) {
        Alphabet alphabet = require_alphabet(cfg);
        ExprPtr e = parse_expression(expr_text, alphabet);
        Normalized n = normalize_expression(e, alphabet.size(), pipeline_options(cfg));
        emit_warnings(n.warnings);
        if (cmd_hankel->parsed()) {
            std::size_t r = group_hankel_rank(n.series);
            if (cfg.json) {
                nlohmann::json j;
                j["schema"] = "1";
                j["group-hankel-rank"] = r;
                std::cout << j.dump() << "\n";
            } else {
                std::cout << "group-hankel-rank: " << r << "\n";
            }
            return 0;
        }
        std::size_t exact = connes_rank_exact(n.series);
        TruncatedRank tr = connes_rank_truncated(n.series, cfg.truncate, cfg.truncate + 2);
        if (cfg.json) {
            nlohmann::json j;
            j["schema"] = "1";
            j["connes-rank"] = exact;
            j["truncated"] = {{"depth", cfg.truncate},
                              {"rank", tr.rank_at_depth},
                              {"rank-next", tr.rank_at_depth_plus},
                              {"stabilized", tr.stabilized()}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "connes-rank: " << exact << "\n";
            std::cout << "truncated(depth " << cfg.truncate << "): " << tr.rank_at_depth
                      << ", depth " << cfg.truncate + 1 << ": " << tr.rank_at_depth_plus
                      << (tr.stabilized() ? " (stabilized)" : " (not stabilized)") << "\n";
        }
        return 0;
    }
    if (cmd_lyndon->parsed()) {
        Alphabet alphabet = cfg.alphabet_csv.empty()
                                ? Alphabet([&] {
                                      std::vector<std::string> names;
                                      const char* defaults = "xyzuvw";
                                      for (std::size_t i = 0; i < lyndon_n; ++i)
                                          names.push_back(i < 6 ? std::string(1, defaults[i])
                                                                : "g" + std::to_string(i));
                                      return names;
                                  }())
                                : require_alphabet(cfg);
        if (alphabet.size() != lyndon_n)
            throw DomainError("--alphabet size must match n");
        nlohmann::json arr = nlohmann::json::array();
        for (const Word& w : lyndon_words(lyndon_n, lyndon_len)) {
            if (cfg.json)
                arr.push_back(alphabet.word_to_string(w));
            else
                std::cout << alphabet.word_to_string(w) << "\n";
        }
        if (cfg.json) {
            nlohmann::json j;
            j["schema"] = "1";
            j["lyndon"] = std::move(arr);
            std::cout << j.dump() << "\n";
        }
        return 0;
    }
    if (cmd_subword->parsed()) {
        Alphabet alphabet = require_alphabet(cfg);
        GroupElement omega = GroupElement::reduce(alphabet.parse_word(word_text));
        Word v = alphabet.parse_word(word_text2);
        Integer count = subword_count(omega, v);
        if (cfg.json) {
            nlohmann::json j;
            j["schema"] = "1";
            j["count"] = count.get_str();
            std::cout << j.dump() << "\n";
        } else {
            std::cout << count.get_str() << "\n";
        }
        return 0;
    }
    if (cmd_verify->parsed()) {
        if (!corpus) throw DomainError("verify requires --corpus");
        bool all_ok = true;
        for (const CorpusItem& item : identity_corpus()) {
            bool ok = false;
            std::string error;
            try {
                ok = is_zero_expression(item.expr, item.alphabet.size(), pipeline_options(cfg));
            } catch (const Error& err) {
                error = err.what();
            }
            all_ok = all_ok && ok;
            std::cout << (ok ? "PASS: " : "FAIL: ") << item.name;
            if (!error.empty()) std::cout << "  (" << error << ")";
            std::cout << "\n";
        }
        return all_ok ? 0 : 1;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
