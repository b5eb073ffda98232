// Command-line surface for the diagram and partition Hopf algebra library:
// exact products, coproducts, basis conversions, enumeration tables, and the
// verification suites.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <string>

#include "bdiag/io.hpp"
#include "bdiag/verify.hpp"
#include "bdiag/word_dual.hpp"

using namespace bdiag;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct Output {
    std::string format = "text";
};

std::string show_diagram(const Diagram& g) { return to_text(g); }

ColorBounds parse_bounds(const std::string& s) {
    std::vector<int> prefix;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) prefix.push_back(std::stoi(tok));
    if (prefix.empty()) throw std::invalid_argument("color bounds: empty prefix");
    return ColorBounds(std::move(prefix));
}

using FreeWord = std::vector<int>;

FreeWord parse_free_word(const std::string& s) {
    FreeWord w;
    for (char ch : s) {
        if (ch == ' ') continue;
        if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0')
            throw std::invalid_argument("free word: letters are the digits 1..9");
        w.push_back(ch - '0');
    }
    return w;
}

std::string show_free_word(const FreeWord& w) {
    std::string s;
    for (int v : w) s += static_cast<char>('0' + v);
    return s.empty() ? "1" : s;
}

template <class B, class Show>
void emit(const LinComb<B>& x, const std::string& tag, const Output& out, Show&& show) {
    if (out.format == "json")
        std::cout << lincomb_to_json(x, tag, show).dump() << "\n";
    else if (out.format == "csv")
        std::cout << lincomb_to_csv(x, show);
    else
        std::cout << lincomb_to_text(x, tag, show);
}

template <class B, class Show>
void emit_tensor(const Tensor2<B>& x, const std::string& tag, const Output& out, Show&& show) {
    if (out.format == "json")
        std::cout << tensor_to_json(x, tag, show).dump() << "\n";
    else if (out.format == "csv") {
        std::cout << "coeff,left,right\n";
        for (const auto& [p, c] : x.terms())
            std::cout << c.str() << ",\"" << show(p.first) << "\",\"" << show(p.second) << "\"\n";
    } else {
        std::cout << tensor_to_text(x, tag, show);
    }
}

struct AlgebraArgs {
    std::string algebra;
    std::string basis;
    std::string bounds_text = "2,2,2,2";
};

void require_basis(const AlgebraArgs& args, std::initializer_list<const char*> allowed) {
    for (const char* b : allowed)
        if (args.basis == b) return;
    std::string msg = "basis '" + args.basis + "' does not belong to algebra '" + args.algebra +
                      "'; expected one of:";
    for (const char* b : allowed) msg += std::string(" ") + b;
    throw std::invalid_argument(msg);
}

int run_product(const AlgebraArgs& args, const std::string& xs, const std::string& ys,
                const Output& out) {
    if (args.algebra == "b") {
        require_basis(args, {"diagram", "phi"});
        Diagram x = parse_diagram(xs), y = parse_diagram(ys);
        if (args.basis == "diagram") {
            emit(star(x, y), "diagram", out, show_diagram);
        } else {
            // multiplicative basis: the product is the juxtaposition index
            emit(LinComb<Diagram>::unit(juxtapose(x, y)), "phi", out, show_diagram);
        }
        return kExitPass;
    }
    if (args.algebra == "b-dual") {
        require_basis(args, {"d", "psi"});
        Diagram x = parse_diagram(xs), y = parse_diagram(ys);
        if (args.basis == "d") {
            emit(dual_product(x, y), "d", out, show_diagram);
        } else {
            BasisConverter conv;
            emit(psi_product(x, y, conv), "psi", out, show_diagram);
        }
        return kExitPass;
    }
    if (args.algebra == "wsym") {
        require_basis(args, {"m", "phi"});
        SetPartition x = parse_set_partition(xs), y = parse_set_partition(ys);
        if (args.basis == "m")
            emit(m_product(x, y), "m", out, [](const SetPartition& p) { return to_text(p); });
        else
            emit(phi_product(x, y), "phi", out,
                 [](const SetPartition& p) { return to_text(p); });
        return kExitPass;
    }
    if (args.algebra == "piqsym") {
        require_basis(args, {"psi"});
        emit(psi_interleave_product(parse_set_partition(xs), parse_set_partition(ys)), "psi", out,
             [](const SetPartition& p) { return to_text(p); });
        return kExitPass;
    }
    if (args.algebra == "bwsym") {
        require_basis(args, {"phi"});
        emit(phi_product(parse_list_partition(xs), parse_list_partition(ys)), "phi", out,
             [](const ListPartition& p) { return to_text(p); });
        return kExitPass;
    }
    if (args.algebra == "bpiqsym") {
        require_basis(args, {"psi"});
        emit(psi_interleave_product(parse_list_partition(xs), parse_list_partition(ys)), "psi",
             out, [](const ListPartition& p) { return to_text(p); });
        return kExitPass;
    }
    if (args.algebra == "cwsym") {
        require_basis(args, {"phi"});
        ColorBounds bounds = parse_bounds(args.bounds_text);
        emit(cwsym_product(parse_colored_partition(xs), parse_colored_partition(ys), bounds),
             "phi", out, [](const ColoredPartition& p) { return to_text(p); });
        return kExitPass;
    }
    if (args.algebra == "cpiqsym") {
        require_basis(args, {"psi"});
        ColorBounds bounds = parse_bounds(args.bounds_text);
        emit(cpiqsym_product(parse_colored_partition(xs), parse_colored_partition(ys), bounds),
             "psi", out, [](const ColoredPartition& p) { return to_text(p); });
        return kExitPass;
    }
    if (args.algebra == "free") {
        require_basis(args, {"word"});
        std::vector<int> grades{1, 2, 3, 4, 5, 6, 7, 8, 9};
        GradedLetterCoalgebra<int> letters = primitive_letters(grades);
        // letter i-1 prints as digit i
        WordDualEngine<int> engine(letters);
        FreeWord x = parse_free_word(xs), y = parse_free_word(ys);
        FreeWord xl, yl;
        for (int v : x) xl.push_back(v - 1);
        for (int v : y) yl.push_back(v - 1);
        LinComb<FreeWord> shifted = engine.product(xl, yl);
        LinComb<FreeWord> result;
        for (const auto& [w, c] : shifted.terms()) {
            FreeWord back;
            for (int v : w) back.push_back(v + 1);
            result.add_term(back, c);
        }
        emit(result, "word", out, show_free_word);
        return kExitPass;
    }
    throw std::invalid_argument("unknown algebra '" + args.algebra + "'");
}

int run_coproduct(const AlgebraArgs& args, const std::string& xs, const Output& out) {
    if (args.algebra == "b") {
        require_basis(args, {"diagram", "phi"});
        Diagram x = parse_diagram(xs);
        if (args.basis == "diagram") {
            emit_tensor(b_coproduct(x), "diagram", out, show_diagram);
        } else {
            Tensor2<Diagram> split_form;
            for (const auto& [I, J] : iso_split(x))
                split_form.add_term({sub_diagram(x, I), sub_diagram(x, J)}, 1);
            emit_tensor(split_form, "phi", out, show_diagram);
        }
        return kExitPass;
    }
    if (args.algebra == "b-dual") {
        require_basis(args, {"d", "psi"});
        Diagram x = parse_diagram(xs);
        if (args.basis == "d")
            emit_tensor(dual_coproduct(x), "d", out, show_diagram);
        else
            emit_tensor(psi_coproduct_direct(x), "psi", out, show_diagram);
        return kExitPass;
    }
    if (args.algebra == "wsym") {
        require_basis(args, {"m", "phi"});
        SetPartition x = parse_set_partition(xs);
        emit_tensor(args.basis == "m" ? m_coproduct(x) : phi_coproduct(x), args.basis, out,
                    [](const SetPartition& p) { return to_text(p); });
        return kExitPass;
    }
    if (args.algebra == "piqsym") {
        require_basis(args, {"psi"});
        emit_tensor(psi_deconcat_coproduct(parse_set_partition(xs)), "psi", out,
                    [](const SetPartition& p) { return to_text(p); });
        return kExitPass;
    }
    if (args.algebra == "bwsym") {
        require_basis(args, {"phi"});
        emit_tensor(phi_coproduct(parse_list_partition(xs)), "phi", out,
                    [](const ListPartition& p) { return to_text(p); });
        return kExitPass;
    }
    if (args.algebra == "bpiqsym") {
        require_basis(args, {"psi"});
        emit_tensor(psi_deconcat_coproduct(parse_list_partition(xs)), "psi", out,
                    [](const ListPartition& p) { return to_text(p); });
        return kExitPass;
    }
    if (args.algebra == "cwsym" || args.algebra == "cpiqsym") {
        require_basis(args, {args.algebra == "cwsym" ? "phi" : "psi"});
        ColorBounds bounds = parse_bounds(args.bounds_text);
        ColoredPartition x = parse_colored_partition(xs);
        emit_tensor(args.algebra == "cwsym" ? cwsym_coproduct(x, bounds)
                                            : cpiqsym_coproduct(x, bounds),
                    args.basis, out, [](const ColoredPartition& p) { return to_text(p); });
        return kExitPass;
    }
    throw std::invalid_argument("unknown algebra '" + args.algebra + "'");
}

int run_convert(const std::string& algebra, const std::string& from, const std::string& to,
                const std::string& xs, const Output& out) {
    if (algebra == "b" || algebra == "b-dual") {
        Diagram x = parse_diagram(xs);
        BasisConverter conv;
        LinComb<Diagram> result;
        if (from == "diagram" && to == "phi")
            result = conv.diagram_to_phi(x);
        else if (from == "phi" && to == "diagram")
            result = conv.phi_to_diagram(x);
        else if (from == "psi" && to == "d")
            result = conv.psi_to_d(x);
        else if (from == "d" && to == "psi")
            result = conv.d_to_psi(x);
        else if (from == to && (from == "diagram" || from == "phi" || from == "psi" ||
                                from == "d"))
            result = LinComb<Diagram>::unit(x);
        else
            throw std::invalid_argument(
                "convert: supported pairs are diagram<->phi and psi<->d");
        emit(result, to, out, show_diagram);
        return kExitPass;
    }
    if (algebra == "wsym") {
        SetPartition x = parse_set_partition(xs);
        LinComb<SetPartition> result;
        if (from == "phi" && to == "m")
            result = phi_in_m(x);
        else if (from == "m" && to == "phi")
            result = m_in_phi(x);
        else if (from == to && (from == "m" || from == "phi"))
            result = LinComb<SetPartition>::unit(x);
        else
            throw std::invalid_argument("convert: supported pair is m<->phi");
        emit(result, to, out, [](const SetPartition& p) { return to_text(p); });
        return kExitPass;
    }
    throw std::invalid_argument("convert: algebra must be b, b-dual or wsym");
}

int run_sequence(const std::string& generators, const std::string& stat, int limit,
                 const Output& out) {
    GeneratorSet dd = parse_generators(generators);
    SequenceStat s;
    if (stat == "beta")
        s = SequenceStat::beta;
    else if (stat == "alpha")
        s = SequenceStat::alpha;
    else if (stat == "c")
        s = SequenceStat::c;
    else
        throw std::invalid_argument("sequence: stat must be beta, alpha or c");
    auto rows = sequence_table(dd, s, limit);
    for (const auto& row : rows)
        if (!row.agree()) {
            std::cerr << "recurrence and enumeration disagree at index " << row.index << ": "
                      << row.by_recurrence.get_str() << " vs " << row.by_enumeration.get_str()
                      << "\n";
            return kExitCheckFailure;
        }
    if (out.format == "json") {
        Json j = Json::array();
        for (const auto& row : rows) j.push_back(row.by_recurrence.get_str());
        std::cout << j.dump() << "\n";
    } else if (out.format == "csv") {
        std::cout << "n,value\n";
        for (const auto& row : rows)
            std::cout << row.index << "," << row.by_recurrence.get_str() << "\n";
    } else {
        for (std::size_t i = 0; i < rows.size(); ++i)
            std::cout << rows[i].by_recurrence.get_str() << (i + 1 < rows.size() ? " " : "\n");
    }
    return kExitPass;
}

int run_enumerate(const std::string& generators, const std::string& by, int limit,
                  const std::string& stat, const Output& out) {
    GeneratorSet dd = parse_generators(generators);
    if (stat == "kappa" || stat == "d") {
        CountingTables tables(dd);
        const int pmax = limit * std::max(1, dd.max_f_up()) + 1;
        std::vector<std::tuple<int, int, Integer>> rows;
        for (int n = 0; n <= limit; ++n)
            for (int p = 0; p <= pmax; ++p) {
                Integer v = stat == "kappa" ? tables.kappa(n, p) : tables.d(n, p);
                if (v != 0) rows.emplace_back(n, p, v);
            }
        if (out.format == "json") {
            Json j = Json::array();
            for (auto& [n, p, v] : rows) {
                Json e;
                e["n"] = n;
                e["p"] = p;
                e["value"] = v.get_str();
                j.push_back(std::move(e));
            }
            std::cout << j.dump() << "\n";
        } else {
            if (out.format == "csv") std::cout << "n,p,value\n";
            for (auto& [n, p, v] : rows)
                std::cout << n << (out.format == "csv" ? "," : " ") << p
                          << (out.format == "csv" ? "," : " ") << v.get_str() << "\n";
        }
        return kExitPass;
    }
    if (by != "weight" && by != "size")
        throw std::invalid_argument("enumerate: --by must be weight or size");
    if ((stat == "alpha") != (by == "weight") && stat != "c" && stat != "beta")
        throw std::invalid_argument("enumerate: unknown stat '" + stat + "'");
    SequenceStat s = stat == "alpha"  ? SequenceStat::alpha
                     : stat == "beta" ? SequenceStat::beta
                                      : SequenceStat::c;
    auto rows = sequence_table(dd, s, limit);
    if (out.format == "json") {
        Json j = Json::array();
        for (const auto& row : rows) {
            Json e;
            e["n"] = row.index;
            e["recurrence"] = row.by_recurrence.get_str();
            e["enumeration"] = row.by_enumeration.get_str();
            j.push_back(std::move(e));
        }
        std::cout << j.dump() << "\n";
    } else {
        if (out.format == "csv")
            std::cout << "n,recurrence,enumeration\n";
        else
            std::cout << "n recurrence enumeration\n";
        const char* sep = out.format == "csv" ? "," : " ";
        for (const auto& row : rows)
            std::cout << row.index << sep << row.by_recurrence.get_str() << sep
                      << row.by_enumeration.get_str() << "\n";
    }
    for (const auto& row : rows)
        if (!row.agree()) return kExitCheckFailure;
    return kExitPass;
}

int run_verify(const std::string& suite, const VerifyOptions& opts) {
    auto results = run_suite(suite, opts);
    bool all_pass = true;
    for (const auto& r : results) {
        std::printf("[%s] %s (%.1f ms)%s%s\n", r.pass ? "PASS" : "FAIL", r.name.c_str(),
                    r.millis, r.detail.empty() ? "" : ": ", r.detail.c_str());
        all_pass = all_pass && r.pass;
    }
    std::printf("%zu checks, %s\n", results.size(), all_pass ? "all passed" : "FAILURES");
    return all_pass ? kExitPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computer algebra for diagram and partition Hopf algebras"};
    app.require_subcommand(1);
    Output out;
    app.add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    AlgebraArgs prod_args;
    std::string arg_x, arg_y;
    auto* product = app.add_subcommand("product", "Multiply two basis elements");
    product->add_option("algebra", prod_args.algebra, "Algebra tag")->required();
    product->add_option("basis", prod_args.basis, "Basis tag")->required();
    product->add_option("x", arg_x, "Left element")->required();
    product->add_option("y", arg_y, "Right element")->required();
    product->add_option("--color-bounds", prod_args.bounds_text,
                        "Comma-separated color bounds per block size");

    AlgebraArgs cop_args;
    std::string cop_x;
    auto* coproduct = app.add_subcommand("coproduct", "Coproduct of a basis element");
    coproduct->add_option("algebra", cop_args.algebra)->required();
    coproduct->add_option("basis", cop_args.basis)->required();
    coproduct->add_option("x", cop_x)->required();
    coproduct->add_option("--color-bounds", cop_args.bounds_text);

    std::string conv_algebra = "b", conv_from, conv_to, conv_x;
    auto* convert = app.add_subcommand("convert", "Change of basis");
    convert->add_option("--algebra", conv_algebra, "b, b-dual or wsym");
    convert->add_option("--from", conv_from)->required();
    convert->add_option("--to", conv_to)->required();
    convert->add_option("x", conv_x)->required();

    std::string seq_generators, seq_stat = "beta";
    int seq_limit = 8;
    auto* sequence = app.add_subcommand("sequence", "Counting sequence of an alphabet");
    sequence->add_option("--generators", seq_generators, "Preset W|BW|F|S|T:{..} or a JSON file")
        ->required();
    sequence->add_option("--stat", seq_stat, "beta, alpha or c");
    sequence->add_option("--limit", seq_limit)->required();

    std::string enum_generators, enum_by = "size", enum_stat = "beta";
    int enum_limit = 5;
    auto* enumerate = app.add_subcommand("enumerate", "Enumeration tables of an alphabet");
    enumerate->add_option("--generators", enum_generators)->required();
    enumerate->add_option("--by", enum_by, "weight or size");
    enumerate->add_option("--limit", enum_limit)->required();
    enumerate->add_option("--stat", enum_stat, "beta, alpha, c, kappa or d");

    auto* embed = app.add_subcommand("embed", "Partition/diagram embeddings");
    std::string embed_x, embed_generators = "W";
    auto* embed_gpi = embed->add_subcommand("g-pi", "Diagram of a set partition");
    embed_gpi->add_option("partition", embed_x)->required();
    auto* embed_colset = embed->add_subcommand("colset", "Colored components of a diagram");
    embed_colset->add_option("diagram", embed_x)->required();
    embed_colset->add_option("--generators", embed_generators);

    std::string boson_word;
    auto* normal = app.add_subcommand("normal-order", "Normal ordering in the boson algebra");
    normal->add_option("word", boson_word, "Letters +/- or c/a")->required();

    std::string suite;
    VerifyOptions opts;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify
        ->add_option("suite", suite,
                     "hopf-axioms|duality|phi-psi|embeddings|chi|enumeration|exp-formula|"
                     "katriel|golden-examples|all")
        ->required();
    verify->add_option("--max-weight", opts.max_weight);
    verify->add_option("--max-size", opts.max_size);
    verify->add_option("--order", opts.order);
    verify->add_option("--jobs", opts.jobs);
    verify->add_option("--seed", opts.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (product->parsed()) return run_product(prod_args, arg_x, arg_y, out);
        if (coproduct->parsed()) return run_coproduct(cop_args, cop_x, out);
        if (convert->parsed()) return run_convert(conv_algebra, conv_from, conv_to, conv_x, out);
        if (sequence->parsed()) return run_sequence(seq_generators, seq_stat, seq_limit, out);
        if (enumerate->parsed())
            return run_enumerate(enum_generators, enum_by, enum_limit, enum_stat, out);
        if (embed->parsed()) {
            if (embed_gpi->parsed()) {
                Diagram g = g_pi(parse_set_partition(embed_x));
                if (out.format == "json")
                    std::cout << to_json(g).dump() << "\n";
                else
                    std::cout << to_text(g) << "\n";
                return kExitPass;
            }
            if (embed_colset->parsed()) {
                EtaRanking eta(parse_generators(embed_generators));
                ColoredPartition cs = colset(parse_diagram(embed_x), eta);
                if (out.format == "json")
                    std::cout << to_json(cs).dump() << "\n";
                else
                    std::cout << to_text(cs) << "\n";
                return kExitPass;
            }
            std::cerr << "embed: expected a g-pi or colset subcommand\n";
            return kExitUsage;
        }
        if (normal->parsed()) {
            NormalForm nf = normal_order(parse_boson_word(boson_word));
            if (out.format == "json")
                std::cout << normal_form_to_json_text(nf) << "\n";
            else
                std::cout << to_text(nf) << "\n";
            return kExitPass;
        }
        if (verify->parsed()) return run_verify(suite, opts);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitUsage;
}
