// Command-line front end for the Berele correspondence: forward insertion,
// grid construction, reverse recovery, exhaustive verification, and word
// standardization.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <sptab/io.hpp>
#include <sptab/oracle.hpp>
#include <sptab/reverse.hpp>

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw sptab::ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_word_arg(const std::string& arg) {
    return arg == "-" ? slurp("-") : arg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Berele correspondence for the symplectic group"};
    app.require_subcommand(1);

    std::string word_text, pair_path = "-", format = "json";
    int n = 0, f = 0;
    long long guard = 1000000;

    auto* fwd = app.add_subcommand("forward", "word -> (P, Q) pair");
    fwd->add_option("word", word_text, "letters such as \"2 2' 1\", or - for stdin")
        ->required();
    fwd->add_option("--n", n, "alphabet bound")->required();
    fwd->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* rev = app.add_subcommand("reverse", "(P, Q) pair -> word");
    rev->add_option("pair", pair_path, "JSON pair file, or - for stdin");
    rev->add_option("--n", n, "alphabet bound")->required();

    auto* grd = app.add_subcommand("grid", "word -> growth grid");
    grd->add_option("word", word_text, "letters such as \"2 2' 1\", or - for stdin")
        ->required();
    grd->add_option("--n", n, "alphabet bound")->required();
    std::string grid_format = "ascii";
    grd->add_option("--format", grid_format, "ascii or json")
        ->check(CLI::IsMember({"ascii", "json"}));

    auto* ver = app.add_subcommand("verify", "exhaustively check all words of length f");
    ver->add_option("--n", n, "alphabet bound")->required();
    ver->add_option("--f", f, "word length")->required();
    ver->add_option("--guard", guard, "largest permitted word count");

    auto* std_cmd = app.add_subcommand("standardize", "attach subscripts to a word");
    std_cmd->add_option("word", word_text, "letters such as \"2 2' 1\", or - for stdin")
        ->required();
    std_cmd->add_option("--n", n, "alphabet bound (default: largest letter)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (fwd->parsed()) {
            const sptab::Word w = sptab::parse_word(read_word_arg(word_text), n);
            const auto res = sptab::berele_correspondence(w);
            if (format == "json") {
                std::cout << sptab::pair_to_json(res.pair()).dump() << "\n";
            } else {
                std::cout << "P:\n" << sptab::ascii_tableau(res.p) << "Q:";
                for (const auto& s : res.q) std::cout << " " << sptab::ascii_shape(s);
                std::cout << "\n";
            }
        } else if (rev->parsed()) {
            const auto pq = sptab::pair_from_json(sptab::parse_json(slurp(pair_path)));
            std::cout << sptab::format_word(sptab::reverse_correspondence(pq.p, pq.q, n))
                      << "\n";
        } else if (grd->parsed()) {
            const sptab::Word w = sptab::parse_word(read_word_arg(word_text), n);
            sptab::validate_word(w);
            const auto g = sptab::fill_grid(sptab::picture_of(w));
            if (grid_format == "json")
                std::cout << sptab::grid_to_json(g).dump() << "\n";
            else
                std::cout << sptab::ascii_grid(g);
        } else if (ver->parsed()) {
            const auto rep = sptab::check_all(n, f, guard);
            std::cout << sptab::report_to_json(rep).dump() << "\n";
            return rep.failures.empty() ? 0 : 1;
        } else if (std_cmd->parsed()) {
            sptab::Word w = sptab::parse_word(read_word_arg(word_text), std::max(n, 1));
            if (n == 0)
                for (const sptab::Letter& g : w.letters) w.n = std::max(w.n, g.value);
            std::cout << sptab::format_word(sptab::standardize_word(w).word) << "\n";
        }
    } catch (const sptab::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const sptab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
