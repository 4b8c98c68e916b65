#pragma once

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "berele.hpp"
#include "errors.hpp"
#include "growth_grid.hpp"
#include "letters.hpp"
#include "oracle.hpp"
#include "partitions.hpp"
#include "tableaux.hpp"

namespace sptab {

/// Splits whitespace-separated letter tokens such as "2 2' 1".
inline Word parse_word(const std::string& text, int n) {
    Word w;
    w.n = n;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) w.letters.push_back(letter_from_token(tok));
    return w;
}

inline nlohmann::json parse_json(const std::string& text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

inline nlohmann::json partition_to_json(const Partition& p) {
    return nlohmann::json(p);
}

inline Partition partition_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("partition must be a JSON array");
    Partition p;
    for (const auto& e : j) {
        if (!e.is_number_integer()) throw ParseError("partition parts must be integers");
        p.push_back(e.get<int>());
    }
    if (!is_partition(p)) throw ParseError("parts must be positive and weakly decreasing");
    return p;
}

inline nlohmann::json tableau_to_json(const SspTableau& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json r = nlohmann::json::array();
        for (const Letter& g : row) r.push_back(to_token(g));
        rows.push_back(std::move(r));
    }
    return nlohmann::json{{"rows", std::move(rows)}};
}

inline SspTableau tableau_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array())
        throw ParseError("tableau must be an object with a rows array");
    SspTableau t;
    for (const auto& row : j["rows"]) {
        if (!row.is_array()) throw ParseError("tableau rows must be arrays");
        std::vector<Letter> r;
        for (const auto& e : row) {
            if (!e.is_string()) throw ParseError("tableau entries must be letter tokens");
            r.push_back(letter_from_token(e.get<std::string>()));
        }
        t.rows.push_back(std::move(r));
    }
    return t;
}

inline nlohmann::json updown_to_json(const UpDownTableau& q) {
    nlohmann::json out = nlohmann::json::array();
    for (const Partition& s : q) out.push_back(partition_to_json(s));
    return out;
}

inline UpDownTableau updown_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("up-down tableau must be a JSON array");
    UpDownTableau q;
    for (const auto& e : j) q.push_back(partition_from_json(e));
    return q;
}

inline nlohmann::json pair_to_json(const BerelePair& pq) {
    return nlohmann::json{{"p", tableau_to_json(pq.p)}, {"q", updown_to_json(pq.q)}};
}

inline BerelePair pair_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("q"))
        throw ParseError("pair must be an object with p and q");
    return BerelePair{tableau_from_json(j["p"]), updown_from_json(j["q"])};
}

inline nlohmann::json grid_to_json(const ShapeGrid& g) {
    nlohmann::json strata = nlohmann::json::array();
    for (int i = 1; i <= g.f;) {
        const Letter l = g.strat.row_letter(i);
        nlohmann::json rows = nlohmann::json::array();
        while (i <= g.f && g.strat.row_letter(i) == l) rows.push_back(i++);
        strata.push_back(nlohmann::json{{"letter", to_token(l)}, {"rows", std::move(rows)}});
    }
    nlohmann::json vertices = nlohmann::json::array();
    for (int i = 0; i <= g.f; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j <= g.f; ++j) row.push_back(partition_to_json(g.vertex(i, j)));
        vertices.push_back(std::move(row));
    }
    nlohmann::json cells = nlohmann::json::array();
    for (int i = 1; i <= g.f; ++i)
        for (int j = 1; j <= g.f; ++j)
            if (g.mark(i, j) != CellMark::None)
                cells.push_back(nlohmann::json{
                    {"row", i},
                    {"col", j},
                    {"mark", g.mark(i, j) == CellMark::Cross ? "x" : "o"}});
    return nlohmann::json{{"f", g.f},
                          {"strata", std::move(strata)},
                          {"vertices", std::move(vertices)},
                          {"cells", std::move(cells)}};
}

inline nlohmann::json report_to_json(const VerificationReport& r) {
    nlohmann::json fails = nlohmann::json::array();
    for (const Failure& fl : r.failures)
        fails.push_back(nlohmann::json{
            {"word", fl.word}, {"check", fl.check}, {"detail", fl.detail}});
    return nlohmann::json{
        {"n", r.n}, {"f", r.f}, {"checked", r.checked}, {"failures", std::move(fails)}};
}

inline std::string ascii_tableau(const SspTableau& t) {
    if (t.empty()) return "(empty)";
    std::string out;
    for (const auto& row : t.rows) {
        std::string line;
        for (const Letter& g : row) {
            if (!line.empty()) line += ' ';
            line += to_token(g);
        }
        out += line + "\n";
    }
    return out;
}

/// Compact shape label: "-" for empty, parts concatenated, commas only when a
/// part needs two digits.
inline std::string ascii_shape(const Partition& p) {
    if (p.empty()) return "-";
    bool wide = false;
    for (int x : p)
        if (x > 9) wide = true;
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (wide && i > 0) s += ',';
        s += std::to_string(p[i]);
    }
    return s;
}

/// Text rendering of the grid: vertex rows interleaved with mark rows, each
/// stratum row prefixed by its letter.
inline std::string ascii_grid(const ShapeGrid& g) {
    const int f = g.f;
    std::size_t w = 2;
    std::vector<std::vector<std::string>> lab(f + 1, std::vector<std::string>(f + 1));
    for (int i = 0; i <= f; ++i)
        for (int j = 0; j <= f; ++j) {
            lab[i][j] = ascii_shape(g.vertex(i, j));
            w = std::max(w, lab[i][j].size() + 2);
        }
    auto padded = [&](std::string s) {
        s.resize(w, ' ');
        return s;
    };
    std::string out;
    auto vertex_line = [&](int i) {
        std::string line = padded(i == 0 ? "" : to_token(g.strat.row_letter(i)));
        for (int j = 0; j <= f; ++j) line += padded(lab[i][j]);
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    };
    vertex_line(0);
    for (int i = 1; i <= f; ++i) {
        std::string marks(w + w / 2, ' ');
        bool any = false;
        for (int j = 1; j <= f; ++j) {
            if (g.mark(i, j) != CellMark::None) {
                const std::size_t pos = w + w / 2 + (j - 1) * w + w / 2;
                if (marks.size() < pos + 1) marks.resize(pos + 1, ' ');
                marks[pos] = g.mark(i, j) == CellMark::Cross ? 'x' : 'o';
                any = true;
            }
        }
        if (any) {
            while (!marks.empty() && marks.back() == ' ') marks.pop_back();
            out += marks + "\n";
        }
        vertex_line(i);
    }
    return out;
}

}  // namespace sptab
