#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "berele.hpp"
#include "errors.hpp"
#include "growth_grid.hpp"
#include "reverse.hpp"
#include "tableaux.hpp"

namespace sptab {

/// Calls fn with every word of length f over the 2n-letter alphabet, in
/// lexicographic order of letter ranks.
template <class F>
void for_each_word(int n, int f, F&& fn) {
    if (n < 1) throw DomainError("alphabet bound n must be at least 1");
    if (f < 0) throw DomainError("word length must be nonnegative");
    Word w;
    w.n = n;
    w.letters.assign(f, unbarred(1));
    std::vector<int> ranks(f, 0);
    while (true) {
        for (int i = 0; i < f; ++i) w.letters[i] = letter_of_rank(ranks[i]);
        fn(static_cast<const Word&>(w));
        int i = f - 1;
        while (i >= 0 && ranks[i] == 2 * n - 1) ranks[i--] = 0;
        if (i < 0) break;
        ++ranks[i];
    }
}

inline std::vector<Word> enumerate_words(int n, int f) {
    std::vector<Word> out;
    for_each_word(n, f, [&](const Word& w) { out.push_back(w); });
    long long expected = 1;
    for (int i = 0; i < f; ++i) expected *= 2LL * n;
    if (static_cast<long long>(out.size()) != expected)
        throw Error("word enumeration produced the wrong count");
    return out;
}

/// All symplectic tableaux of the given shape over the 2n-letter alphabet,
/// found by backtracking over cells in row-major order.
inline std::vector<SspTableau> enumerate_sp_tableaux(int n, const Partition& shape) {
    if (n < 1) throw DomainError("alphabet bound n must be at least 1");
    if (!is_partition(shape)) throw DomainError("shape is not a partition");
    if (length(shape) > n) throw ShapeTooLong("shape has more rows than n");

    std::vector<SspTableau> out;
    const int rows = length(shape);
    SspTableau t;
    t.rows.resize(rows);
    for (int i = 0; i < rows; ++i) t.rows[i].assign(part(shape, i + 1), Letter{});

    std::vector<Box> cells;
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= part(shape, i); ++j) cells.push_back(Box{i, j});

    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            out.push_back(t);
            return;
        }
        const auto [i, j] = cells[idx];
        int lo = rank(unbarred(i));  // symplectic row condition
        if (j > 1) lo = std::max(lo, rank(t.at(i, j - 1)));
        if (i > 1) lo = std::max(lo, rank(t.at(i - 1, j)) + 1);
        for (int r = lo; r <= 2 * n - 1; ++r) {
            t.rows[i - 1][j - 1] = letter_of_rank(r);
            self(self, idx + 1);
        }
    };
    rec(rec, 0);
    return out;
}

/// All up-down tableaux of f steps ending at the given shape, with at most n
/// rows throughout.
inline std::vector<UpDownTableau> enumerate_updown(int n, int f, const Partition& end) {
    if (n < 1) throw DomainError("alphabet bound n must be at least 1");
    if (f < 0) throw DomainError("length must be nonnegative");
    if (!is_partition(end)) throw DomainError("end shape is not a partition");

    std::vector<UpDownTableau> out;
    UpDownTableau cur;
    cur.push_back({});
    auto dist = [&](const Partition& s) {
        int d = 0;
        const int rows = std::max(length(s), length(end));
        for (int r = 1; r <= rows; ++r) d += std::abs(part(s, r) - part(end, r));
        return d;
    };
    auto rec = [&](auto&& self, int left) -> void {
        const Partition s = cur.back();  // copy: push_back below reallocates
        const int d = dist(s);
        if (d > left || (left - d) % 2 != 0) return;
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int r = 1; r <= n; ++r) {
            if (r > 1 && part(s, r - 1) == part(s, r)) continue;
            cur.push_back(add_box(s, r));
            self(self, left - 1);
            cur.pop_back();
        }
        for (const Box& b : corners(s)) {
            cur.push_back(remove_box(s, b.row));
            self(self, left - 1);
            cur.pop_back();
        }
    };
    rec(rec, f);
    return out;
}

/// All partitions with the given bounds, smallest weights first.
inline std::vector<Partition> partitions_up_to(int max_weight, int max_rows) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        out.push_back(cur);
        if (static_cast<int>(cur.size()) == max_rows) return;
        for (int p = std::min(cap, remaining); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, max_weight, max_weight);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (weight(a) != weight(b)) return weight(a) < weight(b);
        return a < b;
    });
    return out;
}

/// Every valid (P, Q) pair: a symplectic tableau of some shape λ together
/// with an up-down tableau of f steps ending at λ.
inline std::vector<BerelePair> enumerate_pairs(int n, int f) {
    std::vector<BerelePair> out;
    for (const Partition& lam : partitions_up_to(f, n)) {
        if ((f - weight(lam)) % 2 != 0) continue;
        const auto tabs = enumerate_sp_tableaux(n, lam);
        if (tabs.empty()) continue;
        const auto uds = enumerate_updown(n, f, lam);
        for (const auto& u : uds)
            for (const auto& t : tabs) out.push_back(BerelePair{t, u});
    }
    return out;
}

struct Failure {
    std::string word;
    std::string check;
    std::string detail;
};

struct VerificationReport {
    int n = 0;
    int f = 0;
    long long checked = 0;
    std::vector<Failure> failures;
};

namespace detail {

inline std::string serialize_pair(const SspTableau& p, const UpDownTableau& q) {
    std::string s;
    for (const auto& row : p.rows) {
        for (const Letter& g : row) s += to_token(g) + " ";
        s += "/";
    }
    s += "|";
    for (const Partition& sh : q) s += to_string(sh) + " ";
    return s;
}

/// Shapes sh(P(w(i, j))) for all 0 ≤ i, j ≤ f, where w(i, j) keeps the first
/// j letters whose standardized order is at most i.
inline std::vector<std::vector<Partition>> bumping_vertex_shapes(const Word& w) {
    const int f = w.size();
    const auto st = standardize_word(w);
    std::vector<int> ord_of_pos(f);
    for (int j = 0; j < f; ++j) ord_of_pos[j] = st.ord.at(st.word.letters[j]);

    std::vector<std::vector<Partition>> out(f + 1, std::vector<Partition>(f + 1));
    for (int i = 0; i <= f; ++i)
        for (int j = 0; j <= f; ++j) {
            Word sub;
            sub.n = w.n;
            for (int k = 0; k < j; ++k)
                if (ord_of_pos[k] <= i) sub.letters.push_back(w.letters[k]);
            out[i][j] = berele_correspondence(sub).p.shape();
        }
    return out;
}

/// P-symbol of the subword w(i, j); see bumping_vertex_shapes.
inline SspTableau bumping_vertex_tableau(const Word& w, const std::vector<int>& ord_of_pos,
                                         int i, int j) {
    Word sub;
    sub.n = w.n;
    for (int k = 0; k < j; ++k)
        if (ord_of_pos[k] <= i) sub.letters.push_back(w.letters[k]);
    return berele_correspondence(sub).p;
}

/// Standardized P-symbol of the subword w(i, j), built by replaying the
/// subscripted insertions.
inline StandardizedTableau std_vertex_tableau(const StandardizedWord& sw,
                                              const std::vector<int>& ord_of_pos, int i,
                                              int j) {
    StandardizedTableau t;
    for (int k = 0; k < j; ++k)
        if (ord_of_pos[k] <= i) t = std_berele_insert(t, sw.letters[k], sw.n).tableau;
    return t;
}

}  // namespace detail

/// Insertion output is a valid pair: P symplectic, Q an up-down tableau of
/// matching final shape, and each recorded step matches the shape change.
inline std::vector<Failure> check_forward(const Word& w) {
    std::vector<Failure> out;
    const std::string ws = format_word(w);
    const auto res = berele_correspondence(w);
    if (!is_semistandard(res.p) || !is_symplectic(res.p, w.n))
        out.push_back({ws, "forward-valid", "P is not a symplectic tableau"});
    if (!is_up_down_tableau(res.q, w.n))
        out.push_back({ws, "forward-valid", "Q is not an up-down tableau"});
    if (res.q.size() != static_cast<std::size_t>(w.size()) + 1)
        out.push_back({ws, "forward-valid", "Q has the wrong number of shapes"});
    else if (res.p.shape() != res.q.back())
        out.push_back({ws, "forward-valid", "sh(P) differs from the last shape of Q"});
    for (std::size_t i = 1; i < res.q.size(); ++i) {
        const auto rel = compare_cover(res.q[i - 1], res.q[i]);
        const auto& step = res.steps[i - 1];
        const CoverKind want =
            step.kind == StepKind::Growth ? CoverKind::Growth : CoverKind::Shrink;
        if (rel.kind != want || rel.row != step.row) {
            out.push_back({ws, "forward-valid", "step " + std::to_string(i) +
                                                    " does not match the shape change"});
            break;
        }
    }
    return out;
}

/// The growth grid reproduces the insertion pair.
inline std::vector<Failure> check_grid_agreement(const Word& w) {
    std::vector<Failure> out;
    const std::string ws = format_word(w);
    const auto res = berele_correspondence(w);
    const ShapeGrid g = fill_grid(picture_of(w));
    try {
        if (extract_q(g) != res.q)
            out.push_back({ws, "grid-q", "grid bottom edge differs from Q"});
        if (extract_p(g) != res.p)
            out.push_back({ws, "grid-p", "grid right edge decodes to a different P"});
    } catch (const DomainError& e) {
        out.push_back({ws, "grid-p", std::string("extraction failed: ") + e.what()});
    }
    return out;
}

/// Standardizing the word commutes with the correspondence: same Q, and the
/// standardized P carries the predicted subscripts.
inline std::vector<Failure> check_standardization(const Word& w) {
    std::vector<Failure> out;
    const std::string ws = format_word(w);
    const auto res = berele_correspondence(w);
    const auto std_res = std_berele_correspondence(standardize_word(w).word);
    if (std_res.q != res.q)
        out.push_back({ws, "standardization", "standardized Q differs"});
    if (erase_subscripts(std_res.p) != res.p)
        out.push_back({ws, "standardization", "standardized P has different letters"});
    std::map<Letter, int> mult;
    for (const Letter& g : w.letters) ++mult[g];
    try {
        if (standardize_tableau(res.p, res.cancel_counts, mult) != std_res.p)
            out.push_back({ws, "standardization", "subscripts differ from prediction"});
    } catch (const CountMismatch& e) {
        out.push_back({ws, "standardization", std::string("count mismatch: ") + e.what()});
    }
    int cancelled = 0;
    for (const auto& [g, c] : res.cancel_counts) cancelled += c;
    if (cancelled != w.size() - weight(res.p.shape()))
        out.push_back({ws, "standardization", "cancellation count does not match f-|sh(P)|"});
    return out;
}

/// The reverse algorithm recovers the word from its pair.
inline std::vector<Failure> check_reverse(const Word& w) {
    std::vector<Failure> out;
    const std::string ws = format_word(w);
    const auto res = berele_correspondence(w);
    try {
        const Word back = reverse_correspondence(res.p, res.q, w.n);
        if (!(back == w))
            out.push_back({ws, "reverse", "round trip produced " + format_word(back)});
    } catch (const DomainError& e) {
        out.push_back({ws, "reverse", std::string("round trip threw: ") + e.what()});
    }
    return out;
}

/// Structural invariants of the filled grid: covers everywhere, stratum row
/// bounds, shrink edges only in barred rows, the row template with its marks,
/// one cross per row and column, and cell-level backward consistency.
inline std::vector<Failure> check_grid_invariants(const Word& w) {
    std::vector<Failure> out;
    const std::string ws = format_word(w);
    const int f = w.size();
    const ShapeGrid g = fill_grid(picture_of(w));

    auto vrel = [&](int i, int j) { return compare_cover(g.vertex(i - 1, j), g.vertex(i, j)); };

    for (int i = 0; i <= f; ++i)
        for (int j = 0; j <= f; ++j) {
            if (i > 0 && vrel(i, j).kind == CoverKind::Unrelated)
                out.push_back({ws, "grid-covers", "unrelated vertical edge"});
            if (j > 0 &&
                compare_cover(g.vertex(i, j - 1), g.vertex(i, j)).kind == CoverKind::Unrelated)
                out.push_back({ws, "grid-covers", "unrelated horizontal edge"});
        }

    for (int i = 1; i <= f; ++i) {
        const Letter stratum = g.strat.row_letter(i);
        for (int j = 0; j <= f; ++j) {
            if (length(g.vertex(i, j)) > stratum.value)
                out.push_back({ws, "grid-row-bound",
                               "shape with more than " + std::to_string(stratum.value) +
                                   " rows in its stratum"});
            if (i > 0 && vrel(i, j).kind == CoverKind::Shrink && !stratum.barred)
                out.push_back({ws, "grid-barred-shrink",
                               "shrink edge in the unbarred " + to_token(stratum) +
                                   " stratum"});
        }
    }

    for (int j = 1; j <= f; ++j) {
        int crosses = 0;
        for (int i = 1; i <= f; ++i)
            if (g.mark(i, j) == CellMark::Cross) ++crosses;
        if (crosses != 1)
            out.push_back({ws, "grid-marks", "column without exactly one cross"});
    }

    for (int i = 1; i <= f; ++i) {
        int cross_col = 0, circle_col = 0, crosses = 0, circles = 0;
        for (int j = 1; j <= f; ++j) {
            if (g.mark(i, j) == CellMark::Cross) {
                ++crosses;
                cross_col = j;
            }
            if (g.mark(i, j) == CellMark::Circle) {
                ++circles;
                circle_col = j;
            }
        }
        if (crosses != 1 || circles > 1) {
            out.push_back({ws, "grid-marks", "row without one cross and at most one circle"});
            continue;
        }
        bool ok = true;
        for (int j = 0; j <= f && ok; ++j) {
            const CoverKind k = vrel(i, j).kind;
            CoverKind want;
            if (j < cross_col)
                want = CoverKind::Equal;
            else if (circles == 0 || j < circle_col)
                want = CoverKind::Growth;
            else
                want = CoverKind::Shrink;
            if (k != want) ok = false;
        }
        if (!ok)
            out.push_back({ws, "grid-template",
                           "row " + std::to_string(i) +
                               " is not equals, then growths, then shrinks"});
        const bool right_shrinks = vrel(i, f).kind == CoverKind::Shrink;
        if (right_shrinks != (circles == 1))
            out.push_back({ws, "grid-template",
                           "circle presence does not match a shrinking right edge"});
    }

    for (int i = 1; i <= f; ++i)
        for (int j = 1; j <= f; ++j) {
            try {
                const auto back = backward_rule(g.vertex(i - 1, j), g.vertex(i, j - 1),
                                                g.vertex(i, j), g.strat.row_letter(i));
                if (back.a != g.vertex(i - 1, j - 1) || back.mark != g.mark(i, j))
                    out.push_back({ws, "grid-backward",
                                   "backward rule disagrees at cell (" + std::to_string(i) +
                                       "," + std::to_string(j) + ")"});
            } catch (const DomainError& e) {
                out.push_back({ws, "grid-backward",
                               std::string("backward rule threw: ") + e.what()});
            }
        }

    // stacked shrinks keep their row order when walked left without marks
    for (int j = 1; j <= f; ++j)
        for (int i = 2; i <= f; ++i) {
            if (g.mark(i - 1, j) != CellMark::None || g.mark(i, j) != CellMark::None)
                continue;
            const auto top = vrel(i - 1, j), bot = vrel(i, j);
            const auto below =
                compare_cover(g.vertex(i, j - 1), g.vertex(i, j)).kind;
            if (below == CoverKind::Equal || below == CoverKind::Unrelated) continue;
            if (top.kind == CoverKind::Shrink && bot.kind == CoverKind::Shrink &&
                top.row <= bot.row) {
                const auto ltop = vrel(i - 1, j - 1), lbot = vrel(i, j - 1);
                if (ltop.kind != CoverKind::Shrink || lbot.kind != CoverKind::Shrink ||
                    ltop.row > lbot.row)
                    out.push_back({ws, "grid-shrink-order",
                                   "stacked shrinks lost their row order leftward"});
            }
            if (top.kind == CoverKind::Growth && bot.kind == CoverKind::Growth &&
                top.row >= bot.row) {
                const auto ltop = vrel(i - 1, j - 1), lbot = vrel(i, j - 1);
                if (ltop.kind != CoverKind::Growth || lbot.kind != CoverKind::Growth ||
                    ltop.row < lbot.row)
                    out.push_back({ws, "grid-growth-order",
                                   "stacked growths lost their row order leftward"});
            }
        }
    return out;
}

/// Vertex-level agreement: every grid shape equals the bumping shape of the
/// matching subword, and every shrink edge matches a bottom-row column
/// deletion of the subword tableau.
inline std::vector<Failure> check_vertex_level(const Word& w) {
    std::vector<Failure> out;
    const std::string ws = format_word(w);
    const int f = w.size();
    const ShapeGrid g = fill_grid(picture_of(w));
    const auto shapes = detail::bumping_vertex_shapes(w);
    for (int i = 0; i <= f && out.empty(); ++i)
        for (int j = 0; j <= f; ++j)
            if (shapes[i][j] != g.vertex(i, j)) {
                out.push_back({ws, "vertex-shapes",
                               "grid shape differs from subword bumping at (" +
                                   std::to_string(i) + "," + std::to_string(j) + ")"});
                break;
            }

    const auto st = standardize_word(w);
    std::vector<int> ord_of_pos(f);
    for (int j = 0; j < f; ++j) ord_of_pos[j] = st.ord.at(st.word.letters[j]);
    for (int i = 1; i <= f; ++i)
        for (int j = 0; j <= f; ++j) {
            const auto rel = compare_cover(g.vertex(i - 1, j), g.vertex(i, j));
            if (rel.kind != CoverKind::Shrink) continue;
            const int k = g.strat.row_letter(i).value;
            const Box d = diff_box(g.vertex(i, j), g.vertex(i - 1, j));
            const auto upper = detail::std_vertex_tableau(st.word, ord_of_pos, i - 1, j);
            const auto lower = detail::std_vertex_tableau(st.word, ord_of_pos, i, j);
            if (multiplicity(upper, barred(k)) != 0)
                out.push_back({ws, "column-delete",
                               "upper tableau of a shrink edge contains the barred letter"});
            try {
                const auto del = column_delete(upper, k, d);
                if (del.tableau != lower)
                    out.push_back({ws, "column-delete",
                                   "column deletion does not produce the lower tableau"});
            } catch (const DomainError& e) {
                out.push_back({ws, "column-delete",
                               std::string("column deletion threw: ") + e.what()});
            }
            if (erase_subscripts(lower) != detail::bumping_vertex_tableau(w, ord_of_pos, i, j))
                out.push_back({ws, "column-delete",
                               "standardized subword tableau differs from the plain one"});
        }
    return out;
}

/// All per-word checks.
inline std::vector<Failure> check_word(const Word& w, bool deep = true) {
    std::vector<Failure> out;
    auto take = [&](std::vector<Failure> v) {
        for (auto& x : v) out.push_back(std::move(x));
    };
    take(check_forward(w));
    take(check_grid_agreement(w));
    take(check_standardization(w));
    take(check_reverse(w));
    take(check_grid_invariants(w));
    if (deep) take(check_vertex_level(w));
    return out;
}

/// Runs every check over every word of length f, then the global injectivity
/// and counting checks. Scope is guarded: (2n)^f must stay within guard.
inline VerificationReport check_all(int n, int f, long long guard = 1000000) {
    if (n < 1) throw DomainError("alphabet bound n must be at least 1");
    if (f < 0) throw DomainError("word length must be nonnegative");
    long long total = 1;
    for (int i = 0; i < f; ++i) {
        total *= 2LL * n;
        if (total > guard)
            throw ScopeTooLarge("(2n)^f exceeds the verification guard of " +
                                std::to_string(guard));
    }

    VerificationReport rep;
    rep.n = n;
    rep.f = f;
    std::set<std::string> images;
    for_each_word(n, f, [&](const Word& w) {
        ++rep.checked;
        for (auto& fl : check_word(w)) rep.failures.push_back(std::move(fl));
        const auto res = berele_correspondence(w);
        if (!images.insert(detail::serialize_pair(res.p, res.q)).second)
            rep.failures.push_back(
                {format_word(w), "injectivity", "pair already produced by another word"});
    });

    long long lhs = 0;
    for (const Partition& lam : partitions_up_to(f, n)) {
        if ((f - weight(lam)) % 2 != 0) continue;
        const auto tabs = enumerate_sp_tableaux(n, lam);
        if (tabs.empty()) continue;
        lhs += static_cast<long long>(tabs.size()) *
               static_cast<long long>(enumerate_updown(n, f, lam).size());
    }
    if (lhs != total)
        rep.failures.push_back({"", "counting-identity",
                                "sum over shapes gives " + std::to_string(lhs) +
                                    ", expected " + std::to_string(total)});
    return rep;
}

}  // namespace sptab
