#pragma once

#include <optional>
#include <string>
#include <vector>

#include "berele.hpp"
#include "errors.hpp"
#include "growth_grid.hpp"
#include "tableaux.hpp"

namespace sptab {

/// Everything decided about the final step of the correspondence: which
/// stratum the bottom grid row belongs to, the previous P-symbol, and which
/// classification case applied.
struct LastStep {
    Letter stratum_letter;
    SspTableau p_prev;
    int case_tag = 0;  ///< 1..5
};

/// Report-style input hygiene for a (P, Q) pair; empty means valid.
inline std::vector<std::string> validate_pair(const SspTableau& p, const UpDownTableau& q,
                                              int n) {
    std::vector<std::string> out;
    if (n < 1) out.push_back("alphabet bound n must be at least 1");
    if (!is_semistandard(p)) {
        out.push_back("P is not semistandard");
    } else {
        if (p.row_count() > n) out.push_back("P has more than n rows");
        bool low = false, high = false;
        for (int i = 1; i <= p.row_count(); ++i)
            for (int j = 1; j <= p.row_length(i); ++j) {
                if (p.at(i, j) < unbarred(i)) low = true;
                if (p.at(i, j).value > n) high = true;
            }
        if (low) out.push_back("P violates the symplectic condition");
        if (high) out.push_back("P has letters beyond the alphabet bound");
    }
    if (q.empty() || !q.front().empty()) {
        out.push_back("Q must start with the empty partition");
    } else {
        bool covers = true, bounded = true;
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (!is_partition(q[i])) covers = false;
            if (length(q[i]) > n) bounded = false;
            if (i > 0) {
                const CoverKind k = compare_cover(q[i - 1], q[i]).kind;
                if (k != CoverKind::Growth && k != CoverKind::Shrink) covers = false;
            }
        }
        if (!covers) out.push_back("Q is not an up-down tableau");
        if (!bounded) out.push_back("Q contains a shape with more than n rows");
    }
    if (!q.empty() && p.shape() != q.back())
        out.push_back("shape of P differs from the last shape of Q");
    return out;
}

namespace detail {

inline void require_valid_pair(const SspTableau& p, const UpDownTableau& q, int n) {
    const auto violations = validate_pair(p, q, n);
    if (!violations.empty()) {
        std::string msg = "invalid pair:";
        for (const auto& v : violations) msg += " " + v + ";";
        throw InvalidPair(msg);
    }
}

/// Removes the rightmost occurrence of γ; for the largest letter of a
/// semistandard tableau this box is always a corner.
inline SspTableau remove_rightmost(const SspTableau& p, Letter g) {
    Box best{0, 0};
    for (int i = 1; i <= p.row_count(); ++i)
        for (int j = 1; j <= p.row_length(i); ++j)
            if (p.at(i, j) == g && j > best.col) best = Box{i, j};
    if (best.row == 0) throw InvalidPair("P does not contain the letter " + to_token(g));
    if (best.col != p.row_length(best.row) || p.row_length(best.row + 1) >= best.col)
        throw InvalidPair("rightmost " + to_token(g) + " is not a removable corner");
    SspTableau out = p;
    out.rows[best.row - 1].pop_back();
    if (out.rows[best.row - 1].empty()) out.rows.erase(out.rows.begin() + (best.row - 1));
    return out;
}

/// Adds an l to the bottom of the first column that has no l yet.
inline SspTableau add_to_first_free_column(const SspTableau& p, int l) {
    const Partition sh = p.shape();
    auto column_length = [&](int j) {
        int len = 0;
        while (len < length(sh) && part(sh, len + 1) >= j) ++len;
        return len;
    };
    for (int j = 1;; ++j) {
        bool has_l = false;
        for (int i = 1; i <= column_length(j); ++i)
            if (p.at(i, j) == unbarred(l)) has_l = true;
        if (has_l) continue;
        const int r = column_length(j) + 1;
        SspTableau out = p;
        if (r > out.row_count()) out.rows.push_back({});
        out.rows[r - 1].push_back(unbarred(l));
        return out;
    }
}

}  // namespace detail

/// Decides how the correspondence's final letter affected P, following the
/// five-way case analysis on l (the largest shape length in Q) and the
/// largest letter of P; cases 4/5 run the shrink-hypothesis walk over Q's
/// bottom row in the l'-stratum.
inline LastStep classify_last_step(const SspTableau& p, const UpDownTableau& q, int n) {
    detail::require_valid_pair(p, q, n);
    if (q.size() <= 1) throw EmptyWord("the pair encodes the empty word");

    int l = 0;
    for (const Partition& s : q) l = std::max(l, length(s));
    Letter gamma = unbarred(1);
    bool any = false;
    for (const auto& row : p.rows)
        for (const Letter& e : row) {
            if (!any || gamma < e) gamma = e;
            any = true;
        }
    const int m = any ? gamma.value : 0;

    if (m > l) return {gamma, detail::remove_rightmost(p, gamma), 1};
    if (multiplicity(p, barred(l)) > 0)
        return {barred(l), detail::remove_rightmost(p, barred(l)), 2};

    bool has_l_shrink = false;
    for (std::size_t i = 1; i < q.size(); ++i)
        if (compare_cover(q[i - 1], q[i]) == CoverRelation{CoverKind::Shrink, l})
            has_l_shrink = true;
    if (!has_l_shrink) return {unbarred(l), detail::remove_rightmost(p, unbarred(l)), 3};

    SspTableau pbar = detail::add_to_first_free_column(p, l);
    try {
        const auto row = reconstruct_row_backward(q, pbar.shape(), barred(l));
        if (!row.circle_col)
            throw InvalidPair("shrink hypothesis succeeded without a cancellation cell");
        return {barred(l), std::move(pbar), 5};
    } catch (const RowRejected&) {
        return {unbarred(l), detail::remove_rightmost(p, unbarred(l)), 4};
    }
}

/// One peeled level of the reverse recursion, for tracing and tests.
struct ReverseLevel {
    int f = 0;  ///< word length at this level
    int case_tag = 0;
    Letter stratum_letter;
    int cross_col = 0;
    std::optional<int> circle_col;
};

struct ReverseTrace {
    Word word;
    std::vector<ReverseLevel> levels;  ///< outermost (longest) level first
};

/// Recovers the word and the per-level classification record.
inline ReverseTrace reverse_correspondence_trace(const SspTableau& p0,
                                                 const UpDownTableau& q0, int n) {
    detail::require_valid_pair(p0, q0, n);
    ReverseTrace out;
    out.word.n = n;

    // peel from the longest level inward, then replay the insertions from the
    // innermost level outward to rebuild the word
    SspTableau p = p0;
    UpDownTableau q = q0;
    while (q.size() > 1) {
        const LastStep step = classify_last_step(p, q, n);
        RowReconstruction row;
        try {
            row = reconstruct_row_backward(q, step.p_prev.shape(), step.stratum_letter);
        } catch (const RowRejected& e) {
            throw InvalidPair(std::string("backward row rejected: ") + e.what());
        }
        if (row.top[row.cross_col - 1] != row.top[row.cross_col])
            throw InvalidPair("no duplicate pair at the x column");
        out.levels.push_back(ReverseLevel{static_cast<int>(q.size()) - 1, step.case_tag,
                                          step.stratum_letter, row.cross_col,
                                          row.circle_col});
        q = row.top;
        q.erase(q.begin() + row.cross_col);
        p = step.p_prev;
    }
    std::vector<Letter> word;
    for (auto it = out.levels.rbegin(); it != out.levels.rend(); ++it)
        word.insert(word.begin() + (it->cross_col - 1), it->stratum_letter);
    out.word.letters = std::move(word);
    return out;
}

/// Inverse of the correspondence: recovers w from (P, Q).
inline Word reverse_correspondence(const SspTableau& p, const UpDownTableau& q, int n) {
    return reverse_correspondence_trace(p, q, n).word;
}

}  // namespace sptab
