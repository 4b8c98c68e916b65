#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "letters.hpp"
#include "partitions.hpp"
#include "tableaux.hpp"

namespace sptab {

/// A word over the alphabet 1 < 1' < ... < n < n'.
struct Word {
    int n = 1;
    std::vector<Letter> letters;

    int size() const { return static_cast<int>(letters.size()); }

    friend bool operator==(const Word&, const Word&) = default;
};

/// A word whose letters carry standardization subscripts.
struct StandardizedWord {
    int n = 1;
    std::vector<SubscriptedLetter> letters;

    int size() const { return static_cast<int>(letters.size()); }

    friend bool operator==(const StandardizedWord&, const StandardizedWord&) = default;
};

/// Space-separated token form, e.g. "2 2' 1".
inline std::string format_word(const Word& w) {
    std::string out;
    for (const Letter& g : w.letters) {
        if (!out.empty()) out += ' ';
        out += to_token(g);
    }
    return out;
}

inline std::string format_word(const StandardizedWord& w) {
    std::string out;
    for (const SubscriptedLetter& g : w.letters) {
        if (!out.empty()) out += ' ';
        out += to_token(g);
    }
    return out;
}

inline void validate_word(const Word& w) {
    if (w.n < 1) throw DomainError("alphabet bound n must be at least 1");
    for (const Letter& g : w.letters)
        if (g.value < 1 || g.value > w.n)
            throw DomainError("letter " + to_token(g) + " outside alphabet bound n=" +
                              std::to_string(w.n));
}

/// The Q-symbol: a sequence of shapes starting at the empty partition, each
/// consecutive pair differing by exactly one box.
using UpDownTableau = std::vector<Partition>;

inline bool is_up_down_tableau(const UpDownTableau& q, int n) {
    if (q.empty() || !q.front().empty()) return false;
    for (std::size_t i = 0; i < q.size(); ++i) {
        if (!is_partition(q[i]) || length(q[i]) > n) return false;
        if (i > 0) {
            const CoverKind k = compare_cover(q[i - 1], q[i]).kind;
            if (k != CoverKind::Growth && k != CoverKind::Shrink) return false;
        }
    }
    return true;
}

enum class StepKind { Growth, Shrink };

/// What one insertion did to the shape: grew or shrank it, and in which row.
struct InsertionStep {
    StepKind kind = StepKind::Growth;
    int row = 0;

    friend bool operator==(const InsertionStep&, const InsertionStep&) = default;
};

template <class L>
struct InsertOutcome {
    Tableau<L> tableau;
    InsertionStep step;
    std::optional<int> cancelled;  ///< value k when a k-k' pair was erased
};

using BereleInsertResult = InsertOutcome<Letter>;
using StdBereleInsertResult = InsertOutcome<SubscriptedLetter>;

/// Berele insertion: Schensted bumping intercepted at the first event where a
/// letter k would bump k' out of row k.  At that event both letters are
/// erased — the incoming k vanishes and the hole left by k' slides to a
/// corner — and the shape shrinks by one box.
inline BereleInsertResult berele_insert(const SspTableau& t, Letter g, int n) {
    if (g.value < 1 || g.value > n)
        throw DomainError("letter " + to_token(g) + " outside alphabet bound n=" +
                          std::to_string(n));
    if (!is_symplectic(t, n)) throw NotSymplectic("input tableau is not symplectic");

    SspTableau cur = t;
    Letter x = g;
    for (int r = 1;; ++r) {
        if (r > cur.row_count()) {
            cur.rows.push_back({x});
            return {std::move(cur), {StepKind::Growth, r}, std::nullopt};
        }
        auto& row = cur.rows[r - 1];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            return {std::move(cur), {StepKind::Growth, r}, std::nullopt};
        }
        if (!x.barred && x.value == r && *it == barred(r)) {
            const int c = static_cast<int>(it - row.begin()) + 1;
            auto slid = slide_to_corner(make_punctured(cur, Box{r, c}));
            return {std::move(slid.tableau), {StepKind::Shrink, slid.corner.row}, r};
        }
        std::swap(x, *it);
    }
}

/// The (P, Q) pair produced by the correspondence.
struct BerelePair {
    SspTableau p;
    UpDownTableau q;

    friend bool operator==(const BerelePair&, const BerelePair&) = default;
};

/// Correspondence output plus the per-step record and the cancellation counts
/// c_w(γ) accumulated along the fold.
struct CorrespondenceResult {
    SspTableau p;
    UpDownTableau q;
    std::vector<InsertionStep> steps;
    std::map<Letter, int> cancel_counts;

    BerelePair pair() const { return BerelePair{p, q}; }
};

inline CorrespondenceResult berele_correspondence(const Word& w) {
    validate_word(w);
    CorrespondenceResult out;
    out.q.push_back({});
    for (const Letter& g : w.letters) {
        auto step = berele_insert(out.p, g, w.n);
        out.p = std::move(step.tableau);
        out.q.push_back(out.p.shape());
        out.steps.push_back(step.step);
        if (step.cancelled) {
            ++out.cancel_counts[unbarred(*step.cancelled)];
            ++out.cancel_counts[barred(*step.cancelled)];
        }
    }
    return out;
}

/// Standardization of a word plus the position of each subscripted letter in
/// the induced total order (1-based).
struct StandardizationResult {
    StandardizedWord word;
    std::map<SubscriptedLetter, int> ord;
};

/// Subscripts each letter's occurrences 1, 2, ... left to right; ord is the
/// unique order-preserving bijection onto 1..f.
inline StandardizationResult standardize_word(const Word& w) {
    validate_word(w);
    StandardizationResult out;
    out.word.n = w.n;
    std::map<Letter, int> counts;
    for (const Letter& g : w.letters)
        out.word.letters.push_back(SubscriptedLetter{g, ++counts[g]});
    int pos = 0;
    for (int r = 0; r < 2 * w.n; ++r) {
        const Letter g = letter_of_rank(r);
        for (int s = 1; s <= counts[g]; ++s) out.ord[SubscriptedLetter{g, s}] = ++pos;
    }
    return out;
}

inline void validate_standardized_word(const StandardizedWord& w) {
    if (w.n < 1) throw DomainError("alphabet bound n must be at least 1");
    std::map<Letter, int> counts;
    for (const SubscriptedLetter& s : w.letters) {
        if (s.letter.value < 1 || s.letter.value > w.n)
            throw DomainError("letter " + to_token(s) + " outside alphabet bound n=" +
                              std::to_string(w.n));
        if (s.subscript != ++counts[s.letter])
            throw NotStandardized("subscripts of " + to_token(s.letter) +
                                  " do not run 1,2,... left to right");
    }
}

/// Standardized Berele insertion: ordinary bumping over distinct subscripted
/// letters; violations are judged on the underlying letters.  On cancellation
/// the incoming k_s takes the cell of the discarded k'_t, and the smallest k —
/// the one at the bottom of column 1, which is k_s itself iff that cell is
/// (k,1) — is removed, its hole sliding to a corner.
inline StdBereleInsertResult std_berele_insert(const StandardizedTableau& t,
                                               SubscriptedLetter x0, int n) {
    if (x0.letter.value < 1 || x0.letter.value > n)
        throw DomainError("letter " + to_token(x0) + " outside alphabet bound n=" +
                          std::to_string(n));
    if (!is_symplectic(t, n)) throw NotSymplectic("input tableau is not symplectic");
    std::set<SubscriptedLetter> seen;
    for (const auto& row : t.rows)
        for (const auto& e : row)
            if (!seen.insert(e).second)
                throw NotStandardized("duplicate entry " + to_token(e) + " in tableau");
    if (seen.count(x0))
        throw NotStandardized("inserted letter " + to_token(x0) + " already present");

    StandardizedTableau cur = t;
    SubscriptedLetter x = x0;
    for (int r = 1;; ++r) {
        if (r > cur.row_count()) {
            cur.rows.push_back({x});
            return {std::move(cur), {StepKind::Growth, r}, std::nullopt};
        }
        auto& row = cur.rows[r - 1];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            return {std::move(cur), {StepKind::Growth, r}, std::nullopt};
        }
        if (!x.letter.barred && x.letter.value == r && base_letter(*it) == barred(r)) {
            *it = x;  // k_s replaces the discarded k'_t
            auto slid = slide_to_corner(make_punctured(cur, Box{r, 1}));
            return {std::move(slid.tableau), {StepKind::Shrink, slid.corner.row}, r};
        }
        std::swap(x, *it);
    }
}

struct StdCorrespondenceResult {
    StandardizedTableau p;
    UpDownTableau q;
    std::vector<InsertionStep> steps;
};

inline StdCorrespondenceResult std_berele_correspondence(const StandardizedWord& w) {
    validate_standardized_word(w);
    StdCorrespondenceResult out;
    out.q.push_back({});
    for (const SubscriptedLetter& s : w.letters) {
        auto step = std_berele_insert(out.p, s, w.n);
        out.p = std::move(step.tableau);
        out.q.push_back(out.p.shape());
        out.steps.push_back(step.step);
    }
    return out;
}

/// Strips subscripts from every entry.
inline SspTableau erase_subscripts(const StandardizedTableau& t) {
    SspTableau out;
    for (const auto& row : t.rows) {
        std::vector<Letter> r;
        r.reserve(row.size());
        for (const auto& e : row) r.push_back(e.letter);
        out.rows.push_back(std::move(r));
    }
    return out;
}

/// Standardizes a P-symbol directly: each letter γ's occurrences, read left to
/// right, receive subscripts cancel(γ)+1 .. mult(γ).  Occurrence counts must
/// satisfy m_P(γ) = mult(γ) - cancel(γ).
inline StandardizedTableau standardize_tableau(const SspTableau& p,
                                               const std::map<Letter, int>& cancel_counts,
                                               const std::map<Letter, int>& mult) {
    auto get = [](const std::map<Letter, int>& m, Letter g) {
        auto it = m.find(g);
        return it == m.end() ? 0 : it->second;
    };
    std::set<Letter> letters;
    for (const auto& [g, c] : cancel_counts) letters.insert(g);
    for (const auto& [g, c] : mult) letters.insert(g);
    for (const auto& row : p.rows)
        for (const Letter& g : row) letters.insert(g);

    StandardizedTableau out;
    for (const auto& row : p.rows)
        out.rows.push_back(std::vector<SubscriptedLetter>(row.size()));

    for (const Letter& g : letters) {
        // occurrences of g ordered by column; they form a horizontal strip
        std::vector<Box> occ;
        for (int i = 1; i <= p.row_count(); ++i)
            for (int j = 1; j <= p.row_length(i); ++j)
                if (p.at(i, j) == g) occ.push_back(Box{i, j});
        std::sort(occ.begin(), occ.end(),
                  [](Box a, Box b) { return a.col < b.col; });
        const int c = get(cancel_counts, g);
        const int m = get(mult, g);
        if (static_cast<int>(occ.size()) != m - c)
            throw CountMismatch("letter " + to_token(g) + ": tableau has " +
                                std::to_string(occ.size()) + " occurrences, expected " +
                                std::to_string(m - c));
        int sub = c;
        for (const Box& b : occ) out.at(b.row, b.col) = SubscriptedLetter{g, ++sub};
    }
    return out;
}

}  // namespace sptab
