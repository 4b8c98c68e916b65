#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <vector>

#include "errors.hpp"
#include "letters.hpp"
#include "partitions.hpp"

namespace sptab {

/// A filling of a Young diagram, stored row-major.  One type serves both the
/// plain and the subscripted alphabet; the algorithms that care about the
/// symplectic condition read the underlying letter via base_letter() and
/// ignore subscripts.
template <class L>
struct Tableau {
    std::vector<std::vector<L>> rows;

    Partition shape() const {
        Partition s;
        s.reserve(rows.size());
        for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
        return s;
    }

    bool empty() const { return rows.empty(); }

    int row_count() const { return static_cast<int>(rows.size()); }

    int row_length(int row) const {
        return (row >= 1 && row <= row_count()) ? static_cast<int>(rows[row - 1].size()) : 0;
    }

    /// 1-based access; the box must exist.
    const L& at(int row, int col) const { return rows[row - 1][col - 1]; }
    L& at(int row, int col) { return rows[row - 1][col - 1]; }

    friend bool operator==(const Tableau&, const Tableau&) = default;
};

using SspTableau = Tableau<Letter>;
using StandardizedTableau = Tableau<SubscriptedLetter>;

/// Rows weakly increase left to right, columns strictly increase top to
/// bottom, and the row lengths form a partition.
template <class L>
bool is_semistandard(const Tableau<L>& t) {
    if (!is_partition(t.shape())) return false;
    for (int i = 1; i <= t.row_count(); ++i) {
        for (int j = 1; j <= t.row_length(i); ++j) {
            if (j > 1 && t.at(i, j) < t.at(i, j - 1)) return false;
            if (i > 1 && j <= t.row_length(i - 1) && !(t.at(i - 1, j) < t.at(i, j)))
                return false;
        }
    }
    return true;
}

/// Semistandard, at most n rows, and every entry of row i is at least the
/// unbarred letter i (subscripts ignored) with value at most n.
template <class L>
bool is_symplectic(const Tableau<L>& t, int n) {
    if (!is_semistandard(t)) return false;
    if (t.row_count() > n) return false;
    for (int i = 1; i <= t.row_count(); ++i)
        for (int j = 1; j <= t.row_length(i); ++j) {
            const Letter g = base_letter(t.at(i, j));
            if (g < unbarred(i) || g.value > n) return false;
        }
    return true;
}

/// One displacement along a bumping route.
template <class L>
struct BumpStep {
    int row = 0;
    int col = 0;
    L bumped{};  ///< the entry that was pushed out of (row, col)

    friend bool operator==(const BumpStep&, const BumpStep&) = default;
};

/// The full route of one row insertion: every displacement plus the box where
/// the final letter came to rest.
template <class L>
struct BumpTrace {
    std::vector<BumpStep<L>> bumps;
    Box rest;

    friend bool operator==(const BumpTrace&, const BumpTrace&) = default;
};

template <class L>
struct RowInsertResult {
    Tableau<L> tableau;
    BumpTrace<L> trace;
};

/// Schensted row insertion: in each row the inserted letter replaces the
/// leftmost strictly larger entry, which is bumped into the next row; a letter
/// with no larger entry to its right comes to rest at the row's end.
template <class L>
RowInsertResult<L> row_insert(const Tableau<L>& t, const L& inserted) {
    RowInsertResult<L> out{t, {}};
    L x = inserted;
    for (int r = 1;; ++r) {
        if (r > out.tableau.row_count()) {
            out.tableau.rows.push_back({x});
            out.trace.rest = Box{r, 1};
            return out;
        }
        auto& row = out.tableau.rows[r - 1];
        auto it = std::upper_bound(row.begin(), row.end(), x);
        if (it == row.end()) {
            row.push_back(x);
            out.trace.rest = Box{r, static_cast<int>(row.size())};
            return out;
        }
        const int c = static_cast<int>(it - row.begin()) + 1;
        out.trace.bumps.push_back(BumpStep<L>{r, c, *it});
        std::swap(x, *it);
    }
}

/// A tableau with one box of its shape left empty.  The shape includes the
/// hole box; the stored cell at the hole position is meaningless.
template <class L>
struct PuncturedTableau {
    Partition shape;
    Box hole;
    std::vector<std::vector<L>> cells;

    const L& at(int row, int col) const { return cells[row - 1][col - 1]; }
    L& at(int row, int col) { return cells[row - 1][col - 1]; }

    friend bool operator==(const PuncturedTableau& a, const PuncturedTableau& b) {
        if (a.shape != b.shape || a.hole != b.hole) return false;
        for (int i = 1; i <= length(a.shape); ++i)
            for (int j = 1; j <= part(a.shape, i); ++j) {
                if (Box{i, j} == a.hole) continue;
                if (!(a.at(i, j) == b.at(i, j))) return false;
            }
        return true;
    }
};

/// Punctures `t` at `hole`, discarding the entry stored there.
template <class L>
PuncturedTableau<L> make_punctured(const Tableau<L>& t, Box hole) {
    const Partition sh = t.shape();
    if (!contains(sh, hole))
        throw DomainError("hole " + std::to_string(hole.row) + "," +
                          std::to_string(hole.col) + " outside tableau shape");
    return PuncturedTableau<L>{sh, hole, t.rows};
}

template <class L>
bool hole_is_at_corner(const PuncturedTableau<L>& t) {
    return !contains(t.shape, Box{t.hole.row + 1, t.hole.col}) &&
           !contains(t.shape, Box{t.hole.row, t.hole.col + 1});
}

/// One jeu-de-taquin step: of the entries below and to the right of the hole,
/// the smaller one moves into the hole (the below entry on ties).
template <class L>
PuncturedTableau<L> jdt_slide(const PuncturedTableau<L>& t) {
    const Box below{t.hole.row + 1, t.hole.col};
    const Box right{t.hole.row, t.hole.col + 1};
    const bool has_below = contains(t.shape, below);
    const bool has_right = contains(t.shape, right);
    if (!has_below && !has_right) throw HoleAtCorner("hole has no below/right neighbor");

    Box from = below;
    if (!has_below) {
        from = right;
    } else if (has_right && t.at(right.row, right.col) < t.at(below.row, below.col)) {
        from = right;
    }
    PuncturedTableau<L> out = t;
    out.at(t.hole.row, t.hole.col) = t.at(from.row, from.col);
    out.hole = from;
    return out;
}

template <class L>
struct SlideResult {
    Tableau<L> tableau;
    Box corner;  ///< where the hole came to rest
};

/// Slides the hole until it rests at a corner, then removes that box.
template <class L>
SlideResult<L> slide_to_corner(const PuncturedTableau<L>& start) {
    PuncturedTableau<L> t = start;
    while (!hole_is_at_corner(t)) t = jdt_slide(t);
    Tableau<L> filled{t.cells};
    filled.rows[t.hole.row - 1].pop_back();
    if (filled.rows[t.hole.row - 1].empty()) filled.rows.erase(filled.rows.begin() + (t.hole.row - 1));
    return SlideResult<L>{std::move(filled), t.hole};
}

template <class L>
struct ColumnDeleteResult {
    Tableau<L> tableau;
    Box vacated;  ///< the box removed from the shape, bottom of column c
};

/// Column deletion of the letter k at a chosen corner (r, c): the bottoms of
/// columns 1..c must all carry k.  Removes the k at the bottom of column 1
/// (the smallest k) and shifts each bottom-of-column k in columns 2..c one
/// column left, vacating (r, c).  With subscripts erased this simply deletes
/// the k at (r, c).  The corner is a genuine parameter: several corners can
/// admit a legal deletion of the same letter, with different results.
template <class L>
ColumnDeleteResult<L> column_delete(const Tableau<L>& t, int k, Box vacated) {
    const Partition sh = t.shape();
    // column j's bottom row = number of parts >= j
    auto column_length = [&](int j) {
        int len = 0;
        while (len < length(sh) && part(sh, len + 1) >= j) ++len;
        return len;
    };
    const int c = vacated.col;
    if (c < 1 || c > part(sh, 1) || column_length(c) != vacated.row ||
        part(sh, vacated.row) != c)
        throw DomainError("vacated box is not a corner of the shape");
    for (int j = 1; j <= c; ++j)
        if (!(base_letter(t.at(column_length(j), j)) == unbarred(k)))
            throw MissingK("bottom of column " + std::to_string(j) +
                           " does not carry the letter " + std::to_string(k));

    ColumnDeleteResult<L> out{t, vacated};
    for (int j = 2; j <= c; ++j)
        out.tableau.at(column_length(j - 1), j - 1) = t.at(column_length(j), j);
    out.tableau.rows[vacated.row - 1].pop_back();
    if (out.tableau.rows[vacated.row - 1].empty())
        out.tableau.rows.erase(out.tableau.rows.begin() + (vacated.row - 1));
    if (!is_semistandard(out.tableau))
        throw DomainError("column deletion at this corner breaks the tableau");
    return out;
}

/// Column deletion at the canonical corner: the end of the longest prefix of
/// columns whose bottom entry is k, which must be a corner of the shape.
template <class L>
ColumnDeleteResult<L> column_delete(const Tableau<L>& t, int k) {
    const Partition sh = t.shape();
    auto column_length = [&](int j) {
        int len = 0;
        while (len < length(sh) && part(sh, len + 1) >= j) ++len;
        return len;
    };
    if (t.empty() || !(base_letter(t.at(column_length(1), 1)) == unbarred(k)))
        throw MissingK("bottom of column 1 does not carry the letter " + std::to_string(k));

    int c = 1;
    while (c < part(sh, 1) && base_letter(t.at(column_length(c + 1), c + 1)) == unbarred(k)) ++c;
    if (part(sh, column_length(c)) != c)  // (r, c) must be a corner
        throw DomainError("bottom-of-column run of " + std::to_string(k) +
                          " does not end at a corner");
    return column_delete(t, k, Box{column_length(c), c});
}

/// Number of occurrences of the plain letter γ (subscripts ignored).
template <class L>
int multiplicity(const Tableau<L>& t, Letter g) {
    int m = 0;
    for (const auto& row : t.rows)
        for (const auto& e : row)
            if (base_letter(e) == g) ++m;
    return m;
}

/// Exponent vector of the weight monomial: entry k-1 is m_T(k) - m_T(k').
template <class L>
std::vector<int> weight_monomial(const Tableau<L>& t, int n) {
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    for (int k = 1; k <= n; ++k)
        exps[k - 1] = multiplicity(t, unbarred(k)) - multiplicity(t, barred(k));
    return exps;
}

}  // namespace sptab
