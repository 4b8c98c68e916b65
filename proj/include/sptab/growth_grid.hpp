#pragma once

#include <cstdlib>
#include <optional>
#include <utility>
#include <vector>

#include "berele.hpp"
#include "errors.hpp"
#include "letters.hpp"
#include "partitions.hpp"
#include "tableaux.hpp"

namespace sptab {

/// Assignment of grid rows to letters: row i belongs to the stratum of
/// row_letter(i).  Rows of equal letters form contiguous blocks ordered by
/// the alphabet.
struct Stratification {
    int n = 1;
    std::vector<Letter> letters;  ///< index i-1 holds the letter of grid row i

    int f() const { return static_cast<int>(letters.size()); }
    Letter row_letter(int i) const { return letters[i - 1]; }

    friend bool operator==(const Stratification&, const Stratification&) = default;
};

inline Stratification stratification_of(const Word& w) {
    validate_word(w);
    std::map<Letter, int> counts;
    for (const Letter& g : w.letters) ++counts[g];
    Stratification st;
    st.n = w.n;
    for (int r = 0; r < 2 * w.n; ++r) {
        const Letter g = letter_of_rank(r);
        for (int i = 0; i < counts[g]; ++i) st.letters.push_back(g);
    }
    return st;
}

/// The picture of a word: an f×f cell array with one × per row and column.
/// The × of column j sits in the row whose position in the order of
/// subscripted letters matches the j-th letter of the standardized word.
struct Picture {
    Stratification strat;
    std::vector<int> cross_row_of_col;  ///< index j-1 holds the × row of column j

    int f() const { return static_cast<int>(cross_row_of_col.size()); }
    int cross_row(int col) const { return cross_row_of_col[col - 1]; }
};

inline Picture picture_of(const Word& w) {
    auto st = standardize_word(w);
    Picture pic;
    pic.strat = stratification_of(w);
    pic.cross_row_of_col.reserve(w.letters.size());
    for (const SubscriptedLetter& s : st.word.letters)
        pic.cross_row_of_col.push_back(st.ord.at(s));
    return pic;
}

enum class LocalRuleCase {
    CarryAll,    ///< A=B=C: D=A
    CarryVert,   ///< A=B≠C: the vertical change is carried right, D=C
    CarryHoriz,  ///< A=C≠B: the horizontal change is carried down, D=B
    Cross,       ///< × cell: A=B=C, D adds a box in row 1
    M,           ///< growths in different rows merge: D = B ∪ C
    R,           ///< equal growths in row k, stratum value > k: D adds a box in row k+1
    Circle,      ///< equal growths in row k, stratum value ≤ k: D=A, cell carries ○
    Jbar,        ///< growth meets adjacent shrink: D=A
    J,           ///< growth meets detached shrink: D = C plus the grown box
    JbarPrime,   ///< shrink meets adjacent growth: D=A
    JPrime,      ///< shrink meets detached growth: D = B plus the grown box
    W,           ///< shrinks in different rows meet: D = B ∩ C
    Ya           ///< equal shrinks in row k: D removes a box in row k-1
};

enum class CellMark { None, Cross, Circle };

inline bool boxes_adjacent(Box a, Box b) {
    return (a.row == b.row && std::abs(a.col - b.col) == 1) ||
           (a.col == b.col && std::abs(a.row - b.row) == 1);
}

struct ForwardRuleResult {
    Partition d;
    LocalRuleCase rule;
    bool circle = false;
};

/// Determines the SE corner D of a cell from the NW/NE/SW corners A/B/C, the
/// cell's × mark, and the letter of the cell's stratum.  Throws
/// InvalidConfiguration when the corners fit no rule, which never happens in
/// a grid grown from a genuine picture.
inline ForwardRuleResult forward_rule(const Partition& a, const Partition& b,
                                      const Partition& c, bool cross, Letter stratum) {
    const int v = stratum.value;
    if (cross) {
        if (!(a == b && a == c))
            throw InvalidConfiguration("x cell requires A=B=C");
        return {add_box(a, 1), LocalRuleCase::Cross, false};
    }
    if (a == b && a == c) return {a, LocalRuleCase::CarryAll, false};

    const CoverRelation rb = compare_cover(a, b);
    const CoverRelation rc = compare_cover(a, c);
    if (rb.kind == CoverKind::Unrelated || rc.kind == CoverKind::Unrelated)
        throw InvalidConfiguration("cell corners are not cover-related");

    if (rb.kind == CoverKind::Equal) return {c, LocalRuleCase::CarryVert, false};
    if (rc.kind == CoverKind::Equal) return {b, LocalRuleCase::CarryHoriz, false};

    if (rb.kind == CoverKind::Growth && rc.kind == CoverKind::Growth) {
        if (rb.row != rc.row) return {union_of(b, c), LocalRuleCase::M, false};
        // growths in the same row force B=C
        if (!(b == c)) throw InvalidConfiguration("equal-row growths with B!=C");
        if (v >= rb.row + 1) return {add_box(b, rb.row + 1), LocalRuleCase::R, false};
        return {a, LocalRuleCase::Circle, true};
    }
    if (rb.kind == CoverKind::Growth && rc.kind == CoverKind::Shrink) {
        const Box grown = diff_box(a, b);
        const Box shrunk = diff_box(a, c);
        if (boxes_adjacent(grown, shrunk)) return {a, LocalRuleCase::Jbar, false};
        return {add_box(c, grown.row), LocalRuleCase::J, false};
    }
    if (rb.kind == CoverKind::Shrink && rc.kind == CoverKind::Growth) {
        const Box shrunk = diff_box(a, b);
        const Box grown = diff_box(a, c);
        if (boxes_adjacent(grown, shrunk)) return {a, LocalRuleCase::JbarPrime, false};
        return {add_box(b, grown.row), LocalRuleCase::JPrime, false};
    }
    // both shrinks
    if (rb.row != rc.row) return {intersect(b, c), LocalRuleCase::W, false};
    if (!(b == c)) throw InvalidConfiguration("equal-row shrinks with B!=C");
    if (rb.row < 2) throw InvalidConfiguration("equal shrinks in row 1");
    return {remove_box(b, rb.row - 1), LocalRuleCase::Ya, false};
}

/// The filled growth grid: (f+1)² vertex shapes, per-cell marks and rule
/// cases, and the stratification that produced it.
struct ShapeGrid {
    int f = 0;
    Stratification strat;
    std::vector<std::vector<Partition>> vertices;   ///< [i][j], 0 ≤ i,j ≤ f
    std::vector<std::vector<CellMark>> marks;       ///< [i-1][j-1] for cell (i,j)
    std::vector<std::vector<LocalRuleCase>> rules;  ///< [i-1][j-1] for cell (i,j)

    const Partition& vertex(int i, int j) const { return vertices[i][j]; }
    CellMark mark(int i, int j) const { return marks[i - 1][j - 1]; }
    LocalRuleCase rule(int i, int j) const { return rules[i - 1][j - 1]; }
};

/// Grows the whole grid from a picture by the forward rule, row-major.  The
/// result is independent of fill order since each cell depends only on its
/// NW/NE/SW corners.
inline ShapeGrid fill_grid(const Picture& pic) {
    const int f = pic.f();
    ShapeGrid g;
    g.f = f;
    g.strat = pic.strat;
    g.vertices.assign(f + 1, std::vector<Partition>(f + 1));
    g.marks.assign(f, std::vector<CellMark>(f, CellMark::None));
    g.rules.assign(f, std::vector<LocalRuleCase>(f, LocalRuleCase::CarryAll));
    for (int i = 1; i <= f; ++i) {
        for (int j = 1; j <= f; ++j) {
            const bool cross = pic.cross_row(j) == i;
            auto r = forward_rule(g.vertices[i - 1][j - 1], g.vertices[i - 1][j],
                                  g.vertices[i][j - 1], cross, pic.strat.row_letter(i));
            g.vertices[i][j] = std::move(r.d);
            g.rules[i - 1][j - 1] = r.rule;
            g.marks[i - 1][j - 1] =
                cross ? CellMark::Cross : (r.circle ? CellMark::Circle : CellMark::None);
        }
    }
    return g;
}

/// The bottom edge of the grid, which is the Q-symbol of the word.
inline UpDownTableau extract_q(const ShapeGrid& g) { return g.vertices[g.f]; }

/// Reads the P-symbol off the right edge: for each k, the k-stratum's growth
/// yields the boxes filled with k and the shrink prefix of the k'-stratum
/// marks where the k' entries begin.
inline SspTableau extract_p(const ShapeGrid& g) {
    const int n = g.strat.n;
    const int f = g.f;
    auto tau = [&](int i) -> const Partition& { return g.vertices[i][f]; };

    // stratum boundaries: start[r] = vertex row where the stratum of the
    // letter of rank r begins (= ends of the previous stratum)
    std::vector<int> start(2 * n + 1, 0);
    {
        int i = 0;
        for (int r = 0; r < 2 * n; ++r) {
            start[r] = i;
            while (i < f && g.strat.row_letter(i + 1) == letter_of_rank(r)) ++i;
        }
        start[2 * n] = i;  // == f
    }

    std::vector<Partition> lambda(n + 2), mu(n + 1);
    lambda[1] = tau(start[0]);
    for (int k = 1; k <= n; ++k) {
        const int bar_start = start[2 * k - 1];
        const int bar_end = start[2 * k];
        int v = bar_start;
        while (v < bar_end &&
               compare_cover(tau(v), tau(v + 1)).kind == CoverKind::Shrink)
            ++v;
        mu[k] = tau(v);
        lambda[k + 1] = tau(bar_end);
    }

    if (!lambda[1].empty()) throw MalformedEdge("right edge does not start empty");
    SspTableau p;
    for (int i = 1; i <= length(lambda[n + 1]); ++i)
        p.rows.push_back(std::vector<Letter>(part(lambda[n + 1], i)));
    auto fill = [&](const Partition& inner, const Partition& outer, Letter g_fill) {
        if (!is_horizontal_strip(inner, outer))
            throw MalformedEdge("right edge strip for " + to_token(g_fill) +
                                " is not a horizontal strip");
        for (int i = 1; i <= length(outer); ++i)
            for (int j = part(inner, i) + 1; j <= part(outer, i); ++j)
                p.at(i, j) = g_fill;
    };
    for (int k = 1; k <= n; ++k) {
        fill(lambda[k], mu[k], unbarred(k));
        fill(mu[k], lambda[k + 1], barred(k));
    }
    return p;
}

struct BackwardRuleResult {
    Partition a;
    CellMark mark = CellMark::None;
    LocalRuleCase rule = LocalRuleCase::CarryAll;
};

/// Inverts the forward rule: recovers the NW corner A and the cell mark from
/// the NE/SW/SE corners B/C/D and the stratum letter.
inline BackwardRuleResult backward_rule(const Partition& b, const Partition& c,
                                        const Partition& d, Letter stratum) {
    const int v = stratum.value;
    if (b == c) {
        if (d == b) return {d, CellMark::None, LocalRuleCase::CarryAll};
        const CoverRelation rd = compare_cover(b, d);
        if (rd.kind == CoverKind::Growth) {
            if (rd.row == 1) return {b, CellMark::Cross, LocalRuleCase::Cross};
            if (part(b, rd.row - 1) == part(b, rd.row))
                throw InvalidConfiguration("no removable box one row above the growth");
            return {remove_box(b, rd.row - 1), CellMark::None, LocalRuleCase::R};
        }
        if (rd.kind == CoverKind::Shrink) {
            if (v <= rd.row) return {d, CellMark::Circle, LocalRuleCase::Circle};
            if (part(b, rd.row) == part(b, rd.row + 1))
                throw InvalidConfiguration("no addable box one row below the shrink");
            return {add_box(b, rd.row + 1), CellMark::None, LocalRuleCase::Ya};
        }
        throw InvalidConfiguration("B=C but D is not cover-related");
    }
    if (d == b) return {c, CellMark::None, LocalRuleCase::CarryHoriz};
    if (d == c) return {b, CellMark::None, LocalRuleCase::CarryVert};

    const CoverRelation rb = compare_cover(d, b);  // B relative to D
    const CoverRelation rc = compare_cover(d, c);  // C relative to D
    if (rb.kind == CoverKind::Shrink && rc.kind == CoverKind::Shrink)
        return {intersect(b, c), CellMark::None, LocalRuleCase::M};
    if (rb.kind == CoverKind::Growth && rc.kind == CoverKind::Shrink) {
        const Box b1 = diff_box(d, b);  // in B, not D
        const Box b2 = diff_box(c, d);  // in D, not C
        if (boxes_adjacent(b1, b2)) return {d, CellMark::None, LocalRuleCase::Jbar};
        if (part(c, b1.row - 1) == part(c, b1.row) && b1.row > 1)
            throw InvalidConfiguration("detached bumped box not addable");
        return {add_box(c, b1.row), CellMark::None, LocalRuleCase::J};
    }
    if (rb.kind == CoverKind::Shrink && rc.kind == CoverKind::Growth) {
        const Box b1 = diff_box(b, d);  // in D, not B
        const Box b2 = diff_box(d, c);  // in C, not D
        if (boxes_adjacent(b1, b2)) return {d, CellMark::None, LocalRuleCase::JbarPrime};
        if (part(b, b2.row - 1) == part(b, b2.row) && b2.row > 1)
            throw InvalidConfiguration("detached bumped box not addable");
        return {add_box(b, b2.row), CellMark::None, LocalRuleCase::JPrime};
    }
    if (rb.kind == CoverKind::Growth && rc.kind == CoverKind::Growth)
        return {union_of(b, c), CellMark::None, LocalRuleCase::W};
    throw InvalidConfiguration("backward corners are not cover-related");
}

struct RowReconstruction {
    std::vector<Partition> top;  ///< f+1 shapes, leftmost is empty
    int cross_col = 0;
    std::optional<int> circle_col;
};

/// Runs one grid row backwards: given the bottom edge (f+1 shapes), the shape
/// at the top-right vertex, and the stratum letter, recovers the top edge.
/// Throws RowRejected when the walk hits an impossible cell configuration or
/// the reconstructed leftmost shape is nonempty — the signature of a wrong
/// stratum or right-edge hypothesis.
inline RowReconstruction reconstruct_row_backward(const std::vector<Partition>& bottom,
                                                  const Partition& right_top,
                                                  Letter stratum) {
    if (bottom.empty()) throw DomainError("bottom edge must contain at least one shape");
    const int f = static_cast<int>(bottom.size()) - 1;
    RowReconstruction out;
    out.top.assign(f + 1, {});
    out.top[f] = right_top;
    for (int j = f; j >= 1; --j) {
        BackwardRuleResult r;
        try {
            r = backward_rule(out.top[j], bottom[j - 1], bottom[j], stratum);
        } catch (const InvalidConfiguration& e) {
            throw RowRejected("column " + std::to_string(j) + ": " + e.what());
        }
        out.top[j - 1] = std::move(r.a);
        if (r.mark == CellMark::Cross) {
            if (out.cross_col != 0) throw RowRejected("second x in one row");
            out.cross_col = j;
        }
        if (r.mark == CellMark::Circle) {
            if (out.circle_col) throw RowRejected("second circle in one row");
            out.circle_col = j;
        }
    }
    if (!out.top[0].empty()) throw RowRejected("leftmost reconstructed shape is nonempty");
    if (out.cross_col == 0) throw RowRejected("reconstructed row contains no x");
    return out;
}

}  // namespace sptab
