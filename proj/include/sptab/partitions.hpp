#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"

namespace sptab {

/// A partition: weakly decreasing positive parts, trailing zeros suppressed.
/// The empty vector is the empty partition.
using Partition = std::vector<int>;

/// A cell of a Young diagram, 1-based: row counts from the top, column from
/// the left.
struct Box {
    int row = 0;
    int col = 0;

    friend constexpr auto operator<=>(const Box&, const Box&) = default;
};

inline bool is_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

inline int length(const Partition& p) { return static_cast<int>(p.size()); }

inline int weight(const Partition& p) {
    int w = 0;
    for (int x : p) w += x;
    return w;
}

/// Part in the given 1-based row; 0 beyond the last row.
inline int part(const Partition& p, int row) {
    return (row >= 1 && row <= length(p)) ? p[row - 1] : 0;
}

inline bool contains(const Partition& p, Box b) {
    return b.row >= 1 && b.col >= 1 && b.col <= part(p, b.row);
}

/// Removable boxes, top to bottom.
inline std::vector<Box> corners(const Partition& p) {
    std::vector<Box> out;
    for (int i = 1; i <= length(p); ++i)
        if (part(p, i) > part(p, i + 1)) out.push_back(Box{i, part(p, i)});
    return out;
}

/// Addable boxes, top to bottom; always one more than there are corners.
inline std::vector<Box> cocorners(const Partition& p) {
    std::vector<Box> out;
    for (int i = 1; i <= length(p) + 1; ++i)
        if (i == 1 || part(p, i - 1) > part(p, i)) out.push_back(Box{i, part(p, i) + 1});
    return out;
}

/// The partition with one more box in the given row.
inline Partition add_box(const Partition& p, int row) {
    if (row < 1 || row > length(p) + 1 || (row > 1 && part(p, row - 1) == part(p, row)))
        throw NoCocornerInRow("no box can be added in row " + std::to_string(row));
    Partition q = p;
    if (row == length(p) + 1)
        q.push_back(1);
    else
        ++q[row - 1];
    return q;
}

/// The partition with one fewer box in the given row.
inline Partition remove_box(const Partition& p, int row) {
    if (row < 1 || row > length(p) || part(p, row) == part(p, row + 1))
        throw NoCornerInRow("no box can be removed from row " + std::to_string(row));
    Partition q = p;
    --q[row - 1];
    if (q[row - 1] == 0) q.pop_back();
    return q;
}

enum class CoverKind { Equal, Growth, Shrink, Unrelated };

/// How a partition relates to its predecessor: equal, one box added in `row`
/// (Growth), one box removed from `row` (Shrink), or anything else.
struct CoverRelation {
    CoverKind kind = CoverKind::Unrelated;
    int row = 0;  ///< meaningful for Growth and Shrink only

    friend constexpr bool operator==(const CoverRelation&, const CoverRelation&) = default;
};

/// Relation of `b` seen from `a`: Growth means b = a plus one box.
inline CoverRelation compare_cover(const Partition& a, const Partition& b) {
    if (a == b) return {CoverKind::Equal, 0};
    const int rows = std::max(length(a), length(b));
    int diff_row = 0;
    int diff_amount = 0;  // +1 growth, -1 shrink
    for (int i = 1; i <= rows; ++i) {
        const int d = part(b, i) - part(a, i);
        if (d == 0) continue;
        if (diff_row != 0 || (d != 1 && d != -1)) return {CoverKind::Unrelated, 0};
        diff_row = i;
        diff_amount = d;
    }
    return {diff_amount > 0 ? CoverKind::Growth : CoverKind::Shrink, diff_row};
}

/// Rowwise maximum (join in the containment order).
inline Partition union_of(const Partition& a, const Partition& b) {
    Partition out;
    const int rows = std::max(length(a), length(b));
    for (int i = 1; i <= rows; ++i) out.push_back(std::max(part(a, i), part(b, i)));
    return out;
}

/// Rowwise minimum (meet in the containment order).
inline Partition intersect(const Partition& a, const Partition& b) {
    Partition out;
    const int rows = std::min(length(a), length(b));
    for (int i = 1; i <= rows; ++i) {
        const int m = std::min(part(a, i), part(b, i));
        if (m == 0) break;
        out.push_back(m);
    }
    return out;
}

/// The unique box by which two partitions differing by one box disagree.
inline Box diff_box(const Partition& a, const Partition& b) {
    const CoverRelation rel = compare_cover(a, b);
    if (rel.kind == CoverKind::Growth) return Box{rel.row, part(b, rel.row)};
    if (rel.kind == CoverKind::Shrink) return Box{rel.row, part(a, rel.row)};
    throw NotACover("partitions do not differ by exactly one box");
}

/// True when outer/inner is a skew shape with at most one box per column.
inline bool is_horizontal_strip(const Partition& inner, const Partition& outer) {
    for (int i = 1; i <= std::max(length(inner), length(outer)); ++i) {
        if (part(inner, i) > part(outer, i)) return false;       // not contained
        if (part(outer, i + 1) > part(inner, i)) return false;   // two boxes share a column
    }
    return true;
}

/// Debug/diagnostic rendering: "[4,3,1]", "[]" for the empty partition.
inline std::string to_string(const Partition& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(p[i]);
    }
    return out + "]";
}

}  // namespace sptab
