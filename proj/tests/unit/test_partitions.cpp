#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include <sptab/oracle.hpp>
#include <sptab/partitions.hpp>

using namespace sptab;

TEST_CASE("partition basics", "[partitions]") {
    CHECK(is_partition(Partition{}));
    CHECK(is_partition(Partition{4, 3, 3, 1}));
    CHECK_FALSE(is_partition(Partition{3, 4}));
    CHECK_FALSE(is_partition(Partition{2, 0}));
    CHECK_FALSE(is_partition(Partition{-1}));
    CHECK(length(Partition{4, 3, 3, 1}) == 4);
    CHECK(weight(Partition{4, 3, 3, 1}) == 11);
    CHECK(part(Partition{4, 3, 3, 1}, 2) == 3);
    CHECK(part(Partition{4, 3, 3, 1}, 9) == 0);
    CHECK(to_string(Partition{4, 3, 3, 1}) == "[4,3,3,1]");
    CHECK(to_string(Partition{}) == "[]");
}

TEST_CASE("corners and cocorners", "[partitions]") {
    const Partition p{4, 3, 3, 1};
    CHECK(corners(p) == std::vector<Box>{{1, 4}, {3, 3}, {4, 1}});
    CHECK(cocorners(p) == std::vector<Box>{{1, 5}, {2, 4}, {4, 2}, {5, 1}});
    CHECK(corners(Partition{}).empty());
    CHECK(cocorners(Partition{}) == std::vector<Box>{{1, 1}});

    // one more cocorner than corner, with rows interleaving
    for (const Partition& q : partitions_up_to(8, 4)) {
        const auto cs = corners(q);
        const auto ccs = cocorners(q);
        REQUIRE(ccs.size() == cs.size() + 1);
        for (std::size_t i = 0; i < cs.size(); ++i) {
            CHECK(ccs[i].row < cs[i].row + 1);
            CHECK(cs[i].row < ccs[i + 1].row);
        }
    }
}

TEST_CASE("adding and removing boxes", "[partitions]") {
    CHECK(add_box(Partition{4, 3, 3, 1}, 2) == Partition{4, 4, 3, 1});
    CHECK(remove_box(Partition{4, 3, 3, 1}, 4) == Partition{4, 3, 3});
    CHECK(add_box(Partition{}, 1) == Partition{1});
    CHECK(remove_box(Partition{1}, 1) == Partition{});
    CHECK_THROWS_AS(add_box(Partition{2, 2}, 2), NoCocornerInRow);
    CHECK_THROWS_AS(remove_box(Partition{2, 2}, 1), NoCornerInRow);
    CHECK_THROWS_AS(remove_box(Partition{2, 2}, 5), NoCornerInRow);

    for (const Partition& q : partitions_up_to(8, 4)) {
        for (const Box& b : cocorners(q))
            CHECK(remove_box(add_box(q, b.row), b.row) == q);
        for (const Box& b : corners(q))
            CHECK(add_box(remove_box(q, b.row), b.row) == q);
    }
}

TEST_CASE("cover comparison", "[partitions]") {
    CHECK(compare_cover(Partition{3, 1}, Partition{3, 2}) ==
          CoverRelation{CoverKind::Growth, 2});
    CHECK(compare_cover(Partition{3, 2}, Partition{3, 1}) ==
          CoverRelation{CoverKind::Shrink, 2});
    CHECK(compare_cover(Partition{3, 1}, Partition{3, 1}) ==
          CoverRelation{CoverKind::Equal, 0});
    CHECK(compare_cover(Partition{}, Partition{1}) == CoverRelation{CoverKind::Growth, 1});
    CHECK(compare_cover(Partition{2}, Partition{1, 1}).kind == CoverKind::Unrelated);
    CHECK(compare_cover(Partition{3, 1}, Partition{2, 2}).kind == CoverKind::Unrelated);
    CHECK(compare_cover(Partition{3}, Partition{1}).kind == CoverKind::Unrelated);
}

TEST_CASE("join and meet", "[partitions]") {
    CHECK(union_of(Partition{2, 1}, Partition{1, 1, 1}) == Partition{2, 1, 1});
    CHECK(intersect(Partition{2, 1}, Partition{1, 1, 1}) == Partition{1, 1});

    const auto all = partitions_up_to(6, 3);
    for (const Partition& a : all)
        for (const Partition& b : all) {
            const Partition u = union_of(a, b), m = intersect(a, b);
            CHECK(u == union_of(b, a));
            CHECK(m == intersect(b, a));
            for (int r = 1; r <= 4; ++r) {
                CHECK(part(u, r) == std::max(part(a, r), part(b, r)));
                CHECK(part(m, r) == std::min(part(a, r), part(b, r)));
            }
            CHECK(weight(u) + weight(m) == weight(a) + weight(b));
        }
}

TEST_CASE("box difference of a cover", "[partitions]") {
    CHECK(diff_box(Partition{2, 2}, Partition{3, 2}) == Box{1, 3});
    CHECK(diff_box(Partition{3, 2}, Partition{2, 2}) == Box{1, 3});
    CHECK(diff_box(Partition{}, Partition{1}) == Box{1, 1});
    CHECK_THROWS_AS(diff_box(Partition{2}, Partition{2}), NotACover);
    CHECK_THROWS_AS(diff_box(Partition{2}, Partition{1, 1}), NotACover);
}

TEST_CASE("horizontal strips", "[partitions]") {
    CHECK(is_horizontal_strip(Partition{2}, Partition{4, 1}));
    CHECK(is_horizontal_strip(Partition{2, 1}, Partition{2, 1}));
    CHECK(is_horizontal_strip(Partition{}, Partition{3}));
    CHECK_FALSE(is_horizontal_strip(Partition{1, 1}, Partition{2, 2}));
    CHECK_FALSE(is_horizontal_strip(Partition{3}, Partition{2}));
    CHECK_FALSE(is_horizontal_strip(Partition{1}, Partition{1, 1, 1}));
}
