#include <catch2/catch_amalgamated.hpp>

#include <set>

#include <sptab/oracle.hpp>

#include "../common/golden.hpp"

using namespace sptab;
using golden::W;

TEST_CASE("word enumeration", "[oracle]") {
    CHECK(enumerate_words(2, 3).size() == 64);
    CHECK(enumerate_words(3, 2).size() == 36);
    CHECK(enumerate_words(1, 0).size() == 1);
    const auto words = enumerate_words(1, 2);
    CHECK(format_word(words.front()) == "1 1");
    CHECK(format_word(words.back()) == "1' 1'");
    std::set<std::string> seen;
    for (const auto& w : words) seen.insert(format_word(w));
    CHECK(seen.size() == words.size());
}

TEST_CASE("symplectic tableau enumeration", "[oracle]") {
    CHECK(enumerate_sp_tableaux(1, {}).size() == 1);
    CHECK(enumerate_sp_tableaux(1, {1}).size() == 2);
    CHECK(enumerate_sp_tableaux(1, {3}).size() == 4);
    CHECK(enumerate_sp_tableaux(2, {1, 1}).size() == 5);
    CHECK_THROWS_AS(enumerate_sp_tableaux(1, {1, 1}), ShapeTooLong);
    CHECK_THROWS_AS(enumerate_sp_tableaux(2, {1, 2}), DomainError);

    // against a naive filter over all fillings
    for (const Partition& sh : partitions_up_to(4, 2)) {
        std::vector<Box> cells;
        for (int i = 1; i <= length(sh); ++i)
            for (int j = 1; j <= part(sh, i); ++j) cells.push_back(Box{i, j});
        std::set<std::string> naive;
        std::vector<int> ranks(cells.size(), 0);
        while (true) {
            SspTableau t;
            t.rows.resize(length(sh));
            for (std::size_t c = 0; c < cells.size(); ++c)
                t.rows[cells[c].row - 1].push_back(letter_of_rank(ranks[c]));
            if (is_symplectic(t, 2)) {
                std::string key;
                for (const auto& row : t.rows)
                    for (const Letter& g : row) key += to_token(g) + " ";
                naive.insert(key);
            }
            int c = static_cast<int>(cells.size()) - 1;
            while (c >= 0 && ranks[c] == 3) ranks[c--] = 0;
            if (c < 0) break;
            ++ranks[c];
        }
        std::set<std::string> fast;
        for (const auto& t : enumerate_sp_tableaux(2, sh)) {
            std::string key;
            for (const auto& row : t.rows)
                for (const Letter& g : row) key += to_token(g) + " ";
            fast.insert(key);
        }
        CHECK(naive == fast);
    }
}

TEST_CASE("up-down tableau enumeration", "[oracle]") {
    CHECK(enumerate_updown(1, 3, {1}).size() == 2);
    CHECK(enumerate_updown(1, 4, {}).size() == 2);
    CHECK(enumerate_updown(2, 4, {}).size() == 3);
    CHECK(enumerate_updown(2, 2, {1, 1}).size() == 1);
    CHECK(enumerate_updown(2, 3, {}).empty());  // parity
    for (const auto& u : enumerate_updown(2, 5, {1})) CHECK(is_up_down_tableau(u, 2));
}

TEST_CASE("partition enumeration", "[oracle]") {
    const auto ps = partitions_up_to(4, 2);
    CHECK(ps.size() == 9);
    CHECK(ps.front() == Partition{});
    std::set<std::string> seen;
    for (const auto& p : ps) {
        CHECK(is_partition(p));
        CHECK(weight(p) <= 4);
        CHECK(length(p) <= 2);
        seen.insert(to_string(p));
    }
    CHECK(seen.size() == ps.size());
}

TEST_CASE("pair enumeration matches the counting identity", "[oracle]") {
    CHECK(enumerate_pairs(1, 2).size() == 4);
    CHECK(enumerate_pairs(1, 3).size() == 8);
    CHECK(enumerate_pairs(2, 3).size() == 64);
}

TEST_CASE("per-word checks pass on reference words", "[oracle]") {
    CHECK(check_word(W(1, "1' 1")).empty());
    CHECK(check_word(golden::grid_word()).empty());
    CHECK(check_word(golden::long_word()).empty());
}

TEST_CASE("exhaustive verification", "[oracle]") {
    for (int f = 0; f <= 3; ++f) {
        const auto rep = check_all(1, f);
        CHECK(rep.checked == (1 << f));
        CHECK(rep.failures.empty());
    }
    const auto rep = check_all(2, 3);
    CHECK(rep.n == 2);
    CHECK(rep.f == 3);
    CHECK(rep.checked == 64);
    CHECK(rep.failures.empty());
}

TEST_CASE("the verification scope is guarded", "[oracle]") {
    CHECK_THROWS_AS(check_all(2, 10), ScopeTooLarge);
    CHECK_THROWS_AS(check_all(2, 3, 10), ScopeTooLarge);
}
