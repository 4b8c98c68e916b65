#include <catch2/catch_amalgamated.hpp>

#include <map>

#include <sptab/berele.hpp>
#include <sptab/oracle.hpp>

#include "../common/golden.hpp"

using namespace sptab;
using golden::T;
using golden::TS;
using golden::W;

TEST_CASE("word validation", "[berele]") {
    CHECK_NOTHROW(validate_word(W(2, "1 2' 2 1'")));
    CHECK_THROWS_AS(validate_word(W(1, "2")), DomainError);
    Word bad;
    bad.n = 0;
    CHECK_THROWS_AS(validate_word(bad), DomainError);
}

TEST_CASE("format_word round trips tokens", "[berele]") {
    CHECK(format_word(W(2, "2 2' 1")) == "2 2' 1");
    CHECK(format_word(Word{}) == "");
}

TEST_CASE("up-down tableau recognition", "[berele]") {
    CHECK(is_up_down_tableau({{}, {1}, {}}, 1));
    CHECK(is_up_down_tableau({{}}, 1));
    CHECK_FALSE(is_up_down_tableau({}, 1));
    CHECK_FALSE(is_up_down_tableau({{1}}, 1));            // must start empty
    CHECK_FALSE(is_up_down_tableau({{}, {1, 1}}, 1));     // not a cover
    CHECK_FALSE(is_up_down_tableau({{}, {1}, {1, 1}}, 1));  // too many rows
}

TEST_CASE("insertion without cancellation grows the tableau", "[berele]") {
    const auto r = berele_insert(T({{"1"}}), unbarred(1), 2);
    CHECK(r.tableau == T({{"1", "1"}}));
    CHECK(r.step == InsertionStep{StepKind::Growth, 1});
    CHECK_FALSE(r.cancelled.has_value());
}

TEST_CASE("smallest cancellation", "[berele]") {
    const auto r = berele_insert(T({{"1'"}}), unbarred(1), 1);
    CHECK(r.tableau == SspTableau{});
    CHECK(r.step == InsertionStep{StepKind::Shrink, 1});
    CHECK(r.cancelled == 1);
}

TEST_CASE("worked cancellation with a long slide", "[berele]") {
    const auto r = berele_insert(golden::cancel_example_start(), barred(1), 5);
    CHECK(r.tableau == golden::cancel_example_result());
    CHECK(r.step == InsertionStep{StepKind::Shrink, 4});
    CHECK(r.cancelled == 3);
}

TEST_CASE("insertion requires a symplectic tableau", "[berele]") {
    CHECK_THROWS_AS(berele_insert(T({{"1"}, {"1'"}}), unbarred(1), 2), NotSymplectic);
}

TEST_CASE("cancellation happens only when the bar is present", "[berele]") {
    for_each_word(2, 4, [&](const Word& w) {
        SspTableau t;
        for (const Letter& g : w.letters) {
            const auto r = berele_insert(t, g, w.n);
            if (r.cancelled) {
                CHECK(multiplicity(t, barred(*r.cancelled)) > 0);
                CHECK(r.step.kind == StepKind::Shrink);
            } else {
                CHECK(r.step.kind == StepKind::Growth);
            }
            t = r.tableau;
        }
    });
}

TEST_CASE("twenty-letter correspondence", "[berele]") {
    const Word w = golden::long_word();
    const auto res = berele_correspondence(w);
    CHECK(res.p == golden::long_word_p());
    CHECK(res.q == golden::long_word_q());
    CHECK(res.pair() == BerelePair{golden::long_word_p(), golden::long_word_q()});

    const auto expect = golden::long_word_intermediates();
    SspTableau t;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        t = berele_insert(t, w.letters[i], w.n).tableau;
        CHECK(t == expect[i]);
    }

    // each letter and its bar cancel twice over the whole word
    for (const auto& [g, c] : res.cancel_counts) CHECK(c == 2);
    CHECK(res.cancel_counts.size() == 6);
}

TEST_CASE("standardization of a word", "[berele]") {
    const auto st = standardize_word(W(2, "1 1 2 1"));
    CHECK(format_word(st.word) == "1_1 1_2 2_1 1_3");
    CHECK(st.ord.at(subscripted_from_token("1_3")) == 3);
    CHECK(st.ord.at(subscripted_from_token("2_1")) == 4);

    const auto lw = standardize_word(golden::long_word());
    const auto expect = golden::long_word_ord();
    for (std::size_t j = 0; j < lw.word.letters.size(); ++j)
        CHECK(lw.ord.at(lw.word.letters[j]) == expect[j]);
}

TEST_CASE("standardized word validation", "[berele]") {
    CHECK_NOTHROW(validate_standardized_word(standardize_word(W(2, "1 2' 1 2'")).word));
    StandardizedWord bad;
    bad.n = 2;
    bad.letters = {subscripted_from_token("1_2")};  // subscripts must start at 1
    CHECK_THROWS_AS(validate_standardized_word(bad), NotStandardized);
}

TEST_CASE("standardized correspondence matches the plain one", "[berele]") {
    const auto res = berele_correspondence(golden::long_word());
    const auto std_res = std_berele_correspondence(standardize_word(golden::long_word()).word);
    CHECK(std_res.p == golden::long_word_p_std());
    CHECK(std_res.q == res.q);
    CHECK(erase_subscripts(std_res.p) == res.p);

    for_each_word(2, 4, [&](const Word& w) {
        const auto a = berele_correspondence(w);
        const auto b = std_berele_correspondence(standardize_word(w).word);
        CHECK(a.q == b.q);
        CHECK(erase_subscripts(b.p) == a.p);
    });
}

TEST_CASE("subscript prediction from counts", "[berele]") {
    const auto res = berele_correspondence(golden::long_word());
    std::map<Letter, int> mult;
    for (const Letter& g : golden::long_word().letters) ++mult[g];
    CHECK(mult.at(unbarred(2)) == 5);
    CHECK(mult.at(unbarred(3)) == 2);
    CHECK(standardize_tableau(res.p, res.cancel_counts, mult) == golden::long_word_p_std());

    // inconsistent counts are rejected
    std::map<Letter, int> short_mult = mult;
    short_mult[unbarred(2)] = 3;
    CHECK_THROWS_AS(standardize_tableau(res.p, res.cancel_counts, short_mult),
                    CountMismatch);
}

TEST_CASE("standardized insertion rejects duplicates", "[berele]") {
    const auto one = subscripted_from_token("1_1");
    const auto t = std_berele_insert(StandardizedTableau{}, one, 2).tableau;
    CHECK_THROWS_AS(std_berele_insert(t, one, 2), NotStandardized);
}
