/// Acceptance harness: runs one scenario per criterion, prints a PASS/FAIL
/// line with the elapsed time for each, and exits with the failure count.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <sptab/berele.hpp>
#include <sptab/growth_grid.hpp>
#include <sptab/oracle.hpp>
#include <sptab/reverse.hpp>

#include "../common/golden.hpp"

using namespace sptab;

namespace {

struct CheckFailed {
    std::string message;
};

void require(bool ok, const std::string& message) {
    if (!ok) throw CheckFailed{message};
}

void require_clean(const VerificationReport& rep, long long expected_checked) {
    require(rep.checked == expected_checked,
            "checked " + std::to_string(rep.checked) + " words, expected " +
                std::to_string(expected_checked));
    if (!rep.failures.empty())
        throw CheckFailed{"first failure: [" + rep.failures.front().check + "] " +
                          rep.failures.front().detail + " on word '" +
                          rep.failures.front().word + "'"};
}

/// Criterion 1: a single insertion that triggers a cancellation reproduces
/// the worked n=5 example, including the vacated row and the cancelled value.
void criterion1() {
    const auto r = berele_insert(golden::cancel_example_start(), barred(1), 5);
    require(r.tableau == golden::cancel_example_result(), "result tableau differs");
    require(r.step == InsertionStep{StepKind::Shrink, 4}, "expected a shrink in row 4");
    require(r.cancelled.has_value() && *r.cancelled == 3, "expected cancellation of 3");
}

/// Criterion 2: the twenty-letter correspondence reproduces the final pair
/// and every intermediate tableau.
void criterion2() {
    const Word w = golden::long_word();
    const auto res = berele_correspondence(w);
    require(res.p == golden::long_word_p(), "final P differs");
    require(res.q == golden::long_word_q(), "up-down tableau Q differs");
    const auto mids = golden::long_word_intermediates();
    SspTableau t;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        t = berele_insert(t, w.letters[i], w.n).tableau;
        require(t == mids[i],
                "intermediate tableau " + std::to_string(i + 1) + " differs");
    }
}

/// Criterion 3: standardizing the twenty-letter word leaves Q unchanged and
/// produces the subscripted P predicted from the original run.
void criterion3() {
    const auto st = standardize_word(golden::long_word());
    const auto res = std_berele_correspondence(st.word);
    require(res.q == golden::long_word_q(), "standardized Q differs from Q");
    require(res.p == golden::long_word_p_std(), "standardized P differs");
    require(erase_subscripts(res.p) == golden::long_word_p(),
            "erasing subscripts does not recover P");
}

/// Criterion 4: the growth grid of the twenty-letter word carries the same
/// data as insertion: bottom row Q, right edge, crosses, and circles.
void criterion4() {
    const auto g = fill_grid(picture_of(golden::long_word()));
    require(extract_q(g) == golden::long_word_q(), "bottom row differs from Q");
    require(extract_p(g).shape() == golden::long_word_p().shape(),
            "right edge end differs from the shape of P");
    const auto edge = golden::long_word_right_edge();
    for (int i = 0; i <= g.f; ++i)
        require(g.vertex(i, g.f) == edge[i],
                "right edge vertex " + std::to_string(i) + " differs");
    std::vector<std::pair<int, int>> crosses, circles;
    for (int i = 1; i <= g.f; ++i)
        for (int j = 1; j <= g.f; ++j) {
            if (g.mark(i, j) == CellMark::Cross) crosses.emplace_back(i, j);
            if (g.mark(i, j) == CellMark::Circle) circles.emplace_back(i, j);
        }
    auto sorted = [](std::vector<std::pair<int, int>> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    require(sorted(crosses) == sorted(golden::long_word_crosses()),
            "cross positions differ");
    require(sorted(circles) == sorted(golden::long_word_circles()),
            "circle positions differ");
}

/// Criterion 5: the reverse algorithm recovers the eight-letter word from its
/// pair and reports the expected case analysis at the two interesting levels.
void criterion5() {
    const auto fwd = berele_correspondence(golden::grid_word());
    const auto trace = reverse_correspondence_trace(fwd.p, fwd.q, 2);
    require(trace.word == golden::grid_word(), "recovered word differs");
    require(!trace.levels.empty() && trace.levels[0].f == 8, "first level is not f=8");
    require(trace.levels[0].case_tag == 5, "level 8 should classify as case 5");
    require(trace.levels[0].circle_col == 7, "level 8 circle column should be 7");
    require(trace.levels.size() > 1 && trace.levels[1].f == 7, "second level is not f=7");
    require(trace.levels[1].case_tag == 4, "level 7 should classify as case 4");
}

/// Criterion 6: exhaustive agreement of insertion, grid, standardization, and
/// reverse over every word for (n,f) = (2,5) and (3,4).
void criterion6() {
    require_clean(check_all(2, 5), 1024);
    require_clean(check_all(3, 4), 1296);
}

/// Criterion 7: every vertex of every grid for n=2, f<=4 equals the bumping
/// shape of the corresponding subword, and every shrink edge is a column
/// deletion.
void criterion7() {
    long long words = 0;
    std::string first_bad;
    for (int f = 0; f <= 4; ++f)
        for_each_word(2, f, [&](const Word& w) {
            ++words;
            const auto fails = check_vertex_level(w);
            if (!fails.empty() && first_bad.empty())
                first_bad = "[" + fails.front().check + "] on '" + fails.front().word + "'";
        });
    require(words == 341, "expected 341 words, saw " + std::to_string(words));
    require(first_bad.empty(), first_bad);
}

/// Criterion 8: the invariant sweeps stay clean across alphabet sizes.
void criterion8() {
    require_clean(check_all(1, 4), 16);
    require_clean(check_all(2, 3), 64);
    require_clean(check_all(3, 2), 36);
}

}  // namespace

int main() {
    const std::vector<std::function<void()>> criteria = {
        criterion1, criterion2, criterion3, criterion4,
        criterion5, criterion6, criterion7, criterion8};
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string error;
        try {
            criteria[i]();
        } catch (const CheckFailed& c) {
            error = c.message;
        } catch (const std::exception& e) {
            error = std::string("exception: ") + e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        if (error.empty()) {
            std::printf("criterion %zu: PASS (%lld ms)\n", i + 1,
                        static_cast<long long>(ms));
        } else {
            ++failures;
            std::printf("criterion %zu: FAIL (%lld ms)\n  %s\n", i + 1,
                        static_cast<long long>(ms), error.c_str());
        }
        std::fflush(stdout);
    }
    return failures;
}
