#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "tla/words.hpp"

using namespace tla;

namespace {

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

} // namespace

TEST_CASE("monoid letters add within their kind and validate ranges") {
    MonoidElem a = MonoidElem::of_int(-2), b = MonoidElem::of_int(5);
    CHECK((a + b) == MonoidElem::of_int(3));
    CHECK(a.valid());
    CHECK(!MonoidElem::of_nat(-1).valid());
    CHECK(!MonoidElem::of_pair(1, -1).valid());
    CHECK(MonoidElem::of_pair(0, 0).is_zero());
    CHECK_THROWS_AS(MonoidElem::of_int(1) + MonoidElem::of_nat(1), Error);
    // Lexicographic within a kind.
    CHECK(MonoidElem::of_pair(1, 5) < MonoidElem::of_pair(2, 0));
    CHECK(MonoidElem::of_pair(1, 2) < MonoidElem::of_pair(1, 3));
}

TEST_CASE("word sums and permutations follow the index conventions") {
    Word w = {MonoidElem::of_nat(1), MonoidElem::of_nat(2), MonoidElem::of_nat(4)};
    CHECK(word_sum(w) == MonoidElem::of_nat(7));
    CHECK(word_sum(Word{}) == MonoidElem::zero(MonoidKind::Int));

    // (tau a)_i = a_{tau^{-1}(i)} with tau one-based: tau = (2 3 1) sends
    // position 1 to 2, so position 2 of the image holds a_1.
    std::vector<int> tau = {2, 3, 1};
    Word p = word_permuted(w, tau);
    CHECK(p == Word{MonoidElem::of_nat(4), MonoidElem::of_nat(1), MonoidElem::of_nat(2)});
    CHECK(word_sum(p) == word_sum(w));
}

TEST_CASE("subsequence enumeration covers P(r,k) in lexicographic order") {
    for (int r = 0; r <= 5; ++r)
        for (int k = 0; k <= r; ++k) {
            auto subs = enumerate_subseqs(r, k);
            CHECK(static_cast<long>(subs.size()) == binom(r, k));
            for (const Subseq& s : subs) {
                CHECK(s.r == r);
                CHECK(s.k() == k);
                CHECK(std::is_sorted(s.idx.begin(), s.idx.end()));
            }
            CHECK(std::is_sorted(subs.begin(), subs.end(),
                                 [](const Subseq& a, const Subseq& b) { return a.idx < b.idx; }));
        }
}

TEST_CASE("complement and selection split a word exactly") {
    Word w = {MonoidElem::of_int(3), MonoidElem::of_int(-1), MonoidElem::of_int(0),
              MonoidElem::of_int(7)};
    for (const Subseq& l : enumerate_subseqs(4, 2)) {
        Subseq c = subseq_complement(l);
        CHECK(c.k() == 2);
        Word sel = word_select(w, l), cos = word_coselect(w, l);
        CHECK(sel.size() == 2);
        CHECK(cos.size() == 2);
        CHECK((word_sum(sel) + word_sum(cos)) == word_sum(w));
        std::set<int> all(l.idx.begin(), l.idx.end());
        all.insert(c.idx.begin(), c.idx.end());
        CHECK(all == std::set<int>{1, 2, 3, 4});
    }
    Subseq wrong;
    wrong.r = 3;
    CHECK_THROWS_AS(word_select(w, wrong), Error);
}

TEST_CASE("subsequence insertion is a bijection onto one-larger subsequences") {
    for (int r = 3; r <= 5; ++r)
        for (int k = 0; k < r; ++k) {
            std::set<std::pair<std::vector<int>, int>> seen;
            for (const Subseq& l : enumerate_subseqs(r, k)) {
                Subseq comp = subseq_complement(l);
                for (int j = 1; j <= r - k; ++j) {
                    auto [bigger, pos] = subseq_insert(l, j);
                    CHECK(bigger.k() == k + 1);
                    CHECK(pos >= 1);
                    CHECK(pos <= k + 1);
                    // The inserted index is the j-th complement element.
                    CHECK(bigger.idx[static_cast<size_t>(pos - 1)] ==
                          comp.idx[static_cast<size_t>(j - 1)]);
                    // Removing it recovers l.
                    Subseq back = bigger;
                    back.idx.erase(back.idx.begin() + (pos - 1));
                    CHECK(back.idx == l.idx);
                    CHECK(seen.emplace(bigger.idx, pos).second);
                }
            }
            CHECK(static_cast<long>(seen.size()) == binom(r, k + 1) * (k + 1));
        }
}

TEST_CASE("dominant words are capped, zero-free, and weakly decreasing") {
    Word dom = {MonoidElem::of_nat(3), MonoidElem::of_nat(3), MonoidElem::of_nat(1)};
    CHECK(is_n_dominant(dom, 3));
    CHECK(!is_n_dominant(dom, 2));
    Word withzero = {MonoidElem::of_nat(2), MonoidElem::of_nat(0)};
    CHECK(!is_n_dominant(withzero, 3));
    Word unsorted = {MonoidElem::of_nat(1), MonoidElem::of_nat(2)};
    CHECK(!is_n_dominant(unsorted, 3));

    auto sorted = sort_to_dominant(unsorted, 2);
    REQUIRE(sorted.has_value());
    CHECK(*sorted == Word{MonoidElem::of_nat(2), MonoidElem::of_nat(1)});
    CHECK(is_n_dominant(*sorted, 2));
    CHECK(!sort_to_dominant(unsorted, 1).has_value());
    CHECK(!sort_to_dominant(withzero, 3).has_value());
    CHECK(sort_to_dominant(Word{}, 0).has_value());
}
