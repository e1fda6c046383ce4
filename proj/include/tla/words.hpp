#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "tla/error.hpp"

namespace tla {

// The three index monoids used throughout: Z, Z>=0, and Z>=0^2 (lexicographic).
enum class MonoidKind { Int, Nat, NatPair };

struct MonoidElem {
    MonoidKind kind = MonoidKind::Int;
    long x = 0;
    long y = 0;  // second coordinate, NatPair only

    static MonoidElem of_int(long v) { return {MonoidKind::Int, v, 0}; }
    static MonoidElem of_nat(long v) { return {MonoidKind::Nat, v, 0}; }
    static MonoidElem of_pair(long a, long b) { return {MonoidKind::NatPair, a, b}; }
    static MonoidElem zero(MonoidKind k) { return {k, 0, 0}; }

    bool is_zero() const { return x == 0 && y == 0; }
    bool valid() const {
        switch (kind) {
            case MonoidKind::Int: return true;
            case MonoidKind::Nat: return x >= 0;
            case MonoidKind::NatPair: return x >= 0 && y >= 0;
        }
        return false;
    }

    MonoidElem operator+(const MonoidElem& o) const {
        if (kind != o.kind) fail("WrongMonoid", "adding letters from different monoids");
        return {kind, x + o.x, y + o.y};
    }

    // Lexicographic order within each monoid; kind itself compares first so that
    // mixed-kind containers still have a total order.
    auto operator<=>(const MonoidElem& o) const = default;

    std::string str() const;
};

using Word = std::vector<MonoidElem>;

std::string word_str(const Word& w);
MonoidElem word_sum(const Word& w);  // |a|, empty sum = zero of the word's kind (Int for empty)
Word word_permuted(const Word& w, const std::vector<int>& tau);  // (tau a)_i = a_{tau^{-1}(i)}, tau 1-based

// Strictly increasing 1-based index subsequence of {1..r}, an element of P(r,k).
struct Subseq {
    int r = 0;
    std::vector<int> idx;  // size k

    int k() const { return static_cast<int>(idx.size()); }
    auto operator<=>(const Subseq&) const = default;
};

// All of P(r,k) in lexicographic order of the index vectors.
std::vector<Subseq> enumerate_subseqs(int r, int k);
// Complement subsequence (l^1 < ... < l^{r-k}).
Subseq subseq_complement(const Subseq& l);
// Insertion bijection: given l in P(r,k) and j (1-based position into the
// complement), returns (l * l^j, i(l,j)) with i in {1..k+1}.
std::pair<Subseq, int> subseq_insert(const Subseq& l, int j);

// Letters of w selected by l (a_l) — LengthMismatch unless l.r == |w|.
Word word_select(const Word& w, const Subseq& l);
// Letters of w skipped by l (a^l).
Word word_coselect(const Word& w, const Subseq& l);

// A word is n-dominant when it has at most n letters, no zero letters, and is
// weakly decreasing in the monoid order.
bool is_n_dominant(const Word& w, int n);
// Dominant rearrangement, or nullopt when the word has zero letters or more
// than n of them.
std::optional<Word> sort_to_dominant(const Word& w, int n);

} // namespace tla
