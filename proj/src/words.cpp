#include "tla/words.hpp"

#include <algorithm>

namespace tla {

std::string MonoidElem::str() const {
    if (kind == MonoidKind::NatPair)
        return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
    return std::to_string(x);
}

std::string word_str(const Word& w) {
    std::string s = "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += w[i].str();
    }
    return s + ")";
}

MonoidElem word_sum(const Word& w) {
    if (w.empty()) return MonoidElem::of_int(0);
    MonoidElem s = MonoidElem::zero(w[0].kind);
    for (const auto& a : w) s = s + a;
    return s;
}

Word word_permuted(const Word& w, const std::vector<int>& tau) {
    if (tau.size() != w.size()) fail("LengthMismatch", "permutation size mismatch");
    Word out(w.size());
    for (size_t j = 0; j < w.size(); ++j) {
        int t = tau[j];
        if (t < 1 || t > static_cast<int>(w.size())) fail("BadIndex", "permutation entry out of range");
        out[t - 1] = w[j];
    }
    return out;
}

std::vector<Subseq> enumerate_subseqs(int r, int k) {
    std::vector<Subseq> out;
    if (k < 0 || k > r) return out;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(Subseq{r, cur});
        if (k == 0) break;
        int i = k - 1;
        while (i >= 0 && cur[i] == r - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

Subseq subseq_complement(const Subseq& l) {
    Subseq c{l.r, {}};
    size_t p = 0;
    for (int v = 1; v <= l.r; ++v) {
        if (p < l.idx.size() && l.idx[p] == v) { ++p; continue; }
        c.idx.push_back(v);
    }
    return c;
}

std::pair<Subseq, int> subseq_insert(const Subseq& l, int j) {
    Subseq c = subseq_complement(l);
    if (j < 1 || j > static_cast<int>(c.idx.size())) fail("BadIndex", "insertion position out of range");
    int v = c.idx[j - 1];
    Subseq out{l.r, l.idx};
    auto it = std::lower_bound(out.idx.begin(), out.idx.end(), v);
    int pos = static_cast<int>(it - out.idx.begin()) + 1;
    out.idx.insert(it, v);
    return {out, pos};
}

Word word_select(const Word& w, const Subseq& l) {
    if (l.r != static_cast<int>(w.size())) fail("LengthMismatch", "subsequence ambient length mismatch");
    Word out;
    out.reserve(l.idx.size());
    for (int v : l.idx) out.push_back(w[v - 1]);
    return out;
}

Word word_coselect(const Word& w, const Subseq& l) {
    return word_select(w, subseq_complement(l));
}

bool is_n_dominant(const Word& w, int n) {
    if (static_cast<int>(w.size()) > n) return false;
    for (const auto& a : w)
        if (a.is_zero()) return false;
    for (size_t i = 1; i < w.size(); ++i)
        if (w[i - 1] < w[i]) return false;
    return true;
}

std::optional<Word> sort_to_dominant(const Word& w, int n) {
    if (static_cast<int>(w.size()) > n) return std::nullopt;
    for (const auto& a : w)
        if (a.is_zero()) return std::nullopt;
    Word out = w;
    std::sort(out.begin(), out.end(), [](const MonoidElem& a, const MonoidElem& b) { return b < a; });
    return out;
}

} // namespace tla
