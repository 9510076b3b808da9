#pragma once

// Words over an ordered alphabet, good Lyndon words attached to positive
// roots, dominant words and the sorted-merge monoid on them.

#include "okseed/rootsys.hpp"

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace okseed {

// Total order on the alphabet {1..n}: letters listed from smallest to largest.
class AlphabetOrder {
public:
    AlphabetOrder() = default;

    explicit AlphabetOrder(IntVector letters) : letters_(std::move(letters)), rank_of_(letters_.size() + 1, -1) {
        int n = static_cast<int>(letters_.size());
        for (int pos = 0; pos < n; ++pos) {
            int x = letters_[pos];
            if (x < 1 || x > n || rank_of_[x] != -1)
                throw InvalidArgument("order is not a permutation of 1.." + std::to_string(n));
            rank_of_[x] = pos;
        }
    }

    static AlphabetOrder natural(int n) {
        IntVector v(n);
        for (int i = 0; i < n; ++i) v[i] = i + 1;
        return AlphabetOrder(std::move(v));
    }

    int size() const { return static_cast<int>(letters_.size()); }
    int rank(int letter) const { return rank_of_.at(letter); }
    const IntVector& letters() const { return letters_; }
    bool is_natural() const { return std::is_sorted(letters_.begin(), letters_.end()); }

    bool operator==(const AlphabetOrder& o) const { return letters_ == o.letters_; }

private:
    IntVector letters_;
    IntVector rank_of_;
};

struct Word {
    IntVector letters;

    Word() = default;
    Word(std::initializer_list<int> l) : letters(l) {}
    explicit Word(IntVector l) : letters(std::move(l)) {}

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    bool operator==(const Word&) const = default;

    IntVector weight(int rank) const {
        IntVector w(rank, 0);
        for (int x : letters) ++w.at(x - 1);
        return w;
    }

    Word operator+(const Word& o) const {
        Word r = *this;
        r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
        return r;
    }
};

// Digits for rank <= 9, comma separated otherwise.
inline std::string to_string(const Word& w, int rank) {
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (rank > 9 && k > 0) s += ',';
        s += std::to_string(w.letters[k]);
    }
    return s;
}

inline Word parse_word(const std::string& text, int rank) {
    Word w;
    if (rank <= 9 && text.find(',') == std::string::npos) {
        for (char c : text) {
            if (c < '1' || c > '9') throw InvalidArgument("bad letter in word '" + text + "'");
            w.letters.push_back(c - '0');
        }
    } else {
        std::size_t pos = 0;
        while (pos <= text.size() && !text.empty()) {
            auto next = text.find(',', pos);
            std::string tok = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
            try {
                w.letters.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw InvalidArgument("bad letter in word '" + text + "'");
            }
            if (next == std::string::npos) break;
            pos = next + 1;
        }
    }
    for (int x : w.letters)
        if (x < 1 || x > rank) throw InvalidArgument("letter out of range in word '" + text + "'");
    return w;
}

// Lexicographic order induced by `order`; a proper prefix is smaller.
inline std::strong_ordering lex_compare(const AlphabetOrder& order, const Word& u, const Word& v) {
    std::size_t n = std::min(u.size(), v.size());
    for (std::size_t k = 0; k < n; ++k) {
        int a = order.rank(u.letters[k]), b = order.rank(v.letters[k]);
        if (a != b) return a <=> b;
    }
    return u.size() <=> v.size();
}

inline bool is_lyndon(const AlphabetOrder& order, const Word& u) {
    if (u.empty()) throw InvalidArgument("is_lyndon: empty word");
    for (std::size_t k = 1; k < u.size(); ++k) {
        Word suffix(IntVector(u.letters.begin() + static_cast<long>(k), u.letters.end()));
        if (lex_compare(order, u, suffix) >= 0) return false;
    }
    return true;
}

// Duval's algorithm: the unique factorization into a nonincreasing sequence
// of Lyndon words.
inline std::vector<Word> cfl_factorize(const AlphabetOrder& order, const Word& u) {
    if (u.empty()) throw InvalidArgument("cfl_factorize: empty word");
    std::vector<Word> factors;
    const auto& s = u.letters;
    std::size_t n = s.size(), i = 0;
    while (i < n) {
        std::size_t j = i + 1, k = i;
        while (j < n && order.rank(s[k]) <= order.rank(s[j])) {
            k = order.rank(s[k]) < order.rank(s[j]) ? i : k + 1;
            ++j;
        }
        while (i <= k) {
            factors.emplace_back(IntVector(s.begin() + static_cast<long>(i), s.begin() + static_cast<long>(i + j - k)));
            i += j - k;
        }
    }
    return factors;
}

// Bijection between positive roots and good Lyndon words for a fixed order.
class GoodLyndonTable {
public:
    const AlphabetOrder& order() const { return order_; }
    const CartanData& cartan() const { return cartan_; }
    int size() const { return static_cast<int>(words_.size()); }

    // Word attached to the positive root with index `root` in cartan().positive_roots.
    const Word& word_of_root(int root) const { return words_.at(root); }
    const Word& word_of_root(const IntVector& beta) const {
        auto idx = cartan_.root_index(beta);
        if (!idx) throw InvalidArgument("not a positive root");
        return words_[*idx];
    }

    // Root indices sorted by increasing word.
    const IntVector& sorted_roots() const { return sorted_; }
    const Word& sorted_word(int p) const { return words_[sorted_[p]]; }
    int position_of_root(int root) const { return position_[root]; }

    std::optional<int> root_of_word(const Word& w) const {
        auto it = by_word_.find(w.letters);
        if (it == by_word_.end()) return std::nullopt;
        return it->second;
    }

    bool is_good_lyndon(const Word& w) const { return root_of_word(w).has_value(); }

    // Build a table; see compute_good_lyndon.
    static GoodLyndonTable build(const CartanData& cd, const AlphabetOrder& order);

private:
    CartanData cartan_;
    AlphabetOrder order_;
    std::vector<Word> words_;
    IntVector sorted_;
    IntVector position_;
    std::map<IntVector, int> by_word_;
};

// i_beta = (i) for simple roots; otherwise the lexicographic maximum of
// i_gamma i_delta over beta = gamma + delta with i_gamma < i_delta.
inline GoodLyndonTable GoodLyndonTable::build(const CartanData& cd, const AlphabetOrder& order) {
    if (order.size() != cd.rank) throw InvalidArgument("order size does not match rank");
    if (cd.is_exceptional() && !order.is_natural())
        throw UnsupportedConfiguration("exceptional type " + cd.name() +
                                       " is only supported with the natural order");
    GoodLyndonTable t;
    t.cartan_ = cd;
    t.order_ = order;
    int r = cd.num_positive_roots();
    t.words_.resize(r);
    for (int b = 0; b < r; ++b) {  // roots are sorted by height
        const IntVector& beta = cd.positive_roots[b];
        if (cd.heights[b] == 1) {
            int i = static_cast<int>(std::find(beta.begin(), beta.end(), 1) - beta.begin()) + 1;
            t.words_[b] = Word{i};
            continue;
        }
        std::optional<Word> best;
        for (int g = 0; g < b && cd.heights[g] < cd.heights[b]; ++g) {
            IntVector delta = beta;
            for (int i = 0; i < cd.rank; ++i) delta[i] -= cd.positive_roots[g][i];
            auto d = cd.root_index(delta);
            if (!d) continue;
            const Word& wg = t.words_[g];
            const Word& wd = t.words_[*d];
            if (lex_compare(order, wg, wd) >= 0) continue;
            Word cand = wg + wd;
            if (!best || lex_compare(order, cand, *best) > 0) best = cand;
        }
        if (!best) throw InvariantViolation("no decomposition found for a non-simple root");
        t.words_[b] = *best;
    }
    t.sorted_.resize(r);
    for (int b = 0; b < r; ++b) t.sorted_[b] = b;
    std::sort(t.sorted_.begin(), t.sorted_.end(),
              [&](int x, int y) { return lex_compare(order, t.words_[x], t.words_[y]) < 0; });
    t.position_.resize(r);
    for (int p = 0; p < r; ++p) t.position_[t.sorted_[p]] = p;
    for (int b = 0; b < r; ++b) {
        if (!is_lyndon(order, t.words_[b])) throw InvariantViolation("good Lyndon word is not Lyndon");
        if (!t.by_word_.emplace(t.words_[b].letters, b).second)
            throw InvariantViolation("good Lyndon words are not distinct");
    }
    return t;
}

inline GoodLyndonTable compute_good_lyndon(const CartanData& cd, const AlphabetOrder& order) {
    return GoodLyndonTable::build(cd, order);
}

// A dominant word, stored by its exponent vector over the sorted good Lyndon
// words. Factors are materialized in nonincreasing order.
struct DominantWord {
    std::vector<Word> factors;
    IntVector exponents;

    Word word() const {
        Word w;
        for (const auto& f : factors) w = w + f;
        return w;
    }
    int length() const {
        int n = 0;
        for (const auto& f : factors) n += static_cast<int>(f.size());
        return n;
    }
    bool operator==(const DominantWord& o) const { return exponents == o.exponents; }
};

inline DominantWord dominant_from_exponents(const GoodLyndonTable& table, const IntVector& exponents) {
    if (static_cast<int>(exponents.size()) != table.size())
        throw InvalidArgument("exponent vector has wrong length");
    DominantWord d;
    d.exponents = exponents;
    for (int p = table.size() - 1; p >= 0; --p) {
        if (exponents[p] < 0) throw InvalidArgument("negative exponent");
        for (int c = 0; c < exponents[p]; ++c) d.factors.push_back(table.sorted_word(p));
    }
    return d;
}

inline DominantWord empty_dominant(const GoodLyndonTable& table) {
    return dominant_from_exponents(table, IntVector(table.size(), 0));
}

// The dominant word for u if every Lyndon factor of u is good.
inline std::optional<DominantWord> is_dominant(const GoodLyndonTable& table, const Word& u) {
    if (u.empty()) return empty_dominant(table);
    IntVector exps(table.size(), 0);
    for (const auto& f : cfl_factorize(table.order(), u)) {
        auto root = table.root_of_word(f);
        if (!root) return std::nullopt;
        ++exps[table.position_of_root(*root)];
    }
    return dominant_from_exponents(table, exps);
}

// mu (.) nu: multiset union of factors, sorted nonincreasing.
inline DominantWord odot(const GoodLyndonTable& table, const DominantWord& mu, const DominantWord& nu) {
    IntVector sum(table.size(), 0);
    for (int p = 0; p < table.size(); ++p) sum[p] = mu.exponents.at(p) + nu.exponents.at(p);
    return dominant_from_exponents(table, sum);
}

// Lexicographically largest shuffle of u and v by exhaustive enumeration.
inline Word shuffle_max_oracle(const AlphabetOrder& order, const Word& u, const Word& v, std::size_t bound = 14) {
    std::size_t n = u.size() + v.size();
    if (n > bound) throw InvalidArgument("shuffle_max_oracle: |u|+|v| exceeds bound");
    Word best;
    bool have = false;
    // Bit k of mask set: position k takes the next letter of u.
    for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountl(mask)) != u.size()) continue;
        Word s;
        s.letters.reserve(n);
        std::size_t iu = 0, iv = 0;
        for (std::size_t k = 0; k < n; ++k)
            s.letters.push_back((mask >> k) & 1UL ? u.letters[iu++] : v.letters[iv++]);
        if (!have || lex_compare(order, s, best) > 0) {
            best = std::move(s);
            have = true;
        }
    }
    return best;
}

}  // namespace okseed
