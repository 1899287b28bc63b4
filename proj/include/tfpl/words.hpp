#pragma once

// Binary words, Ferrers shapes, extended link patterns and the
// feasibility relation between words.

#include <algorithm>
#include <cassert>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tfpl {

// A word is a finite sequence over {0,1}, stored as an ASCII string of
// '0'/'1'. The empty word is allowed.
using Word = std::string;

inline bool is_word(const Word& w) {
    return std::all_of(w.begin(), w.end(), [](char c) { return c == '0' || c == '1'; });
}

inline void require_word(const Word& w) {
    if (!is_word(w)) throw std::invalid_argument("not a 01-word: \"" + w + "\"");
}

struct WordStats {
    int zeros = 0;
    int ones = 0;
    int inversions = 0;  // #{(i,j) : i<j, w_i=1, w_j=0}
};

inline WordStats word_stats(const Word& w) {
    WordStats s;
    for (char c : w) {
        if (c == '1') {
            ++s.ones;
        } else {
            ++s.zeros;
            s.inversions += s.ones;  // every 1 seen so far inverts with this 0
        }
    }
    return s;
}

// d(w) = inversion number.
inline int inversions(const Word& w) { return word_stats(w).inversions; }
inline int zeros_of(const Word& w) { return word_stats(w).zeros; }
inline int ones_of(const Word& w) { return word_stats(w).ones; }

inline bool same_content(const Word& u, const Word& v) {
    return u.size() == v.size() && ones_of(u) == ones_of(v);
}

// Dominance order: u <= v iff every prefix of u has at most as many 1s as
// the corresponding prefix of v. Requires equal lengths.
inline bool dominance_leq(const Word& u, const Word& v) {
    if (u.size() != v.size()) throw std::invalid_argument("dominance_leq: length mismatch");
    int cu = 0, cv = 0;
    for (size_t i = 0; i < u.size(); ++i) {
        cu += u[i] == '1';
        cv += v[i] == '1';
        if (cu > cv) return false;
    }
    return true;
}

// u* = reversed complement.
inline Word star(const Word& u) {
    Word r(u.rbegin(), u.rend());
    for (char& c : r) c = (c == '0') ? '1' : '0';
    return r;
}

inline Word reversed(const Word& u) { return Word(u.rbegin(), u.rend()); }

// exc(u,v;w) = d(w) - d(u) - d(v).
inline int excess(const Word& u, const Word& v, const Word& w) {
    return inversions(w) - inversions(u) - inversions(v);
}

// ---------------------------------------------------------------------------
// Ferrers shapes

// Weakly decreasing parts, trailing zeros trimmed.
struct Shape {
    std::vector<int> parts;

    Shape() = default;
    explicit Shape(std::vector<int> p) : parts(std::move(p)) {
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        for (size_t i = 1; i < parts.size(); ++i) assert(parts[i - 1] >= parts[i]);
        for (int x : parts) assert(x > 0);
    }

    int rows() const { return static_cast<int>(parts.size()); }
    int row(int i) const { return i < rows() ? parts[i] : 0; }
    bool empty() const { return parts.empty(); }

    int cells() const {
        int n = 0;
        for (int p : parts) n += p;
        return n;
    }

    bool contains(const Shape& mu) const {
        if (mu.rows() > rows()) return false;
        for (int i = 0; i < mu.rows(); ++i)
            if (mu.parts[i] > parts[i]) return false;
        return true;
    }

    Shape conjugate() const {
        std::vector<int> c;
        if (!parts.empty()) {
            c.assign(parts[0], 0);
            for (int p : parts)
                for (int j = 0; j < p; ++j) ++c[j];
        }
        return Shape(std::move(c));
    }

    bool operator==(const Shape& o) const { return parts == o.parts; }
    bool operator!=(const Shape& o) const { return !(*this == o); }
};

// lambda(u): row k is the number of 0s to the right of the k-th 1 of u.
// This convention satisfies |lambda(u)| = d(u), dominance = inclusion on
// fixed content, and lambda(u*) = conjugate of lambda(u).
inline Shape shape_of(const Word& u) {
    int zeros_right = 0;
    std::vector<int> parts;
    for (auto it = u.rbegin(); it != u.rend(); ++it) {
        if (*it == '0')
            ++zeros_right;
        else
            parts.push_back(zeros_right);
    }
    std::reverse(parts.begin(), parts.end());
    return Shape(std::move(parts));
}

// ---------------------------------------------------------------------------
// Covers in dominance order: u -> u+ flips one "01" factor to "10".

struct Cover {
    Word down;           // the covered word u
    Word up;             // the covering word u+
    int pos = 0;         // index of the '0' in the flipped "01" (0-based)
    int L0 = 0, L1 = 0;  // letter counts strictly left of the factor
    int R0 = 0, R1 = 0;  // letter counts strictly right of the factor
    int L() const { return L0 + L1 + 1; }
    int R() const { return R0 + R1 + 1; }
};

inline std::vector<Cover> covers(const Word& u) {
    std::vector<Cover> out;
    WordStats all = word_stats(u);
    int l0 = 0, l1 = 0;
    for (size_t i = 0; i + 1 < u.size(); ++i) {
        if (u[i] == '0' && u[i + 1] == '1') {
            Cover c;
            c.down = u;
            c.up = u;
            c.up[i] = '1';
            c.up[i + 1] = '0';
            c.pos = static_cast<int>(i);
            c.L0 = l0;
            c.L1 = l1;
            c.R0 = all.zeros - l0 - 1;
            c.R1 = all.ones - l1 - 1;
            out.push_back(std::move(c));
        }
        if (u[i] == '0') ++l0; else ++l1;
    }
    return out;
}

// Words u- covered by u (i.e. u- -> u); stats refer to the pair (u-, u).
inline std::vector<Cover> cocovers(const Word& u) {
    std::vector<Cover> out;
    for (size_t i = 0; i + 1 < u.size(); ++i) {
        if (u[i] == '1' && u[i + 1] == '0') {
            Word down = u;
            down[i] = '0';
            down[i + 1] = '1';
            for (Cover& c : covers(down))
                if (c.up == u && c.pos == static_cast<int>(i)) out.push_back(c);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Extended link patterns

// Left points (sinks of half-arches going left), right points, and a
// noncrossing pairing covering everything else. Points are 1-based.
struct ExtendedLinkPattern {
    int n = 0;  // ground set {1..n}
    std::vector<int> left;
    std::vector<int> right;
    std::vector<std::pair<int, int>> pairs;  // (i,j) with i<j

    bool operator==(const ExtendedLinkPattern& o) const {
        return n == o.n && left == o.left && right == o.right && pairs == o.pairs;
    }
};

// A source/sink choice per pair; left points are sinks, right points sources.
struct DirectedExtendedLinkPattern {
    ExtendedLinkPattern pattern;
    std::vector<bool> right_to_left;  // per pair: larger element is the source

    int rl_count() const {
        int n = 0;
        for (bool b : right_to_left) n += b;
        return n;
    }

    // w_i = 0 iff i is a source.
    Word source_sink_word() const {
        Word w(pattern.n, '?');
        for (int l : pattern.left) w[l - 1] = '1';
        for (int r : pattern.right) w[r - 1] = '0';
        for (size_t k = 0; k < pattern.pairs.size(); ++k) {
            auto [i, j] = pattern.pairs[k];
            if (right_to_left[k]) {
                w[i - 1] = '1';
                w[j - 1] = '0';
            } else {
                w[i - 1] = '0';
                w[j - 1] = '1';
            }
        }
        return w;
    }
};

// The bijection w(pi): left points -> 1, right points -> 0, each pairing
// written as a Dyck word (smaller element of a pair -> 0).
inline Word pattern_to_word(const ExtendedLinkPattern& pi) {
    Word w(pi.n, '?');
    for (int l : pi.left) w[l - 1] = '1';
    for (int r : pi.right) w[r - 1] = '0';
    for (auto [i, j] : pi.pairs) {
        w[i - 1] = '0';
        w[j - 1] = '1';
    }
    assert(w.find('?') == Word::npos);
    return w;
}

// Inverse of pattern_to_word. Stack-matching: each '1' closes the most
// recent open '0'; unmatched 1s are left points, unmatched 0s right points.
inline ExtendedLinkPattern word_to_pattern(const Word& w) {
    require_word(w);
    ExtendedLinkPattern pi;
    pi.n = static_cast<int>(w.size());
    std::vector<int> open;
    for (int i = 1; i <= pi.n; ++i) {
        if (w[i - 1] == '0') {
            open.push_back(i);
        } else if (!open.empty()) {
            pi.pairs.emplace_back(open.back(), i);
            open.pop_back();
        } else {
            pi.left.push_back(i);
        }
    }
    pi.right = open;
    std::sort(pi.pairs.begin(), pi.pairs.end());
    return pi;
}

// ---------------------------------------------------------------------------
// Feasibility

// w' is feasible for w iff w is obtained from w' by flipping the endpoint
// letters of some subset of arches of the pattern of w'. Returns the number
// of flipped arches g(w,w') when feasible.
inline std::optional<int> feasibility_g(const Word& w, const Word& wp) {
    if (w.size() != wp.size()) return std::nullopt;
    ExtendedLinkPattern pi = word_to_pattern(wp);
    Word probe = wp;
    int g = 0;
    for (auto [i, j] : pi.pairs) {
        if (w[i - 1] == '1' && w[j - 1] == '0') {
            probe[i - 1] = '1';
            probe[j - 1] = '0';
            ++g;
        }
    }
    if (probe != w) return std::nullopt;
    return g;
}

std::vector<Word> all_words(int n);
std::vector<Word> words_with_content(int zeros, int ones);

// All w' feasible for w, with g(w,w'), ordered by (d, lex).
std::vector<std::pair<Word, int>> feasibility(const Word& w);

}  // namespace tfpl
