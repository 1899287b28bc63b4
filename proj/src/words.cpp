#include "tfpl/words.hpp"

namespace tfpl {

std::vector<Word> all_words(int n) {
    std::vector<Word> out;
    out.reserve(size_t(1) << n);
    for (unsigned m = 0; m < (1u << n); ++m) {
        Word w(n, '0');
        for (int i = 0; i < n; ++i)
            if (m & (1u << i)) w[i] = '1';
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<Word> words_with_content(int zeros, int ones) {
    std::vector<Word> out;
    Word w(zeros, '0');
    w.append(ones, '1');
    std::sort(w.begin(), w.end());
    do {
        out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::vector<std::pair<Word, int>> feasibility(const Word& w) {
    require_word(w);
    WordStats s = word_stats(w);
    std::vector<std::pair<Word, int>> out;
    for (const Word& wp : words_with_content(s.zeros, s.ones))
        if (auto g = feasibility_g(w, wp)) out.emplace_back(wp, *g);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int da = inversions(a.first), db = inversions(b.first);
        if (da != db) return da < db;
        return a.first < b.first;
    });
    return out;
}

}  // namespace tfpl
