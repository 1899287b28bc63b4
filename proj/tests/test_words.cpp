#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tfpl/words.hpp"

using namespace tfpl;

namespace {

// independent oracle: quadratic pair count
int inversions_brute(const Word& w) {
    int d = 0;
    for (size_t i = 0; i < w.size(); ++i)
        for (size_t j = i + 1; j < w.size(); ++j)
            if (w[i] == '1' && w[j] == '0') ++d;
    return d;
}

Word star_brute(const Word& u) {
    Word r;
    for (auto it = u.rbegin(); it != u.rend(); ++it) r += (*it == '0') ? '1' : '0';
    return r;
}

}  // namespace

TEST_CASE("word_stats") {
    CHECK(word_stats("0101011110").inversions == 9);
    CHECK(word_stats("0101011110").inversions == inversions_brute("0101011110"));
    CHECK(word_stats("0000000").inversions == 0);
    CHECK(word_stats("1100").inversions == 4);
    CHECK(word_stats("1100").inversions == inversions_brute("1100"));
    for (const Word& w : all_words(8)) {
        WordStats s = word_stats(w);
        CHECK(s.inversions == inversions_brute(w));
        CHECK(s.zeros + s.ones == 8);
    }
}

TEST_CASE("dominance order") {
    CHECK(dominance_leq("0101", "0110"));
    CHECK(dominance_leq("0101", "0101"));
    CHECK_FALSE(dominance_leq("0110", "0101"));
    CHECK_THROWS_AS(dominance_leq("01", "011"), std::invalid_argument);

    // partial order; on fixed content it is shape inclusion
    for (const Word& u : all_words(6))
        for (const Word& v : all_words(6)) {
            bool le = dominance_leq(u, v);
            if (le && dominance_leq(v, u)) CHECK(u == v);
            if (same_content(u, v)) CHECK(le == shape_of(v).contains(shape_of(u)));
        }
    // transitivity spot check on length 5
    auto ws = all_words(5);
    for (const Word& a : ws)
        for (const Word& b : ws)
            for (const Word& c : ws)
                if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
}

TEST_CASE("shape_of") {
    CHECK(shape_of("0011").empty());
    CHECK(shape_of("0101") == Shape({1}));
    CHECK(shape_of("1100") == Shape({2, 2}));
    for (const Word& u : all_words(10)) {
        CHECK(shape_of(u).cells() == inversions(u));
        CHECK(shape_of(star(u)).cells() == inversions(u));
        CHECK(shape_of(star(u)) == shape_of(u).conjugate());
    }
}

TEST_CASE("star") {
    CHECK(star("0101") == "0101");
    CHECK(star("0110") == "1001");
    for (const Word& u : all_words(9)) {
        CHECK(star(u) == star_brute(u));
        CHECK(star(star(u)) == u);
        CHECK(zeros_of(star(u)) == ones_of(u));
        CHECK(inversions(star(u)) == inversions(u));
    }
}

TEST_CASE("covers") {
    auto cs = covers("0101");
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].up == "1001");
    CHECK(cs[0].L0 == 0);
    CHECK(cs[0].L1 == 0);
    CHECK(cs[0].R0 == 1);  // u_R = "01"
    CHECK(cs[0].R1 == 1);
    CHECK(cs[1].up == "0110");
    CHECK(cs[1].L0 == 1);
    CHECK(cs[1].L1 == 1);
    CHECK(cs[1].R0 == 0);
    CHECK(cs[1].R1 == 0);

    CHECK(covers("1100").empty());
    auto c01 = covers("01");
    REQUIRE(c01.size() == 1);
    CHECK(c01[0].up == "10");
    CHECK(c01[0].L0 + c01[0].L1 + c01[0].R0 + c01[0].R1 == 0);

    for (const Word& u : all_words(8))
        for (const Cover& c : covers(u)) {
            CHECK(dominance_leq(u, c.up));
            CHECK(inversions(c.up) == inversions(u) + 1);
            CHECK(shape_of(c.up).cells() == shape_of(u).cells() + 1);
            CHECK(shape_of(c.up).contains(shape_of(u)));
        }
    // cocovers invert covers
    for (const Word& u : all_words(7)) {
        for (const Cover& c : cocovers(u)) {
            CHECK(c.up == u);
            CHECK(inversions(c.down) == inversions(u) - 1);
            CHECK(dominance_leq(c.down, u));
        }
        int n_up = 0;
        for (const Word& x : all_words(7))
            for (const Cover& c : covers(x))
                if (c.up == u) ++n_up;
        CHECK(n_up == int(cocovers(u).size()));
    }
}

TEST_CASE("extended link patterns") {
    // the pattern with left points {3,4}, right point {11}
    Word w = "011100101100011";
    ExtendedLinkPattern pi = word_to_pattern(w);
    CHECK(pi.left == std::vector<int>{3, 4});
    CHECK(pi.right == std::vector<int>{11});
    CHECK(pattern_to_word(pi) == w);

    // a plain link pattern: Dyck word, no left or right points
    ExtendedLinkPattern pl = word_to_pattern("00100101110101");
    CHECK(pl.left.empty());
    CHECK(pl.right.empty());
    CHECK(pl.pairs.size() == 7);

    ExtendedLinkPattern empty;
    CHECK(pattern_to_word(empty) == "");

    ExtendedLinkPattern single;
    single.n = 2;
    single.pairs = {{1, 2}};
    CHECK(pattern_to_word(single) == "01");

    for (int n = 0; n <= 12; ++n)
        for (const Word& x : all_words(n)) CHECK(pattern_to_word(word_to_pattern(x)) == x);
}

TEST_CASE("feasibility") {
    // paper instance: g = 3 via reorienting {1,2},{5,10},{6,7}
    auto g = feasibility_g("101111001000011", "011100101100011");
    REQUIRE(g.has_value());
    CHECK(*g == 3);

    auto f = feasibility("0101");  // ordered by (d, lex)
    REQUIRE(f.size() == 2);
    CHECK(f[0] == std::pair<Word, int>{"0011", 1});
    CHECK(f[1] == std::pair<Word, int>{"0101", 0});

    for (const Word& w : all_words(8)) {
        bool self_found = false;
        for (auto& [wp, gg] : feasibility(w)) {
            if (wp == w) {
                self_found = true;
                CHECK(gg == 0);
            } else {
                CHECK(gg >= 1);
                CHECK(inversions(w) - inversions(wp) >= 1);
            }
            CHECK(dominance_leq(wp, w));
            // directed-pattern reconstruction agrees
            ExtendedLinkPattern pi = word_to_pattern(wp);
            DirectedExtendedLinkPattern dp;
            dp.pattern = pi;
            for (auto [i, j] : pi.pairs)
                dp.right_to_left.push_back(w[i - 1] == '1' && w[j - 1] == '0');
            CHECK(dp.source_sink_word() == w);
            CHECK(dp.rl_count() == gg);
        }
        CHECK(self_found);
    }
}

TEST_CASE("feasibility d-difference") {
    // flipping arch (i,j) raises the inversion count by j-i, so
    // d(w) - d(w') = sum of arch spans >= g, equality iff all arches short
    for (const Word& w : all_words(8))
        for (auto& [wp, g] : feasibility(w)) {
            int span = 0, flips = 0;
            for (auto [i, j] : word_to_pattern(wp).pairs)
                if (w[i - 1] == '1' && w[j - 1] == '0') {
                    span += j - i;
                    ++flips;
                }
            CHECK(flips == g);
            CHECK(inversions(w) - inversions(wp) == span);
            CHECK(span >= g);
        }
}
