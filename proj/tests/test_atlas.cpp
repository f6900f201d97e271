#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "lenscf/atlas.hpp"
#include "lenscf/blowup.hpp"
#include "lenscf/verify.hpp"

using namespace lenscf;

namespace {

std::vector<Word> filling_indices(const std::vector<FillingDescriptor>& fs) {
    std::vector<Word> out;
    for (const auto& f : fs) out.push_back(f.n);
    return out;
}

Int word_sum(const Word& w) {
    Int s = 0;
    for (const auto& e : w) s += e;
    return s;
}

}  // namespace

TEST_CASE("make_lens on fixed pairs") {
    const LensSpace l41 = make_lens(4, 1);
    CHECK(l41.b_string == make_word({2, 2, 2}));
    CHECK(l41.a_string == make_word({4}));
    CHECK(l41.k == 3);
    CHECK(l41.h == 1);

    const LensSpace l76 = make_lens(7, 6);
    CHECK(l76.b_string == make_word({7}));
    CHECK(l76.a_string == make_word({2, 2, 2, 2, 2, 2}));
    CHECK(l76.k == 1);
    CHECK(l76.h == 6);

    const LensSpace l92 = make_lens(9, 2);
    CHECK(l92.b_string == make_word({2, 2, 2, 3}));
    CHECK(l92.a_string == make_word({5, 2}));

    CHECK_THROWS_AS(make_lens(4, 2), std::invalid_argument);  // not coprime
    CHECK_THROWS_AS(make_lens(3, 3), std::invalid_argument);  // p = q
    CHECK_THROWS_AS(make_lens(2, 3), std::invalid_argument);  // p < q
    CHECK_THROWS_AS(make_lens(5, 0), std::invalid_argument);  // q < 1
    CHECK_THROWS_AS(make_lens(1, 1), std::invalid_argument);
}

TEST_CASE("lens expansions evaluate back and satisfy the length identity") {
    for (long p = 2; p <= 80; ++p) {
        for (long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const LensSpace lens = make_lens(p, q);
            CHECK(cf_eval(lens.b_string) ==
                  CFValue::ok(Rational(Int(p), Int(p - q))));
            CHECK(cf_eval(lens.a_string) == CFValue::ok(Rational(Int(p), Int(q))));
            CHECK(word_sum(lens.a_string) - lens.h ==
                  word_sum(lens.b_string) - lens.k);
            CHECK(word_sum(lens.a_string) - lens.h == lens.h + lens.k - 1);
        }
    }
}

TEST_CASE("artin_word") {
    CHECK(artin_word(1) == make_word({0}));
    CHECK(artin_word(2) == make_word({1, 1}));
    CHECK(artin_word(3) == make_word({1, 2, 1}));
    CHECK(artin_word(6) == make_word({1, 2, 2, 2, 2, 1}));
    CHECK_THROWS_AS(artin_word(0), std::invalid_argument);
}

TEST_CASE("enumerate_fillings on fixed pairs") {
    SUBCASE("(4,1): the two-filling exception") {
        const auto fs = enumerate_fillings(make_lens(4, 1));
        REQUIRE(fs.size() == 2);
        CHECK(fs[0].n == make_word({1, 2, 1}));
        CHECK(fs[1].n == make_word({2, 1, 2}));
        CHECK(fs[0].rank_h2 == 1);
        CHECK(fs[1].rank_h2 == 0);
        CHECK(fs[0].is_artin);
        CHECK_FALSE(fs[1].is_artin);
        CHECK_FALSE(fs[0].is_rational_homology_ball);
        CHECK(fs[1].is_rational_homology_ball);
        for (const auto& f : fs) CHECK(replay_witness(f.n, f.witness));
    }
    SUBCASE("(7,6): the k=1 canonical resolution") {
        const auto fs = enumerate_fillings(make_lens(7, 6));
        REQUIRE(fs.size() == 1);
        CHECK(fs[0].n == make_word({0}));
        CHECK(fs[0].rank_h2 == 6);
        CHECK(fs[0].is_artin);
        CHECK(fs[0].witness.steps.empty());
    }
    SUBCASE("(9,2): one resolution, one rational homology ball") {
        const auto fs = enumerate_fillings(make_lens(9, 2));
        REQUIRE(fs.size() == 2);
        CHECK(fs[0].n == make_word({1, 2, 2, 1}));
        CHECK(fs[1].n == make_word({2, 2, 1, 3}));
        CHECK(fs[0].rank_h2 == 2);
        CHECK(fs[1].rank_h2 == 0);
        CHECK(fs[1].is_rational_homology_ball);
    }
    SUBCASE("(5,1): unique filling") {
        const auto fs = enumerate_fillings(make_lens(5, 1));
        REQUIRE(fs.size() == 1);
        CHECK(fs[0].n == make_word({1, 2, 2, 1}));
        CHECK(fs[0].rank_h2 == 1);
    }
}

TEST_CASE("rank_h2 on fixed members, and its membership guard") {
    CHECK(rank_h2(make_word({1, 2, 2, 1}), make_word({2, 2, 2, 2})) == 1);
    CHECK(rank_h2(make_word({2, 2, 1, 3}), make_word({2, 2, 2, 3})) == 0);
    CHECK(rank_h2(make_word({0}), make_word({7})) == 6);
    CHECK(rank_h2(make_word({1, 2, 1}), make_word({2, 2, 2})) == 1);
    // inadmissible word
    CHECK_THROWS_AS(rank_h2(make_word({1, 1, 1}), make_word({2, 2, 2})),
                    std::invalid_argument);
    // bounds violated
    CHECK_THROWS_AS(rank_h2(make_word({2, 1, 2}), make_word({2, 2, 1})),
                    std::invalid_argument);
    // wrong length
    CHECK_THROWS_AS(rank_h2(make_word({1, 1}), make_word({2, 2, 2})),
                    std::invalid_argument);
    // value 0 but not blowdown-reducible: not an index, so rejected
    CHECK_THROWS_AS(rank_h2(make_word({2, 1, 1, 1, 1, 2}),
                            make_word({6, 6, 6, 6, 6, 6})),
                    std::invalid_argument);
}

TEST_CASE("kollar_condition on fixed pairs") {
    CHECK(kollar_condition(make_lens(5, 1)));
    CHECK_FALSE(kollar_condition(make_lens(4, 1)));
    CHECK(kollar_condition(make_lens(29, 5)));

    const Atlas a = build_atlas(make_lens(29, 5));
    CHECK(a.lens.a_string == make_word({6, 5}));
    CHECK(a.lens.b_string == make_word({2, 2, 2, 2, 3, 2, 2, 2}));
    REQUIRE(a.fillings.size() == 1);
    CHECK(a.fillings[0].rank_h2 == 2);
    CHECK(a.unique_up_to_blowup);
    CHECK(a.kollar_certified);
}

TEST_CASE("nrs_family on fixed pairs") {
    const LensSpace l = make_lens(144, 89);
    CHECK(l.b_string == make_word({3, 3, 3, 3, 3}));
    CHECK(nrs_family(l) == std::vector<Word>{make_word({1, 2, 3, 1, 2}),
                                             make_word({1, 3, 2, 1, 3})});
    CHECK(nrs_family(make_lens(4, 1)).empty());  // k=3 < 4
    CHECK(nrs_family(make_lens(55, 34)) ==
          std::vector<Word>{make_word({1, 3, 1, 2})});
}

TEST_CASE("build_atlas on fixed pairs") {
    SUBCASE("(4,1)") {
        const Atlas a = build_atlas(make_lens(4, 1));
        CHECK(a.fillings.size() == 2);
        CHECK_FALSE(a.unique_up_to_blowup);
        CHECK_FALSE(a.kollar_certified);
        CHECK(a.nrs_members.empty());
        CHECK(a.filling_count_lower_bound == 1);
    }
    SUBCASE("(7,1)") {
        const Atlas a = build_atlas(make_lens(7, 1));
        CHECK(a.fillings.size() == 1);
        CHECK(a.unique_up_to_blowup);
    }
    SUBCASE("(144,89): dense b-string with nine fillings") {
        const Atlas a = build_atlas(make_lens(144, 89));
        CHECK(a.lens.a_string == make_word({2, 3, 3, 3, 3, 2}));
        const std::vector<Word> expected_n = {
            make_word({1, 2, 2, 2, 1}), make_word({1, 2, 3, 1, 2}),
            make_word({1, 3, 1, 3, 1}), make_word({1, 3, 2, 1, 3}),
            make_word({2, 1, 3, 2, 1}), make_word({2, 3, 1, 2, 3}),
            make_word({3, 1, 2, 3, 1}), make_word({3, 1, 3, 1, 3}),
            make_word({3, 2, 1, 3, 2})};
        CHECK(filling_indices(a.fillings) == expected_n);
        const std::vector<long> expected_rank = {6, 5, 5, 4, 5, 3, 4, 3, 3};
        REQUIRE(a.fillings.size() == expected_rank.size());
        for (std::size_t i = 0; i < expected_rank.size(); ++i)
            CHECK(a.fillings[i].rank_h2 == expected_rank[i]);
        CHECK_FALSE(a.unique_up_to_blowup);
        CHECK(a.nrs_members == std::vector<Word>{make_word({1, 2, 3, 1, 2}),
                                                 make_word({1, 3, 2, 1, 3})});
        CHECK(a.filling_count_lower_bound == 3);  // ranks {6,5,4}
    }
    SUBCASE("(55,34)") {
        const Atlas a = build_atlas(make_lens(55, 34));
        const std::vector<Word> expected_n = {
            make_word({1, 2, 2, 1}), make_word({1, 3, 1, 2}),
            make_word({2, 1, 3, 1}), make_word({2, 2, 1, 3}),
            make_word({3, 1, 2, 2})};
        CHECK(filling_indices(a.fillings) == expected_n);
        const std::vector<long> expected_rank = {5, 4, 4, 3, 3};
        for (std::size_t i = 0; i < expected_rank.size(); ++i)
            CHECK(a.fillings[i].rank_h2 == expected_rank[i]);
        CHECK(a.nrs_members == std::vector<Word>{make_word({1, 3, 1, 2})});
        CHECK(a.filling_count_lower_bound == 2);  // ranks {5,4}
    }
}

TEST_CASE("atlas structural invariants over a sweep") {
    sweep(120, SweepFilter::all, [&](const Atlas& a) {
        CHECK(a.unique_up_to_blowup == (a.fillings.size() == 1));
        if (a.kollar_certified) CHECK(a.unique_up_to_blowup);
        CHECK(a.filling_count_lower_bound >= 1);
        CHECK(a.filling_count_lower_bound <=
              static_cast<long>(a.fillings.size()));
        CHECK(std::is_sorted(a.fillings.begin(), a.fillings.end(),
                             [](const FillingDescriptor& x,
                                const FillingDescriptor& y) {
                                 return x.n < y.n;
                             }));
        const Int sum_b = word_sum(a.lens.b_string);
        int artin_count = 0;
        for (const auto& f : a.fillings) {
            if (f.is_artin) ++artin_count;
            CHECK(f.rank_h2 >= 0);
            CHECK(f.is_rational_homology_ball == (f.rank_h2 == 0));
            CHECK((word_sum(f.n) == sum_b - 1) == (f.rank_h2 == 0));
        }
        CHECK(artin_count == 1);
        const auto ns = filling_indices(a.fillings);
        for (const auto& m : a.nrs_members)
            CHECK(std::binary_search(ns.begin(), ns.end(), m));
        if (!a.nrs_members.empty()) {
            CHECK(static_cast<long>(a.nrs_members.size()) == a.lens.k - 3);
            std::set<Int> ranks;
            for (const auto& m : a.nrs_members)
                ranks.insert(rank_h2(m, a.lens.b_string));
            CHECK(ranks.size() == a.nrs_members.size());
            CHECK(static_cast<long>(a.fillings.size()) >= a.lens.k - 3);
        }
    });
}

TEST_CASE("Artin membership over p <= 300") {
    long pairs = 0;
    for (long p = 2; p <= 300; ++p) {
        for (long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            ++pairs;
            const LensSpace lens = make_lens(p, q);
            const auto fs = enumerate_fillings(lens);
            if (lens.k == 1) {
                REQUIRE(fs.size() == 1);
                CHECK(fs[0].n == make_word({0}));
                continue;
            }
            const Word artin = artin_word(lens.k);
            bool found = false;
            for (const auto& f : fs)
                if (f.n == artin) {
                    found = true;
                    CHECK(f.is_artin);
                }
            if (!found) {
                CAPTURE(p);
                CAPTURE(q);
                REQUIRE(found);
            }
        }
    }
    CHECK(pairs == 27397);
}

TEST_CASE("index sets from the reversed b-string are the reversed index sets") {
    for (long p = 2; p <= 200; ++p) {
        for (long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const Word b = hj_expand(p, p - q);
            const auto direct = enumerate_zero_words_bounded(b);
            auto reversed = enumerate_zero_words_bounded(reverse(b));
            for (auto& w : reversed) w = reverse(w);
            std::sort(reversed.begin(), reversed.end());
            if (!(direct == reversed)) {
                CAPTURE(p);
                CAPTURE(q);
                REQUIRE(direct == reversed);
            }
        }
    }
}

TEST_CASE("generator matches the certified brute-force oracle for p <= 60") {
    const SuiteResult res = verify_oracle_equivalence(60);
    INFO(res.detail);
    CHECK(res.pass);
    CHECK(res.checked == 1101);
}

TEST_CASE("sweep cell order and filters") {
    const auto cells = sweep_cells(4);
    const std::vector<std::pair<Int, Int>> expected = {
        {2, 1}, {3, 1}, {3, 2}, {4, 1}, {4, 3}};
    CHECK(cells == expected);

    long count = 0;
    std::pair<Int, Int> prev{0, 0};
    sweep(10, SweepFilter::all, [&](const Atlas& a) {
        ++count;
        CHECK(std::pair<Int, Int>{a.lens.p, a.lens.q} > prev);
        prev = {a.lens.p, a.lens.q};
    });
    CHECK(count == 31);

    bool saw41 = false;
    sweep(100, SweepFilter::multiple, [&](const Atlas& a) {
        CHECK(a.fillings.size() > 1);
        if (a.lens.p == 4 && a.lens.q == 1) saw41 = true;
    });
    CHECK(saw41);

    sweep(100, SweepFilter::kollar, [&](const Atlas& a) {
        CHECK(a.kollar_certified);
        CHECK(a.fillings.size() == 1);
        CHECK(a.fillings[0].is_artin);
    });

    bool saw92 = false;
    sweep(50, SweepFilter::qhb_present, [&](const Atlas& a) {
        bool ball = false;
        for (const auto& f : a.fillings) ball = ball || f.is_rational_homology_ball;
        CHECK(ball);
        if (a.lens.p == 9 && a.lens.q == 2) saw92 = true;
    });
    CHECK(saw92);

    sweep(60, SweepFilter::unique, [&](const Atlas& a) {
        CHECK(a.fillings.size() == 1);
    });
}
