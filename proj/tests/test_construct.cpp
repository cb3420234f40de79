#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

#include <wordrep/construct.hpp>

#include <algorithm>
#include <iterator>

using namespace wordrep;

namespace
{
    auto letters(const char * compact) -> std::vector<Letter>
    {
        auto w = parse_word_compact(compact);
        return {w.letters().begin(), w.letters().end()};
    }

    auto as_vector(const Word & w) -> std::vector<Letter>
    {
        return {w.letters().begin(), w.letters().end()};
    }
}

TEST_CASE("endpoint permutations on six letters")
{
    auto family = endpoint_permutations({{1, 2}, {3, 4}, {5, 6}});
    REQUIRE(family.perms.size() == 3);
    CHECK(family.perms[0] == letters("145632"));
    CHECK(family.perms[1] == letters("326514"));
    CHECK(family.perms[2] == letters("541236"));
    CHECK(oracle::both_orders_everywhere(family.perms));
}

TEST_CASE("endpoint permutations keep their endpoints")
{
    PairPartition pairs{{8, 1}, {Letter(2, true), 7}, {3, 6}, {5, 4}, {9, 10}};
    auto family = endpoint_permutations(pairs);
    REQUIRE(family.perms.size() == pairs.size());
    for (std::size_t i = 0 ; i < pairs.size() ; ++i) {
        CHECK(family.perms[i].front() == pairs[i].first);
        CHECK(family.perms[i].back() == pairs[i].second);
        auto sorted = family.perms[i];
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
        CHECK(sorted.size() == 2 * pairs.size());
    }
    CHECK(oracle::both_orders_everywhere(family.perms));
}

TEST_CASE("endpoint permutations reject small or overlapping partitions")
{
    CHECK_THROWS_AS((void) endpoint_permutations({{1, 2}, {3, 4}}), Error);
    CHECK_THROWS_AS((void) endpoint_permutations({{1, 2}}), Error);
    CHECK_THROWS_AS((void) endpoint_permutations({{1, 2}, {3, 4}, {5, 1}}), Error);
}

TEST_CASE("halving construction")
{
    auto six = halving_crown_word(6);
    CHECK(uniformity(six) == 3);
    CHECK(represents(six, crown(6)));
    CHECK(six.alphabet().size() == 12);

    auto five = halving_crown_word(5);
    CHECK(uniformity(five) == 3);
    CHECK(represents(five, crown(5)));

    CHECK_THROWS_AS((void) halving_crown_word(4), Error);
    CHECK_THROWS_AS((void) crown_construction_stages(7), Error);
    CHECK_THROWS_AS((void) crown_construction_stages(4), Error);
}

TEST_CASE("construction stages for even n")
{
    for (std::uint32_t n = 6 ; n <= 16 ; n += 2) {
        CAPTURE(n);
        auto stages = crown_construction_stages(n);
        CHECK(stages.concatenated.size() == std::size_t{n} * n);
        CHECK(oracle::represents(as_vector(stages.concatenated), complete_bipartite(n, n)));
        CHECK(stages.rotated == cyclic_shift(stages.concatenated, 1));
        CHECK(stages.swap_positions.size() == n);

        // Exactly the perfect matching disappears.
        auto before = oracle::edge_set(as_vector(stages.concatenated));
        auto after = oracle::edge_set(as_vector(stages.word));
        std::set<std::pair<Letter, Letter>> removed;
        std::set_difference(before.begin(), before.end(), after.begin(), after.end(),
                std::inserter(removed, removed.begin()));
        CHECK(std::includes(before.begin(), before.end(), after.begin(), after.end()));
        CHECK(removed.size() == n);
        for (auto & [a, b] : removed) {
            CHECK(a.index() == b.index());
            CHECK(a.primed() != b.primed());
        }
    }
}

TEST_CASE("odd n deletes the largest index")
{
    for (std::uint32_t n = 5 ; n <= 15 ; n += 2) {
        CAPTURE(n);
        auto even = represent_crown(n + 1);
        LetterSet keep;
        for (auto l : even.alphabet())
            if (l.index() != n + 1)
                keep.insert(l);
        CHECK(represent_crown(n) == subword_induced(even, keep));
    }
}

TEST_CASE("fixed words")
{
    CHECK(to_compact_string(fixed_crown_word(1)) == "11'1'1");
    CHECK(to_compact_string(fixed_crown_word(2)) == "12'21'21'12'");
    CHECK(to_compact_string(fixed_crown_word(3)) == "12'3'123'1'231'2'3");
    CHECK(to_compact_string(fixed_crown_word(4)) == "3'1423'1'4'22'134'42'1'3'4321'12'4'3");
    const std::size_t expected_k[] = {2, 2, 2, 3};
    for (std::uint32_t n = 1 ; n <= 4 ; ++n) {
        CHECK(uniformity(fixed_crown_word(n)) == expected_k[n - 1]);
        CHECK(oracle::represents(as_vector(fixed_crown_word(n)), crown(n)));
    }
    CHECK_THROWS_AS((void) fixed_crown_word(0), Error);
    CHECK_THROWS_AS((void) fixed_crown_word(5), Error);
}

TEST_CASE("the cube word and its relabeling onto crown(4)")
{
    auto cube = cube_word();
    CHECK(to_compact_string(cube) == "414'343'231'12'24'1'3'44'2'33'11'22'");
    CHECK(uniformity(cube) == 3);
    CHECK(oracle::represents(as_vector(cube), cube_graph()));
    // As labeled, the cube word is not a crown word.
    CHECK_FALSE(oracle::represents(as_vector(cube), crown(4)));

    // cube_to_crown is a bijection carrying edges onto edges.
    auto g = cube_graph();
    std::set<Letter> image;
    for (auto v : g.vertices())
        image.insert(cube_to_crown(v));
    CHECK(image.size() == 8);
    for (auto u : g.vertices())
        for (auto v : g.vertices())
            if (u != v)
                CHECK(g.adjacent(u, v) == crown(4).adjacent(cube_to_crown(u), cube_to_crown(v)));

    std::vector<Letter> mapped;
    for (auto l : cube.letters())
        mapped.push_back(cube_to_crown(l));
    CHECK(Word(mapped) == fixed_crown_word(4));
    CHECK_THROWS_AS((void) cube_to_crown(Letter(5, false)), Error);
}

TEST_CASE("permutation concatenation words")
{
    CHECK(to_compact_string(permutation_concatenation_word(2)) == "12'21'21'12'");
    CHECK(to_compact_string(permutation_concatenation_word(3)) == "123'32'1'132'23'1'231'13'2'");
    CHECK(to_compact_string(permutation_concatenation_word(4)) == "1234'43'2'1'1243'34'2'1'1342'24'3'1'2341'14'3'2'");
    CHECK(permutation_concatenation_word(4).size() == 32);
    for (std::uint32_t n = 1 ; n <= 4 ; ++n) {
        auto w = permutation_concatenation_word(n);
        // One permutation would join 1 and 1', so the n = 1 row uses two.
        std::size_t blocks = std::max<std::size_t>(n, 2);
        CHECK(uniformity(w) == blocks);
        CHECK(oracle::represents(as_vector(w), crown(n)));
        for (std::size_t b = 0 ; b < blocks ; ++b) {
            std::set<Letter> block(w.letters().begin() + b * 2 * n, w.letters().begin() + (b + 1) * 2 * n);
            CHECK(block.size() == 2 * n);
        }
    }
    CHECK_THROWS_AS((void) permutation_concatenation_word(5), Error);
}

TEST_CASE("represent_crown dispatch")
{
    CHECK(to_compact_string(represent_crown(2)) == "12'21'21'12'");
    CHECK_THROWS_AS((void) represent_crown(0), Error);
    for (std::uint32_t n = 1 ; n <= 16 ; ++n) {
        CAPTURE(n);
        auto w = represent_crown(n);
        CHECK(oracle::represents(as_vector(w), crown(n)));
        if (n >= 5)
            CHECK(uniformity(w) == (n + 1) / 2);
    }
}
