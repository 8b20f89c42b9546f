#include <gtest/gtest.h>

#include "mzv/error.hpp"
#include "mzv/lincomb.hpp"
#include "mzv/products.hpp"
#include "test_support.hpp"

using namespace mzvkit;
using mzvkit::test::Generator;
using mzvkit::test::lc;

namespace {

Word w(const char *letters) { return Word::from_letters(letters); }
LinComb e(Index k) { return LinComb::of_index(k); }

} // namespace

TEST(Index, WeightDepthAdmissible)
{
    Index k{1, 2, 3};
    EXPECT_EQ(k.weight(), 6u);
    EXPECT_EQ(k.depth(), 3u);
    EXPECT_TRUE(k.admissible());
    EXPECT_FALSE((Index{2, 1}).admissible());
    EXPECT_TRUE(Index().admissible());
    EXPECT_EQ(Index().weight(), 0u);
    EXPECT_THROW(Index({1, 0}), DomainError);
}

TEST(Index, TextSyntax)
{
    EXPECT_EQ(Index::parse("1,2"), (Index{1, 2}));
    EXPECT_EQ(Index::parse(""), Index());
    EXPECT_EQ((Index{3, 1}).to_string(), "3,1");
    EXPECT_THROW(Index::parse("1,,2"), DomainError);
    EXPECT_THROW(Index::parse("0"), DomainError);
    EXPECT_THROW(Index::parse("a"), DomainError);
}

TEST(Index, EnumerationCounts)
{
    EXPECT_EQ(indices_of_weight(4).size(), 8u);
    EXPECT_EQ(indices_up_to_weight(6).size(), 63u);
}

TEST(Word, OfIndex)
{
    EXPECT_EQ(word_of_index({2}), w("10"));
    EXPECT_EQ(word_of_index({1, 2}), w("110"));
    EXPECT_EQ(word_of_index({}), Word());
    EXPECT_TRUE(word_of_index({1, 2}).in_h0());
    EXPECT_TRUE(word_of_index({2, 1}).in_h1());
    EXPECT_FALSE(word_of_index({2, 1}).in_h0());
}

TEST(Word, IndexOfWord)
{
    EXPECT_EQ(index_of_word(w("10")), (Index{2}));
    EXPECT_EQ(index_of_word(w("1001")), (Index{3, 1}));
    EXPECT_THROW(index_of_word(w("01")), DomainError);
    EXPECT_EQ(index_of_word(Word()), Index());
}

TEST(Word, RoundTripOnAllSmallIndices)
{
    for (const Index &k : indices_up_to_weight(8)) {
        Word word = word_of_index(k);
        EXPECT_EQ(index_of_word(word), k);
        EXPECT_EQ(word.length(), k.weight());
        EXPECT_EQ(word.in_h0(), k.admissible());
    }
}

TEST(Word, Predicates)
{
    EXPECT_TRUE(Word().in_h0());
    EXPECT_TRUE(w("0").in_h1() == false);
    EXPECT_EQ(w("10011").trailing_e1(), 2u);
    EXPECT_EQ(w("111").trailing_e1(), 3u);
    EXPECT_EQ(w("1001").count(Letter::e0), 2u);
    EXPECT_THROW(w("102"), DomainError);
    // every H^0 word is an H^1 word
    Generator gen(7);
    for (int i = 0; i < 200; ++i) {
        Word x = gen.word(8);
        if (x.in_h0()) EXPECT_TRUE(x.in_h1());
    }
}

TEST(Word, OrderingIsLengthThenLex)
{
    EXPECT_LT(w("1"), w("00"));
    EXPECT_LT(w("100"), w("101"));
    EXPECT_LT(Word(), w("0"));
}

TEST(Word, JSet)
{
    EXPECT_EQ(jset({2, 1}), (std::set<unsigned>{1, 3}));
    EXPECT_EQ(jset({1, 1, 1}), (std::set<unsigned>{1, 2, 3}));
    EXPECT_EQ(jset({3}), (std::set<unsigned>{1}));
    EXPECT_THROW(jset({}), DomainError);
    // u_i = 1 exactly on J(k) reproduces e_k
    for (const Index &k : indices_up_to_weight(6)) {
        auto j = jset(k);
        EXPECT_EQ(j.size(), k.depth());
        std::string letters;
        for (unsigned i = 1; i <= k.weight(); ++i) letters += j.count(i) ? '1' : '0';
        EXPECT_EQ(Word::from_letters(letters), word_of_index(k));
    }
}

TEST(LinComb, DropsZerosAndCompares)
{
    LinComb x = e({2}) + e({1, 1});
    x -= e({2});
    EXPECT_EQ(x, e({1, 1}));
    EXPECT_EQ(x.size(), 1u);
    EXPECT_TRUE((x - x).is_zero());
    EXPECT_TRUE((x * Rational(0)).is_zero());
    EXPECT_EQ((e({1}) * Rational(1, 2)).serialize(), "[[\"1/2\",\"1\"]]");
}

TEST(LinComb, SerializationIsCanonical)
{
    LinComb a = e({3}) + e({1}) * Rational(2) + e({1, 2});
    LinComb b = e({1, 2}) + e({3}) + e({1}) * Rational(2);
    EXPECT_EQ(a.serialize(), b.serialize());
    EXPECT_EQ(a.serialize(), R"([["2/1","1"],["1/1","100"],["1/1","110"]])");
}

TEST(Harmonic, Examples)
{
    Generator gen(3);
    for (int i = 0; i < 20; ++i) {
        LinComb x = gen.h1_element(5);
        EXPECT_EQ(harmonic(LinComb::unit(), x), x);
        EXPECT_EQ(harmonic(x, LinComb::unit()), x);
    }
    EXPECT_EQ(harmonic(e({1}), e({1})), lc({{2, {1, 1}}, {1, {2}}}));
    EXPECT_EQ(harmonic(e({2}), e({2})), lc({{2, {2, 2}}, {1, {4}}}));
    EXPECT_EQ(harmonic(e({2}), e({2})), test::harmonic_oracle(Index{2}, Index{2}));
    EXPECT_EQ(harmonic(e({1}), e({2})), lc({{1, {1, 2}}, {1, {2, 1}}, {1, {3}}}));
}

TEST(Harmonic, RejectsOperandsOutsideH1)
{
    EXPECT_THROW(harmonic(LinComb(w("01")), e({1})), DomainError);
    EXPECT_THROW(harmonic(w("10"), w("0")), DomainError);
}

TEST(Shuffle, Examples)
{
    Generator gen(4);
    for (int i = 0; i < 20; ++i) {
        Word x = gen.word(6);
        EXPECT_EQ(shuffle(Word(), x), LinComb(x));
        EXPECT_EQ(shuffle(x, Word()), LinComb(x));
    }
    EXPECT_EQ(shuffle(w("1"), w("0")), LinComb(w("10")) + LinComb(w("01")));
    EXPECT_EQ(shuffle(e({2}), e({2})), lc({{2, {2, 2}}, {4, {1, 3}}}));
    EXPECT_EQ(shuffle(e({1}), e({2})), lc({{2, {1, 2}}, {1, {2, 1}}}));
}

TEST(Products, OracleEquivalence)
{
    // every pair of indices of depth <= 3 and total weight <= 5
    std::vector<Index> small;
    for (const Index &k : indices_up_to_weight(5)) {
        if (k.depth() <= 3) small.push_back(k);
    }
    small.emplace_back();
    for (const Index &a : small) {
        for (const Index &b : small) {
            if (a.weight() + b.weight() > 5) continue;
            Word wa = word_of_index(a);
            Word wb = word_of_index(b);
            EXPECT_EQ(harmonic(wa, wb), test::harmonic_oracle(a, b)) << a.to_string() << " * " << b.to_string();
            EXPECT_EQ(shuffle(wa, wb), test::shuffle_oracle(wa, wb)) << a.to_string() << " sh " << b.to_string();
        }
    }
    // shuffle oracle on arbitrary words, including ones starting with e0
    Generator gen(11);
    for (int i = 0; i < 200; ++i) {
        Word a = gen.word(5);
        Word b = gen.word(5);
        EXPECT_EQ(shuffle(a, b), test::shuffle_oracle(a, b));
    }
}

TEST(Products, Commutativity)
{
    Generator gen(21);
    for (int i = 0; i < 100; ++i) {
        LinComb x = gen.h1_element(6);
        LinComb y = gen.h1_element(6);
        EXPECT_EQ(harmonic(x, y), harmonic(y, x));
        EXPECT_EQ(shuffle(x, y), shuffle(y, x));
    }
}

TEST(Products, Associativity)
{
    Generator gen(22);
    for (int i = 0; i < 60; ++i) {
        LinComb x = gen.h1_element(4, 2);
        LinComb y = gen.h1_element(4, 2);
        LinComb z = gen.h1_element(4, 2);
        EXPECT_EQ(harmonic(harmonic(x, y), z), harmonic(x, harmonic(y, z)));
        EXPECT_EQ(shuffle(shuffle(x, y), z), shuffle(x, shuffle(y, z)));
    }
}

TEST(Products, GradingAndLetterConservation)
{
    Generator gen(23);
    for (int i = 0; i < 100; ++i) {
        Index a = gen.index(5);
        Index b = gen.index(5);
        Word wa = word_of_index(a);
        Word wb = word_of_index(b);
        for (const auto &[word, c] : harmonic(wa, wb)) {
            EXPECT_EQ(word.length(), a.weight() + b.weight());
        }
        for (const auto &[word, c] : shuffle(wa, wb)) {
            EXPECT_EQ(word.length(), a.weight() + b.weight());
            EXPECT_EQ(word.count(Letter::e1), wa.count(Letter::e1) + wb.count(Letter::e1));
            EXPECT_EQ(word.count(Letter::e0), wa.count(Letter::e0) + wb.count(Letter::e0));
        }
    }
}

TEST(Shuffle, CoefficientMassIsBinomial)
{
    Generator gen(24);
    for (int i = 0; i < 100; ++i) {
        Word a = gen.word(6);
        Word b = gen.word(6);
        Rational mass(0);
        for (const auto &[word, c] : shuffle(a, b)) mass += c;
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), a.length() + b.length(), a.length());
        EXPECT_EQ(mass, Rational(binom));
    }
}

TEST(Products, H0Closure)
{
    Generator gen(25);
    for (int i = 0; i < 100; ++i) {
        LinComb x = gen.h0_element(5);
        LinComb y = gen.h0_element(5);
        EXPECT_TRUE(harmonic(x, y).in_h0());
        EXPECT_TRUE(shuffle(x, y).in_h0());
        EXPECT_TRUE(harmonic(gen.h1_element(5), gen.h1_element(5)).in_h1());
    }
}

TEST(Products, CacheIsSafeUnderConcurrentUse)
{
    detail::clear_product_caches();
    std::vector<LinComb> results(8);
#pragma omp parallel for num_threads(4)
    for (int i = 0; i < 8; ++i) {
        results[static_cast<std::size_t>(i)] = harmonic(e({1, 2, 1}), e({2, 1, 1}));
    }
    for (const auto &r : results) EXPECT_EQ(r, test::harmonic_oracle(Index{1, 2, 1}, Index{2, 1, 1}));
    EXPECT_GT(detail::product_cache_size(Product::harmonic), 0u);
}
