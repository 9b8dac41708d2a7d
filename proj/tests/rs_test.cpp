#include <random>

#include <gtest/gtest.h>

#include "support.hpp"

namespace frobeval::rs {
namespace {

Word random_word(std::mt19937_64& rng, std::size_t len = kLength) {
  Word w(len);
  for (auto& b : w) b = static_cast<std::uint8_t>(rng());
  return w;
}

class RsTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    code_ = new RSCode(rs_new());
    tables_ = new SyndromeTables(build_tables(*code_));
    split_ = new SubfieldSplit(make_split(code_->field));
  }
  static void TearDownTestSuite() {
    delete code_;
    delete tables_;
    delete split_;
  }
  static RSCode* code_;
  static SyndromeTables* tables_;
  static SubfieldSplit* split_;
};

RSCode* RsTest::code_ = nullptr;
SyndromeTables* RsTest::tables_ = nullptr;
SubfieldSplit* RsTest::split_ = nullptr;

TEST_F(RsTest, Generator) {
  const auto& c = *code_;
  EXPECT_EQ(c.alpha.value(), 2U);
  EXPECT_EQ(c.generator.degree(), 32U);
  OpCount ops;
  for (std::uint64_t i = 1; i <= 32; ++i) {
    EXPECT_TRUE(horner_eval(c.generator, pow(c.alpha, i), ops).is_zero()) << i;
  }
  EXPECT_FALSE(horner_eval(c.generator, pow(c.alpha, 33), ops).is_zero());
  EXPECT_FALSE(horner_eval(c.generator, c.field.one(), ops).is_zero());
}

TEST_F(RsTest, Tables) {
  const auto& t = *tables_;
  EXPECT_EQ(t.alpha_pows[0], 1U);
  EXPECT_EQ(t.alpha_pows[17], t.beta);
  EXPECT_EQ(t.beta, 249U);
  EXPECT_EQ(code_->field.pow(t.beta, 15), 1U);
  EXPECT_EQ(t.build_ops.mul, 3823U);
  EXPECT_EQ(t.build_ops.paper_mult_equiv(), 253U + 3570U);
  std::mt19937_64 rng(1);
  for (int k = 0; k < 200; ++k) {
    const std::size_t i = rng() % 255;
    const std::size_t j = 1 + rng() % 14;
    ASSERT_EQ(t.mixed(i, j), code_->field.pow(2, i + 17 * j));
  }
  int in_subfield = 0;
  for (auto l : t.log_beta) in_subfield += l >= 0 ? 1 : 0;
  EXPECT_EQ(in_subfield, 15);
}

TEST_F(RsTest, SplitCertificate) {
  const auto g = split_->gamma();
  EXPECT_EQ(g * g + g, code_->field.element(tables_->beta));
  EXPECT_NE(frobenius(g, 4), g);
}

TEST_F(RsTest, EncodeAndCodewordKernel) {
  std::mt19937_64 rng(2);
  EXPECT_EQ(encode(Word(kDimension, 0), *code_), Word(kLength, 0));
  for (int t = 0; t < 20; ++t) {
    const Word msg = random_word(rng, kDimension);
    const Word cw = encode(msg, *code_);
    EXPECT_TRUE(std::equal(msg.begin(), msg.end(), cw.begin() + 32));
    OpCount a, b;
    EXPECT_TRUE(syndromes_horner(cw, *code_, a).all_zero());
    EXPECT_TRUE(syndromes_auto(cw, *code_, *tables_, *split_, b).all_zero());
  }
  EXPECT_THROW(encode(Word(10), *code_), std::invalid_argument);
}

TEST_F(RsTest, ExactLedgers) {
  std::mt19937_64 rng(3);
  const Word w = random_word(rng);
  OpCount h, a;
  const auto sh = syndromes_horner(w, *code_, h);
  const auto sa = syndromes_auto(w, *code_, *tables_, *split_, a);
  EXPECT_EQ(sh.ops.paper_mult_equiv(), 8159U);
  EXPECT_EQ(h.mul, 31U + 32 * 254);
  EXPECT_EQ(sa.ops.paper_mult_equiv(), 2912U);
  EXPECT_EQ(sa.ops.pth_pow, 32U * 2 * 30);
  EXPECT_EQ(sa.ops.mul, 32U * (2 * 15 + 1));
  EXPECT_EQ(sa.ops.paper_mult_equiv() / 32, 91U);
  EXPECT_EQ(sa.ops.paper_mult_equiv() + tables_->build_ops.paper_mult_equiv(), 6735U);
  EXPECT_EQ(sh.values, sa.values);

  OpCount z1, z2;
  const Word zero(kLength, 0);
  EXPECT_EQ(syndromes_horner(zero, *code_, z1).ops.paper_mult_equiv(), 8159U);
  EXPECT_EQ(syndromes_auto(zero, *code_, *tables_, *split_, z2).ops.paper_mult_equiv(), 2912U);
}

TEST_F(RsTest, StrategiesAgreeOnRandomWords) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    const Word w = random_word(rng);
    OpCount a, b;
    ASSERT_EQ(syndromes_horner(w, *code_, a).values, syndromes_auto(w, *code_, *tables_, *split_, b).values);
  }
}

TEST_F(RsTest, SingleErrorClosedForm) {
  std::mt19937_64 rng(5);
  const auto& f = code_->field;
  for (int t = 0; t < 50; ++t) {
    const Word cw = encode(random_word(rng, kDimension), *code_);
    const std::size_t pos = rng() % kLength;
    const auto e = static_cast<std::uint8_t>(1 + rng() % 255);
    Word r = cw;
    r[pos] ^= e;
    OpCount ops;
    const auto s = syndromes_auto(r, *code_, *tables_, *split_, ops);
    for (std::size_t j = 1; j <= 32; ++j) {
      ASSERT_EQ(s.values[j - 1].value(), f.mul(e, f.pow(2, pos * j)));
    }
    // Linearity: same as the error pattern alone.
    Word err(kLength, 0);
    err[pos] = e;
    OpCount o2;
    ASSERT_EQ(syndromes_horner(err, *code_, o2).values, s.values);
  }
}

TEST_F(RsTest, SubfieldMultiplicationMode) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 30; ++t) {
    const Word w = random_word(rng);
    OpCount a, b;
    const auto full = syndromes_auto(w, *code_, *tables_, *split_, a, MulMode::full_field);
    const auto sub = syndromes_auto(w, *code_, *tables_, *split_, b, MulMode::subfield);
    ASSERT_EQ(full.values, sub.values);
    ASSERT_TRUE(sub.subfield_ops.has_value());
    EXPECT_FALSE(full.subfield_ops.has_value());
    EXPECT_GT(sub.subfield_ops->mul, 0U);
  }
}

TEST_F(RsTest, Batch) {
  std::mt19937_64 rng(7);
  for (std::size_t K : {1U, 2U, 10U}) {
    std::vector<Word> words;
    for (std::size_t k = 0; k < K; ++k) words.push_back(random_word(rng));
    const auto h = syndromes_batch(words, Strategy::horner, *code_);
    const auto a = syndromes_batch(words, Strategy::automorphic, *code_, 4);
    EXPECT_EQ(h.total.paper_mult_equiv(), 31 + 8128 * K);
    EXPECT_EQ(a.total.paper_mult_equiv(), 3823 + 2912 * K);
    for (std::size_t k = 0; k < K; ++k) ASSERT_EQ(h.sets[k].values, a.sets[k].values);
  }
  std::vector<Word> words;
  for (int k = 0; k < 37; ++k) words.push_back(random_word(rng));
  const auto one = syndromes_batch(words, Strategy::automorphic, *code_, 1);
  const auto many = syndromes_batch(words, Strategy::automorphic, *code_, 8);
  EXPECT_EQ(one.total, many.total);
  for (std::size_t k = 0; k < words.size(); ++k) ASSERT_EQ(one.sets[k].values, many.sets[k].values);
  EXPECT_THROW(syndromes_batch({}, Strategy::horner, *code_), std::invalid_argument);
  words.push_back(Word(3));
  EXPECT_THROW(syndromes_batch(words, Strategy::horner, *code_), std::invalid_argument);
}

TEST_F(RsTest, InputValidation) {
  OpCount ops;
  EXPECT_THROW(syndromes_horner(Word(254), *code_, ops), std::invalid_argument);
  EXPECT_THROW(syndromes_auto(Word(256), *code_, *tables_, *split_, ops), std::invalid_argument);
  EXPECT_THROW(syndromes_auto(Word(255), *code_, SyndromeTables{}, *split_, ops), std::invalid_argument);
  const auto other = make_split(Field::create(2, 8, std::vector<std::uint32_t>{1, 0, 1, 1, 1, 0, 0, 0, 1}));
  EXPECT_THROW(syndromes_auto(Word(255), *code_, *tables_, other, ops), FieldError);
}

}  // namespace
}  // namespace frobeval::rs
