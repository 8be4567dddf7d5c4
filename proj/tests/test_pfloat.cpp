#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fomc/pfloat.hpp"
#include "oracles.hpp"

using namespace fomc;

namespace {
PFloat pf(const std::string& lit) { return parse_pf(lit); }
Rat rat(long n, long d = 1) { return Rat(BigInt(n), BigInt(d)); }
}  // namespace

TEST_CASE("value_of evaluates the float formula") {
  PrecisionSpec s(4, 3);
  CHECK(value_of(pf("pf(101,010;pm=4,pe=3)")) == Dyadic(BigInt(5), 0));  // 1.01_2 x 2^10_2
  CHECK(value_of(PFloat(s)).is_zero());
  CHECK(value_of(pf("pf(-101,010;pm=4,pe=3)")) == Dyadic(BigInt(-5), 0));
}

TEST_CASE("pf literal round-trips") {
  PrecisionSpec s(4, 3);
  for (const auto& f : enumerate_canonical(s)) {
    CHECK(parse_pf(format_pf(f)) == f);
  }
  CHECK(format_pf(pf("pf(101,010;pm=4,pe=3)")) == "pf(101,010;pm=4,pe=3)");
}

TEST_CASE("round_nearest hits pinned examples") {
  CHECK(round_nearest(rat(5), PrecisionSpec(4, 3)) == pf("pf(101,010;pm=4,pe=3)"));
  CHECK(round_nearest(rat(0), PrecisionSpec(4, 3)).is_zero());
  // 1/256 underflows at pm=2, pe=2: the enumeration oracle confirms nothing
  // representable is nearer than zero.
  PrecisionSpec tiny(2, 2);
  CHECK(round_nearest(rat(1, 256), tiny).is_zero());
  CHECK(oracles::nearest_by_enumeration(rat(1, 256), tiny).is_zero());
}

TEST_CASE("round_nearest agrees with enumeration oracle") {
  std::mt19937_64 rng(7);
  for (PrecisionSpec s : {PrecisionSpec(2, 2), PrecisionSpec(3, 2), PrecisionSpec(4, 3), PrecisionSpec(2, 1)}) {
    std::uniform_int_distribution<long> num(-2000, 2000);
    std::uniform_int_distribution<long> den(1, 512);
    for (int t = 0; t < 400; ++t) {
      Rat x = rat(num(rng), den(rng));
      PFloat got = round_nearest(x, s);
      PFloat want = oracles::nearest_by_enumeration(x, s);
      INFO("x = " << x.num.str() << "/" << x.den.str() << " pm=" << s.pm << " pe=" << s.pe);
      CHECK(got == want);
    }
  }
}

TEST_CASE("round-trip: every canonical float rounds to itself") {
  for (int pm = 2; pm <= 6; ++pm)
    for (int pe = 1; pe + pm <= 8; ++pe) {
      PrecisionSpec s(pm, pe);
      for (const auto& f : enumerate_canonical(s)) {
        CHECK(round_nearest(value_of(f), s) == f);
      }
    }
}

TEST_CASE("rounding is monotone") {
  PrecisionSpec s(3, 2);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-600, 600);
  std::uniform_int_distribution<long> den(1, 64);
  for (int t = 0; t < 500; ++t) {
    Rat x = rat(num(rng), den(rng)), y = rat(num(rng), den(rng));
    if (y < x) std::swap(x, y);
    Dyadic vx = value_of(round_nearest(x, s)), vy = value_of(round_nearest(y, s));
    CHECK(vx <= vy);
  }
}

TEST_CASE("min_positive reproduces the precision thresholds") {
  CHECK(min_positive(PrecisionSpec(8, 8)) == Dyadic(BigInt(1), -134));    // bfloat16-like
  CHECK(min_positive(PrecisionSpec(12, 5)) == Dyadic(BigInt(1), -26));    // float16-like
  CHECK(min_positive(PrecisionSpec(2, 2)) == Dyadic(BigInt(1), -2));
}

TEST_CASE("arith pinned examples") {
  PrecisionSpec s(4, 3);
  PFloat five = round_nearest(rat(5), s);
  PFloat zero(s);
  CHECK(arith(ArithOp::Add, five, zero) == five);
  // 25 rounds to 24 among the canonical floats of pm=4, pe=3; computed with
  // the enumeration oracle and frozen.
  PFloat prod = arith(ArithOp::Mul, five, five);
  CHECK(oracles::nearest_by_enumeration(rat(25), s) == prod);
  CHECK(value_of(prod) == Dyadic(BigInt(24), 0));
  CHECK(prod == pf("pf(110,100;pm=4,pe=3)"));
  CHECK(value_of(arith(ArithOp::Div, five, five)) == Dyadic(BigInt(1), 0));
  CHECK_THROWS_AS(arith(ArithOp::Div, five, zero), DivisionByZero);
}

TEST_CASE("arith algebraic identities") {
  PrecisionSpec s(3, 2);
  auto all = enumerate_canonical(s);
  PFloat one = round_nearest(rat(1), s);
  for (const auto& a : all)
    for (const auto& b : all) {
      CHECK(arith(ArithOp::Add, a, b) == arith(ArithOp::Add, b, a));
    }
  for (const auto& a : all) CHECK(arith(ArithOp::Mul, a, one) == a);
}

TEST_CASE("overflow saturates to the maximum float") {
  PrecisionSpec s(2, 2);  // max representable is 4
  CHECK(value_of(round_nearest(rat(1000), s)) == Dyadic(BigInt(4), 0));
  CHECK(value_of(round_nearest(rat(-1000), s)) == Dyadic(BigInt(-4), 0));
}

TEST_CASE("sum_iter is an exact sum rounded once") {
  PrecisionSpec s(4, 3);
  CHECK(sum_iter({}, s).is_zero());
  PFloat five = round_nearest(rat(5), s);
  PFloat mfive = round_nearest(rat(-5), s);
  CHECK(sum_iter({five, mfive}, s).is_zero());

  PrecisionSpec tiny(2, 2);
  PFloat eps = round_nearest(rat(1, 256), tiny);
  REQUIRE(eps.is_zero());  // each addend rounds to zero first
  std::vector<PFloat> xs(256, eps);
  CHECK(sum_iter(xs, tiny).is_zero());
}

TEST_CASE("sum_iter is permutation invariant") {
  PrecisionSpec s(3, 2);
  std::mt19937_64 rng(23);
  auto all = enumerate_canonical(s);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int t = 0; t < 200; ++t) {
    std::vector<PFloat> xs;
    for (int i = 0; i < 8; ++i) xs.push_back(all[pick(rng)]);
    PFloat a = sum_iter(xs, s);
    std::shuffle(xs.begin(), xs.end(), rng);
    CHECK(sum_iter(xs, s) == a);
  }
}

TEST_CASE("approx_simplex pinned examples") {
  PrecisionSpec tiny(2, 2);
  SECTION("uniform 1/256 rounds to the zero vector") {
    std::vector<Rat> a(256, rat(1, 256));
    auto res = approx_simplex(a, tiny);
    CHECK(res.nonzero_count == 0);
    for (const auto& f : res.rounded) CHECK(f.is_zero());
  }
  SECTION("a basis vector is exactly representable") {
    std::vector<Rat> a(8, rat(0));
    a[0] = rat(1);
    auto res = approx_simplex(a, tiny);
    CHECK(res.nonzero_count == 1);
    CHECK(value_of(res.rounded[0]) == Dyadic(BigInt(1), 0));
  }
  SECTION("sum must be exactly one") {
    CHECK_THROWS_AS(approx_simplex({rat(1, 2)}, tiny), InvalidSimplex);
    CHECK_THROWS_AS(approx_simplex({rat(-1, 2), rat(3, 2)}, tiny), InvalidSimplex);
  }
}

TEST_CASE("simplex nonzero counts respect the precision bounds") {
  PrecisionSpec tiny(2, 2);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> dim(1, 48);
  // sharper bound from the proof: each nonzero entry has exact value at
  // least min_positive / 2, so at most ceil(2 / min_positive) = 8 survive
  for (int t = 0; t < 500; ++t) {
    auto a = oracles::random_simplex(rng, dim(rng));
    auto res = approx_simplex(a, tiny);
    CHECK(res.nonzero_count <= 65536);  // 2^(2^4), vacuous at this size
    CHECK(res.nonzero_count <= 8);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!res.rounded[i].is_zero()) CHECK(Rat(min_positive(tiny)) * rat(1, 2) <= a[i]);
  }
}

TEST_CASE("uniform attention underflow threshold at pm=pe=2") {
  PrecisionSpec tiny(2, 2);
  for (long n = 9; n <= 64; ++n) CHECK(round_nearest(rat(1, n), tiny).is_zero());
}

TEST_CASE("division truncates the quotient before rounding") {
  PrecisionSpec s(4, 3);
  auto all = enumerate_canonical(s);
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int t = 0; t < 300; ++t) {
    PFloat a = all[pick(rng)], b = all[pick(rng)];
    if (b.is_zero()) continue;
    PFloat got = arith(ArithOp::Div, a, b);
    Rat q = Rat(value_of(a)) / Rat(value_of(b));
    PFloat want = round_nearest(Rat(trunc_sig_bits(q, s.pm + 2)), s);
    CHECK(got == want);
  }
}

TEST_CASE("encode/decode round-trips canonical floats") {
  for (PrecisionSpec s : {PrecisionSpec(2, 1), PrecisionSpec(2, 2), PrecisionSpec(4, 3)}) {
    for (const auto& f : enumerate_canonical(s)) {
      Bits b = encode_pfloat(f);
      CHECK(static_cast<int>(b.size()) == s.total());
      CHECK(decode_round(b, s) == f);
      CHECK(decode_value(b, s) == value_of(f));
    }
  }
}

TEST_CASE("decode is total on arbitrary bit patterns") {
  PrecisionSpec s(3, 2);
  for (uint64_t pattern = 0; pattern < (uint64_t{1} << s.total()); ++pattern) {
    Bits b = bits_from_u64(pattern, s.total());
    PFloat f = decode_round(b, s);
    CHECK(f.is_canonical());
  }
}

TEST_CASE("sqrt_trunc truncates to the requested grid") {
  // sqrt(2) = 1.0110101000001..._2
  Dyadic s = sqrt_trunc(rat(2), 6);
  CHECK(Rat(s) * Rat(s) <= rat(2));
  Rat next = Rat(s) + Rat(Dyadic(BigInt(1), s.floor_log2() - 5));
  CHECK(rat(2) < next * next);
}

TEST_CASE("round_div_sqrt matches the exact-comparison contract") {
  PrecisionSpec s(4, 3);
  // x / sqrt(2) for dyadic x: verified against high-precision truncation
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<long> num(-64, 64);
  for (int t = 0; t < 200; ++t) {
    long v = num(rng);
    Dyadic x(BigInt(v), -2);
    PFloat got = round_div_sqrt(x, 2, s);
    // oracle: approximate x / sqrt(2) to 80 bits, then round that dyadic
    if (v == 0) {
      CHECK(got.is_zero());
      continue;
    }
    Dyadic root = sqrt_trunc(rat(2), 80);
    Rat approx = Rat(x) / Rat(root);
    PFloat want = oracles::nearest_by_enumeration(approx, s);
    CHECK(got == want);
  }
  // perfect squares go through the exact rational path
  CHECK(round_div_sqrt(Dyadic(BigInt(6), 0), 4, s) == round_nearest(rat(3), s));
}

TEST_CASE("exp_p pinned values") {
  PrecisionSpec s(4, 3);
  PFloat zero(s);
  CHECK(value_of(exp_p(zero, s)) == Dyadic(BigInt(1), 0));
  // exp(1) = 2.71828... -> nearest canonical at pm=4, pe=3
  PFloat one = round_nearest(rat(1), s);
  PFloat e1 = exp_p(one, s);
  CHECK(oracles::nearest_by_enumeration(rat(271828, 100000), s) == e1);
  // very negative argument underflows to zero at tiny precision
  PrecisionSpec tiny(2, 2);
  PFloat big_neg = round_nearest(rat(-4), tiny);
  CHECK(exp_p(big_neg, tiny).is_zero());
}
