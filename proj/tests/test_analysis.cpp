#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "guessdec/analysis.hpp"
#include "guessdec/channel.hpp"
#include "guessdec/gf2.hpp"

using namespace guessdec;
using boost::multiprecision::cpp_int;

TEST_CASE("saddlepoint_tail boundary regimes") {
  const std::vector<double> w{1.0, 2.0, 0.5, 3.0};
  CHECK(saddlepoint_tail({w, -0.1}) == 0.0);
  CHECK(saddlepoint_tail({{0.0, 0.0, 0.0}, 0.2}) == 1.0);
  // t below the smallest positive weight: only the empty pattern, exactly 2^-m
  CHECK(saddlepoint_tail({w, 0.0}) == doctest::Approx(std::exp2(-4.0)).epsilon(1e-12));
  CHECK(saddlepoint_tail({w, 0.4}) == doctest::Approx(std::exp2(-4.0)).epsilon(1e-12));
  // at the mean the tail is one half by symmetry
  CHECK(saddlepoint_tail({w, 3.25}) == doctest::Approx(0.5).epsilon(1e-9));
  // beyond the total: certain event
  CHECK(saddlepoint_tail({w, 10.0}) == 1.0);
  CHECK_THROWS(saddlepoint_tail({{1.0, -1.0}, 0.5}));
}

TEST_CASE("saddlepoint_tail vs exact binomial (equal weights)") {
  SUBCASE("m=128, t=2.5: within 8% of the exact partial sum") {
    const std::vector<double> w(128, 1.0);
    cpp_int sum = 1 + 128 + 128 * 127 / 2;  // weights 0,1,2
    const double exact =
        static_cast<double>(sum) / std::exp2(128.0);
    const double approx = saddlepoint_tail({w, 2.5});
    CHECK(std::fabs(approx / exact - 1.0) < 0.08);
  }
  SUBCASE("complementary branch agrees with the exact sum near the mean") {
    const std::vector<double> w(20, 1.0);
    // P[S <= 12] with S ~ Binomial(20, 1/2)
    double exact = 0;
    double binom = 1;
    for (int j = 0; j <= 12; ++j) {
      exact += binom;
      binom = binom * (20 - j) / (j + 1);
    }
    exact /= std::exp2(20.0);
    CHECK(saddlepoint_tail({w, 12.0}) == doctest::Approx(exact).epsilon(0.05));
  }
}

TEST_CASE("bsc_exact_counts") {
  CHECK(bsc_exact_counts(128, 105, 1) == std::pair<cpp_int, cpp_int>{129, 106});
  CHECK(bsc_exact_counts(128, 105, 2) == std::pair<cpp_int, cpp_int>{8257, 5566});
  CHECK(bsc_exact_counts(64, 32, 0) == std::pair<cpp_int, cpp_int>{1, 1});
  CHECK_THROWS(bsc_exact_counts(8, 4, 9));

  SUBCASE("w=4 and w=8 match the published magnitudes") {
    auto [ln4, lc4] = bsc_exact_counts(128, 105, 4);
    CHECK(std::fabs(static_cast<double>(ln4) / 1.10e7 - 1.0) < 0.005);
    CHECK(std::fabs(static_cast<double>(lc4) / 4.97e6 - 1.0) < 0.005);
    auto [ln8, lc8] = bsc_exact_counts(128, 105, 8);
    CHECK(std::fabs(static_cast<double>(ln8) / 1.53e12 - 1.0) < 0.005);
    CHECK(std::fabs(static_cast<double>(lc8) / 3.03e11 - 1.0) < 0.005);
  }
  SUBCASE("L_C <= L_N always") {
    for (std::size_t w : {0u, 1u, 3u, 7u, 20u}) {
      auto [ln, lc] = bsc_exact_counts(64, 40, w);
      CHECK(lc <= ln);
    }
  }
}

TEST_CASE("BSC query estimates track the exact counts with the published relative errors") {
  const std::size_t n = 128, k = 105;
  const double wmag = std::log(0.98 / 0.02);  // any BSC magnitude; ratios are scale-free
  const std::vector<double> lambda(n, wmag);
  // published relative errors of the saddle-point estimate, per weight class
  const std::vector<std::size_t> ws = {1, 2, 4, 8};
  const std::vector<double> grand_err = {7.8, 3.9, 1.7, 0.7};
  const std::vector<double> gcd_err = {7.6, 3.8, 1.6, 0.6};

  for (std::size_t i = 0; i < ws.size(); ++i) {
    BitVec e(n);
    for (std::size_t j = 0; j < ws[i]; ++j) e.set(j, true);
    auto [ln_exact, lc_exact] = bsc_exact_counts(n, k, ws[i]);

    const double gn = estimate_query_count(QueryMode::grand, lambda, e, n, k).estimate;
    const double rel_n = (gn / static_cast<double>(ln_exact) - 1.0) * 100.0;
    CHECK(std::fabs(rel_n - grand_err[i]) < 1.0);  // within one percentage point

    const double gc = estimate_query_count(QueryMode::gcd_trivial, lambda, e, n, k).estimate;
    const double rel_c = (gc / static_cast<double>(lc_exact) - 1.0) * 100.0;
    CHECK(std::fabs(rel_c - gcd_err[i]) < 1.0);
  }
}

TEST_CASE("estimate_query_count special and ordering properties") {
  Rng rng(71);
  const std::size_t n = 64, k = 48;

  SUBCASE("all-zero TEP with positive reliabilities estimates exactly one query") {
    std::vector<double> lambda(n);
    for (auto& l : lambda) l = std::fabs(rng.gaussian()) + 0.1;
    const double est = estimate_query_count(QueryMode::grand, lambda, BitVec(n), n, k).estimate;
    CHECK(est == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("gcd_trivial <= grand, gcd_dai <= gcd_trivial for every draw") {
    const ChannelSpec spec = ChannelSpec::awgn(1.0, 0.75);
    for (int t = 0; t < 200; ++t) {
      Rng trial(derive_seed(5, 1, t));
      const ReceivedWord rw = simulate_transmission(spec, BitVec(n), trial);
      const auto g = estimate_query_count(QueryMode::grand, rw.lambda, rw.z, n, k);
      const auto c = estimate_query_count(QueryMode::gcd_trivial, rw.lambda, rw.z, n, k);
      const auto d = estimate_query_count(QueryMode::gcd_dai, rw.lambda, rw.z, n, k);
      // the exact counts satisfy L_C <= L_N strictly; the saddle-point
      // approximations can cross by a small relative margin
      CHECK(c.estimate <= g.estimate * 1.10);
      CHECK(d.estimate <= c.estimate * (1 + 1e-9));
    }
  }
  SUBCASE("rank containment: threshold at the ML pattern never exceeds the plain estimate") {
    LinearCode code = random_linear_code(16, 8, 9);
    const ChannelSpec spec = ChannelSpec::awgn(0.0, 0.5);
    for (int t = 0; t < 100; ++t) {
      Rng trial(derive_seed(6, 2, t));
      const ReceivedWord rw = simulate_transmission(spec, BitVec(16), trial);
      auto [mld_cw, mld_w] = brute_force_mld(code, rw.lambda);
      const BitVec e_star = rw.z ^ mld_cw;
      const double with_star =
          estimate_query_count(QueryMode::grand_rank, rw.lambda, e_star, 16, 8).estimate;
      const double with_true =
          estimate_query_count(QueryMode::grand, rw.lambda, rw.z, 16, 8).estimate;
      CHECK(with_star <= with_true * (1 + 1e-9));
    }
  }
}

TEST_CASE("rcu_bound") {
  SUBCASE("vanishes at extreme SNR") {
    CHECK(rcu_bound(32, 16, ChannelSpec::awgn(20.0, 0.5), 2000, 1) < 1e-6);
  }
  SUBCASE("monotone non-increasing in SNR with common random numbers") {
    double prev = 2.0;
    for (double snr : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
      const double b = rcu_bound(32, 16, ChannelSpec::awgn(snr, 0.5), 4000, 7);
      CHECK(b <= prev + 1e-12);
      prev = b;
    }
  }
  SUBCASE("deterministic per seed") {
    const ChannelSpec spec = ChannelSpec::awgn(2.0, 0.5);
    CHECK(rcu_bound(32, 16, spec, 1000, 3) == rcu_bound(32, 16, spec, 1000, 3));
  }
  SUBCASE("averaged grand estimates dominate the lower bound") {
    const std::size_t n = 32, k = 16;
    const ChannelSpec spec = ChannelSpec::awgn(1.0, 0.5);
    const double eps = rcu_bound(n, k, spec, 4000, 11);
    double avg = 0;
    const int samples = 4000;
    for (int i = 0; i < samples; ++i) {
      Rng rng(derive_seed(11, 0x52435531, i));  // same draws as rcu_bound
      const ReceivedWord rw = simulate_transmission(spec, BitVec(n), rng);
      avg += estimate_query_count(QueryMode::grand, rw.lambda, rw.z, n, k).estimate;
    }
    avg /= samples;
    CHECK(avg >= grand_query_lower_bound(n, k, eps) * 0.999);
  }
}

TEST_CASE("grand_query_lower_bound published values") {
  CHECK(grand_query_lower_bound(128, 112, 1e-5) == doctest::Approx(0.65536).epsilon(1e-6));
  CHECK(grand_query_lower_bound(128, 96, 1e-5) == doctest::Approx(42949.67296).epsilon(1e-6));
  CHECK(grand_query_lower_bound(128, 96, 0.0) == 0.0);
  CHECK_THROWS(grand_query_lower_bound(128, 96, 1.5));
}

TEST_CASE("ops_model") {
  CHECK(ops_model(DecoderKind::grand, 1.0, 128, 106) == doctest::Approx(22.0 * 255.0));
  CHECK(ops_model(DecoderKind::gcd, 1.0, 128, 106) == doctest::Approx(22.0 * 211.0));
  // bound-based operation counts at rates 0.875 and 0.75
  const double ops_hi = ops_model(DecoderKind::grand, grand_query_lower_bound(128, 112, 1e-5),
                                  128, 112);
  CHECK(std::fabs(ops_hi / 3.9042336e3 - 1.0) < 1e-3);
  const double ops_lo = ops_model(DecoderKind::grand, grand_query_lower_bound(128, 96, 1e-5),
                                  128, 96);
  CHECK(std::fabs(ops_lo / 2.1911983e7 - 1.0) < 1e-3);
  CHECK_THROWS(ops_model(DecoderKind::grand, -1.0, 8, 4));
}

TEST_CASE("min_required_budget") {
  auto make = [](std::vector<double> ests) {
    std::vector<QuerySample> s;
    for (std::size_t i = 0; i < ests.size(); ++i) s.push_back({i, ests[i], std::log(ests[i])});
    return s;
  };
  SUBCASE("degenerate distribution") {
    const auto rep = min_required_budget(make({10, 10, 10, 10}), 1.0, 0.5);
    CHECK(rep.l_tilde_max == doctest::Approx(10));
    CHECK(rep.tail_at_budget <= 0.5);
  }
  SUBCASE("1..100 at alpha*eps = 0.05 gives 95") {
    std::vector<double> v(100);
    for (int i = 0; i < 100; ++i) v[i] = i + 1;
    const auto rep = min_required_budget(make(v), 0.05, 1.0);
    CHECK(rep.l_tilde_max == doctest::Approx(95));
    CHECK(rep.tail_at_budget <= 0.05);
  }
  SUBCASE("resolution guard names the needed sample count") {
    std::vector<double> v(100, 5.0);
    try {
      min_required_budget(make(v), 1.0, 1e-5);
      CHECK(false);
    } catch (const InsufficientResolution& e) {
      CHECK(std::string(e.what()).find("100000") != std::string::npos);
    }
  }
  SUBCASE("alpha*eps = 1 degenerates to the smallest estimate") {
    const auto rep = min_required_budget(make({7, 3, 9, 5}), 1.0, 1.0);
    CHECK(rep.l_tilde_max == doctest::Approx(3));
  }
}

TEST_CASE("tail_exceed_fraction and fer_gap_bound") {
  std::vector<QuerySample> s = {{0, 1, 0}, {1, 10, 0}, {2, 100, 0}, {3, 1000, 0}};
  CHECK(tail_exceed_fraction(s, 50.0) == doctest::Approx(0.5));
  CHECK(tail_exceed_fraction(s, 1e9) == doctest::Approx(0.0));
  CHECK(fer_gap_bound(0.0) == 0.0);
  CHECK(fer_gap_bound(1e-3) == doctest::Approx(1e-3));
  CHECK_THROWS(fer_gap_bound(1.5));
}
