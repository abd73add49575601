#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <functional>
#include <vector>

#include "bg/doubling.hpp"
#include "bg/eoe.hpp"
#include "bg/exp3ix.hpp"
#include "bg/learner.hpp"
#include "bg/matrix_game.hpp"
#include "bg/regexp3.hpp"
#include "bg/rng.hpp"

using namespace bg;

TEST_CASE("learner protocol state machine") {
  auto l = make_learner("exp3ix", Side::min_player, 2, 2, 0.0);
  CHECK(l->rounds() == 0);
  CHECK(l->actions() == 2);
  CHECK(l->side() == Side::min_player);
  l->act();
  CHECK_THROWS_AS(l->act(), ProtocolError);
  l->observe(0, 0.5);
  CHECK(l->rounds() == 1);
  CHECK_THROWS_AS(l->observe(0, 0.5), ProtocolError);
  l->act();
  CHECK_THROWS_AS(l->observe(2, 0.5), DimensionError);
  CHECK_THROWS_AS(l->observe(-1, 0.5), DimensionError);
  CHECK_THROWS_AS(l->observe(0, 1.5), DomainError);
  CHECK_THROWS_AS(l->observe(0, -0.1), DomainError);
  l->observe(1, 1.0);
  CHECK(l->rounds() == 2);
}

TEST_CASE("learner spec parsing") {
  CHECK_NOTHROW(make_learner("uniform", Side::max_player, 1, 5, 0.0));
  CHECK_NOTHROW(make_learner("eoe:p=1.5,u=0.25", Side::min_player, 2, 2, 0.0));
  CHECK_NOTHROW(make_learner("regexp3:tau=0.3", Side::min_player, 4, 2, 0.0));
  CHECK_NOTHROW(make_learner("doubling:u=0.9", Side::min_player, 2, 3, 0.0));

  CHECK_THROWS_AS(make_learner("nope", Side::min_player, 2, 2, 0.0),
                  ParseError);
  CHECK_THROWS_AS(make_learner("eoe", Side::min_player, 2, 2, 0.0), ParseError);
  CHECK_THROWS_AS(make_learner("eoe:p=1,p=2", Side::min_player, 2, 2, 0.0),
                  ParseError);
  CHECK_THROWS_AS(make_learner("eoe:p=3", Side::min_player, 2, 2, 0.0),
                  DomainError);
  CHECK_THROWS_AS(make_learner("eoe:p=0", Side::min_player, 2, 2, 0.0),
                  DomainError);
  CHECK_THROWS_AS(make_learner("eoe:p=1,q=2", Side::min_player, 2, 2, 0.0),
                  ParseError);
  CHECK_THROWS_AS(make_learner("regexp3", Side::min_player, 2, 2, 0.0),
                  ParseError);
  CHECK_THROWS_AS(
      make_learner("regexp3:T=10,tau=0.5", Side::min_player, 2, 2, 0.0),
      ParseError);
  CHECK_THROWS_AS(make_learner("regexp3:T=0", Side::min_player, 2, 2, 0.0),
                  DomainError);
  CHECK_THROWS_AS(make_learner("regexp3:tau=0", Side::min_player, 2, 2, 0.0),
                  DomainError);
  CHECK_THROWS_AS(make_learner("regexp3:T=1.5", Side::min_player, 2, 2, 0.0),
                  ParseError);
  CHECK_THROWS_AS(make_learner("doubling:u=1", Side::min_player, 2, 2, 0.0),
                  DomainError);
  CHECK_THROWS_AS(make_learner("exp3ix:k=1", Side::min_player, 2, 2, 0.0),
                  ParseError);
  CHECK_THROWS_AS(make_learner("exp3ix", Side::min_player, 1, 2, 0.0),
                  DimensionError);
}

TEST_CASE("importance estimates") {
  Policy mu(std::vector<double>{0.25, 0.75});
  std::vector<double> est = importance_estimate(1.0, 0, mu, Side::min_player);
  CHECK(est[0] == 4.0);
  CHECK(est[1] == 0.0);

  Policy nu(std::vector<double>{0.5, 0.5});
  std::vector<double> gain = importance_estimate(0.3, 1, nu, Side::max_player);
  CHECK(gain[0] == 0.0);
  CHECK(gain[1] == doctest::Approx(1.4).epsilon(1e-15));

  long hits = 0;
  Policy tiny(std::vector<double>{1e-310, 1.0});
  std::vector<double> guarded =
      importance_estimate(1.0, 0, tiny, Side::min_player, &hits);
  CHECK(hits == 1);
  CHECK(guarded[0] == doctest::Approx(1e300));
  CHECK(std::isfinite(guarded[0]));
}

TEST_CASE("exp3ix rates") {
  auto [eta1, gamma1] = exp3ix_rates(1, 2);
  CHECK(eta1 == doctest::Approx(0.5887050112577373).epsilon(1e-14));
  CHECK(gamma1 == doctest::Approx(eta1 / 2.0).epsilon(1e-16));
  auto [eta44, g44] = exp3ix_rates(4, 4);
  CHECK(eta44 == doctest::Approx(0.29435250562886867).epsilon(1e-14));
  CHECK_THROWS_AS(exp3ix_rates(0, 2), DomainError);
  CHECK_THROWS_AS(exp3ix_rates(1, 1), DimensionError);
}

TEST_CASE("exp3ix first rounds against hand computation") {
  Exp3Ix l(Side::min_player, 2);
  const Policy& p1 = l.act();
  CHECK(p1[0] == 0.5);
  CHECK(p1[1] == 0.5);
  l.observe(0, 1.0);

  double eta1 = std::sqrt(std::log(2.0) / 2.0);
  double cum0 = 1.0 / (0.5 + eta1 / 2.0);
  double eta2 = std::sqrt(std::log(2.0) / 4.0);
  double w0 = std::exp(-eta2 * cum0), w1 = 1.0;
  const Policy& p2 = l.act();
  CHECK(p2[0] == doctest::Approx(w0 / (w0 + w1)).epsilon(1e-14));
  CHECK(p2[1] == doctest::Approx(w1 / (w0 + w1)).epsilon(1e-14));
  l.observe(1, 0.0);

  // max side estimates gains: eff = 1 - loss
  Exp3Ix m(Side::max_player, 2);
  m.act();
  m.observe(1, 0.3);
  double cum1 = (1.0 - 0.3) / (0.5 + eta1 / 2.0);
  const Policy& q2 = m.act();
  double v0 = 1.0, v1 = std::exp(-eta2 * cum1);
  CHECK(q2[1] == doctest::Approx(v1 / (v0 + v1)).epsilon(1e-14));
}

TEST_CASE("exp3ix output is the running mean of played policies") {
  Exp3Ix l(Side::min_player, 3);
  CHECK(l.output() == Policy::uniform(3));
  std::vector<double> sum(3, 0.0);
  for (int t = 1; t <= 50; ++t) {
    const Policy& p = l.act();
    for (int i = 0; i < 3; ++i) sum[static_cast<std::size_t>(i)] += p[i];
    l.observe(t % 3, (t % 4) / 4.0);
  }
  Policy out = l.output();
  for (int i = 0; i < 3; ++i)
    CHECK(out[i] ==
          doctest::Approx(sum[static_cast<std::size_t>(i)] / 50.0).epsilon(1e-14));
}

TEST_CASE("regexp3 parameters") {
  RegExp3Params params = regexp3_params(2, 2, 10000);
  CHECK(params.tau == doctest::Approx(0.16986436005760381).epsilon(1e-14));
  CHECK(params.eta(1) == doctest::Approx(1.0 / params.tau).epsilon(1e-14));
  CHECK(params.tau * params.eta(3) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(regexp3_params(1, 2, 100), DimensionError);
  CHECK_THROWS_AS(regexp3_params(2, 2, 0), DomainError);
}

TEST_CASE("regexp3 mix and descent") {
  Policy mirror(std::vector<double>{0.9, 0.1});
  Policy anchor(std::vector<double>{0.5, 0.5});
  Policy mix = regexp3_mix(mirror, anchor, 0.5);
  CHECK(mix[0] == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(mix[1] == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(regexp3_mix(mirror, anchor, 1.0) == anchor);
  CHECK(regexp3_mix(mirror, anchor, 0.0) == mirror);
  CHECK_THROWS_AS(regexp3_mix(mirror, anchor, 1.5), DomainError);

  Policy played(std::vector<double>{0.5, 0.5});
  Policy next = regexp3_descent(played, {2.0, 0.0}, 0.5);
  double lo = std::exp(-1.0) / (std::exp(-1.0) + 1.0);
  CHECK(next[0] == doctest::Approx(lo).epsilon(1e-15));
  CHECK(next[1] == doctest::Approx(1.0 - lo).epsilon(1e-15));
  CHECK_THROWS_AS(regexp3_descent(played, {1.0}, 0.5), DimensionError);
  CHECK_THROWS_AS(regexp3_descent(played, {1.0, 0.0}, 0.0), DomainError);
}

TEST_CASE("regexp3 plays the anchor first and mixes afterwards") {
  RegExp3 l(Side::min_player, 2, 0.3);
  const Policy& p1 = l.act();
  CHECK(p1[0] == 0.5);
  CHECK(p1[1] == 0.5);
  l.observe(0, 1.0);

  // mirror after round 1: descent from the played uniform at eta(1) = 1/tau
  Policy mirror = regexp3_descent(Policy::uniform(2), {1.0 / 0.5, 0.0},
                                  2.0 / (0.3 * 2.0));
  // round 2 pull toward the anchor is tau*eta(2) = 2/3
  Policy expected = regexp3_mix(mirror, Policy::uniform(2), 2.0 / 3.0);
  const Policy& p2 = l.act();
  CHECK(p2[0] == doctest::Approx(expected[0]).epsilon(1e-14));
  CHECK(p2[1] == doctest::Approx(expected[1]).epsilon(1e-14));
}

TEST_CASE("regexp3 log-space state tracks the materialized recursion") {
  RegExp3 l(Side::max_player, 3, 0.4);
  Policy anchor = Policy::uniform(3);
  Policy mirror = anchor;
  Rng rng(17);
  for (long t = 1; t <= 100; ++t) {
    double c = 2.0 / static_cast<double>(t + 1);
    Policy shadow = t == 1 ? anchor : regexp3_mix(mirror, anchor, c);
    const Policy& played = l.act();
    CHECK(l1_distance(played, shadow) <= 1e-12);
    int a = rng.categorical(played.probs());
    double loss = rng.uniform01();
    std::vector<double> est =
        importance_estimate(loss, a, played, Side::max_player);
    mirror = regexp3_descent(shadow, est, 2.0 / (0.4 * (t + 1)));
    l.observe(a, loss);
    CHECK(l1_distance(*l.mirror_policy(), mirror) <= 1e-12);
  }
}

TEST_CASE("regexp3 output equals the upcoming play") {
  RegExp3 l(Side::min_player, 2, 0.25);
  Rng rng(3);
  for (long t = 1; t <= 20; ++t) {
    Policy out = l.output();
    const Policy& played = l.act();
    CHECK(out[0] == played[0]);
    CHECK(out[1] == played[1]);
    l.observe(rng.categorical(played.probs()), rng.uniform01());
  }
}

TEST_CASE("regexp3 self-play stays uniform in expectation") {
  // every (a, b) path through the symmetric instance, depth 2, mean losses
  MatrixGame g = hard_instance(0.0);
  for (int depth : {1, 2}) {
    std::vector<double> emu(2, 0.0), enu(2, 0.0);
    double total = 0.0;
    std::vector<int> as(static_cast<std::size_t>(depth));
    std::vector<int> bs(static_cast<std::size_t>(depth));
    std::function<void(int, double)> walk = [&](int d, double prob) {
      if (d == depth) {
        RegExp3 lmin(Side::min_player, 2, 0.3);
        RegExp3 lmax(Side::max_player, 2, 0.3);
        double path = prob;
        for (int k = 0; k < depth; ++k) {
          const Policy& mu = lmin.act();
          const Policy& nu = lmax.act();
          path *= mu[as[static_cast<std::size_t>(k)]] *
                  nu[bs[static_cast<std::size_t>(k)]];
          double loss = g.at(as[static_cast<std::size_t>(k)],
                             bs[static_cast<std::size_t>(k)]);
          lmin.observe(as[static_cast<std::size_t>(k)], loss);
          lmax.observe(bs[static_cast<std::size_t>(k)], loss);
        }
        Policy pmu = lmin.output();
        Policy pnu = lmax.output();
        for (int i = 0; i < 2; ++i) {
          emu[static_cast<std::size_t>(i)] += path * pmu[i];
          enu[static_cast<std::size_t>(i)] += path * pnu[i];
        }
        total += path;
        return;
      }
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          as[static_cast<std::size_t>(d)] = a;
          bs[static_cast<std::size_t>(d)] = b;
          walk(d + 1, prob);
        }
    };
    walk(0, 1.0);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(emu[0] == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(enu[0] == doctest::Approx(0.5).epsilon(1e-13));
  }
}

TEST_CASE("explore probability schedule") {
  CHECK(eoe_explore_prob(1, 2.0) == 1.0);
  CHECK(eoe_explore_prob(1, 0.5) == 1.0);
  CHECK(eoe_explore_prob(4, 2.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(eoe_explore_prob(8, 1.0) ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK_THROWS_AS(eoe_explore_prob(0, 1.0), DomainError);
  CHECK_THROWS_AS(eoe_explore_prob(1, 0.0), DomainError);
  CHECK_THROWS_AS(eoe_explore_prob(1, 2.5), DomainError);
}

TEST_CASE("filter explores first and forwards only explore rounds") {
  auto l = make_learner("eoe:p=2,u=0.7", Side::min_player, 2, 2, 0.0);
  Eoe* eoe = dynamic_cast<Eoe*>(l.get());
  REQUIRE(eoe != nullptr);

  l->act();
  CHECK(eoe->last_explored());  // probability 1 at the first round
  l->observe(0, 1.0);
  CHECK(eoe->inner().rounds() == 1);

  long inner_rounds = 1;
  Rng rng(11);
  for (long t = 2; t <= 1000; ++t) {
    const Policy& p = l->act();
    if (eoe->last_explored()) {
      ++inner_rounds;
    } else {
      // exploit rounds play the inner recommendation and drop the loss
      Policy rec = eoe->inner().output();
      CHECK(p[0] == rec[0]);
      CHECK(p[1] == rec[1]);
    }
    l->observe(rng.categorical(p.probs()), rng.uniform01());
    CHECK(eoe->inner().rounds() == inner_rounds);
  }
  // explore count tracks the cumulative schedule's floor
  double s = 0.0;
  for (long t = 1; t <= 1000; ++t) s += eoe_explore_prob(t, 2.0);
  CHECK(inner_rounds >= static_cast<long>(std::floor(s)));
  CHECK(inner_rounds >=
        static_cast<long>(std::floor(2.0 * (std::sqrt(1001.0) - 1.0))));
  CHECK(inner_rounds <= static_cast<long>(std::floor(s)) + 1);
}

TEST_CASE("filters with the same offset explore in lockstep") {
  auto a = make_learner("eoe:p=1", Side::min_player, 2, 2, 0.41);
  auto b = make_learner("eoe:p=1", Side::max_player, 2, 2, 0.41);
  Eoe* ea = dynamic_cast<Eoe*>(a.get());
  Eoe* eb = dynamic_cast<Eoe*>(b.get());
  Rng rng(23);
  for (long t = 1; t <= 500; ++t) {
    const Policy& pa = a->act();
    const Policy& pb = b->act();
    CHECK(ea->last_explored() == eb->last_explored());
    a->observe(rng.categorical(pa.probs()), rng.uniform01());
    b->observe(rng.categorical(pb.probs()), rng.uniform01());
  }
}

TEST_CASE("doubling schedule") {
  DoublingSchedule s1 = doubling_schedule(1);
  CHECK(s1.T == 64);
  CHECK(s1.S == 16.0);
  DoublingSchedule s2 = doubling_schedule(2);
  CHECK(s2.T == 256);
  CHECK(s2.S == 32.0);
  DoublingSchedule s3 = doubling_schedule(3);
  CHECK(s3.T == 768);
  CHECK(s3.S == 64.0);
  CHECK_THROWS_AS(doubling_schedule(0), DomainError);

  CHECK(doubling_prob(1, 1) ==
        doctest::Approx(0.016632725920591554).epsilon(1e-14));
  CHECK(doubling_prob(1, 16) ==
        doctest::Approx(std::exp(1.0) / 64.0).epsilon(1e-14));
  CHECK(doubling_prob(2, 177) < 1.0);
  CHECK(doubling_prob(2, 178) == 1.0);
  CHECK_THROWS_AS(doubling_prob(1, 0), DomainError);
  CHECK_THROWS_AS(doubling_prob(1, 65), DomainError);

  double prev = 0.0;
  for (long j = 1; j <= 64; ++j) {
    double p = doubling_prob(1, j);
    CHECK(p >= prev);
    prev = p;
  }
}

TEST_CASE("doubling starts on the uniform arm and hands over") {
  Doubling l(Side::min_player, 2, 2, 0.5);
  CHECK(l.loop_index() == 1);
  Rng rng(31);
  bool trained_any = false;
  for (long j = 1; j <= 64; ++j) {
    const Policy& p = l.act();
    if (!l.last_trained() && !trained_any) {
      // before the first training round the uniform fallback plays
      CHECK(p[0] == 0.5);
      CHECK(p[1] == 0.5);
    }
    trained_any = trained_any || l.last_trained();
    l.observe(rng.categorical(p.probs()), rng.uniform01());
  }
  CHECK(trained_any);
  CHECK(l.loop_index() == 2);
  CHECK(l.round_in_loop() == 0);

  // in loop 2 the fallback arm is the loop-1 candidate, which is also the
  // exploit recommendation
  for (long j = 1; j <= 256; ++j) {
    Policy rec = l.output();
    const Policy& p = l.act();
    if (!l.last_trained()) {
      CHECK(p[0] == rec[0]);
      CHECK(p[1] == rec[1]);
    }
    l.observe(rng.categorical(p.probs()), rng.uniform01());
  }
  CHECK(l.loop_index() == 3);
}

TEST_CASE("doubling coin depends only on the shared offset") {
  Doubling a(Side::min_player, 2, 2, 0.37);
  Doubling b(Side::max_player, 2, 2, 0.37);
  Rng rng(41);
  for (long t = 1; t <= 2000; ++t) {
    const Policy& pa = a.act();
    const Policy& pb = b.act();
    CHECK(a.last_trained() == b.last_trained());
    a.observe(rng.categorical(pa.probs()), rng.uniform01());
    b.observe(rng.categorical(pb.probs()), rng.uniform01());
  }
  CHECK(a.loop_index() == b.loop_index());
}

TEST_CASE("spec u parameter overrides the ambient offset") {
  auto a = make_learner("doubling:u=0.37", Side::min_player, 2, 2, 0.9);
  auto b = make_learner("doubling", Side::min_player, 2, 2, 0.37);
  Doubling* da = dynamic_cast<Doubling*>(a.get());
  Doubling* db = dynamic_cast<Doubling*>(b.get());
  Rng rng(43);
  for (long t = 1; t <= 300; ++t) {
    const Policy& pa = a->act();
    b->act();
    CHECK(da->last_trained() == db->last_trained());
    int act = rng.categorical(pa.probs());
    double loss = rng.uniform01();
    a->observe(act, loss);
    b->observe(act, loss);
  }
}

TEST_CASE("policies stay normalized and positive under random drive") {
  const char* specs[] = {"exp3ix", "regexp3:tau=0.5", "eoe:p=2", "doubling"};
  for (const char* spec : specs) {
    auto l = make_learner(spec, Side::min_player, 3, 3, 0.21);
    Rng rng(53);
    for (long t = 1; t <= 2000; ++t) {
      const Policy& p = l->act();
      double sum = 0.0;
      for (int i = 0; i < 3; ++i) {
        CHECK(p[i] > 0.0);
        sum += p[i];
      }
      CHECK(std::abs(sum - 1.0) <= 1e-12);
      l->observe(rng.categorical(p.probs()), rng.uniform01());
    }
  }
}
