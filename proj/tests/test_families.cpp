#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "monogamy/families.hpp"
#include "monogamy/measures.hpp"
#include "monogamy/random.hpp"
#include "monogamy/search.hpp"

using namespace monogamy;

namespace {
const double kInvSqrt3 = 1 / std::sqrt(3.0);  // matches the constructors bit-for-bit
constexpr double kCMax = 1.650143278748272324;
constexpr double kLiuEofSum = 1.201752073385712202;
}  // namespace

TEST_CASE("w_state amplitudes and small cases") {
  const auto w3 = w_state<double>(3);
  for (Eigen::Index i : {1, 2, 4})
    CHECK(w3.amplitude(i) == Complex<double>(kInvSqrt3, 0));
  CHECK(w3.amplitude(0) == Complex<double>(0, 0));

  // n = 2 degenerates to a Bell state
  const auto w2 = w_state<double>(2);
  CHECK(pure_concurrence(w2, {0}) == doctest::Approx(1.0).epsilon(1e-12));

  // n = 4: every pair concurrence 1/2, sC = 3
  const auto conc = all_pair_concurrences(w_state<double>(4));
  CHECK(conc.size() == 6);
  double sc = 0;
  for (double c : conc) {
    CHECK(c == doctest::Approx(0.5).epsilon(1e-10));
    sc += c;
  }
  CHECK(sc == doctest::Approx(3.0).epsilon(1e-9));

  CHECK_THROWS_AS(w_state<double>(1), std::invalid_argument);
}

TEST_CASE("ghz_state pairwise measures vanish") {
  CHECK(pairwise_report(ghz_state<double>(3)).sc == 0.0);
  CHECK(pure_concurrence(ghz_state<double>(2), {0}) == doctest::Approx(1.0).epsilon(1e-12));
  for (double c : all_pair_concurrences(ghz_state<double>(4))) CHECK(c == 0.0);
  CHECK_THROWS_AS(ghz_state<double>(1), std::invalid_argument);
}

TEST_CASE("wclass_state fixed points") {
  const auto w_point = wclass_state(WClassParams<double>({0, kInvSqrt3, kInvSqrt3, kInvSqrt3}));
  CHECK(w_point == w_state<double>(3));

  const auto product = wclass_state(WClassParams<double>({1, 0, 0, 0}));
  CHECK(product.amplitude(0) == Complex<double>(1, 0));

  const double inv_sqrt2 = 1 / std::sqrt(2.0);
  const auto bisep = wclass_state(WClassParams<double>({0, 0, inv_sqrt2, inv_sqrt2}));
  const auto conc = all_pair_concurrences(bisep);
  CHECK(conc[0] == doctest::Approx(1.0).epsilon(1e-10));  // AB
  CHECK(conc[1] == doctest::Approx(0.0).epsilon(1e-10));  // AC
  CHECK(conc[2] == doctest::Approx(0.0).epsilon(1e-10));  // BC

  CHECK_THROWS_AS(WClassParams<double>({1, 1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(WClassParams<double>({-1, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("wclass closed form equals the generic pipeline") {
  const WClassParams<double> at_w({0, kInvSqrt3, kInvSqrt3, kInvSqrt3});
  for (double c : wclass_closed_form(at_w)) CHECK(c == doctest::Approx(2.0 / 3).epsilon(1e-12));
  for (double c : wclass_closed_form(WClassParams<double>({1, 0, 0, 0}))) CHECK(c == 0.0);

  const WClassParams<double> asym({0.2, 0.4, 0.6, std::sqrt(0.44)});
  const auto closed = wclass_closed_form(asym);
  const auto generic = all_pair_concurrences(wclass_state(asym));
  for (int k = 0; k < 3; ++k) CHECK(std::abs(closed[k] - generic[k]) < 1e-8);

  for (int i = 0; i < 300; ++i) {
    RandomStream stream(41, i);
    std::array<double, 4> r;
    double norm = 0;
    for (auto& v : r) {
      v = std::abs(stream.next_gaussian());
      norm += v * v;
    }
    for (auto& v : r) v /= std::sqrt(norm);
    const WClassParams<double> params(r);
    const auto want = wclass_closed_form(params);
    const auto got = all_pair_concurrences(wclass_state(params));
    for (int k = 0; k < 3; ++k) CHECK(std::abs(want[k] - got[k]) < 1e-8);
  }
}

TEST_CASE("acin_state fixed points") {
  const AcinParams<double> w_max({kInvSqrt3, 0, kInvSqrt3, kInvSqrt3, 0}, 0);
  const auto rep = pairwise_report(acin_state(w_max));
  CHECK(rep.se == doctest::Approx(kCMax).epsilon(1e-9));

  const double inv_sqrt2 = 1 / std::sqrt(2.0);
  CHECK(acin_state(AcinParams<double>({inv_sqrt2, 0, 0, 0, inv_sqrt2}, 0)) ==
        ghz_state<double>(3));

  const auto product = acin_state(AcinParams<double>({0, 0, 0, 0, 1}, 0));
  CHECK(product.amplitude(7) == Complex<double>(1, 0));

  CHECK_THROWS_AS(AcinParams<double>({1, 0, 0, 0, 0}, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(AcinParams<double>({1, 0, 0, 0, 0}, 3.15), std::invalid_argument);
  CHECK_THROWS_AS(AcinParams<double>({1, 1, 0, 0, 0}, 0), std::invalid_argument);
}

TEST_CASE("acin closed form equals the generic pipeline") {
  const AcinParams<double> w_max({kInvSqrt3, 0, kInvSqrt3, kInvSqrt3, 0}, 0);
  for (double c2 : acin_closed_form(w_max)) CHECK(c2 == doctest::Approx(4.0 / 9).epsilon(1e-12));

  const double inv_sqrt2 = 1 / std::sqrt(2.0);
  for (double c2 : acin_closed_form(AcinParams<double>({inv_sqrt2, 0, 0, 0, inv_sqrt2}, 0)))
    CHECK(c2 == 0.0);

  for (int i = 0; i < 1000; ++i) {
    RandomStream stream(42, i);
    std::array<double, 5> l;
    double norm = 0;
    for (auto& v : l) {
      v = std::abs(stream.next_gaussian());
      norm += v * v;
    }
    for (auto& v : l) v /= std::sqrt(norm);
    const AcinParams<double> params(l, stream.next_double() * 3.14159);
    const auto want = acin_closed_form(params);
    const auto got = all_pair_concurrences(acin_state(params));
    for (int k = 0; k < 3; ++k) CHECK(std::abs(std::sqrt(want[k]) - got[k]) < 1e-8);
  }
}

TEST_CASE("ghzclass_state fixed points") {
  const GhzClassParams<double> identity_params({1, 1, 1}, {1, 1, 1}, {0, 0, 0},
                                               {M_PI_2, M_PI_2, M_PI_2});
  CHECK((ghzclass_state(identity_params).amplitudes() - ghz_state<double>(3).amplitudes())
            .norm() < 1e-14);
  CHECK(ghzclass_sc_closed_form(identity_params) == doctest::Approx(0.0));

  // generic parameters give a genuinely tripartite state
  const GhzClassParams<double> generic({1, 1, 1}, {1, 1, 1}, {0.3, 1.1, 2.0},
                                       {2 * M_PI / 3, 2 * M_PI / 3, 2 * M_PI / 3});
  CHECK(ckw_residual(ghzclass_state(generic), 0) > 1e-3);

  CHECK_THROWS_AS(GhzClassParams<double>({1, 1, 1}, {1, 1, 1}, {0, 0, 0}, {0, M_PI_2, M_PI_2}),
                  std::invalid_argument);  // sin(phi_0) = 0 makes M_0 singular
  CHECK_THROWS_AS(GhzClassParams<double>({0, 1, 1}, {1, 1, 1}, {0, 0, 0},
                                         {M_PI_2, M_PI_2, M_PI_2}),
                  std::invalid_argument);
}

TEST_CASE("ghzclass closed form: the worked example and the strict bound") {
  const GhzClassParams<double> example({1, 1, 1}, {1, 1, 1}, {0, 0, 0},
                                       {2 * M_PI / 3, 2 * M_PI / 3, 2 * M_PI / 3});
  CHECK(ghzclass_sc_closed_form(example) == doctest::Approx(9.0 / 7).epsilon(1e-12));
  const auto conc = all_pair_concurrences(ghzclass_state(example));
  CHECK(conc[0] + conc[1] + conc[2] == doctest::Approx(9.0 / 7).epsilon(1e-8));

  // sweep of the common angle at r = 1: approaches but never reaches 2
  double sweep_max = 0;
  for (int k = 1; k < 400; ++k) {
    const double phi = M_PI * k / 400.0;
    const GhzClassParams<double> p({1, 1, 1}, {1, 1, 1}, {0, 0, 0}, {phi, phi, phi});
    sweep_max = std::max(sweep_max, ghzclass_sc_closed_form(p));
  }
  CHECK(sweep_max < 2.0);
  CHECK(sweep_max > 1.9);  // the bound is approached in the singular limit

  for (int i = 0; i < 500; ++i) {
    RandomStream stream(43, i);
    auto in_range = [&stream](double lo, double hi) {
      return lo + (hi - lo) * stream.next_double();
    };
    const GhzClassParams<double> params(
        {in_range(0.3, 2), in_range(0.3, 2), in_range(0.3, 2)},
        {in_range(0.3, 2), in_range(0.3, 2), in_range(0.3, 2)},
        {in_range(0, 6.28), in_range(0, 6.28), in_range(0, 6.28)},
        {in_range(0.05, 3.09), in_range(0.05, 3.09), in_range(0.05, 3.09)});
    const double closed = ghzclass_sc_closed_form(params);
    CHECK(closed < 2.0);
    const auto pc = all_pair_concurrences(ghzclass_state(params));
    CHECK(std::abs(pc[0] + pc[1] + pc[2] - closed) < 1e-6);
  }
}

TEST_CASE("ghzclass closed form rejects a vanishing denominator") {
  const double phi = M_PI - 1e-6;
  const GhzClassParams<double> nearly_singular({1, 1, 1}, {1, 1, 1}, {0, 0, 0},
                                               {phi, phi, phi});
  CHECK_THROWS_AS(ghzclass_sc_closed_form(nearly_singular), std::invalid_argument);
}

TEST_CASE("generalized W states and their concurrence sum") {
  const GeneralizedWParams<double> pure_w(1.0, {kInvSqrt3, kInvSqrt3, kInvSqrt3});
  CHECK(generalized_w_state(pure_w) == w_state<double>(3));
  CHECK(generalized_w_sc_closed_form(pure_w) == doctest::Approx(2.0).epsilon(1e-12));

  const GeneralizedWParams<double> vacuum(0.0, {1, 0, 0});
  CHECK(generalized_w_state(vacuum).amplitude(0) == Complex<double>(1, 0));
  CHECK(generalized_w_sc_closed_form(vacuum) == 0.0);

  const GeneralizedWParams<double> half(0.5, {kInvSqrt3, kInvSqrt3, kInvSqrt3});
  CHECK(generalized_w_sc_closed_form(half) == doctest::Approx(1.0).epsilon(1e-12));
  const auto conc = all_pair_concurrences(generalized_w_state(half));
  CHECK(conc[0] + conc[1] + conc[2] == doctest::Approx(1.0).epsilon(1e-8));

  const GeneralizedWParams<double> n4(1.0, {0.5, 0.5, 0.5, 0.5});
  CHECK(generalized_w_sc_closed_form(n4) == doctest::Approx(3.0).epsilon(1e-12));

  const GeneralizedWParams<double> fixed(0.7, {0.8, 0.6, 0.0});
  CHECK(generalized_w_sc_closed_form(fixed) == doctest::Approx(0.672).epsilon(1e-12));

  CHECK_THROWS_AS(GeneralizedWParams<double>(1.2, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(GeneralizedWParams<double>(0.5, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(GeneralizedWParams<double>(0.5, std::vector<Complex<double>>(6, 0.4)),
                  std::invalid_argument);
}

TEST_CASE("generalized W closed form equals the pairwise rule exactly") {
  for (int i = 0; i < 500; ++i) {
    RandomStream stream(44, i);
    const int n = 3 + static_cast<int>(stream.next_u64() % 3);
    std::vector<Complex<double>> a(n);
    double norm = 0;
    for (auto& ai : a) {
      ai = stream.next_complex_gaussian();
      norm += std::norm(ai);
    }
    for (auto& ai : a) ai /= std::sqrt(norm);
    const double p = stream.next_double();
    const GeneralizedWParams<double> params(p, a);
    double pair_rule = 0;
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) pair_rule += 2 * p * std::abs(a[x]) * std::abs(a[y]);
    CHECK(std::abs(pair_rule - generalized_w_sc_closed_form(params)) < 1e-12);
  }
}

TEST_CASE("generalized W pipeline agreement for n in {3, 4}") {
  for (int i = 0; i < 300; ++i) {
    RandomStream stream(45, i);
    const int n = 3 + static_cast<int>(stream.next_u64() % 2);
    std::vector<Complex<double>> a(n);
    double norm = 0;
    for (auto& ai : a) {
      ai = stream.next_complex_gaussian();
      norm += std::norm(ai);
    }
    for (auto& ai : a) ai /= std::sqrt(norm);
    const GeneralizedWParams<double> params(stream.next_double(), a);
    double sc = 0;
    for (double c : all_pair_concurrences(generalized_w_state(params))) sc += c;
    CHECK(std::abs(sc - generalized_w_sc_closed_form(params)) < 1e-8);
  }
}

TEST_CASE("W-Wbar mixture matches its closed form through the pipeline") {
  const auto pure_w = pairwise_report(wbar_mixture(1.0));
  for (const auto* pm : {&pure_w.ab, &pure_w.ac, &pure_w.bc})
    CHECK(pm->concurrence == doctest::Approx(2.0 / 3).epsilon(1e-10));

  const auto pure_wbar = pairwise_report(wbar_mixture(0.0));
  for (const auto* pm : {&pure_wbar.ab, &pure_wbar.ac, &pure_wbar.bc})
    CHECK(pm->concurrence == doctest::Approx(2.0 / 3).epsilon(1e-10));

  for (double p1 : {0.05, 0.1, 0.25, 0.5, 0.75, 0.9}) {
    const double expected = (2 - 2 * std::sqrt(p1 * (1 - p1))) / 3;
    const auto rep = pairwise_report(wbar_mixture(p1));
    for (const auto* pm : {&rep.ab, &rep.ac, &rep.bc})
      CHECK(pm->concurrence == doctest::Approx(expected).epsilon(1e-8));
    if (p1 > 0 && p1 < 1) CHECK(rep.sc < 2.0);
  }

  CHECK_THROWS_AS(wbar_mixture(1.5), std::invalid_argument);
}

TEST_CASE("liu state reaches both pivot bounds") {
  const auto liu = liu_state<double>();
  CHECK(std::abs(liu.amplitudes().norm() - 1.0) < 1e-15);
  const auto rep = pairwise_report(liu);
  CHECK(rep.ab.eof + rep.ac.eof == doctest::Approx(kLiuEofSum).epsilon(1e-9));
  CHECK(rep.ab.eof + rep.ac.eof == doctest::Approx(1.20175).epsilon(1e-4));
  CHECK(rep.ab.concurrence + rep.ac.concurrence ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("wclass search lands on the symmetric point") {
  const auto result =
      optimize_family({ObjectiveKind::sc, 3}, FamilyKind::wclass, /*starts=*/8, /*seed=*/5);
  CHECK(result.best_value == doctest::Approx(2.0).epsilon(1e-6));
  const double r1 = result.best_params.at("r1");
  const double r2 = result.best_params.at("r2");
  const double r3 = result.best_params.at("r3");
  CHECK(std::abs(r1 - r2) < 1e-3);
  CHECK(std::abs(r1 - r3) < 1e-3);
  CHECK(std::abs(r1 - kInvSqrt3) < 1e-3);
}
