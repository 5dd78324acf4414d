#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "homshift/balanced.hpp"
#include "homshift/error.hpp"
#include "oracles.hpp"

using namespace homshift;

namespace {

// w = 1 + |z_1|^2 / 2 on the sphere of C^2, ranging over [1, 3/2].
Density half_density() { return Density(2, {{MultiIndex{0, 0}, 1.0}, {MultiIndex{1, 0}, 0.5}}); }

std::map<MultiIndex, double> polydisc_entries(int d, int cap) {
  std::map<MultiIndex, double> e;
  for (int n = 0; n <= cap; ++n)
    for (const auto& alpha : enumerate_level(d, n)) e[alpha] = 1.0;
  return e;
}

}  // namespace

TEST_CASE("sigma moments against the closed form") {
  CHECK(sigma_moment(MultiIndex{1, 1}) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(sigma_moment(MultiIndex{3}) == 1.0);
  for (int n = 0; n <= 20; ++n)
    for (int a = 0; a <= n; ++a)
      CHECK(sigma_moment(MultiIndex{a, n - a}) == doctest::Approx(1.0 / ((n + 1) * oracle::binomial(n, a))).epsilon(1e-13));
  // Sum over directions telescopes: sum_k m_{alpha+e_k} = m_alpha, since |z|^2 = 1 on the sphere.
  for (int n = 0; n <= 10; ++n) {
    for (const auto& alpha : enumerate_level(3, n)) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += sigma_moment(alpha.raised(k));
      CHECK(s == doctest::Approx(sigma_moment(alpha)).epsilon(1e-13));
    }
  }
}

TEST_CASE("is_spherically_balanced examples") {
  for (const auto& f : {WeightFamily::polydisc_hardy(2), WeightFamily::drury_arveson(3), WeightFamily::fock(3, 12),
                        WeightFamily::radial(2, std::vector<double>(13, 1.0))}) {
    const auto c = is_spherically_balanced(f, 10, 1e-12);
    CHECK(c.balanced);
    CHECK(c.max_relative_spread <= 1e-12);
    CHECK(c.level_spread.size() == 11);
  }

  auto entries = polydisc_entries(2, 8);
  entries[MultiIndex{1, 0}] = 1.1;
  const auto c = is_spherically_balanced(WeightFamily::table(2, 8, entries), 6, 1e-10);
  CHECK_FALSE(c.balanced);
  CHECK(*c.alpha == MultiIndex{0, 0});
  CHECK(c.i == 0);
  CHECK(c.j == 1);
  CHECK(c.sum_i == doctest::Approx(2.0 / 1.21));
  CHECK(c.sum_j == doctest::Approx(2.0));
  CHECK_THROWS_AS(is_spherically_balanced(WeightFamily::polydisc_hardy(2, 8), 7, 1e-10), CapExceeded);
}

TEST_CASE("every slice family is balanced") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.3, 3.0);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<double> g{1.0};
    for (int n = 1; n <= 12; ++n) g.push_back(u(rng));
    const Density w(3, {{MultiIndex{0, 0, 0}, u(rng)}, {MultiIndex{1, 0, 0}, u(rng)}, {MultiIndex{0, 2, 1}, u(rng)}});
    const SliceRepresentation rep{ReinhardtMeasure::with_density(w), RadialWeights(g)};
    CHECK(is_spherically_balanced(slice_family(rep, 12), 10, 1e-12).balanced);
  }
}

TEST_CASE("compose_slice and verify_slice") {
  const auto sigma = ReinhardtMeasure::sigma(2);
  CHECK(compose_slice({sigma, RadialWeights::constant(5)}, MultiIndex{1, 1}) == doctest::Approx(std::sqrt(1.0 / 6.0)));
  CHECK(compose_slice({sigma, RadialWeights::sqrt_linear(5)}, MultiIndex{1, 0}) == doctest::Approx(1.0));

  const auto da = verify_slice(WeightFamily::drury_arveson(2), {sigma, RadialWeights::sqrt_linear(15)}, 15, 1e-12);
  CHECK(da.matches);
  CHECK(da.max_relative_error <= 1e-12);

  const auto torus = ReinhardtMeasure::moment_table(2, 15, polydisc_entries(2, 15));
  CHECK(verify_slice(WeightFamily::polydisc_hardy(2), {torus, RadialWeights::constant(15)}, 15, 1e-14).matches);

  const auto wrong = verify_slice(WeightFamily::polydisc_hardy(2), {sigma, RadialWeights::constant(15)}, 15, 1e-6);
  CHECK_FALSE(wrong.matches);
  // The worst mismatch is at the most balanced index of the top level.
  CHECK(*wrong.worst == MultiIndex{8, 7});

  CHECK_THROWS_AS(RadialWeights({2.0, 1.0}), InvalidArgument);
  CHECK_THROWS_AS(RadialWeights({1.0, -1.0}), InvalidArgument);
}

TEST_CASE("density moments") {
  const auto w = half_density();
  CHECK(density_moment(w, MultiIndex{0, 0}) == doctest::Approx(5.0 / 4.0).epsilon(1e-15));
  CHECK(density_moment(w, MultiIndex{1, 0}) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(density_moment(w, MultiIndex{0, 1}) == doctest::Approx(7.0 / 12.0).epsilon(1e-15));
  CHECK(w.sampled_min() >= 1.0);
  CHECK(w.sampled_max() <= 1.5);
  CHECK(w.sampled_max() == doctest::Approx(1.5));

  CHECK_THROWS_AS(Density(2, {{MultiIndex{0, 0}, 1.0}, {MultiIndex{1, 0}, -1.5}}), InvalidArgument);
  CHECK_THROWS_AS(Density(2, {{MultiIndex{0, 0, 0}, 1.0}}), InvalidArgument);
  CHECK_THROWS_AS(Density(2, {}), InvalidArgument);
}

TEST_CASE("Radon-Nikodym ratios of a rotated density") {
  const auto w = half_density();
  const auto swap = UnitaryMatrix::permutation({1, 0});
  const auto r = rn_bound_sample(w, swap, 20000, 4);
  CHECK(r.min >= 2.0 / 3.0 - 1e-12);
  CHECK(r.max <= 1.5 + 1e-12);
  CHECK(r.min < 0.7);
  CHECK(r.max > 1.4);

  const auto id = rn_bound_sample(w, UnitaryMatrix::identity(2), 100, 4);
  CHECK(id.min == 1.0);
  CHECK(id.max == 1.0);
  CHECK(rn_bound_sample(w, haar_sample(2, 3), 500, 9).min == rn_bound_sample(w, haar_sample(2, 3), 500, 9).min);

  // Chain rule: R_{uv}(z) = R_v(u^{-1} z) R_u(z).
  std::mt19937_64 rng(5);
  const auto u = haar_sample(2, 1);
  const auto v = haar_sample(2, 2);
  for (int s = 0; s < 50; ++s) {
    const Eigen::VectorXcd z = uniform_sphere_point(2, rng);
    const Eigen::VectorXcd uz = u.inverse().apply(z);
    const double direct = w((u * v).inverse().apply(z)) / w(z);
    const double chained = (w(v.inverse().apply(uz)) / w(uz)) * (w(uz) / w(z));
    CHECK(direct == doctest::Approx(chained).epsilon(1e-12));
  }
}

TEST_CASE("rotated_density_moment") {
  const auto w = half_density();
  const MultiIndex a{2, 1};
  CHECK(rotated_density_moment(w, UnitaryMatrix::identity(2), a) == doctest::Approx(density_moment(w, a)).epsilon(1e-14));
  CHECK(rotated_density_moment(w, UnitaryMatrix::torus_angles({0.3, 2.0}), a) ==
        doctest::Approx(density_moment(w, a)).epsilon(1e-14));
  // Swapping coordinates swaps the moment's indices.
  CHECK(rotated_density_moment(w, UnitaryMatrix::permutation({1, 0}), a) ==
        doctest::Approx(density_moment(w, MultiIndex{1, 2})).epsilon(1e-14));
  // Total mass is rotation invariant.
  for (std::uint64_t s = 0; s < 10; ++s)
    CHECK(rotated_density_moment(w, haar_sample(2, s), MultiIndex{0, 0}) == doctest::Approx(1.25).epsilon(1e-13));

  // Monte Carlo oracle over the sphere.
  const auto u = haar_sample(2, 17);
  std::mt19937_64 rng(77);
  double acc = 0.0;
  const int samples = 200000;
  for (int s = 0; s < samples; ++s) {
    const Eigen::VectorXcd z = uniform_sphere_point(2, rng);
    acc += std::norm(z(0)) * w(u.inverse().apply(z));
  }
  CHECK(std::abs(acc / samples - rotated_density_moment(w, u, MultiIndex{1, 0})) <= 0.005);
}

TEST_CASE("Haar average of a rotated density is a multiple of sigma") {
  const std::vector<MultiIndex> alphas{MultiIndex{0, 0}, MultiIndex{1, 0}, MultiIndex{0, 1}, MultiIndex{2, 1}};
  const auto avg = haar_average_density(half_density(), 2000, 13, alphas);
  CHECK(std::abs(avg.common_constant - 1.25) <= 0.03 * 1.25);
  CHECK(avg.max_relative_deviation <= 0.03);
  CHECK(avg.ratios[0] == doctest::Approx(1.25).epsilon(1e-12));
  CHECK(avg.estimates.size() == 4);
}

TEST_CASE("szego_similarity_check") {
  const auto sigma = szego_similarity_check(ReinhardtMeasure::sigma(2), 15);
  CHECK(sigma.k1 == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sigma.k1_upper == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sigma.verdict.classification == Classification::bounded);
  CHECK_FALSE(sigma.formal);

  const auto dens = szego_similarity_check(ReinhardtMeasure::with_density(half_density()), 15);
  CHECK(dens.k1 >= 1.0 - 1e-12);
  CHECK(dens.k1_upper <= std::sqrt(1.5) + 1e-12);
  CHECK(dens.verdict.classification == Classification::bounded);

  const auto torus = szego_similarity_check(ReinhardtMeasure::moment_table(2, 20, polydisc_entries(2, 20)), 20);
  CHECK(torus.formal);
  CHECK(torus.verdict.classification == Classification::divergent);
  CHECK(torus.k1 == doctest::Approx(1.0));
  CHECK(torus.argmax == MultiIndex{10, 10});
}

TEST_CASE("sphere moment Monte Carlo") {
  const std::vector<MultiIndex> alphas{MultiIndex{1, 0, 0}, MultiIndex{1, 1, 0}, MultiIndex{2, 0, 1}, MultiIndex{0, 0, 0}};
  const auto est = sphere_moment_monte_carlo(3, alphas, 200000, 3);
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    CHECK(std::abs(est[i].mean - sigma_moment(alphas[i])) <= 5 * est[i].standard_error + 1e-15);
  }
  CHECK(est[3].mean == doctest::Approx(1.0));
  CHECK(est[3].standard_error <= 1e-12);
  CHECK(est[0].standard_error > 0.0);
  const auto again = sphere_moment_monte_carlo(3, alphas, 200000, 3);
  CHECK(again[1].mean == est[1].mean);
}
