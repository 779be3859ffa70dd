// Copyright 2026 The sdcircle Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sdcircle/bandlimited.h"

#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.h"
#include "sdcircle/errors.h"

namespace sdcircle {
namespace {

TEST_CASE("evaluate: constant signal") {
  const auto c = TorusSignal::constant(0.2);
  for (double t : {0.0, 1.0, -3.0, 100.0}) CHECK(evaluate(c, t) == 0.2);
}

TEST_CASE("evaluate: figure-1 signal against its closed form") {
  const auto f = figure1_signal();
  CHECK(f.bandwidth() == 15);
  CHECK(evaluate(f, 0.0) == doctest::Approx(0.2).epsilon(1e-15));
  const double t = oracle::kPi / 10.0;
  CHECK(std::abs(evaluate(f, t) - oracle::figure1_closed_form(t)) < 1e-15);
  CHECK(std::abs(evaluate(f, t) - 0.1) < 1e-15);

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> angle(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const double x = angle(rng);
    CHECK(std::abs(evaluate(f, x) - oracle::figure1_closed_form(x)) < 1e-14);
  }
}

TEST_CASE("TorusSignal rejects non-Hermitian coefficients") {
  using C = std::complex<double>;
  CHECK_THROWS_AS(TorusSignal({C(1, 0), C(0, 0), C(2, 0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(TorusSignal({C(0, 1)}), std::invalid_argument);
  CHECK_THROWS_AS(TorusSignal({C(0, 0), C(1, 0)}), std::invalid_argument);
  CHECK_NOTHROW(TorusSignal({C(0.5, 0.5), C(1, 0), C(0.5, -0.5)}));
}

TEST_CASE("reality: random signals evaluate with negligible imaginary part") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  for (int bandwidth : {0, 1, 5, 20}) {
    const auto f = random_signal(rng, bandwidth, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double t = angle(rng);
      const auto z = evaluate_complex(f, t);
      worst = std::max(worst, std::abs(z.imag()));
      CHECK(std::abs(z.real() - evaluate(f, t)) < 1e-14);
    }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("random_signal respects the amplitude cap") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto f = random_signal(rng, 12, 0.7);
    CHECK(f.coefficient_l1_norm() <= 0.7 + 1e-15);
    CHECK(sample(f, 101).sup_norm() <= 0.7 + 1e-15);
  }
}

TEST_CASE("shifted, with_bandwidth and difference") {
  const auto f = figure1_signal();
  const auto g = f.shifted(-0.01);
  for (double t : {0.0, 0.3, 2.0}) {
    CHECK(std::abs(evaluate(g, t) - evaluate(f, t) + 0.01) < 1e-15);
  }
  const auto wide = f.with_bandwidth(20);
  CHECK(wide.bandwidth() == 20);
  CHECK(std::abs(evaluate(wide, 1.3) - evaluate(f, 1.3)) < 1e-15);
  const auto d = wide - f;
  CHECK(d.coefficient_l1_norm() == 0.0);
}

TEST_CASE("sample") {
  SUBCASE("constant") {
    const auto grid = sample(TorusSignal::constant(0.2), 31);
    CHECK(grid.size() == 31);
    for (double y : grid.values()) CHECK(y == 0.2);
  }
  SUBCASE("figure-1 signal at N = 9002") {
    const auto grid = sample(figure1_signal(), 9002);
    CHECK(grid.size() == 9002);
    CHECK(grid.sup_norm() <= 0.3);
    CHECK(grid.source_bandwidth() == 15);
    CHECK(grid.oversampling() == doctest::Approx(9001.0 / 30.0));
    for (int n : {0, 17, 4500, 9001}) {
      CHECK(std::abs(grid[n] - oracle::figure1_closed_form(kTwoPi * n / 9002)) <
            1e-15);
    }
  }
  SUBCASE("cosine at quarter points") {
    const TrigTerm cos1[] = {{1, 1.0, 0.0}};
    const auto grid = sample(TorusSignal::trigonometric(0.0, cos1), 4);
    const double expected[] = {1.0, 0.0, -1.0, 0.0};
    for (int n = 0; n < 4; ++n) CHECK(std::abs(grid[n] - expected[n]) < 1e-15);
  }
  SUBCASE("undersampling is rejected") {
    CHECK_THROWS_AS(sample(figure1_signal(), 30), UndersampledError);
    CHECK_NOTHROW(sample(figure1_signal(), 31));
    CHECK_THROWS_AS(SampleGrid(std::vector<double>(5, 0.0), 3),
                    UndersampledError);
  }
}

TEST_CASE("kernel_value") {
  CHECK(kernel_value(DirichletKernel(15), 0.0) == 31.0);
  CHECK(std::abs(kernel_value(DirichletKernel(1), oracle::kPi) + 1.0) < 1e-15);
  CHECK(std::abs(kernel_value(DirichletKernel(15), kTwoPi / 31.0)) < 1e-13);
  CHECK(std::abs(kernel_value(DirichletKernel(15), kTwoPi) - 31.0) < 1e-9);
  CHECK(kernel_value(DirichletKernel(0), 1.234) == doctest::Approx(1.0));

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(-20.0, 20.0);
  const DirichletKernel kernel(15);
  for (int i = 0; i < 200; ++i) {
    const double x = angle(rng);
    const auto z = oracle::kernel_complex_sum(15, x);
    CHECK(std::abs(kernel_value(kernel, x) - z.real()) < 1e-10);
    CHECK(std::abs(kernel_value(kernel, x) - kernel_value(kernel, x + kTwoPi)) <
          1e-9);
  }
  // Either side of the removable-singularity switch.
  for (double x : {1.9e-6, 2.1e-6, -2.1e-6, kTwoPi + 1e-7}) {
    CHECK(std::abs(kernel_value(kernel, x) -
                   oracle::kernel_complex_sum(15, x).real()) < 1e-9);
  }
}

TEST_CASE("kernel symmetry holds exactly") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> angle(0.0, 7.0);
  const DirichletKernel kernel(15);
  for (int i = 0; i < 100; ++i) {
    const double x = angle(rng);
    CHECK(kernel_value(kernel, x) == kernel_value(kernel, -x));
    CHECK(kernel_derivative(kernel, 0, x) == kernel_derivative(kernel, 0, -x));
    CHECK(kernel_derivative(kernel, 2, x) == kernel_derivative(kernel, 2, -x));
  }
}

TEST_CASE("kernel reproducing identity on the sample grid") {
  for (int bandwidth : {0, 1, 15}) {
    const DirichletKernel kernel(bandwidth);
    for (int n : {2 * bandwidth + 1, 100, 9002}) {
      const int step = n > 1000 ? 997 : 1;
      for (int k = 0; k < n; k += step) {
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
          acc += kernel_value(kernel, kTwoPi * k / n - kTwoPi * i / n);
        }
        CHECK(std::abs(acc / n - 1.0) < 1e-9);
      }
    }
  }
}

TEST_CASE("kernel_derivative") {
  for (int bandwidth : {0, 1, 7, 15}) {
    CHECK(kernel_derivative(DirichletKernel(bandwidth), 1, 0.0) == 0.0);
  }
  // d/dx (1 + 2 cos x) = -2 sin x
  CHECK(std::abs(kernel_derivative(DirichletKernel(1), 1, oracle::kPi / 2) + 2.0) <
        1e-15);
  // second derivative of 1 + 2 sum cos(kx) at 0
  double oracle_second = 0.0;
  for (int k = 1; k <= 15; ++k) oracle_second -= 2.0 * k * k;
  CHECK(oracle_second == -2480.0);
  CHECK(kernel_derivative(DirichletKernel(15), 2, 0.0) == -2480.0);
  CHECK_THROWS_AS(kernel_derivative(DirichletKernel(1), -1, 0.0),
                  std::invalid_argument);

  SUBCASE("matches central differences away from 0") {
    const DirichletKernel kernel(15);
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> angle(0.1, kTwoPi - 0.1);
    auto value = [&](double x) { return kernel_value(kernel, x); };
    for (int i = 0; i < 50; ++i) {
      const double x = angle(rng);
      const double exact = kernel_derivative(kernel, 1, x);
      const double fd = oracle::central_difference(value, x, 1e-6);
      CHECK(std::abs(fd - exact) <= 1e-4 * std::max(1.0, std::abs(exact)));
    }
  }
  SUBCASE("higher orders chain") {
    const DirichletKernel kernel(6);
    for (int order = 1; order <= 4; ++order) {
      auto lower = [&](double x) { return kernel_derivative(kernel, order - 1, x); };
      for (double x : {0.4, 1.7, 3.9}) {
        const double exact = kernel_derivative(kernel, order, x);
        const double fd = oracle::central_difference(lower, x, 1e-5);
        CHECK(std::abs(fd - exact) <= 1e-5 * std::max(1.0, std::abs(exact)));
      }
    }
  }
}

TEST_CASE("kernel_norms") {
  SUBCASE("sup of the kernel is 2K+1") {
    const auto norms = kernel_norms(DirichletKernel(15), 0);
    CHECK(std::abs(norms.sup - 31.0) < 1e-9);
    CHECK(std::abs(kernel_norms(DirichletKernel(3), 0).sup - 7.0) < 1e-9);
  }
  SUBCASE("K = 1 L1 norm against the closed form") {
    const auto norms = kernel_norms(DirichletKernel(1), 0);
    CHECK(norms.l1 == doctest::Approx(oracle::l1_norm_k1_kernel()).epsilon(1e-6));
    CHECK(std::abs(norms.sup - 3.0) < 1e-12);
  }
  SUBCASE("K = 15 first derivative against trapezoid quadrature") {
    const DirichletKernel kernel(15);
    auto d1 = [&](double x) { return kernel_derivative(kernel, 1, x); };
    const double coarse = oracle::trapezoid_l1(d1, 200000);
    const double fine = oracle::trapezoid_l1(d1, 400000);
    CHECK(std::abs(coarse - fine) <= 5e-5 * fine);  // 4 significant digits
    const auto norms = kernel_norms(kernel, 1);
    CHECK(norms.l1 > 0.0);
    CHECK(std::isfinite(norms.l1));
    CHECK(norms.l1 == doctest::Approx(fine).epsilon(1e-5));
    const double sup = oracle::dense_sup(d1, 400000);
    CHECK(norms.sup >= sup - 1e-9);
    CHECK(norms.sup == doctest::Approx(sup).epsilon(1e-6));
  }
  SUBCASE("K = 0 derivatives vanish") {
    const auto norms = kernel_norms(DirichletKernel(0), 2);
    CHECK(norms.l1 == 0.0);
    CHECK(norms.sup == 0.0);
  }
  CHECK_THROWS_AS(kernel_norms(DirichletKernel(1), -1), std::invalid_argument);
}

}  // namespace
}  // namespace sdcircle
