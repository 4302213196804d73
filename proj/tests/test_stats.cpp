#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "core/error.hpp"
#include "core/stats.hpp"

using namespace fusionlens;

namespace {

// ---- independent oracles ---------------------------------------------------

// Counting-based average ranks: rank_i = #less + (#equal + 1)/2.
std::vector<double> oracle_ranks(const std::vector<double>& v) {
    std::vector<double> ranks(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::size_t less = 0, equal = 0;
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j] < v[i]) ++less;
            if (v[j] == v[i]) ++equal;
        }
        ranks[i] = static_cast<double>(less) + (static_cast<double>(equal) + 1.0) / 2.0;
    }
    return ranks;
}

double oracle_pearson(const std::vector<double>& a, const std::vector<double>& b) {
    double sa = 0, sb = 0, saa = 0, sbb = 0, sab = 0;
    const double n = static_cast<double>(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        sa += a[i];
        sb += b[i];
        saa += a[i] * a[i];
        sbb += b[i] * b[i];
        sab += a[i] * b[i];
    }
    double num = sab - sa * sb / n;
    double den = std::sqrt((saa - sa * sa / n) * (sbb - sb * sb / n));
    return num / den;
}

double oracle_spearman(const std::vector<double>& a, const std::vector<double>& b) {
    return oracle_pearson(oracle_ranks(a), oracle_ranks(b));
}

double oracle_cliffs(const std::vector<double>& a, const std::vector<double>& b) {
    long long greater = 0, less = 0;
    for (double x : a) {
        for (double y : b) {
            if (x > y) ++greater;
            if (x < y) ++less;
        }
    }
    return static_cast<double>(greater - less) /
           (static_cast<double>(a.size()) * static_cast<double>(b.size()));
}

double brute_ecdf(const std::vector<double>& v, double x) {
    std::size_t count = 0;
    for (double value : v) {
        if (value <= x) ++count;
    }
    return static_cast<double>(count) / static_cast<double>(v.size());
}

// Numeric integration of |F_a - F_b| sampled at interval midpoints; exact
// for step functions.
double oracle_wasserstein(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> merged = a;
    merged.insert(merged.end(), b.begin(), b.end());
    std::sort(merged.begin(), merged.end());
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < merged.size(); ++k) {
        double mid = merged[k] + (merged[k + 1] - merged[k]) / 2.0;
        total += std::fabs(brute_ecdf(a, mid) - brute_ecdf(b, mid)) *
                 (merged[k + 1] - merged[k]);
    }
    return total;
}

double oracle_mae(const std::vector<double>& a, const std::vector<double>& b) {
    double total = 0;
    for (std::size_t i = 0; i < a.size(); ++i) total += std::fabs(a[i] - b[i]);
    return total / static_cast<double>(a.size());
}

double t_pdf(double x, double df) {
    double c = std::exp(std::lgamma((df + 1.0) / 2.0) - std::lgamma(df / 2.0)) /
               std::sqrt(df * 3.14159265358979323846);
    return c * std::pow(1.0 + x * x / df, -(df + 1.0) / 2.0);
}

// Two-sided t-test p-value by Simpson quadrature over the upper tail.
double oracle_t_two_sided_p(double t, double df) {
    double a = std::fabs(t);
    double b = a + 60.0;
    const int steps = 40000;  // even
    double h = (b - a) / steps;
    double total = t_pdf(a, df) + t_pdf(b, df);
    for (int i = 1; i < steps; ++i) {
        total += t_pdf(a + i * h, df) * (i % 2 ? 4.0 : 2.0);
    }
    return 2.0 * total * h / 3.0;
}

std::vector<double> random_vector(std::mt19937_64& gen, std::size_t n, double lo, double hi) {
    std::uniform_real_distribution<double> unif(lo, hi);
    std::vector<double> v(n);
    for (auto& x : v) x = unif(gen);
    return v;
}

}  // namespace

TEST_SUITE("stats") {

TEST_CASE("average ranks match the counting formula") {
    std::mt19937_64 gen(100);
    for (int round = 0; round < 50; ++round) {
        auto v = random_vector(gen, 3 + gen() % 20, 0, 5);
        // force ties sometimes
        if (round % 2 && v.size() > 2) v[0] = v[1];
        auto expected = oracle_ranks(v);
        auto actual = average_ranks(v);
        REQUIRE(actual.size() == expected.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            CHECK(actual[i] == doctest::Approx(expected[i]).epsilon(1e-12));
        }
    }
}

TEST_CASE("spearman trivial cases") {
    PairedSample up({1, 2, 3}, {10, 20, 30});
    auto r_up = spearman(up);
    CHECK(r_up.r_s == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r_up.p_value == doctest::Approx(2.0 / 6.0).epsilon(1e-12));

    PairedSample down({1, 2, 3}, {3, 2, 1});
    CHECK(spearman(down).r_s == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("spearman with ties") {
    PairedSample tied({1, 1, 2}, {1, 2, 3});
    auto result = spearman(tied);
    CHECK(result.r_s == doctest::Approx(0.8660254037844387).epsilon(1e-9));
    // permutation distribution: 4 of 6 arrangements reach |r| >= sqrt(3)/2
    CHECK(result.p_value == doctest::Approx(4.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("spearman zero-variance errors") {
    CHECK_THROWS_AS(spearman(PairedSample({1, 1, 1}, {1, 2, 3})), Error);
    CHECK_THROWS_AS(spearman(PairedSample({1, 2, 3}, {4, 4, 4})), Error);
}

TEST_CASE("spearman r_s matches the O(n^2) oracle") {
    std::mt19937_64 gen(101);
    for (int round = 0; round < 200; ++round) {
        std::size_t n = 3 + gen() % 28;
        auto a = random_vector(gen, n, -5, 5);
        auto b = random_vector(gen, n, -5, 5);
        if (round % 3 == 0 && n >= 4) {  // inject ties
            a[1] = a[0];
            b[2] = b[3];
        }
        auto result = spearman(PairedSample(a, b));
        CHECK(result.r_s == doctest::Approx(oracle_spearman(a, b)).epsilon(1e-9));
    }
}

TEST_CASE("spearman is invariant under strictly monotone transforms") {
    std::mt19937_64 gen(102);
    for (int round = 0; round < 30; ++round) {
        std::size_t n = 5 + gen() % 15;
        auto a = random_vector(gen, n, 0.1, 4);
        auto b = random_vector(gen, n, 0.1, 4);
        auto base = spearman(PairedSample(a, b));

        std::vector<double> a_exp(a), b_log(b);
        for (auto& x : a_exp) x = std::exp(x);
        for (auto& x : b_log) x = std::log(x);
        auto transformed = spearman(PairedSample(a_exp, b_log));
        CHECK(base.r_s == doctest::Approx(transformed.r_s).epsilon(1e-12));
        CHECK(base.p_value == doctest::Approx(transformed.p_value).epsilon(1e-12));
    }
}

TEST_CASE("spearman t-approximation matches numeric integration") {
    std::mt19937_64 gen(103);
    for (int round = 0; round < 10; ++round) {
        std::size_t n = 10 + gen() % 21;
        auto a = random_vector(gen, n, 0, 1);
        auto b = random_vector(gen, n, 0, 1);
        auto result = spearman(PairedSample(a, b));
        if (std::fabs(result.r_s) >= 0.999) continue;
        double df = static_cast<double>(n - 2);
        double t = result.r_s * std::sqrt(df / (1.0 - result.r_s * result.r_s));
        CHECK(result.p_value == doctest::Approx(oracle_t_two_sided_p(t, df)).epsilon(1e-6));
    }
}

TEST_CASE("paired sample validation") {
    CHECK_THROWS_AS(PairedSample({1, 2}, {1, 2, 3}), Error);
    CHECK_THROWS_AS(PairedSample({1, 2}, {1, 2}), Error);
    CHECK_THROWS_AS(PairedSample({1, 2, std::nan("")}, {1, 2, 3}), Error);
}

TEST_CASE("mae basics and oracle") {
    CHECK(mae(std::vector<double>{3, 3}, std::vector<double>{3, 3}) == 0.0);
    CHECK(mae(std::vector<double>{2, 4}, std::vector<double>{3, 3}) == 1.0);

    std::mt19937_64 gen(104);
    for (int round = 0; round < 200; ++round) {
        std::size_t n = 1 + gen() % 30;
        auto a = random_vector(gen, n, -10, 10);
        auto b = random_vector(gen, n, -10, 10);
        CHECK(mae(a, b) == doctest::Approx(oracle_mae(a, b)).epsilon(1e-12));
        CHECK(mae(a, b) >= 0.0);
    }
    CHECK(mae(std::vector<double>{1.5}, std::vector<double>{1.5}) == 0.0);
}

TEST_CASE("cohens_d hand cases") {
    CHECK(cohens_d(std::vector<double>{1, 2, 3}, std::vector<double>{1, 2, 3}) == 0.0);
    // means 0.5 vs 1.5, sample variances 0.5, pooled SD sqrt(0.5)
    double d = cohens_d(std::vector<double>{0, 1}, std::vector<double>{1, 2});
    CHECK(d == doctest::Approx(-1.0 / std::sqrt(0.5)).epsilon(1e-12));
    CHECK(d == doctest::Approx(-1.4142135623730951).epsilon(1e-12));

    double swapped = cohens_d(std::vector<double>{1, 2}, std::vector<double>{0, 1});
    CHECK(swapped == doctest::Approx(-d).epsilon(1e-12));

    CHECK_THROWS_AS(cohens_d(std::vector<double>{1, 1}, std::vector<double>{1, 1}), Error);
    CHECK_THROWS_AS(cohens_d(std::vector<double>{1}, std::vector<double>{1, 2}), Error);
}

TEST_CASE("cohens_d matches the pooled formula on random data") {
    std::mt19937_64 gen(105);
    for (int round = 0; round < 100; ++round) {
        auto a = random_vector(gen, 2 + gen() % 20, -3, 3);
        auto b = random_vector(gen, 2 + gen() % 20, -3, 3);
        double mean_a = 0, mean_b = 0;
        for (double x : a) mean_a += x;
        for (double x : b) mean_b += x;
        mean_a /= static_cast<double>(a.size());
        mean_b /= static_cast<double>(b.size());
        double ssa = 0, ssb = 0;
        for (double x : a) ssa += (x - mean_a) * (x - mean_a);
        for (double x : b) ssb += (x - mean_b) * (x - mean_b);
        double pooled = std::sqrt((ssa + ssb) /
                                  static_cast<double>(a.size() + b.size() - 2));
        CHECK(cohens_d(a, b) ==
              doctest::Approx((mean_a - mean_b) / pooled).epsilon(1e-12));
    }
}

TEST_CASE("cliffs delta endpoints and symmetry") {
    CHECK(cliffs_delta(std::vector<double>{5, 6, 7}, std::vector<double>{1, 2}) == 1.0);
    CHECK(cliffs_delta(std::vector<double>{1, 2}, std::vector<double>{5, 6, 7}) == -1.0);
    CHECK(cliffs_delta(std::vector<double>{1, 2, 2}, std::vector<double>{2, 1, 2}) == 0.0);
}

TEST_CASE("cliffs delta matches the pairwise oracle") {
    std::mt19937_64 gen(106);
    for (int round = 0; round < 200; ++round) {
        auto a = random_vector(gen, 1 + gen() % 25, 0, 4);
        auto b = random_vector(gen, 1 + gen() % 25, 0, 4);
        // discretize to force ties
        for (auto& x : a) x = std::floor(x * 4) / 4;
        for (auto& x : b) x = std::floor(x * 4) / 4;
        double delta = cliffs_delta(a, b);
        CHECK(delta == doctest::Approx(oracle_cliffs(a, b)).epsilon(1e-9));
        CHECK(delta >= -1.0);
        CHECK(delta <= 1.0);
        CHECK(cliffs_delta(b, a) == doctest::Approx(-delta).epsilon(1e-12));
    }
}

TEST_CASE("wasserstein basics") {
    std::vector<double> a{1, 2, 3};
    CHECK(wasserstein1d(a, a) == 0.0);

    std::vector<double> shifted{1.25, 2.25, 3.25};
    CHECK(wasserstein1d(a, shifted) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(wasserstein1d(shifted, a) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("wasserstein matches the midpoint-integration oracle") {
    std::mt19937_64 gen(107);
    for (int round = 0; round < 200; ++round) {
        auto a = random_vector(gen, 1 + gen() % 30, -2, 2);
        auto b = random_vector(gen, 1 + gen() % 25, -2, 2);
        CHECK(wasserstein1d(a, b) ==
              doctest::Approx(oracle_wasserstein(a, b)).epsilon(1e-9));
    }
}

TEST_CASE("wasserstein behaves like a metric on random triples") {
    std::mt19937_64 gen(108);
    for (int round = 0; round < 50; ++round) {
        auto a = random_vector(gen, 2 + gen() % 12, 0, 3);
        auto b = random_vector(gen, 2 + gen() % 12, 0, 3);
        auto c = random_vector(gen, 2 + gen() % 12, 0, 3);
        double ab = wasserstein1d(a, b);
        double ba = wasserstein1d(b, a);
        double ac = wasserstein1d(a, c);
        double cb = wasserstein1d(c, b);
        CHECK(ab == doctest::Approx(ba).epsilon(1e-12));
        CHECK(ab >= 0.0);
        CHECK(ab <= ac + cb + 1e-12);
    }
}

TEST_CASE("type-7 quantiles") {
    std::vector<double> v{1, 2, 3, 4};
    CHECK(quantile_sorted(v, 0.25) == doctest::Approx(1.75).epsilon(1e-12));
    CHECK(quantile_sorted(v, 0.5) == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(quantile_sorted(v, 0.75) == doctest::Approx(3.25).epsilon(1e-12));
    CHECK(quantile_sorted(v, 0.0) == 1.0);
    CHECK(quantile_sorted(v, 1.0) == 4.0);
    CHECK(median(std::vector<double>{5, 1, 3}) == 3.0);
}

TEST_CASE("bootstrap on a degenerate distribution collapses to zero") {
    std::vector<double> a{2, 2, 2};
    auto ci = bootstrap_ci(a, a, BootstrapStat::mean_diff, 500, 0.95, 42);
    CHECK(ci.point == 0.0);
    CHECK(ci.lo == 0.0);
    CHECK(ci.hi == 0.0);
}

TEST_CASE("bootstrap is deterministic per seed") {
    std::mt19937_64 gen(113);
    auto a = random_vector(gen, 12, 0, 1);
    auto b = random_vector(gen, 12, 0.2, 1.2);
    auto first = bootstrap_ci(a, b, BootstrapStat::mean_diff, 5000, 0.95, 7);
    auto second = bootstrap_ci(a, b, BootstrapStat::mean_diff, 5000, 0.95, 7);
    CHECK(first.point == second.point);
    CHECK(first.lo == second.lo);
    CHECK(first.hi == second.hi);
    CHECK(first.lo <= first.hi);

    auto other = bootstrap_ci(a, b, BootstrapStat::mean_diff, 5000, 0.95, 8);
    bool any_difference = other.lo != first.lo || other.hi != first.hi;
    CHECK(any_difference);
}

TEST_CASE("bootstrap rejects tiny resample counts") {
    std::vector<double> a{1, 2};
    CHECK_THROWS_AS(bootstrap_ci(a, a, BootstrapStat::mean_diff, 99, 0.95, 1), Error);
    CHECK_THROWS_AS(bootstrap_ci(a, a, BootstrapStat::mean_diff, 5000, 1.5, 1), Error);
}

TEST_CASE("bootstrap bounds sit within one grid step of exhaustive enumeration") {
    // all index tuples for n^n resamples
    auto all_stats = [](const std::vector<double>& v, BootstrapStat stat) {
        std::size_t n = v.size();
        std::size_t total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= n;
        std::vector<double> out;
        out.reserve(total);
        std::vector<std::size_t> idx(n, 0);
        for (std::size_t combo = 0; combo < total; ++combo) {
            std::size_t code = combo;
            std::vector<double> sample(n);
            for (std::size_t i = 0; i < n; ++i) {
                sample[i] = v[code % n];
                code /= n;
            }
            if (stat == BootstrapStat::mean_diff) {
                double m = 0;
                for (double x : sample) m += x;
                out.push_back(m / static_cast<double>(n));
            } else {
                std::sort(sample.begin(), sample.end());
                out.push_back(quantile_sorted(sample, 0.5));
            }
        }
        return out;
    };

    std::vector<double> a{0.0, 3.0, 9.0};
    std::vector<double> b{1.0, 5.0};
    for (BootstrapStat stat : {BootstrapStat::mean_diff, BootstrapStat::median_diff}) {
        auto stats_a = all_stats(a, stat);
        auto stats_b = all_stats(b, stat);
        std::vector<double> deltas;
        deltas.reserve(stats_a.size() * stats_b.size());
        for (double sa : stats_a) {
            for (double sb : stats_b) deltas.push_back(sa - sb);
        }
        std::sort(deltas.begin(), deltas.end());
        std::vector<double> distinct = deltas;
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

        auto ci = bootstrap_ci(a, b, stat, 5000, 0.95, 2024);

        // allowed: one distinct-value grid step either side of the exact bound
        auto band = [&](double q) {
            double exact = quantile_sorted(deltas, q);
            auto it = std::lower_bound(distinct.begin(), distinct.end(), exact);
            std::size_t i = static_cast<std::size_t>(it - distinct.begin());
            if (i >= distinct.size()) i = distinct.size() - 1;
            double lo_band = distinct[i > 0 ? i - 1 : 0];
            double hi_band = distinct[std::min(distinct.size() - 1, i + 1)];
            return std::pair<double, double>(lo_band, hi_band);
        };
        auto [lo_min, lo_max] = band(0.025);
        CHECK(ci.lo >= lo_min - 1e-12);
        CHECK(ci.lo <= lo_max + 1e-12);
        auto [hi_min, hi_max] = band(0.975);
        CHECK(ci.hi >= hi_min - 1e-12);
        CHECK(ci.hi <= hi_max + 1e-12);
    }
}

TEST_CASE("ecdf steps") {
    std::vector<double> v{3, 1, 2, 2};
    auto steps = ecdf(v);
    REQUIRE(steps.size() == 3);
    CHECK(steps[0].x == 1.0);
    CHECK(steps[0].f == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(steps[1].x == 2.0);
    CHECK(steps[1].f == doctest::Approx(0.75).epsilon(1e-15));
    CHECK(steps[2].x == 3.0);
    CHECK(steps[2].f == 1.0);  // final plateau is exactly one

    CHECK(ecdf_at(std::vector<double>{1, 2, 3}, 2.0) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-15));

    std::mt19937_64 gen(109);
    auto sample = random_vector(gen, 40, -2, 2);
    auto curve = ecdf(sample);
    CHECK(curve.back().f == 1.0);
    for (std::size_t i = 1; i < curve.size(); ++i) {
        CHECK(curve[i].f > curve[i - 1].f);
        CHECK(curve[i].x > curve[i - 1].x);
    }
}

TEST_CASE("kde integrates to one and stays nonnegative") {
    std::mt19937_64 gen(110);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> sample(40);
    for (auto& x : sample) x = normal(gen);

    auto curve = kde(sample);
    CHECK(!curve.bandwidth_fallback);
    double integral = 0.0;
    for (std::size_t i = 0; i + 1 < curve.x.size(); ++i) {
        CHECK(curve.density[i] >= 0.0);
        integral +=
            (curve.density[i] + curve.density[i + 1]) / 2.0 * (curve.x[i + 1] - curve.x[i]);
    }
    CHECK(integral == doctest::Approx(1.0).epsilon(1e-3));

    // Scott's rule bandwidth
    double m = 0;
    for (double x : sample) m += x;
    m /= static_cast<double>(sample.size());
    double ss = 0;
    for (double x : sample) ss += (x - m) * (x - m);
    double sd = std::sqrt(ss / static_cast<double>(sample.size() - 1));
    CHECK(curve.bandwidth ==
          doctest::Approx(sd * std::pow(40.0, -0.2)).epsilon(1e-12));
}

TEST_CASE("kde falls back to unit bandwidth for degenerate samples") {
    auto curve = kde(std::vector<double>{2.5});
    CHECK(curve.bandwidth == 1.0);
    CHECK(curve.bandwidth_fallback);
    auto flat = kde(std::vector<double>{1, 1, 1});
    CHECK(flat.bandwidth_fallback);
}

TEST_CASE("histogram densities integrate to one") {
    std::mt19937_64 gen(111);
    auto sample = random_vector(gen, 100, -1, 1);
    auto bins = histogram(sample, 0);
    CHECK(bins.size() == 10);  // ceil(sqrt(100))
    double mass = 0.0;
    for (const auto& bin : bins) {
        mass += bin.density * (bin.right - bin.left);
        CHECK(bin.density >= 0.0);
    }
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-9));

    auto degenerate = histogram(std::vector<double>{2, 2, 2}, 0);
    REQUIRE(degenerate.size() == 1);
    CHECK(degenerate[0].density == 1.0);
}

TEST_CASE("compare_groups on equal groups zeroes the distances") {
    std::vector<double> values{1.0, 1.5, 2.0, 2.5, 3.0};
    auto cmp = compare_groups("a", values, "b", values, 77);
    CHECK(cmp.delta_mean.point == 0.0);
    CHECK(cmp.delta_median.point == 0.0);
    CHECK(cmp.cohens_d == 0.0);
    CHECK(cmp.cliffs_delta == 0.0);
    CHECK(cmp.wasserstein == 0.0);
    CHECK(cmp.group_a.n == 5);
    CHECK(cmp.group_a.median == 2.0);
}

TEST_CASE("compare_groups recovers a known shift") {
    std::mt19937_64 gen(112);
    std::normal_distribution<double> normal(0.0, 0.5);
    std::vector<double> a(300), b(300);
    const double shift = 0.8;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double base = normal(gen);
        a[i] = base + shift;
        b[i] = normal(gen);
    }
    auto cmp = compare_groups("shifted", a, "control", b, 2025);
    CHECK(cmp.delta_mean.point == doctest::Approx(shift).epsilon(0.15));
    CHECK(cmp.delta_mean.lo <= shift);
    CHECK(cmp.delta_mean.hi >= shift - 0.15);
    CHECK(cmp.cliffs_delta > 0.5);
    CHECK(cmp.wasserstein == doctest::Approx(shift).epsilon(0.2));
}

TEST_CASE("comparison report carries the pinned schema") {
    std::vector<double> a{1, 2, 3, 4};
    std::vector<double> b{2, 3, 4, 5};
    auto cmp = compare_groups("left", a, "right", b, 5);
    std::string report = comparison_json(cmp);
    CHECK(report == comparison_json(compare_groups("left", a, "right", b, 5)));
    for (const char* key :
         {"\"cliffs_delta\":", "\"cohens_d\":", "\"delta_mean\":{", "\"delta_median\":{",
          "\"groups\":{", "\"wasserstein\":", "\"iqr_hi\":", "\"iqr_lo\":", "\"median\":",
          "\"point\":", "\"lo\":", "\"hi\":", "\"left\":", "\"right\":"}) {
        CHECK(report.find(key) != std::string::npos);
    }
}

TEST_CASE("evaluation report and significance stars") {
    CHECK(significance_stars(0.06) == "");
    CHECK(significance_stars(0.049) == "*");
    CHECK(significance_stars(0.01) == "*");
    CHECK(significance_stars(0.0099) == "**");

    PairedSample sample({1, 2, 3, 4, 5}, {1, 2, 3, 5, 4});
    auto report = evaluate(sample);
    CHECK(report.r_s == doctest::Approx(0.9).epsilon(1e-12));
    CHECK(report.p_value == doctest::Approx(10.0 / 120.0).epsilon(1e-12));
    CHECK(report.mae == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(report.n == 5);
    CHECK(report.stars == "");
    CHECK(eval_report_json(report) ==
          R"({"mae":0.4,"n":5,"p_value":0.0833333,"r_s":0.9,"stars":""})");
}

TEST_CASE("plot csv exports are deterministic and well-formed") {
    std::vector<double> v{1.0, 2.0, 2.0, 4.0};
    std::string e = ecdf_csv(v);
    CHECK(e.substr(0, 4) == "x,f\n");
    CHECK(e == ecdf_csv(v));
    CHECK(e.find("4,1\n") != std::string::npos);

    std::string k = kde_csv(v);
    CHECK(k.substr(0, 10) == "x,density\n");
    CHECK(std::count(k.begin(), k.end(), '\n') == 257);  // header + 256 grid rows

    std::string h = histogram_csv(v, 2);
    CHECK(h.substr(0, 27) == "bin_left,bin_right,density\n");
    CHECK(std::count(h.begin(), h.end(), '\n') == 3);
}

}  // TEST_SUITE
