#ifndef FUSIONLENS_CORE_STATS_HPP
#define FUSIONLENS_CORE_STATS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fusionlens {

// Predictions paired with ground truth. Requires equal lengths >= 3 and no
// non-finite values.
struct PairedSample {
    std::vector<double> predictions;
    std::vector<double> truths;

    PairedSample(std::vector<double> predictions, std::vector<double> truths);
    std::size_t size() const { return predictions.size(); }
};

struct SpearmanResult {
    double r_s = 0.0;
    double p_value = 1.0;
};

// Average ranks (ties get the mean of their rank range).
std::vector<double> average_ranks(std::span<const double> values);

// Spearman rank correlation with a two-sided p-value: exact permutation
// enumeration for n <= 9, t-approximation with df = n-2 above. Errors when
// either vector has zero rank variance.
SpearmanResult spearman(const PairedSample& sample);

// Mean absolute error.
double mae(std::span<const double> predictions, std::span<const double> truths);

// (mean_a - mean_b) / pooled SD, sample SDs pooled with (n-1) weights.
// Errors when the pooled SD is zero.
double cohens_d(std::span<const double> a, std::span<const double> b);

// delta = (#(a>b) - #(a<b)) / (n_a*n_b), computed from the Mann-Whitney U
// statistic (ties count half).
double cliffs_delta(std::span<const double> a, std::span<const double> b);

// 1-D Wasserstein distance: the area between the two ECDFs, exact for
// possibly unequal sample sizes.
double wasserstein1d(std::span<const double> a, std::span<const double> b);

enum class BootstrapStat { mean_diff, median_diff };

struct BootstrapCi {
    double point = 0.0;
    double lo = 0.0;
    double hi = 0.0;
};

// Percentile confidence interval for stat(a*) - stat(b*) over seeded
// resamples with replacement. The resampling stream is pinned for
// reproducibility: a single std::mt19937_64 seeded with `seed`; each
// resample draws n_a indices for a then n_b for b, each index generator()
// mod n. Interval bounds are type-7 (linear interpolation) quantiles of the
// resampled deltas. Note that a percentile interval of differences is not
// guaranteed to straddle the point estimate. resamples < 100 is a
// configuration error.
BootstrapCi bootstrap_ci(std::span<const double> a, std::span<const double> b,
                         BootstrapStat stat, int resamples, double level,
                         std::uint64_t seed);

// Type-7 (linear interpolation) quantile of already-sorted values.
double quantile_sorted(std::span<const double> sorted, double q);
double median(std::span<const double> values);

struct EcdfPoint {
    double x = 0.0;
    double f = 0.0;
};

// Right-continuous step samples at the sorted unique values, ending at 1.
std::vector<EcdfPoint> ecdf(std::span<const double> values);
// ECDF evaluated at x: fraction of values <= x.
double ecdf_at(std::span<const double> values, double x);

struct KdeCurve {
    std::vector<double> x;        // 256-point grid over [min-3h, max+3h]
    std::vector<double> density;
    double bandwidth = 0.0;
    bool bandwidth_fallback = false;  // zero-SD input fell back to h = 1
};

// Gaussian KDE. Bandwidth defaults to Scott's rule, sample SD * n^(-1/5);
// pass bandwidth <= 0 to use it. A sample with zero SD falls back to
// bandwidth 1.0 and sets bandwidth_fallback.
KdeCurve kde(std::span<const double> values, double bandwidth = 0.0);

struct HistogramBin {
    double left = 0.0;
    double right = 0.0;
    double density = 0.0;  // count / (n * width)
};

// Density-normalized histogram; bins <= 0 selects ceil(sqrt(n)).
std::vector<HistogramBin> histogram(std::span<const double> values, int bins = 0);

struct CiField {
    double point = 0.0;
    double lo = 0.0;
    double hi = 0.0;
};

struct GroupSummary {
    std::string name;
    std::size_t n = 0;
    double median = 0.0;
    double iqr_lo = 0.0;  // 25th percentile, type-7
    double iqr_hi = 0.0;  // 75th percentile, type-7
};

struct GroupComparison {
    CiField delta_mean;    // first group minus second
    CiField delta_median;
    double cohens_d = 0.0;
    double cliffs_delta = 0.0;
    double wasserstein = 0.0;
    GroupSummary group_a;
    GroupSummary group_b;
};

// Bundles every comparison statistic. Bootstrap CIs use 5000 resamples at
// the 95% level; the mean-difference stream uses `seed`, the
// median-difference stream seed+1. Both groups need >= 2 values.
GroupComparison compare_groups(const std::string& name_a, std::span<const double> a,
                               const std::string& name_b, std::span<const double> b,
                               std::uint64_t seed);

struct EvalReport {
    double r_s = 0.0;
    double p_value = 1.0;
    double mae = 0.0;
    std::size_t n = 0;
    std::string stars;  // "**" p<0.01, "*" p<0.05, "" otherwise
};

EvalReport evaluate(const PairedSample& sample);
std::string significance_stars(double p_value);

// Canonical JSON renderings of the report bundles.
std::string eval_report_json(const EvalReport& report);
std::string comparison_json(const GroupComparison& cmp);

// Plot-data exports (CSV with header row). kde_csv reports a zero-spread
// bandwidth fallback through the optional flag.
std::string ecdf_csv(std::span<const double> values);
std::string kde_csv(std::span<const double> values, double bandwidth = 0.0,
                    bool* bandwidth_fallback = nullptr);
std::string histogram_csv(std::span<const double> values, int bins = 0);

}  // namespace fusionlens

#endif
