#include "core/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "core/error.hpp"
#include "core/jsonio.hpp"

namespace fusionlens {

namespace {

void require_finite(std::span<const double> values, const char* what) {
    for (double v : values) {
        if (!std::isfinite(v)) {
            raise(ErrorCode::invalid_argument, std::string(what) + " contains non-finite values");
        }
    }
}

double mean(std::span<const double> values) {
    return std::accumulate(values.begin(), values.end(), 0.0) /
           static_cast<double>(values.size());
}

double sample_variance(std::span<const double> values) {
    double m = mean(values);
    double ss = 0.0;
    for (double v : values) {
        ss += (v - m) * (v - m);
    }
    return ss / static_cast<double>(values.size() - 1);
}

double pearson(std::span<const double> a, std::span<const double> b) {
    double ma = mean(a);
    double mb = mean(b);
    double cov = 0.0, va = 0.0, vb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double da = a[i] - ma;
        double db = b[i] - mb;
        cov += da * db;
        va += da * da;
        vb += db * db;
    }
    if (va == 0.0 || vb == 0.0) {
        raise(ErrorCode::undefined_stat, "correlation undefined: zero rank variance");
    }
    return cov / std::sqrt(va * vb);
}

// Continued fraction for the regularized incomplete beta (Lentz's method).
double beta_continued_fraction(double a, double b, double x) {
    constexpr int max_iterations = 300;
    constexpr double eps = 3e-14;
    constexpr double tiny = 1e-300;
    double qab = a + b;
    double qap = a + 1.0;
    double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= max_iterations; ++m) {
        int m2 = 2 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < eps) break;
    }
    return h;
}

double regularized_incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                       a * std::log(x) + b * std::log1p(-x);
    double front = std::exp(log_front);
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * beta_continued_fraction(a, b, x) / a;
    }
    return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

// Two-sided p for a t statistic with df degrees of freedom.
double t_two_sided_p(double t, double df) {
    if (!std::isfinite(t)) return 0.0;
    return regularized_incomplete_beta(df / 2.0, 0.5, df / (df + t * t));
}

double exact_permutation_p(const std::vector<double>& x_ranks,
                           const std::vector<double>& y_ranks, double observed) {
    std::vector<double> perm = y_ranks;
    std::sort(perm.begin(), perm.end());
    const double threshold = std::fabs(observed) - 1e-12;
    long long total = 0;
    long long at_least = 0;
    do {
        double r = pearson(x_ranks, perm);
        ++total;
        if (std::fabs(r) >= threshold) ++at_least;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return static_cast<double>(at_least) / static_cast<double>(total);
}

std::vector<double> sorted_copy(std::span<const double> values) {
    std::vector<double> out(values.begin(), values.end());
    std::sort(out.begin(), out.end());
    return out;
}

double resample_stat(const std::vector<double>& source, std::vector<double>& scratch,
                     std::mt19937_64& gen, BootstrapStat stat) {
    scratch.clear();
    const std::size_t n = source.size();
    for (std::size_t i = 0; i < n; ++i) {
        scratch.push_back(source[gen() % n]);
    }
    if (stat == BootstrapStat::mean_diff) {
        return mean(scratch);
    }
    std::sort(scratch.begin(), scratch.end());
    return quantile_sorted(scratch, 0.5);
}

}  // namespace

PairedSample::PairedSample(std::vector<double> preds, std::vector<double> truth_values)
    : predictions(std::move(preds)), truths(std::move(truth_values)) {
    if (predictions.size() != truths.size()) {
        raise(ErrorCode::invalid_argument, "paired sample lengths differ");
    }
    if (predictions.size() < 3) {
        raise(ErrorCode::data, "paired sample needs at least 3 observations");
    }
    require_finite(predictions, "predictions");
    require_finite(truths, "truths");
}

std::vector<double> average_ranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) {
            ranks[order[k]] = avg;
        }
        i = j + 1;
    }
    return ranks;
}

SpearmanResult spearman(const PairedSample& sample) {
    std::vector<double> rx = average_ranks(sample.predictions);
    std::vector<double> ry = average_ranks(sample.truths);
    SpearmanResult result;
    result.r_s = pearson(rx, ry);

    const std::size_t n = sample.size();
    if (n <= 9) {
        result.p_value = exact_permutation_p(rx, ry, result.r_s);
    } else {
        double df = static_cast<double>(n - 2);
        double r2 = result.r_s * result.r_s;
        if (r2 >= 1.0) {
            result.p_value = 0.0;
        } else {
            double t = result.r_s * std::sqrt(df / (1.0 - r2));
            result.p_value = t_two_sided_p(t, df);
        }
    }
    return result;
}

double mae(std::span<const double> predictions, std::span<const double> truths) {
    if (predictions.size() != truths.size() || predictions.empty()) {
        raise(ErrorCode::invalid_argument, "mae needs equal, non-empty vectors");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < predictions.size(); ++i) {
        total += std::fabs(predictions[i] - truths[i]);
    }
    return total / static_cast<double>(predictions.size());
}

double cohens_d(std::span<const double> a, std::span<const double> b) {
    if (a.size() < 2 || b.size() < 2) {
        raise(ErrorCode::data, "cohens_d needs at least 2 values per group");
    }
    require_finite(a, "group a");
    require_finite(b, "group b");
    double na = static_cast<double>(a.size());
    double nb = static_cast<double>(b.size());
    double pooled_var =
        ((na - 1.0) * sample_variance(a) + (nb - 1.0) * sample_variance(b)) / (na + nb - 2.0);
    if (pooled_var <= 0.0) {
        raise(ErrorCode::undefined_stat, "cohens_d undefined: zero pooled SD");
    }
    return (mean(a) - mean(b)) / std::sqrt(pooled_var);
}

double cliffs_delta(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) {
        raise(ErrorCode::invalid_argument, "cliffs_delta needs non-empty groups");
    }
    std::vector<double> sb = sorted_copy(b);
    double u = 0.0;  // Mann-Whitney U for a over b, ties counted half
    for (double x : a) {
        auto lower = std::lower_bound(sb.begin(), sb.end(), x);
        auto upper = std::upper_bound(sb.begin(), sb.end(), x);
        u += static_cast<double>(lower - sb.begin());
        u += 0.5 * static_cast<double>(upper - lower);
    }
    double pairs = static_cast<double>(a.size()) * static_cast<double>(b.size());
    return 2.0 * u / pairs - 1.0;
}

double wasserstein1d(std::span<const double> a, std::span<const double> b) {
    if (a.empty() || b.empty()) {
        raise(ErrorCode::invalid_argument, "wasserstein1d needs non-empty samples");
    }
    std::vector<double> sa = sorted_copy(a);
    std::vector<double> sb = sorted_copy(b);
    std::vector<double> merged;
    merged.reserve(sa.size() + sb.size());
    std::merge(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(merged));

    double distance = 0.0;
    std::size_t ia = 0;
    std::size_t ib = 0;
    for (std::size_t k = 0; k + 1 < merged.size(); ++k) {
        double x = merged[k];
        while (ia < sa.size() && sa[ia] <= x) ++ia;
        while (ib < sb.size() && sb[ib] <= x) ++ib;
        double fa = static_cast<double>(ia) / static_cast<double>(sa.size());
        double fb = static_cast<double>(ib) / static_cast<double>(sb.size());
        distance += std::fabs(fa - fb) * (merged[k + 1] - merged[k]);
    }
    return distance;
}

double quantile_sorted(std::span<const double> sorted, double q) {
    if (sorted.empty()) {
        raise(ErrorCode::invalid_argument, "quantile of empty sample");
    }
    if (q <= 0.0) return sorted.front();
    if (q >= 1.0) return sorted.back();
    double h = q * static_cast<double>(sorted.size() - 1);
    auto lo = static_cast<std::size_t>(h);
    double frac = h - static_cast<double>(lo);
    if (lo + 1 >= sorted.size()) return sorted.back();
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

double median(std::span<const double> values) {
    std::vector<double> sorted = sorted_copy(values);
    return quantile_sorted(sorted, 0.5);
}

BootstrapCi bootstrap_ci(std::span<const double> a, std::span<const double> b,
                         BootstrapStat stat, int resamples, double level,
                         std::uint64_t seed) {
    if (a.empty() || b.empty()) {
        raise(ErrorCode::invalid_argument, "bootstrap needs non-empty samples");
    }
    if (resamples < 100) {
        raise(ErrorCode::invalid_argument, "bootstrap needs at least 100 resamples");
    }
    if (!(level > 0.0 && level < 1.0)) {
        raise(ErrorCode::invalid_argument, "confidence level must be in (0,1)");
    }
    require_finite(a, "group a");
    require_finite(b, "group b");

    std::vector<double> va(a.begin(), a.end());
    std::vector<double> vb(b.begin(), b.end());

    BootstrapCi ci;
    if (stat == BootstrapStat::mean_diff) {
        ci.point = mean(va) - mean(vb);
    } else {
        ci.point = median(va) - median(vb);
    }

    std::mt19937_64 gen(seed);
    std::vector<double> deltas;
    deltas.reserve(static_cast<std::size_t>(resamples));
    std::vector<double> scratch_a;
    std::vector<double> scratch_b;
    scratch_a.reserve(va.size());
    scratch_b.reserve(vb.size());
    for (int r = 0; r < resamples; ++r) {
        double stat_a = resample_stat(va, scratch_a, gen, stat);
        double stat_b = resample_stat(vb, scratch_b, gen, stat);
        deltas.push_back(stat_a - stat_b);
    }
    std::sort(deltas.begin(), deltas.end());
    double tail = (1.0 - level) / 2.0;
    ci.lo = quantile_sorted(deltas, tail);
    ci.hi = quantile_sorted(deltas, 1.0 - tail);
    return ci;
}

std::vector<EcdfPoint> ecdf(std::span<const double> values) {
    if (values.empty()) {
        raise(ErrorCode::invalid_argument, "ecdf of empty sample");
    }
    std::vector<double> sorted = sorted_copy(values);
    std::vector<EcdfPoint> steps;
    const double n = static_cast<double>(sorted.size());
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
        steps.push_back({sorted[i], static_cast<double>(j + 1) / n});
        i = j + 1;
    }
    return steps;
}

double ecdf_at(std::span<const double> values, double x) {
    if (values.empty()) {
        raise(ErrorCode::invalid_argument, "ecdf of empty sample");
    }
    std::vector<double> sorted = sorted_copy(values);
    auto upper = std::upper_bound(sorted.begin(), sorted.end(), x);
    return static_cast<double>(upper - sorted.begin()) / static_cast<double>(sorted.size());
}

KdeCurve kde(std::span<const double> values, double bandwidth) {
    if (values.empty()) {
        raise(ErrorCode::invalid_argument, "kde of empty sample");
    }
    require_finite(values, "kde input");

    KdeCurve curve;
    const std::size_t n = values.size();
    if (bandwidth > 0.0) {
        curve.bandwidth = bandwidth;
    } else {
        double sd = n >= 2 ? std::sqrt(sample_variance(values)) : 0.0;
        if (sd > 0.0) {
            curve.bandwidth = sd * std::pow(static_cast<double>(n), -0.2);  // Scott's rule
        } else {
            curve.bandwidth = 1.0;
            curve.bandwidth_fallback = true;
        }
    }

    auto [min_it, max_it] = std::minmax_element(values.begin(), values.end());
    const double h = curve.bandwidth;
    const double lo = *min_it - 3.0 * h;
    const double hi = *max_it + 3.0 * h;
    constexpr std::size_t grid_points = 256;
    constexpr double two_pi = 6.283185307179586476925286766559;
    const double step = (hi - lo) / static_cast<double>(grid_points - 1);
    const double norm = 1.0 / (static_cast<double>(n) * h * std::sqrt(two_pi));

    curve.x.resize(grid_points);
    curve.density.resize(grid_points);
    for (std::size_t g = 0; g < grid_points; ++g) {
        double x = lo + static_cast<double>(g) * step;
        double density = 0.0;
        for (double v : values) {
            double z = (x - v) / h;
            density += std::exp(-0.5 * z * z);
        }
        curve.x[g] = x;
        curve.density[g] = density * norm;
    }
    return curve;
}

std::vector<HistogramBin> histogram(std::span<const double> values, int bins) {
    if (values.empty()) {
        raise(ErrorCode::invalid_argument, "histogram of empty sample");
    }
    require_finite(values, "histogram input");
    const std::size_t n = values.size();
    std::size_t bin_count = bins > 0
        ? static_cast<std::size_t>(bins)
        : static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));

    auto [min_it, max_it] = std::minmax_element(values.begin(), values.end());
    double lo = *min_it;
    double hi = *max_it;
    if (lo == hi) {  // degenerate sample: one unit-width bin
        return {{lo - 0.5, lo + 0.5, 1.0}};
    }
    double width = (hi - lo) / static_cast<double>(bin_count);
    std::vector<std::size_t> counts(bin_count, 0);
    for (double v : values) {
        auto idx = static_cast<std::size_t>((v - lo) / width);
        if (idx >= bin_count) idx = bin_count - 1;  // right edge inclusive
        ++counts[idx];
    }
    std::vector<HistogramBin> out(bin_count);
    for (std::size_t i = 0; i < bin_count; ++i) {
        out[i].left = lo + width * static_cast<double>(i);
        out[i].right = i + 1 == bin_count ? hi : lo + width * static_cast<double>(i + 1);
        out[i].density =
            static_cast<double>(counts[i]) / (static_cast<double>(n) * width);
    }
    return out;
}

GroupComparison compare_groups(const std::string& name_a, std::span<const double> a,
                               const std::string& name_b, std::span<const double> b,
                               std::uint64_t seed) {
    if (a.size() < 2 || b.size() < 2) {
        raise(ErrorCode::data, "group comparison needs at least 2 values per group");
    }
    require_finite(a, "group a");
    require_finite(b, "group b");

    GroupComparison cmp;
    BootstrapCi mean_ci = bootstrap_ci(a, b, BootstrapStat::mean_diff, 5000, 0.95, seed);
    BootstrapCi median_ci = bootstrap_ci(a, b, BootstrapStat::median_diff, 5000, 0.95, seed + 1);
    cmp.delta_mean = {mean_ci.point, mean_ci.lo, mean_ci.hi};
    cmp.delta_median = {median_ci.point, median_ci.lo, median_ci.hi};
    cmp.cohens_d = cohens_d(a, b);
    cmp.cliffs_delta = cliffs_delta(a, b);
    cmp.wasserstein = wasserstein1d(a, b);

    auto summarize = [](const std::string& name, std::span<const double> values) {
        std::vector<double> sorted(values.begin(), values.end());
        std::sort(sorted.begin(), sorted.end());
        GroupSummary s;
        s.name = name;
        s.n = values.size();
        s.median = quantile_sorted(sorted, 0.5);
        s.iqr_lo = quantile_sorted(sorted, 0.25);
        s.iqr_hi = quantile_sorted(sorted, 0.75);
        return s;
    };
    cmp.group_a = summarize(name_a, a);
    cmp.group_b = summarize(name_b, b);
    return cmp;
}

std::string significance_stars(double p_value) {
    if (p_value < 0.01) return "**";
    if (p_value < 0.05) return "*";
    return "";
}

EvalReport evaluate(const PairedSample& sample) {
    EvalReport report;
    SpearmanResult corr = spearman(sample);
    report.r_s = corr.r_s;
    report.p_value = corr.p_value;
    report.mae = mae(sample.predictions, sample.truths);
    report.n = sample.size();
    report.stars = significance_stars(corr.p_value);
    return report;
}

std::string eval_report_json(const EvalReport& report) {
    json j;
    j["r_s"] = report.r_s;
    j["p_value"] = report.p_value;
    j["mae"] = report.mae;
    j["n"] = report.n;
    j["stars"] = report.stars;
    return dump_canonical(j);
}

std::string comparison_json(const GroupComparison& cmp) {
    json j;
    j["delta_mean"] = {{"point", cmp.delta_mean.point},
                       {"lo", cmp.delta_mean.lo},
                       {"hi", cmp.delta_mean.hi}};
    j["delta_median"] = {{"point", cmp.delta_median.point},
                         {"lo", cmp.delta_median.lo},
                         {"hi", cmp.delta_median.hi}};
    j["cohens_d"] = cmp.cohens_d;
    j["cliffs_delta"] = cmp.cliffs_delta;
    j["wasserstein"] = cmp.wasserstein;
    json groups = json::object();
    for (const GroupSummary* g : {&cmp.group_a, &cmp.group_b}) {
        groups[g->name] = {{"median", g->median},
                           {"iqr_lo", g->iqr_lo},
                           {"iqr_hi", g->iqr_hi},
                           {"n", g->n}};
    }
    j["groups"] = groups;
    return dump_canonical(j);
}

std::string ecdf_csv(std::span<const double> values) {
    std::string out = "x,f\n";
    for (const auto& point : ecdf(values)) {
        out += format_double(point.x);
        out += ',';
        out += format_double(point.f);
        out += '\n';
    }
    return out;
}

std::string kde_csv(std::span<const double> values, double bandwidth,
                    bool* bandwidth_fallback) {
    KdeCurve curve = kde(values, bandwidth);
    if (bandwidth_fallback) *bandwidth_fallback = curve.bandwidth_fallback;
    std::string out = "x,density\n";
    for (std::size_t i = 0; i < curve.x.size(); ++i) {
        out += format_double(curve.x[i]);
        out += ',';
        out += format_double(curve.density[i]);
        out += '\n';
    }
    return out;
}

std::string histogram_csv(std::span<const double> values, int bins) {
    std::string out = "bin_left,bin_right,density\n";
    for (const auto& bin : histogram(values, bins)) {
        out += format_double(bin.left);
        out += ',';
        out += format_double(bin.right);
        out += ',';
        out += format_double(bin.density);
        out += '\n';
    }
    return out;
}

}  // namespace fusionlens
