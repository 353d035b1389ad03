#include "berge/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace berge {

Count binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Count num = 1;
    for (int i = 1; i <= k; ++i) {
        num *= n - k + i;
        num /= i;  // exact: i consecutive integers contain a multiple of i
    }
    return num;
}

namespace {

void check_f_domain(int n, int k, int r, int a) {
    if (k < 0 || r < 1) throw std::invalid_argument("bound_f needs k >= 0, r >= 1");
    if (a < std::max(0, k - n) || a > k)
        throw std::invalid_argument("bound_f: a outside [max{0,k-n}, k]");
}

}  // namespace

Count bound_f(int n, int k, int r, int a) {
    check_f_domain(n, k, r, a);
    Count head = binomial(k - a, std::min(r, (k - a) / 2));
    Count tail = Count(n - k + a) * binomial(a, std::min(r - 1, a / 2));
    return head + tail;
}

Count bound_fstar(int n, int k, int r, int a) {
    check_f_domain(n, k, r, a);
    return binomial(k - a, r) + Count(n - k + a) * binomial(a, r - 1);
}

Count bound_hsp(int n, int l, int r, int d) {
    if (!(0 <= l && l < d && d <= (n + l - 1) / 2))
        throw std::invalid_argument("bound_hsp: need 0 <= l < d <= floor((n+l-1)/2)");
    return bound_f(n, n + l, r, d);
}

namespace {

void check_main_domain(int n, int k, int r) {
    if (!(n >= k && k >= r && r >= 3))
        throw std::invalid_argument("main bounds need n >= k >= r >= 3");
}

}  // namespace

Count main_cycle_bound(int n, int k, int r) {
    check_main_domain(n, k, r);
    return std::max(bound_f(n, k, r, (k - 1) / 2), bound_f(n, k, r, 2));
}

Count main_path_bound(int n, int k, int r) {
    check_main_domain(n, k, r);
    return std::max(bound_f(n, k, r, (k - 1) / 2), bound_f(n, k, r, 1));
}

namespace {

// Both sides are affine in n: f(n,k,r,a) has slope C(a, min{r-1, floor(a/2)}).
std::optional<long long> crossover(int k, int r, int low_a) {
    if (!(k >= r && r >= 3)) throw std::invalid_argument("thresholds need k >= r >= 3");
    int t = (k - 1) / 2;
    Count slope_t = binomial(t, std::min(r - 1, t / 2));
    Count slope_low = binomial(low_a, std::min(r - 1, low_a / 2));
    for (long long n = k;; ++n) {
        Count ft = bound_f(static_cast<int>(n), k, r, t);
        Count fl = bound_f(static_cast<int>(n), k, r, low_a);
        if (ft >= fl) return n;
        if (slope_t <= slope_low) return std::nullopt;  // gap never closes
        // n fits int for any real crossover: the gap shrinks by >= 1 per step
        if (n > (1 << 30)) throw std::runtime_error("threshold scan runaway");
    }
}

}  // namespace

std::optional<long long> n_threshold(int k, int r) { return crossover(k, r, 2); }

std::optional<long long> n_threshold_path(int k, int r) { return crossover(k, r, 1); }

ConvexityReport convexity_check(int n, int k, int r) {
    if (n < 1 || k < 1 || r < 1) throw std::invalid_argument("convexity_check needs positives");
    ConvexityReport rep;
    int lo = std::max(0, k - n);
    for (int a = lo + 1; a <= k - 1; ++a) {
        Count mid = bound_f(n, k, r, a);
        if (bound_f(n, k, r, a - 1) + bound_f(n, k, r, a + 1) < 2 * mid) {
            rep.convex = false;
            rep.violations.push_back(a);
        }
    }
    return rep;
}

bool central_binomial_convex(int up_to) {
    for (int i = 1; i + 1 <= up_to; ++i)
        if (binomial(i - 1, (i - 1) / 2) + binomial(i + 1, (i + 1) / 2) <
            2 * binomial(i, i / 2))
            return false;
    return true;
}

bool fixed_binomial_convex(int r, int up_to) {
    for (int i = 1; i + 1 <= up_to; ++i)
        if (binomial(i - 1, r) + binomial(i + 1, r) < 2 * binomial(i, r)) return false;
    return true;
}

}  // namespace berge
