#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace berge {

// Exact arbitrary-precision counts; the bound functions overflow 64 bits for
// modest parameters.
using Count = boost::multiprecision::cpp_int;

Count binomial(int n, int k);

// f(n,k,r,a) = C(k-a, min{r, floor((k-a)/2)}) + (n-k+a) C(a, min{r-1, floor(a/2)})
// on the domain max{0, k-n} <= a <= k; out of domain is a hard error.
Count bound_f(int n, int k, int r, int a);

// f*(n,k,r,a) = C(k-a, r) + (n-k+a) C(a, r-1); agrees with f whenever
// r <= floor((k-a)/2) and r-1 <= floor(a/2).
Count bound_fstar(int n, int k, int r, int a);

// h_Sp(n,l,r,d) = f(n, n+l, r, d), domain 0 <= l < d <= floor((n+l-1)/2).
Count bound_hsp(int n, int l, int r, int d);

// max{f(n,k,r,floor((k-1)/2)), f(n,k,r,2)} resp. ...f(n,k,r,1); n >= k >= r >= 3.
Count main_cycle_bound(int n, int k, int r);
Count main_path_bound(int n, int k, int r);

// Smallest n with f(n,k,r,floor((k-1)/2)) >= f(n,k,r,2) (resp. >= f(n,k,r,1)).
// nullopt when the sides never cross (equal slopes, persistent gap).
std::optional<long long> n_threshold(int k, int r);
std::optional<long long> n_threshold_path(int k, int r);

struct ConvexityReport {
    bool convex = true;
    std::vector<int> violations;  // interior a where f(a-1)+f(a+1) < 2 f(a)
};

// Discrete convexity of a -> f(n,k,r,a) over the admissible interval.
ConvexityReport convexity_check(int n, int k, int r);

// Convexity of i -> C(i, floor(i/2)) and i -> C(i, r) up to the given index.
bool central_binomial_convex(int up_to);
bool fixed_binomial_convex(int r, int up_to);

}  // namespace berge
