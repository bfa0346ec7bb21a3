#pragma once

// Series kernels. Each data-parallel kernel has an OpenMP implementation
// used by the library and a plain serial reference that shares no code with
// it beyond RatFunc arithmetic; tests require them to agree bit for bit.

#include "dmf/useries.hpp"

#include <climits>

namespace dmf::kernels {

// Number of OpenMP threads used by the parallel kernels (<= 0 restores the
// runtime default).
void set_threads(int n);
int threads();

USeries mul_reference(const USeries& f, const USeries& g, int prec_cap = INT_MAX);
USeries mul_parallel(const USeries& f, const USeries& g, int prec_cap = INT_MAX);

USeries substitute_reference(const USeries& f, int prec_cap = INT_MAX);
USeries substitute_parallel(const USeries& f, int prec_cap = INT_MAX);

// Power-series inverse by the triangular recurrence (sequential by nature).
USeries inverse_recurrence(const USeries& f);

// C(n, k) mod p for n, k >= 0 (Lucas).
int binomial_mod(long long n, long long k, int p);
// Coefficient of x^j in (1 + x)^(-e), reduced mod p, for any integer e.
int neg_binomial_mod(long long e, long long j, int p);

}  // namespace dmf::kernels
