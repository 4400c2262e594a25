#pragma once

#include "ferenczi/directive.hpp"

namespace ferenczi {

/// Q_{m,n} = prod_{j=m}^{n-1} (q_j + 1), for 0 <= m < n.
BigInt q_product(const ParameterSchedule& s, long long m, long long n);

/// Height vector h_n indexed by A_n: h_n(a) = |tau_{[0,n)}(a)|, which for
/// n >= 1 equals a + |w_{n-1}|. h_0 is the all-ones vector over {0,1}.
RationalVector heights(const ParameterSchedule& s, long long n);

/// f_{m,n} = sum_{k=m}^{n-1} Q_{k,n-1} f_k, defined on the stable alphabet
/// (requires m >= n_0). Satisfies |f_{m,n}| + 1 = Q_{m-1,n-1}.
RationalVector f_range(const ParameterSchedule& s, long long m, long long n);

/// Closed form M_{tau_m} ... M_{tau_{n-1}} = I + f_{m,n} u on the stable
/// alphabet (m >= n_0).
RationalMatrix product_closed_form(const ParameterSchedule& s, long long m, long long n);

/// Closed form (M_{tau_m} ... M_{tau_{n-1}})^{-1} = I - f_{m,n}/Q_{m-1,n-1} u.
RationalMatrix inverse_closed_form(const ParameterSchedule& s, long long m, long long n);

/// Direct product of composition matrices, valid for any 0 <= m <= n
/// (also below the stabilization level, where the closed form is undefined).
RationalMatrix product_direct(const ParameterSchedule& s, long long m, long long n);

}  // namespace ferenczi
