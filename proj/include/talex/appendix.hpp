#pragma once

#include "talex/bigint.hpp"
#include "talex/matrix.hpp"

namespace talex {

// Binomial tables behind the conjugating matrix U_n (1-based indices).
Int a_jk(long j, long k);
Int b_jk(long j, long k);

/// U_n = [[A, A*], [B, B*]] with A_ij = a_{i,n-j+1}, A*_ij = -a_{i,j-1},
/// B_ij = b_{i,n-j+1}, B*_ij = b_{i,j}.
Matrix<Int> u_matrix(long n);

/// Alternating Catalan numbers (-1)^k C(2k+2, k+1) / (k+2): 1, -2, 5, -14, 42, ...
Int catalan_b(long k);

/// Coefficients of f_n(x) = x^n theta_n(1/x); zero outside 0..n.
Int a_nk(long n, long k);

/// d_{k,l} = sum_{i=0}^{k} a_i^{(n)} b_{k+l-i}.
Int d_kl(long n, long k, long l);

/// v_{j,k} = d_{n-j,k-1}: integer square root of 4E + C_n.
Matrix<Int> v_matrix(long n);

/// F(n, m) = sum_{j=0}^{n} a_{n-j}^{(n)} b_{m+j}.
Int f_value(long n, long m);

/// H_k^{(n)} = sum_{j<=k} a_j^{(n)} F(n-1, n+k-2-j) - sum_{j<=k-2} a_j^{(n-1)} F(n, n+k-3-j).
Int h_value(long n, long k);

/// Left side of the alternating binomial identity with parameters N, K, M.
Int alternating_binomial_sum(long big_n, long big_k, long big_m);

}  // namespace talex
